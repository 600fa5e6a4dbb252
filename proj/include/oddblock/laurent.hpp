#ifndef ODDBLOCK_LAURENT_HPP
#define ODDBLOCK_LAURENT_HPP

#include <map>
#include <string>
#include <vector>

#include "oddblock/ints.hpp"

namespace oddblock {

// Integer-coefficient Laurent polynomial in (u, t_1, ..., t_b).
// Variable 0 is always u; nvars() == 1 + b.  Exponents may be negative.
// Invariant: no stored coefficient is zero; every key has length nvars().
class LaurentPoly {
public:
    using Exp = std::vector<int>;
    using TermMap = std::map<Exp, Int>;

    explicit LaurentPoly(int nvars = 1) : nvars_(nvars) {}

    static LaurentPoly zero(int nvars) { return LaurentPoly(nvars); }
    static LaurentPoly constant(int nvars, Int c);
    static LaurentPoly monomial(int nvars, const Exp& e, Int c);
    // var(nv, 0) = u, var(nv, j) = t_j for j >= 1
    static LaurentPoly variable(int nvars, int index, int power = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Exp& e, const Int& c);  // accumulate, dropping zeros

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    bool operator==(const LaurentPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly scaled(const Int& c) const;
    LaurentPoly shifted(const Exp& e) const;  // multiply by the monomial with exponent e

    int min_exp(int var) const;  // over stored terms; 0 for the zero polynomial
    int max_exp(int var) const;
    bool depends_on(int var) const;

    // Unit normalization: minimum exponent 0 in every variable, then positive
    // leading coefficient under graded-lex order with u highest.
    LaurentPoly canonical() const;

    // The graded-lex-leading (exponent, coefficient); poly must be nonzero.
    std::pair<Exp, Int> leading_term() const;

    // Substitute t_j = 1 for every j >= 1 (keeps nvars, zeroes t exponents).
    LaurentPoly collapse_t() const;
    // Substitute t_j -> t_j^{-1} for all j >= 1.
    LaurentPoly invert_t() const;
    // Reinterpret with a different variable count (pads/truncates zero exponents).
    LaurentPoly with_nvars(int nvars) const;

    // Content (gcd of coefficients, nonnegative).
    Int content() const;

    // Coefficient map of u^k (a polynomial in the t variables, u-exponent zeroed).
    std::map<int, LaurentPoly> by_u_power() const;

    std::string to_string() const;  // rendering grammar; u printed as "x"

private:
    int nvars_;
    TermMap terms_;
};

// a op b; for exact_div the remainder must vanish (Laurent units are allowed
// in the divisor), otherwise InexactDivision is thrown.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

// Laurent gcd via exponent shifting plus recursive primitive pseudo-remainder
// sequences over Z, one variable at a time with u recursed last.  Result is
// canonical; gcd(0, 0) = 0.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

} // namespace oddblock

#endif
