#ifndef ODDBLOCK_ROOTS_HPP
#define ODDBLOCK_ROOTS_HPP

#include <vector>

#include "oddblock/interval.hpp"
#include "oddblock/laurent.hpp"
#include "oddblock/matrix.hpp"

namespace oddblock {

// Dense univariate integer polynomial, coefficient of u^k at index k.
using UniPoly = std::vector<Int>;

UniPoly to_unipoly(const LaurentPoly& p);  // p must be univariate in u with exponents >= 0

Rat eval_at(const UniPoly& p, const Rat& x);
RationalInterval eval_on(const UniPoly& p, const RationalInterval& x);  // Horner, interval

// Number of distinct real roots in (a, b] by Sturm sign changes.
struct SturmChain {
    explicit SturmChain(const UniPoly& p);
    int sign_changes_at(const Rat& x) const;
    int count_roots(const Rat& a, const Rat& b) const;  // roots in (a, b]
    std::vector<std::vector<Rat>> chain;
};

// Interval of width <= width containing the largest real root of p, certified
// by Sturm counts: exactly one root inside, none to the right.  Throws
// Inconclusive on precision exhaustion.
RationalInterval isolate_perron_root(const UniPoly& p, const Rat& width);

// Enclosures of the L1-normalized positive eigenvector of A for the simple
// leading eigenvalue enclosed by lambda.  Evaluates a nonzero column of
// adj(lambda I - A) on the interval and normalizes; refines lambda as needed.
// Throws Inconclusive if positivity cannot be certified.
std::vector<RationalInterval> interval_eigenvector(const IntegerMatrix& A, RationalInterval lambda);

// Helper used by the refinement loop: re-isolate the largest root of p to a
// smaller width starting from a known enclosure.
RationalInterval refine_root(const UniPoly& p, RationalInterval enclosure, const Rat& width);

} // namespace oddblock

#endif
