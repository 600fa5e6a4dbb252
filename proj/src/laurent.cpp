#include "oddblock/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "oddblock/errors.hpp"

namespace oddblock {

LaurentPoly LaurentPoly::constant(int nvars, Int c) {
    LaurentPoly p(nvars);
    if (c != 0) p.terms_.emplace(Exp(nvars, 0), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, const Exp& e, Int c) {
    assert(static_cast<int>(e.size()) == nvars);
    LaurentPoly p(nvars);
    if (c != 0) p.terms_.emplace(e, std::move(c));
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int index, int power) {
    Exp e(nvars, 0);
    e[index] = power;
    return monomial(nvars, e, 1);
}

bool LaurentPoly::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    return c == 1 && std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

void LaurentPoly::add_term(const Exp& e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    assert(nvars_ == o.nvars_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    assert(nvars_ == o.nvars_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    assert(nvars_ == o.nvars_);
    LaurentPoly r(nvars_);
    Exp e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::scaled(const Int& c) const {
    LaurentPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

LaurentPoly LaurentPoly::shifted(const Exp& s) const {
    LaurentPoly r(nvars_);
    Exp e(nvars_);
    for (const auto& [ea, c] : terms_) {
        for (int k = 0; k < nvars_; ++k) e[k] = ea[k] + s[k];
        r.terms_.emplace(e, c);
    }
    return r;
}

int LaurentPoly::min_exp(int var) const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[var] < m) m = e[var];
        first = false;
    }
    return m;
}

int LaurentPoly::max_exp(int var) const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[var] > m) m = e[var];
        first = false;
    }
    return m;
}

bool LaurentPoly::depends_on(int var) const {
    for (const auto& [e, c] : terms_)
        if (e[var] != 0) return true;
    return false;
}

namespace {

// graded-lex with u (index 0) highest
bool grlex_less(const LaurentPoly::Exp& a, const LaurentPoly::Exp& b) {
    long da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da < db;
    return a < b;  // lexicographic, u first
}

} // namespace

std::pair<LaurentPoly::Exp, Int> LaurentPoly::leading_term() const {
    assert(!terms_.empty());
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (grlex_less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

LaurentPoly LaurentPoly::canonical() const {
    if (is_zero()) return *this;
    Exp shift(nvars_);
    for (int v = 0; v < nvars_; ++v) shift[v] = -min_exp(v);
    LaurentPoly r = shifted(shift);
    if (r.leading_term().second < 0) r = -r;
    return r;
}

LaurentPoly LaurentPoly::collapse_t() const {
    LaurentPoly r(nvars_);
    Exp e(nvars_, 0);
    for (const auto& [ea, c] : terms_) {
        e[0] = ea[0];
        r.add_term(e, c);
    }
    return r;
}

LaurentPoly LaurentPoly::invert_t() const {
    LaurentPoly r(nvars_);
    Exp e(nvars_);
    for (const auto& [ea, c] : terms_) {
        e[0] = ea[0];
        for (int k = 1; k < nvars_; ++k) e[k] = -ea[k];
        r.terms_.emplace(e, c);
    }
    return r;
}

LaurentPoly LaurentPoly::with_nvars(int nvars) const {
    LaurentPoly r(nvars);
    Exp e(nvars, 0);
    for (const auto& [ea, c] : terms_) {
        for (int k = 0; k < nvars; ++k) e[k] = k < nvars_ ? ea[k] : 0;
        for (int k = nvars; k < nvars_; ++k) assert(ea[k] == 0);
        r.add_term(e, c);
    }
    return r;
}

Int LaurentPoly::content() const {
    Int g = 0;
    for (const auto& [e, c] : terms_) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

std::map<int, LaurentPoly> LaurentPoly::by_u_power() const {
    std::map<int, LaurentPoly> out;
    for (const auto& [e, c] : terms_) {
        auto it = out.find(e[0]);
        if (it == out.end()) it = out.emplace(e[0], LaurentPoly(nvars_)).first;
        Exp e2 = e;
        e2[0] = 0;
        it->second.add_term(e2, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// exact division (monomial long division under graded-lex)
// ---------------------------------------------------------------------------

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw InexactDivision("division by zero polynomial");
    if (a.is_zero()) return LaurentPoly::zero(a.nvars());
    assert(a.nvars() == b.nvars());
    const int nv = a.nvars();

    // Work with the unit-shifted representatives and reapply the net shift.
    LaurentPoly::Exp sa(nv), sb(nv);
    for (int v = 0; v < nv; ++v) {
        sa[v] = -a.min_exp(v);
        sb[v] = -b.min_exp(v);
    }
    LaurentPoly r = a.shifted(sa);
    LaurentPoly d = b.shifted(sb);

    auto [eld, cld] = d.leading_term();
    LaurentPoly q(nv);
    LaurentPoly::Exp em(nv);
    while (!r.is_zero()) {
        auto [elr, clr] = r.leading_term();
        for (int v = 0; v < nv; ++v) {
            em[v] = elr[v] - eld[v];
            if (em[v] < 0) throw InexactDivision("leading monomial not divisible");
        }
        if (!int_divides(cld, clr)) throw InexactDivision("leading coefficient not divisible");
        LaurentPoly m = LaurentPoly::monomial(nv, em, int_divexact(clr, cld));
        q += m;
        r -= m * d;
    }
    // net shift: a = t^{-sa} * (r-form), so quotient regains t^{sb - sa}
    LaurentPoly::Exp net(nv);
    for (int v = 0; v < nv; ++v) net[v] = sb[v] - sa[v];
    return q.shifted(net);
}

// ---------------------------------------------------------------------------
// multivariate gcd: primitive pseudo-remainder sequences, one variable at a
// time.  Main variables are taken from the highest index down, so u is last.
// ---------------------------------------------------------------------------

namespace {

// view p (all exponents >= 0) as univariate in `var`: degree -> coefficient
std::map<int, LaurentPoly> coeffs_in(const LaurentPoly& p, int var) {
    std::map<int, LaurentPoly> out;
    for (const auto& [e, c] : p.terms()) {
        auto it = out.find(e[var]);
        if (it == out.end()) it = out.emplace(e[var], LaurentPoly(p.nvars())).first;
        LaurentPoly::Exp e2 = e;
        e2[var] = 0;
        it->second.add_term(e2, c);
    }
    return out;
}

LaurentPoly from_coeffs(const std::map<int, LaurentPoly>& cs, int var) {
    LaurentPoly r(cs.empty() ? 1 : cs.begin()->second.nvars());
    for (const auto& [d, c] : cs) {
        for (const auto& [e, k] : c.terms()) {
            LaurentPoly::Exp e2 = e;
            e2[var] = d;
            r.add_term(e2, k);
        }
    }
    return r;
}

LaurentPoly gcd_rec(LaurentPoly a, LaurentPoly b);

// gcd of the univariate-coefficient list (content w.r.t. var)
LaurentPoly content_in(const LaurentPoly& p, int var) {
    LaurentPoly g(p.nvars());
    for (const auto& [d, c] : coeffs_in(p, var)) {
        g = gcd_rec(g, c);
        if (g.is_one()) break;
    }
    return g;
}

// pseudo-remainder of a by b in variable var (deg_a >= deg_b, b != 0)
LaurentPoly pseudo_rem(const LaurentPoly& a, const LaurentPoly& b, int var) {
    auto cb = coeffs_in(b, var);
    int db = cb.rbegin()->first;
    LaurentPoly lb = cb.rbegin()->second;
    LaurentPoly r = a;
    while (!r.is_zero()) {
        auto cr = coeffs_in(r, var);
        int dr = cr.rbegin()->first;
        if (dr < db) break;
        LaurentPoly lr = cr.rbegin()->second;
        // r <- lb * r - lr * x^(dr-db) * b
        LaurentPoly::Exp sh(a.nvars(), 0);
        sh[var] = dr - db;
        r = lb * r - lr * b.shifted(sh);
    }
    return r;
}

LaurentPoly gcd_rec(LaurentPoly a, LaurentPoly b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int nv = a.nvars();
    int var = -1;
    for (int v = nv - 1; v >= 0; --v) {
        if (a.depends_on(v) || b.depends_on(v)) {
            var = v;
            break;
        }
    }
    if (var < 0) {
        // both integer constants
        Int g = int_gcd(a.content(), b.content());
        return LaurentPoly::constant(nv, g);
    }
    LaurentPoly ca = content_in(a, var);
    LaurentPoly cb = content_in(b, var);
    LaurentPoly cg = gcd_rec(ca, cb);
    a = exact_div(a, ca);
    b = exact_div(b, cb);
    if (coeffs_in(a, var).rbegin()->first < coeffs_in(b, var).rbegin()->first) std::swap(a, b);
    while (true) {
        LaurentPoly r = pseudo_rem(a, b, var);
        if (r.is_zero()) break;
        r = exact_div(r, content_in(r, var));
        a = b;
        b = r;
        if (coeffs_in(a, var).rbegin()->first < coeffs_in(b, var).rbegin()->first) std::swap(a, b);
    }
    return cg * b;
}

} // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b.canonical();
    if (b.is_zero()) return a.canonical();
    return gcd_rec(a.canonical(), b.canonical()).canonical();
}

// ---------------------------------------------------------------------------
// rendering grammar: terms grouped by descending u power; u printed as "x";
// t variables as "t" (one) or "t1".."tb"; negative exponents as t^-1.
// ---------------------------------------------------------------------------

namespace {

std::string var_name(int nvars, int index) {
    if (index == 0) return "x";
    if (nvars == 2) return "t";
    return "t" + std::to_string(index);
}

// one monomial in the t variables with positive coefficient
std::string t_mono_string(int nvars, const LaurentPoly::Exp& e, const Int& c) {
    std::string s;
    bool havevar = false;
    for (int v = 1; v < nvars; ++v) {
        if (e[v] == 0) continue;
        if (havevar) s += "*";
        s += var_name(nvars, v);
        if (e[v] != 1) s += "^" + std::to_string(e[v]);
        havevar = true;
    }
    if (!havevar) return c.get_str();
    if (c == 1) return s;
    return c.get_str() + "*" + s;
}

} // namespace

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    auto groups = by_u_power();
    std::ostringstream out;
    bool first_group = true;
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
        int upow = it->first;
        const LaurentPoly& coeff = it->second;
        // order t terms descending graded-lex
        std::vector<std::pair<Exp, Int>> ts(coeff.terms().begin(), coeff.terms().end());
        std::sort(ts.begin(), ts.end(),
                  [](const auto& x, const auto& y) { return grlex_less(y.first, x.first); });
        bool neg = ts.front().second < 0;
        std::string body;
        if (ts.size() == 1) {
            Int c = ts[0].second;
            if (neg) c = -c;
            std::string mono = t_mono_string(nvars_, ts[0].first, c);
            if (upow != 0) {
                std::string xs = upow == 1 ? "x" : "x^" + std::to_string(upow);
                bool trivial = (c == 1) && mono == "1";
                body = trivial ? xs : mono + "*" + xs;
            } else {
                body = mono;
            }
        } else {
            // parenthesized multi-term coefficient; factor out the leading sign
            std::string inner;
            bool first = true;
            for (const auto& [e, c0] : ts) {
                Int c = neg ? -c0 : c0;
                bool tneg = c < 0;
                Int ca = tneg ? Int(-c) : c;
                if (first) {
                    if (tneg) inner += "-";
                } else {
                    inner += tneg ? " - " : " + ";
                }
                inner += t_mono_string(nvars_, e, ca);
                first = false;
            }
            if (upow != 0) {
                std::string xs = upow == 1 ? "x" : "x^" + std::to_string(upow);
                body = "(" + inner + ")*" + xs;
            } else {
                body = "(" + inner + ")";
            }
        }
        if (first_group) {
            if (neg) out << "-";
            out << body;
        } else {
            out << (neg ? " - " : " + ") << body;
        }
        first_group = false;
    }
    return out.str();
}

} // namespace oddblock
