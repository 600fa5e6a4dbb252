#include "oddblock/roots.hpp"

#include <cassert>

#include "oddblock/errors.hpp"

namespace oddblock {

UniPoly to_unipoly(const LaurentPoly& p) {
    UniPoly out;
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t k = 1; k < e.size(); ++k) assert(e[k] == 0);
        assert(e[0] >= 0);
        if (static_cast<std::size_t>(e[0]) >= out.size()) out.resize(e[0] + 1, Int(0));
        out[e[0]] = c;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

Rat eval_at(const UniPoly& p, const Rat& x) {
    Rat r(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + Rat(*it);
    return r;
}

RationalInterval eval_on(const UniPoly& p, const RationalInterval& x) {
    RationalInterval r;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + RationalInterval::point(Rat(*it));
    return r;
}

namespace {

std::vector<Rat> to_rat(const UniPoly& p) {
    std::vector<Rat> r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = Rat(p[i]);
    return r;
}

void trim(std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Rat> derivative(const std::vector<Rat>& p) {
    std::vector<Rat> d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rat(static_cast<long>(i)) * p[i]);
    return d;
}

// remainder of a mod b over Q
std::vector<Rat> poly_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat q = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        trim(a);
    }
    return a;
}

Rat eval_rat(const std::vector<Rat>& p, const Rat& x) {
    Rat r(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

int sgn(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

} // namespace

SturmChain::SturmChain(const UniPoly& p) {
    std::vector<Rat> p0 = to_rat(p);
    trim(p0);
    // squarefree part would also work; the standard chain handles multiplicity
    chain.push_back(p0);
    std::vector<Rat> p1 = derivative(p0);
    trim(p1);
    if (!p1.empty()) chain.push_back(p1);
    while (chain.size() >= 2) {
        std::vector<Rat> r = poly_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(r);
    }
}

int SturmChain::sign_changes_at(const Rat& x) const {
    int changes = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sgn(eval_rat(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

int SturmChain::count_roots(const Rat& a, const Rat& b) const {
    return sign_changes_at(a) - sign_changes_at(b);
}

RationalInterval isolate_perron_root(const UniPoly& p, const Rat& width) {
    if (p.size() < 2) throw Inconclusive("constant polynomial has no root");
    SturmChain st(p);
    // Cauchy bound
    Int maxc = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        Int a = abs(p[i]);
        if (a > maxc) maxc = a;
    }
    Rat bound = Rat(1) + Rat(maxc) / Rat(abs(p.back()));
    Rat lo(-bound), hi(bound);
    if (st.count_roots(lo, hi) == 0) throw Inconclusive("no real root below the Cauchy bound");
    // bisect keeping the largest root: maintain count((mid, hi]) to decide side
    int guard = 0;
    while (true) {
        if (++guard > 100000) throw Inconclusive("root isolation did not converge");
        Rat mid = (lo + hi) / 2;
        if (eval_at(p, mid) == 0) {
            // exact rational root; certify it is the largest
            if (st.count_roots(mid, bound) == 0) return RationalInterval::point(mid);
            lo = mid;
            continue;
        }
        if (st.count_roots(mid, bound) >= 1)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= width && st.count_roots(lo, hi) == 1 && st.count_roots(hi, bound) == 0)
            return {lo, hi};
    }
}

RationalInterval refine_root(const UniPoly& p, RationalInterval enc, const Rat& width) {
    if (enc.width() <= width) return enc;
    if (enc.lo == enc.hi) return enc;
    SturmChain st(p);
    Rat lo = enc.lo, hi = enc.hi;
    int guard = 0;
    while (hi - lo > width) {
        if (++guard > 100000) throw Inconclusive("root refinement did not converge");
        Rat mid = (lo + hi) / 2;
        if (eval_at(p, mid) == 0) return RationalInterval::point(mid);
        if (st.count_roots(mid, hi) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

std::vector<RationalInterval> interval_eigenvector(const IntegerMatrix& A, RationalInterval lambda) {
    const int n = A.rows();
    if (n == 1) return {RationalInterval::point(Rat(1))};
    // adj(uI - A) columns lie in ker(lambda I - A); evaluate via FL powers
    std::vector<IntegerMatrix> Ns = adjugate_powers(A);
    UniPoly cp = to_unipoly(char_poly(A));

    for (int attempt = 0; attempt < 64; ++attempt) {
        // entries of column j: sum_k lambda^{n-1-k} Ns[k](i, j)
        std::vector<RationalInterval> pw(n);
        pw[n - 1] = RationalInterval::point(Rat(1));
        for (int k = n - 2; k >= 0; --k) pw[k] = pw[k + 1] * lambda;
        // pw[k] = lambda^{n-1-k}
        int best = -1;
        std::vector<RationalInterval> col(n);
        for (int j = 0; j < n && best < 0; ++j) {
            bool pos = true, neg = true;
            for (int i = 0; i < n; ++i) {
                RationalInterval s;
                for (int k = 0; k < n; ++k) s = s + Ns[k].at(i, j) * pw[k];
                col[i] = s;
                pos = pos && s.strictly_positive();
                neg = neg && s.strictly_negative();
            }
            if (pos || neg) {
                best = j;
                if (neg)
                    for (auto& c : col) c = -c;
            }
        }
        if (best >= 0) {
            RationalInterval total;
            for (const auto& c : col) total = total + c;
            std::vector<RationalInterval> out(n);
            for (int i = 0; i < n; ++i) out[i] = col[i] / total;
            return out;
        }
        // tighten lambda and retry
        Rat w = lambda.width();
        if (w == 0) break;
        lambda = refine_root(cp, lambda, w / 16);
    }
    throw Inconclusive("could not certify a strictly signed adjugate column");
}

} // namespace oddblock
