#include "oddblock/oddblock.hpp"

#include <algorithm>
#include <cassert>

#include "oddblock/errors.hpp"
#include "oddblock/roots.hpp"

namespace oddblock {

std::vector<std::vector<int>> phi_candidates(const IntegerMatrix& M) {
    const int n = M.rows();
    // per column: either the odd block as {p-1, q} endpoints, or empty
    std::vector<std::optional<std::pair<int, int>>> pairs(n);
    for (int j = 0; j < n; ++j) {
        int first = -1, last = -1;
        for (int i = 0; i < n; ++i) {
            if (M.at(i, j) % 2 != 0) {
                if (first < 0) first = i;
                last = i;
            }
        }
        if (first < 0) continue;
        for (int i = first; i <= last; ++i)
            if (M.at(i, j) % 2 == 0)
                throw NotOddBlock("odd entries of column " + std::to_string(j + 1) +
                                  " do not form one consecutive block");
        pairs[j] = std::make_pair(first, last + 1);  // {phi(j-1), phi(j)} = {first, last+1}
    }

    std::vector<std::vector<int>> sols;
    std::vector<int> phi;
    auto extend = [&](auto&& self, int j) -> void {
        if (j == n + 1) {
            sols.push_back(phi);
            return;
        }
        if (!pairs[j - 1]) {
            phi.push_back(phi.back());
            self(self, j + 1);
            phi.pop_back();
            return;
        }
        auto [a, b] = *pairs[j - 1];
        int prev = phi.back();
        if (prev == a || prev == b) {
            phi.push_back(prev == a ? b : a);
            self(self, j + 1);
            phi.pop_back();
        }
    };
    if (!pairs[0]) {
        for (int v0 = 0; v0 <= n; ++v0) {
            phi = {v0};
            extend(extend, 1);
        }
    } else {
        auto [a, b] = *pairs[0];
        for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
            phi = {x, y};
            extend(extend, 2);
        }
    }
    std::sort(sols.begin(), sols.end());
    sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
    return sols;
}

bool is_aperiodic(const IntegerMatrix& M) {
    const int n = M.rows();
    const long bound = static_cast<long>(n - 1) * (n - 1) + 1;
    // boolean repeated squaring up to the Wielandt bound
    std::vector<std::vector<char>> B(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) B[i][j] = M.at(i, j) > 0;
    auto allpos = [&](const std::vector<std::vector<char>>& X) {
        for (const auto& row : X)
            for (char v : row)
                if (!v) return false;
        return true;
    };
    auto mul = [&](const std::vector<std::vector<char>>& X, const std::vector<std::vector<char>>& Y) {
        std::vector<std::vector<char>> Z(n, std::vector<char>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (X[i][k])
                    for (int j = 0; j < n; ++j)
                        if (Y[k][j]) Z[i][j] = 1;
        return Z;
    };
    auto C = B;
    long e = 1;
    while (true) {
        if (allpos(C)) return true;
        if (e >= bound) return false;
        C = mul(C, C);
        e *= 2;
    }
}

OddBlockMatrix validate(const IntegerMatrix& M, const ValidateOptions& opts) {
    if (M.rows() != M.cols() || M.rows() == 0) throw BadInput("matrix must be square and nonempty");
    const int n = M.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (M.at(i, j) < 0) throw BadInput("entries must be nonnegative");

    // condition (i): nonzero entries of each column form one consecutive block
    for (int j = 0; j < n; ++j) {
        int first = -1, last = -1;
        for (int i = 0; i < n; ++i) {
            if (M.at(i, j) != 0) {
                if (first < 0) first = i;
                last = i;
            }
        }
        for (int i = std::max(first, 0); i <= last; ++i)
            if (M.at(i, j) == 0)
                throw NotOddBlock("condition (i) fails in column " + std::to_string(j + 1));
    }

    auto sols = phi_candidates(M);  // throws NotOddBlock for condition (ii) shape
    if (sols.empty()) throw NoPhiExists("condition (ii) admits no endpoint map");
    if (sols.size() > 1) {
        std::string msg = "condition (ii) admits " + std::to_string(sols.size()) + " endpoint maps:";
        for (const auto& s : sols) {
            msg += " (";
            for (std::size_t k = 0; k < s.size(); ++k) msg += (k ? "," : "") + std::to_string(s[k]);
            msg += ")";
        }
        throw AmbiguousPhi(msg);
    }
    const std::vector<int>& phi = sols[0];

    // nonzero column block must match the phi interval exactly when binary
    bool binary = true;
    for (int i = 0; i < n && binary; ++i)
        for (int j = 0; j < n; ++j)
            if (M.at(i, j) > 1) {
                binary = false;
                break;
            }
    if (binary) {
        for (int j = 1; j <= n; ++j) {
            int lo = std::min(phi[j - 1], phi[j]), hi = std::max(phi[j - 1], phi[j]);
            for (int i = 1; i <= n; ++i) {
                bool inblock = lo < i && i <= hi;
                if ((M.at(i - 1, j - 1) != 0) != inblock)
                    throw NotOddBlock("column " + std::to_string(j) +
                                      " support does not match the endpoint interval");
            }
        }
    }

    if (!opts.allow_singular && integer_determinant(M) == 0) throw Singular("det(M) = 0");
    if (!is_aperiodic(M)) throw NotAperiodic("no power up to the Wielandt bound is positive");

    OddBlockMatrix out;
    out.n = n;
    out.M = M;
    out.phi = phi;
    out.binary = binary;
    out.singular_allowed = opts.allow_singular;
    out.directions.resize(n);
    for (int j = 1; j <= n; ++j) {
        if (phi[j] == phi[j - 1]) throw NoPhiExists("piece " + std::to_string(j) + " has no direction");
        out.directions[j - 1] = phi[j] > phi[j - 1] ? Direction::Increasing : Direction::Decreasing;
    }
    return out;
}

PLMap build_pl_model(const OddBlockMatrix& A) {
    assert(A.binary);
    PLMap p;
    p.n = A.n;
    p.phi = A.phi;
    p.directions = A.directions;
    p.lap_counts = A.M;
    p.image_block.resize(A.n);
    for (int j = 1; j <= A.n; ++j) {
        int lo = std::min(A.phi[j - 1], A.phi[j]), hi = std::max(A.phi[j - 1], A.phi[j]);
        p.image_block[j - 1] = {lo + 1, hi};
    }
    return p;
}

PerronData perron_data(const OddBlockMatrix& A, const Rat& width) {
    const int n = A.n;
    UniPoly cp = to_unipoly(char_poly(A.M));
    RationalInterval lam = isolate_perron_root(cp, width);
    IntegerMatrix At = A.M.transposed();

    PerronData out;
    Rat lam_width = width;
    const int max_refine = 60;
    for (int round = 0;; ++round) {
        out.lambda = lam;
        out.v = interval_eigenvector(At, lam);
        Rat maxw(0);
        for (const auto& iv : out.v) maxw = std::max(maxw, iv.width());
        if (maxw <= width) break;
        if (round >= max_refine) throw Inconclusive("eigenvector enclosures did not reach the requested width");
        lam_width /= 1024;
        lam = refine_root(cp, lam, lam_width);
    }

    out.partition.assign(n + 1, RationalInterval());
    for (int i = 1; i <= n; ++i) out.partition[i] = out.partition[i - 1] + out.v[i - 1];

    // certify distinctness of consecutive entries, refining a few more times
    for (int round = 0;; ++round) {
        bool distinct = true;
        for (int i = 0; i + 1 < n; ++i)
            if (!out.v[i].disjoint(out.v[i + 1])) {
                distinct = false;
                break;
            }
        if (distinct) {
            out.consecutive_distinct = true;
            break;
        }
        if (round >= max_refine)
            throw Inconclusive("consecutive eigenvector entries could not be separated");
        lam_width /= 1024;
        lam = refine_root(cp, lam, lam_width);
        out.lambda = lam;
        out.v = interval_eigenvector(At, lam);
        out.partition.assign(n + 1, RationalInterval());
        for (int i = 1; i <= n; ++i) out.partition[i] = out.partition[i - 1] + out.v[i - 1];
    }
    return out;
}

std::vector<std::vector<Int>> fixed_eigenspace(const OddBlockMatrix& A) {
    return integer_kernel_basis(A.M - IntegerMatrix::identity(A.n));
}

} // namespace oddblock
