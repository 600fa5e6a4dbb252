#include "oddblock/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "oddblock/errors.hpp"

namespace oddblock {

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
    assert(cols_ == o.rows_);
    IntegerMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

IntegerMatrix IntegerMatrix::operator-(const IntegerMatrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    IntegerMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
    return r;
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

LaurentMatrix LaurentMatrix::submatrix_dropping_column(const std::vector<int>& dropped) const {
    std::vector<bool> drop(cols_, false);
    for (int c : dropped) drop[c] = true;
    LaurentMatrix r(rows_, cols_ - static_cast<int>(dropped.size()), nvars_);
    for (int i = 0; i < rows_; ++i) {
        int jj = 0;
        for (int j = 0; j < cols_; ++j)
            if (!drop[j]) r.at(i, jj++) = at(i, j);
    }
    return r;
}

// ---------------------------------------------------------------------------
// determinant: clear per-row units, then Bareiss
// ---------------------------------------------------------------------------

LaurentPoly determinant(const LaurentMatrix& A) {
    assert(A.rows() == A.cols());
    const int n = A.rows();
    const int nv = A.nvars();
    if (n == 0) return LaurentPoly::constant(nv, 1);

    // clear each row's monomial denominators, recording the unit factor
    LaurentPoly::Exp unit(nv, 0);
    std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(n, LaurentPoly(nv)));
    for (int i = 0; i < n; ++i) {
        LaurentPoly::Exp sh(nv, 0);
        for (int j = 0; j < n; ++j) {
            const LaurentPoly& p = A.at(i, j);
            if (p.is_zero()) continue;
            for (int v = 0; v < nv; ++v) sh[v] = std::max(sh[v], -p.min_exp(v));
        }
        for (int v = 0; v < nv; ++v) unit[v] -= sh[v];
        for (int j = 0; j < n; ++j) a[i][j] = A.at(i, j).shifted(sh);
    }

    int sign = 1;
    LaurentPoly prev = LaurentPoly::constant(nv, 1);
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k].is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a[i][k].is_zero()) { p = i; break; }
            if (p < 0) return LaurentPoly::zero(nv);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                LaurentPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = exact_div(num, prev);
            }
            a[i][k] = LaurentPoly::zero(nv);
        }
        prev = a[k][k];
    }
    LaurentPoly det = a[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det.shifted(unit);
}

std::vector<LaurentPoly> maximal_minors_serial(const LaurentMatrix& A) {
    const int r = A.rows(), c = A.cols();
    assert(r <= c);
    const int k = c - r;
    // enumerate deleted column sets in lexicographic order
    std::vector<std::vector<int>> sets;
    std::vector<int> cur(k);
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == k) {
            sets.push_back(cur);
            return;
        }
        for (int v = start; v < c; ++v) {
            cur[pos] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 0);
    std::vector<LaurentPoly> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(determinant(A.submatrix_dropping_column(s)));
    return out;
}

std::vector<LaurentPoly> maximal_minors(const LaurentMatrix& A) {
    const int r = A.rows(), c = A.cols();
    assert(r <= c);
    const int k = c - r;
    std::vector<std::vector<int>> sets;
    std::vector<int> cur(k);
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == k) {
            sets.push_back(cur);
            return;
        }
        for (int v = start; v < c; ++v) {
            cur[pos] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 0);
    std::vector<LaurentPoly> out(sets.size(), LaurentPoly(A.nvars()));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long idx = 0; idx < static_cast<long>(sets.size()); ++idx)
        out[idx] = determinant(A.submatrix_dropping_column(sets[idx]));
    return out;
}

LaurentMatrix u_identity_minus(const LaurentMatrix& A) {
    assert(A.rows() == A.cols());
    LaurentMatrix r(A.rows(), A.cols(), A.nvars());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) {
            r.at(i, j) = -A.at(i, j);
            if (i == j) r.at(i, j) += LaurentPoly::variable(A.nvars(), 0);
        }
    return r;
}

LaurentPoly char_poly(const IntegerMatrix& A) {
    assert(A.rows() == A.cols());
    LaurentMatrix m(A.rows(), A.cols(), 1);
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            m.at(i, j) = LaurentPoly::constant(1, -A.at(i, j));
    for (int i = 0; i < A.rows(); ++i) m.at(i, i) += LaurentPoly::variable(1, 0);
    return determinant(m);
}

Int integer_determinant(const IntegerMatrix& A) {
    assert(A.rows() == A.cols());
    const int n = A.rows();
    if (n == 0) return 1;
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = A.at(i, j);
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { p = i; break; }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a[i][j] = int_divexact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign < 0 ? Int(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

// ---------------------------------------------------------------------------
// integer kernel via row reduction of the transpose with a unimodular log
// ---------------------------------------------------------------------------

std::vector<std::vector<Int>> integer_kernel_basis(const IntegerMatrix& A) {
    // Reduce B = A^T (rows = original columns? no: we solve A v = 0, so we
    // reduce the rows of A against v-coordinates).  Work with W = [A^T | I]:
    // row-reduce A^T; rows of the I-part aligned with zero rows of the
    // reduced A^T form a basis of {v : v^T A^T = 0} = {v : A v = 0}.
    const int n = A.rows(), m = A.cols();
    IntegerMatrix B = A.transposed();  // m x n, rows indexed by v-coordinates
    std::vector<std::vector<Int>> U(m, std::vector<Int>(m, Int(0)));
    for (int i = 0; i < m; ++i) U[i][i] = 1;
    std::vector<std::vector<Int>> R(m, std::vector<Int>(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) R[i][j] = B.at(i, j);

    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        // eliminate below with gcd steps
        int pivot = -1;
        for (int i = row; i < m; ++i)
            if (R[i][col] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(R[row], R[pivot]);
        std::swap(U[row], U[pivot]);
        for (int i = row + 1; i < m; ++i) {
            while (R[i][col] != 0) {
                Int q = R[row][col] / R[i][col];  // floor? use truncation with swap loop
                // subtract q * row
                for (int j = 0; j < n; ++j) R[row][j] -= q * R[i][j];
                for (int j = 0; j < m; ++j) U[row][j] -= q * U[i][j];
                std::swap(R[row], R[i]);
                std::swap(U[row], U[i]);
            }
        }
        if (R[row][col] < 0) {
            for (int j = 0; j < n; ++j) R[row][j] = -R[row][j];
            for (int j = 0; j < m; ++j) U[row][j] = -U[row][j];
        }
        ++row;
    }
    std::vector<std::vector<Int>> basis;
    for (int i = row; i < m; ++i) {
        bool zero = true;
        for (int j = 0; j < n; ++j)
            if (R[i][j] != 0) { zero = false; break; }
        if (!zero) continue;
        std::vector<Int> v = U[i];
        Int g = 0;
        for (const Int& x : v) g = int_gcd(g, x);
        if (g > 1)
            for (Int& x : v) x = int_divexact(x, g);
        for (const Int& x : v) {
            if (x != 0) {
                if (x < 0)
                    for (Int& y : v) y = -y;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    // deterministic order: by position of first nonzero entry, then lex
    std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
        auto fz = [](const std::vector<Int>& v) {
            for (std::size_t i = 0; i < v.size(); ++i)
                if (v[i] != 0) return i;
            return v.size();
        };
        std::size_t fa = fz(a), fb = fz(b);
        if (fa != fb) return fa < fb;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return basis;
}

std::vector<IntegerMatrix> adjugate_powers(const IntegerMatrix& A) {
    // Faddeev-LeVerrier: N_0 = I; a_k = -tr(A N_{k-1})/k; N_k = A N_{k-1} + a_k I.
    // adj(uI - A) = sum_{k=0}^{n-1} u^{n-1-k} N_k; all N_k are integral.
    const int n = A.rows();
    std::vector<IntegerMatrix> Ns;
    IntegerMatrix N = IntegerMatrix::identity(n);
    Ns.push_back(N);
    for (int k = 1; k < n; ++k) {
        IntegerMatrix AN = A * N;
        Int tr = 0;
        for (int i = 0; i < n; ++i) tr += AN.at(i, i);
        Int a = int_divexact(-tr, Int(k));
        N = AN;
        for (int i = 0; i < n; ++i) N.at(i, i) += a;
        Ns.push_back(N);
    }
    return Ns;
}

} // namespace oddblock
