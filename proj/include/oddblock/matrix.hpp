#ifndef ODDBLOCK_MATRIX_HPP
#define ODDBLOCK_MATRIX_HPP

#include <vector>

#include "oddblock/ints.hpp"
#include "oddblock/laurent.hpp"

namespace oddblock {

class IntegerMatrix {
public:
    IntegerMatrix() : rows_(0), cols_(0) {}
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}
    static IntegerMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return e_[i * cols_ + j]; }
    const Int& at(int i, int j) const { return e_[i * cols_ + j]; }

    IntegerMatrix operator*(const IntegerMatrix& o) const;
    IntegerMatrix operator-(const IntegerMatrix& o) const;
    IntegerMatrix transposed() const;
    bool operator==(const IntegerMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

private:
    int rows_, cols_;
    std::vector<Int> e_;
};

class LaurentMatrix {
public:
    LaurentMatrix() : rows_(0), cols_(0), nvars_(1) {}
    LaurentMatrix(int rows, int cols, int nvars)
        : rows_(rows), cols_(cols), nvars_(nvars), e_(rows * cols, LaurentPoly(nvars)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nvars() const { return nvars_; }
    LaurentPoly& at(int i, int j) { return e_[i * cols_ + j]; }
    const LaurentPoly& at(int i, int j) const { return e_[i * cols_ + j]; }
    bool operator==(const LaurentMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    LaurentMatrix submatrix_dropping_column(const std::vector<int>& dropped) const;

private:
    int rows_, cols_;
    int nvars_;
    std::vector<LaurentPoly> e_;
};

// Exact determinant: per-row monomial denominators are cleared first (the
// unit is reapplied), then fraction-free Bareiss elimination with exact
// division.
LaurentPoly determinant(const LaurentMatrix& A);

// All maximal minors of an r x c matrix (r <= c), ordered lexicographically
// by the set of deleted columns.  Evaluated in parallel when OpenMP is
// enabled; maximal_minors_serial is the reference implementation.
std::vector<LaurentPoly> maximal_minors(const LaurentMatrix& A);
std::vector<LaurentPoly> maximal_minors_serial(const LaurentMatrix& A);

// det(uI - A) as a polynomial in u (nvars = 1).
LaurentPoly char_poly(const IntegerMatrix& A);

// uI - A for a Laurent matrix (square).
LaurentMatrix u_identity_minus(const LaurentMatrix& A);

// Basis of the saturated integer kernel {v : Av = 0}; vectors primitive,
// first nonzero entry positive, ordered by pivot position.
std::vector<std::vector<Int>> integer_kernel_basis(const IntegerMatrix& A);

// adj(uI - A) via the Faddeev-LeVerrier recursion: returns matrices B_0..B_{n-1}
// with adj(uI - A) = sum_k u^k B_{n-1-k}; used for interval eigenvector work.
std::vector<IntegerMatrix> adjugate_powers(const IntegerMatrix& A);

Int integer_determinant(const IntegerMatrix& A);

} // namespace oddblock

#endif
