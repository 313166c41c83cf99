#pragma once

#include "siegel/ints.hpp"

#include <initializer_list>
#include <vector>

namespace siegel {

// Dense matrix of arbitrary-precision integers, row-major.
class IntMat {
  public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        check(rows >= 0 && cols >= 0, "IntMat: negative shape");
    }
    IntMat(int rows, int cols, std::initializer_list<long> vals) : IntMat(rows, cols) {
        check(static_cast<int>(vals.size()) == rows * cols, "IntMat: initializer size mismatch");
        size_t i = 0;
        for (long v : vals) a_[i++] = v;
    }

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static IntMat zero(int rows, int cols) { return IntMat(rows, cols); }
    static IntMat diag(const std::vector<Int>& d) {
        IntMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
        for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const IntMat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const Int& v : a_)
            if (v != 0) return false;
        return true;
    }

    IntMat transpose() const {
        IntMat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntMat operator*(const IntMat& o) const {
        check(cols_ == o.rows_, "IntMat: shape mismatch in product");
        IntMat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Int& v = (*this)(i, k);
                if (v == 0) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
            }
        return r;
    }

    IntMat operator+(const IntMat& o) const {
        check(rows_ == o.rows_ && cols_ == o.cols_, "IntMat: shape mismatch in sum");
        IntMat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }
    IntMat operator-(const IntMat& o) const {
        check(rows_ == o.rows_ && cols_ == o.cols_, "IntMat: shape mismatch in difference");
        IntMat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }
    IntMat operator-() const {
        IntMat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
        return r;
    }
    IntMat scaled(const Int& c) const {
        IntMat r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
        return r;
    }

    std::vector<Int> row(int i) const {
        std::vector<Int> r(cols_);
        for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }
    std::vector<Int> col(int j) const {
        std::vector<Int> c(rows_);
        for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    std::vector<Int> apply(const std::vector<Int>& x) const {
        check(static_cast<int>(x.size()) == cols_, "IntMat: vector size mismatch");
        std::vector<Int> y(rows_, Int(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    // Stack o below this.
    IntMat vstack(const IntMat& o) const {
        check(cols_ == o.cols_ || rows_ == 0 || o.rows_ == 0, "IntMat: vstack mismatch");
        int c = rows_ == 0 ? o.cols_ : cols_;
        IntMat r(rows_ + o.rows_, c);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
        for (int i = 0; i < o.rows_; ++i)
            for (int j = 0; j < o.cols_; ++j) r(rows_ + i, j) = o(i, j);
        return r;
    }
    IntMat hstack(const IntMat& o) const {
        check(rows_ == o.rows_ || cols_ == 0 || o.cols_ == 0, "IntMat: hstack mismatch");
        int rws = cols_ == 0 ? o.rows_ : rows_;
        IntMat r(rws, cols_ + o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
        for (int i = 0; i < o.rows_; ++i)
            for (int j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
        return r;
    }

    IntMat submatrix(int r0, int c0, int nr, int nc) const {
        IntMat r(nr, nc);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
        return r;
    }

    void swap_rows(int i, int j) {
        for (int k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(int i, int j) {
        for (int k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }
    // row i += c * row j
    void addmul_row(int i, int j, const Int& c) {
        if (c == 0) return;
        for (int k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
    }
    void addmul_col(int i, int j, const Int& c) {
        if (c == 0) return;
        for (int k = 0; k < rows_; ++k) (*this)(k, i) += c * (*this)(k, j);
    }
    void negate_row(int i) {
        for (int k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
    }
    void negate_col(int j) {
        for (int k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
    }

  private:
    int rows_, cols_;
    std::vector<Int> a_;
};

inline IntMat from_rows(const std::vector<std::vector<Int>>& rows, int cols_hint = -1) {
    int cols = cols_hint;
    if (cols < 0) cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    IntMat m(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        check(static_cast<int>(rows[i].size()) == cols, "from_rows: ragged input");
        for (int j = 0; j < cols; ++j) m(static_cast<int>(i), j) = rows[i][j];
    }
    return m;
}

// Kronecker product in the basis e_k (x) e_l ordered by index k*colsB + l.
inline IntMat kron(const IntMat& A, const IntMat& B) {
    IntMat r(A.rows() * B.rows(), A.cols() * B.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) {
            if (A(i, j) == 0) continue;
            for (int k = 0; k < B.rows(); ++k)
                for (int l = 0; l < B.cols(); ++l)
                    r(i * B.rows() + k, j * B.cols() + l) = A(i, j) * B(k, l);
        }
    return r;
}

}  // namespace siegel
