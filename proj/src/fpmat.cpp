#include "siegel/fpmat.hpp"

namespace siegel {

int fp_inv(int a, int p) {
    a %= p;
    if (a < 0) a += p;
    check(a != 0, "fp_inv: zero");
    int r = 1;
    for (int e = p - 2; e > 0; e >>= 1) {  // p prime, small
        if (e & 1) r = r * a % p;
        a = a * a % p;
    }
    return r;
}

FpMat FpMat::operator*(const FpMat& o) const {
    check(cols_ == o.rows_, "FpMat: shape mismatch");
    FpMat r(p_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            int v = (*this)(i, k);
            if (!v) continue;
            for (int j = 0; j < o.cols_; ++j)
                r(i, j) = (r(i, j) + v * o(k, j)) % p_;
        }
    return r;
}

FpMat FpMat::transpose() const {
    FpMat t(p_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

FpMat FpMat::vstack(const FpMat& o) const {
    check(p_ == o.p_ && (cols_ == o.cols_ || rows_ == 0 || o.rows_ == 0), "FpMat: vstack");
    int c = rows_ == 0 ? o.cols_ : cols_;
    FpMat r(p_, rows_ + o.rows_, c);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) r(rows_ + i, j) = o(i, j);
    return r;
}

void FpMat::reduce() {
    for (int& v : a_) {
        v %= p_;
        if (v < 0) v += p_;
    }
}

FpMat FpMat::rref() const {
    FpMat m = *this;
    m.reduce();
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int piv = -1;
        for (int i = r; i < rows_; ++i)
            if (m(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < cols_; ++j) std::swap(m(r, j), m(piv, j));
        int inv = fp_inv(m(r, c), p_);
        for (int j = 0; j < cols_; ++j) m(r, j) = m(r, j) * inv % p_;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || !m(i, c)) continue;
            int f = m(i, c);
            for (int j = 0; j < cols_; ++j)
                m(i, j) = ((m(i, j) - f * m(r, j)) % p_ + p_) % p_;
        }
        ++r;
    }
    return m;
}

FpMat FpMat::row_basis() const {
    FpMat m = rref();
    int rk = m.rank();
    FpMat out(p_, rk, cols_);
    for (int i = 0; i < rk; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) = m(i, j);
    return out;
}

int FpMat::rank() const {
    FpMat m = rref();
    int r = 0;
    for (int i = 0; i < rows_; ++i) {
        bool nz = false;
        for (int j = 0; j < cols_; ++j)
            if (m(i, j)) nz = true;
        if (nz) ++r;
    }
    return r;
}

// Basis (rows) of {x in F_p^cols : M x = 0} for M = *this.
FpMat FpMat::kernel() const {
    FpMat m = rref();
    std::vector<int> pivcol(rows_, -1);
    std::vector<bool> is_piv(cols_, false);
    int r = 0;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (m(i, j)) {
                pivcol[i] = j;
                is_piv[j] = true;
                ++r;
                break;
            }
    FpMat out(p_, cols_ - r, cols_);
    int row = 0;
    for (int j = 0; j < cols_; ++j) {
        if (is_piv[j]) continue;
        out(row, j) = 1;
        for (int i = 0; i < rows_; ++i)
            if (pivcol[i] >= 0 && m(i, j))
                out(row, pivcol[i]) = (p_ - m(i, j)) % p_;
        ++row;
    }
    return out;
}

std::string FpMat::key() const {
    std::string s;
    s.reserve(a_.size() + 8);
    s.push_back(static_cast<char>('0' + rows_));
    s.push_back(static_cast<char>('0' + cols_));
    for (int v : a_) s.push_back(static_cast<char>('0' + v));
    return s;
}

int dim_sum(const FpMat& a, const FpMat& b) { return a.vstack(b).rank(); }

int dim_intersection(const FpMat& a, const FpMat& b) {
    return a.rank() + b.rank() - dim_sum(a, b);
}

}  // namespace siegel
