#pragma once

#include "siegel/ints.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace siegel {

// Small dense matrices over F_p for prime p; rows-as-vectors convention.
// Only used at desk scale (p <= 5, dimensions <= 8), plain int arithmetic.
class FpMat {
  public:
    FpMat() : p_(2), rows_(0), cols_(0) {}
    FpMat(int p, int rows, int cols)
        : p_(p), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

    static FpMat identity(int p, int n) {
        FpMat m(p, n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int p() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    int operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    bool operator==(const FpMat& o) const {
        return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator<(const FpMat& o) const { return a_ < o.a_; }

    FpMat operator*(const FpMat& o) const;
    FpMat transpose() const;
    FpMat vstack(const FpMat& o) const;

    void reduce();  // entries into [0, p)
    FpMat rref() const;
    FpMat row_basis() const;  // rref with zero rows dropped: canonical subspace form
    int rank() const;
    FpMat kernel() const;  // rows span the kernel of x -> x * this^T ... see cpp
    std::string key() const;

  private:
    int p_, rows_, cols_;
    std::vector<int> a_;
};

int fp_inv(int a, int p);

// Dimension of the row-space sum and intersection.
int dim_sum(const FpMat& a, const FpMat& b);
int dim_intersection(const FpMat& a, const FpMat& b);

}  // namespace siegel
