#pragma once

#include "siegel/intmat.hpp"

#include <optional>
#include <vector>

namespace siegel {

// Smith normal form U*A*V = D with U, V unimodular and D diagonal,
// d_1 | d_2 | ... | d_k >= 1 followed by zeros.
struct SmithDecomposition {
    IntMat U, D, V;
    IntMat Uinv, Vinv;  // A = Uinv * D * Vinv
    IntMat A;           // source matrix
    int rank = 0;

    std::vector<Int> divisors() const {
        std::vector<Int> d;
        for (int i = 0; i < rank; ++i) d.push_back(D(i, i));
        return d;
    }
};

SmithDecomposition snf(const IntMat& A);

// Row-style Hermite normal form: returns H = W*A with W unimodular, H in
// canonical row echelon form (positive pivots, entries above a pivot reduced
// into [0, pivot), zero rows trailing). Unique for a given row lattice.
IntMat hnf_rows(const IntMat& A);

// Basis of the integer kernel {x : A x = 0}; columns of the result form a
// basis of the saturated kernel lattice.
IntMat kernel(const IntMat& A);

// Invariant factors of coker(A) = Z^rows / im(A): entries > 1 first (in
// divisibility order), one 0 per free summand.
std::vector<Int> cokernel_factors(const IntMat& A);

// Saturation of the row lattice of G inside Z^cols. Returns the basis (rows)
// of (Q*rows(G)) cap Z^n and the index of rows(G) inside it.
struct Saturation {
    IntMat basis;  // rank x n, rows form a basis of the saturation
    Int index;     // [saturation : input lattice]
    int rank;
};
Saturation saturate_rows(const IntMat& G);

// One solution of A x = b over Z, if any.
std::optional<std::vector<Int>> solve(const IntMat& A, const std::vector<Int>& b);

// True if b lies in the column span of A over Z.
bool in_column_span(const IntMat& A, const std::vector<Int>& b);

// |det| for square A (product of Smith divisors; 0 if rank deficient).
Int abs_det(const IntMat& A);

// Inverse of a unimodular matrix.
IntMat unimodular_inverse(const IntMat& A);

// Divide a vector by the gcd of its entries and normalize the sign of the
// first nonzero entry to be positive. Zero vectors are returned unchanged.
std::vector<Int> primitive(std::vector<Int> v);

}  // namespace siegel
