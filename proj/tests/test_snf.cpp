#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "siegel/snf.hpp"

#include <random>

using namespace siegel;

namespace {

IntMat random_matrix(std::mt19937_64& rng, int maxdim, long maxabs) {
    std::uniform_int_distribution<int> dimd(1, maxdim);
    std::uniform_int_distribution<long> val(-maxabs, maxabs);
    IntMat m(dimd(rng), dimd(rng));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = val(rng);
    return m;
}

void check_snf_contract(const IntMat& a) {
    SmithDecomposition s = snf(a);
    CHECK(s.U * a * s.V == s.D);
    CHECK(s.Uinv * s.D * s.Vinv == a);
    CHECK(abs_det(s.U) == 1);
    CHECK(abs_det(s.V) == 1);
    int n = std::min(a.rows(), a.cols());
    for (int i = 0; i < n; ++i) {
        CHECK(s.D(i, i) >= 0);
        if (i + 1 < n && s.D(i + 1, i + 1) != 0) {
            if (s.D(i, i) == 0) CHECK(s.D(i + 1, i + 1) == 0);
            else CHECK(s.D(i + 1, i + 1) % s.D(i, i) == 0);
        }
        for (int j = 0; j < s.D.cols(); ++j)
            if (j != i) CHECK(s.D(i, j) == 0);
    }
}

}  // namespace

TEST_CASE("snf identity") {
    IntMat a = IntMat::identity(3);
    SmithDecomposition s = snf(a);
    CHECK(s.D == IntMat::identity(3));
    CHECK(s.rank == 3);
}

TEST_CASE("snf 2x2 reference") {
    IntMat a(2, 2, {2, 4, 6, 8});
    SmithDecomposition s = snf(a);
    CHECK(s.D(0, 0) == 2);
    CHECK(s.D(1, 1) == 4);
    check_snf_contract(a);
}

TEST_CASE("snf zero matrix") {
    IntMat a(2, 3);
    SmithDecomposition s = snf(a);
    CHECK(s.rank == 0);
    CHECK(s.D.is_zero());
}

TEST_CASE("kernel examples") {
    {
        IntMat a(1, 2, {1, 1});
        IntMat k = kernel(a);
        REQUIRE(k.cols() == 1);
        CHECK((a * k).is_zero());
        CHECK(iabs(k(0, 0)) == 1);
        CHECK(k(0, 0) + k(1, 0) == 0);
    }
    {
        IntMat a(1, 1, {2});
        CHECK(kernel(a).cols() == 0);
    }
    {
        IntMat a(1, 3, {1, 2, 3});
        IntMat k = kernel(a);
        REQUIRE(k.cols() == 2);
        CHECK((a * k).is_zero());
        // saturation: the kernel lattice must be primitive, i.e. index one in
        // its rational span intersected with Z^3
        Saturation sat = saturate_rows(k.transpose());
        CHECK(sat.index == 1);
        CHECK(sat.rank == 2);
    }
}

TEST_CASE("cokernel examples") {
    CHECK(cokernel_factors(IntMat::identity(4)).empty());
    {
        IntMat a(1, 1, {3});
        auto f = cokernel_factors(a);
        REQUIRE(f.size() == 1);
        CHECK(f[0] == 3);
    }
    {
        IntMat a(2, 2, {2, 4, 6, 8});
        auto f = cokernel_factors(a);
        REQUIRE(f.size() == 2);
        CHECK(f[0] == 2);
        CHECK(f[1] == 4);
    }
}

TEST_CASE("saturation examples") {
    {
        IntMat g(1, 2, {2, 0});
        Saturation s = saturate_rows(g);
        CHECK(s.rank == 1);
        CHECK(s.index == 2);
        CHECK(iabs(s.basis(0, 0)) == 1);
        CHECK(s.basis(0, 1) == 0);
    }
    {
        IntMat g(1, 2, {1, 1});
        Saturation s = saturate_rows(g);
        CHECK(s.rank == 1);
        CHECK(s.index == 1);
    }
    {
        IntMat g(2, 2, {2, 2, 0, 4});
        Saturation s = saturate_rows(g);
        CHECK(s.rank == 2);
        CHECK(s.index == 8);
    }
}

TEST_CASE("solve") {
    IntMat a(2, 2, {2, 0, 0, 3});
    auto x = solve(a, {4, 9});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 3);
    CHECK(!solve(a, {1, 0}).has_value());
}

TEST_CASE("hnf canonical") {
    IntMat a(2, 2, {2, 4, 6, 8});
    IntMat h1 = hnf_rows(a);
    IntMat a2(2, 2, {6, 8, 2, 4});  // same row lattice, permuted input
    IntMat h2 = hnf_rows(a2);
    CHECK(h1 == h2);
}

TEST_CASE("random snf contract + cokernel invariance") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 500; ++iter) {
        IntMat a = random_matrix(rng, 6, 20);
        check_snf_contract(a);
        // cokernel invariant under unimodular row/column changes
        SmithDecomposition s = snf(a);
        IntMat b = s.U * a;  // unimodular row change
        CHECK(cokernel_factors(a) == cokernel_factors(b));
        IntMat c = a * s.V;
        CHECK(cokernel_factors(a) == cokernel_factors(c));
    }
}

TEST_CASE("primitive normalization") {
    auto v = primitive({Int(-4), Int(6), Int(-2)});
    CHECK(v[0] == 2);
    CHECK(v[1] == -3);
    CHECK(v[2] == 1);
}
