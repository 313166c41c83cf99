#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "siegel/diagram.hpp"

#include <random>

using namespace siegel;

TEST_CASE("single free node") {
    LatticeDiagram d;
    d.add_node(3);
    Colimit c = colimit(d);
    CHECK(c.is_free);
    CHECK(c.free_rank == 3);
    CHECK(c.group.free_rank() == 3);
}

TEST_CASE("pushout along multiplication by p") {
    LatticeDiagram d;
    int src = d.add_node(1), tgt = d.add_node(1);
    d.add_edge(src, tgt, IntMat(1, 1, {3}));
    Colimit c = colimit(d);
    CHECK(c.is_free);
    CHECK(c.free_rank == 1);
    auto src_class = c.node_class(d, src, 0);
    auto tgt_class = c.node_class(d, tgt, 0);
    REQUIRE(src_class.size() == 1);
    CHECK(src_class[0] == 3 * tgt_class[0]);
    CHECK(iabs(tgt_class[0]) == 1);
}

TEST_CASE("coequalizer of parallel maps introduces torsion") {
    // Z -> Z by 1 and by 4: colimit Z/3... presentation <x - y, x - 4y> = Z/3
    LatticeDiagram d;
    int a = d.add_node(1), b = d.add_node(1);
    d.add_edge(a, b, IntMat(1, 1, {1}));
    d.add_edge(a, b, IntMat(1, 1, {4}));
    Colimit c = colimit(d);
    CHECK(!c.is_free);
    REQUIRE(c.group.factors.size() == 1);
    CHECK(c.group.factors[0] == 3);
}

TEST_CASE("two-node diagram duality smoke check") {
    // free rank of colimit of f equals corank, torsion = cokernel torsion
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dim(1, 4);
    std::uniform_int_distribution<long> val(-6, 6);
    for (int it = 0; it < 100; ++it) {
        int rs = dim(rng), rt = dim(rng);
        IntMat f(rt, rs);
        for (int i = 0; i < rt; ++i)
            for (int j = 0; j < rs; ++j) f(i, j) = val(rng);
        LatticeDiagram d;
        int a = d.add_node(rs), b = d.add_node(rt);
        d.add_edge(a, b, f);
        Colimit c = colimit(d);
        SmithDecomposition s = snf(f);
        CHECK(c.free_rank == rt - s.rank);
        std::vector<Int> tors;
        for (int i = 0; i < s.rank; ++i)
            if (s.D(i, i) > 1) tors.push_back(s.D(i, i));
        CHECK(c.torsion == tors);
    }
}

TEST_CASE("universal property on random diagrams") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> nn(2, 4), rk(1, 3), ne(1, 5);
    std::uniform_int_distribution<long> val(-4, 4);
    for (int it = 0; it < 100; ++it) {
        LatticeDiagram d;
        int n = nn(rng);
        for (int v = 0; v < n; ++v) d.add_node(rk(rng));
        int m = ne(rng);
        for (int e = 0; e < m; ++e) {
            int s = static_cast<int>(rng() % n), t = static_cast<int>(rng() % n);
            IntMat f(d.ranks[t], d.ranks[s]);
            for (int i = 0; i < f.rows(); ++i)
                for (int j = 0; j < f.cols(); ++j) f(i, j) = val(rng);
            d.add_edge(s, t, f);
        }
        Colimit c = colimit(d);
        // composing node inclusion with the quotient agrees across every edge
        for (const auto& e : d.edges)
            for (int j = 0; j < d.ranks[e.src]; ++j) {
                std::vector<Int> x(d.ranks[e.src], Int(0));
                x[j] = 1;
                auto lhs = c.full_class(d, e.src, x);
                auto rhs = c.full_class(d, e.tgt, e.map.apply(x));
                CHECK(lhs == rhs);
            }
    }
}
