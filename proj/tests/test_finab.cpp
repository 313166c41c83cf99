#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "siegel/finab.hpp"

#include <random>
#include <set>
#include <vector>

using namespace siegel;

namespace {

// Element-level model of a finite abelian group for oracle computations.
struct Elems {
    std::vector<Int> mod;
    std::vector<std::vector<Int>> all;

    explicit Elems(const std::vector<Int>& m) : mod(m) {
        std::vector<Int> cur(m.size(), Int(0));
        while (true) {
            all.push_back(cur);
            size_t i = 0;
            while (i < m.size() && ++cur[i] == m[i]) cur[i++] = 0;
            if (i == m.size()) break;
        }
    }
};

std::vector<Int> add_mod(const std::vector<Int>& a, const std::vector<Int>& b,
                         const std::vector<Int>& mod) {
    std::vector<Int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % mod[i];
    return r;
}

std::vector<Int> sub_mod(const std::vector<Int>& a, const std::vector<Int>& b,
                         const std::vector<Int>& mod) {
    std::vector<Int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = ((a[i] - b[i]) % mod[i] + mod[i]) % mod[i];
    return r;
}

std::set<std::vector<Int>> subgroup_elements(const Subgroup& h) {
    Elems amb(h.mod);
    std::set<std::vector<Int>> out;
    std::vector<std::vector<Int>> frontier = {std::vector<Int>(h.mod.size(), Int(0))};
    out.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<std::vector<Int>> next;
        for (const auto& x : frontier)
            for (int j = 0; j < h.gens.cols(); ++j) {
                std::vector<Int> gcol(h.mod.size());
                for (size_t i = 0; i < h.mod.size(); ++i)
                    gcol[i] = ((h.gens(static_cast<int>(i), j)) % h.mod[i] + h.mod[i]) % h.mod[i];
                auto y = add_mod(x, gcol, h.mod);
                if (out.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return out;
}

// Pair-enumeration oracle for the four-node square limit: kernels
// (H1, H2, H, H') with edges H1->H, H1->H', H2->H, H2->H'. Classes modulo
// H1 x H2 all have the same size, so counting pairs suffices.
Int square_limit_order_oracle(const std::vector<Int>& mod, const Subgroup& h1, const Subgroup& h2,
                              const Subgroup& h, const Subgroup& hp) {
    Elems amb(mod);
    auto hset = subgroup_elements(h);
    auto hpset = subgroup_elements(hp);
    Int pairs = 0;
    for (const auto& b1 : amb.all)
        for (const auto& b2 : amb.all) {
            auto d = sub_mod(b1, b2, mod);
            if (hset.count(d) && hpset.count(d)) ++pairs;
        }
    return pairs / (h1.order() * h2.order());
}

std::vector<std::pair<int, int>> square_edges() {
    // nodes: 0 = B/H1, 1 = B/H2, 2 = B/H, 3 = B/H'
    return {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
}

}  // namespace

TEST_CASE("subgroup basics") {
    std::vector<Int> mod = {Int(4), Int(8)};
    Subgroup whole = Subgroup::whole(mod);
    CHECK(whole.order() == 32);
    Subgroup zero = Subgroup::zero(mod);
    CHECK(zero.order() == 1);
    IntMat g(2, 1, {2, 0});
    Subgroup h{mod, g};
    CHECK(h.order() == 2);
    CHECK(h.contains({Int(2), Int(0)}));
    CHECK(!h.contains({Int(1), Int(0)}));
    auto q = h.quotient_of_ambient();
    CHECK(q.order() == 16);
}

TEST_CASE("sum and intersection") {
    std::vector<Int> mod = {Int(2), Int(2)};
    IntMat g1(2, 1, {1, 0}), g2(2, 1, {0, 1});
    Subgroup a{mod, g1}, b{mod, g2};
    CHECK(a.sum(b).order() == 4);
    CHECK(a.intersection(b).order() == 1);
    CHECK(a.intersection(a).order() == 2);
}

TEST_CASE("square limit: Z/4 with H=H'=2Z/4") {
    std::vector<Int> mod = {Int(4)};
    Subgroup h1 = Subgroup::zero(mod), h2 = Subgroup::zero(mod);
    IntMat two(1, 1, {2});
    Subgroup h{mod, two}, hp{mod, two};
    auto lim = quotient_diagram_limit(mod, {h1, h2, h, hp}, square_edges());
    CHECK(lim.group.order() == 8);
    CHECK(square_limit_order_oracle(mod, h1, h2, h, hp) == 8);
}

TEST_CASE("square limit: diagonal case H1=H2=H=H'=0") {
    std::vector<Int> mod = {Int(6)};
    Subgroup z = Subgroup::zero(mod);
    auto lim = quotient_diagram_limit(mod, {z, z, z, z}, square_edges());
    CHECK(lim.group.order() == 6);  // diagonal copy of B
}

TEST_CASE("square limit: Klein four with complementary lines") {
    std::vector<Int> mod = {Int(2), Int(2)};
    IntMat g1(2, 1, {1, 0}), g2(2, 1, {0, 1});
    Subgroup h1{mod, g1}, h2{mod, g2};
    Subgroup h = Subgroup::whole(mod), hp = Subgroup::whole(mod);
    auto lim = quotient_diagram_limit(mod, {h1, h2, h, hp}, square_edges());
    // |B/(H1 cap H2)| * |(H cap H')/(H1+H2)| = 4 * 1
    CHECK(lim.group.order() == 4);
    CHECK(square_limit_order_oracle(mod, h1, h2, h, hp) == 4);
}

TEST_CASE("edge map must be well-defined") {
    std::vector<Int> mod = {Int(4)};
    IntMat two(1, 1, {2});
    Subgroup h{mod, two}, z = Subgroup::zero(mod);
    // edge B/H -> B/0 is not well-defined
    CHECK_THROWS(quotient_diagram_limit(mod, {h, z}, {{0, 1}}));
}

TEST_CASE("order identity on random instances") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> nf(1, 3);
    std::vector<Int> pool = {Int(2), Int(2), Int(4), Int(3), Int(8), Int(6), Int(2)};
    int done = 0;
    while (done < 200) {
        int k = nf(rng);
        std::vector<Int> mod;
        Int order = 1;
        for (int i = 0; i < k; ++i) {
            Int f = pool[rng() % pool.size()];
            mod.push_back(f);
            order *= f;
        }
        if (order > 256) continue;
        auto rand_subgroup = [&](int maxgens) {
            IntMat g(static_cast<int>(mod.size()), maxgens);
            for (int i = 0; i < g.rows(); ++i)
                for (int j = 0; j < g.cols(); ++j) g(i, j) = Int(static_cast<long>(rng() % 8));
            return Subgroup{mod, g};
        };
        Subgroup h1 = rand_subgroup(static_cast<int>(rng() % 2));
        Subgroup h2 = rand_subgroup(static_cast<int>(rng() % 2));
        Subgroup sum12 = h1.sum(h2);
        // enlarge H, H' until they contain H1+H2
        Subgroup h = sum12.sum(rand_subgroup(1));
        Subgroup hp = sum12.sum(rand_subgroup(1));
        REQUIRE(h.contains(sum12));
        REQUIRE(hp.contains(sum12));

        auto lim = quotient_diagram_limit(mod, {h1, h2, h, hp}, square_edges());
        Subgroup meet = h.intersection(hp);
        // |P| = |B/(H1 cap H2)| * |(H cap H')/(H1 + H2)|
        Int formula =
            h1.intersection(h2).quotient_of_ambient().order() * (meet.order() / sum12.order());
        CHECK(lim.group.order() == formula);
        CHECK(square_limit_order_oracle(mod, h1, h2, h, hp) == lim.group.order());
        ++done;
    }
}
