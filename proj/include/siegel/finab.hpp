#pragma once

#include "siegel/snf.hpp"

#include <optional>
#include <vector>

namespace siegel {

// Finitely generated abelian group in invariant-factor form: factors
// n_1 | n_2 | ... with n_i > 1, followed by one 0 per free summand.
struct FinAbGroup {
    std::vector<Int> factors;

    static FinAbGroup from_factors(std::vector<Int> f);
    static FinAbGroup trivial() { return FinAbGroup{}; }
    static FinAbGroup from_presentation(const IntMat& rel) {
        return from_factors(cokernel_factors(rel));
    }

    int free_rank() const {
        int r = 0;
        for (const Int& f : factors)
            if (f == 0) ++r;
        return r;
    }
    bool is_finite() const { return free_rank() == 0; }
    bool is_free() const {
        for (const Int& f : factors)
            if (f != 0) return false;
        return true;
    }
    bool is_trivial() const { return factors.empty(); }
    Int order() const;  // product of factors; fails on infinite groups
    int ngens() const { return static_cast<int>(factors.size()); }

    bool operator==(const FinAbGroup& o) const { return factors == o.factors; }
};

// A subgroup of the finite group with invariant factors `mod`, given by a
// generator list (columns of `gens`, entries taken mod the factors).
// Membership and orders go through Smith normal form of [gens | diag(mod)].
struct Subgroup {
    std::vector<Int> mod;  // ambient invariant factors, all > 0
    IntMat gens;           // k x m, columns generate

    static Subgroup zero(const std::vector<Int>& mod) {
        return Subgroup{mod, IntMat(static_cast<int>(mod.size()), 0)};
    }
    static Subgroup whole(const std::vector<Int>& mod) {
        return Subgroup{mod, IntMat::diag(std::vector<Int>(mod.size(), Int(1)))};
    }

    int ambient_rank() const { return static_cast<int>(mod.size()); }

    IntMat relation_matrix() const {  // [gens | diag(mod)]
        return gens.hstack(IntMat::diag(mod));
    }

    bool contains(const std::vector<Int>& v) const;
    bool contains(const Subgroup& other) const;
    Int order() const;
    Int ambient_order() const;
    FinAbGroup quotient_of_ambient() const;  // ambient / this

    Subgroup sum(const Subgroup& other) const;
    Subgroup intersection(const Subgroup& other) const;
};

struct QuotientDiagramLimit {
    FinAbGroup group;
    // Generators of the limit as tuples: columns live in the product of the
    // node ambients (one block of rows per node).
    IntMat generators;
};

// Limit of a finite diagram whose nodes are quotients B/K_v of one ambient
// finite group B (invariant factors `mod`) and whose edges are induced by
// the identity of B. Rejects edges with K_src not contained in K_tgt.
QuotientDiagramLimit quotient_diagram_limit(const std::vector<Int>& mod,
                                            const std::vector<Subgroup>& kernels,
                                            const std::vector<std::pair<int, int>>& edges);

}  // namespace siegel
