#include "siegel/finab.hpp"

#include <algorithm>

namespace siegel {

FinAbGroup FinAbGroup::from_factors(std::vector<Int> f) {
    std::vector<Int> tors, frees;
    for (Int& x : f) {
        if (x < 0) x = -x;
        if (x == 0)
            frees.push_back(x);
        else if (x > 1)
            tors.push_back(x);
    }
    // Torsion factors coming from SNF are already in divisibility order;
    // normalize defensively so equality of groups is equality of factor lists.
    std::sort(tors.begin(), tors.end());
    for (size_t i = 0; i + 1 < tors.size(); ++i)
        check(tors[i + 1] % tors[i] == 0, "FinAbGroup: factors violate divisibility");
    FinAbGroup g;
    g.factors = tors;
    g.factors.insert(g.factors.end(), frees.begin(), frees.end());
    return g;
}

Int FinAbGroup::order() const {
    check(is_finite(), "FinAbGroup::order: group is infinite");
    Int o = 1;
    for (const Int& f : factors) o *= f;
    return o;
}

bool Subgroup::contains(const std::vector<Int>& v) const {
    return in_column_span(relation_matrix(), v);
}

bool Subgroup::contains(const Subgroup& other) const {
    IntMat rel = relation_matrix();
    for (int j = 0; j < other.gens.cols(); ++j)
        if (!in_column_span(rel, other.gens.col(j))) return false;
    return true;
}

Int Subgroup::ambient_order() const {
    Int o = 1;
    for (const Int& m : mod) {
        check(m > 0, "Subgroup: ambient must be finite");
        o *= m;
    }
    return o;
}

FinAbGroup Subgroup::quotient_of_ambient() const {
    return FinAbGroup::from_presentation(relation_matrix());
}

Int Subgroup::order() const {
    return ambient_order() / quotient_of_ambient().order();
}

Subgroup Subgroup::sum(const Subgroup& other) const {
    check(mod == other.mod, "Subgroup::sum: ambient mismatch");
    return Subgroup{mod, gens.hstack(other.gens)};
}

Subgroup Subgroup::intersection(const Subgroup& other) const {
    check(mod == other.mod, "Subgroup::intersection: ambient mismatch");
    // x = G a = H b (mod n): solve [G | -H | diag(n)] (a,b,t) = 0 and read
    // off G a on the kernel basis.
    IntMat M = gens.hstack(-other.gens).hstack(IntMat::diag(mod));
    IntMat K = kernel(M);
    IntMat Ka = K.submatrix(0, 0, gens.cols(), K.cols());
    return Subgroup{mod, gens * Ka};
}

QuotientDiagramLimit quotient_diagram_limit(const std::vector<Int>& mod,
                                            const std::vector<Subgroup>& kernels,
                                            const std::vector<std::pair<int, int>>& edges) {
    const int k = static_cast<int>(mod.size());
    const int nv = static_cast<int>(kernels.size());
    check(nv > 0, "limit: empty diagram");
    for (const auto& s : kernels) check(s.mod == mod, "limit: node ambient mismatch");
    for (auto [a, b] : edges) {
        check(a >= 0 && a < nv && b >= 0 && b < nv, "limit: bad edge");
        // Edge B/K_a -> B/K_b is well-defined iff K_a <= K_b.
        if (!kernels[b].contains(kernels[a]))
            fail("limit: edge map not well-defined on quotients");
    }

    std::vector<IntMat> lam;  // Lambda_v = K_v generators + mod relations, in Z^k
    lam.reserve(kernels.size());
    for (const auto& s : kernels) lam.push_back(s.relation_matrix());

    // Tuple lattice L = {(x_v) : x_a - x_b in Lambda_b for every edge},
    // obtained as the x-projection of the kernel of the edge constraint
    // system x_a - x_b - Lambda_b t_e = 0.
    int tcols = 0;
    for (const auto& e : edges) tcols += lam[e.second].cols();
    IntMat M(static_cast<int>(edges.size()) * k, k * nv + tcols);
    int row = 0, tofs = k * nv;
    for (const auto& e : edges) {
        const IntMat& L = lam[e.second];
        for (int i = 0; i < k; ++i) {
            M(row + i, e.first * k + i) += 1;
            M(row + i, e.second * k + i) -= 1;
            for (int j = 0; j < L.cols(); ++j) M(row + i, tofs + j) = -L(i, j);
        }
        row += k;
        tofs += L.cols();
    }
    IntMat Mker = kernel(M);
    IntMat Lgens = Mker.submatrix(0, 0, k * nv, Mker.cols());

    // Denominator: per-node Lambda_v placed in its block. Such tuples lie in
    // L because Lambda_a <= Lambda_b along every edge.
    IntMat R(k * nv, 0);
    for (int v = 0; v < nv; ++v) {
        IntMat block(k * nv, lam[v].cols());
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < lam[v].cols(); ++j) block(v * k + i, j) = lam[v](i, j);
        R = R.hstack(block);
    }

    SmithDecomposition sL = snf(Lgens);
    int rk = sL.rank;
    IntMat basis(k * nv, rk);
    for (int c = 0; c < rk; ++c)
        for (int i = 0; i < k * nv; ++i) basis(i, c) = sL.Uinv(i, c) * sL.D(c, c);
    IntMat coords(rk, R.cols());
    for (int c = 0; c < R.cols(); ++c) {
        auto sol = solve(basis, R.col(c));
        check(sol.has_value(), "limit: denominator outside tuple lattice");
        for (int i = 0; i < rk; ++i) coords(i, c) = (*sol)[i];
    }

    QuotientDiagramLimit out;
    out.group = FinAbGroup::from_presentation(coords);
    out.generators = basis;
    return out;
}

}  // namespace siegel
