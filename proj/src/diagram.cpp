#include "siegel/diagram.hpp"

namespace siegel {

Colimit colimit(const LatticeDiagram& d) {
    const int T = d.total_rank();
    int ecols = 0;
    for (const auto& e : d.edges) ecols += d.ranks[e.src];

    // One relation column per (edge, source basis vector): x - f(x).
    IntMat R(T, ecols);
    int c = 0;
    for (const auto& e : d.edges) {
        int so = d.offset(e.src), to = d.offset(e.tgt);
        for (int j = 0; j < d.ranks[e.src]; ++j, ++c) {
            R(so + j, c) += 1;
            for (int i = 0; i < d.ranks[e.tgt]; ++i) R(to + i, c) -= e.map(i, j);
        }
    }

    SmithDecomposition s = snf(R);
    Colimit out;
    out.group = FinAbGroup::from_factors(cokernel_factors(R));
    out.is_free = out.group.is_free();
    out.free_rank = T - s.rank;

    // Classes via z -> U z: coordinate i < rank is taken mod d_i (trivial for
    // d_i = 1), the remaining coordinates are a basis of the free part.
    std::vector<int> tors_rows;
    for (int i = 0; i < s.rank; ++i)
        if (s.D(i, i) > 1) {
            tors_rows.push_back(i);
            out.torsion.push_back(s.D(i, i));
        }
    out.class_map = IntMat(static_cast<int>(tors_rows.size()) + out.free_rank, T);
    for (size_t r = 0; r < tors_rows.size(); ++r)
        for (int j = 0; j < T; ++j) out.class_map(static_cast<int>(r), j) = s.U(tors_rows[r], j);
    for (int r = 0; r < out.free_rank; ++r)
        for (int j = 0; j < T; ++j)
            out.class_map(static_cast<int>(tors_rows.size()) + r, j) = s.U(s.rank + r, j);
    return out;
}

}  // namespace siegel
