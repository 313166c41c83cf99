#pragma once

#include "siegel/finab.hpp"

#include <vector>

namespace siegel {

// Finite diagram of free Z-modules. Edge matrices have shape
// (rank of target) x (rank of source); parallel edges are allowed.
struct LatticeDiagram {
    std::vector<int> ranks;
    struct Edge {
        int src, tgt;
        IntMat map;
    };
    std::vector<Edge> edges;

    int add_node(int rank) {
        ranks.push_back(rank);
        return static_cast<int>(ranks.size()) - 1;
    }
    void add_edge(int src, int tgt, IntMat m) {
        check(src >= 0 && src < static_cast<int>(ranks.size()), "diagram: bad edge source");
        check(tgt >= 0 && tgt < static_cast<int>(ranks.size()), "diagram: bad edge target");
        check(m.rows() == ranks[tgt] && m.cols() == ranks[src], "diagram: edge shape mismatch");
        edges.push_back({src, tgt, std::move(m)});
    }
    int total_rank() const {
        int t = 0;
        for (int r : ranks) t += r;
        return t;
    }
    int offset(int node) const {
        int t = 0;
        for (int v = 0; v < node; ++v) t += ranks[v];
        return t;
    }
};

// Colimit presented as (direct sum of nodes) / <x - f(x) over all edges>.
struct Colimit {
    FinAbGroup group;
    bool is_free = false;
    // Class map on the ambient direct sum: columns indexed by the stacked
    // node coordinates. Rows: first the torsion coordinates (mod `torsion`),
    // then free coordinates.
    IntMat class_map;
    std::vector<Int> torsion;  // invariant factors > 1, aligned with leading rows
    int free_rank = 0;

    // Image of a node basis vector in the free part (valid when is_free).
    std::vector<Int> node_class(const LatticeDiagram& d, int node, int j) const {
        int col = d.offset(node) + j;
        std::vector<Int> v(class_map.rows());
        for (int i = 0; i < class_map.rows(); ++i) v[i] = class_map(i, col);
        return v;
    }
    // Free-part coordinates of a vector in node `node`.
    std::vector<Int> free_class(const LatticeDiagram& d, int node,
                                const std::vector<Int>& x) const {
        int ofs = d.offset(node);
        int nt = static_cast<int>(torsion.size());
        std::vector<Int> out(free_rank, Int(0));
        for (int i = 0; i < free_rank; ++i)
            for (size_t j = 0; j < x.size(); ++j)
                out[i] += class_map(nt + i, ofs + static_cast<int>(j)) * x[j];
        return out;
    }
    // Full class (torsion coordinates reduced, then free part).
    std::vector<Int> full_class(const LatticeDiagram& d, int node,
                                const std::vector<Int>& x) const {
        int ofs = d.offset(node);
        std::vector<Int> out(class_map.rows(), Int(0));
        for (int i = 0; i < class_map.rows(); ++i)
            for (size_t j = 0; j < x.size(); ++j)
                out[i] += class_map(i, ofs + static_cast<int>(j)) * x[j];
        for (size_t i = 0; i < torsion.size(); ++i) {
            out[i] %= torsion[i];
            if (out[i] < 0) out[i] += torsion[i];
        }
        return out;
    }
};

Colimit colimit(const LatticeDiagram& d);

}  // namespace siegel
