#ifndef TIGHTPART_DECOMPOSE_HPP
#define TIGHTPART_DECOMPOSE_HPP

#include "tightpart/catalog.hpp"
#include "tightpart/graph.hpp"

namespace tightpart {

// Partition of V(G) into A0|A1|A2|A3|B|C|D with the guarantees:
//   - G[A] (A = A0|A1|A2|A3) is tightly partitioned by tight_pieces plus the
//     clique parts lying in A3,
//   - G[B] is partitioned into cliques of size delta and
//     |B| <= 3*delta*(|C|+|D|),
//   - C is removable as the ordered profitable nibbles C_1..C_r,
//   - D is delta-free in G-C (for delta = 3: splits into free diamonds and
//     3-free vertices),
//   - alpha(G) = alpha(G[B|C|D]) + |A|/delta.
struct Decomposition {
    VertexSet a0, a1, a2, a3, b, c, d;      // sorted
    std::vector<VertexSet> nibbles;         // ordered, union is c
    std::vector<TightPiece> tight_pieces;   // covers a0|a1|a2
    std::vector<VertexSet> clique_parts;    // covers a3 and b

    VertexSet a() const;  // a0|a1|a2|a3 merged, sorted
    VertexSet residual() const;  // b|c|d merged, sorted
};

// Runs the full pipeline. Deterministic; throws GraphError on an invalid
// instance (degree or clique bound violated, delta < 3).
Decomposition decompose(const Graph& g, int delta);

}  // namespace tightpart

#endif
