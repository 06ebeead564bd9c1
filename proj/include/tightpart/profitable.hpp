#ifndef TIGHTPART_PROFITABLE_HPP
#define TIGHTPART_PROFITABLE_HPP

#include <optional>
#include <span>

#include "tightpart/graph.hpp"

namespace tightpart {

// Size cap for nibbles and for the exhaustive profitability check.
inline int nibble_size_limit(int delta) { return std::max(delta + 3, 10); }

// A set Z is delta-profitable when it holds an independent set S whose
// closed neighborhood stays inside Z and |Z| <= delta*|S| - 1. Removing Z
// then costs at most |Z| vertices but gains |S| > |Z|/delta independents.
//
// Exhaustive search over subsets of Z; returns a maximum valid witness S if
// it certifies profitability. Throws GraphError when |Z| exceeds the nibble
// size cap (the search is only meant for nibble-sized sets).
std::optional<VertexSet> check_profitable(const Graph& g, std::span<const Vertex> z, int delta);

// First removable pattern: for delta >= 4 a clique on delta+1 vertices minus
// one edge; for delta = 3 one of the two diamond-necklace sharing shapes.
// Deterministic scan by ascending seed vertex; nullopt when none exists.
std::optional<VertexSet> find_nibble_target(const Graph& g, int delta);

struct NibblePhaseResult {
    VertexSet c;                      // union of all nibbles, sorted
    std::vector<VertexSet> nibbles;   // ordered Z_1..Z_r, each sorted
};

// Repeatedly removes the closed neighborhood of a found pattern until no
// pattern remains. Every emitted nibble is profitable in the residual graph
// it was cut from; this is re-checked and a logic_error raised on failure.
NibblePhaseResult nibble_phase(const Graph& g, int delta);

}  // namespace tightpart

#endif
