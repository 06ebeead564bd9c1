#ifndef TIGHTPART_SOLVER_HPP
#define TIGHTPART_SOLVER_HPP

#include <span>
#include <vector>

#include "tightpart/decompose.hpp"
#include "tightpart/graph.hpp"

namespace tightpart {

inline constexpr int kDefaultExactLimit = 60;

struct SizeLimitError : GraphError {
    int n;
    explicit SizeLimitError(int n_)
        : GraphError("instance with " + std::to_string(n_) +
                     " vertices exceeds the exact-solver size limit"),
          n(n_) {}
};

struct MisResult {
    int size = 0;
    VertexSet witness;  // sorted
};

// Exact maximum independent set by branch and bound, per connected
// component: branch on a maximum-degree vertex, bound with a greedy clique
// cover. Deterministic witness. Throws SizeLimitError when n exceeds limit.
MisResult max_independent_set(const Graph& g, int limit = kDefaultExactLimit);

// Per-vertex admissible colors; colors are positive ints.
using ColorLists = std::vector<std::vector<int>>;

struct ListColoringResult {
    bool ok = false;
    std::vector<int> colors;      // per vertex, valid when ok
    VertexSet failed_component;   // the component that could not be colored
};

// Proper list coloring by per-component backtracking (fewest-remaining-
// colors order). Requires |L(v)| >= deg(v) for every vertex; inputs built by
// the decomposition always admit a coloring, so failure on those signals a
// pipeline bug.
ListColoringResult list_color(const Graph& g, const ColorLists& lists);

// Lifts an independent set of G[B|C|D] to one of G by adding the color-1
// class of a list coloring of G[A] (lists {2..delta} on vertices with a
// neighbor outside A). Result has size |s_residual| + |A|/delta; throws
// logic_error if the coloring fails and invalid_argument if s_residual is
// not independent or leaves B|C|D.
VertexSet extend_solution(const Graph& g, int delta, const Decomposition& dec,
                          std::span<const Vertex> s_residual);

}  // namespace tightpart

#endif
