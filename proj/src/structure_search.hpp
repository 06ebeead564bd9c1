#ifndef TIGHTPART_STRUCTURE_SEARCH_HPP
#define TIGHTPART_STRUCTURE_SEARCH_HPP

// Local pattern matchers shared by the catalog, nibble and decomposition
// passes. Everything here works on a host graph plus an aliveness mask so
// residual graphs never have to be materialized; all outputs use host ids.

#include <optional>
#include <span>
#include <vector>

#include "tightpart/catalog.hpp"
#include "tightpart/graph.hpp"

namespace tightpart::detail {

// Host graph restricted to alive vertices. alive == nullptr means all alive.
struct View {
    const Graph* g;
    const std::vector<char>* alive = nullptr;

    bool is_alive(Vertex v) const { return !alive || (*alive)[v]; }
    bool edge(Vertex u, Vertex v) const { return is_alive(u) && is_alive(v) && g->has_edge(u, v); }
    int degree(Vertex v) const;
    void neighbors_into(Vertex v, std::vector<Vertex>& out) const;
    std::vector<Vertex> neighbors(Vertex v) const;
    // The alive neighbor of v outside `exclude`, if it is unique.
    std::optional<Vertex> other_neighbor(Vertex v, std::span<const Vertex> exclude) const;
};

// K4 minus one edge; hubs are the adjacent degree-3 pair, tips the rest.
struct Diamond {
    Vertex hub1, hub2;  // hub1 < hub2
    Vertex tip1, tip2;  // tip1 < tip2
    VertexSet vertices() const;
    bool operator==(const Diamond&) const = default;
};

// True when `tuple` (all alive, pairwise distinct) induces exactly the
// canonical graph under the positional correspondence tuple[i] <-> i.
bool matches_canonical(const View& view, std::span<const Vertex> tuple, const Graph& canon);

// Vertices within BFS distance <= radius of v, ascending.
VertexSet ball(const View& view, Vertex v, int radius);

bool in_triangle(const View& view, Vertex v);
void triangles_through(const View& view, Vertex v, std::vector<VertexSet>& out);
void diamonds_through(const View& view, Vertex v, std::vector<Diamond>& out);
bool in_diamond(const View& view, Vertex v);

// All cliques of size `size` containing v, each sorted. `require_min` keeps
// only cliques whose minimum vertex is v (dedupe during whole-graph scans).
void cliques_through(const View& view, Vertex v, int size, bool require_min,
                     std::vector<VertexSet>& out);
bool in_clique_of_size(const View& view, Vertex v, int size);

struct PatternMatch {
    TightKind kind;
    VertexSet vertices;  // sorted
};

// Necklaces (diamond and Havel) an alive diamond extends to.
std::vector<PatternMatch> necklaces_from_diamond(const View& view, const Diamond& d);
// Havel necklaces without a diamond, seeded from one of their triangles.
std::vector<PatternMatch> havel1_from_triangle(const View& view, std::span<const Vertex> tri);
std::vector<PatternMatch> td6c_from_triangle(const View& view, std::span<const Vertex> tri);
// Delta = 4 attachments-of-a-K4 patterns.
std::optional<VertexSet> extended_clique_from_k4(const View& view, std::span<const Vertex> k4);
std::optional<VertexSet> extended_double_clique_from_k4(const View& view,
                                                        std::span<const Vertex> k4);
// Regular catalog graphs located by an anchor vertex.
bool in_c8_squared(const View& view, Vertex v);
bool in_c5_box_k2(const View& view, Vertex v);

// Membership of v in any tight induced subgraph of the (residual) graph.
bool vertex_in_tight(const View& view, Vertex v, int delta);

// Nibble pattern containing `seed`, or nullopt. For delta >= 4 this is the
// clique on delta+1 vertices minus one edge; for delta = 3 it is one of the
// two shapes built from diamond necklaces sharing an edge (10 vertices) or a
// diamond necklace sharing an edge with a triangle (7 vertices).
std::optional<VertexSet> nibble_pattern_at(const View& view, Vertex seed, int delta);

// Canonical graphs of the two delta = 3 nibble shapes.
const Graph& nibble_shape10();
const Graph& nibble_shape7();

// Cached canonical catalog graph (defined in catalog.cpp).
const Graph& canonical_graph(TightKind kind, int delta);

}  // namespace tightpart::detail

#endif
