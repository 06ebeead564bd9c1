#ifndef TIGHTPART_GRAPH_HPP
#define TIGHTPART_GRAPH_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tightpart {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // sorted ascending unless noted
using Edge = std::pair<Vertex, Vertex>;

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Immutable simple undirected graph in CSR form. Vertex ids are dense
// 0..n-1 and neighbor lists are sorted ascending, which keeps every
// algorithm downstream deterministic.
class Graph {
public:
    Graph() = default;

    // Collapses duplicate edges; rejects self-loops and out-of-range ids.
    static Graph build(Vertex n, std::span<const Edge> edges);
    static Graph build(Vertex n, std::initializer_list<Edge> edges);

    Vertex num_vertices() const { return n_; }
    long long num_edges() const { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(Vertex u, Vertex v) const;
    int max_degree() const;

    // Induced subgraph on the given vertices plus the new-id -> old-id map
    // (new ids follow ascending old ids; duplicates are collapsed).
    std::pair<Graph, VertexSet> induced(std::span<const Vertex> vertices) const;

    // Maximal connected vertex sets, each sorted, ordered by minimum id.
    std::vector<VertexSet> connected_components() const;

private:
    Vertex n_ = 0;
    long long m_ = 0;
    std::vector<int> offsets_ = {0};
    std::vector<Vertex> adj_;
};

struct InstanceParams {
    int delta;  // >= 3
};

// Why an instance is not a valid input for the pipeline.
struct Violation {
    enum class Kind { DeltaTooSmall, DegreeTooHigh, CliqueTooLarge };
    Kind kind;
    VertexSet vertices;  // offending vertex (degree) or clique vertex set
    std::string describe() const;
};

// Checks max degree <= delta and that no clique on delta+1 vertices exists.
// The clique test only looks inside closed neighborhoods: a (delta+1)-clique
// in a graph of max degree delta is exactly the closed neighborhood of a
// degree-delta vertex whose neighbors are pairwise adjacent.
std::optional<Violation> validate_instance(const Graph& g, const InstanceParams& p);

// Throws GraphError when the instance is invalid.
void require_valid_instance(const Graph& g, int delta);

}  // namespace tightpart

#endif
