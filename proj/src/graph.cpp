#include "tightpart/graph.hpp"

#include <algorithm>
#include <queue>

namespace tightpart {

Graph Graph::build(Vertex n, std::span<const Edge> edges) {
    if (n < 0)
        throw GraphError("vertex count must be non-negative");
    std::vector<Edge> norm;
    norm.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge endpoint out of range: (" + std::to_string(u) + "," +
                             std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw GraphError("self-loop at vertex " + std::to_string(u));
        norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

    Graph g;
    g.n_ = n;
    g.m_ = static_cast<long long>(norm.size());
    std::vector<int> deg(n, 0);
    for (auto [u, v] : norm) {
        ++deg[u];
        ++deg[v];
    }
    g.offsets_.assign(n + 1, 0);
    for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adj_.resize(g.offsets_[n]);
    std::vector<int> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : norm) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    for (Vertex v = 0; v < n; ++v)
        std::sort(g.adj_.begin() + g.offsets_[v], g.adj_.begin() + g.offsets_[v + 1]);
    return g;
}

Graph Graph::build(Vertex n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::pair<Graph, VertexSet> Graph::induced(std::span<const Vertex> vertices) const {
    VertexSet keep(vertices.begin(), vertices.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (Vertex v : keep)
        if (v < 0 || v >= n_)
            throw GraphError("induced subgraph vertex out of range: " + std::to_string(v));

    std::vector<Vertex> new_id(n_, -1);
    for (size_t i = 0; i < keep.size(); ++i) new_id[keep[i]] = static_cast<Vertex>(i);

    std::vector<Edge> edges;
    for (Vertex v : keep)
        for (Vertex w : neighbors(v))
            if (v < w && new_id[w] >= 0) edges.emplace_back(new_id[v], new_id[w]);
    return {build(static_cast<Vertex>(keep.size()), edges), keep};
}

std::vector<VertexSet> Graph::connected_components() const {
    std::vector<VertexSet> comps;
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> queue;
    for (Vertex root = 0; root < n_; ++root) {
        if (seen[root]) continue;
        queue.clear();
        queue.push_back(root);
        seen[root] = 1;
        for (size_t head = 0; head < queue.size(); ++head)
            for (Vertex w : neighbors(queue[head]))
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        VertexSet comp(queue.begin(), queue.end());
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::string Violation::describe() const {
    auto list = [this] {
        std::string s;
        for (size_t i = 0; i < vertices.size(); ++i)
            s += (i ? "," : "") + std::to_string(vertices[i]);
        return s;
    };
    switch (kind) {
        case Kind::DeltaTooSmall:
            return "delta must be at least 3";
        case Kind::DegreeTooHigh:
            return "vertex " + list() + " exceeds the degree bound";
        case Kind::CliqueTooLarge:
            return "clique {" + list() + "} exceeds the clique bound";
    }
    return "unknown violation";
}

std::optional<Violation> validate_instance(const Graph& g, const InstanceParams& p) {
    if (p.delta < 3) return Violation{Violation::Kind::DeltaTooSmall, {}};
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) > p.delta) return Violation{Violation::Kind::DegreeTooHigh, {v}};
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) != p.delta) continue;
        auto nb = g.neighbors(v);
        bool clique = true;
        for (size_t i = 0; i < nb.size() && clique; ++i)
            for (size_t j = i + 1; j < nb.size() && clique; ++j)
                if (!g.has_edge(nb[i], nb[j])) clique = false;
        if (clique) {
            VertexSet witness(nb.begin(), nb.end());
            witness.push_back(v);
            std::sort(witness.begin(), witness.end());
            return Violation{Violation::Kind::CliqueTooLarge, std::move(witness)};
        }
    }
    return std::nullopt;
}

void require_valid_instance(const Graph& g, int delta) {
    if (auto bad = validate_instance(g, InstanceParams{delta}))
        throw GraphError("invalid instance: " + bad->describe());
}

}  // namespace tightpart
