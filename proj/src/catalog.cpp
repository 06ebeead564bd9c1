#include "tightpart/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "structure_search.hpp"

namespace tightpart {

std::string kind_name(TightKind kind) {
    switch (kind) {
        case TightKind::Clique: return "Clique";
        case TightKind::C5BoxK2: return "C5BoxK2";
        case TightKind::C8Squared: return "C8Squared";
        case TightKind::ExtendedClique: return "ExtendedClique";
        case TightKind::ExtendedDoubleClique: return "ExtendedDoubleClique";
        case TightKind::DiamondNecklace1: return "DiamondNecklace1";
        case TightKind::DiamondNecklace2: return "DiamondNecklace2";
        case TightKind::DiamondNecklace3: return "DiamondNecklace3";
        case TightKind::HavelNecklace1: return "HavelNecklace1";
        case TightKind::HavelNecklace2: return "HavelNecklace2";
        case TightKind::TriangleDominated6Cycle: return "TriangleDominated6Cycle";
    }
    return "?";
}

std::optional<TightKind> kind_from_name(const std::string& name) {
    for (TightKind k : kAllTightKinds)
        if (kind_name(k) == name) return k;
    return std::nullopt;
}

bool kind_valid_for(TightKind kind, int delta) {
    switch (kind) {
        case TightKind::Clique: return delta >= 3;
        case TightKind::C5BoxK2: return delta == 5;
        case TightKind::C8Squared:
        case TightKind::ExtendedClique:
        case TightKind::ExtendedDoubleClique: return delta == 4;
        default: return delta == 3;
    }
}

int canonical_size(TightKind kind, int delta) {
    switch (kind) {
        case TightKind::Clique: return delta;
        case TightKind::C5BoxK2: return 10;
        case TightKind::C8Squared: return 8;
        case TightKind::ExtendedClique: return 8;
        case TightKind::ExtendedDoubleClique: return 12;
        case TightKind::DiamondNecklace1: return 6;
        case TightKind::DiamondNecklace2: return 9;
        case TightKind::DiamondNecklace3: return 12;
        case TightKind::HavelNecklace1: return 9;
        case TightKind::HavelNecklace2: return 12;
        case TightKind::TriangleDominated6Cycle: return 12;
    }
    return 0;
}

namespace {

Graph build_canonical(TightKind kind, int delta) {
    using E = Edge;
    std::vector<E> edges;
    auto diamond = [&edges](Vertex h1, Vertex h2, Vertex t1, Vertex t2) {
        edges.insert(edges.end(), {E{h1, h2}, E{h1, t1}, E{h2, t1}, E{h1, t2}, E{h2, t2}});
    };
    auto triangle = [&edges](Vertex a, Vertex b, Vertex c) {
        edges.insert(edges.end(), {E{a, b}, E{b, c}, E{a, c}});
    };
    switch (kind) {
        case TightKind::Clique:
            for (Vertex u = 0; u < delta; ++u)
                for (Vertex v = u + 1; v < delta; ++v) edges.emplace_back(u, v);
            return Graph::build(delta, edges);
        case TightKind::C5BoxK2:
            // Two layers of C5 (0..4 and 5..9); each vertex also sees the
            // partner layer at offsets -1, 0, +1 around the cycle.
            for (int i = 0; i < 5; ++i) {
                int j = (i + 1) % 5;
                edges.insert(edges.end(), {E{i, j}, E{5 + i, 5 + j}, E{i, 5 + i}, E{i, 5 + j},
                                           E{j, 5 + i}});
            }
            return Graph::build(10, edges);
        case TightKind::C8Squared:
            for (int i = 0; i < 8; ++i)
                edges.insert(edges.end(), {E{i, (i + 1) % 8}, E{i, (i + 2) % 8}});
            return Graph::build(8, edges);
        case TightKind::ExtendedClique:
            // K4 on 0..3; 4 and 5 each attach to two clique vertices and to
            // both attachments 6, 7 (the degree-3 pair).
            for (Vertex u = 0; u < 4; ++u)
                for (Vertex v = u + 1; v < 4; ++v) edges.emplace_back(u, v);
            edges.insert(edges.end(), {E{4, 0}, E{4, 3}, E{5, 1}, E{5, 2}, E{6, 4}, E{6, 5},
                                       E{7, 4}, E{7, 5}, E{6, 7}});
            return Graph::build(8, edges);
        case TightKind::ExtendedDoubleClique:
            for (Vertex base : {0, 4})
                for (Vertex u = base; u < base + 4; ++u)
                    for (Vertex v = u + 1; v < base + 4; ++v) edges.emplace_back(u, v);
            edges.insert(edges.end(), {E{8, 0}, E{8, 3}, E{9, 1}, E{9, 2}, E{10, 4}, E{10, 7},
                                       E{11, 5}, E{11, 6}, E{10, 8}, E{10, 9}, E{11, 8},
                                       E{11, 9}});
            return Graph::build(12, edges);
        case TightKind::DiamondNecklace1:
            diamond(0, 1, 2, 3);
            edges.insert(edges.end(), {E{3, 4}, E{4, 5}, E{5, 2}});
            return Graph::build(6, edges);
        case TightKind::DiamondNecklace2:
            diamond(0, 1, 2, 3);
            diamond(4, 5, 6, 7);
            edges.insert(edges.end(), {E{2, 6}, E{3, 8}, E{7, 8}});
            return Graph::build(9, edges);
        case TightKind::DiamondNecklace3:
            diamond(0, 1, 2, 3);
            diamond(4, 5, 6, 7);
            diamond(8, 9, 10, 11);
            edges.insert(edges.end(), {E{2, 6}, E{7, 10}, E{11, 3}});
            return Graph::build(12, edges);
        case TightKind::HavelNecklace1:
            triangle(0, 1, 2);
            triangle(3, 4, 5);
            edges.insert(edges.end(),
                         {E{0, 3}, E{1, 6}, E{6, 4}, E{2, 7}, E{7, 5}, E{6, 8}, E{8, 7}});
            return Graph::build(9, edges);
        case TightKind::HavelNecklace2:
            triangle(0, 1, 2);
            triangle(3, 4, 5);
            diamond(8, 9, 10, 11);
            edges.insert(edges.end(),
                         {E{0, 3}, E{1, 6}, E{6, 4}, E{2, 7}, E{7, 5}, E{6, 10}, E{7, 11}});
            return Graph::build(12, edges);
        case TightKind::TriangleDominated6Cycle:
            triangle(0, 1, 2);
            triangle(3, 4, 5);
            // pendants 6,7,8 / 9,10,11 plus the alternating 6-cycle
            edges.insert(edges.end(), {E{6, 0}, E{7, 1}, E{8, 2}, E{9, 3}, E{10, 4}, E{11, 5},
                                       E{6, 9}, E{9, 7}, E{7, 11}, E{11, 8}, E{8, 10},
                                       E{10, 6}});
            return Graph::build(12, edges);
    }
    throw GraphError("unknown tight kind");
}

}  // namespace

namespace detail {

const Graph& canonical_graph(TightKind kind, int delta) {
    static std::mutex mu;
    static std::map<std::pair<TightKind, int>, Graph> cache;
    std::scoped_lock lock(mu);
    int key_delta = kind == TightKind::Clique ? delta : 0;
    auto it = cache.find({kind, key_delta});
    if (it == cache.end())
        it = cache.emplace(std::pair{kind, key_delta}, build_canonical(kind, delta)).first;
    return it->second;
}

}  // namespace detail

Graph make_tight(TightKind kind, int delta) {
    if (!kind_valid_for(kind, delta))
        throw GraphError("tight kind " + kind_name(kind) + " is not defined for delta " +
                         std::to_string(delta));
    return build_canonical(kind, delta);
}

bool isomorphic(const Graph& a, const Graph& b) {
    int n = a.num_vertices();
    if (n != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    std::vector<int> da(n), db(n);
    for (Vertex v = 0; v < n; ++v) {
        da[v] = a.degree(v);
        db[v] = b.degree(v);
    }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    // Map vertices of a in decreasing-degree order; prune candidates by
    // degree and adjacency consistency with the mapped prefix.
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](Vertex x, Vertex y) { return da[x] != da[y] ? da[x] > da[y] : x < y; });
    std::vector<Vertex> image(n, -1);
    std::vector<char> used(n, 0);

    auto extend = [&](auto&& self, int idx) -> bool {
        if (idx == n) return true;
        Vertex va = order[idx];
        for (Vertex vb = 0; vb < n; ++vb) {
            if (used[vb] || db[vb] != da[va]) continue;
            bool ok = true;
            for (int j = 0; j < idx && ok; ++j) {
                Vertex ua = order[j];
                if (a.has_edge(va, ua) != b.has_edge(vb, image[ua])) ok = false;
            }
            if (!ok) continue;
            image[va] = vb;
            used[vb] = 1;
            if (self(self, idx + 1)) return true;
            used[vb] = 0;
            image[va] = -1;
        }
        return false;
    };
    return extend(extend, 0);
}

std::optional<TightKind> classify_tight(const Graph& g, int delta) {
    for (TightKind kind : kAllTightKinds) {
        if (!kind_valid_for(kind, delta)) continue;
        if (g.num_vertices() != canonical_size(kind, delta)) continue;
        if (isomorphic(g, detail::canonical_graph(kind, delta))) return kind;
    }
    return std::nullopt;
}

namespace {

using detail::Diamond;
using detail::View;

// Every diamond of the graph, deduplicated, ordered by minimum vertex.
std::vector<Diamond> all_diamonds(const View& view) {
    std::vector<Diamond> out, local;
    for (Vertex v = 0; v < view.g->num_vertices(); ++v) {
        if (!view.is_alive(v)) continue;
        local.clear();
        detail::diamonds_through(view, v, local);
        for (const Diamond& d : local)
            if (std::min(std::min(d.hub1, d.tip1), std::min(d.hub2, d.tip2)) == v)
                out.push_back(d);
    }
    return out;
}

std::vector<VertexSet> all_triangles(const View& view) {
    std::vector<VertexSet> out, local;
    for (Vertex v = 0; v < view.g->num_vertices(); ++v) {
        if (!view.is_alive(v)) continue;
        local.clear();
        detail::triangles_through(view, v, local);
        for (auto& t : local)
            if (t.front() == v) out.push_back(std::move(t));
    }
    return out;
}

void sort_by_min_then_lex(std::vector<VertexSet>& sets) {
    std::sort(sets.begin(), sets.end());  // sets are sorted, so lexicographic == (min, ...)
}

std::vector<VertexSet> greedy_disjoint(std::vector<VertexSet> candidates, Vertex n) {
    sort_by_min_then_lex(candidates);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<char> taken(n, 0);
    std::vector<VertexSet> picked;
    for (auto& c : candidates) {
        bool free = std::none_of(c.begin(), c.end(), [&](Vertex v) { return taken[v]; });
        if (!free) continue;
        for (Vertex v : c) taken[v] = 1;
        picked.push_back(std::move(c));
    }
    return picked;
}

}  // namespace

std::vector<VertexSet> find_structures(const Graph& g, int delta, StructureFamily family) {
    if (delta < 3) throw GraphError("delta must be at least 3");
    View view{&g, nullptr};
    std::vector<VertexSet> out;
    switch (family) {
        case StructureFamily::TightComponents: {
            for (auto& comp : g.connected_components()) {
                if (static_cast<int>(comp.size()) > 4 * delta) continue;
                auto [sub, map] = g.induced(comp);
                (void)map;
                if (classify_tight(sub, delta)) out.push_back(std::move(comp));
            }
            return out;  // components already come ordered by minimum id
        }
        case StructureFamily::ExtendedCliques: {
            if (delta != 4) throw GraphError("extended cliques exist only for delta 4");
            std::vector<VertexSet> candidates, k4s;
            for (Vertex v = 0; v < g.num_vertices(); ++v) {
                k4s.clear();
                detail::cliques_through(view, v, 4, true, k4s);
                for (auto& k4 : k4s)
                    if (auto ec = detail::extended_clique_from_k4(view, k4))
                        candidates.push_back(std::move(*ec));
            }
            return greedy_disjoint(std::move(candidates), g.num_vertices());
        }
        case StructureFamily::Necklaces: {
            if (delta != 3) throw GraphError("necklaces exist only for delta 3");
            std::vector<VertexSet> candidates;
            for (const Diamond& d : all_diamonds(view))
                for (auto& match : detail::necklaces_from_diamond(view, d))
                    candidates.push_back(std::move(match.vertices));
            for (const auto& tri : all_triangles(view))
                for (auto& match : detail::havel1_from_triangle(view, tri))
                    candidates.push_back(std::move(match.vertices));
            return greedy_disjoint(std::move(candidates), g.num_vertices());
        }
        case StructureFamily::Diamonds: {
            if (delta != 3) throw GraphError("diamond scan is a delta 3 structure");
            for (const Diamond& d : all_diamonds(view)) out.push_back(d.vertices());
            sort_by_min_then_lex(out);
            return out;
        }
        case StructureFamily::Triangles: {
            if (delta != 3) throw GraphError("triangle scan is a delta 3 structure");
            out = all_triangles(view);
            sort_by_min_then_lex(out);
            return out;
        }
        case StructureFamily::DeltaCliques: {
            std::vector<VertexSet> local;
            for (Vertex v = 0; v < g.num_vertices(); ++v) {
                local.clear();
                detail::cliques_through(view, v, delta, true, local);
                for (auto& c : local) out.push_back(std::move(c));
            }
            sort_by_min_then_lex(out);
            return out;
        }
    }
    throw GraphError("unknown structure family");
}

VertexSet delta_free_vertices(const Graph& g, int delta) {
    View view{&g, nullptr};
    VertexSet free;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (!detail::vertex_in_tight(view, v, delta)) free.push_back(v);
    return free;
}

FreeDiamondStats free_diamonds_and_m(const Graph& g) {
    View view{&g, nullptr};
    FreeDiamondStats stats;
    stats.m1 = static_cast<long long>(delta_free_vertices(g, 3).size());
    for (const Diamond& d : all_diamonds(view))
        if (detail::necklaces_from_diamond(view, d).empty())
            stats.free_diamonds.push_back(d.vertices());
    std::sort(stats.free_diamonds.begin(), stats.free_diamonds.end());
    stats.m2 = static_cast<long long>(stats.free_diamonds.size());
    return stats;
}

}  // namespace tightpart
