#include "tightpart/decompose.hpp"

#include <algorithm>
#include <stdexcept>

#include "structure_search.hpp"
#include "tightpart/profitable.hpp"

namespace tightpart {

namespace {

using detail::Diamond;
using detail::View;

VertexSet merged_sorted(std::initializer_list<const VertexSet*> sets) {
    VertexSet out;
    for (const VertexSet* s : sets) out.insert(out.end(), s->begin(), s->end());
    std::sort(out.begin(), out.end());
    return out;
}

void kill(std::vector<char>& alive, const VertexSet& vs) {
    for (Vertex v : vs) alive[v] = 0;
}

// Components of the residual graph, ordered by minimum vertex.
std::vector<VertexSet> residual_components(const Graph& g, const std::vector<char>& alive) {
    std::vector<VertexSet> comps;
    std::vector<char> seen(g.num_vertices(), 0);
    std::vector<Vertex> queue;
    for (Vertex root = 0; root < g.num_vertices(); ++root) {
        if (!alive[root] || seen[root]) continue;
        queue.assign(1, root);
        seen[root] = 1;
        for (size_t head = 0; head < queue.size(); ++head)
            for (Vertex w : g.neighbors(queue[head]))
                if (alive[w] && !seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        VertexSet comp(queue.begin(), queue.end());
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

void check_partition(const Graph& g, const Decomposition& dec) {
    std::vector<int> owner(g.num_vertices(), 0);
    for (const VertexSet* s : {&dec.a0, &dec.a1, &dec.a2, &dec.a3, &dec.b, &dec.c, &dec.d})
        for (Vertex v : *s) ++owner[v];
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (owner[v] != 1)
            throw std::logic_error("decomposition does not partition the vertex set at vertex " +
                                   std::to_string(v));
}

}  // namespace

VertexSet Decomposition::a() const { return merged_sorted({&a0, &a1, &a2, &a3}); }
VertexSet Decomposition::residual() const { return merged_sorted({&b, &c, &d}); }

Decomposition decompose(const Graph& g, int delta) {
    require_valid_instance(g, delta);
    const Vertex n = g.num_vertices();
    Decomposition dec;

    NibblePhaseResult nib = nibble_phase(g, delta);
    dec.nibbles = std::move(nib.nibbles);
    dec.c = std::move(nib.c);

    std::vector<char> alive(n, 1);
    kill(alive, dec.c);
    View view{&g, &alive};

    // Small residual components isomorphic to a non-clique catalog graph.
    // Clique components stay on the clique-partition path below.
    if (delta <= 5) {
        for (const VertexSet& comp : residual_components(g, alive)) {
            if (static_cast<int>(comp.size()) > 4 * delta) continue;
            auto [sub, map] = g.induced(comp);
            (void)map;
            auto kind = classify_tight(sub, delta);
            if (!kind || *kind == TightKind::Clique) continue;
            kill(alive, comp);
            dec.a0.insert(dec.a0.end(), comp.begin(), comp.end());
            dec.tight_pieces.push_back(TightPiece{*kind, comp});
        }
        std::sort(dec.a0.begin(), dec.a0.end());
    }

    // Extended cliques in the residual. After the nibble phase these cannot
    // overlap each other; the aliveness test below keeps the scan greedy and
    // deterministic anyway.
    if (delta == 4) {
        std::vector<VertexSet> k4s;
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            k4s.clear();
            detail::cliques_through(view, v, 4, true, k4s);
            for (const auto& k4 : k4s) {
                auto ec = detail::extended_clique_from_k4(view, k4);
                if (!ec) continue;
                kill(alive, *ec);
                dec.a1.insert(dec.a1.end(), ec->begin(), ec->end());
                dec.tight_pieces.push_back(TightPiece{TightKind::ExtendedClique, std::move(*ec)});
            }
        }
        std::sort(dec.a1.begin(), dec.a1.end());
    }

    // Necklaces in the residual, same greedy-disjoint discipline.
    if (delta == 3) {
        std::vector<detail::PatternMatch> candidates;
        std::vector<Diamond> ds;
        std::vector<VertexSet> tris;
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            ds.clear();
            detail::diamonds_through(view, v, ds);
            for (const Diamond& d : ds) {
                if (std::min({d.hub1, d.hub2, d.tip1, d.tip2}) != v) continue;
                for (auto& m : detail::necklaces_from_diamond(view, d))
                    candidates.push_back(std::move(m));
            }
            tris.clear();
            detail::triangles_through(view, v, tris);
            for (const auto& t : tris) {
                if (t.front() != v) continue;
                for (auto& m : detail::havel1_from_triangle(view, t))
                    candidates.push_back(std::move(m));
            }
        }
        std::sort(candidates.begin(), candidates.end(),
                  [](const detail::PatternMatch& x, const detail::PatternMatch& y) {
                      return x.vertices < y.vertices;
                  });
        for (auto& cand : candidates) {
            bool free = std::all_of(cand.vertices.begin(), cand.vertices.end(),
                                    [&](Vertex v) { return alive[v]; });
            if (!free) continue;
            kill(alive, cand.vertices);
            dec.a2.insert(dec.a2.end(), cand.vertices.begin(), cand.vertices.end());
            dec.tight_pieces.push_back(TightPiece{cand.kind, std::move(cand.vertices)});
        }
        std::sort(dec.a2.begin(), dec.a2.end());
    }

    // D: residual vertices that no clique part can cover. For delta = 3 a
    // diamond also sends its vertices to D, because the two triangles of a
    // diamond cannot both survive into a triangle partition.
    for (Vertex v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        bool to_d;
        if (delta >= 4)
            to_d = !detail::in_clique_of_size(view, v, delta);
        else
            to_d = !detail::in_triangle(view, v) || detail::in_diamond(view, v);
        if (to_d) dec.d.push_back(v);
    }
    kill(alive, dec.d);

    // What is left is coverable by pairwise disjoint cliques of size delta:
    // two overlapping ones would form the clique-minus-edge nibble pattern
    // (or a diamond at delta = 3), which earlier phases removed.
    std::vector<int> part_of(n, -1);
    std::vector<VertexSet> parts;
    {
        std::vector<VertexSet> found;
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[v] || part_of[v] >= 0) continue;
            found.clear();
            detail::cliques_through(view, v, delta, false, found);
            if (found.empty())
                throw std::logic_error("vertex " + std::to_string(v) +
                                       " has no clique part in the residual graph");
            if (found.size() > 1)
                throw std::logic_error("vertex " + std::to_string(v) +
                                       " lies in two residual cliques");
            for (Vertex u : found.front())
                if (part_of[u] >= 0)
                    throw std::logic_error("residual cliques overlap at vertex " +
                                           std::to_string(u));
            int id = static_cast<int>(parts.size());
            for (Vertex u : found.front()) part_of[u] = id;
            parts.push_back(std::move(found.front()));
        }
    }

    // Migrate cliques with >= delta-1 vertices seeing B|C|D into B. The
    // marking is monotone, so the processing order cannot change the result.
    std::vector<char> bcd(n, 0);
    for (Vertex v : dec.c) bcd[v] = 1;
    for (Vertex v : dec.d) bcd[v] = 1;
    std::vector<char> marked(n, 0), in_b(parts.size(), 0);
    std::vector<int> marked_count(parts.size(), 0);
    std::vector<int> queue;
    auto mark = [&](Vertex v) {
        if (marked[v] || part_of[v] < 0 || in_b[part_of[v]]) return;
        marked[v] = 1;
        if (++marked_count[part_of[v]] == delta - 1) queue.push_back(part_of[v]);
    };
    for (Vertex v = 0; v < n; ++v) {
        if (part_of[v] < 0) continue;
        for (Vertex w : g.neighbors(v))
            if (bcd[w]) {
                mark(v);
                break;
            }
    }
    for (size_t head = 0; head < queue.size(); ++head) {
        int p = queue[head];
        if (in_b[p]) continue;
        in_b[p] = 1;
        for (Vertex v : parts[p]) {
            bcd[v] = 1;
            for (Vertex w : g.neighbors(v))
                if (part_of[w] >= 0 && !in_b[part_of[w]]) mark(w);
        }
    }

    for (size_t p = 0; p < parts.size(); ++p) {
        VertexSet& target = in_b[p] ? dec.b : dec.a3;
        target.insert(target.end(), parts[p].begin(), parts[p].end());
    }
    std::sort(dec.a3.begin(), dec.a3.end());
    std::sort(dec.b.begin(), dec.b.end());
    dec.clique_parts = std::move(parts);

    check_partition(g, dec);
    if ((dec.a0.size() + dec.a1.size() + dec.a2.size() + dec.a3.size()) % delta != 0)
        throw std::logic_error("|A| is not divisible by delta");
    if (dec.b.size() > 3ull * delta * (dec.c.size() + dec.d.size()))
        throw std::logic_error("B exceeds its size bound");
    return dec;
}

}  // namespace tightpart
