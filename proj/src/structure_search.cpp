#include "structure_search.hpp"

#include <algorithm>

namespace tightpart::detail {

int View::degree(Vertex v) const {
    if (!alive) return g->degree(v);
    int d = 0;
    for (Vertex w : g->neighbors(v))
        if ((*alive)[w]) ++d;
    return d;
}

void View::neighbors_into(Vertex v, std::vector<Vertex>& out) const {
    out.clear();
    for (Vertex w : g->neighbors(v))
        if (is_alive(w)) out.push_back(w);
}

std::vector<Vertex> View::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    neighbors_into(v, out);
    return out;
}

std::optional<Vertex> View::other_neighbor(Vertex v, std::span<const Vertex> exclude) const {
    std::optional<Vertex> found;
    for (Vertex w : g->neighbors(v)) {
        if (!is_alive(w)) continue;
        if (std::find(exclude.begin(), exclude.end(), w) != exclude.end()) continue;
        if (found) return std::nullopt;  // not unique
        found = w;
    }
    return found;
}

VertexSet Diamond::vertices() const {
    VertexSet v = {hub1, hub2, tip1, tip2};
    std::sort(v.begin(), v.end());
    return v;
}

bool matches_canonical(const View& view, std::span<const Vertex> tuple, const Graph& canon) {
    int k = canon.num_vertices();
    if (static_cast<int>(tuple.size()) != k) return false;
    for (int i = 0; i < k; ++i) {
        if (!view.is_alive(tuple[i])) return false;
        for (int j = i + 1; j < k; ++j)
            if (tuple[i] == tuple[j]) return false;
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (view.g->has_edge(tuple[i], tuple[j]) != canon.has_edge(i, j)) return false;
    return true;
}

VertexSet ball(const View& view, Vertex v, int radius) {
    if (!view.is_alive(v)) return {};
    std::vector<Vertex> queue = {v};
    std::vector<int> dist = {0};
    VertexSet seen = {v};
    for (size_t head = 0; head < queue.size(); ++head) {
        if (dist[head] == radius) continue;
        for (Vertex w : view.g->neighbors(queue[head])) {
            if (!view.is_alive(w)) continue;
            if (std::binary_search(seen.begin(), seen.end(), w)) continue;
            seen.insert(std::lower_bound(seen.begin(), seen.end(), w), w);
            queue.push_back(w);
            dist.push_back(dist[head] + 1);
        }
    }
    return seen;
}

bool in_triangle(const View& view, Vertex v) {
    if (!view.is_alive(v)) return false;
    auto nb = view.neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
            if (view.g->has_edge(nb[i], nb[j])) return true;
    return false;
}

void triangles_through(const View& view, Vertex v, std::vector<VertexSet>& out) {
    if (!view.is_alive(v)) return;
    auto nb = view.neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
            if (view.g->has_edge(nb[i], nb[j])) {
                VertexSet t = {v, nb[i], nb[j]};
                std::sort(t.begin(), t.end());
                out.push_back(std::move(t));
            }
}

namespace {

VertexSet common_alive_neighbors(const View& view, Vertex u, Vertex v) {
    VertexSet out;
    auto a = view.g->neighbors(u);
    auto b = view.g->neighbors(v);
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    if (view.alive)
        std::erase_if(out, [&](Vertex w) { return !(*view.alive)[w]; });
    return out;
}

}  // namespace

void diamonds_through(const View& view, Vertex v, std::vector<Diamond>& out) {
    if (!view.is_alive(v)) return;
    auto nb = view.neighbors(v);
    // v as a hub: pick the other hub among v's neighbors, tips among common
    // neighbors that are themselves non-adjacent.
    for (Vertex u : nb) {
        auto common = common_alive_neighbors(view, v, u);
        for (size_t i = 0; i < common.size(); ++i)
            for (size_t j = i + 1; j < common.size(); ++j)
                if (!view.g->has_edge(common[i], common[j]))
                    out.push_back(Diamond{std::min(v, u), std::max(v, u), common[i], common[j]});
    }
    // v as a tip: adjacent neighbor pair are the hubs, one more common
    // neighbor of the hubs (non-adjacent to v) is the other tip.
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j) {
            if (!view.g->has_edge(nb[i], nb[j])) continue;
            for (Vertex b : common_alive_neighbors(view, nb[i], nb[j]))
                if (b != v && !view.g->has_edge(b, v))
                    out.push_back(Diamond{nb[i], nb[j], std::min(v, b), std::max(v, b)});
        }
}

bool in_diamond(const View& view, Vertex v) {
    std::vector<Diamond> ds;
    diamonds_through(view, v, ds);
    return !ds.empty();
}

namespace {

void clique_extend(const View& view, const std::vector<Vertex>& candidates, size_t from,
                   VertexSet& current, size_t size, bool stop_at_first,
                   std::vector<VertexSet>& out) {
    if (current.size() == size) {
        VertexSet c = current;
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
        return;
    }
    size_t needed = size - current.size();
    for (size_t i = from; i < candidates.size(); ++i) {
        if (candidates.size() - i < needed) break;
        if (stop_at_first && !out.empty()) return;
        Vertex w = candidates[i];
        bool ok = true;
        for (Vertex u : current)
            if (!view.g->has_edge(u, w)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        current.push_back(w);
        clique_extend(view, candidates, i + 1, current, size, stop_at_first, out);
        current.pop_back();
    }
}

}  // namespace

void cliques_through(const View& view, Vertex v, int size, bool require_min,
                     std::vector<VertexSet>& out) {
    if (!view.is_alive(v) || size < 1) return;
    if (size == 1) {
        out.push_back({v});
        return;
    }
    std::vector<Vertex> cand;
    for (Vertex w : view.g->neighbors(v))
        if (view.is_alive(w) && (!require_min || w > v)) cand.push_back(w);
    if (static_cast<int>(cand.size()) < size - 1) return;
    VertexSet current = {v};
    clique_extend(view, cand, 0, current, size, false, out);
}

bool in_clique_of_size(const View& view, Vertex v, int size) {
    if (!view.is_alive(v) || size < 1) return false;
    if (size == 1) return true;
    std::vector<Vertex> cand = view.neighbors(v);
    if (static_cast<int>(cand.size()) < size - 1) return false;
    VertexSet current = {v};
    std::vector<VertexSet> out;
    clique_extend(view, cand, 0, current, size, true, out);
    return !out.empty();
}

namespace {

VertexSet sorted_copy(std::span<const Vertex> vs) {
    VertexSet s(vs.begin(), vs.end());
    std::sort(s.begin(), s.end());
    return s;
}

// Diamonds that contain `tip` as one of their two tips.
std::vector<Diamond> diamonds_with_tip(const View& view, Vertex tip) {
    std::vector<Diamond> all, out;
    diamonds_through(view, tip, all);
    for (const Diamond& d : all)
        if (d.tip1 == tip || d.tip2 == tip) out.push_back(d);
    return out;
}

void push_match(std::vector<PatternMatch>& out, TightKind kind, std::span<const Vertex> tuple) {
    PatternMatch m{kind, sorted_copy(tuple)};
    for (const PatternMatch& seen : out)
        if (seen.kind == kind && seen.vertices == m.vertices) return;
    out.push_back(std::move(m));
}

}  // namespace

std::vector<PatternMatch> necklaces_from_diamond(const View& view, const Diamond& d) {
    std::vector<PatternMatch> out;
    const std::array<Vertex, 4> dset = {d.hub1, d.hub2, d.tip1, d.tip2};
    auto in_d = [&](Vertex v) {
        return std::find(dset.begin(), dset.end(), v) != dset.end();
    };

    for (auto [ta, tb] : {std::pair{d.tip1, d.tip2}, std::pair{d.tip2, d.tip1}}) {
        auto pa = view.other_neighbor(ta, std::array{d.hub1, d.hub2});
        auto pb = view.other_neighbor(tb, std::array{d.hub1, d.hub2});

        // One diamond: tips joined by a two-vertex path.
        if (pa && pb && *pa != *pb && !in_d(*pa) && !in_d(*pb)) {
            const Vertex tuple[6] = {d.hub1, d.hub2, tb, ta, *pa, *pb};
            if (matches_canonical(view, tuple, canonical_graph(TightKind::DiamondNecklace1, 3)))
                push_match(out, TightKind::DiamondNecklace1, tuple);
        }

        if (!pa || in_d(*pa)) continue;

        // Two diamonds: direct tip-tip edge on one side, joint vertex on the other.
        for (const Diamond& d2 : diamonds_with_tip(view, *pa)) {
            Vertex q = d2.tip1 == *pa ? d2.tip2 : d2.tip1;
            if (pb) {
                const Vertex tuple[9] = {d.hub1, d.hub2, ta, tb, d2.hub1, d2.hub2, *pa, q, *pb};
                if (matches_canonical(view, tuple,
                                      canonical_graph(TightKind::DiamondNecklace2, 3)))
                    push_match(out, TightKind::DiamondNecklace2, tuple);
            }

            // Three diamonds in a tip-to-tip cycle.
            auto r = view.other_neighbor(q, std::array{d2.hub1, d2.hub2});
            if (r) {
                for (const Diamond& d3 : diamonds_with_tip(view, *r)) {
                    Vertex s = d3.tip1 == *r ? d3.tip2 : d3.tip1;
                    const Vertex tuple[12] = {d.hub1,  d.hub2,  ta, tb, d2.hub1, d2.hub2,
                                              *pa,     q,       d3.hub1, d3.hub2, *r, s};
                    if (matches_canonical(view, tuple,
                                          canonical_graph(TightKind::DiamondNecklace3, 3)))
                        push_match(out, TightKind::DiamondNecklace3, tuple);
                }
            }
        }

        // Havel necklace containing a diamond: ta, tb reach the two apexes.
        if (pb && *pa != *pb && !in_d(*pb)) {
            Vertex k = *pa, l = *pb;
            auto kn = view.neighbors(k), ln = view.neighbors(l);
            std::erase(kn, ta);
            std::erase(ln, tb);
            if (kn.size() == 2 && ln.size() == 2) {
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) {
                        Vertex b = kn[i], y = kn[1 - i];
                        Vertex c = ln[j], z = ln[1 - j];
                        auto a = view.other_neighbor(b, std::array{c, k});
                        auto x = view.other_neighbor(y, std::array{z, k});
                        if (!a || !x) continue;
                        const Vertex tuple[12] = {*a, b, c, *x, y, z, k, l,
                                                  d.hub1, d.hub2, ta, tb};
                        if (matches_canonical(view, tuple,
                                              canonical_graph(TightKind::HavelNecklace2, 3)))
                            push_match(out, TightKind::HavelNecklace2, tuple);
                    }
            }
        }
    }
    return out;
}

std::vector<PatternMatch> havel1_from_triangle(const View& view, std::span<const Vertex> tri) {
    std::vector<PatternMatch> out;
    const std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& p : perms) {
        Vertex a = tri[p[0]], b = tri[p[1]], c = tri[p[2]];
        auto x = view.other_neighbor(a, std::array{b, c});
        auto k = view.other_neighbor(b, std::array{a, c});
        auto l = view.other_neighbor(c, std::array{a, b});
        if (!x || !k || !l) continue;
        auto kn = view.neighbors(*k);
        std::erase(kn, b);
        if (kn.size() != 2) continue;
        for (int i = 0; i < 2; ++i) {
            Vertex y = kn[i], q = kn[1 - i];
            auto z = view.other_neighbor(*x, std::array{a, y});
            if (!z) continue;
            const Vertex tuple[9] = {a, b, c, *x, y, *z, *k, *l, q};
            if (matches_canonical(view, tuple, canonical_graph(TightKind::HavelNecklace1, 3)))
                push_match(out, TightKind::HavelNecklace1, tuple);
        }
    }
    return out;
}

std::vector<PatternMatch> td6c_from_triangle(const View& view, std::span<const Vertex> tri) {
    std::vector<PatternMatch> out;
    const std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& p : perms) {
        Vertex z1 = tri[p[0]], z2 = tri[p[1]], z3 = tri[p[2]];
        auto x1 = view.other_neighbor(z1, std::array{z2, z3});
        auto x2 = view.other_neighbor(z2, std::array{z1, z3});
        auto x3 = view.other_neighbor(z3, std::array{z1, z2});
        if (!x1 || !x2 || !x3) continue;
        auto x1n = view.neighbors(*x1);
        std::erase(x1n, z1);
        if (x1n.size() != 2) continue;
        for (int i = 0; i < 2; ++i) {
            Vertex y1 = x1n[i], y2 = x1n[1 - i];
            auto y3 = view.other_neighbor(*x2, std::array{z2, y1});
            if (!y3) continue;
            auto w1 = view.other_neighbor(y1, std::array{*x1, *x2});
            auto w2 = view.other_neighbor(y2, std::array{*x1, *x3});
            auto w3 = view.other_neighbor(*y3, std::array{*x2, *x3});
            if (!w1 || !w2 || !w3) continue;
            const Vertex tuple[12] = {z1, z2, z3, *w1, *w2, *w3, *x1, *x2, *x3, y1, y2, *y3};
            if (matches_canonical(view, tuple,
                                  canonical_graph(TightKind::TriangleDominated6Cycle, 3)))
                push_match(out, TightKind::TriangleDominated6Cycle, tuple);
        }
    }
    return out;
}

namespace {

// The two outside attachments of a K4, each adjacent to exactly two clique
// vertices. Fills (pairA, pairB, zA, zB); pairA attaches to zA.
bool split_k4_attachments(const View& view, std::span<const Vertex> k4, Vertex out_pair_a[2],
                          Vertex out_pair_b[2], Vertex& za, Vertex& zb) {
    Vertex ext[4];
    for (int i = 0; i < 4; ++i) {
        auto e = view.other_neighbor(k4[i], k4);
        if (!e) return false;
        ext[i] = *e;
    }
    // Exactly two distinct attachment vertices, each claimed twice.
    int ia = -1;
    for (int i = 1; i < 4; ++i)
        if (ext[i] == ext[0]) ia = i;
    if (ia < 0) return false;
    int other[2], t = 0;
    for (int i = 1; i < 4; ++i)
        if (i != ia) other[t++] = i;
    if (t != 2 || ext[other[0]] != ext[other[1]] || ext[other[0]] == ext[0]) return false;
    out_pair_a[0] = k4[0];
    out_pair_a[1] = k4[ia];
    out_pair_b[0] = k4[other[0]];
    out_pair_b[1] = k4[other[1]];
    za = ext[0];
    zb = ext[other[0]];
    return true;
}

}  // namespace

std::optional<VertexSet> extended_clique_from_k4(const View& view, std::span<const Vertex> k4) {
    Vertex pa[2], pb[2], za, zb;
    if (!split_k4_attachments(view, k4, pa, pb, za, zb)) return std::nullopt;
    auto zn = view.neighbors(za);
    std::erase(zn, pa[0]);
    std::erase(zn, pa[1]);
    if (zn.size() != 2) return std::nullopt;
    const Vertex tuple[8] = {pa[0], pb[0], pb[1], pa[1], za, zb, zn[0], zn[1]};
    if (matches_canonical(view, tuple, canonical_graph(TightKind::ExtendedClique, 4)))
        return sorted_copy(tuple);
    return std::nullopt;
}

std::optional<VertexSet> extended_double_clique_from_k4(const View& view,
                                                        std::span<const Vertex> k4) {
    Vertex pa[2], pb[2], za, zb;
    if (!split_k4_attachments(view, k4, pa, pb, za, zb)) return std::nullopt;
    auto ys = view.neighbors(za);
    std::erase(ys, pa[0]);
    std::erase(ys, pa[1]);
    if (ys.size() != 2) return std::nullopt;
    auto b1 = view.neighbors(ys[0]);
    auto b2 = view.neighbors(ys[1]);
    std::erase(b1, za);
    std::erase(b1, zb);
    std::erase(b2, za);
    std::erase(b2, zb);
    if (b1.size() != 2 || b2.size() != 2) return std::nullopt;
    const Vertex tuple[12] = {pa[0], pb[0], pb[1], pa[1], b1[0], b2[0], b2[1], b1[1],
                              za,    zb,    ys[0], ys[1]};
    if (matches_canonical(view, tuple, canonical_graph(TightKind::ExtendedDoubleClique, 4)))
        return sorted_copy(tuple);
    return std::nullopt;
}

bool in_c8_squared(const View& view, Vertex v) {
    auto nb = view.neighbors(v);
    if (nb.size() != 4) return false;
    std::sort(nb.begin(), nb.end());
    const Graph& canon = canonical_graph(TightKind::C8Squared, 4);
    // Assign v's neighbors to cycle positions 1, 2, 6, 7 and grow the rest.
    std::array<int, 4> idx = {0, 1, 2, 3};
    do {
        Vertex c1 = nb[idx[0]], c2 = nb[idx[1]], c6 = nb[idx[2]], c7 = nb[idx[3]];
        for (Vertex c3 : common_alive_neighbors(view, c1, c2)) {
            if (c3 == v || c3 == c6 || c3 == c7) continue;
            for (Vertex c4 : common_alive_neighbors(view, c2, c3)) {
                if (c4 == v || c4 == c1 || c4 == c6 || c4 == c7) continue;
                for (Vertex c5 : common_alive_neighbors(view, c3, c4)) {
                    const Vertex tuple[8] = {v, c1, c2, c3, c4, c5, c6, c7};
                    if (matches_canonical(view, tuple, canon)) return true;
                }
            }
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
    return false;
}

bool in_c5_box_k2(const View& view, Vertex v) {
    auto nb = view.neighbors(v);
    if (nb.size() != 5) return false;
    std::sort(nb.begin(), nb.end());
    const Graph& canon = canonical_graph(TightKind::C5BoxK2, 5);
    std::array<int, 5> idx = {0, 1, 2, 3, 4};
    do {
        // Roles of v's neighbors: same-layer ring mates x1, x4 and partner
        // layer y0, y1, y4.
        Vertex x1 = nb[idx[0]], x4 = nb[idx[1]], y0 = nb[idx[2]], y1 = nb[idx[3]],
               y4 = nb[idx[4]];
        auto rest1 = view.neighbors(x1);
        for (Vertex bad : {v, y0, y1}) std::erase(rest1, bad);
        if (rest1.size() != 2) continue;
        auto rest4 = view.neighbors(x4);
        for (Vertex bad : {v, y0, y4}) std::erase(rest4, bad);
        if (rest4.size() != 2) continue;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                Vertex x2 = rest1[i], y2 = rest1[1 - i];
                Vertex x3 = rest4[j], y3 = rest4[1 - j];
                const Vertex tuple[10] = {v, x1, x2, x3, x4, y0, y1, y2, y3, y4};
                if (matches_canonical(view, tuple, canon)) return true;
            }
    } while (std::next_permutation(idx.begin(), idx.end()));
    return false;
}

bool vertex_in_tight(const View& view, Vertex v, int delta) {
    if (!view.is_alive(v)) return false;
    if (in_clique_of_size(view, v, delta)) return true;
    switch (delta) {
        case 3: {
            std::vector<Diamond> ds;
            for (Vertex w : ball(view, v, 3)) diamonds_through(view, w, ds);
            for (const Diamond& d : ds)
                for (const PatternMatch& m : necklaces_from_diamond(view, d))
                    if (std::binary_search(m.vertices.begin(), m.vertices.end(), v)) return true;
            std::vector<VertexSet> tris;
            for (Vertex w : ball(view, v, 2)) triangles_through(view, w, tris);
            for (const auto& t : tris) {
                for (const PatternMatch& m : havel1_from_triangle(view, t))
                    if (std::binary_search(m.vertices.begin(), m.vertices.end(), v)) return true;
                for (const PatternMatch& m : td6c_from_triangle(view, t))
                    if (std::binary_search(m.vertices.begin(), m.vertices.end(), v)) return true;
            }
            return false;
        }
        case 4: {
            if (in_c8_squared(view, v)) return true;
            std::vector<VertexSet> k4s;
            for (Vertex w : ball(view, v, 2)) cliques_through(view, w, 4, false, k4s);
            for (const auto& k4 : k4s) {
                if (auto ec = extended_clique_from_k4(view, k4))
                    if (std::binary_search(ec->begin(), ec->end(), v)) return true;
                if (auto edc = extended_double_clique_from_k4(view, k4))
                    if (std::binary_search(edc->begin(), edc->end(), v)) return true;
            }
            return false;
        }
        case 5:
            return in_c5_box_k2(view, v);
        default:
            return false;  // only cliques are tight for delta >= 6
    }
}

const Graph& nibble_shape10() {
    static const Graph g = Graph::build(
        10, {{0, 1},
             {2, 3}, {2, 4}, {3, 4}, {2, 5}, {3, 5},
             {6, 7}, {6, 8}, {7, 8}, {6, 9}, {7, 9},
             {1, 4}, {0, 5}, {1, 8}, {0, 9}});
    return g;
}

const Graph& nibble_shape7() {
    static const Graph g = Graph::build(
        7, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {3, 6}, {4, 6}, {1, 5}, {0, 6}});
    return g;
}

namespace {

// Nibble shapes for delta 3, tried around one of their diamonds.
std::optional<VertexSet> nibble3_from_diamond(const View& view, const Diamond& d, Vertex seed) {
    for (auto [ta, tb] : {std::pair{d.tip1, d.tip2}, std::pair{d.tip2, d.tip1}}) {
        auto b = view.other_neighbor(ta, std::array{d.hub1, d.hub2});
        auto y = view.other_neighbor(tb, std::array{d.hub1, d.hub2});
        if (!b || !y || *b == *y) continue;

        // Two diamond necklaces sharing the edge y-b.
        auto rb = view.other_neighbor(*b, std::array{ta, *y});
        auto ry = view.other_neighbor(*y, std::array{tb, *b});
        if (rb && ry) {
            for (const Diamond& d2 : diamonds_with_tip(view, *ry)) {
                if ((d2.tip1 == *ry ? d2.tip2 : d2.tip1) != *rb) continue;
                const Vertex tuple[10] = {*y, *b, d.hub1, d.hub2, ta, tb,
                                          d2.hub1, d2.hub2, *rb, *ry};
                if (matches_canonical(view, tuple, nibble_shape10())) {
                    VertexSet set = sorted_copy(tuple);
                    if (std::binary_search(set.begin(), set.end(), seed)) return set;
                }
            }
        }

        // Diamond necklace sharing the edge y-b with a triangle.
        auto x = view.other_neighbor(*y, std::array{tb, *b});
        if (x && *x != ta) {
            const Vertex tuple[7] = {*y, *b, *x, d.hub1, d.hub2, ta, tb};
            if (matches_canonical(view, tuple, nibble_shape7())) {
                VertexSet set = sorted_copy(tuple);
                if (std::binary_search(set.begin(), set.end(), seed)) return set;
            }
        }
    }
    return std::nullopt;
}

// Lexicographically first (delta-1)-clique inside `candidates`, all of whose
// vertices must also contain `forced` when forced >= 0.
bool first_clique_subset(const View& view, const VertexSet& candidates, int want, Vertex forced,
                         VertexSet& out) {
    VertexSet current;
    auto extend = [&](auto&& self, size_t from) -> bool {
        if (static_cast<int>(current.size()) == want)
            return forced < 0 ||
                   std::find(current.begin(), current.end(), forced) != current.end();
        for (size_t i = from; i < candidates.size(); ++i) {
            Vertex w = candidates[i];
            bool ok = true;
            for (Vertex u : current)
                if (!view.g->has_edge(u, w)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            current.push_back(w);
            if (self(self, i + 1)) return true;
            current.pop_back();
        }
        return false;
    };
    if (!extend(extend, 0)) return false;
    out = current;
    return true;
}

std::optional<VertexSet> nibble4_at(const View& view, Vertex seed, int delta) {
    // Clique on delta+1 vertices minus one edge. Either the seed is an
    // endpoint of the missing edge or it lies in the shared clique.
    auto try_pair = [&](Vertex u, Vertex v) -> std::optional<VertexSet> {
        VertexSet common = common_alive_neighbors(view, u, v);
        if (static_cast<int>(common.size()) < delta - 1) return std::nullopt;
        Vertex forced = (u == seed || v == seed) ? -1 : seed;
        VertexSet clique;
        if (!first_clique_subset(view, common, delta - 1, forced, clique)) return std::nullopt;
        clique.push_back(u);
        clique.push_back(v);
        std::sort(clique.begin(), clique.end());
        return clique;
    };

    // Seed as missing-edge endpoint: partners at distance two.
    VertexSet partners;
    for (Vertex w : view.neighbors(seed))
        for (Vertex x : view.g->neighbors(w))
            if (view.is_alive(x) && x != seed && !view.g->has_edge(seed, x))
                partners.push_back(x);
    std::sort(partners.begin(), partners.end());
    partners.erase(std::unique(partners.begin(), partners.end()), partners.end());
    for (Vertex v : partners)
        if (auto hit = try_pair(seed, v)) return hit;

    // Seed inside the clique: endpoints are non-adjacent neighbors of seed.
    auto nb = view.neighbors(seed);
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
            if (!view.g->has_edge(nb[i], nb[j]))
                if (auto hit = try_pair(nb[i], nb[j])) return hit;
    return std::nullopt;
}

}  // namespace

std::optional<VertexSet> nibble_pattern_at(const View& view, Vertex seed, int delta) {
    if (!view.is_alive(seed)) return std::nullopt;
    if (delta >= 4) return nibble4_at(view, seed, delta);
    std::vector<Diamond> ds;
    for (Vertex w : ball(view, seed, 2)) diamonds_through(view, w, ds);
    for (const Diamond& d : ds)
        if (auto hit = nibble3_from_diamond(view, d, seed)) return hit;
    return std::nullopt;
}

}  // namespace tightpart::detail
