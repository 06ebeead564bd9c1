#include "tightpart/profitable.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "structure_search.hpp"

namespace tightpart {

namespace {

using detail::View;

// Exhaustive maximum independent S subset of z with closed neighborhood
// (within the view) contained in z. Deterministic: lowest bitmask among the
// maximum-size witnesses wins.
std::optional<VertexSet> profitable_witness(const View& view, const VertexSet& z, int delta) {
    int k = static_cast<int>(z.size());
    if (k == 0) return std::nullopt;
    if (k > 63) throw GraphError("profitability check limited to sets of at most 63 vertices");

    std::vector<std::uint64_t> adj(k, 0);
    std::vector<char> closed_inside(k, 1);
    for (int i = 0; i < k; ++i) {
        for (Vertex w : view.g->neighbors(z[i])) {
            if (!view.is_alive(w)) continue;
            auto it = std::lower_bound(z.begin(), z.end(), w);
            if (it != z.end() && *it == w)
                adj[i] |= std::uint64_t{1} << (it - z.begin());
            else
                closed_inside[i] = 0;
        }
    }

    int best_count = 0;
    std::uint64_t best_mask = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        int count = __builtin_popcountll(mask);
        if (count <= best_count) continue;
        bool ok = true;
        for (std::uint64_t bits = mask; bits && ok; bits &= bits - 1) {
            int i = __builtin_ctzll(bits);
            if (!closed_inside[i] || (adj[i] & mask)) ok = false;
        }
        if (ok) {
            best_count = count;
            best_mask = mask;
        }
    }
    if (best_count == 0 || k > delta * best_count - 1) return std::nullopt;
    VertexSet s;
    for (std::uint64_t bits = best_mask; bits; bits &= bits - 1)
        s.push_back(z[__builtin_ctzll(bits)]);
    return s;
}

VertexSet closed_neighborhood(const View& view, const VertexSet& y) {
    VertexSet z = y;
    for (Vertex v : y)
        for (Vertex w : view.g->neighbors(v))
            if (view.is_alive(w)) z.push_back(w);
    std::sort(z.begin(), z.end());
    z.erase(std::unique(z.begin(), z.end()), z.end());
    return z;
}

}  // namespace

std::optional<VertexSet> check_profitable(const Graph& g, std::span<const Vertex> z, int delta) {
    if (delta < 3) throw GraphError("delta must be at least 3");
    VertexSet zz(z.begin(), z.end());
    std::sort(zz.begin(), zz.end());
    zz.erase(std::unique(zz.begin(), zz.end()), zz.end());
    for (Vertex v : zz)
        if (v < 0 || v >= g.num_vertices()) throw GraphError("vertex out of range");
    if (static_cast<int>(zz.size()) > nibble_size_limit(delta))
        throw GraphError("set of size " + std::to_string(zz.size()) +
                         " exceeds the nibble size cap " +
                         std::to_string(nibble_size_limit(delta)));
    View view{&g, nullptr};
    return profitable_witness(view, zz, delta);
}

std::optional<VertexSet> find_nibble_target(const Graph& g, int delta) {
    require_valid_instance(g, delta);
    View view{&g, nullptr};
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (auto hit = detail::nibble_pattern_at(view, v, delta)) return hit;
    return std::nullopt;
}

NibblePhaseResult nibble_phase(const Graph& g, int delta) {
    require_valid_instance(g, delta);
    const Vertex n = g.num_vertices();
    std::vector<char> alive(n, 1);
    View view{&g, &alive};
    NibblePhaseResult result;

    // Removal never creates new pattern instances (they are induced
    // subgraphs, so they only ever disappear), and each nibble removes its
    // seed. One ascending pass therefore reaches the fixed point.
    for (Vertex seed = 0; seed < n; ++seed) {
        if (!alive[seed]) continue;
        auto y = detail::nibble_pattern_at(view, seed, delta);
        if (!y) continue;
        VertexSet z = closed_neighborhood(view, *y);
        if (static_cast<int>(z.size()) > nibble_size_limit(delta) ||
            static_cast<int>(z.size()) > delta + 7)
            throw std::logic_error("nibble exceeds its size bound");
        if (!profitable_witness(view, z, delta))
            throw std::logic_error("emitted nibble is not profitable in the residual graph");
        for (Vertex v : z) alive[v] = 0;
        result.nibbles.push_back(std::move(z));
    }
    for (const auto& z : result.nibbles) result.c.insert(result.c.end(), z.begin(), z.end());
    std::sort(result.c.begin(), result.c.end());
    return result;
}

}  // namespace tightpart
