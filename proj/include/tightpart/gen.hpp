#ifndef TIGHTPART_GEN_HPP
#define TIGHTPART_GEN_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "tightpart/catalog.hpp"
#include "tightpart/graph.hpp"

namespace tightpart {

// Splittable 64-bit PRNG (splitmix64); the single randomness source of the
// generators so every output is a pure function of (spec, seed).
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }
    SplitMix64 split() { return SplitMix64(next()); }
};

struct GenSpec {
    int delta = 3;
    // Pieces laid out disjointly in the listed order.
    std::vector<std::pair<TightKind, int>> pieces;
    int extra_vertices = 0;
    int matching_edges = 0;
    std::uint64_t seed = 0;
};

// Disjoint union of the requested catalog pieces plus isolated extras, then
// `matching_edges` random edges joining vertices of degree < delta without
// creating a clique on delta+1 vertices. Each edge gets a bounded number of
// placement retries; exhausting them is an error rather than a silent skip.
Graph gen_tight_union(const GenSpec& spec);

// Random edge attempts on n vertices, accepting only edges that keep the
// max degree <= delta and the graph K_{delta+1}-free.
Graph gen_random_bounded(int n, int delta, int edge_attempts, std::uint64_t seed);

}  // namespace tightpart

#endif
