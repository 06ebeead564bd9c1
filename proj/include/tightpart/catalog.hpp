#ifndef TIGHTPART_CATALOG_HPP
#define TIGHTPART_CATALOG_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tightpart/graph.hpp"

namespace tightpart {

// The fixed catalog of graphs with independence number exactly |V|/delta
// that can tile a vertex set. Non-clique members exist only for delta 3..5.
enum class TightKind {
    Clique,                   // K_delta, any delta
    C5BoxK2,                  // delta 5, strong product of C5 and K2, 10 vertices
    C8Squared,                // delta 4, square of the 8-cycle
    ExtendedClique,           // delta 4, 8 vertices, two degree-3 attachments
    ExtendedDoubleClique,     // delta 4, 12 vertices
    DiamondNecklace1,         // delta 3, 6 vertices (one diamond)
    DiamondNecklace2,         // delta 3, 9 vertices (two diamonds)
    DiamondNecklace3,         // delta 3, 12 vertices (three diamonds)
    HavelNecklace1,           // delta 3, 9 vertices
    HavelNecklace2,           // delta 3, 12 vertices
    TriangleDominated6Cycle,  // delta 3, 12 vertices
};

constexpr std::array<TightKind, 11> kAllTightKinds = {
    TightKind::Clique,           TightKind::C5BoxK2,
    TightKind::C8Squared,        TightKind::ExtendedClique,
    TightKind::ExtendedDoubleClique, TightKind::DiamondNecklace1,
    TightKind::DiamondNecklace2, TightKind::DiamondNecklace3,
    TightKind::HavelNecklace1,   TightKind::HavelNecklace2,
    TightKind::TriangleDominated6Cycle,
};

std::string kind_name(TightKind kind);
std::optional<TightKind> kind_from_name(const std::string& name);
bool kind_valid_for(TightKind kind, int delta);
int canonical_size(TightKind kind, int delta);

// A recognized tight induced subgraph of some host graph.
struct TightPiece {
    TightKind kind;
    VertexSet vertices;  // sorted, in host ids
};

// Canonical labeled copy of a catalog graph. Throws on kind/delta mismatch.
Graph make_tight(TightKind kind, int delta);

// Recognizes connected graphs isomorphic to a catalog member.
std::optional<TightKind> classify_tight(const Graph& g, int delta);

enum class StructureFamily {
    TightComponents,  // components of size <= 4*delta isomorphic to a catalog graph
    ExtendedCliques,  // delta 4 only; maximal pairwise-disjoint scan
    Necklaces,        // delta 3 only; diamond + Havel necklaces, disjoint scan
    Diamonds,         // delta 3; all induced K4-minus-edge vertex sets
    Triangles,        // all triangle vertex sets
    DeltaCliques,     // all K_delta vertex sets
};

// Vertex sets sorted ascending; list ordered by minimum vertex id.
std::vector<VertexSet> find_structures(const Graph& g, int delta, StructureFamily family);

// Vertices contained in no tight induced subgraph of g.
VertexSet delta_free_vertices(const Graph& g, int delta);

// Delta = 3 bookkeeping: free diamonds are diamonds contained in no induced
// necklace; m = (#3-free vertices) + (#free diamonds).
struct FreeDiamondStats {
    std::vector<VertexSet> free_diamonds;
    long long m1 = 0;  // 3-free vertices
    long long m2 = 0;  // free diamonds
    long long m() const { return m1 + m2; }
};

FreeDiamondStats free_diamonds_and_m(const Graph& g);

// Backtracking isomorphism with degree prefilter; both graphs are expected
// to be tiny (catalog scale).
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace tightpart

#endif
