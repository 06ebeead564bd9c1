#ifndef TIGHTPART_KERNEL_HPP
#define TIGHTPART_KERNEL_HPP

#include "tightpart/decompose.hpp"
#include "tightpart/graph.hpp"
#include "tightpart/rational.hpp"

namespace tightpart {

// Two-sided estimate of the excess alpha(G) - n/delta:
//   k_lower <= alpha(G) - n/delta <= k_upper = 34*delta^2 * k_lower.
struct Excess {
    Rational k_lower;
    Rational k_upper;
};

Excess approximate_excess(const Decomposition& dec, int n, int delta);

enum class KernelBranch {
    Nibble,    // |C|+|D| >= 34*delta^2*k; instance is a guaranteed yes
    Residual,  // kernel is G[B|C|D], excess-equivalent to G
};

struct KernelResult {
    Graph g0;
    VertexSet mapping;  // new id -> original id
    int n0 = 0;
    KernelBranch branch = KernelBranch::Residual;
    bool guaranteed_yes = false;
};

// Equivalent instance for "alpha(G) >= n/delta + k" of size bounded in k
// alone: Nibble branch keeps n0 <= 34*delta^2*ceil(k), Residual branch keeps
// n0 < 114*delta^3*k (k >= 1). Throws on k < 0.
KernelResult kernelize(const Graph& g, const Decomposition& dec, int delta, const Rational& k);

struct AtlbDecision {
    bool yes = false;
    VertexSet certificate;  // independent set of size >= ceil(n/delta + k) when yes
};

// Decides alpha(G) >= n/delta + k through the kernel, solving the residual
// graph exactly when needed. Throws SizeLimitError (with the kernel size)
// when the exact stage would exceed exact_limit, GraphError on invalid
// instances or k < 0.
AtlbDecision decide_atlb(const Graph& g, int delta, const Rational& k, int exact_limit);

}  // namespace tightpart

#endif
