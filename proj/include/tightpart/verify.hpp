#ifndef TIGHTPART_VERIFY_HPP
#define TIGHTPART_VERIFY_HPP

#include <string>
#include <vector>

#include "tightpart/decompose.hpp"
#include "tightpart/graph.hpp"
#include "tightpart/kernel.hpp"
#include "tightpart/rational.hpp"

namespace tightpart {

// One guarantee checked from first principles (never trusting pipeline
// internals); a failure always carries a machine-checkable witness.
struct GuaranteeCheck {
    std::string name;
    bool pass = false;
    std::string detail;
    VertexSet witness;
};

struct VerificationReport {
    std::vector<GuaranteeCheck> checks;
    bool all_pass() const;
    const GuaranteeCheck* find(const std::string& name) const;
};

// Re-derives every decomposition guarantee: the partition property, the
// tight pieces (isomorphism re-run per piece), the clique parts and the B
// size bound, the profitable nibble chain (brute force re-check), the
// delta-freeness of D in G-C, and — when use_exact and the instance fits —
// the independence-number equality against the exact solver.
VerificationReport verify_decomposition(const Graph& g, int delta, const Decomposition& dec,
                                        bool use_exact, int exact_limit = 60);

struct BoundCheck {
    bool pass = false;
    int alpha = 0;
    long long m = 0;
    Rational lhs;  // alpha
    Rational rhs;  // n/delta + m/(34*delta^2), or n/3 + m/42 for delta = 3
};

// alpha(G) >= n/delta + m/(34*delta^2) with m = #delta-free vertices
// (delta >= 4), or alpha(G) >= n/3 + m(G)/42 (delta = 3).
BoundCheck check_free_bound(const Graph& g, int delta, int exact_limit = 60);

struct KernelCheck {
    bool pass = false;
    bool original_yes = false;
    bool kernel_yes = false;
    bool size_ok = false;
    std::string detail;
};

// Exactly decides both sides of the kernel equivalence and re-checks the
// branch-specific size bound.
KernelCheck verify_kernel(const Graph& g, const KernelResult& kr, int delta, const Rational& k,
                          int exact_limit = 60);

}  // namespace tightpart

#endif
