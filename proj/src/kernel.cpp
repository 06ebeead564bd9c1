#include "tightpart/kernel.hpp"

#include <algorithm>

#include "tightpart/solver.hpp"

namespace tightpart {

Excess approximate_excess(const Decomposition& dec, int n, int delta) {
    long long cd = static_cast<long long>(dec.c.size() + dec.d.size());
    if (cd > n) throw GraphError("decomposition does not belong to this instance");
    Excess e;
    e.k_lower = make_rational(cd, 34LL * delta * delta);
    e.k_upper = make_rational(cd);
    return e;
}

KernelResult kernelize(const Graph& g, const Decomposition& dec, int delta, const Rational& k) {
    if (k < 0) throw GraphError("parameter k must be non-negative");
    const Rational threshold = make_rational(34LL * delta * delta) * k;
    const long long cd = static_cast<long long>(dec.c.size() + dec.d.size());

    KernelResult result;
    VertexSet keep;
    if (Rational(cd) >= threshold) {
        // A guaranteed-yes instance; shrink it to nibbles (or C plus a
        // slice of D) so the witness bound alpha >= n0/delta + k survives.
        result.branch = KernelBranch::Nibble;
        result.guaranteed_yes = true;
        long long r = static_cast<long long>(dec.nibbles.size());
        if (Rational(r) >= make_rational(delta) * k) {
            long long take = ceil_ll(make_rational(delta) * k);
            for (long long i = 0; i < take; ++i)
                keep.insert(keep.end(), dec.nibbles[i].begin(), dec.nibbles[i].end());
            std::sort(keep.begin(), keep.end());
        } else {
            long long want = ceil_ll(threshold) - static_cast<long long>(dec.c.size());
            keep = dec.c;
            for (long long i = 0; i < want && i < static_cast<long long>(dec.d.size()); ++i)
                keep.push_back(dec.d[i]);
            std::sort(keep.begin(), keep.end());
        }
    } else {
        result.branch = KernelBranch::Residual;
        keep = dec.residual();
    }
    auto [sub, map] = g.induced(keep);
    result.g0 = std::move(sub);
    result.mapping = std::move(map);
    result.n0 = result.g0.num_vertices();
    return result;
}

AtlbDecision decide_atlb(const Graph& g, int delta, const Rational& k, int exact_limit) {
    Decomposition dec = decompose(g, delta);
    KernelResult kr = kernelize(g, dec, delta, k);
    const Rational target = make_rational(g.num_vertices(), delta) + k;

    AtlbDecision decision;
    VertexSet residual = dec.residual();
    if (kr.guaranteed_yes) {
        decision.yes = true;
        if (static_cast<int>(residual.size()) > exact_limit) return decision;  // no certificate
    } else if (kr.n0 > exact_limit) {
        throw SizeLimitError(kr.n0);
    }

    auto [sub, map] = g.induced(residual);
    MisResult mis = max_independent_set(sub, std::max(exact_limit, sub.num_vertices()));
    if (!kr.guaranteed_yes)
        decision.yes = Rational(mis.size) + make_rational(dec.a().size(), delta) >= target;
    if (!decision.yes) return decision;

    VertexSet witness;
    witness.reserve(mis.witness.size());
    for (Vertex v : mis.witness) witness.push_back(map[v]);
    decision.certificate = extend_solution(g, delta, dec, witness);
    if (Rational(static_cast<long long>(decision.certificate.size())) < target)
        throw std::logic_error("certificate smaller than the decision threshold");
    return decision;
}

}  // namespace tightpart
