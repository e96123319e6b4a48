#include "wod/bounds.hpp"

namespace wod {

GreedyWodResult greedy_wod_detailed(const Graph& g) {
    int n = g.order();
    VertexSet a(n);
    VertexSet parity(n);  // for every vertex, parity of its neighbors inside A
    std::vector<int> trace;
    for (;;) {
        VertexSet odd = parity;
        odd.subtract(a);
        VertexSet even = a;
        even |= odd;
        even = even.complement();
        int best_vertex = -1;
        int best_margin = 0;
        even.for_each([&](int v) {
            int margin = g.neighbors(v).count_and(even) - g.neighbors(v).count_and(odd);
            if (margin > best_margin) {
                best_margin = margin;
                best_vertex = v;
            }
        });
        if (best_vertex < 0) break;
        a.set(best_vertex);
        parity ^= g.neighbors(best_vertex);
        VertexSet next_odd = parity;
        next_odd.subtract(a);
        trace.push_back(next_odd.count());
    }
    VertexSet dominated = parity;
    dominated.subtract(a);
    GreedyWodResult result{WodCertificate{a, dominated, dominated.count()}, std::move(trace), false};

    int vmax = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(vmax)) vmax = v;
    if (g.degree(vmax) > result.certificate.value) {
        VertexSet witness = VertexSet::from_indices(n, {vmax});
        result.certificate = WodCertificate{witness, g.neighbors(vmax), g.degree(vmax)};
        result.singleton_fallback = true;
    }
    return result;
}

WodCertificate greedy_wod(const Graph& g) { return greedy_wod_detailed(g).certificate; }

const char* decision_branch_name(DecisionBranch branch) {
    switch (branch) {
        case DecisionBranch::Trivial: return "trivial";
        case DecisionBranch::Bound: return "bound";
        case DecisionBranch::Exact: return "exact";
        case DecisionBranch::Complement: return "complement";
    }
    return "unknown";
}

namespace {

// Restate a certificate found on an induced subgraph in the indexing of the
// original graph. Dropped vertices are isolated, so the odd neighborhood of
// the lifted witness picks up exactly the lifted dominated set.
WodCertificate lift_certificate(const InducedSubgraph& sub, const WodCertificate& cert, int order) {
    VertexSet witness(order), dominated(order);
    cert.witness.for_each([&](int v) { witness.set(sub.new_to_old[static_cast<std::size_t>(v)]); });
    cert.dominated.for_each([&](int v) { dominated.set(sub.new_to_old[static_cast<std::size_t>(v)]); });
    return WodCertificate{witness, dominated, cert.value};
}

}  // namespace

KappaDecision decide_kappa_at_least(const Graph& g, int k, const SolverOptions& options) {
    int n = g.order();
    if (k <= 0) return {true, DecisionBranch::Trivial, WodCertificate{VertexSet(n), VertexSet(n), 0}};
    if (g.edge_count() == 0) return {false, DecisionBranch::Trivial, std::nullopt};
    InducedSubgraph sub = strip_isolated(g);
    int stripped_order = sub.graph.order();
    if (4LL * k * k <= stripped_order) {
        GreedyWodResult greedy = greedy_wod_detailed(sub.graph);
        if (greedy.certificate.value >= k)
            return {true, DecisionBranch::Bound, lift_certificate(sub, greedy.certificate, n)};
        // The greedy guarantee makes this unreachable; stay sound regardless.
    }
    WodCertificate exact = kappa(sub.graph, options);
    if (exact.value >= k) return {true, DecisionBranch::Exact, lift_certificate(sub, exact, n)};
    return {false, DecisionBranch::Exact, std::nullopt};
}

KappaPrimeDecision decide_kappa_prime_at_most(const Graph& g, int k, const SolverOptions& options) {
    int n = g.order();
    if (k < 0 || k > n)
        raise(Errc::ParameterOutOfRange,
              "parameter k = " + std::to_string(k) + " must lie in [0, " + std::to_string(n) + "]");
    VertexSet universal = universal_vertices(g);
    if (universal.empty()) {
        if (16LL * k * k <= n) return {true, DecisionBranch::Bound, std::nullopt};
        NonWodCertificate exact = kappa_prime(g, options);
        if (exact.value <= n - k) return {true, DecisionBranch::Exact, exact};
        return {false, DecisionBranch::Exact, std::nullopt};
    }

    Graph comp = complement(g);
    KappaDecision inner = decide_kappa_at_least(comp, k, options);
    if (!inner.yes) return {false, DecisionBranch::Complement, std::nullopt};

    // Build an odd-size witness for g. The inner witness never contains a
    // vertex isolated in the complement (those are stripped), so a universal
    // vertex of g is free to fix the parity.
    VertexSet witness = inner.certificate->witness;
    if ((witness.count() & 1) == 0) {
        int u = universal.lowest();
        if (witness.test(u))
            witness.reset(u);
        else
            witness.set(u);
    }
    // With |witness| odd, closure in g is V minus the complement's odd
    // neighborhood, whose size is at least k, so the closure has size <= n-k.
    VertexSet closure = odd_neighborhood(comp, witness).complement();
    return {true, DecisionBranch::Complement, NonWodCertificate{witness, closure, closure.count()}};
}

KappaQDecision decide_kappa_q_at_least(const Graph& g, int k, const SolverOptions& options) {
    if (2LL * k <= g.order()) return {true, DecisionBranch::Bound};
    KappaQResult exact = kappa_q(g, options);
    return {exact.value >= k, DecisionBranch::Exact};
}

}  // namespace wod
