#pragma once

#include <optional>
#include <vector>

#include "wod/graph.hpp"
#include "wod/kernel.hpp"

namespace wod {

// Greedy WOD construction. A starts empty; while some v in Even(A) has
// strictly more neighbors in Even(A) than in Odd(A), the best such vertex
// (largest margin, ties to the lowest index) joins A. |Odd(A)| grows by the
// margin at every step, so the loop runs at most n times. The result is
// compared against the best single-vertex certificate and the larger wins
// (ties keep the greedy set). On graphs without isolated vertices the
// returned value satisfies 4 * value^2 >= n and 2 * (1 + max_degree) * value >= n.
struct GreedyWodResult {
    WodCertificate certificate;
    std::vector<int> odd_trace;       // |Odd(A)| after each accepted vertex
    bool singleton_fallback = false;  // single-vertex candidate beat the greedy set
};

GreedyWodResult greedy_wod_detailed(const Graph& g);
WodCertificate greedy_wod(const Graph& g);

// Which rule produced a decision. Deciders answer through a closed-form
// bound when one applies and fall back to the exact kernel otherwise.
enum class DecisionBranch {
    Trivial,     // degenerate parameter or edgeless graph
    Bound,       // closed-form bound answered without exact search
    Exact,       // exact kernel ran
    Complement,  // delegated to the complement graph (universal vertex present)
};

const char* decision_branch_name(DecisionBranch branch);

// Decides kappa(G) >= k. Isolated vertices never join any Odd set, so they
// are stripped first; with n' nonisolated vertices left, 4k^2 <= n' lets the
// greedy certificate answer yes outright, and otherwise the exact kernel
// runs on n' < 4k^2 vertices. Certificates are reported in G's indexing.
struct KappaDecision {
    bool yes;
    DecisionBranch branch;
    std::optional<WodCertificate> certificate;
};

KappaDecision decide_kappa_at_least(const Graph& g, int k, const SolverOptions& options = {});

// Decides kappa'(G) <= n - k for a parameter 0 <= k <= n (raises
// ParameterOutOfRange otherwise). Without a universal vertex,
// kappa'(G) <= n - sqrt(n)/4 always holds, so 16k^2 <= n answers yes with no
// certificate (the bound is not constructive); otherwise the exact kernel
// runs on n < 16k^2 vertices. With a universal vertex,
// kappa'(G) = n - kappa(complement(G)), so the question delegates to
// decide_kappa_at_least on the complement with the same parameter, and a yes
// answer converts the complement's witness D into an odd-size witness of G
// (appending one universal vertex, isolated in the complement, when |D| is
// even) whose closure in G is exactly V minus the complement's odd
// neighborhood.
struct KappaPrimeDecision {
    bool yes;
    DecisionBranch branch;
    std::optional<NonWodCertificate> certificate;
};

KappaPrimeDecision decide_kappa_prime_at_most(const Graph& g, int k, const SolverOptions& options = {});

// Decides kappa_q(G) >= k. For integer k, 2k <= n suffices because
// kappa_q(G) >= floor(n/2) on every graph; otherwise the exact kernel runs
// on n < 2k vertices.
struct KappaQDecision {
    bool yes;
    DecisionBranch branch;
};

KappaQDecision decide_kappa_q_at_least(const Graph& g, int k, const SolverOptions& options = {});

}  // namespace wod
