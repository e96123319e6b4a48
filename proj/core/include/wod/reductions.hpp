#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wod/graph.hpp"
#include "wod/kernel.hpp"

namespace wod {

// Bipartite odd-domination instance: find R' subset of side_r with |R'| <= k
// such that every vertex of side_b has an odd number of neighbors in R'.
// The sides must partition the vertices and every edge must cross them.
struct OddsetInstance {
    Graph graph;
    VertexSet side_r;
    VertexSet side_b;
    int k = 0;

    OddsetInstance(Graph graph, VertexSet side_r, VertexSet side_b, int k);
};

// A constructed gadget instance. `parameter` is the target problem's
// parameter k', `threshold` the explicit size bound its question asks about
// (they coincide when the question is "<= k'"). `labels` names every gadget
// vertex exactly once by its role, e.g. "a_2", "d_{1,3}", "c". `bipartition`
// is present when the target problem is bipartite; for an Oddset target the
// first side is R and the second is B.
struct ReductionOutput {
    Graph graph;
    int parameter = 0;
    int threshold = 0;
    std::map<std::string, int> labels;
    std::optional<std::pair<VertexSet, VertexSet>> bipartition;
};

// Oddset(R, B, k) -> "does G' have a WOD set of size >= n'-k'", k' = k+1.
// Gadget: one vertex a_u per u in R, k+2 duplicates d_{u,i} per u in B,
// k+2 pad vertices f_i, and a hub c adjacent to every a_u and every f_i;
// each d_{v,i} copies v's adjacency into the a-layer.
ReductionOutput reduce_oddset_to_wod(const OddsetInstance& inst);

// "kappa(G) >= n-k" -> "kappa'(G') <= k+2", k' = k+2. Gadget: k+3 apex
// vertices adjacent to all of V plus a hub c adjacent to the apexes.
ReductionOutput reduce_wod_to_nonwod(const Graph& g, int k);

// "kappa'(G) <= k" -> "kappa'(G') <= 2k" on a bipartite G', k' = 2k.
// Layered gadget over m = 2k+1: vertex layers A (a copy of V), B1, B2
// (adjacency mirrors of V), D (m duplicates per B-vertex), F (m duplicates
// per D-vertex), H (m shared sinks); sides A+D+H versus B1+B2+F.
// Requires k >= 1.
ReductionOutput reduce_nonwod_to_bipartite(const Graph& g, int k);

// "kappa'(G) <= k" -> "kappa_q(G') >= (k+1)n - k" where G' is k+1 disjoint
// copies of G; parameter stays k.
ReductionOutput reduce_nonwod_to_kq(const Graph& g, int k);

// "kappa_q(G) >= n-k" -> Oddset with k' = 2k+1. Gadget: ten copies A_{i,j}
// (i in {1,2}, j in 1..5) of V plus d_1, d_2, c. Band 2 of block 1 carries
// G's adjacency into bands 4,5; band 2 of block 2 carries the complement's;
// bands 1 and 3 attach to bands 4 and 5 by per-vertex matchings; d_i is an
// apex over block i's bands 4,5; band 2 also matches into band 5. B side:
// bands 4,5 of both blocks plus c.
ReductionOutput reduce_kq_to_oddset(const Graph& g, int k);

// View a reduction output with an Oddset-shaped bipartition as an instance.
OddsetInstance as_oddset(const ReductionOutput& out);

// Smallest, then lexicographically smallest, R' of size <= inst.k that
// oddly dominates all of side_b; absent when none exists. Enumeration is
// capped: more than `guard` candidate subsets raises TooLarge.
std::optional<VertexSet> solve_oddset(const OddsetInstance& inst, std::uint64_t guard = 100'000'000);

enum class ReductionKind {
    OddsetToWod,
    WodToNonwod,
    NonwodToBipartite,
    NonwodToKq,
    KqToOddset,
};

const char* reduction_name(ReductionKind kind);
std::optional<ReductionKind> reduction_by_name(const std::string& name);

// One source instance for the cross-validation harness: a graph and a
// parameter, plus the R side when the source problem is Oddset.
struct SourceInstance {
    Graph graph;
    int k = 0;
    std::optional<VertexSet> side_r;
};

struct VerifyBudget {
    // Cap on candidate subsets any single target-side decision may
    // enumerate; instances over the cap are skipped and recorded.
    std::uint64_t max_candidates = 100'000'000;
    // Passed to the exact solvers on the source side.
    SolverOptions source_options{};
};

struct InstanceVerdict {
    int index = 0;
    bool skipped = false;
    std::string skip_reason;
    bool source_positive = false;
    bool target_positive = false;
};

struct Counterexample {
    SourceInstance instance;  // greedily minimized
    bool source_positive = false;
    bool target_positive = false;
};

struct EquivalenceReport {
    ReductionKind kind = ReductionKind::OddsetToWod;
    int total = 0;
    int agreed = 0;
    std::vector<InstanceVerdict> verdicts;
    std::vector<Counterexample> counterexamples;

    int skipped_count() const;
    bool clean() const;  // no disagreement among the decided instances
};

// Decides source and target positivity independently for every instance and
// reports agreement. Disagreeing instances are greedily minimized (vertex
// deletions first, then edge deletions, lowest index first, restarting
// after every success) into counterexample artifacts.
EquivalenceReport verify_reduction(ReductionKind kind, const std::vector<SourceInstance>& sources,
                                   const VerifyBudget& budget = {});

std::string report_to_json(const EquivalenceReport& report);

// Enumerated default suite: every labeled graph with order <= max_n (for
// Oddset sources, every side split and cross-edge pattern), each paired
// with k = 0..max_k clamped to the reduction's precondition, plus
// `random_count` seeded random instances of order max_n+1 or max_n+2.
std::vector<SourceInstance> default_suite(ReductionKind kind, int max_n = 4, int max_k = 2,
                                          int random_count = 200, std::uint64_t seed = 1);

// Text form of an Oddset instance: the graph-core format followed by a
// structured comment line "# R: <indices>". The parameter travels separately.
std::string format_oddset(const OddsetInstance& inst);
OddsetInstance parse_oddset(const std::string& text, int k);

}  // namespace wod
