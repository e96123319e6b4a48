#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "wod/graph.hpp"

namespace wod {

// Notation used throughout: for C ⊆ V, Odd(C) is the set of vertices outside
// C with an odd number of neighbors inside C, and Even(C) = V \ (C ∪ Odd(C)).
// A set B is WOD (weakly odd dominated) when some C ⊆ V \ B puts all of B
// into Odd(C). The three graph parameters are
//   kappa(G)       = max_C |Odd(C)|            (largest WOD set),
//   kappa_prime(G) = min_{|C| odd} |C ∪ Odd(C)| (smallest non-WOD set),
//   kappa_q(G)     = max(kappa(G), n - kappa_prime(G)).

/// Odd(C): vertices outside C with an odd number of neighbors in C.
/// Computed as the XOR of the neighborhood rows of C, minus C itself.
VertexSet odd_neighborhood(const Graph& g, const VertexSet& c);

/// Even(A) = V \ (A ∪ Odd(A)).
VertexSet even_set(const Graph& g, const VertexSet& a);

/// Evidence that a set is WOD: every vertex of `dominated` has an odd number
/// of neighbors in `witness`, witness ∩ dominated = ∅, value = |dominated|.
struct WodCertificate {
    VertexSet witness;
    VertexSet dominated;
    int value = 0;

    bool operator==(const WodCertificate&) const = default;
};

/// Evidence that a set is non-WOD: |witness| is odd and
/// closure = witness ∪ Odd(witness), value = |closure|.
struct NonWodCertificate {
    VertexSet witness;
    VertexSet closure;
    int value = 0;

    bool operator==(const NonWodCertificate&) const = default;
};

using Certificate = std::variant<WodCertificate, NonWodCertificate>;

struct WodDecision {
    bool wod = false;
    std::optional<VertexSet> witness;  // present iff wod
};

/// Decides whether B is WOD by solving the parity system over GF(2): one
/// equation per v in B requiring |N(v) ∩ C| odd, unknowns indexed by V \ B.
/// Elimination pivots on the lowest-index available column and free
/// variables are set to 0, so the witness is canonical.
WodDecision is_wod(const Graph& g, const VertexSet& b);

/// Reference decision procedure: tries every C ⊆ V \ B.
/// Throws TooLarge when |V \ B| > 25.
bool is_wod_bruteforce(const Graph& g, const VertexSet& b);

struct SolverOptions {
    int max_order = 30;  // exact-solver guard; raise only together with force
    bool force = false;  // accept instances above max_order
    int threads = 1;     // subset search workers (results are thread-count independent)
};

/// Exact kappa via branch-and-bound over subsets. Vertices branch in
/// descending-degree order; a subtree is pruned only when an upper bound on
/// its achievable |Odd| is strictly below the incumbent, so every optimum
/// survives. Among maximizers the witness is the lexicographically smallest
/// (as a sorted index sequence). Throws TooLarge when order > max_order and
/// force is not set.
WodCertificate kappa(const Graph& g, const SolverOptions& options = {});

/// Exact kappa_prime, same search scheme maximizing |Even(C)| over odd-size
/// C. Same guard and tie-break rules as kappa.
NonWodCertificate kappa_prime(const Graph& g, const SolverOptions& options = {});

struct KappaQResult {
    int value = 0;
    Certificate evidence;  // WOD cert if kappa wins the max (ties included), non-WOD otherwise
};

KappaQResult kappa_q(const Graph& g, const SolverOptions& options = {});

/// Threshold query: some certificate with value >= t, or absent. Sound and
/// complete because any C with |Odd(C)| >= t has |C| <= n - t, so only
/// subsets of size <= n - t are enumerated (ascending size, then lex).
std::optional<WodCertificate> kappa_at_least(const Graph& g, int t);

/// Threshold query: kappa_prime(G) <= t? Any C with |C ∪ Odd(C)| <= t has
/// |C| <= t, so only odd subsets of size <= t are enumerated (ascending
/// size, then lex; first hit returned, no minimality promise).
std::optional<NonWodCertificate> kappa_prime_at_most(const Graph& g, int t);

/// Threshold query: kappa_q(G) >= t, via the two queries above.
struct KappaQThreshold {
    bool yes = false;
    std::optional<Certificate> evidence;
};
KappaQThreshold kappa_q_at_least(const Graph& g, int t);

/// Enumeration cost of the threshold queries, saturating at UINT64_MAX:
/// sum of C(n, i) for i <= d (all_parities) or odd i only.
std::uint64_t subset_count_at_most(int n, int d);
std::uint64_t odd_subset_count_at_most(int n, int d);

bool verify_certificate(const Graph& g, const WodCertificate& cert);
bool verify_certificate(const Graph& g, const NonWodCertificate& cert);
bool verify_certificate(const Graph& g, const Certificate& cert);

/// JSON schema: {"kind":"wod","witness":[...],"dominated":[...],"value":N}
/// or {"kind":"nonwod","witness":[...],"closure":[...],"value":N}.
std::string certificate_to_json(const Certificate& cert);
/// Parses the schema above; `order` fixes the vertex universe.
/// Throws ParseError on malformed input; MemberOutOfRange when an index
/// does not fit the universe (a well-formed certificate for the wrong graph).
Certificate certificate_from_json(const std::string& text, int order);

int certificate_value(const Certificate& cert);

}  // namespace wod
