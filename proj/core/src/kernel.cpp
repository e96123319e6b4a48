#include "wod/kernel.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <thread>

#include <json.hpp>

namespace wod {

namespace {

void require_fits(const Graph& g, const VertexSet& s, const char* what) {
    if (s.universe() != g.order())
        raise(Errc::MemberOutOfRange, std::string(what) + " has universe " + std::to_string(s.universe()) +
                                          " but the graph has order " + std::to_string(g.order()));
}

}  // namespace

VertexSet odd_neighborhood(const Graph& g, const VertexSet& c) {
    require_fits(g, c, "vertex set");
    VertexSet parity(g.order());
    c.for_each([&](int v) { parity ^= g.neighbors(v); });
    parity.subtract(c);
    return parity;
}

VertexSet even_set(const Graph& g, const VertexSet& a) {
    VertexSet out = odd_neighborhood(g, a);
    out |= a;
    return out.complement();
}

WodDecision is_wod(const Graph& g, const VertexSet& b) {
    require_fits(g, b, "candidate set");
    int n = g.order();
    VertexSet allowed = b.complement();
    std::vector<VertexSet> rows;
    std::vector<char> rhs;
    rows.reserve(static_cast<std::size_t>(b.count()));
    b.for_each([&](int v) {
        rows.push_back(g.neighbors(v) & allowed);
        rhs.push_back(1);
    });
    // Reduced row echelon form over GF(2), pivoting on the lowest-index
    // column still available.
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (int col = 0; col < n && rank < rows.size(); ++col) {
        if (!allowed.test(col)) continue;
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot].test(col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        std::swap(rhs[pivot], rhs[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && rows[r].test(col)) {
                rows[r] ^= rows[rank];
                rhs[r] = static_cast<char>(rhs[r] ^ rhs[rank]);
            }
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (rhs[r]) return {false, std::nullopt};
    VertexSet witness(n);
    for (std::size_t r = 0; r < rank; ++r)
        if (rhs[r]) witness.set(pivot_col[r]);
    return {true, witness};
}

bool is_wod_bruteforce(const Graph& g, const VertexSet& b) {
    require_fits(g, b, "candidate set");
    std::vector<int> allowed = b.complement().to_indices();
    if (allowed.size() > 25)
        raise(Errc::TooLarge, "brute force would enumerate 2^" + std::to_string(allowed.size()) +
                                  " candidate sets (limit 2^25)");
    if (b.empty()) return true;  // C = {} dominates nothing, which suffices
    VertexSet parity(g.order());
    std::uint32_t total = 1u << allowed.size();
    // Gray-code walk: one neighborhood XOR per enumerated subset.
    for (std::uint32_t step = 1; step < total; ++step) {
        int flipped = std::countr_zero(step);
        parity ^= g.neighbors(allowed[static_cast<std::size_t>(flipped)]);
        if (b.is_subset_of(parity)) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Exact kappa / kappa_prime: depth-first subset search.
//
// Vertices branch in descending-degree order. The state keeps, for every
// vertex, the parity of its decided neighbors in C. A vertex can still end
// up counted only if it is not committed to C and either (a) some undecided
// vertex is adjacent to it, or (b) its parity already matches the objective.
// reach[d] = union of neighborhoods of the vertices not yet decided at depth
// d, so the bound is one OR + ANDNOT + popcount per node. The bound never
// undercounts, and pruning is strict, so every optimum (and every tie, for
// the lexicographic rule) survives.
// ---------------------------------------------------------------------------

namespace {

struct Incumbent {
    int value = -1;
    VertexSet witness;
};

bool improves(int value, const VertexSet& witness, const Incumbent& best) {
    if (value != best.value) return value > best.value;
    return VertexSet::lex_less(witness, best.witness);
}

struct SubsetSearch {
    const Graph& g;
    int n;
    bool even_objective;  // false: maximize |Odd(C)|; true: maximize |Even(C)|, |C| odd
    std::vector<int> order;
    std::vector<VertexSet> reach;
    std::vector<VertexSet> scratch;
    VertexSet in_c, parity, parity_comp;
    Incumbent best;

    SubsetSearch(const Graph& graph, bool even_obj, const Incumbent& seed)
        : g(graph), n(graph.order()), even_objective(even_obj), best(seed) {
        order.resize(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        reach.assign(static_cast<std::size_t>(n) + 1, VertexSet(n));
        for (int d = n - 1; d >= 0; --d) {
            reach[static_cast<std::size_t>(d)] = reach[static_cast<std::size_t>(d) + 1];
            reach[static_cast<std::size_t>(d)] |= g.neighbors(order[static_cast<std::size_t>(d)]);
        }
        scratch.assign(static_cast<std::size_t>(n) + 1, VertexSet(n));
        in_c = VertexSet(n);
        parity = VertexSet(n);
        parity_comp = VertexSet::full(n);
    }

    void include(int v) {
        in_c.set(v);
        parity ^= g.neighbors(v);
        parity_comp ^= g.neighbors(v);
    }

    void exclude(int v) {
        in_c.reset(v);
        parity ^= g.neighbors(v);
        parity_comp ^= g.neighbors(v);
    }

    void run_prefix(std::uint32_t mask, int prefix_len) {
        int committed = 0;
        for (int i = 0; i < prefix_len; ++i) {
            if ((mask >> i) & 1u) {
                include(order[static_cast<std::size_t>(i)]);
                ++committed;
            }
        }
        dfs(prefix_len, committed);
    }

    void dfs(int depth, int c_count) {
        VertexSet& potential = scratch[static_cast<std::size_t>(depth)];
        potential = reach[static_cast<std::size_t>(depth)];
        potential |= even_objective ? parity_comp : parity;
        potential.subtract(in_c);
        int bound = potential.count();
        if (bound < best.value) return;
        if (depth == n) {
            if (even_objective && (c_count & 1) == 0) return;
            if (improves(bound, in_c, best)) best = {bound, in_c};
            return;
        }
        int v = order[static_cast<std::size_t>(depth)];
        include(v);
        dfs(depth + 1, c_count + 1);
        exclude(v);
        dfs(depth + 1, c_count);
    }
};

Incumbent subset_search(const Graph& g, bool even_objective, const Incumbent& seed, int threads) {
    int n = g.order();
    threads = std::max(1, threads);
    if (threads == 1 || n < 8) {
        SubsetSearch search(g, even_objective, seed);
        search.run_prefix(0, 0);
        return search.best;
    }
    int prefix_len = 0;
    while ((1 << prefix_len) < 4 * threads && prefix_len < n && prefix_len < 12) ++prefix_len;
    std::uint32_t tasks = 1u << prefix_len;
    std::vector<Incumbent> results(tasks, seed);
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
        workers.emplace_back([&, w] {
            for (std::uint32_t mask = static_cast<std::uint32_t>(w); mask < tasks;
                 mask += static_cast<std::uint32_t>(threads)) {
                SubsetSearch search(g, even_objective, seed);
                search.run_prefix(mask, prefix_len);
                results[mask] = search.best;
            }
        });
    }
    for (auto& worker : workers) worker.join();
    // Merge by (value, lexicographic witness); independent of worker count.
    Incumbent merged = seed;
    for (const Incumbent& r : results)
        if (improves(r.value, r.witness, merged)) merged = r;
    return merged;
}

void check_guard(const Graph& g, const SolverOptions& options) {
    if (g.order() > options.max_order && !options.force)
        raise(Errc::TooLarge, "order " + std::to_string(g.order()) + " exceeds the exact-solver guard of " +
                                  std::to_string(options.max_order) + " (pass force to override)");
}

Incumbent kappa_seed(const Graph& g) {
    // {} scores 0; the best single vertex scores its degree. Starting from
    // these makes the size cutoff |Odd(C)| <= n - |C| bite immediately.
    Incumbent seed{0, VertexSet(g.order())};
    int vmax = 0;
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) > g.degree(vmax)) vmax = v;
    if (g.degree(vmax) > 0) seed = {g.degree(vmax), VertexSet::from_indices(g.order(), {vmax})};
    return seed;
}

Incumbent kappa_prime_seed(const Graph& g) {
    int n = g.order();
    int vbest = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(vbest)) vbest = v;
    return {n - 1 - g.degree(vbest), VertexSet::from_indices(n, {vbest})};
}

}  // namespace

WodCertificate kappa(const Graph& g, const SolverOptions& options) {
    check_guard(g, options);
    Incumbent best = subset_search(g, false, kappa_seed(g), options.threads);
    VertexSet dominated = odd_neighborhood(g, best.witness);
    return WodCertificate{best.witness, dominated, dominated.count()};
}

NonWodCertificate kappa_prime(const Graph& g, const SolverOptions& options) {
    check_guard(g, options);
    Incumbent best = subset_search(g, true, kappa_prime_seed(g), options.threads);
    VertexSet closure = odd_neighborhood(g, best.witness);
    closure |= best.witness;
    return NonWodCertificate{best.witness, closure, closure.count()};
}

KappaQResult kappa_q(const Graph& g, const SolverOptions& options) {
    WodCertificate wod_cert = kappa(g, options);
    NonWodCertificate nonwod_cert = kappa_prime(g, options);
    int via_kappa = wod_cert.value;
    int via_prime = g.order() - nonwod_cert.value;
    if (via_kappa >= via_prime) return {via_kappa, Certificate(std::move(wod_cert))};
    return {via_prime, Certificate(std::move(nonwod_cert))};
}

// ---------------------------------------------------------------------------
// Threshold queries: plain combination enumeration, ascending size then lex,
// with the parity of each candidate maintained incrementally along the
// recursion. Cost is sum of C(n, i) over the admissible sizes.
// ---------------------------------------------------------------------------

namespace {

struct ComboEnumerator {
    const Graph& g;
    int n;
    VertexSet members, parity;

    explicit ComboEnumerator(const Graph& graph)
        : g(graph), n(graph.order()), members(graph.order()), parity(graph.order()) {}

    template <typename Visit>
    bool run(int next, int remaining, Visit&& visit) {
        if (remaining == 0) return visit(members, parity);
        for (int v = next; v <= n - remaining; ++v) {
            members.set(v);
            parity ^= g.neighbors(v);
            if (run(v + 1, remaining - 1, visit)) return true;
            parity ^= g.neighbors(v);
            members.reset(v);
        }
        return false;
    }
};

}  // namespace

std::optional<WodCertificate> kappa_at_least(const Graph& g, int t) {
    int n = g.order();
    if (t <= 0) return WodCertificate{VertexSet(n), VertexSet(n), 0};
    if (t > n) return std::nullopt;
    std::optional<WodCertificate> found;
    ComboEnumerator combos(g);
    VertexSet dominated(n);
    for (int size = 0; size <= n - t && !found; ++size) {
        combos.run(0, size, [&](const VertexSet& members, const VertexSet& parity) {
            dominated = parity;
            dominated.subtract(members);
            if (dominated.count() >= t) {
                found = WodCertificate{members, dominated, dominated.count()};
                return true;
            }
            return false;
        });
    }
    return found;
}

std::optional<NonWodCertificate> kappa_prime_at_most(const Graph& g, int t) {
    int n = g.order();
    if (t < 1) return std::nullopt;
    std::optional<NonWodCertificate> found;
    ComboEnumerator combos(g);
    VertexSet closure(n);
    for (int size = 1; size <= std::min(t, n) && !found; size += 2) {
        combos.run(0, size, [&](const VertexSet& members, const VertexSet& parity) {
            closure = parity;
            closure |= members;
            if (closure.count() <= t) {
                found = NonWodCertificate{members, closure, closure.count()};
                return true;
            }
            return false;
        });
    }
    return found;
}

KappaQThreshold kappa_q_at_least(const Graph& g, int t) {
    if (auto wod_cert = kappa_at_least(g, t)) return {true, Certificate(std::move(*wod_cert))};
    int prime_bound = g.order() - t;
    if (prime_bound >= 1) {
        if (auto nonwod_cert = kappa_prime_at_most(g, prime_bound))
            return {true, Certificate(std::move(*nonwod_cert))};
    }
    return {false, std::nullopt};
}

std::uint64_t subset_count_at_most(int n, int d) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    if (n < 0 || d < 0) return 0;
    d = std::min(d, n);
    std::uint64_t total = 0;
    std::uint64_t binom = 1;  // C(n, 0)
    for (int i = 0;; ++i) {
        if (total > kMax - binom) return kMax;
        total += binom;
        if (i == d) return total;
        // C(n, i+1) = C(n, i) * (n - i) / (i + 1), exact at every step.
        std::uint64_t numer = static_cast<std::uint64_t>(n - i);
        if (binom > kMax / numer) return kMax;
        binom = binom * numer / static_cast<std::uint64_t>(i + 1);
    }
}

std::uint64_t odd_subset_count_at_most(int n, int d) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    if (n < 0 || d < 0) return 0;
    d = std::min(d, n);
    std::uint64_t total = 0;
    std::uint64_t binom = static_cast<std::uint64_t>(n);  // C(n, 1)
    for (int i = 1; i <= d; ++i) {
        if (i & 1) {
            if (total > kMax - binom) return kMax;
            total += binom;
        }
        if (i == d) break;
        std::uint64_t numer = static_cast<std::uint64_t>(n - i);
        if (binom > kMax / numer) return kMax;
        binom = binom * numer / static_cast<std::uint64_t>(i + 1);
    }
    return total;
}

bool verify_certificate(const Graph& g, const WodCertificate& cert) {
    if (cert.witness.universe() != g.order() || cert.dominated.universe() != g.order()) return false;
    if (cert.witness.intersects(cert.dominated)) return false;
    if (odd_neighborhood(g, cert.witness) != cert.dominated) return false;
    return cert.value == cert.dominated.count();
}

bool verify_certificate(const Graph& g, const NonWodCertificate& cert) {
    if (cert.witness.universe() != g.order() || cert.closure.universe() != g.order()) return false;
    if ((cert.witness.count() & 1) == 0) return false;
    VertexSet closure = odd_neighborhood(g, cert.witness);
    closure |= cert.witness;
    if (closure != cert.closure) return false;
    return cert.value == cert.closure.count();
}

bool verify_certificate(const Graph& g, const Certificate& cert) {
    return std::visit([&](const auto& c) { return verify_certificate(g, c); }, cert);
}

namespace {

nlohmann::ordered_json indices_json(const VertexSet& s) { return nlohmann::ordered_json(s.to_indices()); }

std::vector<int> json_indices(const nlohmann::json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_array())
        raise(Errc::ParseError, std::string("certificate is missing the ") + field + " array");
    std::vector<int> out;
    for (const auto& item : j[field]) {
        if (!item.is_number_integer())
            raise(Errc::ParseError, std::string(field) + " must contain integers only");
        out.push_back(item.get<int>());
    }
    return out;
}

int json_value(const nlohmann::json& j) {
    if (!j.contains("value") || !j["value"].is_number_integer())
        raise(Errc::ParseError, "certificate is missing the integer value field");
    return j["value"].get<int>();
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
    nlohmann::ordered_json j;
    if (const auto* wod_cert = std::get_if<WodCertificate>(&cert)) {
        j["kind"] = "wod";
        j["witness"] = indices_json(wod_cert->witness);
        j["dominated"] = indices_json(wod_cert->dominated);
        j["value"] = wod_cert->value;
    } else {
        const auto& nonwod_cert = std::get<NonWodCertificate>(cert);
        j["kind"] = "nonwod";
        j["witness"] = indices_json(nonwod_cert.witness);
        j["closure"] = indices_json(nonwod_cert.closure);
        j["value"] = nonwod_cert.value;
    }
    return j.dump();
}

Certificate certificate_from_json(const std::string& text, int order) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) raise(Errc::ParseError, "certificate is not valid JSON");
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        raise(Errc::ParseError, "certificate must be an object with a kind field");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "wod") {
        return WodCertificate{VertexSet::from_indices(order, json_indices(j, "witness")),
                              VertexSet::from_indices(order, json_indices(j, "dominated")), json_value(j)};
    }
    if (kind == "nonwod") {
        return NonWodCertificate{VertexSet::from_indices(order, json_indices(j, "witness")),
                                 VertexSet::from_indices(order, json_indices(j, "closure")), json_value(j)};
    }
    raise(Errc::ParseError, "unknown certificate kind '" + kind + "'");
}

int certificate_value(const Certificate& cert) {
    return std::visit([](const auto& c) { return c.value; }, cert);
}

}  // namespace wod
