#include "wod/reductions.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <json.hpp>

#include "wod/miner.hpp"

namespace wod {

OddsetInstance::OddsetInstance(Graph graph_in, VertexSet side_r_in, VertexSet side_b_in, int k_in)
    : graph(std::move(graph_in)), side_r(std::move(side_r_in)), side_b(std::move(side_b_in)), k(k_in) {
    int n = graph.order();
    if (side_r.universe() != n || side_b.universe() != n)
        raise(Errc::MemberOutOfRange, "side universes must match the graph order");
    if (side_r.intersects(side_b) || (side_r | side_b) != VertexSet::full(n))
        raise(Errc::NotBipartite, "sides must partition the vertex set");
    for (auto [u, v] : graph.edges())
        if (side_r.test(u) == side_r.test(v))
            raise(Errc::EdgeWithinSide,
                  "edge " + std::to_string(u) + " " + std::to_string(v) + " does not cross the sides");
    if (k < 0) raise(Errc::ParameterOutOfRange, "Oddset parameter must be >= 0");
}

namespace {

std::string sub1(const char* base, int a) { return std::string(base) + "_" + std::to_string(a); }

std::string sub2(const char* base, int a, int b) {
    return std::string(base) + "_{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

std::string sub3(const char* base, int a, int b, int c) {
    return std::string(base) + "_{" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "}";
}

std::string sub4(const char* base, int a, int b, int c, int d) {
    return std::string(base) + "_{" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
           "," + std::to_string(d) + "}";
}

void require_nonnegative(int k) {
    if (k < 0) raise(Errc::ParameterOutOfRange, "reduction parameter must be >= 0");
}

}  // namespace

ReductionOutput reduce_oddset_to_wod(const OddsetInstance& inst) {
    int k = inst.k;
    int dup = k + 2;
    std::vector<int> r_ids = inst.side_r.to_indices();
    std::vector<int> b_ids = inst.side_b.to_indices();
    int nr = static_cast<int>(r_ids.size());
    int nb = static_cast<int>(b_ids.size());
    int order = nr + dup * nb + dup + 1;

    std::vector<int> r_pos(static_cast<std::size_t>(inst.graph.order()), -1);
    std::vector<int> b_pos(static_cast<std::size_t>(inst.graph.order()), -1);
    for (int p = 0; p < nr; ++p) r_pos[static_cast<std::size_t>(r_ids[p])] = p;
    for (int p = 0; p < nb; ++p) b_pos[static_cast<std::size_t>(b_ids[p])] = p;

    auto a_at = [&](int p) { return p; };
    auto d_at = [&](int p, int i) { return nr + p * dup + (i - 1); };  // i in 1..dup
    auto f_at = [&](int i) { return nr + nb * dup + (i - 1); };
    int c_at = order - 1;

    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= dup; ++i) edges.emplace_back(c_at, f_at(i));
    for (int p = 0; p < nr; ++p) edges.emplace_back(c_at, a_at(p));
    for (auto [u, v] : inst.graph.edges()) {
        int r_end = inst.side_r.test(u) ? u : v;
        int b_end = inst.side_r.test(u) ? v : u;
        for (int i = 1; i <= dup; ++i)
            edges.emplace_back(a_at(r_pos[static_cast<std::size_t>(r_end)]),
                               d_at(b_pos[static_cast<std::size_t>(b_end)], i));
    }

    std::map<std::string, int> labels;
    for (int p = 0; p < nr; ++p) labels[sub1("a", r_ids[p])] = a_at(p);
    for (int p = 0; p < nb; ++p)
        for (int i = 1; i <= dup; ++i) labels[sub2("d", b_ids[p], i)] = d_at(p, i);
    for (int i = 1; i <= dup; ++i) labels[sub1("f", i)] = f_at(i);
    labels["c"] = c_at;

    int parameter = k + 1;
    return ReductionOutput{Graph::from_edge_list(order, edges), parameter, order - parameter,
                           std::move(labels), std::nullopt};
}

ReductionOutput reduce_wod_to_nonwod(const Graph& g, int k) {
    require_nonnegative(k);
    int n = g.order();
    int apexes = k + 3;
    int order = n + apexes + 1;
    int c_at = order - 1;

    std::vector<std::pair<int, int>> edges = g.edges();
    for (int i = 0; i < apexes; ++i) {
        for (int v = 0; v < n; ++v) edges.emplace_back(v, n + i);
        edges.emplace_back(n + i, c_at);
    }

    std::map<std::string, int> labels;
    for (int v = 0; v < n; ++v) labels[sub1("v", v)] = v;
    for (int i = 0; i < apexes; ++i) labels[sub1("a", i + 1)] = n + i;
    labels["c"] = c_at;

    int parameter = k + 2;
    return ReductionOutput{Graph::from_edge_list(order, edges), parameter, parameter, std::move(labels),
                           std::nullopt};
}

ReductionOutput reduce_nonwod_to_bipartite(const Graph& g, int k) {
    if (k < 1) raise(Errc::ParameterOutOfRange, "bipartite gadget needs k >= 1");
    int n = g.order();
    int m = 2 * k + 1;

    auto a_at = [&](int u) { return u; };
    auto b_at = [&](int i, int u) { return n + (i - 1) * n + u; };
    auto d_at = [&](int i, int u, int j) { return 3 * n + ((i - 1) * n + u) * m + (j - 1); };
    auto f_at = [&](int i, int u, int j, int l) {
        return 3 * n + 2 * n * m + (((i - 1) * n + u) * m + (j - 1)) * m + (l - 1);
    };
    auto h_at = [&](int p) { return 3 * n + 2 * n * m + 2 * n * m * m + (p - 1); };
    int order = 3 * n + 2 * n * m + 2 * n * m * m + m;

    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        for (int i = 1; i <= 2; ++i) {
            edges.emplace_back(a_at(u), b_at(i, v));
            edges.emplace_back(a_at(v), b_at(i, u));
        }
    for (int u = 0; u < n; ++u) edges.emplace_back(a_at(u), b_at(2, u));
    for (int i = 1; i <= 2; ++i)
        for (int u = 0; u < n; ++u)
            for (int j = 1; j <= m; ++j) {
                edges.emplace_back(b_at(i, u), d_at(i, u, j));
                for (int l = 1; l <= m; ++l) {
                    edges.emplace_back(d_at(i, u, j), f_at(i, u, j, l));
                    for (int p = 1; p <= m; ++p) edges.emplace_back(f_at(i, u, j, l), h_at(p));
                }
            }

    std::map<std::string, int> labels;
    VertexSet first(order), second(order);
    for (int u = 0; u < n; ++u) {
        labels[sub1("a", u)] = a_at(u);
        first.set(a_at(u));
        for (int i = 1; i <= 2; ++i) {
            labels[sub2("b", i, u)] = b_at(i, u);
            second.set(b_at(i, u));
            for (int j = 1; j <= m; ++j) {
                labels[sub3("d", i, u, j)] = d_at(i, u, j);
                first.set(d_at(i, u, j));
                for (int l = 1; l <= m; ++l) {
                    labels[sub4("f", i, u, j, l)] = f_at(i, u, j, l);
                    second.set(f_at(i, u, j, l));
                }
            }
        }
    }
    for (int p = 1; p <= m; ++p) {
        labels[sub1("h", p)] = h_at(p);
        first.set(h_at(p));
    }

    Graph out = Graph::from_edge_list(order, edges);
    for (auto [u, v] : out.edges())
        if (first.test(u) == first.test(v))
            raise(Errc::EdgeWithinSide, "bipartite gadget produced a same-side edge");

    int parameter = 2 * k;
    return ReductionOutput{std::move(out), parameter, parameter, std::move(labels),
                           std::make_pair(std::move(first), std::move(second))};
}

ReductionOutput reduce_nonwod_to_kq(const Graph& g, int k) {
    require_nonnegative(k);
    int n = g.order();
    Graph out = disjoint_copies(g, k + 1);

    std::map<std::string, int> labels;
    for (int c = 0; c <= k; ++c)
        for (int u = 0; u < n; ++u) labels[sub2("v", c, u)] = c * n + u;

    return ReductionOutput{std::move(out), k, (k + 1) * n - k, std::move(labels), std::nullopt};
}

ReductionOutput reduce_kq_to_oddset(const Graph& g, int k) {
    require_nonnegative(k);
    int n = g.order();
    auto at = [&](int i, int j, int u) { return ((i - 1) * 5 + (j - 1)) * n + u; };
    int d1 = 10 * n;
    int d2 = 10 * n + 1;
    int c_at = 10 * n + 2;
    int order = 10 * n + 3;

    std::vector<std::pair<int, int>> edges;
    // Block 1 band 2 carries g's adjacency into bands 4 and 5.
    for (auto [u, v] : g.edges())
        for (int j : {4, 5}) {
            edges.emplace_back(at(1, 2, u), at(1, j, v));
            edges.emplace_back(at(1, 2, v), at(1, j, u));
        }
    // Block 2 band 2 carries the complement's adjacency.
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v))
                for (int j : {4, 5}) {
                    edges.emplace_back(at(2, 2, u), at(2, j, v));
                    edges.emplace_back(at(2, 2, v), at(2, j, u));
                }
    for (int i = 1; i <= 2; ++i)
        for (int u = 0; u < n; ++u) {
            edges.emplace_back(at(i, 1, u), at(i, 4, u));  // parity knob for band 4
            edges.emplace_back(at(i, 3, u), at(i, 5, u));  // parity knob for band 5
            edges.emplace_back(at(i, 2, u), at(i, 5, u));
            edges.emplace_back(d1 + (i - 1), at(i, 4, u));
            edges.emplace_back(d1 + (i - 1), at(i, 5, u));
        }
    edges.emplace_back(d1, c_at);
    edges.emplace_back(d2, c_at);

    std::map<std::string, int> labels;
    VertexSet side_r(order), side_b(order);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 5; ++j)
            for (int u = 0; u < n; ++u) {
                labels[sub3("a", i, j, u)] = at(i, j, u);
                (j >= 4 ? side_b : side_r).set(at(i, j, u));
            }
    labels["d_1"] = d1;
    labels["d_2"] = d2;
    labels["c"] = c_at;
    side_r.set(d1);
    side_r.set(d2);
    side_b.set(c_at);

    int parameter = 2 * k + 1;
    return ReductionOutput{Graph::from_edge_list(order, edges), parameter, parameter, std::move(labels),
                           std::make_pair(std::move(side_r), std::move(side_b))};
}

OddsetInstance as_oddset(const ReductionOutput& out) {
    if (!out.bipartition) raise(Errc::NotBipartite, "reduction output carries no side split");
    return OddsetInstance(out.graph, out.bipartition->first, out.bipartition->second, out.parameter);
}

std::optional<VertexSet> solve_oddset(const OddsetInstance& inst, std::uint64_t guard) {
    std::vector<int> r_ids = inst.side_r.to_indices();
    int cap = std::min<int>(inst.k, static_cast<int>(r_ids.size()));
    if (subset_count_at_most(static_cast<int>(r_ids.size()), cap) > guard)
        raise(Errc::TooLarge, "Oddset search over " + std::to_string(r_ids.size()) +
                                  " candidates would exceed the enumeration guard");

    int n = inst.graph.order();
    VertexSet members(n), parity(n);
    std::optional<VertexSet> found;
    auto rec = [&](auto&& self, std::size_t next, int remaining) -> bool {
        if (remaining == 0) {
            if (inst.side_b.is_subset_of(parity)) {
                found = members;
                return true;
            }
            return false;
        }
        for (std::size_t p = next; p + static_cast<std::size_t>(remaining) <= r_ids.size(); ++p) {
            int v = r_ids[p];
            members.set(v);
            parity ^= inst.graph.neighbors(v);
            if (self(self, p + 1, remaining - 1)) return true;
            parity ^= inst.graph.neighbors(v);
            members.reset(v);
        }
        return false;
    };
    for (int size = 0; size <= cap && !found; ++size) rec(rec, 0, size);
    return found;
}

const char* reduction_name(ReductionKind kind) {
    switch (kind) {
        case ReductionKind::OddsetToWod: return "oddset-to-wod";
        case ReductionKind::WodToNonwod: return "wod-to-nonwod";
        case ReductionKind::NonwodToBipartite: return "nonwod-to-bipartite";
        case ReductionKind::NonwodToKq: return "nonwod-to-kq";
        case ReductionKind::KqToOddset: return "kq-to-oddset";
    }
    return "unknown";
}

std::optional<ReductionKind> reduction_by_name(const std::string& name) {
    for (ReductionKind kind :
         {ReductionKind::OddsetToWod, ReductionKind::WodToNonwod, ReductionKind::NonwodToBipartite,
          ReductionKind::NonwodToKq, ReductionKind::KqToOddset})
        if (name == reduction_name(kind)) return kind;
    return std::nullopt;
}

int EquivalenceReport::skipped_count() const {
    int total_skipped = 0;
    for (const auto& verdict : verdicts) total_skipped += verdict.skipped ? 1 : 0;
    return total_skipped;
}

bool EquivalenceReport::clean() const {
    return counterexamples.empty() && agreed + skipped_count() == total;
}

namespace {

OddsetInstance to_oddset_source(const SourceInstance& src) {
    if (!src.side_r) raise(Errc::NotBipartite, "Oddset source instance is missing its R side");
    return OddsetInstance(src.graph, *src.side_r, src.side_r->complement(), src.k);
}

ReductionOutput build_target(ReductionKind kind, const SourceInstance& src) {
    switch (kind) {
        case ReductionKind::OddsetToWod: return reduce_oddset_to_wod(to_oddset_source(src));
        case ReductionKind::WodToNonwod: return reduce_wod_to_nonwod(src.graph, src.k);
        case ReductionKind::NonwodToBipartite: return reduce_nonwod_to_bipartite(src.graph, src.k);
        case ReductionKind::NonwodToKq: return reduce_nonwod_to_kq(src.graph, src.k);
        case ReductionKind::KqToOddset: return reduce_kq_to_oddset(src.graph, src.k);
    }
    raise(Errc::ParameterOutOfRange, "unknown reduction kind");
}

bool eval_source(ReductionKind kind, const SourceInstance& src, const VerifyBudget& budget) {
    switch (kind) {
        case ReductionKind::OddsetToWod:
            return solve_oddset(to_oddset_source(src), budget.max_candidates).has_value();
        case ReductionKind::WodToNonwod:
            return kappa(src.graph, budget.source_options).value >= src.graph.order() - src.k;
        case ReductionKind::NonwodToBipartite:
        case ReductionKind::NonwodToKq:
            return kappa_prime(src.graph, budget.source_options).value <= src.k;
        case ReductionKind::KqToOddset:
            return kappa_q(src.graph, budget.source_options).value >= src.graph.order() - src.k;
    }
    raise(Errc::ParameterOutOfRange, "unknown reduction kind");
}

void require_target_budget(std::uint64_t candidates, std::uint64_t cap) {
    if (candidates > cap)
        raise(Errc::BudgetExceeded, "target-side enumeration of " + std::to_string(candidates) +
                                        " candidates exceeds the budget of " + std::to_string(cap));
}

bool eval_target(ReductionKind kind, const ReductionOutput& out, const VerifyBudget& budget) {
    int order = out.graph.order();
    switch (kind) {
        case ReductionKind::OddsetToWod:
            require_target_budget(subset_count_at_most(order, order - out.threshold), budget.max_candidates);
            return kappa_at_least(out.graph, out.threshold).has_value();
        case ReductionKind::WodToNonwod:
        case ReductionKind::NonwodToBipartite:
            require_target_budget(odd_subset_count_at_most(order, out.threshold), budget.max_candidates);
            return kappa_prime_at_most(out.graph, out.threshold).has_value();
        case ReductionKind::NonwodToKq:
            require_target_budget(subset_count_at_most(order, order - out.threshold), budget.max_candidates);
            return kappa_q_at_least(out.graph, out.threshold).yes;
        case ReductionKind::KqToOddset:
            return solve_oddset(as_oddset(out), budget.max_candidates).has_value();
    }
    raise(Errc::ParameterOutOfRange, "unknown reduction kind");
}

SourceInstance delete_vertex(const SourceInstance& src, int v) {
    VertexSet keep = VertexSet::full(src.graph.order());
    keep.reset(v);
    InducedSubgraph sub = induced_subgraph(src.graph, keep);
    std::optional<VertexSet> side;
    if (src.side_r) {
        VertexSet mapped(sub.graph.order());
        src.side_r->for_each([&](int u) {
            if (u != v) mapped.set(sub.old_to_new[static_cast<std::size_t>(u)]);
        });
        side = std::move(mapped);
    }
    return SourceInstance{sub.graph, src.k, std::move(side)};
}

SourceInstance delete_edge(const SourceInstance& src, std::pair<int, int> uv) {
    std::vector<std::pair<int, int>> edges = src.graph.edges();
    edges.erase(std::remove(edges.begin(), edges.end(), uv), edges.end());
    return SourceInstance{Graph::from_edge_list(src.graph.order(), edges), src.k, src.side_r};
}

Counterexample minimize_counterexample(ReductionKind kind, const SourceInstance& origin,
                                       const VerifyBudget& budget, bool source_positive,
                                       bool target_positive) {
    Counterexample current{origin, source_positive, target_positive};
    auto try_candidate = [&](SourceInstance candidate) {
        try {
            bool sp = eval_source(kind, candidate, budget);
            bool tp = eval_target(kind, build_target(kind, candidate), budget);
            if (sp != tp) {
                current = Counterexample{std::move(candidate), sp, tp};
                return true;
            }
        } catch (const Error&) {
            // Candidate left the decidable range (budget, guard, or a
            // reduction precondition); keep the last disagreeing instance.
        }
        return false;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        bool progress = true;
        while (progress) {
            progress = false;
            for (int v = 0; v < current.instance.graph.order() && current.instance.graph.order() > 1; ++v)
                if (try_candidate(delete_vertex(current.instance, v))) {
                    progress = true;
                    changed = true;
                    break;
                }
        }
        progress = true;
        while (progress) {
            progress = false;
            for (auto uv : current.instance.graph.edges())
                if (try_candidate(delete_edge(current.instance, uv))) {
                    progress = true;
                    changed = true;
                    break;
                }
        }
    }
    return current;
}

}  // namespace

EquivalenceReport verify_reduction(ReductionKind kind, const std::vector<SourceInstance>& sources,
                                   const VerifyBudget& budget) {
    EquivalenceReport report;
    report.kind = kind;
    report.total = static_cast<int>(sources.size());
    for (int index = 0; index < report.total; ++index) {
        const SourceInstance& src = sources[static_cast<std::size_t>(index)];
        InstanceVerdict verdict;
        verdict.index = index;
        try {
            bool source_positive = eval_source(kind, src, budget);
            bool target_positive = eval_target(kind, build_target(kind, src), budget);
            verdict.source_positive = source_positive;
            verdict.target_positive = target_positive;
            if (source_positive == target_positive)
                ++report.agreed;
            else
                report.counterexamples.push_back(
                    minimize_counterexample(kind, src, budget, source_positive, target_positive));
        } catch (const Error& e) {
            if (e.code() != Errc::BudgetExceeded && e.code() != Errc::TooLarge) throw;
            verdict.skipped = true;
            verdict.skip_reason = e.what();
        }
        report.verdicts.push_back(std::move(verdict));
    }
    return report;
}

std::string report_to_json(const EquivalenceReport& report) {
    nlohmann::ordered_json j;
    j["reduction"] = reduction_name(report.kind);
    j["total"] = report.total;
    j["agreed"] = report.agreed;
    nlohmann::ordered_json skipped = nlohmann::ordered_json::array();
    for (const auto& verdict : report.verdicts)
        if (verdict.skipped) skipped.push_back({{"index", verdict.index}, {"reason", verdict.skip_reason}});
    j["skipped"] = std::move(skipped);
    nlohmann::ordered_json examples = nlohmann::ordered_json::array();
    for (const auto& cx : report.counterexamples) {
        nlohmann::ordered_json item;
        item["graph"] = format_graph(cx.instance.graph);
        item["k"] = cx.instance.k;
        if (cx.instance.side_r) item["side_r"] = cx.instance.side_r->to_indices();
        item["source_verdict"] = cx.source_positive;
        item["target_verdict"] = cx.target_positive;
        examples.push_back(std::move(item));
    }
    j["counterexamples"] = std::move(examples);
    return j.dump(2);
}

namespace {

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1u) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

}  // namespace

std::vector<SourceInstance> default_suite(ReductionKind kind, int max_n, int max_k, int random_count,
                                          std::uint64_t seed) {
    std::vector<SourceInstance> out;
    int k_lo = kind == ReductionKind::NonwodToBipartite ? 1 : 0;

    if (kind == ReductionKind::OddsetToWod) {
        for (int n = 1; n <= max_n; ++n)
            for (int r = 0; r <= n; ++r) {
                int b = n - r;
                std::uint64_t pairs = static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(b);
                for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs); ++mask) {
                    std::vector<std::pair<int, int>> edges;
                    for (int i = 0; i < r; ++i)
                        for (int j = 0; j < b; ++j)
                            if ((mask >> (i * b + j)) & 1u) edges.emplace_back(i, r + j);
                    Graph g = Graph::from_edge_list(n, edges);
                    VertexSet side_r(n);
                    for (int i = 0; i < r; ++i) side_r.set(i);
                    for (int k = k_lo; k <= max_k; ++k) out.push_back(SourceInstance{g, k, side_r});
                }
            }
        for (int i = 0; i < random_count; ++i) {
            std::uint64_t sub = trial_seed(seed, static_cast<std::uint64_t>(i));
            std::mt19937_64 rng(sub);
            int n = max_n + 1 + static_cast<int>(rng() & 1);
            int r = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
            int b = n - r;
            std::vector<std::pair<int, int>> edges;
            for (int p = 0; p < r; ++p)
                for (int q = 0; q < b; ++q)
                    if (rng() & 1) edges.emplace_back(p, r + q);
            Graph g = Graph::from_edge_list(n, edges);
            VertexSet side_r(n);
            for (int p = 0; p < r; ++p) side_r.set(p);
            for (int k = k_lo; k <= max_k; ++k) out.push_back(SourceInstance{g, k, side_r});
        }
        return out;
    }

    for (int n = 1; n <= max_n; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs); ++mask) {
            Graph g = graph_from_mask(n, mask);
            for (int k = k_lo; k <= max_k; ++k) out.push_back(SourceInstance{g, k, std::nullopt});
        }
    }
    for (int i = 0; i < random_count; ++i) {
        std::uint64_t sub = trial_seed(seed, static_cast<std::uint64_t>(i));
        int n = max_n + 1 + (i & 1);
        Graph g = random_graph(n, Rational(1, 2), sub);
        for (int k = k_lo; k <= max_k; ++k) out.push_back(SourceInstance{g, k, std::nullopt});
    }
    return out;
}

std::string format_oddset(const OddsetInstance& inst) {
    std::string out = format_graph(inst.graph);
    out += "# R:";
    inst.side_r.for_each([&](int v) {
        out += ' ';
        out += std::to_string(v);
    });
    out += '\n';
    return out;
}

OddsetInstance parse_oddset(const std::string& text, int k) {
    Graph g = parse_graph(text);
    std::istringstream lines(text);
    std::string line;
    std::optional<VertexSet> side_r;
    while (std::getline(lines, line)) {
        auto start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        std::string_view view(line.data() + start, line.size() - start);
        if (!view.starts_with("# R:") && !view.starts_with("#R:")) continue;
        view.remove_prefix(view.starts_with("# R:") ? 4 : 3);
        VertexSet side(g.order());
        std::istringstream fields{std::string(view)};
        int v = 0;
        while (fields >> v) {
            if (v < 0 || v >= g.order())
                raise(Errc::ParseError, "R-side vertex " + std::to_string(v) + " is out of range");
            side.set(v);
        }
        if (!fields.eof()) raise(Errc::ParseError, "bad R-side line: '" + line + "'");
        side_r = std::move(side);
        break;
    }
    if (!side_r) raise(Errc::ParseError, "Oddset file is missing its '# R: ...' side line");
    VertexSet side_b = side_r->complement();
    return OddsetInstance(std::move(g), *std::move(side_r), std::move(side_b), k);
}

}  // namespace wod
