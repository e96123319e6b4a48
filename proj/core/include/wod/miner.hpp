#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wod/graph.hpp"
#include "wod/kernel.hpp"

namespace wod {

// Exact nonnegative rational, stored reduced. Parses "p/q" or "p".
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    Rational() = default;
    Rational(std::uint64_t num, std::uint64_t den);  // reduces; den = 0 raises

    static Rational parse(const std::string& text);
    std::string to_string() const;

    bool operator==(const Rational&) const = default;
};

// G(n, p) sample: each unordered pair becomes an edge independently with
// probability edge_prob. Pairs are visited in lexicographic order and
// decided by one raw mt19937_64 draw each (draw * den < num * 2^64), so
// identical (n, edge_prob, seed) give the identical graph on any platform.
Graph random_graph(int n, const Rational& edge_prob, std::uint64_t seed);

// Sub-seed for trial i of a mining run; splitmix64 of seed + (i+1) * golden.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial);

struct MiningRecord {
    Graph graph;
    int n = 0;
    int kappa_q_value = 0;
    Certificate evidence;
    std::uint64_t master_seed = 0;
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;  // = trial_seed(master_seed, trial)
};

struct MineRequest {
    int n = 0;
    Rational ratio{811, 1000};  // hit when kappa_q <= floor(ratio * n)
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    Rational edge_prob{1, 2};
    int threads = 1;
    SolverOptions solver{};
};

struct MiningResult {
    std::vector<MiningRecord> hits;          // in trial order
    std::map<int, std::uint64_t> histogram;  // kappa_q value -> trial count
    MiningRecord best;                       // minimum kappa_q; earliest trial on ties
};

// Evaluates kappa_q on `trials` independently seeded G(n, edge_prob)
// samples. Trials are split across threads by contiguous ranges and merged
// in trial order, so the result is identical for every thread count.
MiningResult mine(const MineRequest& request);

// JSON-lines serialization: one header line carrying the request parameters,
// the histogram, and the best record, then one line per hit record.
// Byte-identical for identical requests.
std::string mining_result_to_jsonl(const MineRequest& request, const MiningResult& result);

}  // namespace wod
