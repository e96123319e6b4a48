#include "wod/miner.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <thread>

#include <json.hpp>

namespace wod {

Rational::Rational(std::uint64_t n, std::uint64_t d) {
    if (d == 0) raise(Errc::ParameterOutOfRange, "rational denominator must be nonzero");
    std::uint64_t g = std::gcd(n, d);
    num = n / g;
    den = d / g;
}

Rational Rational::parse(const std::string& text) {
    auto first = text.find_first_not_of(" \t");
    auto last = text.find_last_not_of(" \t");
    if (first == std::string::npos) raise(Errc::ParseError, "empty rational");
    std::string_view body(text.data() + first, last - first + 1);

    auto parse_u64 = [&](std::string_view part) {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc() || ptr != part.data() + part.size())
            raise(Errc::ParseError, "bad rational '" + text + "' (expected p or p/q)");
        return value;
    };

    auto slash = body.find('/');
    if (slash == std::string_view::npos) return Rational(parse_u64(body), 1);
    std::uint64_t num = parse_u64(body.substr(0, slash));
    std::uint64_t den = parse_u64(body.substr(slash + 1));
    if (den == 0) raise(Errc::ParseError, "bad rational '" + text + "' (zero denominator)");
    return Rational(num, den);
}

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Graph random_graph(int n, const Rational& edge_prob, std::uint64_t seed) {
    if (n < 1) raise(Errc::ZeroOrder, "random graph needs order >= 1");
    if (edge_prob.num > edge_prob.den) raise(Errc::ParameterOutOfRange, "edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    // One raw draw per pair, compared against the exact rational threshold.
    // No distribution adapters: their algorithms vary across standard
    // libraries, raw mt19937_64 output does not.
    auto hit = [&](std::uint64_t draw) {
        return static_cast<unsigned __int128>(draw) * edge_prob.den <
               static_cast<unsigned __int128>(edge_prob.num) << 64;
    };
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (hit(rng())) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial) {
    // splitmix64 finalizer over master + (trial+1) * golden ratio increment.
    std::uint64_t x = master_seed + (trial + 1) * 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

namespace {

struct Chunk {
    std::vector<MiningRecord> hits;
    std::map<int, std::uint64_t> histogram;
    std::optional<MiningRecord> best;
};

Chunk run_trials(const MineRequest& req, std::uint64_t lo, std::uint64_t hi) {
    Chunk out;
    for (std::uint64_t i = lo; i < hi; ++i) {
        std::uint64_t sub_seed = trial_seed(req.seed, i);
        Graph g = random_graph(req.n, req.edge_prob, sub_seed);
        KappaQResult result = kappa_q(g, req.solver);
        ++out.histogram[result.value];
        MiningRecord record{g, req.n, result.value, result.evidence, req.seed, i, sub_seed};
        bool hit = static_cast<unsigned __int128>(result.value) * req.ratio.den <=
                   static_cast<unsigned __int128>(req.ratio.num) * static_cast<unsigned __int128>(req.n);
        if (hit) out.hits.push_back(record);
        if (!out.best || result.value < out.best->kappa_q_value) out.best = std::move(record);
    }
    return out;
}

}  // namespace

MiningResult mine(const MineRequest& req) {
    if (req.n < 1) raise(Errc::ZeroOrder, "mining needs order >= 1");
    if (req.trials < 1) raise(Errc::ParameterOutOfRange, "mining needs at least one trial");
    if (req.edge_prob.num > req.edge_prob.den)
        raise(Errc::ParameterOutOfRange, "edge probability must lie in [0, 1]");
    if (req.n > req.solver.max_order && !req.solver.force)
        raise(Errc::TooLarge, "order " + std::to_string(req.n) + " exceeds the exact-solver guard of " +
                                  std::to_string(req.solver.max_order));

    int workers = std::max(1, req.threads);
    if (static_cast<std::uint64_t>(workers) > req.trials) workers = static_cast<int>(req.trials);

    std::vector<Chunk> chunks;
    if (workers == 1) {
        chunks.push_back(run_trials(req, 0, req.trials));
    } else {
        chunks.resize(static_cast<std::size_t>(workers));
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            std::uint64_t lo = req.trials * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
            std::uint64_t hi =
                req.trials * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(workers);
            pool.emplace_back([&, w, lo, hi] { chunks[static_cast<std::size_t>(w)] = run_trials(req, lo, hi); });
        }
        for (auto& t : pool) t.join();
    }

    // Merge in trial order: chunk w covers earlier trials than chunk w+1,
    // so concatenation and first-strict-minimum keep serial semantics.
    std::vector<MiningRecord> hits;
    std::map<int, std::uint64_t> histogram;
    std::optional<MiningRecord> best;
    for (auto& chunk : chunks) {
        for (auto& [value, count] : chunk.histogram) histogram[value] += count;
        for (auto& record : chunk.hits) hits.push_back(std::move(record));
        if (chunk.best && (!best || chunk.best->kappa_q_value < best->kappa_q_value))
            best = std::move(chunk.best);
    }
    return MiningResult{std::move(hits), std::move(histogram), std::move(*best)};
}

namespace {

nlohmann::ordered_json record_to_json(const MiningRecord& record, const char* discriminator) {
    nlohmann::ordered_json j;
    if (discriminator) j["record"] = discriminator;
    j["n"] = record.n;
    j["kappa_q"] = record.kappa_q_value;
    j["ratio"] = Rational(static_cast<std::uint64_t>(record.kappa_q_value), static_cast<std::uint64_t>(record.n))
                     .to_string();
    j["trial"] = record.trial;
    j["seed"] = record.seed;
    j["graph"] = format_graph(record.graph);
    j["evidence"] = nlohmann::ordered_json::parse(certificate_to_json(record.evidence));
    return j;
}

}  // namespace

std::string mining_result_to_jsonl(const MineRequest& req, const MiningResult& result) {
    nlohmann::ordered_json header;
    header["record"] = "header";
    header["n"] = req.n;
    header["ratio"] = req.ratio.to_string();
    header["trials"] = req.trials;
    header["seed"] = req.seed;
    header["edge_prob"] = req.edge_prob.to_string();
    nlohmann::ordered_json hist = nlohmann::ordered_json::object();
    for (const auto& [value, count] : result.histogram) hist[std::to_string(value)] = count;
    header["histogram"] = std::move(hist);
    header["best"] = record_to_json(result.best, nullptr);

    std::string out = header.dump();
    out.push_back('\n');
    for (const auto& record : result.hits) {
        out += record_to_json(record, "hit").dump();
        out.push_back('\n');
    }
    return out;
}

}  // namespace wod
