#include "cli.hpp"

#include <cstdint>
#include <iostream>
#include <string>
#include <thread>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "wod/bounds.hpp"
#include "wod/error.hpp"
#include "wod/graph.hpp"
#include "wod/kernel.hpp"
#include "wod/miner.hpp"
#include "wod/reductions.hpp"

namespace wod::cli {

namespace {

int default_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

struct SolveArgs {
    std::string graph_path;
    bool json = false;
    bool force = false;
    int threads = default_threads();
};

void add_solve_options(CLI::App* cmd, SolveArgs& args) {
    cmd->add_option("graph", args.graph_path, "graph file (text edge-list format)")->required();
    cmd->add_flag("--json", args.json, "print the certificate as JSON instead of text");
    cmd->add_flag("--force", args.force, "run the exact search above the order guard");
    cmd->add_option("--threads", args.threads, "search workers")->capture_default_str();
}

SolverOptions solver_options(bool force, int threads) {
    SolverOptions options;
    options.force = force;
    options.threads = threads;
    return options;
}

void print_wod_lines(const WodCertificate& cert) {
    std::cout << "witness: " << cert.witness.to_string() << "\n";
    std::cout << "dominated: " << cert.dominated.to_string() << "\n";
}

void print_nonwod_lines(const NonWodCertificate& cert) {
    std::cout << "witness: " << cert.witness.to_string() << "\n";
    std::cout << "closure: " << cert.closure.to_string() << "\n";
}

void print_certificate_lines(const Certificate& cert) {
    if (const auto* wod = std::get_if<WodCertificate>(&cert)) {
        std::cout << "evidence: wod (largest dominated set found: " << wod->value << ")\n";
        print_wod_lines(*wod);
    } else {
        const auto& nonwod = std::get<NonWodCertificate>(cert);
        std::cout << "evidence: nonwod (smallest closure found: " << nonwod.value << ")\n";
        print_nonwod_lines(nonwod);
    }
}

int run_kappa(const SolveArgs& args) {
    Graph g = read_graph_file(args.graph_path);
    WodCertificate cert = kappa(g, solver_options(args.force, args.threads));
    if (args.json) {
        std::cout << certificate_to_json(Certificate{cert}) << "\n";
        return 0;
    }
    std::cout << cert.value << "\n";
    print_wod_lines(cert);
    return 0;
}

int run_kappa_prime(const SolveArgs& args) {
    Graph g = read_graph_file(args.graph_path);
    NonWodCertificate cert = kappa_prime(g, solver_options(args.force, args.threads));
    if (args.json) {
        std::cout << certificate_to_json(Certificate{cert}) << "\n";
        return 0;
    }
    std::cout << cert.value << "\n";
    print_nonwod_lines(cert);
    return 0;
}

int run_kappa_q(const SolveArgs& args) {
    Graph g = read_graph_file(args.graph_path);
    KappaQResult result = kappa_q(g, solver_options(args.force, args.threads));
    if (args.json) {
        std::cout << certificate_to_json(result.evidence) << "\n";
        return 0;
    }
    std::cout << result.value << "\n";
    print_certificate_lines(result.evidence);
    return 0;
}

int run_greedy(const SolveArgs& args) {
    Graph g = read_graph_file(args.graph_path);
    GreedyWodResult result = greedy_wod_detailed(g);
    if (args.json) {
        std::cout << certificate_to_json(Certificate{result.certificate}) << "\n";
        return 0;
    }
    std::cout << result.certificate.value << "\n";
    print_wod_lines(result.certificate);
    std::cout << "trace:";
    for (int size : result.odd_trace) std::cout << ' ' << size;
    std::cout << "\n";
    if (result.singleton_fallback) std::cout << "note: a single vertex beat the greedy set\n";
    return 0;
}

struct DecideArgs {
    std::string question;
    std::string graph_path;
    int k = 0;
    bool json = false;
    bool force = false;
    int threads = default_threads();
};

nlohmann::ordered_json decision_json(const std::string& question, int k, bool yes, DecisionBranch branch) {
    nlohmann::ordered_json j;
    j["question"] = question;
    j["k"] = k;
    j["answer"] = yes;
    j["branch"] = decision_branch_name(branch);
    return j;
}

int run_decide(const DecideArgs& args) {
    Graph g = read_graph_file(args.graph_path);
    SolverOptions options = solver_options(args.force, args.threads);

    bool yes = false;
    DecisionBranch branch = DecisionBranch::Exact;
    std::optional<Certificate> cert;
    if (args.question == "wod-atleast") {
        KappaDecision d = decide_kappa_at_least(g, args.k, options);
        yes = d.yes;
        branch = d.branch;
        if (d.certificate) cert = Certificate{*d.certificate};
    } else if (args.question == "nonwod-atmost") {
        KappaPrimeDecision d = decide_kappa_prime_at_most(g, args.k, options);
        yes = d.yes;
        branch = d.branch;
        if (d.certificate) cert = Certificate{*d.certificate};
    } else {
        KappaQDecision d = decide_kappa_q_at_least(g, args.k, options);
        yes = d.yes;
        branch = d.branch;
    }

    if (args.json) {
        nlohmann::ordered_json j = decision_json(args.question, args.k, yes, branch);
        j["certificate"] =
            cert ? nlohmann::ordered_json::parse(certificate_to_json(*cert)) : nlohmann::ordered_json(nullptr);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (yes ? "yes" : "no") << "\n";
        std::cout << "branch: " << decision_branch_name(branch) << "\n";
        if (cert) print_certificate_lines(*cert);
    }
    return yes ? 0 : 1;
}

struct ReduceArgs {
    std::string name;
    std::string input_path;
    std::string out_path;
    int k = 0;
};

int run_reduce(const ReduceArgs& args) {
    ReductionKind kind = *reduction_by_name(args.name);
    std::string text = read_text_file(args.input_path);
    ReductionOutput out = kind == ReductionKind::OddsetToWod
                              ? reduce_oddset_to_wod(parse_oddset(text, args.k))
                              : [&] {
                                    Graph g = parse_graph(text);
                                    switch (kind) {
                                        case ReductionKind::WodToNonwod: return reduce_wod_to_nonwod(g, args.k);
                                        case ReductionKind::NonwodToBipartite:
                                            return reduce_nonwod_to_bipartite(g, args.k);
                                        case ReductionKind::NonwodToKq: return reduce_nonwod_to_kq(g, args.k);
                                        default: return reduce_kq_to_oddset(g, args.k);
                                    }
                                }();

    nlohmann::ordered_json j;
    j["reduction"] = args.name;
    j["order"] = out.graph.order();
    j["edges"] = out.graph.edge_count();
    j["parameter"] = out.parameter;
    j["threshold"] = out.threshold;
    j["graph"] = format_graph(out.graph);
    j["labels"] = out.labels;
    if (out.bipartition)
        j["bipartition"] = {out.bipartition->first.to_indices(), out.bipartition->second.to_indices()};
    if (kind == ReductionKind::KqToOddset) j["oddset"] = format_oddset(as_oddset(out));

    if (args.out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        write_text_file(args.out_path, j.dump(2) + "\n");
        std::cout << "order: " << out.graph.order() << "\n";
        std::cout << "parameter: " << out.parameter << "\n";
        std::cout << "threshold: " << out.threshold << "\n";
        std::cout << "wrote " << args.out_path << "\n";
    }
    return 0;
}

struct VerifyArgs {
    std::string name;
    int max_n = 4;
    int max_k = 2;
    int random_count = 200;
    std::uint64_t seed = 1;
    std::uint64_t budget = 100'000'000;
    int threads = default_threads();
    std::string out_path;
};

int run_verify(const VerifyArgs& args) {
    ReductionKind kind = *reduction_by_name(args.name);
    std::vector<SourceInstance> suite =
        default_suite(kind, args.max_n, args.max_k, args.random_count, args.seed);
    VerifyBudget budget;
    budget.max_candidates = args.budget;
    budget.source_options.threads = args.threads;
    EquivalenceReport report = verify_reduction(kind, suite, budget);
    std::string json = report_to_json(report);

    if (args.out_path.empty()) {
        std::cout << json << "\n";
    } else {
        write_text_file(args.out_path, json + "\n");
        std::cout << "reduction: " << args.name << "\n";
        std::cout << "total: " << report.total << "\n";
        std::cout << "agreed: " << report.agreed << "\n";
        std::cout << "skipped: " << report.skipped_count() << "\n";
        std::cout << "counterexamples: " << report.counterexamples.size() << "\n";
        std::cout << "wrote " << args.out_path << "\n";
    }
    return report.counterexamples.empty() ? 0 : 1;
}

struct MineArgs {
    int n = 0;
    std::string ratio = "811/1000";
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::string edge_prob = "1/2";
    int threads = default_threads();
    bool force = false;
    std::string out_path;
};

int run_mine(const MineArgs& args) {
    MineRequest request;
    request.n = args.n;
    request.ratio = Rational::parse(args.ratio);
    request.trials = args.trials;
    request.seed = args.seed;
    request.edge_prob = Rational::parse(args.edge_prob);
    request.threads = args.threads;
    request.solver = solver_options(args.force, 1);

    MiningResult result = mine(request);
    std::string jsonl = mining_result_to_jsonl(request, result);

    if (args.out_path.empty()) {
        std::cout << jsonl;
    } else {
        write_text_file(args.out_path, jsonl);
        std::cout << "trials: " << args.trials << "\n";
        std::cout << "hits: " << result.hits.size() << "\n";
        std::cout << "best: " << result.best.kappa_q_value << " (trial " << result.best.trial << ")\n";
        std::cout << "histogram:";
        for (const auto& [value, count] : result.histogram) std::cout << ' ' << value << ':' << count;
        std::cout << "\n";
        std::cout << "wrote " << args.out_path << "\n";
    }
    return 0;
}

struct CheckCertArgs {
    std::string graph_path;
    std::string cert_path;
};

int run_check_cert(const CheckCertArgs& args) {
    Graph g = read_graph_file(args.graph_path);
    std::string text = read_text_file(args.cert_path);
    Certificate cert = [&] {
        try {
            return certificate_from_json(text, g.order());
        } catch (const Error& e) {
            if (e.code() != Errc::MemberOutOfRange) throw;
            // Well-formed certificate whose indices do not fit this graph.
            std::cout << "invalid: " << e.what() << "\n";
            std::exit(1);
        }
    }();
    if (!verify_certificate(g, cert)) {
        std::cout << "invalid: stated properties do not hold on this graph\n";
        return 1;
    }
    const auto* wod = std::get_if<WodCertificate>(&cert);
    std::cout << "valid: " << (wod ? "wod" : "nonwod") << " certificate, value " << certificate_value(cert)
              << "\n";
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Weak odd domination toolkit: exact solvers, bound-based deciders,\n"
                 "hardness-reduction gadgets with an equivalence harness, and a seeded\n"
                 "random-graph miner for small quantum-threshold graphs."};
    app.require_subcommand(1);

    SolveArgs kappa_args;
    CLI::App* kappa_cmd = app.add_subcommand("kappa", "largest weakly odd dominated set size");
    add_solve_options(kappa_cmd, kappa_args);

    SolveArgs kappa_prime_args;
    CLI::App* kappa_prime_cmd = app.add_subcommand("kappa-prime", "smallest non-WOD set size");
    add_solve_options(kappa_prime_cmd, kappa_prime_args);

    SolveArgs kappa_q_args;
    CLI::App* kappa_q_cmd =
        app.add_subcommand("kappa-q", "quantum threshold max(kappa, n - kappa-prime)");
    add_solve_options(kappa_q_cmd, kappa_q_args);

    SolveArgs greedy_args;
    CLI::App* greedy_cmd =
        app.add_subcommand("greedy", "greedy WOD certificate (value >= sqrt(n)/2 without isolated vertices)");
    add_solve_options(greedy_cmd, greedy_args);

    DecideArgs decide_args;
    CLI::App* decide_cmd = app.add_subcommand(
        "decide",
        "bound-first deciders: wod-atleast asks kappa >= k, nonwod-atmost asks kappa' <= n - k, "
        "kq-atleast asks kappa_q >= k; exit 0 yes, 1 no");
    decide_cmd->add_option("question", decide_args.question, "wod-atleast | nonwod-atmost | kq-atleast")
        ->required()
        ->check(CLI::IsMember({"wod-atleast", "nonwod-atmost", "kq-atleast"}));
    decide_cmd->add_option("graph", decide_args.graph_path, "graph file")->required();
    decide_cmd->add_option("-k,--parameter", decide_args.k, "parameter k")->required();
    decide_cmd->add_flag("--json", decide_args.json, "print the decision as JSON");
    decide_cmd->add_flag("--force", decide_args.force, "run exact fallbacks above the order guard");
    decide_cmd->add_option("--threads", decide_args.threads, "search workers")->capture_default_str();

    const std::vector<std::string> reduction_names = {"oddset-to-wod", "wod-to-nonwod",
                                                      "nonwod-to-bipartite", "nonwod-to-kq", "kq-to-oddset"};

    ReduceArgs reduce_args;
    CLI::App* reduce_cmd = app.add_subcommand(
        "reduce", "build a reduction gadget; input is a graph file (oddset-to-wod expects a '# R:' side line)");
    reduce_cmd->add_option("name", reduce_args.name, "reduction name")
        ->required()
        ->check(CLI::IsMember(reduction_names));
    reduce_cmd->add_option("input", reduce_args.input_path, "source instance file")->required();
    reduce_cmd->add_option("-k,--parameter", reduce_args.k, "source parameter k")->required();
    reduce_cmd->add_option("-o,--output", reduce_args.out_path, "write the gadget JSON here");

    VerifyArgs verify_args;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "check source/target agreement of a reduction over an enumerated instance suite; "
                  "exit 1 when a counterexample is found");
    verify_cmd->add_option("name", verify_args.name, "reduction name")
        ->required()
        ->check(CLI::IsMember(reduction_names));
    verify_cmd->add_option("--max-n", verify_args.max_n, "exhaustive part covers all graphs up to this order")
        ->capture_default_str();
    verify_cmd->add_option("--max-k", verify_args.max_k, "parameters 0..max-k (clamped per reduction)")
        ->capture_default_str();
    verify_cmd->add_option("--random", verify_args.random_count, "seeded random graphs on max-n+1, max-n+2")
        ->capture_default_str();
    verify_cmd->add_option("--seed", verify_args.seed, "suite seed")->capture_default_str();
    verify_cmd->add_option("--budget", verify_args.budget, "max target-side candidates per instance")
        ->capture_default_str();
    verify_cmd->add_option("--threads", verify_args.threads, "source-side search workers")
        ->capture_default_str();
    verify_cmd->add_option("-o,--output", verify_args.out_path, "write the report JSON here");

    MineArgs mine_args;
    CLI::App* mine_cmd = app.add_subcommand(
        "mine", "sample seeded random graphs and record those with kappa_q <= floor(ratio * n)");
    mine_cmd->add_option("-n,--order", mine_args.n, "graph order")->required();
    mine_cmd->add_option("--ratio", mine_args.ratio, "hit threshold as a rational p/q")
        ->capture_default_str();
    mine_cmd->add_option("--trials", mine_args.trials, "number of samples")->capture_default_str();
    mine_cmd->add_option("--seed", mine_args.seed, "master seed")->capture_default_str();
    mine_cmd->add_option("--edge-prob", mine_args.edge_prob, "edge probability as a rational p/q")
        ->capture_default_str();
    mine_cmd->add_option("--threads", mine_args.threads, "parallel trial workers")->capture_default_str();
    mine_cmd->add_flag("--force", mine_args.force, "allow orders above the exact-solver guard");
    mine_cmd->add_option("-o,--output", mine_args.out_path, "write JSON-lines records here");

    CheckCertArgs check_args;
    CLI::App* check_cmd = app.add_subcommand(
        "check-cert", "re-verify a certificate against a graph; exit 0 valid, 1 invalid");
    check_cmd->add_option("graph", check_args.graph_path, "graph file")->required();
    check_cmd->add_option("certificate", check_args.cert_path, "certificate JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (kappa_cmd->parsed()) return run_kappa(kappa_args);
        if (kappa_prime_cmd->parsed()) return run_kappa_prime(kappa_prime_args);
        if (kappa_q_cmd->parsed()) return run_kappa_q(kappa_q_args);
        if (greedy_cmd->parsed()) return run_greedy(greedy_args);
        if (decide_cmd->parsed()) return run_decide(decide_args);
        if (reduce_cmd->parsed()) return run_reduce(reduce_args);
        if (verify_cmd->parsed()) return run_verify(verify_args);
        if (mine_cmd->parsed()) return run_mine(mine_args);
        if (check_cmd->parsed()) return run_check_cert(check_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace wod::cli
