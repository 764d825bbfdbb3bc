#include "crossfam/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "crossfam/family_io.hpp"
#include "crossfam/random.hpp"
#include "crossfam/report.hpp"

namespace crossfam::cli {

namespace {

struct GlobalOptions {
    std::string out_path;
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

SearchOptions search_options(const GlobalOptions& g, const std::string& strategy) {
    SearchOptions o;
    o.strategy = parse_strategy(strategy);
    o.threads = g.threads;
    return o;
}

// Each command fills `report` and returns its exit code.
using Command = std::function<int(RunReport&)>;

int cmd_verify_bounded(RunReport& report, const GlobalOptions& g, int m, int n, int r, int s,
                       const std::string& strategy) {
    report.parameters = {{"m", m}, {"n", n}, {"r", r}, {"s", s}, {"strategy", strategy}};
    report.results = to_json(verify_theorem1(m, n, r, s, search_options(g, strategy)));
    return kVerified;
}

int cmd_verify_hereditary(RunReport& report, const GlobalOptions& g, int n, bool all_pairs,
                          const std::string& strategy) {
    report.parameters = {{"n", n}, {"all_pairs", all_pairs}, {"strategy", strategy}};
    const DownsetCatalog catalog = enumerate_downsets(n, true);
    const SearchOptions opts = search_options(g, strategy);
    std::uint64_t pairs = 0, violations = 0, nodes = 0;
    Json failures = Json::array();
    for (std::size_t i = 0; i < catalog.families.size(); ++i)
        for (std::size_t j = 0; j < catalog.families.size(); ++j) {
            if (!all_pairs && i != j) continue;
            ++pairs;
            const SearchResult r =
                max_product_pair(GroundSpec::hereditary(catalog.families[i]),
                                 GroundSpec::hereditary(catalog.families[j]), opts);
            nodes += r.nodes_explored;
            if (!r.equality) {
                ++violations;
                failures.push_back({{"g", to_json(catalog.families[i])},
                                    {"h", to_json(catalog.families[j])},
                                    {"result", to_json(r)}});
            }
        }
    report.results = {{"n", n},
                      {"families", catalog.families.size()},
                      {"pairs_checked", pairs},
                      {"violations", violations},
                      {"nodes_explored", nodes},
                      {"failures", std::move(failures)}};
    return violations ? kVerificationFailed : kVerified;
}

int cmd_verify_k(RunReport& report, const GlobalOptions& g, const std::vector<std::string>& files,
                 const std::vector<int>& n_list) {
    if (files.empty() == n_list.empty())
        throw ParameterError("verify-k needs exactly one of --grounds or --n-list");
    SearchOptions opts = search_options(g, "auto");
    if (!n_list.empty()) {
        report.parameters = {{"n_list", n_list}};
        report.results = to_json(verify_corollary3(n_list, opts));
        return kVerified;
    }
    std::vector<SetFamily> grounds;
    for (const auto& f : files) grounds.push_back(parse_family_file(f));
    report.parameters = {{"grounds", files}};
    report.results = to_json(verify_theorem5(grounds, opts));
    return kVerified;
}

int cmd_compress(RunReport& report, const std::string& in_a, const std::string& in_b) {
    report.parameters = {{"in", in_a}};
    const SetFamily a = parse_family_file(in_a);
    if (in_b.empty()) {
        const CompressedFamily c = compress_to_fixed_point(a);
        report.results = {{"initial", to_json(a)},
                          {"final", to_json(c.family)},
                          {"compressed", is_compressed(c.family)},
                          {"trace", to_json(c.trace)}};
        return kVerified;
    }
    report.parameters["in_b"] = in_b;
    const SetFamily b = parse_family_file(in_b);
    const CompressedPair c = compress_pair_to_fixed_point(a, b);
    report.results = {{"initial_a", to_json(a)},
                      {"initial_b", to_json(b)},
                      {"final_a", to_json(c.a)},
                      {"final_b", to_json(c.b)},
                      {"cross_intersecting", are_cross_intersecting(c.a, c.b)},
                      {"trace", to_json(c.trace)}};
    return kVerified;
}

Json ledger_report(const SetFamily& a, const SetFamily& b, const std::optional<SetFamily>& g,
                   const std::optional<SetFamily>& h, bool& passed) {
    const ConflictSystem cs = find_conflicts(a, b);
    const AlterationLedger ledger = assemble_alteration(cs, a, b, g, h);
    passed = ledger.all_passed();
    return {{"conflicts", to_json(cs)},
            {"branch", cs.k == 0 ? "slices-cross-intersecting" : "alteration"},
            {"ledger", to_json(ledger)}};
}

int cmd_prooflab(RunReport& report, const GlobalOptions& g, const std::string& in_a,
                 const std::string& in_b, const std::string& ground_a,
                 const std::string& ground_b, int random_count, int random_n) {
    if (random_count > 0) {
        if (random_n < 2 || random_n > 10) throw ParameterError("--n must be in [2, 10]");
        report.parameters = {{"random", random_count}, {"n", random_n}, {"seed", g.seed}};
        Rng rng(g.seed);
        std::uint64_t failed = 0, with_conflicts = 0;
        Json k_histogram = Json::object();
        for (int t = 0; t < random_count; ++t) {
            const auto [a, b] = random_compressed_pair(rng, random_n);
            bool passed = true;
            const Json r = ledger_report(a, b, std::nullopt, std::nullopt, passed);
            const int k = r["conflicts"]["k"].get<int>();
            with_conflicts += k > 0;
            auto& slot = k_histogram[std::to_string(k)];
            slot = slot.is_null() ? 1 : slot.get<int>() + 1;
            failed += !passed;
        }
        report.results = {{"instances", random_count},
                          {"with_conflicts", with_conflicts},
                          {"k_histogram", std::move(k_histogram)},
                          {"violations", failed}};
        return failed ? kVerificationFailed : kVerified;
    }
    if (in_a.empty() || in_b.empty())
        throw ParameterError("prooflab needs --in-a and --in-b (or --random)");
    report.parameters = {{"in_a", in_a}, {"in_b", in_b}};
    std::optional<SetFamily> g_family, h_family;
    if (!ground_a.empty()) {
        report.parameters["ground_a"] = ground_a;
        g_family = parse_family_file(ground_a);
    }
    if (!ground_b.empty()) {
        report.parameters["ground_b"] = ground_b;
        h_family = parse_family_file(ground_b);
    }
    bool passed = true;
    report.results =
        ledger_report(parse_family_file(in_a), parse_family_file(in_b), g_family, h_family, passed);
    return passed ? kVerified : kVerificationFailed;
}

int cmd_lemma2(RunReport& report, int n) {
    report.parameters = {{"n", n}};
    const DownsetCatalog catalog = enumerate_downsets(n, false);
    std::uint64_t hypotheses = 0, violations = 0, injections = 0, injection_failures = 0;
    for (const auto& h : catalog.families)
        for (int x = 1; x <= n; ++x) {
            const InjectionReport inj = lemma2_injection(h, x);
            ++injections;
            bool bad_injection = !inj.well_defined || !inj.injective;
            if (inj.hypothesis_holds) {
                ++hypotheses;
                if (!lemma2_check(h, x)) ++violations;
                bad_injection = bad_injection || inj.surjective;
            }
            injection_failures += bad_injection;
        }
    report.results = {{"n", n},
                      {"families_checked", catalog.families.size()},
                      {"hypotheses_checked", hypotheses},
                      {"violations", violations},
                      {"injections_checked", injections},
                      {"injection_failures", injection_failures}};
    return violations || injection_failures ? kVerificationFailed : kVerified;
}

int cmd_search(RunReport& report, const GlobalOptions& g, const std::string& ground_a,
               const std::string& ground_b, const std::string& strategy) {
    report.parameters = {{"ground_a", ground_a}, {"ground_b", ground_b}, {"strategy", strategy}};
    const SetFamily ga = parse_family_file(ground_a);
    const SetFamily gb = parse_family_file(ground_b);
    SearchResult r = max_product_over(ga, gb, search_options(g, strategy));
    // The |G(1)||H(1)| bound only applies to hereditary compressed grounds.
    if (is_hereditary(ga) && is_compressed(ga) && is_hereditary(gb) && is_compressed(gb)) {
        const auto star_at_one = [](const SetFamily& f) {
            return static_cast<std::uint64_t>(f.ground_n() >= 1 ? star(f, 1).size() : 0);
        };
        r.bound = star_at_one(ga) * star_at_one(gb);
        r.equality = r.max_product == *r.bound;
        if (!r.equality) {
            report.results = to_json(r);
            return kVerificationFailed;
        }
    }
    report.results = to_json(r);
    return kVerified;
}

const char* failure_kind(VerificationFailure::Kind k) {
    switch (k) {
        case VerificationFailure::Kind::BoundViolation: return "bound-violation";
        case VerificationFailure::Kind::UniquenessViolation: return "uniqueness-violation";
        case VerificationFailure::Kind::IdentityViolation: return "identity-violation";
    }
    return "verification-failure";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact search and verification for cross-intersecting set families", "crossfam"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOptions g;
    app.add_option("--out", g.out_path, "Write the JSON report to this file");
    app.add_option("--seed", g.seed, "Seed for randomized sweeps");
    app.add_option("--threads", g.threads, "Worker threads for the search")->check(CLI::Range(1, 64));

    Command command;
    std::string strategy = "auto";

    int m = 0, n = 0, r = 0, s = 0;
    auto* vb = app.add_subcommand("verify-bounded", "Exact check of the bounded-size product bound");
    vb->add_option("--m", m)->required();
    vb->add_option("--n", n)->required();
    vb->add_option("--r", r)->required();
    vb->add_option("--s", s)->required();
    vb->add_option("--strategy", strategy)->check(
        CLI::IsMember({"auto", "exhaustive", "galois", "antichain"}));
    vb->callback([&] {
        command = [&](RunReport& rep) { return cmd_verify_bounded(rep, g, m, n, r, s, strategy); };
    });

    int her_n = 0;
    bool all_pairs = false;
    auto* vh = app.add_subcommand("verify-hereditary",
                                  "Sweep compressed hereditary ground pairs over [n]");
    vh->add_option("--n", her_n)->required();
    vh->add_flag("--all-pairs", all_pairs, "Check every ordered pair, not just (G, G)");
    vh->add_option("--strategy", strategy)->check(
        CLI::IsMember({"auto", "exhaustive", "galois", "antichain"}));
    vh->callback([&] {
        command = [&](RunReport& rep) {
            return cmd_verify_hereditary(rep, g, her_n, all_pairs, strategy);
        };
    });

    std::vector<std::string> ground_files;
    std::vector<int> n_list;
    auto* vk = app.add_subcommand("verify-k", "Exact k-fold product over hereditary grounds");
    vk->add_option("--grounds", ground_files)->check(CLI::ExistingFile);
    vk->add_option("--n-list", n_list, "Power-set grounds 2^[n_i]")->delimiter(',');
    vk->callback([&] {
        command = [&](RunReport& rep) { return cmd_verify_k(rep, g, ground_files, n_list); };
    });

    std::string in_a, in_b;
    auto* cp = app.add_subcommand("compress", "Drive a family (or pair) to a compressed fixed point");
    cp->add_option("--in", in_a)->required()->check(CLI::ExistingFile);
    cp->add_option("--in-b", in_b)->check(CLI::ExistingFile);
    cp->callback([&] { command = [&](RunReport& rep) { return cmd_compress(rep, in_a, in_b); }; });

    std::string ground_a, ground_b;
    int random_count = 0, random_n = 0;
    auto* pl = app.add_subcommand("prooflab", "Replay the slice-and-alteration construction");
    pl->add_option("--in-a", in_a)->check(CLI::ExistingFile);
    pl->add_option("--in-b", in_b)->check(CLI::ExistingFile);
    pl->add_option("--ground-a", ground_a)->check(CLI::ExistingFile);
    pl->add_option("--ground-b", ground_b)->check(CLI::ExistingFile);
    pl->add_option("--random", random_count, "Check this many seeded random compressed pairs");
    pl->add_option("--n", random_n, "Ground size for --random");
    pl->callback([&] {
        command = [&](RunReport& rep) {
            return cmd_prooflab(rep, g, in_a, in_b, ground_a, ground_b, random_count, random_n);
        };
    });

    int lemma_n = 0;
    auto* l2 = app.add_subcommand("lemma2", "Sweep the star-size lemma over all downsets of 2^[n]");
    l2->add_option("--n", lemma_n)->required();
    l2->callback([&] { command = [&](RunReport& rep) { return cmd_lemma2(rep, lemma_n); }; });

    auto* se = app.add_subcommand("search", "Exact max |A||B| over two ground family files");
    se->add_option("--ground-a", ground_a)->required()->check(CLI::ExistingFile);
    se->add_option("--ground-b", ground_b)->required()->check(CLI::ExistingFile);
    se->add_option("--strategy", strategy)->check(
        CLI::IsMember({"auto", "exhaustive", "galois", "antichain"}));
    se->callback([&] {
        command = [&](RunReport& rep) { return cmd_search(rep, g, ground_a, ground_b, strategy); };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kVerified;
    } catch (const CLI::ParseError& e) {
        err << "crossfam: " << e.what() << "\n";
        return kUsageError;
    }

    RunReport report;
    report.command = app.get_subcommands().front()->get_name();
    const auto start = std::chrono::steady_clock::now();
    int code = kVerified;
    try {
        code = command(report);
    } catch (const VerificationFailure& e) {
        err << "crossfam: verification failed: " << e.what() << "\n";
        report.results["error"] = failure_kind(e.kind());
        report.results["message"] = e.what();
        code = kVerificationFailed;
    } catch (const BudgetExceeded& e) {
        err << "crossfam: budget exceeded: " << e.what() << "\n";
        report.results["error"] = "budget-exceeded";
        report.results["message"] = e.what();
        code = kBudgetExceeded;
    } catch (const std::exception& e) {
        // Parameter, precondition, parse and I/O errors.
        err << "crossfam: " << e.what() << "\n";
        return kUsageError;
    }
    report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    if (!report.parameters.is_object()) report.parameters = Json::object();
    report.parameters["seed"] = g.seed;
    report.parameters["threads"] = g.threads;

    const std::string text = report.to_json().dump(2) + "\n";
    if (g.out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(g.out_path, std::ios::binary);
        if (!file) {
            err << "crossfam: cannot write " << g.out_path << "\n";
            return kUsageError;
        }
        file << text;
    }
    return code;
}

}  // namespace crossfam::cli
