#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "circum/campaign.hpp"

namespace {

using namespace circum;

constexpr int kExitViolations = 1;
constexpr int kExitConfig = 2;

std::vector<std::pair<std::string, Graph>> load_for_solve(const std::string& source) {
    std::vector<std::pair<std::string, Graph>> out;
    if (GeneratorSpec::looks_like(source)) {
        for (auto& g : GeneratorSpec::parse(source).generate()) out.emplace_back(g.label, std::move(g.graph));
        return out;
    }
    if (std::filesystem::is_regular_file(source)) {
        std::ifstream in(source);
        auto graphs = read_graph6_stream(in);
        for (std::size_t i = 0; i < graphs.size(); ++i) out.emplace_back(source + "#" + std::to_string(i), graphs[i]);
        return out;
    }
    out.emplace_back(source, parse_graph6(source));
    return out;
}

void print_solution(const std::string& label, const Graph& g, double budget) {
    const auto p = compute_profile(g, budget > 0 ? SearchBudget::seconds(budget) : SearchBudget::unlimited());
    const auto report = evaluate_all(p);
    std::cout << label << "  (graph6 " << encode_graph6(g) << ")\n";
    std::cout << "  n=" << p.n << "  delta=" << p.delta << "  kappa=" << p.kappa << "  c=" << p.c;
    if (p.residual_empty)
        std::cout << "  Hamiltonian";
    else
        std::cout << "  cbar=" << *p.cbar << "  pbar=" << p.pbar;
    if (!p.complete) std::cout << "  [incomplete: c is a lower bound]";
    std::cout << "\n  longest cycle:";
    for (int v : p.cycle.vertices) std::cout << ' ' << v;
    std::cout << "\n\n  " << std::left << std::setw(13) << "bound" << std::setw(12) << "value" << std::setw(12)
              << "slack" << "status\n";
    for (const auto& e : report.entries) {
        std::cout << "  " << std::setw(13) << e.name;
        if (!e.applicable) {
            std::cout << std::setw(12) << "-" << std::setw(12) << "-" << "inapplicable (" << e.reason << ")\n";
            continue;
        }
        std::cout << std::setw(12) << e.value.str() << std::setw(12) << e.slack.str()
                  << (e.satisfied ? (e.slack == Rational(0) ? "sharp" : "ok") : "VIOLATED") << '\n';
    }
    std::optional<std::vector<CycleWitness>> all;
    if (p.kappa >= 3 && g.order() <= kExhaustiveCap) all = all_longest_cycles(g);
    const auto c = check_theoremC(g, p, all ? &*all : nullptr);
    std::cout << "  " << std::setw(13) << "theoremC";
    if (!c.applicable)
        std::cout << "inapplicable (" << c.reason << ")\n";
    else
        std::cout << (c.first ? "c >= 3delta-3" : c.second ? "longest cycles dominating" : c.determined ? "VIOLATED" : "undetermined")
                  << '\n';
    std::cout << std::right;
}

int write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot write " << path << '\n';
        return kExitConfig;
    }
    out << text;
    return 0;
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
    std::vector<std::string> out;
    for (const auto& item : items) {
        // generator specs carry commas themselves, so only split check lists
        std::stringstream ss(item);
        for (std::string part; std::getline(ss, part, ',');)
            if (!part.empty()) out.push_back(part);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Circumference bounds: exact invariants, bound checks and lemma validation"};
    app.require_subcommand(1);

    std::string solve_source;
    double solve_budget = 10;
    auto* solve = app.add_subcommand("solve", "Print invariants and bounds for one graph");
    solve->add_option("source", solve_source, "graph6 string, graph6 file or generator spec")->required();
    solve->add_option("--time-budget", solve_budget, "Seconds per solver call (0 = unlimited)");

    CampaignConfig cfg;
    std::vector<std::string> checks;
    auto* verify = app.add_subcommand("verify", "Run a verification campaign");
    verify->add_option("--sources", cfg.sources, "graph6 files or generator specs")->required();
    verify->add_option("--checks", checks, "Checks to run (comma or space separated)")->required();
    verify->add_option("--jobs", cfg.jobs, "Worker threads");
    verify->add_option("--seed", cfg.seed, "Seed for gnp sources without one");
    verify->add_option("--format", cfg.format, "json or csv");
    verify->add_option("--output", cfg.output, "Report path (default stdout)");
    verify->add_option("--time-budget", cfg.time_budget, "Seconds per graph before a result is marked incomplete");
    verify->add_flag("--reproducible", cfg.reproducible, "Omit timestamp and runtime from the report");

    std::string gen_spec, gen_output;
    int gen_count = 0;
    auto* generate = app.add_subcommand("generate", "Write generated graphs as graph6");
    generate->add_option("spec", gen_spec, "Generator spec")->required();
    generate->add_option("--count", gen_count, "Number of graphs (gnp: count, others: first K)");
    generate->add_option("--output", gen_output, "Output path, - for stdout")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        if (*solve) {
            for (const auto& [label, g] : load_for_solve(solve_source)) print_solution(label, g, solve_budget);
            return 0;
        }
        if (*generate) {
            auto spec = GeneratorSpec::parse(gen_spec);
            if (gen_count < 0) throw ConfigError("count must be non-negative");
            if (gen_count > 0 && spec.kind == GeneratorSpec::Kind::gnp) spec.params["count"] = std::to_string(gen_count);
            auto graphs = spec.generate();
            if (gen_count > 0 && static_cast<int>(graphs.size()) > gen_count) graphs.erase(graphs.begin() + gen_count, graphs.end());
            std::ostringstream out;
            for (const auto& g : graphs) out << encode_graph6(g.graph) << '\n';
            return write_text(gen_output, out.str());
        }
        cfg.checks = split_list(checks);
        auto report = run_campaign(cfg);
        if (int rc = write_text(cfg.output, render(report, cfg))) return rc;
        const auto& s = report.summary;
        std::cerr << s.graphs << " graphs, " << s.errors << " unreadable, " << s.skipped << " skipped, "
                  << s.incomplete << " incomplete, " << s.violations.size() << " violations, " << s.findings.size()
                  << " conjecture findings, " << s.reported.size() << " reported outside premises\n";
        for (const auto& [i, msg] : s.violations) std::cerr << "  violation: " << report.records[i].source << ": " << msg << '\n';
        return report.has_violations() ? kExitViolations : 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}
