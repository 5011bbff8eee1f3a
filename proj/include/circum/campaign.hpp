#pragma once

// Batch runner: expand sources into graphs, push each through profile,
// bounds and (optionally) the lemma suite, then assemble a report.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "circum/bounds.hpp"
#include "circum/generators.hpp"
#include "circum/graph6.hpp"
#include "circum/invariants.hpp"
#include "circum/lemmas.hpp"

namespace circum {

/// Bad flags or an empty campaign; the whole run is rejected.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{"theorem1", "dirac",    "dirac2",      "theoremC",  "theoremD",
                                                "theoremE", "theoremF", "conjecture1", "sharpness", "lemma_suite"};
    return names;
}

/// Bounds whose failure means a bug here, not news about the graph.
inline bool is_proved_bound(const std::string& name) { return name != "conjecture1"; }

struct CampaignConfig {
    std::vector<std::string> sources;  // graph6 file paths or generator specs
    std::vector<std::string> checks;
    int jobs = 1;
    std::uint64_t seed = 0;  // default seed for gnp specs that omit one
    std::string format = "json";
    std::string output;       // empty: caller decides
    double time_budget = 10;  // seconds per graph; <= 0 disables
    bool reproducible = false;  // drop timestamp and runtime from the report
    Conjecture1Formula conjecture = bound_conjecture1;

    bool wants(const std::string& check) const {
        return std::find(checks.begin(), checks.end(), check) != checks.end();
    }

    void validate() const {
        if (sources.empty()) throw ConfigError("at least one source is required");
        if (checks.empty()) throw ConfigError("at least one check is required");
        for (const auto& c : checks)
            if (std::find(check_names().begin(), check_names().end(), c) == check_names().end())
                throw ConfigError("unknown check '" + c + "'");
        if (jobs < 1) throw ConfigError("jobs must be at least 1");
        if (format != "json" && format != "csv") throw ConfigError("format must be json or csv");
        if (!conjecture) throw ConfigError("conjecture formula missing");
    }
};

struct GraphRecord {
    std::string source;
    std::string graph6;
    std::string error;  // source could not be read
    std::optional<InvariantProfile> profile;
    std::optional<BoundReport> bounds;
    std::optional<LemmaSuiteResult> lemmas;
    std::optional<FamilyExpectation> expected;
    std::vector<std::string> skips;
    std::vector<std::string> violations;  // proved statements that failed
    std::vector<std::string> findings;    // conjecture failures
    std::vector<std::string> reported;    // failures outside an asserted premise
    bool sharp = false;
};

struct CampaignSummary {
    long graphs = 0;
    long errors = 0;
    long skipped = 0;
    long incomplete = 0;
    long lemma_instances = 0;
    std::vector<std::pair<std::size_t, std::string>> violations;
    std::vector<std::pair<std::size_t, std::string>> findings;
    std::vector<std::pair<std::size_t, std::string>> reported;
    std::vector<std::size_t> sharp;
    double runtime = 0;
};

struct CampaignReport {
    std::vector<GraphRecord> records;
    CampaignSummary summary;
    bool has_violations() const { return !summary.violations.empty(); }
};

namespace detail {

struct WorkItem {
    std::string source;
    std::optional<Graph> graph;
    std::optional<FamilyExpectation> expected;
    std::string error;
};

inline std::vector<WorkItem> expand_source(const std::string& text, std::uint64_t seed) {
    std::vector<WorkItem> out;
    try {
        if (GeneratorSpec::looks_like(text)) {
            auto spec = GeneratorSpec::parse(text);
            if (spec.kind == GeneratorSpec::Kind::gnp && !spec.params.count("seed"))
                spec.params["seed"] = std::to_string(seed);
            for (auto& g : spec.generate()) out.push_back({std::move(g.label), std::move(g.graph), g.expected, {}});
            return out;
        }
        std::ifstream in(text);
        if (!in) throw std::runtime_error("cannot open '" + text + "'");
        auto graphs = read_graph6_stream(in);
        for (std::size_t i = 0; i < graphs.size(); ++i)
            out.push_back({text + "#" + std::to_string(i), std::move(graphs[i]), std::nullopt, {}});
    } catch (const std::exception& ex) {
        out.clear();
        out.push_back({text, std::nullopt, std::nullopt, ex.what()});
    }
    return out;
}

inline GraphRecord process(const WorkItem& item, const CampaignConfig& cfg) {
    GraphRecord r;
    r.source = item.source;
    r.expected = item.expected;
    if (!item.graph) {
        r.error = item.error;
        return r;
    }
    const Graph& g = *item.graph;
    r.graph6 = encode_graph6(g);
    try {
        const auto budget = cfg.time_budget > 0 ? SearchBudget::seconds(cfg.time_budget) : SearchBudget::unlimited();
        r.profile = compute_profile(g, budget);
    } catch (const CapExceeded& ex) {
        r.skips.push_back(std::string("profile: ") + ex.what());
        return r;
    }
    const InvariantProfile& p = *r.profile;
    if (!p.complete) r.skips.push_back("incomplete: time budget reached, circumference is a lower bound");

    BoundReport full = evaluate_all(p, cfg.conjecture);
    BoundReport kept;
    for (auto& e : full.entries) {
        const bool asked = cfg.wants(e.name) || (e.name == "theorem1" && cfg.wants("sharpness"));
        if (asked) kept.entries.push_back(e);
    }
    if (cfg.wants("theoremC")) {
        std::optional<std::vector<CycleWitness>> all;
        if (p.kappa >= 3 && p.complete) {
            try {
                all = all_longest_cycles(g);
            } catch (const CapExceeded&) {
                r.skips.push_back("theoremC: cycle enumeration above cap, second disjunct undetermined");
            }
        }
        kept.theoremC = check_theoremC(g, p, all ? &*all : nullptr);
    }
    r.bounds = kept;

    // a lower-bound circumference cannot convict a bound
    if (p.complete) {
        for (const auto& e : kept.entries) {
            if (!e.applicable || e.satisfied) continue;
            const std::string msg = e.name + ": c=" + std::to_string(p.c) + " < " + e.value.str();
            if (!is_proved_bound(e.name))
                r.findings.push_back(msg);
            else if (e.name == "theorem1" && p.kappa <= 1)
                r.reported.push_back(msg + " (kappa <= 1, not asserted)");
            else if (cfg.wants(e.name))
                r.violations.push_back(msg);
        }
        if (kept.theoremC && kept.theoremC->violation()) r.violations.push_back("theoremC: neither disjunct holds");
    }
    if (cfg.wants("sharpness")) {
        const BoundEntry* t1 = kept.find("theorem1");
        r.sharp = p.complete && t1 && t1->applicable && t1->slack == Rational(0);
        if (r.expected && p.complete && (p.c != r.expected->c || p.cbar != r.expected->cbar))
            r.violations.push_back("sharpness: family invariants differ from closed form");
        if (r.expected && !r.sharp && r.expected->cbar >= r.expected->kappa)
            r.violations.push_back("sharpness: family not tight for theorem1");
    }
    if (cfg.wants("lemma_suite")) {
        auto ls = run_lemma_suite(g);
        if (ls.skipped) r.skips.push_back("lemma_suite: " + ls.skip_reason);
        for (const auto& t : ls.tallies)
            if (t.violations > 0) r.violations.push_back("lemma " + t.id + ": " + t.first_violation->context);
        r.lemmas = std::move(ls);
    }
    return r;
}

}  // namespace detail

inline CampaignReport run_campaign(const CampaignConfig& cfg) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    std::vector<detail::WorkItem> items;
    for (const auto& s : cfg.sources) {
        auto more = detail::expand_source(s, cfg.seed);
        std::move(more.begin(), more.end(), std::back_inserter(items));
    }

    CampaignReport report;
    report.records.resize(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) report.records[i] = detail::process(items[i], cfg);
    };
    const int threads = std::min<int>(cfg.jobs, static_cast<int>(std::max<std::size_t>(items.size(), 1)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    auto& s = report.summary;
    for (std::size_t i = 0; i < report.records.size(); ++i) {
        const auto& r = report.records[i];
        ++s.graphs;
        if (!r.error.empty()) ++s.errors;
        if (r.profile && !r.profile->complete) ++s.incomplete;
        if (!r.profile && r.error.empty()) ++s.skipped;
        if (r.lemmas) s.lemma_instances += r.lemmas->instances;
        for (const auto& v : r.violations) s.violations.emplace_back(i, v);
        for (const auto& f : r.findings) s.findings.emplace_back(i, f);
        for (const auto& f : r.reported) s.reported.emplace_back(i, f);
        if (r.sharp) s.sharp.push_back(i);
    }
    s.runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// ---------------------------------------------------------------------------
// Serialization

namespace detail {

using nlohmann::json;

inline json to_json(const Rational& r) { return {{"num", r.num().str()}, {"den", r.den().str()}}; }

inline json to_json(const InvariantProfile& p) {
    json j;
    j["n"] = p.n;
    j["delta"] = p.delta;
    j["kappa"] = p.kappa;
    j["c"] = p.c;
    j["cycle"] = p.cycle.vertices;
    j["residual_empty"] = p.residual_empty;
    j["cbar"] = p.cbar ? json(*p.cbar) : json(nullptr);
    j["pbar"] = p.pbar;
    j["residual_cycle"] = p.residual_cycle.vertices;
    j["residual_path"] = p.residual_path.vertices;
    j["complete"] = p.complete;
    return j;
}

inline json to_json(const BoundReport& b) {
    json entries = json::array();
    for (const auto& e : b.entries) {
        json j{{"name", e.name}, {"applicable", e.applicable}};
        if (e.applicable) {
            j["value"] = to_json(e.value);
            j["slack"] = to_json(e.slack);
            j["satisfied"] = e.satisfied;
        } else {
            j["reason"] = e.reason;
        }
        entries.push_back(std::move(j));
    }
    json out{{"entries", entries}};
    if (b.theoremC) {
        const auto& c = *b.theoremC;
        out["theoremC"] = {{"applicable", c.applicable}, {"reason", c.reason},  {"determined", c.determined},
                           {"first", c.first},           {"second", c.second}, {"violation", c.violation()}};
    }
    return out;
}

inline json to_json(const LemmaSuiteResult& l) {
    json tallies = json::array();
    for (const auto& t : l.tallies) {
        json j{{"id", t.id}, {"cases", t.cases}, {"violations", t.violations}};
        if (t.first_violation) j["first_violation"] = t.first_violation->context;
        tallies.push_back(std::move(j));
    }
    return {{"skipped", l.skipped}, {"skip_reason", l.skip_reason}, {"cycles", l.cycles},
            {"instances", l.instances}, {"tallies", tallies}};
}

inline json to_json(const GraphRecord& r) {
    json j{{"source", r.source}};
    if (!r.error.empty()) {
        j["error"] = r.error;
        return j;
    }
    j["graph6"] = r.graph6;
    if (r.profile) j["profile"] = to_json(*r.profile);
    if (r.bounds) j["bounds"] = to_json(*r.bounds);
    if (r.lemmas) j["lemmas"] = to_json(*r.lemmas);
    if (r.expected)
        j["expected"] = {{"kappa", r.expected->kappa}, {"delta", r.expected->delta}, {"c", r.expected->c},
                         {"cbar", r.expected->cbar}};
    j["skips"] = r.skips;
    j["violations"] = r.violations;
    j["findings"] = r.findings;
    j["reported"] = r.reported;
    j["sharp"] = r.sharp;
    return j;
}

inline std::string utc_now() {
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace detail

inline std::string report_json(const CampaignReport& report, const CampaignConfig& cfg) {
    using detail::json;
    json echo{{"sources", cfg.sources},         {"checks", cfg.checks},
              {"jobs", cfg.jobs},               {"seed", std::to_string(cfg.seed)},
              {"time_budget", cfg.time_budget}, {"format", cfg.format}};
    // jobs does not change the records, so keep reproducible reports comparable across it
    if (cfg.reproducible) echo.erase("jobs");
    if (!cfg.reproducible) echo["timestamp"] = detail::utc_now();

    json records = json::array();
    for (const auto& r : report.records) records.push_back(detail::to_json(r));

    const auto& s = report.summary;
    auto listed = [&](const std::vector<std::pair<std::size_t, std::string>>& v) {
        json a = json::array();
        for (const auto& [i, msg] : v) a.push_back({{"record", i}, {"source", report.records[i].source}, {"detail", msg}});
        return a;
    };
    json sharp = json::array();
    for (auto i : s.sharp) sharp.push_back(report.records[i].source);
    json summary{{"counts",
                  {{"graphs", s.graphs},
                   {"errors", s.errors},
                   {"skipped", s.skipped},
                   {"incomplete", s.incomplete},
                   {"lemma_instances", s.lemma_instances},
                   {"violations", s.violations.size()},
                   {"findings", s.findings.size()},
                   {"reported", s.reported.size()},
                   {"sharp", s.sharp.size()}}},
                 {"violations", listed(s.violations)},
                 {"conjecture_findings", listed(s.findings)},
                 {"reported", listed(s.reported)},
                 {"sharp_instances", sharp}};
    if (!cfg.reproducible) summary["runtime_seconds"] = s.runtime;
    return json{{"config_echo", echo}, {"records", records}, {"summary", summary}}.dump(2) + "\n";
}

inline std::string report_csv(const CampaignReport& report) {
    std::ostringstream out;
    out << "record,source,graph6,n,delta,kappa,c,cbar,pbar,complete,bound,applicable,value,slack,satisfied\n";
    auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        return q + "\"";
    };
    for (std::size_t i = 0; i < report.records.size(); ++i) {
        const auto& r = report.records[i];
        if (!r.profile || !r.bounds) {
            out << i << ',' << quote(r.source) << ',' << quote(r.graph6) << ",,,,,,,,"
                << (r.error.empty() ? "skipped" : "error") << ",,,,\n";
            continue;
        }
        const auto& p = *r.profile;
        std::ostringstream head;
        head << i << ',' << quote(r.source) << ',' << quote(r.graph6) << ',' << p.n << ',' << p.delta << ','
             << p.kappa << ',' << p.c << ',' << (p.cbar ? std::to_string(*p.cbar) : "") << ',' << p.pbar << ','
             << (p.complete ? 1 : 0) << ',';
        for (const auto& e : r.bounds->entries) {
            out << head.str() << e.name << ',' << (e.applicable ? 1 : 0) << ',';
            if (e.applicable)
                out << e.value << ',' << e.slack << ',' << (e.satisfied ? 1 : 0);
            else
                out << ",,";
            out << '\n';
        }
        if (const auto& c = r.bounds->theoremC)
            out << head.str() << "theoremC," << (c->applicable ? 1 : 0) << ",,," << (c->violation() ? 0 : 1) << '\n';
    }
    return out.str();
}

inline std::string render(const CampaignReport& report, const CampaignConfig& cfg) {
    return cfg.format == "csv" ? report_csv(report) : report_json(report, cfg);
}

// ---------------------------------------------------------------------------
// Conjecture sweep

struct ConjectureFinding {
    std::string source;
    std::string graph6;
    InvariantProfile profile;
    Rational bound;
};

struct ConjectureSweep {
    long instances = 0;  // graphs where the formula applied and c was exact
    std::vector<ConjectureFinding> findings;

    std::string describe() const {
        if (findings.empty()) return "no counterexample found in " + std::to_string(instances) + " instances";
        return std::to_string(findings.size()) + " counterexample(s) in " + std::to_string(instances) + " instances";
    }
};

inline ConjectureSweep search_counterexamples(CampaignConfig cfg) {
    cfg.checks = {"conjecture1"};
    auto report = run_campaign(cfg);
    ConjectureSweep out;
    for (const auto& r : report.records) {
        if (!r.profile || !r.profile->complete || !r.bounds) continue;
        const BoundEntry* e = r.bounds->find("conjecture1");
        if (!e || !e->applicable) continue;
        ++out.instances;
        if (!e->satisfied) out.findings.push_back({r.source, r.graph6, *r.profile, e->value});
    }
    return out;
}

}  // namespace circum
