#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "circum/campaign.hpp"

namespace circum {
namespace {

using nlohmann::json;

CampaignConfig config(std::vector<std::string> sources, std::vector<std::string> checks) {
    CampaignConfig cfg;
    cfg.sources = std::move(sources);
    cfg.checks = std::move(checks);
    cfg.reproducible = true;
    return cfg;
}

TEST(Campaign, FamilyGridSharp) {
    auto cfg = config({"kappa_family:k=2..3,d=2..6"}, {"theorem1", "sharpness"});
    auto r = run_campaign(cfg);
    ASSERT_EQ(r.records.size(), 9U);
    EXPECT_TRUE(r.summary.violations.empty());
    // sharp exactly where cbar >= kappa, i.e. d >= 2k - 1
    std::size_t tight = 0;
    for (const auto& rec : r.records) {
        const bool branch1 = rec.expected->cbar >= rec.expected->kappa;
        EXPECT_EQ(rec.sharp, branch1) << rec.source;
        tight += branch1;
    }
    EXPECT_EQ(r.summary.sharp.size(), tight);
    EXPECT_EQ(tight, 6U);
}

TEST(Campaign, EnumSixClean) {
    auto r = run_campaign(config({"enum:n=6"}, {"theorem1", "dirac"}));
    EXPECT_EQ(r.records.size(), 112U);
    EXPECT_TRUE(r.summary.violations.empty());
    // trees and other cut-vertex graphs fall below theorem1 but are only reported
    EXPECT_FALSE(r.summary.reported.empty());
    for (const auto& [i, msg] : r.summary.reported) EXPECT_LE(r.records[i].profile->kappa, 1);
}

TEST(Campaign, PetersenTheoremC) {
    auto r = run_campaign(config({"named:petersen"}, {"theoremC"}));
    const auto& c = r.records.at(0).bounds->theoremC;
    ASSERT_TRUE(c);
    EXPECT_TRUE(c->first);
    EXPECT_EQ(r.records[0].profile->c, 9);
    EXPECT_TRUE(r.records[0].bounds->entries.empty());
}

TEST(Campaign, ConfigErrors) {
    EXPECT_THROW(run_campaign(config({}, {"theorem1"})), ConfigError);
    EXPECT_THROW(run_campaign(config({"named:petersen"}, {})), ConfigError);
    EXPECT_THROW(run_campaign(config({"named:petersen"}, {"theorem9"})), ConfigError);
    auto cfg = config({"named:petersen"}, {"dirac"});
    cfg.jobs = 0;
    EXPECT_THROW(run_campaign(cfg), ConfigError);
    cfg.jobs = 1;
    cfg.format = "xml";
    EXPECT_THROW(run_campaign(cfg), ConfigError);
}

TEST(Campaign, UnreadableSourceIsARecord) {
    auto r = run_campaign(config({"missing.g6", "gnp:n=0,p=1/2", "named:petersen"}, {"dirac"}));
    ASSERT_EQ(r.records.size(), 3U);
    EXPECT_FALSE(r.records[0].error.empty());
    EXPECT_FALSE(r.records[1].error.empty());
    EXPECT_TRUE(r.records[2].error.empty());
    EXPECT_EQ(r.summary.errors, 2);
    EXPECT_FALSE(r.has_violations());
}

TEST(Campaign, OversizedGraphsAreSkipped) {
    auto path = std::filesystem::temp_directory_path() / "circum_big.g6";
    {
        std::ofstream out(path);
        out << encode_graph6(cycle_graph(70)) << '\n' << encode_graph6(cycle_graph(13)) << '\n';
    }
    auto r = run_campaign(config({path.string()}, {"dirac", "lemma_suite"}));
    ASSERT_EQ(r.records.size(), 2U);
    EXPECT_FALSE(r.records[0].profile);
    EXPECT_FALSE(r.records[0].skips.empty());
    EXPECT_EQ(r.summary.skipped, 1);
    ASSERT_TRUE(r.records[1].lemmas);
    EXPECT_TRUE(r.records[1].lemmas->skipped);
    std::filesystem::remove(path);
}

TEST(Campaign, SeedFillsGnp) {
    auto a = config({"gnp:n=8,p=1/2"}, {"dirac"});
    a.seed = 42;
    auto r = run_campaign(a);
    EXPECT_EQ(r.records[0].graph6, encode_graph6(random_gnp(8, Rational(1, 2), 42)));
}

TEST(Campaign, JsonShape) {
    auto cfg = config({"named:petersen", "kappa_family:k=2,d=3"}, {"theorem1", "theoremC", "lemma_suite"});
    auto j = json::parse(report_json(run_campaign(cfg), cfg));
    ASSERT_TRUE(j.contains("config_echo"));
    ASSERT_EQ(j["records"].size(), 2U);
    const auto& pet = j["records"][0];
    EXPECT_EQ(pet["graph6"], encode_graph6(petersen_graph()));
    const auto& t1 = pet["bounds"]["entries"][0];
    EXPECT_EQ(t1["name"], "theorem1");
    EXPECT_EQ(t1["value"]["num"], "10");
    EXPECT_EQ(t1["value"]["den"], "3");
    EXPECT_EQ(t1["slack"]["num"], "17");
    EXPECT_FALSE(j["config_echo"].contains("timestamp"));
    EXPECT_FALSE(j["summary"].contains("runtime_seconds"));
    EXPECT_EQ(j["summary"]["counts"]["graphs"], 2);

    cfg.reproducible = false;
    auto k = json::parse(report_json(run_campaign(cfg), cfg));
    EXPECT_TRUE(k["config_echo"].contains("timestamp"));
    EXPECT_TRUE(k["summary"].contains("runtime_seconds"));
}

TEST(Campaign, CsvRowsPerBound) {
    auto cfg = config({"named:petersen"}, {"theorem1", "dirac", "theoremC"});
    cfg.format = "csv";
    const std::string csv = render(run_campaign(cfg), cfg);
    std::istringstream in(csv);
    std::vector<std::string> lines;
    for (std::string l; std::getline(in, l);) lines.push_back(l);
    ASSERT_EQ(lines.size(), 4U);
    EXPECT_NE(lines[1].find(",theorem1,1,10/3,17/3,1"), std::string::npos);
    EXPECT_NE(lines[3].find(",theoremC,"), std::string::npos);
}

TEST(Campaign, ParallelMatchesSerial) {
    auto cfg = config({"enum:n=5", "gnp:n=5..10,p=1/2,seed=3,count=40"}, check_names());
    const auto one = report_json(run_campaign(cfg), cfg);
    cfg.jobs = 8;
    EXPECT_EQ(report_json(run_campaign(cfg), cfg), one);
}

TEST(Conjecture, FamilyGridEmpty) {
    auto cfg = config({"kappa_family:k=2..3,d=3..6"}, {});
    auto sweep = search_counterexamples(cfg);
    EXPECT_TRUE(sweep.findings.empty());
    EXPECT_GT(sweep.instances, 0);
    EXPECT_EQ(sweep.describe(), "no counterexample found in " + std::to_string(sweep.instances) + " instances");
    // where pbar = cbar - 1 both bounds coincide and the family is tight
    auto r = run_campaign(config({"kappa_family:k=2..3,d=3..6"}, {"theorem1", "conjecture1"}));
    for (const auto& rec : r.records) {
        if (!rec.profile->cbar || rec.profile->pbar != *rec.profile->cbar - 1) continue;
        const auto* t1 = rec.bounds->find("theorem1");
        const auto* cj = rec.bounds->find("conjecture1");
        if (*rec.profile->cbar >= rec.profile->kappa) {
            EXPECT_EQ(cj->value, t1->value) << rec.source;
            EXPECT_EQ(cj->slack, Rational(0)) << rec.source;
        }
    }
}

TEST(Conjecture, FaultInjectionFires) {
    auto cfg = config({"kappa_family:k=2..3,d=3..6"}, {});
    cfg.conjecture = [](int, int, int) { return std::optional<Rational>(Rational(1000)); };
    auto sweep = search_counterexamples(cfg);
    EXPECT_EQ(static_cast<long>(sweep.findings.size()), sweep.instances);
    EXPECT_FALSE(sweep.findings.empty());
    // findings never make the run fail
    auto r = run_campaign([&] {
        auto c = cfg;
        c.checks = {"conjecture1"};
        return c;
    }());
    EXPECT_FALSE(r.has_violations());
    EXPECT_FALSE(r.summary.findings.empty());
}

#ifdef CIRCUM_CLI_PATH
int cli(const std::string& args) {
    const int rc = std::system((std::string(CIRCUM_CLI_PATH) + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(cli("solve named:petersen"), 0);
    EXPECT_EQ(cli("solve C~"), 0);
    EXPECT_EQ(cli("verify --sources named:petersen --checks theoremC"), 0);
    EXPECT_EQ(cli("verify --sources named:petersen --checks nonsense"), 2);
    EXPECT_EQ(cli("verify --checks dirac"), 2);
    EXPECT_EQ(cli("verify --sources named:petersen --checks dirac --format xml"), 2);
    // theoremD is evaluated literally and the family sits below it
    EXPECT_EQ(cli("verify --sources kappa_family:k=2,d=3 --checks theoremD"), 1);
    EXPECT_EQ(cli("generate nope:x=1 --output -"), 2);
}

TEST(Cli, GenerateRoundTrip) {
    auto path = std::filesystem::temp_directory_path() / "circum_gen.g6";
    ASSERT_EQ(cli("generate gnp:n=7,p=1/2,seed=5 --count 3 --output " + path.string()), 0);
    std::ifstream in(path);
    auto graphs = read_graph6_stream(in);
    ASSERT_EQ(graphs.size(), 3U);
    EXPECT_EQ(encode_graph6(graphs[1]), encode_graph6(random_gnp(7, Rational(1, 2), 6)));
    std::filesystem::remove(path);
}
#endif

}  // namespace
}  // namespace circum
