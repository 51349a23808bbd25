#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pretop/campaign.hpp"

using namespace pretop;

namespace {

CampaignConfig small_config() {
    CampaignConfig cfg;
    cfg.max_points = 2;
    cfg.max_function_carrier = 3;
    cfg.max_seq_len = 3;
    return cfg;
}

} // namespace

TEST_CASE("registry covers every documented check id") {
    const auto& ids = registry_ids();
    CHECK(ids.size() == 21);
    auto cfg = small_config();
    cfg.theorem_ids = ids;
    auto records = run_campaign(cfg);
    REQUIRE(records.size() == ids.size());
    for (size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].check == ids[i]);
        CHECK(records[i].verdict != "fails");
    }
}

TEST_CASE("single-check campaigns") {
    auto cfg = small_config();
    cfg.theorem_ids = {"T1"};
    auto r = run_campaign(cfg);
    REQUIRE(r.size() == 1);
    CHECK(r[0].verdict == "holds");

    cfg.theorem_ids = {"T4"};
    CHECK(run_campaign(cfg)[0].verdict == "holds");

    cfg.theorem_ids = {"S33"};
    CHECK(run_campaign(cfg)[0].verdict == "holds");

    cfg.theorem_ids = {"T0"};
    CHECK_THROWS_AS(run_campaign(cfg), Error);
}

TEST_CASE("reports are byte-identical across worker counts") {
    auto cfg = small_config();
    cfg.jobs = 1;
    auto one = report_to_json(run_campaign(cfg));
    cfg.jobs = 7;
    auto many = report_to_json(run_campaign(cfg));
    CHECK(one == many);
    CHECK(one == report_to_json(run_campaign(cfg))); // and across repeated runs
}

TEST_CASE("mined counterexamples are the canonical fixtures") {
    CampaignConfig cfg; // default bounds

    auto pna = find_counterexample("proper-not-admissible", cfg);
    CHECK(pna.verdict == "holds");
    CHECK(pna.witness ==
          "fs(X=space(n=1,u=[1]),Y=space(n=2,u=[1,3]),count=2) sigma=space(n=2,u=[3,3])");

    auto cns = find_counterexample("continuous-not-super", cfg);
    CHECK(cns.witness == "top(n=2,open=[0,2,3])->top(n=2,open=[0,2,3]) map=[0,1]");

    auto tnc = find_counterexample("theta-continuous-not-continuous", cfg);
    CHECK(tnc.witness == "top(n=2,open=[0,2,3])->top(n=2,open=[0,2,3]) map=[1,0]");

    auto anp = find_counterexample("admissible-not-proper", cfg);
    CHECK(anp.verdict == "holds");
    CHECK(!anp.witness.empty());

    auto theta = find_counterexample("non-idempotent-theta", cfg);
    CHECK(theta.verdict == "holds");
    CHECK(theta.witness.rfind("top(n=3", 0) == 0); // first witness lives on three points

    // determinism
    CHECK(find_counterexample("proper-not-admissible", cfg).witness == pna.witness);

    CampaignConfig tight;
    tight.max_points = 2;
    CHECK(find_counterexample("non-idempotent-theta", tight).verdict == "vacuous");

    CHECK_THROWS_AS(find_counterexample("no-such-predicate", cfg), Error);
}

TEST_CASE("config parsing") {
    auto cfg = parse_config_text("# comment\n"
                                 "max_points=2\n"
                                 "max_function_carrier=3\n"
                                 "max_seq_len=3\n"
                                 "jobs=4\n"
                                 "oracle=1\n"
                                 "theorems=T1,T4\n");
    CHECK(cfg.max_points == 2);
    CHECK(cfg.max_function_carrier == 3);
    CHECK(cfg.jobs == 4);
    CHECK(cfg.oracle);
    CHECK(cfg.theorem_ids == std::vector<std::string>{"T1", "T4"});

    CHECK_THROWS_AS(parse_config_text("max_points=0\n"), Error);
    CHECK_THROWS_AS(parse_config_text("nonsense\n"), Error);
    CHECK_THROWS_AS(parse_config_text("what=1\n"), Error);
    CHECK_THROWS_AS(parse_config_text("theorems=T99\n"), Error);
}

TEST_CASE("report serialization and exit codes") {
    std::vector<VerdictRecord> records = {{"T1", "class", "holds", ""},
                                          {"T2", "class", "vacuous", ""}};
    CHECK(report_exit_code(records) == 0);
    records.push_back({"T3", "class", "fails", "bad instance"});
    CHECK(report_exit_code(records) == 1);
    auto json = report_to_json(records);
    CHECK(json.find("\"check\": \"T1\"") != std::string::npos);
    CHECK(json.find("\"witness\": \"bad instance\"") != std::string::npos);
    CHECK(json.find("\"witness\": null") != std::string::npos);
}
