#pragma once

// Verification campaigns: exhaustive sweeps per registered check, smallest
// counterexample mining, deterministic structured reports.
//
// Registry: T1..T10 (numbered theorems), C1..C4 (corollaries), R1 (the
// restricted upper-limit criterion), NT1..NT3 (theta-continuity as closure
// continuity, its characterizations, theta products), S31..S33 (topological
// modification, theta-open topology, the continuity-like classification).
//
// Reports are pure values: two runs with the same config produce identical
// bytes regardless of the worker count.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pretop/error.hpp"

namespace pretop {

struct CampaignConfig {
    int max_points = 3;           // base-space carrier bound for sweeps
    int max_function_carrier = 4; // gate for structure enumeration on Y^X
    int max_seq_len = 4;          // preperiod + period bound for sequences
    int jobs = 1;
    bool oracle = false;   // additionally run the heavyweight definitional forms
    bool up_to_iso = false; // canonical-form filter on instance streams
    std::vector<std::string> theorem_ids; // empty = whole registry

    void validate() const;
};

// key=value lines, '#' comments; keys: max_points, max_function_carrier,
// max_seq_len, jobs, oracle, up_to_iso, theorems (comma-separated).
CampaignConfig parse_config_text(const std::string& text);
CampaignConfig load_config_file(const std::string& path);

struct VerdictRecord {
    std::string check;
    std::string instance;
    std::string verdict; // holds | fails | vacuous
    std::string witness; // empty unless verdict == fails (or a mined hit)
};

const std::vector<std::string>& registry_ids();

std::vector<VerdictRecord> run_campaign(const CampaignConfig& cfg);

// Predicates: non-idempotent-theta, proper-not-admissible,
// admissible-not-proper, continuous-not-super,
// theta-continuous-not-continuous.  Returns the first instance in the
// documented search order, or a vacuous record naming the bound reached.
const std::vector<std::string>& counterexample_predicates();
VerdictRecord find_counterexample(const std::string& predicate, const CampaignConfig& cfg);

std::string report_to_json(std::span<const VerdictRecord> records);

// 0: all holds/vacuous, 1: some check failed.
int report_exit_code(std::span<const VerdictRecord> records);

} // namespace pretop
