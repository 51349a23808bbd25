// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
//
//   1  closure axioms, interior duality, principal filters (n=3, exhaustive)
//   2  admissibility = evaluation continuity = neighbourhood comparison
//   3  structure-ordering clauses over all sigma pairs (carriers <= 3)
//   4  finest proper topology = modification of the cc structure, and maximal
//   5  cover topologies admissible over regular domains; set-open topologies
//      proper for every family (compactness witnessed)
//   6  theta suite: fixture value, product commutation, three-route agreement
//   7  continuity-class lattice + the three canonical mined counterexamples
//   8  sequence criteria agreement + upper limits of constant sequences
//   9  byte-identical reports across worker counts

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "pretop/campaign.hpp"
#include "pretop/enumerate.hpp"
#include "pretop/io.hpp"
#include "pretop/oracle.hpp"
#include "pretop/sequences.hpp"

using namespace pretop;

namespace {

int failures = 0;

void run_criterion(int number, const std::string& label, const std::function<std::string()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
        problem = body();
    } catch (const std::exception& e) {
        problem = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty()) {
        std::printf("[PASS] criterion %d: %s (%.2fs)\n", number, label.c_str(), seconds);
    } else {
        std::printf("[FAIL] criterion %d: %s (%.2fs)\n       %s\n", number, label.c_str(), seconds,
                    problem.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

std::string campaign_checks(std::vector<std::string> ids, int jobs = 8) {
    CampaignConfig cfg;
    cfg.jobs = jobs;
    cfg.theorem_ids = std::move(ids);
    for (const auto& rec : run_campaign(cfg))
        if (rec.verdict == "fails") return rec.check + " failed: " + rec.witness;
    return "";
}

template <class Fn>
void every_image_tuple(int nx, int ny, Fn&& fn) {
    std::vector<int> im(static_cast<size_t>(nx), 0);
    for (;;) {
        fn(std::span<const int>(im));
        int k = nx - 1;
        while (k >= 0 && im[static_cast<size_t>(k)] == ny - 1) im[static_cast<size_t>(k--)] = 0;
        if (k < 0) break;
        ++im[static_cast<size_t>(k)];
    }
}

std::string criterion1() {
    long long spaces = 0;
    std::string problem;
    for_each_pretopology(3, [&](const Pretopology& space) {
        if (!problem.empty()) return;
        ++spaces;
        if (!oracle::closure_axioms_hold(space)) problem = "closure axioms fail on " + describe(space);
        else if (!oracle::interior_duality_holds(space)) problem = "interior duality fails on " + describe(space);
        else if (!oracle::neighborhood_filters_principal(space)) problem = "principality fails on " + describe(space);
    });
    if (problem.empty() && spaces != 64) problem = "expected 64 spaces, saw " + std::to_string(spaces);
    return problem;
}

std::string criterion2() {
    // the canonical fixture first
    FunctionSpace fixture = enumerate_functions(Pretopology::discrete(1), sierpinski().base());
    if (fixture.count() != 2) return "fixture carrier should have two functions";
    auto check_fs = [&](const FunctionSpace& fs) -> std::string {
        auto table = cc_neighborhood_table(fs);
        std::int64_t sigmas = pretopology_count(fs.count());
        for (std::int64_t k = 0; k < sigmas; ++k) {
            Pretopology sigma = pretopology_from_index(fs.count(), k);
            bool a = admissible(fs, sigma);
            bool b = oracle::admissible_via_product(fs, sigma);
            bool c = true;
            for (int f = 0; f < fs.count(); ++f)
                if (!subset_of(sigma.minimal_neighborhood(f), table[static_cast<size_t>(f)])) c = false;
            if (a != b || b != c)
                return describe(fs) + " sigma=" + describe(sigma) + ": routes (" + std::to_string(a) +
                       "," + std::to_string(b) + "," + std::to_string(c) + ") disagree";
        }
        return "";
    };
    if (auto p = check_fs(fixture); !p.empty()) return p;
    for (int nx = 1; nx <= 2; ++nx)
        for (int ny = 1; ny <= 2; ++ny)
            for (const auto& x : enumerate_pretopologies(nx))
                for (const auto& y : enumerate_pretopologies(ny))
                    if (auto p = check_fs(enumerate_functions(x, y)); !p.empty()) return p;
    return "";
}

std::string criterion6() {
    if (!(theta_structure(sierpinski()) == Pretopology::indiscrete(2)))
        return "theta of the Sierpinski space is not indiscrete";
    for (const auto& a : enumerate_topologies(2))
        for (const auto& b : enumerate_topologies(2))
            if (!(theta_structure(product_topology(a, b)) ==
                  product(theta_structure(a), theta_structure(b))))
                return "theta does not commute with " + describe(a) + " x " + describe(b);
    std::vector<Topology> tops;
    for (int n = 1; n <= 3; ++n)
        for (const auto& t : enumerate_topologies(n)) tops.push_back(t);
    for (const auto& x : tops)
        for (const auto& y : tops) {
            std::string problem;
            every_image_tuple(x.size(), y.size(), [&](std::span<const int> im) {
                if (!problem.empty()) return;
                bool route1 = theta_continuous(x, y, im);
                bool route2 = oracle::theta_continuous_direct(x, y, im);
                bool route3 = oracle::theta_continuous_closure_form(x, y, im);
                if (route1 != route2 || route2 != route3)
                    problem = describe(x) + "->" + describe(y) + " map=" + describe_images(im) +
                              ": theta routes disagree";
            });
            if (!problem.empty()) return problem;
        }
    return "";
}

std::string criterion7() {
    std::vector<Topology> tops;
    for (int n = 1; n <= 3; ++n)
        for (const auto& t : enumerate_topologies(n)) tops.push_back(t);
    for (const auto& x : tops)
        for (const auto& y : tops) {
            std::string problem;
            every_image_tuple(x.size(), y.size(), [&](std::span<const int> im) {
                if (!problem.empty()) return;
                if (!classify(x, y, im).implications_hold())
                    problem = describe(x) + "->" + describe(y) + " map=" + describe_images(im) +
                              ": implication lattice violated";
            });
            if (!problem.empty()) return problem;
        }

    CampaignConfig cfg;
    struct Expected {
        const char* predicate;
        const char* witness;
    } expected[] = {
        {"theta-continuous-not-continuous", "top(n=2,open=[0,2,3])->top(n=2,open=[0,2,3]) map=[1,0]"},
        {"continuous-not-super", "top(n=2,open=[0,2,3])->top(n=2,open=[0,2,3]) map=[0,1]"},
        {"proper-not-admissible",
         "fs(X=space(n=1,u=[1]),Y=space(n=2,u=[1,3]),count=2) sigma=space(n=2,u=[3,3])"},
    };
    for (const auto& e : expected) {
        auto rec = find_counterexample(e.predicate, cfg);
        if (rec.verdict != "holds") return std::string(e.predicate) + ": no witness found";
        if (rec.witness != e.witness)
            return std::string(e.predicate) + ": expected " + e.witness + ", mined " + rec.witness;
    }
    return "";
}

std::string criterion8() {
    for (int nx = 1; nx <= 2; ++nx)
        for (int ny = 1; ny <= 2; ++ny)
            for (const auto& x : enumerate_pretopologies(nx))
                for (const auto& y : enumerate_pretopologies(ny)) {
                    FunctionSpace fs = enumerate_functions(x, y);
                    if (fs.count() > 3) continue;
                    bool y_topological = fs.codomain.is_topological();
                    for (const auto& seq : enumerate_sequences(fs.count(), 4))
                        for (int f = 0; f < fs.count(); ++f) {
                            bool primary = converges_continuously(fs, seq, f);
                            if (oracle::cc_tail_quantifier_form(fs, seq, f) != primary ||
                                oracle::cc_upper_limit_all_sets(fs, seq, f) != primary ||
                                oracle::cc_upper_limit_basic_complements(fs, seq, f) != primary ||
                                (y_topological &&
                                 oracle::cc_upper_limit_closed_sets(fs, seq, f) != primary))
                                return describe(fs) + " " + describe(seq) + " f=" +
                                       std::to_string(f) + ": sequence criteria disagree";
                        }
                }
    for (int n = 1; n <= 3; ++n) {
        std::string problem;
        for_each_pretopology(n, [&](const Pretopology& space) {
            if (!problem.empty()) return;
            for (Mask a = 0; a <= space.points(); ++a)
                if (upper_limit(space, SubsetSequence({}, {a})) != space.closure(a))
                    problem = describe(space) + ": constant upper limit differs from the closure";
        });
        if (!problem.empty()) return problem;
    }
    return "";
}

std::string criterion9() {
    CampaignConfig cfg;
    cfg.jobs = 1;
    std::string serial = report_to_json(run_campaign(cfg));
    cfg.jobs = 8;
    std::string parallel = report_to_json(run_campaign(cfg));
    if (serial != parallel) return "reports differ between --jobs 1 and --jobs 8";
    return "";
}

} // namespace

int main() {
    run_criterion(1, "closure axioms, duality, principal filters (64 spaces on 3 points)", criterion1);
    run_criterion(2, "admissibility = evaluation continuity = neighbourhood comparison", criterion2);
    run_criterion(3, "ordering clauses over all structure pairs on carriers <= 3",
                  [] { return campaign_checks({"T4"}); });
    run_criterion(4, "finest proper topology: identity and maximality (carriers <= 4)",
                  [] { return campaign_checks({"T8"}); });
    run_criterion(5, "cover topologies admissible, set-open topologies proper (all X,Y <= 3)",
                  [] { return campaign_checks({"T9", "T10"}); });
    run_criterion(6, "theta suite: fixture, products, three-route continuity agreement", criterion6);
    run_criterion(7, "continuity-class lattice and canonical mined counterexamples", criterion7);
    run_criterion(8, "sequence criteria agreement and constant upper limits", criterion8);
    run_criterion(9, "byte-identical campaign reports across worker counts", criterion9);

    if (failures == 0) std::printf("acceptance: all 9 criteria hold\n");
    else std::printf("acceptance: %d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
