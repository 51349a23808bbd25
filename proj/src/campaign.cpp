#include "pretop/campaign.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "pretop/enumerate.hpp"
#include "pretop/oracle.hpp"
#include "pretop/sequences.hpp"

namespace pretop {

void CampaignConfig::validate() const {
    if (max_points < 1 || max_function_carrier < 1 || max_seq_len < 1 || jobs < 1)
        fail(Errc::bound_exceeded, "campaign bounds must be positive");
    for (const auto& id : theorem_ids)
        if (std::find(registry_ids().begin(), registry_ids().end(), id) == registry_ids().end())
            fail(Errc::unknown_theorem_id, id);
}

CampaignConfig parse_config_text(const std::string& text) {
    CampaignConfig cfg;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        auto end = line.find_last_not_of(" \t\r");
        line = line.substr(begin, end - begin + 1);
        auto eq = line.find('=');
        if (eq == std::string::npos) fail(Errc::parse_error, "expected key=value: " + line);
        std::string key = line.substr(0, eq), value = line.substr(eq + 1);
        auto as_int = [&] {
            try {
                return std::stoi(value);
            } catch (const std::exception&) {
                fail(Errc::parse_error, "bad integer for " + key);
            }
        };
        if (key == "max_points") cfg.max_points = as_int();
        else if (key == "max_function_carrier") cfg.max_function_carrier = as_int();
        else if (key == "max_seq_len") cfg.max_seq_len = as_int();
        else if (key == "jobs") cfg.jobs = as_int();
        else if (key == "oracle") cfg.oracle = as_int() != 0;
        else if (key == "up_to_iso") cfg.up_to_iso = as_int() != 0;
        else if (key == "theorems") {
            std::istringstream vs(value);
            std::string id;
            while (std::getline(vs, id, ',')) if (!id.empty()) cfg.theorem_ids.push_back(id);
        } else {
            fail(Errc::parse_error, "unknown config key: " + key);
        }
    }
    cfg.validate();
    return cfg;
}

CampaignConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::parse_error, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

const std::vector<std::string>& registry_ids() {
    static const std::vector<std::string> ids = {
        "T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9", "T10",
        "C1", "C2", "C3", "C4", "R1",
        "NT1", "NT2", "NT3",
        "S31", "S32", "S33",
    };
    return ids;
}

const std::vector<std::string>& counterexample_predicates() {
    static const std::vector<std::string> ids = {
        "non-idempotent-theta",
        "proper-not-admissible",
        "admissible-not-proper",
        "continuous-not-super",
        "theta-continuous-not-continuous",
    };
    return ids;
}

namespace {

// --- deterministic parallel sweep -------------------------------------------

struct SweepResult {
    std::int64_t instances = 0;
    bool ok = true;
    std::string witness; // first failing instance in index order
};

SweepResult sweep(std::int64_t count, int jobs,
                  const std::function<std::optional<std::string>(std::int64_t)>& item) {
    SweepResult result;
    result.instances = count;
    if (count == 0) return result;
    jobs = static_cast<int>(std::min<std::int64_t>(jobs, count));
    if (jobs <= 1) {
        for (std::int64_t i = 0; i < count; ++i)
            if (auto w = item(i)) {
                result.ok = false;
                result.witness = *w;
                return result;
            }
        return result;
    }
    std::vector<std::int64_t> fail_at(static_cast<size_t>(jobs), -1);
    std::vector<std::string> fail_wit(static_cast<size_t>(jobs));
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            std::int64_t lo = count * w / jobs, hi = count * (w + 1) / jobs;
            for (std::int64_t i = lo; i < hi; ++i)
                if (auto wit = item(i)) {
                    fail_at[static_cast<size_t>(w)] = i;
                    fail_wit[static_cast<size_t>(w)] = *wit;
                    return;
                }
        });
    }
    for (auto& t : workers) t.join();
    std::int64_t best = -1;
    for (int w = 0; w < jobs; ++w)
        if (fail_at[static_cast<size_t>(w)] >= 0 &&
            (best < 0 || fail_at[static_cast<size_t>(w)] < best)) {
            best = fail_at[static_cast<size_t>(w)];
            result.witness = fail_wit[static_cast<size_t>(w)];
            result.ok = false;
        }
    return result;
}

VerdictRecord record_for(const std::string& id, const std::string& instance, const SweepResult& r) {
    VerdictRecord rec;
    rec.check = id;
    rec.instance = instance;
    if (r.instances == 0) rec.verdict = "vacuous";
    else rec.verdict = r.ok ? "holds" : "fails";
    rec.witness = r.witness;
    return rec;
}

// --- instance streams --------------------------------------------------------

std::vector<Pretopology> spaces_up_to(int max_n, bool up_to_iso) {
    std::vector<Pretopology> out;
    for (int n = 1; n <= max_n; ++n) {
        auto batch = enumerate_pretopologies(n, up_to_iso);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

std::vector<Topology> topologies_up_to(int max_n, bool up_to_iso) {
    std::vector<Topology> out;
    for (int n = 1; n <= max_n; ++n) {
        auto batch = enumerate_topologies(n, up_to_iso);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

std::vector<FunctionSpace> function_space_sweep(int max_xy, int max_carrier, bool up_to_iso) {
    std::vector<FunctionSpace> out;
    auto xs = spaces_up_to(max_xy, up_to_iso);
    auto ys = spaces_up_to(max_xy, up_to_iso);
    for (const auto& x : xs)
        for (const auto& y : ys) {
            FunctionSpace fs = enumerate_functions(x, y);
            if (fs.count() >= 1 && fs.count() <= max_carrier) out.push_back(std::move(fs));
        }
    return out;
}

// All families of subsets of an n-point carrier (members may repeat the
// whole range of P(X)); returned as member lists.
std::vector<std::vector<Mask>> all_subset_families(int n, bool nonempty_members_only) {
    int subsets = 1 << n;
    std::vector<std::vector<Mask>> out;
    int first = nonempty_members_only ? 1 : 0;
    std::uint64_t family_count = std::uint64_t{1} << (subsets - first);
    for (std::uint64_t code = 0; code < family_count; ++code) {
        std::vector<Mask> fam;
        for (int s = first; s < subsets; ++s)
            if (code >> (s - first) & 1) fam.push_back(static_cast<Mask>(s));
        out.push_back(std::move(fam));
    }
    return out;
}

std::string fs_label(const FunctionSpace& fs) { return describe(fs); }

// proper/admissible against a precomputed C(.) table
bool proper_via_table(const Pretopology& sigma, std::span<const Mask> table) {
    for (int f = 0; f < sigma.size(); ++f)
        if (!subset_of(table[static_cast<size_t>(f)], sigma.minimal_neighborhood(f))) return false;
    return true;
}

bool admissible_via_table(const Pretopology& sigma, std::span<const Mask> table) {
    for (int f = 0; f < sigma.size(); ++f)
        if (!subset_of(sigma.minimal_neighborhood(f), table[static_cast<size_t>(f)])) return false;
    return true;
}

// --- checks ------------------------------------------------------------------

using Check = std::function<VerdictRecord(const CampaignConfig&)>;

VerdictRecord check_t1(const CampaignConfig& cfg) {
    auto sweep_fs = function_space_sweep(std::min(cfg.max_points, 3),
                                         std::min(cfg.max_function_carrier, 4), cfg.up_to_iso);
    std::int64_t sigma_checks = 0;
    for (const auto& fs : sweep_fs) sigma_checks += pretopology_count(fs.count());
    auto r = sweep(static_cast<std::int64_t>(sweep_fs.size()), cfg.jobs, [&](std::int64_t i) -> std::optional<std::string> {
        const auto& fs = sweep_fs[static_cast<size_t>(i)];
        auto table = cc_neighborhood_table(fs);
        std::int64_t sigmas = pretopology_count(fs.count());
        for (std::int64_t k = 0; k < sigmas; ++k) {
            Pretopology sigma = pretopology_from_index(fs.count(), k);
            bool a = admissible(fs, sigma);                    // pointwise evaluation continuity
            bool b = admissible_via_table(sigma, table);       // V_sigma within C
            bool c = oracle::admissible_via_product(fs, sigma); // materialized product
            if (a != b || b != c)
                return fs_label(fs) + " sigma=" + describe(sigma) + " admissible routes disagree (" +
                       std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
            if (cfg.oracle && fs.count() <= 2) {
                bool d = oracle::admissible_definitional(fs, sigma, 3);
                if (d != a)
                    return fs_label(fs) + " sigma=" + describe(sigma) + " definitional route disagrees";
            }
        }
        return std::nullopt;
    });
    std::ostringstream inst;
    inst << "all fs with |X|,|Y|<=" << std::min(cfg.max_points, 3) << ", |Y^X|<="
         << std::min(cfg.max_function_carrier, 4) << " (" << sweep_fs.size() << " fs, "
         << sigma_checks << " structures)";
    return record_for("T1", inst.str(), r);
}

// shared sweep for the sequence criteria agreements
VerdictRecord sequence_routes_check(const char* id, const CampaignConfig& cfg,
                                    const std::function<std::optional<std::string>(
                                        const FunctionSpace&, const PointSequence&, int, bool)>& probe,
                                    bool topological_y_only) {
    auto sweep_fs = function_space_sweep(2, 3, cfg.up_to_iso);
    std::int64_t seq_checks = 0;
    auto r = sweep(static_cast<std::int64_t>(sweep_fs.size()), cfg.jobs, [&](std::int64_t i) -> std::optional<std::string> {
        const auto& fs = sweep_fs[static_cast<size_t>(i)];
        if (topological_y_only && !fs.codomain.is_topological()) return std::nullopt;
        auto seqs = enumerate_sequences(fs.count(), cfg.max_seq_len);
        for (const auto& seq : seqs)
            for (int f = 0; f < fs.count(); ++f) {
                bool primary = converges_continuously(fs, seq, f);
                if (auto w = probe(fs, seq, f, primary)) return *w;
            }
        return std::nullopt;
    });
    for (const auto& fs : sweep_fs) {
        if (topological_y_only && !fs.codomain.is_topological()) continue;
        seq_checks += static_cast<std::int64_t>(enumerate_sequences(fs.count(), cfg.max_seq_len).size()) * fs.count();
    }
    std::ostringstream inst;
    inst << "fs |X|,|Y|<=2, |Y^X|<=3" << (topological_y_only ? ", topological Y" : "")
         << ", sequences len<=" << cfg.max_seq_len << " (" << seq_checks << " pairs)";
    return record_for(id, inst.str(), r);
}

VerdictRecord check_t2(const CampaignConfig& cfg) {
    return sequence_routes_check("T2", cfg,
        [](const FunctionSpace& fs, const PointSequence& seq, int f, bool primary)
            -> std::optional<std::string> {
            if (oracle::cc_tail_quantifier_form(fs, seq, f) != primary)
                return fs_label(fs) + " " + describe(seq) + " f=" + std::to_string(f) +
                       " tail-quantifier route disagrees";
            return std::nullopt;
        },
        false);
}

VerdictRecord check_t3(const CampaignConfig& cfg) {
    return sequence_routes_check("T3", cfg,
        [](const FunctionSpace& fs, const PointSequence& seq, int f, bool primary)
            -> std::optional<std::string> {
            if (oracle::cc_upper_limit_all_sets(fs, seq, f) != primary)
                return fs_label(fs) + " " + describe(seq) + " f=" + std::to_string(f) +
                       " upper-limit route disagrees";
            return std::nullopt;
        },
        false);
}

VerdictRecord check_r1(const CampaignConfig& cfg) {
    return sequence_routes_check("R1", cfg,
        [](const FunctionSpace& fs, const PointSequence& seq, int f, bool primary)
            -> std::optional<std::string> {
            if (oracle::cc_upper_limit_basic_complements(fs, seq, f) != primary)
                return fs_label(fs) + " " + describe(seq) + " f=" + std::to_string(f) +
                       " restricted upper-limit route disagrees";
            return std::nullopt;
        },
        false);
}

VerdictRecord check_c1(const CampaignConfig& cfg) {
    return sequence_routes_check("C1", cfg,
        [](const FunctionSpace& fs, const PointSequence& seq, int f, bool primary)
            -> std::optional<std::string> {
            if (oracle::cc_upper_limit_closed_sets(fs, seq, f) != primary)
                return fs_label(fs) + " " + describe(seq) + " f=" + std::to_string(f) +
                       " closed-set route disagrees";
            return std::nullopt;
        },
        true);
}

VerdictRecord check_t4(const CampaignConfig& cfg) {
    auto sweep_fs = function_space_sweep(std::min(cfg.max_points, 3), 3, cfg.up_to_iso);
    std::int64_t pair_checks = 0;
    for (const auto& fs : sweep_fs) {
        std::int64_t s = pretopology_count(fs.count());
        pair_checks += s * s;
    }
    auto r = sweep(static_cast<std::int64_t>(sweep_fs.size()), cfg.jobs, [&](std::int64_t i) -> std::optional<std::string> {
        const auto& fs = sweep_fs[static_cast<size_t>(i)];
        auto table = cc_neighborhood_table(fs);
        Pretopology star = cc_structure(fs);
        std::int64_t sigmas = pretopology_count(fs.count());
        std::vector<Pretopology> all;
        std::vector<char> is_proper_flag, is_adm_flag;
        for (std::int64_t k = 0; k < sigmas; ++k) {
            all.push_back(pretopology_from_index(fs.count(), k));
            is_proper_flag.push_back(proper_via_table(all.back(), table));
            is_adm_flag.push_back(admissible_via_table(all.back(), table));
        }
        int both = 0;
        for (size_t a = 0; a < all.size(); ++a) {
            if (is_proper_flag[a] && is_adm_flag[a]) {
                ++both;
                if (!(all[a] == star))
                    return fs_label(fs) + ": structure both proper and admissible differs from sigma*";
            }
            for (size_t b = 0; b < all.size(); ++b) {
                SpaceOrder ord = compare(all[a], all[b]);
                bool le = ord == SpaceOrder::coarser || ord == SpaceOrder::equal;
                if (is_proper_flag[b] && le && !is_proper_flag[a])
                    return fs_label(fs) + ": clause 1 fails for pair " + std::to_string(a) + "," + std::to_string(b);
                if (is_adm_flag[a] && le && !is_adm_flag[b])
                    return fs_label(fs) + ": clause 2 fails for pair " + std::to_string(a) + "," + std::to_string(b);
                if (is_proper_flag[a] && is_adm_flag[b] && !le)
                    return fs_label(fs) + ": clause 3 fails for pair " + std::to_string(a) + "," + std::to_string(b);
            }
        }
        if (both != 1)
            return fs_label(fs) + ": expected sigma* to be the unique proper+admissible structure, found " +
                   std::to_string(both);
        return std::nullopt;
    });
    std::ostringstream inst;
    inst << "ordering clauses over all sigma pairs, fs |X|,|Y|<=" << std::min(cfg.max_points, 3)
         << ", |Y^X|<=3 (" << sweep_fs.size() << " fs, " << pair_checks << " pairs)";
    return record_for("T4", inst.str(), r);
}

VerdictRecord check_t5(const CampaignConfig& cfg) {
    auto sweep_fs = function_space_sweep(2, 3, cfg.up_to_iso);
    auto r = sweep(static_cast<std::int64_t>(sweep_fs.size()), cfg.jobs, [&](std::int64_t i) -> std::optional<std::string> {
        const auto& fs = sweep_fs[static_cast<size_t>(i)];
        auto seqs = enumerate_sequences(fs.count(), cfg.max_seq_len);
        std::int64_t sigmas = pretopology_count(fs.count());
        for (std::int64_t k = 0; k < sigmas; ++k) {
            Pretopology sigma = pretopology_from_index(fs.count(), k);
            bool cc_implies_sigma = true, sigma_implies_cc = true;
            for (const auto& seq : seqs)
                for (int f = 0; f < fs.count(); ++f) {
                    bool cc = converges_continuously(fs, seq, f);
                    bool sc = converges(sigma, seq, f);
                    if (cc && !sc) cc_implies_sigma = false;
                    if (sc && !cc) sigma_implies_cc = false;
                }
            if (proper(fs, sigma) != cc_implies_sigma)
                return fs_label(fs) + " sigma=" + describe(sigma) + ": properness vs cc-convergence mismatch";
            if (admissible(fs, sigma) != sigma_implies_cc)
                return fs_label(fs) + " sigma=" + describe(sigma) + ": admissibility vs cc-convergence mismatch";
        }
        return std::nullopt;
    });
    std::ostringstream inst;
    inst << "convergence transfer for every sigma, fs |X|,|Y|<=2, |Y^X|<=3, sequences len<="
         << cfg.max_seq_len << " (" << sweep_fs.size() << " fs)";
    return record_for("T5", inst.str(), r);
}

VerdictRecord check_t6(const CampaignConfig& cfg) {
    auto sweep_fs = function_space_sweep(2, std::min(cfg.max_function_carrier, 4), cfg.up_to_iso);
    std::int64_t checks = 0;
    auto r = sweep(static_cast<std::int64_t>(sweep_fs.size()), cfg.jobs, [&](std::int64_t i) -> std::optional<std::string> {
        const auto& fs = sweep_fs[static_cast<size_t>(i)];
        for (const auto& sigma_top : enumerate_topologies(fs.count())) {
            const Pretopology& sigma = sigma_top.base();
            bool direct = proper(fs, sigma);
            if (oracle::proper_sierpinski_reduction(fs, sigma) != direct)
                return fs_label(fs) + " sigma=" + describe(sigma) + ": Sierpinski reduction disagrees";
            if (cfg.oracle && fs.count() <= 2 && oracle::proper_definitional(fs, sigma, 3) != direct)
                return fs_label(fs) + " sigma=" + describe(sigma) + ": definitional route disagrees";
        }
        return std::nullopt;
    });
    for (const auto& fs : sweep_fs) checks += static_cast<std::int64_t>(enumerate_topologies(fs.count()).size());
    std::ostringstream inst;
    inst << "topological sigma vs two-point test space, fs |X|,|Y|<=2 (" << checks << " structures)";
    return record_for("T6", inst.str(), r);
}

VerdictRecord check_t7(const CampaignConfig& cfg) {
    auto sweep_fs = function_space_sweep(2, 3, cfg.up_to_iso);
    auto r = sweep(static_cast<std::int64_t>(sweep_fs.size()), cfg.jobs, [&](std::int64_t i) -> std::optional<std::string> {
        const auto& fs = sweep_fs[static_cast<size_t>(i)];
        auto rep = check_convergence_class_axioms(fs, cfg.max_seq_len);
        if (!rep.all_hold()) return fs_label(fs) + ": " + rep.failure;
        return std::nullopt;
    });
    std::ostringstream inst;
    inst << "convergence-class axioms for continuous convergence, fs |X|,|Y|<=2, sequences len<="
         << cfg.max_seq_len << " (" << sweep_fs.size() << " fs)";
    return record_for("T7", inst.str(), r);
}

VerdictRecord check_t8(const CampaignConfig& cfg) {
    auto sweep_fs = function_space_sweep(std::min(cfg.max_points, 3),
                                         std::min(cfg.max_function_carrier, 4), cfg.up_to_iso);
    auto r = sweep(static_cast<std::int64_t>(sweep_fs.size()), cfg.jobs, [&](std::int64_t i) -> std::optional<std::string> {
        const auto& fs = sweep_fs[static_cast<size_t>(i)];
        auto table = cc_neighborhood_table(fs);
        Topology finest = finest_proper_topology(fs);
        Topology via_modification = topological_modification(cc_structure(fs));
        if (!(finest == via_modification))
            return fs_label(fs) + ": absorbing-set route differs from modification of sigma*";
        if (!proper_via_table(finest.base(), table))
            return fs_label(fs) + ": finest proper topology is not proper";
        for (const auto& cand : enumerate_topologies(fs.count())) {
            if (!proper_via_table(cand.base(), table)) continue;
            SpaceOrder ord = compare(cand.base(), finest.base());
            if (ord != SpaceOrder::coarser && ord != SpaceOrder::equal)
                return fs_label(fs) + ": proper topology " + describe(cand.base()) + " not below the finest";
        }
        return std::nullopt;
    });
    std::ostringstream inst;
    inst << "finest proper topology vs every enumerated topology, fs |X|,|Y|<="
         << std::min(cfg.max_points, 3) << ", |Y^X|<=" << std::min(cfg.max_function_carrier, 4)
         << " (" << sweep_fs.size() << " fs)";
    return record_for("T8", inst.str(), r);
}

VerdictRecord check_t9(const CampaignConfig& cfg) {
    int mp = std::min(cfg.max_points, 3);
    auto xs = spaces_up_to(mp, cfg.up_to_iso);
    auto ys = spaces_up_to(mp, cfg.up_to_iso);
    std::vector<const Pretopology*> regular_xs;
    for (const auto& x : xs)
        if (is_regular(x)) regular_xs.push_back(&x);
    std::int64_t triples = 0;
    auto r = sweep(static_cast<std::int64_t>(regular_xs.size()), cfg.jobs, [&](std::int64_t i) -> std::optional<std::string> {
        const Pretopology& x = *regular_xs[static_cast<size_t>(i)];
        auto families = all_subset_families(x.size(), false);
        for (const auto& y : ys) {
            FunctionSpace fs = enumerate_functions(x, y);
            if (fs.count() == 0) continue;
            for (const auto& fam : families) {
                if (!is_interior_cover(x, fam, x.points())) continue;
                Pretopology sigma = c_topology_structure(fs, fam);
                if (!admissible(fs, sigma))
                    return fs_label(fs) + " cover=" + mask_list_to_string(fam) +
                           ": cover topology not admissible over a regular domain";
            }
        }
        return std::nullopt;
    });
    for (const Pretopology* x : regular_xs) {
        std::int64_t covers = 0;
        for (const auto& fam : all_subset_families(x->size(), false))
            if (is_interior_cover(*x, fam, x->points())) ++covers;
        triples += covers * static_cast<std::int64_t>(ys.size());
    }
    std::ostringstream inst;
    inst << "every interior cover of every regular X, all Y, |X|,|Y|<=" << mp << " ("
         << regular_xs.size() << " regular spaces, " << triples << " cover topologies)";
    return record_for("T9", inst.str(), r);
}

VerdictRecord check_t10(const CampaignConfig& cfg) {
    int mp = std::min(cfg.max_points, 3);
    auto xs = spaces_up_to(mp, cfg.up_to_iso);
    auto ys = spaces_up_to(mp, cfg.up_to_iso);
    std::int64_t structures = 0;
    auto r = sweep(static_cast<std::int64_t>(xs.size()), cfg.jobs, [&](std::int64_t i) -> std::optional<std::string> {
        const Pretopology& x = xs[static_cast<size_t>(i)];
        // compactness of every subset, witnessed constructively over every
        // interior cover of it
        Mask full = x.points();
        auto families = all_subset_families(x.size(), false);
        for (Mask a = 0;; ++a) {
            for (const auto& fam : families) {
                if (!is_interior_cover(x, fam, a)) continue;
                auto wit = compact_subcover(x, fam, a);
                if (!wit.compact)
                    return describe(x) + " subset " + mask_to_string(a) + " missing a finite subcover";
            }
            if (a == full) break;
        }
        auto nonempty_families = all_subset_families(x.size(), true);
        for (const auto& y : ys) {
            FunctionSpace fs = enumerate_functions(x, y);
            if (fs.count() == 0) continue;
            auto table = cc_neighborhood_table(fs);
            for (const auto& fam : nonempty_families) {
                Pretopology sigma = a_topology_structure(fs, fam);
                if (!proper_via_table(sigma, table))
                    return fs_label(fs) + " family=" + mask_list_to_string(fam) +
                           ": set-open topology not proper";
            }
        }
        return std::nullopt;
    });
    for (const auto& x : xs)
        structures += static_cast<std::int64_t>(all_subset_families(x.size(), true).size()) *
                      static_cast<std::int64_t>(ys.size());
    std::ostringstream inst;
    inst << "every family of subsets (all compact, verified), all X,Y with |X|,|Y|<=" << mp << " ("
         << structures << " set-open topologies)";
    return record_for("T10", inst.str(), r);
}

VerdictRecord check_c2(const CampaignConfig& cfg) {
    auto sweep_fs = function_space_sweep(2, 3, cfg.up_to_iso);
    std::int64_t pairs = 0;
    for (const auto& fs : sweep_fs) {
        std::int64_t s = pretopology_count(fs.count());
        pairs += s * s;
    }
    auto r = sweep(static_cast<std::int64_t>(sweep_fs.size()), cfg.jobs, [&](std::int64_t i) -> std::optional<std::string> {
        const auto& fs = sweep_fs[static_cast<size_t>(i)];
        auto table = cc_neighborhood_table(fs);
        std::int64_t sigmas = pretopology_count(fs.count());
        std::vector<Pretopology> all;
        for (std::int64_t k = 0; k < sigmas; ++k) all.push_back(pretopology_from_index(fs.count(), k));
        for (size_t a = 0; a < all.size(); ++a)
            for (size_t b = 0; b < all.size(); ++b) {
                const Pretopology fam[] = {all[a], all[b]};
                bool both_proper = proper_via_table(all[a], table) && proper_via_table(all[b], table);
                bool both_adm = admissible_via_table(all[a], table) && admissible_via_table(all[b], table);
                if (both_proper) {
                    if (!proper_via_table(meet(fam), table))
                        return fs_label(fs) + ": meet of proper structures not proper";
                    if (!proper_via_table(join(fam), table))
                        return fs_label(fs) + ": join of proper structures not proper";
                }
                if (both_adm && !admissible_via_table(join(fam), table))
                    return fs_label(fs) + ": join of admissible structures not admissible";
            }
        return std::nullopt;
    });
    std::ostringstream inst;
    inst << "meet/join closure over all sigma pairs, fs |X|,|Y|<=2, |Y^X|<=3 (" << pairs << " pairs)";
    return record_for("C2", inst.str(), r);
}

VerdictRecord check_c3(const CampaignConfig& cfg) {
    auto sweep_fs = function_space_sweep(2, 3, cfg.up_to_iso);
    auto r = sweep(static_cast<std::int64_t>(sweep_fs.size()), cfg.jobs, [&](std::int64_t i) -> std::optional<std::string> {
        const auto& fs = sweep_fs[static_cast<size_t>(i)];
        for (const auto& sigma_top : enumerate_topologies(fs.count())) {
            const Pretopology& sigma = sigma_top.base();
            if (oracle::proper_one_nonisolated_reduction(fs, sigma, 3) != proper(fs, sigma))
                return fs_label(fs) + " sigma=" + describe(sigma) +
                       ": one-non-isolated-point reduction disagrees";
        }
        return std::nullopt;
    });
    std::ostringstream inst;
    inst << "properness vs test spaces with at most one non-isolated point (|Z|<=3), fs |X|,|Y|<=2, |Y^X|<=3 ("
         << sweep_fs.size() << " fs)";
    return record_for("C3", inst.str(), r);
}

VerdictRecord check_c4(const CampaignConfig& cfg) {
    // Finite surrogate: the continuous-convergence class is realized by a
    // topology, namely the modification of sigma*, which the T8 identity
    // pins; its class axioms are T7.  Both are re-run here at small scale.
    auto sweep_fs = function_space_sweep(2, std::min(cfg.max_function_carrier, 4), cfg.up_to_iso);
    auto r = sweep(static_cast<std::int64_t>(sweep_fs.size()), cfg.jobs, [&](std::int64_t i) -> std::optional<std::string> {
        const auto& fs = sweep_fs[static_cast<size_t>(i)];
        if (!(finest_proper_topology(fs) == topological_modification(cc_structure(fs))))
            return fs_label(fs) + ": topologization identity fails";
        if (fs.count() <= 3) {
            auto rep = check_convergence_class_axioms(fs, cfg.max_seq_len);
            if (!rep.all_hold()) return fs_label(fs) + ": " + rep.failure;
        }
        return std::nullopt;
    });
    std::ostringstream inst;
    inst << "topologization surrogate for the convergence class, fs |X|,|Y|<=2 (" << sweep_fs.size()
         << " fs)";
    return record_for("C4", inst.str(), r);
}

std::vector<std::pair<const Topology*, const Topology*>> topology_pairs(const std::vector<Topology>& tops) {
    std::vector<std::pair<const Topology*, const Topology*>> pairs;
    for (const auto& a : tops)
        for (const auto& b : tops) pairs.emplace_back(&a, &b);
    return pairs;
}

template <class Fn>
std::optional<std::string> every_map(const Topology& x, const Topology& y, Fn&& probe) {
    std::vector<int> im(static_cast<size_t>(x.size()), 0);
    for (;;) {
        if (auto w = probe(std::span<const int>(im))) return w;
        int k = x.size() - 1;
        while (k >= 0 && im[static_cast<size_t>(k)] == y.size() - 1) {
            im[static_cast<size_t>(k)] = 0;
            --k;
        }
        if (k < 0) return std::nullopt;
        ++im[static_cast<size_t>(k)];
    }
}

VerdictRecord check_nt1(const CampaignConfig& cfg) {
    auto tops = topologies_up_to(std::min(cfg.max_points, 3), cfg.up_to_iso);
    auto pairs = topology_pairs(tops);
    std::int64_t maps = 0;
    for (const auto& [x, y] : pairs) {
        std::int64_t m = 1;
        for (int i = 0; i < x->size(); ++i) m *= y->size();
        maps += m;
    }
    auto r = sweep(static_cast<std::int64_t>(pairs.size()), cfg.jobs, [&](std::int64_t i) -> std::optional<std::string> {
        const auto& [x, y] = pairs[static_cast<size_t>(i)];
        return every_map(*x, *y, [&](std::span<const int> im) -> std::optional<std::string> {
            if (theta_continuous(*x, *y, im) != oracle::theta_continuous_direct(*x, *y, im))
                return describe(*x) + "->" + describe(*y) + " map=" + describe_images(im) +
                       ": direct theta-continuity disagrees with the closure-space route";
            return std::nullopt;
        });
    });
    std::ostringstream inst;
    inst << "theta-continuity as closure-space continuity, topologies |X|,|Y|<="
         << std::min(cfg.max_points, 3) << " (" << maps << " maps)";
    return record_for("NT1", inst.str(), r);
}

VerdictRecord check_nt2(const CampaignConfig& cfg) {
    auto tops = topologies_up_to(std::min(cfg.max_points, 3), cfg.up_to_iso);
    auto pairs = topology_pairs(tops);
    auto r = sweep(static_cast<std::int64_t>(pairs.size()), cfg.jobs, [&](std::int64_t i) -> std::optional<std::string> {
        const auto& [x, y] = pairs[static_cast<size_t>(i)];
        return every_map(*x, *y, [&](std::span<const int> im) -> std::optional<std::string> {
            bool primary = theta_continuous(*x, *y, im);
            if (oracle::theta_continuous_closure_form(*x, *y, im) != primary ||
                oracle::theta_continuous_preimage_form(*x, *y, im) != primary)
                return describe(*x) + "->" + describe(*y) + " map=" + describe_images(im) +
                       ": theta characterization disagrees";
            return std::nullopt;
        });
    });
    std::ostringstream inst;
    inst << "theta-continuity characterizations, topologies |X|,|Y|<=" << std::min(cfg.max_points, 3);
    return record_for("NT2", inst.str(), r);
}

VerdictRecord check_nt3(const CampaignConfig& cfg) {
    auto tops = topologies_up_to(2, cfg.up_to_iso);
    std::vector<std::tuple<const Topology*, const Topology*, const Topology*>> triples;
    for (const auto& z : tops)
        for (const auto& x : tops)
            for (const auto& y : tops) triples.emplace_back(&z, &x, &y);
    auto r = sweep(static_cast<std::int64_t>(triples.size()), cfg.jobs, [&](std::int64_t i) -> std::optional<std::string> {
        const auto& [z, x, y] = triples[static_cast<size_t>(i)];
        Topology prod = product_topology(*z, *x);
        Pretopology theta_prod_factors = product(theta_structure(*z), theta_structure(*x));
        Pretopology theta_y = theta_structure(*y);
        return every_map(prod, *y, [&](std::span<const int> im) -> std::optional<std::string> {
            bool as_theta = theta_continuous(prod, *y, im);
            bool via_factors = continuous(theta_prod_factors, theta_y, im);
            if (as_theta != via_factors)
                return describe(z->base()) + "x" + describe(x->base()) + "->" + describe(y->base()) +
                       " map=" + describe_images(im) + ": theta product route disagrees";
            return std::nullopt;
        });
    });
    std::ostringstream inst;
    inst << "theta-continuity on binary products, 2-point factors (" << triples.size() << " triples)";
    return record_for("NT3", inst.str(), r);
}

VerdictRecord check_s31(const CampaignConfig& cfg) {
    int mp = std::min(cfg.max_points, 3);
    auto xs = spaces_up_to(mp, cfg.up_to_iso);
    auto ytops = topologies_up_to(mp, cfg.up_to_iso);
    auto r1 = sweep(static_cast<std::int64_t>(xs.size()), cfg.jobs, [&](std::int64_t i) -> std::optional<std::string> {
        const Pretopology& x = xs[static_cast<size_t>(i)];
        Topology xmod = topological_modification(x);
        for (const auto& y : ytops) {
            auto w = every_map(xmod, y, [&](std::span<const int> im) -> std::optional<std::string> {
                if (continuous(x, y.base(), im) != continuous(xmod.base(), y.base(), im))
                    return describe(x) + "->" + describe(y) + " map=" + describe_images(im) +
                           ": continuity differs from the modification route";
                return std::nullopt;
            });
            if (w) return w;
            FunctionSpace direct = enumerate_functions(x, y.base());
            FunctionSpace modified = enumerate_functions(xmod.base(), y.base());
            if (direct.functions != modified.functions)
                return describe(x) + "->" + describe(y) + ": function sets differ under modification";
        }
        return std::nullopt;
    });
    if (!r1.ok) return record_for("S31", "reduction to the topological case", r1);
    // modification commutes with binary products
    auto r2 = sweep(static_cast<std::int64_t>(xs.size()), cfg.jobs, [&](std::int64_t i) -> std::optional<std::string> {
        const Pretopology& a = xs[static_cast<size_t>(i)];
        if (a.size() > 3) return std::nullopt;
        for (const auto& b : xs) {
            if (static_cast<long long>(a.size()) * b.size() > 9) continue;
            Topology lhs = topological_modification(product(a, b));
            Topology rhs = product_topology(topological_modification(a), topological_modification(b));
            if (!(lhs == rhs))
                return describe(a) + " x " + describe(b) + ": modification does not commute with the product";
        }
        return std::nullopt;
    });
    SweepResult merged;
    merged.instances = r1.instances + r2.instances;
    merged.ok = r2.ok;
    merged.witness = r2.witness;
    std::ostringstream inst;
    inst << "reduction to the topological case + product commutation, |X|,|Y|<=" << mp;
    return record_for("S31", inst.str(), merged);
}

VerdictRecord check_s32(const CampaignConfig& cfg) {
    auto tops = topologies_up_to(std::min(cfg.max_points, 3), cfg.up_to_iso);
    auto r = sweep(static_cast<std::int64_t>(tops.size()), cfg.jobs, [&](std::int64_t i) -> std::optional<std::string> {
        const Topology& t = tops[static_cast<size_t>(i)];
        Pretopology theta = theta_structure(t);
        // closure agreement against the closed-neighbourhood definition
        Mask full = t.base().points();
        for (Mask a = 0;; ++a) {
            if (theta.closure(a) != oracle::theta_closure_direct(t, a))
                return describe(t) + " A=" + mask_to_string(a) + ": theta closure routes disagree";
            if (a == full) break;
        }
        Topology theta_open = theta_open_topology(t);
        if (theta_open.open_sets() != oracle::theta_open_sets_direct(t))
            return describe(t) + ": theta-open sets differ from the direct definition";
        if (is_regular(t.base())) {
            if (!(theta == t.base()))
                return describe(t) + ": theta structure should equal the base on a regular space";
        }
        // continuity into a regular topological codomain factors through the
        // theta-open topology
        for (const auto& y : tops) {
            if (!is_regular(y.base())) continue;
            auto w = every_map(t, y, [&](std::span<const int> im) -> std::optional<std::string> {
                if (theta_continuous(t, y, im) != continuous(theta_open.base(), y.base(), im))
                    return describe(t) + "->" + describe(y) + " map=" + describe_images(im) +
                           ": theta-open route disagrees for a regular codomain";
                return std::nullopt;
            });
            if (w) return w;
        }
        return std::nullopt;
    });
    std::ostringstream inst;
    inst << "theta-open topology = modification of the theta structure, topologies |X|<="
         << std::min(cfg.max_points, 3) << " (" << tops.size() << " topologies)";
    return record_for("S32", inst.str(), r);
}

VerdictRecord check_s33(const CampaignConfig& cfg) {
    auto tops = topologies_up_to(std::min(cfg.max_points, 3), cfg.up_to_iso);
    auto pairs = topology_pairs(tops);
    auto r = sweep(static_cast<std::int64_t>(pairs.size()), cfg.jobs, [&](std::int64_t i) -> std::optional<std::string> {
        const auto& [x, y] = pairs[static_cast<size_t>(i)];
        return every_map(*x, *y, [&](std::span<const int> im) -> std::optional<std::string> {
            auto profile = classify(*x, *y, im);
            if (!profile.implications_hold())
                return describe(*x) + "->" + describe(*y) + " map=" + describe_images(im) +
                       ": implication lattice violated (" + profile.to_string() + ")";
            return std::nullopt;
        });
    });
    std::ostringstream inst;
    inst << "continuity-class implication lattice, topologies |X|,|Y|<=" << std::min(cfg.max_points, 3);
    return record_for("S33", inst.str(), r);
}

const std::map<std::string, Check>& check_registry() {
    static const std::map<std::string, Check> reg = {
        {"T1", check_t1},   {"T2", check_t2},   {"T3", check_t3},  {"T4", check_t4},
        {"T5", check_t5},   {"T6", check_t6},   {"T7", check_t7},  {"T8", check_t8},
        {"T9", check_t9},   {"T10", check_t10}, {"C1", check_c1},  {"C2", check_c2},
        {"C3", check_c3},   {"C4", check_c4},   {"R1", check_r1},  {"NT1", check_nt1},
        {"NT2", check_nt2}, {"NT3", check_nt3}, {"S31", check_s31}, {"S32", check_s32},
        {"S33", check_s33},
    };
    return reg;
}

} // namespace

std::vector<VerdictRecord> run_campaign(const CampaignConfig& cfg) {
    cfg.validate();
    std::vector<std::string> ids = cfg.theorem_ids.empty() ? registry_ids() : cfg.theorem_ids;
    std::vector<VerdictRecord> records;
    for (const auto& id : ids) {
        auto it = check_registry().find(id);
        if (it == check_registry().end()) fail(Errc::unknown_theorem_id, id);
        records.push_back(it->second(cfg));
    }
    return records;
}

// --- counterexample mining ---------------------------------------------------

namespace {

VerdictRecord mined(const std::string& predicate, const std::string& instance,
                    const std::string& witness) {
    return {std::string("mine:") + predicate, instance, "holds", witness};
}

VerdictRecord vacuous_mine(const std::string& predicate, int bound) {
    return {std::string("mine:") + predicate,
            "no instance up to " + std::to_string(bound) + " points", "vacuous", ""};
}

VerdictRecord mine_nonidempotent_theta(const CampaignConfig& cfg) {
    int bound = std::min(cfg.max_points, kPretopologyEnumBound);
    for (int n = 1; n <= bound; ++n)
        for (const auto& t : enumerate_topologies(n, cfg.up_to_iso))
            if (!theta_structure(t).is_topological())
                return mined("non-idempotent-theta", "topologies up to " + std::to_string(bound) + " points",
                             describe(t));
    return vacuous_mine("non-idempotent-theta", bound);
}

// sigma-structure predicates walk the spaces coarsest-first so the mined
// witness is the canonical coarse one
VerdictRecord mine_sigma_predicate(const CampaignConfig& cfg, bool want_proper_not_admissible) {
    const char* name = want_proper_not_admissible ? "proper-not-admissible" : "admissible-not-proper";
    int bound = std::min(cfg.max_points, 3);
    int carrier_gate = std::min(cfg.max_function_carrier, 4);
    for (int nx = 1; nx <= bound; ++nx)
        for (int ny = 1; ny <= bound; ++ny) {
            auto xs = sorted_coarsest_first(enumerate_pretopologies(nx, cfg.up_to_iso));
            auto ys = sorted_coarsest_first(enumerate_pretopologies(ny, cfg.up_to_iso));
            for (const auto& x : xs)
                for (const auto& y : ys) {
                    FunctionSpace fs = enumerate_functions(x, y);
                    if (fs.count() < 1 || fs.count() > carrier_gate) continue;
                    auto table = cc_neighborhood_table(fs);
                    auto sigmas = sorted_coarsest_first(enumerate_pretopologies(fs.count(), false));
                    for (const auto& sigma : sigmas) {
                        bool p = proper_via_table(sigma, table);
                        bool a = admissible_via_table(sigma, table);
                        bool hit = want_proper_not_admissible ? (p && !a) : (a && !p);
                        if (hit)
                            return mined(name, "fs carriers up to " + std::to_string(bound) + " points",
                                         fs_label(fs) + " sigma=" + describe(sigma));
                    }
                }
        }
    return vacuous_mine(name, bound);
}

VerdictRecord mine_map_predicate(const CampaignConfig& cfg, bool want_continuous_not_super) {
    const char* name =
        want_continuous_not_super ? "continuous-not-super" : "theta-continuous-not-continuous";
    int bound = std::min(cfg.max_points, 3);
    for (int nx = 1; nx <= bound; ++nx)
        for (int ny = 1; ny <= bound; ++ny)
            for (const auto& x : enumerate_topologies(nx, cfg.up_to_iso))
                for (const auto& y : enumerate_topologies(ny, cfg.up_to_iso)) {
                    std::optional<std::string> hit =
                        every_map(x, y, [&](std::span<const int> im) -> std::optional<std::string> {
                            bool cont = continuous(x.base(), y.base(), im);
                            if (want_continuous_not_super) {
                                if (cont && !continuous(semi_regularization(x).base(), y.base(), im))
                                    return describe(x) + "->" + describe(y) + " map=" + describe_images(im);
                            } else {
                                if (!cont && theta_continuous(x, y, im))
                                    return describe(x) + "->" + describe(y) + " map=" + describe_images(im);
                            }
                            return std::nullopt;
                        });
                    if (hit)
                        return mined(name, "topology pairs up to " + std::to_string(bound) + " points",
                                     *hit);
                }
    return vacuous_mine(name, bound);
}

} // namespace

VerdictRecord find_counterexample(const std::string& predicate, const CampaignConfig& cfg) {
    cfg.validate();
    if (predicate == "non-idempotent-theta") return mine_nonidempotent_theta(cfg);
    if (predicate == "proper-not-admissible") return mine_sigma_predicate(cfg, true);
    if (predicate == "admissible-not-proper") return mine_sigma_predicate(cfg, false);
    if (predicate == "continuous-not-super") return mine_map_predicate(cfg, true);
    if (predicate == "theta-continuous-not-continuous") return mine_map_predicate(cfg, false);
    fail(Errc::unknown_predicate, predicate);
}

std::string report_to_json(std::span<const VerdictRecord> records) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json item;
        item["check"] = r.check;
        item["instance"] = r.instance;
        item["verdict"] = r.verdict;
        if (r.witness.empty()) item["witness"] = nullptr;
        else item["witness"] = r.witness;
        out.push_back(std::move(item));
    }
    return out.dump(2) + "\n";
}

int report_exit_code(std::span<const VerdictRecord> records) {
    for (const auto& r : records)
        if (r.verdict == "fails") return 1;
    return 0;
}

} // namespace pretop
