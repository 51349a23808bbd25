// Command-line front end: space algebra verbs, function-space decision
// procedures, verification campaigns and counterexample mining.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pretop/campaign.hpp"
#include "pretop/enumerate.hpp"
#include "pretop/io.hpp"
#include "pretop/oracle.hpp"
#include "pretop/sequences.hpp"

using namespace pretop;

namespace {

struct GlobalOpts {
    bool oracle = false;
    bool up_to_iso = false;
    int jobs = 1;
    std::string json_path;
};

Pretopology load_space(const std::string& path) { return load_space_file(path).space; }

Topology load_topology(const std::string& path) {
    auto parsed = load_space_file(path);
    if (parsed.topology) return *parsed.topology;
    if (!parsed.space.is_topological())
        fail(Errc::not_a_topology, path + " is not an idempotent closure space");
    return Topology::from_pretopology(parsed.space);
}

std::vector<int> load_map(const std::string& arg, int domain_size, int codomain_size) {
    std::ifstream in(arg);
    if (in) {
        std::ostringstream buf;
        buf << in.rdbuf();
        auto parsed = parse_space_text(buf.str());
        if (!parsed.map_images) fail(Errc::parse_error, arg + " carries no map: line");
        auto images = *parsed.map_images;
        if (static_cast<int>(images.size()) != domain_size)
            fail(Errc::parse_error, "map must list one image per domain point");
        for (int y : images)
            if (y < 0 || y >= codomain_size) fail(Errc::parse_error, "image index out of range", y);
        return images;
    }
    return parse_map_text(arg, domain_size, codomain_size);
}

void emit_records(const GlobalOpts& g, const std::vector<VerdictRecord>& records) {
    for (const auto& r : records) {
        std::cout << "[" << r.verdict << "] " << r.check << ": " << r.instance;
        if (!r.witness.empty()) std::cout << "\n    witness: " << r.witness;
        std::cout << "\n";
    }
    if (!g.json_path.empty()) {
        std::ofstream out(g.json_path, std::ios::binary);
        if (!out) fail(Errc::parse_error, "cannot write " + g.json_path);
        out << report_to_json(records);
    }
}

void oracle_note(bool agree) {
    std::cout << "oracle: " << (agree ? "agree" : "DISAGREE") << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite closure-space laboratory"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOpts g;
    app.add_flag("--oracle", g.oracle, "re-verify results through the definitional forms");
    app.add_flag("--up-to-iso", g.up_to_iso, "enumerate one representative per relabelling orbit");
    app.add_option("--jobs", g.jobs, "worker threads for campaign sweeps")->check(CLI::PositiveNumber);
    app.add_option("--json", g.json_path, "write the structured report to this path");

    std::string space_a, space_b, sigma_path, set_arg, map_arg, seq_arg, family_arg, config_path,
        predicate;
    int point_arg = 0, func_index = 0, max_points = 3;
    std::vector<std::string> theorem_list;

    auto* cmd_axioms = app.add_subcommand("check-axioms", "validate the closure axioms of a space file");
    cmd_axioms->add_option("space", space_a)->required();

    auto* cmd_closure = app.add_subcommand("closure", "closure of a subset");
    cmd_closure->add_option("space", space_a)->required();
    cmd_closure->add_option("set", set_arg)->required();

    auto* cmd_interior = app.add_subcommand("interior", "interior of a subset");
    cmd_interior->add_option("space", space_a)->required();
    cmd_interior->add_option("set", set_arg)->required();

    auto* cmd_nbhd = app.add_subcommand("neighborhood", "minimal neighbourhood of a point");
    cmd_nbhd->add_option("space", space_a)->required();
    cmd_nbhd->add_option("point", point_arg)->required();

    auto* cmd_theta = app.add_subcommand("theta", "theta closure structure of a topology");
    cmd_theta->add_option("topology", space_a)->required();

    auto* cmd_semireg = app.add_subcommand("semireg", "semi-regularization of a topology");
    cmd_semireg->add_option("topology", space_a)->required();

    auto* cmd_mod = app.add_subcommand("modification", "topological modification of a space");
    cmd_mod->add_option("space", space_a)->required();

    auto* cmd_product = app.add_subcommand("product", "binary product space");
    cmd_product->add_option("spaceX", space_a)->required();
    cmd_product->add_option("spaceY", space_b)->required();

    auto* cmd_cont = app.add_subcommand("continuous", "continuity of a map between spaces");
    cmd_cont->add_option("spaceX", space_a)->required();
    cmd_cont->add_option("spaceY", space_b)->required();
    cmd_cont->add_option("map", map_arg)->required();

    auto* cmd_classify = app.add_subcommand("classify", "continuity-class profile between topologies");
    cmd_classify->add_option("topX", space_a)->required();
    cmd_classify->add_option("topY", space_b)->required();
    cmd_classify->add_option("map", map_arg)->required();

    auto* cmd_enum_f = app.add_subcommand("enumerate-functions", "list the continuous maps X -> Y");
    cmd_enum_f->add_option("spaceX", space_a)->required();
    cmd_enum_f->add_option("spaceY", space_b)->required();

    auto* cmd_proper = app.add_subcommand("proper", "properness of a structure on Y^X");
    cmd_proper->add_option("spaceX", space_a)->required();
    cmd_proper->add_option("spaceY", space_b)->required();
    cmd_proper->add_option("sigma", sigma_path)->required();

    auto* cmd_adm = app.add_subcommand("admissible", "admissibility of a structure on Y^X");
    cmd_adm->add_option("spaceX", space_a)->required();
    cmd_adm->add_option("spaceY", space_b)->required();
    cmd_adm->add_option("sigma", sigma_path)->required();

    auto* cmd_finest = app.add_subcommand("finest-proper", "finest proper topology on Y^X");
    cmd_finest->add_option("spaceX", space_a)->required();
    cmd_finest->add_option("spaceY", space_b)->required();

    auto* cmd_atop = app.add_subcommand("a-topology", "set-open topology for a family of subsets of X");
    cmd_atop->add_option("spaceX", space_a)->required();
    cmd_atop->add_option("spaceY", space_b)->required();
    cmd_atop->add_option("family", family_arg)->required();

    auto* cmd_ctop = app.add_subcommand("c-topology", "set-open topology for an interior cover of X");
    cmd_ctop->add_option("spaceX", space_a)->required();
    cmd_ctop->add_option("spaceY", space_b)->required();
    cmd_ctop->add_option("cover", family_arg)->required();

    auto* cmd_limsup = app.add_subcommand("limsup", "upper limit of a sequence of subsets");
    cmd_limsup->add_option("space", space_a)->required();
    cmd_limsup->add_option("seq", seq_arg)->required();

    auto* cmd_cc = app.add_subcommand("cc", "continuous convergence of a function sequence");
    cmd_cc->add_option("spaceX", space_a)->required();
    cmd_cc->add_option("spaceY", space_b)->required();
    cmd_cc->add_option("seq", seq_arg)->required();
    cmd_cc->add_option("f", func_index)->required();

    auto* cmd_enum_s = app.add_subcommand("enumerate-spaces", "count/list spaces on n points");
    cmd_enum_s->add_option("points", point_arg)->required();
    bool topologies_only = false;
    cmd_enum_s->add_flag("--topologies", topologies_only, "idempotent structures only");

    auto* cmd_campaign = app.add_subcommand("campaign", "run the verification campaign");
    cmd_campaign->add_option("--config", config_path, "key=value config file");
    cmd_campaign->add_option("--theorems", theorem_list, "subset of the registry")->delimiter(',');

    auto* cmd_mine = app.add_subcommand("mine", "search for the smallest counterexample");
    cmd_mine->add_option("predicate", predicate)->required();
    cmd_mine->add_option("--max-points", max_points, "carrier bound for the search");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_axioms->parsed()) {
            std::ifstream in(space_a);
            if (!in) fail(Errc::parse_error, "cannot open " + space_a);
            std::ostringstream buf;
            buf << in.rdbuf();
            auto raw = parse_raw_closures(buf.str());
            auto report = verify_closure_axioms(raw.points, raw.singleton_closures);
            std::cout << (report.ok() ? "valid" : "invalid") << "\n" << report.note << "\n";
            for (const auto& v : report.violations)
                std::cout << (v.kind == ClosureViolation::c2_missing_point
                                  ? "violation (C2): point "
                                  : "violation (subset off the carrier): point ")
                          << v.point << "\n";
            if (g.oracle && report.ok())
                oracle_note(oracle::closure_axioms_hold(*report.space) &&
                            oracle::interior_duality_holds(*report.space) &&
                            oracle::neighborhood_filters_principal(*report.space));
            if (!report.ok()) return 1;
        } else if (cmd_closure->parsed()) {
            auto space = load_space(space_a);
            Mask a = parse_subset(set_arg, space.size());
            std::cout << format_subset(space.closure(a)) << "\n";
        } else if (cmd_interior->parsed()) {
            auto space = load_space(space_a);
            Mask a = parse_subset(set_arg, space.size());
            std::cout << format_subset(space.interior(a)) << "\n";
        } else if (cmd_nbhd->parsed()) {
            auto space = load_space(space_a);
            std::cout << format_subset(space.minimal_neighborhood(point_arg)) << "\n";
        } else if (cmd_theta->parsed()) {
            auto t = load_topology(space_a);
            Pretopology theta = theta_structure(t);
            std::cout << format_space(theta);
            if (g.oracle) {
                bool agree = true;
                for (Mask a = 0; a <= t.base().points(); ++a)
                    if (theta.closure(a) != oracle::theta_closure_direct(t, a)) agree = false;
                oracle_note(agree);
            }
        } else if (cmd_semireg->parsed()) {
            std::cout << format_topology(semi_regularization(load_topology(space_a)));
        } else if (cmd_mod->parsed()) {
            std::cout << format_topology(topological_modification(load_space(space_a)));
        } else if (cmd_product->parsed()) {
            std::cout << format_space(product(load_space(space_a), load_space(space_b)));
        } else if (cmd_cont->parsed()) {
            auto x = load_space(space_a);
            auto y = load_space(space_b);
            auto im = load_map(map_arg, x.size(), y.size());
            bool result = continuous(x, y, im);
            std::cout << (result ? "true" : "false") << "\n";
            if (g.oracle)
                oracle_note(oracle::continuous_image_form(x, y, im) == result &&
                            oracle::continuous_preimage_form(x, y, im) == result);
        } else if (cmd_classify->parsed()) {
            auto x = load_topology(space_a);
            auto y = load_topology(space_b);
            auto im = load_map(map_arg, x.size(), y.size());
            auto profile = classify(x, y, im);
            std::cout << profile.to_string() << "\n";
            if (!profile.implications_hold()) {
                std::cerr << "implication lattice violated\n";
                return 1;
            }
        } else if (cmd_enum_f->parsed()) {
            auto fs = enumerate_functions(load_space(space_a), load_space(space_b));
            std::cout << "count: " << fs.count() << "\n";
            for (int f = 0; f < fs.count(); ++f)
                std::cout << f << ": " << describe_images(fs.images(f)) << "\n";
        } else if (cmd_proper->parsed() || cmd_adm->parsed()) {
            auto fs = enumerate_functions(load_space(space_a), load_space(space_b));
            auto sigma = load_space(sigma_path);
            check_sigma(fs, sigma);
            bool result = cmd_proper->parsed() ? proper(fs, sigma) : admissible(fs, sigma);
            std::cout << (result ? "true" : "false") << "\n";
            if (g.oracle) {
                if (cmd_proper->parsed())
                    oracle_note(oracle::proper_definitional(fs, sigma, 2) == result);
                else
                    oracle_note(oracle::admissible_definitional(fs, sigma, 2) == result);
            }
        } else if (cmd_finest->parsed()) {
            auto fs = enumerate_functions(load_space(space_a), load_space(space_b));
            std::cout << format_topology(finest_proper_topology(fs));
        } else if (cmd_atop->parsed() || cmd_ctop->parsed()) {
            auto x = load_space(space_a);
            auto fs = enumerate_functions(x, load_space(space_b));
            auto family = parse_family(family_arg, x.size());
            Pretopology sigma = cmd_atop->parsed() ? a_topology_structure(fs, family)
                                                   : c_topology_structure(fs, family);
            std::cout << format_space(sigma);
            if (cmd_atop->parsed()) {
                std::cout << "proper: " << (proper(fs, sigma) ? "true" : "false") << "\n";
            } else {
                std::cout << "admissible: " << (admissible(fs, sigma) ? "true" : "false") << "\n";
                // value sets range over everything with nonempty interior;
                // report whether restricting them to open sets changes the result
                Pretopology open_only = c_topology_structure(fs, family, true);
                std::cout << "open-value variant: "
                          << (open_only == sigma ? "same structure" : format_space(open_only));
                if (!(open_only == sigma)) std::cout << "(differs)\n";
                else std::cout << "\n";
            }
        } else if (cmd_limsup->parsed()) {
            auto space = load_space(space_a);
            auto seq = parse_subset_sequence(seq_arg, space.size());
            Mask limit = upper_limit(space, seq);
            std::cout << format_subset(limit) << "\n";
            if (g.oracle) oracle_note(oracle::upper_limit_definitional(space, seq) == limit);
        } else if (cmd_cc->parsed()) {
            auto fs = enumerate_functions(load_space(space_a), load_space(space_b));
            auto seq = parse_point_sequence(seq_arg, fs.count());
            bool result = converges_continuously(fs, seq, func_index);
            std::cout << (result ? "true" : "false") << "\n";
            if (g.oracle)
                oracle_note(oracle::cc_tail_quantifier_form(fs, seq, func_index) == result &&
                            oracle::cc_upper_limit_all_sets(fs, seq, func_index) == result);
        } else if (cmd_enum_s->parsed()) {
            if (topologies_only) {
                auto tops = enumerate_topologies(point_arg, g.up_to_iso);
                std::cout << "count: " << tops.size() << "\n";
                for (const auto& t : tops) std::cout << describe(t) << "\n";
            } else {
                auto spaces = enumerate_pretopologies(point_arg, g.up_to_iso);
                std::cout << "count: " << spaces.size() << "\n";
                for (const auto& s : spaces) std::cout << describe(s) << "\n";
            }
        } else if (cmd_campaign->parsed()) {
            CampaignConfig cfg;
            if (!config_path.empty()) cfg = load_config_file(config_path);
            if (!theorem_list.empty()) cfg.theorem_ids = theorem_list;
            if (g.jobs > 1) cfg.jobs = g.jobs;
            cfg.oracle = cfg.oracle || g.oracle;
            cfg.up_to_iso = cfg.up_to_iso || g.up_to_iso;
            auto records = run_campaign(cfg);
            emit_records(g, records);
            return report_exit_code(records);
        } else if (cmd_mine->parsed()) {
            CampaignConfig cfg;
            cfg.max_points = max_points;
            cfg.up_to_iso = g.up_to_iso;
            auto record = find_counterexample(predicate, cfg);
            emit_records(g, {record});
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
