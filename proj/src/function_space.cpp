#include "pretop/function_space.hpp"

#include <algorithm>
#include <sstream>

namespace pretop {

FiniteMap FunctionSpace::map_at(int f) const {
    check_index(f);
    return FiniteMap(domain, codomain, functions[static_cast<size_t>(f)]);
}

int FunctionSpace::index_of(std::span<const int> images) const {
    std::vector<int> key(images.begin(), images.end());
    auto it = std::lower_bound(functions.begin(), functions.end(), key);
    if (it == functions.end() || *it != key) return -1;
    return static_cast<int>(it - functions.begin());
}

void FunctionSpace::check_index(int f) const {
    if (f < 0 || f >= count())
        fail(Errc::index_out_of_range, "function index " + std::to_string(f), f);
}

FunctionSpace enumerate_functions(const Pretopology& x_space, const Pretopology& y_space,
                                  std::int64_t candidate_bound) {
    std::int64_t candidates = 1;
    for (int x = 0; x < x_space.size(); ++x) {
        candidates *= y_space.size();
        if (candidates > candidate_bound)
            fail(Errc::size_overflow, "function enumeration exceeds candidate bound");
    }
    FunctionSpace fs{x_space, y_space, {}};
    std::vector<int> im(static_cast<size_t>(x_space.size()), 0);
    // Odometer over image tuples emits candidates in lexicographic order.
    for (;;) {
        if (continuous(x_space, y_space, im)) fs.functions.push_back(im);
        int k = x_space.size() - 1;
        while (k >= 0 && im[static_cast<size_t>(k)] == y_space.size() - 1) {
            im[static_cast<size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
        ++im[static_cast<size_t>(k)];
    }
    return fs;
}

Mask cc_neighborhood(const FunctionSpace& fs, int f) {
    fs.check_index(f);
    auto fim = fs.images(f);
    Mask out = 0;
    for (int g = 0; g < fs.count(); ++g) {
        auto gim = fs.images(g);
        bool in = true;
        for (int x = 0; x < fs.domain.size() && in; ++x) {
            Mask target = fs.codomain.minimal_neighborhood(fim[static_cast<size_t>(x)]);
            for_each_point(fs.domain.minimal_neighborhood(x), [&](int z) {
                if (!has(target, gim[static_cast<size_t>(z)])) in = false;
            });
        }
        if (in) out |= bit(g);
    }
    return out;
}

std::vector<Mask> cc_neighborhood_table(const FunctionSpace& fs) {
    std::vector<Mask> table(static_cast<size_t>(fs.count()));
    for (int f = 0; f < fs.count(); ++f) table[static_cast<size_t>(f)] = cc_neighborhood(fs, f);
    return table;
}

Pretopology cc_structure(const FunctionSpace& fs) {
    if (fs.count() == 0) fail(Errc::empty_carrier, "no structure on an empty function set");
    return Pretopology::from_minimal_neighborhoods(cc_neighborhood_table(fs));
}

void check_sigma(const FunctionSpace& fs, const Pretopology& sigma) {
    if (sigma.size() != fs.count())
        fail(Errc::size_mismatch, "structure carrier must match the function count");
}

bool admissible(const FunctionSpace& fs, const Pretopology& sigma) {
    if (fs.count() == 0) return true; // vacuous
    check_sigma(fs, sigma);
    // Evaluation is continuous at (f, x) iff g(V(x)) lands in V(f(x)) for
    // every g in V_sigma(f); quantifying over x gives V_sigma(f) subset C(f).
    for (int f = 0; f < fs.count(); ++f) {
        auto fim = fs.images(f);
        bool ok = true;
        for (int x = 0; x < fs.domain.size() && ok; ++x) {
            Mask target = fs.codomain.minimal_neighborhood(fim[static_cast<size_t>(x)]);
            Mask dom_nbhd = fs.domain.minimal_neighborhood(x);
            for_each_point(sigma.minimal_neighborhood(f), [&](int g) {
                if (!ok) return;
                auto gim = fs.images(g);
                for_each_point(dom_nbhd, [&](int z) {
                    if (!has(target, gim[static_cast<size_t>(z)])) ok = false;
                });
            });
        }
        if (!ok) return false;
    }
    return true;
}

bool proper(const FunctionSpace& fs, const Pretopology& sigma) {
    if (fs.count() == 0) return true; // vacuous
    check_sigma(fs, sigma);
    for (int f = 0; f < fs.count(); ++f)
        if (!subset_of(cc_neighborhood(fs, f), sigma.minimal_neighborhood(f))) return false;
    return true;
}

FiniteMap evaluation_map(const FunctionSpace& fs, const Pretopology& sigma, int bound) {
    if (fs.count() == 0) fail(Errc::empty_carrier, "no evaluation on an empty function set");
    check_sigma(fs, sigma);
    Pretopology dom = product(sigma, fs.domain, bound);
    std::vector<int> im(static_cast<size_t>(dom.size()));
    for (int f = 0; f < fs.count(); ++f)
        for (int x = 0; x < fs.domain.size(); ++x)
            im[static_cast<size_t>(pair_index(f, x, fs.domain.size()))] =
                fs.images(f)[static_cast<size_t>(x)];
    return FiniteMap(std::move(dom), fs.codomain, std::move(im));
}

std::vector<int> curry_images(const FunctionSpace& fs, std::span<const int> g_images, int z_size) {
    int nx = fs.domain.size();
    if (static_cast<int>(g_images.size()) != z_size * nx)
        fail(Errc::index_mismatch, "map is not defined on the product carrier");
    std::vector<int> out(static_cast<size_t>(z_size));
    std::vector<int> section(static_cast<size_t>(nx));
    for (int z = 0; z < z_size; ++z) {
        for (int x = 0; x < nx; ++x)
            section[static_cast<size_t>(x)] = g_images[static_cast<size_t>(pair_index(z, x, nx))];
        int idx = fs.index_of(section);
        if (idx < 0)
            fail(Errc::section_not_continuous,
                 "section at z=" + std::to_string(z) + " is not a continuous map", z);
        out[static_cast<size_t>(z)] = idx;
    }
    return out;
}

std::vector<int> uncurry_images(const FunctionSpace& fs, std::span<const int> h_images) {
    int nx = fs.domain.size();
    std::vector<int> out(h_images.size() * static_cast<size_t>(nx));
    for (size_t z = 0; z < h_images.size(); ++z) {
        int f = h_images[z];
        fs.check_index(f);
        for (int x = 0; x < nx; ++x)
            out[z * static_cast<size_t>(nx) + static_cast<size_t>(x)] =
                fs.images(f)[static_cast<size_t>(x)];
    }
    return out;
}

FiniteMap curry(const FiniteMap& g, const Pretopology& z_space, const FunctionSpace& fs,
                const Pretopology& sigma) {
    check_sigma(fs, sigma);
    if (g.domain.size() != z_space.size() * fs.domain.size() || !(g.codomain == fs.codomain))
        fail(Errc::index_mismatch, "map does not factor through Z x X -> Y");
    return FiniteMap(z_space, sigma, curry_images(fs, g.images, z_space.size()));
}

FiniteMap uncurry(const FiniteMap& h, const FunctionSpace& fs, int bound) {
    check_sigma(fs, h.codomain);
    Pretopology dom = product(h.domain, fs.domain, bound);
    return FiniteMap(std::move(dom), fs.codomain, uncurry_images(fs, h.images));
}

Pretopology finest_proper_structure(const FunctionSpace& fs) {
    Pretopology star = cc_structure(fs);
    std::vector<Mask> vmin(static_cast<size_t>(star.size()));
    for (int f = 0; f < star.size(); ++f) vmin[static_cast<size_t>(f)] = star.open_hull(f);
    return Pretopology::from_minimal_neighborhoods(std::move(vmin));
}

Topology finest_proper_topology(const FunctionSpace& fs) {
    if (fs.count() > kOpenSetEnumBound)
        fail(Errc::size_overflow, "open-set enumeration limited to " + std::to_string(kOpenSetEnumBound) + " functions");
    // Direct route: opens are the C(.)-absorbing sets.  This coincides with
    // the modification of the continuous-convergence structure by
    // construction; both are materialized and compared in the test suites.
    auto table = cc_neighborhood_table(fs);
    std::vector<Mask> opens;
    Mask full = full_mask(fs.count());
    for (Mask g = 0;; ++g) {
        bool open = true;
        for_each_point(g, [&](int f) {
            if (!subset_of(table[static_cast<size_t>(f)], g)) open = false;
        });
        if (open) opens.push_back(g);
        if (g == full) break;
    }
    return Topology::from_open_sets(fs.count(), std::move(opens));
}

Mask function_set_of(const FunctionSpace& fs, Mask argument_set, Mask value_set) {
    fs.domain.check_subset(argument_set);
    fs.codomain.check_subset(value_set);
    Mask out = 0;
    for (int f = 0; f < fs.count(); ++f) {
        auto im = fs.images(f);
        bool in = true;
        for_each_point(argument_set, [&](int x) {
            if (!has(value_set, im[static_cast<size_t>(x)])) in = false;
        });
        if (in) out |= bit(f);
    }
    return out;
}

std::vector<SubbasisPair> set_open_subbase(const FunctionSpace& fs, std::span<const Mask> family) {
    if (fs.codomain.size() > kOpenSetEnumBound)
        fail(Errc::bound_exceeded, "value-set enumeration limited to " + std::to_string(kOpenSetEnumBound) + " points");
    std::vector<SubbasisPair> pairs;
    for (Mask a : family) {
        fs.domain.check_subset(a);
        if (a == 0) fail(Errc::size_mismatch, "family members must be nonempty");
        Mask full = fs.codomain.points();
        for (Mask v = 1;; ++v) { // open with nonempty interior = open nonempty
            if (fs.codomain.is_open(v) && fs.codomain.interior(v) != 0)
                pairs.push_back({a, v});
            if (v == full) break;
        }
    }
    return pairs;
}

std::vector<SubbasisPair> cover_subbase(const FunctionSpace& fs, std::span<const Mask> cover,
                                        bool open_values_only) {
    if (fs.domain.size() > kOpenSetEnumBound || fs.codomain.size() > kOpenSetEnumBound)
        fail(Errc::bound_exceeded, "subset enumeration limited to " + std::to_string(kOpenSetEnumBound) + " points");
    if (!is_interior_cover(fs.domain, cover, fs.domain.points()))
        fail(Errc::not_an_interior_cover, "interiors of the cover must exhaust the domain");
    // arguments: closures u(K) lying inside some cover member
    std::vector<Mask> args;
    Mask full_x = fs.domain.points();
    for (Mask k = 0;; ++k) {
        Mask uk = fs.domain.closure(k);
        for (Mask c : cover)
            if (subset_of(uk, c)) {
                args.push_back(uk);
                break;
            }
        if (k == full_x) break;
    }
    std::sort(args.begin(), args.end());
    args.erase(std::unique(args.begin(), args.end()), args.end());
    // values: any subset of Y with nonempty interior (optionally open only)
    std::vector<Mask> vals;
    Mask full_y = fs.codomain.points();
    for (Mask v = 0;; ++v) {
        if (fs.codomain.interior(v) != 0 && (!open_values_only || fs.codomain.is_open(v)))
            vals.push_back(v);
        if (v == full_y) break;
    }
    std::vector<SubbasisPair> pairs;
    for (Mask a : args)
        for (Mask v : vals) pairs.push_back({a, v});
    return pairs;
}

Pretopology structure_from_pairs(const FunctionSpace& fs, std::span<const SubbasisPair> pairs) {
    if (fs.count() == 0) fail(Errc::empty_carrier, "no structure on an empty function set");
    std::vector<Mask> generators;
    generators.reserve(pairs.size());
    for (const auto& p : pairs) generators.push_back(function_set_of(fs, p.argument_set, p.value_set));
    return structure_from_subbase(fs.count(), generators);
}

Pretopology a_topology_structure(const FunctionSpace& fs, std::span<const Mask> family) {
    return structure_from_pairs(fs, set_open_subbase(fs, family));
}

Pretopology c_topology_structure(const FunctionSpace& fs, std::span<const Mask> cover,
                                 bool open_values_only) {
    return structure_from_pairs(fs, cover_subbase(fs, cover, open_values_only));
}

const char* clause_verdict_name(ClauseVerdict v) {
    switch (v) {
        case ClauseVerdict::holds: return "holds";
        case ClauseVerdict::fails: return "fails";
        case ClauseVerdict::vacuous: return "vacuous";
    }
    return "?";
}

static ClauseVerdict implication(bool premise, bool conclusion) {
    if (!premise) return ClauseVerdict::vacuous;
    return conclusion ? ClauseVerdict::holds : ClauseVerdict::fails;
}

bool OrderingReport::all_hold() const {
    for (auto v : clause)
        if (v == ClauseVerdict::fails) return false;
    return true;
}

OrderingReport verify_ordering(const FunctionSpace& fs, const Pretopology& sigma,
                               const Pretopology& sigma2) {
    OrderingReport r{};
    if (fs.count() == 0) {
        r.vacuous = true;
        for (auto& c : r.clause) c = ClauseVerdict::vacuous;
        return r;
    }
    check_sigma(fs, sigma);
    check_sigma(fs, sigma2);
    bool p1 = proper(fs, sigma), p2 = proper(fs, sigma2);
    bool a1 = admissible(fs, sigma), a2 = admissible(fs, sigma2);
    SpaceOrder ord = compare(sigma, sigma2);
    bool le = ord == SpaceOrder::coarser || ord == SpaceOrder::equal;

    r.clause[0] = implication(p2 && le, p1);
    r.clause[1] = implication(a1 && le, a2);
    r.clause[2] = implication(p1 && a2, le);
    Pretopology star = cc_structure(fs);
    bool both1 = p1 && a1, both2 = p2 && a2;
    bool unique = (!both1 || sigma == star) && (!both2 || sigma2 == star);
    r.clause[3] = (both1 || both2) ? (unique ? ClauseVerdict::holds : ClauseVerdict::fails)
                                   : ClauseVerdict::vacuous;
    r.sigma_star_is_both = proper(fs, star) && admissible(fs, star);
    return r;
}

bool LatticeReport::all_hold() const {
    return meet_proper != ClauseVerdict::fails && join_proper != ClauseVerdict::fails &&
           join_admissible != ClauseVerdict::fails;
}

LatticeReport verify_lattice_closure(const FunctionSpace& fs, std::span<const Pretopology> sigmas) {
    if (sigmas.empty()) fail(Errc::empty_list, "need at least one structure");
    LatticeReport r;
    if (fs.count() == 0) return r;
    for (const auto& s : sigmas) check_sigma(fs, s);
    r.all_proper = true;
    r.all_admissible = true;
    for (const auto& s : sigmas) {
        if (!proper(fs, s)) r.all_proper = false;
        if (!admissible(fs, s)) r.all_admissible = false;
    }
    if (r.all_proper) {
        r.meet_proper = implication(true, proper(fs, meet(sigmas)));
        r.join_proper = implication(true, proper(fs, join(sigmas)));
    }
    if (r.all_admissible) r.join_admissible = implication(true, admissible(fs, join(sigmas)));
    return r;
}

std::string describe(const FunctionSpace& fs) {
    std::ostringstream os;
    os << "fs(X=" << describe(fs.domain) << ",Y=" << describe(fs.codomain)
       << ",count=" << fs.count() << ")";
    return os.str();
}

} // namespace pretop
