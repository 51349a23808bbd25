#include "pretop/space.hpp"

#include <algorithm>
#include <sstream>

namespace pretop {

std::string mask_to_string(Mask m) {
    std::string out = "{";
    bool first = true;
    for_each_point(m, [&](int i) {
        if (!first) out += ',';
        out += std::to_string(i);
        first = false;
    });
    out += '}';
    return out;
}

std::string mask_list_to_string(const std::vector<Mask>& masks) {
    std::string out = "[";
    for (size_t i = 0; i < masks.size(); ++i) {
        if (i) out += ' ';
        out += mask_to_string(masks[i]);
    }
    out += ']';
    return out;
}

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::size_mismatch: return "SizeMismatch";
        case Errc::carrier_mismatch: return "CarrierMismatch";
        case Errc::point_out_of_range: return "PointOutOfRange";
        case Errc::empty_carrier: return "EmptyCarrier";
        case Errc::empty_list: return "EmptyList";
        case Errc::size_overflow: return "SizeOverflow";
        case Errc::not_an_interior_cover: return "NotAnInteriorCover";
        case Errc::space_mismatch: return "SpaceMismatch";
        case Errc::not_a_topology: return "NotATopology";
        case Errc::section_not_continuous: return "SectionNotContinuous";
        case Errc::index_mismatch: return "IndexMismatch";
        case Errc::index_out_of_range: return "IndexOutOfRange";
        case Errc::bound_exceeded: return "BoundExceeded";
        case Errc::unknown_theorem_id: return "UnknownTheoremId";
        case Errc::unknown_predicate: return "UnknownPredicate";
        case Errc::parse_error: return "ParseError";
    }
    return "Error";
}

static std::vector<Mask> transpose_table(int n, const std::vector<Mask>& closure) {
    std::vector<Mask> vmin(static_cast<size_t>(n), 0);
    for (int y = 0; y < n; ++y) {
        for_each_point(closure[static_cast<size_t>(y)], [&](int x) {
            vmin[static_cast<size_t>(x)] |= bit(y);
        });
    }
    return vmin;
}

Pretopology::Pretopology(std::vector<Mask> singleton_closures) {
    int n = static_cast<int>(singleton_closures.size());
    if (n < 1) fail(Errc::empty_carrier, "carrier must be nonempty");
    if (n > kMaxPoints) fail(Errc::size_overflow, "carrier larger than " + std::to_string(kMaxPoints));
    Mask full = full_mask(n);
    for (int x = 0; x < n; ++x) {
        Mask c = singleton_closures[static_cast<size_t>(x)];
        if (!subset_of(c, full))
            fail(Errc::size_mismatch, "closure of point " + std::to_string(x) + " leaves the carrier", x);
        if (!has(c, x))
            fail(Errc::size_mismatch, "point " + std::to_string(x) + " missing from its own closure", x);
    }
    n_ = n;
    closure_ = std::move(singleton_closures);
    vmin_ = transpose_table(n_, closure_);
}

Pretopology Pretopology::discrete(int n) {
    std::vector<Mask> c(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) c[static_cast<size_t>(x)] = bit(x);
    return Pretopology(std::move(c));
}

Pretopology Pretopology::indiscrete(int n) {
    std::vector<Mask> c(static_cast<size_t>(n), full_mask(n));
    return Pretopology(std::move(c));
}

Pretopology Pretopology::from_minimal_neighborhoods(std::vector<Mask> vmin) {
    int n = static_cast<int>(vmin.size());
    if (n < 1) fail(Errc::empty_carrier, "carrier must be nonempty");
    // V and singleton closures are mutually transposed tables.
    for (int x = 0; x < n; ++x) {
        if (!subset_of(vmin[static_cast<size_t>(x)], full_mask(n)))
            fail(Errc::size_mismatch, "neighborhood leaves the carrier", x);
        if (!has(vmin[static_cast<size_t>(x)], x))
            fail(Errc::size_mismatch, "minimal neighborhood must contain its point", x);
    }
    return Pretopology(transpose_table(n, vmin));
}

void Pretopology::check_subset(Mask a) const {
    if (!subset_of(a, points())) fail(Errc::size_mismatch, "subset leaves the carrier");
}

void Pretopology::check_point(int x) const {
    if (x < 0 || x >= n_) fail(Errc::point_out_of_range, "point " + std::to_string(x), x);
}

Mask Pretopology::minimal_neighborhood(int x) const {
    check_point(x);
    return vmin_[static_cast<size_t>(x)];
}

Mask Pretopology::closure(Mask a) const {
    check_subset(a);
    Mask out = 0;
    for_each_point(a, [&](int x) { out |= closure_[static_cast<size_t>(x)]; });
    return out;
}

Mask Pretopology::interior(Mask a) const {
    check_subset(a);
    return points() & ~closure(points() & ~a);
}

bool Pretopology::is_neighborhood(Mask u, int x) const {
    check_point(x);
    return has(interior(u), x);
}

bool Pretopology::is_topological() const {
    // Additive closures are idempotent iff y in V(x) implies V(y) subset V(x).
    for (int x = 0; x < n_; ++x) {
        Mask vx = vmin_[static_cast<size_t>(x)];
        bool ok = true;
        for_each_point(vx, [&](int y) {
            if (!subset_of(vmin_[static_cast<size_t>(y)], vx)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

Mask Pretopology::open_hull(int x) const {
    check_point(x);
    Mask hull = bit(x);
    for (;;) {
        Mask grown = hull;
        for_each_point(hull, [&](int z) { grown |= vmin_[static_cast<size_t>(z)]; });
        if (grown == hull) return hull;
        hull = grown;
    }
}

ClosureValidation verify_closure_axioms(int n, std::vector<Mask> singleton_closures) {
    ClosureValidation result;
    result.note = "(C1) and (C3) hold by additive extension from singletons; "
                  "(C2) reduces to x in u({x}) per point";
    if (n < 1 || static_cast<int>(singleton_closures.size()) != n) {
        result.violations.push_back({ClosureViolation::bad_subset, -1});
        return result;
    }
    if (n > kMaxPoints) {
        result.violations.push_back({ClosureViolation::bad_subset, -1});
        return result;
    }
    Mask full = full_mask(n);
    for (int x = 0; x < n; ++x) {
        Mask c = singleton_closures[static_cast<size_t>(x)];
        if (!subset_of(c, full)) result.violations.push_back({ClosureViolation::bad_subset, x});
        else if (!has(c, x)) result.violations.push_back({ClosureViolation::c2_missing_point, x});
    }
    if (result.violations.empty()) result.space = Pretopology(std::move(singleton_closures));
    return result;
}

const char* order_name(SpaceOrder o) {
    switch (o) {
        case SpaceOrder::equal: return "equal";
        case SpaceOrder::coarser: return "coarser";
        case SpaceOrder::finer: return "finer";
        case SpaceOrder::incomparable: return "incomparable";
    }
    return "?";
}

SpaceOrder compare(const Pretopology& u1, const Pretopology& u2) {
    if (u1.size() != u2.size()) fail(Errc::carrier_mismatch, "comparing spaces on different carriers");
    bool le = true, ge = true; // le: u1 coarser (u1({x}) contains u2({x}))
    for (int x = 0; x < u1.size(); ++x) {
        Mask a = u1.singleton_closure(x), b = u2.singleton_closure(x);
        if (!subset_of(b, a)) le = false;
        if (!subset_of(a, b)) ge = false;
    }
    if (le && ge) return SpaceOrder::equal;
    if (le) return SpaceOrder::coarser;
    if (ge) return SpaceOrder::finer;
    return SpaceOrder::incomparable;
}

static void check_family(std::span<const Pretopology> spaces) {
    if (spaces.empty()) fail(Errc::empty_list, "need at least one space");
    for (const auto& s : spaces)
        if (s.size() != spaces.front().size())
            fail(Errc::carrier_mismatch, "lattice operation over different carriers");
}

Pretopology meet(std::span<const Pretopology> spaces) {
    check_family(spaces);
    int n = spaces.front().size();
    std::vector<Mask> vmin(static_cast<size_t>(n), 0);
    for (const auto& s : spaces)
        for (int x = 0; x < n; ++x) vmin[static_cast<size_t>(x)] |= s.minimal_neighborhood(x);
    return Pretopology::from_minimal_neighborhoods(std::move(vmin));
}

Pretopology join(std::span<const Pretopology> spaces) {
    check_family(spaces);
    int n = spaces.front().size();
    std::vector<Mask> vmin(static_cast<size_t>(n), full_mask(n));
    for (const auto& s : spaces)
        for (int x = 0; x < n; ++x) vmin[static_cast<size_t>(x)] &= s.minimal_neighborhood(x);
    return Pretopology::from_minimal_neighborhoods(std::move(vmin));
}

Pretopology product(const Pretopology& a, const Pretopology& b, int bound) {
    const Pretopology factors[] = {a, b};
    return product(std::span<const Pretopology>(factors, 2), bound);
}

Pretopology product(std::span<const Pretopology> factors, int bound) {
    if (factors.empty()) fail(Errc::empty_list, "product of no factors");
    if (bound > kMaxPoints) bound = kMaxPoints;
    long long total = 1;
    for (const auto& f : factors) {
        total *= f.size();
        if (total > bound)
            fail(Errc::size_overflow, "product carrier exceeds bound " + std::to_string(bound));
    }
    int n = static_cast<int>(total);
    // Row-major point indices, first factor most significant.
    auto decode = [&](int p, std::vector<int>& coord) {
        for (size_t k = factors.size(); k-- > 0;) {
            coord[k] = p % factors[k].size();
            p /= factors[k].size();
        }
    };
    // u({tuple}) is the product of the factor singleton closures.
    std::vector<Mask> closure(static_cast<size_t>(n), 0);
    std::vector<int> pc(factors.size()), qc(factors.size());
    for (int p = 0; p < n; ++p) {
        decode(p, pc);
        for (int q = 0; q < n; ++q) {
            decode(q, qc);
            bool in = true;
            for (size_t k = 0; k < factors.size() && in; ++k)
                in = has(factors[k].singleton_closure(pc[k]), qc[k]);
            if (in) closure[static_cast<size_t>(p)] |= bit(q);
        }
    }
    return Pretopology(std::move(closure));
}

bool is_regular(const Pretopology& space) {
    for (int x = 0; x < space.size(); ++x) {
        Mask v = space.minimal_neighborhood(x);
        if (!subset_of(space.closure(v), v)) return false;
    }
    return true;
}

bool is_interior_cover(const Pretopology& space, std::span<const Mask> members, Mask target) {
    space.check_subset(target);
    Mask covered = 0;
    for (Mask g : members) covered |= space.interior(g);
    return subset_of(target, covered);
}

SubcoverWitness compact_subcover(const Pretopology& space, std::span<const Mask> members, Mask target) {
    if (!is_interior_cover(space, members, target))
        fail(Errc::not_an_interior_cover, "interiors do not cover the target set");
    SubcoverWitness out;
    out.compact = true;
    if (target == 0) return out; // empty subcover
    if (space.size() > kOpenSetEnumBound)
        fail(Errc::bound_exceeded, "subcover search limited to " + std::to_string(kOpenSetEnumBound) + " points");

    // Exact set cover over the interiors, DP on submasks of the target.
    // Tie-break: smaller member index preferred, so the witness is
    // deterministic.
    std::vector<Mask> ints(members.size());
    for (size_t i = 0; i < members.size(); ++i) ints[i] = space.interior(members[i]) & target;
    size_t states = size_t{1} << popcount(space.points() & target);
    // compress target points to consecutive bits
    std::vector<int> pts;
    for_each_point(target, [&](int p) { pts.push_back(p); });
    auto compress = [&](Mask m) {
        Mask c = 0;
        for (size_t i = 0; i < pts.size(); ++i)
            if (has(m, pts[i])) c |= bit(static_cast<int>(i));
        return c;
    };
    std::vector<Mask> cints(ints.size());
    for (size_t i = 0; i < ints.size(); ++i) cints[i] = compress(ints[i]);

    constexpr int kInf = 1 << 20;
    std::vector<int> cost(states, kInf);
    std::vector<int> choice(states, -1), parent(states, -1);
    cost[0] = 0;
    for (size_t s = 1; s < states; ++s) {
        for (size_t i = 0; i < cints.size(); ++i) {
            if ((s & cints[i]) == 0) continue;
            size_t rest = s & ~cints[i];
            if (cost[rest] == kInf) continue;
            int c = cost[rest] + 1;
            if (c < cost[s] || (c == cost[s] && static_cast<int>(i) < choice[s])) {
                cost[s] = c;
                choice[s] = static_cast<int>(i);
                parent[s] = static_cast<int>(rest);
            }
        }
    }
    size_t s = states - 1;
    while (s != 0) {
        out.member_indices.push_back(choice[s]);
        s = static_cast<size_t>(parent[s]);
    }
    std::sort(out.member_indices.begin(), out.member_indices.end());
    out.member_indices.erase(std::unique(out.member_indices.begin(), out.member_indices.end()),
                             out.member_indices.end());
    return out;
}

Pretopology subspace(const Pretopology& space, Mask a) {
    space.check_subset(a);
    if (a == 0) fail(Errc::empty_carrier, "subspace on the empty set");
    std::vector<int> pts;
    for_each_point(a, [&](int p) { pts.push_back(p); });
    int m = static_cast<int>(pts.size());
    std::vector<Mask> closure(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        Mask rel = space.singleton_closure(pts[static_cast<size_t>(i)]) & a;
        for (int j = 0; j < m; ++j)
            if (has(rel, pts[static_cast<size_t>(j)])) closure[static_cast<size_t>(i)] |= bit(j);
    }
    return Pretopology(std::move(closure));
}

// --- topologies -------------------------------------------------------------

Topology Topology::from_open_sets(int n, std::vector<Mask> opens) {
    if (n < 1) fail(Errc::empty_carrier, "carrier must be nonempty");
    Mask full = full_mask(n);
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    for (Mask o : opens)
        if (!subset_of(o, full)) fail(Errc::size_mismatch, "open set leaves the carrier");
    auto contains = [&](Mask m) { return std::binary_search(opens.begin(), opens.end(), m); };
    if (!contains(0) || !contains(full))
        fail(Errc::not_a_topology, "family must contain the empty set and the carrier");
    for (Mask o1 : opens)
        for (Mask o2 : opens) {
            if (!contains(o1 | o2)) fail(Errc::not_a_topology, "family not closed under union");
            if (!contains(o1 & o2)) fail(Errc::not_a_topology, "family not closed under intersection");
        }
    // minimal open set per point; finite intersections of opens are open
    std::vector<Mask> vmin(static_cast<size_t>(n), full);
    for (Mask o : opens)
        for_each_point(o, [&](int x) { vmin[static_cast<size_t>(x)] &= o; });
    Topology t;
    t.base_ = Pretopology::from_minimal_neighborhoods(std::move(vmin));
    t.opens_ = std::move(opens);
    // cross-check: the family is exactly the u-open sets of the base
    for (Mask o : t.opens_)
        if (!t.base_.is_open(o)) fail(Errc::not_a_topology, "family disagrees with its closure operator");
    return t;
}

Topology Topology::from_pretopology(const Pretopology& base) {
    if (!base.is_topological()) fail(Errc::not_a_topology, "closure operator is not idempotent");
    if (base.size() > kOpenSetEnumBound)
        fail(Errc::size_overflow, "open-set enumeration limited to " + std::to_string(kOpenSetEnumBound) + " points");
    std::vector<Mask> opens;
    Mask full = base.points();
    for (Mask a = 0;; ++a) {
        if (base.is_open(a)) opens.push_back(a);
        if (a == full) break;
    }
    Topology t;
    t.base_ = base;
    t.opens_ = std::move(opens);
    return t;
}

Topology topological_modification(const Pretopology& space) {
    if (space.size() > kOpenSetEnumBound)
        fail(Errc::size_overflow, "modification limited to " + std::to_string(kOpenSetEnumBound) + " points");
    std::vector<Mask> vmin(static_cast<size_t>(space.size()));
    for (int x = 0; x < space.size(); ++x) vmin[static_cast<size_t>(x)] = space.open_hull(x);
    return Topology::from_pretopology(Pretopology::from_minimal_neighborhoods(std::move(vmin)));
}

Pretopology theta_structure(const Topology& t) {
    // Closed neighbourhood filters are principal with minimal element
    // cl(U_x), U_x the minimal open set at x.
    std::vector<Mask> vmin(static_cast<size_t>(t.size()));
    for (int x = 0; x < t.size(); ++x)
        vmin[static_cast<size_t>(x)] = t.closure(t.minimal_open(x));
    return Pretopology::from_minimal_neighborhoods(std::move(vmin));
}

Topology semi_regularization(const Topology& t) {
    std::vector<Mask> generators;
    for (Mask o : t.open_sets()) generators.push_back(t.interior(t.closure(o)));
    Pretopology base = structure_from_subbase(t.size(), generators);
    return Topology::from_pretopology(base);
}

Topology theta_open_topology(const Topology& t) {
    return topological_modification(theta_structure(t));
}

Topology product_topology(const Topology& a, const Topology& b, int bound) {
    return Topology::from_pretopology(product(a.base(), b.base(), bound));
}

Topology sierpinski() {
    return Topology::from_open_sets(2, {0, bit(1), full_mask(2)});
}

Pretopology structure_from_subbase(int n, std::span<const Mask> generators) {
    if (n < 1) fail(Errc::empty_carrier, "carrier must be nonempty");
    Mask full = full_mask(n);
    std::vector<Mask> vmin(static_cast<size_t>(n), full);
    for (Mask g : generators) {
        if (!subset_of(g, full)) fail(Errc::size_mismatch, "generator leaves the carrier");
        for_each_point(g, [&](int x) { vmin[static_cast<size_t>(x)] &= g; });
    }
    return Pretopology::from_minimal_neighborhoods(std::move(vmin));
}

std::string describe(const Pretopology& space) {
    std::ostringstream os;
    os << "space(n=" << space.size() << ",u=[";
    for (int x = 0; x < space.size(); ++x) {
        if (x) os << ',';
        os << space.singleton_closure(x);
    }
    os << "])";
    return os.str();
}

std::string describe(const Topology& t) {
    std::ostringstream os;
    os << "top(n=" << t.size() << ",open=[";
    for (size_t i = 0; i < t.open_sets().size(); ++i) {
        if (i) os << ',';
        os << t.open_sets()[i];
    }
    os << "])";
    return os.str();
}

std::vector<Mask> coarseness_key(const Pretopology& space) {
    std::vector<Mask> key(static_cast<size_t>(space.size()));
    for (int x = 0; x < space.size(); ++x)
        key[static_cast<size_t>(x)] = space.points() & ~space.minimal_neighborhood(x);
    return key;
}

} // namespace pretop
