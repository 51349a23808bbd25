#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pretop/enumerate.hpp"
#include "pretop/oracle.hpp"
#include "pretop/space.hpp"

using namespace pretop;

namespace {

Pretopology sp() { return sierpinski().base(); } // u({0})={0}, u({1})={0,1}

Pretopology p3() { return Pretopology({0b011, 0b110, 0b100}); } // non-idempotent 3-point fixture

} // namespace

TEST_CASE("closure axiom validation") {
    auto ok = verify_closure_axioms(2, {0b01, 0b11});
    REQUIRE(ok.ok());
    CHECK(*ok.space == sp());

    auto bad = verify_closure_axioms(2, {0b10, 0b10}); // 0 not in u({0})
    CHECK(!bad.ok());
    REQUIRE(bad.violations.size() == 1);
    CHECK(bad.violations[0].kind == ClosureViolation::c2_missing_point);
    CHECK(bad.violations[0].point == 0);

    auto discrete = verify_closure_axioms(2, {0b01, 0b10});
    REQUIRE(discrete.ok());
    CHECK(discrete.space->is_topological());

    auto oversized = verify_closure_axioms(2, {0b101, 0b10}); // bit beyond the carrier
    CHECK(!oversized.ok());
    CHECK(oversized.violations[0].kind == ClosureViolation::bad_subset);

    CHECK_THROWS_AS(Pretopology(std::vector<Mask>{}), Error);
}

TEST_CASE("closure and interior on the fixtures") {
    auto space = p3();
    CHECK(space.closure(0b001) == 0b011); // u({0}) = {0,1}
    CHECK(space.closure(0b011) == 0b111); // additive extension
    CHECK(space.closure(0) == 0);

    auto s = sp();
    CHECK(s.interior(0b10) == 0b10); // int {1} = {1}
    CHECK(s.interior(0b01) == 0);    // int {0} = {}
    CHECK(s.interior(s.points()) == s.points());

    CHECK_THROWS_AS(s.closure(0b100), Error); // SizeMismatch
}

TEST_CASE("minimal neighborhoods") {
    auto s = sp();
    CHECK(s.minimal_neighborhood(0) == 0b11);
    CHECK(s.minimal_neighborhood(1) == 0b10);
    CHECK(Pretopology::discrete(2).minimal_neighborhood(0) == 0b01);
    CHECK_THROWS_AS(s.minimal_neighborhood(2), Error);

    auto space = p3();
    CHECK(space.minimal_neighborhood(0) == 0b001);
    CHECK(space.minimal_neighborhood(1) == 0b011);
    CHECK(space.minimal_neighborhood(2) == 0b110);
}

TEST_CASE("axioms, duality and principality hold exhaustively at n<=3") {
    for (int n = 1; n <= 3; ++n)
        for_each_pretopology(n, [&](const Pretopology& space) {
            CHECK(oracle::closure_axioms_hold(space));
            CHECK(oracle::interior_duality_holds(space));
            CHECK(oracle::neighborhood_filters_principal(space));
        });
}

TEST_CASE("comparison of closure structures") {
    auto d2 = Pretopology::discrete(2), i2 = Pretopology::indiscrete(2), s = sp();
    CHECK(compare(i2, d2) == SpaceOrder::coarser);
    CHECK(compare(s, d2) == SpaceOrder::coarser);
    CHECK(compare(s, s) == SpaceOrder::equal);
    CHECK(compare(d2, i2) == SpaceOrder::finer);
    CHECK_THROWS_AS(compare(d2, Pretopology::discrete(3)), Error);

    // singleton criterion agrees with the full powerset comparison and with
    // neighbourhood inclusion, exhaustively
    for_each_pretopology(3, [&](const Pretopology& a) {
        for_each_pretopology(3, [&](const Pretopology& b) {
            SpaceOrder fast = compare(a, b);
            CHECK(fast == oracle::compare_powerset(a, b));
            bool le = true;
            for (int x = 0; x < 3; ++x)
                if (!subset_of(b.minimal_neighborhood(x), a.minimal_neighborhood(x))) le = false;
            CHECK(le == (fast == SpaceOrder::coarser || fast == SpaceOrder::equal));
        });
    });
}

TEST_CASE("meet and join") {
    auto d2 = Pretopology::discrete(2), s = sp();
    const Pretopology pair[] = {d2, s};
    CHECK(meet(pair) == s);
    CHECK(join(pair) == d2);
    const Pretopology single[] = {s};
    CHECK(meet(single) == s);
    CHECK_THROWS_AS(meet(std::span<const Pretopology>{}), Error);

    // lattice laws on all pairs at n=2
    for_each_pretopology(2, [&](const Pretopology& a) {
        for_each_pretopology(2, [&](const Pretopology& b) {
            const Pretopology fam[] = {a, b};
            Pretopology lo = meet(fam), hi = join(fam);
            for (const auto& m : fam) {
                auto o = compare(lo, m);
                CHECK((o == SpaceOrder::coarser || o == SpaceOrder::equal));
                auto o2 = compare(m, hi);
                CHECK((o2 == SpaceOrder::coarser || o2 == SpaceOrder::equal));
            }
            const Pretopology absorb[] = {hi, a};
            CHECK(meet(absorb) == a); // meet(join(a,b), a) = a
        });
    });
}

TEST_CASE("products") {
    auto s = sp();
    Pretopology prod = product(s, s);
    REQUIRE(prod.size() == 4);
    // minimal neighbourhood of (0,0) is V(0) x V(0) = everything
    CHECK(prod.minimal_neighborhood(0) == 0b1111);
    // u({(1,1)}) = u({1}) x u({1}) = everything; index (1,1) = 3
    CHECK(prod.singleton_closure(3) == 0b1111);
    CHECK(product(Pretopology::discrete(2), Pretopology::discrete(2)) == Pretopology::discrete(4));
    CHECK_THROWS_AS(product(Pretopology::discrete(5), Pretopology::discrete(5), 16), Error);

    // membership rule oracle: (a,b) in u({(c,d)}) iff coordinatewise
    for_each_pretopology(2, [&](const Pretopology& a) {
        for_each_pretopology(2, [&](const Pretopology& b) {
            Pretopology pr = product(a, b);
            for (int p = 0; p < 4; ++p)
                for (int q = 0; q < 4; ++q) {
                    bool expect = has(a.singleton_closure(p / 2), q / 2) &&
                                  has(b.singleton_closure(p % 2), q % 2);
                    CHECK(has(pr.singleton_closure(p), q) == expect);
                }
        });
    });
}

TEST_CASE("regularity three ways") {
    CHECK(is_regular(Pretopology::discrete(2)));
    CHECK(is_regular(Pretopology::indiscrete(2)));
    CHECK(!is_regular(p3())); // u(V(1)) = u({0,1}) = X not inside {0,1}

    for (int n = 1; n <= 3; ++n)
        for_each_pretopology(n, [&](const Pretopology& space) {
            bool fast = is_regular(space);
            CHECK(fast == oracle::regular_separation_form(space));
            CHECK(fast == oracle::regular_shrinking_form(space));
        });
}

TEST_CASE("compact subcovers") {
    auto space = p3();
    // singleton-neighbourhood supersets: every set with nonempty interior
    std::vector<Mask> family;
    for (Mask g = 0; g <= space.points(); ++g)
        if (space.interior(g) != 0) family.push_back(g);
    auto wit = compact_subcover(space, family, space.points());
    CHECK(wit.compact);
    CHECK(wit.member_indices.size() == 1); // X itself covers

    std::vector<Mask> whole = {space.points()};
    auto empty_target = compact_subcover(space, whole, 0);
    CHECK(empty_target.member_indices.empty());

    auto s = sp();
    std::vector<Mask> cover01 = {0b11};
    auto w2 = compact_subcover(s, cover01, 0b01);
    CHECK(w2.member_indices == std::vector<int>{0});

    std::vector<Mask> not_cover = {0b01}; // int {0} = {} in Sierpinski
    CHECK_THROWS_AS(compact_subcover(s, not_cover, 0b01), Error);

    // minimality against brute force on every interior cover at n=2
    for_each_pretopology(2, [&](const Pretopology& sp2) {
        std::vector<Mask> members;
        for (Mask g = 0; g <= sp2.points(); ++g) members.push_back(g);
        for (Mask target = 0; target <= sp2.points(); ++target) {
            if (!is_interior_cover(sp2, members, target)) continue;
            auto witness = compact_subcover(sp2, members, target);
            size_t best = members.size() + 1;
            for (std::uint32_t pick = 0; pick < (1u << members.size()); ++pick) {
                Mask covered = 0;
                for (size_t i = 0; i < members.size(); ++i)
                    if (pick >> i & 1) covered |= sp2.interior(members[i]);
                if (subset_of(target, covered))
                    best = std::min(best, static_cast<size_t>(popcount(pick)));
            }
            CHECK(witness.member_indices.size() == best);
        }
    });
}

TEST_CASE("subspaces relativize closures") {
    auto space = p3();
    Pretopology sub = subspace(space, 0b011); // points {0,1}
    CHECK(sub.size() == 2);
    CHECK(sub.singleton_closure(0) == 0b11); // u({0}) & {0,1} = {0,1}
    CHECK(sub.singleton_closure(1) == 0b10); // u({1}) & {0,1} = {1}
}

TEST_CASE("topological modification") {
    Topology t = topological_modification(p3());
    CHECK(t.open_sets() == std::vector<Mask>{0, 0b001, 0b011, 0b111});
    CHECK(topological_modification(Pretopology::discrete(2)).open_sets().size() == 4);
    CHECK(topological_modification(Pretopology::indiscrete(2)).open_sets().size() == 2);

    // finest topology coarser than the input: coarser than u, and every
    // topology coarser than u is coarser than it (exhaustive n<=3)
    for (int n = 1; n <= 3; ++n)
        for_each_pretopology(n, [&](const Pretopology& space) {
            Topology mod = topological_modification(space);
            auto o = compare(mod.base(), space);
            CHECK((o == SpaceOrder::coarser || o == SpaceOrder::equal));
            for (const auto& cand : enumerate_topologies(n)) {
                auto oc = compare(cand.base(), space);
                if (oc == SpaceOrder::coarser || oc == SpaceOrder::equal) {
                    auto om = compare(cand.base(), mod.base());
                    CHECK((om == SpaceOrder::coarser || om == SpaceOrder::equal));
                }
            }
        });
}

TEST_CASE("theta structure") {
    CHECK(theta_structure(sierpinski()) == Pretopology::indiscrete(2));
    CHECK(theta_structure(Topology::from_pretopology(Pretopology::discrete(3))) ==
          Pretopology::discrete(3));
    Topology chain = Topology::from_open_sets(3, {0, 0b001, 0b011, 0b111});
    CHECK(theta_structure(chain) == Pretopology::indiscrete(3));

    // dual route: closed-neighbourhood quantification, every topology n<=3
    for (int n = 1; n <= 3; ++n)
        for (const auto& t : enumerate_topologies(n)) {
            Pretopology theta = theta_structure(t);
            for (Mask a = 0; a <= t.base().points(); ++a)
                CHECK(theta.closure(a) == oracle::theta_closure_direct(t, a));
        }
}

TEST_CASE("theta commutes with binary products") {
    for (int na = 2; na <= 3; ++na)
        for (int nb = 2; nb <= 3; ++nb)
            for (const auto& a : enumerate_topologies(na))
                for (const auto& b : enumerate_topologies(nb)) {
                    Topology prod = product_topology(a, b);
                    CHECK(theta_structure(prod) == product(theta_structure(a), theta_structure(b)));
                }
}

TEST_CASE("theta structures can fail idempotence") {
    // opens {}, {0}, {1}, {0,1}, X on three points
    Topology t = Topology::from_open_sets(3, {0, 0b001, 0b010, 0b011, 0b111});
    Pretopology theta = theta_structure(t);
    CHECK(!theta.is_topological());
    CHECK(theta.closure(theta.closure(0b010)) != theta.closure(0b010));
}

TEST_CASE("semi-regularization") {
    CHECK(semi_regularization(sierpinski()).open_sets() == std::vector<Mask>{0, 0b11});
    Topology d = Topology::from_pretopology(Pretopology::discrete(2));
    CHECK(semi_regularization(d) == d);
    Topology i = Topology::from_pretopology(Pretopology::indiscrete(2));
    CHECK(semi_regularization(i) == i);

    for (int n = 1; n <= 3; ++n)
        for (const auto& t : enumerate_topologies(n)) {
            auto o = compare(semi_regularization(t).base(), t.base());
            CHECK((o == SpaceOrder::coarser || o == SpaceOrder::equal));
        }
}

TEST_CASE("theta-open topology") {
    CHECK(theta_open_topology(sierpinski()).open_sets() == std::vector<Mask>{0, 0b11});
    Topology d = Topology::from_pretopology(Pretopology::discrete(3));
    CHECK(theta_open_topology(d) == d);
    Topology chain = Topology::from_open_sets(3, {0, 0b001, 0b011, 0b111});
    CHECK(theta_open_topology(chain).open_sets() == std::vector<Mask>{0, 0b111});

    for (int n = 1; n <= 3; ++n)
        for (const auto& t : enumerate_topologies(n))
            CHECK(theta_open_topology(t).open_sets() == oracle::theta_open_sets_direct(t));
}

TEST_CASE("topology construction validates families") {
    CHECK_THROWS_AS(Topology::from_open_sets(2, {0}), Error);              // missing X
    CHECK_THROWS_AS(Topology::from_open_sets(3, {0, 0b001, 0b010, 0b111}), Error); // no union
    CHECK_THROWS_AS(Topology::from_pretopology(p3()), Error);              // not idempotent
    Topology t = Topology::from_open_sets(2, {0, 0b10, 0b11});
    CHECK(t.base() == sp());
}
