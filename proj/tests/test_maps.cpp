#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pretop/enumerate.hpp"
#include "pretop/maps.hpp"
#include "pretop/oracle.hpp"

using namespace pretop;

namespace {

Topology sp_top() { return sierpinski(); }
Pretopology sp() { return sierpinski().base(); }

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

} // namespace

TEST_CASE("pointwise continuity on the fixtures") {
    auto s = sp();
    CHECK(continuous_at(identity_map(s), 0));
    FiniteMap swap(s, s, {1, 0});
    CHECK(!continuous_at(swap, 0)); // swap(V(0)) = {0,1} not inside V(1) = {1}
    CHECK(continuous_at(swap, 1));  // swap(V(1)) = {0} inside V(0) = {0,1}
    CHECK(continuous(constant_map(s, s, 0)));
    CHECK(continuous(constant_map(s, s, 1)));
    CHECK(!continuous(swap));
    CHECK_THROWS_AS(continuous_at(swap, 7), Error);
}

TEST_CASE("pointwise form agrees with the definitional one exhaustively") {
    for (int nx = 1; nx <= 2; ++nx)
        for (int ny = 1; ny <= 2; ++ny)
            for_each_pretopology(nx, [&](const Pretopology& x) {
                for_each_pretopology(ny, [&](const Pretopology& y) {
                    every_image_tuple(nx, ny, [&](std::span<const int> im) {
                        for (int p = 0; p < nx; ++p)
                            CHECK(continuous_at(x, y, im, p) ==
                                  oracle::continuous_at_definitional(x, y, im, p));
                    });
                });
            });
}

TEST_CASE("global continuity equals both powerset characterizations") {
    // full map space at n = 2
    for_each_pretopology(2, [&](const Pretopology& x) {
        for_each_pretopology(2, [&](const Pretopology& y) {
            every_image_tuple(2, 2, [&](std::span<const int> im) {
                bool fast = continuous(x, y, im);
                CHECK(fast == oracle::continuous_image_form(x, y, im));
                CHECK(fast == oracle::continuous_preimage_form(x, y, im));
            });
        });
    });
    // all 27 maps for a sample of 3-point space pairs
    std::vector<Pretopology> samples = {Pretopology::discrete(3), Pretopology::indiscrete(3),
                                        Pretopology({0b011, 0b110, 0b100}),
                                        Pretopology({0b111, 0b010, 0b110})};
    for (const auto& x : samples)
        for (const auto& y : samples)
            every_image_tuple(3, 3, [&](std::span<const int> im) {
                bool fast = continuous(x, y, im);
                CHECK(fast == oracle::continuous_image_form(x, y, im));
                CHECK(fast == oracle::continuous_preimage_form(x, y, im));
            });
}

TEST_CASE("maps out of a discrete domain are continuous") {
    auto d3 = Pretopology::discrete(3);
    for_each_pretopology(2, [&](const Pretopology& y) {
        every_image_tuple(3, 2, [&](std::span<const int> im) { CHECK(continuous(d3, y, im)); });
    });
}

TEST_CASE("composition") {
    auto s = sp();
    auto id = identity_map(s);
    CHECK(compose(id, id).images == id.images);
    auto const0 = constant_map(s, s, 0);
    CHECK(compose(const0, id).images == const0.images);
    // first argument applied first, so anything followed by a constant is that constant
    FiniteMap swap(s, s, {1, 0});
    CHECK(compose(swap, const0).images == const0.images);
    CHECK_THROWS_AS(compose(id, identity_map(Pretopology::discrete(3))), Error);

    // continuity is preserved under composition, exhaustively at n=2
    for_each_pretopology(2, [&](const Pretopology& x) {
        for_each_pretopology(2, [&](const Pretopology& y) {
            for_each_pretopology(2, [&](const Pretopology& z) {
                every_image_tuple(2, 2, [&](std::span<const int> fim) {
                    if (!continuous(x, y, fim)) return;
                    FiniteMap f(x, y, std::vector<int>(fim.begin(), fim.end()));
                    every_image_tuple(2, 2, [&](std::span<const int> gim) {
                        if (!continuous(y, z, gim)) return;
                        FiniteMap g(y, z, std::vector<int>(gim.begin(), gim.end()));
                        CHECK(continuous(compose(f, g)));
                    });
                });
            });
        });
    });
}

TEST_CASE("projections and maps into products") {
    auto s = sp();
    CHECK(continuous(projection(s, s, 0)));
    CHECK(continuous(projection(s, s, 1)));

    // a map into a product is continuous iff both projection composites are
    for_each_pretopology(2, [&](const Pretopology& x) {
        for_each_pretopology(2, [&](const Pretopology& y1) {
            for_each_pretopology(2, [&](const Pretopology& y2) {
                Pretopology prod = product(y1, y2);
                auto pi1 = projection(y1, y2, 0), pi2 = projection(y1, y2, 1);
                every_image_tuple(2, 4, [&](std::span<const int> im) {
                    FiniteMap f(x, prod, std::vector<int>(im.begin(), im.end()));
                    CHECK(continuous(f) ==
                          (continuous(compose(f, pi1)) && continuous(compose(f, pi2))));
                });
            });
        });
    });
}

TEST_CASE("products of continuous maps are continuous") {
    for_each_pretopology(2, [&](const Pretopology& x1) {
        for_each_pretopology(2, [&](const Pretopology& y1) {
            every_image_tuple(2, 2, [&](std::span<const int> im1) {
                if (!continuous(x1, y1, im1)) return;
                FiniteMap f1(x1, y1, std::vector<int>(im1.begin(), im1.end()));
                for_each_pretopology(2, [&](const Pretopology& x2) {
                    for_each_pretopology(2, [&](const Pretopology& y2) {
                        every_image_tuple(2, 2, [&](std::span<const int> im2) {
                            if (!continuous(x2, y2, im2)) return;
                            FiniteMap f2(x2, y2, std::vector<int>(im2.begin(), im2.end()));
                            CHECK(continuous(product_map(f1, f2)));
                        });
                    });
                });
            });
        });
    });
}

TEST_CASE("restrictions of continuous maps stay continuous") {
    for_each_pretopology(3, [&](const Pretopology& x) {
        for_each_pretopology(2, [&](const Pretopology& y) {
            every_image_tuple(3, 2, [&](std::span<const int> im) {
                if (!continuous(x, y, im)) return;
                FiniteMap f(x, y, std::vector<int>(im.begin(), im.end()));
                for (Mask a = 1; a <= x.points(); ++a) CHECK(continuous(restrict_map(f, a)));
            });
        });
    });
}

TEST_CASE("theta continuity of the swap map") {
    CHECK(theta_continuous(sp_top(), sp_top(), std::vector<int>{1, 0}));
    Topology d = Topology::from_pretopology(Pretopology::discrete(2));
    CHECK(theta_continuous(d, d, std::vector<int>{0, 1}));
}

TEST_CASE("theta continuity routes agree on all small topologies") {
    for (int nx = 1; nx <= 2; ++nx)
        for (int ny = 1; ny <= 2; ++ny)
            for (const auto& x : enumerate_topologies(nx))
                for (const auto& y : enumerate_topologies(ny))
                    every_image_tuple(nx, ny, [&](std::span<const int> im) {
                        bool primary = theta_continuous(x, y, im);
                        CHECK(primary == oracle::theta_continuous_direct(x, y, im));
                        CHECK(primary == oracle::theta_continuous_closure_form(x, y, im));
                        CHECK(primary == oracle::theta_continuous_preimage_form(x, y, im));
                    });
}

TEST_CASE("classification profiles") {
    auto t = sp_top();
    auto id_profile = classify(t, t, std::vector<int>{0, 1});
    CHECK(id_profile.continuous);
    CHECK(!id_profile.super_continuous); // semi-regularization of the domain is indiscrete
    CHECK(id_profile.weakly_continuous);
    CHECK(id_profile.implications_hold());

    auto swap_profile = classify(t, t, std::vector<int>{1, 0});
    CHECK(!swap_profile.continuous);
    CHECK(swap_profile.theta_continuous);
    CHECK(swap_profile.implications_hold());

    for (int v = 0; v < 2; ++v) {
        auto const_profile = classify(t, t, std::vector<int>(2, v));
        CHECK(const_profile.continuous);
        CHECK(const_profile.theta_continuous);
        CHECK(const_profile.strongly_theta_continuous);
        CHECK(const_profile.weakly_continuous);
        CHECK(const_profile.weakly_theta_continuous);
        CHECK(const_profile.super_continuous);
    }
}

TEST_CASE("implication lattice holds on every pair of small topologies") {
    for (int nx = 1; nx <= 2; ++nx)
        for (int ny = 1; ny <= 2; ++ny)
            for (const auto& x : enumerate_topologies(nx))
                for (const auto& y : enumerate_topologies(ny))
                    every_image_tuple(nx, ny, [&](std::span<const int> im) {
                        CHECK(classify(x, y, im).implications_hold());
                    });
}

TEST_CASE("theta product criterion at two-point factors") {
    for (const auto& z : enumerate_topologies(2))
        for (const auto& x : enumerate_topologies(2))
            for (const auto& y : enumerate_topologies(2)) {
                Topology prod = product_topology(z, x);
                Pretopology theta_factors = product(theta_structure(z), theta_structure(x));
                Pretopology theta_y = theta_structure(y);
                every_image_tuple(4, 2, [&](std::span<const int> im) {
                    CHECK(theta_continuous(prod, y, im) == continuous(theta_factors, theta_y, im));
                });
            }
}
