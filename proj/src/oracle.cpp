#include "pretop/oracle.hpp"

#include "pretop/enumerate.hpp"

namespace pretop::oracle {

namespace {

Mask image_of(std::span<const int> images, Mask a) {
    Mask out = 0;
    for_each_point(a, [&](int x) { out |= bit(images[static_cast<size_t>(x)]); });
    return out;
}

Mask preimage_of(std::span<const int> images, Mask b) {
    Mask out = 0;
    for (size_t x = 0; x < images.size(); ++x)
        if (has(b, images[x])) out |= bit(static_cast<int>(x));
    return out;
}

template <class Fn>
bool all_subsets(int n, Fn&& fn) {
    Mask full = full_mask(n);
    for (Mask a = 0;; ++a) {
        if (!fn(a)) return false;
        if (a == full) break;
    }
    return true;
}

// Odometer over all image tuples of a given length.
template <class Fn>
void all_maps(int domain_size, int codomain_size, Fn&& fn) {
    std::vector<int> im(static_cast<size_t>(domain_size), 0);
    for (;;) {
        fn(std::span<const int>(im));
        int k = domain_size - 1;
        while (k >= 0 && im[static_cast<size_t>(k)] == codomain_size - 1) {
            im[static_cast<size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
        ++im[static_cast<size_t>(k)];
    }
}

} // namespace

bool closure_axioms_hold(const Pretopology& space) {
    if (space.closure(0) != 0) return false;
    int n = space.size();
    return all_subsets(n, [&](Mask a) {
        if (!subset_of(a, space.closure(a))) return false;
        return all_subsets(n, [&](Mask b) {
            return space.closure(a | b) == (space.closure(a) | space.closure(b));
        });
    });
}

bool interior_duality_holds(const Pretopology& space) {
    // Independent route: interior as the set of points whose minimal
    // neighbourhood fits inside.
    return all_subsets(space.size(), [&](Mask a) {
        Mask direct = 0;
        for (int x = 0; x < space.size(); ++x)
            if (subset_of(space.minimal_neighborhood(x), a)) direct |= bit(x);
        return direct == space.interior(a);
    });
}

bool neighborhood_filters_principal(const Pretopology& space) {
    return all_subsets(space.size(), [&](Mask u) {
        for (int x = 0; x < space.size(); ++x) {
            bool nbhd = space.is_neighborhood(u, x);
            bool principal = subset_of(space.minimal_neighborhood(x), u);
            if (nbhd != principal) return false;
        }
        return true;
    });
}

SpaceOrder compare_powerset(const Pretopology& u1, const Pretopology& u2) {
    if (u1.size() != u2.size()) fail(Errc::carrier_mismatch, "comparing spaces on different carriers");
    bool le = true, ge = true;
    all_subsets(u1.size(), [&](Mask a) {
        Mask c1 = u1.closure(a), c2 = u2.closure(a);
        if (!subset_of(c2, c1)) le = false;
        if (!subset_of(c1, c2)) ge = false;
        return true;
    });
    if (le && ge) return SpaceOrder::equal;
    if (le) return SpaceOrder::coarser;
    if (ge) return SpaceOrder::finer;
    return SpaceOrder::incomparable;
}

bool continuous_at_definitional(const Pretopology& x_space, const Pretopology& y_space,
                                std::span<const int> images, int x) {
    return all_subsets(x_space.size(), [&](Mask a) {
        if (!has(x_space.closure(a), x)) return true;
        return has(y_space.closure(image_of(images, a)), images[static_cast<size_t>(x)]);
    });
}

bool continuous_image_form(const Pretopology& x_space, const Pretopology& y_space,
                           std::span<const int> images) {
    return all_subsets(x_space.size(), [&](Mask a) {
        return subset_of(image_of(images, x_space.closure(a)),
                         y_space.closure(image_of(images, a)));
    });
}

bool continuous_preimage_form(const Pretopology& x_space, const Pretopology& y_space,
                              std::span<const int> images) {
    return all_subsets(y_space.size(), [&](Mask b) {
        return subset_of(x_space.closure(preimage_of(images, b)),
                         preimage_of(images, y_space.closure(b)));
    });
}

bool regular_separation_form(const Pretopology& space) {
    int n = space.size();
    for (int x = 0; x < n; ++x) {
        bool ok = all_subsets(n, [&](Mask a) {
            if (has(space.closure(a), x)) return true;
            // need disjoint neighbourhoods of x and of A
            bool found = false;
            all_subsets(n, [&](Mask u) {
                if (found || !space.is_neighborhood(u, x)) return true;
                all_subsets(n, [&](Mask w) {
                    if (!found && subset_of(a, space.interior(w)) && (u & w) == 0) found = true;
                    return true;
                });
                return true;
            });
            return found;
        });
        if (!ok) return false;
    }
    return true;
}

bool regular_shrinking_form(const Pretopology& space) {
    int n = space.size();
    for (int x = 0; x < n; ++x) {
        bool ok = all_subsets(n, [&](Mask u) {
            if (!space.is_neighborhood(u, x)) return true;
            bool found = false;
            all_subsets(n, [&](Mask u1) {
                if (!found && space.is_neighborhood(u1, x) && subset_of(space.closure(u1), u))
                    found = true;
                return true;
            });
            return found;
        });
        if (!ok) return false;
    }
    return true;
}

Mask theta_closure_direct(const Topology& t, Mask a) {
    t.base().check_subset(a);
    int n = t.size();
    Mask out = 0;
    for (int x = 0; x < n; ++x) {
        bool every_closed_nbhd_meets = true;
        all_subsets(n, [&](Mask w) {
            if (!t.base().is_closed(w) || !t.base().is_neighborhood(w, x)) return true;
            if ((w & a) == 0) every_closed_nbhd_meets = false;
            return true;
        });
        if (every_closed_nbhd_meets) out |= bit(x);
    }
    return out;
}

std::vector<Mask> theta_open_sets_direct(const Topology& t) {
    std::vector<Mask> out;
    int n = t.size();
    all_subsets(n, [&](Mask a) {
        bool theta_open = true;
        for_each_point(a, [&](int x) {
            bool found = false;
            for (Mask u : t.open_sets())
                if (has(u, x) && subset_of(t.closure(u), a)) {
                    found = true;
                    break;
                }
            if (!found) theta_open = false;
        });
        if (theta_open) out.push_back(a);
        return true;
    });
    return out;
}

bool theta_continuous_direct(const Topology& x_top, const Topology& y_top,
                             std::span<const int> images) {
    int nx = x_top.size(), ny = y_top.size();
    for (int x = 0; x < nx; ++x) {
        int fx = images[static_cast<size_t>(x)];
        bool ok = all_subsets(ny, [&](Mask v) {
            if (!y_top.base().is_neighborhood(v, fx)) return true;
            Mask cl_v = y_top.closure(v);
            bool found = false;
            all_subsets(nx, [&](Mask u) {
                if (!found && x_top.base().is_neighborhood(u, x) &&
                    subset_of(image_of(images, x_top.closure(u)), cl_v))
                    found = true;
                return true;
            });
            return found;
        });
        if (!ok) return false;
    }
    return true;
}

bool theta_continuous_closure_form(const Topology& x_top, const Topology& y_top,
                                   std::span<const int> images) {
    return all_subsets(x_top.size(), [&](Mask a) {
        return subset_of(image_of(images, theta_closure_direct(x_top, a)),
                         theta_closure_direct(y_top, image_of(images, a)));
    });
}

bool theta_continuous_preimage_form(const Topology& x_top, const Topology& y_top,
                                    std::span<const int> images) {
    return all_subsets(y_top.size(), [&](Mask b) {
        return subset_of(theta_closure_direct(x_top, preimage_of(images, b)),
                         preimage_of(images, theta_closure_direct(y_top, b)));
    });
}

bool admissible_via_product(const FunctionSpace& fs, const Pretopology& sigma) {
    return continuous(evaluation_map(fs, sigma));
}

bool admissible_definitional(const FunctionSpace& fs, const Pretopology& sigma, int max_z) {
    if (fs.count() == 0) return true;
    check_sigma(fs, sigma);
    for (int nz = 1; nz <= max_z; ++nz) {
        bool ok = true;
        for_each_pretopology(nz, [&](const Pretopology& z_space) {
            if (!ok) return;
            Pretopology prod = product(z_space, fs.domain, kMaxPoints);
            all_maps(nz, fs.count(), [&](std::span<const int> h) {
                if (!ok || !continuous(z_space, sigma, h)) return;
                if (!continuous(prod, fs.codomain, uncurry_images(fs, h))) ok = false;
            });
        });
        if (!ok) return false;
    }
    return true;
}

bool proper_definitional(const FunctionSpace& fs, const Pretopology& sigma, int max_z) {
    if (fs.count() == 0) return true;
    check_sigma(fs, sigma);
    for (int nz = 1; nz <= max_z; ++nz) {
        bool ok = true;
        for_each_pretopology(nz, [&](const Pretopology& z_space) {
            if (!ok) return;
            Pretopology prod = product(z_space, fs.domain, kMaxPoints);
            all_maps(prod.size(), fs.codomain.size(), [&](std::span<const int> g) {
                if (!ok || !continuous(prod, fs.codomain, g)) return;
                // sections of a jointly continuous map are continuous
                if (!continuous(z_space, sigma, curry_images(fs, g, nz))) ok = false;
            });
        });
        if (!ok) return false;
    }
    return true;
}

static bool proper_against(const FunctionSpace& fs, const Pretopology& sigma,
                           const Pretopology& z_space) {
    Pretopology prod = product(z_space, fs.domain, kMaxPoints);
    bool ok = true;
    all_maps(prod.size(), fs.codomain.size(), [&](std::span<const int> g) {
        if (!ok || !continuous(prod, fs.codomain, g)) return;
        if (!continuous(z_space, sigma, curry_images(fs, g, z_space.size()))) ok = false;
    });
    return ok;
}

bool proper_sierpinski_reduction(const FunctionSpace& fs, const Pretopology& sigma) {
    if (fs.count() == 0) return true;
    check_sigma(fs, sigma);
    return proper_against(fs, sigma, sierpinski().base());
}

bool proper_one_nonisolated_reduction(const FunctionSpace& fs, const Pretopology& sigma, int max_z) {
    if (fs.count() == 0) return true;
    check_sigma(fs, sigma);
    for (int nz = 1; nz <= max_z; ++nz) {
        for (const Topology& z : enumerate_topologies(nz)) {
            int non_isolated = 0;
            for (int p = 0; p < nz; ++p)
                if (!z.base().is_open(bit(p))) ++non_isolated;
            if (non_isolated > 1) continue;
            if (!proper_against(fs, sigma, z.base())) return false;
        }
    }
    return true;
}

// --- sequence forms ---------------------------------------------------------

bool cc_tail_quantifier_form(const FunctionSpace& fs, const PointSequence& seq, int f) {
    fs.check_index(f);
    int nx = fs.domain.size(), ny = fs.codomain.size();
    int pre = seq.preperiod(), p = seq.period();
    int horizon = pre + 2 * p;
    auto fim = fs.images(f);
    for (int x = 0; x < nx; ++x) {
        int fx = fim[static_cast<size_t>(x)];
        bool ok = all_subsets(ny, [&](Mask v) {
            if (!fs.codomain.is_neighborhood(v, fx)) return true;
            bool found = false;
            all_subsets(nx, [&](Mask u) {
                if (found || !fs.domain.is_neighborhood(u, x)) return true;
                for (int k0 = 0; k0 <= pre + p && !found; ++k0) {
                    bool tail_ok = true;
                    for (int k = k0; k < horizon && tail_ok; ++k) {
                        auto gim = fs.images(seq.at(k));
                        for_each_point(u, [&](int z) {
                            if (!has(v, gim[static_cast<size_t>(z)])) tail_ok = false;
                        });
                    }
                    if (tail_ok) found = true;
                }
                return true;
            });
            return found;
        });
        if (!ok) return false;
    }
    return true;
}

static bool limsup_criterion(const FunctionSpace& fs, const PointSequence& seq, int f, Mask b) {
    std::vector<Mask> pre, cyc;
    for (int g : seq.prefix) pre.push_back(preimage_of(fs.images(g), b));
    for (int g : seq.cycle) cyc.push_back(preimage_of(fs.images(g), b));
    SubsetSequence preimages(std::move(pre), std::move(cyc));
    Mask limit = upper_limit(fs.domain, preimages);
    return subset_of(limit, preimage_of(fs.images(f), fs.codomain.closure(b)));
}

bool cc_upper_limit_all_sets(const FunctionSpace& fs, const PointSequence& seq, int f) {
    fs.check_index(f);
    return all_subsets(fs.codomain.size(), [&](Mask b) { return limsup_criterion(fs, seq, f, b); });
}

bool cc_upper_limit_basic_complements(const FunctionSpace& fs, const PointSequence& seq, int f) {
    fs.check_index(f);
    Mask full = fs.codomain.points();
    for (int y = 0; y < fs.codomain.size(); ++y)
        if (!limsup_criterion(fs, seq, f, full & ~fs.codomain.minimal_neighborhood(y))) return false;
    return true;
}

bool cc_upper_limit_closed_sets(const FunctionSpace& fs, const PointSequence& seq, int f) {
    fs.check_index(f);
    return all_subsets(fs.codomain.size(), [&](Mask b) {
        if (!fs.codomain.is_closed(b)) return true;
        return limsup_criterion(fs, seq, f, b);
    });
}

bool converges_definitional(const Pretopology& space, const PointSequence& seq, int x) {
    space.check_point(x);
    int pre = seq.preperiod(), p = seq.period();
    int horizon = pre + 2 * p;
    return all_subsets(space.size(), [&](Mask u) {
        if (!space.is_neighborhood(u, x)) return true;
        for (int k0 = 0; k0 <= pre + p; ++k0) {
            bool tail_in = true;
            for (int k = k0; k < horizon && tail_in; ++k)
                if (!has(u, seq.at(k))) tail_in = false;
            if (tail_in) return true;
        }
        return false;
    });
}

bool accumulates_definitional(const Pretopology& space, const PointSequence& seq, int x) {
    space.check_point(x);
    int pre = seq.preperiod(), p = seq.period();
    int horizon = pre + 2 * p; // one full period past every quantifier start
    return all_subsets(space.size(), [&](Mask u) {
        if (!space.is_neighborhood(u, x)) return true;
        for (int k0 = 0; k0 <= pre + p; ++k0) {
            bool hit = false;
            for (int k = k0; k < horizon && !hit; ++k)
                if (has(u, seq.at(k))) hit = true;
            if (!hit) return false;
        }
        return true;
    });
}

Mask upper_limit_definitional(const Pretopology& space, const SubsetSequence& seq) {
    int pre = seq.preperiod(), p = seq.period();
    int horizon = pre + 2 * p;
    Mask out = 0;
    for (int x = 0; x < space.size(); ++x) {
        bool frequent = all_subsets(space.size(), [&](Mask u) {
            if (!space.is_neighborhood(u, x)) return true;
            for (int k0 = 0; k0 <= pre + p; ++k0) {
                bool hit = false;
                for (int k = k0; k < horizon && !hit; ++k)
                    if (seq.at(k) & u) hit = true;
                if (!hit) return false;
            }
            return true;
        });
        if (frequent) out |= bit(x);
    }
    return out;
}

} // namespace pretop::oracle
