#pragma once

// Total maps between finite closure spaces and the continuity predicates,
// including the continuity-like classes obtained by swapping in the theta
// or semi-regularization structures on either side.

#include <span>
#include <string>
#include <vector>

#include "pretop/space.hpp"

namespace pretop {

struct FiniteMap {
    Pretopology domain;
    Pretopology codomain;
    std::vector<int> images; // one codomain point per domain point

    FiniteMap(Pretopology dom, Pretopology cod, std::vector<int> im);

    int operator()(int x) const { return images[static_cast<size_t>(x)]; }
    Mask image_of(Mask a) const;
    Mask preimage_of(Mask b) const;
};

FiniteMap identity_map(const Pretopology& space);
FiniteMap constant_map(const Pretopology& domain, const Pretopology& codomain, int value);

// Fast kernels over raw image tuples; the FiniteMap overloads wrap these.
bool continuous_at(const Pretopology& x_space, const Pretopology& y_space,
                   std::span<const int> images, int x);
bool continuous(const Pretopology& x_space, const Pretopology& y_space,
                std::span<const int> images);

bool continuous_at(const FiniteMap& f, int x);
bool continuous(const FiniteMap& f);

// compose(f, g): apply f first, then g.  Requires f.codomain == g.domain.
FiniteMap compose(const FiniteMap& f, const FiniteMap& g);

// Projection from a binary product carrier onto the given factor (0 or 1).
FiniteMap projection(const Pretopology& a, const Pretopology& b, int which,
                     int bound = kDefaultSpaceBound);

// (f1 x f2)(i,j) = (f1(i), f2(j)) between binary products.
FiniteMap product_map(const FiniteMap& f1, const FiniteMap& f2, int bound = kDefaultSpaceBound);

// Restriction of f to the subspace on `a` (relative closure, reindexed).
FiniteMap restrict_map(const FiniteMap& f, Mask a);

// theta-continuity = continuity between the theta closure structures.
bool theta_continuous(const Topology& x_top, const Topology& y_top, std::span<const int> images);

struct ContinuityProfile {
    bool continuous = false;
    bool theta_continuous = false;
    bool strongly_theta_continuous = false;
    bool weakly_continuous = false;
    bool weakly_theta_continuous = false;
    bool super_continuous = false;

    // continuous => theta and weakly continuous; strongly theta => continuous
    // and theta; super => continuous; theta => weakly theta.
    bool implications_hold() const;
    std::string to_string() const;
};

// Classification by change of structure:
//   theta:          (theta X) -> (theta Y)
//   strongly theta: (theta X) -> Y
//   super:          (semireg X) -> Y
//   weakly:         X -> (theta Y)
//   weakly theta:   (semireg X) -> (theta Y)
ContinuityProfile classify(const Topology& x_top, const Topology& y_top, std::span<const int> images);

std::string describe_images(std::span<const int> images);

} // namespace pretop
