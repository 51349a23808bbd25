#pragma once

// Definitional cross-check routes.
//
// The fast kernels decide everything through minimal neighbourhoods; the
// functions here evaluate the original powerset/quantifier forms by literal
// enumeration.  They are deliberately independent of the fast paths: sweeps
// run both and any disagreement is a failure.  The CLI exposes them behind
// --oracle; the test suites call them directly.

#include <span>

#include "pretop/function_space.hpp"
#include "pretop/maps.hpp"
#include "pretop/sequences.hpp"
#include "pretop/space.hpp"

namespace pretop::oracle {

// (C1)-(C3) checked over every subset pair of the carrier.
bool closure_axioms_hold(const Pretopology& space);

// int = complement . closure . complement, every subset.
bool interior_duality_holds(const Pretopology& space);

// U is a neighbourhood of x iff it contains the minimal neighbourhood.
bool neighborhood_filters_principal(const Pretopology& space);

// Full powerset comparison u1(A) vs u2(A).
SpaceOrder compare_powerset(const Pretopology& u1, const Pretopology& u2);

// Pointwise continuity: for every A, x in u(A) implies f(x) in v(f(A)).
bool continuous_at_definitional(const Pretopology& x_space, const Pretopology& y_space,
                                std::span<const int> images, int x);

// Global characterizations: image form f(u(A)) subset v(f(A)) and preimage
// form u(f^-1(B)) subset f^-1(v(B)).
bool continuous_image_form(const Pretopology& x_space, const Pretopology& y_space,
                           std::span<const int> images);
bool continuous_preimage_form(const Pretopology& x_space, const Pretopology& y_space,
                              std::span<const int> images);

// Regularity: separating neighbourhoods of x and A whenever x is outside
// u(A), and the closed-shrinking form (every neighbourhood contains the
// closure of a smaller one).
bool regular_separation_form(const Pretopology& space);
bool regular_shrinking_form(const Pretopology& space);

// Theta closure of A by quantifying over all closed neighbourhoods.
Mask theta_closure_direct(const Topology& t, Mask a);

// Theta-open sets: every point has an open U with cl(U) inside the set.
std::vector<Mask> theta_open_sets_direct(const Topology& t);

// Theta continuity, three independent routes: the epsilon-delta style
// definition, the closure characterization, and the preimage
// characterization.
bool theta_continuous_direct(const Topology& x_top, const Topology& y_top,
                             std::span<const int> images);
bool theta_continuous_closure_form(const Topology& x_top, const Topology& y_top,
                                   std::span<const int> images);
bool theta_continuous_preimage_form(const Topology& x_top, const Topology& y_top,
                                    std::span<const int> images);

// Admissibility via a materialized evaluation map on product(sigma, X).
bool admissible_via_product(const FunctionSpace& fs, const Pretopology& sigma);

// Admissibility/properness by quantifying over all test spaces Z with at
// most max_z points (curried maps one way, sections the other).
bool admissible_definitional(const FunctionSpace& fs, const Pretopology& sigma, int max_z);
bool proper_definitional(const FunctionSpace& fs, const Pretopology& sigma, int max_z);

// Properness tested against the two-point space with one open point only.
bool proper_sierpinski_reduction(const FunctionSpace& fs, const Pretopology& sigma);

// Properness tested against every topology with at most one non-isolated
// point on carriers up to max_z.
bool proper_one_nonisolated_reduction(const FunctionSpace& fs, const Pretopology& sigma, int max_z);

// Continuous convergence, independent routes over one unfolded period:
//   * literal tail-quantifier form ("f_k(U) inside V eventually"),
//   * upper limits of preimages for every subset B of Y,
//   * the same restricted to complements of minimal neighbourhoods,
//   * closed sets only (valid when Y is topological).
bool cc_tail_quantifier_form(const FunctionSpace& fs, const PointSequence& seq, int f);
bool cc_upper_limit_all_sets(const FunctionSpace& fs, const PointSequence& seq, int f);
bool cc_upper_limit_basic_complements(const FunctionSpace& fs, const PointSequence& seq, int f);
bool cc_upper_limit_closed_sets(const FunctionSpace& fs, const PointSequence& seq, int f);

// Convergence / accumulation / upper limit by unfolding the definitional
// quantifiers over an exact horizon (preperiod + two periods).
bool converges_definitional(const Pretopology& space, const PointSequence& seq, int x);
bool accumulates_definitional(const Pretopology& space, const PointSequence& seq, int x);
Mask upper_limit_definitional(const Pretopology& space, const SubsetSequence& seq);

} // namespace pretop::oracle
