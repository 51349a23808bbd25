#pragma once

// Finite closure-space kernel.
//
// A finite carrier is the index set {0..n-1}; subsets are Mask bitsets.
// An additive (Cech) closure operator on a finite carrier is determined by
// its values on singletons, u(A) = union of u({x}) over x in A, so a space
// stores one mask per point.  The transpose table V(x) = { y : x in u({y}) }
// is the minimal neighbourhood of x: neighbourhood filters of finite spaces
// are principal, so U is a neighbourhood of x iff V(x) is a subset of U.
//
// Conventions:
//   * closure order: u1 <= u2 ("u1 coarser") iff u1(A) contains u2(A) for
//     every A, equivalently V1(x) contains V2(x) for every x.
//   * products are indexed row-major, first factor most significant.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pretop/bits.hpp"
#include "pretop/error.hpp"

namespace pretop {

class Pretopology {
public:
    // Throws on violated axioms; use verify_closure_axioms for a report.
    explicit Pretopology(std::vector<Mask> singleton_closures);

    static Pretopology discrete(int n);
    static Pretopology indiscrete(int n);
    static Pretopology from_minimal_neighborhoods(std::vector<Mask> vmin);

    int size() const { return n_; }
    Mask points() const { return full_mask(n_); }

    Mask singleton_closure(int x) const { return closure_[static_cast<size_t>(x)]; }
    const std::vector<Mask>& singleton_closures() const { return closure_; }

    Mask minimal_neighborhood(int x) const;
    const std::vector<Mask>& minimal_neighborhoods() const { return vmin_; }

    Mask closure(Mask a) const;
    Mask interior(Mask a) const; // complement of closure of complement

    bool is_neighborhood(Mask u, int x) const; // x in int(u)
    bool is_open(Mask a) const { return interior(a) == a; }
    bool is_closed(Mask a) const { return closure(a) == a; }

    // Idempotent closure, i.e. every minimal neighbourhood is open.
    bool is_topological() const;

    // Smallest open set containing x (reachability hull of V(x)).
    Mask open_hull(int x) const;

    void check_subset(Mask a) const; // SizeMismatch beyond the carrier
    void check_point(int x) const;   // PointOutOfRange

    bool operator==(const Pretopology& o) const = default;

private:
    Pretopology() = default;
    int n_ = 0;
    std::vector<Mask> closure_; // u({x}) per point
    std::vector<Mask> vmin_;    // V(x) per point (transpose of closure_)
};

// --- axiom checking -------------------------------------------------------

struct ClosureViolation {
    enum Kind { c2_missing_point, bad_subset } kind;
    int point;
};

struct ClosureValidation {
    std::optional<Pretopology> space;
    std::vector<ClosureViolation> violations;
    // (C1) and (C3) hold automatically under additive extension from
    // singletons; only (C2) on singletons and subset sanity need checking.
    std::string note;
    bool ok() const { return space.has_value(); }
};

ClosureValidation verify_closure_axioms(int n, std::vector<Mask> singleton_closures);

// --- order and lattice ----------------------------------------------------

enum class SpaceOrder { equal, coarser, finer, incomparable };

const char* order_name(SpaceOrder o);

// Order of the first argument relative to the second.
SpaceOrder compare(const Pretopology& u1, const Pretopology& u2);

Pretopology meet(std::span<const Pretopology> spaces); // V(x) = union of factors
Pretopology join(std::span<const Pretopology> spaces); // V(x) = intersection of factors

// --- products -------------------------------------------------------------

Pretopology product(const Pretopology& a, const Pretopology& b, int bound = kDefaultSpaceBound);
Pretopology product(std::span<const Pretopology> factors, int bound = kDefaultSpaceBound);

inline int pair_index(int i, int j, int second_size) { return i * second_size + j; }

// --- separation / covers ---------------------------------------------------

// Derived criterion: u(V(x)) contained in V(x) for every x.  Oracle forms
// live in oracle.hpp.
bool is_regular(const Pretopology& space);

bool is_interior_cover(const Pretopology& space, std::span<const Mask> members, Mask target);

struct SubcoverWitness {
    bool compact = false;             // always true on valid input; kept for reporting
    std::vector<int> member_indices;  // minimal-cardinality subcover, deterministic choice
};

// Throws NotAnInteriorCover if the interiors of `members` do not cover `target`.
// Exact minimum cardinality via subset DP over the target.
SubcoverWitness compact_subcover(const Pretopology& space, std::span<const Mask> members, Mask target);

// Relative closure u_A({x}) = u({x}) & A on the points of `a`, reindexed in
// increasing order of the original indices.
Pretopology subspace(const Pretopology& space, Mask a);

// --- topologies -------------------------------------------------------------

class Topology {
public:
    // Validates: contains {} and X, closed under union and intersection.
    static Topology from_open_sets(int n, std::vector<Mask> opens);
    // Requires an idempotent pretopology; enumerates its open sets.
    static Topology from_pretopology(const Pretopology& base);

    int size() const { return base_.size(); }
    const Pretopology& base() const { return base_; }
    const std::vector<Mask>& open_sets() const { return opens_; } // sorted ascending

    Mask closure(Mask a) const { return base_.closure(a); }
    Mask interior(Mask a) const { return base_.interior(a); }
    Mask minimal_open(int x) const { return base_.minimal_neighborhood(x); }

    bool operator==(const Topology& o) const = default;

private:
    Topology() = default;
    Pretopology base_ = Pretopology::discrete(1);
    std::vector<Mask> opens_;
};

// Finest topology coarser than the given closure: opens are the u-open sets.
Topology topological_modification(const Pretopology& space);

// Closure space whose minimal neighbourhood at x is cl(U_x), the closure of
// the minimal open set at x; generally not idempotent.
Pretopology theta_structure(const Topology& t);

// Topology generated by the regular-open sets int(cl(U)).
Topology semi_regularization(const Topology& t);

// Equals topological_modification(theta_structure(t)).
Topology theta_open_topology(const Topology& t);

Topology product_topology(const Topology& a, const Topology& b, int bound = kDefaultSpaceBound);

// Two-point space with open sets {}, {1}, {0,1}.
Topology sierpinski();

// Pretopology whose minimal neighbourhood at x is the intersection of the
// generator sets containing x (plus the whole carrier).  Always idempotent.
Pretopology structure_from_subbase(int n, std::span<const Mask> generators);

// --- descriptions -----------------------------------------------------------

std::string describe(const Pretopology& space);
std::string describe(const Topology& t);

// Sort key for coarsest-first enumeration: tuple of minimal-neighbourhood
// complements, compared lexicographically (indiscrete sorts first).
std::vector<Mask> coarseness_key(const Pretopology& space);

} // namespace pretop
