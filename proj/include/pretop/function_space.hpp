#pragma once

// Function spaces: the set of continuous maps X -> Y, candidate closure
// structures on it, the continuous-convergence structure, and the
// proper/admissible decision procedures.
//
// Functions are listed in lexicographic order of their image tuples; all
// structures on the function carrier index into that list.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pretop/maps.hpp"
#include "pretop/space.hpp"

namespace pretop {

struct FunctionSpace {
    Pretopology domain;
    Pretopology codomain;
    std::vector<std::vector<int>> functions; // image tuples, lex sorted, duplicate-free

    int count() const { return static_cast<int>(functions.size()); }
    std::span<const int> images(int f) const { return functions[static_cast<size_t>(f)]; }
    FiniteMap map_at(int f) const;
    int index_of(std::span<const int> images) const; // -1 if not present
    void check_index(int f) const;
};

inline constexpr std::int64_t kDefaultFunctionCandidates = 1'000'000;

FunctionSpace enumerate_functions(const Pretopology& x_space, const Pretopology& y_space,
                                  std::int64_t candidate_bound = kDefaultFunctionCandidates);

// C(f): the functions g with g(V(x)) contained in V(f(x)) for every x.
// Tail sets of continuously convergent function sequences are exactly the
// subsets of C(f).
Mask cc_neighborhood(const FunctionSpace& fs, int f);
std::vector<Mask> cc_neighborhood_table(const FunctionSpace& fs);

// The structure whose minimal neighbourhood at f is C(f); simultaneously the
// finest proper and the coarsest admissible structure on the carrier.
Pretopology cc_structure(const FunctionSpace& fs);

void check_sigma(const FunctionSpace& fs, const Pretopology& sigma);

// Joint continuity of evaluation, decided pointwise on minimal
// neighbourhoods (equivalent to V_sigma(f) subset C(f) for every f).
bool admissible(const FunctionSpace& fs, const Pretopology& sigma);

// C(f) subset V_sigma(f) for every f, i.e. sigma is coarser than the
// continuous-convergence structure.
bool proper(const FunctionSpace& fs, const Pretopology& sigma);

// Evaluation as a concrete map on product(sigma, X); SizeOverflow when the
// product carrier exceeds the bound.
FiniteMap evaluation_map(const FunctionSpace& fs, const Pretopology& sigma,
                         int bound = kDefaultSpaceBound);

// g : Z x X -> Y with continuous sections yields z -> index of g(z,.).
// Errors: IndexMismatch if g is not a map off product(Z, X) into Y;
// SectionNotContinuous(z) otherwise.
FiniteMap curry(const FiniteMap& g, const Pretopology& z_space, const FunctionSpace& fs,
                const Pretopology& sigma);

// h : Z -> (function carrier, sigma) yields product(Z, X) -> Y.
FiniteMap uncurry(const FiniteMap& h, const FunctionSpace& fs,
                  int bound = kDefaultSpaceBound);

// Index kernels used by the exhaustive sweeps (no space plumbing).
std::vector<int> curry_images(const FunctionSpace& fs, std::span<const int> g_images, int z_size);
std::vector<int> uncurry_images(const FunctionSpace& fs, std::span<const int> h_images);

// Modification of the continuous-convergence structure: minimal open
// neighbourhoods absorb C(.) repeatedly.  Works on any carrier size.
Pretopology finest_proper_structure(const FunctionSpace& fs);

// Same structure with the open sets { G : f in G => C(f) subset G }
// materialized; carrier limited by the open-set enumeration bound.
Topology finest_proper_topology(const FunctionSpace& fs);

// --- set-open structures ----------------------------------------------------

struct SubbasisPair {
    Mask argument_set; // subset of X
    Mask value_set;    // subset of Y
};

// { f : f(A) subset V } over the function list.
Mask function_set_of(const FunctionSpace& fs, Mask argument_set, Mask value_set);

// Generators (A, V) with A from the family, V open and nonempty in Y.
std::vector<SubbasisPair> set_open_subbase(const FunctionSpace& fs, std::span<const Mask> family);

// Generators (u(K), V) with u(K) inside some cover member, V any set with
// nonempty interior in Y; with open_values_only the value sets are
// restricted to open sets, mirroring the family-based construction.  The
// unrestricted form is the primary one; the restricted variant exists so
// the two readings can be compared.
std::vector<SubbasisPair> cover_subbase(const FunctionSpace& fs, std::span<const Mask> cover,
                                        bool open_values_only = false);

// Topology on the function carrier generated by the pairs; returned as its
// (idempotent) closure structure.
Pretopology structure_from_pairs(const FunctionSpace& fs, std::span<const SubbasisPair> pairs);

// Family members must be nonempty subsets of X.
Pretopology a_topology_structure(const FunctionSpace& fs, std::span<const Mask> family);

// Cover must be an interior cover of X.
Pretopology c_topology_structure(const FunctionSpace& fs, std::span<const Mask> cover,
                                 bool open_values_only = false);

// --- structure ordering reports ---------------------------------------------

enum class ClauseVerdict { holds, fails, vacuous };

const char* clause_verdict_name(ClauseVerdict v);

struct OrderingReport {
    // (1) sigma2 proper and sigma <= sigma2  => sigma proper
    // (2) sigma admissible and sigma <= sigma2 => sigma2 admissible
    // (3) sigma proper and sigma2 admissible => sigma <= sigma2
    // (4) any structure that is both proper and admissible equals the
    //     continuous-convergence structure (so at most one exists)
    ClauseVerdict clause[4];
    bool sigma_star_is_both = false; // witnessed: cc_structure passes both predicates
    bool vacuous = false;            // empty function carrier
    bool all_hold() const;
};

OrderingReport verify_ordering(const FunctionSpace& fs, const Pretopology& sigma,
                               const Pretopology& sigma2);

struct LatticeReport {
    bool all_proper = false;
    bool all_admissible = false;
    ClauseVerdict meet_proper = ClauseVerdict::vacuous;
    ClauseVerdict join_proper = ClauseVerdict::vacuous;
    ClauseVerdict join_admissible = ClauseVerdict::vacuous;
    bool all_hold() const;
};

LatticeReport verify_lattice_closure(const FunctionSpace& fs, std::span<const Pretopology> sigmas);

std::string describe(const FunctionSpace& fs);

} // namespace pretop
