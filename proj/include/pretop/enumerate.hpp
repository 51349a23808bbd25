#pragma once

// Exhaustive instance generators.  Closure structures on n points are the
// reflexive relations (2^(n(n-1)) of them); topologies are the idempotent
// ones.  Streams ascend by the singleton-closure encoding, so runs are
// reproducible; an optional canonical-form filter keeps one labelled
// representative per relabelling orbit.

#include <cstdint>
#include <functional>
#include <vector>

#include "pretop/space.hpp"

namespace pretop {

inline constexpr int kPretopologyEnumBound = 5;

std::int64_t pretopology_count(int n); // 2^(n(n-1))

// k-th reflexive relation in ascending encoding order.
Pretopology pretopology_from_index(int n, std::int64_t k);

void for_each_pretopology(int n, const std::function<void(const Pretopology&)>& fn);

std::vector<Pretopology> enumerate_pretopologies(int n, bool up_to_iso = false);

// Idempotent structures with their open-set families materialized.
std::vector<Topology> enumerate_topologies(int n, bool up_to_iso = false);

// Independent count: filter all families of subsets for the open-set axioms.
// Feasible for n <= 4 only.
std::int64_t count_topologies_by_family_filter(int n);

// True when the space is the ascending-encoding least member of its
// relabelling orbit.
bool is_canonical_form(const Pretopology& space);

// Coarsest-first view (lexicographic on minimal-neighbourhood complements).
std::vector<Pretopology> sorted_coarsest_first(std::vector<Pretopology> spaces);
std::vector<Topology> sorted_coarsest_first(std::vector<Topology> tops);

} // namespace pretop
