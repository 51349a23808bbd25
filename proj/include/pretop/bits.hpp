#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace pretop {

// Subsets of a carrier are characteristic vectors packed into one word.
using Mask = std::uint32_t;

inline constexpr int kMaxPoints = 30;         // hard cap: subsets fit one word
inline constexpr int kDefaultSpaceBound = 16; // default bound for products and parsed spaces
inline constexpr int kOpenSetEnumBound = 20;  // largest carrier whose powerset we enumerate

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr Mask full_mask(int n) { return n == 0 ? Mask{0} : (~Mask{0} >> (32 - n)); }

constexpr bool has(Mask m, int i) { return (m >> i) & 1u; }

constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr int first_point(Mask m) { return std::countr_zero(m); }

template <class Fn>
void for_each_point(Mask m, Fn&& fn) {
    while (m) {
        int i = std::countr_zero(m);
        m &= m - 1;
        fn(i);
    }
}

// "{0,2}" style rendering, "{}" for the empty set.
std::string mask_to_string(Mask m);

std::string mask_list_to_string(const std::vector<Mask>& masks);

} // namespace pretop
