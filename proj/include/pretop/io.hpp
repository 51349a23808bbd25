#pragma once

// Text formats.
//
// Space files:            topology files add one line per open set:
//   # comment               points: 2
//   points: 3               closure 0: 0
//   closure 0: 0 1          closure 1: 0 1
//   closure 1: 1 2          open:
//   closure 2: 2            open: 1
//                           open: 0 1
//
// Maps: `map: f(0)=1 f(1)=0` (own file or appended to a space file).
// CLI literals: sets "0,2" or "-" (empty); families "0,1;2" or "-";
// sequences "a b | c d" (prefix before the bar, cycle after).
//
// Parsing is strict: unknown lines and out-of-range indices are hard errors.

#include <optional>
#include <string>
#include <vector>

#include "pretop/sequences.hpp"
#include "pretop/space.hpp"

namespace pretop {

struct ParsedSpace {
    Pretopology space;
    std::optional<Topology> topology;  // present iff the file carried open: lines
    std::optional<std::vector<int>> map_images; // present iff the file carried a map: line
};

ParsedSpace parse_space_text(const std::string& text, int point_bound = kMaxPoints);
ParsedSpace load_space_file(const std::string& path, int point_bound = kMaxPoints);

// Closure lines without axiom validation, for the axiom-checking verb.
struct RawSpace {
    int points;
    std::vector<Mask> singleton_closures;
};
RawSpace parse_raw_closures(const std::string& text, int point_bound = kMaxPoints);

std::string format_space(const Pretopology& space);
std::string format_topology(const Topology& t);

// Accepts either a bare image list "1 0" or the file syntax "map: f(0)=1 f(1)=0".
std::vector<int> parse_map_text(const std::string& text, int domain_size, int codomain_size);

Mask parse_subset(const std::string& text, int n);
std::vector<Mask> parse_family(const std::string& text, int n);
PointSequence parse_point_sequence(const std::string& text, int bound);
SubsetSequence parse_subset_sequence(const std::string& text, int n);

std::string format_subset(Mask m);

} // namespace pretop
