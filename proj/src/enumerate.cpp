#include "pretop/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace pretop {

std::int64_t pretopology_count(int n) {
    return std::int64_t{1} << (n * (n - 1));
}

Pretopology pretopology_from_index(int n, std::int64_t k) {
    if (n < 1) fail(Errc::empty_carrier, "carrier must be nonempty");
    if (n > kPretopologyEnumBound)
        fail(Errc::bound_exceeded, "enumeration limited to " + std::to_string(kPretopologyEnumBound) + " points");
    if (k < 0 || k >= pretopology_count(n)) fail(Errc::index_out_of_range, "relation index");
    // n-1 free bits per point: the off-diagonal part of u({x}).  Low index
    // bits fill the last point so the stream ascends in the lexicographic
    // order of the closure tuples.
    std::vector<Mask> closure(static_cast<size_t>(n));
    int shift = 0;
    for (int x = n - 1; x >= 0; --x) {
        Mask extra = 0;
        for (int y = 0; y < n; ++y) {
            if (y == x) continue;
            if ((k >> shift) & 1) extra |= bit(y);
            ++shift;
        }
        closure[static_cast<size_t>(x)] = bit(x) | extra;
    }
    return Pretopology(std::move(closure));
}

void for_each_pretopology(int n, const std::function<void(const Pretopology&)>& fn) {
    std::int64_t count = pretopology_count(n);
    for (std::int64_t k = 0; k < count; ++k) fn(pretopology_from_index(n, k));
}

std::vector<Pretopology> enumerate_pretopologies(int n, bool up_to_iso) {
    std::vector<Pretopology> out;
    for_each_pretopology(n, [&](const Pretopology& s) {
        if (!up_to_iso || is_canonical_form(s)) out.push_back(s);
    });
    return out;
}

std::vector<Topology> enumerate_topologies(int n, bool up_to_iso) {
    std::vector<Topology> out;
    for_each_pretopology(n, [&](const Pretopology& s) {
        if (!s.is_topological()) return;
        if (up_to_iso && !is_canonical_form(s)) return;
        out.push_back(Topology::from_pretopology(s));
    });
    return out;
}

std::int64_t count_topologies_by_family_filter(int n) {
    if (n < 1 || n > 4) fail(Errc::bound_exceeded, "family filter feasible for n <= 4 only");
    int subsets = 1 << n;
    Mask full = full_mask(n);
    std::int64_t count = 0;
    // A family of subsets is a bitmask over the 2^n subset codes.
    for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
        if (!(fam & 1) || !(fam >> full & 1)) continue; // must contain {} and X
        bool closed = true;
        for (int a = 0; a < subsets && closed; ++a) {
            if (!(fam >> a & 1)) continue;
            for (int b = a; b < subsets && closed; ++b) {
                if (!(fam >> b & 1)) continue;
                if (!(fam >> (a | b) & 1) || !(fam >> (a & b) & 1)) closed = false;
            }
        }
        if (closed) ++count;
    }
    return count;
}

bool is_canonical_form(const Pretopology& space) {
    int n = space.size();
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    const auto& self = space.singleton_closures();
    std::vector<Mask> relabeled(static_cast<size_t>(n));
    do {
        for (int x = 0; x < n; ++x) {
            Mask m = 0;
            for_each_point(self[static_cast<size_t>(x)],
                           [&](int y) { m |= bit(perm[static_cast<size_t>(y)]); });
            relabeled[static_cast<size_t>(perm[static_cast<size_t>(x)])] = m;
        }
        if (std::lexicographical_compare(relabeled.begin(), relabeled.end(), self.begin(), self.end()))
            return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

std::vector<Pretopology> sorted_coarsest_first(std::vector<Pretopology> spaces) {
    std::stable_sort(spaces.begin(), spaces.end(), [](const Pretopology& a, const Pretopology& b) {
        return coarseness_key(a) < coarseness_key(b);
    });
    return spaces;
}

std::vector<Topology> sorted_coarsest_first(std::vector<Topology> tops) {
    std::stable_sort(tops.begin(), tops.end(), [](const Topology& a, const Topology& b) {
        return coarseness_key(a.base()) < coarseness_key(b.base());
    });
    return tops;
}

} // namespace pretop
