#pragma once

// Eventually periodic sequences: the net model on finite carriers.
//
// A sequence is a finite prefix followed by a repeating nonempty cycle.
// Every convergence notion here depends only on tail sets, and the tail
// value set of an eventually periodic sequence is exactly its cycle value
// set, so eventual/frequent membership are decidable by scanning the cycle.
//
// Subnets are modelled by subsequences along strictly monotone index maps
// that preserve eventual periodicity; arithmetic index maps i -> a + b*i
// realize every tail value set and are used as the witness family.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "pretop/function_space.hpp"
#include "pretop/space.hpp"

namespace pretop {

template <class T>
struct EpSequence {
    std::vector<T> prefix;
    std::vector<T> cycle; // nonempty

    EpSequence(std::vector<T> pre, std::vector<T> cyc)
        : prefix(std::move(pre)), cycle(std::move(cyc)) {
        if (cycle.empty()) fail(Errc::empty_list, "cycle must be nonempty");
    }

    T at(std::int64_t i) const {
        if (i < static_cast<std::int64_t>(prefix.size())) return prefix[static_cast<size_t>(i)];
        return cycle[static_cast<size_t>((i - static_cast<std::int64_t>(prefix.size())) %
                                         static_cast<std::int64_t>(cycle.size()))];
    }

    int period() const { return static_cast<int>(cycle.size()); }
    int preperiod() const { return static_cast<int>(prefix.size()); }

    // Minimal cycle (primitive period) and minimal prefix; unique for a
    // given unfolding, so canonical forms compare by ==.
    EpSequence canonical() const {
        std::vector<T> cyc = cycle;
        for (int p = 1; p <= static_cast<int>(cyc.size()); ++p) {
            if (static_cast<int>(cyc.size()) % p) continue;
            bool periodic = true;
            for (size_t i = p; i < cyc.size() && periodic; ++i)
                periodic = (cyc[i] == cyc[i - static_cast<size_t>(p)]);
            if (periodic) {
                cyc.resize(static_cast<size_t>(p));
                break;
            }
        }
        std::vector<T> pre = prefix;
        while (!pre.empty() && pre.back() == cyc.back()) {
            pre.pop_back();
            std::rotate(cyc.rbegin(), cyc.rbegin() + 1, cyc.rend());
        }
        return EpSequence(std::move(pre), std::move(cyc));
    }

    bool same_unfolding(const EpSequence& o) const {
        auto a = canonical();
        auto b = o.canonical();
        return a.prefix == b.prefix && a.cycle == b.cycle;
    }

    // Subsequence along i -> a + b*i (b >= 1): eventually periodic again.
    EpSequence subsequence(std::int64_t a, std::int64_t b) const {
        if (b < 1) fail(Errc::index_out_of_range, "step must be positive");
        std::vector<T> pre;
        std::int64_t i = 0;
        while (a + b * i < static_cast<std::int64_t>(prefix.size())) {
            pre.push_back(at(a + b * i));
            ++i;
        }
        std::int64_t p = static_cast<std::int64_t>(cycle.size());
        std::int64_t sub_period = p / std::gcd(b, p);
        std::vector<T> cyc;
        for (std::int64_t k = 0; k < sub_period; ++k) cyc.push_back(at(a + b * (i + k)));
        return EpSequence(std::move(pre), std::move(cyc));
    }

    bool operator==(const EpSequence& o) const = default;
};

using PointSequence = EpSequence<int>;
using SubsetSequence = EpSequence<Mask>;

// Eventual membership of the tail in the minimal neighbourhood of x.
bool converges(const Pretopology& space, const PointSequence& seq, int x);

// Frequent membership: some cycle value lies in the minimal neighbourhood.
bool accumulates(const Pretopology& space, const PointSequence& seq, int x);

// Points whose minimal neighbourhood meets the sets frequently.
Mask upper_limit(const Pretopology& space, const SubsetSequence& seq);

// Tail containment in the continuous-convergence neighbourhood C(f).
bool converges_continuously(const FunctionSpace& fs, const PointSequence& seq, int f);

struct DivergenceWitness {
    int seq_index;        // index into the sweep enumeration
    std::int64_t start, step; // arithmetic subsequence avoiding C(f) entirely
    int target;
};

struct ConvergenceClassReport {
    bool constants_ok = true;
    bool subnets_ok = true;
    bool divergence_ok = true;
    long long sequences_checked = 0;
    std::string failure; // empty when all axioms hold
    bool all_hold() const { return constants_ok && subnets_ok && divergence_ok; }
};

// Checks (CONSTANTS), (SUBNETS) and (DIVERGENCE) for continuous convergence
// over every sequence with preperiod+period <= max_len on the function
// carrier.  Subnet witnesses range over arithmetic subsequences with
// start <= max_len and step <= period.
ConvergenceClassReport check_convergence_class_axioms(const FunctionSpace& fs, int max_len);

// Enumeration helper: all sequences with values in 0..alphabet-1 and
// preperiod+period <= max_len, in a fixed deterministic order.
std::vector<PointSequence> enumerate_sequences(int alphabet, int max_len);

std::string describe(const PointSequence& seq);
std::string describe_subsets(const SubsetSequence& seq);

} // namespace pretop
