#include "pretop/sequences.hpp"

#include <sstream>

namespace pretop {

static void check_values(const Pretopology& space, const PointSequence& seq) {
    for (int v : seq.prefix)
        if (v < 0 || v >= space.size()) fail(Errc::carrier_mismatch, "sequence value off the carrier", v);
    for (int v : seq.cycle)
        if (v < 0 || v >= space.size()) fail(Errc::carrier_mismatch, "sequence value off the carrier", v);
}

bool converges(const Pretopology& space, const PointSequence& seq, int x) {
    check_values(space, seq);
    space.check_point(x);
    Mask v = space.minimal_neighborhood(x);
    for (int p : seq.cycle)
        if (!has(v, p)) return false;
    return true;
}

bool accumulates(const Pretopology& space, const PointSequence& seq, int x) {
    check_values(space, seq);
    space.check_point(x);
    Mask v = space.minimal_neighborhood(x);
    for (int p : seq.cycle)
        if (has(v, p)) return true;
    return false;
}

Mask upper_limit(const Pretopology& space, const SubsetSequence& seq) {
    for (Mask a : seq.prefix) space.check_subset(a);
    for (Mask a : seq.cycle) space.check_subset(a);
    Mask out = 0;
    for (int x = 0; x < space.size(); ++x) {
        Mask v = space.minimal_neighborhood(x);
        for (Mask a : seq.cycle)
            if (v & a) {
                out |= bit(x);
                break;
            }
    }
    return out;
}

bool converges_continuously(const FunctionSpace& fs, const PointSequence& seq, int f) {
    fs.check_index(f);
    for (int g : seq.prefix) fs.check_index(g);
    for (int g : seq.cycle) fs.check_index(g);
    Mask envelope = cc_neighborhood(fs, f);
    for (int g : seq.cycle)
        if (!has(envelope, g)) return false;
    return true;
}

std::vector<PointSequence> enumerate_sequences(int alphabet, int max_len) {
    std::vector<PointSequence> out;
    for (int pre_len = 0; pre_len < max_len; ++pre_len) {
        for (int cyc_len = 1; pre_len + cyc_len <= max_len; ++cyc_len) {
            int total = pre_len + cyc_len;
            std::vector<int> vals(static_cast<size_t>(total), 0);
            for (;;) {
                out.emplace_back(std::vector<int>(vals.begin(), vals.begin() + pre_len),
                                 std::vector<int>(vals.begin() + pre_len, vals.end()));
                int k = total - 1;
                while (k >= 0 && vals[static_cast<size_t>(k)] == alphabet - 1) {
                    vals[static_cast<size_t>(k)] = 0;
                    --k;
                }
                if (k < 0) break;
                ++vals[static_cast<size_t>(k)];
            }
        }
    }
    return out;
}

ConvergenceClassReport check_convergence_class_axioms(const FunctionSpace& fs, int max_len) {
    ConvergenceClassReport r;
    int n = fs.count();
    if (n == 0) return r;
    auto envelope = cc_neighborhood_table(fs);

    // (CONSTANTS)
    for (int f = 0; f < n; ++f) {
        PointSequence constant({}, {f});
        if (!converges_continuously(fs, constant, f)) {
            r.constants_ok = false;
            r.failure = "constant sequence at f=" + std::to_string(f);
            return r;
        }
    }

    auto seqs = enumerate_sequences(n, max_len);
    for (size_t si = 0; si < seqs.size(); ++si) {
        const auto& seq = seqs[si];
        ++r.sequences_checked;
        for (int f = 0; f < n; ++f) {
            bool cc = converges_continuously(fs, seq, f);
            if (cc) {
                // (SUBNETS): every arithmetic subsequence converges too.
                for (std::int64_t a = 0; a <= max_len; ++a)
                    for (std::int64_t b = 1; b <= seq.period(); ++b) {
                        if (!converges_continuously(fs, seq.subsequence(a, b), f)) {
                            r.subnets_ok = false;
                            r.failure = "subsequence(" + std::to_string(a) + "," + std::to_string(b) +
                                        ") of " + describe(seq) + " diverges from f=" + std::to_string(f);
                            return r;
                        }
                    }
            } else {
                // (DIVERGENCE): pick the first cycle position outside C(f);
                // the arithmetic subsequence through it is constant, and a
                // subsequence converges iff its tail set meets only C(f),
                // so no subsequence of the witness converges.
                Mask env = envelope[static_cast<size_t>(f)];
                int j = -1;
                for (int k = 0; k < seq.period(); ++k)
                    if (!has(env, seq.cycle[static_cast<size_t>(k)])) {
                        j = k;
                        break;
                    }
                if (j < 0) {
                    r.divergence_ok = false;
                    r.failure = "diverging sequence with tail inside C(f): " + describe(seq);
                    return r;
                }
                auto witness = seq.subsequence(seq.preperiod() + j, seq.period());
                bool tail_avoids = true;
                for (int g : witness.cycle)
                    if (has(env, g)) tail_avoids = false;
                if (!tail_avoids) {
                    r.divergence_ok = false;
                    r.failure = "divergence witness meets C(f) for " + describe(seq);
                    return r;
                }
            }
        }
    }
    return r;
}

std::string describe(const PointSequence& seq) {
    std::ostringstream os;
    os << "seq[";
    for (size_t i = 0; i < seq.prefix.size(); ++i) {
        if (i) os << ' ';
        os << seq.prefix[i];
    }
    os << " | ";
    for (size_t i = 0; i < seq.cycle.size(); ++i) {
        if (i) os << ' ';
        os << seq.cycle[i];
    }
    os << ']';
    return os.str();
}

std::string describe_subsets(const SubsetSequence& seq) {
    std::ostringstream os;
    os << "seq[";
    for (size_t i = 0; i < seq.prefix.size(); ++i) {
        if (i) os << ' ';
        os << mask_to_string(seq.prefix[i]);
    }
    os << " | ";
    for (size_t i = 0; i < seq.cycle.size(); ++i) {
        if (i) os << ' ';
        os << mask_to_string(seq.cycle[i]);
    }
    os << ']';
    return os.str();
}

} // namespace pretop
