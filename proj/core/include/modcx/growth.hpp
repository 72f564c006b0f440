// Polynomial growth classification of non-negative integer sequences.
//
// A sequence has growth class Zero when eventually zero, Polynomial(d) when
// d is least with x_i <= a*i^(d-1) eventually, Infinite when super-polynomial.
// A finite prefix can never certify the class in general, so the classifier
// privileges exact integer recurrences (found by rational elimination on
// Hankel windows and validated on the whole observed tail) and answers
// Inconclusive rather than guess.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modcx/fp.hpp"

namespace modcx {

using Sequence = std::vector<long long>;

struct GrowthConfig {
    int max_order = 6;      // largest recurrence order tried
    int guard = 4;          // extra confirmations required beyond 2*order
    int horizon = 1000;     // exact extension length for the asymptotic tests
    int ratio_window = 200; // trailing window for the geometric-growth test
    // geometric threshold 1 + ratio_eps_num/ratio_eps_den (default 1 + 1/16)
    long long ratio_eps_num = 1;
    long long ratio_eps_den = 16;
    int max_poly_degree_heuristic = 4;  // refuse deeper poly classes without a recurrence
};

struct RecurrenceModel {
    int order = 0;
    std::vector<long long> coeffs;  // x_i = sum_j coeffs[j-1] * x_{i-j}
    int tail_start = 0;             // recurrence reproduces terms from here on
};

struct GrowthEvidence {
    std::optional<RecurrenceModel> recurrence;
    int diff_order = -1;            // least d with Δ^d eventually zero on the extension
    bool ratio_geometric = false;   // trailing ratio stayed >= 1 + eps
    int terms_used = 0;
    bool input_truncated = false;   // the observed table itself was truncated
    std::string source;             // which sequence produced the verdict ("nu", "len", ...)
    std::string note;
};

struct GrowthClass {
    enum class Tag { Zero, Polynomial, Infinite, Inconclusive };
    Tag tag = Tag::Inconclusive;
    int degree = 0;  // complexity d for Polynomial
    GrowthEvidence evidence;

    bool conclusive() const { return tag != Tag::Inconclusive; }
    // rank for class comparisons: Zero=0, Polynomial(d)=d, Infinite=big
    long long rank() const;
    std::string to_string() const;
    bool same_class(const GrowthClass& o) const {
        return conclusive() && o.conclusive() && rank() == o.rank();
    }

    static GrowthClass zero();
    static GrowthClass polynomial(int degree);
    static GrowthClass infinite();
    static GrowthClass inconclusive();
};

// Minimal-order integer recurrence valid on a tail of seq, or nullopt.
// Requires seq.size() >= 2*max_order + guard for an order to be eligible;
// smaller orders remain eligible on shorter sequences.
std::optional<RecurrenceModel> detect_recurrence(const Sequence& seq,
                                                 const GrowthConfig& cfg = {});

// Classify; throws input_error on negative entries.
GrowthClass classify(const Sequence& seq, const GrowthConfig& cfg = {});

enum class CombineMode { Sum, Diff };

// y_i = a*x_{i+1} + b*x_i (Sum) or a*x_{i+1} - b*x_i (Diff, requires a > b > 0
// and a non-negative result; violations raise input_error).
Sequence combine(const Sequence& x, long long a, long long b, CombineMode mode);

}  // namespace modcx
