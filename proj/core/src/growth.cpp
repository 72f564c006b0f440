#include "modcx/growth.hpp"

#include <algorithm>
#include <cmath>

#include "modcx/bigint.hpp"

namespace modcx {

long long GrowthClass::rank() const {
    switch (tag) {
        case Tag::Zero: return 0;
        case Tag::Polynomial: return degree;
        case Tag::Infinite: return 1ll << 40;
        case Tag::Inconclusive: return -1;
    }
    return -1;
}

std::string GrowthClass::to_string() const {
    switch (tag) {
        case Tag::Zero: return "Zero";
        case Tag::Polynomial: return "Polynomial(" + std::to_string(degree) + ")";
        case Tag::Infinite: return "Infinite";
        case Tag::Inconclusive: return "Inconclusive";
    }
    return "?";
}

GrowthClass GrowthClass::zero() { return {Tag::Zero, 0, {}}; }
GrowthClass GrowthClass::polynomial(int d) { return {Tag::Polynomial, d, {}}; }
GrowthClass GrowthClass::infinite() { return {Tag::Infinite, 0, {}}; }
GrowthClass GrowthClass::inconclusive() { return {Tag::Inconclusive, 0, {}}; }

namespace {

// Solve the m x m system rows*(c_1..c_m)^T = rhs exactly; returns integer
// coefficients when a solution with integral entries exists (free variables
// pinned to zero), nullopt otherwise.
std::optional<std::vector<long long>> solve_integer(
    std::vector<std::vector<BigRational>> a, std::vector<BigRational> rhs) {
    const int m = static_cast<int>(rhs.size());
    std::vector<int> pivot_of_row;
    int row = 0;
    for (int col = 0; col < m && row < m; ++col) {
        int piv = -1;
        for (int i = row; i < m; ++i)
            if (!a[i][col].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[piv], a[row]);
        std::swap(rhs[piv], rhs[row]);
        BigRational lead = a[row][col];
        for (int j = col; j < m; ++j) a[row][j] = a[row][j] / lead;
        rhs[row] = rhs[row] / lead;
        for (int i = 0; i < m; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            BigRational factor = a[i][col];
            for (int j = col; j < m; ++j) a[i][j] = a[i][j] - factor * a[row][j];
            rhs[i] = rhs[i] - factor * rhs[row];
        }
        pivot_of_row.push_back(col);
        ++row;
    }
    for (int i = row; i < m; ++i)
        if (!rhs[i].is_zero()) return std::nullopt;  // inconsistent
    std::vector<long long> c(m, 0);
    for (int i = 0; i < row; ++i) {
        if (!rhs[i].is_integer()) return std::nullopt;
        if (!rhs[i].num().fits_int64()) return std::nullopt;
        c[pivot_of_row[i]] = rhs[i].num().to_int64();
    }
    return c;
}

// Least index from which the recurrence reproduces every observed term.
int validate_tail(const Sequence& x, const std::vector<long long>& c) {
    const int m = static_cast<int>(c.size());
    const int n = static_cast<int>(x.size());
    int first_bad = -1;  // last i (from the end) failing the recurrence
    for (int i = n - 1; i >= m; --i) {
        BigInt acc(0);
        for (int j = 1; j <= m; ++j) acc += BigInt(c[j - 1]) * BigInt(x[i - j]);
        if (!(acc == BigInt(x[i]))) { first_bad = i; break; }
    }
    return first_bad + 1 >= m ? first_bad + 1 - m : 0;  // tail_start
}

}  // namespace

std::optional<RecurrenceModel> detect_recurrence(const Sequence& seq,
                                                 const GrowthConfig& cfg) {
    const int n = static_cast<int>(seq.size());
    for (int m = 1; m <= cfg.max_order; ++m) {
        if (n < 2 * m + cfg.guard) break;
        // sliding Hankel windows, most recent first
        for (int shift = 0; shift <= cfg.guard; ++shift) {
            int top = n - 1 - shift;  // newest equation index
            if (top - (2 * m - 1) < m) break;
            std::vector<std::vector<BigRational>> a;
            std::vector<BigRational> rhs;
            for (int e = 0; e < m; ++e) {
                int i = top - e;
                std::vector<BigRational> rowv;
                for (int j = 1; j <= m; ++j) rowv.emplace_back(BigInt(seq[i - j]));
                a.push_back(std::move(rowv));
                rhs.emplace_back(BigInt(seq[i]));
            }
            auto c = solve_integer(std::move(a), std::move(rhs));
            if (!c) continue;
            int tail_start = validate_tail(seq, *c);
            int confirmations = n - tail_start - m;
            if (confirmations >= m + cfg.guard) {
                RecurrenceModel model;
                model.order = m;
                model.coeffs = *c;
                model.tail_start = tail_start;
                return model;
            }
        }
    }
    return std::nullopt;
}

namespace {

// Exact extension of the recurrence tail out to cfg.horizon terms.
std::vector<BigInt> extend_exact(const Sequence& seq, const RecurrenceModel& rec,
                                 const GrowthConfig& cfg) {
    std::vector<BigInt> x;
    for (int i = rec.tail_start; i < static_cast<int>(seq.size()); ++i)
        x.emplace_back(seq[i]);
    while (static_cast<int>(x.size()) < cfg.horizon) {
        BigInt acc(0);
        for (int j = 1; j <= rec.order; ++j)
            acc += BigInt(rec.coeffs[j - 1]) * x[x.size() - j];
        x.push_back(std::move(acc));
    }
    return x;
}

// Least d >= 1 with Δ^d eventually zero on the extension, or -1.
int diff_order(std::vector<BigInt> x, int max_d) {
    for (int d = 1; d <= max_d; ++d) {
        std::vector<BigInt> next;
        for (std::size_t i = 1; i < x.size(); ++i) next.push_back(x[i] - x[i - 1]);
        x = std::move(next);
        bool all_zero = true;
        std::size_t from = x.size() > 40 ? x.size() - 40 : 0;
        for (std::size_t i = from; i < x.size(); ++i)
            if (!x[i].is_zero()) { all_zero = false; break; }
        if (all_zero) {
            // require the zero tail to be long, not a boundary artifact
            bool stable = true;
            std::size_t half = x.size() / 2;
            for (std::size_t i = half; i < x.size(); ++i)
                if (!x[i].is_zero()) { stable = false; break; }
            if (stable) return d;
        }
    }
    return -1;
}

bool ratio_geometric(const std::vector<BigInt>& x, const GrowthConfig& cfg) {
    int n = static_cast<int>(x.size());
    int from = std::max(1, n - cfg.ratio_window);
    BigInt num(cfg.ratio_eps_den + cfg.ratio_eps_num);
    BigInt den(cfg.ratio_eps_den);
    for (int i = from; i < n; ++i) {
        if (x[i - 1].is_zero() || x[i].is_negative() || x[i - 1].is_negative()) return false;
        // x_i / x_{i-1} >= 1 + eps  <=>  den*x_i >= num*x_{i-1}
        if (den * x[i] < num * x[i - 1]) return false;
    }
    return true;
}

bool eventually_zero(const Sequence& seq, const GrowthConfig& cfg) {
    int zeros = 0;
    for (int i = static_cast<int>(seq.size()) - 1; i >= 0 && seq[i] == 0; --i) ++zeros;
    if (zeros == static_cast<int>(seq.size())) return true;
    return zeros >= cfg.guard;
}

}  // namespace

GrowthClass classify(const Sequence& seq, const GrowthConfig& cfg) {
    for (long long v : seq)
        if (v < 0) throw input_error("growth classifier: negative entry");
    auto done = [&](GrowthClass g) {
        g.evidence.terms_used = static_cast<int>(seq.size());
        return g;
    };
    GrowthClass out = GrowthClass::inconclusive();
    if (seq.empty()) return done(std::move(out));

    if (eventually_zero(seq, cfg)) {
        out = GrowthClass::zero();
        out.evidence.note = "trailing zeros";
        return done(std::move(out));
    }

    auto rec = detect_recurrence(seq, cfg);
    if (rec) {
        std::vector<BigInt> ext = extend_exact(seq, *rec, cfg);
        bool nonneg = true;
        for (const BigInt& v : ext)
            if (v.is_negative()) { nonneg = false; break; }
        if (nonneg) {
            // eventually zero on the extension?
            bool zero_tail = true;
            for (std::size_t i = ext.size() - std::min<std::size_t>(ext.size(), 50);
                 i < ext.size(); ++i)
                if (!ext[i].is_zero()) { zero_tail = false; break; }
            if (zero_tail) {
                out = GrowthClass::zero();
                out.evidence.recurrence = rec;
                out.evidence.note = "recurrence extension vanishes";
                return done(std::move(out));
            }
            int d = diff_order(ext, 2 * cfg.max_order + 2);
            if (d >= 1) {
                out = GrowthClass::polynomial(d);
                out.evidence.recurrence = rec;
                out.evidence.diff_order = d;
                return done(std::move(out));
            }
            if (ratio_geometric(ext, cfg)) {
                out = GrowthClass::infinite();
                out.evidence.recurrence = rec;
                out.evidence.ratio_geometric = true;
                return done(std::move(out));
            }
        }
        out.evidence.recurrence = rec;
        out.evidence.note = "recurrence found but asymptotics undecided";
        return done(std::move(out));
    }

    // No recurrence: decisive-threshold heuristics only. A tight log-log fit
    // means polynomial-looking data, where only small integer slopes are
    // accepted; the geometric ratio test applies only when no polynomial
    // shape fits, since any finite window of i^d growth has ratios above 1.
    const int n = static_cast<int>(seq.size());
    if (n >= 8) {
        int from2 = n / 2;
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int cnt = 0;
        bool positive = true;
        for (int i = from2; i < n; ++i) {
            if (seq[i] <= 0) { positive = false; break; }
            double lx = std::log(static_cast<double>(i + 1));
            double ly = std::log(static_cast<double>(seq[i]));
            sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
            ++cnt;
        }
        bool poly_shape = false;
        if (positive && cnt >= 6) {
            double denom = cnt * sxx - sx * sx;
            if (denom > 1e-12) {
                double slope = (cnt * sxy - sx * sy) / denom;
                double icept = (sy - slope * sx) / cnt;
                double worst = 0;
                for (int i = from2; i < n; ++i) {
                    double lx = std::log(static_cast<double>(i + 1));
                    double ly = std::log(static_cast<double>(seq[i]));
                    worst = std::max(worst, std::fabs(ly - (slope * lx + icept)));
                }
                if (worst < 0.02) {
                    poly_shape = true;
                    long long rounded = std::llround(slope);
                    if (std::fabs(slope - static_cast<double>(rounded)) < 0.02 &&
                        rounded >= 0 && rounded + 1 <= cfg.max_poly_degree_heuristic) {
                        out = GrowthClass::polynomial(static_cast<int>(rounded) + 1);
                        out.evidence.note = "log-log slope (no recurrence)";
                        return done(std::move(out));
                    }
                }
            }
        }
        // Decisive super-polynomial growth: at high enough indices the ratio
        // must exceed what any polynomial of the refusal degree can sustain
        // locally, x_{i+1}/x_i >= (1+eps) * ((i+1)/i)^D, checked exactly.
        // Early indices can never decide (every short prefix fits a quartic).
        if (!poly_shape && n >= 12) {
            const int d = cfg.max_poly_degree_heuristic;
            auto powi = [&](long long v) {
                __int128 r = 1;
                for (int t = 0; t < d; ++t) r *= v;
                return r;
            };
            bool decisive = true;
            int window = std::min(5, n - 2);
            for (int i = n - 1 - window; i < n - 1 && decisive; ++i) {
                if (seq[i] <= 0) { decisive = false; break; }
                __int128 lhs = static_cast<__int128>(cfg.ratio_eps_den) * seq[i + 1] *
                               powi(i == 0 ? 1 : i);
                __int128 rhs = static_cast<__int128>(cfg.ratio_eps_den +
                                                     cfg.ratio_eps_num) *
                               seq[i] * powi(i + 1);
                if (lhs < rhs) decisive = false;
            }
            if (decisive) {
                out = GrowthClass::infinite();
                out.evidence.ratio_geometric = true;
                out.evidence.note = "super-polynomial ratios (no recurrence)";
                return done(std::move(out));
            }
        }
    }
    out.evidence.note = "no recurrence; thresholds not decisive";
    return done(std::move(out));
}

Sequence combine(const Sequence& x, long long a, long long b, CombineMode mode) {
    if (x.size() < 2) throw input_error("combine needs at least two terms");
    if (mode == CombineMode::Diff && !(a > b && b > 0))
        throw input_error("diff mode requires a > b > 0");
    Sequence y;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        long long v;
        if (mode == CombineMode::Sum) {
            v = a * x[i + 1] + b * x[i];
        } else {
            v = a * x[i + 1] - b * x[i];
            if (v < 0) throw input_error("diff mode produced a negative entry");
        }
        y.push_back(v);
    }
    return y;
}

}  // namespace modcx
