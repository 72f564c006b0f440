#include "modcx/matrix.hpp"

#include <algorithm>

namespace modcx {

Mat Mat::identity(PrimeField f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Mat Mat::from_rows(PrimeField f, const std::vector<Vec>& rows, int cols) {
    Mat m(f, static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows(); ++r) {
        if (static_cast<int>(rows[r].size()) != cols)
            throw internal_error("from_rows: ragged row");
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

Mat Mat::from_cols(PrimeField f, const std::vector<Vec>& cols, int rows) {
    Mat m(f, rows, static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols(); ++c) {
        if (static_cast<int>(cols[c].size()) != rows)
            throw internal_error("from_cols: ragged column");
        for (int r = 0; r < rows; ++r) m.set(r, c, cols[c][r]);
    }
    return m;
}

Vec Mat::col(int c) const {
    Vec v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

Mat Mat::transpose() const {
    Mat t(field_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
}

Mat Mat::mul(const Mat& other) const {
    if (cols_ != other.rows_ || field_ != other.field_)
        throw internal_error("matrix product shape/field mismatch");
    Mat out(field_, rows_, other.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            std::uint64_t aik = at(i, k);
            if (aik == 0) continue;
            const std::uint32_t* src = other.a_.data() + static_cast<std::size_t>(k) * other.cols_;
            std::uint32_t* dst = out.a_.data() + static_cast<std::size_t>(i) * other.cols_;
            for (int j = 0; j < other.cols_; ++j)
                dst[j] = field_.reduce(dst[j] + aik * src[j]);
        }
    }
    return out;
}

Vec Mat::apply(std::span<const std::uint32_t> v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw internal_error("matrix apply: length mismatch");
    Vec out(rows_, 0);
    for (int r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        const std::uint32_t* a = a_.data() + static_cast<std::size_t>(r) * cols_;
        for (int c = 0; c < cols_; ++c) {
            acc += static_cast<std::uint64_t>(a[c]) * v[c];
            if (acc >= (1ull << 62)) acc = field_.reduce(acc);
        }
        out[r] = field_.reduce(acc);
    }
    return out;
}

Mat Mat::hstack(const Mat& other) const {
    if (rows_ != other.rows_ || field_ != other.field_)
        throw internal_error("hstack shape/field mismatch");
    Mat out(field_, rows_, cols_ + other.cols_);
    for (int r = 0; r < rows_; ++r) {
        auto dst = out.row(r);
        std::copy(row(r).begin(), row(r).end(), dst.begin());
        std::copy(other.row(r).begin(), other.row(r).end(), dst.begin() + cols_);
    }
    return out;
}

Mat Mat::select_cols(const std::vector<int>& which) const {
    Mat out(field_, rows_, static_cast<int>(which.size()));
    for (int j = 0; j < out.cols(); ++j)
        for (int r = 0; r < rows_; ++r) out.set(r, j, at(r, which[j]));
    return out;
}

bool Mat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](std::uint32_t x) { return x == 0; });
}

namespace {

// In-place row echelon; returns pivot columns. When `reduced` is set the
// matrix ends in reduced form with unit pivots.
//
// Works on uint64 rows with delayed reduction: entries accumulate terms
// below p^2 < 2^40, so with p < 2^20 more than 2^23 row operations fit
// before overflow, far beyond any size this library meets. Pivot rows are
// normalized to residues before they are used for elimination.
std::vector<int> echelon(Mat& m, bool reduced) {
    const PrimeField& f = m.field();
    const std::uint64_t p = f.modulus();
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::uint64_t> w(static_cast<std::size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i) {
        auto src = m.row(i);
        std::uint64_t* dst = w.data() + static_cast<std::size_t>(i) * cols;
        for (int j = 0; j < cols; ++j) dst[j] = src[j];
    }
    auto wrow = [&](int i) { return w.data() + static_cast<std::size_t>(i) * cols; };

    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        std::uint32_t lead = 0;
        for (int i = r; i < rows; ++i) {
            std::uint32_t v = static_cast<std::uint32_t>(wrow(i)[c] % p);
            wrow(i)[c] = v;
            if (v != 0) { piv = i; lead = v; break; }
        }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < cols; ++j) std::swap(wrow(r)[j], wrow(piv)[j]);
        // normalize the pivot row to residues with unit lead
        {
            std::uint64_t il = f.inv(lead);
            std::uint64_t* pr = wrow(r);
            for (int j = c; j < cols; ++j) pr[j] = f.reduce(pr[j] % p * il);
        }
        const std::uint64_t* pr = wrow(r);
        for (int i = r + 1; i < rows; ++i) {
            std::uint64_t v = wrow(i)[c] % p;
            if (v == 0) { wrow(i)[c] = 0; continue; }
            std::uint64_t k = p - v;
            std::uint64_t* ir = wrow(i);
            for (int j = c; j < cols; ++j) ir[j] += k * pr[j];
            ir[c] = 0;
        }
        pivots.push_back(c);
        ++r;
    }
    if (reduced) {
        for (int i = static_cast<int>(pivots.size()) - 1; i >= 0; --i) {
            int c = pivots[i];
            const std::uint64_t* pr = wrow(i);
            for (int k = 0; k < i; ++k) {
                std::uint64_t v = wrow(k)[c] % p;
                if (v == 0) { wrow(k)[c] = 0; continue; }
                std::uint64_t mu = p - v;
                std::uint64_t* kr = wrow(k);
                for (int j = c; j < cols; ++j) kr[j] += mu * pr[j];
                kr[c] = 0;
            }
        }
    }
    for (int i = 0; i < rows; ++i) {
        const std::uint64_t* src = wrow(i);
        auto dst = m.row(i);
        for (int j = 0; j < cols; ++j) dst[j] = static_cast<std::uint32_t>(src[j] % p);
    }
    return pivots;
}

}  // namespace

RrefResult rref(const Mat& a) {
    Mat m = a;
    std::vector<int> piv = echelon(m, true);
    return {std::move(m), std::move(piv)};
}

int rank(const Mat& a) {
    Mat m = a;
    return static_cast<int>(echelon(m, false).size());
}

KernelResult kernel_with_free(const Mat& a) {
    RrefResult rr = rref(a);
    const PrimeField& f = a.field();
    KernelResult out;
    out.rank = static_cast<int>(rr.pivots.size());
    {
        std::size_t pi = 0;
        for (int c = 0; c < a.cols(); ++c) {
            if (pi < rr.pivots.size() && rr.pivots[pi] == c) { ++pi; continue; }
            out.free_cols.push_back(c);
        }
    }
    Mat k(f, a.cols(), static_cast<int>(out.free_cols.size()));
    for (int j = 0; j < static_cast<int>(out.free_cols.size()); ++j) {
        int fc = out.free_cols[j];
        k.set(fc, j, 1);
        for (int i = 0; i < static_cast<int>(rr.pivots.size()); ++i)
            k.set(rr.pivots[i], j, f.neg(rr.m.at(i, fc)));
    }
    out.basis = std::move(k);
    return out;
}

Mat kernel_basis(const Mat& a) { return kernel_with_free(a).basis; }

std::optional<Vec> solve(const Mat& a, std::span<const std::uint32_t> b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw input_error("solve: right-hand side length mismatch");
    Mat aug(a.field(), a.rows(), a.cols() + 1);
    for (int r = 0; r < a.rows(); ++r) {
        std::copy(a.row(r).begin(), a.row(r).end(), aug.row(r).begin());
        aug.set(r, a.cols(), b[r]);
    }
    RrefResult rr = rref(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == a.cols()) return std::nullopt;
    Vec x(a.cols(), 0);
    for (int i = 0; i < static_cast<int>(rr.pivots.size()); ++i)
        x[rr.pivots[i]] = rr.m.at(i, a.cols());
    return x;
}

Mat subspace_intersection(const Mat& u, const Mat& v) {
    if (u.rows() != v.rows() || u.field() != v.field())
        throw input_error("subspace_intersection: ambient dimension mismatch");
    if (u.cols() == 0 || v.cols() == 0) return Mat(u.field(), u.rows(), 0);
    Mat stacked = u.hstack(v);
    Mat ker = kernel_basis(stacked);
    // Each kernel column (a | b) gives u*a = -v*b, a point of the intersection.
    SpanBuilder span(u.field(), u.rows());
    for (int j = 0; j < ker.cols(); ++j) {
        Vec a(u.cols());
        for (int i = 0; i < u.cols(); ++i) a[i] = ker.at(i, j);
        span.add(u.apply(a));
    }
    return span.basis_cols();
}

Mat column_space(const Mat& a) {
    RrefResult rr = rref(a);
    return a.select_cols(rr.pivots);
}

Vec SpanBuilder::reduce(std::span<const std::uint32_t> v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw internal_error("SpanBuilder: ambient dimension mismatch");
    const std::uint64_t p = field_.modulus();
    std::vector<std::uint64_t> w(v.begin(), v.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::uint64_t c = w[pivot_cols_[i]] % p;
        if (c == 0) { w[pivot_cols_[i]] = 0; continue; }
        std::uint64_t k = p - c;
        const Vec& row = rows_[i];
        for (int j = pivot_cols_[i]; j < ambient_; ++j) w[j] += k * row[j];
        w[pivot_cols_[i]] = 0;
    }
    Vec out(ambient_);
    for (int j = 0; j < ambient_; ++j) out[j] = static_cast<std::uint32_t>(w[j] % p);
    return out;
}

bool SpanBuilder::add(std::span<const std::uint32_t> v) {
    Vec w = reduce(v);
    int pc = -1;
    for (int j = 0; j < ambient_; ++j)
        if (w[j] != 0) { pc = j; break; }
    if (pc < 0) return false;
    std::uint32_t il = field_.inv(w[pc]);
    for (int j = pc; j < ambient_; ++j) w[j] = field_.mul(w[j], il);
    // Keep reduced form: clear column pc in existing rows.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::uint32_t c = rows_[i][pc];
        if (c == 0) continue;
        std::uint64_t k = field_.modulus() - c;
        for (int j = pc; j < ambient_; ++j)
            rows_[i][j] = field_.reduce(rows_[i][j] + k * w[j]);
    }
    rows_.push_back(std::move(w));
    pivot_cols_.push_back(pc);
    pivot_of_col_[pc] = static_cast<int>(rows_.size()) - 1;
    return true;
}

bool SpanBuilder::contains(std::span<const std::uint32_t> v) const {
    Vec w = reduce(v);
    return std::all_of(w.begin(), w.end(), [](std::uint32_t x) { return x == 0; });
}

std::vector<int> SpanBuilder::pivot_columns() const {
    std::vector<int> p = pivot_cols_;
    std::sort(p.begin(), p.end());
    return p;
}

Mat SpanBuilder::basis_cols() const {
    // Deterministic order: sort by pivot column.
    std::vector<int> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return pivot_cols_[a] < pivot_cols_[b]; });
    Mat out(field_, ambient_, static_cast<int>(rows_.size()));
    for (int j = 0; j < out.cols(); ++j)
        for (int r = 0; r < ambient_; ++r) out.set(r, j, rows_[order[j]][r]);
    return out;
}

}  // namespace modcx
