// Exact dense linear algebra over GF(p): rref, rank, kernels, solving,
// subspace arithmetic. Deterministic first-nonzero pivoting throughout so
// bases are reproducible across runs.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "modcx/fp.hpp"

namespace modcx {

using Vec = std::vector<std::uint32_t>;

class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(PrimeField f, int rows, int cols)
        : field_(f), rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw internal_error("negative matrix dimension");
    }

    static Mat identity(PrimeField f, int n);
    static Mat from_rows(PrimeField f, const std::vector<Vec>& rows, int cols);
    static Mat from_cols(PrimeField f, const std::vector<Vec>& cols, int rows);

    const PrimeField& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    std::uint32_t at(int r, int c) const { return a_[idx(r, c)]; }
    void set(int r, int c, std::uint32_t v) { a_[idx(r, c)] = v; }

    std::span<const std::uint32_t> row(int r) const {
        return {a_.data() + idx(r, 0), static_cast<std::size_t>(cols_)};
    }
    std::span<std::uint32_t> row(int r) {
        return {a_.data() + idx(r, 0), static_cast<std::size_t>(cols_)};
    }
    Vec col(int c) const;

    Mat transpose() const;
    Mat mul(const Mat& other) const;
    Vec apply(std::span<const std::uint32_t> v) const;  // matrix * column vector
    Mat hstack(const Mat& other) const;
    Mat select_cols(const std::vector<int>& which) const;
    bool is_zero() const;
    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

  private:
    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(r) * cols_ + c;
    }
    PrimeField field_;
    int rows_, cols_;
    Vec a_;
};

struct RrefResult {
    Mat m;
    std::vector<int> pivots;  // strictly increasing pivot columns
};

RrefResult rref(const Mat& a);
int rank(const Mat& a);

// Columns form a basis of {v : a*v = 0}; count = cols - rank, and the free
// coordinates carry an identity block so kernel coordinates can be read off.
Mat kernel_basis(const Mat& a);

struct KernelResult {
    Mat basis;                  // as in kernel_basis
    std::vector<int> free_cols; // coordinates carrying the identity block
    int rank = 0;
};
KernelResult kernel_with_free(const Mat& a);

// Some x with a*x = b, or nullopt when b is outside the column space.
std::optional<Vec> solve(const Mat& a, std::span<const std::uint32_t> b);

// Columns spanning U ∩ V; U and V are column-bases in the same ambient space.
Mat subspace_intersection(const Mat& u, const Mat& v);

// Independent subset of the columns of a (a column-space basis).
Mat column_space(const Mat& a);

// Incrementally built row space in echelon form; the workhorse for
// span closures (ideals, submodules, radical filtrations).
class SpanBuilder {
  public:
    SpanBuilder(PrimeField f, int ambient_dim)
        : field_(f), ambient_(ambient_dim), pivot_of_col_(ambient_dim, -1) {}

    // Reduce v against the current span; returns the residue (zero if contained).
    Vec reduce(std::span<const std::uint32_t> v) const;
    // Add v to the span. Returns true if the span grew.
    bool add(std::span<const std::uint32_t> v);
    bool contains(std::span<const std::uint32_t> v) const;

    int dim() const { return static_cast<int>(rows_.size()); }
    int ambient_dim() const { return ambient_; }
    // Basis as matrix columns (each stored echelon row becomes one column).
    Mat basis_cols() const;
    // Sorted pivot coordinates of the echelon rows.
    std::vector<int> pivot_columns() const;

  private:
    PrimeField field_;
    int ambient_;
    std::vector<Vec> rows_;        // echelon rows, leading coefficient 1
    std::vector<int> pivot_cols_;  // pivot column of rows_[i]
    std::vector<int> pivot_of_col_;
};

}  // namespace modcx
