#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ogc/field.hpp"

namespace ogc {

/// Dense row-major matrix over GF(q).
class Matrix {
  public:
    Matrix() = default;
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Matrix identity(FieldPtr field, std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const FieldPtr& field() const noexcept { return field_; }

    scalar_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    scalar_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::span<scalar_t> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }
    std::span<const scalar_t> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ &&
               (field_ ? field_->q() : 0) == (o.field_ ? o.field_->q() : 0) && a_ == o.a_;
    }

    /// Row-major entrywise comparison; total order used for canonical column
    /// ordering throughout.
    bool lex_less(const Matrix& o) const;

    Matrix transpose() const;

  private:
    FieldPtr field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<scalar_t> a_;
};

struct RrefResult {
    Matrix mat;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Unique reduced row echelon form.
RrefResult rref(const Matrix& m);

Matrix mat_mul(const Matrix& a, const Matrix& b);
std::vector<scalar_t> mat_vec(const Matrix& m, std::span<const scalar_t> x);
std::vector<scalar_t> vec_mat(std::span<const scalar_t> x, const Matrix& m);
Matrix stack_rows(const Matrix& top, const Matrix& bottom);

/// True iff every row of `inner` lies in the row space of `outer`.
bool row_space_contains(const Matrix& outer, const Matrix& inner);

/// Scales a nonzero vector so its first nonzero coordinate is 1.
std::vector<scalar_t> canonical_point(std::span<const scalar_t> v, const Field& f);

/// A subspace held in canonical form: its basis matrix is the unique RREF,
/// so subspace equality is entrywise matrix equality.
class Subspace {
  public:
    Subspace() = default;

    /// Canonicalizes an arbitrary generating set (zero rows dropped).
    static Subspace from_generators(const Matrix& gens);
    /// Accepts a matrix already known to be in RREF with no zero rows.
    static Subspace from_rref(Matrix basis);

    std::size_t dim() const noexcept { return basis_.rows(); }
    std::size_t ambient() const noexcept { return basis_.cols(); }
    const Matrix& basis() const noexcept { return basis_; }
    const FieldPtr& field() const noexcept { return basis_.field(); }

    bool contains(std::span<const scalar_t> v) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
    bool operator<(const Subspace& o) const {
        if (dim() != o.dim()) return dim() < o.dim();
        return basis_.lex_less(o.basis_);
    }

  private:
    Matrix basis_;
};

Subspace kernel(const Matrix& m);

/// Sum of subspaces (row-space join).
Subspace join(const Subspace& a, const Subspace& b);

/// All q^dim - 1 nonzero vectors of s, in lexicographic order of the
/// coefficient tuples over the RREF basis.
void for_each_vector(const Subspace& s, const std::function<void(std::span<const scalar_t>)>& fn);

/// One canonical representative per 1-subspace of s, ((q^dim - 1)/(q - 1) of
/// them), in lexicographic order of ambient coordinate tuples.
std::vector<std::vector<scalar_t>> canonical_points(const Subspace& s);

/// Text format: first line "rows cols q", then one line of space-separated
/// integer reps per row.
std::string matrix_to_text(const Matrix& m);
Matrix matrix_from_text(std::istream& in, const FieldPtr& field_hint = nullptr);
Matrix matrix_from_text(const std::string& text, const FieldPtr& field_hint = nullptr);

}  // namespace ogc
