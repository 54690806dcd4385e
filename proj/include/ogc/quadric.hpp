#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ogc/linalg.hpp"

namespace ogc {

/// The four quadric sections a (2n-1)-dimensional radical can cut out of the
/// parabolic quadric, plus a catch-all for anything outside that family.
enum class SectionClass {
    parabolic,
    hyperbolic_cone,
    elliptic_cone,
    line_vertex_parabolic,
    other,
};

const char* section_class_name(SectionClass c);

/// V = GF(q)^(2n+1) with the parabolic quadratic form
///   eta(x) = sum_{i=1..n} x_{2i-1} x_{2i} + x_{2n+1}^2
/// and its polarization beta(x,y) = eta(x+y) - eta(x) - eta(y). For q even,
/// beta is alternating with 1-dimensional radical (the nucleus).
///
/// Immutable; the singular-point list is computed once at construction and
/// shared read-only.
class QuadraticSpace {
  public:
    QuadraticSpace(FieldPtr field, unsigned n);

    unsigned n() const noexcept { return n_; }
    std::size_t dim() const noexcept { return 2 * std::size_t(n_) + 1; }
    const FieldPtr& field() const noexcept { return f_; }
    std::uint32_t q() const noexcept { return f_->q(); }

    scalar_t eta(std::span<const scalar_t> x) const;
    scalar_t beta(std::span<const scalar_t> x, std::span<const scalar_t> y) const;
    const Matrix& beta_matrix() const noexcept { return beta_matrix_; }

    /// Radical of beta (q even): the span of the last basis vector. Every
    /// line through it is tangent to the quadric.
    Subspace nucleus() const;

    /// Canonical representatives of the singular points, in lexicographic
    /// order of coordinate tuples; size (q^2n - 1)/(q - 1).
    const std::vector<std::vector<scalar_t>>& quadric_points() const noexcept { return points_; }

    /// { x : beta(u, x) = 0 } for a singular point u; has dimension 2n and
    /// contains both u and (q even) the nucleus.
    Subspace tangent_hyperplane(std::span<const scalar_t> u) const;

    /// Full ambient space as a subspace handle.
    const Subspace& whole_space() const noexcept { return whole_; }

  private:
    FieldPtr f_;
    unsigned n_;
    Matrix beta_matrix_;
    Subspace whole_;
    std::vector<std::vector<scalar_t>> points_;
};

/// A bilinear alternating form given by its Gram matrix S: S^T = -S with
/// zero diagonal (checked explicitly; in characteristic 2 the diagonal
/// condition is independent of antisymmetry).
class AlternatingForm {
  public:
    explicit AlternatingForm(Matrix s);

    static AlternatingForm zero(const QuadraticSpace& space);
    static AlternatingForm polarization(const QuadraticSpace& space);  // beta itself
    /// The dual wedge of basis vectors i and j (0-based): S = E_ij - E_ji.
    static AlternatingForm elementary(const QuadraticSpace& space, std::size_t i, std::size_t j);
    /// S = a^T b - b^T a; rank 2 with radical ker(a) ∩ ker(b) when a, b are
    /// independent.
    static AlternatingForm dual_pair(const FieldPtr& f, std::span<const scalar_t> a,
                                     std::span<const scalar_t> b);

    const Matrix& matrix() const noexcept { return s_; }
    const FieldPtr& field() const noexcept { return s_.field(); }
    std::size_t dim() const noexcept { return s_.rows(); }

    scalar_t eval(std::span<const scalar_t> x, std::span<const scalar_t> y) const;
    Subspace radical() const { return kernel(s_); }
    bool is_zero() const;

    /// this + a * other
    AlternatingForm plus_scaled(const AlternatingForm& other, scalar_t a) const;

  private:
    Matrix s_;
};

struct SectionCensus {
    std::uint64_t point_count = 0;  // singular canonical points in the section
    std::uint64_t sigma = 0;        // totally singular lines inside the section
    Subspace vertex;                // singular part of the radical of beta|section
};

/// Singular canonical points of s (subset of quadric_points order-compatible
/// lexicographic enumeration of s itself).
std::vector<std::vector<scalar_t>> section_singular_points(const QuadraticSpace& space,
                                                           const Subspace& s);

/// { x in s : eta(x) = 0, beta(x, y) = 0 for all y in s }, with a defensive
/// closure check (vertex_not_subspace if the singular set of the restricted
/// radical fails to be a subspace).
Subspace section_vertex(const QuadraticSpace& space, const Subspace& s);

/// Point count, totally singular line count (by pair enumeration with RREF
/// dedup), and vertex of the quadric section cut by s.
SectionCensus section_census(const QuadraticSpace& space, const Subspace& s);

struct RadicalProfile {
    Subspace radical;
    std::size_t rad_dim = 0;
    bool contains_nucleus = false;
    SectionClass section_class = SectionClass::other;
    std::uint64_t point_count = 0;
    std::uint64_t sigma = 0;
};

/// Classifies a (2n-1)-dimensional section by (vertex dimension, point
/// count); parabolic and line-vertex sections share the point count and are
/// separated by the vertex dimension alone.
RadicalProfile classify_section(const QuadraticSpace& space, const Subspace& s);

/// Profile of Rad(f); section_class stays `other` unless dim Rad = 2n-1.
RadicalProfile radical_profile(const QuadraticSpace& space, const AlternatingForm& f);

/// Closed-form section sizes and the weights attached to the four classes.
/// These are verification oracles; the census above never uses them.
std::uint64_t section_points_formula(SectionClass c, std::uint64_t q, unsigned n);
std::uint64_t section_lines_formula(SectionClass c, std::uint64_t q, unsigned n);
std::uint64_t class_weight_formula(SectionClass c, std::uint64_t q, unsigned n);

std::uint64_t pow_u64(std::uint64_t base, unsigned exp);

}  // namespace ogc
