#include "ogc/quadric.hpp"

#include <algorithm>
#include <set>

namespace ogc {

const char* section_class_name(SectionClass c) {
    switch (c) {
        case SectionClass::parabolic: return "PARABOLIC";
        case SectionClass::hyperbolic_cone: return "HYPERBOLIC_CONE";
        case SectionClass::elliptic_cone: return "ELLIPTIC_CONE";
        case SectionClass::line_vertex_parabolic: return "LINE_VERTEX_PARABOLIC";
        case SectionClass::other: return "OTHER";
    }
    return "OTHER";
}

std::uint64_t pow_u64(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

QuadraticSpace::QuadraticSpace(FieldPtr field, unsigned n) : f_(std::move(field)), n_(n) {
    if (n_ < 1) fail(errc::unsupported_size, "rank parameter n must be >= 1");
    const std::size_t d = dim();

    beta_matrix_ = Matrix(f_, d, d);
    std::vector<scalar_t> ei(d, 0), ej(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        ei.assign(d, 0);
        ei[i] = 1;
        for (std::size_t j = 0; j < d; ++j) {
            ej.assign(d, 0);
            ej[j] = 1;
            beta_matrix_.at(i, j) = beta(ei, ej);
        }
    }

    whole_ = Subspace::from_rref(Matrix::identity(f_, d));
    for (auto& p : canonical_points(whole_))
        if (eta(p) == 0) points_.push_back(std::move(p));
}

scalar_t QuadraticSpace::eta(std::span<const scalar_t> x) const {
    if (x.size() != dim()) fail(errc::dimension_mismatch, "eta: vector length");
    const Field& f = *f_;
    scalar_t acc = 0;
    for (unsigned i = 0; i < n_; ++i) acc = f.add(acc, f.mul(x[2 * i], x[2 * i + 1]));
    return f.add(acc, f.mul(x[2 * n_], x[2 * n_]));
}

scalar_t QuadraticSpace::beta(std::span<const scalar_t> x, std::span<const scalar_t> y) const {
    if (x.size() != dim() || y.size() != dim()) fail(errc::dimension_mismatch, "beta: vector length");
    const Field& f = *f_;
    std::vector<scalar_t> s(dim());
    for (std::size_t i = 0; i < dim(); ++i) s[i] = f.add(x[i], y[i]);
    return f.sub(f.sub(eta(s), eta(x)), eta(y));
}

Subspace QuadraticSpace::nucleus() const {
    if (!f_->char2()) fail(errc::wrong_characteristic, "the nucleus exists for even q only");
    return kernel(beta_matrix_);
}

Subspace QuadraticSpace::tangent_hyperplane(std::span<const scalar_t> u) const {
    if (u.size() != dim()) fail(errc::dimension_mismatch, "tangent_hyperplane: vector length");
    const bool zero = std::all_of(u.begin(), u.end(), [](scalar_t v) { return v == 0; });
    if (zero || eta(u) != 0) fail(errc::non_singular_point, "tangent_hyperplane needs eta(u)=0, u!=0");
    Matrix row(f_, 1, dim());
    auto mu = mat_vec(beta_matrix_, u);
    for (std::size_t j = 0; j < dim(); ++j) row.at(0, j) = mu[j];
    return kernel(row);
}

AlternatingForm::AlternatingForm(Matrix s) : s_(std::move(s)) {
    if (s_.rows() != s_.cols()) fail(errc::dimension_mismatch, "form matrix must be square");
    const Field& f = *s_.field();
    for (std::size_t i = 0; i < s_.rows(); ++i) {
        if (s_.at(i, i) != 0)
            fail(errc::dimension_mismatch, "form matrix must have zero diagonal");
        for (std::size_t j = i + 1; j < s_.cols(); ++j)
            if (s_.at(j, i) != f.neg(s_.at(i, j)))
                fail(errc::dimension_mismatch, "form matrix must be antisymmetric");
    }
}

AlternatingForm AlternatingForm::zero(const QuadraticSpace& space) {
    return AlternatingForm(Matrix(space.field(), space.dim(), space.dim()));
}

AlternatingForm AlternatingForm::polarization(const QuadraticSpace& space) {
    if (!space.field()->char2())
        fail(errc::wrong_characteristic, "the polarization is alternating for even q only");
    return AlternatingForm(space.beta_matrix());
}

AlternatingForm AlternatingForm::elementary(const QuadraticSpace& space, std::size_t i,
                                            std::size_t j) {
    if (i == j || i >= space.dim() || j >= space.dim())
        fail(errc::dimension_mismatch, "elementary form needs distinct indices in range");
    Matrix s(space.field(), space.dim(), space.dim());
    s.at(i, j) = 1;
    s.at(j, i) = space.field()->neg(1);
    return AlternatingForm(std::move(s));
}

AlternatingForm AlternatingForm::dual_pair(const FieldPtr& f, std::span<const scalar_t> a,
                                           std::span<const scalar_t> b) {
    if (a.size() != b.size()) fail(errc::dimension_mismatch, "dual_pair lengths");
    const std::size_t d = a.size();
    Matrix s(f, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            s.at(i, j) = f->sub(f->mul(a[i], b[j]), f->mul(b[i], a[j]));
    return AlternatingForm(std::move(s));
}

scalar_t AlternatingForm::eval(std::span<const scalar_t> x, std::span<const scalar_t> y) const {
    if (x.size() != dim() || y.size() != dim()) fail(errc::dimension_mismatch, "form eval lengths");
    const Field& f = *s_.field();
    scalar_t acc = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] == 0) continue;
        scalar_t row_acc = 0;
        for (std::size_t j = 0; j < dim(); ++j)
            row_acc = f.add(row_acc, f.mul(s_.at(i, j), y[j]));
        acc = f.add(acc, f.mul(x[i], row_acc));
    }
    return acc;
}

bool AlternatingForm::is_zero() const {
    for (std::size_t i = 0; i < s_.rows(); ++i)
        for (std::size_t j = 0; j < s_.cols(); ++j)
            if (s_.at(i, j) != 0) return false;
    return true;
}

AlternatingForm AlternatingForm::plus_scaled(const AlternatingForm& other, scalar_t a) const {
    if (other.dim() != dim()) fail(errc::dimension_mismatch, "form sum dimensions");
    const Field& f = *s_.field();
    Matrix s = s_;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            s.at(i, j) = f.add(s.at(i, j), f.mul(a, other.s_.at(i, j)));
    return AlternatingForm(std::move(s));
}

std::vector<std::vector<scalar_t>> section_singular_points(const QuadraticSpace& space,
                                                           const Subspace& s) {
    std::vector<std::vector<scalar_t>> out;
    for (auto& p : canonical_points(s))
        if (space.eta(p) == 0) out.push_back(std::move(p));
    return out;
}

Subspace section_vertex(const QuadraticSpace& space, const Subspace& s) {
    const Field& f = *space.field();
    const std::size_t d = s.dim();

    // radical of beta restricted to s, in coefficient space
    Matrix gram(space.field(), d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            gram.at(i, j) = space.beta(s.basis().row(i), s.basis().row(j));
    Subspace rad_coeff = kernel(gram);

    Matrix rad_gens(space.field(), rad_coeff.dim(), s.ambient());
    for (std::size_t r = 0; r < rad_coeff.dim(); ++r) {
        auto v = vec_mat(rad_coeff.basis().row(r), s.basis());
        for (std::size_t c = 0; c < s.ambient(); ++c) rad_gens.at(r, c) = v[c];
    }
    Subspace rad = Subspace::from_generators(rad_gens);

    auto singular = section_singular_points(space, rad);
    if (singular.empty()) return Subspace::from_rref(Matrix(space.field(), 0, s.ambient()));

    Matrix gens(space.field(), singular.size(), s.ambient());
    for (std::size_t r = 0; r < singular.size(); ++r)
        for (std::size_t c = 0; c < s.ambient(); ++c) gens.at(r, c) = singular[r][c];
    Subspace vertex = Subspace::from_generators(gens);

    // The singular vectors of rad(beta|s) always close under addition (both
    // summands pair to zero), but verify instead of assuming.
    const std::uint64_t expect = (pow_u64(f.q(), static_cast<unsigned>(vertex.dim())) - 1) / (f.q() - 1);
    if (singular.size() != expect)
        fail(errc::vertex_not_subspace, "singular locus of the restricted radical is not a subspace");
    return vertex;
}

SectionCensus section_census(const QuadraticSpace& space, const Subspace& s) {
    SectionCensus out;
    auto pts = section_singular_points(space, s);
    out.point_count = pts.size();

    std::set<Subspace> lines;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (space.beta(pts[i], pts[j]) != 0) continue;
            Matrix gens(space.field(), 2, s.ambient());
            for (std::size_t c = 0; c < s.ambient(); ++c) {
                gens.at(0, c) = pts[i][c];
                gens.at(1, c) = pts[j][c];
            }
            lines.insert(Subspace::from_generators(gens));
        }
    out.sigma = lines.size();
    out.vertex = section_vertex(space, s);
    return out;
}

RadicalProfile classify_section(const QuadraticSpace& space, const Subspace& s) {
    if (s.dim() != 2 * std::size_t(space.n()) - 1)
        fail(errc::dimension_mismatch, "classify_section needs dim 2n-1");
    RadicalProfile prof;
    prof.radical = s;
    prof.rad_dim = s.dim();

    SectionCensus census = section_census(space, s);
    prof.point_count = census.point_count;
    prof.sigma = census.sigma;

    const std::uint64_t q = space.q();
    const unsigned n = space.n();
    switch (census.vertex.dim()) {
        case 0:
            prof.section_class = SectionClass::parabolic;
            break;
        case 1:
            if (census.point_count == section_points_formula(SectionClass::hyperbolic_cone, q, n))
                prof.section_class = SectionClass::hyperbolic_cone;
            else if (census.point_count == section_points_formula(SectionClass::elliptic_cone, q, n))
                prof.section_class = SectionClass::elliptic_cone;
            else
                prof.section_class = SectionClass::other;
            break;
        case 2:
            prof.section_class = SectionClass::line_vertex_parabolic;
            break;
        default:
            prof.section_class = SectionClass::other;
    }
    if (space.field()->char2()) {
        auto nuc = space.nucleus();
        prof.contains_nucleus = nuc.dim() == 1 && s.contains(nuc.basis().row(0));
    }
    return prof;
}

RadicalProfile radical_profile(const QuadraticSpace& space, const AlternatingForm& f) {
    Subspace rad = f.radical();
    if (rad.dim() == 2 * std::size_t(space.n()) - 1) return classify_section(space, rad);

    RadicalProfile prof;
    prof.radical = rad;
    prof.rad_dim = rad.dim();
    prof.section_class = SectionClass::other;
    if (rad.dim() > 0) {
        SectionCensus census = section_census(space, rad);
        prof.point_count = census.point_count;
        prof.sigma = census.sigma;
    }
    if (space.field()->char2()) {
        auto nuc = space.nucleus();
        prof.contains_nucleus =
            nuc.dim() == 1 && rad.dim() > 0 && rad.contains(nuc.basis().row(0));
    }
    return prof;
}

namespace {

std::uint64_t exact_div(std::uint64_t num, std::uint64_t den) {
    if (den == 0 || num % den != 0)
        fail(errc::internal_inconsistency, "closed formula division is not exact");
    return num / den;
}

}  // namespace

std::uint64_t section_points_formula(SectionClass c, std::uint64_t q, unsigned n) {
    if (n < 2) fail(errc::unsupported_size, "section formulas need n >= 2");
    switch (c) {
        case SectionClass::parabolic:
        case SectionClass::line_vertex_parabolic:
            return exact_div(pow_u64(q, 2 * n - 2) - 1, q - 1);
        case SectionClass::hyperbolic_cone:
            return q * exact_div((pow_u64(q, n - 1) - 1) * (pow_u64(q, n - 2) + 1), q - 1) + 1;
        case SectionClass::elliptic_cone:
            return q * exact_div((pow_u64(q, n - 1) + 1) * (pow_u64(q, n - 2) - 1), q - 1) + 1;
        case SectionClass::other:
            break;
    }
    fail(errc::class_not_found, "no closed point count for this class");
}

std::uint64_t section_lines_formula(SectionClass c, std::uint64_t q, unsigned n) {
    if (n < 2) fail(errc::unsupported_size, "section formulas need n >= 2");
    // Factors of the shape q^(2n-4) - 1 vanish at n = 2 and kill their whole
    // term; guard those terms so the remaining exponents stay nonnegative.
    switch (c) {
        case SectionClass::parabolic:
            return exact_div((pow_u64(q, 2 * n - 4) - 1) * (pow_u64(q, 2 * n - 2) - 1),
                             (q * q - 1) * (q - 1));
        case SectionClass::hyperbolic_cone: {
            std::uint64_t first =
                exact_div((pow_u64(q, n - 1) - 1) * (pow_u64(q, n - 2) + 1), q - 1);
            std::uint64_t second =
                n < 3 ? 0
                      : q * q *
                            exact_div((pow_u64(q, 2 * n - 4) - 1) * (pow_u64(q, n - 1) - 1) *
                                          (pow_u64(q, n - 3) + 1),
                                      (q * q - 1) * (q - 1));
            return first + second;
        }
        case SectionClass::elliptic_cone: {
            std::uint64_t first =
                exact_div((pow_u64(q, n - 1) + 1) * (pow_u64(q, n - 2) - 1), q - 1);
            std::uint64_t second =
                n < 3 ? 0
                      : q * q *
                            exact_div((pow_u64(q, 2 * n - 4) - 1) * (pow_u64(q, n - 1) + 1) *
                                          (pow_u64(q, n - 3) - 1),
                                      (q * q - 1) * (q - 1));
            return first + second;
        }
        case SectionClass::line_vertex_parabolic: {
            std::uint64_t inner = exact_div(pow_u64(q, 2 * n - 4) - 1, q - 1);
            std::uint64_t nested =
                n < 3 ? 0
                      : q * q *
                            exact_div((pow_u64(q, 2 * n - 6) - 1) * (pow_u64(q, 2 * n - 4) - 1),
                                      (q * q - 1) * (q - 1));
            return 1 + q * inner + q * q * (nested + inner);
        }
        case SectionClass::other:
            break;
    }
    fail(errc::class_not_found, "no closed line count for this class");
}

std::uint64_t class_weight_formula(SectionClass c, std::uint64_t q, unsigned n) {
    if (n < 2) fail(errc::unsupported_size, "class weights need n >= 2");
    switch (c) {
        case SectionClass::parabolic:
            return pow_u64(q, 4 * n - 5) - pow_u64(q, 2 * n - 3);
        case SectionClass::hyperbolic_cone:
            return pow_u64(q, 4 * n - 5) - pow_u64(q, 3 * n - 4);
        case SectionClass::elliptic_cone:
            return pow_u64(q, 4 * n - 5) + pow_u64(q, 3 * n - 4);
        case SectionClass::line_vertex_parabolic:
            return pow_u64(q, 4 * n - 5);
        case SectionClass::other:
            break;
    }
    fail(errc::class_not_found, "no weight attached to this class");
}

}  // namespace ogc
