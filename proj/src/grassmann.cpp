#include "ogc/grassmann.hpp"

#include <algorithm>
#include <set>

namespace ogc {

std::vector<std::vector<unsigned>> k_subsets(unsigned d, unsigned k) {
    std::vector<std::vector<unsigned>> out;
    if (k > d) return out;
    if (k == 0) return {{}};
    std::vector<unsigned> cur(k);
    for (unsigned i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        unsigned i = k;
        while (i-- > 0) {
            if (cur[i] + 1 <= d - (k - i)) {
                ++cur[i];
                for (unsigned j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
    }
}

std::uint64_t binomial(unsigned d, unsigned k) {
    if (k > d) return 0;
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (d - k + i) / i;
    return r;
}

namespace {

scalar_t minor_det(const Matrix& basis, const std::vector<unsigned>& cols) {
    const Field& f = *basis.field();
    const std::size_t k = cols.size();
    // small dense determinant by elimination
    std::vector<scalar_t> m(k * k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) m[r * k + c] = basis.at(r, cols[c]);
    scalar_t det = 1;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t pr = c;
        while (pr < k && m[pr * k + c] == 0) ++pr;
        if (pr == k) return 0;
        if (pr != c) {
            for (std::size_t j = 0; j < k; ++j) std::swap(m[pr * k + j], m[c * k + j]);
            det = f.neg(det);
        }
        det = f.mul(det, m[c * k + c]);
        const scalar_t inv = f.inv(m[c * k + c]);
        for (std::size_t r = c + 1; r < k; ++r) {
            if (m[r * k + c] == 0) continue;
            const scalar_t factor = f.mul(m[r * k + c], inv);
            for (std::size_t j = c; j < k; ++j)
                m[r * k + j] = f.sub(m[r * k + j], f.mul(factor, m[c * k + j]));
        }
    }
    return det;
}

}  // namespace

std::vector<scalar_t> plucker_embed(const Subspace& s) {
    if (s.dim() < 1) fail(errc::bad_grade, "plucker_embed needs dimension >= 1");
    const auto subsets = k_subsets(static_cast<unsigned>(s.ambient()),
                                   static_cast<unsigned>(s.dim()));
    std::vector<scalar_t> coords(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i) coords[i] = minor_det(s.basis(), subsets[i]);
    return canonical_point(coords, *s.field());
}

ProjectiveSystem enumerate_delta_k(const SpacePtr& space, unsigned k) {
    if (k < 1 || k > space->n()) fail(errc::bad_grade, "grade must satisfy 1 <= k <= n");
    const auto& pts = space->quadric_points();

    std::set<Subspace> level;
    for (const auto& p : pts) {
        Matrix m(space->field(), 1, space->dim());
        for (std::size_t c = 0; c < space->dim(); ++c) m.at(0, c) = p[c];
        level.insert(Subspace::from_rref(std::move(m)));
    }

    for (unsigned g = 2; g <= k; ++g) {
        std::set<Subspace> next;
        for (const Subspace& u : level) {
            for (const auto& p : pts) {
                bool isotropic = true;
                for (std::size_t r = 0; r < u.dim() && isotropic; ++r)
                    isotropic = space->beta(u.basis().row(r), p) == 0;
                if (!isotropic || u.contains(p)) continue;
                Matrix gens = stack_rows(u.basis(), Matrix(space->field(), 1, space->dim()));
                for (std::size_t c = 0; c < space->dim(); ++c) gens.at(u.dim(), c) = p[c];
                next.insert(Subspace::from_generators(gens));
            }
        }
        level = std::move(next);
    }

    ProjectiveSystem sys;
    sys.space = space;
    sys.grade = k;
    sys.label_dim = space->dim();
    sys.columns.reserve(level.size());
    for (const Subspace& s : level) sys.columns.push_back({s, plucker_embed(s)});
    return sys;
}

ProjectiveSystem enumerate_symplectic_lines(const SpacePtr& space) {
    if (!space->field()->char2())
        fail(errc::wrong_characteristic, "the symplectic quotient construction needs even q");
    ProjectiveSystem orth = enumerate_delta_k(space, 2);

    const std::size_t qdim = space->dim() - 1;
    ProjectiveSystem sys;
    sys.space = space;
    sys.grade = 2;
    sys.label_dim = qdim;
    sys.symplectic = true;
    sys.columns.reserve(orth.columns.size());

    for (const auto& col : orth.columns) {
        // A totally singular subspace never pivots on the last coordinate
        // (that basis vector is non-singular), so dropping it keeps the
        // basis in RREF and the rank at 2.
        Matrix quot(space->field(), 2, qdim);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < qdim; ++c) quot.at(r, c) = col.label.basis().at(r, c);
        Subspace image = Subspace::from_generators(quot);
        if (image.dim() != 2 || !(image.basis() == quot))
            fail(errc::column_misalignment, "quotient image of a singular line is degenerate");
        sys.columns.push_back({image, plucker_embed(image)});
    }
    return sys;
}

}  // namespace ogc
