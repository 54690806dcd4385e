#pragma once

#include <memory>
#include <vector>

#include "ogc/quadric.hpp"

namespace ogc {

using SpacePtr = std::shared_ptr<const QuadraticSpace>;

/// Lexicographically ordered strictly increasing k-subsets of {0..d-1}; the
/// index convention for all grade-k wedge coordinates.
std::vector<std::vector<unsigned>> k_subsets(unsigned d, unsigned k);

std::uint64_t binomial(unsigned d, unsigned k);

/// Wedge coordinates of a k-subspace: the k x k minors of the RREF basis on
/// each column subset, normalized to a canonical projective representative.
/// For an RREF basis the raw minor vector is already canonical (the pivot
/// minor is the first nonzero and equals 1).
std::vector<scalar_t> plucker_embed(const Subspace& s);

struct PluckerColumn {
    Subspace label;                 // the source subspace, canonical RREF
    std::vector<scalar_t> coords;   // its wedge coordinates
};

/// An ordered list of distinct projective points with subspace labels; the
/// column convention for generator matrices. Columns are sorted
/// lexicographically on the label basis matrices.
struct ProjectiveSystem {
    SpacePtr space;
    unsigned grade = 0;
    std::size_t label_dim = 0;  // 2n+1 for the orthogonal system, 2n for the symplectic one
    bool symplectic = false;
    std::vector<PluckerColumn> columns;
};

/// All totally singular k-subspaces, built by extending singular points and
/// deduplicating through the canonical RREF form. Requires 1 <= k <= n.
ProjectiveSystem enumerate_delta_k(const SpacePtr& space, unsigned k);

/// The totally isotropic lines of the symplectic space on V/N (q even),
/// with column i the image of column i of the orthogonal line system under
/// ell -> <ell, N>/N. The quotient drops the last coordinate, which is never
/// a pivot of a totally singular subspace.
ProjectiveSystem enumerate_symplectic_lines(const SpacePtr& space);

}  // namespace ogc
