#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ogc/grassmann.hpp"

namespace ogc {

struct Codeword {
    std::vector<scalar_t> values;
    std::uint64_t weight = 0;
};

/// A projective code over an ordered projective system. gen_full has one row
/// per grade-k wedge index tuple, so for k = 2 a row combination with
/// coefficients s_ij evaluates the alternating form with matrix (s_ij) on
/// every column; gen_reduced is an RREF row basis of rank K, and transform
/// expresses each reduced row back in wedge rows (gen_reduced = transform *
/// gen_full), which is what turns a scanned message into an explicit form.
struct GrassCode {
    ProjectiveSystem system;
    Matrix gen_full;
    Matrix gen_reduced;
    Matrix transform;
    std::vector<std::vector<unsigned>> row_tuples;
    std::size_t N = 0;
    std::size_t K = 0;

    const QuadraticSpace& space() const { return *system.space; }
    const FieldPtr& field() const { return system.space->field(); }
    unsigned grade() const { return system.grade; }
};

GrassCode build_code(ProjectiveSystem system);

/// The line code of the symplectic space on V/N (q even), with columns
/// aligned to the orthogonal line system through ell -> <ell, N>/N.
GrassCode build_symplectic_code(const SpacePtr& space);

struct SubcodeResult {
    bool is_subcode = false;
    std::size_t codimension = 0;
};

/// Verifies column alignment, then tests row-space inclusion of the reduced
/// generator matrices and reports the dimension gap.
SubcodeResult subcode_check(const GrassCode& orth, const GrassCode& symp);

/// c_f = (f(b1, b2)) over the RREF basis pairs of the column labels (k = 2).
Codeword codeword_of_form(const GrassCode& code, const AlternatingForm& f);
std::uint64_t weight_direct(const GrassCode& code, const AlternatingForm& f);

/// Number of points of the residual quadric at u (the singular points of
/// u's tangent hyperplane mod <u>) where f(u, .) does not vanish. Takes
/// values in {0, q^(2n-3) - q^(n-2), q^(2n-3), q^(2n-3) + q^(n-2)}.
std::uint64_t residual_weight(const QuadraticSpace& space, const AlternatingForm& f,
                              std::span<const scalar_t> u);

/// Recomputes the weight from residual weights: the sum over nonzero
/// singular vectors divided by q^2 - 1, with the division checked exact.
std::uint64_t weight_recursive(const GrassCode& code, const AlternatingForm& f);

/// Census of singular points by residual weight, and the weight identity
///   wt = q^(4n-5) - q^(3n-4) + q^(n-2)/(q^2-1) * ((q^(n-1)-1)A + B + 2C)
/// validated against the direct count. The identity is first tried with
/// projective point counts and then with vector counts (point counts times
/// q - 1); whichever validates is recorded in counting_convention.
struct WeightReport {
    std::uint64_t weight = 0;
    std::uint64_t a_prime = 0;    // residual weight nonzero
    std::uint64_t b_count = 0;    // residual weight q^(2n-3)
    std::uint64_t c_count = 0;    // residual weight q^(2n-3) + q^(n-2)
    std::uint64_t low_count = 0;  // residual weight q^(2n-3) - q^(n-2)
    std::uint64_t s_count = 0;    // residual weight zero
    std::int64_t a_value = 0;     // q^(2n-2) - 1 - s_count
    std::uint64_t recursive_weight = 0;
    std::uint64_t census_weight = 0;
    bool methods_agree = false;
    std::string counting_convention;
    RadicalProfile profile;
};

WeightReport abc_census(const GrassCode& code, const AlternatingForm& f);

/// True when f is a scalar multiple of the polarization (q even): exactly
/// the forms whose codeword vanishes.
bool in_polarization_span(const QuadraticSpace& space, const AlternatingForm& f);

/// The unique member of f's coset with zero (1,2) entry (q even).
AlternatingForm coset_representative(const QuadraticSpace& space, const AlternatingForm& f);

/// Deterministic search for a rank-2 form whose radical has dimension 2n-1
/// and cuts the requested section class: dual planes are generated in a
/// fixed order and the first matching radical wins.
AlternatingForm min_weight_form(const QuadraticSpace& space, SectionClass flavor);

struct ScanOptions {
    std::uint64_t budget = std::uint64_t(1) << 24;  // enumerated codewords
    unsigned workers = 0;                           // 0 = hardware concurrency
    bool spectrum = false;
    bool witnesses = true;
    std::uint64_t max_witnesses = std::uint64_t(1) << 20;
};

struct ScanResult {
    std::uint64_t enumerated = 0;
    std::uint64_t d_min = 0;
    std::uint64_t min_count = 0;
    std::vector<std::vector<scalar_t>> witness_messages;
    bool witnesses_complete = true;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> spectrum;  // weight -> count
};

/// Walks all nonzero messages in reflected Gray order (one scaled-row update
/// per step), packed into machine words for q = 2 and into bytes for the
/// other characteristic-2 fields. The message space is partitioned on
/// leading symbols across workers; reduction is merged in block order, so
/// results are deterministic for any worker count.
ScanResult exhaustive_scan(const Matrix& gen_reduced, const ScanOptions& opts = {});

ScanResult min_distance_exhaustive(const GrassCode& code, const ScanOptions& opts = {});

std::vector<scalar_t> encode_message(const GrassCode& code, std::span<const scalar_t> message);

/// Reconstructs an explicit alternating form inducing the codeword of the
/// given message (k = 2; unique up to the polarization span for q even).
AlternatingForm form_of_message(const GrassCode& code, std::span<const scalar_t> message);

struct StructuralEntry {
    std::vector<scalar_t> message;
    RadicalProfile profile;
    scalar_t coset_shift = 0;
    bool pass = false;
};

struct StructuralReport {
    std::uint64_t d_min = 0;
    bool all_pass = false;
    bool profiles_all_identical = true;
    std::size_t distinct_profiles = 0;
    std::vector<StructuralEntry> entries;
};

/// For q even, certifies that every minimum-weight codeword has a coset
/// representative f + a*beta with a (2n-1)-dimensional radical excluding the
/// nucleus and hyperbolic-cone section. For q odd the cosets are trivial and
/// the report only collects the profile census (minimum-weight words need
/// not share one profile there).
StructuralReport min_weight_structural_scan(const GrassCode& code, const ScanResult& scan);

}  // namespace ogc
