#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ogc/error.hpp"

namespace ogc {

/// Residue-polynomial encoding of an element of GF(p^e): the integer in
/// [0, q) whose base-p digits are the polynomial coefficients, little-endian.
using scalar_t = std::uint16_t;

/// Exact arithmetic in GF(p^e).
///
/// Immutable after construction; all operations are pure table lookups, so a
/// Field can be shared freely across threads. Multiplication, inversion and
/// powering go through log/antilog tables over a fixed primitive element.
class Field {
  public:
    /// Coefficients of a polynomial over GF(p), little-endian (constant term
    /// first). A modulus for GF(p^e) has degree e and must be monic and
    /// irreducible.
    using poly = std::vector<unsigned>;

    /// Builds GF(p^e). When no modulus is given, the lexicographically first
    /// monic irreducible of degree e is used; that default is only available
    /// for p^e <= 512.
    static std::shared_ptr<const Field> make(unsigned p, unsigned e,
                                             std::optional<poly> modulus = std::nullopt);

    unsigned p() const noexcept { return p_; }
    unsigned e() const noexcept { return e_; }
    std::uint32_t q() const noexcept { return q_; }
    bool char2() const noexcept { return p_ == 2; }
    const poly& modulus() const noexcept { return modulus_; }

    scalar_t add(scalar_t a, scalar_t b) const;
    scalar_t sub(scalar_t a, scalar_t b) const;
    scalar_t neg(scalar_t a) const;
    scalar_t mul(scalar_t a, scalar_t b) const;
    scalar_t inv(scalar_t a) const;
    scalar_t pow(scalar_t a, std::uint64_t m) const;

    /// The unique square root in characteristic 2 (x -> x^2 is a bijection);
    /// equals a^(q/2). Throws wrong_characteristic for odd p.
    scalar_t sqrt(scalar_t a) const;

    /// Base-p digit vector of a rep, little-endian, length e.
    std::vector<unsigned> digits(scalar_t a) const;
    scalar_t from_digits(const std::vector<unsigned>& d) const;

    /// True when the rep is a valid element encoding.
    bool valid(scalar_t a) const noexcept { return a < q_; }

  private:
    Field(unsigned p, unsigned e, poly modulus);
    void build_tables();

    unsigned p_;
    unsigned e_;
    std::uint32_t q_;
    poly modulus_;

    std::vector<scalar_t> exp_;        // exp_[i] = g^i, doubled range [0, 2(q-1))
    std::vector<std::uint32_t> log_;   // log_[a] for a != 0
    std::vector<scalar_t> add_table_;  // q*q, odd characteristic only
    std::vector<scalar_t> neg_table_;  // odd characteristic only
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace ogc
