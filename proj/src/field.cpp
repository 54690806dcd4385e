#include "ogc/field.hpp"

#include <algorithm>
#include <numeric>

namespace ogc {

const char* errc_name(errc c) {
    switch (c) {
        case errc::non_prime_characteristic: return "NonPrimeCharacteristic";
        case errc::reducible_modulus: return "ReducibleModulus";
        case errc::unsupported_size: return "UnsupportedSize";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::wrong_characteristic: return "WrongCharacteristic";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::zero_vector: return "ZeroVector";
        case errc::non_singular_point: return "NonSingularPoint";
        case errc::vertex_not_subspace: return "VertexNotSubspace";
        case errc::bad_grade: return "BadGrade";
        case errc::grade_mismatch: return "GradeMismatch";
        case errc::inconsistent_recursion: return "InconsistentRecursion";
        case errc::form_in_annihilator: return "FormInAnnihilator";
        case errc::class_not_found: return "ClassNotFound";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::column_misalignment: return "ColumnMisalignment";
        case errc::parse_error: return "ParseError";
        case errc::internal_inconsistency: return "InternalInconsistency";
    }
    return "UnknownError";
}

namespace {

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense polynomial arithmetic over GF(p), used only during construction.
using poly = Field::poly;

poly trim(poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

poly poly_mul(const poly& a, const poly& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return trim(r);
}

// a mod m, with m monic.
poly poly_mod(poly a, const poly& m, unsigned p) {
    a = trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        unsigned lead = a.back();
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i < m.size(); ++i) {
            unsigned sub = (lead * m[i]) % p;
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        a = trim(a);
        if (a.empty()) break;
    }
    return a;
}

// Monic polynomial of degree d whose lower coefficients are the base-p
// digits of idx; used to enumerate trial divisors and default moduli.
poly monic_from_index(std::uint64_t idx, unsigned d, unsigned p) {
    poly f(d + 1, 0);
    for (unsigned i = 0; i < d; ++i) {
        f[i] = static_cast<unsigned>(idx % p);
        idx /= p;
    }
    f[d] = 1;
    return f;
}

bool is_irreducible(const poly& m, unsigned p) {
    const unsigned e = static_cast<unsigned>(m.size()) - 1;
    if (e == 1) return true;
    for (unsigned d = 1; 2 * d <= e; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            poly g = monic_from_index(idx, d, p);
            if (poly_mod(m, g, p).empty()) return false;
        }
    }
    return true;
}

poly default_modulus(unsigned p, unsigned e) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < e; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        poly m = monic_from_index(idx, e, p);
        if (is_irreducible(m, p)) return m;
    }
    fail(errc::internal_inconsistency, "no irreducible polynomial found");
}

std::vector<std::uint32_t> prime_factors(std::uint32_t m) {
    std::vector<std::uint32_t> fs;
    for (std::uint32_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            fs.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) fs.push_back(m);
    return fs;
}

}  // namespace

std::shared_ptr<const Field> Field::make(unsigned p, unsigned e, std::optional<poly> modulus) {
    if (!is_prime(p)) fail(errc::non_prime_characteristic, std::to_string(p) + " is not prime");
    if (e < 1) fail(errc::unsupported_size, "extension degree must be >= 1");

    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > 65536) fail(errc::unsupported_size, "p^e exceeds 65536");
    }

    poly m;
    if (modulus) {
        m = trim(*modulus);
        if (m.size() != e + 1 || m.back() != 1)
            fail(errc::reducible_modulus, "modulus must be monic of degree e");
        for (unsigned c : m)
            if (c >= p) fail(errc::reducible_modulus, "modulus coefficient out of range");
        if (!is_irreducible(m, p))
            fail(errc::reducible_modulus, "modulus factors over GF(p)");
    } else {
        if (q > 512) fail(errc::unsupported_size, "no built-in modulus for p^e > 512");
        m = default_modulus(p, e);
    }

    return std::shared_ptr<const Field>(new Field(p, e, std::move(m)));
}

Field::Field(unsigned p, unsigned e, poly modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
    std::uint32_t q = 1;
    for (unsigned i = 0; i < e; ++i) q *= p;
    q_ = q;
    build_tables();
}

std::vector<unsigned> Field::digits(scalar_t a) const {
    std::vector<unsigned> d(e_);
    unsigned v = a;
    for (unsigned i = 0; i < e_; ++i) {
        d[i] = v % p_;
        v /= p_;
    }
    return d;
}

scalar_t Field::from_digits(const std::vector<unsigned>& d) const {
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i] % p_;
    return static_cast<scalar_t>(v);
}

void Field::build_tables() {
    // Raw polynomial product reduced by the modulus; only used to seed the
    // log/antilog tables below.
    auto mul_raw = [&](scalar_t a, scalar_t b) -> scalar_t {
        poly pa, pb;
        {
            unsigned v = a;
            for (unsigned i = 0; i < e_ && v; ++i, v /= p_)
                if (v % p_) { pa.resize(i + 1); pa[i] = v % p_; }
            v = b;
            for (unsigned i = 0; i < e_ && v; ++i, v /= p_)
                if (v % p_) { pb.resize(i + 1); pb[i] = v % p_; }
        }
        poly r = poly_mod(poly_mul(pa, pb, p_), modulus_, p_);
        std::uint32_t rep = 0;
        for (std::size_t i = r.size(); i-- > 0;) rep = rep * p_ + r[i];
        return static_cast<scalar_t>(rep);
    };

    const std::uint32_t order = q_ - 1;
    auto pow_raw = [&](scalar_t a, std::uint32_t m) {
        scalar_t r = 1;
        while (m) {
            if (m & 1) r = mul_raw(r, a);
            a = mul_raw(a, a);
            m >>= 1;
        }
        return r;
    };

    scalar_t gen = 1;
    if (order > 1) {
        const auto factors = prime_factors(order);
        for (scalar_t c = 2; c < q_; ++c) {
            bool primitive = true;
            for (std::uint32_t f : factors)
                if (pow_raw(c, order / f) == 1) { primitive = false; break; }
            if (primitive) { gen = c; break; }
        }
    }

    exp_.assign(2 * order, 0);
    log_.assign(q_, 0);
    scalar_t x = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
        exp_[i] = x;
        exp_[i + order] = x;
        log_[x] = i;
        x = mul_raw(x, gen);
    }
    if (x != 1) fail(errc::internal_inconsistency, "generator order mismatch");

    if (p_ != 2) {
        neg_table_.assign(q_, 0);
        for (std::uint32_t a = 0; a < q_; ++a) {
            auto d = digits(static_cast<scalar_t>(a));
            for (auto& c : d) c = (p_ - c) % p_;
            neg_table_[a] = from_digits(d);
        }
        add_table_.assign(std::size_t(q_) * q_, 0);
        for (std::uint32_t a = 0; a < q_; ++a) {
            const auto da = digits(static_cast<scalar_t>(a));
            for (std::uint32_t b = 0; b < q_; ++b) {
                auto db = digits(static_cast<scalar_t>(b));
                for (unsigned i = 0; i < e_; ++i) db[i] = (da[i] + db[i]) % p_;
                add_table_[std::size_t(a) * q_ + b] = from_digits(db);
            }
        }
    }
}

scalar_t Field::add(scalar_t a, scalar_t b) const {
    if (p_ == 2) return a ^ b;
    return add_table_[std::size_t(a) * q_ + b];
}

scalar_t Field::neg(scalar_t a) const {
    if (p_ == 2) return a;
    return neg_table_[a];
}

scalar_t Field::sub(scalar_t a, scalar_t b) const {
    if (p_ == 2) return a ^ b;
    return add_table_[std::size_t(a) * q_ + neg_table_[b]];
}

scalar_t Field::mul(scalar_t a, scalar_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

scalar_t Field::inv(scalar_t a) const {
    if (a == 0) fail(errc::division_by_zero, "inv(0)");
    const std::uint32_t order = q_ - 1;
    return exp_[(order - log_[a]) % order];
}

scalar_t Field::pow(scalar_t a, std::uint64_t m) const {
    if (m == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t order = q_ - 1;
    return exp_[(log_[a] * (m % order)) % order];
}

scalar_t Field::sqrt(scalar_t a) const {
    if (p_ != 2) fail(errc::wrong_characteristic, "sqrt is the Frobenius inverse, char 2 only");
    return pow(a, q_ / 2);
}

}  // namespace ogc
