#include "ogc/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace ogc {

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Matrix::lex_less(const Matrix& o) const {
    return std::lexicographical_compare(a_.begin(), a_.end(), o.a_.begin(), o.a_.end());
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RrefResult rref(const Matrix& m) {
    RrefResult res;
    res.mat = m;
    Matrix& a = res.mat;
    const Field& f = *m.field();
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t pr = r;
        while (pr < a.rows() && a.at(pr, c) == 0) ++pr;
        if (pr == a.rows()) continue;
        if (pr != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(pr, j), a.at(r, j));
        const scalar_t piv_inv = f.inv(a.at(r, c));
        for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) = f.mul(a.at(r, j), piv_inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            const scalar_t factor = a.at(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(r, j)));
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) fail(errc::dimension_mismatch, "mat_mul shapes");
    const Field& f = *a.field();
    Matrix c(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const scalar_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) = f.add(c.at(i, j), f.mul(aik, b.at(k, j)));
        }
    return c;
}

std::vector<scalar_t> mat_vec(const Matrix& m, std::span<const scalar_t> x) {
    if (x.size() != m.cols()) fail(errc::dimension_mismatch, "mat_vec shapes");
    const Field& f = *m.field();
    std::vector<scalar_t> y(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        scalar_t acc = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) acc = f.add(acc, f.mul(m.at(i, j), x[j]));
        y[i] = acc;
    }
    return y;
}

std::vector<scalar_t> vec_mat(std::span<const scalar_t> x, const Matrix& m) {
    if (x.size() != m.rows()) fail(errc::dimension_mismatch, "vec_mat shapes");
    const Field& f = *m.field();
    std::vector<scalar_t> y(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            y[j] = f.add(y[j], f.mul(x[i], m.at(i, j)));
    }
    return y;
}

Matrix stack_rows(const Matrix& top, const Matrix& bottom) {
    if (top.cols() != bottom.cols()) fail(errc::dimension_mismatch, "stack_rows widths");
    Matrix s(top.field(), top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r)
        for (std::size_t c = 0; c < top.cols(); ++c) s.at(r, c) = top.at(r, c);
    for (std::size_t r = 0; r < bottom.rows(); ++r)
        for (std::size_t c = 0; c < bottom.cols(); ++c) s.at(top.rows() + r, c) = bottom.at(r, c);
    return s;
}

bool row_space_contains(const Matrix& outer, const Matrix& inner) {
    if (outer.cols() != inner.cols() || outer.field()->q() != inner.field()->q())
        fail(errc::dimension_mismatch, "row_space_contains operands");
    const std::size_t r_outer = rref(outer).rank;
    return rref(stack_rows(outer, inner)).rank == r_outer;
}

std::vector<scalar_t> canonical_point(std::span<const scalar_t> v, const Field& f) {
    std::size_t lead = 0;
    while (lead < v.size() && v[lead] == 0) ++lead;
    if (lead == v.size()) fail(errc::zero_vector, "canonical_point of zero vector");
    std::vector<scalar_t> out(v.begin(), v.end());
    if (v[lead] != 1) {
        const scalar_t s = f.inv(v[lead]);
        for (auto& x : out) x = f.mul(x, s);
    }
    return out;
}

Subspace Subspace::from_generators(const Matrix& gens) {
    RrefResult r = rref(gens);
    Matrix basis(gens.field(), r.rank, gens.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t c = 0; c < gens.cols(); ++c) basis.at(i, c) = r.mat.at(i, c);
    Subspace s;
    s.basis_ = std::move(basis);
    return s;
}

Subspace Subspace::from_rref(Matrix basis) {
    Subspace s;
    s.basis_ = std::move(basis);
    return s;
}

bool Subspace::contains(std::span<const scalar_t> v) const {
    // Reduce v against the RREF basis; membership iff the remainder is zero.
    if (v.size() != ambient()) fail(errc::dimension_mismatch, "contains: vector length");
    const Field& f = *basis_.field();
    std::vector<scalar_t> w(v.begin(), v.end());
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t pc = 0;
        while (basis_.at(i, pc) == 0) ++pc;
        if (w[pc] == 0) continue;
        const scalar_t factor = w[pc];
        for (std::size_t j = pc; j < w.size(); ++j)
            w[j] = f.sub(w[j], f.mul(factor, basis_.at(i, j)));
    }
    return std::all_of(w.begin(), w.end(), [](scalar_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    return row_space_contains(basis_, other.basis());
}

Subspace kernel(const Matrix& m) {
    RrefResult r = rref(m);
    const std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;
    const Field& f = *m.field();
    Matrix basis(m.field(), nc - r.rank, nc);
    std::size_t row = 0;
    for (std::size_t c = 0; c < nc; ++c) {
        if (is_pivot[c]) continue;
        basis.at(row, c) = 1;
        for (std::size_t i = 0; i < r.rank; ++i) basis.at(row, r.pivots[i]) = f.neg(r.mat.at(i, c));
        ++row;
    }
    return Subspace::from_generators(basis);
}

Subspace join(const Subspace& a, const Subspace& b) {
    return Subspace::from_generators(stack_rows(a.basis(), b.basis()));
}

void for_each_vector(const Subspace& s,
                     const std::function<void(std::span<const scalar_t>)>& fn) {
    const std::size_t d = s.dim();
    if (d == 0) return;
    const Field& f = *s.field();
    const std::uint32_t q = f.q();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= q;
    std::vector<scalar_t> coeff(d, 0), v(s.ambient());
    for (std::uint64_t m = 1; m < total; ++m) {
        std::uint64_t t = m;
        for (std::size_t i = d; i-- > 0;) {  // big-endian digits: coeff[0] most significant
            coeff[i] = static_cast<scalar_t>(t % q);
            t /= q;
        }
        std::fill(v.begin(), v.end(), 0);
        for (std::size_t i = 0; i < d; ++i) {
            if (coeff[i] == 0) continue;
            for (std::size_t j = 0; j < s.ambient(); ++j)
                v[j] = f.add(v[j], f.mul(coeff[i], s.basis().at(i, j)));
        }
        fn(v);
    }
}

std::vector<std::vector<scalar_t>> canonical_points(const Subspace& s) {
    // Coefficient tuples with first nonzero coefficient 1 give exactly one
    // representative per 1-subspace, and the combination over an RREF basis
    // is already a canonical vector. Walking the leading row from last to
    // first yields ambient-lexicographic order.
    const std::size_t d = s.dim();
    std::vector<std::vector<scalar_t>> pts;
    if (d == 0) return pts;
    const Field& f = *s.field();
    const std::uint32_t q = f.q();
    for (std::size_t t = d; t-- > 0;) {
        const std::size_t tail = d - 1 - t;
        std::uint64_t combos = 1;
        for (std::size_t i = 0; i < tail; ++i) combos *= q;
        std::vector<scalar_t> coeff(d, 0);
        coeff[t] = 1;
        for (std::uint64_t m = 0; m < combos; ++m) {
            std::uint64_t x = m;
            for (std::size_t i = d; i-- > t + 1;) {
                coeff[i] = static_cast<scalar_t>(x % q);
                x /= q;
            }
            std::vector<scalar_t> v(s.ambient(), 0);
            for (std::size_t i = t; i < d; ++i) {
                if (coeff[i] == 0) continue;
                for (std::size_t j = 0; j < s.ambient(); ++j)
                    v[j] = f.add(v[j], f.mul(coeff[i], s.basis().at(i, j)));
            }
            pts.push_back(std::move(v));
        }
    }
    return pts;
}

std::string matrix_to_text(const Matrix& m) {
    std::ostringstream os;
    os << m.rows() << ' ' << m.cols() << ' ' << m.field()->q() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ' ';
            os << m.at(r, c);
        }
        os << '\n';
    }
    return os.str();
}

Matrix matrix_from_text(std::istream& in, const FieldPtr& field_hint) {
    std::size_t rows, cols;
    std::uint64_t q;
    if (!(in >> rows >> cols >> q)) fail(errc::parse_error, "matrix header");
    FieldPtr f = field_hint;
    if (f) {
        if (f->q() != q) fail(errc::parse_error, "matrix field size does not match context");
    } else {
        if (q < 2) fail(errc::parse_error, "matrix header q must be a prime power >= 2");
        unsigned p = 2;
        while (q % p != 0) ++p;
        unsigned e = 0;
        std::uint64_t t = q;
        while (t > 1) {
            if (t % p != 0) fail(errc::parse_error, "q is not a prime power");
            t /= p;
            ++e;
        }
        f = Field::make(p, e);
    }
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            std::uint64_t v;
            if (!(in >> v)) fail(errc::parse_error, "matrix entry");
            if (v >= f->q()) fail(errc::parse_error, "matrix entry out of field range");
            m.at(r, c) = static_cast<scalar_t>(v);
        }
    return m;
}

Matrix matrix_from_text(const std::string& text, const FieldPtr& field_hint) {
    std::istringstream is(text);
    return matrix_from_text(is, field_hint);
}

}  // namespace ogc
