#include <random>
#include <set>

#include "doctest.h"
#include "ogc/quadric.hpp"

using namespace ogc;

namespace {

std::vector<scalar_t> unit(std::size_t d, std::size_t i) {
    std::vector<scalar_t> v(d, 0);
    v[i] = 1;
    return v;
}

Subspace span_of(const FieldPtr& f, std::vector<std::vector<scalar_t>> rows) {
    Matrix m(f, rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    return Subspace::from_generators(m);
}

AlternatingForm random_form(const QuadraticSpace& space, std::mt19937_64& rng) {
    const auto& f = space.field();
    Matrix s(f, space.dim(), space.dim());
    for (std::size_t i = 0; i < space.dim(); ++i)
        for (std::size_t j = i + 1; j < space.dim(); ++j) {
            const auto v = static_cast<scalar_t>(rng() % f->q());
            s.at(i, j) = v;
            s.at(j, i) = f->neg(v);
        }
    return AlternatingForm(std::move(s));
}

// brute force over all vectors, independent of the canonical-point walk
std::uint64_t singular_point_count_oracle(const QuadraticSpace& space) {
    const std::uint64_t q = space.q();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < space.dim(); ++i) total *= q;
    std::uint64_t vecs = 0;
    std::vector<scalar_t> v(space.dim());
    for (std::uint64_t m = 1; m < total; ++m) {
        std::uint64_t x = m;
        for (std::size_t i = 0; i < space.dim(); ++i) {
            v[i] = static_cast<scalar_t>(x % q);
            x /= q;
        }
        if (space.eta(v) == 0) ++vecs;
    }
    return vecs / (q - 1);
}

}  // namespace

TEST_CASE("eta literal values") {
    QuadraticSpace s(Field::make(2, 1), 2);
    CHECK(s.eta(unit(5, 0)) == 0);
    CHECK(s.eta(unit(5, 4)) == 1);
    std::vector<scalar_t> e12 = {1, 1, 0, 0, 0};
    CHECK(s.eta(e12) == 1);
    std::vector<scalar_t> bad = {1, 0, 0};
    CHECK_THROWS_AS(s.eta(bad), Error);
}

TEST_CASE("beta values and matrix shape") {
    for (auto fp : {Field::make(2, 1), Field::make(2, 2)}) {
        QuadraticSpace s(fp, 2);
        CHECK(s.beta(unit(5, 0), unit(5, 1)) == 1);
        // alternating in characteristic 2; the radical is the last basis vector
        std::mt19937_64 rng(1);
        for (int t = 0; t < 20; ++t) {
            std::vector<scalar_t> x(5), y(5);
            for (auto& v : x) v = static_cast<scalar_t>(rng() % fp->q());
            for (auto& v : y) v = static_cast<scalar_t>(rng() % fp->q());
            CHECK(s.beta(x, x) == 0);
            CHECK(s.beta(x, y) == s.beta(y, x));
        }
        for (int j = 0; j < 5; ++j) {
            CHECK(s.beta_matrix().at(4, j) == 0);
            CHECK(s.beta_matrix().at(j, 4) == 0);
        }
        // paired blocks
        CHECK(s.beta_matrix().at(0, 1) == 1);
        CHECK(s.beta_matrix().at(1, 0) == 1);
        CHECK(s.beta_matrix().at(2, 3) == 1);
        CHECK(s.beta_matrix().at(0, 2) == 0);
    }
}

TEST_CASE("nucleus") {
    QuadraticSpace s22(Field::make(2, 1), 2);
    auto nuc = s22.nucleus();
    CHECK(nuc.dim() == 1);
    CHECK(nuc.basis().row(0)[4] == 1);
    for (int j = 0; j < 4; ++j) CHECK(nuc.basis().row(0)[j] == 0);
    CHECK(nuc == kernel(s22.beta_matrix()));

    QuadraticSpace s42(Field::make(2, 2), 2);
    CHECK(s42.nucleus().dim() == 1);

    QuadraticSpace s32(Field::make(3, 1), 2);
    CHECK_THROWS_WITH_AS(s32.nucleus(), doctest::Contains("WrongCharacteristic"), Error);
}

TEST_CASE("quadric point lists") {
    struct Cfg {
        unsigned p, e, n;
        std::uint64_t expect;
    } cfgs[] = {{2, 1, 2, 15}, {2, 2, 2, 85}, {2, 1, 3, 63}, {3, 1, 2, 40}};
    for (auto cfg : cfgs) {
        QuadraticSpace s(Field::make(cfg.p, cfg.e), cfg.n);
        const auto& pts = s.quadric_points();
        CHECK(pts.size() == cfg.expect);
        CHECK(pts.size() == singular_point_count_oracle(s));
        CHECK(std::is_sorted(pts.begin(), pts.end()));
        for (const auto& p : pts) {
            CHECK(s.eta(p) == 0);
            CHECK(canonical_point(p, *s.field()) == p);
        }
    }
}

TEST_CASE("tangent hyperplanes") {
    QuadraticSpace s(Field::make(2, 1), 2);
    auto th = s.tangent_hyperplane(unit(5, 0));
    CHECK(th.dim() == 4);
    // beta(e1, x) = x2, so the kernel misses e2 and keeps the rest
    CHECK(th.contains(unit(5, 0)));
    CHECK(!th.contains(unit(5, 1)));
    CHECK(th.contains(unit(5, 2)));
    CHECK(th.contains(unit(5, 4)));

    for (auto fp : {Field::make(2, 1), Field::make(2, 2)}) {
        QuadraticSpace sp(fp, 2);
        const auto nuc = sp.nucleus();
        const auto nuc_vec = nuc.basis().row(0);
        for (const auto& u : sp.quadric_points()) {
            auto t = sp.tangent_hyperplane(u);
            CHECK(t.dim() == 2 * sp.n());
            CHECK(t.contains(u));
            CHECK(t.contains(nuc_vec));
        }
    }

    CHECK_THROWS_WITH_AS(s.tangent_hyperplane(unit(5, 4)), doctest::Contains("NonSingularPoint"),
                         Error);
}

TEST_CASE("every line through the nucleus is tangent (q even)") {
    for (auto fp : {Field::make(2, 1), Field::make(2, 2)}) {
        QuadraticSpace s(fp, 2);
        auto nuc = s.nucleus();
        std::mt19937_64 rng(9);
        const auto& pts = s.quadric_points();
        for (int t = 0; t < 25; ++t) {
            const auto& u = pts[rng() % pts.size()];
            Matrix gens(fp, 2, s.dim());
            for (std::size_t c = 0; c < s.dim(); ++c) {
                gens.at(0, c) = nuc.basis().at(0, c);
                gens.at(1, c) = u[c];
            }
            auto line = Subspace::from_generators(gens);
            std::size_t singular = 0;
            for (const auto& p : canonical_points(line)) singular += s.eta(p) == 0;
            CHECK(singular == 1);
        }
    }
}

TEST_CASE("tangent hyperplane collects the points collinear on the quadric") {
    QuadraticSpace s(Field::make(2, 1), 3);
    const auto& pts = s.quadric_points();
    std::mt19937_64 rng(13);
    for (int t = 0; t < 10; ++t) {
        const auto& u = pts[rng() % pts.size()];
        auto tang = s.tangent_hyperplane(u);
        for (const auto& v : pts) {
            if (v == u) continue;
            // <u,v> totally singular iff eta(u)=eta(v)=0 and beta(u,v)=0
            const bool in_tangent = tang.contains(v);
            CHECK(in_tangent == (s.beta(u, v) == 0));
        }
    }
}

TEST_CASE("alternating form validation and radicals") {
    QuadraticSpace s(Field::make(2, 1), 2);
    CHECK(AlternatingForm::zero(s).radical().dim() == 5);
    CHECK(AlternatingForm::polarization(s).radical() == s.nucleus());
    CHECK(AlternatingForm::elementary(s, 0, 1).radical().dim() == 3);

    Matrix bad(Field::make(2, 1), 5, 5);
    bad.at(0, 0) = 1;
    CHECK_THROWS_AS((AlternatingForm(bad)), Error);
    Matrix asym(Field::make(3, 1), 5, 5);
    asym.at(0, 1) = 1;
    asym.at(1, 0) = 1;  // should be -1 over GF(3)
    CHECK_THROWS_AS((AlternatingForm(asym)), Error);

    std::mt19937_64 rng(21);
    for (auto fp : {Field::make(2, 1), Field::make(3, 1)}) {
        QuadraticSpace sp(fp, 2);
        for (int t = 0; t < 30; ++t) {
            auto f = random_form(sp, rng);
            CHECK(f.radical().dim() % 2 == 1);  // odd-order antisymmetric matrices are singular
        }
    }
}

TEST_CASE("section census on hand-built sections") {
    auto f2 = Field::make(2, 1);
    QuadraticSpace s(f2, 2);

    auto census_v = section_census(s, s.whole_space());
    CHECK(census_v.point_count == 15);
    CHECK(census_v.sigma == 15);

    // a totally singular line
    auto line = span_of(f2, {unit(5, 0), unit(5, 2)});
    auto census_l = section_census(s, line);
    CHECK(census_l.point_count == 3);
    CHECK(census_l.sigma == 1);
    CHECK(census_l.vertex.dim() == 2);
}

TEST_CASE("classification of the four section families at n = 2") {
    for (auto fp : {Field::make(2, 1), Field::make(2, 2)}) {
        const std::uint64_t q = fp->q();
        QuadraticSpace s(fp, 2);

        auto conic = classify_section(s, span_of(fp, {unit(5, 0), unit(5, 1), unit(5, 4)}));
        CHECK(conic.section_class == SectionClass::parabolic);
        CHECK(conic.point_count == q + 1);
        CHECK(conic.sigma == 0);
        CHECK(conic.point_count == section_points_formula(SectionClass::parabolic, q, 2));
        CHECK(conic.sigma == section_lines_formula(SectionClass::parabolic, q, 2));

        auto hyp = classify_section(s, span_of(fp, {unit(5, 0), unit(5, 1), unit(5, 2)}));
        CHECK(hyp.section_class == SectionClass::hyperbolic_cone);
        CHECK(hyp.point_count == 2 * q + 1);
        CHECK(hyp.sigma == 2);
        CHECK(hyp.point_count == section_points_formula(SectionClass::hyperbolic_cone, q, 2));
        CHECK(hyp.sigma == section_lines_formula(SectionClass::hyperbolic_cone, q, 2));

        auto lv = classify_section(s, span_of(fp, {unit(5, 0), unit(5, 2), unit(5, 4)}));
        CHECK(lv.section_class == SectionClass::line_vertex_parabolic);
        CHECK(lv.point_count == q + 1);
        CHECK(lv.sigma == 1);
        CHECK(lv.sigma == section_lines_formula(SectionClass::line_vertex_parabolic, q, 2));

        CHECK_THROWS_AS(classify_section(s, span_of(fp, {unit(5, 0), unit(5, 1)})), Error);
    }
}

TEST_CASE("radical profile marks the nucleus") {
    QuadraticSpace s(Field::make(2, 1), 2);
    auto prof_beta = radical_profile(s, AlternatingForm::polarization(s));
    CHECK(prof_beta.rad_dim == 1);
    CHECK(prof_beta.contains_nucleus);
    CHECK(prof_beta.section_class == SectionClass::other);

    auto prof_e = radical_profile(s, AlternatingForm::elementary(s, 0, 1));
    CHECK(prof_e.rad_dim == 3);
    CHECK(prof_e.contains_nucleus);  // <e3,e4,e5> contains e5
    CHECK(prof_e.section_class == SectionClass::parabolic);
}
