#include <set>

#include "doctest.h"
#include "ogc/grassmann.hpp"

using namespace ogc;

namespace {

Subspace span_of(const FieldPtr& f, std::vector<std::vector<scalar_t>> rows) {
    Matrix m(f, rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    return Subspace::from_generators(m);
}

std::uint64_t delta2_count_formula(std::uint64_t q, unsigned n) {
    return (pow_u64(q, 2 * n) - 1) * (pow_u64(q, 2 * n - 2) - 1) / ((q - 1) * (q * q - 1));
}

}  // namespace

TEST_CASE("k_subsets is lexicographic and complete") {
    auto subs = k_subsets(5, 2);
    CHECK(subs.size() == 10);
    CHECK(subs.front() == std::vector<unsigned>{0, 1});
    CHECK(subs.back() == std::vector<unsigned>{3, 4});
    CHECK(std::is_sorted(subs.begin(), subs.end()));
    CHECK(binomial(7, 3) == 35);
    CHECK(k_subsets(7, 3).size() == 35);
}

TEST_CASE("plucker embedding basics") {
    auto f2 = Field::make(2, 1);

    auto e12 = span_of(f2, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}});
    auto coords = plucker_embed(e12);
    CHECK(coords.size() == 10);
    CHECK(coords[0] == 1);
    for (std::size_t i = 1; i < coords.size(); ++i) CHECK(coords[i] == 0);

    // different generating sets of one subspace give one embedding
    auto s1 = span_of(f2, {{1, 0, 1, 0, 0}, {0, 1, 0, 0, 0}});
    auto s2 = span_of(f2, {{1, 1, 1, 0, 0}, {0, 1, 0, 0, 0}});
    CHECK(plucker_embed(s1) == plucker_embed(s2));

    // <e1+e3, e2>: nonzero minors exactly on {1,2} and {2,3}
    auto subs = k_subsets(5, 2);
    auto c = plucker_embed(s1);
    for (std::size_t i = 0; i < subs.size(); ++i) {
        const bool expect = subs[i] == std::vector<unsigned>{0, 1} ||
                            subs[i] == std::vector<unsigned>{1, 2};
        CHECK((c[i] != 0) == expect);
    }
}

TEST_CASE("orthogonal line grassmannian counts") {
    struct Cfg {
        unsigned p, e, n;
    } cfgs[] = {{2, 1, 2}, {2, 1, 3}, {3, 1, 2}, {2, 2, 2}};
    for (auto cfg : cfgs) {
        auto space = std::make_shared<QuadraticSpace>(Field::make(cfg.p, cfg.e), cfg.n);
        auto sys = enumerate_delta_k(space, 2);
        CHECK(sys.columns.size() == delta2_count_formula(space->q(), cfg.n));

        // columns strictly ordered, labels distinct
        for (std::size_t i = 1; i < sys.columns.size(); ++i)
            CHECK(sys.columns[i - 1].label < sys.columns[i].label);

        // plucker embedding injective on columns
        std::set<std::vector<scalar_t>> images;
        for (const auto& col : sys.columns) images.insert(col.coords);
        CHECK(images.size() == sys.columns.size());

        // grade-1 system is the quadric itself
        CHECK(enumerate_delta_k(space, 1).columns.size() == space->quadric_points().size());

        CHECK_THROWS_WITH_AS(enumerate_delta_k(space, cfg.n + 1), doctest::Contains("BadGrade"),
                             Error);
    }
}

TEST_CASE("every column is totally singular, exhaustively") {
    auto space = std::make_shared<QuadraticSpace>(Field::make(2, 1), 3);
    auto sys = enumerate_delta_k(space, 2);
    for (const auto& col : sys.columns)
        for_each_vector(col.label,
                        [&](std::span<const scalar_t> v) { CHECK(space->eta(v) == 0); });
}

TEST_CASE("line count against an independent pair-enumeration oracle") {
    auto space = std::make_shared<QuadraticSpace>(Field::make(2, 1), 3);
    const auto& pts = space->quadric_points();
    const std::uint64_t q = 2;
    std::uint64_t isotropic_pairs = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            isotropic_pairs += space->beta(pts[i], pts[j]) == 0;
    // each totally singular line carries C(q+1, 2) point pairs
    const std::uint64_t pairs_per_line = (q + 1) * q / 2;
    CHECK(isotropic_pairs % pairs_per_line == 0);
    CHECK(isotropic_pairs / pairs_per_line == 315);
    CHECK(enumerate_delta_k(space, 2).columns.size() == 315);
}

TEST_CASE("maximal totally singular subspaces of the n = 3 quadric") {
    auto space = std::make_shared<QuadraticSpace>(Field::make(2, 1), 3);
    auto sys = enumerate_delta_k(space, 3);
    CHECK(sys.columns.size() == 135);  // (q+1)(q^2+1)(q^3+1)
    for (const auto& col : sys.columns) CHECK(col.label.dim() == 3);
    CHECK(sys.columns.front().coords.size() == binomial(7, 3));
}

TEST_CASE("symplectic line system is aligned with the orthogonal one") {
    for (auto cfg : {std::pair<unsigned, unsigned>{2, 2}, {2, 3}}) {
        auto space = std::make_shared<QuadraticSpace>(Field::make(cfg.first, 1), cfg.second);
        auto orth = enumerate_delta_k(space, 2);
        auto symp = enumerate_symplectic_lines(space);
        CHECK(symp.columns.size() == orth.columns.size());
        CHECK(symp.label_dim == space->dim() - 1);

        std::set<Subspace> images;
        const Matrix& m = space->beta_matrix();
        for (std::size_t i = 0; i < symp.columns.size(); ++i) {
            const auto& ob = orth.columns[i].label.basis();
            const auto& sb = symp.columns[i].label.basis();
            // the image is the orthogonal basis with the last coordinate dropped
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t c = 0; c + 1 < space->dim(); ++c)
                    CHECK(sb.at(r, c) == ob.at(r, c));
            images.insert(symp.columns[i].label);
            // totally isotropic for the induced symplectic form
            scalar_t acc = 0;
            const Field& f = *space->field();
            for (std::size_t a = 0; a + 1 < space->dim(); ++a)
                for (std::size_t b = 0; b + 1 < space->dim(); ++b)
                    acc = f.add(acc, f.mul(sb.at(0, a), f.mul(m.at(a, b), sb.at(1, b))));
            CHECK(acc == 0);
        }
        CHECK(images.size() == symp.columns.size());  // the quotient map is injective on lines
    }
    CHECK_THROWS_WITH_AS(
        enumerate_symplectic_lines(std::make_shared<QuadraticSpace>(Field::make(3, 1), 2)),
        doctest::Contains("WrongCharacteristic"), Error);
}
