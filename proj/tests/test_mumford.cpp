#include <doctest.h>

#include "slopecalc/errors.hpp"
#include "slopecalc/mumford.hpp"

using namespace slopecalc;

namespace {

SlopeMultiset ms(std::vector<std::pair<Rational, long>> pairs) {
    return SlopeMultiset::from_pairs(std::move(pairs));
}

// independent Pascal-triangle binomials
long pascal(long n, long k) {
    std::vector<std::vector<long>> t(n + 1);
    for (long i = 0; i <= n; ++i) {
        t[i].assign(i + 1, 1);
        for (long j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return t[n][k];
}

} // namespace

TEST_CASE("epsilon_from_b") {
    CHECK(epsilon_from_b(1) == 0);
    CHECK(epsilon_from_b(-1) == 1);
    CHECK(epsilon_from_b(5) == 1);
    CHECK_THROWS_AS(epsilon_from_b(0), schema_error);
    CHECK_THROWS_AS(epsilon_from_b(12), schema_error);
}

TEST_CASE("decomposition_shape") {
    CHECK(decomposition_shape({3, 3, 0}) == DecompositionShape{8, 8, 1, 1});
    CHECK(decomposition_shape({1, 1, 0}) == DecompositionShape{2, 2, 1, 1});
    CHECK(decomposition_shape({2, 1, 1}) == DecompositionShape{8, 2, 2, 2});
    CHECK_THROWS_AS(decomposition_shape({2, 3, 0}), schema_error);
}

TEST_CASE("v_polygons") {
    auto [ss1, ord1] = v_polygons(1);
    CHECK(ss1.slopes == ms({{rat(1, 2), 2}}));
    CHECK(ord1.slopes == ms({{rat(0), 1}, {rat(1), 1}}));

    auto [ss2, ord2] = v_polygons(2);
    CHECK(ss2.slopes == ms({{rat(1, 2), 4}}));
    CHECK(ord2.slopes == ms({{rat(0), 1}, {rat(1, 2), 2}, {rat(1), 1}}));

    auto [ss3, ord3] = v_polygons(3);
    CHECK(ss3.slopes == ms({{rat(1, 2), 8}}));
    CHECK(ord3.slopes == ms({{rat(0), 1}, {rat(1, 3), 3}, {rat(2, 3), 3}, {rat(1), 1}}));
}

TEST_CASE("v_polygon_from_factors agrees with the closed form") {
    CHECK(v_polygon_from_factors(2, NewtonCase::ordinary_type).slopes ==
          ms({{rat(0), 1}, {rat(1, 2), 2}, {rat(1), 1}}));
    CHECK(v_polygon_from_factors(2, NewtonCase::supersingular).slopes ==
          ms({{rat(1, 2), 4}}));
    for (long r = 1; r <= 12; ++r) {
        auto [ss, ord] = v_polygons(r);
        CHECK(v_polygon_from_factors(r, NewtonCase::supersingular) == ss);
        CHECK(v_polygon_from_factors(r, NewtonCase::ordinary_type) == ord);
    }
}

TEST_CASE("classify") {
    Classification mumford = classify({3, 3, 0});
    CHECK(mumford.supersingular.slopes == ms({{rat(1, 2), 8}}));
    CHECK(mumford.mu_ordinary.slopes ==
          ms({{rat(0), 1}, {rat(1, 3), 3}, {rat(2, 3), 3}, {rat(1), 1}}));

    Classification c21 = classify({2, 1, 1});
    CHECK(c21.supersingular.slopes == ms({{rat(1, 2), 8}}));
    CHECK(c21.mu_ordinary.slopes == ms({{rat(0), 4}, {rat(1), 4}}));

    Classification c42 = classify({4, 2, 0});
    CHECK(c42.supersingular.slopes == ms({{rat(1, 2), 16}}));
    CHECK(c42.mu_ordinary.slopes == ms({{rat(0), 4}, {rat(1, 2), 8}, {rat(1), 4}}));

    CHECK_THROWS_AS(classify({2, 3, 0}), schema_error);
}

TEST_CASE("classification sweep properties") {
    for (long d = 1; d <= 8; ++d)
        for (long r = 1; r <= d; ++r)
            for (long eps = 0; eps <= 1; ++eps) {
                Classification cls = classify({d, r, eps});
                long dim = 1L << (d + eps);
                for (const SlopeData* poly : {&cls.supersingular, &cls.mu_ordinary}) {
                    CHECK(is_symmetric(poly->slopes));
                    CHECK(poly->dim() == dim);
                    CHECK(total_slope(poly->slopes) == rat(dim, 2));
                    // integral vertex heights at each slope change
                    Rational y = 0;
                    for (const auto& e : poly->slopes.entries()) {
                        y += e.slope * e.mult;
                        CHECK(y.get_den() == 1);
                    }
                }
                // the supersingular polygon is the highest
                CHECK(lies_on_or_above(cls.supersingular.slopes, cls.mu_ordinary.slopes));
                // binomial multiplicities
                long scale = 1L << (d - r + eps);
                for (long i = 0; i <= r; ++i)
                    CHECK(cls.mu_ordinary.slopes.mult_of(rat(i, r)) ==
                          scale * pascal(r, i));
            }
}

TEST_CASE("verify_classification") {
    CHECK(verify_classification({3, 3, 0}).all_pass());
    CHECK(verify_classification({1, 1, 0}).all_pass());
    CHECK_THROWS_AS(verify_classification({1, 2, 0}), schema_error);
}
