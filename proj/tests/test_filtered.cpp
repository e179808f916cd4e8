#include <doctest.h>

#include "slopecalc/errors.hpp"
#include "slopecalc/filtered.hpp"

using namespace slopecalc;

namespace {

SlopeMultiset ms(std::vector<std::pair<Rational, long>> pairs) {
    return SlopeMultiset::from_pairs(std::move(pairs));
}

SlopeData sd(std::vector<std::pair<Rational, long>> pairs) {
    return make_slope_data(std::move(pairs), 1);
}

} // namespace

TEST_CASE("hodge_from_filtration") {
    CHECK(hodge_from_filtration({{0, 3}, {1, 1}}) == ms({{rat(0), 3}, {rat(1), 1}}));
    CHECK(hodge_from_filtration({{0, 5}}) == ms({{rat(0), 5}}));
    CHECK(hodge_from_filtration({{0, 1}, {1, 1}}) == ms({{rat(0), 1}, {rat(1), 1}}));
    CHECK_THROWS_AS(hodge_from_filtration({{0, 0}}), schema_error);
}

TEST_CASE("admissible_necessary") {
    SlopeMultiset weight_one = ms({{rat(0), 1}, {rat(1), 1}});
    CHECK(admissible_necessary({sd({{rat(1, 2), 2}}), weight_one}));
    CHECK(admissible_necessary({sd({{rat(0), 1}, {rat(1), 1}}), weight_one}));
    CHECK_FALSE(admissible_necessary({sd({{rat(0), 2}}), weight_one}));
    CHECK_THROWS_AS(FilteredData(sd({{rat(0), 1}}), weight_one), semantic_error);
}

TEST_CASE("enumerate_v1_newton two-case theorem") {
    for (long r = 1; r <= 8; ++r) {
        auto got = enumerate_v1_newton(r);
        REQUIRE(got.size() == 2);
        CHECK(got[0].slopes == ms({{rat(1, 2 * r), 2 * r}}));
        CHECK(got[1].slopes == ms({{rat(0), r}, {rat(1, r), r}}));
        // re-check admissibility of each output
        SlopeMultiset hodge = hodge_from_filtration(
            r == 1 ? std::map<long, long>{{0, 1}, {1, 1}}
                   : std::map<long, long>{{0, 2 * r - 1}, {1, 1}});
        for (const auto& s : got) CHECK(admissible_necessary({s, hodge}));
    }
}

TEST_CASE("brute_enumerate small cases") {
    SlopeMultiset weight_one = ms({{rat(0), 1}, {rat(1), 1}});
    auto got = brute_enumerate(2, weight_one, 2);
    REQUIRE(got.size() == 2);
    // lexicographic: {0, 1} before {1/2, 1/2}
    CHECK(got[0].slopes == ms({{rat(0), 1}, {rat(1), 1}}));
    CHECK(got[1].slopes == ms({{rat(1, 2), 2}}));

    auto flat = brute_enumerate(2, ms({{rat(0), 2}}), 2);
    REQUIRE(flat.size() == 1);
    CHECK(flat[0].slopes == ms({{rat(0), 2}}));

    CHECK_THROWS_AS(brute_enumerate(2, weight_one, 100), schema_error);
    CHECK_THROWS_AS(brute_enumerate(3, weight_one, 2), semantic_error);
}

TEST_CASE("brute_enumerate outputs pass admissibility and match the serial kernel") {
    for (long r = 1; r <= 3; ++r) {
        SlopeMultiset hodge = hodge_from_filtration(
            r == 1 ? std::map<long, long>{{0, 1}, {1, 1}}
                   : std::map<long, long>{{0, 2 * r - 1}, {1, 1}});
        auto par = brute_enumerate(2 * r, hodge, 2 * r);
        auto ser = brute_enumerate_serial(2 * r, hodge, 2 * r);
        CHECK(par == ser);
        for (const auto& s : par) CHECK(admissible_necessary({s, hodge}));
    }
}

TEST_CASE("oracle restricted to the two-slope r-divisible shape equals the closed form") {
    for (long r = 1; r <= 4; ++r) {
        SlopeMultiset hodge = hodge_from_filtration(
            r == 1 ? std::map<long, long>{{0, 1}, {1, 1}}
                   : std::map<long, long>{{0, 2 * r - 1}, {1, 1}});
        auto oracle = brute_enumerate(2 * r, hodge, 2 * r);
        std::vector<SlopeData> restricted;
        for (const auto& s : oracle) {
            const auto& e = s.slopes.entries();
            bool two_slope_shape =
                (e.size() == 1 || (e.size() == 2 && e[0].slope == 0));
            bool divisible = true;
            for (const auto& entry : e)
                if (entry.mult % r != 0) divisible = false;
            if (two_slope_shape && divisible) restricted.push_back(s);
        }
        auto closed = enumerate_v1_newton(r);
        REQUIRE(restricted.size() == closed.size());
        // oracle is lexicographic ({0,...} first); closed form sorts by m1
        for (const auto& c : closed) {
            bool found = false;
            for (const auto& s : restricted)
                if (s.slopes == c.slopes) found = true;
            CHECK(found);
        }
    }
}
