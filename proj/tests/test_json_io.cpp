#include <doctest.h>

#include <random>

#include "slopecalc/errors.hpp"
#include "slopecalc/json_io.hpp"

using namespace slopecalc;
using nlohmann::json;

namespace {

SlopeMultiset random_multiset(std::mt19937& rng) {
    std::uniform_int_distribution<long> nd(1, 4), num(-6, 6), den(1, 6), mult(1, 4);
    std::vector<std::pair<Rational, long>> pairs;
    long n = nd(rng);
    for (long i = 0; i < n; ++i) pairs.emplace_back(rat(num(rng), den(rng)), mult(rng));
    return SlopeMultiset::from_pairs(std::move(pairs));
}

} // namespace

TEST_CASE("slope multiset JSON round trip") {
    std::mt19937 rng(47);
    for (int it = 0; it < 100; ++it) {
        SlopeMultiset m = random_multiset(rng);
        CHECK(multiset_from_json(to_json(m)) == m);
    }
}

TEST_CASE("slope data JSON carries the level") {
    SlopeData a = make_slope_data({{rat(1, 2), 2}}, 3);
    json j = to_json(a);
    CHECK(j["level"] == 3);
    CHECK(slope_data_from_json(j) == a);
}

TEST_CASE("schema violations are rejected") {
    CHECK_THROWS_AS(multiset_from_json(json::array()), schema_error);
    CHECK_THROWS_AS(multiset_from_json({{"dim", 1}}), schema_error);
    // wrong dim
    CHECK_THROWS_AS(
        multiset_from_json(
            {{"dim", 3}, {"slopes", {{{"num", 0}, {"den", 1}, {"mult", 1}}}}}),
        schema_error);
    // non-reduced fraction
    CHECK_THROWS_AS(
        multiset_from_json(
            {{"dim", 1}, {"slopes", {{{"num", 2}, {"den", 4}, {"mult", 1}}}}}),
        schema_error);
    // negative denominator
    CHECK_THROWS_AS(
        multiset_from_json(
            {{"dim", 1}, {"slopes", {{{"num", 1}, {"den", -2}, {"mult", 1}}}}}),
        schema_error);
    // descending slopes
    CHECK_THROWS_AS(
        multiset_from_json({{"dim", 2},
                            {"slopes",
                             {{{"num", 1}, {"den", 1}, {"mult", 1}},
                              {{"num", 0}, {"den", 1}, {"mult", 1}}}}}),
        schema_error);
}

TEST_CASE("phi matrix JSON") {
    json j = {{"p", 3},
              {"r", 2},
              {"N", 32},
              {"entries",
               {{{{"coeffs", {0}}, {"pshift", 0}}, {{"coeffs", {1}}, {"pshift", 1}}},
                {{{"coeffs", {1}}, {"pshift", 0}}, {{"coeffs", {0}}, {"pshift", 0}}}}}};
    PhiMatrix phi = phi_matrix_from_json(j);
    CHECK(phi.dim() == 2);
    CHECK(newton_slopes(phi).slopes == SlopeMultiset::from_pairs({{rat(1, 2), 2}}));

    // precision override
    PhiMatrix phi8 = phi_matrix_from_json(j, 8);
    CHECK(phi8.context()->N() == 8);

    json bad = j;
    bad["entries"][0].erase(1);
    CHECK_THROWS_AS(phi_matrix_from_json(bad), schema_error);
}

TEST_CASE("ascii render") {
    SlopeMultiset m = SlopeMultiset::from_pairs({{rat(0), 1}, {rat(1), 1}});
    std::string out = render_ascii(m);
    CHECK(out.find("vertices: (0,0) (1,0) (2,1)") != std::string::npos);
    CHECK_THROWS_AS(render_ascii(SlopeMultiset()), schema_error);
    // byte-deterministic
    CHECK(render_ascii(m) == out);
}

TEST_CASE("svg render") {
    SlopeMultiset m = SlopeMultiset::from_pairs({{rat(1, 2), 2}});
    std::string out = render_svg(m);
    CHECK(out.find("<svg") != std::string::npos);
    CHECK(out.find("polyline") != std::string::npos);
    // segment ends at (2,1): x = 200, y flipped to 0
    CHECK(out.find("200,0") != std::string::npos);
    CHECK(render_svg(m) == out);
    CHECK_THROWS_AS(render_svg(SlopeMultiset()), schema_error);
}
