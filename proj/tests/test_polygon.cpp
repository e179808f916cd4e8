#include <doctest.h>

#include <random>

#include "slopecalc/errors.hpp"
#include "slopecalc/polygon.hpp"

using namespace slopecalc;

namespace {

SlopeMultiset ms(std::vector<std::pair<Rational, long>> pairs) {
    return SlopeMultiset::from_pairs(std::move(pairs));
}

// Brute-force hull oracle: for each x position, the hull value is the
// lowest chord over all finite point pairs spanning it.
Rational brute_hull_at(const std::vector<std::pair<long, HullValue>>& pts, long x) {
    bool have = false;
    Rational best;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (!pts[i].second || !pts[j].second) continue;
            long xi = pts[i].first, xj = pts[j].first;
            if (xi > x || xj < x) continue;
            Rational y = *pts[i].second +
                         (*pts[j].second - *pts[i].second) * Rational(x - xi) / (xj - xi);
            if (!have || y < best) { best = y; have = true; }
        }
    }
    return best;
}

SlopeMultiset random_multiset(std::mt19937& rng, long max_entries = 4) {
    std::uniform_int_distribution<long> nd(1, max_entries), num(-6, 6), den(1, 6),
        mult(1, 4);
    std::vector<std::pair<Rational, long>> pairs;
    long n = nd(rng);
    for (long i = 0; i < n; ++i) pairs.emplace_back(rat(num(rng), den(rng)), mult(rng));
    return SlopeMultiset::from_pairs(std::move(pairs));
}

} // namespace

TEST_CASE("lower_hull basic shapes") {
    CHECK(lower_hull({{0, rat(0)}, {1, rat(0)}, {2, rat(1)}}) ==
          ms({{rat(0), 1}, {rat(1), 1}}));
    CHECK(lower_hull({{0, rat(1)}, {1, std::nullopt}, {2, rat(0)}}) ==
          ms({{rat(-1, 2), 2}}));
    // frozen from the brute-force chord oracle
    auto h = lower_hull({{0, rat(0)}, {1, rat(5)}, {2, rat(1)}, {3, rat(0)}, {4, rat(2)}});
    CHECK(h == ms({{rat(0), 3}, {rat(2), 1}}));
}

TEST_CASE("lower_hull rejects degenerate input") {
    CHECK_THROWS_AS(lower_hull({{0, std::nullopt}, {1, rat(0)}}), schema_error);
    CHECK_THROWS_AS(lower_hull({{0, rat(0)}, {0, rat(1)}}), schema_error);
    CHECK_THROWS_AS(lower_hull({{0, rat(0)}}), schema_error);
}

TEST_CASE("lower_hull matches brute-force chords on random point sets") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> val(-8, 8), nd(3, 8), coin(0, 3);
    for (int it = 0; it < 200; ++it) {
        long n = nd(rng);
        std::vector<std::pair<long, HullValue>> pts;
        for (long i = 0; i <= n; ++i) {
            if (i != 0 && i != n && coin(rng) == 0)
                pts.emplace_back(i, std::nullopt);
            else
                pts.emplace_back(i, rat(val(rng)));
        }
        SlopeMultiset h = lower_hull(pts);
        // slopes strictly increase by construction of SlopeMultiset
        CHECK(h.dim() == n);
        // hull value at each index: <= input, = brute oracle, = input at endpoints
        Rational y0 = *pts.front().second;
        for (long i = 0; i <= n; ++i) {
            Rational hull_y = y0 + polygon_value_at(h, i);
            CHECK(hull_y == brute_hull_at(pts, i));
            if (pts[i].second) CHECK(hull_y <= *pts[i].second);
        }
        CHECK(y0 + polygon_value_at(h, n) == *pts.back().second);
    }
}

TEST_CASE("lies_on_or_above") {
    CHECK(lies_on_or_above(ms({{rat(1, 2), 2}}), ms({{rat(0), 1}, {rat(1), 1}})));
    CHECK(lies_on_or_above(ms({{rat(0), 1}, {rat(1), 1}}), ms({{rat(0), 1}, {rat(1), 1}})));
    CHECK_FALSE(lies_on_or_above(ms({{rat(0), 2}}), ms({{rat(0), 1}, {rat(1), 1}})));
    CHECK_THROWS_AS(lies_on_or_above(ms({{rat(0), 1}}), ms({{rat(0), 2}})), semantic_error);
}

TEST_CASE("total_slope, is_symmetric") {
    CHECK(total_slope(ms({{rat(1, 4), 4}})) == 1);
    CHECK(total_slope(ms({{rat(0), 3}, {rat(1), 1}})) == 1);
    CHECK(total_slope(ms({{rat(1, 3), 3}, {rat(2, 3), 3}})) == 3);
    CHECK(is_symmetric(ms({{rat(0), 1}, {rat(1, 3), 3}, {rat(2, 3), 3}, {rat(1), 1}})));
    CHECK(is_symmetric(ms({{rat(1, 2), 8}})));
    CHECK_FALSE(is_symmetric(ms({{rat(0), 2}, {rat(1), 1}})));
}

TEST_CASE("scale_mult, dual, dsum") {
    CHECK(scale_mult(ms({{rat(1, 2), 2}}), 3) == ms({{rat(1, 2), 6}}));
    CHECK(dual(ms({{rat(0), 1}, {rat(1), 1}})) == ms({{rat(-1), 1}, {rat(0), 1}}));
    CHECK(dsum(ms({{rat(0), 1}}), ms({{rat(0), 2}})) == ms({{rat(0), 3}}));
}

TEST_CASE("polygon properties on random multisets") {
    std::mt19937 rng(11);
    for (int it = 0; it < 1000; ++it) {
        SlopeMultiset a = random_multiset(rng);
        SlopeMultiset b = random_multiset(rng);
        CHECK(dual(dual(a)) == a);
        CHECK(total_slope(dual(a)) == -total_slope(a));
        CHECK(dsum(a, b).dim() == a.dim() + b.dim());
        CHECK(total_slope(dsum(a, b)) == total_slope(a) + total_slope(b));
        CHECK(lies_on_or_above(a, a)); // reflexivity
        if (is_symmetric(a)) CHECK(total_slope(a) == rat(a.dim(), 2));
    }
}

TEST_CASE("lies_on_or_above is transitive") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<long> num(-4, 4), den(1, 4);
    auto expand = [](const SlopeMultiset& m) {
        std::vector<Rational> v;
        for (const auto& e : m.entries())
            for (long i = 0; i < e.mult; ++i) v.push_back(e.slope);
        return v;
    };
    // averaging two unit slopes preserves the total and raises the polygon
    auto smooth = [&](const SlopeMultiset& m) {
        auto v = expand(m);
        std::uniform_int_distribution<std::size_t> pick(0, v.size() - 1);
        std::size_t i = pick(rng), j = pick(rng);
        Rational mid = (v[i] + v[j]) / 2;
        v[i] = v[j] = mid;
        std::vector<std::pair<Rational, long>> pairs;
        for (const auto& s : v) pairs.emplace_back(s, 1);
        return SlopeMultiset::from_pairs(std::move(pairs));
    };
    for (int it = 0; it < 200; ++it) {
        std::vector<std::pair<Rational, long>> pairs;
        for (long i = 0; i < 6; ++i) pairs.emplace_back(rat(num(rng), den(rng)), 1);
        SlopeMultiset c = SlopeMultiset::from_pairs(std::move(pairs));
        SlopeMultiset b = smooth(c);
        SlopeMultiset a = smooth(b);
        CHECK(lies_on_or_above(b, c));
        CHECK(lies_on_or_above(a, b));
        CHECK(lies_on_or_above(a, c));
    }
}
