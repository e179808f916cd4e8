#include "slopecalc/polygon.hpp"

#include <algorithm>
#include <sstream>

#include "slopecalc/errors.hpp"

namespace slopecalc {

SlopeMultiset SlopeMultiset::from_pairs(std::vector<std::pair<Rational, long>> pairs) {
    for (const auto& [slope, mult] : pairs) {
        if (mult <= 0) throw schema_error("slope multiplicity must be positive");
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SlopeMultiset out;
    for (const auto& [slope, mult] : pairs) {
        if (!out.entries_.empty() && out.entries_.back().slope == slope) {
            out.entries_.back().mult += mult;
        } else {
            out.entries_.push_back({slope, mult});
        }
        out.dim_ += mult;
    }
    return out;
}

long SlopeMultiset::mult_of(const Rational& slope) const {
    for (const auto& e : entries_)
        if (e.slope == slope) return e.mult;
    return 0;
}

SlopeMultiset lower_hull(const std::vector<std::pair<long, HullValue>>& points) {
    if (points.size() < 2) throw schema_error("lower_hull needs at least two points");
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i].first <= points[i - 1].first)
            throw schema_error("lower_hull indices must be strictly increasing");
    if (!points.front().second || !points.back().second)
        throw schema_error("lower_hull endpoint value is infinite (degenerate polynomial)");

    // Monotone chain on the finite points; infinite values never appear
    // on the lower hull.
    struct Pt { Rational x, y; };
    std::vector<Pt> hull;
    for (const auto& [idx, val] : points) {
        if (!val) continue;
        Pt p{Rational(idx), *val};
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull[hull.size() - 1];
            // pop b unless turning strictly downward-convex at b
            if ((b.y - a.y) * (p.x - b.x) >= (p.y - b.y) * (b.x - a.x))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }

    std::vector<std::pair<Rational, long>> pairs;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        Rational run = hull[i].x - hull[i - 1].x;
        Rational slope = (hull[i].y - hull[i - 1].y) / run;
        pairs.emplace_back(slope, mpz_get_si(run.get_num().get_mpz_t()));
    }
    return SlopeMultiset::from_pairs(std::move(pairs));
}

bool lies_on_or_above(const SlopeMultiset& a, const SlopeMultiset& b) {
    if (a.dim() != b.dim()) throw semantic_error("polygon dimension mismatch");
    Rational sum_a = 0, sum_b = 0;
    std::size_t ia = 0, ib = 0;
    long used_a = 0, used_b = 0;
    for (long k = 0; k < a.dim(); ++k) {
        sum_a += a.entries()[ia].slope;
        if (++used_a == a.entries()[ia].mult) { ++ia; used_a = 0; }
        sum_b += b.entries()[ib].slope;
        if (++used_b == b.entries()[ib].mult) { ++ib; used_b = 0; }
        if (sum_a < sum_b) return false;
    }
    return sum_a == sum_b;
}

Rational total_slope(const SlopeMultiset& a) {
    Rational t = 0;
    for (const auto& e : a.entries()) t += e.slope * e.mult;
    return t;
}

bool is_symmetric(const SlopeMultiset& a) {
    for (const auto& e : a.entries())
        if (a.mult_of(Rational(1) - e.slope) != e.mult) return false;
    return true;
}

SlopeMultiset scale_mult(const SlopeMultiset& a, long k) {
    if (k <= 0) throw schema_error("scale factor must be positive");
    std::vector<std::pair<Rational, long>> pairs;
    for (const auto& e : a.entries()) pairs.emplace_back(e.slope, e.mult * k);
    return SlopeMultiset::from_pairs(std::move(pairs));
}

SlopeMultiset dual(const SlopeMultiset& a) {
    std::vector<std::pair<Rational, long>> pairs;
    for (const auto& e : a.entries()) pairs.emplace_back(-e.slope, e.mult);
    return SlopeMultiset::from_pairs(std::move(pairs));
}

SlopeMultiset dsum(const SlopeMultiset& a, const SlopeMultiset& b) {
    std::vector<std::pair<Rational, long>> pairs;
    for (const auto& e : a.entries()) pairs.emplace_back(e.slope, e.mult);
    for (const auto& e : b.entries()) pairs.emplace_back(e.slope, e.mult);
    return SlopeMultiset::from_pairs(std::move(pairs));
}

Rational polygon_value_at(const SlopeMultiset& a, long x) {
    if (x < 0 || x > a.dim()) throw schema_error("position outside polygon range");
    Rational y = 0;
    long pos = 0;
    for (const auto& e : a.entries()) {
        long take = std::min(e.mult, x - pos);
        if (take <= 0) break;
        y += e.slope * take;
        pos += take;
    }
    return y;
}

std::string to_string(const SlopeMultiset& a) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& e : a.entries()) {
        if (!first) os << ", ";
        first = false;
        os << e.slope.get_str() << " x" << e.mult;
    }
    os << "}";
    return os.str();
}

} // namespace slopecalc
