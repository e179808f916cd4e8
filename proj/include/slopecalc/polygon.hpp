#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "slopecalc/rational.hpp"

namespace slopecalc {

struct SlopeEntry {
    Rational slope;
    long mult;
    bool operator==(const SlopeEntry&) const = default;
};

/// A Newton or Hodge polygon as a multiset of exact slopes: entries
/// strictly increasing in slope, all multiplicities >= 1.
class SlopeMultiset {
public:
    SlopeMultiset() = default;

    // Merges repeated slopes, sorts, drops nothing; mult <= 0 is rejected.
    static SlopeMultiset from_pairs(std::vector<std::pair<Rational, long>> pairs);

    const std::vector<SlopeEntry>& entries() const { return entries_; }
    long dim() const { return dim_; }
    bool empty() const { return entries_.empty(); }
    long mult_of(const Rational& slope) const;

    bool operator==(const SlopeMultiset&) const = default;

private:
    std::vector<SlopeEntry> entries_;
    long dim_ = 0;
};

// A point value on the valuation graph; nullopt encodes +infinity
// (vanishing coefficient), which never lies on a lower hull.
using HullValue = std::optional<Rational>;

// Slopes of the lower convex hull of (index, value) points, read left to
// right; a segment from x=i to x=j contributes multiplicity j-i.
// Endpoints must be finite and indices strictly increasing.
SlopeMultiset lower_hull(const std::vector<std::pair<long, HullValue>>& points);

// Polygon dominance: every partial sum of the k smallest slopes of a is
// >= that of b, with equality at k = dim. Requires equal dimensions.
bool lies_on_or_above(const SlopeMultiset& a, const SlopeMultiset& b);

Rational total_slope(const SlopeMultiset& a);

// mult(s) == mult(1-s) for every slope s.
bool is_symmetric(const SlopeMultiset& a);

SlopeMultiset scale_mult(const SlopeMultiset& a, long k);
SlopeMultiset dual(const SlopeMultiset& a);
SlopeMultiset dsum(const SlopeMultiset& a, const SlopeMultiset& b);

// Hull y-value at integer position x (linear interpolation between
// vertices); x must lie in [0, dim].
Rational polygon_value_at(const SlopeMultiset& a, long x);

std::string to_string(const SlopeMultiset& a);

} // namespace slopecalc
