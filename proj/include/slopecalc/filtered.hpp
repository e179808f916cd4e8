#pragma once

#include <map>
#include <vector>

#include "slopecalc/isocrystal.hpp"

namespace slopecalc {

// Hodge polygon from filtration jumps: slope i with multiplicity
// jumps[i]. Graded dimensions must be positive.
SlopeMultiset hodge_from_filtration(const std::map<long, long>& jumps);

/// A filtered phi-module at slope level: Newton slope data (level 1)
/// paired with an integer-slope Hodge polygon of the same dimension.
struct FilteredData {
    SlopeData newton;
    SlopeMultiset hodge;

    FilteredData(SlopeData n, SlopeMultiset h);
    long dim() const { return hodge.dim(); }
};

// Polygon-dominance necessary condition for weak admissibility: equal
// total slopes and Newton on or above Hodge. The full subobject
// condition needs filtration data the slope model does not carry.
bool admissible_necessary(const FilteredData& fd);

// The two admissible Newton slope candidates {m1 x 0, m2 x 1/m2} with
// m1 + m2 = 2r and r | m_i, against Hodge {2r-1 x 0, 1 x 1}; sorted by
// m1: [{2r x 1/2r}, {r x 0, r x 1/r}].
std::vector<SlopeData> enumerate_v1_newton(long r);

// Exhaustive oracle: every nondecreasing slope multiset of the given
// dimension with slopes in [0,1], denominators <= max_den, passing
// admissible_necessary. Deterministic lexicographic order.
// max_den must be <= 24 and the search space below a fixed ceiling.
std::vector<SlopeData> brute_enumerate(long dim, const SlopeMultiset& hodge,
                                       long max_den);
// Single-threaded reference, kept for testing the parallel kernel.
std::vector<SlopeData> brute_enumerate_serial(long dim, const SlopeMultiset& hodge,
                                              long max_den);

// Candidate slope values 0 <= a/b <= 1 with b <= max_den, ascending.
std::vector<Rational> farey_slopes(long max_den);

} // namespace slopecalc
