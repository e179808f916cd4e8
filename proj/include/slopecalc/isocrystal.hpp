#pragma once

#include "slopecalc/polygon.hpp"

namespace slopecalc {

/// Slope data of a phi-module, tagged with the power of phi the slopes
/// are measured against (level 1 = phi itself, level r = phi^r). The tag
/// blocks accidental mixing of slopes at different levels.
struct SlopeData {
    SlopeMultiset slopes;
    long level = 1;

    long dim() const { return slopes.dim(); }
    bool operator==(const SlopeData&) const = default;
};

SlopeData make_slope_data(std::vector<std::pair<Rational, long>> pairs, long level = 1);

// Tensor product at a common level: slopes add, multiplicities multiply.
SlopeData tensor(const SlopeData& a, const SlopeData& b);

// Slopes of phi^s on the same module: multiply every slope by s.
// Input must be at level 1; result is at level s.
SlopeData power_slopes(const SlopeData& a, long s);

// Inverse of power_slopes: divide slopes of a level-r datum by r,
// returning level-1 data on the same module.
SlopeData level_descend(const SlopeData& a, long r);

// Induction of a phi^r-module to a phi-module: dimension multiplies by r,
// each phi^r-slope s becomes phi-slope s/r with multiplicity r*mult.
SlopeData induce_from_power(const SlopeData& delta, long r);

// Twisting by a power of sigma leaves slope data unchanged.
SlopeData sigma_conjugate(const SlopeData& a);

// The common factor of the r-fold cyclic decomposition: phi-slope s of
// multiplicity m becomes phi^r-slope r*s of multiplicity m/r. Every
// multiplicity must be divisible by r.
SlopeData split_factors(const SlopeData& a, long r);

} // namespace slopecalc
