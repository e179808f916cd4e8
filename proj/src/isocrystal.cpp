#include "slopecalc/isocrystal.hpp"

#include "slopecalc/errors.hpp"

namespace slopecalc {

SlopeData make_slope_data(std::vector<std::pair<Rational, long>> pairs, long level) {
    if (level < 1) throw schema_error("level must be >= 1");
    return {SlopeMultiset::from_pairs(std::move(pairs)), level};
}

SlopeData tensor(const SlopeData& a, const SlopeData& b) {
    if (a.level != b.level) throw semantic_error("tensor of slope data at different levels");
    std::vector<std::pair<Rational, long>> pairs;
    for (const auto& ea : a.slopes.entries())
        for (const auto& eb : b.slopes.entries())
            pairs.emplace_back(ea.slope + eb.slope, ea.mult * eb.mult);
    return {SlopeMultiset::from_pairs(std::move(pairs)), a.level};
}

SlopeData power_slopes(const SlopeData& a, long s) {
    if (a.level != 1) throw semantic_error("power_slopes expects level-1 data");
    if (s < 1) throw schema_error("power must be >= 1");
    std::vector<std::pair<Rational, long>> pairs;
    for (const auto& e : a.slopes.entries()) pairs.emplace_back(e.slope * s, e.mult);
    return {SlopeMultiset::from_pairs(std::move(pairs)), s};
}

SlopeData level_descend(const SlopeData& a, long r) {
    if (a.level != r) throw semantic_error("level_descend: datum is not at the stated level");
    std::vector<std::pair<Rational, long>> pairs;
    for (const auto& e : a.slopes.entries()) pairs.emplace_back(e.slope / r, e.mult);
    return {SlopeMultiset::from_pairs(std::move(pairs)), 1};
}

SlopeData induce_from_power(const SlopeData& delta, long r) {
    if (delta.level != r) throw semantic_error("induce_from_power: datum is not at level r");
    std::vector<std::pair<Rational, long>> pairs;
    for (const auto& e : delta.slopes.entries())
        pairs.emplace_back(e.slope / r, e.mult * r);
    return {SlopeMultiset::from_pairs(std::move(pairs)), 1};
}

SlopeData sigma_conjugate(const SlopeData& a) {
    return a;
}

SlopeData split_factors(const SlopeData& a, long r) {
    if (a.level != 1) throw semantic_error("split_factors expects level-1 data");
    if (r < 1) throw schema_error("r must be >= 1");
    std::vector<std::pair<Rational, long>> pairs;
    for (const auto& e : a.slopes.entries()) {
        if (e.mult % r != 0)
            throw semantic_error("indivisible multiplicity: no Q_{p^r}-structure is consistent");
        pairs.emplace_back(e.slope * r, e.mult / r);
    }
    return {SlopeMultiset::from_pairs(std::move(pairs)), r};
}

} // namespace slopecalc
