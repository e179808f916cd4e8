#include "slopecalc/filtered.hpp"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "slopecalc/errors.hpp"

namespace slopecalc {

SlopeMultiset hodge_from_filtration(const std::map<long, long>& jumps) {
    if (jumps.empty()) throw schema_error("empty filtration");
    std::vector<std::pair<Rational, long>> pairs;
    for (const auto& [degree, graded_dim] : jumps) {
        if (graded_dim <= 0) throw schema_error("graded dimensions must be positive");
        pairs.emplace_back(Rational(degree), graded_dim);
    }
    return SlopeMultiset::from_pairs(std::move(pairs));
}

FilteredData::FilteredData(SlopeData n, SlopeMultiset h)
    : newton(std::move(n)), hodge(std::move(h)) {
    if (newton.level != 1) throw semantic_error("filtered data expects level-1 Newton slopes");
    if (newton.dim() != hodge.dim()) throw semantic_error("Newton/Hodge dimension mismatch");
    for (const auto& e : hodge.entries())
        if (e.slope.get_den() != 1) throw schema_error("Hodge slopes must be integers");
}

bool admissible_necessary(const FilteredData& fd) {
    return total_slope(fd.newton.slopes) == total_slope(fd.hodge) &&
           lies_on_or_above(fd.newton.slopes, fd.hodge);
}

std::vector<SlopeData> enumerate_v1_newton(long r) {
    if (r < 1) throw schema_error("r must be >= 1");
    SlopeMultiset hodge =
        r == 1 ? SlopeMultiset::from_pairs({{rat(0), 1}, {rat(1), 1}})
               : SlopeMultiset::from_pairs({{rat(0), 2 * r - 1}, {rat(1), 1}});
    std::vector<SlopeData> out;
    for (long m1 = 0; m1 < 2 * r; m1 += r) {
        long m2 = 2 * r - m1;
        std::vector<std::pair<Rational, long>> pairs;
        if (m1 > 0) pairs.emplace_back(rat(0), m1);
        pairs.emplace_back(rat(1, m2), m2);
        SlopeData cand = make_slope_data(std::move(pairs), 1);
        if (admissible_necessary(FilteredData(cand, hodge))) out.push_back(cand);
    }
    return out;
}

std::vector<Rational> farey_slopes(long max_den) {
    std::set<Rational> vals;
    for (long b = 1; b <= max_den; ++b)
        for (long a = 0; a <= b; ++a) vals.insert(rat(a, b));
    return {vals.begin(), vals.end()};
}

namespace {

constexpr long kMaxDenCeiling = 24;

struct SearchSpec {
    const std::vector<Rational>& slopes;
    const std::vector<Rational>& hodge_prefix; // prefix_sums[0..dim]
    Rational total;
    long dim;
};

void search(const SearchSpec& spec, long from_idx, long chosen, const Rational& partial,
            std::vector<long>& picks, std::vector<SlopeData>& out) {
    if (chosen == spec.dim) {
        if (partial != spec.total) return;
        std::vector<std::pair<Rational, long>> pairs;
        for (long idx : picks) pairs.emplace_back(spec.slopes[idx], 1);
        out.push_back(make_slope_data(std::move(pairs), 1));
        return;
    }
    const long remaining = spec.dim - chosen - 1;
    for (long j = from_idx; j < static_cast<long>(spec.slopes.size()); ++j) {
        Rational np = partial + spec.slopes[j];
        // every later slope is >= slopes[j]; minimal completion already too big
        if (np + spec.slopes[j] * remaining > spec.total) break;
        // dominance prefix: larger j only helps, so skip rather than stop
        if (np < spec.hodge_prefix[chosen + 1]) continue;
        // maximal completion (all remaining at the top slope) falls short
        if (np + spec.slopes.back() * remaining < spec.total) continue;
        picks.push_back(j);
        search(spec, j, chosen + 1, np, picks, out);
        picks.pop_back();
    }
}

SearchSpec make_spec(const std::vector<Rational>& slopes,
                     const std::vector<Rational>& hodge_prefix, Rational total, long dim) {
    return {slopes, hodge_prefix, std::move(total), dim};
}

void validate_brute_inputs(long dim, const SlopeMultiset& hodge, long max_den,
                           const std::vector<Rational>& slopes) {
    if (dim < 1) throw schema_error("dimension must be >= 1");
    if (max_den < 1 || max_den > kMaxDenCeiling)
        throw schema_error("max_den must lie in [1, 24]");
    if (hodge.dim() != dim) throw semantic_error("Hodge polygon dimension mismatch");
    mpz_class space;
    mpz_bin_uiui(space.get_mpz_t(), static_cast<unsigned long>(slopes.size() + dim - 1),
                 static_cast<unsigned long>(dim));
    if (space > 500000000) throw schema_error("search-space ceiling exceeded");
}

std::vector<Rational> hodge_prefix_sums(const SlopeMultiset& hodge) {
    std::vector<Rational> prefix{Rational(0)};
    for (const auto& e : hodge.entries())
        for (long i = 0; i < e.mult; ++i) prefix.push_back(prefix.back() + e.slope);
    return prefix;
}

} // namespace

std::vector<SlopeData> brute_enumerate_serial(long dim, const SlopeMultiset& hodge,
                                              long max_den) {
    std::vector<Rational> slopes = farey_slopes(max_den);
    validate_brute_inputs(dim, hodge, max_den, slopes);
    std::vector<Rational> prefix = hodge_prefix_sums(hodge);
    SearchSpec spec = make_spec(slopes, prefix, total_slope(hodge), dim);
    std::vector<SlopeData> out;
    std::vector<long> picks;
    search(spec, 0, 0, Rational(0), picks, out);
    return out;
}

std::vector<SlopeData> brute_enumerate(long dim, const SlopeMultiset& hodge,
                                       long max_den) {
    std::vector<Rational> slopes = farey_slopes(max_den);
    validate_brute_inputs(dim, hodge, max_den, slopes);
    std::vector<Rational> prefix = hodge_prefix_sums(hodge);
    SearchSpec spec = make_spec(slopes, prefix, total_slope(hodge), dim);

    // Partition on the first (smallest) slope; concatenating the per-bucket
    // results in first-slope order reproduces the serial lexicographic order.
    const long buckets = static_cast<long>(slopes.size());
    std::vector<std::vector<SlopeData>> per_bucket(buckets);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long j = 0; j < buckets; ++j) {
        const Rational& s = spec.slopes[j];
        Rational np = s;
        if (np + s * (dim - 1) > spec.total) continue;
        if (np < spec.hodge_prefix[1]) continue;
        if (np + spec.slopes.back() * (dim - 1) < spec.total) continue;
        std::vector<long> picks{j};
        search(spec, j, 1, np, picks, per_bucket[j]);
    }
    std::vector<SlopeData> out;
    for (auto& bucket : per_bucket)
        out.insert(out.end(), bucket.begin(), bucket.end());
    return out;
}

} // namespace slopecalc
