#include "slopecalc/mumford.hpp"

#include <sstream>

#include "slopecalc/errors.hpp"
#include "slopecalc/filtered.hpp"

namespace slopecalc {

void MumfordDatum::validate() const {
    if (d < 1) throw schema_error("d must be >= 1");
    if (r < 1 || r > d) throw schema_error("r must satisfy 1 <= r <= d");
    if (eps != 0 && eps != 1) throw schema_error("eps must be 0 or 1");
}

int epsilon_from_b(const mpz_class& b) {
    if (b == 0) throw schema_error("b must be nonzero");
    // squarefree gate by trial division
    mpz_class a = abs(b);
    for (mpz_class q = 2; q * q <= a; ++q) {
        if (a % (q * q) == 0) throw schema_error("b must be squarefree");
        while (a % q == 0) a /= q;
    }
    return b == 1 ? 0 : 1;
}

long binomial(long n, long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    if (!b.fits_slong_p()) throw schema_error("binomial coefficient overflow");
    return b.get_si();
}

namespace {

long pow2(long e) {
    if (e < 0 || e > 62) throw schema_error("power of two out of range");
    return 1L << e;
}

} // namespace

DecompositionShape decomposition_shape(const MumfordDatum& datum) {
    datum.validate();
    DecompositionShape s;
    s.dim_v = pow2(datum.r);
    s.dim_u = pow2(datum.d - datum.r);
    s.copies = pow2(datum.eps);
    s.dim_h = s.dim_v * s.dim_u * s.copies;
    return s;
}

std::pair<SlopeData, SlopeData> v_polygons(long r) {
    if (r < 1) throw schema_error("r must be >= 1");
    SlopeData supersingular = make_slope_data({{rat(1, 2), pow2(r)}}, 1);
    std::vector<std::pair<Rational, long>> pairs;
    for (long i = 0; i <= r; ++i) pairs.emplace_back(rat(i, r), binomial(r, i));
    SlopeData ordinary = make_slope_data(std::move(pairs), 1);
    return {supersingular, ordinary};
}

SlopeData v_polygon_from_factors(long r, NewtonCase which) {
    auto candidates = enumerate_v1_newton(r);
    // candidates sorted by m1: [0] = {2r x 1/2r}, [1] = {r x 0, r x 1/r}
    const SlopeData& v1 = which == NewtonCase::supersingular ? candidates[0] : candidates[1];
    SlopeData factor = split_factors(v1, r); // phi^r data of one cyclic factor
    SlopeData acc = factor;
    for (long m = 1; m < r; ++m) acc = tensor(acc, sigma_conjugate(factor));
    return level_descend(acc, r);
}

Classification classify(const MumfordDatum& datum) {
    datum.validate();
    auto [ss, ord] = v_polygons(datum.r);
    const long scale = pow2(datum.d - datum.r + datum.eps);
    return {
        {scale_mult(ss.slopes, scale), 1},
        {scale_mult(ord.slopes, scale), 1},
    };
}

bool VerificationReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

VerificationReport verify_classification(const MumfordDatum& datum) {
    datum.validate();
    VerificationReport report;
    auto add = [&](std::string name, bool pass) {
        report.checks.push_back({std::move(name), pass});
    };

    Classification cls = classify(datum);
    const long dim = pow2(datum.d + datum.eps);
    const Rational half_dim = rat(dim, 2);
    const long scale = pow2(datum.d - datum.r + datum.eps);

    for (auto [label, poly] :
         {std::pair<const char*, const SlopeData*>{"supersingular", &cls.supersingular},
          {"mu_ordinary", &cls.mu_ordinary}}) {
        std::ostringstream tag;
        tag << "(" << datum.d << "," << datum.r << "," << datum.eps << ") " << label;
        add(tag.str() + " symmetric", is_symmetric(poly->slopes));
        add(tag.str() + " dimension", poly->dim() == dim);
        add(tag.str() + " total slope", total_slope(poly->slopes) == half_dim);
    }
    add("tensor engine agrees (supersingular)",
        cls.supersingular.slopes ==
            scale_mult(v_polygon_from_factors(datum.r, NewtonCase::supersingular).slopes,
                       scale));
    add("tensor engine agrees (mu_ordinary)",
        cls.mu_ordinary.slopes ==
            scale_mult(v_polygon_from_factors(datum.r, NewtonCase::ordinary_type).slopes,
                       scale));
    return report;
}

} // namespace slopecalc
