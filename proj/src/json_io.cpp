#include "slopecalc/json_io.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "slopecalc/errors.hpp"

namespace slopecalc {

namespace {

long long small_int(const mpz_class& z, const char* what) {
    if (!z.fits_slong_p()) throw schema_error(std::string(what) + " out of range");
    return z.get_si();
}

long require_int(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw schema_error(std::string("missing or non-integer field \"") + key + "\"");
    return j[key].get<long>();
}

// Exact rational -> decimal text: integers bare, otherwise fixed 4 places.
std::string svg_coord(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    Rational t = q * 10000;
    mpz_class rounded;
    mpz_class num2 = t.get_num() * 2 + t.get_den();
    mpz_class den2 = t.get_den() * 2;
    mpz_fdiv_q(rounded.get_mpz_t(), num2.get_mpz_t(), den2.get_mpz_t());
    mpz_class absr = abs(rounded);
    mpz_class whole = absr / 10000, frac = absr % 10000;
    std::ostringstream os;
    if (rounded < 0) os << "-";
    os << whole.get_str() << ".";
    std::string f = frac.get_str();
    os << std::string(4 - f.size(), '0') << f;
    return os.str();
}

std::vector<std::pair<Rational, Rational>> polygon_vertices(const SlopeMultiset& a) {
    std::vector<std::pair<Rational, Rational>> v{{Rational(0), Rational(0)}};
    Rational x = 0, y = 0;
    for (const auto& e : a.entries()) {
        x += e.mult;
        y += e.slope * e.mult;
        v.emplace_back(x, y);
    }
    return v;
}

} // namespace

nlohmann::json to_json(const SlopeMultiset& a) {
    nlohmann::json slopes = nlohmann::json::array();
    for (const auto& e : a.entries()) {
        slopes.push_back({{"num", small_int(e.slope.get_num(), "slope numerator")},
                          {"den", small_int(e.slope.get_den(), "slope denominator")},
                          {"mult", e.mult}});
    }
    return {{"dim", a.dim()}, {"slopes", slopes}};
}

SlopeMultiset multiset_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw schema_error("slope multiset must be a JSON object");
    long dim = require_int(j, "dim");
    if (!j.contains("slopes") || !j["slopes"].is_array())
        throw schema_error("missing \"slopes\" array");
    std::vector<std::pair<Rational, long>> pairs;
    Rational prev;
    bool have_prev = false;
    for (const auto& entry : j["slopes"]) {
        long num = require_int(entry, "num");
        long den = require_int(entry, "den");
        long mult = require_int(entry, "mult");
        if (den <= 0) throw schema_error("slope denominator must be positive");
        if (mult <= 0) throw schema_error("slope multiplicity must be positive");
        if (std::gcd(std::abs(num), den) != 1)
            throw schema_error("slope must be gcd-reduced");
        Rational s = rat(num, den);
        if (have_prev && !(prev < s))
            throw schema_error("slopes must be strictly ascending");
        prev = s;
        have_prev = true;
        pairs.emplace_back(s, mult);
    }
    SlopeMultiset out = SlopeMultiset::from_pairs(std::move(pairs));
    if (out.dim() != dim) throw schema_error("\"dim\" inconsistent with multiplicities");
    return out;
}

nlohmann::json to_json(const SlopeData& a) {
    nlohmann::json j = to_json(a.slopes);
    j["level"] = a.level;
    return j;
}

SlopeData slope_data_from_json(const nlohmann::json& j) {
    SlopeMultiset m = multiset_from_json(j);
    long level = j.contains("level") ? require_int(j, "level") : 1;
    if (level < 1) throw schema_error("level must be >= 1");
    return {std::move(m), level};
}

PhiMatrix phi_matrix_from_json(const nlohmann::json& j, long precision_override) {
    if (!j.is_object()) throw schema_error("matrix input must be a JSON object");
    long p = require_int(j, "p");
    long r = require_int(j, "r");
    long N = j.contains("N") ? require_int(j, "N") : 64;
    if (precision_override > 0) N = precision_override;
    ContextPtr ctx = UnramifiedContext::create(p, r, N);
    if (!j.contains("entries") || !j["entries"].is_array())
        throw schema_error("missing \"entries\" array");
    const auto& rows = j["entries"];
    long n = static_cast<long>(rows.size());
    if (n == 0) throw schema_error("empty matrix");
    Matrix m(ctx, n);
    for (long i = 0; i < n; ++i) {
        if (!rows[i].is_array() || static_cast<long>(rows[i].size()) != n)
            throw schema_error("matrix rows must all have the same length (square matrix)");
        for (long c = 0; c < n; ++c) {
            const auto& cell = rows[i][c];
            if (!cell.is_object() || !cell.contains("coeffs") || !cell["coeffs"].is_array())
                throw schema_error("matrix entry must be {\"coeffs\": [...], \"pshift\": int}");
            if (static_cast<long>(cell["coeffs"].size()) > r)
                throw schema_error("entry has more coefficients than the residue degree");
            std::vector<mpz_class> coeffs;
            for (const auto& cj : cell["coeffs"]) {
                if (!cj.is_number_integer()) throw schema_error("coefficients must be integers");
                coeffs.emplace_back(cj.get<long>());
            }
            long pshift = cell.contains("pshift") ? require_int(cell, "pshift") : 0;
            m.at(i, c) = UnramifiedElement(ctx, std::move(coeffs), pshift);
        }
    }
    return PhiMatrix(std::move(m));
}

std::string render_ascii(const SlopeMultiset& a) {
    if (a.empty()) throw schema_error("cannot render an empty polygon");
    auto verts = polygon_vertices(a);

    // exact y at rational x, walking the segments
    auto value_at = [&](const Rational& x) {
        Rational y = 0, pos = 0;
        for (const auto& e : a.entries()) {
            Rational take = x - pos;
            if (take > e.mult) take = e.mult;
            if (take <= 0) break;
            y += e.slope * take;
            pos += take;
        }
        return y;
    };

    Rational ymin = 0, ymax = 0;
    for (const auto& [x, y] : verts) {
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    const long cols_per_step = 4;
    const long width = cols_per_step * a.dim() + 1;
    // two rows per unit of height
    Rational span = (ymax - ymin) * 2;
    long rows = small_int(mpz_class(mpz_class(span.get_num() + span.get_den() - 1) /
                                    span.get_den()),
                          "render height");
    rows += 1;

    std::vector<std::string> grid(rows, std::string(width, ' '));
    auto row_of = [&](const Rational& y) {
        Rational t = (ymax - y) * 2; // 0 at top
        mpz_class idx;
        mpz_class num2 = t.get_num() * 2 + t.get_den();
        mpz_fdiv_q(idx.get_mpz_t(), num2.get_mpz_t(),
                   mpz_class(t.get_den() * 2).get_mpz_t());
        long i = small_int(idx, "render row");
        return std::clamp(i, 0L, rows - 1);
    };
    for (long c = 0; c < width; ++c) {
        Rational x = rat(c, cols_per_step);
        grid[row_of(value_at(x))][c] = (c % cols_per_step == 0) ? '*' : '.';
    }

    std::ostringstream os;
    for (const auto& line : grid) os << line << "\n";
    os << "vertices:";
    for (const auto& [x, y] : verts) os << " (" << x.get_str() << "," << y.get_str() << ")";
    os << "\n";
    return os.str();
}

std::string render_svg(const SlopeMultiset& a) {
    if (a.empty()) throw schema_error("cannot render an empty polygon");
    auto verts = polygon_vertices(a);
    Rational ymin = 0, ymax = 0;
    for (const auto& [x, y] : verts) {
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    // 100 units per lattice step, y flipped so the polygon rises upward
    Rational w = Rational(a.dim()) * 100;
    Rational h = (ymax - ymin) * 100;
    if (h == 0) h = 1;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << svg_coord(w)
       << " " << svg_coord(h) << "\">\n";
    os << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const auto& [x, y] : verts) {
        if (!first) os << " ";
        first = false;
        os << svg_coord(x * 100) << "," << svg_coord((ymax - y) * 100);
    }
    os << "\"/>\n</svg>\n";
    return os.str();
}

} // namespace slopecalc
