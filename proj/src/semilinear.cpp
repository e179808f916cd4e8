#include "slopecalc/semilinear.hpp"

#include <algorithm>
#include <utility>

#include "slopecalc/errors.hpp"

namespace slopecalc {

Matrix::Matrix(ContextPtr c, long size)
    : ctx(std::move(c)), n(size),
      entries(static_cast<std::size_t>(size * size), UnramifiedElement::zero(ctx)) {
    if (size < 1) throw schema_error("matrix size must be >= 1");
}

Matrix Matrix::identity(ContextPtr c, long size) {
    Matrix m(std::move(c), size);
    for (long i = 0; i < size; ++i) m.at(i, i) = UnramifiedElement::one(m.ctx);
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    require_same_context(a.ctx, b.ctx);
    if (a.n != b.n) throw semantic_error("matrix size mismatch");
    Matrix out(a.ctx, a.n);
    for (long i = 0; i < a.n; ++i)
        for (long j = 0; j < a.n; ++j) {
            UnramifiedElement s = UnramifiedElement::zero(a.ctx);
            for (long k = 0; k < a.n; ++k) s = s + a.at(i, k) * b.at(k, j);
            out.at(i, j) = s;
        }
    return out;
}

Matrix mat_frobenius(const Matrix& a) {
    Matrix out(a.ctx, a.n);
    for (long i = 0; i < a.n * a.n; ++i) out.entries[i] = a.entries[i].frobenius();
    return out;
}

PhiMatrix::PhiMatrix(Matrix a) : a_(std::move(a)) {}

Matrix linearize(const PhiMatrix& phi) {
    const Matrix& a = phi.matrix();
    Matrix m = a;
    Matrix twisted = a;
    for (long k = 1; k < a.ctx->r(); ++k) {
        twisted = mat_frobenius(twisted);
        m = mat_mul(m, twisted);
    }
    return m;
}

std::vector<UnramifiedElement> charpoly(const Matrix& a) {
    const ContextPtr& ctx = a.ctx;
    const long n = a.n;
    // Berkowitz: extend the char poly of the leading principal submatrix
    // one row/column at a time via a truncated convolution; no division.
    std::vector<UnramifiedElement> poly{UnramifiedElement::one(ctx)}; // highest-degree first
    for (long i = 0; i < n; ++i) {
        std::vector<UnramifiedElement> v;
        v.reserve(static_cast<std::size_t>(i) + 2);
        v.push_back(UnramifiedElement::one(ctx));
        v.push_back(-a.at(i, i));
        if (i > 0) {
            // w starts as the column A[0..i-1][i]; v[k] = -R . M^{k-2} . C
            std::vector<UnramifiedElement> w;
            w.reserve(i);
            for (long j = 0; j < i; ++j) w.push_back(a.at(j, i));
            for (long k = 2; k <= i + 1; ++k) {
                UnramifiedElement s = UnramifiedElement::zero(ctx);
                for (long j = 0; j < i; ++j) s = s + a.at(i, j) * w[j];
                v.push_back(-s);
                if (k < i + 1) {
                    std::vector<UnramifiedElement> nw;
                    nw.reserve(i);
                    for (long row = 0; row < i; ++row) {
                        UnramifiedElement t = UnramifiedElement::zero(ctx);
                        for (long col = 0; col < i; ++col)
                            t = t + a.at(row, col) * w[col];
                        nw.push_back(t);
                    }
                    w = std::move(nw);
                }
            }
        }
        std::vector<UnramifiedElement> next(static_cast<std::size_t>(i) + 2,
                                            UnramifiedElement::zero(ctx));
        for (std::size_t m = 0; m < next.size(); ++m)
            for (std::size_t k = 0; k < v.size() && k <= m; ++k)
                if (m - k < poly.size()) next[m] = next[m] + v[k] * poly[m - k];
        poly = std::move(next);
    }
    std::reverse(poly.begin(), poly.end()); // low-to-high, monic
    poly.back() = UnramifiedElement::one(ctx);
    return poly;
}

SlopeMultiset charpoly_newton_hull(const std::vector<UnramifiedElement>& coeffs) {
    if (coeffs.size() < 2) throw schema_error("characteristic polynomial too short");
    const long n = static_cast<long>(coeffs.size()) - 1;
    const long N = coeffs.front().context()->N();

    std::vector<std::pair<long, HullValue>> finite;
    std::vector<std::pair<long, long>> bounded; // (index, lower bound on valuation)
    for (long i = 0; i <= n; ++i) {
        const UnramifiedElement& c = coeffs[n - i];
        if (auto v = c.valuation()) {
            finite.emplace_back(i, Rational(*v));
        } else if (i == n) {
            throw precision_error(
                "constant coefficient valuation undetermined: phi not provably "
                "bijective at this precision; retry with higher N",
                2 * N);
        } else {
            bounded.emplace_back(i, c.pshift() + c.precision());
        }
    }

    SlopeMultiset hull = lower_hull(finite);
    Rational y0 = *finite.front().second;
    for (const auto& [idx, bound] : bounded) {
        // the true value is >= bound; only a value below the hull matters
        if (Rational(bound) < y0 + polygon_value_at(hull, idx))
            throw precision_error(
                "hull-relevant coefficient valuation only bounded below; retry "
                "with higher N",
                2 * N);
    }
    return hull;
}

SlopeData newton_slopes(const PhiMatrix& phi) {
    const long r = phi.context()->r();
    SlopeMultiset hull = charpoly_newton_hull(charpoly(linearize(phi)));
    std::vector<std::pair<Rational, long>> pairs;
    for (const auto& e : hull.entries()) pairs.emplace_back(e.slope / r, e.mult);
    return make_slope_data(std::move(pairs), 1);
}

PhiMatrix block_phi_from_factors(const std::vector<Matrix>& factor_maps) {
    if (factor_maps.empty()) throw schema_error("no factor matrices given");
    const ContextPtr& ctx = factor_maps.front().ctx;
    const long r = ctx->r();
    if (static_cast<long>(factor_maps.size()) != r)
        throw semantic_error("factor count must equal the residue degree r");
    const long n = factor_maps.front().n;
    for (const auto& b : factor_maps) {
        require_same_context(ctx, b.ctx);
        if (b.n != n) throw semantic_error("factor matrix size mismatch");
    }
    Matrix a(ctx, r * n);
    for (long m = 0; m < r; ++m) {
        const long row0 = ((m + 1) % r) * n;
        const long col0 = m * n;
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                a.at(row0 + i, col0 + j) = factor_maps[m].at(i, j);
    }
    return PhiMatrix(std::move(a));
}

} // namespace slopecalc
