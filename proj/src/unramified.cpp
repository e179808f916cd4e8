#include "slopecalc/unramified.hpp"

#include <algorithm>
#include <utility>

namespace slopecalc {

namespace {

constexpr long kPrecisionCeiling = 4096;

mpz_class mod_reduce(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// --- dense F_p[x] helpers for irreducibility and initial inverses ---

using Poly = std::vector<mpz_class>; // low-to-high, trimmed

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, const mpz_class& p) {
    // f monic
    trim(a);
    while (a.size() >= f.size()) {
        mpz_class lead = a.back();
        std::size_t shift = a.size() - f.size();
        for (std::size_t i = 0; i < f.size(); ++i)
            a[shift + i] = mod_reduce(a[shift + i] - lead * f[i], p);
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, const mpz_class& p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = mod_reduce(c[i + j] + a[i] * b[j], p);
    return poly_mod(std::move(c), f, p);
}

Poly poly_powmod(Poly base, mpz_class e, const Poly& f, const mpz_class& p) {
    Poly result{1};
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

Poly poly_make_monic(Poly a, const mpz_class& p) {
    trim(a);
    if (a.empty()) return a;
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), a.back().get_mpz_t(), p.get_mpz_t()) == 0)
        throw semantic_error("leading coefficient not invertible mod p");
    for (auto& c : a) c = mod_reduce(c * inv, p);
    return a;
}

Poly poly_gcd(Poly a, Poly b, const mpz_class& p) {
    trim(a); trim(b);
    while (!b.empty()) {
        Poly bm = poly_make_monic(b, p);
        Poly rem = poly_mod(std::move(a), bm, p);
        a = std::move(bm);
        b = std::move(rem);
        trim(b);
    }
    return poly_make_monic(std::move(a), p);
}

// Inverse of a mod f over F_p (f monic, gcd(a, f) = 1).
Poly poly_invmod(const Poly& a0, const Poly& f, const mpz_class& p) {
    // extended Euclid: r0 = f, r1 = a; track s only against a.
    Poly r0 = f, r1 = poly_mod(a0, f, p);
    Poly t0{}, t1{1};
    trim(r1);
    while (!r1.empty()) {
        // divide r0 by r1
        Poly q(r0.size() > r1.size() - 1 ? r0.size() - r1.size() + 1 : 1, 0);
        Poly rem = r0;
        trim(rem);
        mpz_class lead_inv;
        if (mpz_invert(lead_inv.get_mpz_t(), r1.back().get_mpz_t(), p.get_mpz_t()) == 0)
            throw semantic_error("non-invertible leading coefficient");
        while (rem.size() >= r1.size() && !rem.empty()) {
            std::size_t shift = rem.size() - r1.size();
            mpz_class coef = mod_reduce(rem.back() * lead_inv, p);
            q[shift] = coef;
            for (std::size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = mod_reduce(rem[shift + i] - coef * r1[i], p);
            trim(rem);
        }
        // (t0, t1) <- (t1, t0 - q*t1)
        Poly qt1;
        if (!q.empty() && !t1.empty()) {
            qt1.assign(q.size() + t1.size() - 1, 0);
            for (std::size_t i = 0; i < q.size(); ++i)
                for (std::size_t j = 0; j < t1.size(); ++j)
                    qt1[i + j] = mod_reduce(qt1[i + j] + q[i] * t1[j], p);
        }
        Poly t2(std::max(t0.size(), qt1.size()), 0);
        for (std::size_t i = 0; i < t2.size(); ++i) {
            mpz_class v = (i < t0.size() ? t0[i] : mpz_class(0)) -
                          (i < qt1.size() ? qt1[i] : mpz_class(0));
            t2[i] = mod_reduce(v, p);
        }
        trim(t2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 = gcd; must be a nonzero constant
    trim(r0);
    if (r0.size() != 1)
        throw semantic_error("element not invertible: shares a factor with the modulus");
    mpz_class ginv;
    mpz_invert(ginv.get_mpz_t(), r0[0].get_mpz_t(), p.get_mpz_t());
    for (auto& c : t0) c = mod_reduce(c * ginv, p);
    trim(t0);
    return poly_mod(std::move(t0), f, p);
}

std::vector<long> prime_divisors(long n) {
    std::vector<long> out;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// x^{p^k} mod (f, p): k successive p-th power maps.
Poly frobenius_power_of_x(long k, const Poly& f, const mpz_class& p) {
    Poly t{0, 1}; // x
    if (f.size() == 2) t = poly_mod(t, f, p);
    for (long i = 0; i < k; ++i) t = poly_powmod(t, p, f, p);
    return t;
}

bool irreducible_mod_p(const Poly& f, long r, const mpz_class& p) {
    // x^{p^r} == x mod (f, p) and gcd(x^{p^{r/q}} - x, f) = 1 for prime q | r
    Poly x{0, 1};
    if (f.size() == 2) x = poly_mod(x, f, p);
    Poly xr = frobenius_power_of_x(r, f, p);
    Poly diff = xr;
    diff.resize(std::max(diff.size(), x.size()), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        diff[i] = mod_reduce(diff[i] - x[i], p);
    trim(diff);
    if (!diff.empty()) return false;
    for (long q : prime_divisors(r)) {
        Poly xs = frobenius_power_of_x(r / q, f, p);
        Poly d = xs;
        d.resize(std::max(d.size(), x.size()), 0);
        for (std::size_t i = 0; i < x.size(); ++i)
            d[i] = mod_reduce(d[i] - x[i], p);
        trim(d);
        Poly g = poly_gcd(f, std::move(d), p);
        if (g.size() != 1) return false;
    }
    return true;
}

} // namespace

// ---------------------------------------------------------------------
// UnramifiedContext
// ---------------------------------------------------------------------

mpz_class UnramifiedContext::p_pow(long k) const {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), p_.get_mpz_t(), static_cast<unsigned long>(k));
    return out;
}

ContextPtr UnramifiedContext::create(const mpz_class& p, long r, long N) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
        throw schema_error("p must be prime");
    if (r < 1) throw schema_error("residue degree r must be >= 1");
    if (N < 1) throw schema_error("precision N must be >= 1");
    if (N > kPrecisionCeiling) throw schema_error("precision N exceeds the 4096-digit ceiling");

    auto ctx = std::shared_ptr<UnramifiedContext>(new UnramifiedContext());
    ctx->p_ = p;
    ctx->r_ = r;
    ctx->N_ = N;
    ctx->pN_ = ctx->p_pow(N);

    // Lexicographically smallest monic irreducible lift, coefficients
    // compared from x^{r-1} down to the constant term.
    mpz_class total;
    mpz_pow_ui(total.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(r));
    bool found = false;
    for (mpz_class k = 0; k < total; ++k) {
        Poly f(r + 1, 0);
        f[r] = 1;
        // base-p digits of k, least significant = constant term, so the
        // counter orders tuples (c_{r-1}, ..., c_0) lexicographically
        mpz_class rest = k;
        for (long i = 0; i < r; ++i) {
            f[i] = mod_reduce(rest, p);
            rest /= p;
        }
        if (irreducible_mod_p(f, r, p)) {
            ctx->modulus_.assign(f.begin(), f.end() - 1);
            found = true;
            break;
        }
    }
    if (!found) throw semantic_error("no irreducible modulus found"); // unreachable

    // Frobenius lift: Newton iteration from the root x^p mod (f, p),
    // doubling precision until p^N.
    Poly f_full = ctx->modulus_;
    f_full.push_back(1);
    Poly t = frobenius_power_of_x(1, f_full, p);
    std::vector<mpz_class> tv(r, 0);
    for (std::size_t i = 0; i < t.size(); ++i) tv[i] = t[i];

    std::vector<mpz_class> fprime(r, 0); // derivative coefficients, degree r-1 plus leading r
    for (long i = 1; i < r; ++i) fprime[i - 1] = ctx->modulus_[i] * i;
    // derivative of x^r contributes r*x^{r-1}
    std::vector<mpz_class> fprime_full = fprime;
    fprime_full[r - 1] += r;

    std::vector<mpz_class> f_eval_coeffs = ctx->modulus_;
    f_eval_coeffs.push_back(1); // length r+1, scalar coefficients

    long cur = 1;
    while (cur < N) {
        long nxt = std::min(2 * cur, N);
        auto ft = ctx->ring_eval_poly(f_eval_coeffs, tv, nxt);
        auto dft = ctx->ring_eval_poly(fprime_full, tv, nxt);
        auto inv = ctx->ring_invert(dft, nxt);
        auto corr = ctx->ring_mul(ft, inv, nxt);
        mpz_class m = ctx->p_pow(nxt);
        for (long i = 0; i < r; ++i) tv[i] = mod_reduce(tv[i] - corr[i], m);
        cur = nxt;
    }
    ctx->frob_gen_ = tv;

    // Consistency: modulus(frob_gen) == 0 mod p^N and sigma^r(g) == g.
    auto residue = ctx->ring_eval_poly(f_eval_coeffs, ctx->frob_gen_, N);
    for (const auto& c : residue)
        if (c != 0) throw semantic_error("Frobenius lift failed to satisfy the modulus");
    std::vector<mpz_class> g(r, 0);
    if (r > 1) g[1] = 1;
    std::vector<mpz_class> s = g;
    for (long i = 0; i < r; ++i) s = ctx->ring_frobenius(s, N);
    if (s != g) throw semantic_error("Frobenius does not have order r");

    return ctx;
}

std::vector<mpz_class> UnramifiedContext::ring_add(const std::vector<mpz_class>& a,
                                                   const std::vector<mpz_class>& b,
                                                   long digits) const {
    mpz_class m = p_pow(digits);
    std::vector<mpz_class> out(r_, 0);
    for (long i = 0; i < r_; ++i) out[i] = mod_reduce(a[i] + b[i], m);
    return out;
}

std::vector<mpz_class> UnramifiedContext::ring_mul(const std::vector<mpz_class>& a,
                                                   const std::vector<mpz_class>& b,
                                                   long digits) const {
    mpz_class m = p_pow(digits);
    std::vector<mpz_class> c(2 * r_ - 1, 0);
    for (long i = 0; i < r_; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; j < r_; ++j) c[i + j] += a[i] * b[j];
    }
    // reduce by the monic modulus
    for (long i = 2 * r_ - 2; i >= r_; --i) {
        if (c[i] == 0) continue;
        for (long j = 0; j < r_; ++j) c[i - r_ + j] -= c[i] * modulus_[j];
        c[i] = 0;
    }
    std::vector<mpz_class> out(r_, 0);
    for (long i = 0; i < r_; ++i) out[i] = mod_reduce(c[i], m);
    return out;
}

std::vector<mpz_class> UnramifiedContext::ring_eval_poly(
    const std::vector<mpz_class>& poly_coeffs, const std::vector<mpz_class>& at,
    long digits) const {
    mpz_class m = p_pow(digits);
    std::vector<mpz_class> acc(r_, 0);
    for (auto it = poly_coeffs.rbegin(); it != poly_coeffs.rend(); ++it) {
        acc = ring_mul(acc, at, digits);
        acc[0] = mod_reduce(acc[0] + *it, m);
    }
    return acc;
}

std::vector<mpz_class> UnramifiedContext::ring_frobenius(const std::vector<mpz_class>& a,
                                                         long digits) const {
    return ring_eval_poly(a, frob_gen_, digits);
}

std::vector<mpz_class> UnramifiedContext::ring_invert(const std::vector<mpz_class>& a,
                                                      long digits) const {
    // inverse mod p via extended Euclid in F_p[x], then Newton lifting
    // z <- z(2 - az) with doubling digit counts.
    Poly f_full = modulus_;
    f_full.push_back(1);
    Poly ap(a.begin(), a.end());
    trim(ap);
    if (ap.empty()) throw semantic_error("inverse of zero in the residue field");
    for (auto& c : ap) c = mod_reduce(c, p_);
    trim(ap);
    if (ap.empty()) throw semantic_error("inverse of a non-unit (all coefficients divisible by p)");
    Poly z0 = poly_invmod(ap, f_full, p_);
    std::vector<mpz_class> z(r_, 0);
    for (std::size_t i = 0; i < z0.size(); ++i) z[i] = z0[i];

    long cur = 1;
    while (cur < digits) {
        long nxt = std::min(2 * cur, digits);
        mpz_class m = p_pow(nxt);
        auto az = ring_mul(a, z, nxt);
        std::vector<mpz_class> two_minus(r_, 0);
        two_minus[0] = 2;
        for (long i = 0; i < r_; ++i) two_minus[i] = mod_reduce(two_minus[i] - az[i], m);
        z = ring_mul(z, two_minus, nxt);
        cur = nxt;
    }
    mpz_class m = p_pow(digits);
    for (auto& c : z) c = mod_reduce(c, m);
    return z;
}

// ---------------------------------------------------------------------
// UnramifiedElement
// ---------------------------------------------------------------------

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
    if (a == b) return;
    if (a && b && a->p() == b->p() && a->r() == b->r() && a->N() == b->N() &&
        a->modulus() == b->modulus())
        return;
    throw semantic_error("elements belong to different unramified contexts");
}

UnramifiedElement::UnramifiedElement(ContextPtr ctx, std::vector<mpz_class> coeffs,
                                     long pshift)
    : UnramifiedElement(std::move(ctx), std::move(coeffs), pshift, 0) {
    prec_ = ctx_->N();
    mpz_class m = ctx_->p_pow_N();
    for (auto& c : coeffs_) c = mod_reduce(c, m);
}

UnramifiedElement::UnramifiedElement(ContextPtr ctx, std::vector<mpz_class> coeffs,
                                     long pshift, long prec)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)), pshift_(pshift), prec_(prec) {
    if (!ctx_) throw schema_error("element requires a context");
    if (static_cast<long>(coeffs_.size()) > ctx_->r())
        throw schema_error("coefficient vector longer than the residue degree");
    coeffs_.resize(ctx_->r(), 0);
}

UnramifiedElement UnramifiedElement::zero(ContextPtr ctx) {
    return UnramifiedElement(std::move(ctx), {}, 0);
}

UnramifiedElement UnramifiedElement::one(ContextPtr ctx) {
    return UnramifiedElement(std::move(ctx), {1}, 0);
}

UnramifiedElement UnramifiedElement::generator(ContextPtr ctx) {
    if (ctx->r() == 1) return zero(std::move(ctx)); // g is the root of x
    return UnramifiedElement(std::move(ctx), {0, 1}, 0);
}

UnramifiedElement UnramifiedElement::from_int(ContextPtr ctx, const mpz_class& value,
                                              long pshift) {
    return UnramifiedElement(std::move(ctx), {value}, pshift);
}

std::optional<long> UnramifiedElement::valuation() const {
    long v = prec_;
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        mpz_class tmp;
        long k = static_cast<long>(
            mpz_remove(tmp.get_mpz_t(), c.get_mpz_t(), ctx_->p().get_mpz_t()));
        v = std::min(v, k);
    }
    if (v >= prec_) return std::nullopt;
    return pshift_ + v;
}

UnramifiedElement UnramifiedElement::normalized() const {
    long v = prec_;
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        mpz_class tmp;
        long k = static_cast<long>(
            mpz_remove(tmp.get_mpz_t(), c.get_mpz_t(), ctx_->p().get_mpz_t()));
        v = std::min(v, k);
    }
    if (v >= prec_ || v == 0) return *this;
    mpz_class pv = ctx_->p_pow(v);
    std::vector<mpz_class> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] / pv;
    return UnramifiedElement(ctx_, std::move(out), pshift_ + v, prec_ - v);
}

UnramifiedElement UnramifiedElement::frobenius() const {
    if (prec_ == 0) return *this;
    return UnramifiedElement(ctx_, ctx_->ring_frobenius(coeffs_, prec_), pshift_, prec_);
}

UnramifiedElement UnramifiedElement::inverse() const {
    UnramifiedElement n = normalized();
    if (n.is_precision_exhausted()) {
        // could be exactly zero or merely unresolved
        bool exactly_zero = true;
        for (const auto& c : n.coeffs_)
            if (c != 0) { exactly_zero = false; break; }
        if (exactly_zero && n.prec_ == ctx_->N())
            throw semantic_error("inverse of zero");
        throw precision_error("inverse of an element indistinguishable from zero",
                              2 * ctx_->N());
    }
    auto inv = ctx_->ring_invert(n.coeffs_, n.prec_);
    return UnramifiedElement(ctx_, std::move(inv), -n.pshift_, n.prec_);
}

UnramifiedElement operator+(const UnramifiedElement& a, const UnramifiedElement& b) {
    require_same_context(a.ctx_, b.ctx_);
    const auto& ctx = a.ctx_;
    long s = std::min(a.pshift_, b.pshift_);
    long abs_prec = std::min(a.pshift_ + a.prec_, b.pshift_ + b.prec_);
    long prec = std::max(abs_prec - s, 0L);
    mpz_class m = ctx->p_pow(prec);
    mpz_class fa = ctx->p_pow(a.pshift_ - s);
    mpz_class fb = ctx->p_pow(b.pshift_ - s);
    std::vector<mpz_class> out(ctx->r(), 0);
    for (long i = 0; i < ctx->r(); ++i)
        out[i] = mod_reduce(a.coeffs_[i] * fa + b.coeffs_[i] * fb, m);
    return UnramifiedElement(ctx, std::move(out), s, prec);
}

UnramifiedElement UnramifiedElement::operator-() const {
    mpz_class m = ctx_->p_pow(prec_);
    std::vector<mpz_class> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = mod_reduce(-coeffs_[i], m);
    return UnramifiedElement(ctx_, std::move(out), pshift_, prec_);
}

UnramifiedElement operator-(const UnramifiedElement& a, const UnramifiedElement& b) {
    return a + (-b);
}

UnramifiedElement operator*(const UnramifiedElement& a, const UnramifiedElement& b) {
    require_same_context(a.ctx_, b.ctx_);
    long prec = std::min(a.prec_, b.prec_);
    if (prec == 0)
        return UnramifiedElement(a.ctx_, std::vector<mpz_class>(a.ctx_->r(), 0),
                                 a.pshift_ + b.pshift_, 0);
    auto out = a.ctx_->ring_mul(a.coeffs_, b.coeffs_, prec);
    return UnramifiedElement(a.ctx_, std::move(out), a.pshift_ + b.pshift_, prec);
}

bool congruent(const UnramifiedElement& a, const UnramifiedElement& b) {
    UnramifiedElement d = a - b;
    return d.is_precision_exhausted();
}

} // namespace slopecalc
