#pragma once

#include <gmpxx.h>
#include <memory>
#include <optional>
#include <vector>

#include "slopecalc/errors.hpp"

namespace slopecalc {

class UnramifiedContext;
using ContextPtr = std::shared_ptr<const UnramifiedContext>;

/// The degree-r unramified extension of Q_p at absolute precision p^N.
///
/// Elements are polynomials in the generator g modulo a fixed monic
/// degree-r polynomial irreducible mod p (the lexicographically smallest
/// such lift, coefficients compared from x^{r-1} down to the constant).
/// The Frobenius automorphism sigma is stored as the image sigma(g),
/// lifted from g^p mod p by Newton iteration with precision doubling.
class UnramifiedContext {
public:
    // Throws schema_error for composite p, r < 1, N < 1 or N above the
    // precision ceiling (4096 digits).
    static ContextPtr create(const mpz_class& p, long r, long N);

    const mpz_class& p() const { return p_; }
    long r() const { return r_; }
    long N() const { return N_; }
    const mpz_class& p_pow_N() const { return pN_; }
    mpz_class p_pow(long k) const;

    // Low r coefficients of the monic modulus x^r + c_{r-1}x^{r-1}+...+c_0.
    const std::vector<mpz_class>& modulus() const { return modulus_; }
    // Coefficients of sigma(g), reduced mod p^N.
    const std::vector<mpz_class>& frob_gen() const { return frob_gen_; }

    // --- arithmetic on length-r coefficient vectors mod p^digits ---
    std::vector<mpz_class> ring_mul(const std::vector<mpz_class>& a,
                                    const std::vector<mpz_class>& b,
                                    long digits) const;
    std::vector<mpz_class> ring_add(const std::vector<mpz_class>& a,
                                    const std::vector<mpz_class>& b,
                                    long digits) const;
    // Substitutes frob_gen for g: the Frobenius on coefficient vectors.
    std::vector<mpz_class> ring_frobenius(const std::vector<mpz_class>& a,
                                          long digits) const;
    // Inverse of a unit (some coefficient nonzero mod p); throws
    // semantic_error otherwise.
    std::vector<mpz_class> ring_invert(const std::vector<mpz_class>& a,
                                       long digits) const;
    // Evaluates a polynomial (coefficients low-to-high, entries are
    // ring constants) at a ring element.
    std::vector<mpz_class> ring_eval_poly(const std::vector<mpz_class>& poly_coeffs,
                                          const std::vector<mpz_class>& at,
                                          long digits) const;

private:
    UnramifiedContext() = default;

    mpz_class p_;
    long r_ = 0;
    long N_ = 0;
    mpz_class pN_;
    std::vector<mpz_class> modulus_;
    std::vector<mpz_class> frob_gen_;
};

/// An element p^pshift * c(g) with c reduced mod p^N. `precision` is the
/// number of base-p digits the coefficient vector is actually known to
/// (N unless an operation lost digits); inversion of an element of
/// valuation v costs v digits.
class UnramifiedElement {
public:
    UnramifiedElement(ContextPtr ctx, std::vector<mpz_class> coeffs,
                      long pshift = 0);

    static UnramifiedElement zero(ContextPtr ctx);
    static UnramifiedElement one(ContextPtr ctx);
    static UnramifiedElement generator(ContextPtr ctx);
    static UnramifiedElement from_int(ContextPtr ctx, const mpz_class& value,
                                      long pshift = 0);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    long pshift() const { return pshift_; }
    long precision() const { return prec_; }

    // pshift + min coefficient valuation; nullopt when every coefficient
    // vanishes to the known precision (indistinguishable from 0).
    std::optional<long> valuation() const;
    bool is_precision_exhausted() const { return !valuation().has_value(); }

    // Divides the coefficient valuation into pshift, so that the
    // coefficient vector is a unit (or zero). Idempotent.
    UnramifiedElement normalized() const;

    UnramifiedElement frobenius() const;
    // Throws semantic_error when the element is indistinguishable from 0.
    UnramifiedElement inverse() const;

    friend UnramifiedElement operator+(const UnramifiedElement&, const UnramifiedElement&);
    friend UnramifiedElement operator-(const UnramifiedElement&, const UnramifiedElement&);
    friend UnramifiedElement operator*(const UnramifiedElement&, const UnramifiedElement&);
    UnramifiedElement operator-() const;

    // a and b agree to the smaller of their known precisions.
    friend bool congruent(const UnramifiedElement& a, const UnramifiedElement& b);

private:
    UnramifiedElement(ContextPtr ctx, std::vector<mpz_class> coeffs,
                      long pshift, long prec);

    ContextPtr ctx_;
    std::vector<mpz_class> coeffs_;
    long pshift_ = 0;
    long prec_ = 0;
};

// Shared-context guard used by element and matrix code.
void require_same_context(const ContextPtr& a, const ContextPtr& b);

} // namespace slopecalc
