#pragma once

#include <vector>

#include "slopecalc/isocrystal.hpp"
#include "slopecalc/unramified.hpp"

namespace slopecalc {

/// Square matrix over an unramified context, row-major.
struct Matrix {
    ContextPtr ctx;
    long n = 0;
    std::vector<UnramifiedElement> entries;

    Matrix(ContextPtr c, long size);
    static Matrix identity(ContextPtr c, long size);

    UnramifiedElement& at(long i, long j) { return entries[i * n + j]; }
    const UnramifiedElement& at(long i, long j) const { return entries[i * n + j]; }
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
// Entrywise Frobenius.
Matrix mat_frobenius(const Matrix& a);

/// A sigma-linear map x -> A * sigma(x) on coordinate vectors.
class PhiMatrix {
public:
    explicit PhiMatrix(Matrix a);
    const Matrix& matrix() const { return a_; }
    const ContextPtr& context() const { return a_.ctx; }
    long dim() const { return a_.n; }

private:
    Matrix a_;
};

// Matrix of the linear map phi^r: A * sigma(A) * ... * sigma^{r-1}(A).
Matrix linearize(const PhiMatrix& phi);

// Monic characteristic polynomial det(xI - M) by the Berkowitz
// division-free scheme; returns coefficients c[0..n] low-to-high, c[n]=1.
std::vector<UnramifiedElement> charpoly(const Matrix& m);

// Lower hull of the points (i, val(c[n-i])), i = 0..n. Coefficients whose
// valuation is only bounded below participate as ">= bound"; if such a
// bound could sit below the hull the computation fails with a
// precision_error carrying a doubled precision suggestion.
SlopeMultiset charpoly_newton_hull(const std::vector<UnramifiedElement>& coeffs);

// Newton slopes of phi: hull of charpoly(linearize(phi)) divided by r.
// Level-1 slope data of dimension n.
SlopeData newton_slopes(const PhiMatrix& phi);

// The rn x rn cyclic block map sending block m to block m+1 mod r via
// B_m. All factor matrices must share size and context.
PhiMatrix block_phi_from_factors(const std::vector<Matrix>& factor_maps);

} // namespace slopecalc
