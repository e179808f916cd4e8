#pragma once

#include <gmpxx.h>
#include <string>
#include <utility>
#include <vector>

#include "slopecalc/isocrystal.hpp"

namespace slopecalc {

/// Discrete invariants of an abelian variety of Mumford's type:
/// d = degree of the totally real field, r = residue degree of the
/// chosen prime, eps = the quaternion-algebra invariant (0 or 1).
struct MumfordDatum {
    long d;
    long r;
    long eps;

    // Throws schema_error unless 1 <= r <= d and eps in {0, 1}.
    void validate() const;
};

// 0 iff b = 1, else 1. b must be squarefree and nonzero.
int epsilon_from_b(const mpz_class& b);

struct DecompositionShape {
    long dim_h;   // 2^{d+eps}
    long dim_v;   // 2^r
    long dim_u;   // 2^{d-r}
    long copies;  // 2^eps
    bool operator==(const DecompositionShape&) const = default;
};

// Dimensions of the tensor decomposition H = (V (x) U)^{copies}.
DecompositionShape decomposition_shape(const MumfordDatum& datum);

enum class NewtonCase { supersingular, ordinary_type };

// The two possible Newton slope data of the 2^r-dimensional factor V:
// {1/2 x 2^r} and the binomial polygon {C(r,i) x i/r}.
std::pair<SlopeData, SlopeData> v_polygons(long r);

// Same polygons rebuilt through the tensor engine: per-factor phi^r data
// from enumerate_v1_newton via split_factors, tensored r times at level
// r, then descended to phi-slopes.
SlopeData v_polygon_from_factors(long r, NewtonCase which);

struct Classification {
    SlopeData supersingular;
    SlopeData mu_ordinary;
};

// Both Newton polygon candidates of the full 2^{d+eps}-dimensional
// cohomology: v_polygons(r) scaled by multiplicity 2^{d-r+eps}.
Classification classify(const MumfordDatum& datum);

struct VerificationReport {
    struct Check {
        std::string name;
        bool pass;
    };
    std::vector<Check> checks;
    bool all_pass() const;
};

// Symmetry, dimension, total slope, and tensor-engine agreement checks
// for both polygons of a datum.
VerificationReport verify_classification(const MumfordDatum& datum);

long binomial(long n, long k);

} // namespace slopecalc
