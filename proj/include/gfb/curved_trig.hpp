#pragma once

#include <array>

#include "gfb/common.hpp"

namespace gfb::trig {

// |K|*max(a,b)^2 below this -> flat-limit series branch (avoids cancellation
// in acos near 1 while keeping C^1 continuity across the switch).
inline constexpr double kFlatSwitch = 1e-6;

// cos(sqrt(K) a) / cosh(sqrt(-K) a), Taylor branch near K a^2 = 0.
double cos_k(double K, double a);

// sin(sqrt(K) a)/sqrt(K) / sinh(sqrt(-K) a)/sqrt(-K); flat limit a.
double sin_k(double K, double a);

// Side c opposite angle gamma on the constant-K surface.
// cos_K c = cos_K a cos_K b + K sin_K a sin_K b cos(gamma) covers both signs.
double law_c(double K, double gamma, double a, double b);

enum class Branch { principal, side };

// Angle opposite side a; side branch returns pi - asin value.
double law_sc(double K, double gamma, double a, double b,
              Branch branch = Branch::principal);

struct ExpansionInputs {
    std::array<double, 3> a;      // a1, a2, a3
    std::array<double, 3> b;      // b1, b2, b3
    double gamma0;                // in (0, pi)
    std::array<double, 2> gamma;  // gamma1, gamma2
    double K;
};

struct ExpansionResult {
    std::array<double, 3> c;      // c1, c2, c3
    std::array<double, 3> alpha;  // alpha0, alpha1, alpha2
    // diagnostics
    double y, x, z, S0, S1, S2;
};

// Full second/third-order expansion of the inverse cosine/sine laws in the
// common scale parameter; closed-form coefficients.
ExpansionResult expand(const ExpansionInputs& in,
                       Branch branch = Branch::principal);

std::array<double, 3> c_expand(const ExpansionInputs& in);
std::array<double, 3> sc_expand(const ExpansionInputs& in,
                                Branch branch = Branch::principal);

// Partial sum of the arcsine series sum_k (2k)!/((2^k k!)^2 (2k+1)) y^(2k+1).
double asin_series(double y, int n_terms);

} // namespace gfb::trig
