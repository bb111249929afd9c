#include "gfb/curved_trig.hpp"

#include <cmath>
#include <limits>

namespace gfb::trig {

namespace {

// Clamp an inverse-trig argument; overshoot beyond tol is a domain error.
double clamp_arg(double x, double lo, double hi, const char* what) {
    constexpr double tol = 1e-12;
    if (x < lo - tol || x > hi + tol)
        throw DomainError(std::string(what) + " argument out of range");
    return x < lo ? lo : (x > hi ? hi : x);
}

} // namespace

double cos_k(double K, double a) {
    const double q = K * a * a;
    if (std::abs(q) < kFlatSwitch)
        return 1.0 - q / 2.0 + q * q / 24.0 - q * q * q / 720.0;
    if (K > 0.0) return std::cos(std::sqrt(K) * a);
    return std::cosh(std::sqrt(-K) * a);
}

double sin_k(double K, double a) {
    const double q = K * a * a;
    if (std::abs(q) < kFlatSwitch)
        return a * (1.0 - q / 6.0 + q * q / 120.0 - q * q * q / 5040.0);
    if (K > 0.0) return std::sin(std::sqrt(K) * a) / std::sqrt(K);
    return std::sinh(std::sqrt(-K) * a) / std::sqrt(-K);
}

double law_c(double K, double gamma, double a, double b) {
    const double m = std::max(std::abs(a), std::abs(b));
    if (std::abs(K) * m * m < kFlatSwitch) {
        // Flat-limit series: c^2 = m2 + K m2^2/12
        //   - K [ (a^4+b^4)/12 + a^2 b^2/2 - a b (a^2+b^2) cos(gamma)/3 ]
        const double cg = std::cos(gamma);
        const double m2 = a * a + b * b - 2.0 * a * b * cg;
        const double corr = (a * a * a * a + b * b * b * b) / 12.0 +
                            a * a * b * b / 2.0 -
                            a * b * (a * a + b * b) * cg / 3.0;
        const double c2 = m2 + K * m2 * m2 / 12.0 - K * corr;
        return std::sqrt(std::max(c2, 0.0));
    }
    const double arg =
        cos_k(K, a) * cos_k(K, b) + K * sin_k(K, a) * sin_k(K, b) * std::cos(gamma);
    if (K > 0.0) {
        return std::acos(clamp_arg(arg, -1.0, 1.0, "law_c acos")) / std::sqrt(K);
    }
    // Hyperbolic: cosh argument must be >= 1.
    const double s = std::sqrt(-K);
    return std::acosh(clamp_arg(arg, 1.0,
                                std::numeric_limits<double>::infinity(),
                                "law_c acosh")) / s;
}

double law_sc(double K, double gamma, double a, double b, Branch branch) {
    const double sg = std::sin(gamma);
    if (sg == 0.0) throw DomainError("law_sc: gamma in pi*Z");
    const double c = law_c(K, gamma, a, b);
    const double sc = sin_k(K, c);
    if (sc == 0.0) throw DomainError("law_sc: degenerate triangle, sin_K(c) = 0");
    const double ratio = clamp_arg(sin_k(K, a) * sg / sc, -1.0, 1.0, "law_sc asin");
    const double alpha = std::asin(ratio);
    return branch == Branch::principal ? alpha : kPi - alpha;
}

ExpansionResult expand(const ExpansionInputs& in, Branch branch) {
    const double K = in.K;
    const double a1 = in.a[0], a2 = in.a[1], a3 = in.a[2];
    const double b1 = in.b[0], b2 = in.b[1], b3 = in.b[2];
    const double g0 = in.gamma0, g1 = in.gamma[0], g2 = in.gamma[1];
    const double cg = std::cos(g0), sg = std::sin(g0);

    const double y2 = a1 * a1 + b1 * b1 - 2.0 * a1 * b1 * cg;
    if (y2 < 1e-24) throw DomainError("expand: degenerate leading triangle, y ~ 0");
    const double y = std::sqrt(y2);

    // C-function coefficients divided by K (C1 = 0, dropped):
    //   x = C3/K, z = C4/K.
    const double x = -(a1 * a2 + b1 * b2) +
                     ((a1 * b2 + a2 * b1) * cg - a1 * b1 * g1 * sg);
    const double z =
        -(a2 * a2 + 2.0 * a1 * a3 + b2 * b2 + 2.0 * b1 * b3) / 2.0 +
        K * (a1 * a1 * a1 * a1 + b1 * b1 * b1 * b1) / 24.0 +
        K * a1 * a1 * b1 * b1 / 4.0 +
        ((a1 * b3 + a2 * b2 + a3 * b1) * cg - (a1 * b2 + a2 * b1) * g1 * sg -
         a1 * b1 * (g2 * sg + g1 * g1 * cg / 2.0)) -
        K * (a1 * a1 * a1 * b1 + a1 * b1 * b1 * b1) * cg / 6.0;

    const double c1 = y;
    const double c2 = -x / y;
    const double c3 = y * (K * y2 / 24.0 - z / y2 - x * x / (2.0 * y2 * y2));

    // SC: series division of sin_K-law numerator by sin_K(c) expansion.
    const double n1 = a1 * sg;
    const double n2 = a2 * sg + a1 * g1 * cg;
    const double n3 = (a3 - K * a1 * a1 * a1 / 6.0) * sg + a2 * g1 * cg +
                      a1 * (g2 * cg - g1 * g1 * sg / 2.0);
    const double d1 = c1;
    const double d2 = c2;
    const double d3 = c3 - K * c1 * c1 * c1 / 6.0;

    const double S0 = n1 / d1;
    const double S1 = (n2 * d1 - n1 * d2) / (d1 * d1);
    const double S2 = n3 / d1 - (n2 * d2 + n1 * d3) / (d1 * d1) +
                      n1 * d2 * d2 / (d1 * d1 * d1);

    if (S0 <= -1.0 || S0 >= 1.0)
        throw NumericError("sc_expand: turning point, S0 = +-1");
    const double w = std::sqrt(1.0 - S0 * S0);
    double al0 = std::asin(S0);
    double al1 = S1 / w;
    double al2 = S2 / w + S0 * S1 * S1 / (2.0 * w * w * w);
    if (branch == Branch::side) {
        al0 = kPi - al0;
        al1 = -al1;
        al2 = -al2;
    }

    return ExpansionResult{{c1, c2, c3}, {al0, al1, al2}, y, x, z, S0, S1, S2};
}

std::array<double, 3> c_expand(const ExpansionInputs& in) {
    return expand(in).c;
}

std::array<double, 3> sc_expand(const ExpansionInputs& in, Branch branch) {
    return expand(in, branch).alpha;
}

double asin_series(double y, int n_terms) {
    if (std::abs(y) >= 1.0) throw DomainError("asin_series: |y| must be < 1");
    double sum = 0.0;
    double coef = 1.0; // (2k)! / (2^k k!)^2 at k = 0
    double pw = y;
    const double y2 = y * y;
    for (int k = 0; k < n_terms; ++k) {
        sum += coef * pw / (2.0 * k + 1.0);
        coef *= (2.0 * k + 1.0) / (2.0 * k + 2.0);
        pw *= y2;
    }
    return sum;
}

} // namespace gfb::trig
