#include "gfb/curvature_field.hpp"

#include <cmath>

namespace gfb::field {

CurvatureField make_constant(double K0) {
    CurvatureField f;
    f.K = [K0](double, double) { return K0; };
    f.is_constant = true;
    f.constant_value = K0;
    f.name = "constant";
    return f;
}

CurvatureField make_inverse_l(double min_l) {
    CurvatureField f;
    f.K = [](double l, double) { return 1.0 / l; };
    f.min_l = min_l;
    f.name = "inverse_l";
    return f;
}

CurvatureField make_wave(double kappa, double omega, double t) {
    CurvatureField f;
    f.K = [kappa, omega, t](double l, double) {
        return kappa / (l + 0.5) * (1.0 + std::sin(2.0 * kPi * l - omega * t));
    };
    f.name = "wave";
    return f;
}

double lambert_w0(double x) {
    constexpr double inv_e = 0.36787944117144233; // 1/e
    if (x < -inv_e - 1e-15) throw DomainError("lambert_w0: x < -1/e");
    if (x < -inv_e) x = -inv_e;
    if (x == 0.0) return 0.0;

    // Seed: series around the branch point for small x, log1p otherwise.
    double w;
    if (x < -0.25) {
        // Round-off can push e*x + 1 slightly negative at the branch point.
        const double p = std::sqrt(std::max(0.0, 2.0 * (std::exp(1.0) * x + 1.0)));
        w = -1.0 + p - p * p / 3.0 + 11.0 * p * p * p / 72.0;
        // Halley degenerates at w = -1 (f' = 0); the series is already
        // accurate to O(p^4) there.
        if (p < 1e-4) return w;
    } else {
        w = std::log1p(x);
    }

    // Halley iteration on f(w) = w e^w - x.
    for (int it = 0; it < 50; ++it) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double fp = ew * (w + 1.0);
        const double step = f / (fp - f * (w + 2.0) / (2.0 * (w + 1.0)));
        if (!std::isfinite(step)) break;
        w -= step;
        if (std::abs(step) <= 2e-16 * std::max(1e-300, std::abs(w))) break;
    }
    const double res = std::abs(w * std::exp(w) - x);
    if (res > 1e-13 * std::max(1.0, std::abs(x)))
        throw NumericError("lambert_w0: Halley iteration did not converge");
    return w;
}

CurvatureField make_lambert_hill() {
    CurvatureField f;
    const double e = std::exp(1.0);
    // K(r) = 1/(r (e+r) ln^3(e+r)) with r(l) = l / W0(l/e) - e. Since
    // l = e w e^w, r = e(e^w - 1); expm1 avoids the cancellation that makes
    // l/w - e lose 8 digits near l = 0.
    f.K = [e](double l, double) {
        const double w = lambert_w0(l / e);
        const double r = e * std::expm1(w);
        const double lg = 1.0 + w; // ln(e+r) = ln(e e^w) = 1 + w
        return 1.0 / (r * (e + r) * lg * lg * lg);
    };
    f.min_l = 1e-8;
    f.name = "lambert_hill";
    return f;
}

double IndexField::y(double j) const {
    return std::sqrt(j * j * a * a + c * c + 2.0 * j * a * c * std::cos(beta));
}

double IndexField::operator()(double i, double j) const {
    const double yj = y(j);
    double s = j * a * std::sin(beta) / yj;
    s = std::min(1.0, std::max(-1.0, s));
    return (*field)(i * yj, std::asin(s));
}

} // namespace gfb::field
