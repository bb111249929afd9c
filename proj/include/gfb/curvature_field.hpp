#pragma once
#include <functional>
#include <string>
#include "gfb/common.hpp"

namespace gfb::field {

// Gaussian curvature as a function of (arclength l, direction angle phi).
// min_l: evaluation below this radius is a domain error (pole fields use it
// as an integration clip as well). is_constant flags fields where the exact
// constant-curvature laws apply.
struct CurvatureField {
    std::function<double(double l, double phi)> K;
    double min_l = 0.0;
    bool is_constant = false;
    double constant_value = 0.0;
    std::string name;

    double operator()(double l, double phi) const {
        if (l < min_l) throw DomainError("curvature field evaluated below min_l");
        return K(l, phi);
    }
};

CurvatureField make_constant(double K0);
CurvatureField make_inverse_l(double min_l = 1e-8);
// kappa/(l + 1/2) * (1 + sin(2 pi l - omega t))
CurvatureField make_wave(double kappa, double omega, double t);
// Curvature of the Lambert profile surface, expressed in arclength l.
CurvatureField make_lambert_hill();

// Principal branch of the Lambert W function on [-1/e, inf).
double lambert_w0(double x);

// Curvature samples on the triangulation grid:
//   K[i, j] = K(i * y(j), asin(j * a * sin(beta) / y(j))),
//   y(j) = sqrt(j^2 a^2 + c^2 + 2 j a c cos(beta)).
struct IndexField {
    const CurvatureField* field;
    double a, c, beta;

    double y(double j) const;
    double operator()(double i, double j) const;
};

} // namespace gfb::field
