#include "gfb/fundamental_solution.hpp"

#include <cmath>

#include "gfb/curved_trig.hpp"
#include "gfb/integration.hpp"

namespace gfb::fsol {

namespace {

// Geometry helpers shared by the limit integrals.
struct Geo {
    const field::CurvatureField* field;
    double a, c, cb, sb, f; // f = a c sin(beta)

    double y(double x) const {
        return std::sqrt(x * x * a * a + c * c + 2.0 * x * a * c * cb);
    }
    double z(double x) const { return x * a + c * cb; }
    // K[k, j] = K(k y(j), asin(j a sin(beta) / y(j)))
    double K(double k, double j) const {
        const double yj = y(j);
        double s = j * a * sb / yj;
        s = std::min(1.0, std::max(-1.0, s));
        return (*field)(k * yj, std::asin(s));
    }
    // int_0^1 k^2 K[k, j] dk, clipped below the field's inner radius.
    double inner_k(double j, double tol) const {
        const double klo = field->min_l > 0.0 ? field->min_l / y(j) : 0.0;
        if (klo >= 1.0) return 0.0;
        return quad::quad([&](double k) { return k * k * K(k, j); }, klo, 1.0,
                          tol);
    }
    // (1/n^2) int_0^n k^2 K[k, j] dk  ==  n int_0^1 u^2 K[n u, j] du;
    // the u-substitution keeps the integrand bounded as n -> 0 and admits a
    // clean clip for pole fields.
    double scaled_inner(double n, double j, double tol) const {
        if (n < 1e-4 && field->min_l == 0.0) return n * K(0.0, j) / 3.0;
        const double ulo =
            field->min_l > 0.0 ? field->min_l / (n * y(j)) : 0.0;
        if (ulo >= 1.0) return 0.0;
        return n * quad::quad([&](double u) { return u * u * K(n * u, j); },
                              ulo, 1.0, tol);
    }
};

Geo make_geo(const field::CurvatureField& K, const TriangleSpec& t) {
    const double cb = std::cos(t.beta), sb = std::sin(t.beta);
    return Geo{&K, t.a, t.c, cb, sb, t.a * t.c * sb};
}

void check_triangle(const TriangleSpec& t) {
    if (!(t.a > 0.0) || !(t.c > 0.0))
        throw DomainError("triangle: a and c must be positive");
    if (!(t.beta >= 0.0) || !(t.beta <= kPi))
        throw DomainError("triangle: beta must lie in [0, pi]");
}

// Raw evaluations without the positivity precondition: the geodesic sampler
// extends to a < 0 (backward continuation; all formulas are analytic in a).
ZerothOrder zeroth_raw(const Geo& g) {
    const double b0 = g.y(1.0);
    if (b0 == 0.0) throw DomainError("zeroth_order: degenerate triangle");
    const double sa = std::min(1.0, std::max(-1.0, g.a * g.sb / b0));
    const double sg = std::min(1.0, std::max(-1.0, g.c * g.sb / b0));
    return ZerothOrder{b0, std::asin(sa), std::asin(sg)};
}

double b2_raw(const Geo& g, double abs_tol) {
    const double inner_tol = abs_tol / 8.0;
    const double I = quad::quad(
        [&](double n) { return n * g.inner_k(1.0 - n, inner_tol); }, 0.0, 1.0,
        abs_tol);
    return -g.f * g.f / g.y(1.0) * I;
}

double gamma2_raw(const Geo& g, double abs_tol) {
    const double inner_tol = abs_tol / 8.0;
    const double y1 = g.y(1.0), z1 = g.z(1.0);
    const double I = quad::quad(
        [&](double n) {
            return (1.0 - n * g.a * z1 / (y1 * y1)) *
                   g.inner_k(1.0 - n, inner_tol);
        },
        0.0, 1.0, abs_tol);
    return g.f * I;
}

double alpha2_raw(const Geo& g, double abs_tol) {
    const double t1 = abs_tol / 8.0, t2 = t1 / 8.0;
    const double I = quad::quad(
        [&](double j) {
            const double yj = g.y(j), zj = g.z(j);
            const double yj2 = yj * yj;
            const double part1 = quad::quad(
                [&](double n) { return g.scaled_inner(n, j, t2); }, 0.0, 1.0,
                t1);
            const double part2 = quad::quad(
                [&](double n) {
                    const double w =
                        g.a * zj / yj2 +
                        n * (g.f * g.f - g.a * g.a * zj * zj) / (yj2 * yj2);
                    return w * g.inner_k(j - n, t2);
                },
                0.0, j, t1);
            return part1 + part2;
        },
        0.0, 1.0, abs_tol);
    return g.f * I;
}

} // namespace

ZerothOrder zeroth_order(const TriangleSpec& t) {
    check_triangle(t);
    field::CurvatureField dummy = field::make_constant(0.0);
    return zeroth_raw(make_geo(dummy, t));
}

double top_line_b2(const field::CurvatureField& K, const TriangleSpec& t,
                   double abs_tol) {
    check_triangle(t);
    return b2_raw(make_geo(K, t), abs_tol);
}

double top_angle_gamma2(const field::CurvatureField& K, const TriangleSpec& t,
                        double abs_tol) {
    check_triangle(t);
    return gamma2_raw(make_geo(K, t), abs_tol);
}

double opening_angle_alpha2(const field::CurvatureField& K,
                            const TriangleSpec& t, double abs_tol) {
    check_triangle(t);
    return alpha2_raw(make_geo(K, t), abs_tol);
}

SamplePoint geodesic_sample(const field::CurvatureField& K, SamplePoint p,
                            double beta, double lambda,
                            bool allow_unsafe_beta, double abs_tol) {
    if (lambda == 0.0) return p;  // zero flow echoes the base point
    if (!(p.l > 0.0)) throw DomainError("geodesic_sample: l must be > 0");
    if (beta < 0.0 || (beta > kPi / 2.0 && !allow_unsafe_beta))
        throw DomainError(
            "geodesic_sample: beta outside [0, pi/2]; pass allow_unsafe_beta "
            "to override");

    if (K.is_constant) {
        // Exact constant-curvature laws (interior angle at the sample point
        // is pi - beta; lambda < 0 continues the geodesic backwards).
        const double K0 = K.constant_value;
        const double b = trig::law_c(K0, kPi - beta, lambda, p.l);
        const double alpha =
            trig::law_sc(K0, kPi - beta, lambda, p.l, trig::Branch::principal);
        return SamplePoint{b, p.phi + alpha};
    }

    // Re-centre the field's angular coordinate on the sample point.
    field::CurvatureField shifted = K;
    const double phi_p = p.phi;
    const auto base = K.K;
    shifted.K = [base, phi_p](double l, double phi) {
        return base(l, phi + phi_p);
    };

    const TriangleSpec t{lambda, p.l, beta};
    const Geo g = make_geo(shifted, t);
    const ZerothOrder z0 = zeroth_raw(g);
    const double b2 = b2_raw(g, abs_tol);
    const double a2 = alpha2_raw(g, abs_tol);
    return SamplePoint{z0.b0 + b2, p.phi + z0.alpha0 + a2};
}

} // namespace gfb::fsol
