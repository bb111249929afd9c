#include "gfb/fnc.hpp"

#include <cmath>

#include "gfb/fundamental_solution.hpp"

namespace gfb::fnc {

namespace {

double clamp1(double x) { return std::min(1.0, std::max(-1.0, x)); }

} // namespace

DirectionVector omega(const AngularParams& p) {
    const int n = 2 + (int)p.thetas.size();
    DirectionVector v(n);
    v[0] = std::cos(p.phi);
    double s = std::sin(p.phi); // running product of sines
    for (size_t k = 0; k < p.thetas.size(); ++k) {
        v[k + 1] = std::cos(p.thetas[k]) * s;
        s *= std::sin(p.thetas[k]);
    }
    v[n - 1] = s;
    return v;
}

AngularParams angles_from_omega(const DirectionVector& v) {
    if (v.size() < 2) throw DomainError("angles_from_omega: dimension >= 2");
    AngularParams p;
    const int n = (int)v.size();
    double rest = 0.0;
    for (int k = 1; k < n; ++k) rest += v[k] * v[k];
    p.phi = std::atan2(std::sqrt(rest), v[0]);
    double s = std::sin(p.phi);
    p.thetas.resize(n - 2);
    for (int k = 0; k < n - 2; ++k) {
        if (k == n - 3) {
            // Last angle is full-range: its sine is the signed last component.
            p.thetas[k] = s == 0.0 ? 0.0 : std::atan2(v[n - 1] / s, v[k + 1] / s);
            break;
        }
        rest = 0.0;
        for (int m = k + 2; m < n; ++m) rest += v[m] * v[m];
        p.thetas[k] =
            s == 0.0 ? 0.0 : std::atan2(std::sqrt(rest) / s, v[k + 1] / s);
        s *= std::sin(p.thetas[k]);
    }
    return p;
}

double angle_between(const DirectionVector& u, const DirectionVector& v) {
    if (u.size() != v.size()) throw DomainError("angle_between: dim mismatch");
    double d = 0.0;
    for (size_t i = 0; i < u.size(); ++i) d += u[i] * v[i];
    return std::acos(clamp1(d));
}

Angles3d solve_angles_3d(const DirectionVector& omega_p, double alpha1,
                         double alpha2) {
    if (omega_p.size() != 3) throw DomainError("solve_angles_3d: need S^2");
    const AngularParams p = angles_from_omega(omega_p);
    const double phi_p = p.phi, theta_p = p.thetas[0];
    const double ca1 = std::cos(alpha1), sa1 = std::sin(alpha1);
    const double cp = std::cos(phi_p), sp = std::sin(phi_p);
    const double ca2 = std::cos(alpha2), sa2 = std::sin(alpha2);
    // Projection onto the base direction and its phi-tangent companion.
    const double cosa = ca1 * cp - sa1 * sp * ca2;
    const double cosa_t = ca1 * sp + sa1 * cp * ca2;
    const double st = std::sin(theta_p), ct = std::cos(theta_p);
    Angles3d r;
    r.phi = std::acos(clamp1(cosa));
    r.theta = std::atan2(st * cosa_t + ct * sa1 * sa2,
                         ct * cosa_t - st * sa1 * sa2);
    return r;
}

PlaneParams curvature_plane(double phi_p, double theta_p, double alpha2) {
    if (!(theta_p > -kPi / 2.0) || !(theta_p < kPi / 2.0))
        throw DomainError("curvature_plane: theta_p outside (-pi/2, pi/2)");
    if (!(alpha2 > -kPi / 2.0) || !(alpha2 <= kPi / 2.0))
        throw DomainError("curvature_plane: alpha2 outside (-pi/2, pi/2]");

    // Unit normal of the plane R_x(theta_p) R_z(phi_p) R_x(alpha2 - theta_p)
    // applied to the coordinate plane; closed form avoids the piecewise
    // branch rule (which is only valid regionally).
    const double d = alpha2 - theta_p;
    const double sd = std::sin(d), cd = std::cos(d);
    const double sp = std::sin(phi_p), cp = std::cos(phi_p);
    const double st = std::sin(theta_p), ct = std::cos(theta_p);
    double nx = sp * sd;
    double ny = -(ct * cp * sd + st * cd);
    double nz = ct * cd - st * cp * sd;
    if (nz < 0.0) { // theta_K range forces cos(theta_K) >= 0
        nx = -nx;
        ny = -ny;
        nz = -nz;
    }

    PlaneParams r;
    const double hyp = std::hypot(nx, ny);
    if (hyp < 1e-14) {
        r.phi_K = 0.0;
        r.theta_K = std::atan2(-ny, nz);
    } else if (std::abs(nx) < 1e-14) {
        // Normal in the y-z plane: the plane contains the x-axis.
        r.phi_K = 0.0;
        r.theta_K = std::atan2(-ny, nz);
    } else {
        // n = (sin(phi_K) sin(theta_K), -cos(phi_K) sin(theta_K), cos(theta_K))
        const double s = nx > 0.0 ? 1.0 : -1.0; // sign of sin(theta_K)
        r.phi_K = std::atan2(s * nx, -s * ny);
        if (r.phi_K >= kPi) r.phi_K -= kPi;
        r.theta_K = std::atan2(s * hyp, nz);
    }

    // Signed rotation length within the plane.
    if (std::abs(sd) < 1e-14 || r.phi_K == 0.0) {
        r.tau = 0.0;
    } else {
        const double sign = (theta_p * alpha2 > 0.0)   ? 1.0
                            : (theta_p * alpha2 < 0.0) ? -1.0
                                                       : 0.0;
        r.tau = sign * std::asin(clamp1(st * std::sin(r.phi_K) / sd));
    }
    return r;
}

MetricDiag metric_from_solution(const field::CurvatureField& K, double l_p,
                                double phi_p, const MetricConfig& cfg) {
    if (!(l_p > 0.0)) throw DomainError("metric_from_solution: l_p must be > 0");
    const double h = cfg.rel_step * std::max(1.0, l_p);
    const fsol::SamplePoint p{l_p, phi_p};

    auto deriv = [&](double step, double& ldot, double& phidot) {
        const fsol::SamplePoint fwd =
            fsol::geodesic_sample(K, p, kPi / 2.0, step);
        const fsol::SamplePoint bwd =
            fsol::geodesic_sample(K, p, kPi / 2.0, -step);
        ldot = (fwd.l - bwd.l) / (2.0 * step);
        phidot = (fwd.phi - bwd.phi) / (2.0 * step);
    };

    double ld, pd;
    deriv(h, ld, pd);
    if (cfg.richardson) {
        double ld2, pd2;
        deriv(h / 2.0, ld2, pd2);
        ld = (4.0 * ld2 - ld) / 3.0;
        pd = (4.0 * pd2 - pd) / 3.0;
    }
    if (std::abs(pd) < 1e-14)
        throw NumericError("metric_from_solution: phidot ~ 0 (base point)");

    MetricDiag m;
    m.g_phiphi = (1.0 - ld * ld) / (pd * pd);
    m.g_thetatheta = m.g_phiphi * std::sin(phi_p) * std::sin(phi_p);
    return m;
}

double gauss_from_metric(const std::function<double(double)>& g_phiphi,
                         double l, double h) {
    if (h <= 0.0) h = 2e-3 * std::max(1.0, l);
    const double rm = std::sqrt(g_phiphi(l - h));
    const double r0 = std::sqrt(g_phiphi(l));
    const double rp = std::sqrt(g_phiphi(l + h));
    if (r0 <= 0.0) throw NumericError("gauss_from_metric: r ~ 0");
    const double rpp = (rp - 2.0 * r0 + rm) / (h * h);
    return -rpp / r0;
}

} // namespace gfb::fnc
