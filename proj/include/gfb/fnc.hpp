#pragma once
#include <vector>

#include "gfb/curvature_field.hpp"

namespace gfb::fnc {

// Angular parameters of a direction: phi in [0, 2pi), thetas in (-pi/2, pi/2),
// dimension n = 2 + thetas.size().
struct AngularParams {
    double phi;
    std::vector<double> thetas;
};

using DirectionVector = std::vector<double>;

// Unit direction vector from telescoping sines:
//   Omega_1 = cos(phi), Omega_k = cos(theta_{k-1}) sin(theta_{k-2})...sin(phi),
//   Omega_n = sin(theta_{n-2})...sin(theta_1) sin(phi).
DirectionVector omega(const AngularParams& p);

// Inverse of omega on the open parameter box (phi in (0, pi)).
AngularParams angles_from_omega(const DirectionVector& v);

// acos(u . v) in [0, pi]; both arguments unit.
double angle_between(const DirectionVector& u, const DirectionVector& v);

// Direction reached from Omega(phi_p, theta_p) on S^2 by rotating an angle
// alpha1 within the plane tilted by alpha2 against the phi-coordinate plane.
struct Angles3d {
    double phi, theta;
};
Angles3d solve_angles_3d(const DirectionVector& omega_p, double alpha1,
                         double alpha2);

// Parameters of the plane spanned by a geodesic variation: phi_K in [0, pi),
// theta_K in (-pi/2, pi/2], tau a signed rotation length along the plane.
struct PlaneParams {
    double phi_K, theta_K, tau;
};
PlaneParams curvature_plane(double phi_p, double theta_p, double alpha2);

struct MetricDiag {
    double g_ll = 1.0;  // FNC: radial component is identically 1
    double g_phiphi = 0.0;
    double g_thetatheta = 0.0;  // 3-D case: g_phiphi * sin^2(phi_p)
};

struct MetricConfig {
    double rel_step = 1e-4;  // FD step = rel_step * max(1, l_p)
    bool richardson = true;  // one extrapolation level
};

// Reconstruct the diagonal metric at (l_p, phi_p) from derivatives of the
// geodesic flow in the direction beta = pi/2 at lambda = 0:
//   g_phiphi = (1 - ldot^2) / phidot^2.
MetricDiag metric_from_solution(const field::CurvatureField& K, double l_p,
                                double phi_p, const MetricConfig& cfg = {});

// Gaussian curvature from a rotation-symmetric metric profile l -> g_phiphi:
// K = -r''(l)/r(l) with r = sqrt(g_phiphi), central differences of width h.
double gauss_from_metric(const std::function<double(double)>& g_phiphi,
                         double l, double h = 0.0);

} // namespace gfb::fnc
