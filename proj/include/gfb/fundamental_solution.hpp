#pragma once
#include "gfb/curvature_field.hpp"

namespace gfb::fsol {

// Triangle data: base c from o to q, side a leaving q at interior angle beta.
struct TriangleSpec {
    double a, c, beta;
};

struct ZerothOrder {
    double b0;      // top line
    double alpha0;  // opening angle at o
    double gamma0;  // top angle at p
};

ZerothOrder zeroth_order(const TriangleSpec& t);

// Second-order (in the subdivision parameter) corrections in the continuum
// limit, as nested integrals over the curvature field.
double top_line_b2(const field::CurvatureField& K, const TriangleSpec& t,
                   double abs_tol = 1e-10);
double top_angle_gamma2(const field::CurvatureField& K, const TriangleSpec& t,
                        double abs_tol = 1e-10);
double opening_angle_alpha2(const field::CurvatureField& K,
                            const TriangleSpec& t, double abs_tol = 1e-10);

struct SamplePoint {
    double l;    // arclength from the base point o
    double phi;  // direction angle at o
};

// Flow the geodesic leaving (l_p, phi_p) at angle beta for arclength lambda;
// the field is re-centred so phi = 0 points at the source point.
// Constant fields use the exact laws; general fields use the second-order
// corrected solution. beta in [0, pi/2] unless allow_unsafe_beta.
SamplePoint geodesic_sample(const field::CurvatureField& K, SamplePoint p,
                            double beta, double lambda,
                            bool allow_unsafe_beta = false,
                            double abs_tol = 1e-10);

} // namespace gfb::fsol
