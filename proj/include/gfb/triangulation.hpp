#pragma once
#include <vector>

#include "gfb/curvature_field.hpp"
#include "gfb/fundamental_solution.hpp"

namespace gfb::tri {

// Geometric substitutes for slice j of the N-slice subdivision.
struct Substitutes {
    int N, j;
    double a, c, beta;
    double Yjm1, Yj;   // Y_N^{j-1}, Y_N^j
    double Zjm1, Zj;   // Z_N^{j-1}, Z_N^j
    double c0;         // Y^{j-1}/N: slice base length
    double X;          // ((Y^j)^2 - a Z^j)/Y^{j-1}
    double X1, Y1;     // first-slice-congruent substitutes
    double e1;         // e^{1j} = N a c sin(beta)/Y^{j-1}
    double sin_b0, cos_b0, beta0;
    double I_N;        // sum_{i=2}^{N-2} 1/(i+1) = psi(N) + gamma - 3/2
    double f_N;        // N a c sin(beta)
    double Lambda_N;   // N I_N (a c sin(beta))^2
    double L;          // (Y^j)^2 - a Z^j

    double e(int i) const { return i * e1; }
    double k2(int i) const { return X * X + e(i) * e(i); }
};

Substitutes substitutes(int N, int j, double a, double c, double beta);

// Intra-slice recursion parameters; vectors are indexed by i (index 0 unused).
struct RecursionParams {
    std::vector<double> b;  // b^i = (i+1)/i,      i in 1..N-1
    std::vector<double> A;  // A^i = i/(i+1)
    std::vector<double> D;  // D^{ij} = e^{ij}/(i+1)
    std::vector<double> C;  // C^{ij},             i in 1..N-2
};

// K_samples[i], i in 1..N: lower-left-edge curvature samples of slice j,
// K[i] = K((i-1) c0 eps, alpha_bar0^{j-1}).
RecursionParams recursion_params(const Substitutes& s,
                                 const std::vector<double>& K_samples);

// Rib-line third-order coefficients a3^{ij}, i in 2..N-1 (index 0,1 unused).
std::vector<double> rib_lines(const Substitutes& s,
                              const std::vector<double>& K_samples);

// Per-slice second-order solution plus the argument-correction coefficients
// that feed the next slice.
struct SliceResult {
    double b2_interior;      // bbar_2^j
    double gamma2_interior;  // gammabar_2^j
    double alpha2_interior;  // alpha_2^{0,j}
    double coeff_b_c, coeff_b_beta;
    double coeff_gamma_c, coeff_gamma_beta;
    double coeff_alpha_c, coeff_alpha_beta;
    std::vector<double> a3;  // rib lines
    std::vector<double> C;   // recursion parameters C^{ij}
};

SliceResult slice_second_order(const Substitutes& s,
                               const std::vector<double>& K_samples);

// The six argument-correction coefficients are field-independent; exposed
// separately for the cross-slice recursion substitutes.
struct ArgCoeffs {
    double b_c, b_beta, gamma_c, gamma_beta, alpha_c, alpha_beta;
};
ArgCoeffs arg_coeffs(int N, int j, double a, double c, double beta);

// Cross-slice fold: accumulated second-order arguments. Index j in 1..N+1;
// c2[1] = beta2[1] = 0 (the first slice has exact arguments). Values are the
// raw accumulators (multiply by eps^2 for physical corrections).
struct CrossSliceResult {
    std::vector<double> c2;            // c2^j
    std::vector<double> beta2;         // beta2^j
    std::vector<double> alpha_contrib; // per-slice opening-angle contribution
};

CrossSliceResult cross_slice(int N, double a, double c, double beta,
                             const std::vector<SliceResult>& slices);

// Recursion substitutes O/Q/V/W by direct recursion (n = 0..n_max).
struct OQVW {
    std::vector<double> O, Q, V, W;
};
OQVW cross_slice_direct(int N, int j, double a, double c, double beta,
                        int n_max);
// Explicit solved forms of the same substitutes (test oracle counterpart).
OQVW cross_slice_explicit(int N, int j, double a, double c, double beta,
                          int n_max);

struct Vertex {
    double x, y;
};

// Finite-N fundamental solution. Second-order fields carry the eps^2 factor.
struct FiniteNResult {
    int N;
    fsol::ZerothOrder zeroth;
    double b2, gamma2, alpha2;
    std::vector<double> rib_corr;    // eps^2 c2^{j+1}: rib-j length correction
    std::vector<double> angle_corr;  // accumulated opening-angle correction
    // Corrected rib endpoints (division points of side a) in the flat chart,
    // index j = 0..N; j = 0 is the base vertex q.
    std::vector<Vertex> vertices;
    // Full small-triangle grid: grid[j][i], i = 0..N points along rib j.
    std::vector<std::vector<Vertex>> grid;
};

FiniteNResult triangulate(const field::CurvatureField& K,
                          const fsol::TriangleSpec& t, int N);

// Residual of the delta-equation (rib recursion) at row i of slice j; zero to
// round-off by construction. 2 <= i <= N-1.
double delta_residual(const Substitutes& s,
                      const std::vector<double>& K_samples,
                      const std::vector<double>& a3, int i);

} // namespace gfb::tri
