#include "gfb/triangulation.hpp"

#include <cmath>

namespace gfb::tri {

namespace {

double Yfun(int N, int j, double a, double c, double cb) {
    return std::sqrt(double(j) * j * a * a + double(N) * N * c * c +
                     2.0 * j * N * a * c * cb);
}

void check_sizes(const Substitutes& s, const std::vector<double>& K_samples) {
    if ((int)K_samples.size() < s.N + 1)
        throw DomainError("K_samples must cover i = 1..N");
}

// C^{ij} coefficients, i in 1..N-2 (index 0 unused).
std::vector<double> compute_C(const Substitutes& s,
                              const std::vector<double>& K) {
    const int N = s.N;
    const double X = s.X, X2 = X * X, Y2 = s.Yj * s.Yj, e1 = s.e1;
    std::vector<double> C(N - 1, 0.0);
    C[1] = K[1] * (X2 + 2.0 * Y2);
    double acc = 0.0;
    for (int i = 2; i <= N - 2; ++i) {
        const double kk =
            K[i] * (2.0 * i * X2 + i * (3.0 + X2 / s.k2(i)) * Y2 +
                    (1.0 + i * (double(i) * i - 1.0) * X2 / s.k2(i)) * e1 * e1);
        acc += i * kk;
        C[i] = (2.0 * C[1] + acc) / (i + 1);
    }
    return C;
}

// K_a^{nj}, the rib-recursion kernel, n in 2..N-2.
double Ka(const Substitutes& s, const std::vector<double>& K,
          const std::vector<double>& C, int n) {
    const double X2 = s.X * s.X, e1 = s.e1;
    const double Xn = ((5.0 - 1.0 / n) * X2 +
                       double(n) * n * (n + 3.0) * e1 * e1 * e1 * e1 / X2 +
                       (5.0 * n * n + 3.0) * e1 * e1) /
                      s.k2(n);
    const double Zn = 1.0 + 2.0 * (n + 1.0) * e1 * e1 / X2;
    return C[n - 1] / X2 + n * K[n] * Xn + (n + 1) * K[n + 1] * Zn;
}

// Boundary rib a3^{N-1,j} (Problem 2 Type 3 closure).
double a3_boundary(const Substitutes& s, const std::vector<double>& K,
                   const std::vector<double>& C) {
    const int N = s.N;
    const double X = s.X, X2 = X * X, Y2 = s.Yj * s.Yj;
    const double c0 = s.c0, e1 = s.e1, X1 = s.X1;
    const double eN1 = s.e(N - 1);
    const double chi =
        (N - 1.0) * (e1 / X) *
            (s.a * s.a + N * c0 * c0 + (N + 1.0) * s.a * c0 * s.cos_b0 +
             (X1 / X) * Y2) +
        (Y2 * (s.k2(N - 1) + X2) / (s.k2(N - 1) * X2) +
         (N - 2.0) / s.k2(N - 1) *
             (X2 / (N - 1.0) + (2.0 * N - 1.0) * e1 * e1)) *
            c0 * eN1;
    const double zeta = (e1 / X1) * (2.0 * s.a * s.a + N * c0 * c0 +
                                     (2.0 * N + 1.0) * s.a * c0 * s.cos_b0);
    return (N - 1.0) * c0 * c0 * X1 / (6.0 * X * ((N - 1.0) * c0 + X1)) *
           ((c0 * e1 / X2) * C[N - 2] + K[N - 1] * chi + K[N] * zeta);
}

} // namespace

Substitutes substitutes(int N, int j, double a, double c, double beta) {
    if (N <= 3) throw DomainError("substitutes: N must exceed 3");
    if (j < 1 || j > N) throw DomainError("substitutes: j out of range");
    Substitutes s;
    s.N = N;
    s.j = j;
    s.a = a;
    s.c = c;
    s.beta = beta;
    const double cb = std::cos(beta), sb = std::sin(beta);
    s.Yjm1 = Yfun(N, j - 1, a, c, cb);
    s.Yj = Yfun(N, j, a, c, cb);
    s.Zjm1 = (j - 1.0) * a + N * c * cb;
    s.Zj = double(j) * a + N * c * cb;
    s.c0 = s.Yjm1 / N;
    s.X = (s.Yj * s.Yj - a * s.Zj) / s.Yjm1;
    s.e1 = N * a * c * sb / s.Yjm1;
    s.sin_b0 = N * c * sb / s.Yjm1;
    s.cos_b0 = s.Zjm1 / s.Yjm1;
    s.beta0 = std::atan2(s.sin_b0, s.cos_b0);
    s.X1 = (s.Yjm1 * s.Yjm1 + N * a * s.Zjm1) / (N * s.Yjm1);
    s.Y1 = Yfun(N, N + j - 1, a, c, cb) / N;
    double in = 0.0;
    for (int i = 2; i <= N - 2; ++i) in += 1.0 / (i + 1);
    s.I_N = in;
    s.f_N = N * a * c * sb;
    s.Lambda_N = N * in * a * a * c * c * sb * sb;
    s.L = s.Yj * s.Yj - a * s.Zj;
    return s;
}

RecursionParams recursion_params(const Substitutes& s,
                                 const std::vector<double>& K_samples) {
    check_sizes(s, K_samples);
    const int N = s.N;
    RecursionParams p;
    p.b.assign(N, 0.0);
    p.A.assign(N, 0.0);
    p.D.assign(N, 0.0);
    for (int i = 1; i <= N - 1; ++i) {
        p.b[i] = (i + 1.0) / i;
        p.A[i] = i / (i + 1.0);
        p.D[i] = s.e(i) / (i + 1.0);
    }
    p.C = compute_C(s, K_samples);
    return p;
}

std::vector<double> rib_lines(const Substitutes& s,
                              const std::vector<double>& K_samples) {
    check_sizes(s, K_samples);
    const int N = s.N;
    const auto C = compute_C(s, K_samples);
    std::vector<double> a3(N + 1, 0.0);
    a3[N - 1] = a3_boundary(s, K_samples, C);
    // Explicit solved sum, accumulated as a running tail.
    double tail = 0.0;
    for (int i = N - 2; i >= 2; --i) {
        tail += Ka(s, K_samples, C, i) / (i + 1);
        a3[i] = (s.c0 * s.c0 * s.c0 * s.e1 / (6.0 * s.X)) * i * tail +
                (i / (N - 1.0)) * a3[N - 1];
    }
    return a3;
}

SliceResult slice_second_order(const Substitutes& s,
                               const std::vector<double>& K_samples) {
    check_sizes(s, K_samples);
    const int N = s.N;
    const auto& K = K_samples;
    const double X = s.X, X2 = X * X, Yj = s.Yj, Y2 = Yj * Yj;
    const double c0 = s.c0, e1 = s.e1, X1 = s.X1, Y1 = s.Y1;

    SliceResult r;
    r.C = compute_C(s, K);
    r.a3 = rib_lines(s, K);
    const auto& a3 = r.a3;

    // Top-line pieces b3^{ij}; boundary rows first.
    const double b3_1 =
        -(e1 / Yj) * (c0 * c0 * c0 * e1 / X * (K[1] / 3.0 + K[2]) - a3[2]);
    const double b3_last =
        -(c0 * c0 * e1 * e1 / (6.0 * Yj)) *
        ((N - 1.0) * (N - 1.0) * K[N - 1] * X1 / X + (2.0 * N - 1.0) * K[N] +
         6.0 * a3[N - 1] / (c0 * c0 * e1));
    double b2 = b3_1 + b3_last;
    for (int i = 2; i <= N - 2; ++i) {
        const double ei1 = s.e(i + 1);
        const double Xb = i + 5.0 + (i - 1.0) / i + (i + 3.0) * e1 * e1 / X2;
        const double Zb =
            (i + 2.0 + e1 * ei1 / X2) * (1.0 + ei1 * ei1 / s.k2(i + 1)) +
            ((i + 1.0) * (i + 1.0) * X2 + (2.0 * i + 1.0) * e1 * ei1) /
                (i * s.k2(i + 1));
        const double Kb = r.C[i - 1] / X2 + i * K[i] * Xb + (i + 1) * K[i + 1] * Zb;
        b2 += -e1 / ((i + 1.0) * Yj) *
              ((c0 * c0 * c0 * e1 / (6.0 * X)) * i * Kb - a3[i + 1]);
    }
    r.b2_interior = b2 / N; // bbar_2^j = sum_i b_3^{ij} * eps

    // Opening angle at the apex.
    r.alpha2_interior =
        (X2 / (2.0 * Y2)) *
        ((c0 * c0 * e1 / (3.0 * X)) *
             (K[1] * (3.0 + 4.0 * e1 * e1 / X2) + K[2] * s.k2(2) / X2) +
         a3[2] / c0);

    // Top angle: hatted interior piece plus the last-row closure.
    const double g2_last =
        (K[N] / 6.0) * c0 * e1 * (Y1 * Y1 + c0 * X1) / (Y1 * Y1);
    const double eN1 = s.e(N - 1);
    const double alhat =
        (1.0 / (X1 * Y2)) *
        ((c0 * eN1 / 6.0) *
             (K[N - 1] * (X1 / X) * (X1 * Y2 - c0 * eN1 * e1) +
              K[N] * c0 * e1 * e1 *
                  ((N * c0 * c0 - s.a * s.a) / (Y1 * Y1) - 1.0)) +
         X2 * a3[N - 1]);
    r.gamma2_interior = alhat + g2_last;

    // Argument-correction coefficients (field-independent).
    r.coeff_b_c = (X + s.I_N * e1 * e1 / (N * X)) / Yj;
    r.coeff_b_beta = -c0 * e1 / Yj;
    // The top-angle/base coupling uses e^{N-1,j}; the printed e^{Nj} variant
    // degrades the N-convergence to the continuum limit and is pinned out by
    // the sphere cross-check test.
    r.coeff_gamma_c = s.e(N - 1) / Y2;
    r.coeff_gamma_beta = N * c0 * X / Y2;
    r.coeff_alpha_c = (s.a * s.cos_b0 - X) * e1 / (Y2 * c0);
    r.coeff_alpha_beta = s.a * s.Zj / Y2;
    return r;
}

ArgCoeffs arg_coeffs(int N, int j, double a, double c, double beta) {
    const Substitutes s = substitutes(N, j, a, c, beta);
    const double Y2 = s.Yj * s.Yj;
    ArgCoeffs k;
    k.b_c = (s.X + s.I_N * s.e1 * s.e1 / (N * s.X)) / s.Yj;
    k.b_beta = -s.c0 * s.e1 / s.Yj;
    k.gamma_c = s.e(N - 1) / Y2;
    k.gamma_beta = N * s.c0 * s.X / Y2;
    k.alpha_c = (a * s.cos_b0 - s.X) * s.e1 / (Y2 * s.c0);
    k.alpha_beta = a * s.Zj / Y2;
    return k;
}

CrossSliceResult cross_slice(int N, double a, double c, double beta,
                             const std::vector<SliceResult>& slices) {
    if ((int)slices.size() < N + 1)
        throw DomainError("cross_slice: need slice results for j = 1..N");
    CrossSliceResult r;
    r.c2.assign(N + 2, 0.0);
    r.beta2.assign(N + 2, 0.0);
    r.alpha_contrib.assign(N + 1, 0.0);
    double c2 = 0.0, b2 = 0.0;
    for (int j = 1; j <= N; ++j) {
        const SliceResult& s = slices[j];
        r.alpha_contrib[j] =
            s.alpha2_interior + s.coeff_alpha_c * c2 + s.coeff_alpha_beta * b2;
        const double c2n = s.b2_interior + s.coeff_b_c * c2 + s.coeff_b_beta * b2;
        const double b2n =
            s.gamma2_interior + s.coeff_gamma_c * c2 + s.coeff_gamma_beta * b2;
        c2 = c2n;
        b2 = b2n;
        r.c2[j + 1] = c2;
        r.beta2[j + 1] = b2;
    }
    return r;
}

OQVW cross_slice_direct(int N, int j, double a, double c, double beta,
                        int n_max) {
    if (n_max >= j) throw DomainError("cross_slice_direct: need n < j");
    OQVW r;
    r.O.assign(n_max + 1, 0.0);
    r.Q.assign(n_max + 1, 0.0);
    r.V.assign(n_max + 1, 0.0);
    r.W.assign(n_max + 1, 0.0);
    r.O[0] = 1.0;
    r.W[0] = 1.0;
    for (int n = 0; n < n_max; ++n) {
        const ArgCoeffs k = arg_coeffs(N, j - n, a, c, beta);
        r.O[n + 1] = r.O[n] * k.b_c + r.Q[n] * k.gamma_c;
        r.Q[n + 1] = r.O[n] * k.b_beta + r.Q[n] * k.gamma_beta;
        r.V[n + 1] = r.V[n] * k.b_c + r.W[n] * k.gamma_c;
        r.W[n + 1] = r.V[n] * k.b_beta + r.W[n] * k.gamma_beta;
    }
    return r;
}

OQVW cross_slice_explicit(int N, int j, double a, double c, double beta,
                          int n_max) {
    if (n_max >= j) throw DomainError("cross_slice_explicit: need n < j");
    const double cb = std::cos(beta), sb = std::sin(beta);
    const double e1 = a * sb;          // continuum edge element
    const double fN = N * a * c * sb;  // = N c e1
    double IN = 0.0;
    for (int i = 2; i <= N - 2; ++i) IN += 1.0 / (i + 1);
    const double Lam = N * IN * c * c * e1 * e1;

    auto Y = [&](int m) { return Yfun(N, m, a, c, cb); };
    auto Z = [&](int m) { return m * a + N * c * cb; };
    auto p = [&](int m) { // plain product factor at slice m
        return 1.0 - a * Z(m) / (Y(m) * Y(m));
    };
    auto ph = [&](int m) { // hatted factor (carries the Lambda_N term)
        const double L = Y(m) * Y(m) - a * Z(m);
        return p(m) + Lam / (Y(m) * Y(m) * L);
    };
    // P_m^n and Phat_m^n over l = m..n of slice index j - l.
    auto P = [&](int m, int n) {
        double r = 1.0;
        for (int l = m; l <= n; ++l) r *= p(j - l);
        return r;
    };
    auto Ph = [&](int m, int n) {
        double r = 1.0;
        for (int l = m; l <= n; ++l) r *= ph(j - l);
        return r;
    };

    // The engine's gamma/base coupling carries e^{N-1,j}, so the cross terms
    // scale with (N-1) f_N rather than N f_N.
    const double g = (N - 1.0) * fN;

    OQVW r;
    r.O.assign(n_max + 1, 0.0);
    r.Q.assign(n_max + 1, 0.0);
    r.V.assign(n_max + 1, 0.0);
    r.W.assign(n_max + 1, 0.0);
    r.O[0] = 1.0;
    r.W[0] = 1.0;
    for (int n = 1; n <= n_max; ++n) {
        // O_n: leading hatted product plus Q-feedback terms (g c e1 = the
        // (N-1)/N-scaled f_N^2 / N of the printed form).
        double o = (Y(j) / Y(j - n)) * Ph(0, n - 1);
        for (int m = 1; m <= n - 1; ++m) {
            const double Qt = -r.Q[m] / (c * e1);
            o -= (g * c * e1 / Y(j - n)) * Ph(m + 1, n - 1) /
                 (Y(j - m) * Y(j - m)) * Qt;
        }
        r.O[n] = o;

        double q = 0.0;
        for (int m = 0; m <= n - 1; ++m)
            q += P(m + 1, n - 1) / Y(j - m) * r.O[m];
        r.Q[n] = -c * e1 * q;

        double v = 0.0;
        for (int m = 0; m <= n - 1; ++m)
            v += Ph(m + 1, n - 1) / (Y(j - m) * Y(j - m)) * r.W[m];
        r.V[n] = (g / Y(j - n)) * v;

        double w = P(0, n - 1);
        for (int m = 1; m <= n - 1; ++m)
            w -= c * e1 * P(m + 1, n - 1) / Y(j - m) * r.V[m];
        r.W[n] = w;
    }
    return r;
}

FiniteNResult triangulate(const field::CurvatureField& K,
                          const fsol::TriangleSpec& t, int N) {
    if (N <= 3) throw DomainError("triangulate: N must exceed 3");
    if (!(t.beta >= 0.0) || t.beta >= kPi / 2.0)
        throw DomainError("triangulate: beta must lie in [0, pi/2)");
    const double eps = 1.0 / N;
    const double sb = std::sin(t.beta);

    std::vector<SliceResult> slices(N + 1);
    std::vector<Substitutes> subs(N + 1);
    for (int j = 1; j <= N; ++j) {
        subs[j] = substitutes(N, j, t.a, t.c, t.beta);
        const Substitutes& s = subs[j];
        const double abar0_prev =
            std::asin(std::min(1.0, (j - 1.0) * t.a * sb / s.Yjm1));
        std::vector<double> Ks(N + 1, 0.0);
        for (int i = 1; i <= N; ++i)
            Ks[i] = K((i - 1.0) * s.c0 * eps, abar0_prev);
        slices[j] = slice_second_order(s, Ks);
    }
    const CrossSliceResult cs = cross_slice(N, t.a, t.c, t.beta, slices);

    FiniteNResult r;
    r.N = N;
    r.zeroth = fsol::zeroth_order(t);
    r.b2 = cs.c2[N + 1] * eps * eps;
    r.gamma2 = cs.beta2[N + 1] * eps * eps;
    double asum = 0.0;
    r.rib_corr.assign(N + 1, 0.0);
    r.angle_corr.assign(N + 1, 0.0);
    for (int j = 1; j <= N; ++j) {
        asum += cs.alpha_contrib[j];
        r.rib_corr[j] = cs.c2[j + 1] * eps * eps;
        r.angle_corr[j] = asum * eps * eps;
    }
    r.alpha2 = asum * eps * eps;

    // Flat-chart geometry of the division points and the rib grids.
    r.vertices.resize(N + 1);
    r.grid.resize(N + 1);
    r.vertices[0] = Vertex{t.c, 0.0};
    r.grid[0] = {Vertex{0.0, 0.0}, Vertex{t.c, 0.0}};
    for (int j = 1; j <= N; ++j) {
        const double rad = subs[j].Yj / N + r.rib_corr[j];
        const double ang =
            std::asin(std::min(1.0, j * t.a * sb / subs[j].Yj)) +
            r.angle_corr[j];
        r.vertices[j] = Vertex{rad * std::cos(ang), rad * std::sin(ang)};
        r.grid[j].resize(N + 1);
        for (int i = 0; i <= N; ++i)
            r.grid[j][i] = Vertex{(double(i) / N) * rad * std::cos(ang),
                                  (double(i) / N) * rad * std::sin(ang)};
    }
    return r;
}

double delta_residual(const Substitutes& s,
                      const std::vector<double>& K_samples,
                      const std::vector<double>& a3, int i) {
    check_sizes(s, K_samples);
    const int N = s.N;
    if (i < 2 || i > N - 1) throw DomainError("delta_residual: i out of range");
    const auto C = compute_C(s, K_samples);
    if (i == N - 1) return a3[N - 1] - a3_boundary(s, K_samples, C);
    const double bi = (i + 1.0) / i;
    return bi * a3[i] -
           (s.c0 * s.c0 * s.c0 * s.e1 / (6.0 * s.X)) * Ka(s, K_samples, C, i) -
           a3[i + 1];
}

} // namespace gfb::tri
