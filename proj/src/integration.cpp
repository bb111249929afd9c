#include "gfb/integration.hpp"

#include <cmath>
#include <vector>

namespace gfb::quad {

namespace {

// 8-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kNodes[4] = {0.1834346424956498, 0.5255324099163290,
                              0.7966664774136267, 0.9602898564975363};
constexpr double kWeights[4] = {0.3626837833783620, 0.3137066458778873,
                                0.2223810344533745, 0.1012285362903763};

double gl8(const Fn& f, double a, double b) {
    const double h = (b - a) / 2.0, m = (a + b) / 2.0;
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
        s += kWeights[i] * (f(m - h * kNodes[i]) + f(m + h * kNodes[i]));
    return s * h;
}

double adapt(const Fn& f, double a, double b, double whole, double tol,
             int depth) {
    const double m = (a + b) / 2.0;
    const double left = gl8(f, a, m), right = gl8(f, m, b);
    const double delta = left + right - whole;
    // Noise floor: once the requested tolerance is below round-off of the
    // panel values, further splitting only recurses on rounding error.
    const double floor_ =
        1e-15 * (std::abs(left) + std::abs(right)) +
        1e-300;
    if (std::abs(delta) <= std::max(tol, floor_) || depth >= 40)
        return left + right;
    return adapt(f, a, m, left, tol / 2.0, depth + 1) +
           adapt(f, m, b, right, tol / 2.0, depth + 1);
}

} // namespace

double quad(const Fn& f, double a, double b, double abs_tol) {
    if (a == b) return 0.0;
    return adapt(f, a, b, gl8(f, a, b), abs_tol, 0);
}

double quad_nested2(const std::function<double(double, double)>& f,
                    double a, double b,
                    const std::function<double(double)>& c,
                    const std::function<double(double)>& d,
                    double abs_tol) {
    return quad(
        [&](double x) {
            return quad([&, x](double y) { return f(x, y); }, c(x), d(x),
                        abs_tol / 8.0);
        },
        a, b, abs_tol);
}

double quad_nested3(const std::function<double(double, double, double)>& f,
                    double a, double b,
                    const std::function<double(double)>& c,
                    const std::function<double(double)>& d,
                    const std::function<double(double, double)>& e,
                    const std::function<double(double, double)>& g,
                    double abs_tol) {
    return quad(
        [&](double x) {
            return quad_nested2(
                [&, x](double y, double z) { return f(x, y, z); }, c(x), d(x),
                [&, x](double y) { return e(x, y); },
                [&, x](double y) { return g(x, y); }, abs_tol / 8.0);
        },
        a, b, abs_tol);
}

double product_integral_numeric(const Fn& f, double a, double b, int N) {
    if (N <= 0) throw DomainError("product_integral_numeric: N must be positive");
    const double h = (b - a) / N;
    double p = 1.0;
    for (int n = 0; n < N; ++n) p *= 1.0 + f(a + n * h) * h;
    return p;
}

double product_integral_exact(const Fn& F, double a, double b) {
    const double Fa = F(a);
    if (Fa == 0.0) throw DomainError("product_integral_exact: F(a) = 0");
    return F(b) / Fa;
}

double nested_power_integral(const Fn& F, double a, double b, int n) {
    if (n < 0) throw DomainError("nested_power_integral: n must be >= 0");
    double fact = 1.0;
    for (int k = 2; k <= n; ++k) fact *= k;
    return std::pow(F(b) - F(a), n) / fact;
}

double layered_integral_J(const Fn& F, double x, int iota) {
    if (iota < 1) throw DomainError("layered_integral_J: iota must be >= 1");
    const double F0 = F(0.0), Fx = F(x);
    double sum = 0.0;
    for (int s = 1; s <= iota; ++s) {
        double term = (std::pow(Fx, s) - std::pow(F0, s));
        double fs = 1.0, fis = 1.0;
        for (int k = 2; k <= s; ++k) fs *= k;
        for (int k = 2; k <= iota - s; ++k) fis *= k;
        term *= std::pow(F0, iota - s) / (fis * fs);
        if ((iota - s) % 2 != 0) term = -term;
        sum += term;
    }
    return sum;
}

double riemann_limit_check(const Fn& f, const Fn& F, double a, double b,
                           const std::vector<int>& Ns) {
    const double exact = product_integral_exact(F, a, b);
    double worst = 0.0;
    for (int N : Ns) {
        const double err = std::abs(product_integral_numeric(f, a, b, N) - exact);
        worst = std::max(worst, err * N);
    }
    return worst;
}

} // namespace gfb::quad
