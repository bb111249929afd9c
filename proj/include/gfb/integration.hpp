#pragma once
#include <functional>
#include <vector>
#include "gfb/common.hpp"

namespace gfb::quad {

using Fn = std::function<double(double)>;

// Adaptive composite Gauss-Legendre (order 8) with dyadic refinement until
// the panel estimate stabilizes to abs_tol.
double quad(const Fn& f, double a, double b, double abs_tol = 1e-10);

// Nested helpers: inner limits may depend on the outer variable.
double quad_nested2(const std::function<double(double, double)>& f,
                    double a, double b,
                    const std::function<double(double)>& c,
                    const std::function<double(double)>& d,
                    double abs_tol = 1e-10);

double quad_nested3(const std::function<double(double, double, double)>& f,
                    double a, double b,
                    const std::function<double(double)>& c,
                    const std::function<double(double)>& d,
                    const std::function<double(double, double)>& e,
                    const std::function<double(double, double)>& g,
                    double abs_tol = 1e-10);

// prod_{n=0}^{N-1} (1 + f(x_n) (b-a)/N), left endpoints x_n = a + n (b-a)/N.
double product_integral_numeric(const Fn& f, double a, double b, int N);

// Exact value of the product integral of f = F'/F: F(b)/F(a).
double product_integral_exact(const Fn& F, double a, double b);

// n-fold nested integral of a separable integrand: (F(b)-F(a))^n / n!
// with F an antiderivative of f.
double nested_power_integral(const Fn& F, double a, double b, int n);

// J_iota(x) = sum_{s=1}^{iota} (-1)^{iota-s}/(iota-s)! F(0)^{iota-s}
//             (F(x)^s - F(0)^s)/s!, F an antiderivative of f on [0, x].
double layered_integral_J(const Fn& F, double x, int iota);

// max_N |product_integral_numeric - exact| * N over the given Ns; returns the
// largest scaled deviation (the O(1/N) constant estimate).
double riemann_limit_check(const Fn& f, const Fn& F, double a, double b,
                           const std::vector<int>& Ns);

} // namespace gfb::quad
