#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gfb/curved_trig.hpp"

using namespace gfb::trig;
using gfb::kPi;

TEST_CASE("cos_k branches") {
    CHECK(cos_k(1.0, 0.0) == 1.0);
    CHECK(std::abs(cos_k(4.0, kPi / 4.0)) < 1e-15);
    CHECK(cos_k(-1.0, 1.0) == doctest::Approx(std::cosh(1.0)).epsilon(1e-14));
    // Series branch agrees with the closed form just below the switch.
    const double K = 0.99e-6;
    CHECK(std::abs(cos_k(K, 1.0) - std::cos(std::sqrt(K))) < 1e-13);
    CHECK(std::abs(cos_k(-K, 1.0) - std::cosh(std::sqrt(K))) < 1e-13);
}

TEST_CASE("sin_k branches") {
    CHECK(sin_k(0.0, 2.5) == 2.5);
    CHECK(sin_k(1.0, kPi / 2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(sin_k(-1.0, 1.0) == doctest::Approx(std::sinh(1.0)).epsilon(1e-14));
    const double K = 0.99e-6;
    CHECK(std::abs(sin_k(K, 1.0) - std::sin(std::sqrt(K)) / std::sqrt(K)) <
          1e-13);
}

TEST_CASE("law_c examples") {
    CHECK(law_c(1.0, kPi / 2.0, kPi / 2.0, kPi / 2.0) ==
          doctest::Approx(kPi / 2.0).epsilon(1e-12));
    // Euclidean oracle sqrt(9 + 16 - 12).
    CHECK(law_c(1e-9, kPi / 3.0, 3.0, 4.0) ==
          doctest::Approx(std::sqrt(13.0)).epsilon(1e-8));
    CHECK(law_c(-1.0, kPi / 2.0, 1.0, 1.0) ==
          doctest::Approx(std::acosh(std::cosh(1.0) * std::cosh(1.0)))
              .epsilon(1e-12));
}

TEST_CASE("law_c symmetry and degeneracies") {
    const double a = 0.4, b = 0.7;
    for (double K : {1.0, -1.0, 0.5}) {
        CHECK(law_c(K, 1.1, a, b) == doctest::Approx(law_c(K, 1.1, b, a)));
        CHECK(law_c(K, 0.0, a, b) == doctest::Approx(b - a).epsilon(1e-12));
        CHECK(law_c(K, kPi, a, b) == doctest::Approx(a + b).epsilon(1e-12));
    }
}

TEST_CASE("flat limit is monotone in K") {
    const double flat = std::sqrt(0.4 * 0.4 + 0.7 * 0.7 -
                                  2.0 * 0.4 * 0.7 * std::cos(1.1));
    double prev = 1e9;
    for (double K : {1e-3, 1e-6, 1e-9}) {
        const double d = std::abs(law_c(K, 1.1, 0.4, 0.7) - flat);
        CHECK(d < prev);
        prev = d;
    }
    CHECK(prev < 1e-9);
}

TEST_CASE("law_sc examples and closure") {
    CHECK(law_sc(1.0, kPi / 2.0, kPi / 2.0, kPi / 2.0) ==
          doctest::Approx(kPi / 2.0).epsilon(1e-12));
    CHECK(law_sc(1e-9, kPi / 2.0, 3.0, 4.0) ==
          doctest::Approx(std::asin(0.6)).epsilon(1e-8));
    CHECK(law_sc(1.0, kPi / 2.0, 0.0, 1.0) == doctest::Approx(0.0));
    // Sine-law closure: sin_K a / sin(alpha) = sin_K c / sin(gamma).
    const double K = 1.0, g = 1.0, a = 0.5, b = 0.8;
    const double c = law_c(K, g, a, b);
    const double al = law_sc(K, g, a, b);
    CHECK(sin_k(K, a) / std::sin(al) ==
          doctest::Approx(sin_k(K, c) / std::sin(g)).epsilon(1e-10));
    // Side branch is the supplement.
    CHECK(law_sc(K, g, a, b, Branch::side) == doctest::Approx(kPi - al));
}

TEST_CASE("law_sc clamp at the degenerate right angle") {
    // b -> 0 with gamma = pi/2 drives the sine ratio to exactly 1; the clamp
    // must return pi/2 rather than throw on round-off past 1.
    CHECK(law_sc(1e-9, kPi / 2.0, 3.0, 0.0) ==
          doctest::Approx(kPi / 2.0).epsilon(1e-12));
    CHECK(law_sc(1.0, kPi / 2.0, 0.7, 0.0) ==
          doctest::Approx(kPi / 2.0).epsilon(1e-12));
}

TEST_CASE("expansion frozen oracle") {
    // Generic second/third-order inputs; reference values from an exact
    // spherical-law perturbation solved independently at high precision.
    ExpansionInputs in{{0.7, 0.23, -0.11}, {1.1, -0.31, 0.17}, 1.9,
                       {0.41, -0.27},      1.3};
    const auto r = expand(in);
    CHECK(r.c[2] == doctest::Approx(-0.10913251783861824).epsilon(1e-12));
    CHECK(r.alpha[2] == doctest::Approx(0.12141108489395277).epsilon(1e-12));
    // First-order pieces against their closed forms.
    const double y = std::sqrt(in.a[0] * in.a[0] + in.b[0] * in.b[0] -
                               2.0 * in.a[0] * in.b[0] * std::cos(in.gamma0));
    CHECK(r.c[0] == doctest::Approx(y).epsilon(1e-14));
    CHECK(r.alpha[0] ==
          doctest::Approx(std::asin(in.a[0] * std::sin(in.gamma0) / y))
              .epsilon(1e-14));
}

TEST_CASE("c_expand closed forms") {
    const double a = 0.6, c = 1.1, beta = 0.7, K = 1.3;
    ExpansionInputs in{{a, 0, 0}, {c, 0, 0}, kPi - beta, {0, 0}, K};
    const auto cc = c_expand(in);
    const double y = std::sqrt(a * a + c * c + 2.0 * a * c * std::cos(beta));
    CHECK(cc[0] == doctest::Approx(y).epsilon(1e-14));
    CHECK(cc[1] == doctest::Approx(0.0));
    const double sb = std::sin(beta);
    CHECK(cc[2] ==
          doctest::Approx(-K * a * a * c * c * sb * sb / (6.0 * y))
              .epsilon(1e-13));
    // Flat limit kills all curvature terms.
    in.K = 0.0;
    const auto c0 = c_expand(in);
    CHECK(c0[0] == doctest::Approx(y));
    CHECK(c0[1] == 0.0);
    CHECK(c0[2] == 0.0);
}

TEST_CASE("series matches exact law at small scale") {
    ExpansionInputs in{{1, 0, 0}, {1, 0, 0}, kPi / 2.0, {0, 0}, 1.0};
    const auto cc = c_expand(in);
    const double d = 0.01;
    const double series = cc[0] * d + cc[1] * d * d + cc[2] * d * d * d;
    CHECK(std::abs(series - law_c(1.0, kPi / 2.0, d, d)) < 1e-9);
}

TEST_CASE("fourth-order remainder ratio, generic second-order inputs") {
    // Exact spherical laws vs the series; remainder must drop ~16x per
    // halving of the scale.
    ExpansionInputs in{{0.7, 0.23, 0.0}, {1.1, -0.31, 0.0}, 1.9,
                       {0.41, 0.05},     1.0};
    const auto r = expand(in);
    auto exact_c = [&](double d) {
        const double a = in.a[0] * d + in.a[1] * d * d;
        const double b = in.b[0] * d + in.b[1] * d * d;
        const double g = in.gamma0 + in.gamma[0] * d + in.gamma[1] * d * d;
        return law_c(in.K, g, a, b);
    };
    auto series_c = [&](double d) {
        return r.c[0] * d + r.c[1] * d * d + r.c[2] * d * d * d;
    };
    const double r1 = std::abs(exact_c(0.02) - series_c(0.02)) /
                      std::abs(exact_c(0.01) - series_c(0.01));
    CHECK(r1 > 12.0);
    CHECK(r1 < 20.0);

    // SC side: the expansion is second order, remainder O(d^3), ratio ~8.
    auto exact_a = [&](double d) {
        const double a = in.a[0] * d + in.a[1] * d * d;
        const double b = in.b[0] * d + in.b[1] * d * d;
        const double g = in.gamma0 + in.gamma[0] * d + in.gamma[1] * d * d;
        return law_sc(in.K, g, a, b);
    };
    auto series_a = [&](double d) {
        return r.alpha[0] + r.alpha[1] * d + r.alpha[2] * d * d;
    };
    const double r2 = std::abs(exact_a(0.02) - series_a(0.02)) /
                      std::abs(exact_a(0.01) - series_a(0.01));
    CHECK(r2 > 6.0);
    CHECK(r2 < 10.0);
}

TEST_CASE("sc_expand flat limit") {
    ExpansionInputs in{{0.6, 0, 0}, {1.1, 0, 0}, 1.9, {0, 0}, 0.0};
    const auto al = sc_expand(in);
    const double y = std::sqrt(0.6 * 0.6 + 1.1 * 1.1 -
                               2.0 * 0.6 * 1.1 * std::cos(1.9));
    CHECK(al[0] == doctest::Approx(std::asin(0.6 * std::sin(1.9) / y)));
    CHECK(al[1] == 0.0);
    CHECK(al[2] == 0.0);
}

TEST_CASE("asin_series") {
    CHECK(asin_series(0.0, 10) == 0.0);
    CHECK(std::abs(asin_series(0.5, 30) - kPi / 6.0) < 1e-10);
    // Near the endpoint convergence is slow; the partial sum falls short.
    CHECK(std::abs(asin_series(1.0 - 1e-6, 30) - std::asin(1.0 - 1e-6)) >
          1e-3);
}
