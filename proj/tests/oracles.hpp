#pragma once

// Reference computations for the tests. Nothing here calls the library's
// quadrature or closed forms.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

/// Tanh-sinh quadrature on [a, b]; f is only evaluated in the open interval,
/// at points computed from the nearest endpoint so endpoint singularities are
/// resolved.
inline double tanh_sinh(const std::function<double(double)>& f, double a, double b, double rel = 1e-13) {
    const double half = 0.5 * (b - a);
    double prev = 0.0;
    double h = 0.5;
    for (int level = 0; level < 12; ++level, h *= 0.5) {
        double acc = 0.0;
        for (long k = -static_cast<long>(4.0 / h); k <= static_cast<long>(4.0 / h); ++k) {
            const double t = k * h;
            const double s = 0.5 * std::numbers::pi * std::sinh(t);
            const double cs = std::cosh(s);
            const double w = 0.5 * std::numbers::pi * std::cosh(t) / (cs * cs);
            const double dist = half * 2.0 / (1.0 + std::exp(2.0 * std::abs(s)));
            if (!(dist > 0.0)) continue;
            const double x = s < 0.0 ? a + dist : b - dist;
            if (x <= a || x >= b) continue;
            const double v = f(x);
            if (std::isfinite(v)) acc += w * v;
        }
        acc *= h * half;
        if (level > 2 && std::abs(acc - prev) <= rel * std::abs(acc) + 1e-300) return acc;
        prev = acc;
    }
    return prev;
}

/// \int_0^L f on panels of the given width.
inline double panels(const std::function<double(double)>& f, double L, double width, double rel = 1e-13) {
    double acc = 0.0;
    for (double a = 0.0; a < L; a += width) acc += tanh_sinh(f, a, std::min(a + width, L), rel);
    return acc;
}

/// 1 - cos t without cancellation.
inline double one_minus_cos(double t) {
    const double h = std::sin(0.5 * t);
    return 2.0 * h * h;
}

/// sin t - t, by its Taylor series near 0.
inline double sin_minus_t(double t) {
    if (std::abs(t) > 0.1) return std::sin(t) - t;
    const double t2 = t * t;
    double term = -t * t2 / 6.0, acc = term;
    for (int k = 2; k < 10; ++k) {
        term *= -t2 / ((2.0 * k) * (2.0 * k + 1.0));
        acc += term;
    }
    return acc;
}

/// A(u) = i u b + \int (1 - e^{-iux}) ... written out for a 1-d density f and
/// drift b w.r.t. h(x) = x:
///   Re A = \int_0^inf (1 - cos ux)(f(x) + f(-x)) dx
///   Im A = u b + \int_0^inf (sin ux - ux)(f(x) - f(-x)) dx
inline cplx levy_symbol(const std::function<double(double)>& f, double b, double u, double reach) {
    const double width = std::min(std::numbers::pi / std::max(std::abs(u), 1e-300), 1.0);
    const double re = panels([&](double x) { return one_minus_cos(u * x) * (f(x) + f(-x)); }, reach, width);
    const double im = panels([&](double x) { return sin_minus_t(u * x) * (f(x) - f(-x)); }, reach, width);
    return {re, u * b + im};
}

inline double cgmy_f(double C, double G, double M, double Y, double x) {
    return x > 0.0 ? C * std::exp(-M * x) / std::pow(x, 1.0 + Y) : C * std::exp(G * x) / std::pow(-x, 1.0 + Y);
}

/// log E e^{iuX} for NIG(alpha, beta, delta, mu), from the standard moment
/// generating function through the principal complex square root.
inline cplx nig_log_cf(double alpha, double beta, double delta, double mu, double u) {
    const cplx iu(0.0, u);
    return iu * mu + delta * (std::sqrt(alpha * alpha - beta * beta) - std::sqrt(alpha * alpha - (beta + iu) * (beta + iu)));
}

/// Characteristic function of the Student-t law with f degrees of freedom and scale delta.
inline double student_t_cf(double f, double delta, double u) {
    if (u == 0.0) return 1.0;
    const double nu = 0.5 * f, z = delta * std::abs(u);
    return std::cyl_bessel_k(nu, z) * std::pow(z, nu) / (std::tgamma(nu) * std::pow(2.0, nu - 1.0));
}

/// Inverse Gaussian IG(mean m, shape lambda) by the transformation with multiple roots.
inline double inverse_gaussian(std::mt19937_64& rng, double m, double lambda) {
    std::normal_distribution<double> n01;
    std::uniform_real_distribution<double> u01;
    const double nu = n01(rng);
    const double y = nu * nu;
    const double x = m + m * m * y / (2.0 * lambda) - m / (2.0 * lambda) * std::sqrt(4.0 * m * lambda * y + m * m * y * y);
    return u01(rng) <= m / (m + x) ? x : m * m / x;
}

/// NIG draw as a normal variance-mean mixture: mu + beta Z + sqrt(Z) N with Z ~ IG.
inline double nig_sample(std::mt19937_64& rng, double alpha, double beta, double delta, double mu) {
    const double gamma = std::sqrt(alpha * alpha - beta * beta);
    const double z = inverse_gaussian(rng, delta / gamma, delta * delta);
    std::normal_distribution<double> n01;
    return mu + beta * z + std::sqrt(z) * n01(rng);
}

}  // namespace oracle
