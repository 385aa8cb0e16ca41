#pragma once

#include <complex>
#include <numbers>

namespace levysobolev {

using cplx = std::complex<double>;

/// Fourier conventions used by every module.
///
///   transform:  u_hat(xi) = \int e^{ i <xi,x> } u(x) dx
///   inversion:  u(x)      = (2 pi)^{-d} \int e^{-i <xi,x> } u_hat(xi) dxi
///
/// With this pair the characteristic function of L_t is
/// mu_hat_t(xi) = E e^{i<xi,L_t>} = exp(-t A(-xi)), and the semigroup acts on
/// transforms as v_hat(tau, xi) = exp(-tau A(xi)) g_hat(xi). Sobolev norms are
/// taken on the transform side without the (2 pi)^{-d} factor, so
/// ||u||_0^2 = (2 pi)^d ||u||_{L^2}^2.
namespace fourier {
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double inversion_factor_1d = 1.0 / two_pi;
}  // namespace fourier

/// Defaults shared by the library and echoed by the CLI into every output.
namespace defaults {
inline constexpr double radial_min = 1e2;
inline constexpr double radial_max = 1e6;
inline constexpr int points_per_decade = 16;
inline constexpr int directions_multid = 32;
inline constexpr double index_tol = 0.05;
inline constexpr double subpolynomial_slope = 0.1;
inline constexpr double fit_window_decades = 2.0;

inline constexpr double inner_epsilon = 1e-4;
inline constexpr double quad_abs_tol_scale = 1e-9;
inline constexpr int quad_limit = 2000;

inline constexpr double bg_fit_lo = 1e-6;
inline constexpr double bg_fit_hi = 1e-2;
inline constexpr int bg_fit_points = 64;
inline constexpr double gamma_r_lo = 1e-6;
inline constexpr double gamma_r_hi = 1e-1;
inline constexpr int gamma_points = 64;
inline constexpr double min_r_squared = 0.99;

inline constexpr double garding_c3_max = 1e6;
inline constexpr double tail_rel_tol = 1e-8;
inline constexpr double inversion_tail_tol = 1e-8;
}  // namespace defaults

}  // namespace levysobolev
