#pragma once

#include <gsl/gsl_sf_bessel.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "levysobolev/constants.hpp"
#include "levysobolev/detail/quadrature.hpp"
#include "levysobolev/error.hpp"

namespace levysobolev {

/// Near the origin the symmetric part behaves like coefficient / |x|^{1+exponent}.
struct SingularityHint {
    double exponent = 0.0;
    double coefficient = 0.0;
};

/// Lebesgue density of a one-dimensional Levy measure.
class LevyDensity {
public:
    using Fn = std::function<double(double)>;

    LevyDensity(Fn f, double cutoff, std::optional<SingularityHint> hint, bool finite_variation,
                std::string name, int dimension = 1)
        : f_(std::move(f)),
          cutoff_(cutoff),
          hint_(hint),
          finite_variation_(finite_variation),
          name_(std::move(name)),
          dimension_(dimension) {
        require(static_cast<bool>(f_), ErrorCode::InvalidParams, "density evaluator is empty");
        require(cutoff_ > 0.0, ErrorCode::InvalidParams, "support cutoff must be positive");
        if (hint_)
            require(hint_->exponent >= 0.0 && hint_->exponent < 2.0, ErrorCode::InvalidParams,
                    "singularity exponent must lie in [0,2)");
    }

    double operator()(double x) const { return x == 0.0 || std::abs(x) > cutoff_ ? 0.0 : f_(x); }

    /// |x| beyond which the density is numerically negligible (may be +inf).
    double cutoff() const { return cutoff_; }
    const std::optional<SingularityHint>& hint() const { return hint_; }
    bool finite_variation() const { return finite_variation_; }
    const std::string& name() const { return name_; }
    int dimension() const { return dimension_; }

private:
    Fn f_;
    double cutoff_;
    std::optional<SingularityHint> hint_;
    bool finite_variation_;
    std::string name_;
    int dimension_;
};

using DensityPtr = std::shared_ptr<const LevyDensity>;

// ---------------------------------------------------------------------------
// Parametric families

/// C e^{-G|x|}/|x|^{1+Y} for x<0 and C e^{-Mx}/x^{1+Y} for x>0.
inline LevyDensity cgmy_density(double C, double G, double M, double Y) {
    require(C > 0.0 && G > 0.0 && M > 0.0, ErrorCode::InvalidParams, "CGMY requires C, G, M > 0");
    require(Y >= 0.0 && Y < 2.0, ErrorCode::InvalidParams, "CGMY requires 0 <= Y < 2");
    auto f = [=](double x) {
        const double rate = x < 0.0 ? G : M;
        const double ax = std::abs(x);
        return C * std::exp(-rate * ax - (1.0 + Y) * std::log(ax));
    };
    return LevyDensity(f, 42.0 / std::min(G, M), SingularityHint{Y, C}, Y < 1.0, "cgmy");
}

/// (delta alpha / (pi |x|)) e^{beta x} K_1(alpha |x|).
inline LevyDensity nig_density(double alpha, double beta, double delta) {
    require(alpha > std::abs(beta), ErrorCode::InvalidParams, "NIG requires alpha > |beta|");
    require(delta > 0.0, ErrorCode::InvalidParams, "NIG requires delta > 0");
    auto f = [=](double x) {
        const double ax = std::abs(x);
        const double z = alpha * ax;
        // K_1(z) = K1_scaled(z) e^{-z}
        return delta * alpha / (std::numbers::pi * ax) * gsl_sf_bessel_K1_scaled(z) *
               std::exp(beta * x - z);
    };
    return LevyDensity(f, 45.0 / (alpha - std::abs(beta)),
                       SingularityHint{1.0, delta / std::numbers::pi}, false, "nig");
}

/// Levy density c / (pi x^2) of the Cauchy process with symbol c|u|.
inline LevyDensity cauchy_density(double c) {
    require(c > 0.0, ErrorCode::InvalidParams, "Cauchy requires c > 0");
    auto f = [=](double x) { return c / (std::numbers::pi * x * x); };
    return LevyDensity(f, std::numeric_limits<double>::infinity(),
                       SingularityHint{1.0, c / std::numbers::pi}, false, "cauchy");
}

/// Small-jump expansion of a generalised hyperbolic Levy density,
/// (C1/x^2 + C2/|x| + C3/x), tapered by e^{-lambda|x|} away from the origin.
inline LevyDensity gh_expansion_density(double c1, double c2, double c3, double lambda) {
    require(c1 > 0.0, ErrorCode::InvalidParams, "GH expansion requires C1 > 0");
    require(c2 >= std::abs(c3), ErrorCode::InvalidParams,
            "GH expansion requires C2 >= |C3| for a nonnegative density");
    require(lambda > 0.0, ErrorCode::InvalidParams, "GH expansion requires taper lambda > 0");
    auto f = [=](double x) {
        const double ax = std::abs(x);
        return (c1 / (x * x) + c2 / ax + c3 / x) * std::exp(-lambda * ax);
    };
    return LevyDensity(f, 42.0 / lambda, SingularityHint{1.0, c1}, false, "gh-expansion");
}

/// Bounded density of a compound Poisson process: e^{-x^2} off the origin.
inline LevyDensity gaussian_jump_density(double intensity = 1.0) {
    require(intensity > 0.0, ErrorCode::InvalidParams, "intensity must be positive");
    auto f = [=](double x) { return intensity * std::exp(-x * x); };
    return LevyDensity(f, 9.0, SingularityHint{0.0, 0.0}, true, "gaussian-jumps");
}

/// Tabulated (x, f(x)) pairs with log-log interpolation per half line. Below
/// the smallest |x| the first segment's power law is continued; beyond the
/// largest |x| the density vanishes.
inline LevyDensity tabulated_density(std::vector<std::pair<double, double>> table,
                                     std::optional<SingularityHint> hint = std::nullopt) {
    struct Side {
        std::vector<double> lx, lf, x, f;
    };
    auto pos = std::make_shared<Side>();
    auto neg = std::make_shared<Side>();
    std::sort(table.begin(), table.end(),
              [](const auto& a, const auto& b) { return std::abs(a.first) < std::abs(b.first); });
    double reach = 0.0;
    for (const auto& [x, fx] : table) {
        require(x != 0.0 && std::isfinite(x), ErrorCode::InvalidParams, "tabulated x must be finite and nonzero");
        require(fx >= 0.0 && std::isfinite(fx), ErrorCode::InvalidParams, "tabulated f(x) must be finite and >= 0");
        Side& s = x > 0.0 ? *pos : *neg;
        s.x.push_back(std::abs(x));
        s.f.push_back(fx);
        reach = std::max(reach, std::abs(x));
    }
    for (Side* s : {pos.get(), neg.get()}) {
        require(s->x.size() != 1, ErrorCode::InvalidParams, "each tabulated half line needs 0 or >= 2 points");
        for (std::size_t i = 1; i < s->x.size(); ++i)
            require(s->x[i] > s->x[i - 1], ErrorCode::InvalidParams, "duplicate tabulated abscissa");
    }
    auto interp = [](const Side& s, double a) -> double {
        if (s.x.empty() || a > s.x.back()) return 0.0;
        auto seg = [&](std::size_t i, double q) {
            const double x0 = s.x[i], x1 = s.x[i + 1], f0 = s.f[i], f1 = s.f[i + 1];
            if (f0 > 0.0 && f1 > 0.0) {
                const double slope = std::log(f1 / f0) / std::log(x1 / x0);
                return f0 * std::exp(slope * std::log(q / x0));
            }
            const double w = (q - x0) / (x1 - x0);
            return std::max(0.0, f0 + w * (f1 - f0));
        };
        if (a <= s.x.front()) return seg(0, a);
        const auto it = std::upper_bound(s.x.begin(), s.x.end(), a);
        const std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(it - s.x.begin()) - 1, s.x.size() - 2);
        return seg(i, a);
    };
    auto f = [pos, neg, interp](double x) { return x > 0.0 ? interp(*pos, x) : interp(*neg, -x); };
    return LevyDensity(f, reach, hint, false, "tabulated");
}

// ---------------------------------------------------------------------------
// Validation

namespace detail {

/// \int_{a}^{b} g over (0, cutoff] pieces, for g defined on the positive half line.
template <class F>
QuadResult integrate_half_line(F g, double lo, double cutoff, double epsabs, double epsrel) {
    if (std::isinf(cutoff)) return qagiu(g, lo, epsabs, epsrel);
    if (cutoff <= lo) return {};
    return qags(g, lo, cutoff, epsabs, epsrel);
}

}  // namespace detail

/// Checks f >= 0 on a sample set and \int (|x|^2 ^ 1) f dx < infinity.
inline void validate_levy_density(const LevyDensity& density) {
    require(density.dimension() == 1, ErrorCode::NotOneDimensional, "only one-dimensional densities are supported");
    const double reach = std::min(density.cutoff(), 1e3);
    for (int k = 0; k < 200; ++k) {
        const double a = 1e-8 * std::pow(reach / 1e-8, k / 199.0);
        for (double x : {a, -a}) {
            const double v = density(x);
            require(std::isfinite(v) && v >= 0.0, ErrorCode::InvalidParams,
                    "Levy density must be finite and nonnegative (x = " + std::to_string(x) + ")");
        }
    }
    double total = 0.0;
    for (double sgn : {1.0, -1.0}) {
        auto inner = [&](double x) { return x * x * density(sgn * x); };
        auto outer = [&](double x) { return density(sgn * x); };
        const auto a = detail::qags(inner, 0.0, std::min(1.0, density.cutoff()), 1e-12, 1e-8);
        const auto b = density.cutoff() > 1.0 ? detail::integrate_half_line(outer, 1.0, density.cutoff(), 1e-12, 1e-8)
                                              : detail::QuadResult{};
        require(a.ok() && b.ok(), ErrorCode::DivergentIntegral,
                "\\int (|x|^2 ^ 1) F(dx) does not converge numerically");
        total += a.value + b.value;
    }
    require(std::isfinite(total), ErrorCode::DivergentIntegral, "\\int (|x|^2 ^ 1) F(dx) is not finite");
}

/// \int_{|x|>=1} |x| f(x) dx, required for the identity truncation.
inline double large_jump_first_moment(const LevyDensity& density) {
    if (density.cutoff() <= 1.0) return 0.0;
    double total = 0.0;
    for (double sgn : {1.0, -1.0}) {
        auto g = [&](double x) { return x * density(sgn * x); };
        const auto r = detail::integrate_half_line(g, 1.0, density.cutoff(), 1e-12, 1e-9);
        if (!r.ok()) return std::numeric_limits<double>::infinity();
        // qagiu extrapolates a finite value for slowly divergent integrands
        if (std::isinf(density.cutoff())) {
            const auto far = detail::qags(g, 1e6, 1e8, 1e-14, 1e-6);
            if (!far.ok() || far.value > 1e-6 * std::max(1.0, std::abs(r.value)))
                return std::numeric_limits<double>::infinity();
        }
        total += r.value;
    }
    return total;
}

}  // namespace levysobolev
