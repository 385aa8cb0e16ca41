#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "levysobolev/constants.hpp"
#include "levysobolev/detail/fit.hpp"
#include "levysobolev/detail/quadrature.hpp"
#include "levysobolev/error.hpp"
#include "levysobolev/levy_density.hpp"

namespace levysobolev {

/// Symmetric / antisymmetric decomposition f = f_s + f_as of a 1-d Levy density.
struct DensitySplit {
    std::function<double(double)> symmetric;
    std::function<double(double)> antisymmetric;
    double cutoff = 0.0;
    std::optional<SingularityHint> hint;
    bool finite_variation = false;
    /// \int |x f_as(x)| dx, +inf when the integral diverges.
    double antisymmetric_abs_moment = 0.0;
    DensityPtr source;
};

struct QuadOptions {
    double epsilon = defaults::inner_epsilon;  // half width of the singular inner region
    int limit = defaults::quad_limit;          // adaptive subdivision budget
};

/// A^{f_s}(u) is real, A^{f_as}(u) = i * antisymmetric.
struct SymbolParts {
    double symmetric = 0.0;
    double antisymmetric = 0.0;
    double abserr = 0.0;
};

namespace detail {

/// Decade contributions D_k = \int_{10^{-k-1}}^{10^{-k}} g, k = 0..levels-1,
/// integrated in t = ln x. The integral over (0,1] is flagged divergent when
/// each of the last three refinements raises the running total by more than
/// 5%.
template <class G>
bool inner_integral_diverges(G g, int levels = 60) {
    const double ln10 = std::numbers::ln10;
    auto in_log = [&](double t) {
        const double x = std::exp(t);
        const double v = g(x) * x;
        return std::isfinite(v) ? v : 0.0;
    };
    double partial = 0.0;
    int consecutive = 0;
    for (int k = 0; k < levels; ++k) {
        const auto r = qag(in_log, -(k + 1) * ln10, -k * ln10, 0.0, 1e-10, 200, GSL_INTEG_GAUSS21);
        if (!std::isfinite(r.value)) return true;
        const double d = std::abs(r.value);
        if (k >= levels - 3) consecutive += (partial > 0.0 && d > 0.05 * partial) ? 1 : 0;
        partial += d;
        if (!std::isfinite(partial)) return true;
    }
    return consecutive == 3;
}

/// \int_0^T (1 - cos t) t^{-1-Y} dt by its power series; intended for T <= ~2.
inline double one_minus_cos_power_integral(double T, double Y) {
    if (T <= 0.0) return 0.0;
    double sum = 0.0;
    double term_pow = T * T;  // T^{2k}
    double fact = 2.0;        // (2k)!
    for (int k = 1; k < 40; ++k) {
        const double term = term_pow / (fact * (2.0 * k - Y));
        sum += (k % 2 == 1 ? 1.0 : -1.0) * term;
        if (term < 1e-18 * std::abs(sum)) break;
        term_pow *= T * T;
        fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    }
    return sum * std::pow(T, -Y);
}

inline double one_minus_cos(double t) {
    const double s = std::sin(0.5 * t);
    return 2.0 * s * s;
}

inline double sin_minus_identity(double t) {
    if (std::abs(t) < 1e-3) {
        const double t3 = t * t * t;
        return -t3 / 6.0 + t3 * t * t / 120.0;
    }
    return std::sin(t) - t;
}

inline double finite_or_zero(double v) { return std::isfinite(v) ? v : 0.0; }

}  // namespace detail

// ---------------------------------------------------------------------------

inline DensitySplit split_symmetric(const LevyDensity& density) {
    require(density.dimension() == 1, ErrorCode::NotOneDimensional,
            "symmetric splitting is defined for one-dimensional densities");
    auto src = std::make_shared<const LevyDensity>(density);
    DensitySplit split;
    split.source = src;
    split.symmetric = [src](double x) { return 0.5 * ((*src)(x) + (*src)(-x)); };
    split.antisymmetric = [src](double x) { return 0.5 * ((*src)(x) - (*src)(-x)); };
    split.cutoff = src->cutoff();
    split.hint = src->hint();
    split.finite_variation = src->finite_variation();

    auto abs_moment = [&split](double x) { return std::abs(x * split.antisymmetric(x)); };
    if (detail::inner_integral_diverges(abs_moment)) {
        split.antisymmetric_abs_moment = std::numeric_limits<double>::infinity();
    } else {
        const auto inner = detail::qags(abs_moment, 0.0, std::min(1.0, split.cutoff), 1e-13, 1e-9);
        const auto outer = split.cutoff > 1.0
                               ? detail::integrate_half_line(abs_moment, 1.0, split.cutoff, 1e-13, 1e-9)
                               : detail::QuadResult{};
        split.antisymmetric_abs_moment = inner.ok() && outer.ok()
                                             ? 2.0 * (inner.value + outer.value)
                                             : std::numeric_limits<double>::infinity();
    }
    return split;
}

/// A^{f_s}(u) = \int (1 - cos ux) f_s dx and A^{f_as}(u) = i \int (sin ux - ux) f_as dx.
///
/// The inner region [0, eps] uses the singularity hint when present: the
/// leading term C/|x|^{1+Y} is integrated through t = |u| x as a power series,
/// and only the milder remainder goes to adaptive quadrature. Past ~4 periods
/// the cosine/sine parts use Chebyshev-moment oscillatory rules.
inline SymbolParts symbol_parts_from_density(const DensitySplit& split, double u, const QuadOptions& opts = {}) {
    require(std::isfinite(u), ErrorCode::InvalidArgument, "u must be finite");
    SymbolParts out;
    if (u == 0.0) return out;
    require(std::isfinite(split.antisymmetric_abs_moment), ErrorCode::DivergentIntegral,
            "\\int |x f_as(x)| dx diverges; the identity truncation is not admissible");

    const double a = std::abs(u);
    const double sign = u > 0.0 ? 1.0 : -1.0;
    const double R = split.cutoff;
    const double eps = std::min({opts.epsilon, 1.0 / a, R});
    const double x1 = std::min(R, std::max(eps, 8.0 * std::numbers::pi / a));
    const double budget = defaults::quad_abs_tol_scale * (1.0 + u * u);
    const double piece_abs = 1e-13;
    const double piece_rel = 1e-11;
    const int limit = opts.limit;

    const auto& fs = split.symmetric;
    const auto& fas = split.antisymmetric;
    double err = 0.0;
    auto take = [&](const detail::QuadResult& r) {
        if (!std::isfinite(r.value))
            throw Error(ErrorCode::QuadratureFailure, "non-finite quadrature result at u = " + std::to_string(u));
        err += r.abserr;
        return r.value;
    };

    // --- symmetric part -----------------------------------------------------
    double sym = 0.0;
    if (split.hint && split.hint->coefficient > 0.0) {
        const double C = split.hint->coefficient, Y = split.hint->exponent;
        sym += C * std::pow(a, Y) * detail::one_minus_cos_power_integral(eps * a, Y);
        auto rem = [&](double x) {
            return detail::finite_or_zero(detail::one_minus_cos(a * x) * (fs(x) - C * std::pow(x, -1.0 - Y)));
        };
        sym += take(detail::qags(rem, 0.0, eps, piece_abs, piece_rel, limit));
    } else {
        auto g = [&](double x) { return detail::finite_or_zero(detail::one_minus_cos(a * x) * fs(x)); };
        sym += take(detail::qags(g, 0.0, eps, piece_abs, piece_rel, limit));
    }
    {
        auto g = [&](double x) { return detail::one_minus_cos(a * x) * fs(x); };
        sym += take(detail::qags(g, eps, x1, piece_abs, piece_rel, limit));
    }
    if (x1 < R) {
        auto plain = [&](double x) { return fs(x); };
        if (std::isinf(R)) {
            sym += take(detail::qagiu(plain, x1, piece_abs, piece_rel, limit));
            sym -= take(detail::qawf(plain, x1, a, false, piece_abs, limit));
        } else {
            sym += take(detail::qags(plain, x1, R, piece_abs, piece_rel, limit));
            sym -= take(detail::qawo(plain, x1, R, a, false, piece_abs, piece_rel, limit));
        }
    }
    out.symmetric = 2.0 * sym;

    // --- antisymmetric part -------------------------------------------------
    double anti = 0.0;
    {
        auto g = [&](double x) { return detail::finite_or_zero(detail::sin_minus_identity(a * x) * fas(x)); };
        anti += take(detail::qags(g, 0.0, eps, piece_abs, piece_rel, limit));
        anti += take(detail::qags(g, eps, x1, piece_abs, piece_rel, limit));
    }
    if (x1 < R) {
        auto plain = [&](double x) { return fas(x); };
        auto first = [&](double x) { return x * fas(x); };
        if (std::isinf(R)) {
            anti += take(detail::qawf(plain, x1, a, true, piece_abs, limit));
            anti -= a * take(detail::qagiu(first, x1, piece_abs, piece_rel, limit));
        } else {
            anti += take(detail::qawo(plain, x1, R, a, true, piece_abs, piece_rel, limit));
            anti -= a * take(detail::qags(first, x1, R, piece_abs, piece_rel, limit));
        }
    }
    out.antisymmetric = 2.0 * sign * anti;
    out.abserr = 2.0 * err;
    if (out.abserr > budget)
        throw Error(ErrorCode::QuadratureFailure,
                    "tolerance not met at u = " + std::to_string(u) + " (error estimate " +
                        std::to_string(out.abserr) + ")");
    return out;
}

/// \int x f(x) dx, the drift that makes the identity-truncated triplet a
/// finite-variation process without extra drift.
inline double first_moment(const DensitySplit& split) {
    require(std::isfinite(split.antisymmetric_abs_moment), ErrorCode::DivergentIntegral,
            "\\int |x f_as(x)| dx diverges");
    auto g = [&](double x) { return x * split.antisymmetric(x); };
    const auto inner = detail::qags(g, 0.0, std::min(1.0, split.cutoff), 1e-14, 1e-11);
    const auto outer = split.cutoff > 1.0 ? detail::integrate_half_line(g, 1.0, split.cutoff, 1e-14, 1e-11)
                                          : detail::QuadResult{};
    require(inner.ok() && outer.ok(), ErrorCode::QuadratureFailure, "first moment quadrature failed");
    return 2.0 * (inner.value + outer.value);
}

// ---------------------------------------------------------------------------
// Jump-activity indices

struct BgIndexResult {
    double beta = 0.0;            // from the local power fit
    double beta_bisection = 0.0;  // from the integrability bisection
    double r_squared = 1.0;
};

/// Blumenthal-Getoor index inf{alpha : \int_{[-1,1]} |x|^alpha F(dx) < inf}.
inline BgIndexResult bg_index_detailed(const LevyDensity& density) {
    require(density.dimension() == 1, ErrorCode::NotOneDimensional, "bg_index needs a one-dimensional density");
    const auto split = split_symmetric(density);
    const auto& fs = split.symmetric;

    BgIndexResult out;
    const auto xs = detail::logspace(defaults::bg_fit_lo, defaults::bg_fit_hi, defaults::bg_fit_points);
    std::vector<double> lx, ly;
    bool vanishing = false;
    for (double x : xs) {
        const double v = fs(x);
        if (!(v > 0.0)) {
            vanishing = true;
            break;
        }
        lx.push_back(std::log(x));
        ly.push_back(std::log(v));
    }
    double slope = 0.0;
    if (!vanishing) {
        const auto [lo, hi] = std::minmax_element(ly.begin(), ly.end());
        // A spread below 1e-3 in ln f_s is a bounded density, not a power law.
        if (*hi - *lo > 1e-3) {
            const auto fit = detail::fit_line(lx, ly);
            slope = fit.slope;
            out.r_squared = fit.r_squared;
        }
    }
    if (out.r_squared < defaults::min_r_squared)
        throw Error(ErrorCode::FitUnstable, "log f_s regression has R^2 = " + std::to_string(out.r_squared));
    out.beta = std::clamp(-slope - 1.0, 0.0, 2.0);

    auto convergent = [&](double alpha) {
        return !detail::inner_integral_diverges([&](double x) { return std::pow(x, alpha) * fs(x); });
    };
    if (convergent(0.0)) {
        out.beta_bisection = 0.0;
    } else if (!convergent(2.0)) {
        out.beta_bisection = 2.0;
    } else {
        double lo = 0.0, hi = 2.0;
        for (int it = 0; it < 24; ++it) {
            const double mid = 0.5 * (lo + hi);
            (convergent(mid) ? hi : lo) = mid;
        }
        out.beta_bisection = 0.5 * (lo + hi);
    }
    if (std::abs(out.beta - out.beta_bisection) > 0.1)
        throw Error(ErrorCode::Inconsistent, "power fit gives " + std::to_string(out.beta) +
                                                 " but integrability bisection gives " +
                                                 std::to_string(out.beta_bisection));
    return out;
}

inline double bg_index(const LevyDensity& density) { return bg_index_detailed(density).beta; }

struct GammaIndexResult {
    double gamma = 0.0;
    double slope = 0.0;  // of ln G(r) against ln r
    double r_squared = 1.0;
};

/// gamma = sup{alpha : liminf r^{alpha-2} \int_{[-r,r]} x^2 F(dx) > 0}, read off
/// the growth exponent of G(r) = \int_{[-r,r]} x^2 F(dx).
inline GammaIndexResult gamma_index_detailed(const LevyDensity& density) {
    require(density.dimension() == 1, ErrorCode::NotOneDimensional, "gamma_index needs a one-dimensional density");
    const auto split = split_symmetric(density);
    auto g = [&](double x) { return x * x * split.symmetric(x); };
    const auto rs = detail::logspace(defaults::gamma_r_lo, defaults::gamma_r_hi, defaults::gamma_points);
    std::vector<double> G(rs.size());
    auto first = detail::qags(g, 0.0, rs[0], 0.0, 1e-10);
    require(std::isfinite(first.value), ErrorCode::QuadratureFailure, "G(r) quadrature failed");
    double acc = 2.0 * first.value;
    G[0] = acc;
    for (std::size_t i = 1; i < rs.size(); ++i) {
        const auto r = detail::qag(g, rs[i - 1], rs[i], 0.0, 1e-11);
        require(std::isfinite(r.value), ErrorCode::QuadratureFailure, "G(r) quadrature failed");
        acc += 2.0 * r.value;
        G[i] = acc;
    }
    GammaIndexResult out;
    if (std::any_of(G.begin(), G.end(), [](double v) { return !(v > 0.0); })) return out;
    const auto fit = detail::fit_loglog(rs, G);
    out.slope = fit.slope;
    out.r_squared = fit.r_squared;
    if (fit.r_squared < defaults::min_r_squared)
        throw Error(ErrorCode::FitUnstable, "ln G(r) regression has R^2 = " + std::to_string(fit.r_squared));
    out.gamma = std::clamp(2.0 - fit.slope, 0.0, 2.0);
    return out;
}

inline double gamma_index(const LevyDensity& density) { return gamma_index_detailed(density).gamma; }

// ---------------------------------------------------------------------------
// Numerical check of the small-jump / symbol-growth bounds

struct BoundCheck {
    bool applicable = false;
    bool pass = false;
    double constant = 0.0;         // fitted C (or C1 for the lower bound)
    double lower_constant = 0.0;   // C2 for the lower bound
    double trend = 0.0;            // log-log slope of the normalised quantity on the upper half
    std::string note;
};

struct BoundReport {
    double exponent = 0.0;
    BoundCheck real_upper;             // A_fs(u) <= C (1 + |u|^Y)
    BoundCheck real_lower;             // A_fs(u) >= C1 |u|^Y - C2 (1 + |u|^{Y/2})
    BoundCheck antisymmetric_upper;    // |A_fas(u)| <= C (1 + |u|^{max(1,Y)}), Y != 1
    BoundCheck finite_variation_imag;  // |Im A(u)| <= C (1 + |u|^Y) with drift \int x F(dx), Y < 1
    std::vector<double> grid;
    std::vector<double> a_fs;
    std::vector<double> a_fas;
    std::vector<double> abserr;

    bool all_applicable_pass() const {
        for (const auto* c : {&real_upper, &real_lower, &antisymmetric_upper, &finite_variation_imag})
            if (c->applicable && !c->pass) return false;
        return true;
    }
};

namespace detail {

/// Upper bound check: constant = max ratio, pass when the ratio does not keep
/// growing over the upper half of the grid. Each |value| is first reduced by
/// its quadrature error estimate so values at noise level do not count.
inline BoundCheck upper_bound_check(std::span<const double> u, std::span<const double> value,
                                    std::span<const double> weight, std::span<const double> abserr = {}) {
    BoundCheck c;
    c.applicable = true;
    std::vector<double> ratio(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double e = i < abserr.size() ? abserr[i] : 0.0;
        ratio[i] = std::max(std::abs(value[i]) - e, 0.0) / weight[i];
        c.constant = std::max(c.constant, ratio[i]);
    }
    const std::size_t half = u.size() / 2;
    std::vector<double> ur, rr;
    for (std::size_t i = half; i < u.size(); ++i)
        if (ratio[i] > 0.0) {
            ur.push_back(u[i]);
            rr.push_back(ratio[i]);
        }
    c.trend = ur.size() >= 3 ? fit_loglog(ur, rr).slope : 0.0;
    c.pass = std::isfinite(c.constant) && c.trend <= 0.05;
    if (ur.size() < 3) c.note = "upper half at quadrature noise level";
    return c;
}

}  // namespace detail

inline BoundReport verify_appendix_bounds(const DensitySplit& split, double Y, std::span<const double> grid,
                                          const QuadOptions& opts = {}) {
    require(Y > 0.0 && Y < 2.0, ErrorCode::InvalidArgument, "bound exponent must lie in (0,2)");
    require(grid.size() >= 6, ErrorCode::InvalidArgument, "bound grid needs at least 6 points");
    BoundReport rep;
    rep.exponent = Y;
    rep.grid.assign(grid.begin(), grid.end());
    std::sort(rep.grid.begin(), rep.grid.end());
    for (double& u : rep.grid) {
        require(u > 0.0, ErrorCode::InvalidArgument, "bound grid must be positive");
    }
    const auto& u = rep.grid;
    const std::size_t n = u.size();
    rep.a_fs.resize(n);
    rep.a_fas.resize(n);
    rep.abserr.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto parts = symbol_parts_from_density(split, u[i], opts);
        rep.a_fs[i] = parts.symmetric;
        rep.a_fas[i] = parts.antisymmetric;
        rep.abserr[i] = parts.abserr;
    }

    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = 1.0 + std::pow(u[i], Y);
    rep.real_upper = detail::upper_bound_check(u, rep.a_fs, w, rep.abserr);

    // Lower bound: C1 from the upper half, C2 absorbs the deficit below it.
    {
        BoundCheck& c = rep.real_lower;
        c.applicable = true;
        const std::size_t half = n / 2;
        std::vector<double> uh, q, fh;
        double qmin = std::numeric_limits<double>::infinity();
        bool positive = true;
        for (std::size_t i = half; i < n; ++i) {
            if (!(rep.a_fs[i] > 0.0)) positive = false;
            uh.push_back(u[i]);
            fh.push_back(std::max(rep.a_fs[i], 1e-300));
            q.push_back(std::max(rep.a_fs[i], 1e-300) / std::pow(u[i], Y));
            qmin = std::min(qmin, q.back());
        }
        c.constant = positive ? 0.5 * qmin : 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double deficit = c.constant * std::pow(u[i], Y) - rep.a_fs[i];
            c.lower_constant = std::max(c.lower_constant, deficit / (1.0 + std::pow(u[i], 0.5 * Y)));
        }
        c.trend = detail::fit_loglog(uh, q).slope;
        const bool logarithmic = positive && detail::compare_growth(uh, fh).logarithmic();
        c.pass = positive && c.constant > 0.0 && c.trend >= -0.05 && !logarithmic;
        if (logarithmic) c.note = "A_fs grows logarithmically";
    }

    if (std::abs(Y - 1.0) > 1e-9) {
        std::vector<double> wc(n);
        for (std::size_t i = 0; i < n; ++i) wc[i] = 1.0 + std::pow(u[i], std::max(1.0, Y));
        rep.antisymmetric_upper = detail::upper_bound_check(u, rep.a_fas, wc, rep.abserr);
    } else {
        rep.antisymmetric_upper.note = "not applicable for Y = 1";
    }

    if (Y < 1.0 && split.finite_variation) {
        const double drift = first_moment(split);
        std::vector<double> im(n);
        for (std::size_t i = 0; i < n; ++i) im[i] = u[i] * drift + rep.a_fas[i];
        rep.finite_variation_imag = detail::upper_bound_check(u, im, w, rep.abserr);
    } else {
        rep.finite_variation_imag.note = "requires Y < 1 and finite variation";
    }
    return rep;
}

}  // namespace levysobolev
