#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace levysobolev::detail {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 1.0;
    double max_residual = 0.0;
    double rss = 0.0;
};

/// Ordinary least squares y ~ intercept + slope * x. A response with no
/// spread is reported as a perfect fit.
inline LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    LineFit fit;
    const std::size_t n = x.size();
    if (n < 2) return fit;
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
    fit.intercept = my - fit.slope * mx;
    for (std::size_t i = 0; i < n; ++i) {
        const double res = y[i] - (fit.intercept + fit.slope * x[i]);
        fit.rss += res * res;
        fit.max_residual = std::max(fit.max_residual, std::abs(res));
    }
    const double scale = std::max(1.0, std::abs(my));
    fit.r_squared = syy > 1e-20 * scale * scale * static_cast<double>(n) ? 1.0 - fit.rss / syy : 1.0;
    return fit;
}

/// Log-log slope of positive samples v(r).
inline LineFit fit_loglog(std::span<const double> r, std::span<const double> v) {
    std::vector<double> lx(r.size()), ly(v.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        lx[i] = std::log(r[i]);
        ly[i] = std::log(v[i]);
    }
    return fit_line(lx, ly);
}

struct GrowthModels {
    double rss_power = 0.0;  // ln v = a + s ln r
    double rss_log = 0.0;    // v = a + b ln r, residual measured in ln v
    bool logarithmic() const { return rss_log < rss_power; }
};

/// Compares a power law against logarithmic growth on positive samples; both
/// residuals live in ln v so the comparison is scale free.
inline GrowthModels compare_growth(std::span<const double> r, std::span<const double> v) {
    GrowthModels out;
    std::vector<double> lr(r.size()), lv(v.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        lr[i] = std::log(r[i]);
        lv[i] = std::log(v[i]);
    }
    out.rss_power = fit_line(lr, lv).rss;
    const LineFit lin = fit_line(lr, v);
    for (std::size_t i = 0; i < r.size(); ++i) {
        const double pred = lin.intercept + lin.slope * lr[i];
        const double res = pred > 0.0 ? std::log(pred) - lv[i] : std::numeric_limits<double>::infinity();
        out.rss_log += res * res;
    }
    return out;
}

inline std::vector<double> logspace(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = lo;
        return out;
    }
    const double a = std::log10(lo), b = std::log10(hi);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = std::pow(10.0, a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
    return out;
}

}  // namespace levysobolev::detail
