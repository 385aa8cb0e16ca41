#pragma once

#include <gsl/gsl_sf_gamma.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "levysobolev/constants.hpp"
#include "levysobolev/detail/fit.hpp"
#include "levysobolev/detail/parallel.hpp"
#include "levysobolev/detail/quadrature.hpp"
#include "levysobolev/error.hpp"
#include "levysobolev/levy_measure.hpp"
#include "levysobolev/symbol.hpp"

namespace levysobolev {

/// Radial grid r_min..r_max (log-spaced) times a set of unit directions.
struct GridSpec {
    double r_min = defaults::radial_min;
    double r_max = defaults::radial_max;
    int points_per_decade = defaults::points_per_decade;
    int directions = 0;  // 0: 32 for d > 1, {+1, -1} for d = 1

    void validate() const {
        require(r_min >= 1.0, ErrorCode::InvalidArgument, "grid r_min must be >= 1");
        require(r_max / r_min >= 1e2 - 1e-9, ErrorCode::InvalidArgument, "grid must span at least two decades");
        require(points_per_decade >= 2, ErrorCode::InvalidArgument, "grid needs >= 2 points per decade");
        require(directions >= 0, ErrorCode::InvalidArgument, "direction count must be nonnegative");
    }

    std::vector<double> radii() const {
        const double decades = std::log10(r_max / r_min);
        const auto n = static_cast<std::size_t>(std::lround(decades * points_per_decade)) + 1;
        return detail::logspace(r_min, r_max, n);
    }

    /// First radius of the fit window (top two decades).
    double window_start() const { return std::max(r_min, r_max / std::pow(10.0, defaults::fit_window_decades)); }

    std::vector<std::vector<double>> unit_directions(int d) const {
        std::vector<std::vector<double>> out;
        if (d == 1) {
            if (directions <= 2) return {{1.0}, {-1.0}};
            for (int k = 0; k < directions; ++k) out.push_back({k % 2 == 0 ? 1.0 : -1.0});
            return out;
        }
        const int n = directions > 0 ? directions : defaults::directions_multid;
        for (int k = 0; k < n; ++k) {
            if (d == 2) {
                const double th = 2.0 * std::numbers::pi * k / n;
                out.push_back({std::cos(th), std::sin(th)});
            } else {
                out.push_back(detail::direction(d, k));
            }
        }
        return out;
    }
};

struct DirectionFit {
    std::vector<double> direction;
    double slope = 0.0;
    double r_squared = 1.0;
    double max_residual = 0.0;
    bool logarithmic = false;
};

struct ExponentFit {
    double alpha = 0.0;
    std::vector<DirectionFit> per_direction;
    double min_r_squared = 1.0;
    double max_residual = 0.0;
    bool subpolynomial = false;
};

/// Garding fit plus the constants of Re A(xi) >= C2 |xi|^alpha for |xi| > N.
struct GardingFit : ExponentFit {
    double c2 = 0.0;
    double threshold = std::numeric_limits<double>::infinity();  // N
    bool lower_order_ok = false;                                 // lower-order exponent below alpha
};

/// Symbol samples on a GridSpec: values[direction][radius].
struct SymbolSamples {
    std::vector<double> radii;
    std::vector<std::vector<double>> directions;
    std::vector<std::vector<cplx>> values;
    std::size_t window_begin = 0;
};

inline SymbolSamples sample_symbol(const Symbol& s, const GridSpec& grid) {
    grid.validate();
    SymbolSamples out;
    out.radii = grid.radii();
    out.directions = grid.unit_directions(s.dimension());
    const double w0 = grid.window_start() * (1.0 - 1e-12);
    out.window_begin = static_cast<std::size_t>(
        std::find_if(out.radii.begin(), out.radii.end(), [&](double r) { return r >= w0; }) - out.radii.begin());
    const std::size_t nr = out.radii.size(), nd = out.directions.size();
    out.values.assign(nd, std::vector<cplx>(nr));
    detail::parallel_for(nd * nr, [&](std::size_t k) {
        const std::size_t j = k / nr, i = k % nr;
        std::vector<double> xi(out.directions[j]);
        for (double& v : xi) v *= out.radii[i];
        out.values[j][i] = s(std::span<const double>(xi));
    });
    return out;
}

namespace detail {

template <class Value>
ExponentFit fit_exponent(const SymbolSamples& smp, Value value, bool take_max) {
    ExponentFit fit;
    fit.alpha = take_max ? -std::numeric_limits<double>::infinity() : std::numeric_limits<double>::infinity();
    const std::span<const double> r(smp.radii.data() + smp.window_begin, smp.radii.size() - smp.window_begin);
    bool all_log = true;
    for (std::size_t j = 0; j < smp.directions.size(); ++j) {
        std::vector<double> v(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) v[i] = value(smp.values[j][smp.window_begin + i]);
        const LineFit lf = fit_loglog(r, v);
        DirectionFit df{smp.directions[j], lf.slope, lf.r_squared, lf.max_residual, compare_growth(r, v).logarithmic()};
        all_log = all_log && df.logarithmic;
        fit.alpha = take_max ? std::max(fit.alpha, df.slope) : std::min(fit.alpha, df.slope);
        fit.min_r_squared = std::min(fit.min_r_squared, df.r_squared);
        fit.max_residual = std::max(fit.max_residual, df.max_residual);
        fit.per_direction.push_back(std::move(df));
    }
    fit.subpolynomial = fit.alpha < defaults::subpolynomial_slope || all_log;
    return fit;
}

inline ExponentFit continuity_from_samples(const SymbolSamples& smp) {
    bool degenerate = true;
    for (const auto& row : smp.values)
        for (const cplx& a : row) degenerate = degenerate && std::abs(a) < 1e-14;
    require(!degenerate, ErrorCode::DegenerateSymbol, "|A| is below 1e-14 on the whole grid");
    return fit_exponent(smp, [](cplx a) { return std::max(std::abs(a), 1e-300); }, true);
}

inline GardingFit garding_from_samples(const SymbolSamples& smp) {
    for (const auto& row : smp.values)
        for (std::size_t i = smp.window_begin; i < row.size(); ++i)
            require(row[i].real() > 0.0, ErrorCode::NonpositiveRealPart, "Re A <= 0 on the fit range");
    GardingFit g;
    static_cast<ExponentFit&>(g) = fit_exponent(smp, [](cplx a) { return a.real(); }, false);
    const double alpha = g.alpha;
    double qmin = std::numeric_limits<double>::infinity();
    for (const auto& row : smp.values)
        for (std::size_t i = smp.window_begin; i < row.size(); ++i)
            qmin = std::min(qmin, row[i].real() / std::pow(smp.radii[i], alpha));
    g.c2 = 0.5 * qmin;
    // N: grid radius above which Re A >= C2 r^alpha holds in every direction
    std::size_t first_ok = smp.radii.size();
    for (std::size_t i = smp.radii.size(); i-- > 0;) {
        bool ok = true;
        for (const auto& row : smp.values) ok = ok && row[i].real() >= g.c2 * std::pow(smp.radii[i], alpha);
        if (!ok) break;
        first_ok = i;
    }
    g.threshold = first_ok < smp.radii.size() ? smp.radii[first_ok] : std::numeric_limits<double>::infinity();
    const double top_decade = smp.radii.back() / 10.0;
    g.lower_order_ok = g.c2 > 0.0 && std::isfinite(g.c2) && g.threshold <= top_decade;
    return g;
}

/// Relative growth of |A| / Re A across the fit window, worst direction.
inline double ratio_growth(const SymbolSamples& smp) {
    const std::span<const double> r(smp.radii.data() + smp.window_begin, smp.radii.size() - smp.window_begin);
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& row : smp.values) {
        std::vector<double> rho(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) {
            const cplx a = row[smp.window_begin + i];
            rho[i] = std::abs(a) / a.real();
        }
        const double slope = fit_loglog(r, rho).slope;
        worst = std::max(worst, std::expm1(slope * std::log(r.back() / r.front())));
    }
    return worst;
}

}  // namespace detail

inline ExponentFit fit_continuity_exponent(const Symbol& s, const GridSpec& grid = {}) {
    return detail::continuity_from_samples(sample_symbol(s, grid));
}

inline GardingFit fit_garding_exponent(const Symbol& s, const GridSpec& grid = {}) {
    return detail::garding_from_samples(sample_symbol(s, grid));
}

// ---------------------------------------------------------------------------

struct Verdict {
    bool evaluated = false;
    bool pass = false;
    double slack = 0.0;  // lhs - rhs + 0.05; nonnegative iff pass
};

struct IndexDiagnostics {
    double r_squared_cont = 0.0;
    double r_squared_gard = 0.0;
    double max_residual_cont = 0.0;
    double max_residual_gard = 0.0;
    std::vector<double> slopes_cont;
    std::vector<double> slopes_gard;
    bool subpolynomial = false;
    double ratio_growth = 0.0;
    double garding_c2 = 0.0;
    double garding_threshold = 0.0;
    bool lower_order_ok = false;
    double tol = defaults::index_tol;
    std::string reason;  // why no index was declared, empty otherwise
};

struct IndexReport {
    std::string symbol;
    double alpha_cont = 0.0;
    double alpha_gard = 0.0;
    std::optional<double> sobolev_index;
    std::optional<double> beta;
    std::optional<double> gamma;
    Verdict beta_ge_gamma;
    Verdict beta_ge_index;
    IndexDiagnostics diagnostics;
};

/// Combines the two exponent fits into an index verdict. Never throws for
/// numerical reasons; failures become an absent index with a reason.
inline IndexReport sobolev_index(const Symbol& s, const GridSpec& grid = {}, double tol = defaults::index_tol) {
    IndexReport rep;
    rep.symbol = s.name();
    rep.diagnostics.tol = tol;
    SymbolSamples smp;
    try {
        smp = sample_symbol(s, grid);
        const ExponentFit c = detail::continuity_from_samples(smp);
        rep.alpha_cont = c.alpha;
        rep.diagnostics.r_squared_cont = c.min_r_squared;
        rep.diagnostics.max_residual_cont = c.max_residual;
        for (const auto& d : c.per_direction) rep.diagnostics.slopes_cont.push_back(d.slope);
        rep.diagnostics.subpolynomial = c.subpolynomial;
    } catch (const Error& e) {
        rep.diagnostics.reason = e.what();
        return rep;
    }
    try {
        const GardingFit g = detail::garding_from_samples(smp);
        rep.alpha_gard = g.alpha;
        rep.diagnostics.r_squared_gard = g.min_r_squared;
        rep.diagnostics.max_residual_gard = g.max_residual;
        for (const auto& d : g.per_direction) rep.diagnostics.slopes_gard.push_back(d.slope);
        rep.diagnostics.subpolynomial = rep.diagnostics.subpolynomial || g.subpolynomial;
        rep.diagnostics.garding_c2 = g.c2;
        rep.diagnostics.garding_threshold = g.threshold;
        rep.diagnostics.lower_order_ok = g.lower_order_ok;
    } catch (const Error& e) {
        rep.diagnostics.reason = e.what();
        return rep;
    }
    rep.diagnostics.ratio_growth = detail::ratio_growth(smp);

    auto& why = rep.diagnostics.reason;
    if (rep.diagnostics.subpolynomial)
        why = "symbol grows sub-polynomially";
    else if (std::abs(rep.alpha_cont - rep.alpha_gard) > tol)
        why = "continuity and Garding exponents differ by more than tol";
    else if (!(rep.alpha_gard > 0.0 && rep.alpha_gard <= 2.0 + 0.01))
        why = "Garding exponent outside (0,2]";
    else if (!rep.diagnostics.lower_order_ok)
        why = "Garding lower-order term not dominated";
    else if (rep.diagnostics.ratio_growth > 0.05)
        why = "|A| / Re A keeps growing";
    if (why.empty()) rep.sobolev_index = std::min(rep.alpha_gard, 2.0);
    return rep;
}

// ---------------------------------------------------------------------------
// Analytic catalog

inline std::optional<double> analytic_index(const FamilyParams& params) {
    return std::visit(
        [](const auto& p) -> std::optional<double> {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, BrownianParams>) {
                Eigen::LLT<Eigen::MatrixXd> llt(p.sigma);
                if (llt.info() != Eigen::Success) return std::nullopt;
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(p.sigma, Eigen::EigenvaluesOnly);
                return es.eigenvalues().minCoeff() > 0.0 ? std::optional<double>(2.0) : std::nullopt;
            } else if constexpr (std::is_same_v<P, CgmyParams>) {
                if (p.Y == 0.0) return std::nullopt;
                if (p.Y >= 1.0) return p.Y;
                if (p.drift == CgmyDrift::Compensated || p.G == p.M) return p.Y;
                return std::nullopt;
            } else if constexpr (std::is_same_v<P, Stable1dParams>) {
                if (p.alpha == 2.0) return 2.0;
                if (p.alpha > 1.0) return p.alpha;
                if (p.alpha == 1.0) return p.beta == 0.0 ? std::optional<double>(1.0) : std::nullopt;
                return p.tau == 0.0 ? std::optional<double>(p.alpha) : std::nullopt;
            } else {
                return 1.0;  // NIG, Cauchy, Student-t, GH
            }
        },
        params);
}

inline std::optional<double> analytic_index(const Symbol& s) {
    if (!s.params()) throw Error(ErrorCode::UnknownFamily, std::string(to_string(s.family())) + " is not in the catalog");
    return analytic_index(*s.params());
}

// ---------------------------------------------------------------------------
// Jump indices and cross checks

/// Fills beta and gamma from the symbol's Levy density; a pure diffusion has none.
inline void attach_jump_indices(IndexReport& rep, const Symbol& s) {
    if (s.density()) {
        rep.beta = bg_index(*s.density());
        rep.gamma = gamma_index(*s.density());
    } else if (s.family() == Family::Brownian) {
        rep.beta = 0.0;
        rep.gamma = 0.0;
    }
}

/// beta >= gamma - 0.05, and beta >= index - 0.05 when the index is below 2.
inline IndexReport& cross_check(IndexReport& rep) {
    require(rep.beta.has_value(), ErrorCode::MissingField, "report has no Blumenthal-Getoor index");
    require(rep.gamma.has_value(), ErrorCode::MissingField, "report has no gamma index");
    require(rep.sobolev_index.has_value(), ErrorCode::MissingField, "report has no Sobolev index");
    const double b = *rep.beta, g = *rep.gamma, a = *rep.sobolev_index;
    rep.beta_ge_gamma = {true, b >= g - 0.05, b - g + 0.05};
    if (a < 2.0)
        rep.beta_ge_index = {true, b >= a - 0.05, b - a + 0.05};
    else
        rep.beta_ge_index = {};
    return rep;
}

// ---------------------------------------------------------------------------
// Smoothness: moments of |mu_hat_t|

struct MomentsReport {
    std::vector<double> moments;  // M_n = \int |xi|^n |mu_hat_t(xi)| dxi
    std::vector<double> tails;    // certified bound on the part beyond `cutoff`
    double cutoff = 0.0;
    double alpha_tail = 0.0;
    double c2 = 0.0;
};

namespace detail {

/// \int_R^inf r^m e^{-k r^a} dr.
inline double stretched_exp_tail(double m, double k, double a, double R) {
    const double s = (m + 1.0) / a;
    const double x = k * std::pow(R, a);
    gsl_sf_result res;
    silence_gsl();
    const int status = gsl_sf_gamma_inc_e(s, x, &res);
    if (status == GSL_EUNDRFLW) return 0.0;
    require(status == GSL_SUCCESS, ErrorCode::TailUnbounded, "incomplete gamma evaluation failed");
    return res.val * std::pow(k, -s) / a;
}

}  // namespace detail

/// Moments M_0..M_{n_max} of |mu_hat_t| for d = 1 or 2. The integral is cut
/// at R with R doubled until the Garding tail bound drops below 1e-8 M_n.
inline MomentsReport smoothness_moments(const Symbol& s, double t, int n_max, const GridSpec& grid = {}) {
    require(t > 0.0, ErrorCode::InvalidArgument, "t must be positive");
    require(n_max >= 0, ErrorCode::InvalidArgument, "n_max must be nonnegative");
    const int d = s.dimension();
    require(d == 1 || d == 2, ErrorCode::InvalidArgument, "moments are implemented for d = 1, 2");

    GardingFit g;
    try {
        g = fit_garding_exponent(s, grid);
    } catch (const Error& e) {
        throw Error(ErrorCode::TailUnbounded, std::string("no Garding constants: ") + e.what());
    }
    require(!g.subpolynomial && g.alpha > 0.0 && g.lower_order_ok, ErrorCode::TailUnbounded,
            "Garding fit does not certify polynomial decay of |mu_hat_t|");

    MomentsReport rep;
    rep.alpha_tail = std::min(g.alpha, 2.0) - 0.05;
    require(rep.alpha_tail > 0.0, ErrorCode::TailUnbounded, "Garding exponent too small for a tail bound");
    // C2 for the reduced exponent over the fit window
    const auto smp = sample_symbol(s, grid);
    double qmin = std::numeric_limits<double>::infinity();
    for (const auto& row : smp.values)
        for (std::size_t i = smp.window_begin; i < row.size(); ++i)
            qmin = std::min(qmin, row[i].real() / std::pow(smp.radii[i], rep.alpha_tail));
    rep.c2 = 0.5 * qmin;
    require(rep.c2 > 0.0, ErrorCode::TailUnbounded, "nonpositive Garding constant");
    double floor_r = 0.0;  // radius beyond which the bound is checked on the grid
    for (std::size_t i = 0; i < smp.radii.size(); ++i) {
        bool ok = true;
        for (std::size_t j = i; j < smp.radii.size(); ++j)
            for (const auto& row : smp.values) ok = ok && row[j].real() >= rep.c2 * std::pow(smp.radii[j], rep.alpha_tail);
        if (ok) {
            floor_r = smp.radii[i];
            break;
        }
    }
    require(floor_r > 0.0, ErrorCode::TailUnbounded, "Garding bound fails on the top of the grid");

    const int nth = d == 1 ? 2 : 64;
    // radial profile of |mu_hat_t| averaged over directions (times the angular measure)
    auto weight = [&](double r) {
        double acc = 0.0;
        if (d == 1) {
            for (double sg : {1.0, -1.0}) acc += std::exp(-t * s(sg * r).real());
            return acc;
        }
        for (int k = 0; k < nth; ++k) {
            const double th = 2.0 * std::numbers::pi * k / nth;
            acc += std::exp(-t * s({r * std::cos(th), r * std::sin(th)}).real());
        }
        return acc * (2.0 * std::numbers::pi / nth) * r;
    };
    const double angular = d == 1 ? 2.0 : 2.0 * std::numbers::pi;
    const double extra = d == 1 ? 0.0 : 1.0;  // polar Jacobian

    std::vector<double> acc(static_cast<std::size_t>(n_max + 1), 0.0);
    double lo = 0.0, hi = 1.0;
    rep.moments.assign(acc.size(), 0.0);
    rep.tails.assign(acc.size(), std::numeric_limits<double>::infinity());
    for (int doubling = 0; doubling < 80; ++doubling) {
        for (int n = 0; n <= n_max; ++n) {
            auto f = [&](double r) { return std::pow(r, n) * weight(r); };
            const auto q = detail::qag(f, lo, hi, 0.0, 1e-12, 200, GSL_INTEG_GAUSS41);
            require(std::isfinite(q.value), ErrorCode::QuadratureFailure, "moment quadrature failed");
            acc[static_cast<std::size_t>(n)] += q.value;
        }
        lo = hi;
        hi *= 2.0;
        if (lo < floor_r) continue;
        bool done = true;
        for (int n = 0; n <= n_max; ++n) {
            const auto k = static_cast<std::size_t>(n);
            rep.moments[k] = acc[k];
            rep.tails[k] = angular * detail::stretched_exp_tail(n + extra, t * rep.c2, rep.alpha_tail, lo);
            done = done && rep.tails[k] < defaults::tail_rel_tol * acc[k];
        }
        rep.cutoff = lo;
        if (done) return rep;
    }
    throw Error(ErrorCode::TailUnbounded, "tail bound did not reach 1e-8 relative");
}

}  // namespace levysobolev
