#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "levysobolev/constants.hpp"
#include "levysobolev/detail/fit.hpp"
#include "levysobolev/detail/parallel.hpp"
#include "levysobolev/error.hpp"
#include "levysobolev/symbol.hpp"

namespace levysobolev {

/// N^d equispaced modes xi_k = -Xi + k dXi, dXi = 2 Xi / N, in [-Xi, Xi)^d.
/// Flat index: k = k0 + N k1.
class FrequencyGrid {
public:
    FrequencyGrid(int dimension, int modes, double cutoff) : d_(dimension), n_(modes), cutoff_(cutoff) {
        require(d_ == 1 || d_ == 2, ErrorCode::InvalidArgument, "frequency grids support d = 1, 2");
        require(n_ >= 8 && (n_ & (n_ - 1)) == 0, ErrorCode::InvalidArgument, "modes per axis must be a power of two >= 8");
        require(cutoff_ > 0.0 && std::isfinite(cutoff_), ErrorCode::InvalidArgument, "frequency cutoff must be positive");
    }

    int dimension() const { return d_; }
    int modes() const { return n_; }
    double cutoff() const { return cutoff_; }
    double spacing() const { return 2.0 * cutoff_ / n_; }
    /// Spatial period implied by the mode spacing.
    double period() const { return fourier::two_pi / spacing(); }
    std::size_t size() const { return d_ == 1 ? static_cast<std::size_t>(n_) : static_cast<std::size_t>(n_) * n_; }
    double cell() const { return std::pow(spacing(), d_); }
    double axis(int k) const { return -cutoff_ + k * spacing(); }

    std::array<double, 2> xi(std::size_t idx) const {
        const int k0 = static_cast<int>(idx % static_cast<std::size_t>(n_));
        const int k1 = d_ == 1 ? 0 : static_cast<int>(idx / static_cast<std::size_t>(n_));
        return {axis(k0), d_ == 1 ? 0.0 : axis(k1)};
    }
    double radius(std::size_t idx) const {
        const auto x = xi(idx);
        return std::hypot(x[0], x[1]);
    }
    /// Index of -xi; the k = 0 (Nyquist) layer pairs with itself.
    std::size_t mirror(std::size_t idx) const {
        const auto n = static_cast<std::size_t>(n_);
        const std::size_t k0 = idx % n, k1 = d_ == 1 ? 0 : idx / n;
        const std::size_t m0 = (n - k0) % n, m1 = (n - k1) % n;
        return m0 + n * m1;
    }
    bool on_boundary(std::size_t idx) const {
        const auto n = static_cast<std::size_t>(n_);
        const std::size_t k0 = idx % n, k1 = d_ == 1 ? 1 : idx / n;
        return k0 == 0 || k0 == n - 1 || (d_ == 2 && (k1 == 0 || k1 == n - 1));
    }

    bool operator==(const FrequencyGrid& o) const { return d_ == o.d_ && n_ == o.n_ && cutoff_ == o.cutoff_; }

private:
    int d_;
    int n_;
    double cutoff_;
};

/// Values of u_hat at the grid frequencies.
struct SpectralField {
    FrequencyGrid grid;
    std::vector<cplx> coeffs;
    bool real_valued = false;  // u_hat(-xi) = conj u_hat(xi)

    explicit SpectralField(FrequencyGrid g) : grid(g), coeffs(g.size(), cplx(0.0, 0.0)) {}
    SpectralField(FrequencyGrid g, std::vector<cplx> c, bool real = false)
        : grid(g), coeffs(std::move(c)), real_valued(real) {
        require(coeffs.size() == grid.size(), ErrorCode::InvalidArgument, "coefficient count does not match the grid");
    }
};

inline SpectralField make_field(const FrequencyGrid& g, const std::function<cplx(std::span<const double>)>& fn,
                                bool real_valued = false) {
    SpectralField f(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto x = g.xi(i);
        f.coeffs[i] = fn(std::span<const double>(x.data(), static_cast<std::size_t>(g.dimension())));
    }
    f.real_valued = real_valued;
    return f;
}

/// Largest |u_hat(-xi) - conj u_hat(xi)| over paired modes.
inline double conj_symmetry_defect(const SpectralField& f) {
    double worst = 0.0;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        const std::size_t m = f.grid.mirror(i);
        if (m == i && f.grid.on_boundary(i)) continue;
        worst = std::max(worst, std::abs(f.coeffs[m] - std::conj(f.coeffs[i])));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Norms and forms

/// ||u||_s^2 = \int |u_hat|^2 (1+|xi|)^{2s} dxi as a Riemann sum. No (2 pi)^{-d}
/// factor, so s = 0 gives (2 pi)^d ||u||_{L^2}^2.
inline double sobolev_norm_sq(const SpectralField& f, double s) {
    double acc = 0.0;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        acc += std::norm(f.coeffs[i]) * std::pow(1.0 + f.grid.radius(i), 2.0 * s);
    return acc * f.grid.cell();
}

inline double sobolev_norm(const SpectralField& f, double s) { return std::sqrt(sobolev_norm_sq(f, s)); }

/// Norm with weight 1 + Re A(xi) in place of (1+|xi|)^{2s}.
inline double symbol_weighted_norm_sq(const SpectralField& f, const Symbol& a) {
    double acc = 0.0;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        const auto x = f.grid.xi(i);
        acc += std::norm(f.coeffs[i]) *
               (1.0 + a(std::span<const double>(x.data(), static_cast<std::size_t>(f.grid.dimension()))).real());
    }
    return acc * f.grid.cell();
}

/// A(xi_k) for every mode.
inline std::vector<cplx> symbol_on_grid(const Symbol& a, const FrequencyGrid& g) {
    require(a.dimension() == g.dimension(), ErrorCode::GridMismatch, "symbol and grid dimensions differ");
    std::vector<cplx> out(g.size());
    detail::parallel_for(g.size(), [&](std::size_t i) {
        const auto x = g.xi(i);
        out[i] = a(std::span<const double>(x.data(), static_cast<std::size_t>(g.dimension())));
    });
    return out;
}

/// Transform of the operator applied to u: A(xi) u_hat(xi).
inline SpectralField apply_symbol(const Symbol& a, const SpectralField& u) {
    const auto av = symbol_on_grid(a, u.grid);
    SpectralField out(u.grid);
    for (std::size_t i = 0; i < av.size(); ++i) out.coeffs[i] = av[i] * u.coeffs[i];
    return out;
}

/// a(u,v) = sum A(xi) u_hat(xi) conj(v_hat(xi)) dXi^d.
inline cplx bilinear_form(const Symbol& a, const SpectralField& u, const SpectralField& v) {
    require(u.grid == v.grid, ErrorCode::GridMismatch, "fields live on different grids");
    const auto av = symbol_on_grid(a, u.grid);
    cplx acc = 0.0;
    for (std::size_t i = 0; i < av.size(); ++i) acc += av[i] * u.coeffs[i] * std::conj(v.coeffs[i]);
    return acc * u.grid.cell();
}

// ---------------------------------------------------------------------------
// Continuity / Garding verification on random fields

struct FormReport {
    double alpha = 0.0;
    int trials = 0;
    std::uint64_t seed = 0;
    double c_fit = 0.0;  // max |a(u,v)| / (||u||_{alpha/2} ||v||_{alpha/2})
    double c2 = 0.0;
    double c3 = 0.0;
    bool continuity_pass = false;
    bool garding_pass = false;
    double continuity_trend = 0.0;
    double continuity_increment_slope = 0.0;  // log-log slope of shell-to-shell increments
    std::vector<double> shell_radius;    // lower edge of each nonempty dyadic shell
    std::vector<double> shell_garding;   // min Re a(u,u) / ||u||^2_{alpha/2} per shell
    std::vector<double> shell_continuity;  // max |a(u,u)| / ||u||^2_{alpha/2} per shell
    std::string note;
};

/// Random band-limited fields: i.i.d. standard complex Gaussian coefficients on
/// one dyadic shell |xi| in [2^{j-1}, 2^j) (shell 0: |xi| < 1), made
/// conjugate-symmetric; shells are cycled over the trials.
inline FormReport verify_form_inequalities(const Symbol& a, double alpha, int trials, const FrequencyGrid& grid,
                                           std::uint64_t seed = 0) {
    require(alpha > 0.0 && alpha <= 2.0, ErrorCode::InvalidArgument, "alpha must lie in (0,2]");
    require(trials >= 1, ErrorCode::InvalidArgument, "need at least one trial");
    FormReport rep;
    rep.alpha = alpha;
    rep.trials = trials;
    rep.seed = seed;

    const auto av = symbol_on_grid(a, grid);
    const std::size_t n = grid.size();
    std::vector<double> weight(n);
    std::vector<std::vector<std::size_t>> shells;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = grid.radius(i);
        weight[i] = std::pow(1.0 + r, alpha) * grid.cell();
        if (grid.mirror(i) == i && grid.on_boundary(i)) continue;
        const std::size_t j = r < 1.0 ? 0 : static_cast<std::size_t>(std::floor(std::log2(r))) + 1;
        if (shells.size() <= j) shells.resize(j + 1);
        shells[j].push_back(i);
    }
    std::vector<std::size_t> nonempty;
    for (std::size_t j = 0; j < shells.size(); ++j)
        if (!shells[j].empty()) nonempty.push_back(j);
    require(nonempty.size() >= 2, ErrorCode::InvalidArgument, "grid resolves fewer than two dyadic shells");

    std::mt19937_64 rng(seed);
    // Box-Muller on raw engine output; std::normal_distribution differs between libraries
    auto unit = [&rng] { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; };
    auto gauss_pair = [&unit] {
        const double rad = std::sqrt(-2.0 * std::log(unit()));
        const double ang = 2.0 * std::numbers::pi * unit();
        return cplx(rad * std::cos(ang), rad * std::sin(ang));
    };
    std::vector<cplx> scratch(n, cplx(0.0, 0.0));
    // coefficients on the modes of one shell, in shell order
    auto draw = [&](const std::vector<std::size_t>& modes) {
        for (std::size_t i : modes) scratch[i] = gauss_pair();
        std::vector<cplx> u(modes.size());
        for (std::size_t k = 0; k < modes.size(); ++k)
            u[k] = 0.5 * (scratch[modes[k]] + std::conj(scratch[grid.mirror(modes[k])]));
        for (std::size_t i : modes) scratch[i] = 0.0;
        return u;
    };

    const std::size_t ns = nonempty.size();
    std::vector<double> R(static_cast<std::size_t>(trials)), S(R.size()), L(R.size());
    std::vector<double> garding(ns, std::numeric_limits<double>::infinity()), cont(ns, 0.0);
    for (int t = 0; t < trials; ++t) {
        const std::size_t si = static_cast<std::size_t>(t) % ns;
        const auto& modes = shells[nonempty[si]];
        const auto u = draw(modes);
        const auto v = draw(modes);
        cplx auu = 0.0, auv = 0.0;
        double su = 0.0, sv = 0.0, lu = 0.0;
        for (std::size_t k = 0; k < modes.size(); ++k) {
            const std::size_t i = modes[k];
            auu += av[i] * std::norm(u[k]);
            auv += av[i] * u[k] * std::conj(v[k]);
            su += std::norm(u[k]) * weight[i];
            sv += std::norm(v[k]) * weight[i];
            lu += std::norm(u[k]);
        }
        auu *= grid.cell();
        auv *= grid.cell();
        lu *= grid.cell();
        const auto k = static_cast<std::size_t>(t);
        R[k] = auu.real();
        S[k] = su;
        L[k] = lu;
        if (su > 0.0 && sv > 0.0) rep.c_fit = std::max(rep.c_fit, std::abs(auv) / std::sqrt(su * sv));
        if (su > 0.0) {
            garding[si] = std::min(garding[si], R[k] / su);
            cont[si] = std::max(cont[si], std::abs(auu) / su);
        }
    }

    for (std::size_t j = 0; j < ns; ++j) {
        const std::size_t sh = nonempty[j];
        rep.shell_radius.push_back(sh == 0 ? 0.0 : std::ldexp(1.0, static_cast<int>(sh) - 1));
        rep.shell_garding.push_back(garding[j]);
        rep.shell_continuity.push_back(cont[j]);
    }
    const std::size_t top = ns - 1;
    const std::size_t upper = ns / 2;

    // continuity: the normalised form must not keep growing over the upper shells
    {
        std::vector<double> r, c;
        for (std::size_t j = std::max<std::size_t>(upper, 1); j < ns; ++j)
            if (cont[j] > 0.0 && std::isfinite(garding[j])) {
                r.push_back(rep.shell_radius[j]);
                c.push_back(cont[j]);
            }
        rep.continuity_trend = r.size() >= 2 ? detail::fit_loglog(r, c).slope : 0.0;
        // a ratio converging like C - K r^{-p} has increments decaying like r^{-p};
        // growth like r^q gives increments growing like r^q
        std::vector<double> ri, di;
        bool rising = true;
        for (std::size_t k = 0; k + 1 < c.size(); ++k) {
            const double d = c[k + 1] - c[k];
            rising = rising && d > 0.0;
            ri.push_back(r[k + 1]);
            di.push_back(d);
        }
        bool converging = false;
        if (rising && ri.size() >= 3) {
            rep.continuity_increment_slope = detail::fit_loglog(ri, di).slope;
            converging = rep.continuity_increment_slope <= -0.1;
        }
        rep.continuity_pass =
            std::isfinite(rep.c_fit) && rep.c_fit > 0.0 && (rep.continuity_trend <= 0.05 || converging);
    }

    // Garding: c2 from the top shell, c3 absorbs every other trial
    if (!std::isfinite(garding[top])) {
        rep.note = "top shell received no trials";
        return rep;
    }
    rep.c2 = 0.5 * garding[top];
    double peak = -std::numeric_limits<double>::infinity();
    for (std::size_t j = upper; j < ns; ++j)
        if (std::isfinite(garding[j])) peak = std::max(peak, garding[j]);
    const bool trend_ok = garding[top] >= 0.95 * peak;
    if (rep.c2 > 0.0) {
        for (std::size_t k = 0; k < R.size(); ++k)
            if (L[k] > 0.0) rep.c3 = std::max(rep.c3, (rep.c2 * S[k] - R[k]) / L[k]);
    }
    rep.garding_pass = rep.c2 > 0.0 && rep.c3 <= defaults::garding_c3_max && trend_ok;
    if (!trend_ok) rep.note = "Re a(u,u) / ||u||^2 decays on the top shells";
    else if (!(rep.c2 > 0.0)) rep.note = "no positive c2";
    else if (rep.c3 > defaults::garding_c3_max) rep.note = "c3 exceeds 1e6";
    return rep;
}

// ---------------------------------------------------------------------------
// Time stepping

enum class Scheme { Exact, ImplicitEuler, CrankNicolson };

inline const char* to_string(Scheme s) {
    switch (s) {
        case Scheme::Exact: return "exact";
        case Scheme::ImplicitEuler: return "implicit-euler";
        case Scheme::CrankNicolson: return "crank-nicolson";
    }
    return "unknown";
}

struct Trajectory {
    std::vector<double> times;
    std::vector<SpectralField> fields;
    Scheme scheme = Scheme::Exact;
};

/// f_hat(t); an empty function means f = 0.
using SourceFn = std::function<SpectralField(double)>;

namespace detail {

/// (1 - e^{-w}) / w.
inline cplx phi1_neg(cplx w) {
    if (std::abs(w) < 1e-4) return 1.0 - w / 2.0 + w * w / 6.0 - w * w * w / 24.0;
    return (1.0 - std::exp(-w)) / w;
}

}  // namespace detail

/// Integrates u_hat' = -A(xi) u_hat + f_hat(t) per mode on K uniform steps.
/// Exact: variation of constants with f_hat frozen at the left end of each step.
inline Trajectory evolve(const Symbol& a, const SpectralField& g_hat, const SourceFn& f_hat, double T, int K,
                         Scheme scheme, bool keep_all = true) {
    require(T > 0.0 && std::isfinite(T), ErrorCode::InvalidArgument, "T must be positive");
    require(K >= 1, ErrorCode::InvalidArgument, "K must be >= 1");
    const auto z = symbol_on_grid(a, g_hat.grid);
    const double dt = T / K;
    const std::size_t n = z.size();

    std::vector<cplx> step(n), rhs_old(n, 1.0), rhs_new(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const cplx w = z[i] * dt;
        switch (scheme) {
            case Scheme::Exact:
                step[i] = std::exp(-w);
                rhs_old[i] = dt * detail::phi1_neg(w);
                break;
            case Scheme::ImplicitEuler:
                step[i] = 1.0 / (1.0 + w);
                rhs_old[i] = 0.0;
                rhs_new[i] = dt / (1.0 + w);
                break;
            case Scheme::CrankNicolson:
                step[i] = (1.0 - 0.5 * w) / (1.0 + 0.5 * w);
                rhs_old[i] = rhs_new[i] = 0.5 * dt / (1.0 + 0.5 * w);
                if (std::abs(step[i]) > 1.0 + 1e-12) {
                    const auto x = g_hat.grid.xi(i);
                    throw Error(ErrorCode::UnstableScheme, "Crank-Nicolson amplification " +
                                                               std::to_string(std::abs(step[i])) + " at xi = " +
                                                               std::to_string(x[0]));
                }
                break;
        }
    }

    Trajectory tr;
    tr.scheme = scheme;
    tr.times.push_back(0.0);
    tr.fields.push_back(g_hat);
    SpectralField cur = g_hat;
    std::optional<SpectralField> f_prev;
    if (f_hat) f_prev = f_hat(0.0);
    for (int k = 0; k < K; ++k) {
        const double t1 = (k + 1 == K) ? T : (k + 1) * dt;
        std::optional<SpectralField> f_next;
        if (f_hat && scheme != Scheme::Exact) f_next = f_hat(t1);
        for (std::size_t i = 0; i < n; ++i) {
            cplx v = step[i] * cur.coeffs[i];
            if (f_prev) v += rhs_old[i] * f_prev->coeffs[i];
            if (f_next) v += rhs_new[i] * f_next->coeffs[i];
            cur.coeffs[i] = v;
        }
        if (f_hat) f_prev = scheme == Scheme::Exact ? f_hat(t1) : std::move(f_next);
        if (keep_all || k + 1 == K) {
            tr.times.push_back(t1);
            tr.fields.push_back(cur);
        }
    }
    return tr;
}

// ---------------------------------------------------------------------------
// Inversion: conditional expectations and densities

namespace detail {

/// Real part of (2 pi)^{-d} sum_k e^{-i<xi_k, x>} w_k dXi^d at every point,
/// with the phase advanced by recurrence along each axis.
inline std::vector<double> invert(const FrequencyGrid& g, const std::vector<cplx>& w,
                                  std::span<const std::vector<double>> points) {
    const int d = g.dimension();
    const int n = g.modes();
    const double scale = g.cell() / std::pow(fourier::two_pi, d);
    std::vector<double> out(points.size());
    detail::parallel_for(points.size(), [&](std::size_t p) {
        const auto& x = points[p];
        require(static_cast<int>(x.size()) == d, ErrorCode::InvalidArgument, "point has the wrong dimension");
        const cplx rot0 = std::polar(1.0, -g.spacing() * x[0]);
        const cplx start0 = std::polar(1.0, g.cutoff() * x[0]);  // e^{-i(-Xi) x}
        cplx acc = 0.0;
        if (d == 1) {
            cplx ph = start0;
            for (int k = 0; k < n; ++k) {
                acc += ph * w[static_cast<std::size_t>(k)];
                ph *= rot0;
            }
        } else {
            const cplx rot1 = std::polar(1.0, -g.spacing() * x[1]);
            cplx ph1 = std::polar(1.0, g.cutoff() * x[1]);
            for (int k1 = 0; k1 < n; ++k1) {
                cplx row = 0.0, ph0 = start0;
                const std::size_t base = static_cast<std::size_t>(k1) * static_cast<std::size_t>(n);
                for (int k0 = 0; k0 < n; ++k0) {
                    row += ph0 * w[base + static_cast<std::size_t>(k0)];
                    ph0 *= rot0;
                }
                acc += ph1 * row;
                ph1 *= rot1;
            }
        }
        out[p] = acc.real() * scale;
    });
    return out;
}

inline double truncation_tail(const FrequencyGrid& g, const std::vector<cplx>& w) {
    double edge = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (g.on_boundary(i)) edge = std::max(edge, std::abs(w[i]));
    return edge * std::pow(g.cutoff(), g.dimension()) / std::pow(fourier::two_pi, g.dimension());
}

}  // namespace detail

/// v(x) = (2 pi)^{-d} sum e^{-i<xi,x>} e^{-tau A(xi)} g_hat(xi) dXi^d = E g(x + L_tau).
inline std::vector<double> conditional_expectation(const Symbol& a, const SpectralField& g_hat, double tau,
                                                   std::span<const std::vector<double>> x_points) {
    require(tau >= 0.0 && std::isfinite(tau), ErrorCode::InvalidArgument, "tau must be nonnegative");
    std::vector<cplx> w(g_hat.coeffs);
    if (tau > 0.0) {
        const auto z = symbol_on_grid(a, g_hat.grid);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] *= std::exp(-tau * z[i]);
    }
    const double tail = detail::truncation_tail(g_hat.grid, w);
    require(tail <= defaults::inversion_tail_tol, ErrorCode::TailTooFat,
            "truncated inversion tail " + std::to_string(tail) + " exceeds 1e-8");
    return detail::invert(g_hat.grid, w, x_points);
}

/// p_t(x) = (2 pi)^{-d} sum e^{-i<xi,x>} mu_hat_t(xi) dXi^d.
inline std::vector<double> density(const Symbol& a, double t, std::span<const std::vector<double>> x_points,
                                   const FrequencyGrid& grid) {
    require(t > 0.0, ErrorCode::InvalidArgument, "t must be positive");
    require(a.dimension() == grid.dimension(), ErrorCode::GridMismatch, "symbol and grid dimensions differ");
    std::vector<cplx> w(grid.size());
    detail::parallel_for(grid.size(), [&](std::size_t i) {
        const auto x = grid.xi(i);
        w[i] = char_fn(a, t, std::span<const double>(x.data(), static_cast<std::size_t>(grid.dimension())));
    });
    const double tail = detail::truncation_tail(grid, w);
    require(tail <= defaults::inversion_tail_tol, ErrorCode::TailTooFat,
            "characteristic function at the cutoff gives tail " + std::to_string(tail));
    return detail::invert(grid, w, x_points);
}

/// Equispaced points covering one spatial period [-P/2, P/2)^d, m per axis.
inline std::vector<std::vector<double>> spatial_window(const FrequencyGrid& g, int m) {
    const double P = g.period();
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < (g.dimension() == 1 ? 1 : m); ++i)
        for (int j = 0; j < m; ++j) {
            const double x0 = -0.5 * P + P * j / m;
            if (g.dimension() == 1)
                pts.push_back({x0});
            else
                pts.push_back({x0, -0.5 * P + P * i / m});
        }
    return pts;
}

// ---------------------------------------------------------------------------
// Test payoffs (Schwartz functions with known transforms)

/// g(x) = exp(-|x - m|^2 / (2 s^2)).
inline SpectralField gaussian_payoff(const FrequencyGrid& g, double s = 1.0, std::span<const double> m = {}) {
    require(s > 0.0, ErrorCode::InvalidArgument, "Gaussian width must be positive");
    return make_field(
        g,
        [&](std::span<const double> xi) {
            cplx v = 1.0;
            for (std::size_t j = 0; j < xi.size(); ++j) {
                const double mj = j < m.size() ? m[j] : 0.0;
                v *= s * std::sqrt(fourier::two_pi) * std::polar(std::exp(-0.5 * s * s * xi[j] * xi[j]), xi[j] * mj);
            }
            return v;
        },
        m.empty());
}

/// Physicists' Hermite polynomial H_n.
inline double hermite(int n, double x) {
    double h0 = 1.0, h1 = 2.0 * x;
    if (n == 0) return h0;
    for (int k = 1; k < n; ++k) {
        const double h2 = 2.0 * x * h1 - 2.0 * k * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

/// g(x) = H_n(x) e^{-x^2/2}, a Fourier eigenfunction: g_hat = sqrt(2 pi) i^n g(xi).
inline SpectralField hermite_payoff(const FrequencyGrid& g, int n) {
    require(g.dimension() == 1, ErrorCode::InvalidArgument, "Hermite payoff is one-dimensional");
    require(n >= 0, ErrorCode::InvalidArgument, "Hermite order must be nonnegative");
    static constexpr std::array<cplx, 4> ipow = {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
    return make_field(
        g,
        [&](std::span<const double> xi) {
            return std::sqrt(fourier::two_pi) * ipow[static_cast<std::size_t>(n % 4)] * hermite(n, xi[0]) *
                   std::exp(-0.5 * xi[0] * xi[0]);
        },
        true);
}

}  // namespace levysobolev
