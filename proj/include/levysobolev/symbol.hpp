#pragma once

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_bessel.h>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <numbers>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "levysobolev/constants.hpp"
#include "levysobolev/error.hpp"
#include "levysobolev/levy_density.hpp"
#include "levysobolev/levy_measure.hpp"

namespace levysobolev {

enum class Truncation { Identity, UnitBall };

enum class Family { Brownian, NIG, Cauchy, StudentT, CGMY, GHNumeric, Stable1d, FromDensity, Composite, Custom };

inline const char* to_string(Family f) {
    switch (f) {
        case Family::Brownian: return "brownian";
        case Family::NIG: return "nig";
        case Family::Cauchy: return "cauchy";
        case Family::StudentT: return "student-t";
        case Family::CGMY: return "cgmy";
        case Family::GHNumeric: return "gh";
        case Family::Stable1d: return "stable";
        case Family::FromDensity: return "from-density";
        case Family::Composite: return "composite";
        case Family::Custom: return "custom";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// Family parameter records

struct BrownianParams {
    Eigen::MatrixXd sigma = Eigen::MatrixXd::Identity(1, 1);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(1);
};

struct NigParams {
    double alpha = 1.0;
    Eigen::VectorXd beta = Eigen::VectorXd::Zero(1);
    double delta = 1.0;
    Eigen::VectorXd mu = Eigen::VectorXd::Zero(1);
    Eigen::MatrixXd Delta = Eigen::MatrixXd::Identity(1, 1);
};

struct CauchyParams {
    double c = 1.0;
    Eigen::VectorXd gamma = Eigen::VectorXd::Zero(1);
};

/// Law of L_1 with density proportional to (1 + (x-mu)^2/delta^2)^{-(f+1)/2}.
struct StudentTParams {
    double f = 4.0;
    double delta = 2.0;
    double mu = 0.0;
};

/// Drift of the CGMY triplet with respect to h(x) = x.
///   Compensated  : b = \int x F(dx) for Y < 1 (pure-jump, finite variation), 0 otherwise
///   Zero         : b = 0
///   Literal      : b = Y (M^{Y-1} - G^{Y-1}) for Y in (0,1), 0 otherwise
enum class CgmyDrift { Compensated, Zero, Literal };

struct CgmyParams {
    double C = 1.0, G = 5.0, M = 5.0, Y = 0.5;
    CgmyDrift drift = CgmyDrift::Compensated;
};

/// alpha = 1:  A(u) = c|u| (1 - i beta (2/pi) sgn(u) log|u|) + i tau u
/// otherwise:  A(u) = c|u|^alpha (1 + i beta tan(pi alpha/2) sgn(u)) + i tau u
struct Stable1dParams {
    double alpha = 1.0, c = 1.0, beta = 0.0, tau = 0.0;
};

/// Generalised hyperbolic process given by its small-jump expansion
/// (C1/x^2 + C2/|x| + C3/x) e^{-lambda|x|}, or by a tabulated full density.
struct GhParams {
    double c1 = 1.0, c2 = 0.0, c3 = 0.0, lambda = 1.0;
    std::vector<std::pair<double, double>> table;
};

using FamilyParams =
    std::variant<BrownianParams, NigParams, CauchyParams, StudentTParams, CgmyParams, Stable1dParams, GhParams>;

inline Family family_of(const FamilyParams& p) {
    static constexpr Family map[] = {Family::Brownian, Family::NIG,      Family::Cauchy,   Family::StudentT,
                                     Family::CGMY,     Family::Stable1d, Family::GHNumeric};
    return map[p.index()];
}

// ---------------------------------------------------------------------------
// Triplet

struct LevyTriplet {
    int dimension = 1;
    Eigen::VectorXd drift = Eigen::VectorXd::Zero(1);
    Eigen::MatrixXd diffusion = Eigen::MatrixXd::Zero(1, 1);
    DensityPtr levy_measure;
    Truncation truncation = Truncation::Identity;
};

namespace detail {

inline void require_psd(const Eigen::MatrixXd& m, const std::string& what) {
    require(m.rows() == m.cols(), ErrorCode::InvalidParams, what + " must be square");
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            require(std::isfinite(m(i, j)) && std::abs(m(i, j) - m(j, i)) <= 1e-12, ErrorCode::InvalidParams,
                    what + " must be finite and symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    require(es.eigenvalues().minCoeff() >= -1e-12, ErrorCode::InvalidParams, what + " must be positive semidefinite");
}

}  // namespace detail

inline void validate(const LevyTriplet& t) {
    require(t.dimension >= 1, ErrorCode::InvalidParams, "dimension must be positive");
    require(t.drift.size() == t.dimension, ErrorCode::InvalidParams, "drift length must equal the dimension");
    require(t.drift.allFinite(), ErrorCode::InvalidParams, "drift must be finite");
    require(t.diffusion.rows() == t.dimension, ErrorCode::InvalidParams, "diffusion must be d x d");
    detail::require_psd(t.diffusion, "diffusion matrix");
    if (t.levy_measure) {
        require(t.dimension == 1 && t.levy_measure->dimension() == 1, ErrorCode::NotOneDimensional,
                "Levy densities are supported in dimension 1 only");
        validate_levy_density(*t.levy_measure);
        if (t.truncation == Truncation::Identity)
            require(std::isfinite(large_jump_first_moment(*t.levy_measure)), ErrorCode::InvalidParams,
                    "identity truncation needs \\int_{|x|>=1} |x| F(dx) < inf");
    }
}

// ---------------------------------------------------------------------------
// Symbol

class Symbol {
public:
    using Evaluator = std::function<cplx(std::span<const double>)>;

    Symbol(int dimension, Family family, Evaluator fn, bool closed_form, std::string name)
        : dim_(dimension), family_(family), fn_(std::move(fn)), closed_form_(closed_form), name_(std::move(name)) {
        require(dim_ >= 1, ErrorCode::InvalidParams, "dimension must be positive");
        require(static_cast<bool>(fn_), ErrorCode::InvalidParams, "symbol evaluator is empty");
    }

    cplx operator()(std::span<const double> xi) const {
        require(static_cast<int>(xi.size()) == dim_, ErrorCode::InvalidArgument, "xi has the wrong dimension");
        for (double v : xi) require(std::isfinite(v), ErrorCode::InvalidArgument, "xi must be finite");
        const cplx a = fn_(xi);
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw Error(ErrorCode::EvalOverflow, name_ + " symbol is not representable at the requested point");
        return a;
    }
    cplx operator()(double u) const {
        require(dim_ == 1, ErrorCode::NotOneDimensional, "scalar evaluation needs a one-dimensional symbol");
        return (*this)(std::span<const double>(&u, 1));
    }
    cplx operator()(std::initializer_list<double> xi) const {
        return (*this)(std::span<const double>(xi.begin(), xi.size()));
    }

    int dimension() const { return dim_; }
    Family family() const { return family_; }
    const std::string& name() const { return name_; }
    bool closed_form() const { return closed_form_; }
    const std::optional<FamilyParams>& params() const { return params_; }
    /// Levy density attached to the symbol, if one is known.
    const DensityPtr& density() const { return density_; }
    /// C with |A(xi)| <= C (1+|xi|)^2, fitted on |xi| <= 1e6 at construction.
    double quadratic_bound() const { return quad_bound_; }

    Symbol& with_params(FamilyParams p) {
        params_ = std::move(p);
        return *this;
    }
    Symbol& with_density(DensityPtr d) {
        density_ = std::move(d);
        return *this;
    }
    Symbol& with_quadratic_bound(double c) {
        quad_bound_ = c;
        return *this;
    }

private:
    int dim_;
    Family family_;
    Evaluator fn_;
    bool closed_form_;
    std::string name_;
    std::optional<FamilyParams> params_;
    DensityPtr density_;
    double quad_bound_ = 0.0;
};

inline cplx eval(const Symbol& s, std::span<const double> xi) { return s(xi); }
inline cplx eval(const Symbol& s, double u) { return s(u); }

/// mu_hat_t(xi) = E exp(i<xi, L_t>) = exp(-t A(-xi)).
inline cplx char_fn(const Symbol& s, double t, std::span<const double> xi) {
    require(t > 0.0, ErrorCode::InvalidArgument, "t must be positive");
    std::vector<double> neg(xi.begin(), xi.end());
    for (double& v : neg) v = -v;
    return std::exp(-t * s(std::span<const double>(neg)));
}
inline cplx char_fn(const Symbol& s, double t, double u) { return char_fn(s, t, std::span<const double>(&u, 1)); }

// ---------------------------------------------------------------------------
// Invariant checks

struct InvariantResiduals {
    double hermitian = 0.0;      // max |A(xi) - conj A(-xi)| / (1+|A(xi)|)
    double negative_real = 0.0;  // max (-Re A(xi))^+ / (1+|xi|^2)
    double quadratic = 0.0;      // max |A(xi)| / (1+|xi|)^2
};

inline InvariantResiduals invariant_residuals(const Symbol& s, std::span<const std::vector<double>> points) {
    InvariantResiduals r;
    for (const auto& xi : points) {
        std::vector<double> neg(xi);
        for (double& v : neg) v = -v;
        const cplx a = s(xi), b = s(std::span<const double>(neg));
        const double n = std::sqrt(std::inner_product(xi.begin(), xi.end(), xi.begin(), 0.0));
        r.hermitian = std::max(r.hermitian, std::abs(a - std::conj(b)) / (1.0 + std::abs(a)));
        r.negative_real = std::max(r.negative_real, std::max(0.0, -a.real()) / (1.0 + n * n));
        r.quadratic = std::max(r.quadratic, std::abs(a) / ((1.0 + n) * (1.0 + n)));
    }
    return r;
}

namespace detail {

inline std::vector<double> direction(int d, int k) {
    if (d == 1) return {k % 2 == 0 ? 1.0 : -1.0};
    std::vector<double> e(static_cast<std::size_t>(d), 0.0);
    // golden-angle directions in the first two coordinates, remaining axes cycled in
    const double phi = k * std::numbers::pi * (3.0 - std::sqrt(5.0));
    e[0] = std::cos(phi);
    e[1] = std::sin(phi);
    if (d > 2) {
        const double w = 0.5;
        for (double& v : e) v *= std::sqrt(1.0 - w * w);
        e[static_cast<std::size_t>(2 + k % (d - 2))] = w;
    }
    return e;
}

/// Fixed 64-point sanity grid: radii log-spaced in [1e-2, 1e4].
inline std::vector<std::vector<double>> sanity_grid(int d) {
    std::vector<std::vector<double>> pts;
    for (int k = 0; k < 64; ++k) {
        const double r = std::pow(10.0, -2.0 + 6.0 * k / 63.0);
        auto e = direction(d, k);
        for (double& v : e) v *= r;
        pts.push_back(std::move(e));
    }
    return pts;
}

/// Dense radial grid up to 1e6 for the quadratic-bound constant.
inline std::vector<std::vector<double>> bound_grid(int d, int radii) {
    std::vector<std::vector<double>> pts;
    const int dirs = d == 1 ? 2 : 8;
    for (int j = 0; j < dirs; ++j)
        for (int k = 0; k < radii; ++k) {
            const double r = std::pow(10.0, -3.0 + 9.0 * k / (radii - 1));
            auto e = direction(d, j);
            for (double& v : e) v *= r;
            pts.push_back(std::move(e));
        }
    return pts;
}

/// Freezes the quadratic-bound constant and asserts Hermitian symmetry and
/// Re A >= 0 on the sanity grid.
inline Symbol finalize(Symbol s) {
    const int radii = s.closed_form() ? 181 : 37;
    const auto dense = bound_grid(s.dimension(), radii);
    s.with_quadratic_bound(1.1 * invariant_residuals(s, dense).quadratic);
    const auto sanity = sanity_grid(s.dimension());
    const auto r = invariant_residuals(s, sanity);
    require(r.hermitian <= 1e-10, ErrorCode::InvalidParams,
            s.name() + " symbol violates A(xi) = conj A(-xi) (residual " + std::to_string(r.hermitian) + ")");
    require(r.negative_real <= 1e-10, ErrorCode::InvalidParams,
            s.name() + " symbol has negative real part (residual " + std::to_string(r.negative_real) + ")");
    return s;
}

/// Principal square root through the half-angle formula.
inline cplx half_angle_sqrt(cplx z) {
    const double m = std::abs(z);
    const double re = std::sqrt(0.5 * (m + z.real()));
    const double im = std::copysign(std::sqrt(0.5 * std::max(0.0, m - z.real())), z.imag());
    return {re, im};
}

inline double dot(std::span<const double> a, const Eigen::VectorXd& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b(static_cast<Eigen::Index>(i));
    return s;
}

inline double norm(std::span<const double> a) {
    double s = 0.0;
    for (double v : a) s += v * v;
    return std::sqrt(s);
}

// --- closed forms ----------------------------------------------------------

inline cplx brownian_symbol(const BrownianParams& p, std::span<const double> xi) {
    const Eigen::Map<const Eigen::VectorXd> x(xi.data(), static_cast<Eigen::Index>(xi.size()));
    return {0.5 * x.dot(p.sigma * x), x.dot(p.b)};
}

inline cplx nig_symbol(const NigParams& p, std::span<const double> xi) {
    const auto d = static_cast<Eigen::Index>(xi.size());
    Eigen::VectorXcd z(d);
    for (Eigen::Index j = 0; j < d; ++j) z(j) = cplx(p.beta(j), -xi[static_cast<std::size_t>(j)]);
    const Eigen::VectorXcd dz = p.Delta.cast<cplx>() * z;
    cplx bil = 0.0;  // non-Hermitian <z, Delta z>
    for (Eigen::Index j = 0; j < d; ++j) bil += z(j) * dz(j);
    const double base = std::sqrt(p.alpha * p.alpha - p.beta.dot(p.Delta * p.beta));
    return cplx(0.0, dot(xi, p.mu)) - p.delta * base + p.delta * half_angle_sqrt(p.alpha * p.alpha - bil);
}

inline cplx cauchy_symbol(const CauchyParams& p, std::span<const double> xi) {
    return {p.c * norm(xi), dot(xi, p.gamma)};
}

inline cplx student_t_symbol(const StudentTParams& p, double u) {
    if (u == 0.0) return 0.0;
    const double nu = 0.5 * p.f;
    const double z = p.delta * std::abs(u);
    gsl_sf_result lk;
    silence_gsl();
    const int status = gsl_sf_bessel_lnKnu_e(nu, z, &lk);
    if (status != GSL_SUCCESS || !std::isfinite(lk.val))
        throw Error(ErrorCode::EvalOverflow, "log K_nu evaluation failed at u = " + std::to_string(u));
    const double log_phi = (1.0 - nu) * std::numbers::ln2 - std::lgamma(nu) + nu * std::log(z) + lk.val;
    return {-log_phi, p.mu * u};
}

inline double cgmy_drift(const CgmyParams& p) {
    switch (p.drift) {
        case CgmyDrift::Zero: return 0.0;
        case CgmyDrift::Literal:
            return p.Y > 0.0 && p.Y < 1.0 ? p.Y * (std::pow(p.M, p.Y - 1.0) - std::pow(p.G, p.Y - 1.0)) : 0.0;
        case CgmyDrift::Compensated:
            return p.Y < 1.0 ? p.C * std::tgamma(1.0 - p.Y) * (std::pow(p.M, p.Y - 1.0) - std::pow(p.G, p.Y - 1.0))
                             : 0.0;
    }
    return 0.0;
}

/// log E exp(iu X) for the CGMY jump part compensated with h(x) = x.
inline cplx cgmy_cumulant(const CgmyParams& p, double u) {
    const double C = p.C, G = p.G, M = p.M, Y = p.Y;
    const cplx iu(0.0, u);
    if (Y < 1e-12) {
        return -C * std::log(1.0 - iu / M) - C * std::log(1.0 + iu / G) - C * iu * (1.0 / M - 1.0 / G);
    }
    if (std::abs(Y - 1.0) < 1e-7) {
        return C * ((M - iu) * std::log(1.0 - iu / M) + iu) + C * ((G + iu) * std::log(1.0 + iu / G) - iu);
    }
    // principal branch: Re(M - iu) = M > 0 and Re(G + iu) = G > 0
    const cplx bracket = std::pow(cplx(M, -u), Y) - std::pow(M, Y) +
                         Y * (std::pow(M, Y - 1.0) - std::pow(G, Y - 1.0)) * iu + std::pow(cplx(G, u), Y) -
                         std::pow(G, Y);
    return C * std::tgamma(-Y) * bracket;
}

inline cplx cgmy_symbol(const CgmyParams& p, double b, double u) { return -cgmy_cumulant(p, -u) + cplx(0.0, u * b); }

inline cplx stable_symbol(const Stable1dParams& p, double u) {
    if (u == 0.0) return 0.0;
    const double a = std::abs(u);
    const double sgn = u > 0.0 ? 1.0 : -1.0;
    if (p.alpha == 1.0) return p.c * a * cplx(1.0, -p.beta * (2.0 / std::numbers::pi) * sgn * std::log(a)) + cplx(0.0, p.tau * u);
    const double skew = p.alpha == 2.0 ? 0.0 : p.beta * std::tan(0.5 * std::numbers::pi * p.alpha) * sgn;
    return p.c * std::pow(a, p.alpha) * cplx(1.0, skew) + cplx(0.0, p.tau * u);
}

// --- validation ------------------------------------------------------------

inline void validate(const BrownianParams& p) {
    require(p.sigma.rows() >= 1 && p.b.size() == p.sigma.rows(), ErrorCode::InvalidParams,
            "Brownian sigma must be d x d and b of length d");
    require(p.b.allFinite(), ErrorCode::InvalidParams, "Brownian drift must be finite");
    require_psd(p.sigma, "Brownian sigma");
}

inline void validate(const NigParams& p) {
    const auto d = p.Delta.rows();
    require(d >= 1 && p.beta.size() == d && p.mu.size() == d, ErrorCode::InvalidParams,
            "NIG beta, mu and Delta must share the dimension");
    require(p.alpha > 0.0 && p.delta > 0.0, ErrorCode::InvalidParams, "NIG requires alpha > 0 and delta > 0");
    require(p.beta.allFinite() && p.mu.allFinite(), ErrorCode::InvalidParams, "NIG vectors must be finite");
    require_psd(p.Delta, "NIG Delta");
    Eigen::LLT<Eigen::MatrixXd> llt(p.Delta);
    require(llt.info() == Eigen::Success, ErrorCode::InvalidParams, "NIG Delta must be positive definite");
    require(p.alpha * p.alpha > p.beta.dot(p.Delta * p.beta), ErrorCode::InvalidParams,
            "NIG requires alpha^2 > <beta, Delta beta>");
}

inline void validate(const CauchyParams& p) {
    require(p.c > 0.0 && std::isfinite(p.c), ErrorCode::InvalidParams, "Cauchy requires c > 0");
    require(p.gamma.size() >= 1 && p.gamma.allFinite(), ErrorCode::InvalidParams, "Cauchy gamma must be finite");
}

inline void validate(const StudentTParams& p) {
    require(p.f > 0.0 && std::isfinite(p.f), ErrorCode::InvalidParams, "Student-t requires f > 0");
    require(p.delta > 0.0 && std::isfinite(p.delta), ErrorCode::InvalidParams, "Student-t requires delta > 0");
    require(std::isfinite(p.mu), ErrorCode::InvalidParams, "Student-t requires finite mu");
}

inline void validate(const CgmyParams& p) {
    require(p.C > 0.0 && p.G > 0.0 && p.M > 0.0, ErrorCode::InvalidParams, "CGMY requires C, G, M > 0");
    require(p.Y >= 0.0, ErrorCode::InvalidParams, "CGMY requires Y >= 0");
    require(p.Y < 2.0, ErrorCode::InvalidParams, "CGMY requires Y < 2");
}

inline void validate(const Stable1dParams& p) {
    require(p.alpha > 0.0 && p.alpha <= 2.0, ErrorCode::InvalidParams, "stable law requires alpha in (0,2]");
    require(p.c > 0.0, ErrorCode::InvalidParams, "stable law requires c > 0");
    require(p.beta >= -1.0 && p.beta <= 1.0, ErrorCode::InvalidParams, "stable law requires beta in [-1,1]");
    require(std::isfinite(p.tau), ErrorCode::InvalidParams, "stable law requires finite tau");
}

inline void validate(const GhParams& p) {
    require(p.c1 > 0.0 && p.c2 >= std::abs(p.c3) && p.lambda > 0.0, ErrorCode::InvalidParams,
            "GH expansion requires C1 > 0, C2 >= |C3| and lambda > 0");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Density-backed symbols

/// Symbol of a one-dimensional triplet whose jump part has a Lebesgue density:
/// A(u) = sigma u^2/2 + i u b + A^{f_s}(u) + A^{f_as}(u), b taken w.r.t. h(x) = x.
inline Symbol symbol_from_triplet(const LevyTriplet& t, const QuadOptions& opts = {}) {
    validate(t);
    if (!t.levy_measure) {
        BrownianParams bp{t.diffusion, t.drift};
        const auto fn = [bp](std::span<const double> xi) { return detail::brownian_symbol(bp, xi); };
        return detail::finalize(Symbol(t.dimension, Family::Brownian, fn, true, "brownian").with_params(bp));
    }
    const auto split = std::make_shared<const DensitySplit>(split_symmetric(*t.levy_measure));
    double b = t.drift(0);
    if (t.truncation == Truncation::UnitBall && split->cutoff > 1.0) {
        auto g = [&](double x) { return x * split->antisymmetric(x); };
        const auto r = detail::integrate_half_line(g, 1.0, split->cutoff, 1e-14, 1e-11);
        require(r.ok(), ErrorCode::QuadratureFailure, "large-jump drift correction failed");
        b += 2.0 * r.value;
    }
    const double sigma = t.diffusion(0, 0);
    const auto fn = [split, b, sigma, opts](std::span<const double> xi) {
        const double u = xi[0];
        if (u == 0.0) return cplx(0.0, 0.0);
        const auto a = std::abs(u);
        const auto parts = symbol_parts_from_density(*split, a, opts);
        // A^{f_s} is even and A^{f_as} odd in u; evaluate at |u| so conjugate symmetry is exact
        const double sgn = u > 0.0 ? 1.0 : -1.0;
        return cplx(0.5 * sigma * u * u + parts.symmetric, u * b + sgn * parts.antisymmetric);
    };
    Symbol s(1, Family::FromDensity, fn, false, "from-density:" + t.levy_measure->name());
    s.with_density(t.levy_measure);
    return detail::finalize(std::move(s));
}

// ---------------------------------------------------------------------------
// Constructors

/// Levy density of a catalog family, when it has one in closed form.
inline DensityPtr levy_density_of(const FamilyParams& params) {
    return std::visit(
        [](const auto& p) -> DensityPtr {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, CgmyParams>) {
                return std::make_shared<const LevyDensity>(cgmy_density(p.C, p.G, p.M, p.Y));
            } else if constexpr (std::is_same_v<P, NigParams>) {
                if (p.Delta.rows() != 1) return nullptr;
                return std::make_shared<const LevyDensity>(nig_density(p.alpha, p.beta(0), p.delta));
            } else if constexpr (std::is_same_v<P, CauchyParams>) {
                if (p.gamma.size() != 1) return nullptr;
                return std::make_shared<const LevyDensity>(cauchy_density(p.c));
            } else if constexpr (std::is_same_v<P, GhParams>) {
                if (!p.table.empty())
                    return std::make_shared<const LevyDensity>(tabulated_density(p.table, SingularityHint{1.0, p.c1}));
                return std::make_shared<const LevyDensity>(gh_expansion_density(p.c1, p.c2, p.c3, p.lambda));
            } else {
                return nullptr;
            }
        },
        params);
}

inline Symbol make_symbol(const FamilyParams& params) {
    return std::visit(
        [&](const auto& p) -> Symbol {
            using P = std::decay_t<decltype(p)>;
            detail::validate(p);
            if constexpr (std::is_same_v<P, BrownianParams>) {
                const auto fn = [p](std::span<const double> xi) { return detail::brownian_symbol(p, xi); };
                return detail::finalize(
                    Symbol(static_cast<int>(p.sigma.rows()), Family::Brownian, fn, true, "brownian").with_params(p));
            } else if constexpr (std::is_same_v<P, NigParams>) {
                const auto fn = [p](std::span<const double> xi) { return detail::nig_symbol(p, xi); };
                Symbol s(static_cast<int>(p.Delta.rows()), Family::NIG, fn, true, "nig");
                return detail::finalize(std::move(s.with_params(p).with_density(levy_density_of(p))));
            } else if constexpr (std::is_same_v<P, CauchyParams>) {
                const auto fn = [p](std::span<const double> xi) { return detail::cauchy_symbol(p, xi); };
                Symbol s(static_cast<int>(p.gamma.size()), Family::Cauchy, fn, true, "cauchy");
                return detail::finalize(std::move(s.with_params(p).with_density(levy_density_of(p))));
            } else if constexpr (std::is_same_v<P, StudentTParams>) {
                const auto fn = [p](std::span<const double> xi) { return detail::student_t_symbol(p, xi[0]); };
                return detail::finalize(Symbol(1, Family::StudentT, fn, true, "student-t").with_params(p));
            } else if constexpr (std::is_same_v<P, CgmyParams>) {
                const double b = detail::cgmy_drift(p);
                const auto fn = [p, b](std::span<const double> xi) { return detail::cgmy_symbol(p, b, xi[0]); };
                Symbol s(1, Family::CGMY, fn, true, "cgmy");
                return detail::finalize(std::move(s.with_params(p).with_density(levy_density_of(p))));
            } else if constexpr (std::is_same_v<P, Stable1dParams>) {
                const auto fn = [p](std::span<const double> xi) { return detail::stable_symbol(p, xi[0]); };
                return detail::finalize(Symbol(1, Family::Stable1d, fn, true, "stable").with_params(p));
            } else {
                LevyTriplet t;
                t.levy_measure = levy_density_of(p);
                Symbol s = symbol_from_triplet(t);
                Symbol gh(1, Family::GHNumeric, [s](std::span<const double> xi) { return s(xi); }, false, "gh");
                gh.with_params(p).with_density(t.levy_measure).with_quadratic_bound(s.quadratic_bound());
                return gh;
            }
        },
        params);
}

inline Symbol stable_symbol_1d(const Stable1dParams& p) { return make_symbol(p); }

/// User-supplied symbol, e.g. a semi-stable law without a constructor.
inline Symbol make_custom_symbol(int dimension, Symbol::Evaluator fn, std::string name = "custom") {
    return detail::finalize(Symbol(dimension, Family::Custom, std::move(fn), true, std::move(name)));
}

/// Symbol of the sum of two independent Levy processes.
inline Symbol sum(const Symbol& a, const Symbol& b) {
    require(a.dimension() == b.dimension(), ErrorCode::InvalidArgument, "summands must share the dimension");
    const auto fn = [a, b](std::span<const double> xi) { return a(xi) + b(xi); };
    Symbol s(a.dimension(), Family::Composite, fn, a.closed_form() && b.closed_form(), a.name() + "+" + b.name());
    s.with_quadratic_bound(a.quadratic_bound() + b.quadratic_bound());
    return s;
}

/// k A, the symbol of the time-changed process L_{kt}.
inline Symbol scale(const Symbol& a, double k) {
    require(k > 0.0 && std::isfinite(k), ErrorCode::InvalidArgument, "scale factor must be positive");
    const auto fn = [a, k](std::span<const double> xi) { return k * a(xi); };
    Symbol s(a.dimension(), Family::Composite, fn, a.closed_form(), std::to_string(k) + "*" + a.name());
    s.with_quadratic_bound(k * a.quadratic_bound());
    return s;
}

/// max over the grid of |a A(u) - A(b u) - i<c,u>|.
inline double check_semistable_scaling(const Symbol& s, double a, double b, std::span<const double> c,
                                       std::span<const std::vector<double>> grid) {
    require(!grid.empty(), ErrorCode::InvalidArgument, "scaling grid must be nonempty");
    require(static_cast<int>(c.size()) == s.dimension(), ErrorCode::InvalidArgument, "c has the wrong dimension");
    double worst = 0.0;
    for (const auto& u : grid) {
        std::vector<double> bu(u);
        for (double& v : bu) v *= b;
        double cu = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) cu += c[i] * u[i];
        worst = std::max(worst, std::abs(a * s(u) - s(std::span<const double>(bu)) - cplx(0.0, cu)));
    }
    return worst;
}

}  // namespace levysobolev
