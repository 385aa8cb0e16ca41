#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "levysobolev/levysobolev.hpp"
#include "oracles.hpp"

using namespace levysobolev;

namespace {

std::vector<FamilyParams> catalog() {
    NigParams nig;
    nig.alpha = 2.0;
    nig.beta = Eigen::VectorXd::Constant(1, 0.5);
    NigParams nig2;
    nig2.alpha = 3.0;
    nig2.beta = Eigen::Vector2d(0.5, -0.3);
    nig2.mu = Eigen::Vector2d(0.1, 0.2);
    nig2.Delta = Eigen::Matrix2d{{1.0, 0.2}, {0.2, 1.5}};
    BrownianParams bm2;
    bm2.sigma = Eigen::Matrix2d{{2.0, 0.5}, {0.5, 1.0}};
    bm2.b = Eigen::Vector2d(0.3, -0.1);
    return {BrownianParams{},
            bm2,
            nig,
            nig2,
            CauchyParams{2.0, Eigen::VectorXd::Constant(1, 0.7)},
            StudentTParams{},
            StudentTParams{3.0, 1.5, 0.4},
            CgmyParams{1.0, 2.0, 4.0, 0.5, CgmyDrift::Compensated},
            CgmyParams{1.0, 5.0, 5.0, 1.0, CgmyDrift::Compensated},
            CgmyParams{0.7, 3.0, 6.0, 1.5, CgmyDrift::Compensated},
            CgmyParams{1.0, 5.0, 5.0, 0.0, CgmyDrift::Compensated},
            Stable1dParams{0.7, 1.0, 0.3, 0.0},
            Stable1dParams{1.0, 1.0, 0.5, 0.2},
            Stable1dParams{1.6, 2.0, -0.4, 1.0},
            Stable1dParams{2.0, 1.0, 0.0, 0.0}};
}

std::vector<double> random_point(std::mt19937_64& rng, int d, double r) {
    std::uniform_real_distribution<double> u(-r, r);
    std::vector<double> x(static_cast<std::size_t>(d));
    for (double& v : x) v = u(rng);
    return x;
}

}  // namespace

TEST(MakeSymbol, BrownianIsHalfSquare) {
    const Symbol s = make_symbol(BrownianParams{});
    for (double x : {-3.0, -0.5, 0.0, 1.0, 3.0}) {
        EXPECT_DOUBLE_EQ(s(x).real(), 0.5 * x * x);
        EXPECT_DOUBLE_EQ(s(x).imag(), 0.0);
    }
    EXPECT_EQ(s(3.0), cplx(4.5, 0.0));
}

TEST(MakeSymbol, NigConstraintBoundaryRejected) {
    NigParams p;
    p.alpha = 1.0;
    p.beta = Eigen::Vector2d(2.0, 0.0);
    p.mu = Eigen::Vector2d::Zero();
    p.Delta = Eigen::Matrix2d::Identity();
    try {
        make_symbol(p);
        FAIL() << "expected InvalidParams";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidParams);
    }
    p.beta = Eigen::Vector2d(1.0, 0.0);
    EXPECT_THROW(make_symbol(p), Error);
}

TEST(MakeSymbol, CgmyRequiresYBelowTwo) {
    try {
        make_symbol(CgmyParams{1.0, 5.0, 5.0, 2.3, CgmyDrift::Compensated});
        FAIL() << "expected InvalidParams";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidParams);
        EXPECT_NE(std::string(e.what()).find("Y < 2"), std::string::npos);
    }
    EXPECT_THROW(make_symbol(CgmyParams{1.0, 5.0, 5.0, 2.0, CgmyDrift::Compensated}), Error);
    EXPECT_THROW(make_symbol(CgmyParams{-1.0, 5.0, 5.0, 1.0, CgmyDrift::Compensated}), Error);
}

TEST(MakeSymbol, OtherParameterConstraints) {
    EXPECT_THROW(make_symbol(Stable1dParams{2.5, 1.0, 0.0, 0.0}), Error);
    EXPECT_THROW(make_symbol(Stable1dParams{0.0, 1.0, 0.0, 0.0}), Error);
    EXPECT_THROW(make_symbol(Stable1dParams{1.0, 1.0, 1.5, 0.0}), Error);
    EXPECT_THROW(make_symbol(CauchyParams{0.0, Eigen::VectorXd::Zero(1)}), Error);
    EXPECT_THROW(make_symbol(StudentTParams{-1.0, 1.0, 0.0}), Error);
    BrownianParams b;
    b.sigma = Eigen::Matrix2d{{1.0, 2.0}, {2.0, 1.0}};  // indefinite
    b.b = Eigen::Vector2d::Zero();
    EXPECT_THROW(make_symbol(b), Error);
    b.sigma = Eigen::Matrix2d{{1.0, 0.1}, {0.0, 1.0}};  // not symmetric
    EXPECT_THROW(make_symbol(b), Error);
}

TEST(Eval, CauchyAtTwo) {
    const Symbol s = make_symbol(CauchyParams{});
    EXPECT_EQ(s(2.0), cplx(2.0, 0.0));
}

TEST(Eval, NigSymmetricValue) {
    NigParams p;
    p.alpha = 10.0;
    const Symbol s = make_symbol(p);
    const cplx a = s(1.0);
    EXPECT_NEAR(a.real(), std::sqrt(101.0) - 10.0, 1e-14);
    EXPECT_NEAR(a.real(), 0.04987562, 1e-8);
    EXPECT_NEAR(a.imag(), 0.0, 1e-15);
}

TEST(Eval, NigMatchesStandardCharacteristicFunction) {
    NigParams p;
    p.alpha = 3.0;
    p.beta = Eigen::VectorXd::Constant(1, -1.2);
    p.delta = 0.8;
    p.mu = Eigen::VectorXd::Constant(1, 0.3);
    const Symbol s = make_symbol(p);
    for (double u : {-50.0, -3.0, -0.2, 0.1, 1.0, 7.5, 100.0}) {
        const cplx expect = -oracle::nig_log_cf(3.0, -1.2, 0.8, 0.3, -u);
        EXPECT_LT(std::abs(s(u) - expect), 1e-12 * (1.0 + std::abs(expect))) << u;
    }
}

TEST(Eval, NigTwoDimensionalReducesAlongAxis) {
    // With Delta = I and beta, mu on the first axis only, xi = (u, 0) sees the 1-d law.
    NigParams p2;
    p2.alpha = 2.0;
    p2.beta = Eigen::Vector2d(0.5, 0.0);
    p2.mu = Eigen::Vector2d(0.2, 0.0);
    p2.Delta = Eigen::Matrix2d::Identity();
    const Symbol s2 = make_symbol(p2);
    for (double u : {-4.0, 0.5, 9.0}) {
        const cplx expect = -oracle::nig_log_cf(2.0, 0.5, 1.0, 0.2, -u);
        EXPECT_LT(std::abs(s2({u, 0.0}) - expect), 1e-12);
    }
}

TEST(Eval, StudentTMatchesBesselCharacteristicFunction) {
    for (const auto& p : {StudentTParams{}, StudentTParams{3.0, 1.5, 0.0}, StudentTParams{7.0, 0.5, 0.0}}) {
        const Symbol s = make_symbol(p);
        for (double u : {0.01, 0.3, 1.0, 4.0, 20.0}) {
            const double expect = -std::log(oracle::student_t_cf(p.f, p.delta, u));
            EXPECT_NEAR(s(u).real(), expect, 1e-10 * (1.0 + expect)) << p.f << " " << u;
        }
    }
}

TEST(Eval, StudentTWithOneDegreeIsCauchy) {
    const Symbol s = make_symbol(StudentTParams{1.0, 2.5, 0.0});
    for (double u : {0.1, 1.0, 10.0, 1e3}) EXPECT_NEAR(s(u).real(), 2.5 * u, 1e-9 * (1.0 + u));
}

TEST(Eval, StudentTStaysFiniteFarOut) {
    const Symbol s = make_symbol(StudentTParams{});
    for (double u : {1e3, 1e5, 1e6}) {
        const cplx a = s(u);
        EXPECT_TRUE(std::isfinite(a.real()));
        // |A| grows like delta |u| up to a logarithm
        EXPECT_NEAR(a.real() / (2.0 * u), 1.0, 0.05);
    }
}

TEST(Eval, CgmySymmetricClosedForm) {
    // G = M: A(u) = -2 C Gamma(-Y) ((M^2+u^2)^{Y/2} cos(Y atan(u/M)) - M^Y)
    for (double Y : {0.3, 0.5, 1.2, 1.5, 1.8}) {
        const Symbol s = make_symbol(CgmyParams{1.0, 5.0, 5.0, Y, CgmyDrift::Compensated});
        for (double u : {0.5, 3.0, 10.0, 100.0}) {
            const double expect =
                -2.0 * std::tgamma(-Y) * (std::pow(25.0 + u * u, 0.5 * Y) * std::cos(Y * std::atan(u / 5.0)) - std::pow(5.0, Y));
            EXPECT_NEAR(s(u).real(), expect, 1e-12 * std::abs(expect)) << Y << " " << u;
            EXPECT_NEAR(s(u).imag(), 0.0, 1e-12 * std::abs(expect));
        }
    }
}

TEST(Eval, CgmyMatchesLevyIntegral) {
    // direct quadrature of the Levy-Khintchine integral with the drift \int x F(dx) for Y < 1
    for (const auto& [C, G, M, Y] : std::vector<std::array<double, 4>>{{1, 5, 5, 1.5}, {1, 2, 4, 0.5}, {0.7, 3, 6, 1.5}, {1, 3, 5, 1.0}}) {
        const CgmyParams p{C, G, M, Y, CgmyDrift::Compensated};
        const Symbol s = make_symbol(p);
        auto f = [&](double x) { return oracle::cgmy_f(C, G, M, Y, x); };
        const double reach = 45.0 / std::min(G, M);
        double b = 0.0;
        if (Y < 1.0)
            b = oracle::panels([&](double x) { return x * (f(x) - f(-x)); }, reach, 1.0);
        for (double u : {1.0, 10.0, 60.0}) {
            const cplx expect = oracle::levy_symbol(f, b, u, reach);
            EXPECT_LT(std::abs(s(u) - expect), 1e-7 * std::abs(expect)) << Y << " " << u;
        }
    }
}

TEST(Eval, CgmyTenAgainstQuadratureOracle) {
    const Symbol s = make_symbol(CgmyParams{1.0, 5.0, 5.0, 1.5, CgmyDrift::Compensated});
    auto f = [](double x) { return oracle::cgmy_f(1.0, 5.0, 5.0, 1.5, x); };
    const cplx expect = oracle::levy_symbol(f, 0.0, 10.0, 9.0);
    EXPECT_LT(std::abs(s(10.0) - expect) / std::abs(expect), 1e-7);
}

TEST(Eval, CgmyDriftConventions) {
    const CgmyParams comp{1.0, 2.0, 4.0, 0.5, CgmyDrift::Compensated};
    CgmyParams zero = comp, lit = comp;
    zero.drift = CgmyDrift::Zero;
    lit.drift = CgmyDrift::Literal;
    const Symbol sc = make_symbol(comp), sz = make_symbol(zero), sl = make_symbol(lit);
    const double u = 3.0;
    const double b_comp = std::tgamma(0.5) * (std::pow(4.0, -0.5) - std::pow(2.0, -0.5));
    const double b_lit = 0.5 * (std::pow(4.0, -0.5) - std::pow(2.0, -0.5));
    EXPECT_NEAR((sc(u) - sz(u)).imag(), u * b_comp, 1e-12);
    EXPECT_NEAR((sl(u) - sz(u)).imag(), u * b_lit, 1e-12);
    EXPECT_NEAR((sc(u) - sz(u)).real(), 0.0, 1e-12);
}

TEST(Eval, VarianceGammaIsLogarithmic) {
    const Symbol s = make_symbol(CgmyParams{1.0, 5.0, 5.0, 0.0, CgmyDrift::Compensated});
    for (double u : {1.0, 100.0, 1e5}) EXPECT_NEAR(s(u).real(), 2.0 * std::log(1.0 + u * u / 25.0) / 2.0, 1e-10 * std::log(u + 2));
}

TEST(Eval, RejectsNonFiniteInput) {
    const Symbol s = make_symbol(CauchyParams{});
    EXPECT_THROW(s(std::nan("")), Error);
    EXPECT_THROW(s(HUGE_VAL), Error);
    EXPECT_THROW(s({1.0, 2.0}), Error);
}

TEST(Eval, DeterministicBitForBit) {
    for (const auto& p : catalog()) {
        const Symbol s1 = make_symbol(p), s2 = make_symbol(p);
        std::vector<double> xi(static_cast<std::size_t>(s1.dimension()), 1.2345);
        EXPECT_EQ(s1(xi), s2(xi));
        EXPECT_EQ(s1(xi), s1(xi));
    }
}

TEST(CharFn, CauchyAtTimeTwo) {
    const Symbol s = make_symbol(CauchyParams{});
    EXPECT_NEAR(char_fn(s, 2.0, 1.0).real(), std::exp(-2.0), 1e-15);
    EXPECT_NEAR(char_fn(s, 2.0, 1.0).real(), 0.135335, 1e-6);
}

TEST(CharFn, OneAtOrigin) {
    for (const auto& p : catalog()) {
        const Symbol s = make_symbol(p);
        std::vector<double> zero(static_cast<std::size_t>(s.dimension()), 0.0);
        EXPECT_EQ(char_fn(s, 0.7, zero), cplx(1.0, 0.0)) << to_string(s.family());
    }
}

TEST(CharFn, BrownianGaussian) {
    const Symbol s = make_symbol(BrownianParams{});
    EXPECT_NEAR(char_fn(s, 1.0, 2.0).real(), std::exp(-2.0), 1e-15);
}

TEST(CharFn, DriftGivesMean) {
    // E e^{i xi L_t} for L_t = b t + W_t
    BrownianParams p;
    p.b(0) = 0.3;
    const Symbol s = make_symbol(p);
    const double t = 2.0, xi = 1.5;
    const cplx expect = std::exp(cplx(-0.5 * t * xi * xi, xi * 0.3 * t));
    EXPECT_LT(std::abs(char_fn(s, t, xi) - expect), 1e-15);
}

TEST(CharFn, ModulusAtMostOne) {
    std::mt19937_64 rng(7);
    for (const auto& p : catalog()) {
        const Symbol s = make_symbol(p);
        for (int k = 0; k < 50; ++k) {
            const auto xi = random_point(rng, s.dimension(), 20.0);
            EXPECT_LE(std::abs(char_fn(s, 0.5, xi)), 1.0 + 1e-14);
        }
    }
}

TEST(CharFn, SemigroupProperty) {
    std::mt19937_64 rng(11);
    for (const auto& p : catalog()) {
        const Symbol s = make_symbol(p);
        for (int k = 0; k < 30; ++k) {
            const auto xi = random_point(rng, s.dimension(), 5.0);
            const cplx lhs = char_fn(s, 0.3 + 0.4, xi);
            const cplx rhs = char_fn(s, 0.3, xi) * char_fn(s, 0.4, xi);
            EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::max(std::abs(lhs), 1e-300) + 1e-300);
        }
    }
}

TEST(Invariants, HermitianSymmetryOnRandomPoints) {
    std::mt19937_64 rng(3);
    for (const auto& p : catalog()) {
        const Symbol s = make_symbol(p);
        std::vector<std::vector<double>> pts;
        for (int k = 0; k < 1000; ++k) pts.push_back(random_point(rng, s.dimension(), 50.0));
        const auto r = invariant_residuals(s, pts);
        EXPECT_LE(r.hermitian, 1e-10) << to_string(s.family());
        EXPECT_LE(r.negative_real, 1e-10) << to_string(s.family());
    }
}

TEST(Invariants, QuadraticBoundHolds) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> lr(-3.0, 6.0);
    for (const auto& p : catalog()) {
        const Symbol s = make_symbol(p);
        const double C = s.quadratic_bound();
        EXPECT_GT(C, 0.0);
        for (int k = 0; k < 300; ++k) {
            auto xi = random_point(rng, s.dimension(), 1.0);
            double n = 0.0;
            for (double v : xi) n += v * v;
            const double scale = std::pow(10.0, lr(rng)) / std::sqrt(n);
            for (double& v : xi) v *= scale;
            const double r = std::pow(10.0, 0.0) * std::sqrt(n) * scale;
            EXPECT_LE(std::abs(s(xi)), C * (1.0 + r) * (1.0 + r)) << to_string(s.family());
        }
    }
}

TEST(SemistableScaling, StrictlyStable) {
    const Symbol s = make_symbol(Stable1dParams{0.7, 1.0, 0.0, 0.0});
    const std::vector<std::vector<double>> grid = {{-5.0}, {-0.3}, {0.1}, {1.0}, {2.5}, {40.0}};
    const std::vector<double> c = {0.0};
    EXPECT_LE(check_semistable_scaling(s, 2.0, std::pow(2.0, 1.0 / 0.7), c, grid), 1e-12);
}

TEST(SemistableScaling, BrownianWithDrift) {
    BrownianParams p;
    p.b(0) = 0.3;
    const Symbol s = make_symbol(p);
    const std::vector<std::vector<double>> grid = {{-2.0}, {-0.5}, {0.25}, {1.0}, {3.0}};
    const std::vector<double> c = {0.6};
    EXPECT_LE(check_semistable_scaling(s, 4.0, 2.0, c, grid), 1e-12);
    const std::vector<double> wrong = {0.0};
    EXPECT_GT(check_semistable_scaling(s, 4.0, 2.0, wrong, grid), 0.1);
}

TEST(SemistableScaling, CauchyStrictlyOneStable) {
    const Symbol s = make_symbol(CauchyParams{});
    const std::vector<std::vector<double>> grid = {{-3.0}, {0.2}, {1.0}, {7.0}};
    const std::vector<double> c = {0.0};
    EXPECT_LE(check_semistable_scaling(s, 3.0, 3.0, c, grid), 1e-12);
}

TEST(SemistableScaling, SkewedStableScalesWithoutShift) {
    const Symbol s = make_symbol(Stable1dParams{1.6, 2.0, -0.4, 0.0});
    const std::vector<std::vector<double>> grid = {{-3.0}, {0.2}, {1.0}, {7.0}};
    const std::vector<double> c = {0.0};
    const double b = 1.7;
    EXPECT_LE(check_semistable_scaling(s, std::pow(b, 1.6), b, c, grid), 1e-12 * 50.0);
}

TEST(StableSymbol, OneStableStrict) {
    const Symbol s = stable_symbol_1d({1.0, 2.0, 0.0, 0.5});
    const cplx a = s(3.0);
    EXPECT_NEAR(a.real(), 6.0, 1e-14);
    EXPECT_NEAR(a.imag(), 1.5, 1e-14);
}

TEST(StableSymbol, OneStableLogTerm) {
    const Symbol s = stable_symbol_1d({1.0, 1.0, 1.0, 0.0});
    const double e = std::numbers::e;
    const cplx a = s(e);
    EXPECT_NEAR(a.real(), e, 1e-14);
    EXPECT_NEAR(a.imag(), -e * 2.0 / std::numbers::pi, 1e-14);
}

TEST(StableSymbol, HalfStable) {
    const Symbol s = stable_symbol_1d({0.5, 1.0, 0.0, 0.0});
    EXPECT_EQ(s(4.0), cplx(2.0, 0.0));
    EXPECT_EQ(s(0.0), cplx(0.0, 0.0));
}

TEST(Combinators, SumAndScale) {
    const Symbol a = make_symbol(BrownianParams{});
    const Symbol b = make_symbol(CauchyParams{});
    const Symbol s = sum(a, b);
    const Symbol k = scale(b, 2.5);
    for (double u : {-2.0, 0.3, 10.0}) {
        EXPECT_EQ(s(u), a(u) + b(u));
        EXPECT_EQ(k(u), 2.5 * b(u));
    }
    EXPECT_THROW(sum(a, make_symbol(NigParams{3.0, Eigen::Vector2d::Zero(), 1.0, Eigen::Vector2d::Zero(),
                                              Eigen::Matrix2d::Identity()})),
                 Error);
}

TEST(Triplet, CompoundPoissonGaussianJumps) {
    // F(dx) = 2 e^{-x^2} dx: A(u) = 2 sqrt(pi) (1 - e^{-u^2/4})
    LevyTriplet t;
    t.levy_measure = std::make_shared<const LevyDensity>(gaussian_jump_density(2.0));
    const Symbol s = symbol_from_triplet(t);
    for (double u : {0.1, 1.0, 3.0, 20.0}) {
        EXPECT_NEAR(s(u).real(), 2.0 * std::sqrt(std::numbers::pi) * (1.0 - std::exp(-0.25 * u * u)), 1e-8) << u;
        EXPECT_NEAR(s(u).imag(), 0.0, 1e-10);
    }
}

TEST(Triplet, DiffusionAndDriftOnly) {
    LevyTriplet t;
    t.diffusion(0, 0) = 2.0;
    t.drift(0) = -0.4;
    const Symbol s = symbol_from_triplet(t);
    EXPECT_EQ(s.family(), Family::Brownian);
    EXPECT_NEAR(s(3.0).real(), 9.0, 1e-14);
    EXPECT_NEAR(s(3.0).imag(), -1.2, 1e-14);
}

TEST(Triplet, UnitBallTruncationShiftsDrift) {
    // For an asymmetric density the two truncations differ by i u \int_{|x|>=1} x F(dx).
    auto dens = std::make_shared<const LevyDensity>(cgmy_density(1.0, 2.0, 4.0, 1.5));
    LevyTriplet ti, tu;
    ti.levy_measure = tu.levy_measure = dens;
    tu.truncation = Truncation::UnitBall;
    const Symbol si = symbol_from_triplet(ti), su = symbol_from_triplet(tu);
    auto f = [](double x) { return oracle::cgmy_f(1.0, 2.0, 4.0, 1.5, x); };
    const double big = oracle::panels([&](double x) { return x * (f(x) - f(-x)); }, 30.0, 1.0) -
                       oracle::tanh_sinh([&](double x) { return x * (f(x) - f(-x)); }, 0.0, 1.0);
    const double u = 2.0;
    EXPECT_NEAR((su(u) - si(u)).imag(), u * big, 1e-7);
}

TEST(Triplet, ValidationRejectsBadInput) {
    LevyTriplet t;
    t.diffusion(0, 0) = -1.0;
    EXPECT_THROW(validate(t), Error);
    LevyTriplet w;
    w.dimension = 2;
    EXPECT_THROW(validate(w), Error);
    // identity truncation needs a finite first moment of the large jumps
    LevyTriplet heavy;
    heavy.levy_measure = std::make_shared<const LevyDensity>(cauchy_density(1.0));
    EXPECT_THROW(validate(heavy), Error);
    heavy.truncation = Truncation::UnitBall;
    EXPECT_NO_THROW(validate(heavy));
}

TEST(Triplet, DensityMatchesClosedForm) {
    NigParams p;
    p.alpha = 2.0;
    p.beta = Eigen::VectorXd::Constant(1, 0.5);
    const Symbol closed = make_symbol(p);
    LevyTriplet t;
    t.levy_measure = levy_density_of(p);
    // the NIG law has mean delta beta / gamma, so drift is that mean
    t.drift(0) = 0.5 / std::sqrt(4.0 - 0.25);
    const Symbol quad = symbol_from_triplet(t);
    for (double u : {0.5, 5.0, 50.0}) EXPECT_LT(std::abs(quad(u) - closed(u)), 1e-6 * std::abs(closed(u))) << u;
}

TEST(ParamsRecord, RoundTripEveryFamily) {
    for (const auto& p : catalog()) {
        const FlatRecord r = to_record(p);
        std::istringstream in(r.to_text());
        const FlatRecord back = FlatRecord::parse(in);
        const Symbol a = make_symbol(p), b = make_symbol(from_record(back));
        EXPECT_EQ(a.family(), b.family());
        std::vector<double> xi(static_cast<std::size_t>(a.dimension()), -2.75);
        EXPECT_EQ(a(xi), b(xi)) << r.to_text();
        EXPECT_EQ(back.values(), r.values());
    }
}

TEST(ParamsRecord, ParsesCommentsAndVectors) {
    std::istringstream in("# header\nfamily = nig  # inline\nalpha=3\n beta = 0.5, -0.25 \ndelta = 1\nDelta = 1,0,0,2\n\n");
    const FlatRecord r = FlatRecord::parse(in);
    const auto p = std::get<NigParams>(from_record(r));
    EXPECT_EQ(p.beta.size(), 2);
    EXPECT_EQ(p.beta(1), -0.25);
    EXPECT_EQ(p.Delta(1, 1), 2.0);
    EXPECT_EQ(p.mu.size(), 2);
    EXPECT_TRUE(r.unused().empty());
}

TEST(ParamsRecord, ErrorsAreConfigErrors) {
    std::istringstream bad("family = cgmy\nC = one\n");
    const FlatRecord r = FlatRecord::parse(bad);
    try {
        from_record(r);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ConfigError);
    }
    std::istringstream nokey("just text\n");
    EXPECT_THROW(FlatRecord::parse(nokey), Error);
    std::istringstream dup("a = 1\na = 2\n");
    EXPECT_THROW(FlatRecord::parse(dup), Error);
    std::istringstream unknown("family = weird\n");
    try {
        from_record(FlatRecord::parse(unknown));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownFamily);
    }
}
