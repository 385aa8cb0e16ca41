// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "levysobolev/levysobolev.hpp"

using namespace levysobolev;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [fail: " << what << "]";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Symbol cgmy(double Y) { return make_symbol(CgmyParams{1.0, 5.0, 5.0, Y, CgmyDrift::Compensated}); }

NigParams nig(double alpha, double beta) {
    NigParams p;
    p.alpha = alpha;
    p.beta = Eigen::VectorXd::Constant(1, beta);
    return p;
}

struct Member {
    std::string label;
    FamilyParams params;
};

std::vector<Member> index_catalog() {
    std::vector<Member> m = {{"brownian", BrownianParams{}},
                             {"nig", nig(2.0, 0.5)},
                             {"cauchy", CauchyParams{}},
                             {"student-t", StudentTParams{}}};
    for (double Y : {0.5, 1.0, 1.2, 1.5, 1.8})
        m.push_back({"cgmy Y=" + std::to_string(Y).substr(0, 3), CgmyParams{1.0, 5.0, 5.0, Y, CgmyDrift::Compensated}});
    for (double a : {0.3, 0.7, 1.0, 1.6}) m.push_back({"stable a=" + std::to_string(a).substr(0, 3), Stable1dParams{a, 1.0, 0.0, 0.0}});
    return m;
}

// 1. fitted index within 0.05 of the known value, < 5 s per family
Outcome criterion1() {
    Outcome o;
    double worst = 0.0, slowest = 0.0;
    for (const auto& m : index_catalog()) {
        const auto t0 = std::chrono::steady_clock::now();
        const double expected = *analytic_index(m.params);
        const auto rep = sobolev_index(make_symbol(m.params));
        const double dt = seconds_since(t0);
        slowest = std::max(slowest, dt);
        if (!rep.sobolev_index) {
            o.check(false, m.label + " no index: " + rep.diagnostics.reason);
            continue;
        }
        const double err = std::abs(*rep.sobolev_index - expected);
        worst = std::max(worst, err);
        o.check(err <= 0.05, m.label + " index " + std::to_string(*rep.sobolev_index));
        o.check(dt < 5.0, m.label + " took " + std::to_string(dt) + " s");
    }
    o.detail << " max |fit - known| = " << worst << ", slowest family " << slowest << " s";
    return o;
}

// 2. no index for VG and non-strict 1-stable at tol 0.05 and 0.2
Outcome criterion2() {
    Outcome o;
    const std::vector<std::pair<std::string, Symbol>> controls = {
        {"vg", cgmy(0.0)}, {"stable a=1 beta=0.5", make_symbol(Stable1dParams{1.0, 1.0, 0.5, 0.0})}};
    for (const auto& [label, s] : controls)
        for (double tol : {0.05, 0.2}) {
            const auto rep = sobolev_index(s, {}, tol);
            o.check(!rep.sobolev_index.has_value(), label + " reported an index at tol " + std::to_string(tol));
            if (!rep.sobolev_index) o.detail << " " << label << "@" << tol << ": " << rep.diagnostics.reason << ";";
        }
    return o;
}

// 3. beta >= gamma - 0.05 and beta >= index - 0.05 for CGMY Y = 0.3..1.8
Outcome criterion3() {
    Outcome o;
    double min_bg = 1e9, min_bi = 1e9;
    for (int k = 3; k <= 18; ++k) {
        const double Y = 0.1 * k;
        const Symbol s = cgmy(Y);
        IndexReport rep = sobolev_index(s);
        attach_jump_indices(rep, s);
        const std::string tag = "Y=" + std::to_string(Y).substr(0, 3);
        if (!rep.sobolev_index) {
            o.check(false, tag + " no index: " + rep.diagnostics.reason);
            continue;
        }
        cross_check(rep);
        o.check(rep.beta_ge_gamma.pass, tag + " beta < gamma - 0.05");
        o.check(rep.beta_ge_index.evaluated && rep.beta_ge_index.pass, tag + " beta < index - 0.05");
        min_bg = std::min(min_bg, rep.beta_ge_gamma.slack);
        min_bi = std::min(min_bi, rep.beta_ge_index.slack);
    }
    o.detail << " min slack beta-gamma " << min_bg << ", beta-index " << min_bi;
    return o;
}

// 4. continuity and Garding pass for catalog members, VG fails Garding for alpha >= 0.2
Outcome criterion4() {
    Outcome o;
    const FrequencyGrid grid(1, 4096, 2048.0);
    std::vector<Member> members = index_catalog();
    members.push_back({"gh", GhParams{}});
    double min_c2 = 1e9;
    for (const auto& m : members) {
        const double alpha = *analytic_index(m.params);
        const auto rep = verify_form_inequalities(make_symbol(m.params), alpha, 500, grid, 0);
        o.check(rep.continuity_pass, m.label + " continuity");
        o.check(rep.garding_pass && rep.c2 > 0.0, m.label + " garding: " + rep.note);
        min_c2 = std::min(min_c2, rep.c2);
    }
    const FrequencyGrid wide(1, 1 << 18, static_cast<double>(1 << 17));
    const Symbol vg = cgmy(0.0);
    int vg_fails = 0;
    for (double alpha : {0.2, 0.5, 1.0, 1.5, 2.0}) {
        const auto rep = verify_form_inequalities(vg, alpha, 500, wide, 0);
        o.check(!rep.garding_pass, "vg passed garding at alpha " + std::to_string(alpha));
        vg_fails += rep.garding_pass ? 0 : 1;
    }
    o.detail << " " << members.size() << " members, min c2 " << min_c2 << "; vg garding failures " << vg_fails << "/5";
    return o;
}

// 5. heat kernel, Cauchy density, semigroup, scheme orders; < 30 s total
Outcome criterion5() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    {
        const FrequencyGrid g(1, 4096, 64.0);
        std::vector<std::vector<double>> x;
        for (int k = -80; k <= 80; ++k) x.push_back({0.1 * k});
        const auto v = conditional_expectation(make_symbol(BrownianParams{}), gaussian_payoff(g), 1.0, x);
        double err = 0.0;
        for (std::size_t k = 0; k < x.size(); ++k)
            err = std::max(err, std::abs(v[k] - std::exp(-x[k][0] * x[k][0] / 4.0) / std::sqrt(2.0)));
        o.check(err < 1e-6, "heat kernel error " + std::to_string(err));
        o.detail << " (a) Linf " << err << ";";
    }
    {
        const FrequencyGrid g(1, 1 << 15, 40.0);
        const double p0 = density(make_symbol(CauchyParams{}), 1.0, std::vector<std::vector<double>>{{0.0}}, g)[0];
        o.check(std::abs(p0 - 1.0 / pi) < 1e-6, "cauchy p(0) = " + std::to_string(p0));
        o.detail << " (b) |p(0) - 1/pi| " << std::abs(p0 - 1.0 / pi) << ";";
    }
    {
        const FrequencyGrid g(1, 1024, 40.0);
        double worst = 0.0;
        for (const Symbol& s : {make_symbol(BrownianParams{}), cgmy(1.5), make_symbol(CauchyParams{}), make_symbol(nig(2.0, 0.5))}) {
            const auto g0 = gaussian_payoff(g);
            const auto a = evolve(s, evolve(s, g0, {}, 0.4, 4, Scheme::Exact).fields.back(), {}, 0.7, 7, Scheme::Exact);
            const auto b = evolve(s, g0, {}, 1.1, 1, Scheme::Exact);
            for (std::size_t i = 0; i < g.size(); ++i)
                worst = std::max(worst, std::abs(a.fields.back().coeffs[i] - b.fields.back().coeffs[i]));
        }
        o.check(worst <= 1e-12, "semigroup defect " + std::to_string(worst));
        o.detail << " (c) semigroup " << worst << ";";
    }
    {
        const FrequencyGrid g(1, 256, 16.0);
        const Symbol s = cgmy(1.5);
        const auto g0 = gaussian_payoff(g);
        const auto exact = evolve(s, g0, {}, 0.5, 1, Scheme::Exact).fields.back();
        auto err = [&](Scheme sc, int K) {
            const auto u = evolve(s, g0, {}, 0.5, K, sc, false).fields.back();
            double acc = 0.0;
            for (std::size_t i = 0; i < g.size(); ++i) acc += std::norm(u.coeffs[i] - exact.coeffs[i]);
            return std::sqrt(acc * g.cell());
        };
        const double ie = std::log2(err(Scheme::ImplicitEuler, 40) / err(Scheme::ImplicitEuler, 80));
        const double cn = std::log2(err(Scheme::CrankNicolson, 40) / err(Scheme::CrankNicolson, 80));
        o.check(std::abs(ie - 1.0) <= 0.1, "implicit Euler order " + std::to_string(ie));
        o.check(std::abs(cn - 2.0) <= 0.1, "Crank-Nicolson order " + std::to_string(cn));
        o.detail << " (d) orders IE " << ie << ", CN " << cn << ";";
    }
    const double dt = seconds_since(t0);
    o.check(dt < 30.0, "runtime " + std::to_string(dt) + " s");
    return o;
}

// 6. closed form vs density quadrature, 1e-6 relative on |u| <= 100
Outcome criterion6() {
    Outcome o;
    std::vector<double> us;
    for (double u : {0.05, 0.3, 1.0, 2.5, 7.0, 15.0, 33.0, 64.0, 100.0}) {
        us.push_back(u);
        us.push_back(-u);
    }
    double worst = 0.0;
    auto compare = [&](const std::string& label, const Symbol& closed, const LevyDensity& dens, double drift) {
        const DensitySplit split = split_symmetric(dens);
        for (double u : us) {
            const auto parts = symbol_parts_from_density(split, std::abs(u));
            const double sg = u > 0.0 ? 1.0 : -1.0;
            const cplx quad(parts.symmetric, u * drift + sg * parts.antisymmetric);
            const cplx ref = closed(u);
            const double rel = std::abs(quad - ref) / std::abs(ref);
            worst = std::max(worst, rel);
            o.check(rel <= 1e-6, label + " u=" + std::to_string(u) + " rel " + std::to_string(rel));
        }
    };
    for (const auto& [C, G, M, Y] : std::vector<std::array<double, 4>>{
             {1, 5, 5, 0.5}, {1, 5, 5, 1.5}, {1, 2, 4, 0.5}, {0.7, 3, 6, 1.2}, {1, 5, 5, 1.8}, {1, 2, 8, 0.3}}) {
        // compensated drift equals the mean of the jump part for finite variation
        const double b = Y < 1.0 ? C * std::tgamma(1.0 - Y) * (std::pow(M, Y - 1.0) - std::pow(G, Y - 1.0)) : 0.0;
        compare("cgmy Y=" + std::to_string(Y), make_symbol(CgmyParams{C, G, M, Y, CgmyDrift::Compensated}), cgmy_density(C, G, M, Y), b);
    }
    for (const auto& [a, beta] : std::vector<std::pair<double, double>>{{2.0, 0.5}, {10.0, 3.0}, {10.0, 0.0}, {1.0, -0.6}}) {
        const double b = beta / std::sqrt(a * a - beta * beta);
        compare("nig a=" + std::to_string(a), make_symbol(nig(a, beta)), nig_density(a, beta, 1.0), b);
    }
    o.detail << " max relative deviation " << worst << " over " << us.size() << " points x 10 laws";
    return o;
}

// 7. moments M_0..M_8 finite with certified tails; densities integrate to 1
Outcome criterion7() {
    Outcome o;
    const std::vector<std::pair<std::string, Symbol>> laws = {
        {"nig(10,0)", make_symbol(nig(10.0, 0.0))}, {"nig(2,0.5)", make_symbol(nig(2.0, 0.5))}, {"cgmy 1.5", cgmy(1.5)}};
    for (const auto& [label, s] : laws) {
        const auto m = smoothness_moments(s, 1.0, 8);
        bool ok = m.moments.size() == 9;
        for (std::size_t n = 0; ok && n < 9; ++n)
            ok = std::isfinite(m.moments[n]) && m.moments[n] > 0.0 && m.tails[n] <= 1e-8 * m.moments[n];
        o.check(ok, label + " moments");
        o.detail << " " << label << " M8=" << m.moments[8] << " R=" << m.cutoff << ";";
    }
    const FrequencyGrid g(1, 1 << 15, 40.0);
    for (const auto& [label, s] : laws) {
        std::vector<std::vector<double>> x;
        const int n = 6001;
        for (int k = 0; k < n; ++k) x.push_back({-30.0 + 60.0 * k / (n - 1)});
        const auto p = density(s, 1.0, x, g);
        double mass = 0.0, low = 0.0;
        for (int k = 0; k < n; ++k) {
            const double w = (k == 0 || k == n - 1) ? 0.5 : 1.0;
            mass += w * p[static_cast<std::size_t>(k)];
            low = std::min(low, p[static_cast<std::size_t>(k)]);
        }
        mass *= 60.0 / (n - 1);
        o.check(std::abs(mass - 1.0) <= 1e-4, label + " mass " + std::to_string(mass));
        o.check(low >= -1e-6, label + " negative density " + std::to_string(low));
        o.detail << " " << label << " mass-1=" << mass - 1.0 << ";";
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"index catalog recovery", criterion1},  {"negative controls", criterion2},
        {"index inequalities", criterion3},      {"bilinear form properties", criterion4},
        {"solver correctness", criterion5},      {"closed form vs quadrature", criterion6},
        {"smoothness and density mass", criterion7}};
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        const double dt = seconds_since(t0);
        failures += o.pass ? 0 : 1;
        std::printf("criterion %zu %-28s %s (%.2f s)%s\n", k + 1, criteria[k].first.c_str(), o.pass ? "PASS" : "FAIL", dt,
                    o.detail.str().c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
