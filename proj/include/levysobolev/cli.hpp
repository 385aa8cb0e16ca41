#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "levysobolev/detail/format.hpp"
#include "levysobolev/index_lab.hpp"
#include "levysobolev/levy_measure.hpp"
#include "levysobolev/params_io.hpp"
#include "levysobolev/report_json.hpp"
#include "levysobolev/spectral.hpp"
#include "levysobolev/symbol.hpp"

namespace levysobolev::cli {

namespace fs = std::filesystem;

inline const std::vector<std::string>& tasks() {
    static const std::vector<std::string> t = {"symbol-eval", "index",   "inequalities", "evolve",
                                               "price",       "density", "catalog"};
    return t;
}

enum Exit : int { Ok = 0, NumericalFailure = 1, ConfigFailure = 2 };

inline int exit_code(ErrorCode c) {
    switch (c) {
        case ErrorCode::ConfigError:
        case ErrorCode::InvalidParams:
        case ErrorCode::InvalidArgument:
        case ErrorCode::UnknownFamily:
        case ErrorCode::NotOneDimensional: return ConfigFailure;
        default: return NumericalFailure;
    }
}

/// Options shared by the tasks; every entry is echoed into output headers.
struct Defaults {
    std::vector<std::pair<std::string, std::string>> entries;

    static Defaults table() {
        using detail::format_double;
        Defaults d;
        auto add = [&](const char* k, double v) { d.entries.emplace_back(k, format_double(v)); };
        add("grid.r_min", defaults::radial_min);
        add("grid.r_max", defaults::radial_max);
        add("grid.points_per_decade", defaults::points_per_decade);
        add("grid.directions_multid", defaults::directions_multid);
        add("index.tol", defaults::index_tol);
        add("index.subpolynomial_slope", defaults::subpolynomial_slope);
        add("index.fit_window_decades", defaults::fit_window_decades);
        add("quad.inner_epsilon", defaults::inner_epsilon);
        add("quad.abs_tol_scale", defaults::quad_abs_tol_scale);
        add("quad.limit", defaults::quad_limit);
        add("bg.fit_lo", defaults::bg_fit_lo);
        add("bg.fit_hi", defaults::bg_fit_hi);
        add("gamma.r_lo", defaults::gamma_r_lo);
        add("gamma.r_hi", defaults::gamma_r_hi);
        add("fit.min_r_squared", defaults::min_r_squared);
        add("moments.tail_rel_tol", defaults::tail_rel_tol);
        add("inversion.tail_tol", defaults::inversion_tail_tol);
        add("forms.trials", 500);
        add("forms.modes", 4096);
        add("forms.cutoff", 2048);
        add("evolve.modes", 256);
        add("evolve.cutoff", 16);
        add("price.modes", 4096);
        add("price.cutoff", 64);
        add("density.modes", 32768);
        add("density.cutoff", 40);
        return d;
    }
};

struct RunConfig {
    std::string task;
    fs::path config_path;
    fs::path out_dir = ".";
    std::uint64_t seed = 0;
    FlatRecord record;
};

/// A finished output file, written only once the whole task succeeded.
struct Output {
    std::string name;
    std::string content;
};

namespace detail {

using levysobolev::detail::format_double;

class Csv {
public:
    explicit Csv(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    void row(const std::vector<double>& v) {
        std::string line;
        for (std::size_t i = 0; i < v.size(); ++i) line += (i ? "," : "") + format_double(v[i]);
        rows_.push_back(std::move(line));
    }
    void row(const std::vector<std::string>& v) {
        std::string line;
        for (std::size_t i = 0; i < v.size(); ++i) line += (i ? "," : "") + v[i];
        rows_.push_back(std::move(line));
    }
    bool empty() const { return rows_.empty(); }

    std::string render(const std::string& header) const {
        std::string out = header;
        for (std::size_t i = 0; i < columns_.size(); ++i) out += (i ? "," : "") + columns_[i];
        out += "\n";
        for (const auto& r : rows_) out += r + "\n";
        return out;
    }

private:
    std::vector<std::string> columns_;
    std::vector<std::string> rows_;
};

inline std::string csv_header(const RunConfig& cfg) {
    std::string h = "# levysobolev " + cfg.task + " seed=" + std::to_string(cfg.seed) + "\n";
    for (const auto& [k, v] : Defaults::table().entries) h += "# default " + k + " = " + v + "\n";
    for (const auto& [k, v] : cfg.record.values()) h += "# config " + k + " = " + v + "\n";
    return h;
}

inline json json_header(const RunConfig& cfg) {
    json d = json::object();
    for (const auto& [k, v] : Defaults::table().entries) d[k] = v;
    json c = json::object();
    for (const auto& [k, v] : cfg.record.values()) c[k] = v;
    return {{"task", cfg.task}, {"seed", cfg.seed}, {"defaults", d}, {"config", c}};
}

inline Output json_output(const RunConfig& cfg, const std::string& name, const json& body) {
    json j = json_header(cfg);
    j["result"] = body;
    return {name, j.dump(2) + "\n"};
}

inline Output csv_output(const RunConfig& cfg, const std::string& name, const Csv& csv) {
    require(!csv.empty(), ErrorCode::IoError, name + ": empty result");
    return {name, csv.render(csv_header(cfg))};
}

/// Writes through a temporary file and a rename so readers never see a partial file.
inline void write_atomic(const fs::path& path, const std::string& content) {
    const fs::path tmp = path.string() + ".part";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        require(static_cast<bool>(out), ErrorCode::IoError, "cannot open '" + tmp.string() + "' for writing");
        out << content;
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw Error(ErrorCode::IoError, "write to '" + tmp.string() + "' failed");
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Error(ErrorCode::IoError, "cannot move output into '" + path.string() + "'");
    }
}

/// Runs one pipeline stage; errors are re-raised with the stage name and a
/// one-line status goes to the log.
template <class F>
auto stage(std::ostream& log, const std::string& task, const std::string& name, F&& f) {
    try {
        if constexpr (std::is_void_v<decltype(f())>) {
            f();
            log << "levysobolev " << task << ": " << name << " ok\n";
        } else {
            auto r = f();
            log << "levysobolev " << task << ": " << name << " ok\n";
            return r;
        }
    } catch (const Error& e) {
        log << "levysobolev " << task << ": " << name << " failed\n";
        std::string msg = e.what();
        const std::string prefix = std::string(to_string(e.code())) + ": ";
        if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
        throw Error(e.code(), name + ": " + msg);
    }
}

inline void reject_unused(const FlatRecord& r) {
    const auto extra = r.unused();
    if (extra.empty()) return;
    std::string msg = "unknown key(s):";
    for (const auto& k : extra) msg += " " + k;
    throw Error(ErrorCode::ConfigError, msg);
}

inline std::vector<double> x_points(const FlatRecord& r, double lo, double hi, long long count) {
    if (r.has("x")) return r.get_vector("x");
    lo = r.get_double("x.min", lo);
    hi = r.get_double("x.max", hi);
    count = r.get_int("x.count", count);
    require(count >= 0, ErrorCode::ConfigError, "x.count must be nonnegative");
    require(hi >= lo, ErrorCode::ConfigError, "x.max must be >= x.min");
    std::vector<double> x;
    for (long long i = 0; i < count; ++i) x.push_back(count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (count - 1));
    return x;
}

inline FrequencyGrid frequency_grid(const FlatRecord& r, int d, long long modes, double cutoff) {
    return FrequencyGrid(d, static_cast<int>(r.get_int("grid.modes", modes)), r.get_double("grid.cutoff", cutoff));
}

inline GridSpec index_grid(const FlatRecord& r) {
    GridSpec g;
    g.r_min = r.get_double("grid.r_min", g.r_min);
    g.r_max = r.get_double("grid.r_max", g.r_max);
    g.points_per_decade = static_cast<int>(r.get_int("grid.points_per_decade", g.points_per_decade));
    g.directions = static_cast<int>(r.get_int("grid.directions", g.directions));
    g.validate();
    return g;
}

inline SpectralField payoff(const FlatRecord& r, const FrequencyGrid& g) {
    const std::string kind = r.get_string("payoff", "gaussian");
    if (kind == "gaussian") {
        const double w = r.get_double("payoff.width", 1.0);
        const double m = r.get_double("payoff.center", 0.0);
        std::vector<double> center(static_cast<std::size_t>(g.dimension()), 0.0);
        center[0] = m;
        return m == 0.0 ? gaussian_payoff(g, w) : gaussian_payoff(g, w, center);
    }
    if (kind == "hermite") return hermite_payoff(g, static_cast<int>(r.get_int("payoff.order", 2)));
    throw Error(ErrorCode::ConfigError, "payoff must be gaussian or hermite");
}

inline std::vector<std::vector<double>> embed(const std::vector<double>& x, int d) {
    std::vector<std::vector<double>> pts;
    for (double v : x) {
        std::vector<double> p(static_cast<std::size_t>(d), 0.0);
        p[0] = v;
        pts.push_back(std::move(p));
    }
    return pts;
}

inline double trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
    double acc = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) acc += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
    return acc;
}

inline double log_or_nan(double v) { return v > 0.0 ? std::log(v) : std::numeric_limits<double>::quiet_NaN(); }

// ---------------------------------------------------------------------------
// Tasks

inline std::vector<Output> task_symbol_eval(const RunConfig& cfg, const Symbol& s, std::ostream& log) {
    const auto& r = cfg.record;
    const auto u = r.get_vector("u", {-100.0, -10.0, -1.0, 0.0, 1.0, 10.0, 100.0});
    std::vector<double> dir = r.get_vector("direction", std::vector<double>(static_cast<std::size_t>(s.dimension()), 0.0));
    if (!r.has("direction")) dir[0] = 1.0;
    require(static_cast<int>(dir.size()) == s.dimension(), ErrorCode::ConfigError, "direction has the wrong length");
    reject_unused(r);

    Csv csv({"u", "re", "im"});
    stage(log, cfg.task, "evaluate", [&] {
        for (double v : u) {
            std::vector<double> xi(dir);
            for (double& c : xi) c *= v;
            const cplx a = s(std::span<const double>(xi));
            csv.row(std::vector<double>{v, a.real(), a.imag()});
        }
    });
    const auto inv = stage(log, cfg.task, "invariants",
                           [&] { return invariant_residuals(s, levysobolev::detail::sanity_grid(s.dimension())); });
    const json body = {{"symbol", s.name()},
                       {"family", to_string(s.family())},
                       {"dimension", s.dimension()},
                       {"quadratic_bound", levysobolev::detail::num(s.quadratic_bound())},
                       {"invariants", {{"hermitian", inv.hermitian}, {"negative_real", inv.negative_real}}}};
    return {csv_output(cfg, "symbol-eval.csv", csv), json_output(cfg, "symbol-eval.json", body)};
}

inline std::vector<Output> task_index(const RunConfig& cfg, const Symbol& s, std::ostream& log) {
    const auto& r = cfg.record;
    const GridSpec grid = index_grid(r);
    const double tol = r.get_double("tol", defaults::index_tol);
    const bool jumps = r.get_bool("jump_indices", true);
    const bool moments = r.get_bool("moments", false);
    const double mt = r.get_double("moments.t", 1.0);
    const int mn = static_cast<int>(r.get_int("moments.n_max", 8));
    reject_unused(r);

    IndexReport rep = stage(log, cfg.task, "sobolev_index", [&] { return sobolev_index(s, grid, tol); });
    if (jumps && (s.density() || s.family() == Family::Brownian))
        stage(log, cfg.task, "jump_indices", [&] { attach_jump_indices(rep, s); });
    if (rep.beta && rep.gamma && rep.sobolev_index) stage(log, cfg.task, "cross_check", [&] { cross_check(rep); });

    json body = {{"report", to_json(rep)}};
    body["analytic_index"] = s.params() ? levysobolev::detail::opt(analytic_index(*s.params())) : json(nullptr);
    if (moments)
        body["moments"] = to_json(stage(log, cfg.task, "smoothness_moments", [&] { return smoothness_moments(s, mt, mn, grid); }));

    Csv csv({"log_abs_xi", "log_abs_A", "log_re_A"});
    stage(log, cfg.task, "plot_data", [&] {
        const auto dir = grid.unit_directions(s.dimension()).front();
        for (double rad : grid.radii()) {
            std::vector<double> xi(dir);
            for (double& c : xi) c *= rad;
            const cplx a = s(std::span<const double>(xi));
            csv.row(std::vector<double>{std::log(rad), log_or_nan(std::abs(a)), log_or_nan(a.real())});
        }
    });
    return {json_output(cfg, "index.json", body), csv_output(cfg, "index.csv", csv)};
}

inline std::vector<Output> task_inequalities(const RunConfig& cfg, const Symbol& s, std::ostream& log) {
    const auto& r = cfg.record;
    const FrequencyGrid g = frequency_grid(r, s.dimension(), 4096, 2048.0);
    const int trials = static_cast<int>(r.get_int("trials", 500));
    std::optional<double> alpha;
    if (r.has("alpha_form")) alpha = r.get_double("alpha_form");
    const bool bounds = r.get_bool("bounds", false);
    std::optional<double> bounds_y;
    if (r.has("bounds.Y")) bounds_y = r.get_double("bounds.Y");
    reject_unused(r);

    if (!alpha && s.params()) alpha = analytic_index(*s.params());
    if (!alpha) alpha = stage(log, cfg.task, "sobolev_index", [&] { return sobolev_index(s).sobolev_index; });
    require(alpha.has_value(), ErrorCode::ConfigError, "symbol has no index; set alpha_form explicitly");

    const FormReport rep =
        stage(log, cfg.task, "form_inequalities", [&] { return verify_form_inequalities(s, *alpha, trials, g, cfg.seed); });
    json body = {{"report", to_json(rep)}};
    if (bounds) {
        require(static_cast<bool>(s.density()), ErrorCode::ConfigError, "bounds need a Levy density");
        const double y = bounds_y ? *bounds_y : (s.density()->hint() ? s.density()->hint()->exponent : 1.0);
        const auto split = split_symmetric(*s.density());
        const auto ug = levysobolev::detail::logspace(1.0, 1e4, 25);
        body["bounds"] = to_json(stage(log, cfg.task, "appendix_bounds", [&] { return verify_appendix_bounds(split, y, ug); }));
    }
    return {json_output(cfg, "inequalities.json", body)};
}

inline std::vector<Output> task_evolve(const RunConfig& cfg, const Symbol& s, std::ostream& log) {
    const auto& r = cfg.record;
    const FrequencyGrid g = frequency_grid(r, s.dimension(), 256, 16.0);
    const double T = r.get_double("T", 1.0);
    const int K = static_cast<int>(r.get_int("K", 100));
    const std::string sch = r.get_string("scheme", "exact");
    const int every = static_cast<int>(r.get_int("output_every", K));
    const SpectralField g_hat = payoff(r, g);
    reject_unused(r);

    Scheme scheme;
    if (sch == "exact") scheme = Scheme::Exact;
    else if (sch == "implicit-euler") scheme = Scheme::ImplicitEuler;
    else if (sch == "crank-nicolson") scheme = Scheme::CrankNicolson;
    else throw Error(ErrorCode::ConfigError, "scheme must be exact, implicit-euler or crank-nicolson");
    require(every >= 1, ErrorCode::ConfigError, "output_every must be >= 1");

    const Trajectory tr = stage(log, cfg.task, "evolve", [&] { return evolve(s, g_hat, {}, T, K, scheme); });
    Csv csv(g.dimension() == 1 ? std::vector<std::string>{"t", "xi", "re", "im"}
                               : std::vector<std::string>{"t", "xi0", "xi1", "re", "im"});
    json norms = json::array();
    for (std::size_t k = 0; k < tr.times.size(); ++k) {
        if (k % static_cast<std::size_t>(every) != 0 && k + 1 != tr.times.size()) continue;
        const auto& f = tr.fields[k];
        norms.push_back({{"t", tr.times[k]}, {"l2", sobolev_norm(f, 0.0)}});
        for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
            const auto x = g.xi(i);
            if (g.dimension() == 1)
                csv.row(std::vector<double>{tr.times[k], x[0], f.coeffs[i].real(), f.coeffs[i].imag()});
            else
                csv.row(std::vector<double>{tr.times[k], x[0], x[1], f.coeffs[i].real(), f.coeffs[i].imag()});
        }
    }
    const json body = {{"scheme", to_string(scheme)}, {"T", T}, {"K", K}, {"norms", norms}};
    return {csv_output(cfg, "evolve.csv", csv), json_output(cfg, "evolve.json", body)};
}

inline std::vector<Output> task_price(const RunConfig& cfg, const Symbol& s, std::ostream& log) {
    const auto& r = cfg.record;
    const FrequencyGrid g = frequency_grid(r, s.dimension(), 4096, 64.0);
    const double tau = r.get_double("tau", 1.0);
    const auto x = x_points(r, -5.0, 5.0, 101);
    const SpectralField g_hat = payoff(r, g);
    reject_unused(r);

    const auto pts = embed(x, s.dimension());
    const auto v = stage(log, cfg.task, "conditional_expectation", [&] { return conditional_expectation(s, g_hat, tau, pts); });
    Csv csv({"x", "value"});
    for (std::size_t i = 0; i < x.size(); ++i) csv.row(std::vector<double>{x[i], v[i]});
    const json body = {{"tau", tau}, {"points", x.size()}};
    return {csv_output(cfg, "price.csv", csv), json_output(cfg, "price.json", body)};
}

inline std::vector<Output> task_density(const RunConfig& cfg, const Symbol& s, std::ostream& log) {
    const auto& r = cfg.record;
    const FrequencyGrid g = frequency_grid(r, s.dimension(), 32768, 40.0);
    const double t = r.get_double("t", 1.0);
    const auto x = x_points(r, -10.0, 10.0, 201);
    reject_unused(r);

    const auto pts = embed(x, s.dimension());
    const auto p = stage(log, cfg.task, "density", [&] { return density(s, t, pts, g); });
    Csv csv({"x", "value"});
    for (std::size_t i = 0; i < x.size(); ++i) csv.row(std::vector<double>{x[i], p[i]});
    json body = {{"t", t}, {"points", x.size()}};
    if (s.dimension() == 1 && x.size() > 1) body["integral_over_x"] = trapezoid(x, p);
    return {csv_output(cfg, "density.csv", csv), json_output(cfg, "density.json", body)};
}

struct CatalogEntry {
    std::string label;
    FamilyParams params;
};

inline std::vector<CatalogEntry> catalog_entries() {
    std::vector<CatalogEntry> e;
    e.push_back({"brownian", BrownianParams{}});
    e.push_back({"nig alpha=2 beta=0.5 delta=1", NigParams{2.0, Eigen::VectorXd::Constant(1, 0.5), 1.0,
                                                          Eigen::VectorXd::Zero(1), Eigen::MatrixXd::Identity(1, 1)}});
    e.push_back({"cauchy c=1", CauchyParams{}});
    e.push_back({"student-t f=4 delta=2", StudentTParams{}});
    for (double y : {0.5, 1.0, 1.2, 1.5, 1.8}) {
        CgmyParams p{1.0, 5.0, 5.0, y, CgmyDrift::Compensated};
        e.push_back({"cgmy C=1 G=5 M=5 Y=" + format_double(y), p});
    }
    e.push_back({"vg C=1 G=5 M=5", CgmyParams{1.0, 5.0, 5.0, 0.0, CgmyDrift::Compensated}});
    for (double a : {0.3, 0.7, 1.0, 1.6}) e.push_back({"stable alpha=" + format_double(a), Stable1dParams{a, 1.0, 0.0, 0.0}});
    e.push_back({"stable alpha=1 beta=0.5", Stable1dParams{1.0, 1.0, 0.5, 0.0}});
    e.push_back({"gh c1=1 lambda=1", GhParams{}});
    return e;
}

inline std::vector<Output> task_catalog(const RunConfig& cfg, std::ostream& log) {
    const auto& r = cfg.record;
    const GridSpec grid = index_grid(r);
    const double tol = r.get_double("tol", defaults::index_tol);
    reject_unused(r);

    Csv csv({"family", "analytic_index", "fitted_index", "agree"});
    json rows = json::array();
    for (const auto& e : catalog_entries()) {
        const auto an = analytic_index(e.params);
        const IndexReport rep = stage(log, cfg.task, e.label, [&] { return sobolev_index(make_symbol(e.params), grid, tol); });
        const auto& fit = rep.sobolev_index;
        const bool agree = an.has_value() == fit.has_value() && (!an || std::abs(*an - *fit) <= tol);
        csv.row(std::vector<std::string>{e.label, an ? format_double(*an) : "none", fit ? format_double(*fit) : "none",
                                         agree ? "yes" : "no"});
        rows.push_back({{"family", e.label},
                        {"analytic_index", levysobolev::detail::opt(an)},
                        {"report", to_json(rep)},
                        {"agree", agree}});
    }
    return {csv_output(cfg, "catalog.csv", csv), json_output(cfg, "catalog.json", {{"entries", rows}})};
}

}  // namespace detail

/// Runs one task and writes its files into cfg.out_dir. Throws Error.
inline std::vector<fs::path> run(RunConfig cfg, std::ostream& log) {
    auto& r = cfg.record;
    if (r.has("task"))
        require(r.get_string("task") == cfg.task, ErrorCode::ConfigError,
                "config names task '" + r.get_string("task") + "' but '" + cfg.task + "' was requested");
    if (r.has("seed")) r.mark_used("seed");
    r.set("seed", std::to_string(cfg.seed));
    r.mark_used("seed");

    std::vector<Output> outputs;
    if (cfg.task == "catalog") {
        outputs = detail::task_catalog(cfg, log);
    } else {
        const fs::path base = cfg.config_path.empty() ? fs::path() : cfg.config_path.parent_path();
        const Symbol s = detail::stage(log, cfg.task, "build_symbol", [&] { return symbol_from_record(r, base); });
        if (cfg.task == "symbol-eval") outputs = detail::task_symbol_eval(cfg, s, log);
        else if (cfg.task == "index") outputs = detail::task_index(cfg, s, log);
        else if (cfg.task == "inequalities") outputs = detail::task_inequalities(cfg, s, log);
        else if (cfg.task == "evolve") outputs = detail::task_evolve(cfg, s, log);
        else if (cfg.task == "price") outputs = detail::task_price(cfg, s, log);
        else if (cfg.task == "density") outputs = detail::task_density(cfg, s, log);
        else throw Error(ErrorCode::ConfigError, "unknown task '" + cfg.task + "'");
    }

    std::error_code ec;
    fs::create_directories(cfg.out_dir, ec);
    require(!ec, ErrorCode::IoError, "cannot create output directory '" + cfg.out_dir.string() + "'");
    std::vector<fs::path> written;
    for (const auto& o : outputs) {
        const fs::path p = cfg.out_dir / o.name;
        detail::write_atomic(p, o.content);
        written.push_back(p);
    }
    return written;
}

/// Command-line entry point; returns the process exit code.
inline int main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Levy symbols, Sobolev indices and spectral PIDE solver"};
    RunConfig cfg;
    std::string config;
    std::string out_dir = ".";
    std::vector<std::string> overrides;
    app.add_option("task", cfg.task, "symbol-eval | index | inequalities | evolve | price | density | catalog")
        ->required()
        ->check(CLI::IsMember(tasks()));
    app.add_option("--config", config, "flat key = value config file")->check(CLI::ExistingFile);
    app.add_option("--out", out_dir, "output directory");
    auto* seed_opt = app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--set", overrides, "key=value override, repeatable");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "levysobolev: " << e.what() << "\n";
        return ConfigFailure;
    }

    try {
        if (!config.empty()) {
            cfg.config_path = config;
            cfg.record = FlatRecord::parse_file(cfg.config_path);
        } else {
            require(cfg.task == "catalog", ErrorCode::ConfigError, "--config is required for task " + cfg.task);
        }
        for (const auto& o : overrides) cfg.record.set(o);
        if (seed_opt->count() == 0 && cfg.record.has("seed")) {
            const long long s = cfg.record.get_int("seed");
            require(s >= 0, ErrorCode::ConfigError, "seed must be nonnegative");
            cfg.seed = static_cast<std::uint64_t>(s);
        }
        cfg.out_dir = out_dir;
        const auto files = run(cfg, err);
        for (const auto& f : files) out << f.string() << "\n";
        return Ok;
    } catch (const Error& e) {
        err << "levysobolev: " << e.what() << "\n";
        return exit_code(e.code());
    } catch (const std::exception& e) {
        err << "levysobolev: " << e.what() << "\n";
        return NumericalFailure;
    }
}

}  // namespace levysobolev::cli
