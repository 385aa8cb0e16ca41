#pragma once

#include <json.hpp>

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "levysobolev/index_lab.hpp"
#include "levysobolev/levy_measure.hpp"
#include "levysobolev/spectral.hpp"

namespace levysobolev {

using json = nlohmann::json;

namespace detail {

/// Non-finite numbers have no JSON form; they are written as null and read back as +inf.
inline json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }
inline double num(const json& j) { return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>(); }

inline json opt(const std::optional<double>& v) { return v ? num(*v) : json(nullptr); }
inline std::optional<double> opt(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<double>();
}

inline json nums(const std::vector<double>& v) {
    json a = json::array();
    for (double x : v) a.push_back(num(x));
    return a;
}
inline std::vector<double> nums(const json& j) {
    std::vector<double> out;
    for (const auto& x : j) out.push_back(num(x));
    return out;
}

inline json verdict(const Verdict& v) { return {{"evaluated", v.evaluated}, {"pass", v.pass}, {"slack", num(v.slack)}}; }
inline Verdict verdict(const json& j) { return {j.at("evaluated").get<bool>(), j.at("pass").get<bool>(), num(j.at("slack"))}; }

inline json bound(const BoundCheck& c) {
    return {{"applicable", c.applicable}, {"pass", c.pass},          {"constant", num(c.constant)},
            {"lower_constant", num(c.lower_constant)}, {"trend", num(c.trend)}, {"note", c.note}};
}

}  // namespace detail

inline json to_json(const IndexReport& r) {
    const auto& d = r.diagnostics;
    return {{"symbol", r.symbol},
            {"alpha_cont", detail::num(r.alpha_cont)},
            {"alpha_gard", detail::num(r.alpha_gard)},
            {"sobolev_index", detail::opt(r.sobolev_index)},
            {"beta", detail::opt(r.beta)},
            {"gamma", detail::opt(r.gamma)},
            {"verdicts", {{"beta_ge_gamma", detail::verdict(r.beta_ge_gamma)},
                          {"beta_ge_index", detail::verdict(r.beta_ge_index)}}},
            {"diagnostics",
             {{"r_squared_cont", detail::num(d.r_squared_cont)},
              {"r_squared_gard", detail::num(d.r_squared_gard)},
              {"max_residual_cont", detail::num(d.max_residual_cont)},
              {"max_residual_gard", detail::num(d.max_residual_gard)},
              {"slopes_cont", detail::nums(d.slopes_cont)},
              {"slopes_gard", detail::nums(d.slopes_gard)},
              {"subpolynomial", d.subpolynomial},
              {"ratio_growth", detail::num(d.ratio_growth)},
              {"garding_c2", detail::num(d.garding_c2)},
              {"garding_threshold", detail::num(d.garding_threshold)},
              {"lower_order_ok", d.lower_order_ok},
              {"tol", detail::num(d.tol)},
              {"reason", d.reason}}}};
}

inline IndexReport index_report_from_json(const json& j) {
    IndexReport r;
    r.symbol = j.at("symbol").get<std::string>();
    r.alpha_cont = detail::num(j.at("alpha_cont"));
    r.alpha_gard = detail::num(j.at("alpha_gard"));
    r.sobolev_index = detail::opt(j.at("sobolev_index"));
    r.beta = detail::opt(j.at("beta"));
    r.gamma = detail::opt(j.at("gamma"));
    r.beta_ge_gamma = detail::verdict(j.at("verdicts").at("beta_ge_gamma"));
    r.beta_ge_index = detail::verdict(j.at("verdicts").at("beta_ge_index"));
    const auto& d = j.at("diagnostics");
    auto& o = r.diagnostics;
    o.r_squared_cont = detail::num(d.at("r_squared_cont"));
    o.r_squared_gard = detail::num(d.at("r_squared_gard"));
    o.max_residual_cont = detail::num(d.at("max_residual_cont"));
    o.max_residual_gard = detail::num(d.at("max_residual_gard"));
    o.slopes_cont = detail::nums(d.at("slopes_cont"));
    o.slopes_gard = detail::nums(d.at("slopes_gard"));
    o.subpolynomial = d.at("subpolynomial").get<bool>();
    o.ratio_growth = detail::num(d.at("ratio_growth"));
    o.garding_c2 = detail::num(d.at("garding_c2"));
    o.garding_threshold = detail::num(d.at("garding_threshold"));
    o.lower_order_ok = d.at("lower_order_ok").get<bool>();
    o.tol = detail::num(d.at("tol"));
    o.reason = d.at("reason").get<std::string>();
    return r;
}

inline json to_json(const FormReport& r) {
    return {{"alpha", detail::num(r.alpha)},
            {"trials", r.trials},
            {"seed", r.seed},
            {"c_fit", detail::num(r.c_fit)},
            {"c2", detail::num(r.c2)},
            {"c3", detail::num(r.c3)},
            {"verdicts", {{"continuity", r.continuity_pass}, {"garding", r.garding_pass}}},
            {"diagnostics",
             {{"continuity_trend", detail::num(r.continuity_trend)},
              {"continuity_increment_slope", detail::num(r.continuity_increment_slope)},
              {"shell_radius", detail::nums(r.shell_radius)},
              {"shell_garding", detail::nums(r.shell_garding)},
              {"shell_continuity", detail::nums(r.shell_continuity)},
              {"note", r.note}}}};
}

inline FormReport form_report_from_json(const json& j) {
    FormReport r;
    r.alpha = detail::num(j.at("alpha"));
    r.trials = j.at("trials").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.c_fit = detail::num(j.at("c_fit"));
    r.c2 = detail::num(j.at("c2"));
    r.c3 = detail::num(j.at("c3"));
    r.continuity_pass = j.at("verdicts").at("continuity").get<bool>();
    r.garding_pass = j.at("verdicts").at("garding").get<bool>();
    const auto& d = j.at("diagnostics");
    r.continuity_trend = detail::num(d.at("continuity_trend"));
    r.continuity_increment_slope = detail::num(d.at("continuity_increment_slope"));
    r.shell_radius = detail::nums(d.at("shell_radius"));
    r.shell_garding = detail::nums(d.at("shell_garding"));
    r.shell_continuity = detail::nums(d.at("shell_continuity"));
    r.note = d.at("note").get<std::string>();
    return r;
}

inline json to_json(const BoundReport& r) {
    return {{"exponent", detail::num(r.exponent)},
            {"real_upper", detail::bound(r.real_upper)},
            {"real_lower", detail::bound(r.real_lower)},
            {"antisymmetric_upper", detail::bound(r.antisymmetric_upper)},
            {"finite_variation_imag", detail::bound(r.finite_variation_imag)},
            {"grid", detail::nums(r.grid)},
            {"a_fs", detail::nums(r.a_fs)},
            {"a_fas", detail::nums(r.a_fas)}};
}

inline json to_json(const MomentsReport& r) {
    return {{"moments", detail::nums(r.moments)},
            {"tails", detail::nums(r.tails)},
            {"cutoff", detail::num(r.cutoff)},
            {"alpha_tail", detail::num(r.alpha_tail)},
            {"c2", detail::num(r.c2)}};
}

inline bool operator==(const Verdict& a, const Verdict& b) {
    return a.evaluated == b.evaluated && a.pass == b.pass && a.slack == b.slack;
}

inline bool operator==(const IndexDiagnostics& a, const IndexDiagnostics& b) {
    return a.r_squared_cont == b.r_squared_cont && a.r_squared_gard == b.r_squared_gard &&
           a.max_residual_cont == b.max_residual_cont && a.max_residual_gard == b.max_residual_gard &&
           a.slopes_cont == b.slopes_cont && a.slopes_gard == b.slopes_gard && a.subpolynomial == b.subpolynomial &&
           a.ratio_growth == b.ratio_growth && a.garding_c2 == b.garding_c2 &&
           a.garding_threshold == b.garding_threshold && a.lower_order_ok == b.lower_order_ok && a.tol == b.tol &&
           a.reason == b.reason;
}

inline bool operator==(const IndexReport& a, const IndexReport& b) {
    return a.symbol == b.symbol && a.alpha_cont == b.alpha_cont && a.alpha_gard == b.alpha_gard &&
           a.sobolev_index == b.sobolev_index && a.beta == b.beta && a.gamma == b.gamma &&
           a.beta_ge_gamma == b.beta_ge_gamma && a.beta_ge_index == b.beta_ge_index && a.diagnostics == b.diagnostics;
}

inline bool operator==(const FormReport& a, const FormReport& b) {
    return a.alpha == b.alpha && a.trials == b.trials && a.seed == b.seed && a.c_fit == b.c_fit && a.c2 == b.c2 &&
           a.c3 == b.c3 && a.continuity_pass == b.continuity_pass && a.garding_pass == b.garding_pass &&
           a.continuity_trend == b.continuity_trend &&
           a.continuity_increment_slope == b.continuity_increment_slope && a.shell_radius == b.shell_radius &&
           a.shell_garding == b.shell_garding && a.shell_continuity == b.shell_continuity && a.note == b.note;
}

}  // namespace levysobolev
