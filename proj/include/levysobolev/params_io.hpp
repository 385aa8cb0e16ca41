#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "levysobolev/detail/format.hpp"
#include "levysobolev/error.hpp"
#include "levysobolev/levy_density.hpp"
#include "levysobolev/symbol.hpp"

namespace levysobolev {

/// Flat `key = value` record. Lines starting with '#' are comments; vectors
/// are comma separated; keys are case sensitive. Lookups are tracked so that
/// misspelt keys can be reported.
class FlatRecord {
public:
    FlatRecord() = default;

    static FlatRecord parse(std::istream& in, const std::string& origin = "<input>") {
        FlatRecord r;
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            const std::string t = trim(line);
            if (t.empty()) continue;
            const auto eq = t.find('=');
            require(eq != std::string::npos, ErrorCode::ConfigError,
                    origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
            const std::string key = trim(t.substr(0, eq));
            require(!key.empty(), ErrorCode::ConfigError, origin + ":" + std::to_string(lineno) + ": empty key");
            require(!r.values_.count(key), ErrorCode::ConfigError,
                    origin + ":" + std::to_string(lineno) + ": duplicate key '" + key + "'");
            r.values_[key] = trim(t.substr(eq + 1));
        }
        return r;
    }

    static FlatRecord parse_file(const std::filesystem::path& path) {
        std::ifstream in(path);
        require(static_cast<bool>(in), ErrorCode::ConfigError, "cannot open config file '" + path.string() + "'");
        return parse(in, path.string());
    }

    /// `key=value` override, as given on the command line.
    void set(const std::string& assignment) {
        const auto eq = assignment.find('=');
        require(eq != std::string::npos, ErrorCode::ConfigError, "override '" + assignment + "' is not key=value");
        values_[trim(assignment.substr(0, eq))] = trim(assignment.substr(eq + 1));
    }
    void set(const std::string& key, const std::string& value) { values_[key] = value; }

    bool has(const std::string& key) const { return values_.count(key) != 0; }

    std::string get_string(const std::string& key) const {
        used_.insert(key);
        const auto it = values_.find(key);
        require(it != values_.end(), ErrorCode::ConfigError, "missing required key '" + key + "'");
        return it->second;
    }
    std::string get_string(const std::string& key, const std::string& fallback) const {
        return has(key) ? get_string(key) : fallback;
    }

    double get_double(const std::string& key) const {
        const std::string s = get_string(key);
        double v = 0.0;
        require(detail::parse_double(s, v), ErrorCode::ConfigError, "key '" + key + "' is not a number: '" + s + "'");
        return v;
    }
    double get_double(const std::string& key, double fallback) const { return has(key) ? get_double(key) : fallback; }

    long long get_int(const std::string& key) const {
        const double v = get_double(key);
        require(std::floor(v) == v && std::abs(v) < 9e15, ErrorCode::ConfigError, "key '" + key + "' must be an integer");
        return static_cast<long long>(v);
    }
    long long get_int(const std::string& key, long long fallback) const { return has(key) ? get_int(key) : fallback; }

    bool get_bool(const std::string& key, bool fallback) const {
        if (!has(key)) return fallback;
        const std::string s = get_string(key);
        if (s == "true" || s == "1" || s == "yes") return true;
        if (s == "false" || s == "0" || s == "no") return false;
        throw Error(ErrorCode::ConfigError, "key '" + key + "' must be true or false");
    }

    std::vector<double> get_vector(const std::string& key) const {
        const std::string s = get_string(key);
        std::vector<double> out;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            double v = 0.0;
            require(detail::parse_double(item, v), ErrorCode::ConfigError,
                    "key '" + key + "' has a non-numeric entry '" + trim(item) + "'");
            out.push_back(v);
        }
        require(!out.empty(), ErrorCode::ConfigError, "key '" + key + "' is empty");
        return out;
    }
    std::vector<double> get_vector(const std::string& key, std::vector<double> fallback) const {
        return has(key) ? get_vector(key) : std::move(fallback);
    }

    /// Keys never looked up.
    std::vector<std::string> unused() const {
        std::vector<std::string> out;
        for (const auto& [k, v] : values_)
            if (!used_.count(k)) out.push_back(k);
        return out;
    }
    void mark_used(const std::string& key) const { used_.insert(key); }

    const std::map<std::string, std::string>& values() const { return values_; }

    std::string to_text() const {
        std::string out;
        for (const auto& [k, v] : values_) out += k + " = " + v + "\n";
        return out;
    }

private:
    static std::string trim(const std::string& s) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return {};
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    }

    std::map<std::string, std::string> values_;
    mutable std::set<std::string> used_;
};

namespace detail {

inline std::string join(const Eigen::VectorXd& v) {
    std::string s;
    for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_double(v(i));
    return s;
}

inline std::string join(const Eigen::MatrixXd& m) {
    std::string s;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) s += (s.empty() ? "" : ",") + format_double(m(i, j));
    return s;
}

inline Eigen::VectorXd to_vector(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

/// Square matrix from d*d row-major entries, or a scalar times the identity.
inline Eigen::MatrixXd to_matrix(const std::vector<double>& v, Eigen::Index d, const std::string& key) {
    if (v.size() == 1) return v[0] * Eigen::MatrixXd::Identity(d, d);
    require(static_cast<Eigen::Index>(v.size()) == d * d, ErrorCode::ConfigError,
            "key '" + key + "' needs 1 or " + std::to_string(d * d) + " entries");
    Eigen::MatrixXd m(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) m(i, j) = v[static_cast<std::size_t>(i * d + j)];
    return m;
}

inline const char* drift_name(CgmyDrift d) {
    switch (d) {
        case CgmyDrift::Compensated: return "compensated";
        case CgmyDrift::Zero: return "zero";
        case CgmyDrift::Literal: return "literal";
    }
    return "compensated";
}

}  // namespace detail

/// Whitespace separated `x f(x)` pairs, '#' comments allowed.
inline std::vector<std::pair<double, double>> read_density_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorCode::ConfigError, "cannot open density table '" + path.string() + "'");
    std::vector<std::pair<double, double>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        for (char& c : line)
            if (c == ',') c = ' ';
        std::istringstream ss(line);
        std::string a, b;
        if (!(ss >> a)) continue;
        double x = 0.0, f = 0.0;
        require(static_cast<bool>(ss >> b) && detail::parse_double(a, x) && detail::parse_double(b, f),
                ErrorCode::ConfigError, path.string() + ":" + std::to_string(lineno) + ": expected 'x f(x)'");
        out.emplace_back(x, f);
    }
    require(!out.empty(), ErrorCode::ConfigError, "density table '" + path.string() + "' is empty");
    return out;
}

/// Family parameters as flat key-value pairs (`family` plus one key per field).
inline FlatRecord to_record(const FamilyParams& params) {
    FlatRecord r;
    using detail::format_double;
    using detail::join;
    std::visit(
        [&](const auto& p) {
            using P = std::decay_t<decltype(p)>;
            r.set("family", to_string(family_of(params)));
            if constexpr (std::is_same_v<P, BrownianParams>) {
                r.set("sigma", join(p.sigma));
                r.set("b", join(p.b));
            } else if constexpr (std::is_same_v<P, NigParams>) {
                r.set("alpha", format_double(p.alpha));
                r.set("beta", join(p.beta));
                r.set("delta", format_double(p.delta));
                r.set("mu", join(p.mu));
                r.set("Delta", join(p.Delta));
            } else if constexpr (std::is_same_v<P, CauchyParams>) {
                r.set("c", format_double(p.c));
                r.set("gamma", join(p.gamma));
            } else if constexpr (std::is_same_v<P, StudentTParams>) {
                r.set("f", format_double(p.f));
                r.set("delta", format_double(p.delta));
                r.set("mu", format_double(p.mu));
            } else if constexpr (std::is_same_v<P, CgmyParams>) {
                r.set("C", format_double(p.C));
                r.set("G", format_double(p.G));
                r.set("M", format_double(p.M));
                r.set("Y", format_double(p.Y));
                r.set("drift", detail::drift_name(p.drift));
            } else if constexpr (std::is_same_v<P, Stable1dParams>) {
                r.set("alpha", format_double(p.alpha));
                r.set("c", format_double(p.c));
                r.set("beta", format_double(p.beta));
                r.set("tau", format_double(p.tau));
            } else {
                r.set("c1", format_double(p.c1));
                r.set("c2", format_double(p.c2));
                r.set("c3", format_double(p.c3));
                r.set("lambda", format_double(p.lambda));
            }
        },
        params);
    return r;
}

/// Inverse of to_record. `base` resolves relative table paths.
inline FamilyParams from_record(const FlatRecord& r, const std::filesystem::path& base = {}) {
    const std::string fam = r.get_string("family");
    if (fam == "brownian") {
        BrownianParams p;
        p.b = detail::to_vector(r.get_vector("b", {0.0}));
        p.sigma = detail::to_matrix(r.get_vector("sigma", {1.0}), p.b.size(), "sigma");
        return p;
    }
    if (fam == "nig") {
        NigParams p;
        p.alpha = r.get_double("alpha");
        p.delta = r.get_double("delta");
        p.beta = detail::to_vector(r.get_vector("beta", {0.0}));
        const auto d = p.beta.size();
        p.mu = detail::to_vector(r.get_vector("mu", std::vector<double>(static_cast<std::size_t>(d), 0.0)));
        p.Delta = detail::to_matrix(r.get_vector("Delta", {1.0}), d, "Delta");
        return p;
    }
    if (fam == "cauchy") {
        CauchyParams p;
        p.c = r.get_double("c");
        p.gamma = detail::to_vector(r.get_vector("gamma", {0.0}));
        return p;
    }
    if (fam == "student-t") {
        StudentTParams p;
        p.f = r.get_double("f");
        p.delta = r.get_double("delta");
        p.mu = r.get_double("mu", 0.0);
        return p;
    }
    if (fam == "cgmy" || fam == "vg") {
        CgmyParams p;
        p.C = r.get_double("C");
        p.G = r.get_double("G");
        p.M = r.get_double("M");
        p.Y = fam == "vg" ? r.get_double("Y", 0.0) : r.get_double("Y");
        const std::string d = r.get_string("drift", "compensated");
        if (d == "compensated") p.drift = CgmyDrift::Compensated;
        else if (d == "zero") p.drift = CgmyDrift::Zero;
        else if (d == "literal") p.drift = CgmyDrift::Literal;
        else throw Error(ErrorCode::ConfigError, "drift must be compensated, zero or literal");
        return p;
    }
    if (fam == "stable") {
        Stable1dParams p;
        p.alpha = r.get_double("alpha");
        p.c = r.get_double("c", 1.0);
        p.beta = r.get_double("beta", 0.0);
        p.tau = r.get_double("tau", 0.0);
        return p;
    }
    if (fam == "gh") {
        GhParams p;
        p.c1 = r.get_double("c1");
        p.c2 = r.get_double("c2", 0.0);
        p.c3 = r.get_double("c3", 0.0);
        p.lambda = r.get_double("lambda", 1.0);
        if (r.has("table")) {
            std::filesystem::path tp = r.get_string("table");
            if (tp.is_relative() && !base.empty()) tp = base / tp;
            p.table = read_density_table(tp);
        }
        return p;
    }
    throw Error(ErrorCode::UnknownFamily, "unknown family '" + fam + "'");
}

/// Symbol for a record: a catalog family, or `family = density` with a
/// tabulated Levy density plus optional sigma, b and truncation.
inline Symbol symbol_from_record(const FlatRecord& r, const std::filesystem::path& base = {}) {
    if (r.get_string("family") != "density") return make_symbol(from_record(r, base));
    std::filesystem::path tp = r.get_string("table");
    if (tp.is_relative() && !base.empty()) tp = base / tp;
    std::optional<SingularityHint> hint;
    if (r.has("hint_exponent"))
        hint = SingularityHint{r.get_double("hint_exponent"), r.get_double("hint_coefficient", 0.0)};
    LevyTriplet t;
    t.levy_measure = std::make_shared<const LevyDensity>(tabulated_density(read_density_table(tp), hint));
    t.diffusion(0, 0) = r.get_double("sigma", 0.0);
    t.drift(0) = r.get_double("b", 0.0);
    const std::string trunc = r.get_string("truncation", "identity");
    if (trunc == "identity") t.truncation = Truncation::Identity;
    else if (trunc == "unit-ball") t.truncation = Truncation::UnitBall;
    else throw Error(ErrorCode::ConfigError, "truncation must be identity or unit-ball");
    return symbol_from_triplet(t);
}

}  // namespace levysobolev
