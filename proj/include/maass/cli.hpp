#pragma once

// Command-line front end: argument parsing into a RunConfig, and a runner
// that writes JSON or CSV tables.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "maass/arith.hpp"
#include "maass/coeffs.hpp"
#include "maass/continuation.hpp"
#include "maass/errors.hpp"
#include "maass/forms.hpp"
#include "maass/verify.hpp"

namespace maass::cli {

using nlohmann::json;

inline constexpr int schema_version = 1;

enum class Command { kloosterman, coeff, eval, continuation, verify };
enum class Format { json, csv };
enum class CoeffKind { maass, holo };

inline const char* to_string(Command c)
{
    switch (c) {
    case Command::kloosterman: return "kloosterman";
    case Command::coeff: return "coeff";
    case Command::eval: return "eval";
    case Command::continuation: return "continue";
    case Command::verify: return "verify";
    }
    return "?";
}

/// Exit codes of `run` and of the binary.
enum ExitCode : int { exit_ok = 0, exit_verify_failed = 1, exit_numeric_error = 2, exit_usage = 64 };

struct IndexRange
{
    std::int64_t lo = 1;
    std::int64_t hi = 1;
};

struct RunConfig
{
    Command command = Command::coeff;
    coeffs::FormParams form;
    coeffs::Truncation trunc;
    CoeffKind kind = CoeffKind::maass;
    IndexRange n;                 ///< coefficient indices (coeff) or n argument (kloosterman)
    std::int64_t kl_m = 1;
    IndexRange kl_c{1, 10};
    std::vector<forms::HalfPlanePoint> points;
    Format format = Format::json;
    std::optional<std::string> output_path;
    std::vector<std::string> suite;
    std::optional<double> tol;
    std::optional<std::string> manifest;
};

/// Bad command line; `help` is set when the user asked for usage text.
class usage_error : public std::runtime_error
{
public:
    usage_error(const std::string& what, bool help = false) : std::runtime_error(what), help_(help) {}
    bool help() const { return help_; }

private:
    bool help_;
};

/// "a..b" or a single integer "a".
inline IndexRange parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    try {
        std::size_t used = 0;
        IndexRange r;
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
        } else {
            const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
            r.lo = std::stoll(a, &used);
            if (used != a.size()) throw std::invalid_argument(text);
            r.hi = std::stoll(b, &used);
            if (used != b.size()) throw std::invalid_argument(text);
        }
        if (r.lo > r.hi) throw usage_error("empty range '" + text + "'");
        return r;
    } catch (const std::logic_error&) {
        throw usage_error("malformed range '" + text + "' (expected a..b)");
    }
}

/// "u,v" as a half-plane point; the plane is the sign of v.
inline forms::HalfPlanePoint parse_point(const std::string& text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw usage_error("malformed point '" + text + "' (expected u,v)");
    double u = 0.0, v = 0.0;
    try {
        std::size_t used = 0;
        const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
        u = std::stod(a, &used);
        if (used != a.size()) throw std::invalid_argument(text);
        v = std::stod(b, &used);
        if (used != b.size()) throw std::invalid_argument(text);
    } catch (const std::logic_error&) {
        throw usage_error("malformed point '" + text + "' (expected u,v)");
    }
    try {
        return forms::HalfPlanePoint(u, v);
    } catch (const domain_error& e) {
        throw usage_error(std::string("point '") + text + "': " + e.what());
    }
}

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{
        "continuation-upper", "continuation-lower", "modularity-T", "modularity-S",   "bol",
        "xi",             "laplacian",      "zero-space",   "tau",            "cosets",
        "convergence",    "quadrature",     "polylog",      "incomplete-gamma", "alpha-residue",
    };
    return names;
}

/// Parses arguments (without the program name).
inline RunConfig parse_args(const std::vector<std::string>& args)
{
    CLI::App app{"Harmonic Maass-Poincare series: coefficients, evaluation, continuation, verification", "maass_cli"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::optional<int> cmax, nmax, nodes;
    std::optional<double> radius_factor;
    unsigned threads = 1;
    std::string kind = "maass", format = "json", n_text = "1..10", c_text = "1..10", suite_text;
    std::vector<std::string> taus;
    std::string output;

    auto add_form = [&](CLI::App* sub) {
        sub->add_option("--k", cfg.form.k, "weight (k for Maass forms, kappa for --kind holo)");
        sub->add_option("--m", cfg.form.m, "index m");
        sub->add_option("--level", cfg.form.level, "level N")->check(CLI::PositiveNumber);
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--output", output, "output file (relative paths resolve against MAASS_OUTPUT_DIR when set)");
    };
    auto add_trunc = [&](CLI::App* sub) {
        sub->add_option("--cmax", cmax, "Kloosterman modulus cutoff");
        sub->add_option("--nmax", nmax, "number of Fourier coefficients per part");
        sub->add_option("--nodes", nodes, "contour trapezoid nodes");
        sub->add_option("--radius-factor", radius_factor, "contour radius over |v| (below 2 pi)");
        sub->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    };

    auto* kl = app.add_subcommand("kloosterman", "Kloosterman sums K(m,n;c)");
    kl->add_option("--m", cfg.kl_m, "first argument");
    kl->add_option("--n", n_text, "second argument");
    kl->add_option("--c", c_text, "modulus range a..b");
    add_output(kl);

    auto* co = app.add_subcommand("coeff", "Fourier coefficient tables");
    co->add_option("--kind", kind, "maass or holo")->check(CLI::IsMember({"maass", "holo"}));
    add_form(co);
    co->add_option("--n", n_text, "index range a..b");
    add_trunc(co);
    add_output(co);

    auto* ev = app.add_subcommand("eval", "point values of F_{k,-m} (upper) or the Eichler combination (lower)");
    add_form(ev);
    ev->add_option("--tau", taus, "point u,v (repeatable)")->required()->allow_extra_args(false);
    add_trunc(ev);
    add_output(ev);

    auto* ct = app.add_subcommand("continue", "the contour-integral continuation H_{k,m}");
    add_form(ct);
    ct->add_option("--tau", taus, "point u,v (repeatable)")->required()->allow_extra_args(false);
    add_trunc(ct);
    add_output(ct);

    auto* vf = app.add_subcommand("verify", "run verification checks");
    add_form(vf);
    vf->add_option("--suite", suite_text, "comma-separated check names (default: all)");
    vf->add_option("--tol", cfg.tol, "override every tolerance");
    vf->add_option("--manifest", cfg.manifest, "sample-point manifest (JSON)");
    vf->add_option("--nodes", nodes, "contour trapezoid nodes for the continuation side");
    vf->add_option("--radius-factor", radius_factor, "contour radius over |v| for the continuation side");
    vf->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    add_output(vf);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw usage_error(app.help(), true);
    } catch (const CLI::CallForAllHelp&) {
        throw usage_error(app.help("", CLI::AppFormatMode::All), true);
    } catch (const CLI::ParseError& e) {
        throw usage_error(e.what());
    }

    if (kl->parsed()) cfg.command = Command::kloosterman;
    else if (co->parsed()) cfg.command = Command::coeff;
    else if (ev->parsed()) cfg.command = Command::eval;
    else if (ct->parsed()) cfg.command = Command::continuation;
    else cfg.command = Command::verify;

    cfg.kind = kind == "holo" ? CoeffKind::holo : CoeffKind::maass;
    cfg.format = format == "csv" ? Format::csv : Format::json;
    if (!output.empty()) cfg.output_path = output;
    cfg.n = parse_range(n_text);
    cfg.kl_c = parse_range(c_text);
    for (const auto& t : taus) cfg.points.push_back(parse_point(t));

    cfg.trunc.c_max = cmax.value_or(cfg.command == Command::continuation ? 30 : 300);
    if (nmax) cfg.trunc.n_max = *nmax;
    if (nodes) cfg.trunc.contour_nodes = *nodes;
    if (radius_factor) {
        if (!(*radius_factor > 0.0 && *radius_factor < 2.0 * numerics::pi)) throw usage_error("--radius-factor must lie in (0, 2 pi)");
        cfg.trunc.radius_factor = *radius_factor;
    }
    cfg.trunc.threads = threads;
    try {
        cfg.trunc.validate();
    } catch (const domain_error& e) {
        throw usage_error(e.what());
    }
    if (cfg.command == Command::kloosterman && cfg.kl_c.lo < 1) throw usage_error("--c must be positive");

    if (!suite_text.empty()) {
        std::stringstream ss(suite_text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            const auto& known = suite_names();
            if (std::find(known.begin(), known.end(), item) == known.end()) throw usage_error("unknown check '" + item + "'");
            cfg.suite.push_back(item);
        }
    }
    if (cfg.command == Command::verify && cfg.suite.empty()) cfg.suite = suite_names();
    if (cfg.tol && !(*cfg.tol > 0.0)) throw usage_error("--tol must be positive");
    return cfg;
}

inline verify::SampleManifest load_manifest(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open manifest '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw domain_error("manifest '" + path + "': " + e.what());
    }
    auto points = [&](const char* key, std::vector<Complex>& dst) {
        if (!j.contains(key)) return;
        dst.clear();
        for (const auto& p : j.at(key)) dst.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    };
    auto point = [&](const char* key, Complex& dst) {
        if (j.contains(key)) dst = Complex(j.at(key).at(0).get<double>(), j.at(key).at(1).get<double>());
    };
    verify::SampleManifest m;
    try {
        m.version = j.at("version").get<int>();
        points("upper", m.upper);
        points("lower", m.lower);
        points("modularity", m.modularity);
        point("laplacian", m.laplacian);
        point("cosets", m.cosets);
    } catch (const json::exception& e) {
        throw domain_error("manifest '" + path + "': " + e.what());
    }
    if (m.version != 1) throw domain_error("manifest version " + std::to_string(m.version) + " is not supported");
    return m;
}

namespace detail {

inline json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

inline json trunc_json(const coeffs::Truncation& t)
{
    json j{{"c_max", t.c_max},       {"n_max", t.n_max},       {"contour_nodes", t.contour_nodes}, {"series_terms", t.series_terms},
           {"radius_factor", t.radius_factor}, {"t_panels", t.t_panels}, {"t_nodes", t.t_nodes}};
    j["t_cutoff"] = t.t_cutoff ? json(*t.t_cutoff) : json(nullptr);
    return j;
}

inline std::string fmt(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

/// Output under construction: a JSON document and/or CSV text.
struct Output
{
    json doc;
    std::string csv_header;
    std::vector<std::string> csv_rows;
    bool failed = false;
};

template <class... Ts>
std::string row(const Ts&... cells)
{
    std::string out;
    bool first = true;
    auto put = [&](const auto& cell) {
        if (!first) out += ',';
        first = false;
        using C = std::decay_t<decltype(cell)>;
        if constexpr (std::is_same_v<C, double>) out += fmt(cell);
        else if constexpr (std::is_same_v<C, bool>) out += cell ? "true" : "false";
        else if constexpr (std::is_arithmetic_v<C>) out += std::to_string(cell);
        else out += std::string(cell);
    };
    (put(cells), ...);
    return out;
}

inline void run_kloosterman(const RunConfig& cfg, Output& out)
{
    out.csv_header = "m,n,c,value";
    for (std::int64_t n = cfg.n.lo; n <= cfg.n.hi; ++n) {
        for (std::int64_t c = cfg.kl_c.lo; c <= cfg.kl_c.hi; ++c) {
            const double value = arith::kloosterman(cfg.kl_m, n, c);
            out.doc["results"].push_back(json{{"m", cfg.kl_m}, {"n", n}, {"c", c}, {"value", value}});
            out.csv_rows.push_back(row(cfg.kl_m, n, c, value));
        }
    }
}

inline void run_coeff(const RunConfig& cfg, Output& out)
{
    out.csv_header = "kind,k,m,level,n,part,value,tail,c_max,ratio";
    const auto& f = cfg.form;
    const char* kind = cfg.kind == CoeffKind::holo ? "holo" : "maass";
    struct Entry
    {
        std::int64_t n;
        const char* part;
        coeffs::CoefficientValue v;
    };
    std::vector<Entry> entries;
    for (std::int64_t n = cfg.n.lo; n <= cfg.n.hi; ++n) {
        if (cfg.kind == CoeffKind::holo) {
            if (n < 1) throw domain_error("holomorphic coefficients are tabulated for n >= 1");
            entries.push_back({n, "holo", coeffs::b_coeff(f.k, f.m, n, f.level, cfg.trunc)});
        } else if (n == 0) {
            entries.push_back({0, "plus", coeffs::a_plus_zero(f.k, f.m, f.level, cfg.trunc)});
        } else if (n > 0) {
            entries.push_back({n, "plus", coeffs::a_coeff(f.k, f.m, coeffs::Part::plus, n, f.level, cfg.trunc)});
            entries.push_back({n, "minus", coeffs::a_coeff(f.k, f.m, coeffs::Part::minus, n, f.level, cfg.trunc)});
        } else {
            throw domain_error("Maass coefficients are tabulated for n >= 0 (the principal part is q^{-m})");
        }
    }
    auto base = [&](const char* part) -> std::optional<double> {
        for (const auto& e : entries)
            if (e.n == 1 && std::string(e.part) == part && e.v.value != 0.0) return e.v.value;
        return std::nullopt;
    };
    for (const auto& e : entries) {
        const auto b = base(e.part);
        json j{{"kind", kind}, {"n", e.n}, {"part", e.part}, {"value", e.v.value}, {"tail", e.v.tail}, {"c_max", e.v.c_max}};
        j["ratio"] = b ? json(e.v.value / *b) : json(nullptr);
        out.doc["results"].push_back(j);
        out.csv_rows.push_back(row(std::string(kind), f.k, f.m, f.level, e.n, std::string(e.part), e.v.value, e.v.tail, e.v.c_max,
                                   b ? fmt(e.v.value / *b) : std::string()));
    }
}

inline void run_eval(const RunConfig& cfg, Output& out)
{
    out.csv_header = "u,v,plane,re,im,terms_used,cap_hit,tail_estimate,c_max,n_max";
    std::optional<coeffs::FourierExpansion> upper;
    std::optional<forms::LowerPlaneRhs> lower;
    for (const auto& tau : cfg.points) {
        forms::Evaluation e;
        if (tau.plane() == forms::Plane::upper) {
            if (!upper) upper = coeffs::maass_expansion(cfg.form, cfg.trunc);
            e = forms::eval_maass(*upper, tau);
        } else {
            if (!lower) lower.emplace(cfg.form, cfg.trunc);
            e = (*lower)(tau);
        }
        const char* plane = forms::to_string(tau.plane());
        out.doc["results"].push_back(json{{"tau", complex_json(tau.tau())}, {"plane", plane}, {"value", complex_json(e.value)},
                                          {"terms_used", e.terms_used}, {"cap_hit", e.cap_hit}, {"tail_estimate", e.tail_estimate},
                                          {"c_max", cfg.trunc.c_max}, {"n_max", cfg.trunc.n_max}});
        out.csv_rows.push_back(row(tau.u(), tau.v(), std::string(plane), e.value.real(), e.value.imag(), e.terms_used, e.cap_hit,
                                   e.tail_estimate, cfg.trunc.c_max, cfg.trunc.n_max));
    }
}

inline void run_continue(const RunConfig& cfg, Output& out)
{
    out.csv_header = "u,v,plane,re,im,c_max,contour_nodes,radius_factor,t_tail,rounding,min_pole_distance";
    for (const auto& tau : cfg.points) {
        const auto h = continuation::H(cfg.form, tau, cfg.trunc);
        const char* plane = forms::to_string(tau.plane());
        out.doc["results"].push_back(json{{"tau", complex_json(tau.tau())}, {"plane", plane}, {"value", complex_json(h.value)},
                                          {"c_max", h.c_max}, {"contour_nodes", cfg.trunc.contour_nodes},
                                          {"radius_factor", cfg.trunc.radius_factor}, {"t_tail", h.t_tail}, {"rounding", h.rounding},
                                          {"min_pole_distance", h.min_pole_distance}});
        out.csv_rows.push_back(row(tau.u(), tau.v(), std::string(plane), h.value.real(), h.value.imag(), h.c_max, cfg.trunc.contour_nodes,
                                   cfg.trunc.radius_factor, h.t_tail, h.rounding, h.min_pole_distance));
    }
}

inline void add_report(const verify::VerificationReport& r, Output& out)
{
    json res = json::array();
    for (const auto& x : r.residuals) {
        res.push_back(json{{"label", x.label}, {"point", complex_json(x.point)}, {"lhs", complex_json(x.lhs)}, {"rhs", complex_json(x.rhs)},
                           {"abs_err", x.abs_err}, {"rel_err", x.rel_err}});
        out.csv_rows.push_back(row(r.check_name, x.label, x.point.real(), x.point.imag(), x.lhs.real(), x.lhs.imag(), x.rhs.real(),
                                   x.rhs.imag(), x.abs_err, x.rel_err, r.tolerance, r.passed));
    }
    json j{{"check_name", r.check_name},
           {"params", json{{"k", r.params.k}, {"m", r.params.m}, {"level", r.params.level}}},
           {"trunc", trunc_json(r.trunc)},
           {"residuals", res},
           {"passed", r.passed},
           {"tolerance", r.tolerance},
           {"runtime_ms", r.runtime_ms},
           {"notes", r.notes}};
    if (r.reference_trunc) j["reference_trunc"] = trunc_json(*r.reference_trunc);
    out.doc["results"].push_back(j);
    out.failed = out.failed || !r.passed;
}

inline void add_report(const verify::ConvergenceReport& r, const char* level_name, Output& out)
{
    json seq = json::array();
    for (std::size_t i = 0; i < r.levels.size(); ++i) {
        seq.push_back(json{{level_name, r.levels[i]}, {"error", r.errors[i]}});
        out.csv_rows.push_back(row(r.check_name, std::string(level_name) + "=" + std::to_string(r.levels[i]), 0.0, 0.0, r.errors[i], 0.0, 0.0,
                                   0.0, r.errors[i], r.errors[i], r.floor, r.passed));
    }
    out.doc["results"].push_back(json{{"check_name", r.check_name},
                                      {"sequence", seq},
                                      {"noise_factor", r.noise_factor},
                                      {"required_contraction", r.required_contraction},
                                      {"floor", r.floor},
                                      {"passed", r.passed},
                                      {"runtime_ms", r.runtime_ms}});
    out.failed = out.failed || !r.passed;
}

inline void run_verify(const RunConfig& cfg, Output& out)
{
    out.csv_header = "check,label,u,v,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,tolerance,passed";
    const auto manifest = cfg.manifest ? load_manifest(*cfg.manifest) : verify::SampleManifest{};
    auto pts = [](const std::vector<Complex>& zs) {
        std::vector<forms::HalfPlanePoint> v;
        for (auto z : zs) v.emplace_back(z);
        return v;
    };
    auto tol = [&](double fallback) { return cfg.tol.value_or(fallback); };
    const auto& p = cfg.form;
    coeffs::Truncation h_trunc;
    h_trunc.c_max = 30;
    h_trunc.contour_nodes = cfg.trunc.contour_nodes;
    h_trunc.radius_factor = cfg.trunc.radius_factor;
    h_trunc.threads = cfg.trunc.threads;
    auto ref = verify::reference_truncation();
    ref.threads = cfg.trunc.threads;
    coeffs::Truncation matched;
    matched.c_max = 100;
    matched.threads = cfg.trunc.threads;

    for (const auto& name : cfg.suite) {
        if (name == "continuation-upper") add_report(verify::check_continuation_upper(p, pts(manifest.upper), h_trunc, ref, tol(1e-4)), out);
        else if (name == "continuation-lower") add_report(verify::check_continuation_lower(p, pts(manifest.lower), h_trunc, ref, tol(1e-4)), out);
        else if (name == "modularity-T") add_report(verify::check_modularity(p, {1, 1, 0, 1}, pts(manifest.modularity), ref, tol(1e-12)), out);
        else if (name == "modularity-S") add_report(verify::check_modularity(p, {0, -1, 1, 0}, pts(manifest.modularity), ref, tol(1e-4)), out);
        else if (name == "bol") add_report(verify::check_bol_identity(p, 1, 6, matched, tol(1e-10)), out);
        else if (name == "xi") add_report(verify::check_xi_identity(p, 1, 6, matched, tol(1e-10)), out);
        else if (name == "laplacian")
            add_report(verify::check_laplacian(p, forms::HalfPlanePoint(manifest.laplacian), 1e-3, ref, tol(1e-3)), out);
        else if (name == "zero-space") add_report(verify::check_zero_space({4, 6, 8, 10, 14}, 1, 4, 500, tol(1e-3)), out);
        else if (name == "tau") add_report(verify::check_tau_reproduction(4, 300, tol(1e-3)), out);
        else if (name == "cosets")
            add_report(verify::check_coset_oracle(p, forms::HalfPlanePoint(manifest.cosets), ref, 150, tol(1e-3)), out);
        else if (name == "convergence") {
            for (const auto& z : {manifest.upper.front(), manifest.lower.front()})
                add_report(verify::check_continuation_convergence(p, forms::HalfPlanePoint(z), {4, 8, 16, 32}, h_trunc, ref), "c_max", out);
        } else if (name == "quadrature")
            add_report(verify::check_quadrature_contraction(p, 1, 0, forms::HalfPlanePoint(manifest.cosets), {16, 32, 64, 128}), "nodes", out);
        else if (name == "polylog") {
            for (int order : {3, 5, 7}) add_report(verify::check_polylog_inversion(order, 100, 20261016, tol(1e-10)), out);
        } else if (name == "incomplete-gamma")
            add_report(verify::check_incomplete_gamma_recurrence(20, {0.25, 1.0, 5.0, 20.0}, tol(4e-16)), out);
        else if (name == "alpha-residue")
            add_report(verify::check_alpha_residue(p, 2, {1, 2, 3, 5}, 3.0, 64, tol(1e-8)), out);
    }
}

inline std::filesystem::path resolve_output(const std::string& path)
{
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("MAASS_OUTPUT_DIR"); dir && *dir) p = std::filesystem::path(dir) / p;
    }
    return p;
}

} // namespace detail

/// Executes a parsed configuration, writing to cfg.output_path or `out`.
/// Returns exit_ok, exit_verify_failed, or exit_numeric_error.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err = std::cerr)
{
    detail::Output o;
    o.doc = json{{"schema_version", schema_version},
                 {"command", to_string(cfg.command)},
                 {"params", json{{"k", cfg.form.k}, {"m", cfg.form.m}, {"level", cfg.form.level}, {"trunc", detail::trunc_json(cfg.trunc)}}},
                 {"results", json::array()},
                 {"errors", json::array()}};
    if (cfg.command == Command::coeff) o.doc["params"]["kind"] = cfg.kind == CoeffKind::holo ? "holo" : "maass";
    if (cfg.command == Command::verify) o.doc["params"]["suite"] = cfg.suite;

    int code = exit_ok;
    try {
        switch (cfg.command) {
        case Command::kloosterman: detail::run_kloosterman(cfg, o); break;
        case Command::coeff: detail::run_coeff(cfg, o); break;
        case Command::eval: detail::run_eval(cfg, o); break;
        case Command::continuation: detail::run_continue(cfg, o); break;
        case Command::verify: detail::run_verify(cfg, o); break;
        }
        if (o.failed) code = exit_verify_failed;
    } catch (const error& e) {
        o.doc["errors"].push_back(json{{"kind", e.kind()}, {"message", e.what()}});
        code = exit_numeric_error;
    }

    std::string text;
    if (cfg.format == Format::json) {
        text = o.doc.dump(2) + "\n";
    } else if (code == exit_numeric_error) {
        const auto& err = o.doc["errors"].back();
        std::string msg;
        for (char ch : err["message"].get<std::string>()) msg += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        text = "error_kind,message\n" + err["kind"].get<std::string>() + ",\"" + msg + "\"\n";
    } else {
        text = o.csv_header + "\n";
        for (const auto& r : o.csv_rows) text += r + "\n";
    }

    if (cfg.output_path) {
        const auto path = detail::resolve_output(*cfg.output_path);
        std::ofstream file(path, std::ios::binary);
        if (!file) {
            err << "cannot write " << path << "\n";
            return exit_usage;
        }
        file << text;
    } else {
        out << text;
    }
    if (code == exit_verify_failed) {
        for (const auto& r : o.doc["results"])
            if (!r["passed"].get<bool>()) err << "FAILED " << r["check_name"].get<std::string>() << "\n";
    }
    return code;
}

/// Entry point shared by the binary and the tests.
inline int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    try {
        cfg = parse_args(args);
    } catch (const usage_error& e) {
        if (e.help()) {
            out << e.what();
            return exit_ok;
        }
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }
    return run(cfg, out, err);
}

} // namespace maass::cli
