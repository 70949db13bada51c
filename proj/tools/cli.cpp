#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "polybern/combinatorics.hpp"
#include "polybern/polybernoulli.hpp"
#include "polybern/verify.hpp"
#include "polybern/zeta.hpp"

namespace polybern::cli {

namespace {

using Json = nlohmann::ordered_json;
using numeric::QuadratureResult;
using numeric::QuadratureSpec;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CrossCheckError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Plain };

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "plain") return Format::Plain;
    throw UsageError("unknown format '" + s + "' (expected json, csv or plain)");
}

struct CliConfig {
    Format format = Format::Json;
    QuadratureSpec quadrature;
    std::size_t cap = umbral::ExpansionLimits{}.max_terms;

    double tolerance() const { return quadrature.tolerance; }
    umbral::ExpansionLimits limits() const { return {cap}; }

    void validate() const {
        try {
            quadrature.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (!(quadrature.tolerance > 0.0) || !std::isfinite(quadrature.tolerance))
            throw UsageError("tolerance must be a positive number");
        if (cap < 1) throw UsageError("expansion cap must be >= 1");
    }
};

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
    std::size_t pos = 0;
    T v{};
    try {
        if constexpr (std::is_same_v<T, double>) v = std::stod(text, &pos);
        else if constexpr (std::is_same_v<T, std::size_t>) v = std::stoull(text, &pos);
        else v = std::stoi(text, &pos);
    } catch (const std::exception&) {
        throw UsageError("bad value for " + key + ": '" + text + "'");
    }
    if (pos != text.size()) throw UsageError("bad value for " + key + ": '" + text + "'");
    return v;
}

void apply_setting(CliConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "format") cfg.format = parse_format(value);
    else if (key == "tol") cfg.quadrature.tolerance = parse_number<double>(key, value);
    else if (key == "panels") cfg.quadrature.panels = parse_number<int>(key, value);
    else if (key == "nodes") cfg.quadrature.nodes = parse_number<int>(key, value);
    else if (key == "levels") cfg.quadrature.levels = parse_number<int>(key, value);
    else if (key == "cap") cfg.cap = parse_number<std::size_t>(key, value);
    else throw UsageError("unknown config key '" + key + "'");
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

void read_config_file(CliConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
        apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

Json rational_json(const Rational& r) { return Json{{"num", r.num_str()}, {"den", r.den_str()}}; }

Json result_json(const QuadratureResult& r) {
    Json j{{"value", r.value}, {"imag_residue", r.imag_residue}, {"convergence_delta", r.convergence_delta}};
    if (r.tail_bound) j["tail_bound"] = *r.tail_bound;
    return j;
}

std::string real_str(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// "a" or "a..b".
std::pair<int, int> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const int v = parse_number<int>("--k", s);
        return {v, v};
    }
    const int lo = parse_number<int>("--k", s.substr(0, dots));
    const int hi = parse_number<int>("--k", s.substr(dots + 2));
    if (hi < lo) throw UsageError("empty k range '" + s + "'");
    return {lo, hi};
}

// ------------------------------------------------------------------ num

struct NumArgs {
    long n = 0;
    int k = 1;
    std::string variant = "B";
    std::string method = "series";
    bool poly = false;
    std::string z;
};

Rational stirling_value(long n, int k, Variant v) {
    if (v == Variant::B) return poly_bernoulli_stirling(n, k);
    Rational acc;
    for (long l = 0; l <= n; ++l) {
        Rational t = Rational(binomial(n, l)) * poly_bernoulli_stirling(l, k);
        if ((n - l) % 2) t = -t;
        acc += t;
    }
    return acc;
}

std::string cmd_num(const NumArgs& a, const CliConfig& cfg) {
    const Variant v = parse_variant(a.variant);
    const Route route = parse_route(a.method);
    if (route != Route::Series && route != Route::Umbral && route != Route::Stirling)
        throw UsageError("num: method must be series, umbral or stirling");
    if (route == Route::Stirling && (a.poly || !a.z.empty()))
        throw UsageError("num: the stirling method gives values at z = 0 only");
    if (a.poly && !a.z.empty()) throw UsageError("num: --poly and --z are exclusive");
    if (a.n < 0) throw UsageError("num: n must be >= 0");
    if (a.k < 1) throw UsageError("num: k must be >= 1");
    const Rational z = a.z.empty() ? Rational(0) : Rational::parse(a.z);

    ZPolynomial p;
    Rational value;
    if (route == Route::Stirling) {
        value = stirling_value(a.n, a.k, v);
    } else {
        p = route == Route::Series ? poly_bernoulli_series(a.n, a.k, v).polynomial(a.n)
                                   : poly_bernoulli_umbral(a.n, a.k, v, cfg.limits());
        value = p(z);
    }

    std::ostringstream os;
    switch (cfg.format) {
        case Format::Json: {
            Json j{{"n", a.n}, {"k", a.k}, {"variant", to_string(v)}, {"method", to_string(route)}};
            if (a.poly) {
                Json cs = Json::array();
                for (const auto& c : p.coeffs()) cs.push_back(rational_json(c));
                j["coefficients"] = cs;
            } else {
                j["z"] = rational_json(z);
                j["value"] = rational_json(value);
            }
            os << dump(j);
            break;
        }
        case Format::Csv:
            if (a.poly) {
                os << "degree,num,den\n";
                for (std::size_t i = 0; i < p.coeffs().size(); ++i)
                    os << i << ',' << p.coeffs()[i].num_str() << ',' << p.coeffs()[i].den_str() << '\n';
            } else {
                os << "n,k,variant,method,num,den\n"
                   << a.n << ',' << a.k << ',' << to_string(v) << ',' << to_string(route) << ','
                   << value.num_str() << ',' << value.den_str() << '\n';
            }
            break;
        case Format::Plain:
            os << (a.poly ? p.str() : value.str()) << '\n';
            break;
    }
    return os.str();
}

// ---------------------------------------------------------------- table

struct TableArgs {
    long n_max = 10;
    std::string k = "1..3";
    std::string variant = "B";
    bool inject = false;
};

std::string cmd_table(const TableArgs& a, const CliConfig& cfg) {
    const Variant v = parse_variant(a.variant);
    const auto [k_lo, k_hi] = parse_range(a.k);
    if (k_lo < 1) throw UsageError("table: k must be >= 1");
    if (a.n_max < 0) throw UsageError("table: n-max must be >= 0");

    struct Row {
        int k;
        long n;
        Rational value;
    };
    std::vector<Row> rows;
    for (int k = k_lo; k <= k_hi; ++k) {
        const auto series = poly_bernoulli_series(a.n_max, k, v);
        auto umbral = poly_bernoulli_umbral_table(a.n_max, k, v, cfg.limits());
        if (a.inject && k == k_hi) umbral.entries.back() += ZPolynomial(Rational(1));
        for (long n = 0; n <= a.n_max; ++n) {
            const Rational s = series.number(n);
            const Rational u = umbral.number(n);
            const Rational st = stirling_value(n, k, v);
            if (s != u || s != st)
                throw CrossCheckError("table: routes disagree at k=" + std::to_string(k) + ", n=" +
                                      std::to_string(n) + " (series " + s.str() + ", umbral " + u.str() +
                                      ", stirling " + st.str() + ")");
            rows.push_back({k, n, s});
        }
    }

    std::ostringstream os;
    switch (cfg.format) {
        case Format::Json: {
            Json r = Json::array();
            for (const auto& row : rows) r.push_back(Json{{"k", row.k}, {"n", row.n}, {"value", rational_json(row.value)}});
            os << dump(Json{{"variant", to_string(v)},
                            {"n_max", a.n_max},
                            {"k_min", k_lo},
                            {"k_max", k_hi},
                            {"routes", Json::array({"series", "umbral", "stirling"})},
                            {"rows", r}});
            break;
        }
        case Format::Csv:
            os << "n,k,variant,num,den\n";
            for (const auto& row : rows)
                os << row.n << ',' << row.k << ',' << to_string(v) << ',' << row.value.num_str() << ','
                   << row.value.den_str() << '\n';
            break;
        case Format::Plain:
            for (const auto& row : rows) os << row.k << ' ' << row.n << ' ' << row.value.str() << '\n';
            break;
    }
    return os.str();
}

// ----------------------------------------------------------------- zeta

struct ZetaArgs {
    int k = 2;
    int m = 1;
    std::string route = "mellin";
};

constexpr double kRouteAgreement = 1e-6;

int cmd_zeta(const ZetaArgs& a, const CliConfig& cfg, std::string& text, std::ostream& err) {
    if (a.route != "mellin" && a.route != "moment" && a.route != "both")
        throw UsageError("zeta: route must be mellin, moment or both");
    if (a.k < 1 || a.m < 1) throw UsageError("zeta: k and m must be >= 1");
    std::vector<std::pair<std::string, QuadratureResult>> results;
    if (a.route != "moment")
        results.emplace_back("mellin", numeric::ak_zeta_mellin(a.k, a.m, cfg.tolerance(), cfg.quadrature));
    if (a.route != "mellin") {
        auto r = numeric::negative_moment(a.k, a.m, 0.0, cfg.quadrature);
        if (a.m % 2) r.value = -r.value;
        results.emplace_back("moment", r);
    }
    std::optional<double> discrepancy;
    if (results.size() == 2) discrepancy = std::abs(results[0].second.value - results[1].second.value);

    std::ostringstream os;
    switch (cfg.format) {
        case Format::Json: {
            Json j{{"k", a.k}, {"m", a.m}, {"route", a.route}};
            for (const auto& [name, r] : results) j[name] = result_json(r);
            if (discrepancy) j["discrepancy"] = *discrepancy;
            os << dump(j);
            break;
        }
        case Format::Csv:
            os << "route,value,imag_residue,convergence_delta,tail_bound\n";
            for (const auto& [name, r] : results)
                os << name << ',' << real_str(r.value) << ',' << real_str(r.imag_residue) << ','
                   << real_str(r.convergence_delta) << ',' << (r.tail_bound ? real_str(*r.tail_bound) : "") << '\n';
            if (discrepancy) os << "discrepancy," << real_str(*discrepancy) << ",,,\n";
            break;
        case Format::Plain:
            for (const auto& [name, r] : results) os << name << ' ' << real_str(r.value) << '\n';
            if (discrepancy) os << "discrepancy " << real_str(*discrepancy) << '\n';
            break;
    }
    text = os.str();
    if (discrepancy && *discrepancy >= kRouteAgreement) {
        err << "zeta: routes differ by " << real_str(*discrepancy) << '\n';
        return kCrossCheckFailure;
    }
    return kSuccess;
}

// ------------------------------------------------------------------ mzv

struct MzvArgs {
    std::string sig;
    bool starred = false;
    long terms = 10000;
};

std::string cmd_mzv(const MzvArgs& a, const CliConfig& cfg) {
    if (a.terms < 1) throw UsageError("mzv: terms must be >= 1");
    const auto sig = numeric::MzSignature::parse(a.sig, a.starred);
    const auto r = numeric::mz_truncated(sig, a.terms);
    std::string plain_sig;
    for (std::size_t i = 0; i < sig.exponents.size(); ++i)
        plain_sig += (i ? "," : "") + std::to_string(sig.exponents[i]);
    std::ostringstream os;
    switch (cfg.format) {
        case Format::Json:
            os << dump(Json{{"signature", plain_sig},
                            {"starred", a.starred},
                            {"terms", a.terms},
                            {"value", r.value},
                            {"tail_bound", r.tail_bound},
                            {"interval", Json::array({r.value, r.value + r.tail_bound})}});
            break;
        case Format::Csv:
            os << "signature,starred,terms,value,tail_bound\n"
               << '"' << plain_sig << '"' << ',' << (a.starred ? "true" : "false") << ',' << a.terms << ','
               << real_str(r.value) << ',' << real_str(r.tail_bound) << '\n';
            break;
        case Format::Plain:
            os << sig.str() << ' ' << real_str(r.value) << " +[0, " << real_str(r.tail_bound) << "]\n";
            break;
    }
    return os.str();
}

// --------------------------------------------------------------- verify

struct VerifyArgs {
    std::vector<std::string> suites{"all"};
    int max_n = -1;
    int max_k = -1;
    int max_m = -1;
    int zeta_k_max = -1;
    std::string corrupt;
};

int cmd_verify(const VerifyArgs& a, const CliConfig& cfg, std::string& text) {
    verify::VerifyConfig vc;
    vc.quadrature = cfg.quadrature;
    vc.suites.clear();
    for (const auto& s : a.suites) {
        if (s == "all") vc.suites.insert(verify::kSuites.begin(), verify::kSuites.end());
        else vc.suites.insert(s);
    }
    if (a.max_n >= 0) vc.narrow_n(a.max_n);
    if (a.max_k >= 0) {
        vc.k_max = std::min(vc.k_max, a.max_k);
        vc.route_k_max = std::min(vc.route_k_max, a.max_k);
        vc.transform_k_max = std::min(vc.transform_k_max, a.max_k);
    }
    if (a.max_m >= 0) vc.m_max = a.max_m;
    if (a.zeta_k_max >= 0) vc.zeta_k_max = a.zeta_k_max;
    vc.corrupt = a.corrupt;
    try {
        vc.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto report = verify::run_all(vc);
    std::ostringstream os;
    switch (cfg.format) {
        case Format::Json: os << dump(report.to_json()); break;
        case Format::Csv:
            os << "name,suite,status\n";
            for (const auto& c : report.checks) os << '"' << c.name << "\"," << c.suite << ',' << to_string(c.status) << '\n';
            break;
        case Format::Plain: os << report.to_text(); break;
    }
    text = os.str();
    return report.ok() ? kSuccess : kVerificationFailure;
}

constexpr const char* kNumSchema =
    "JSON: {n, k, variant, method, z: {num, den}, value: {num, den}}; with --poly\n"
    "{n, k, variant, method, coefficients: [{num, den}, ...]} in ascending degree.";
constexpr const char* kTableSchema =
    "JSON: {variant, n_max, k_min, k_max, routes, rows: [{k, n, value: {num, den}}]}.\n"
    "CSV header: n,k,variant,num,den. Exits 2 without output if the routes disagree.";
constexpr const char* kZetaSchema =
    "JSON: {k, m, route, mellin?: R, moment?: R, discrepancy?} with\n"
    "R = {value, imag_residue, convergence_delta, tail_bound?}. The moment route\n"
    "reports (-1)^m E[(C^(k))^-m]. Exits 2 if the routes differ by 1e-6 or more.";
constexpr const char* kMzvSchema =
    "JSON: {signature, starred, terms, value, tail_bound, interval: [lo, hi]};\n"
    "the series lies in the interval.";
constexpr const char* kVerifySchema =
    "JSON: {config, checks: [{name, suite, params, status, witness?, tolerance?,\n"
    "lhs?, rhs?, measured?, detail?}], totals: {pass, fail, skip}}. Exits 1 on any failure.";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Poly-Bernoulli numbers, umbral identities and Arakawa-Kaneko zeta values."};
    app.name("polybern");
    app.require_subcommand(1);
    app.fallthrough();
    app.footer("Exit codes: 0 success, 1 verification failure, 2 cross-check or numeric failure, 64 usage error.");

    std::string format_flag, config_path;
    double tol = 0;
    int panels = 0, nodes = 0, levels = 0;
    std::size_t cap = 0;
    bool seed_free = false;
    auto* o_format = app.add_option("--format", format_flag, "Output format: json, csv or plain (env POLYBERN_FORMAT)");
    app.add_option("--config", config_path, "File of key=value lines (format, tol, panels, nodes, levels, cap)");
    auto* o_tol = app.add_option("--tol", tol, "Quadrature tolerance (default 1e-8)");
    auto* o_panels = app.add_option("--panels", panels, "Quadrature panels per axis at the first level");
    auto* o_nodes = app.add_option("--nodes", nodes, "Gauss-Legendre nodes per panel");
    auto* o_levels = app.add_option("--levels", levels, "Refinement levels");
    auto* o_cap = app.add_option("--cap", cap, "Term cap for umbral expansions");
    app.add_flag("--seed-free", seed_free,
                 "No-op: no command uses randomness, so identical input gives identical output");

    NumArgs num_args;
    auto* num = app.add_subcommand("num", "One poly-Bernoulli number or polynomial");
    num->add_option("--n", num_args.n, "Index n >= 0")->required();
    num->add_option("--k", num_args.k, "Order k >= 1")->required();
    num->add_option("--variant", num_args.variant, "B or C");
    num->add_option("--method", num_args.method, "series, umbral or stirling");
    num->add_flag("--poly", num_args.poly, "Print the polynomial coefficients in z");
    num->add_option("--z", num_args.z, "Rational argument, e.g. -3/2");
    num->footer(kNumSchema);

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "Values at z = 0, cross-checked across three routes");
    table->add_option("--n-max", table_args.n_max, "Largest n");
    table->add_option("--k", table_args.k, "k or k_min..k_max");
    table->add_option("--variant", table_args.variant, "B or C");
    table->add_flag("--inject-disagreement", table_args.inject, "Test hook: perturb the umbral route");
    table->footer(kTableSchema);

    ZetaArgs zeta_args;
    auto* zeta = app.add_subcommand("zeta", "Arakawa-Kaneko zeta value at a positive integer");
    zeta->add_option("--k", zeta_args.k, "Order k >= 1")->required();
    zeta->add_option("--m", zeta_args.m, "Argument m >= 1")->required();
    zeta->add_option("--route", zeta_args.route, "mellin, moment or both");
    zeta->footer(kZetaSchema);

    MzvArgs mzv_args;
    auto* mzv = app.add_subcommand("mzv", "Truncated multiple zeta (star) value with a tail bound");
    mzv->add_option("--sig", mzv_args.sig, "Exponents, e.g. 3,1")->required();
    mzv->add_flag("--starred", mzv_args.starred, "Non-strict inequalities");
    mzv->add_option("--terms", mzv_args.terms, "Outer cutoff N");
    mzv->footer(kMzvSchema);

    VerifyArgs verify_args;
    auto* ver = app.add_subcommand("verify", "Run the identity checks");
    ver->add_option("--suite", verify_args.suites, "all, umbral, recurrence, transforms, zeta (repeatable)")
        ->delimiter(',');
    ver->add_option("--max-n", verify_args.max_n, "Cap every n bound");
    ver->add_option("--max-k", verify_args.max_k, "Cap every k bound");
    ver->add_option("--max-m", verify_args.max_m, "Shift bound of the higher difference check");
    ver->add_option("--zeta-k-max", verify_args.zeta_k_max, "Highest k of the numeric moment checks (<= 3)");
    ver->add_option("--corrupt", verify_args.corrupt, "Test hook: 'table' perturbs a reference polynomial");
    ver->footer(kVerifySchema);

    std::vector<const char*> argv{"polybern"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    std::string text;
    int code = kSuccess;
    try {
        CliConfig cfg;
        if (const char* env = std::getenv("POLYBERN_FORMAT"); env && *env) cfg.format = parse_format(env);
        if (!config_path.empty()) read_config_file(cfg, config_path);
        if (o_format->count()) cfg.format = parse_format(format_flag);
        if (o_tol->count()) cfg.quadrature.tolerance = tol;
        if (o_panels->count()) cfg.quadrature.panels = panels;
        if (o_nodes->count()) cfg.quadrature.nodes = nodes;
        if (o_levels->count()) cfg.quadrature.levels = levels;
        if (o_cap->count()) cfg.cap = cap;
        cfg.validate();

        if (num->parsed()) text = cmd_num(num_args, cfg);
        else if (table->parsed()) text = cmd_table(table_args, cfg);
        else if (zeta->parsed()) code = cmd_zeta(zeta_args, cfg, text, err);
        else if (mzv->parsed()) text = cmd_mzv(mzv_args, cfg);
        else code = cmd_verify(verify_args, cfg, text);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::domain_error& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const CrossCheckError& e) {
        err << "cross-check failure: " << e.what() << '\n';
        return kCrossCheckFailure;
    } catch (const numeric::ConvergenceError& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kCrossCheckFailure;
    } catch (const umbral::ExpansionLimitError& e) {
        err << "expansion cap exceeded: " << e.what() << '\n';
        return kCrossCheckFailure;
    }
    out << text << std::flush;
    return code;
}

}  // namespace polybern::cli
