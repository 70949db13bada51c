#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "polybern/verify.hpp"

namespace polybern::verify {

void VerifyConfig::narrow_n(int n) {
    for (int* b : {&n_max, &route_n_max, &cube_n_max, &simplex_n_max, &reduction_n_max, &axiom_n_max,
                   &generating_order})
        *b = std::min(*b, n);
}

void VerifyConfig::validate() const {
    for (int b : {n_max, k_max, m_max, route_n_max, route_k_max, cube_n_max, simplex_n_max, transform_k_max,
                  reduction_n_max, axiom_n_max, generating_order, falsification_case_cap, zeta_k_max})
        if (b < 0) throw std::invalid_argument("verify: bounds must be non-negative");
    if (route_k_max < 1 || k_max < 1 || transform_k_max < 1)
        throw std::invalid_argument("verify: k bounds must be >= 1");
    if (zeta_k_max > 3) throw std::invalid_argument("verify: zeta_k_max must be <= 3");
    for (const auto& s : suites)
        if (std::find(kSuites.begin(), kSuites.end(), s) == kSuites.end())
            throw std::invalid_argument("verify: unknown suite '" + s + "'");
    if (!corrupt.empty() && corrupt != "table") throw std::invalid_argument("verify: unknown corruption '" + corrupt + "'");
    quadrature.validate();
}

Json VerifyConfig::to_json() const {
    Json s = Json::array();
    for (const auto& name : kSuites)
        if (suites.count(name)) s.push_back(name);
    Json j{{"n_max", n_max},
           {"k_max", k_max},
           {"m_max", m_max},
           {"route_n_max", route_n_max},
           {"route_k_max", route_k_max},
           {"cube_n_max", cube_n_max},
           {"simplex_n_max", simplex_n_max},
           {"transform_k_max", transform_k_max},
           {"reduction_n_max", reduction_n_max},
           {"axiom_n_max", axiom_n_max},
           {"generating_order", generating_order},
           {"falsification_case_cap", falsification_case_cap},
           {"zeta_k_max", zeta_k_max},
           {"suites", s},
           {"quadrature",
            {{"panels", quadrature.panels},
             {"nodes", quadrature.nodes},
             {"levels", quadrature.levels},
             {"tolerance", quadrature.tolerance}}}};
    if (!corrupt.empty()) j["corrupt"] = corrupt;
    return j;
}

Json VerificationReport::to_json() const {
    Json checks_json = Json::array();
    for (const auto& c : checks) {
        Json j{{"name", c.name}, {"suite", c.suite}, {"params", c.params}, {"status", to_string(c.status)}};
        if (c.witness) j["witness"] = *c.witness;
        if (c.tolerance) j["tolerance"] = *c.tolerance;
        if (c.lhs) j["lhs"] = *c.lhs;
        if (c.rhs) j["rhs"] = *c.rhs;
        if (!c.measured.empty()) j["measured"] = c.measured;
        if (!c.detail.empty()) j["detail"] = c.detail;
        checks_json.push_back(std::move(j));
    }
    return Json{{"config", config.to_json()},
                {"checks", checks_json},
                {"totals", {{"pass", totals.pass}, {"fail", totals.fail}, {"skip", totals.skip}}}};
}

std::string VerificationReport::to_text() const {
    std::size_t w = 5;
    for (const auto& c : checks) w = std::max(w, c.name.size());
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(w)) << "check" << "  " << std::setw(10) << "suite" << "  status\n";
    os << std::string(w + 20, '-') << '\n';
    for (const auto& c : checks) {
        os << std::setw(static_cast<int>(w)) << c.name << "  " << std::setw(10) << c.suite << "  "
           << to_string(c.status);
        if (c.status == Status::Fail && c.witness) os << "  witness " << c.witness->dump();
        os << '\n';
    }
    os << std::string(w + 20, '-') << '\n';
    os << "pass " << totals.pass << "  fail " << totals.fail << "  skip " << totals.skip << '\n';
    return os.str();
}

namespace {

std::vector<IdentityCheck> run_suite(const std::string& suite, const VerifyConfig& cfg, ReferenceTables& t) {
    std::vector<IdentityCheck> out;
    if (suite == "umbral") return check_umbral_axioms(cfg.axiom_n_max, 10, 6);
    if (suite == "recurrence") {
        for (Variant v : {Variant::B, Variant::C}) {
            out.push_back(check_recurrence(t, cfg.n_max, cfg.k_max, v));
            out.push_back(check_connection(t, cfg.n_max, cfg.k_max, v));
            out.push_back(check_difference(t, cfg.n_max, cfg.k_max, v));
            out.push_back(check_higher_difference(t, cfg.n_max, cfg.k_max, cfg.m_max, v));
        }
        out.push_back(check_connection_fourier_form(t, cfg.n_max, cfg.k_max));
        out.push_back(check_faulhaber(t, cfg.n_max, cfg.m_max));
        for (SignReading r : {SignReading::ProductOfSigns, SignReading::InnerSignOnly})
            out.push_back(check_recurrence_variant_falsified(t, std::min(cfg.n_max, 6), std::min(cfg.k_max, 3), r,
                                                             cfg.falsification_case_cap));
        out.push_back(check_symbolic_extension(cfg.n_max, cfg.k_max));
        out.push_back(check_symbolic_extension_b_form_falsified(cfg.n_max, cfg.k_max));
        return out;
    }
    if (suite == "transforms") {
        out = check_polybernoulli_invariants(t, cfg);
        out.push_back(check_generating_identity(t, std::min(cfg.k_max, 3), cfg.generating_order));
        return out;
    }
    return check_zeta(cfg);
}

// Names produced by each suite, used for the skip entries of unselected suites.
std::vector<std::string> suite_names(const std::string& suite) {
    VerifyConfig empty;
    empty.suites = {};
    if (suite == "zeta") {
        return {"zeta_barnes_lemma",      "zeta_double_integral",
                "zeta_double_integral_extra_numerator_falsified",
                "zeta_duality_bracket",   "zeta_moment_values",
                "zeta_mzsv_bridge",       "zeta_polygamma_bridge",
                "zeta_shifted_bernoulli_moment", "zeta_substitution_exactness",
                "zeta_telescoping",       "zeta_two_route_agreement"};
    }
    // The exact suites are cheap at n = 0.
    empty.narrow_n(0);
    empty.k_max = empty.route_k_max = empty.transform_k_max = 1;
    ReferenceTables t(2);
    std::vector<std::string> names;
    for (const auto& c : run_suite(suite, empty, t)) names.push_back(c.name);
    return names;
}

}  // namespace

VerificationReport run_all(const VerifyConfig& cfg) {
    cfg.validate();
    VerificationReport rep;
    rep.config = cfg;
    const int cap = std::max({cfg.n_max, cfg.route_n_max, cfg.cube_n_max, cfg.simplex_n_max, cfg.reduction_n_max,
                              cfg.generating_order}) + 1;
    ReferenceTables tables(cap, cfg.corrupt == "table");
    for (const auto& suite : kSuites) {
        if (cfg.suites.count(suite)) {
            auto checks = run_suite(suite, cfg, tables);
            for (auto& c : checks) rep.checks.push_back(std::move(c));
        } else {
            for (const auto& name : suite_names(suite)) {
                IdentityCheck c;
                c.name = name;
                c.suite = suite;
                c.status = Status::Skip;
                c.detail = "suite not selected";
                rep.checks.push_back(std::move(c));
            }
        }
    }
    std::stable_sort(rep.checks.begin(), rep.checks.end(),
                     [](const IdentityCheck& a, const IdentityCheck& b) { return a.name < b.name; });
    for (const auto& c : rep.checks) {
        if (c.status == Status::Pass) ++rep.totals.pass;
        else if (c.status == Status::Fail) ++rep.totals.fail;
        else ++rep.totals.skip;
    }
    return rep;
}

}  // namespace polybern::verify
