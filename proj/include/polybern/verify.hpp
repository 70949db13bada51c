#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "polybern/polybernoulli.hpp"
#include "polybern/quadrature.hpp"

namespace polybern::verify {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Skip };
std::string to_string(Status s);

struct IdentityCheck {
    std::string name;
    std::string suite;
    Json params = Json::object();
    Status status = Status::Pass;
    /// First counterexample found: for falsification checks this is the
    /// evidence that makes them pass, otherwise it explains a failure.
    std::optional<Json> witness;
    std::optional<std::string> lhs;
    std::optional<std::string> rhs;
    std::optional<double> tolerance;
    /// Measured quantities for numeric checks.
    Json measured = Json::object();
    std::string detail;
};

struct Totals {
    int pass = 0;
    int fail = 0;
    int skip = 0;
};

inline const std::vector<std::string> kSuites{"umbral", "recurrence", "transforms", "zeta"};

struct VerifyConfig {
    int n_max = 15;
    int k_max = 4;
    int m_max = 5;
    int route_n_max = 20;
    int route_k_max = 5;
    int cube_n_max = 12;
    int simplex_n_max = 10;
    int transform_k_max = 4;
    int reduction_n_max = 30;
    int axiom_n_max = 30;
    int generating_order = 8;
    int falsification_case_cap = 48;
    /// Highest k for the numeric moment checks; k = 3 costs about a minute.
    int zeta_k_max = 2;
    std::set<std::string> suites{kSuites.begin(), kSuites.end()};
    numeric::QuadratureSpec quadrature;
    /// Test hook: "table" perturbs one cached reference polynomial.
    std::string corrupt;

    /// Caps every n bound at n.
    void narrow_n(int n);
    void validate() const;
    Json to_json() const;
};

struct VerificationReport {
    VerifyConfig config;
    std::vector<IdentityCheck> checks;
    Totals totals;

    bool ok() const { return totals.fail == 0; }
    Json to_json() const;
    /// Fixed-width summary table.
    std::string to_text() const;
};

/// Series-route tables shared by the checks, computed once per (k, variant).
class ReferenceTables {
public:
    explicit ReferenceTables(long n_cap, bool corrupt = false) : n_cap_(n_cap), corrupt_(corrupt) {}
    const PolyBernoulliTable& get(int k, Variant v);
    const std::vector<ZPolynomial>& bernoulli();

private:
    long n_cap_;
    bool corrupt_;
    std::map<std::pair<int, int>, PolyBernoulliTable> tables_;
    std::vector<ZPolynomial> bernoulli_;
};

// Exact identities, z formal, compared coefficient-wise. Each variant
// argument selects the B or C form of the identity.

/// B_n^(k)(z) = sum_m C(n,m) B_{n-m}^(k-1) sum_l C(m,l) (-1)^{m-l} B_l(z+1)/(n-l+1);
/// C_n^(k)(z) = sum_m C(n,m) B_m(z) C_{n-m}^(k-1)/(n-m+1).
IdentityCheck check_recurrence(ReferenceTables& t, int n_max, int k_max, Variant v);

/// Sign reading of the variant recurrence with B_l(z) in place of B_l(z+1).
enum class SignReading { ProductOfSigns, InnerSignOnly };
std::string to_string(SignReading r);

/// Passes when the variant recurrence disagrees with B_n^(k)(z) somewhere in
/// the scanned grid (at most case_cap cases, k >= 2 first, then n).
IdentityCheck check_recurrence_variant_falsified(ReferenceTables& t, int n_max, int k_max, SignReading r,
                                                 int case_cap = 48);

/// B_n^(k)(z) = 1/(n+1) sum_l C(n+1,l+1) B_{n-l}(z+1) B_l^(k-1)(-1), the C form,
/// and the equivalent sum over p = l+1 for the C form.
IdentityCheck check_connection(ReferenceTables& t, int n_max, int k_max, Variant v);
IdentityCheck check_connection_fourier_form(ReferenceTables& t, int n_max, int k_max);

/// B_n^(k)(z) - B_n^(k)(z-1) = sum_{l>=1} C(n,l) z^{n-l} B_{l-1}^(k-1)(-1);
/// C_n^(k)(z+1) - C_n^(k)(z) = sum_{l>=1} C(n,l) z^{n-l} C_{l-1}^(k-1).
IdentityCheck check_difference(ReferenceTables& t, int n_max, int k_max, Variant v);

/// Shift by an integer m <= m_max.
IdentityCheck check_higher_difference(ReferenceTables& t, int n_max, int k_max, int m_max, Variant v);

/// sum_{i<m} (1+z+i)^d = (B_{d+1}(m+z+1) - B_{d+1}(z+1))/(d+1).
IdentityCheck check_faulhaber(ReferenceTables& t, int d_max, int m_max);

/// f(1+z+C^(k)) - f(z+C^(k)) = E[(f(z+C^(k-1)) - f(z))/C^(k-1)] for f = z^n,
/// the quotient formed before evaluation; k = 1 reads f'(z).
IdentityCheck check_symbolic_extension(int n_max, int k_max);

/// The same display with the poly-Bernoulli symbol B^(k) in place of C^(k);
/// passes when a counterexample is found.
IdentityCheck check_symbolic_extension_b_form_falsified(int n_max, int k_max);

/// prod_{i<=k} t p_i/(e^{t p_i} - 1), p_i = u_i...u_{k-1}, integrated over the
/// u's coefficient by coefficient, equals sum C_n^(k) t^n/n!.
IdentityCheck check_generating_identity(ReferenceTables& t, int k_max, int order);

/// Umbral-engine invariants.
std::vector<IdentityCheck> check_umbral_axioms(int n_max, int factor_max, int recursion_k_max);

/// Route agreement, k = 1 reduction, monic degree, B/C conversion and the
/// two Barnes transforms.
std::vector<IdentityCheck> check_polybernoulli_invariants(ReferenceTables& t, const VerifyConfig& cfg);

/// Numeric cross-checks of the zeta layer.
std::vector<IdentityCheck> check_zeta(const VerifyConfig& cfg);

VerificationReport run_all(const VerifyConfig& cfg);

}  // namespace polybern::verify
