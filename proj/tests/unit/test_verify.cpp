#include <doctest.h>

#include <algorithm>

#include "polybern/verify.hpp"

using namespace polybern;
using namespace polybern::verify;

namespace {

VerifyConfig exact_only() {
    VerifyConfig cfg;
    cfg.suites = {"umbral", "recurrence", "transforms"};
    cfg.route_k_max = 4;
    return cfg;
}

const IdentityCheck& find(const VerificationReport& r, const std::string& name) {
    const auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const auto& c) { return c.name == name; });
    REQUIRE(it != r.checks.end());
    return *it;
}

}  // namespace

TEST_CASE("verify: individual checks at small bounds") {
    ReferenceTables t(8);
    CHECK(check_recurrence(t, 5, 2, Variant::C).status == Status::Pass);
    CHECK(check_recurrence(t, 0, 4, Variant::B).status == Status::Pass);
    CHECK(check_connection(t, 6, 3, Variant::B).status == Status::Pass);
    CHECK(check_higher_difference(t, 0, 2, 0, Variant::C).status == Status::Pass);
    CHECK(check_faulhaber(t, 3, 4).status == Status::Pass);
    CHECK(check_recurrence(t, 5, 1, Variant::B).status == Status::Skip);
    CHECK(check_generating_identity(t, 1, 8).status == Status::Pass);
    CHECK(check_symbolic_extension(3, 1).status == Status::Pass);
}

TEST_CASE("verify: variant recurrence witnesses") {
    ReferenceTables t(8);
    const auto a = check_recurrence_variant_falsified(t, 6, 3, SignReading::ProductOfSigns);
    const auto b = check_recurrence_variant_falsified(t, 6, 3, SignReading::InnerSignOnly);
    for (const auto* c : {&a, &b}) {
        CHECK(c->status == Status::Pass);
        REQUIRE(c->witness);
        CHECK((*c->witness)["n"].get<int>() >= 1);
        CHECK((*c->witness)["n"].get<int>() <= 6);
        CHECK((*c->witness)["k"].get<int>() <= 3);
    }
    // n = 1, k = 2: B_1^(2)(z) = z + 1/4; the product-of-signs reading gives z - 3/4.
    CHECK(*a.lhs == "z + 1/4");
    CHECK(*a.rhs == "z - 3/4");
    const auto none = check_recurrence_variant_falsified(t, 0, 3, SignReading::ProductOfSigns);
    CHECK(none.status == Status::Fail);
}

TEST_CASE("verify: literal symbolic extension is falsified") {
    const auto c = check_symbolic_extension_b_form_falsified(6, 3);
    CHECK(c.status == Status::Pass);
    REQUIRE(c.witness);
}

TEST_CASE("verify: exact suites pass and are deterministic") {
    const auto cfg = exact_only();
    const auto r1 = run_all(cfg);
    CHECK(r1.ok());
    CHECK(r1.totals.fail == 0);
    for (const auto& c : r1.checks)
        if (c.suite == "zeta") CHECK(c.status == Status::Skip);
    CHECK(std::is_sorted(r1.checks.begin(), r1.checks.end(),
                         [](const auto& a, const auto& b) { return a.name < b.name; }));
    const auto r2 = run_all(cfg);
    CHECK(r1.to_json().dump() == r2.to_json().dump());
    CHECK(r1.to_text() == r2.to_text());
}

TEST_CASE("verify: narrowed config still passes with more skips") {
    VerifyConfig cfg;
    cfg.suites = {"recurrence"};
    cfg.narrow_n(3);
    const auto r = run_all(cfg);
    CHECK(r.ok());
    CHECK(r.totals.skip > 0);
    CHECK(find(r, "recurrence_variant_falsified[product-of-signs]").status == Status::Pass);
}

TEST_CASE("verify: corrupted table is caught with a witness") {
    auto cfg = exact_only();
    cfg.corrupt = "table";
    const auto r = run_all(cfg);
    CHECK_FALSE(r.ok());
    const auto& c = find(r, "recurrence_B");
    CHECK(c.status == Status::Fail);
    REQUIRE(c.witness);
    CHECK((*c.witness)["n"] == 3);
    CHECK((*c.witness)["k"] == 2);
}

TEST_CASE("verify: zeta suite names match the skip list") {
    VerifyConfig cfg;
    cfg.suites = {"zeta"};
    const auto ran = run_all(cfg);
    cfg.suites = {"umbral"};
    const auto skipped = run_all(cfg);
    std::vector<std::string> a, b;
    for (const auto& c : ran.checks)
        if (c.suite == "zeta") {
            a.push_back(c.name);
            CHECK(c.status == Status::Pass);
            CHECK(c.tolerance);
        }
    for (const auto& c : skipped.checks)
        if (c.suite == "zeta") b.push_back(c.name);
    CHECK(a == b);
}

TEST_CASE("verify: config validation") {
    VerifyConfig cfg;
    cfg.suites = {"nope"};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = VerifyConfig{};
    cfg.n_max = -1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = VerifyConfig{};
    cfg.corrupt = "other";
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
