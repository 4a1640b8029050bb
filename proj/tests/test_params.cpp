#include "catch_amalgamated.hpp"

#include <algorithm>

#include "brauer/params.hpp"

using namespace brauer;

namespace {
LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }
} // namespace

TEST_CASE("every row and e-choice is consistent", "[params]") {
    int combos = 0;
    for (auto f : all_families())
        for (int eps : {1, -1})
            for (auto& ch : legal_e_choices(f, eps)) {
                ++combos;
                auto p = family_instantiate(f, eps, ch.e, ch.e_prime, symbolic_bindings(f));
                INFO(family_name(f) << " eps=" << eps << " e=" << ch.e.str() << " e'=" << ch.e_prime.str());
                CHECK(check_consistency(p).empty());
                auto rows = classify(p);
                CHECK(std::find_if(rows.begin(), rows.end(), [&](auto& r) { return r.rfind(family_name(f), 0) == 0; }) !=
                      rows.end());
            }
    CHECK(combos > 13);
}

TEST_CASE("mutating a dependent parameter is detected", "[params]") {
    for (auto f : all_families())
        for (int eps : {1, -1})
            for (auto& ch : legal_e_choices(f, eps)) {
                auto p = family_instantiate(f, eps, ch.e, ch.e_prime, symbolic_bindings(f));
                auto red = family_red_vars(f);
                for (auto& [name, fld] : poly_fields()) {
                    if (std::find(red.begin(), red.end(), name) != red.end()) continue;
                    CategoryParams q = p;
                    q.*fld = q.*fld + 1;
                    INFO(family_name(f) << " field " << name);
                    CHECK_FALSE(check_consistency(q).empty());
                }
            }
}

TEST_CASE("preset records", "[params]") {
    auto pq = preset("periplectic_q");
    CHECK(pq.epsilon == -1);
    CHECK(pq.lambda == P("q"));
    CHECK(pq.lambda_prime == P("-q^-1"));
    CHECK(pq.delta.is_zero());
    CHECK(pq.sigma_prime == P("-1"));
    CHECK(pq.a.is_one());
    CHECK(pq.b == P("q - q^-1"));
    CHECK(pq.c.is_zero());
    CHECK(pq.rho == P("-q"));
    CHECK(pq.d.is_zero());
    CHECK(pq.f_prime.is_zero());
    CHECK(pq.d_prime == P("q^-1 - q"));
    CHECK(pq.D.is_zero());
    CHECK(pq.E.is_zero());
    CHECK(pq.D_prime == P("1 - q^2"));
    CHECK(pq.E_prime == P("q - q^-1"));
    CHECK(pq.F.is_one());
    CHECK(pq.F_prime.is_one());

    auto bwm = preset("bwm");
    CHECK(bwm.a.is_one());
    CHECK(bwm.rho == P("v^-1"));
    CHECK(bwm.c == P("-z*v"));
    CHECK(bwm.d == P("-z"));
    CHECK(bwm.d_prime == P("-z"));
    CHECK(bwm.D.is_zero());
    CHECK(bwm.D_prime.is_zero());
    CHECK(bwm.F.is_one());
    // v^-1 = v - z + z delta
    CHECK(P("v^-1") == bwm.lambda - bwm.b + bwm.b * bwm.delta);

    auto br = preset("brauer");
    CHECK(br.lambda.is_one());
    CHECK(br.a.is_one());
    CHECK(br.b.is_zero());
    CHECK(br.delta == P("delta"));

    auto per = preset("periplectic");
    CHECK(per.epsilon == -1);
    CHECK(per.lambda_prime == P("-1"));
    CHECK(per.delta.is_zero());

    for (auto& n : preset_names()) CHECK(check_consistency(preset(n)).empty());
    CHECK_THROWS_AS(preset("nope"), UnknownPreset);
    CHECK(classify(preset("family:Cbb_l_s:+:1:1")) == std::vector<std::string>{"Cbb_l_s(+,1,1)"});
    CHECK(preset("family:C00_ml_s:-").epsilon == -1);
    CHECK_THROWS_AS(preset("family:C00_ml_s:x"), EChoiceInvalid);
}

TEST_CASE("instantiation errors", "[params]") {
    auto b = symbolic_bindings(FamilyId::Cbb_l_s);
    CHECK_THROWS_AS(family_instantiate(FamilyId::Cbb_l_s, 1, GaussRational::i(), GaussRational::i(), b), EChoiceInvalid);
    auto z = b;
    z["sigma"] = LaurentPoly();
    CHECK_THROWS_AS(family_instantiate(FamilyId::Cbb_l_s, 1, 1, 1, z), ZeroForbidden);
    auto missing = b;
    missing.erase("delta");
    CHECK_THROWS_AS(family_instantiate(FamilyId::Cbb_l_s, 1, 1, 1, missing), MissingBinding);
    auto extra = b;
    extra["rho"] = LaurentPoly(1);
    CHECK_THROWS_AS(family_instantiate(FamilyId::Cbb_l_s, 1, 1, 1, extra), MissingBinding);
}

TEST_CASE("json round trip", "[params]") {
    for (auto& n : preset_names()) {
        auto p = preset(n);
        auto q = CategoryParams::from_json(p.to_json());
        CHECK(p == q);
        CHECK(p.fingerprint() == q.fingerprint());
    }
    CHECK(CategoryParams::from_json(R"({"preset": "bwm"})") == preset("bwm"));
    CHECK_FALSE(preset("bwm").fingerprint() == preset("brauer").fingerprint());
}

TEST_CASE("limits between rows", "[params]") {
    auto lims = check_limits();
    CHECK(lims.size() > 16);
    for (auto& l : lims) {
        INFO(l.description << " " << l.detail);
        CHECK(l.ok);
    }
}

TEST_CASE("wenzl report", "[params]") {
    auto r = wenzl_feasibility();
    CHECK_FALSE(r.feasible);
    CHECK_FALSE(r.witness.empty());
    CHECK(r.witness != "0");
    CHECK(r.bwm_feasible);
    CHECK_FALSE(r.survivors.empty());
}
