#include "catch_amalgamated.hpp"

#include <random>

#include "brauer/algebra.hpp"
#include "oracles.hpp"

using namespace brauer;

namespace {
LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }
} // namespace

TEST_CASE("basis dimensions", "[algebra]") {
    for (int n = 1; n <= 4; ++n)
        CHECK(static_cast<long>(enumerate_diagrams(n, n).size()) == oracle::double_factorial(2 * n - 1));
}

TEST_CASE("generators", "[algebra]") {
    auto G = gens(2, preset("brauer"));
    REQUIRE(G.g.size() == 1);
    CHECK(G.g[0].terms.begin()->first == letter_diagram(Letter::X(1), 2));
    CHECK(G.e[0].terms.begin()->first == diagram_new(2, 2, {{0, 1}, {2, 3}}));
    CHECK_THROWS_AS(gens(1, preset("brauer")), WidthTooSmall);

    auto p = preset("periplectic_q");
    Engine e(p);
    auto Q = gens(2, e);
    CHECK(e.compose(Q.g[0], Q.e[0]) == P("q") * Q.e[0]);
    CHECK(e.compose(Q.e[0], Q.g[0]) == P("-q^-1") * Q.e[0]);
}

TEST_CASE("multiplication tables", "[algebra]") {
    auto t1 = mult_table(1, preset("bwm"));
    REQUIRE(t1.basis.size() == 1);
    CHECK(t1.products[0][0] == basis_nf(identity_diagram(1)));

    auto br = preset("brauer");
    auto t2 = mult_table(2, br);
    REQUIRE(t2.basis.size() == 3);
    auto e1 = diagram_new(2, 2, {{0, 1}, {2, 3}});
    size_t ie = std::find(t2.basis.begin(), t2.basis.end(), e1) - t2.basis.begin();
    CHECK(t2.products[ie][ie] == P("delta") * basis_nf(e1));

    // every product in End(3) of the Brauer preset is delta^loops times the stacked diagram
    auto t3 = mult_table(3, br);
    for (size_t i = 0; i < t3.basis.size(); ++i)
        for (size_t j = 0; j < t3.basis.size(); ++j) {
            auto c = diagram_compose_oracle(t3.basis[i], t3.basis[j]);
            CHECK(t3.products[i][j] == P("delta").pow(c.loops) * basis_nf(c.result));
        }

    auto tq = mult_table(3, preset("periplectic_q"));
    CHECK(tq.basis.size() == 15);
    Engine eq(preset("periplectic_q"));
    auto G = gens(3, eq);
    CHECK(eq.compose(G.e[0], eq.compose(G.e[1], G.e[0])) == LaurentPoly(-1) * G.e[0]);
    CHECK_THROWS(mult_table(5, br));
}

TEST_CASE("identity is a unit and tables associate", "[algebra]") {
    auto p = preset("periplectic_q");
    auto t = mult_table(3, p);
    size_t id = std::find(t.basis.begin(), t.basis.end(), identity_diagram(3)) - t.basis.begin();
    Engine e(p);
    for (size_t i = 0; i < t.basis.size(); ++i) {
        CHECK(t.products[id][i] == e.basis(t.basis[i]));
        CHECK(t.products[i][id] == e.basis(t.basis[i]));
    }
    std::mt19937 rng(17);
    auto mul = [&](const NormalForm& x, const NormalForm& y) { return e.compose(x, y); };
    for (int it = 0; it < 500; ++it) {
        auto x = e.basis(t.basis[rng() % 15]), y = e.basis(t.basis[rng() % 15]), z = e.basis(t.basis[rng() % 15]);
        CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
    }
}

TEST_CASE("presentations", "[algebra]") {
    for (const char* name : {"bwm", "brauer", "periplectic_q", "periplectic"})
        for (int n : {3, 4}) {
            INFO(name << " n=" << n);
            CHECK(check_presentation(name, n).empty());
        }
    auto bad = preset("bwm");
    bad.rho = bad.rho + 1;
    auto failed = check_presentation("bwm", 3, bad);
    CHECK(std::find(failed.begin(), failed.end(), "e_i g_{i+1} e_i = v^-1 e_i") != failed.end());
    CHECK_THROWS_AS(check_presentation("periplectic_q_op", 3), UnknownPreset);
}

TEST_CASE("q = 1 recovers the periplectic tables", "[algebra]") {
    std::map<VarId, LaurentPoly> at1{{var_id("q"), LaurentPoly(1)}};
    for (int n = 1; n <= 3; ++n) {
        auto tq = mult_table(n, preset("periplectic_q")), tp = mult_table(n, preset("periplectic"));
        REQUIRE(tq.basis == tp.basis);
        for (size_t i = 0; i < tq.basis.size(); ++i)
            for (size_t j = 0; j < tq.basis.size(); ++j) {
                NormalForm s{n, n, {}, 0};
                for (auto& [d, c] : tq.products[i][j].terms) s.add(d, poly_substitute(c, at1));
                CHECK(s == tp.products[i][j]);
            }
    }
}
