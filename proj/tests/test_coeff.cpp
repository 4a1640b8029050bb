#include "catch_amalgamated.hpp"

#include "brauer/coeff.hpp"

using namespace brauer;

namespace {
LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }
} // namespace

TEST_CASE("gaussian rationals", "[coeff]") {
    GaussRational i = GaussRational::i();
    CHECK(i * i == GaussRational(-1));
    CHECK((GaussRational(1) / GaussRational(3)) * GaussRational(3) == GaussRational(1));
    CHECK(i.inverse() == -i);
    CHECK(i.pow(4).is_one());
    CHECK_THROWS_AS(GaussRational(0).inverse(), DivisionByZero);
    CHECK(GaussRational(mpq_class(1, 2), 1).str() == "(1/2 + i)");
}

TEST_CASE("laurent polynomial arithmetic", "[coeff]") {
    LaurentPoly q = LaurentPoly::var("q");
    CHECK((q - q.inverse()) * (q + q.inverse()) == q * q - q.pow(-2));
    CHECK((q + 1) * (q - 1) == q * q - 1);
    CHECK((q + 1 - q - 1).is_zero());
    CHECK(q.pow(3) * q.pow(-3) == LaurentPoly(1));
    CHECK(P("2*v^-1*z") / P("z") == P("2*v^-1"));
    CHECK_THROWS_AS((q + 1).inverse(), NonInvertibleSubstitution);
    CHECK(P("i*i") == LaurentPoly(-1));
    CHECK(poly_arith(PolyOp::neg, q) == -q);
}

TEST_CASE("parse and print round trip", "[coeff]") {
    for (const char* s : {"0", "1", "-1", "q - q^-1", "v^-1*z^-1 - v*z^-1 + 1", "(1/2)*lambda^2", "2*i*b",
                          "delta", "-3*q^2*r + 7"}) {
        LaurentPoly p = P(s);
        CHECK(P(p.str().c_str()) == p);
    }
    CHECK(P("λ") == LaurentPoly::var("lambda"));
    CHECK(P("ς'") == LaurentPoly::var("sigma'"));
    CHECK(P("(q+1)^2") == P("q^2 + 2*q + 1"));
    CHECK_THROWS_AS(P("q +"), SyntaxError);
    CHECK_THROWS_AS(P("(q+1)^-1"), SyntaxError);
    CHECK_THROWS_AS(P("s(1)"), SyntaxError);
}

TEST_CASE("substitution and evaluation", "[coeff]") {
    LaurentPoly p = P("b^-1*lambda + b");
    std::map<VarId, LaurentPoly> sub{{var_id("b"), P("2*q")}};
    CHECK(poly_substitute(p, sub) == P("(1/2)*q^-1*lambda + 2*q"));
    CHECK_THROWS_AS(poly_substitute(p, {{var_id("b"), P("q - 1")}}), NonInvertibleSubstitution);
    CHECK_THROWS_AS(poly_substitute(p, {{var_id("b"), LaurentPoly()}}), NonInvertibleSubstitution);
    std::map<VarId, GaussRational> pt{{var_id("b"), 2}, {var_id("lambda"), 4}};
    CHECK(poly_eval(p, pt) == GaussRational(4));
    CHECK_THROWS_AS(poly_eval(p, {{var_id("b"), 2}}), MissingBinding);
    CHECK_THROWS_AS(poly_eval(p, {{var_id("b"), 0}, {var_id("lambda"), 1}}), DivisionByZero);
}

TEST_CASE("fractions compare by cross multiplication", "[coeff]") {
    LaurentPoly q = LaurentPoly::var("q");
    Frac a(q * q - 1, q - 1), b(q + 1);
    CHECK(a == b);
    CHECK(a / b == Frac(1));
    CHECK(a - b == Frac(0));
    CHECK_THROWS_AS(Frac(1) / Frac(0), DivisionByZero);
}
