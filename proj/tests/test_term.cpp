#include "catch_amalgamated.hpp"

#include "brauer/term.hpp"

using namespace brauer;

TEST_CASE("width propagation", "[term]") {
    CHECK(word_new(0, {Letter::C(1), Letter::A(1)}).codomain() == 0);
    CHECK(word_new(2, {Letter::X(1)}).codomain() == 2);
    CHECK(word_new(1, {Letter::C(2)}).codomain() == 3);
    try {
        word_new(2, {Letter::X(1), Letter::A(1), Letter::X(1)});
        FAIL("expected a width violation");
    } catch (const WidthViolation& e) {
        CHECK(e.level == 2);
    }
    CHECK_THROWS_AS(word_new(2, {Letter::C(4)}), WidthViolation);
    CHECK_THROWS_AS(word_new(3, {Letter::A(0)}), WidthViolation);
}

TEST_CASE("expression parsing", "[term]") {
    auto e = parse_expr("a(1)@2 . u(1)@0");
    CHECK(e->m == 0);
    CHECK(e->n == 0);
    auto ws = expr_flatten(*e);
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].word == GenWord{0, {Letter::C(1), Letter::A(1)}});

    // the tensor binds tighter than composition
    auto t = parse_expr("s(1)@2 # id@1 . id@1 # u(1)@0");
    CHECK(t->m == 1);
    CHECK(t->n == 3);
    auto tw = expr_flatten(*t);
    REQUIRE(tw.size() == 1);
    CHECK(tw[0].word == GenWord{1, {Letter::C(2), Letter::X(1)}});

    auto s = parse_expr("q * s(1)@2 - (q - q^-1) * id@2 + s(1)@2 . s(1)@2");
    auto sw = expr_flatten(*s);
    CHECK(sw.size() == 3);
    CHECK(sw[0].coeff == LaurentPoly::var("q"));
    CHECK(sw[1].coeff == -(LaurentPoly::var("q") - LaurentPoly::var("q", -1)));

    CHECK_THROWS_AS(parse_expr("s(1)@2 ."), SyntaxError);
    CHECK_THROWS_AS(parse_expr("x(1)@2"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("a(9)@2"), WidthViolation);
    CHECK_THROWS_AS(parse_expr("a(1)@2 . a(1)@2"), WidthViolation);
    try {
        parse_expr("s(1)@2 . (u(1)@0");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& err) {
        CHECK(err.pos == 16);
    }
}

TEST_CASE("printing is parseable", "[term]") {
    for (const char* s : {"id@0", "u(1)@0", "a(1)@2 . u(1)@0", "(2*q) * s(1)@2 + id@2", "s(1)@2 # a(1)@2",
                          "-(u(2)@1 . id@1 # id@0)"}) {
        auto e = parse_expr(s);
        auto again = parse_expr(expr_print(*e));
        auto a = expr_flatten(*e), b = expr_flatten(*again);
        REQUIRE(a.size() == b.size());
        for (size_t k = 0; k < a.size(); ++k) {
            CHECK(a[k].word == b[k].word);
            CHECK(a[k].coeff == b[k].coeff);
        }
    }
}
