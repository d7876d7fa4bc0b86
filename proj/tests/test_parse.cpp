#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <orush/parse.hpp>
#include <utility>
#include <vector>

using namespace orush;

namespace {

Poly<Int> zp(std::vector<std::pair<Exp, long>> terms) {
    Poly<Int> p;
    for (const auto& [e, c] : terms) p.add_term(e, Int(c));
    return p;
}

}  // namespace

TEST_CASE("precedence, juxtaposition and signs") {
    // a minus between factors is subtraction, never an implicit product
    CHECK(eval_int_poly("2-3") == zp({{Exp{0, 0}, -1}}));
    // but adjacency is multiplication, even between two literals
    CHECK(eval_int_poly("2 3") == zp({{Exp{0, 0}, 6}}));
    CHECK(eval_int_poly("2x") == zp({{Exp{1, 0}, 2}}));
    CHECK(eval_int_poly("x y") == zp({{Exp{1, 1}, 1}}));
    CHECK(eval_int_poly("2(1+x)") == zp({{Exp{0, 0}, 2}, {Exp{1, 0}, 2}}));

    // caret binds tighter than juxtaposition: 2x^3 is 2*(x^3)
    CHECK(eval_int_poly("2x^3") == zp({{Exp{3, 0}, 2}}));
    // and tighter than unary minus
    CHECK(eval_int_poly("-x^2") == zp({{Exp{2, 0}, -1}}));

    // left associativity
    CHECK(eval_int_poly("1-2-3") == zp({{Exp{0, 0}, -4}}));
    CHECK(eval_int_poly("1-(2-3)") == zp({{Exp{0, 0}, 2}}));
    CHECK(eval_int_poly("6/2*3") == zp({{Exp{0, 0}, 9}}));

    // a second minus after an operator is a sign, not a syntax error
    CHECK(eval_int_poly("x - -1") == zp({{Exp{0, 0}, 1}, {Exp{1, 0}, 1}}));
    CHECK(eval_int_poly("-2x") == zp({{Exp{1, 0}, -2}}));

    CHECK(eval_int_poly("(1+x)^2") ==
          zp({{Exp{0, 0}, 1}, {Exp{1, 0}, 2}, {Exp{2, 0}, 1}}));
    CHECK(eval_int_poly("  1 +   x ") == zp({{Exp{0, 0}, 1}, {Exp{1, 0}, 1}}));
}

TEST_CASE("exponent forms and the size cap") {
    CHECK(eval_int_poly("x^0") == zp({{Exp{0, 0}, 1}}));
    CHECK(eval_int_poly("2^10") == zp({{Exp{0, 0}, 1024}}));

    // chained carets stack up as repeated powers, not right-nested towers
    CHECK(eval_int_poly("x^2^3").degree_x() == 6);

    Poly<Int> big = eval_int_poly("x^1024");
    CHECK(big.term_count() == 1);
    CHECK(big.degree_x() == 1024);

    CHECK_THROWS_WITH_AS(eval_int_poly("x^1025"), "exponent 1025 is too large", UsageError);
    CHECK_THROWS_WITH_AS(eval_int_poly("x^-1"),
                         "exponent must be a plain nonnegative integer (position 2)", UsageError);
    CHECK_THROWS_WITH_AS(eval_int_poly("x^(2)"),
                         "exponent must be a plain nonnegative integer (position 2)", UsageError);
}

TEST_CASE("division over the integers stays exact") {
    CHECK(eval_int_poly("4/2") == zp({{Exp{0, 0}, 2}}));
    CHECK(eval_int_poly("(2+4x)/2") == zp({{Exp{0, 0}, 1}, {Exp{1, 0}, 2}}));

    CHECK_THROWS_WITH_AS(eval_int_poly("3/2"), "3 is not divisible by 2 over Z", UsageError);
    CHECK_THROWS_WITH_AS(eval_int_poly("1/0"), "division by zero", UsageError);
    CHECK_THROWS_WITH_AS(eval_int_poly("6/(1+x)"),
                         "division is only supported by constants", UsageError);
    // even an exact polynomial quotient is out of scope for '/'
    CHECK_THROWS_WITH_AS(eval_int_poly("x/x"),
                         "division is only supported by constants", UsageError);
}

TEST_CASE("division over other coefficient rings") {
    Poly<Rat> half;
    half.add_term(Exp{0, 0}, Rat(1) / Rat(2));
    CHECK(eval_rat_poly("1/3 + 1/6") == half);

    Poly<Rat> three_halves;
    three_halves.add_term(Exp{0, 0}, Rat(3) / Rat(2));
    CHECK(eval_rat_poly("3/2") == three_halves);
    CHECK_THROWS_WITH_AS(eval_rat_poly("x/0"), "division by zero", UsageError);

    ZmRing m7(Int(7));
    Poly<ModInt> r = eval_poly(parse_expression("3/2"), coeff_ops(m7));
    CHECK(r.term_count() == 1);
    CHECK(r.terms().begin()->second == ModInt(Int(5), Int(7)));

    ZmRing m6(Int(6));
    CHECK_THROWS_WITH_AS(eval_poly(parse_expression("1/2"), coeff_ops(m6)),
                         "2 is not invertible modulo 6", UsageError);

    QuadRing q5(Int(-5));
    // 5/w = w.conj() since w * w.conj() = 5 here
    Poly<QuadElem> five_over_w = eval_poly(parse_expression("5/w"), coeff_ops(q5));
    Poly<QuadElem> neg_w;
    neg_w.add_term(Exp{0, 0}, QuadElem(Int(0), Int(-1), Int(-5)));
    CHECK(five_over_w == neg_w);

    Poly<QuadElem> one_plus_w;
    one_plus_w.add_term(Exp{0, 0}, QuadElem(Int(1), Int(1), Int(-5)));
    CHECK(eval_poly(parse_expression("(2+2w)/2"), coeff_ops(q5)) == one_plus_w);

    CHECK_THROWS_WITH_AS(eval_poly(parse_expression("(1+w)/2"), coeff_ops(q5)),
                         "1+w is not divisible by 2", UsageError);
    CHECK_THROWS_WITH_AS(eval_poly(parse_expression("w/0"), coeff_ops(q5)),
                         "division by zero", UsageError);
}

TEST_CASE("w only makes sense over a quadratic base") {
    CHECK_THROWS_WITH_AS(eval_int_poly("w"), "'w' needs a quadratic base ring", UsageError);
    CHECK_THROWS_WITH_AS(eval_rat_poly("1+w"), "'w' needs a quadratic base ring", UsageError);
    ZmRing m5(Int(5));
    CHECK_THROWS_WITH_AS(eval_poly(parse_expression("w"), coeff_ops(m5)),
                         "'w' needs a quadratic base ring", UsageError);

    QuadRing q3(Int(-3));
    Poly<QuadElem> f = eval_poly(parse_expression("(1+w)+2x"), coeff_ops(q3));
    Poly<QuadElem> want;
    want.add_term(Exp{0, 0}, QuadElem(Int(1), Int(1), Int(-3)));
    want.add_term(Exp{1, 0}, QuadElem(Int(2), Int(0), Int(-3)));
    CHECK(f == want);

    // w^2 collapses to the order parameter
    QuadRing q5(Int(-5));
    Poly<QuadElem> sq = eval_poly(parse_expression("w^2"), coeff_ops(q5));
    Poly<QuadElem> minus_five;
    minus_five.add_term(Exp{0, 0}, QuadElem(Int(-5), Int(0), Int(-5)));
    CHECK(sq == minus_five);
    CHECK(eval_poly(parse_expression("w w"), coeff_ops(q5)) == minus_five);
}

TEST_CASE("malformed input is reported with a position") {
    CHECK_THROWS_WITH_AS(eval_int_poly("z"), "unexpected character 'z' at position 0", UsageError);
    CHECK_THROWS_WITH_AS(eval_int_poly("1 + z"),
                         "unexpected character 'z' at position 4", UsageError);
    CHECK_THROWS_WITH_AS(eval_int_poly("(1+x"), "missing ')' at position 4", UsageError);
    CHECK_THROWS_WITH_AS(eval_int_poly("1+"),
                         "expected a number, symbol or '(' at position 2", UsageError);
    CHECK_THROWS_WITH_AS(eval_int_poly("*x"),
                         "expected a number, symbol or '(' at position 0", UsageError);
    CHECK_THROWS_WITH_AS(eval_int_poly("1)x"), "trailing input at position 1", UsageError);
    CHECK_THROWS_WITH_AS(eval_int_poly(""), "empty expression", UsageError);
}

TEST_CASE("monomial lists and comma splitting") {
    auto ms = parse_monomial_list("x^2, x*y");
    REQUIRE(ms.size() == 2);
    CHECK(ms[0] == Exp{2, 0});
    CHECK(ms[1] == Exp{1, 1});

    CHECK(parse_monomial_list("").empty());
    auto unit = parse_monomial_list("1");
    REQUIRE(unit.size() == 1);
    CHECK(unit[0] == Exp{0, 0});

    CHECK_THROWS_WITH_AS(parse_monomial_list("2x"), "'2x' is not a plain monomial", UsageError);
    CHECK_THROWS_WITH_AS(parse_monomial_list("x+y"), "'x+y' is not a plain monomial", UsageError);
    CHECK_THROWS_WITH_AS(parse_monomial_list("x, ,y"),
                         "empty entry in list 'x, ,y'", UsageError);

    auto pieces = split_list("1+x, 2 y ,3");
    REQUIRE(pieces.size() == 3);
    CHECK(pieces[0] == "1+x");
    CHECK(pieces[1] == "2 y");
    CHECK(pieces[2] == "3");
    CHECK(split_list("x") == std::vector<std::string>{"x"});
    CHECK_THROWS_WITH_AS(split_list("x,"), "empty entry in list 'x,'", UsageError);
    CHECK_THROWS_WITH_AS(split_list(",x"), "empty entry in list ',x'", UsageError);
}

TEST_CASE("elements land in their algebra, constants stay constant") {
    ZRing z;
    AlgebraDesc one_var = AlgebraDesc::poly_ring({"x"});
    CHECK_THROWS_WITH_AS(eval_element(z, one_var, "1+y"),
                         "expression '1+y' uses y but the algebra has one variable", UsageError);

    AlgebraDesc axy({"x", "y"}, {Exp{1, 1}});  // x*y = 0
    CHECK(eval_element(z, axy, "x*y + x") == eval_element(z, axy, "x"));

    QuadRing q3(Int(-3));
    CHECK(eval_element(q3, axy, "w*x") == eval_element(q3, axy, "w x"));

    CHECK(eval_constant(z, "3+4") == Int(7));
    CHECK(eval_constant(z, "0") == Int(0));
    CHECK_THROWS_WITH_AS(eval_constant(z, "x"),
                         "expected a base ring constant, got 'x'", UsageError);
    QuadRing q5(Int(-5));
    CHECK(eval_constant(q5, "1+w") == QuadElem(Int(1), Int(1), Int(-5)));

    auto cs = parse_constant_list(z, "1, 2+3, -4");
    REQUIRE(cs.size() == 3);
    CHECK(cs[0] == Int(1));
    CHECK(cs[1] == Int(5));
    CHECK(cs[2] == Int(-4));
}
