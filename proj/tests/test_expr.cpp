#include <doctest.h>

#include <random>
#include <string>

#include "bgal/error.hpp"
#include "bgal/expr.hpp"

using bgal::Expr;
using bgal::parse_expr;
using bgal::PointState;
using bgal::Variable;
using bgal::VariableSet;

TEST_CASE("parse and evaluate problem expressions") {
  CHECK(parse_expr("x^5 - x^3 - 18*x^2 + 12*x - 18").evaluate_at(1.0) == -24.0);
  CHECK(parse_expr("(1/6) * d2p * d2q").free_vars() == VariableSet{Variable::D2P, Variable::D2Q});
  CHECK(parse_expr("exp(-x) * p^2").free_vars() == VariableSet{Variable::X, Variable::P});
  CHECK(parse_expr("2").evaluate(PointState{}) == 2.0);

  PointState s;
  s.d2p = 2.0;
  s.dq = 3.0;
  CHECK(parse_expr("d2p * dq").evaluate(s) == 6.0);
  CHECK(parse_expr("-6*exp(x)").evaluate_at(0.0) == -6.0);
}

TEST_CASE("free variables") {
  CHECK(parse_expr("x^2").free_vars() == VariableSet{Variable::X});
  CHECK(parse_expr("24*x^4 + 6").free_vars() == VariableSet{Variable::X});
  CHECK(parse_expr("3.5").free_vars().empty());
  CHECK(parse_expr("p + dp + d2p + q + dq + d2q + x").free_vars().size() == 7);
}

TEST_CASE("precedence and associativity") {
  CHECK(parse_expr("2+3*4^2").evaluate_at(0) == 50.0);
  CHECK(parse_expr("-x^2").evaluate_at(3.0) == -9.0);
  CHECK(parse_expr("(-x)^2").evaluate_at(3.0) == 9.0);
  CHECK(parse_expr("8/4/2").evaluate_at(0) == 1.0);
  CHECK(parse_expr("10-4-3").evaluate_at(0) == 3.0);
  CHECK(parse_expr("2*-x").evaluate_at(1.5) == -3.0);
  CHECK(parse_expr("x^-2").evaluate_at(2.0) == 0.25);
  CHECK(parse_expr("x^0.5").evaluate_at(4.0) == doctest::Approx(2.0));
  CHECK(parse_expr("  sqrt( 16 )+ln(1)+ sin(0) + cos(0)").evaluate_at(0) == 5.0);
  CHECK(parse_expr("1.5e2 + .5").evaluate_at(0) == 150.5);
}

TEST_CASE("integer powers are exact products") {
  const double x = 1.1;
  CHECK(parse_expr("x^7").evaluate_at(x) == x * x * x * x * x * x * x);
}

TEST_CASE("syntax errors carry offsets") {
  try {
    parse_expr("x + * 2");
    FAIL("expected ParseError");
  } catch (const bgal::ParseError& e) {
    CHECK(e.kind() == bgal::ParseError::Kind::Syntax);
    CHECK(e.offset() == 4);
  }
  CHECK_THROWS_AS(parse_expr(""), bgal::ParseError);
  CHECK_THROWS_AS(parse_expr("(x + 1"), bgal::ParseError);
  CHECK_THROWS_AS(parse_expr("x 2"), bgal::ParseError);
  CHECK_THROWS_AS(parse_expr("exp x"), bgal::ParseError);
  CHECK_THROWS_AS(parse_expr("2^3^2"), bgal::ParseError);
}

TEST_CASE("unknown identifiers and non-literal exponents") {
  try {
    parse_expr("d3p * q");
    FAIL("expected ParseError");
  } catch (const bgal::ParseError& e) {
    CHECK(e.kind() == bgal::ParseError::Kind::UnknownIdentifier);
    CHECK(e.offset() == 0);
    CHECK(std::string(e.what()).find("d3p") != std::string::npos);
  }
  for (const char* src : {"x^p", "x^(2)", "2^x"}) {
    try {
      parse_expr(src);
      FAIL("expected ParseError");
    } catch (const bgal::ParseError& e) {
      CHECK(e.kind() == bgal::ParseError::Kind::NonLiteralExponent);
    }
  }
}

TEST_CASE("evaluation errors carry x") {
  try {
    parse_expr("1/(x-1)").evaluate_at(1.0);
    FAIL("expected EvalError");
  } catch (const bgal::EvalError& e) {
    CHECK(e.x() == 1.0);
  }
  CHECK_THROWS_AS(parse_expr("ln(x)").evaluate_at(-1.0), bgal::EvalError);
  CHECK_THROWS_AS(parse_expr("ln(x)").evaluate_at(0.0), bgal::EvalError);
  CHECK_THROWS_AS(parse_expr("sqrt(x)").evaluate_at(-0.5), bgal::EvalError);
  CHECK_THROWS_AS(parse_expr("x^-1").evaluate_at(0.0), bgal::EvalError);
  CHECK_THROWS_AS(parse_expr("exp(x)").evaluate_at(1000.0), bgal::EvalError);
}

namespace {

// Random well-formed source text over the full grammar.
std::string random_source(std::mt19937& rng, int depth) {
  static const char* leaves[] = {"x", "p", "dp", "d2p", "q", "dq", "d2q", "2", "0.25", "3.5e-3", "17"};
  static const char* funcs[] = {"exp", "sin", "cos", "ln", "sqrt"};
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 6);
  switch (pick(rng)) {
    case 0: return leaves[std::uniform_int_distribution<int>(0, 10)(rng)];
    case 1: return "-" + random_source(rng, depth - 1);
    case 2: return random_source(rng, depth - 1) + " + " + random_source(rng, depth - 1);
    case 3: return random_source(rng, depth - 1) + " * " + random_source(rng, depth - 1);
    case 4: return "(" + random_source(rng, depth - 1) + ") / " + random_source(rng, depth - 1);
    case 5: return "(" + random_source(rng, depth - 1) + ")^" + std::to_string(std::uniform_int_distribution<int>(-3, 5)(rng));
    default: return std::string(funcs[std::uniform_int_distribution<int>(0, 4)(rng)]) + "(" + random_source(rng, depth - 1) + ")";
  }
}

}  // namespace

TEST_CASE("printing round-trips to a structurally identical tree") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const std::string src = random_source(rng, 5);
    const Expr e = parse_expr(src);
    const std::string printed = e.to_string();
    const Expr again = parse_expr(printed);
    CHECK_MESSAGE(e == again, src << " -> " << printed);
    CHECK(again.to_string() == printed);
  }
  CHECK(parse_expr("-x^2").to_string() == "-x^2");
  CHECK_FALSE(parse_expr("x + 1") == parse_expr("1 + x"));
}
