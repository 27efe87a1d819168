#include <string>
#include <variant>

#include "parser_corpus.hpp"
#include "pgq/oracles.hpp"
#include "pgq/symbol_parser.hpp"
#include "support.hpp"

using namespace pgq;
using pgq::test::check_close;

TEST_CASE("accept corpus denotes the expected expressions") {
  const AlgebraCtx ctxs[] = {AlgebraCtx(3, 2.0), AlgebraCtx(4, std::polar(1.0, 1.0)), AlgebraCtx(2, -1.0)};
  for (const auto& c : test::accept_corpus()) {
    CAPTURE(c.text);
    FreeExpr parsed = FreeExpr::constant(0.0);
    REQUIRE_NOTHROW(parsed = parse(c.text));
    for (const auto& ctx : ctxs)
      check_close(from_free_expr(parsed, ctx), oracle::evaluate_by_rewriting(c.expected, ctx), 1e-12);
  }
}

TEST_CASE("reject corpus reports position and message") {
  for (const auto& c : test::reject_corpus()) {
    CAPTURE(c.text);
    try {
      (void)parse(c.text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == c.position);
      CHECK(e.message() == c.message);
    }
  }
}

TEST_CASE("parse is deterministic") {
  for (const auto& c : test::accept_corpus()) CHECK(parse(c.text) == parse(c.text));
}

TEST_CASE("written product order is preserved") {
  const auto e = parse("(1+2i)*th^2*thb");
  const auto* p = std::get_if<FreeExpr::Product>(&e.node());
  REQUIRE(p != nullptr);
  REQUIRE(p->factors.size() == 3);
  const auto* c = std::get_if<FreeExpr::Constant>(&p->factors[0].node());
  REQUIRE(c != nullptr);
  CHECK(c->value == Complex(1, 2));
  const auto* pw = std::get_if<FreeExpr::Power>(&p->factors[1].node());
  REQUIRE(pw != nullptr);
  CHECK(pw->exponent == 2);
  CHECK(std::holds_alternative<FreeExpr::Theta>(pw->base->node()));
  CHECK(std::holds_alternative<FreeExpr::ThetaBar>(p->factors[2].node()));

  AlgebraCtx ctx(3, 2.0);
  check_close(from_free_expr(parse("thb*th"), ctx), PGElement::basis(3, 1, 1, 0.5));
  check_close(from_free_expr(parse("th*thb - q*thb*th"), ctx), PGElement::zero(3));
}

TEST_CASE("error rendering points at the offending column") {
  try {
    (void)parse("th^-1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    const std::string r = e.render("th^-1");
    CHECK(r.find("th^-1\n   ^") != std::string::npos);
    CHECK(r.find("non-negative integer exponent expected") != std::string::npos);
  }
}

TEST_CASE("complex literals") {
  CHECK(parse_complex("2") == Complex(2.0));
  CHECK(parse_complex("-0.5") == Complex(-0.5));
  CHECK(parse_complex("0+1i") == Complex(0.0, 1.0));
  CHECK(parse_complex("i") == Complex(0.0, 1.0));
  CHECK_THROWS_AS(parse_complex("th"), ParseError);
  CHECK_THROWS_AS(parse_complex("q"), ParseError);
}

TEST_CASE("format examples") {
  CHECK(format(PGElement::zero(3)) == "0");
  CHECK(format(PGElement::basis(3, 1, 1, 1.5) + PGElement::basis(3, 0, 2)) == "1.5*th*thb + thb^2");
  CHECK(format(PGElement::one(2)) == "1");
  CHECK(format(PGElement::basis(3, 2, 0, -1.0)) == "-th^2");
}

TEST_CASE("format then parse round-trips") {
  Rng rng(47);
  for (int l = 2; l <= 6; ++l) {
    AlgebraCtx ctx(l, Complex(0.3, 0.9));
    for (int n = 0; n < 100; ++n) {
      auto f = test::random_element(l, rng);
      f.coeff(0, l - 1) = Complex(0.0, f.coeff(0, l - 1).imag());
      f.coeff(l - 1, 0) = 0.0;
      const auto text = format(f);
      CAPTURE(text);
      check_close(from_free_expr(parse(text), ctx), f);
    }
  }
}
