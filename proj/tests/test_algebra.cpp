#include <stdexcept>

#include "pgq/algebra.hpp"
#include "pgq/free_expr.hpp"
#include "pgq/oracles.hpp"
#include "support.hpp"

using namespace pgq;
using pgq::test::check_close;

namespace {

constexpr auto T = Generator::Theta;
constexpr auto B = Generator::ThetaBar;

Word word_from_bits(unsigned bits, int length) {
  Word w;
  for (int k = 0; k < length; ++k) w.push_back((bits >> k) & 1U ? B : T);
  return w;
}

}  // namespace

TEST_CASE("context validation") {
  CHECK_THROWS_AS(AlgebraCtx(1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraCtx(3, 0.0), std::invalid_argument);
  CHECK(AlgebraCtx(2, Complex(0, 1)).q_is_real() == false);
  CHECK(AlgebraCtx(2, -1.0).q_is_real());
}

TEST_CASE("normal_order examples") {
  for (int l = 2; l <= 5; ++l) {
    AlgebraCtx ctx(l, 2.0);
    Word w{B, T};
    check_close(normal_order(w, ctx), PGElement::basis(l, 1, 1, 0.5));
  }
  AlgebraCtx ctx2(2, 3.0);
  Word tb{T, B};
  check_close(normal_order(tb, ctx2), PGElement::basis(2, 1, 1));
  Word btb{B, T, B};
  check_close(normal_order(btb, ctx2), PGElement::zero(2));
}

TEST_CASE("normal_order agrees with brute-force rewriting on all short words") {
  const Complex qs[] = {2.0, -1.0, 0.5, std::polar(1.0, 1.0)};
  for (int l = 2; l <= 4; ++l)
    for (Complex q : qs) {
      AlgebraCtx ctx(l, q);
      for (int len = 0; len <= 6; ++len)
        for (unsigned bits = 0; bits < (1U << len); ++bits) {
          const Word w = word_from_bits(bits, len);
          CAPTURE(l);
          CAPTURE(len);
          CAPTURE(bits);
          check_close(normal_order(w, ctx), oracle::rewrite_word(w, ctx), 1e-12);
        }
    }
}

TEST_CASE("free expression evaluation") {
  AlgebraCtx ctx(3, 2.0);
  const auto th = FreeExpr::theta();
  const auto tb = FreeExpr::theta_bar();

  SUBCASE("defining relation vanishes") {
    for (Complex q : {Complex(2.0), Complex(-1.0), Complex(0, 1)}) {
      AlgebraCtx c(4, q);
      auto e = th * tb - FreeExpr::q() * tb * th;
      check_close(from_free_expr(e, c), PGElement::zero(4));
    }
  }
  SUBCASE("square of theta plus thetabar") {
    auto e = FreeExpr::power(th + tb, 2);
    PGElement expected = PGElement::basis(3, 2, 0) + PGElement::basis(3, 1, 1, 1.5) +
                         PGElement::basis(3, 0, 2);
    check_close(from_free_expr(e, ctx), expected);
    check_close(oracle::evaluate_by_rewriting(e, ctx), expected);
  }
  SUBCASE("nilpotency") {
    check_close(from_free_expr(FreeExpr::power(th, 3), ctx), PGElement::zero(3));
    check_close(from_free_expr(FreeExpr::power(tb, 3), ctx), PGElement::zero(3));
  }
  SUBCASE("numeric evaluation") {
    CHECK(evaluate_numeric(FreeExpr::constant(2.0) * FreeExpr::constant(Complex(0, 1))) ==
          Complex(0, 2));
    CHECK_THROWS_AS(evaluate_numeric(th), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_numeric(FreeExpr::q()), std::invalid_argument);
  }
}

TEST_CASE("multiply examples") {
  AlgebraCtx ctx(3, 2.0);
  const auto tt = PGElement::basis(3, 1, 1);
  check_close(multiply(tt, PGElement::theta(3), ctx), PGElement::basis(3, 2, 1, 0.5));
  check_close(multiply(tt, tt, ctx), PGElement::basis(3, 2, 2, 0.5));
  for (int l = 2; l <= 6; ++l) {
    AlgebraCtx c(l, 0.5);
    check_close(multiply(PGElement::theta(l), PGElement::basis(l, l - 1, 0), c), PGElement::zero(l));
  }
}

TEST_CASE("multiply matches normal_order of concatenated words") {
  for (int l = 2; l <= 4; ++l) {
    AlgebraCtx ctx(l, std::polar(1.3, 0.4));
    for (int a = 0; a < l; ++a)
      for (int b = 0; b < l; ++b)
        for (int c = 0; c < l; ++c)
          for (int d = 0; d < l; ++d) {
            Word w;
            w.insert(w.end(), a, T);
            w.insert(w.end(), b, B);
            w.insert(w.end(), c, T);
            w.insert(w.end(), d, B);
            check_close(multiply(PGElement::basis(l, a, b), PGElement::basis(l, c, d), ctx),
                        oracle::rewrite_word(w, ctx), 1e-12);
          }
  }
}

TEST_CASE("random expressions agree with the rewriting oracle") {
  Rng rng(7);
  const auto th = FreeExpr::theta();
  const auto tb = FreeExpr::theta_bar();
  for (int l = 2; l <= 4; ++l) {
    AlgebraCtx ctx(l, Complex(0.7, -0.2));
    for (int n = 0; n < 20; ++n) {
      auto e = FreeExpr::constant(rng.complex_unit_box()) * th * tb * th +
               FreeExpr::power(FreeExpr::q() * tb + FreeExpr::constant(rng.complex_unit_box()) * th, 3) -
               FreeExpr::product({tb, FreeExpr::constant(rng.complex_unit_box()), th, th});
      check_close(from_free_expr(e, ctx), oracle::evaluate_by_rewriting(e, ctx));
    }
  }
}

TEST_CASE("associativity and unit") {
  Rng rng(11);
  for (int l = 2; l <= 5; ++l) {
    AlgebraCtx ctx(l, Complex(0.5, 0.5));
    for (int n = 0; n < 10; ++n) {
      auto f = test::random_element(l, rng);
      auto g = test::random_element(l, rng);
      auto h = test::random_element(l, rng);
      check_close(multiply(multiply(f, g, ctx), h, ctx), multiply(f, multiply(g, h, ctx), ctx));
      check_close(multiply(PGElement::one(l), f, ctx), f);
      check_close(multiply(f, PGElement::one(l), ctx), f);
    }
  }
}

TEST_CASE("conjugation and z_map") {
  const auto f = PGElement::basis(3, 2, 1, Complex(2, 1));
  check_close(conjugate(f), PGElement::basis(3, 1, 2, Complex(2, -1)));
  check_close(z_map(f), PGElement::basis(3, 1, 2, Complex(2, 1)));
  check_close(conjugate(PGElement::basis(3, 1, 1)), PGElement::basis(3, 1, 1));

  Rng rng(3);
  auto g = test::random_element(4, rng);
  check_close(conjugate(conjugate(g)), g);
  check_close(z_map(z_map(g)), g);
}

TEST_CASE("star-algebra product rule holds only for real q") {
  Rng rng(5);
  for (double q : {1.0, -1.0, 0.5, 2.0}) {
    AlgebraCtx ctx(4, q);
    for (int n = 0; n < 10; ++n) {
      auto f = test::random_element(4, rng);
      auto g = test::random_element(4, rng);
      check_close(conjugate(multiply(f, g, ctx)), multiply(conjugate(g), conjugate(f), ctx));
    }
  }
  AlgebraCtx ctx(3, Complex(0, 1));
  const auto tb = PGElement::theta_bar(3);
  const auto th = PGElement::theta(3);
  const auto lhs = conjugate(multiply(tb, th, ctx));
  const auto rhs = multiply(conjugate(th), conjugate(tb), ctx);
  CHECK(lhs.coeff(1, 1) == Complex(0, 1));
  CHECK(rhs.coeff(1, 1) == Complex(0, -1));
  CHECK_FALSE(approx_equal(lhs, rhs));
}

TEST_CASE("anti-Wick product and Berezin integral") {
  const auto tt = PGElement::basis(3, 1, 1);
  CHECK(anti_wick_product(tt, tt).coeff(2, 2) == Complex(1.0));
  check_close(anti_wick_product(PGElement::theta(2), PGElement::theta_bar(2)), PGElement::basis(2, 1, 1));
  for (int l = 2; l <= 5; ++l)
    check_close(anti_wick_product(PGElement::theta(l), PGElement::basis(l, l - 1, 0)), PGElement::zero(l));

  CHECK(berezin_integral(PGElement::basis(2, 1, 1, 3.0) + PGElement::basis(2, 0, 0, 5.0)) == Complex(3.0));
  for (int l = 2; l <= 5; ++l) CHECK(berezin_integral(PGElement::basis(l, l - 1, l - 2)) == Complex(0.0));
  CHECK(berezin_integral(PGElement::basis(3, 2, 2, Complex(4, -1))) == Complex(4, -1));
}

TEST_CASE("holomorphic functional calculus") {
  const Complex alpha[] = {1.0, 2.0, 3.0, 4.0};
  auto f = holomorphic_polynomial(alpha, 3);
  CHECK(f.is_holomorphic());
  CHECK(f.coeff(0, 0) == Complex(1.0));
  CHECK(f.coeff(2, 0) == Complex(3.0));
  CHECK_FALSE(PGElement::theta_bar(3).is_holomorphic());
  CHECK(PGElement::theta_bar(3).is_anti_holomorphic());
}

TEST_CASE("vector round trip uses row-major anti-Wick index") {
  auto f = PGElement::basis(3, 1, 2, 7.0);
  auto v = f.to_vector();
  CHECK(v(aw_index(1, 2, 3)) == Complex(7.0));
  CHECK(aw_index(1, 2, 3) == 5);
  check_close(PGElement::from_vector(3, v), f);
}
