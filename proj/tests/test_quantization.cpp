#include <algorithm>
#include <cmath>

#include "pgq/quantization.hpp"
#include "support.hpp"

using namespace pgq;
using pgq::test::check_close;

namespace {

MatrixC mat2(Complex a, Complex b, Complex c, Complex d) {
  MatrixC m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_CASE("projection onto the Segal-Bargmann space") {
  const WeightSeq w({1.0, 1.0, 2.0});
  for (auto mode : {ProjectionMode::Closed, ProjectionMode::Kernel}) {
    check_close(project_pk(PGElement::basis(3, 2, 1), w, mode), PGElement::basis(3, 1, 0, 2.0));
    check_close(project_pk(PGElement::basis(3, 1, 2), w, mode), PGElement::zero(3));
    Rng rng(23);
    auto h = test::random_holomorphic(3, rng);
    check_close(project_pk(h, w, mode), h);
  }

  const auto pk = pk_operator(WeightSeq({1.0, 2.0}));
  CHECK(pk.matrix(aw_index(0, 0, 2), aw_index(1, 1, 2)) == Complex(2.0));
  CHECK(pk.matrix.col(aw_index(1, 1, 2)).cwiseAbs().sum() == doctest::Approx(2.0));

  for (int l = 2; l <= 6; ++l) {
    const auto p = pk_operator(WeightSeq::factorial(l));
    check_close(p.matrix * p.matrix, p.matrix);
    CHECK(numerical_rank(p.matrix) == l);
  }
}

TEST_CASE("projection modes agree on random elements") {
  Rng rng(29);
  for (int l = 2; l <= 5; ++l) {
    const auto w = WeightSeq::factorial(l);
    for (int n = 0; n < 10; ++n) {
      auto f = test::random_element(l, rng);
      check_close(project_pk(f, w, ProjectionMode::Closed), project_pk(f, w, ProjectionMode::Kernel));
    }
  }
}

TEST_CASE("anti-holomorphic projection") {
  const WeightSeq w({1.0, 1.0, 2.0});
  check_close(project_pk_bar(PGElement::basis(3, 1, 2), w), PGElement::basis(3, 0, 1, 2.0));
  check_close(project_pk_bar(PGElement::basis(3, 2, 1), w), PGElement::zero(3));
}

TEST_CASE("multiplication operators") {
  AlgebraCtx ctx(3, Complex(0.5, 0.25));
  const int n = 9;
  for (auto side : {Side::Left, Side::Right})
    check_close(mult_operator(PGElement::one(3), side, ctx).matrix, MatrixC::Identity(n, n));

  Rng rng(31);
  auto g1 = test::random_element(3, rng);
  auto g2 = test::random_element(3, rng);
  check_close(mult_operator(g1, Side::Right, ctx).matrix * mult_operator(g2, Side::Right, ctx).matrix,
              mult_operator(multiply(g2, g1, ctx), Side::Right, ctx).matrix);

  const auto mb = mult_operator(PGElement::theta_bar(3), Side::Right, ctx).matrix;
  const auto mt = mult_operator(PGElement::theta(3), Side::Right, ctx).matrix;
  CHECK(test::max_abs(mb * mt - ctx.q() * mt * mb) < 1e-12);
}

TEST_CASE("Toeplitz examples") {
  const WeightSeq w({1.0, 2.0});
  AlgebraCtx ctx(2, 1.0);
  for (auto mode : {ToeplitzMode::Closed, ToeplitzMode::Projection}) {
    check_close(toeplitz(PGElement::one(2), w, ctx, mode).matrix, MatrixC::Identity(2, 2));
    check_close(toeplitz(PGElement::theta(2), w, ctx, mode).matrix, mat2(0, 0, 1, 0));
    check_close(toeplitz(PGElement::theta_bar(2), w, ctx, mode).matrix, mat2(0, 2, 0, 0));
    check_close(toeplitz(PGElement::basis(2, 1, 1), w, ctx, mode).matrix, mat2(2, 0, 0, 0));
  }
  const auto tb = toeplitz(PGElement::theta_bar(2), w, ctx).matrix;
  const auto t = toeplitz(PGElement::theta(2), w, ctx).matrix;
  check_close(toeplitz(PGElement::basis(2, 1, 1), w, ctx).matrix, tb * t);

  const double r2 = std::sqrt(2.0);
  check_close(toeplitz_orthonormal(PGElement::theta(2), w, ctx).matrix, mat2(0, 0, r2, 0));
  check_close(toeplitz_orthonormal(PGElement::theta_bar(2), w, ctx).matrix, mat2(0, r2, 0, 0));
  check_close(toeplitz(PGElement::theta(2), w, ctx).to_orthonormal(w).matrix,
              toeplitz_orthonormal(PGElement::theta(2), w, ctx).matrix);
  const auto on = toeplitz_orthonormal(PGElement::theta(2), w, ctx);
  check_close(on.to_monomial(w).matrix, t);
}

TEST_CASE("Toeplitz modes agree on random symbols") {
  Rng rng(37);
  for (int l = 2; l <= 5; ++l) {
    const auto w = WeightSeq::factorial(l);
    AlgebraCtx ctx(l, Complex(-0.5, 0.8));
    for (int n = 0; n < 10; ++n) {
      auto g = test::random_element(l, rng);
      check_close(toeplitz(g, w, ctx, ToeplitzMode::Closed).matrix,
                  toeplitz(g, w, ctx, ToeplitzMode::Projection).matrix);
    }
  }
}

TEST_CASE("Toeplitz adjoint") {
  const WeightSeq w({1.0, 1.0, 2.0});
  AlgebraCtx ctx(3, 0.5);
  check_close(toeplitz_adjoint(toeplitz(PGElement::theta(3), w, ctx), w).matrix,
              toeplitz(PGElement::theta_bar(3), w, ctx).matrix);
  OperatorBH id{MatrixC::Identity(3, 3)};
  check_close(toeplitz_adjoint(id, w).matrix, id.matrix);

  Rng rng(41);
  for (int n = 0; n < 20; ++n) {
    auto g = test::random_element(3, rng);
    check_close(toeplitz_adjoint(toeplitz(g, w, ctx), w).matrix, toeplitz(conjugate(g), w, ctx).matrix);
  }
}

TEST_CASE("coherent-state quantization") {
  const WeightSeq w({1.0, 2.0});
  AlgebraCtx ctx(2, 1.0);
  const double r2 = std::sqrt(2.0);
  for (auto mode : {CoherentMode::Closed, CoherentMode::Berezin}) {
    check_close(coherent_quantization(PGElement::theta(2), w, ctx, mode), mat2(0, r2, 0, 0));
    check_close(coherent_quantization(PGElement::one(2), w, ctx, mode), MatrixC::Identity(2, 2));
  }

  Rng rng(43);
  for (int l = 2; l <= 5; ++l) {
    const auto wl = WeightSeq::factorial(l);
    AlgebraCtx c(l, 2.0);
    for (int n = 0; n < 10; ++n) {
      auto g = test::random_element(l, rng);
      check_close(coherent_quantization(g, wl, c, CoherentMode::Closed),
                  coherent_quantization(g, wl, c, CoherentMode::Berezin));
      check_close(coherent_quantization(z_map(g), wl, c), toeplitz_orthonormal(g, wl, c).matrix);
      check_close(toeplitz_flat(g, wl, c), coherent_quantization(g, wl, c));
    }
  }
}

TEST_CASE("flat quantization matches the displayed basis action") {
  for (int l = 2; l <= 3; ++l) {
    const auto w = l == 2 ? WeightSeq({1.0, 2.0}) : WeightSeq({1.0, 1.0, 2.0});
    AlgebraCtx ctx(l, 0.5);
    check_close(toeplitz_flat(PGElement::one(l), w, ctx), MatrixC::Identity(l, l));
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        check_close(toeplitz_flat(PGElement::basis(l, i, j), w, ctx), toeplitz_flat_basis_formula(i, j, w));
  }
}

TEST_CASE("ladder operators") {
  const WeightSeq w({1.0, 1.0, 2.0});
  AlgebraCtx ctx(3, 1.0);
  const auto ladder = ladder_set(w, ctx);
  CHECK(ladder.deformed_ints == std::vector<double>{0.0, 1.0, 2.0});
  CHECK(ladder.deformed_factorials == std::vector<double>{1.0, 1.0, 2.0});
  auto spec = number_spectrum(ladder);
  std::sort(spec.begin(), spec.end());
  CHECK(spec == std::vector<double>{0.0, 1.0, 2.0});
  check_close(ladder.number.matrix, ladder.creation.matrix * ladder.annihilation.matrix);

  CHECK(operator_norm_bh(ladder.creation, w) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  OperatorBH id{MatrixC::Identity(3, 3)};
  CHECK(operator_norm_bh(id, w) == doctest::Approx(1.0).epsilon(1e-12));

  const WeightSeq w2({1.0, 2.0});
  const auto l2 = ladder_set(w2, AlgebraCtx(2, 1.0));
  CHECK(operator_norm_bh(l2.annihilation, w2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(operator_norm_bh(l2.creation, w2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  for (int l = 2; l <= 6; ++l) {
    const auto lo = ladder_set(WeightSeq::ones(l), AlgebraCtx(l, 1.0));
    CHECK(lo.deformed_ints[0] == 0.0);
    for (int a = 1; a < l; ++a) CHECK(lo.deformed_ints[a] == 1.0);

    MatrixC p = MatrixC::Identity(l, l);
    for (int k = 1; k < l; ++k) p = p * lo.creation.matrix;
    CHECK(test::max_abs(p) > 0.0);
    CHECK(test::max_abs(p * lo.creation.matrix) == 0.0);
    CHECK(numerical_rank(lo.creation.matrix) == l - 1);
    CHECK(lo.creation.matrix.col(l - 1).cwiseAbs().sum() == 0.0);
    CHECK(lo.annihilation.matrix.col(0).cwiseAbs().sum() == 0.0);
  }
}

TEST_CASE("rank of the quantization maps") {
  for (int l = 2; l <= 5; ++l) {
    const auto w = WeightSeq::factorial(l);
    AlgebraCtx ctx(l, Complex(0.5, 0.866));
    CHECK(numerical_rank(toeplitz_map_matrix(w, ctx)) == l * l);
    CHECK(numerical_rank(coherent_map_matrix(w, ctx)) == l * l);
    CHECK(numerical_rank(anti_wick_operator_set(ladder_set(w, ctx))) == l * l);
  }
}
