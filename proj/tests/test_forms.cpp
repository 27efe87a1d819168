#include <cmath>
#include <stdexcept>

#include "pgq/forms.hpp"
#include "pgq/quantization.hpp"
#include "support.hpp"

using namespace pgq;
using pgq::test::check_close;

TEST_CASE("weight validation and presets") {
  CHECK_THROWS_AS(WeightSeq({1.0}), std::invalid_argument);
  CHECK_THROWS_AS(WeightSeq({1.0, 0.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(WeightSeq({1.0, -2.0}), std::invalid_argument);
  CHECK(WeightSeq::factorial(5).values() == std::vector<double>{1, 1, 2, 6, 24});
  CHECK(WeightSeq::ones(3).values() == std::vector<double>{1, 1, 1});

  const auto qf = WeightSeq::q_factorial(4, 0.5);
  CHECK(qf.values()[0] == 1.0);
  CHECK(qf.values()[1] == doctest::Approx(1.0));
  CHECK(qf.values()[2] == doctest::Approx(1.5));
  CHECK(qf.values()[3] == doctest::Approx(1.5 * 1.75));
  CHECK_THROWS_AS(WeightSeq::q_factorial(3, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(WeightSeq::q_factorial(3, Complex(0, 1)), std::invalid_argument);

  const WeightSeq w({1.0, 2.0});
  CHECK(w.at(1) == 2.0);
  CHECK(w.at(2) == 0.0);
  CHECK(w.ratio(1, -1) == 0.0);
  CHECK(w.ratio(1, 0) == 2.0);
}

TEST_CASE("gram matrix examples") {
  const WeightSeq w({1.0, 2.0});
  MatrixR expected(4, 4);
  expected << 1, 0, 0, 2,
              0, 2, 0, 0,
              0, 0, 2, 0,
              2, 0, 0, 0;
  const auto g = gram_matrix(w);
  CHECK((g.matrix() - expected).cwiseAbs().maxCoeff() == 0.0);
  CHECK(g.matrix()(3, 3) == 0.0);
  CHECK(g.invertible());

  for (int l = 2; l <= 6; ++l) {
    const auto gf = gram_matrix(WeightSeq::factorial(l));
    CHECK(gf.matrix()(0, 0) == 1.0);
    CHECK((gf.matrix() - gf.matrix().transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(gf.invertible());
    CHECK(std::abs(gf.determinant()) > 0.0);
  }
}

TEST_CASE("form examples in both modes") {
  const WeightSeq w({1.0, 2.0});
  const auto one = PGElement::one(2);
  const auto tt = PGElement::basis(2, 1, 1);
  for (auto mode : {FormMode::Closed, FormMode::Definitional}) {
    CHECK(form(one, tt, w, mode) == Complex(2.0));
    CHECK(form(tt, tt, w, mode) == Complex(0.0));
    CHECK(form(tt - one, tt - one, w, mode) == Complex(-3.0));
  }
  for (int l = 2; l <= 5; ++l) {
    const auto wf = WeightSeq::factorial(l);
    for (auto mode : {FormMode::Closed, FormMode::Definitional}) {
      CHECK(form(PGElement::theta_bar(l), PGElement::theta(l), wf, mode) == Complex(0.0));
      for (int j = 0; j < l; ++j)
        for (int k = 0; k < l; ++k)
          CHECK(form(PGElement::basis(l, j, 0), PGElement::basis(l, k, 0), wf, mode) ==
                Complex(j == k ? wf.at(j) : 0.0));
    }
  }
}

TEST_CASE("form is anti-linear in the first argument") {
  Rng rng(13);
  const auto w = WeightSeq::factorial(3);
  auto f = test::random_element(3, rng);
  auto g = test::random_element(3, rng);
  const Complex c(0.3, -1.7);
  check_close(form(c * f, g, w), std::conj(c) * form(f, g, w));
  check_close(form(f, c * g, w), c * form(f, g, w));
}

TEST_CASE("closed and definitional modes agree on random pairs") {
  Rng rng(17);
  for (int l = 2; l <= 6; ++l) {
    const auto w = WeightSeq::factorial(l);
    for (int n = 0; n < 50; ++n) {
      auto f = test::random_element(l, rng);
      auto g = test::random_element(l, rng);
      CHECK(std::abs(form(f, g, w, FormMode::Closed) - form(f, g, w, FormMode::Definitional)) < 1e-12);
    }
  }
}

TEST_CASE("adjoint with respect to the form") {
  Rng rng(19);
  for (int l = 2; l <= 4; ++l) {
    const auto w = WeightSeq::factorial(l);
    const auto gram = gram_matrix(w);
    const int n = l * l;

    OperatorPG id{MatrixC::Identity(n, n)};
    check_close(adjoint_wrt_form(id, gram).matrix, id.matrix);

    const auto pk = pk_operator(w);
    check_close(adjoint_wrt_form(pk, w).matrix, pk.matrix);

    OperatorPG a{MatrixC(n, n)};
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) a.matrix(r, c) = rng.complex_unit_box();
    const auto astar = adjoint_wrt_form(a, gram);
    check_close(adjoint_wrt_form(astar, gram).matrix, a.matrix);
    for (int k = 0; k < 20; ++k) {
      auto f = test::random_element(l, rng);
      auto g = test::random_element(l, rng);
      check_close(form(a.apply(f), g, w), form(f, astar.apply(g), w));
    }
  }
}

TEST_CASE("orthonormal phi") {
  const WeightSeq w({1.0, 4.0, 9.0});
  check_close(orthonormal_phi(0, w), PGElement::one(3));
  check_close(orthonormal_phi(1, w), PGElement::basis(3, 1, 0, 0.5));
  CHECK_THROWS_AS(orthonormal_phi(3, w), std::out_of_range);
  CHECK_THROWS_AS(orthonormal_phi(-1, w), std::out_of_range);

  const WeightSeq w4({1, 2, 6, 24});
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k)
      check_close(form(orthonormal_phi(j, w4), orthonormal_phi(k, w4), w4), Complex(j == k ? 1.0 : 0.0));
}
