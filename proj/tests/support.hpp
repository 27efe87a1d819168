#pragma once

#include "doctest.h"
#include "pgq/algebra.hpp"
#include "pgq/numeric.hpp"

namespace pgq::test {

inline PGElement random_element(int l, Rng& rng) {
  MatrixC c(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) c(i, j) = rng.complex_unit_box();
  return PGElement(c);
}

inline PGElement random_holomorphic(int l, Rng& rng) {
  PGElement f(l);
  for (int i = 0; i < l; ++i) f.coeff(i, 0) = rng.complex_unit_box();
  return f;
}

inline double max_abs(const MatrixC& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

inline void check_close(const MatrixC& a, const MatrixC& b, double tol = 1e-9) {
  REQUIRE(a.rows() == b.rows());
  REQUIRE(a.cols() == b.cols());
  CHECK(max_abs(a - b) <= tol * std::max(1.0, std::max(max_abs(a), max_abs(b))));
}

inline void check_close(const PGElement& a, const PGElement& b, double tol = 1e-9) {
  check_close(a.coeffs(), b.coeffs(), tol);
}

inline void check_close(Complex a, Complex b, double tol = 1e-9) {
  CHECK(std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b))));
}

}  // namespace pgq::test
