#pragma once

#include <span>
#include <vector>

#include "pgq/numeric.hpp"

namespace pgq {

/// Order l and deformation parameter q of the paragrassmann algebra PG_{l,q}.
class AlgebraCtx {
 public:
  /// Throws std::invalid_argument unless l >= 2 and q != 0.
  AlgebraCtx(int order, Complex q);

  int order() const { return order_; }
  Complex q() const { return q_; }
  bool q_is_real() const { return q_.imag() == 0.0; }

  /// Characteristic function of the index set {0, ..., l-1}.
  bool in_range(int k) const { return k >= 0 && k < order_; }

 private:
  int order_;
  Complex q_;
};

/// An element of PG_{l,q}, stored densely over the anti-Wick basis.
/// coeff(i, j) is the coefficient of theta^i thetabar^j.
class PGElement {
 public:
  /// The zero element.
  explicit PGElement(int order);
  explicit PGElement(MatrixC coeffs);

  static PGElement zero(int order) { return PGElement(order); }
  static PGElement one(int order) { return basis(order, 0, 0); }
  static PGElement basis(int order, int i, int j, Complex c = 1.0);
  static PGElement theta(int order) { return basis(order, 1, 0); }
  static PGElement theta_bar(int order) { return basis(order, 0, 1); }

  int order() const { return static_cast<int>(coeffs_.rows()); }
  Complex coeff(int i, int j) const { return coeffs_(i, j); }
  Complex& coeff(int i, int j) { return coeffs_(i, j); }
  const MatrixC& coeffs() const { return coeffs_; }

  /// Coefficients flattened with index(i, j) = i * l + j.
  VectorC to_vector() const;
  static PGElement from_vector(int order, const VectorC& v);

  /// Supported on theta^i only (the Segal-Bargmann space).
  bool is_holomorphic(double eps = 0.0) const;
  /// Supported on thetabar^j only.
  bool is_anti_holomorphic(double eps = 0.0) const;

  PGElement& operator+=(const PGElement& other);
  PGElement& operator-=(const PGElement& other);
  PGElement& operator*=(Complex s);

  friend PGElement operator+(PGElement a, const PGElement& b) { return a += b; }
  friend PGElement operator-(PGElement a, const PGElement& b) { return a -= b; }
  friend PGElement operator*(Complex s, PGElement a) { return a *= s; }
  friend PGElement operator-(PGElement a) { return a *= -1.0; }

 private:
  MatrixC coeffs_;
};

bool approx_equal(const PGElement& a, const PGElement& b, Tolerance tol = {});

/// Row-major flattening of an anti-Wick index pair.
inline int aw_index(int i, int j, int order) { return i * order + j; }

enum class Generator { Theta, ThetaBar };
using Word = std::vector<Generator>;

/// Normal orders a word in the generators modulo the defining ideal:
/// returns q^{-inv} theta^a thetabar^b, where inv counts (thetabar, theta)
/// pairs appearing in that order, or zero when a >= l or b >= l.
PGElement normal_order(std::span<const Generator> word, const AlgebraCtx& ctx);

/// Algebra product: (theta^a tb^b)(theta^c tb^d) = q^{-bc} theta^{a+c} tb^{b+d}.
PGElement multiply(const PGElement& f, const PGElement& g, const AlgebraCtx& ctx);

/// Anti-linear conjugation, (theta^i tb^j)^* = theta^j tb^i.
PGElement conjugate(const PGElement& f);

/// The linear extension of the basis swap theta^i tb^j -> theta^j tb^i.
/// Not the conjugation: coefficients are left untouched.
PGElement z_map(const PGElement& f);

/// :theta^a tb^b: :theta^c tb^d: = theta^{a+c} tb^{b+d}, no q factor.
PGElement anti_wick_product(const PGElement& f, const PGElement& g);

/// Coefficient of theta^{l-1} thetabar^{l-1}.
Complex berezin_integral(const PGElement& f);

/// Functional calculus f(theta) = sum_j alpha_j theta^j, truncated at l.
PGElement holomorphic_polynomial(std::span<const Complex> alpha, int order);

}  // namespace pgq
