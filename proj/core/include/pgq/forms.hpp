#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pgq/algebra.hpp"

namespace pgq {

/// Strictly positive weights w_0 .. w_{l-1} of the sesquilinear form.
class WeightSeq {
 public:
  /// Throws std::invalid_argument if fewer than two weights or any w_n <= 0.
  explicit WeightSeq(std::vector<double> values);

  static WeightSeq ones(int order);
  static WeightSeq factorial(int order);
  /// w_n = prod_{k=1..n} (1 - q^k)/(1 - q). Requires real q and every factor > 0.
  static WeightSeq q_factorial(int order, Complex q);

  int order() const { return static_cast<int>(values_.size()); }
  const std::vector<double>& values() const { return values_; }

  /// w_n for n in range; 0 for n >= l. Negative n is a usage bug.
  double at(int n) const;
  /// w_num / w_den when both indices are in range, otherwise 0. Every
  /// out-of-range ratio in the quantization formulas sits under a vanishing
  /// characteristic-function factor, including the w_0 / w_{-1} convention.
  double ratio(int num, int den) const;

 private:
  std::vector<double> values_;
};

/// The l^2 x l^2 Gram matrix of the form over the anti-Wick basis, with a
/// cached full-pivot LU used for adjoints.
class GramMatrix {
 public:
  explicit GramMatrix(const WeightSeq& w);

  int order() const { return order_; }
  const MatrixR& matrix() const { return matrix_; }
  double determinant() const;
  bool invertible() const;

  /// Solves G X = B.
  MatrixC solve(const MatrixC& rhs) const;

 private:
  int order_;
  MatrixR matrix_;
  std::shared_ptr<const Eigen::FullPivLU<MatrixR>> lu_;
};

/// <theta^a tb^b, theta^c tb^d>_w = delta_{a+d,b+c} chi_l(a+d) w_{a+d}.
GramMatrix gram_matrix(const WeightSeq& w);

enum class FormMode { Closed, Definitional };

/// Weighted sesquilinear form, anti-linear in the first argument.
/// Closed contracts coefficients through the Gram matrix; definitional
/// evaluates sum_m w_{l-1-m} Berezin(theta^m :f^*: :g: tb^m).
Complex form(const PGElement& f, const PGElement& g, const WeightSeq& w,
             FormMode mode = FormMode::Closed);

/// Operator on PG_{l,q} as an l^2 x l^2 matrix over the anti-Wick basis.
/// Column index(i, j) holds the image of theta^i thetabar^j.
struct OperatorPG {
  MatrixC matrix;

  int order() const;
  PGElement apply(const PGElement& f) const;
};

/// The adjoint with respect to the form: G^{-1} A^H G.
OperatorPG adjoint_wrt_form(const OperatorPG& a, const GramMatrix& gram);
OperatorPG adjoint_wrt_form(const OperatorPG& a, const WeightSeq& w);

/// phi_j = w_j^{-1/2} theta^j, orthonormal in the Segal-Bargmann space.
PGElement orthonormal_phi(int j, const WeightSeq& w);

}  // namespace pgq
