#pragma once

#include <vector>

#include "pgq/forms.hpp"

namespace pgq {

enum class BhBasis { Monomial, Orthonormal };

/// Operator on the Segal-Bargmann space B_H as an l x l matrix. Column a
/// holds the image of theta^a (monomial) or phi_a (orthonormal).
struct OperatorBH {
  MatrixC matrix;
  BhBasis basis = BhBasis::Monomial;

  int order() const { return static_cast<int>(matrix.rows()); }

  /// Orthonormal matrix = D^{1/2} M D^{-1/2}, D = diag(w_a).
  OperatorBH to_orthonormal(const WeightSeq& w) const;
  OperatorBH to_monomial(const WeightSeq& w) const;
};

// Kernel projection ---------------------------------------------------------

enum class ProjectionMode { Closed, Kernel };

/// P_K F(theta) = <K(theta, eta), F>_w. Closed applies
/// P_K(theta^a tb^b) = (w_a / w_{a-b}) chi_l(a-b) theta^{a-b}; Kernel computes
/// sum_k w_k^{-1} <theta^k, F>_w theta^k through the form.
PGElement project_pk(const PGElement& f, const WeightSeq& w,
                     ProjectionMode mode = ProjectionMode::Closed);

/// Matrix of P_K over the anti-Wick basis.
OperatorPG pk_operator(const WeightSeq& w);

/// Projection onto the anti-holomorphic space:
/// P_Kbar(theta^a tb^b) = (w_b / w_{b-a}) chi_l(b-a) tb^{b-a}.
PGElement project_pk_bar(const PGElement& f, const WeightSeq& w);

// Multiplication operators --------------------------------------------------

enum class Side { Left, Right };

/// F -> F g (right) or F -> g F (left).
OperatorPG mult_operator(const PGElement& g, Side side, const AlgebraCtx& ctx);

// Toeplitz quantization -----------------------------------------------------

enum class ToeplitzMode { Closed, Projection };

/// T_g in the monomial basis. Closed: for g = eta^i etabar^j, column a holds
/// w_{i+a} / w_{i+a-j} at row i+a-j when i+a and i+a-j are in range.
/// Projection: P_K M_g restricted to B_H, with P_K evaluated via the kernel.
OperatorBH toeplitz(const PGElement& g, const WeightSeq& w, const AlgebraCtx& ctx,
                    ToeplitzMode mode = ToeplitzMode::Closed);

/// T_g in the orthonormal basis, built entrywise from
/// w_{a+i} / (w_a w_{a+i-j})^{1/2}.
OperatorBH toeplitz_orthonormal(const PGElement& g, const WeightSeq& w, const AlgebraCtx& ctx);

/// Adjoint for the weighted inner product on B_H: D^{-1} A^H D in the
/// monomial basis, plain A^H in the orthonormal basis.
OperatorBH toeplitz_adjoint(const OperatorBH& a, const WeightSeq& w);

// Coherent-state and flat quantizations -------------------------------------

enum class CoherentMode { Closed, Berezin };

/// A_g on the auxiliary space with orthonormal basis e_a. Closed:
/// A_{theta^i tb^j} e_a = w_{j+a} / (w_{j-i+a} w_a)^{1/2} e_{j-i+a} when both
/// j+a and j-i+a are in range. Berezin: the defining sum over m of weighted
/// Berezin integrals against the coherent states.
MatrixC coherent_quantization(const PGElement& g, const WeightSeq& w, const AlgebraCtx& ctx,
                              CoherentMode mode = CoherentMode::Closed);

/// T^flat_g = P_Kbar M^L_g on the anti-holomorphic space, in the basis
/// phi_a^* = w_a^{-1/2} tb^a. Built constructively from the projection.
MatrixC toeplitz_flat(const PGElement& g, const WeightSeq& w, const AlgebraCtx& ctx);

/// The displayed action of T^flat on a basis symbol theta^i tb^j.
MatrixC toeplitz_flat_basis_formula(int i, int j, const WeightSeq& w);

// Ladder operators ----------------------------------------------------------

struct LadderSet {
  OperatorBH creation;      // T_eta = M_theta
  OperatorBH annihilation;  // T_etabar = d_w
  OperatorBH number;        // creation * annihilation
  std::vector<double> deformed_ints;        // [a]_w = w_a / w_{a-1}, [0]_w = 0
  std::vector<double> deformed_factorials;  // prod_{k=1..a} [k]_w
};

LadderSet ladder_set(const WeightSeq& w, const AlgebraCtx& ctx);

/// Eigenvalues of N_w, read from its diagonal in the monomial basis.
std::vector<double> number_spectrum(const LadderSet& ladder);

/// Operator norm for the weighted inner product: largest singular value of
/// the orthonormal-basis matrix.
double operator_norm_bh(const OperatorBH& a, const WeightSeq& w);

// Linear maps between operator spaces ---------------------------------------

/// Column-stacked operator matrix.
VectorC vectorize(const MatrixC& m);

/// l^2 x l^2 matrix of g -> T_g, columns indexed by anti-Wick basis symbols.
MatrixC toeplitz_map_matrix(const WeightSeq& w, const AlgebraCtx& ctx);
/// l^2 x l^2 matrix of g -> A_g.
MatrixC coherent_map_matrix(const WeightSeq& w, const AlgebraCtx& ctx);
/// Vectorizations of (A_w)^j (A_w^dag)^i over all i, j.
MatrixC anti_wick_operator_set(const LadderSet& ladder);
/// Vectorizations of (A_w^dag)^i (A_w)^j over all i, j.
MatrixC wick_operator_set(const LadderSet& ladder);

}  // namespace pgq
