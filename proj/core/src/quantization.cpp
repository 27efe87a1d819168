#include "pgq/quantization.hpp"

#include <cmath>
#include <stdexcept>

namespace pgq {

namespace {

void require_order(const PGElement& g, const WeightSeq& w) {
  if (g.order() != w.order()) throw std::invalid_argument("symbol order differs from weight count");
}

void require_order(const WeightSeq& w, const AlgebraCtx& ctx) {
  if (ctx.order() != w.order()) throw std::invalid_argument("weight count differs from context order");
}

MatrixC matrix_power(const MatrixC& m, int n) {
  MatrixC out = MatrixC::Identity(m.rows(), m.cols());
  for (int k = 0; k < n; ++k) out = out * m;
  return out;
}

}  // namespace

OperatorBH OperatorBH::to_orthonormal(const WeightSeq& w) const {
  if (basis == BhBasis::Orthonormal) return *this;
  const int l = order();
  OperatorBH out{matrix, BhBasis::Orthonormal};
  for (int r = 0; r < l; ++r)
    for (int c = 0; c < l; ++c) out.matrix(r, c) *= std::sqrt(w.at(r) / w.at(c));
  return out;
}

OperatorBH OperatorBH::to_monomial(const WeightSeq& w) const {
  if (basis == BhBasis::Monomial) return *this;
  const int l = order();
  OperatorBH out{matrix, BhBasis::Monomial};
  for (int r = 0; r < l; ++r)
    for (int c = 0; c < l; ++c) out.matrix(r, c) *= std::sqrt(w.at(c) / w.at(r));
  return out;
}

PGElement project_pk(const PGElement& f, const WeightSeq& w, ProjectionMode mode) {
  require_order(f, w);
  const int l = w.order();
  PGElement out(l);
  if (mode == ProjectionMode::Kernel) {
    for (int k = 0; k < l; ++k) {
      out.coeff(k, 0) = form(PGElement::basis(l, k, 0), f, w) / w.at(k);
    }
    return out;
  }
  for (int a = 0; a < l; ++a)
    for (int b = 0; b <= a; ++b) out.coeff(a - b, 0) += f.coeff(a, b) * w.ratio(a, a - b);
  return out;
}

OperatorPG pk_operator(const WeightSeq& w) {
  const int l = w.order();
  OperatorPG op{MatrixC::Zero(l * l, l * l)};
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b)
      op.matrix.col(aw_index(a, b, l)) = project_pk(PGElement::basis(l, a, b), w).to_vector();
  return op;
}

PGElement project_pk_bar(const PGElement& f, const WeightSeq& w) {
  require_order(f, w);
  const int l = w.order();
  PGElement out(l);
  for (int b = 0; b < l; ++b)
    for (int a = 0; a <= b; ++a) out.coeff(0, b - a) += f.coeff(a, b) * w.ratio(b, b - a);
  return out;
}

OperatorPG mult_operator(const PGElement& g, Side side, const AlgebraCtx& ctx) {
  const int l = ctx.order();
  OperatorPG op{MatrixC::Zero(l * l, l * l)};
  for (int c = 0; c < l; ++c)
    for (int d = 0; d < l; ++d) {
      const PGElement basis = PGElement::basis(l, c, d);
      const PGElement image = side == Side::Right ? multiply(basis, g, ctx) : multiply(g, basis, ctx);
      op.matrix.col(aw_index(c, d, l)) = image.to_vector();
    }
  return op;
}

OperatorBH toeplitz(const PGElement& g, const WeightSeq& w, const AlgebraCtx& ctx,
                    ToeplitzMode mode) {
  require_order(g, w);
  require_order(w, ctx);
  const int l = w.order();
  OperatorBH out{MatrixC::Zero(l, l), BhBasis::Monomial};

  if (mode == ToeplitzMode::Projection) {
    for (int a = 0; a < l; ++a) {
      const PGElement image =
          project_pk(multiply(PGElement::basis(l, a, 0), g, ctx), w, ProjectionMode::Kernel);
      for (int r = 0; r < l; ++r) out.matrix(r, a) = image.coeff(r, 0);
    }
    return out;
  }

  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      const Complex c = g.coeff(i, j);
      if (c == Complex(0.0)) continue;
      for (int a = 0; a + i < l; ++a) {
        const int row = i + a - j;
        if (row < 0) continue;
        out.matrix(row, a) += c * w.ratio(i + a, row);
      }
    }
  return out;
}

OperatorBH toeplitz_orthonormal(const PGElement& g, const WeightSeq& w, const AlgebraCtx& ctx) {
  require_order(g, w);
  require_order(w, ctx);
  const int l = w.order();
  OperatorBH out{MatrixC::Zero(l, l), BhBasis::Orthonormal};
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      const Complex c = g.coeff(i, j);
      if (c == Complex(0.0)) continue;
      for (int a = 0; a + i < l; ++a) {
        const int row = a + i - j;
        if (row < 0) continue;
        out.matrix(row, a) += c * w.at(a + i) / std::sqrt(w.at(a) * w.at(row));
      }
    }
  return out;
}

OperatorBH toeplitz_adjoint(const OperatorBH& a, const WeightSeq& w) {
  if (a.basis == BhBasis::Orthonormal) return OperatorBH{a.matrix.adjoint(), BhBasis::Orthonormal};
  const int l = a.order();
  OperatorBH out{a.matrix.adjoint(), BhBasis::Monomial};
  for (int r = 0; r < l; ++r)
    for (int c = 0; c < l; ++c) out.matrix(r, c) *= w.at(c) / w.at(r);
  return out;
}

MatrixC coherent_quantization(const PGElement& g, const WeightSeq& w, const AlgebraCtx& ctx,
                              CoherentMode mode) {
  require_order(g, w);
  require_order(w, ctx);
  const int l = w.order();
  MatrixC out = MatrixC::Zero(l, l);

  if (mode == CoherentMode::Berezin) {
    // <e_r| A_g |e_s> = sum_m w_{l-1-m} (w_r w_s)^{-1/2} Berezin(theta^r theta^m g tb^m tb^s)
    for (int r = 0; r < l; ++r)
      for (int s = 0; s < l; ++s) {
        Complex acc = 0.0;
        for (int m = 0; m < l; ++m) {
          if (r + m >= l || s + m >= l) continue;
          const PGElement left = PGElement::basis(l, r + m, 0);
          const PGElement right = PGElement::basis(l, 0, m + s);
          acc += w.at(l - 1 - m) * berezin_integral(multiply(multiply(left, g, ctx), right, ctx));
        }
        out(r, s) = acc / std::sqrt(w.at(r) * w.at(s));
      }
    return out;
  }

  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      const Complex c = g.coeff(i, j);
      if (c == Complex(0.0)) continue;
      for (int a = 0; j + a < l; ++a) {
        const int row = j - i + a;
        if (row < 0) continue;
        out(row, a) += c * w.at(j + a) / std::sqrt(w.at(row) * w.at(a));
      }
    }
  return out;
}

MatrixC toeplitz_flat(const PGElement& g, const WeightSeq& w, const AlgebraCtx& ctx) {
  require_order(g, w);
  require_order(w, ctx);
  const int l = w.order();
  MatrixC out = MatrixC::Zero(l, l);
  for (int a = 0; a < l; ++a) {
    const PGElement phi_star = PGElement::basis(l, 0, a, 1.0 / std::sqrt(w.at(a)));
    const PGElement image = project_pk_bar(multiply(g, phi_star, ctx), w);
    // tb^b = w_b^{1/2} phi_b^*
    for (int b = 0; b < l; ++b) out(b, a) = image.coeff(0, b) * std::sqrt(w.at(b));
  }
  return out;
}

MatrixC toeplitz_flat_basis_formula(int i, int j, const WeightSeq& w) {
  const int l = w.order();
  MatrixC out = MatrixC::Zero(l, l);
  for (int a = 0; a < l; ++a) {
    const int row = j - i + a;
    if (row < 0 || row >= l || j + a >= l) continue;
    out(row, a) = w.at(j + a) / std::sqrt(w.at(row) * w.at(a));
  }
  return out;
}

LadderSet ladder_set(const WeightSeq& w, const AlgebraCtx& ctx) {
  require_order(w, ctx);
  const int l = w.order();
  LadderSet out;
  out.creation = toeplitz(PGElement::theta(l), w, ctx);
  out.annihilation = toeplitz(PGElement::theta_bar(l), w, ctx);
  out.number = OperatorBH{out.creation.matrix * out.annihilation.matrix, BhBasis::Monomial};
  out.deformed_ints.resize(static_cast<std::size_t>(l));
  out.deformed_factorials.resize(static_cast<std::size_t>(l));
  double factorial = 1.0;
  for (int a = 0; a < l; ++a) {
    const double deformed = w.ratio(a, a - 1);
    out.deformed_ints[static_cast<std::size_t>(a)] = deformed;
    if (a > 0) factorial *= deformed;
    out.deformed_factorials[static_cast<std::size_t>(a)] = factorial;
  }
  return out;
}

std::vector<double> number_spectrum(const LadderSet& ladder) {
  const int l = ladder.number.order();
  std::vector<double> out(static_cast<std::size_t>(l));
  for (int a = 0; a < l; ++a) out[static_cast<std::size_t>(a)] = ladder.number.matrix(a, a).real();
  return out;
}

double operator_norm_bh(const OperatorBH& a, const WeightSeq& w) {
  const MatrixC m = a.to_orthonormal(w).matrix;
  Eigen::JacobiSVD<MatrixC> svd(m);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

VectorC vectorize(const MatrixC& m) {
  return Eigen::Map<const VectorC>(m.data(), m.size());
}

MatrixC toeplitz_map_matrix(const WeightSeq& w, const AlgebraCtx& ctx) {
  const int l = w.order();
  MatrixC out(l * l, l * l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      out.col(aw_index(i, j, l)) = vectorize(toeplitz(PGElement::basis(l, i, j), w, ctx).matrix);
  return out;
}

MatrixC coherent_map_matrix(const WeightSeq& w, const AlgebraCtx& ctx) {
  const int l = w.order();
  MatrixC out(l * l, l * l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      out.col(aw_index(i, j, l)) =
          vectorize(coherent_quantization(PGElement::basis(l, i, j), w, ctx));
  return out;
}

MatrixC anti_wick_operator_set(const LadderSet& ladder) {
  const int l = ladder.creation.order();
  MatrixC out(l * l, l * l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      out.col(aw_index(i, j, l)) = vectorize(matrix_power(ladder.annihilation.matrix, j) *
                                             matrix_power(ladder.creation.matrix, i));
  return out;
}

MatrixC wick_operator_set(const LadderSet& ladder) {
  const int l = ladder.creation.order();
  MatrixC out(l * l, l * l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      out.col(aw_index(i, j, l)) = vectorize(matrix_power(ladder.creation.matrix, i) *
                                             matrix_power(ladder.annihilation.matrix, j));
  return out;
}

}  // namespace pgq
