#include "pgq/algebra.hpp"

#include <stdexcept>
#include <string>

namespace pgq {

namespace {

void require_same_order(const PGElement& f, const PGElement& g) {
  if (f.order() != g.order()) {
    throw std::invalid_argument("PGElement order mismatch: " + std::to_string(f.order()) +
                                " vs " + std::to_string(g.order()));
  }
}

}  // namespace

AlgebraCtx::AlgebraCtx(int order, Complex q) : order_(order), q_(q) {
  if (order < 2) throw std::invalid_argument("order l must be at least 2");
  if (q == Complex(0.0)) throw std::invalid_argument("q must be nonzero");
}

PGElement::PGElement(int order) : coeffs_(MatrixC::Zero(order, order)) {
  if (order < 1) throw std::invalid_argument("order must be positive");
}

PGElement::PGElement(MatrixC coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.rows() != coeffs_.cols() || coeffs_.rows() < 1) {
    throw std::invalid_argument("coefficient table must be square and non-empty");
  }
}

PGElement PGElement::basis(int order, int i, int j, Complex c) {
  PGElement e(order);
  if (i < 0 || j < 0 || i >= order || j >= order) {
    throw std::out_of_range("basis index out of range");
  }
  e.coeffs_(i, j) = c;
  return e;
}

VectorC PGElement::to_vector() const {
  const int l = order();
  VectorC v(l * l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) v(aw_index(i, j, l)) = coeffs_(i, j);
  return v;
}

PGElement PGElement::from_vector(int order, const VectorC& v) {
  if (v.size() != order * order) throw std::invalid_argument("vector length must be l^2");
  PGElement e(order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) e.coeffs_(i, j) = v(aw_index(i, j, order));
  return e;
}

bool PGElement::is_holomorphic(double eps) const {
  for (int i = 0; i < order(); ++i)
    for (int j = 1; j < order(); ++j)
      if (std::abs(coeffs_(i, j)) > eps) return false;
  return true;
}

bool PGElement::is_anti_holomorphic(double eps) const {
  for (int i = 1; i < order(); ++i)
    for (int j = 0; j < order(); ++j)
      if (std::abs(coeffs_(i, j)) > eps) return false;
  return true;
}

PGElement& PGElement::operator+=(const PGElement& other) {
  require_same_order(*this, other);
  coeffs_ += other.coeffs_;
  return *this;
}

PGElement& PGElement::operator-=(const PGElement& other) {
  require_same_order(*this, other);
  coeffs_ -= other.coeffs_;
  return *this;
}

PGElement& PGElement::operator*=(Complex s) {
  coeffs_ *= s;
  return *this;
}

bool approx_equal(const PGElement& a, const PGElement& b, Tolerance tol) {
  if (a.order() != b.order()) return false;
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j)
      if (!close(a.coeff(i, j), b.coeff(i, j), tol)) return false;
  return true;
}

PGElement normal_order(std::span<const Generator> word, const AlgebraCtx& ctx) {
  const int l = ctx.order();
  int thetas = 0;
  int bars = 0;
  long inversions = 0;
  for (Generator g : word) {
    if (g == Generator::Theta) {
      ++thetas;
      inversions += bars;
    } else {
      ++bars;
    }
  }
  PGElement out(l);
  if (thetas >= l || bars >= l) return out;
  out.coeff(thetas, bars) = int_pow(ctx.q(), -inversions);
  return out;
}

PGElement multiply(const PGElement& f, const PGElement& g, const AlgebraCtx& ctx) {
  require_same_order(f, g);
  const int l = f.order();
  if (l != ctx.order()) throw std::invalid_argument("element order differs from context order");

  // q^{-k} for k = b*c <= (l-1)^2.
  std::vector<Complex> inv_q_pow((l - 1) * (l - 1) + 1);
  inv_q_pow[0] = 1.0;
  const Complex inv_q = 1.0 / ctx.q();
  for (std::size_t k = 1; k < inv_q_pow.size(); ++k) inv_q_pow[k] = inv_q_pow[k - 1] * inv_q;

  PGElement out(l);
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b) {
      const Complex fab = f.coeff(a, b);
      if (fab == Complex(0.0)) continue;
      for (int c = 0; a + c < l; ++c)
        for (int d = 0; b + d < l; ++d) {
          const Complex gcd = g.coeff(c, d);
          if (gcd == Complex(0.0)) continue;
          out.coeff(a + c, b + d) += fab * gcd * inv_q_pow[b * c];
        }
    }
  return out;
}

PGElement conjugate(const PGElement& f) {
  return PGElement(MatrixC(f.coeffs().adjoint()));
}

PGElement z_map(const PGElement& f) {
  return PGElement(MatrixC(f.coeffs().transpose()));
}

PGElement anti_wick_product(const PGElement& f, const PGElement& g) {
  require_same_order(f, g);
  const int l = f.order();
  PGElement out(l);
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b) {
      const Complex fab = f.coeff(a, b);
      if (fab == Complex(0.0)) continue;
      for (int c = 0; a + c < l; ++c)
        for (int d = 0; b + d < l; ++d) out.coeff(a + c, b + d) += fab * g.coeff(c, d);
    }
  return out;
}

Complex berezin_integral(const PGElement& f) {
  const int top = f.order() - 1;
  return f.coeff(top, top);
}

PGElement holomorphic_polynomial(std::span<const Complex> alpha, int order) {
  PGElement out(order);
  for (std::size_t j = 0; j < alpha.size() && static_cast<int>(j) < order; ++j) {
    out.coeff(static_cast<int>(j), 0) = alpha[j];
  }
  return out;
}

}  // namespace pgq
