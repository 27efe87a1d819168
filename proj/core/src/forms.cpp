#include "pgq/forms.hpp"

#include <cmath>
#include <stdexcept>

namespace pgq {

WeightSeq::WeightSeq(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) throw std::invalid_argument("at least two weights are required");
  for (double v : values_) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("weights must be strictly positive");
    }
  }
}

WeightSeq WeightSeq::ones(int order) {
  return WeightSeq(std::vector<double>(static_cast<std::size_t>(order), 1.0));
}

WeightSeq WeightSeq::factorial(int order) {
  std::vector<double> v(static_cast<std::size_t>(order));
  double acc = 1.0;
  for (int n = 0; n < order; ++n) {
    if (n > 0) acc *= n;
    v[static_cast<std::size_t>(n)] = acc;
  }
  return WeightSeq(std::move(v));
}

WeightSeq WeightSeq::q_factorial(int order, Complex q) {
  if (q.imag() != 0.0) throw std::invalid_argument("qfactorial weights require real q");
  const double qr = q.real();
  std::vector<double> v(static_cast<std::size_t>(order));
  double acc = 1.0;
  double q_pow = 1.0;
  for (int n = 0; n < order; ++n) {
    if (n > 0) {
      q_pow *= qr;
      // [n]_q = 1 + q + ... + q^{n-1}
      const double factor = qr == 1.0 ? n : (1.0 - q_pow) / (1.0 - qr);
      if (!(factor > 0.0)) {
        throw std::invalid_argument("qfactorial weights need every factor (1-q^k)/(1-q) > 0");
      }
      acc *= factor;
    }
    v[static_cast<std::size_t>(n)] = acc;
  }
  return WeightSeq(std::move(v));
}

double WeightSeq::at(int n) const {
  if (n < 0) throw std::out_of_range("negative weight index");
  return n < order() ? values_[static_cast<std::size_t>(n)] : 0.0;
}

double WeightSeq::ratio(int num, int den) const {
  if (num < 0 || den < 0 || num >= order() || den >= order()) return 0.0;
  return values_[static_cast<std::size_t>(num)] / values_[static_cast<std::size_t>(den)];
}

GramMatrix::GramMatrix(const WeightSeq& w)
    : order_(w.order()), matrix_(MatrixR::Zero(order_ * order_, order_ * order_)) {
  const int l = order_;
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b)
      for (int c = 0; c < l; ++c)
        for (int d = 0; d < l; ++d)
          if (a + d == b + c && a + d < l) matrix_(aw_index(a, b, l), aw_index(c, d, l)) = w.at(a + d);
  lu_ = std::make_shared<const Eigen::FullPivLU<MatrixR>>(matrix_);
}

double GramMatrix::determinant() const { return lu_->determinant(); }

bool GramMatrix::invertible() const { return lu_->isInvertible(); }

MatrixC GramMatrix::solve(const MatrixC& rhs) const {
  const MatrixR re = lu_->solve(MatrixR(rhs.real()));
  const MatrixR im = lu_->solve(MatrixR(rhs.imag()));
  MatrixC out(re.rows(), re.cols());
  out.real() = re;
  out.imag() = im;
  return out;
}

GramMatrix gram_matrix(const WeightSeq& w) { return GramMatrix(w); }

Complex form(const PGElement& f, const PGElement& g, const WeightSeq& w, FormMode mode) {
  const int l = w.order();
  if (f.order() != l || g.order() != l) throw std::invalid_argument("form: order mismatch");

  if (mode == FormMode::Definitional) {
    const PGElement inner = anti_wick_product(conjugate(f), g);
    // theta^m and tb^m sit on the outside of an anti-Wick ordered element,
    // so the surrounding products never pick up q factors; the top
    // anti-Wick product with them is the algebra product here.
    Complex acc = 0.0;
    for (int m = 0; m < l; ++m) {
      const PGElement sandwiched = anti_wick_product(
          PGElement::basis(l, m, 0), anti_wick_product(inner, PGElement::basis(l, 0, m)));
      acc += w.at(l - 1 - m) * berezin_integral(sandwiched);
    }
    return acc;
  }

  // Closed form: sum over (a,b),(c,d) with a+d = b+c = n < l of
  // conj(f_ab) g_cd w_n. For fixed (a, b) the partner index runs over d,
  // with c = a + d - b.
  Complex acc = 0.0;
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b) {
      const Complex fab = std::conj(f.coeff(a, b));
      if (fab == Complex(0.0)) continue;
      for (int d = 0; a + d < l; ++d) {
        const int c = a + d - b;
        if (c < 0 || c >= l) continue;
        acc += fab * g.coeff(c, d) * w.at(a + d);
      }
    }
  return acc;
}

int OperatorPG::order() const {
  return static_cast<int>(std::lround(std::sqrt(static_cast<double>(matrix.rows()))));
}

PGElement OperatorPG::apply(const PGElement& f) const {
  return PGElement::from_vector(f.order(), matrix * f.to_vector());
}

OperatorPG adjoint_wrt_form(const OperatorPG& a, const GramMatrix& gram) {
  const MatrixC g = gram.matrix().cast<Complex>();
  return OperatorPG{gram.solve(a.matrix.adjoint() * g)};
}

OperatorPG adjoint_wrt_form(const OperatorPG& a, const WeightSeq& w) {
  return adjoint_wrt_form(a, GramMatrix(w));
}

PGElement orthonormal_phi(int j, const WeightSeq& w) {
  if (j < 0 || j >= w.order()) throw std::out_of_range("orthonormal_phi: index out of range");
  return PGElement::basis(w.order(), j, 0, 1.0 / std::sqrt(w.at(j)));
}

}  // namespace pgq
