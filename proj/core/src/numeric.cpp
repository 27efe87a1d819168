#include "pgq/numeric.hpp"

#include <algorithm>

namespace pgq {

double scaled_deviation(const MatrixC& a, const MatrixC& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  if (a.size() == 0) return 0.0;
  const double scale =
      std::max({1.0, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
  return (a - b).cwiseAbs().maxCoeff() / scale;
}

int numerical_rank(const MatrixC& m, double rel) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<MatrixC> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cutoff = rel * s(0);
  return static_cast<int>((s.array() > cutoff).count());
}

}  // namespace pgq
