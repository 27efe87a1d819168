#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace pgq {

using Complex = std::complex<double>;
using MatrixC = Eigen::MatrixXcd;
using MatrixR = Eigen::MatrixXd;
using VectorC = Eigen::VectorXcd;

/// Tolerance policy shared by every identity check in the library.
struct Tolerance {
  double relative = 1e-9;
  double absolute = 1e-12;
};

inline bool close(Complex a, Complex b, Tolerance tol = {}) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= std::max(tol.absolute, tol.relative * scale);
}

/// Largest entrywise deviation scaled by max(1, largest entry). This is the
/// residual reported by all matrix identity checks.
double scaled_deviation(const MatrixC& a, const MatrixC& b);

/// Numerical rank: number of singular values above rel * sigma_max.
int numerical_rank(const MatrixC& m, double rel = 1e-9);

/// z^n by repeated squaring; negative n inverts first. Exact for powers of two.
inline Complex int_pow(Complex z, long n) {
  if (n < 0) {
    z = 1.0 / z;
    n = -n;
  }
  Complex result = 1.0;
  while (n > 0) {
    if (n & 1) result *= z;
    n >>= 1;
    if (n > 0) z *= z;
  }
  return result;
}

/// Deterministic generator. Uses raw engine bits only, so the stream is
/// identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Both parts uniform in [-1, 1).
  Complex complex_unit_box() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pgq
