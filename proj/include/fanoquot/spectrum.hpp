#pragma once

// Floating-point cross-check of chart ages: eigenvalues of the 0/1 permutation
// matrix are snapped to m-th roots of unity and the age is recomputed from the
// recovered exponents. Shares no code path with weights_of / chart_age.

#include "permutation.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace fanoquot {

class OracleFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kRootMatchTolerance = 1e-6;
inline constexpr std::int64_t kMaxOracleOrder = 1 << 20;

inline Eigen::MatrixXd permutation_matrix(const Permutation& g) {
  const auto n = static_cast<Eigen::Index>(g.degree());
  Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) mat(g.image(static_cast<Point>(i)), i) = 1.0;
  return mat;
}

struct SpectrumExponents {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> exponents;  // eigenvalue k is exp(2 pi i exponents[k] / modulus)
  double max_residual = 0;              // worst distance to the matched root
};

inline SpectrumExponents spectrum_exponents(const Permutation& g) {
  // order by brute force, independent of the cycle-type lcm
  std::int64_t m = 1;
  {
    Permutation x = g;
    while (!x.is_identity()) {
      x = x * g;
      if (++m > kMaxOracleOrder) throw OracleFailure("element order too large for the oracle");
    }
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(permutation_matrix(g), false);
  if (solver.info() != Eigen::Success) throw OracleFailure("eigen decomposition did not converge");

  SpectrumExponents out;
  out.modulus = m;
  const double two_pi = 2.0 * std::numbers::pi;
  const double spacing = 2.0 * std::sin(std::numbers::pi / static_cast<double>(m));
  for (const std::complex<double>& lambda : solver.eigenvalues()) {
    const double turns = std::arg(lambda) / two_pi * static_cast<double>(m);
    std::int64_t e = static_cast<std::int64_t>(std::llround(turns)) % m;
    if (e < 0) e += m;
    const std::complex<double> root = std::polar(1.0, two_pi * static_cast<double>(e) / static_cast<double>(m));
    const double residual = std::abs(lambda - root);
    if (residual > kRootMatchTolerance || (m > 1 && residual > 0.25 * spacing))
      throw OracleFailure("eigenvalue " + std::to_string(lambda.real()) + "+" + std::to_string(lambda.imag()) +
                          "i is not within tolerance of an m-th root of unity (m = " + std::to_string(m) + ")");
    out.max_residual = std::max(out.max_residual, residual);
    out.exponents.push_back(e);
  }
  return out;
}

// Age at the chart whose distinguished eigenvalue has the given exponent.
inline double age_via_spectrum(const SpectrumExponents& s, std::int64_t chart_weight) {
  bool skipped = false;
  double age = 0;
  for (std::int64_t e : s.exponents) {
    if (!skipped && e == chart_weight) {
      skipped = true;
      continue;
    }
    std::int64_t r = (e - chart_weight) % s.modulus;
    if (r < 0) r += s.modulus;
    age += static_cast<double>(r) / static_cast<double>(s.modulus);
  }
  if (!skipped)
    throw OracleFailure("exponent " + std::to_string(chart_weight) + " not in the recovered spectrum");
  return age;
}

inline double age_via_spectrum(const Permutation& g, std::int64_t chart_weight) {
  return age_via_spectrum(spectrum_exponents(g), chart_weight);
}

}  // namespace fanoquot
