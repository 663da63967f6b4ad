#pragma once

// Descent certificate for the coordinatewise d-th power map on P^n under a
// group of coordinate permutations.

#include "age.hpp"
#include "group.hpp"
#include "permutation.hpp"
#include "rational.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fanoquot {

// A monomial: sorted (coordinate, exponent) pairs with positive exponents.
using Monomial = std::vector<std::pair<std::size_t, std::int64_t>>;

// x_i -> monomial_i for each of the N coordinates. power_map(d, N) is
// x_i -> x_i^d; permutation_map(s) is x_i -> x_{s^-1(i)}.
class MonomialMap {
 public:
  MonomialMap(std::int64_t exponent, std::vector<Monomial> components)
      : exponent_(exponent), components_(std::move(components)) {}

  std::size_t coordinates() const noexcept { return components_.size(); }
  // d for power maps, 1 for permutation maps.
  std::int64_t exponent() const noexcept { return exponent_; }
  const std::vector<Monomial>& components() const noexcept { return components_; }

  friend bool operator==(const MonomialMap& a, const MonomialMap& b) {
    return a.components_ == b.components_;
  }

 private:
  std::int64_t exponent_;
  std::vector<Monomial> components_;
};

inline MonomialMap power_map(std::int64_t d, std::size_t coordinates) {
  if (d < 1) throw std::invalid_argument("power map exponent must be >= 1");
  if (coordinates < 2) throw std::invalid_argument("power map needs at least 2 coordinates");
  std::vector<Monomial> comps(coordinates);
  for (std::size_t i = 0; i < coordinates; ++i) comps[i] = {{i, d}};
  return MonomialMap(d, std::move(comps));
}

// Coordinate permutation: the s-image of the point with coordinate vector x
// has x_i in position s(i).
inline MonomialMap permutation_map(const Permutation& s) {
  std::vector<Monomial> comps(s.degree());
  for (std::size_t i = 0; i < s.degree(); ++i) comps[s.image(static_cast<Point>(i))] = {{i, 1}};
  return MonomialMap(1, std::move(comps));
}

// (outer o inner): coordinate i is outer_i evaluated at inner.
inline MonomialMap compose(const MonomialMap& outer, const MonomialMap& inner) {
  if (outer.coordinates() != inner.coordinates())
    throw std::invalid_argument("monomial maps on different numbers of coordinates");
  std::vector<Monomial> comps(outer.coordinates());
  for (std::size_t i = 0; i < outer.coordinates(); ++i) {
    std::vector<std::int64_t> exps(outer.coordinates(), 0);
    for (const auto& [var, e] : outer.components()[i])
      for (const auto& [inner_var, inner_e] : inner.components()[var]) exps[inner_var] += e * inner_e;
    for (std::size_t v = 0; v < exps.size(); ++v)
      if (exps[v] != 0) comps[i].emplace_back(v, exps[v]);
  }
  return MonomialMap(outer.exponent() * inner.exponent(), std::move(comps));
}

// Exact comparison of map o s and s o map as monomial exponent data.
inline bool commutes(const MonomialMap& map, const Permutation& s) {
  if (s.degree() != map.coordinates())
    throw std::invalid_argument("permutation degree " + std::to_string(s.degree()) + " does not match " +
                                std::to_string(map.coordinates()) + " coordinates");
  const MonomialMap perm = permutation_map(s);
  return compose(map, perm) == compose(perm, map);
}

inline BigInt endo_degree(std::int64_t d, std::size_t dimension) {
  if (d < 1) throw std::invalid_argument("exponent must be >= 1");
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  return boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(dimension));
}

// Numeric spot check of the degree: number of distinct preimages of a generic
// point of P^dim (dim <= 2) under the d-th power map, via companion-matrix roots.
inline std::size_t count_power_map_preimages(std::int64_t d, std::size_t dimension) {
  if (dimension < 1 || dimension > 2) throw std::invalid_argument("numeric preimage count supports dim 1 or 2");
  if (d < 1 || d > 64) throw std::invalid_argument("numeric preimage count supports 1 <= d <= 64");
  using C = std::complex<double>;
  const C targets[2] = {C(0.73, -1.19), C(-0.41, 0.88)};  // affine chart: last coordinate = 1

  auto roots_of = [d](C target) {
    // z^d - target = 0
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
    for (std::int64_t i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
    companion(0, d - 1) = target;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    std::vector<C> roots;
    for (const C& z : solver.eigenvalues())
      if (std::abs(std::pow(z, static_cast<double>(d)) - target) < 1e-8 * std::max(1.0, std::abs(target))) {
        const bool dup = std::any_of(roots.begin(), roots.end(), [&](const C& r) { return std::abs(r - z) < 1e-6; });
        if (!dup) roots.push_back(z);
      }
    return roots;
  };

  const auto xs = roots_of(targets[0]);
  if (dimension == 1) return xs.size();
  const auto ys = roots_of(targets[1]);
  std::size_t count = 0;
  for (const C& x : xs)
    for (const C& y : ys)
      if (std::abs(std::pow(x, static_cast<double>(d)) - targets[0]) < 1e-8 &&
          std::abs(std::pow(y, static_cast<double>(d)) - targets[1]) < 1e-8)
        ++count;
  return count;
}

struct EndoCertificate {
  std::int64_t exponent = 1;
  std::size_t dimension = 1;  // n for P^n, one less than the number of coordinates
  std::size_t group_order = 1;
  std::vector<bool> commutes;  // one per generator
  BigInt degree = 1;
  std::optional<Verdict> verdict;

  bool valid() const { return std::all_of(commutes.begin(), commutes.end(), [](bool b) { return b; }); }
};

// Checking the generators suffices: the maps commuting with the power map form a group.
inline EndoCertificate certificate(const PermutationGroup& group, std::int64_t d, bool with_verdict = true) {
  if (group.degree() < 2) throw std::invalid_argument("group must act on at least 2 coordinates");
  const MonomialMap map = power_map(d, group.degree());
  EndoCertificate cert;
  cert.exponent = d;
  cert.dimension = group.degree() - 1;
  cert.group_order = group.order();
  for (const auto& g : group.generators()) cert.commutes.push_back(commutes(map, g));
  cert.degree = endo_degree(d, cert.dimension);
  if (with_verdict) cert.verdict = reid_tai_verdict(group);
  return cert;
}

}  // namespace fanoquot
