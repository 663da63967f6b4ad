#pragma once

// Test-only helpers and independent oracles.

#include <fanoquot/permutation.hpp>
#include <fanoquot/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace fanoquot::test_support {

inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

inline Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(std::move(img));
}

// Smallest j > 0 with p^j = id, by repeated composition done pointwise.
inline std::uint64_t brute_force_order(const Permutation& p) {
  std::vector<Point> cur = p.images();
  std::uint64_t j = 1;
  auto is_id = [](const std::vector<Point>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != i) return false;
    return true;
  };
  while (!is_id(cur)) {
    for (auto& x : cur) x = p.images()[x];
    ++j;
  }
  return j;
}

// Chart ages from cycle lengths alone: a cycle of length n_j contributes the
// sum of c/m over 0 <= c < m with c = k*m_j - p (mod m), for every chart p.
// Computed by enumerating residues, without weight vectors.
inline std::map<std::int64_t, Rational> coset_chart_ages(const std::vector<std::size_t>& lengths) {
  std::int64_t m = 1;
  for (auto len : lengths) m = std::lcm(m, static_cast<std::int64_t>(len));
  std::vector<bool> is_weight(static_cast<std::size_t>(m), false);
  for (auto len : lengths)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(len); ++k) is_weight[k * (m / len)] = true;
  std::map<std::int64_t, Rational> out;
  for (std::int64_t p = 0; p < m; ++p) {
    if (!is_weight[p]) continue;
    std::int64_t total = 0;
    for (auto len : lengths) {
      const std::int64_t mj = m / static_cast<std::int64_t>(len);
      for (std::int64_t c = 0; c < m; ++c)
        if ((c + p) % mj == 0) total += c;
    }
    out.emplace(p, Rational(total, m));
  }
  return out;
}

}  // namespace fanoquot::test_support
