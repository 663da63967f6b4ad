#pragma once

// Ages of permutations acting on projective space by permuting coordinates,
// and the Reid-Tai terminality decision for a permutation group.
//
// A permutation g of order m with cycles of lengths n_1..n_k diagonalizes with
// eigenvalues xi^w, xi a fixed primitive m-th root of unity. A cycle of length
// n_j contributes the exponents {k * m/n_j : 0 <= k < n_j}. A fixed point of g
// on the chart t_p != 0 has tangent weights (w_i - w_p) mod m over all i != p,
// and its age is the sum of those residues divided by m. The tangent weights
// depend only on the value w_p, so charts are indexed by distinct weights.

#include "group.hpp"
#include "permutation.hpp"
#include "rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fanoquot {

struct WeightVector {
  BigInt modulus = 1;
  std::vector<BigInt> weights;  // one per coordinate, grouped by cycle

  // value -> multiplicity
  std::map<BigInt, std::size_t> histogram() const {
    std::map<BigInt, std::size_t> h;
    for (const auto& w : weights) ++h[w];
    return h;
  }

  // Distinct weight values in ascending order; one chart each.
  std::vector<BigInt> charts() const {
    std::vector<BigInt> out;
    for (const auto& [w, count] : histogram()) out.push_back(w);
    return out;
  }
};

inline WeightVector weights_of(const Permutation& g) {
  const auto cycles = cycle_decomposition(g);
  WeightVector wv;
  for (const Cycle& c : cycles) wv.modulus = lcm(wv.modulus, BigInt(c.size()));
  wv.weights.reserve(g.degree());
  for (const Cycle& c : cycles) {
    const BigInt step = wv.modulus / c.size();
    for (std::size_t k = 0; k < c.size(); ++k) wv.weights.push_back(step * k);
  }
  return wv;
}

namespace detail {

inline BigInt residue(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

inline void require_chart(const std::map<BigInt, std::size_t>& hist, const BigInt& chart_weight) {
  if (!hist.contains(chart_weight))
    throw std::invalid_argument("weight " + chart_weight.str() +
                                " does not occur: no fixed point on that chart");
}

}  // namespace detail

// Tangent weights at the chart, one occurrence of chart_weight removed.
inline std::vector<BigInt> tangent_weights(const WeightVector& w, const BigInt& chart_weight) {
  std::vector<BigInt> out;
  bool skipped = false;
  for (const auto& wi : w.weights) {
    if (!skipped && wi == chart_weight) {
      skipped = true;
      continue;
    }
    out.push_back(detail::residue(wi - chart_weight, w.modulus));
  }
  if (!skipped) detail::require_chart(w.histogram(), chart_weight);
  return out;
}

inline Rational chart_age(const WeightVector& w, const BigInt& chart_weight) {
  const auto hist = w.histogram();
  detail::require_chart(hist, chart_weight);
  BigInt total = 0;
  for (const auto& [value, count] : hist) total += detail::residue(value - chart_weight, w.modulus) * count;
  return Rational(total, w.modulus);
}

inline Rational chart_age(const Permutation& g, const BigInt& chart_weight) {
  return chart_age(weights_of(g), chart_weight);
}

// sum over cycles of (n_j - 1)/2
inline Rational age_lower_bound(const CycleType& t) {
  BigInt twice = 0;
  for (std::size_t len : t.lengths) twice += len - 1;
  return Rational(twice, 2);
}

inline Rational age_lower_bound(const Permutation& g) { return age_lower_bound(cycle_type(g)); }

struct AgeReport {
  Permutation element;
  CycleType type;
  BigInt order = 1;
  std::map<BigInt, Rational> chart_ages;  // chart weight -> age
  Rational min_age = 0;
  Rational lower_bound = 0;
  std::vector<BigInt> quasi_reflection_charts;

  // Charts where the minimum is attained.
  std::vector<BigInt> minimal_charts() const {
    std::vector<BigInt> out;
    for (const auto& [w, age] : chart_ages)
      if (age == min_age) out.push_back(w);
    return out;
  }
};

inline AgeReport analyze_element(const Permutation& g) {
  AgeReport r;
  r.element = g;
  r.type = cycle_type(g);
  r.lower_bound = age_lower_bound(r.type);
  const WeightVector w = weights_of(g);
  r.order = w.modulus;
  const auto hist = w.histogram();
  bool first = true;
  for (const auto& [chart, chart_count] : hist) {
    BigInt total = 0;
    std::size_t nonzero = 0;
    for (const auto& [value, count] : hist) {
      const BigInt res = detail::residue(value - chart, w.modulus);
      total += res * count;
      if (res != 0) nonzero += count;
    }
    Rational age(total, w.modulus);
    if (first || age < r.min_age) r.min_age = age;
    first = false;
    r.chart_ages.emplace(chart, std::move(age));
    if (nonzero == 1) r.quasi_reflection_charts.push_back(chart);
  }
  if (g.is_identity()) r.min_age = 0;
  return r;
}

// Identity returns 0.
inline Rational min_age(const Permutation& g) { return analyze_element(g).min_age; }

// Charts with exactly one nonzero tangent weight.
inline std::vector<BigInt> quasi_reflection_charts(const Permutation& g) {
  return analyze_element(g).quasi_reflection_charts;
}

// True iff no element of G has cycle type (12), (123) or (12)(34).
inline bool lemma_shortcut(const PermutationGroup& group) {
  for (const auto& g : group.elements())
    if (is_forbidden_type(g)) return false;
  return true;
}

enum class VerdictKind { Terminal, CanonicalNotTerminal, NotCanonical, InconclusiveQuasiReflection };

inline std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Terminal: return "Terminal";
    case VerdictKind::CanonicalNotTerminal: return "CanonicalNotTerminal";
    case VerdictKind::NotCanonical: return "NotCanonical";
    case VerdictKind::InconclusiveQuasiReflection: return "InconclusiveQuasiReflection";
  }
  return "?";
}

inline VerdictKind verdict_kind_from_string(const std::string& s) {
  for (auto k : {VerdictKind::Terminal, VerdictKind::CanonicalNotTerminal, VerdictKind::NotCanonical,
                 VerdictKind::InconclusiveQuasiReflection})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

// The canonical/non-canonical split refines a terminality-only decision.
inline bool is_extension(VerdictKind k) {
  return k == VerdictKind::CanonicalNotTerminal || k == VerdictKind::NotCanonical;
}

struct Witness {
  Permutation element;
  BigInt chart;
  Rational age;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Terminal;
  std::optional<Rational> min_age;  // over nontrivial elements; empty for the trivial group
  std::vector<Witness> witnesses;   // empty iff Terminal
};

// One AgeReport per cycle type occurring in the group.
struct CycleTypeDigest {
  AgeReport report;  // for the first element of this type in element order
  std::size_t multiplicity = 0;
};

inline std::vector<CycleTypeDigest> digest_by_cycle_type(const PermutationGroup& group) {
  std::map<CycleType, CycleTypeDigest> by_type;
  for (const auto& g : group.elements()) {
    const CycleType t = cycle_type(g);
    auto it = by_type.find(t);
    if (it == by_type.end()) it = by_type.emplace(t, CycleTypeDigest{analyze_element(g), 0}).first;
    ++it->second.multiplicity;
  }
  std::vector<CycleTypeDigest> out;
  for (auto& [t, d] : by_type) out.push_back(std::move(d));
  return out;
}

// Ages are conjugation invariant in S_n, so each cycle type is analyzed once
// and the result applied to every element of that type.
inline Verdict reid_tai_verdict(const PermutationGroup& group) {
  std::map<CycleType, AgeReport> cache;
  std::vector<Witness> quasi;
  std::vector<std::pair<const Permutation*, const AgeReport*>> nontrivial;
  nontrivial.reserve(group.order());
  for (const auto& g : group.elements()) {
    if (g.is_identity()) continue;
    const CycleType t = cycle_type(g);
    auto it = cache.find(t);
    if (it == cache.end()) it = cache.emplace(t, analyze_element(g)).first;
    const AgeReport& r = it->second;
    nontrivial.emplace_back(&g, &r);
    for (const auto& chart : r.quasi_reflection_charts) quasi.push_back({g, chart, r.chart_ages.at(chart)});
  }

  Verdict v;
  if (nontrivial.empty()) return v;
  v.min_age = nontrivial.front().second->min_age;
  for (const auto& [g, r] : nontrivial) v.min_age = std::min(*v.min_age, r->min_age);

  if (!quasi.empty()) {
    v.kind = VerdictKind::InconclusiveQuasiReflection;
    v.witnesses = std::move(quasi);
    return v;
  }
  if (*v.min_age > 1) return v;

  v.kind = *v.min_age >= 1 ? VerdictKind::CanonicalNotTerminal : VerdictKind::NotCanonical;
  const bool canonical = v.kind == VerdictKind::CanonicalNotTerminal;
  for (const auto& [g, r] : nontrivial) {
    if (canonical ? r->min_age > 1 : r->min_age >= 1) continue;
    for (const auto& chart : r->minimal_charts()) v.witnesses.push_back({*g, chart, r->min_age});
  }
  return v;
}

}  // namespace fanoquot
