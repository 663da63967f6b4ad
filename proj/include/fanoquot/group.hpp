#pragma once

// Finite permutation groups: generator closure, multiplication tables, the
// regular (Cayley) representation and a few named families.

#include "permutation.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace fanoquot {

inline constexpr std::size_t kDefaultCap = 1'000'000;

class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(std::size_t cap)
      : std::runtime_error("group closure exceeded the cap of " + std::to_string(cap) + " elements"),
        cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class InvalidTable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PermutationGroup {
 public:
  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t cap() const noexcept { return cap_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  // Identity first, then ascending lexicographic order of image sequences.
  const std::vector<Permutation>& elements() const noexcept { return elements_; }

  bool contains(const Permutation& p) const {
    return p.degree() == degree_ && std::binary_search(elements_.begin(), elements_.end(), p);
  }

  std::size_t index_of(const Permutation& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || *it != p) throw std::out_of_range("element not in group");
    return static_cast<std::size_t>(it - elements_.begin());
  }

 private:
  friend PermutationGroup close_generators(std::size_t, std::span<const Permutation>, std::size_t);
  friend PermutationGroup make_group_unchecked(std::size_t, std::vector<Permutation>,
                                               std::vector<Permutation>, std::size_t);

  std::size_t degree_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::size_t cap_ = kDefaultCap;
};

// Breadth-first closure under right multiplication by generators; finite
// groups are closed under inverses automatically.
inline PermutationGroup close_generators(std::size_t degree, std::span<const Permutation> gens,
                                         std::size_t cap = kDefaultCap) {
  if (cap == 0) throw std::invalid_argument("cap must be at least 1");
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("generator " + format_cycles(g) + " has degree " +
                                  std::to_string(g.degree()) + ", expected " + std::to_string(degree));

  const Permutation id = Permutation::identity(degree);
  std::unordered_set<Permutation> seen{id};
  std::deque<Permutation> frontier{id};
  while (!frontier.empty()) {
    Permutation x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      Permutation y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > cap) throw CapExceeded(cap);
        frontier.push_back(std::move(y));
      }
    }
  }

  PermutationGroup group;
  group.degree_ = degree;
  group.generators_.assign(gens.begin(), gens.end());
  group.elements_.assign(seen.begin(), seen.end());
  std::sort(group.elements_.begin(), group.elements_.end());
  group.cap_ = cap;
  return group;
}

inline PermutationGroup close_generators(std::span<const Permutation> gens,
                                         std::size_t cap = kDefaultCap) {
  if (gens.empty()) throw std::invalid_argument("degree unknown for an empty generator list");
  return close_generators(gens.front().degree(), gens, cap);
}

// The caller guarantees that `elements` is a closed, sorted set containing the generators.
inline PermutationGroup make_group_unchecked(std::size_t degree, std::vector<Permutation> generators,
                                             std::vector<Permutation> elements, std::size_t cap) {
  PermutationGroup group;
  group.degree_ = degree;
  group.generators_ = std::move(generators);
  group.elements_ = std::move(elements);
  group.cap_ = cap;
  return group;
}

// Cayley table of a finite group. Index 0 is the identity; at(a, b) = a*b.
class MultiplicationTable {
 public:
  MultiplicationTable() : size_(1), table_{0} {}

  // Rows are validated: square, Latin, identity at index 0, associative.
  explicit MultiplicationTable(const std::vector<std::vector<std::size_t>>& rows) {
    size_ = rows.size();
    if (size_ == 0) throw InvalidTable("multiplication table is empty");
    table_.reserve(size_ * size_);
    for (std::size_t a = 0; a < size_; ++a) {
      if (rows[a].size() != size_)
        throw InvalidTable("row " + std::to_string(a) + " has " + std::to_string(rows[a].size()) +
                           " entries, expected " + std::to_string(size_));
      for (std::size_t v : rows[a]) {
        if (v >= size_)
          throw InvalidTable("row " + std::to_string(a) + " has out-of-range entry " + std::to_string(v));
        table_.push_back(static_cast<std::uint32_t>(v));
      }
    }
    validate();
  }

  std::size_t size() const noexcept { return size_; }
  std::size_t at(std::size_t a, std::size_t b) const { return table_[a * size_ + b]; }

  std::vector<std::vector<std::size_t>> rows() const {
    std::vector<std::vector<std::size_t>> out(size_, std::vector<std::size_t>(size_));
    for (std::size_t a = 0; a < size_; ++a)
      for (std::size_t b = 0; b < size_; ++b) out[a][b] = at(a, b);
    return out;
  }

  bool is_abelian() const {
    for (std::size_t a = 0; a < size_; ++a)
      for (std::size_t b = a + 1; b < size_; ++b)
        if (at(a, b) != at(b, a)) return false;
    return true;
  }

  std::size_t element_order(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t x = a; x != 0; x = at(x, a)) ++k;
    return k;
  }

  // Greedy generating set: lowest index not yet in the generated subgroup, repeatedly.
  std::vector<std::size_t> generating_set() const {
    std::vector<bool> in(size_, false);
    std::vector<std::size_t> members{0};
    in[0] = true;
    std::vector<std::size_t> gens;
    for (std::size_t c = 1; c < size_; ++c) {
      if (in[c]) continue;
      gens.push_back(c);
      // re-close from scratch over the enlarged generating set
      std::deque<std::size_t> frontier(members.begin(), members.end());
      while (!frontier.empty()) {
        const std::size_t x = frontier.front();
        frontier.pop_front();
        for (std::size_t g : gens) {
          const std::size_t y = at(x, g);
          if (!in[y]) {
            in[y] = true;
            members.push_back(y);
            frontier.push_back(y);
          }
        }
      }
    }
    return gens;
  }

 private:
  void validate() const {
    for (std::size_t b = 0; b < size_; ++b) {
      if (at(0, b) != b) throw InvalidTable("row 0 is not the identity row (column " + std::to_string(b) + ")");
      if (at(b, 0) != b) throw InvalidTable("column 0 is not the identity column (row " + std::to_string(b) + ")");
    }
    std::vector<std::uint32_t> mark(size_, 0);
    std::uint32_t stamp = 0;
    for (std::size_t a = 0; a < size_; ++a) {
      ++stamp;
      for (std::size_t b = 0; b < size_; ++b) {
        if (mark[at(a, b)] == stamp)
          throw InvalidTable("row " + std::to_string(a) + " repeats entry " + std::to_string(at(a, b)));
        mark[at(a, b)] = stamp;
      }
    }
    for (std::size_t b = 0; b < size_; ++b) {
      ++stamp;
      for (std::size_t a = 0; a < size_; ++a) {
        if (mark[at(a, b)] == stamp)
          throw InvalidTable("column " + std::to_string(b) + " repeats entry " + std::to_string(at(a, b)));
        mark[at(a, b)] = stamp;
      }
    }
    // Exhaustive associativity up to ~2*10^8 triples, random triples beyond.
    const double triples = static_cast<double>(size_) * size_ * size_;
    auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
      if (at(at(a, b), c) != at(a, at(b, c)))
        throw InvalidTable("not associative at (" + std::to_string(a) + ", " + std::to_string(b) +
                           ", " + std::to_string(c) + ")");
    };
    if (triples <= 2e8) {
      for (std::size_t a = 1; a < size_; ++a)
        for (std::size_t b = 1; b < size_; ++b) {
          const std::size_t ab = at(a, b);
          const std::uint32_t* row_ab = &table_[ab * size_];
          const std::uint32_t* row_b = &table_[b * size_];
          const std::uint32_t* row_a = &table_[a * size_];
          for (std::size_t c = 1; c < size_; ++c)
            if (row_ab[c] != row_a[row_b[c]]) check(a, b, c);
        }
    } else {
      std::mt19937_64 rng(0x5eed);
      std::uniform_int_distribution<std::size_t> pick(0, size_ - 1);
      for (int i = 0; i < 2'000'000; ++i) check(pick(rng), pick(rng), pick(rng));
    }
  }

  std::size_t size_ = 0;
  std::vector<std::uint32_t> table_;
};

// Builds the table of a group given as a list of elements (identity first) and
// a binary operation on them.
template <typename Element, typename Op>
MultiplicationTable table_from_elements(const std::vector<Element>& elements, Op op) {
  std::map<Element, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  if (index.size() != elements.size()) throw InvalidTable("duplicate elements");
  std::vector<std::vector<std::size_t>> rows(elements.size(), std::vector<std::size_t>(elements.size()));
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = 0; b < elements.size(); ++b) {
      auto it = index.find(op(elements[a], elements[b]));
      if (it == index.end()) throw InvalidTable("element set is not closed");
      rows[a][b] = it->second;
    }
  return MultiplicationTable(rows);
}

// a -> (b -> a*b) on points 1..|G|, optionally fixing an extra last point.
// The returned group lists a greedy generating set as generators.
inline PermutationGroup regular_representation(const MultiplicationTable& t, bool add_fixed_point,
                                               std::size_t cap = kDefaultCap) {
  const std::size_t k = t.size();
  if (k > cap) throw CapExceeded(cap);
  const std::size_t degree = k + (add_fixed_point ? 1 : 0);
  std::vector<Permutation> images;
  images.reserve(k);
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<Point> img(degree);
    for (std::size_t b = 0; b < k; ++b) img[b] = static_cast<Point>(t.at(a, b));
    if (add_fixed_point) img[k] = static_cast<Point>(k);
    images.push_back(Permutation::from_images(std::move(img)));
  }
  std::vector<Permutation> gens;
  for (std::size_t g : t.generating_set()) gens.push_back(images[g]);
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end())
    throw InvalidTable("left multiplication is not faithful");
  return make_group_unchecked(degree, std::move(gens), std::move(images), cap);
}

// ---------------------------------------------------------------------------
// Named families

inline MultiplicationTable cyclic_table(std::size_t k) {
  if (k < 1) throw std::invalid_argument("cyclic(k) needs k >= 1");
  std::vector<std::vector<std::size_t>> rows(k, std::vector<std::size_t>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) rows[a][b] = (a + b) % k;
  return MultiplicationTable(rows);
}

// Order 2k: r^i s^e encoded as (i, e); s r s = r^-1.
inline MultiplicationTable dihedral_table(std::size_t k) {
  if (k < 1) throw std::invalid_argument("dihedral(k) needs k >= 1");
  using E = std::pair<std::size_t, std::size_t>;
  std::vector<E> elems;
  for (std::size_t e = 0; e < 2; ++e)
    for (std::size_t i = 0; i < k; ++i) elems.emplace_back(i, e);
  return table_from_elements(elems, [k](const E& x, const E& y) {
    // r^a s^e * r^b s^f = r^(a + (-1)^e b) s^(e+f)
    const std::size_t b = x.second == 0 ? y.first : (k - y.first) % k;
    return E{(x.first + b) % k, (x.second + y.second) % 2};
  });
}

inline bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

// Upper unitriangular 3x3 matrices over F_p, stored as (a, b, c) for
// [[1 a c] [0 1 b] [0 0 1]]. Order p^3.
inline MultiplicationTable heisenberg_table(std::size_t p) {
  if (!is_prime(p)) throw std::invalid_argument("heisenberg(p) needs a prime p");
  if (p * p * p > 50'000) throw std::invalid_argument("heisenberg(p) too large for a table");
  using E = std::array<std::size_t, 3>;
  std::vector<E> elems;
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b)
      for (std::size_t c = 0; c < p; ++c) elems.push_back({a, b, c});
  return table_from_elements(elems, [p](const E& x, const E& y) {
    return E{(x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2] + x[0] * y[1]) % p};
  });
}

// Pairs (a, b) ordered row-major; index 0 = (0, 0).
inline MultiplicationTable direct_product_table(const MultiplicationTable& t1, const MultiplicationTable& t2) {
  const std::size_t k1 = t1.size(), k2 = t2.size();
  if (k1 * k2 > 50'000) throw std::invalid_argument("direct product too large for a table");
  std::vector<std::vector<std::size_t>> rows(k1 * k2, std::vector<std::size_t>(k1 * k2));
  for (std::size_t a = 0; a < k1 * k2; ++a)
    for (std::size_t b = 0; b < k1 * k2; ++b)
      rows[a][b] = t1.at(a / k2, b / k2) * k2 + t2.at(a % k2, b % k2);
  return MultiplicationTable(rows);
}

inline std::size_t factorial(std::size_t k) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

// S_k with elements in lexicographic image order (identity first).
inline MultiplicationTable symmetric_table(std::size_t k) {
  if (k < 1 || k > 7) throw std::invalid_argument("symmetric(k) needs 1 <= k <= 7");
  std::vector<Point> img(k);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<Permutation> elems;
  do {
    elems.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return table_from_elements(elems, [](const Permutation& a, const Permutation& b) { return a * b; });
}

// Family specification: factors joined by '*' or 'x', each "name:param" with
// an optional "^count" power, e.g. "dihedral:4*cyclic:2^6" or "heisenberg:3".
inline MultiplicationTable parse_family(const std::string& spec) {
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  };
  auto to_size = [&](const std::string& s, const std::string& what) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad " + what + " '" + s + "' in family '" + spec + "'");
    return std::stoul(s);
  };

  std::vector<std::string> factors;
  std::string cur;
  for (char ch : spec) {
    if (ch == '*' || ch == 'x') {
      factors.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  factors.push_back(trim(cur));

  std::optional<MultiplicationTable> result;
  for (const std::string& f : factors) {
    if (f.empty()) throw std::invalid_argument("empty factor in family '" + spec + "'");
    std::string body = f;
    std::size_t count = 1;
    if (auto caret = body.find('^'); caret != std::string::npos) {
      count = to_size(trim(body.substr(caret + 1)), "power");
      body = trim(body.substr(0, caret));
      if (count == 0) throw std::invalid_argument("power must be positive in '" + f + "'");
    }
    const auto colon = body.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("factor '" + f + "' must look like name:param");
    const std::string name = trim(body.substr(0, colon));
    const std::size_t param = to_size(trim(body.substr(colon + 1)), "parameter");
    MultiplicationTable t;
    if (name == "cyclic") t = cyclic_table(param);
    else if (name == "dihedral") t = dihedral_table(param);
    else if (name == "heisenberg") t = heisenberg_table(param);
    else if (name == "symmetric") t = symmetric_table(param);
    else throw std::invalid_argument("unknown family '" + name + "'");
    for (std::size_t i = 0; i < count; ++i) result = result ? direct_product_table(*result, t) : t;
  }
  return *result;
}

}  // namespace fanoquot
