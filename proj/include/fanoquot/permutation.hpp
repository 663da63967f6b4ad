#pragma once

// Permutations of {1..n}: arithmetic, cycle structure and cycle notation.
//
// Points are 1-based at every external boundary (cycle notation, cycle lists,
// operator()). Internally images are stored 0-based.

#include "rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fanoquot {

using Point = std::uint32_t;
using Cycle = std::vector<Point>;

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree) {
    if (degree == 0) throw std::invalid_argument("permutation degree must be positive");
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    return Permutation(std::move(images), Unchecked{});
  }

  // images[i] is the image of point i, 0-based.
  static Permutation from_images(std::vector<Point> images) {
    if (images.empty()) throw std::invalid_argument("permutation degree must be positive");
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
      const Point v = images[i];
      if (v >= images.size())
        throw std::invalid_argument("image " + std::to_string(v + 1) + " of point " +
                                    std::to_string(i + 1) + " is out of range");
      if (seen[v])
        throw std::invalid_argument("image " + std::to_string(v + 1) + " appears twice");
      seen[v] = true;
    }
    return Permutation(std::move(images), Unchecked{});
  }

  // Same as from_images, but with 1-based images.
  static Permutation from_one_based(std::span<const Point> images) {
    std::vector<Point> zero_based(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i] == 0) throw std::invalid_argument("points are 1-based");
      zero_based[i] = images[i] - 1;
    }
    return from_images(std::move(zero_based));
  }

  // Cycles use 1-based points and must be pairwise disjoint.
  static Permutation from_cycles(std::size_t degree, std::span<const Cycle> cycles) {
    auto images = identity(degree).images_;
    std::vector<bool> used(degree, false);
    for (const Cycle& c : cycles) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        const Point a = c[k];
        if (a == 0 || a > degree)
          throw std::invalid_argument("point " + std::to_string(a) + " outside 1.." +
                                      std::to_string(degree));
        if (used[a - 1]) throw std::invalid_argument("point " + std::to_string(a) + " repeated");
        used[a - 1] = true;
        images[a - 1] = c[(k + 1) % c.size()] - 1;
      }
    }
    return Permutation(std::move(images), Unchecked{});
  }

  std::size_t degree() const noexcept { return images_.size(); }
  const std::vector<Point>& images() const noexcept { return images_; }

  // 0-based image.
  Point image(Point i) const { return images_[i]; }
  // 1-based image.
  Point operator()(Point point) const { return images_.at(point - 1) + 1; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<Point> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
    return Permutation(std::move(inv), Unchecked{});
  }

  // Same degree, with extra fixed points appended up to new_degree.
  Permutation extended(std::size_t new_degree) const {
    if (new_degree < degree()) throw std::invalid_argument("cannot shrink a permutation");
    auto images = images_;
    for (std::size_t i = degree(); i < new_degree; ++i) images.push_back(static_cast<Point>(i));
    return Permutation(std::move(images), Unchecked{});
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Lexicographic on the image sequence; identity is the least element of each degree.
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    return a.images_ <=> b.images_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

// result(i) = p(q(i))
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()));
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = p.image(q.image(static_cast<Point>(i)));
  return Permutation::from_images(std::move(images));
}

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

inline Permutation power(const Permutation& p, long long exponent) {
  Permutation base = exponent < 0 ? p.inverse() : p;
  unsigned long long e = exponent < 0 ? 0ULL - static_cast<unsigned long long>(exponent)
                                      : static_cast<unsigned long long>(exponent);
  Permutation result = Permutation::identity(p.degree());
  while (e != 0) {
    if (e & 1ULL) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

// Every point appears in exactly one cycle; fixed points are length-1 cycles.
// Each cycle starts at its smallest point and cycles are ordered by that point.
inline std::vector<Cycle> cycle_decomposition(const Permutation& p) {
  std::vector<Cycle> cycles;
  std::vector<bool> seen(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    Cycle c;
    for (Point x = start; !seen[x]; x = p.image(x)) {
      seen[x] = true;
      c.push_back(x + 1);
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

struct CycleType {
  std::size_t degree = 0;
  std::vector<std::size_t> lengths;  // descending, includes 1's

  BigInt order() const {
    BigInt m = 1;
    for (std::size_t len : lengths) m = lcm(m, BigInt(len));
    return m;
  }

  // Lengths > 1 only.
  std::vector<std::size_t> nontrivial() const {
    std::vector<std::size_t> out;
    for (std::size_t len : lengths)
      if (len > 1) out.push_back(len);
    return out;
  }

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

inline CycleType cycle_type(const Permutation& p) {
  CycleType t{p.degree(), {}};
  for (const Cycle& c : cycle_decomposition(p)) t.lengths.push_back(c.size());
  std::sort(t.lengths.begin(), t.lengths.end(), std::greater<>());
  return t;
}

inline BigInt order(const Permutation& p) { return cycle_type(p).order(); }

// Conjugate in S_n to (1 2), (1 2 3) or (1 2)(3 4); conjugacy classes of S_n are cycle types.
inline bool is_forbidden_type(const CycleType& t) {
  const auto nt = t.nontrivial();
  using L = std::vector<std::size_t>;
  return nt == L{2} || nt == L{3} || nt == L{2, 2};
}

inline bool is_forbidden_type(const Permutation& p) { return is_forbidden_type(cycle_type(p)); }

// Identity prints as "()". Fixed points are omitted.
inline std::string format_cycles(const Permutation& p) {
  std::string out;
  for (const Cycle& c : cycle_decomposition(p)) {
    if (c.size() < 2) continue;
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(c[k]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// Repeated lengths are collapsed: [3^9,1].
inline std::string format_cycle_type(const CycleType& t) {
  std::string out = "[";
  for (std::size_t k = 0; k < t.lengths.size();) {
    std::size_t run = 1;
    while (k + run < t.lengths.size() && t.lengths[k + run] == t.lengths[k]) ++run;
    if (k) out += ',';
    out += std::to_string(t.lengths[k]);
    if (run > 1) out += '^' + std::to_string(run);
    k += run;
  }
  return out + "]";
}

namespace detail {

class CycleParser {
 public:
  explicit CycleParser(std::string_view text) : text_(text) {}

  // Parsed cycles plus the largest point seen.
  std::pair<std::vector<Cycle>, Point> parse() {
    std::vector<Cycle> cycles;
    Point max_point = 0;
    skip_space();
    if (text_.substr(pos_).starts_with("id")) {
      pos_ += 2;
      skip_space();
      if (pos_ != text_.size()) fail("trailing characters after 'id'");
      return {cycles, 0};
    }
    if (pos_ == text_.size()) fail("empty permutation");
    while (pos_ < text_.size()) {
      if (text_[pos_] != '(') fail("expected '('");
      ++pos_;
      Cycle c;
      skip_space();
      while (true) {
        if (pos_ == text_.size()) fail("unterminated cycle");
        const char ch = text_[pos_];
        if (ch == ')') {
          ++pos_;
          break;
        }
        if (ch == ',') {
          ++pos_;
          skip_space();
          continue;
        }
        if (ch < '0' || ch > '9') fail(std::string("unexpected character '") + ch + "'");
        const std::size_t start = pos_;
        unsigned long long v = 0;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
          v = v * 10 + static_cast<unsigned long long>(text_[pos_] - '0');
          if (v > 0xFFFFFFFFULL) fail("point too large", start);
          ++pos_;
        }
        if (v == 0) fail("points are 1-based", start);
        positions_.push_back(start);
        c.push_back(static_cast<Point>(v));
        max_point = std::max(max_point, static_cast<Point>(v));
        skip_space();
      }
      cycles.push_back(std::move(c));
      skip_space();
    }
    return {cycles, max_point};
  }

  // Source position of the k-th point token.
  std::size_t position_of(std::size_t k) const { return positions_[k]; }

  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] static void fail(const std::string& what, std::size_t at) { throw ParseError(what, at); }

 private:
  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::size_t> positions_;
};

}  // namespace detail

// Disjoint cycle notation, e.g. "(1 2 3)(4 5)"; "()" and "id" denote the identity.
// degree = 0 means "use the largest point mentioned (at least 1)".
inline Permutation parse_cycles(std::string_view text, std::size_t degree = 0) {
  detail::CycleParser parser(text);
  auto [cycles, max_point] = parser.parse();
  if (degree == 0) degree = std::max<std::size_t>(1, max_point);
  std::vector<bool> used(degree, false);
  std::size_t token = 0;
  for (const Cycle& c : cycles) {
    for (Point a : c) {
      const std::size_t at = parser.position_of(token++);
      if (a > degree)
        throw ParseError("point " + std::to_string(a) + " outside 1.." + std::to_string(degree), at);
      if (used[a - 1]) throw ParseError("repeated point " + std::to_string(a), at);
      used[a - 1] = true;
    }
  }
  return Permutation::from_cycles(degree, cycles);
}

}  // namespace fanoquot

template <>
struct std::hash<fanoquot::Permutation> {
  std::size_t operator()(const fanoquot::Permutation& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (fanoquot::Point v : p.images()) {
      h ^= v;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};
