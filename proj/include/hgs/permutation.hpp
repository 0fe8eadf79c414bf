#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hgs/error.hpp"

namespace hgs {

using point_t = std::uint16_t;

inline constexpr std::size_t kDefaultDegreeCap = 512;
inline constexpr std::size_t kMaxDegree = 0xFFFF;

inline void check_degree(std::size_t degree, std::size_t cap = kDefaultDegreeCap) {
  if (degree == 0) throw Error(ErrorCode::bad_params, "degree must be positive");
  if (degree > cap || degree > kMaxDegree)
    throw Error(ErrorCode::degree_cap,
                "degree " + std::to_string(degree) + " exceeds cap " + std::to_string(cap));
}

/// A bijection of {0, ..., degree-1}, stored as its image list. Immutable value.
class Permutation {
 public:
  explicit Permutation(std::vector<point_t> images) : images_(std::move(images)) {
    if (images_.empty()) throw Error(ErrorCode::invalid_permutation, "empty image list");
    std::vector<bool> seen(images_.size(), false);
    for (point_t x : images_) {
      if (x >= images_.size() || seen[x])
        throw Error(ErrorCode::invalid_permutation, "image list is not a bijection");
      seen[x] = true;
    }
  }

  explicit Permutation(std::span<const point_t> images)
      : Permutation(std::vector<point_t>(images.begin(), images.end())) {}

  static Permutation identity(std::size_t degree) {
    if (degree == 0 || degree > kMaxDegree)
      throw Error(ErrorCode::invalid_permutation, "bad degree");
    std::vector<point_t> v(degree);
    std::iota(v.begin(), v.end(), point_t{0});
    return Permutation(std::move(v), Unchecked{});
  }

  /// Builds from a list of disjoint cycles on 0-based points; omitted points are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<point_t>>& cycles) {
    std::vector<point_t> v = identity(degree).images_;
    std::vector<bool> used(degree, false);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        point_t x = c[i];
        if (x >= degree || used[x])
          throw Error(ErrorCode::invalid_permutation, "cycles are not disjoint or out of range");
        used[x] = true;
        v[x] = c[(i + 1) % c.size()];
      }
    }
    return Permutation(std::move(v), Unchecked{});
  }

  std::size_t degree() const noexcept { return images_.size(); }
  point_t operator()(point_t x) const { return images_[x]; }
  std::span<const point_t> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<point_t> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);

  std::vector<point_t> images_;
};

/// p∘q: x ↦ p(q(x)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw Error(ErrorCode::degree_mismatch, std::to_string(p.degree()) + " vs " +
                                                std::to_string(q.degree()));
  std::vector<point_t> v(p.degree());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = p.images_[q.images_[x]];
  return Permutation(std::move(v), Permutation::Unchecked{});
}

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

inline Permutation inverse(const Permutation& p) {
  std::vector<point_t> v(p.degree());
  for (std::size_t x = 0; x < v.size(); ++x) v[p.images_[x]] = static_cast<point_t>(x);
  return Permutation(std::move(v), Permutation::Unchecked{});
}

inline Permutation power(const Permutation& p, std::int64_t k) {
  Permutation base = k < 0 ? inverse(p) : p;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Permutation result = Permutation::identity(p.degree());
  while (e > 0) {
    if (e & 1u) result = compose(result, base);
    base = compose(base, base);
    e >>= 1u;
  }
  return result;
}

/// Cycle lengths in descending order; fixed points appear as 1-cycles.
inline std::vector<std::size_t> cycle_type(const Permutation& p) {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t x = start; !seen[x]; x = p(static_cast<point_t>(x))) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

/// Order of a permutation given as a raw image array: lcm of its cycle lengths.
inline std::uint64_t element_order(std::span<const point_t> images) {
  std::uint64_t order = 1;
  std::vector<bool> seen(images.size(), false);
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (std::size_t x = start; !seen[x]; x = images[x]) {
      seen[x] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

inline std::uint64_t element_order(const Permutation& p) { return element_order(p.images()); }

/// 1-based cycle notation, e.g. "(1,2,3)(4,5)"; the identity prints as "()".
inline std::string to_cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (seen[start] || p(static_cast<point_t>(start)) == start) {
      seen[start] = true;
      continue;
    }
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ',';
      out += std::to_string(x + 1);
      first = false;
      x = p(static_cast<point_t>(x));
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace detail {

/// Parses 1-based cycle notation into 0-based cycles; returns the largest point seen.
inline std::vector<std::vector<point_t>> parse_cycle_list(std::string_view text,
                                                          std::size_t& max_point) {
  std::vector<std::vector<point_t>> cycles;
  max_point = 0;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::parse_error,
                why + " at column " + std::to_string(i + 1) + " in \"" + std::string(text) + "\"");
  };
  skip_ws();
  if (i == text.size()) fail("empty permutation");
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<point_t> cycle;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;
      cycles.push_back({});
      continue;
    }
    while (true) {
      skip_ws();
      std::size_t start = i;
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > kMaxDegree) fail("point out of range");
        ++i;
      }
      if (i == start) fail("expected a point");
      if (value == 0) fail("points are 1-based");
      cycle.push_back(static_cast<point_t>(value - 1));
      max_point = std::max<std::size_t>(max_point, value);
      skip_ws();
      if (i == text.size()) fail("unterminated cycle");
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      fail("unexpected character");
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace detail

/// Parses 1-based cycle notation on `degree` points. Repeated points across cycles are
/// rejected; cycles may not be composed implicitly.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::size_t max_point = 0;
  auto cycles = detail::parse_cycle_list(text, max_point);
  if (max_point > degree)
    throw Error(ErrorCode::parse_error, "point " + std::to_string(max_point) +
                                            " exceeds degree " + std::to_string(degree));
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const Error&) {
    throw Error(ErrorCode::parse_error, std::string("bad cycles \"") + std::string(text) + "\"");
  }
}

/// As above, with the degree taken as the largest point mentioned (at least 1).
inline Permutation parse_cycles(std::string_view text) {
  std::size_t max_point = 0;
  auto cycles = detail::parse_cycle_list(text, max_point);
  return parse_cycles(text, std::max<std::size_t>(max_point, 1));
}

inline std::uint64_t hash_points(std::span<const point_t> v) noexcept {
  std::uint64_t h = 0x9E3779B97F4A7C15ull ^ v.size();
  for (point_t x : v) {
    h ^= x;
    h *= 0xFF51AFD7ED558CCDull;
    h ^= h >> 29;
  }
  return h;
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    return static_cast<std::size_t>(hash_points(p.images()));
  }
};

}  // namespace hgs
