#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hgs/catalog.hpp"
#include "hgs/error.hpp"
#include "hgs/perm_group.hpp"

namespace hgs {

inline constexpr std::size_t kOracleDegreeCap = 9;
inline constexpr std::size_t kOracleExtendedCap = 25;

struct RegularSubgroup {
  std::vector<Permutation> elements;  // sorted, identity first
  std::vector<Permutation> generators;
  std::string type;
};

/// Isomorphism-type tag of a regular group: for order p^2 "C<p^2>" or "C<p>xC<p>", for
/// odd p^3 the catalog name, otherwise "order-<n>/exp-<e>/ab|nonab".
inline std::string regular_type_tag(const std::vector<Permutation>& elements) {
  std::size_t n = elements.size();
  std::uint64_t exp = 1;
  for (const auto& e : elements) exp = std::lcm(exp, element_order(e));
  bool abelian = true;
  for (std::size_t i = 0; i < n && abelian; ++i)
    for (std::size_t j = i + 1; j < n && abelian; ++j)
      abelian = compose(elements[i], elements[j]) == compose(elements[j], elements[i]);
  auto pp = nt::prime_power(n);
  if (pp && pp->second == 1) return "C" + std::to_string(n);
  if (pp && pp->second == 2)
    return exp == n ? "C" + std::to_string(n)
                    : "C" + std::to_string(pp->first) + "xC" + std::to_string(pp->first);
  if (pp && pp->second == 3 && pp->first > 2)
    return type_name(detail::classify(pp->first, abelian, exp), pp->first);
  return "order-" + std::to_string(n) + "/exp-" + std::to_string(exp) +
         (abelian ? "/ab" : "/nonab");
}

namespace detail {

/// Fixed-point-free permutations of {0..n-1} all of whose cycles have the same length,
/// bucketed by the image of 0.
inline std::vector<std::vector<Permutation>> uniform_fpf_by_image(std::size_t n) {
  std::vector<std::vector<Permutation>> out(n);
  std::vector<point_t> v(n);
  std::iota(v.begin(), v.end(), point_t{0});
  do {
    if (v[0] == 0) continue;
    std::vector<bool> seen(n, false);
    std::size_t len = 0;
    bool uniform = true;
    for (std::size_t s = 0; s < n && uniform; ++s) {
      if (seen[s]) continue;
      std::size_t l = 0;
      for (std::size_t x = s; !seen[x]; x = v[x]) {
        seen[x] = true;
        ++l;
      }
      if (len == 0) len = l;
      uniform = l == len && l > 1;
    }
    if (uniform) out[v[0]].push_back(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// Closure of `gens`, abandoned once it exceeds `limit` elements or contains a nonidentity
/// element with a fixed point.
inline std::optional<std::vector<Permutation>> semiregular_closure(
    const std::vector<Permutation>& gens, std::size_t limit) {
  std::set<Permutation> seen;
  std::vector<Permutation> queue{Permutation::identity(gens.front().degree())};
  seen.insert(queue.front());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : gens) {
      Permutation y = compose(queue[i], g);
      if (seen.count(y)) continue;
      for (std::size_t x = 0; x < y.degree(); ++x)
        if (y(static_cast<point_t>(x)) == x) return std::nullopt;
      if (seen.size() >= limit) return std::nullopt;
      seen.insert(y);
      queue.push_back(y);
    }
  }
  return std::vector<Permutation>(seen.begin(), seen.end());
}

inline void regular_search(const std::vector<std::vector<Permutation>>& seeds,
                           std::vector<Permutation>& gens, const std::vector<Permutation>& current,
                           std::set<std::vector<Permutation>>& found) {
  std::size_t n = seeds.size();
  if (current.size() == n) {
    found.insert(current);
    return;
  }
  std::vector<bool> covered(n, false);
  for (const auto& e : current) covered[e(0)] = true;
  std::size_t target = 0;
  while (covered[target]) ++target;
  for (const auto& x : seeds[target]) {
    gens.push_back(x);
    auto closure = semiregular_closure(gens, n);
    if (closure) regular_search(seeds, gens, *closure, found);
    gens.pop_back();
  }
}

}  // namespace detail

/// All regular subgroups of Sym(n), each with its type tag. Cached per degree.
inline const std::vector<RegularSubgroup>& regular_subgroups_of_symmetric(
    std::size_t n, std::size_t degree_cap = kOracleDegreeCap) {
  if (n > degree_cap || n > kOracleExtendedCap)
    throw Error(ErrorCode::degree_cap, "oracle degree " + std::to_string(n) + " above cap " +
                                           std::to_string(std::min(degree_cap, kOracleExtendedCap)));
  if (n == 0) throw Error(ErrorCode::bad_params, "degree must be positive");
  if (n > kOracleDegreeCap)
    std::fprintf(stderr, "warning: regular-subgroup enumeration at degree %zu may take very long\n", n);
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<std::vector<RegularSubgroup>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (slot) return *slot;
  auto out = std::make_unique<std::vector<RegularSubgroup>>();
  if (n == 1) {
    out->push_back({{Permutation::identity(1)}, {Permutation::identity(1)}, "C1"});
  } else {
    auto seeds = detail::uniform_fpf_by_image(n);
    std::set<std::vector<Permutation>> found;
    std::vector<Permutation> gens;
    detail::regular_search(seeds, gens, {Permutation::identity(n)}, found);
    for (const auto& els : found) {
      RegularSubgroup r;
      r.elements = els;
      // generators: greedily add elements until closure is everything
      std::set<Permutation> reached{els.front()};
      for (const auto& e : els) {
        if (reached.count(e)) continue;
        r.generators.push_back(e);
        auto cl = detail::semiregular_closure(r.generators, n);
        reached = std::set<Permutation>(cl->begin(), cl->end());
      }
      r.type = regular_type_tag(els);
      out->push_back(std::move(r));
    }
  }
  slot = std::move(out);
  return *slot;
}

/// Regular subgroups of Sym(degree) normalized by every generator of G.
inline std::vector<RegularSubgroup> regular_subgroups_normalized_by(
    const PointedGroup& g, std::size_t degree_cap = kOracleDegreeCap) {
  const auto& all = regular_subgroups_of_symmetric(g.degree(), degree_cap);
  std::vector<RegularSubgroup> out;
  for (const auto& r : all) {
    bool ok = true;
    for (const auto& h : g.group().generators()) {
      Permutation hi = inverse(h);
      for (const auto& s : r.generators) {
        if (!std::binary_search(r.elements.begin(), r.elements.end(), compose(h, compose(s, hi)))) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) out.push_back(r);
  }
  return out;
}

/// Counts by type tag; each tag of the given degree appears, with zero if absent.
inline std::map<std::string, std::uint64_t> oracle_row(const PointedGroup& g,
                                                       std::size_t degree_cap = kOracleDegreeCap) {
  std::map<std::string, std::uint64_t> row;
  for (const auto& r : regular_subgroups_of_symmetric(g.degree(), degree_cap)) row[r.type] += 0;
  for (const auto& r : regular_subgroups_normalized_by(g, degree_cap)) ++row[r.type];
  return row;
}

}  // namespace hgs
