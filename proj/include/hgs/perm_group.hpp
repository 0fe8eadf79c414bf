#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hgs/error.hpp"
#include "hgs/number_theory.hpp"
#include "hgs/permutation.hpp"

namespace hgs {

inline constexpr std::size_t kDefaultEnumerationCap = 500'000;
inline constexpr std::size_t kDefaultSubgroupOrderCap = 20'000;

/// Set of same-degree permutations stored contiguously, with an open-addressing index.
/// Element ids are dense; after sort_lexicographic() id order is image-list order.
class FlatPermSet {
 public:
  explicit FlatPermSet(std::size_t degree) : degree_(degree) { rehash(64); }

  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return count_; }

  std::span<const point_t> operator[](std::size_t id) const noexcept {
    return {data_.data() + id * degree_, degree_};
  }

  Permutation perm(std::size_t id) const { return Permutation((*this)[id]); }

  std::optional<std::size_t> find(std::span<const point_t> images) const noexcept {
    std::size_t mask = slots_.size() - 1;
    for (std::size_t s = hash_points(images) & mask;; s = (s + 1) & mask) {
      std::uint32_t id = slots_[s];
      if (id == kEmpty) return std::nullopt;
      if (std::equal(images.begin(), images.end(), data_.begin() + id * degree_)) return id;
    }
  }

  std::optional<std::size_t> find(const Permutation& p) const noexcept { return find(p.images()); }

  bool contains(std::span<const point_t> images) const noexcept {
    return find(images).has_value();
  }

  /// Returns (id, inserted).
  std::pair<std::size_t, bool> insert(std::span<const point_t> images) {
    if (images.size() != degree_) throw Error(ErrorCode::degree_mismatch, "FlatPermSet::insert");
    if ((count_ + 1) * 2 > slots_.size()) rehash(slots_.size() * 2);
    std::size_t mask = slots_.size() - 1;
    std::size_t s = hash_points(images) & mask;
    for (;; s = (s + 1) & mask) {
      std::uint32_t id = slots_[s];
      if (id == kEmpty) break;
      if (std::equal(images.begin(), images.end(), data_.begin() + id * degree_)) return {id, false};
    }
    slots_[s] = static_cast<std::uint32_t>(count_);
    data_.insert(data_.end(), images.begin(), images.end());
    return {count_++, true};
  }

  void reserve(std::size_t n) {
    data_.reserve(n * degree_);
    std::size_t want = 64;
    while (want < 2 * n) want *= 2;
    if (want > slots_.size()) rehash(want);
  }

  void sort_lexicographic() {
    std::vector<std::uint32_t> order(count_);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      auto pa = (*this)[a];
      auto pb = (*this)[b];
      return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
    });
    std::vector<point_t> sorted;
    sorted.reserve(data_.size());
    for (std::uint32_t id : order) {
      auto p = (*this)[id];
      sorted.insert(sorted.end(), p.begin(), p.end());
    }
    data_ = std::move(sorted);
    rehash(slots_.size());
  }

  std::vector<Permutation> to_vector() const {
    std::vector<Permutation> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < count_; ++i) out.push_back(perm(i));
    return out;
  }

 private:
  static constexpr std::uint32_t kEmpty = 0xFFFFFFFFu;

  void rehash(std::size_t n_slots) {
    slots_.assign(n_slots, kEmpty);
    std::size_t mask = n_slots - 1;
    for (std::size_t id = 0; id < count_; ++id) {
      std::size_t s = hash_points((*this)[id]) & mask;
      while (slots_[s] != kEmpty) s = (s + 1) & mask;
      slots_[s] = static_cast<std::uint32_t>(id);
    }
  }

  std::size_t degree_;
  std::size_t count_ = 0;
  std::vector<point_t> data_;
  std::vector<std::uint32_t> slots_;
};

/// Breadth-first closure of the generators. Throws ORDER_CAP_EXCEEDED past `cap` elements.
/// The result is sorted lexicographically, so id 0 is the identity.
inline FlatPermSet enumerate(std::span<const Permutation> generators,
                             std::size_t cap = kDefaultEnumerationCap) {
  if (generators.empty()) throw Error(ErrorCode::bad_params, "no generators");
  std::size_t n = generators.front().degree();
  FlatPermSet set(n);
  set.insert(Permutation::identity(n).images());
  std::vector<point_t> scratch(n);
  for (std::size_t cur = 0; cur < set.size(); ++cur) {
    for (const auto& g : generators) {
      auto x = set[cur];
      for (std::size_t i = 0; i < n; ++i) scratch[i] = x[g(static_cast<point_t>(i))];
      if (set.insert(scratch).second && set.size() > cap)
        throw Error(ErrorCode::order_cap_exceeded,
                    "group closure exceeds " + std::to_string(cap) + " elements");
    }
  }
  set.sort_lexicographic();
  return set;
}

/// A permutation group given by generators; the element set is materialized on demand
/// and shared between copies.
class PermGroup {
 public:
  explicit PermGroup(std::vector<Permutation> generators)
      : generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    if (generators_.empty()) throw Error(ErrorCode::bad_params, "a group needs generators");
    degree_ = generators_.front().degree();
    for (const auto& g : generators_)
      if (g.degree() != degree_) throw Error(ErrorCode::degree_mismatch, "generator degrees differ");
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  const FlatPermSet& elements(std::size_t cap = kDefaultEnumerationCap) const {
    std::lock_guard lock(cache_->mutex);
    if (!cache_->elements) {
      cache_->elements = std::make_shared<const FlatPermSet>(enumerate(generators_, cap));
    } else if (cache_->elements->size() > cap) {
      throw Error(ErrorCode::order_cap_exceeded,
                  "group order " + std::to_string(cache_->elements->size()) + " exceeds " +
                      std::to_string(cap));
    }
    return *cache_->elements;
  }

  std::uint64_t order(std::size_t cap = kDefaultEnumerationCap) const { return elements(cap).size(); }

  bool contains(const Permutation& p, std::size_t cap = kDefaultEnumerationCap) const {
    return p.degree() == degree_ && elements(cap).contains(p.images());
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::shared_ptr<const FlatPermSet> elements;
  };

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

inline std::vector<point_t> orbit(const PermGroup& group, point_t point) {
  if (point >= group.degree()) throw Error(ErrorCode::bad_params, "point out of range");
  std::vector<bool> seen(group.degree(), false);
  std::vector<point_t> out{point};
  seen[point] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : group.generators()) {
      point_t y = g(out[i]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_transitive(const PermGroup& group) {
  return orbit(group, 0).size() == group.degree();
}

/// Schreier generators for the stabilizer of `point`, identity and duplicates removed.
inline std::vector<Permutation> stabilizer_generators(const PermGroup& group, point_t point) {
  std::size_t n = group.degree();
  std::vector<std::optional<Permutation>> transversal(n);
  transversal[point] = Permutation::identity(n);
  std::vector<point_t> queue{point};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : group.generators()) {
      point_t y = g(queue[i]);
      if (!transversal[y]) {
        transversal[y] = compose(g, *transversal[queue[i]]);
        queue.push_back(y);
      }
    }
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> out;
  for (point_t x : queue)
    for (const auto& g : group.generators()) {
      Permutation s = compose(inverse(*transversal[g(x)]), compose(g, *transversal[x]));
      if (!s.is_identity() && seen.insert(s).second) out.push_back(std::move(s));
    }
  std::sort(out.begin(), out.end());
  if (out.empty()) out.push_back(Permutation::identity(n));
  return out;
}

/// The Galois datum (G, G'): a transitive group with a distinguished base point whose
/// stabilizer plays the role of G'.
class PointedGroup {
 public:
  PointedGroup(PermGroup group, point_t base_point, std::string name = {})
      : group_(std::move(group)), base_point_(base_point), name_(std::move(name)) {
    if (base_point_ >= group_.degree()) throw Error(ErrorCode::bad_params, "base point out of range");
    if (!is_transitive(group_))
      throw Error(ErrorCode::not_transitive, name_.empty() ? "group" : name_);
  }

  const PermGroup& group() const noexcept { return group_; }
  point_t base_point() const noexcept { return base_point_; }
  std::size_t degree() const noexcept { return group_.degree(); }
  const std::string& name() const noexcept { return name_; }

 private:
  PermGroup group_;
  point_t base_point_;
  std::string name_;
};

inline std::vector<Permutation> stabilizer_generators(const PointedGroup& pg) {
  return stabilizer_generators(pg.group(), pg.base_point());
}

/// Transitive with trivial point stabilizer; no enumeration needed.
inline bool is_regular(const PermGroup& group) {
  if (!is_transitive(group)) return false;
  auto stab = stabilizer_generators(group, 0);
  return stab.size() == 1 && stab.front().is_identity();
}

inline bool is_regular(const PointedGroup& pg) { return is_regular(pg.group()); }

using OrderCensus = std::map<std::uint64_t, std::uint64_t>;

inline OrderCensus order_census(const PermGroup& group, std::size_t cap = kDefaultEnumerationCap) {
  const auto& el = group.elements(cap);
  OrderCensus census;
  for (std::size_t i = 0; i < el.size(); ++i) ++census[element_order(el[i])];
  return census;
}

inline std::uint64_t exponent(const PermGroup& group, std::size_t cap = kDefaultEnumerationCap) {
  std::uint64_t e = 1;
  for (const auto& [order, count] : order_census(group, cap)) e = std::lcm(e, order);
  return e;
}

inline bool is_abelian(const PermGroup& group) {
  const auto& gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
  return true;
}

/// True iff h s h^-1 lies in `subgroup` for every generator s of it.
inline bool normalizes(const Permutation& h, const PermGroup& subgroup,
                       std::size_t cap = kDefaultEnumerationCap) {
  if (h.degree() != subgroup.degree()) throw Error(ErrorCode::degree_mismatch, "normalizes");
  Permutation hinv = inverse(h);
  const auto& el = subgroup.elements(cap);
  for (const auto& s : subgroup.generators())
    if (!el.contains(compose(h, compose(s, hinv)).images())) return false;
  return true;
}

struct ConjugacyClass {
  Permutation representative;
  std::uint64_t size;
};

/// Classes in order of their lexicographically least member, which is the representative.
inline std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& group,
                                                     std::size_t cap = kDefaultEnumerationCap) {
  const auto& el = group.elements(cap);
  std::size_t n = group.degree();
  std::vector<Permutation> gens_inv;
  for (const auto& g : group.generators()) gens_inv.push_back(inverse(g));
  std::vector<bool> seen(el.size(), false);
  std::vector<ConjugacyClass> out;
  std::vector<point_t> scratch(n);
  for (std::size_t start = 0; start < el.size(); ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    std::vector<std::size_t> queue{start};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (std::size_t k = 0; k < gens_inv.size(); ++k) {
        auto x = el[queue[i]];
        const auto& g = group.generators()[k];
        for (std::size_t pt = 0; pt < n; ++pt)
          scratch[pt] = g(x[gens_inv[k](static_cast<point_t>(pt))]);
        std::size_t id = *el.find(scratch);
        if (!seen[id]) {
          seen[id] = true;
          queue.push_back(id);
        }
      }
    }
    out.push_back({el.perm(start), queue.size()});
  }
  return out;
}

struct Subgroup {
  std::vector<Permutation> generators;
  std::vector<std::uint32_t> members;  // ids into the parent group's element set, ascending

  std::size_t order() const noexcept { return members.size(); }
};

namespace detail {

/// Multiplication on the ids of an enumerated group, tabulated when small.
class IdArithmetic {
 public:
  explicit IdArithmetic(const FlatPermSet& el) : el_(el), scratch_(el.degree()) {
    n_ = el.size();
    if (n_ <= 2048) {
      table_.resize(n_ * n_);
      for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) table_[a * n_ + b] = compute(a, b);
    }
    inverse_.resize(n_);
    for (std::size_t a = 0; a < n_; ++a) {
      auto x = el_[a];
      for (std::size_t i = 0; i < x.size(); ++i) scratch_[x[i]] = static_cast<point_t>(i);
      inverse_[a] = static_cast<std::uint32_t>(*el_.find(scratch_));
    }
  }

  std::uint32_t mul(std::size_t a, std::size_t b) {
    return table_.empty() ? compute(a, b) : table_[a * n_ + b];
  }
  std::uint32_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t size() const { return n_; }

 private:
  std::uint32_t compute(std::size_t a, std::size_t b) {
    auto x = el_[a];
    auto y = el_[b];
    for (std::size_t i = 0; i < y.size(); ++i) scratch_[i] = x[y[i]];
    return static_cast<std::uint32_t>(*el_.find(scratch_));
  }

  const FlatPermSet& el_;
  std::vector<point_t> scratch_;
  std::size_t n_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
};


}  // namespace detail

/// Every subgroup exactly once, by the cyclic extension method: each subgroup K != 1 arises
/// as H<x> with H a subgroup, x normalizing H and x^p in H for a prime p. Exhaustive for
/// solvable groups.
inline std::vector<Subgroup> all_subgroups(const PermGroup& group,
                                           std::size_t order_cap = kDefaultSubgroupOrderCap) {
  const auto& el = group.elements(std::max(order_cap, std::size_t{1}));
  if (el.size() > order_cap)
    throw Error(ErrorCode::order_cap_exceeded, "subgroup lattice needs |G| <= " +
                                                   std::to_string(order_cap));
  std::size_t n = el.size();
  detail::IdArithmetic ar(el);
  std::size_t words = (n + 63) / 64;

  struct Node {
    std::vector<std::uint32_t> members;
    std::vector<std::uint32_t> gens;
    std::vector<std::uint64_t> bits;
  };
  auto has = [](const std::vector<std::uint64_t>& bits, std::size_t i) {
    return (bits[i / 64] >> (i % 64)) & 1u;
  };

  std::vector<Node> found;
  std::map<std::vector<std::uint64_t>, std::size_t> index;
  Node trivial{{0}, {}, std::vector<std::uint64_t>(words, 0)};
  trivial.bits[0] |= 1u;
  index.emplace(trivial.bits, 0);
  found.push_back(std::move(trivial));

  std::vector<std::size_t> layer{0};
  while (!layer.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t hi : layer) {
      // `covered` collects elements of extensions already produced from this H: any x in
      // such an extension K = H<y> of prime index generates K over H again.
      std::vector<std::uint64_t> covered = found[hi].bits;
      for (std::size_t x = 0; x < n; ++x) {
        if (has(covered, x)) continue;
        const Node& h = found[hi];
        bool normal = true;
        std::uint32_t xi = ar.inv(x);
        for (std::uint32_t g : h.gens)
          if (!has(h.bits, ar.mul(ar.mul(x, g), xi))) {
            normal = false;
            break;
          }
        if (!normal) continue;
        std::size_t k = 1;
        std::uint32_t pw = static_cast<std::uint32_t>(x);
        while (!has(h.bits, pw)) {
          pw = ar.mul(pw, x);
          ++k;
        }
        if (!nt::is_prime(k)) continue;
        Node ext;
        ext.bits = h.bits;
        ext.members = h.members;
        std::uint32_t xk = static_cast<std::uint32_t>(x);
        for (std::size_t step = 1; step < k; ++step) {
          for (std::uint32_t m : h.members) {
            std::uint32_t y = ar.mul(m, xk);
            ext.bits[y / 64] |= std::uint64_t{1} << (y % 64);
            ext.members.push_back(y);
          }
          xk = ar.mul(xk, x);
        }
        for (std::size_t w = 0; w < words; ++w) covered[w] |= ext.bits[w];
        if (index.count(ext.bits)) continue;
        ext.gens = h.gens;
        ext.gens.push_back(static_cast<std::uint32_t>(x));
        std::sort(ext.members.begin(), ext.members.end());
        index.emplace(ext.bits, found.size());
        next.push_back(found.size());
        found.push_back(std::move(ext));
      }
    }
    layer = std::move(next);
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& node : found) {
    Subgroup s;
    for (std::uint32_t g : node.gens) s.generators.push_back(el.perm(g));
    if (s.generators.empty()) s.generators.push_back(el.perm(0));
    s.members = std::move(node.members);
    out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Subgroup& a, const Subgroup& b) { return a.order() < b.order(); });
  return out;
}

}  // namespace hgs
