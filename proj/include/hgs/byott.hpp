#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "hgs/catalog.hpp"
#include "hgs/error.hpp"
#include "hgs/holomorph.hpp"
#include "hgs/labeled_group.hpp"
#include "hgs/perm_group.hpp"

namespace hgs {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000'000ull;

/// N together with Aut(N) in the flat form the embedding search needs. An element of
/// Hol(N) is a pair (z, a) acting as y ↦ z · α_a(y).
class HolomorphTarget {
 public:
  explicit HolomorphTarget(LabeledGroup n)
      : n_(std::move(n)), aut_(automorphism_group(n_)) {
    std::size_t deg = n_.order();
    const auto& el = aut_.elements();
    table_.resize(el.size() * deg);
    for (std::size_t a = 0; a < el.size(); ++a) {
      auto img = el[a];
      std::copy(img.begin(), img.end(), table_.begin() + static_cast<std::ptrdiff_t>(a * deg));
    }
    inverse_.resize(el.size());
    std::vector<point_t> scratch(deg);
    for (std::size_t a = 0; a < el.size(); ++a) {
      auto img = el[a];
      for (std::size_t y = 0; y < deg; ++y) scratch[img[y]] = static_cast<point_t>(y);
      inverse_[a] = static_cast<std::uint32_t>(*el.find(scratch));
    }
  }

  const LabeledGroup& group() const noexcept { return n_; }
  const AutomorphismGroup& automorphisms() const noexcept { return aut_; }
  std::size_t degree() const noexcept { return n_.order(); }
  std::uint64_t aut_order() const noexcept { return aut_.order(); }
  std::uint64_t hol_order() const noexcept { return aut_.order() * n_.order(); }
  const point_t* aut_row(std::size_t a) const noexcept { return table_.data() + a * degree(); }

  /// Index of s α_a s^-1.
  std::uint32_t conjugate(std::uint32_t s, std::uint32_t a, std::vector<point_t>& scratch) const {
    const point_t* sv = aut_row(s);
    const point_t* av = aut_row(a);
    const point_t* si = aut_row(inverse_[s]);
    for (std::size_t y = 0; y < degree(); ++y) scratch[y] = sv[av[si[y]]];
    return static_cast<std::uint32_t>(*aut_.elements().find(scratch));
  }

  bool commutes(std::uint32_t s, std::uint32_t a) const noexcept {
    const point_t* sv = aut_row(s);
    const point_t* av = aut_row(a);
    for (std::size_t y = 0; y < degree(); ++y)
      if (sv[av[y]] != av[sv[y]]) return false;
    return true;
  }

 private:
  LabeledGroup n_;
  AutomorphismGroup aut_;
  std::vector<point_t> table_;
  std::vector<std::uint32_t> inverse_;
};

struct EmbeddingOptions {
  bool use_symmetry = true;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::function<void(std::uint64_t nodes)> progress;  // called every 2^24 nodes
};

struct EmbeddingStats {
  std::uint64_t nodes = 0;
  std::size_t levels = 0;
};

namespace detail {

struct SearchLevel {
  std::vector<point_t> action;  // λ(g) on the points of G/G'
  bool pinned = false;
  point_t pin = 0;  // a point of the previous orbit mapped into it, when pinned
};

/// Picks elements of G one at a time so the orbit of the base point grows as fast as
/// possible, preferring elements that map a known point to a known point.
inline std::vector<SearchLevel> plan_levels(const PointedGroup& g) {
  const auto& group = g.group();
  const auto& el = group.elements();
  std::size_t deg = g.degree();
  std::vector<Permutation> pool;
  if (el.size() <= 1000) {
    pool = el.to_vector();
  } else {
    pool = group.generators();
  }
  std::vector<Permutation> chosen;
  std::vector<SearchLevel> levels;
  std::vector<bool> in_orbit(deg, false);
  in_orbit[g.base_point()] = true;
  std::size_t k_order = 1;
  std::optional<FlatPermSet> k_set;
  auto orbit_of = [&](const std::vector<Permutation>& gens) {
    std::vector<bool> seen(deg, false);
    std::vector<point_t> queue{g.base_point()};
    seen[g.base_point()] = true;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& s : gens) {
        point_t y = s(queue[i]);
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    return seen;
  };
  while (k_order < el.size()) {
    std::size_t orbit_size = static_cast<std::size_t>(std::count(in_orbit.begin(), in_orbit.end(), true));
    std::optional<std::size_t> best;
    std::array<std::size_t, 4> best_score{};
    std::vector<bool> best_orbit;
    std::size_t best_order = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const auto& cand = pool[i];
      if (cand.is_identity()) continue;
      if (k_set && k_set->contains(cand.images())) continue;
      auto trial = chosen;
      trial.push_back(cand);
      auto orb = orbit_of(trial);
      std::size_t new_size = static_cast<std::size_t>(std::count(orb.begin(), orb.end(), true));
      bool pinned = false;
      for (std::size_t x = 0; x < deg && !pinned; ++x)
        pinned = in_orbit[x] && in_orbit[cand(static_cast<point_t>(x))];
      std::size_t order = enumerate(trial, el.size()).size();
      std::array<std::size_t, 4> score{new_size > orbit_size ? 1u : 0u, pinned ? 1u : 0u, new_size,
                                       order};
      if (!best || score > best_score) {
        best = i;
        best_score = score;
        best_orbit = std::move(orb);
        best_order = order;
      }
    }
    if (!best) throw Error(ErrorCode::search_exhausted, "generator planning failed");
    const auto& g_best = pool[*best];
    SearchLevel lv;
    lv.action.assign(g_best.images().begin(), g_best.images().end());
    for (std::size_t x = 0; x < deg; ++x)
      if (in_orbit[x] && in_orbit[g_best(static_cast<point_t>(x))]) {
        lv.pinned = true;
        lv.pin = static_cast<point_t>(x);
        break;
      }
    levels.push_back(std::move(lv));
    chosen.push_back(g_best);
    in_orbit = std::move(best_orbit);
    k_order = best_order;
    k_set = enumerate(chosen, el.size());
  }
  return levels;
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(const PointedGroup& g, const HolomorphTarget& t, const EmbeddingOptions& opt)
      : t_(t), n_(t.group()), opt_(opt), deg_(g.degree()), base_(g.base_point()) {
    levels_ = plan_levels(g);
    f_.assign(deg_, kUnset);
    finv_.assign(deg_, kUnset);
    chosen_.resize(levels_.size());
    scratch_.resize(deg_);
  }

  std::uint64_t run() {
    f_[base_] = 0;
    finv_[0] = base_;
    stack_ = {base_};
    std::vector<std::uint32_t> all(t_.aut_order());
    for (std::uint32_t a = 0; a < all.size(); ++a) all[a] = a;
    recurse(0, 1, all);
    return total_;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  std::size_t level_count() const noexcept { return levels_.size(); }

 private:
  static constexpr point_t kUnset = 0xFFFF;

  struct Choice {
    label_t z = 0;
    std::uint32_t a = 0;
  };

  label_t apply(const Choice& c, label_t v) const noexcept {
    return n_.mul(c.z, static_cast<label_t>(t_.aut_row(c.a)[v]));
  }

  bool assign(point_t y, label_t val) {
    if (f_[y] != kUnset) return f_[y] == val;
    if (finv_[val] != kUnset) return false;
    f_[y] = val;
    finv_[val] = y;
    stack_.push_back(y);
    return true;
  }

  void undo(std::size_t mark) {
    while (stack_.size() > mark) {
      point_t y = stack_.back();
      stack_.pop_back();
      finv_[f_[y]] = kUnset;
      f_[y] = kUnset;
    }
  }

  /// Sets the image of level `lv` and closes f under every chosen image; false on conflict.
  bool attempt(std::size_t lv, Choice c) {
    if (++nodes_ > opt_.node_budget)
      throw Error(ErrorCode::infeasible,
                  "node budget " + std::to_string(opt_.node_budget) + " exhausted");
    if (opt_.progress && (nodes_ & ((1u << 24) - 1)) == 0) opt_.progress(nodes_);
    chosen_[lv] = c;
    std::size_t mark = stack_.size();
    const auto& act = levels_[lv].action;
    for (std::size_t i = 0; i < mark; ++i) {
      point_t x = stack_[i];
      if (!assign(act[x], apply(c, static_cast<label_t>(f_[x])))) {
        undo(mark);
        return false;
      }
    }
    for (std::size_t i = mark; i < stack_.size(); ++i) {
      point_t x = stack_[i];
      for (std::size_t j = 0; j <= lv; ++j) {
        if (!assign(levels_[j].action[x], apply(chosen_[j], static_cast<label_t>(f_[x])))) {
          undo(mark);
          return false;
        }
      }
    }
    return true;
  }

  template <class Fn>
  void for_each_candidate(std::size_t lv, Fn&& fn) {
    const auto& level = levels_[lv];
    auto aut_count = static_cast<std::uint32_t>(t_.aut_order());
    if (level.pinned) {
      auto u = static_cast<label_t>(f_[level.pin]);
      auto z = static_cast<label_t>(f_[level.action[level.pin]]);
      for (std::uint32_t a = 0; a < aut_count; ++a) {
        label_t zc = n_.mul(z, n_.inv(static_cast<label_t>(t_.aut_row(a)[u])));
        fn(Choice{zc, a});
      }
    } else {
      for (std::size_t z = 0; z < deg_; ++z) {
        if (finv_[z] != kUnset) continue;
        for (std::uint32_t a = 0; a < aut_count; ++a) fn(Choice{static_cast<label_t>(z), a});
      }
    }
  }

  Choice conjugate(std::uint32_t s, Choice c) {
    return Choice{static_cast<label_t>(t_.aut_row(s)[c.z]), t_.conjugate(s, c.a, scratch_)};
  }

  static std::uint64_t key(Choice c) { return (std::uint64_t{c.a} << 16) | c.z; }

  void recurse(std::size_t lv, std::uint64_t weight, const std::vector<std::uint32_t>& sym) {
    if (lv == levels_.size()) {
      if (stack_.size() != deg_) throw Error(ErrorCode::search_exhausted, "placement incomplete");
      total_ += weight;
      return;
    }
    if (!opt_.use_symmetry || sym.size() <= 1) {
      for_each_candidate(lv, [&](Choice c) {
        std::size_t mark = stack_.size();
        if (attempt(lv, c)) {
          recurse(lv + 1, weight, sym);
          undo(mark);
        }
      });
      return;
    }
    std::vector<Choice> valid;
    for_each_candidate(lv, [&](Choice c) {
      std::size_t mark = stack_.size();
      if (attempt(lv, c)) {
        valid.push_back(c);
        undo(mark);
      }
    });
    std::unordered_map<std::uint64_t, std::uint32_t> index;
    index.reserve(valid.size() * 2);
    for (std::uint32_t i = 0; i < valid.size(); ++i) index.emplace(key(valid[i]), i);
    std::vector<bool> seen(valid.size(), false);
    for (std::uint32_t i = 0; i < valid.size(); ++i) {
      if (seen[i]) continue;
      Choice rep = valid[i];
      std::uint64_t orbit = 0;
      std::vector<std::uint32_t> stabilizer;
      for (std::uint32_t s : sym) {
        Choice img = conjugate(s, rep);
        if (key(img) == key(rep)) stabilizer.push_back(s);
        auto it = index.find(key(img));
        if (it == index.end())
          throw Error(ErrorCode::search_exhausted, "candidate set not closed under symmetry");
        if (!seen[it->second]) {
          seen[it->second] = true;
          ++orbit;
        }
      }
      std::size_t mark = stack_.size();
      if (!attempt(lv, rep)) throw Error(ErrorCode::search_exhausted, "representative rejected");
      recurse(lv + 1, weight * orbit, stabilizer);
      undo(mark);
    }
  }

  const HolomorphTarget& t_;
  const LabeledGroup& n_;
  EmbeddingOptions opt_;
  std::size_t deg_;
  point_t base_;
  std::vector<SearchLevel> levels_;
  std::vector<point_t> f_;
  std::vector<point_t> finv_;
  std::vector<point_t> stack_;
  std::vector<Choice> chosen_;
  std::vector<point_t> scratch_;
  std::uint64_t nodes_ = 0;
  std::uint64_t total_ = 0;
};

}  // namespace detail

/// Number of injective homomorphisms β: G → Hol(N) with β(G') fixing label 0 and β(G)
/// transitive. Each such β is f λ(-) f^-1 for a unique bijection f: G/G' → N sending the
/// base point to 0, so the search runs over f.
inline std::uint64_t count_embeddings(const PointedGroup& g, const HolomorphTarget& target,
                                      const EmbeddingOptions& opt = {},
                                      EmbeddingStats* stats = nullptr) {
  if (g.degree() != target.degree())
    throw Error(ErrorCode::bad_params, "degree " + std::to_string(g.degree()) + " of " + g.name() +
                                           " differs from |N| = " +
                                           std::to_string(target.degree()));
  std::uint64_t order = g.group().order();
  if (target.hol_order() % order != 0) {
    if (stats) *stats = {};
    return 0;
  }
  detail::EmbeddingSearch search(g, target, opt);
  std::uint64_t e = search.run();
  if (stats) *stats = {search.nodes(), search.level_count()};
  return e;
}

struct HgsCount {
  std::uint64_t embeddings = 0;  // e
  std::uint64_t aut_n = 0;       // |Aut(N)|
  std::uint64_t count = 0;       // a(N, L/K) = e / |Aut(N)|
};

inline HgsCount hgs_count(const PointedGroup& g, const HolomorphTarget& target,
                          const EmbeddingOptions& opt = {}, EmbeddingStats* stats = nullptr) {
  HgsCount r;
  r.embeddings = count_embeddings(g, target, opt, stats);
  r.aut_n = target.aut_order();
  if (r.embeddings % r.aut_n != 0)
    throw Error(ErrorCode::divisibility_violation,
                "e = " + std::to_string(r.embeddings) + " is not divisible by |Aut(N)| = " +
                    std::to_string(r.aut_n));
  r.count = r.embeddings / r.aut_n;
  return r;
}

/// Holomorph targets built once per (type, p) and shared across rows.
class TargetCache {
 public:
  std::shared_ptr<const HolomorphTarget> get(P3Type t, unsigned p) {
    std::lock_guard lock(mutex_);
    auto key = std::pair{static_cast<int>(t), p};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto target = std::make_shared<const HolomorphTarget>(build_p3(t, p));
    cache_.emplace(key, target);
    return target;
  }

  std::shared_ptr<const HolomorphTarget> get(const LabeledGroup& n) {
    std::lock_guard lock(mutex_);
    auto it = named_.find(n.name());
    if (it != named_.end()) return it->second;
    auto target = std::make_shared<const HolomorphTarget>(n);
    named_.emplace(n.name(), target);
    return target;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, unsigned>, std::shared_ptr<const HolomorphTarget>> cache_;
  std::map<std::string, std::shared_ptr<const HolomorphTarget>> named_;
};

/// Counts for one G across the five types of order p^3, in table column order.
struct HgsRow {
  std::string name;
  unsigned p = 0;
  std::array<std::uint64_t, 5> counts{};
  std::uint64_t total = 0;
  std::optional<std::string> error;  // set when the row could not be computed
  std::optional<ErrorCode> error_code;
  double seconds = 0;
};

inline HgsRow hgs_row(const PointedGroup& g, TargetCache& cache, const EmbeddingOptions& opt = {}) {
  auto pp = nt::prime_power(g.degree());
  if (!pp || pp->second != 3 || pp->first == 2)
    throw Error(ErrorCode::bad_params, g.name() + " does not have degree p^3 for an odd prime p");
  HgsRow row;
  row.name = g.name();
  row.p = pp->first;
  for (std::size_t i = 0; i < kP3Types.size(); ++i) {
    auto target = cache.get(kP3Types[i], row.p);
    row.counts[i] = hgs_count(g, *target, opt).count;
    row.total += row.counts[i];
  }
  return row;
}

namespace detail {

inline HgsRow guarded_row(const PointedGroup& g, TargetCache& cache, const EmbeddingOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  HgsRow row;
  try {
    row = hgs_row(g, cache, opt);
  } catch (const Error& e) {
    row = HgsRow{};
    row.name = g.name();
    row.error = e.what();
    row.error_code = e.code();
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

}  // namespace detail

/// One row per input in order; a failing row carries its error instead of aborting.
/// With jobs > 1 rows are computed by that many worker threads; `on_row` is called under
/// a lock in completion order.
inline std::vector<HgsRow> hgs_table(const std::vector<PointedGroup>& groups, TargetCache& cache,
                                     const EmbeddingOptions& opt = {},
                                     const std::function<void(const HgsRow&)>& on_row = {},
                                     unsigned jobs = 1) {
  std::vector<HgsRow> rows(groups.size());
  std::mutex report;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < groups.size();) {
      rows[i] = detail::guarded_row(groups[i], cache, opt);
      if (on_row) {
        std::lock_guard lock(report);
        on_row(rows[i]);
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(groups.size())));
  if (jobs == 1) {
    work();
    return rows;
  }
  std::vector<std::thread> workers;
  for (unsigned j = 0; j < jobs; ++j) workers.emplace_back(work);
  for (auto& w : workers) w.join();
  return rows;
}

}  // namespace hgs
