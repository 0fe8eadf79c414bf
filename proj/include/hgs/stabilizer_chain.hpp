#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hgs/permutation.hpp"

namespace hgs {

/// Deterministic Schreier–Sims. Used only to get orders of groups too large to list,
/// such as GL(3, p) acting on F_p^3.
class StabilizerChain {
 public:
  explicit StabilizerChain(const std::vector<Permutation>& generators) {
    if (generators.empty()) throw Error(ErrorCode::bad_params, "no generators");
    degree_ = generators.front().degree();
    for (const auto& g : generators)
      if (g.degree() != degree_) throw Error(ErrorCode::degree_mismatch, "generator degrees differ");
    for (const auto& g : generators)
      if (!g.is_identity()) add_generator(0, g);
  }

  std::uint64_t order() const {
    std::uint64_t r = 1;
    for (const auto& lv : levels_) r *= lv.orbit.size();
    return r;
  }

  const std::vector<point_t>& base() const { return base_; }

  bool contains(const Permutation& g) const {
    auto [residue, depth] = sift(g);
    return depth == levels_.size() && residue.is_identity();
  }

 private:
  struct Level {
    point_t point;
    std::vector<Permutation> generators;
    std::vector<point_t> orbit;
    std::vector<std::optional<Permutation>> transversal;  // maps point to the orbit element
  };

  std::pair<Permutation, std::size_t> sift(Permutation g) const {
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      const auto& lv = levels_[i];
      point_t b = g(lv.point);
      if (!lv.transversal[b]) return {g, i};
      g = compose(inverse(*lv.transversal[b]), g);
    }
    return {g, levels_.size()};
  }

  void extend_orbit(Level& lv, std::size_t from) {
    for (std::size_t i = from; i < lv.orbit.size(); ++i) {
      point_t x = lv.orbit[i];
      for (const auto& s : lv.generators) {
        point_t y = s(x);
        if (lv.transversal[y]) continue;
        lv.transversal[y] = compose(s, *lv.transversal[x]);
        lv.orbit.push_back(y);
      }
    }
  }

  void new_level(const Permutation& g) {
    point_t b = 0;
    while (g(b) == b) ++b;
    Level lv;
    lv.point = b;
    lv.transversal.assign(degree_, std::nullopt);
    lv.transversal[b] = Permutation::identity(degree_);
    lv.orbit.push_back(b);
    base_.push_back(b);
    levels_.push_back(std::move(lv));
  }

  /// Adds g as a generator at `depth` and restores the chain invariant below it.
  void add_generator(std::size_t depth, const Permutation& g) {
    if (depth == levels_.size()) new_level(g);
    Level& lv = levels_[depth];
    lv.generators.push_back(g);
    std::size_t old_size = lv.orbit.size();
    // new generator applied to every known orbit point, then close
    std::vector<point_t> snapshot(lv.orbit.begin(), lv.orbit.end());
    for (point_t x : snapshot) {
      point_t y = g(x);
      if (!levels_[depth].transversal[y]) {
        levels_[depth].transversal[y] = compose(g, *levels_[depth].transversal[x]);
        levels_[depth].orbit.push_back(y);
      }
    }
    extend_orbit(levels_[depth], old_size);
    // Schreier generators for every (point, generator) pair
    for (std::size_t i = 0; i < levels_[depth].orbit.size(); ++i) {
      for (std::size_t j = 0; j < levels_[depth].generators.size(); ++j) {
        const Level& cur = levels_[depth];
        point_t x = cur.orbit[i];
        const Permutation& s = cur.generators[j];
        Permutation schreier =
            compose(inverse(*cur.transversal[s(x)]), compose(s, *cur.transversal[x]));
        if (schreier.is_identity()) continue;
        auto [residue, reached] = sift_from(depth + 1, schreier);
        if (residue.is_identity()) continue;
        for (std::size_t k = reached + 1; k-- > depth + 1;) add_generator(k, residue);
      }
    }
  }

  std::pair<Permutation, std::size_t> sift_from(std::size_t depth, Permutation g) const {
    for (std::size_t i = depth; i < levels_.size(); ++i) {
      const auto& lv = levels_[i];
      point_t b = g(lv.point);
      if (!lv.transversal[b]) return {g, i};
      g = compose(inverse(*lv.transversal[b]), g);
    }
    return {g, levels_.size()};
  }

  std::size_t degree_ = 0;
  std::vector<point_t> base_;
  std::vector<Level> levels_;
};

inline std::uint64_t schreier_sims_order(const std::vector<Permutation>& generators) {
  bool trivial = true;
  for (const auto& g : generators) trivial = trivial && g.is_identity();
  if (trivial) return 1;
  return StabilizerChain(generators).order();
}

}  // namespace hgs
