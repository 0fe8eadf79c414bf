#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hgs/catalog.hpp"
#include "hgs/error.hpp"
#include "hgs/labeled_group.hpp"
#include "hgs/perm_group.hpp"
#include "hgs/stabilizer_chain.hpp"

namespace hgs {

inline constexpr std::size_t kAutOrderCap = 1000;  // cap on |N| for automorphism search

namespace detail {

/// Backtracking over images of N's generators. Images are restricted to elements of the
/// same order; after each assignment the partial map is extended over the subgroup
/// generated so far and checked for consistency and injectivity. `visit` receives each
/// automorphism as a label array; `accept` may reject an image before extension.
class AutSearch {
 public:
  using Visit = std::function<void(const std::vector<label_t>&)>;
  using Accept = std::function<bool(std::size_t level, label_t image)>;

  AutSearch(const LabeledGroup& n, std::vector<label_t> generators)
      : n_(n), gens_(std::move(generators)), map_(n.order(), kUnset), used_(n.order(), false) {
    for (std::size_t x = 0; x < n.order(); ++x)
      by_order_[n.element_order(static_cast<label_t>(x))].push_back(static_cast<label_t>(x));
  }

  void run(const Visit& visit, const Accept& accept = {}) {
    map_.assign(n_.order(), kUnset);
    used_.assign(n_.order(), false);
    map_[0] = 0;
    used_[0] = true;
    domain_ = {0};
    images_.assign(gens_.size(), 0);
    recurse(0, visit, accept);
  }

 private:
  static constexpr label_t kUnset = 0xFFFF;

  void recurse(std::size_t level, const Visit& visit, const Accept& accept) {
    if (level == gens_.size()) {
      if (domain_.size() == n_.order()) visit(map_);
      return;
    }
    label_t g = gens_[level];
    for (label_t cand : by_order_[n_.element_order(g)]) {
      if (accept && !accept(level, cand)) continue;
      images_[level] = cand;
      std::size_t mark = domain_.size();
      if (extend(level)) recurse(level + 1, visit, accept);
      for (std::size_t i = mark; i < domain_.size(); ++i) {
        used_[map_[domain_[i]]] = false;
        map_[domain_[i]] = kUnset;
      }
      domain_.resize(mark);
    }
  }

  /// Closes the domain under right multiplication by generators 0..level.
  bool extend(std::size_t level) {
    for (std::size_t i = 0; i < domain_.size(); ++i) {
      label_t x = domain_[i];
      for (std::size_t j = 0; j <= level; ++j) {
        label_t y = n_.mul(x, gens_[j]);
        label_t img = n_.mul(map_[x], images_[j]);
        if (map_[y] != kUnset) {
          if (map_[y] != img) return false;
          continue;
        }
        if (used_[img]) return false;
        map_[y] = img;
        used_[img] = true;
        domain_.push_back(y);
      }
    }
    return true;
  }

  const LabeledGroup& n_;
  std::vector<label_t> gens_;
  std::vector<label_t> map_;
  std::vector<bool> used_;
  std::vector<label_t> domain_;
  std::vector<label_t> images_;
  std::map<std::uint32_t, std::vector<label_t>> by_order_;
};

inline void require_aut_cap(const LabeledGroup& n) {
  if (n.order() > kAutOrderCap)
    throw Error(ErrorCode::cap, n.name() + " has order " + std::to_string(n.order()) +
                                    " above the automorphism-search cap");
}

}  // namespace detail

/// Aut(N) as permutations of N's labels, sorted (identity first), with a short generating
/// set picked greedily.
class AutomorphismGroup {
 public:
  AutomorphismGroup(FlatPermSet elements, std::vector<Permutation> generators)
      : elements_(std::move(elements)), generators_(std::move(generators)) {}

  std::size_t order() const noexcept { return elements_.size(); }
  const FlatPermSet& elements() const noexcept { return elements_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

 private:
  FlatPermSet elements_;
  std::vector<Permutation> generators_;
};

namespace detail {

inline std::vector<Permutation> greedy_generators(const FlatPermSet& elements) {
  std::vector<Permutation> gens;
  if (elements.size() <= 1) return gens;
  std::optional<FlatPermSet> current;
  for (std::size_t id = 1; id < elements.size(); ++id) {
    if (current && current->size() == elements.size()) break;
    if (current && current->contains(elements[id])) continue;
    gens.push_back(elements.perm(id));
    current = enumerate(gens, elements.size());
  }
  return gens;
}

}  // namespace detail

/// Complete automorphism group of N.
inline AutomorphismGroup automorphism_group(const LabeledGroup& n) {
  detail::require_aut_cap(n);
  FlatPermSet auts(n.order());
  detail::AutSearch search(n, n.generators());
  search.run([&](const std::vector<label_t>& m) {
    auts.insert(std::span<const point_t>(m.data(), m.size()));
  });
  if (auts.size() == 0) throw Error(ErrorCode::search_exhausted, "no automorphisms found");
  auts.sort_lexicographic();
  auto gens = detail::greedy_generators(auts);
  return AutomorphismGroup(std::move(auts), std::move(gens));
}

/// |Aut(N)| without storing the automorphisms.
inline std::uint64_t count_automorphisms(const LabeledGroup& n) {
  detail::require_aut_cap(n);
  std::uint64_t count = 0;
  detail::AutSearch search(n, n.generators());
  search.run([&](const std::vector<label_t>&) { ++count; });
  return count;
}

/// |Aut(G, G')|: automorphisms of G carrying the base-point stabilizer onto itself.
inline std::uint64_t aut_pair_count(const PointedGroup& g) {
  const auto& el = g.group().elements(kDefaultEnumerationCap);
  if (el.size() > kAutOrderCap)
    throw Error(ErrorCode::cap, "|G| = " + std::to_string(el.size()) + " above the cap");
  auto labeled = labeled_from_perm_group(g.group(), g.name());
  std::vector<bool> in_stab(labeled.order(), false);
  for (std::size_t id = 0; id < el.size(); ++id)
    in_stab[id] = el[static_cast<std::uint32_t>(id)][g.base_point()] == g.base_point();
  std::uint64_t count = 0;
  detail::AutSearch search(labeled, labeled.generators());
  search.run([&](const std::vector<label_t>& m) {
    for (std::size_t x = 0; x < m.size(); ++x)
      if (in_stab[x] && !in_stab[m[x]]) return;
    ++count;
  });
  return count;
}

/// Hol(N) = λ(N)·Aut(N) acting on N's labels, base point 0.
inline PointedGroup holomorph(const LabeledGroup& n, const AutomorphismGroup& aut) {
  std::vector<Permutation> gens;
  for (label_t g : n.generators()) gens.push_back(n.left_translation(g));
  for (const auto& a : aut.generators()) gens.push_back(a);
  if (gens.empty()) gens.push_back(Permutation::identity(n.order()));
  return PointedGroup(PermGroup(std::move(gens)), 0, "Hol(" + n.name() + ")");
}

inline PointedGroup holomorph(const LabeledGroup& n) { return holomorph(n, automorphism_group(n)); }

/// Syl_p(Hol(C_{p^n})) = <translation by 1, tau>.
inline PermGroup sylow_p_of_cyclic_holomorph(const CyclicHolomorphFrame& frame) {
  return PermGroup({frame.translation(1), frame.multiplication(frame.tau)});
}

inline PermGroup cyclic_holomorph(const CyclicHolomorphFrame& frame) {
  return PermGroup({frame.translation(1), frame.multiplication(frame.sigma)});
}

struct HolomorphDecomposition {
  label_t translation;
  Permutation automorphism;
};

/// Writes f = λ(f(0)) ∘ α with α ∈ Aut(N) when possible.
inline std::optional<HolomorphDecomposition> holomorph_membership(const Permutation& f,
                                                                  const LabeledGroup& n) {
  if (f.degree() != n.order()) return std::nullopt;
  auto t = static_cast<label_t>(f(0));
  label_t t_inv = n.inv(t);
  std::vector<point_t> alpha(n.order());
  for (std::size_t x = 0; x < n.order(); ++x)
    alpha[x] = n.mul(t_inv, static_cast<label_t>(f(static_cast<point_t>(x))));
  for (std::size_t x = 0; x < n.order(); ++x)
    for (std::size_t y = 0; y < n.order(); ++y) {
      auto xy = n.mul(static_cast<label_t>(x), static_cast<label_t>(y));
      if (alpha[xy] != n.mul(static_cast<label_t>(alpha[x]), static_cast<label_t>(alpha[y])))
        return std::nullopt;
    }
  return HolomorphDecomposition{t, Permutation(std::move(alpha))};
}

/// GL(d, p) generated by two elementary matrices and a diagonal one, acting on the
/// labels of F_p^d (first coordinate most significant).
inline std::vector<Permutation> general_linear_generators(unsigned p, unsigned d) {
  if (!nt::is_prime(p) || d == 0) throw Error(ErrorCode::bad_params, "need prime p, d >= 1");
  auto q = static_cast<std::size_t>(nt::ipow(p, d));
  check_degree(q, kMaxDegree);
  auto act = [&](const std::vector<std::vector<unsigned>>& m) {
    std::vector<point_t> v(q);
    std::vector<unsigned> x(d), y(d);
    for (std::size_t s = 0; s < q; ++s) {
      std::size_t t = s;
      for (unsigned i = d; i-- > 0;) {
        x[i] = static_cast<unsigned>(t % p);
        t /= p;
      }
      std::size_t label = 0;
      for (unsigned i = 0; i < d; ++i) {
        unsigned acc = 0;
        for (unsigned j = 0; j < d; ++j) acc = (acc + m[i][j] * x[j]) % p;
        label = label * p + acc;
      }
      v[s] = static_cast<point_t>(label);
    }
    return Permutation(std::move(v));
  };
  auto unit = [&] {
    std::vector<std::vector<unsigned>> m(d, std::vector<unsigned>(d, 0));
    for (unsigned i = 0; i < d; ++i) m[i][i] = 1;
    return m;
  };
  std::vector<Permutation> gens;
  auto diag = unit();
  diag[0][0] = static_cast<unsigned>(nt::primitive_root_mod_p2(p) % p);
  if (p > 2) gens.push_back(act(diag));
  if (d > 1) {
    auto shear = unit();
    shear[0][1] = 1;
    gens.push_back(act(shear));
    std::vector<std::vector<unsigned>> cyc(d, std::vector<unsigned>(d, 0));
    for (unsigned i = 0; i < d; ++i) cyc[i][(i + 1) % d] = 1;
    gens.push_back(act(cyc));
  }
  if (gens.empty()) gens.push_back(Permutation::identity(q));
  return gens;
}

/// |GL(d, p)| computed from the matrix action via Schreier–Sims.
inline std::uint64_t general_linear_order(unsigned p, unsigned d) {
  return schreier_sims_order(general_linear_generators(p, d));
}

/// Closed-form |Aut| of the five groups of order p^3.
inline std::uint64_t expected_aut_order(P3Type t, unsigned p) {
  std::uint64_t q = p;
  switch (t) {
    case P3Type::cyc: return q * q * (q - 1);
    case P3Type::mix: return q * q * q * (q - 1) * (q - 1);
    case P3Type::elem: return (q * q * q - 1) * (q * q * q - q) * (q * q * q - q * q);
    case P3Type::heis: return q * q * (q * q - 1) * (q * q - q);
    case P3Type::exp2: return q * q * q * (q - 1);
  }
  return 0;
}

}  // namespace hgs
