#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hgs/error.hpp"
#include "hgs/perm_group.hpp"

namespace hgs {

using label_t = std::uint16_t;

inline constexpr std::size_t kLabeledOrderCap = 4096;

/// An abstract finite group on labels {0..order-1} with label 0 the identity,
/// stored as a full multiplication table.
class LabeledGroup {
 public:
  using Rule = std::function<label_t(label_t, label_t)>;

  LabeledGroup(std::string name, std::size_t order, const Rule& multiply,
               std::vector<label_t> generators, std::optional<unsigned> prime = std::nullopt)
      : name_(std::move(name)), order_(order), generators_(std::move(generators)), prime_(prime) {
    if (order_ == 0) throw Error(ErrorCode::bad_params, "empty group");
    if (order_ > kLabeledOrderCap)
      throw Error(ErrorCode::cap, name_ + " has order " + std::to_string(order_) +
                                      " above the labeled-group cap");
    table_.resize(order_ * order_);
    for (std::size_t a = 0; a < order_; ++a)
      for (std::size_t b = 0; b < order_; ++b) {
        label_t c = multiply(static_cast<label_t>(a), static_cast<label_t>(b));
        if (c >= order_) throw Error(ErrorCode::bad_params, name_ + ": product out of range");
        table_[a * order_ + b] = c;
      }
    for (std::size_t a = 0; a < order_; ++a)
      if (table_[a] != a || table_[a * order_] != a)
        throw Error(ErrorCode::bad_params, name_ + ": label 0 is not the identity");
    inverse_.assign(order_, 0);
    for (std::size_t a = 0; a < order_; ++a) {
      bool found = false;
      for (std::size_t b = 0; b < order_ && !found; ++b)
        if (table_[a * order_ + b] == 0) {
          inverse_[a] = static_cast<label_t>(b);
          found = true;
        }
      if (!found) throw Error(ErrorCode::bad_params, name_ + ": missing inverse");
    }
    orders_.assign(order_, 1);
    for (std::size_t a = 1; a < order_; ++a) {
      label_t x = static_cast<label_t>(a);
      std::uint32_t k = 1;
      while (x != 0) {
        x = mul(x, static_cast<label_t>(a));
        ++k;
        if (k > order_) throw Error(ErrorCode::bad_params, name_ + ": not a group");
      }
      orders_[a] = k;
    }
    if (generators_.empty()) generators_ = greedy_generators();
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return order_; }
  std::optional<unsigned> prime() const noexcept { return prime_; }
  const std::vector<label_t>& generators() const noexcept { return generators_; }

  label_t mul(label_t a, label_t b) const noexcept { return table_[a * order_ + b]; }
  label_t inv(label_t a) const noexcept { return inverse_[a]; }
  std::uint32_t element_order(label_t a) const noexcept { return orders_[a]; }
  label_t pow(label_t a, std::uint64_t k) const noexcept {
    label_t r = 0;
    for (std::uint64_t i = 0; i < k % orders_[a]; ++i) r = mul(r, a);
    return r;
  }
  const std::vector<label_t>& table() const noexcept { return table_; }

  bool is_abelian() const noexcept {
    for (label_t a : generators_)
      for (label_t b : generators_)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  std::uint64_t exponent() const noexcept {
    std::uint64_t e = 1;
    for (auto o : orders_) e = std::lcm<std::uint64_t>(e, o);
    return e;
  }

  OrderCensus census() const {
    OrderCensus c;
    for (auto o : orders_) ++c[o];
    return c;
  }

  /// Labels reachable from the generators (should be everything).
  std::size_t generated_order(const std::vector<label_t>& gens) const {
    std::vector<bool> seen(order_, false);
    std::vector<label_t> queue{0};
    seen[0] = true;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (label_t g : gens) {
        label_t y = mul(queue[i], g);
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    return queue.size();
  }

  /// Associativity over all triples when order <= exhaustive_limit, else on `samples`
  /// random triples; also checks the declared generators generate.
  bool verify_axioms(std::size_t exhaustive_limit = 729, std::size_t samples = 200'000) const {
    if (order_ <= exhaustive_limit) {
      for (std::size_t a = 0; a < order_; ++a)
        for (std::size_t b = 0; b < order_; ++b) {
          label_t ab = table_[a * order_ + b];
          for (std::size_t c = 0; c < order_; ++c)
            if (table_[ab * order_ + c] != table_[a * order_ + table_[b * order_ + c]]) return false;
        }
    } else {
      std::mt19937_64 rng(order_);
      std::uniform_int_distribution<std::size_t> pick(0, order_ - 1);
      for (std::size_t i = 0; i < samples; ++i) {
        auto a = static_cast<label_t>(pick(rng));
        auto b = static_cast<label_t>(pick(rng));
        auto c = static_cast<label_t>(pick(rng));
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
      }
    }
    return generated_order(generators_) == order_;
  }

  /// Left translation x ↦ g·x as a permutation of the labels.
  Permutation left_translation(label_t g) const {
    std::vector<point_t> v(order_);
    for (std::size_t x = 0; x < order_; ++x) v[x] = mul(g, static_cast<label_t>(x));
    return Permutation(std::move(v));
  }

 private:
  std::vector<label_t> greedy_generators() const {
    std::vector<label_t> gens;
    while (generated_order(gens) < order_) {
      label_t best = 0;
      std::size_t best_size = 0;
      for (std::size_t a = 1; a < order_; ++a) {
        auto trial = gens;
        trial.push_back(static_cast<label_t>(a));
        std::size_t s = generated_order(trial);
        if (s > best_size) {
          best_size = s;
          best = static_cast<label_t>(a);
        }
      }
      gens.push_back(best);
    }
    return gens;
  }

  std::string name_;
  std::size_t order_;
  std::vector<label_t> table_;
  std::vector<label_t> inverse_;
  std::vector<std::uint32_t> orders_;
  std::vector<label_t> generators_;
  std::optional<unsigned> prime_;
};

/// Labels the elements of an enumerated permutation group by their lexicographic rank
/// (so the identity is label 0).
inline LabeledGroup labeled_from_perm_group(const PermGroup& group, std::string name,
                                            std::size_t cap = kLabeledOrderCap) {
  const auto& el = group.elements(cap);
  if (el.size() > cap) throw Error(ErrorCode::cap, "group too large to label");
  detail::IdArithmetic ar(el);
  std::vector<label_t> gens;
  for (const auto& g : group.generators()) {
    auto id = static_cast<label_t>(*el.find(g));
    if (id != 0) gens.push_back(id);
  }
  if (gens.empty()) gens.push_back(0);
  return LabeledGroup(
      std::move(name), el.size(),
      [&](label_t a, label_t b) { return static_cast<label_t>(ar.mul(a, b)); }, gens);
}

}  // namespace hgs
