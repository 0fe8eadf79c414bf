#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "hgs/byott.hpp"
#include "hgs/catalog.hpp"
#include "hgs/holomorph.hpp"
#include "hgs/transgrp.hpp"

namespace hgs {
namespace {

// Independent count of e: try every assignment of generator images in an enumerated
// Hol(N) and extend it over the enumerated G.
std::uint64_t brute_force_embeddings(const PointedGroup& g, const LabeledGroup& n) {
  auto hol = holomorph(n).group();
  const auto& hol_el = hol.elements();
  const auto& g_el = g.group().elements();
  const auto& gens = g.group().generators();
  std::size_t k = gens.size();
  std::vector<std::size_t> choice(k, 0);
  std::uint64_t count = 0;
  while (true) {
    std::vector<std::optional<Permutation>> image(g_el.size());
    image[0] = Permutation::identity(n.order());
    std::vector<std::size_t> queue{0};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i) {
      auto x = g_el.perm(queue[i]);
      for (std::size_t j = 0; j < k && ok; ++j) {
        auto y = compose(x, gens[j]);
        auto yi = *g_el.find(y.images());
        auto img = compose(*image[queue[i]], hol_el.perm(choice[j]));
        if (image[yi]) {
          ok = *image[yi] == img;
        } else {
          image[yi] = img;
          queue.push_back(yi);
        }
      }
    }
    if (ok) {
      std::set<Permutation> distinct;
      std::set<point_t> reached;
      for (std::size_t i = 0; i < g_el.size() && ok; ++i) {
        distinct.insert(*image[i]);
        reached.insert((*image[i])(0));
        if (g_el[i][g.base_point()] == g.base_point() && (*image[i])(0) != 0) ok = false;
      }
      if (ok && distinct.size() == g_el.size() && reached.size() == n.order()) ++count;
    }
    std::size_t j = 0;
    while (j < k && ++choice[j] == hol_el.size()) choice[j++] = 0;
    if (j == k) break;
  }
  return count;
}

std::vector<PointedGroup> degree_nine_groups() {
  std::vector<PointedGroup> out{regular_representation(build_cyclic(3, 2)),
                                regular_representation(build_cyclic_product({3, 3}, "C3xC3", 3))};
  for (std::uint64_t d : {2u, 3u, 6u}) out.push_back(build_cpn_semidirect(3, 2, d));
  return out;
}

TEST(Embeddings, MatchBruteForceAtDegreeNine) {
  std::vector<LabeledGroup> types{build_cyclic(3, 2), build_cyclic_product({3, 3}, "C3xC3", 3)};
  for (const auto& n : types) {
    HolomorphTarget target(n);
    for (const auto& g : degree_nine_groups()) {
      auto expected = brute_force_embeddings(g, n);
      EXPECT_EQ(count_embeddings(g, target), expected) << g.name() << " into Hol(" << n.name() << ")";
      EmbeddingOptions plain;
      plain.use_symmetry = false;
      EXPECT_EQ(count_embeddings(g, target, plain), expected) << g.name() << " plain";
    }
  }
}

TEST(Embeddings, KnownValues) {
  TargetCache cache;
  auto c27 = regular_representation(build_cyclic(3, 3));
  EXPECT_EQ(count_embeddings(c27, *cache.get(P3Type::cyc, 3)), 162u);
  EXPECT_EQ(count_embeddings(c27, *cache.get(P3Type::elem, 3)), 0u);
  auto c3 = build_cyclic_product({3}, "C3", 3);
  HolomorphTarget t3(c3);
  auto c = hgs_count(regular_representation(c3), t3);
  EXPECT_EQ(c.embeddings, 2u);
  EXPECT_EQ(c.count, 1u);
}

TEST(Embeddings, DegreeMismatch) {
  HolomorphTarget t(build_cyclic(3, 2));
  EXPECT_THROW(count_embeddings(regular_representation(build_cyclic(3, 3)), t), Error);
}

TEST(Embeddings, NodeBudget) {
  TargetCache cache;
  EmbeddingOptions opt;
  opt.node_budget = 10;
  try {
    count_embeddings(regular_representation(build_elementary(3)), *cache.get(P3Type::elem, 3), opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::infeasible);
  }
}

TEST(Embeddings, SymmetryReductionIsStrategyIndependent) {
  // every target with |Hol(N)| <= 12000 at p = 3, against corpus groups of small order
  auto records = load_transitive_file(std::string(HGS_DATA_DIR) + "/trans27.txt");
  TargetCache cache;
  EmbeddingOptions plain;
  plain.use_symmetry = false;
  std::size_t compared = 0;
  for (const auto& rec : records) {
    auto g = rec.pointed();
    if (g.group().order() > 500) continue;
    for (auto t : {P3Type::cyc, P3Type::mix, P3Type::heis, P3Type::exp2}) {
      auto target = cache.get(t, 3);
      ASSERT_LE(target->hol_order(), 12000u);
      EXPECT_EQ(count_embeddings(g, *target), count_embeddings(g, *target, plain))
          << rec.id() << " " << type_name(t, 3);
      ++compared;
    }
  }
  EXPECT_GT(compared, 40u);
}

TEST(Counts, RowsOneToFive) {
  TargetCache cache;
  const std::array<std::array<std::uint64_t, 5>, 5> expected{{{9, 0, 0, 0, 0},
                                                              {0, 39, 12, 6, 78},
                                                              {0, 48, 318, 51, 96},
                                                              {0, 624, 1326, 339, 1248},
                                                              {0, 39, 12, 6, 78}}};
  for (std::size_t i = 0; i < 5; ++i) {
    auto g = regular_representation(build_p3(kP3Types[i], 3));
    auto row = hgs_row(g, cache);
    EXPECT_EQ(row.counts, expected[i]) << row.name;
    std::uint64_t sum = 0;
    for (auto c : row.counts) sum += c;
    EXPECT_EQ(row.total, sum);
  }
}

TEST(Counts, DivisibleByAutN) {
  TargetCache cache;
  for (std::uint64_t d : {2u, 3u, 6u, 9u, 18u}) {
    auto g = build_cpn_semidirect(3, 3, d);
    for (auto t : kP3Types) {
      auto target = cache.get(t, 3);
      auto e = count_embeddings(g, *target);
      EXPECT_EQ(e % target->aut_order(), 0u) << g.name() << " " << type_name(t, 3);
    }
  }
}

TEST(Counts, TableCarriesRowErrors) {
  TargetCache cache;
  std::vector<PointedGroup> groups{regular_representation(build_cyclic(3, 2)),
                                   regular_representation(build_cyclic(3, 3))};
  auto rows = hgs_table(groups, cache);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_TRUE(rows[0].error.has_value());
  EXPECT_EQ(rows[0].error_code, ErrorCode::bad_params);
  EXPECT_FALSE(rows[1].error.has_value());
  EXPECT_EQ(rows[1].total, 9u);
}

TEST(Counts, ParallelTableMatchesSerial) {
  auto records = load_transitive_file(std::string(HGS_DATA_DIR) + "/trans27.txt");
  std::vector<PointedGroup> groups;
  for (std::size_t i = 5; i < 12; ++i) groups.push_back(records[i].pointed());
  TargetCache cache;
  auto serial = hgs_table(groups, cache);
  auto parallel = hgs_table(groups, cache, {}, {}, 4);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    EXPECT_EQ(serial[i].name, parallel[i].name);
    EXPECT_EQ(serial[i].counts, parallel[i].counts);
  }
}

}  // namespace
}  // namespace hgs
