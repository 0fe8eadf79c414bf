#include <map>

#include <gtest/gtest.h>

#include "hgs/byott.hpp"
#include "hgs/gp_oracle.hpp"
#include "hgs/transgrp.hpp"

namespace hgs {
namespace {

TEST(Oracle, RegularSubgroupsOfSmallSymmetricGroups) {
  // (n-1)! / |Aut(N)| summed over the regular types N of order n
  EXPECT_EQ(regular_subgroups_of_symmetric(3).size(), 1u);
  EXPECT_EQ(regular_subgroups_of_symmetric(4).size(), 3u + 1u);
  EXPECT_EQ(regular_subgroups_of_symmetric(5).size(), 6u);
  std::map<std::string, std::size_t> by_type;
  for (const auto& r : regular_subgroups_of_symmetric(9)) ++by_type[r.type];
  EXPECT_EQ(by_type["C9"], 40320u / 6u);
  EXPECT_EQ(by_type["C3xC3"], 40320u / 48u);
  EXPECT_EQ(by_type.size(), 2u);
}

TEST(Oracle, SubgroupsAreRegular) {
  for (const auto& r : regular_subgroups_of_symmetric(9)) {
    ASSERT_EQ(r.elements.size(), 9u);
    EXPECT_TRUE(r.elements.front().is_identity());
    EXPECT_TRUE(is_regular(PermGroup(r.generators)));
  }
}

TEST(Oracle, DegreeCap) {
  try {
    regular_subgroups_of_symmetric(10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::degree_cap);
  }
}

TEST(Oracle, TypeTags) {
  auto reg = [](const LabeledGroup& n) {
    auto el = regular_representation(n).group().elements().to_vector();
    return regular_type_tag(el);
  };
  EXPECT_EQ(reg(build_cyclic(3, 2)), "C9");
  EXPECT_EQ(reg(build_cyclic_product({3, 3}, "", 3)), "C3xC3");
  EXPECT_EQ(reg(build_heisenberg(3)), "H27");
  EXPECT_EQ(reg(build_mixed(3)), "C9xC3");
}

// For every transitive group of degree 9, the Greither–Pareigis count equals the
// embedding count, type by type.
TEST(Oracle, MatchesCounterOnDegreeNineCorpus) {
  auto recs = load_transitive_file(std::string(HGS_DATA_DIR) + "/trans9.txt");
  HolomorphTarget c9(build_cyclic(3, 2));
  HolomorphTarget c3c3(build_cyclic_product({3, 3}, "C3xC3", 3));
  std::vector<PointedGroup> groups;
  for (const auto& r : recs) groups.push_back(r.pointed());
  for (std::uint64_t d : {2u, 3u, 6u}) groups.push_back(build_cpn_semidirect(3, 2, d));
  groups.push_back(resolve_spec("Hol(C9)"));
  for (const auto& g : groups) {
    auto row = oracle_row(g);
    EXPECT_EQ(row["C9"], hgs_count(g, c9).count) << g.name();
    EXPECT_EQ(row["C3xC3"], hgs_count(g, c3c3).count) << g.name();
  }
}

}  // namespace
}  // namespace hgs
