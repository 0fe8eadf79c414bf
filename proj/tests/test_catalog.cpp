#include <set>

#include <gtest/gtest.h>

#include "hgs/catalog.hpp"
#include "hgs/holomorph.hpp"

namespace hgs {
namespace {

std::uint64_t at(const OrderCensus& c, std::uint64_t k) {
  auto it = c.find(k);
  return it == c.end() ? 0 : it->second;
}

class P3Catalog : public ::testing::TestWithParam<unsigned> {};

TEST_P(P3Catalog, AxiomsAndCensuses) {
  unsigned p = GetParam();
  std::uint64_t q = p;
  std::set<P3Type> seen;
  for (auto t : kP3Types) {
    auto g = build_p3(t, p);
    ASSERT_EQ(g.order(), q * q * q);
    EXPECT_TRUE(g.verify_axioms()) << g.name();
    EXPECT_EQ(classify_p3_type(g), t) << g.name();
    seen.insert(classify_p3_type(g));
    auto c = g.census();
    EXPECT_EQ(at(c, 1), 1u);
    switch (t) {
      case P3Type::cyc:
        EXPECT_EQ(at(c, q), q - 1);
        EXPECT_EQ(at(c, q * q), q * q - q);
        EXPECT_EQ(at(c, q * q * q), q * q * q - q * q);
        break;
      case P3Type::mix:
      case P3Type::exp2:
        EXPECT_EQ(at(c, q), q * q - 1);
        EXPECT_EQ(at(c, q * q), q * q * q - q * q);
        break;
      case P3Type::elem:
      case P3Type::heis:
        EXPECT_EQ(at(c, q), q * q * q - 1);
        break;
    }
  }
  EXPECT_EQ(seen.size(), 5u);
}

TEST_P(P3Catalog, CyclicHolomorphFrame) {
  unsigned p = GetParam();
  for (unsigned n : {1u, 2u, 3u}) {
    if (nt::ipow(p, n) > 400) continue;
    auto f = CyclicHolomorphFrame::make(p, n);
    EXPECT_EQ(nt::multiplicative_order(f.sigma, f.modulus), f.unit_group_order());
    EXPECT_EQ(nt::multiplicative_order(f.tau, f.modulus), f.modulus / p);
    EXPECT_EQ(f.multiplication(f.sigma)(1), f.k);
  }
}

TEST_P(P3Catalog, MixedAutomorphismsAreAutomorphisms) {
  unsigned p = GetParam();
  auto g = build_mixed(p);
  auto aut = mixed_automorphisms(p);
  for (const auto& f : {aut.phi1, aut.phi2, aut.phi3, aut.psi1, aut.psi2}) {
    auto d = holomorph_membership(f, g);
    ASSERT_TRUE(d.has_value());
    EXPECT_EQ(d->translation, 0);
  }
  EXPECT_EQ(element_order(aut.phi1), p);
  EXPECT_EQ(element_order(aut.phi2), p);
  EXPECT_EQ(element_order(aut.phi3), p);
  EXPECT_EQ(element_order(aut.psi1), p - 1);
  EXPECT_EQ(element_order(aut.psi2), p - 1);
}

INSTANTIATE_TEST_SUITE_P(Primes, P3Catalog, ::testing::Values(3u, 5u, 7u));

TEST(Catalog, TypeNames) {
  EXPECT_EQ(type_name(P3Type::cyc, 3), "C27");
  EXPECT_EQ(type_name(P3Type::mix, 3), "C9xC3");
  EXPECT_EQ(type_name(P3Type::heis, 3), "H27");
  EXPECT_EQ(type_name(P3Type::elem, 3), "C3^3");
  EXPECT_EQ(type_name(P3Type::exp2, 3), "G27");
  EXPECT_EQ(type_name(P3Type::elem, 5), "C5^3");
}

TEST(Catalog, RejectsBadPrimes) {
  EXPECT_THROW(build_heisenberg(2), Error);
  EXPECT_THROW(build_exp_p2(9), Error);
  EXPECT_THROW(CyclicHolomorphFrame::make(4, 2), Error);
}

TEST(Catalog, HeisenbergRelation) {
  auto h = build_heisenberg(3);
  label_t A = 9, B = 3, C = 1;
  EXPECT_EQ(h.mul(A, C), h.mul(B, h.mul(C, A)));
  EXPECT_EQ(h.mul(h.mul(A, C), h.mul(h.inv(A), h.inv(C))), B);
}

TEST(Catalog, SemidirectProducts) {
  for (std::uint64_t d : {1u, 2u, 3u, 6u, 9u, 18u}) {
    auto g = build_cpn_semidirect(3, 3, d);
    EXPECT_EQ(g.group().order(), 27u * d);
    EXPECT_EQ(g.degree(), 27u);
    EXPECT_EQ(PermGroup(stabilizer_generators(g)).order(), d);
  }
  EXPECT_EQ(build_cpn_semidirect(3, 3, 2).name(), "C27:C2");
  EXPECT_THROW(build_cpn_semidirect(3, 3, 4), Error);
  EXPECT_THROW(build_cpn_semidirect(3, 3, 27), Error);
}

TEST(Catalog, SylowComparisonGroups) {
  auto p1 = build_P1(3);
  auto p2 = build_P2(3);
  EXPECT_EQ(p1.order(), 729u);
  EXPECT_EQ(p2.order(), 729u);
  EXPECT_EQ(p1.degree(), 27u);
  for (const auto& g : p1.generators())
    EXPECT_TRUE(holomorph_membership(g, build_mixed(3)).has_value());
  for (const auto& g : p2.generators())
    EXPECT_TRUE(holomorph_membership(g, build_elementary(3)).has_value());
}

TEST(Catalog, ClassifyPermGroup) {
  for (auto t : kP3Types)
    EXPECT_EQ(classify_p3_type(regular_representation(build_p3(t, 3)).group()), t);
  EXPECT_THROW(classify_p3_type(build_cyclic(3, 2)), Error);
}

}  // namespace
}  // namespace hgs
