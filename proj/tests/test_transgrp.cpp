#include <string>

#include <gtest/gtest.h>

#include "hgs/transgrp.hpp"

namespace hgs {
namespace {

const std::string kData = HGS_DATA_DIR;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::search_exhausted;
}

TEST(TransitiveFile, ParsesRecords) {
  auto recs = parse_transitive_file(
      "# a comment\n"
      "# 4T1: cyclic\n"
      "4T1 | (1,2,3,4)\n"
      "\n"
      "4T2 | (1,2)(3,4) ; (1,3)(2,4)\n");
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[0].id(), "4T1");
  EXPECT_EQ(recs[0].note, "4T1: cyclic");
  EXPECT_EQ(recs[1].generators.size(), 2u);
  EXPECT_EQ(recs[1].pointed().group().order(), 4u);
}

TEST(TransitiveFile, RoundTrip) {
  auto recs = load_transitive_file(kData + "/trans27.txt");
  std::string text;
  for (const auto& r : recs) text += format_record(r) + "\n";
  auto again = parse_transitive_file(text);
  ASSERT_EQ(again.size(), recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    EXPECT_EQ(again[i].id(), recs[i].id());
    EXPECT_EQ(again[i].generators, recs[i].generators);
  }
}

TEST(TransitiveFile, Errors) {
  EXPECT_EQ(code_of([] { parse_transitive_file("4T1 (1,2,3,4)\n"); }), ErrorCode::parse_error);
  EXPECT_EQ(code_of([] { parse_transitive_file("4X1 | (1,2,3,4)\n"); }), ErrorCode::parse_error);
  EXPECT_EQ(code_of([] { parse_transitive_file("4T1 | (1,2,3,5)\n"); }), ErrorCode::parse_error);
  EXPECT_EQ(code_of([] { parse_transitive_file("4T1 | (1,2,3,4) ;\n"); }), ErrorCode::parse_error);
  EXPECT_EQ(code_of([] { parse_transitive_file("4T1 | (1,2,3,4)\n4T1 | (1,2,3,4)\n"); }),
            ErrorCode::parse_error);
  EXPECT_EQ(code_of([] { parse_transitive_file("4T1 | (1,2)\n"); }), ErrorCode::not_transitive);
  try {
    parse_transitive_file("\n\n4T1 | (1,2\n");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(Corpus, BundledFiles) {
  auto recs27 = load_transitive_file(kData + "/trans27.txt");
  ASSERT_EQ(recs27.size(), 50u);
  for (std::size_t i = 0; i < recs27.size(); ++i) {
    EXPECT_EQ(recs27[i].degree, 27u);
    EXPECT_EQ(recs27[i].index, i + 1);
  }
  const std::array<P3Type, 5> first_five{P3Type::cyc, P3Type::mix, P3Type::heis, P3Type::elem,
                                         P3Type::exp2};
  for (std::size_t i = 0; i < 5; ++i) {
    auto g = recs27[i].pointed().group();
    EXPECT_EQ(g.order(), 27u);
    EXPECT_EQ(classify_p3_type(g), first_five[i]) << recs27[i].id();
  }
  auto recs9 = load_transitive_file(kData + "/trans9.txt");
  EXPECT_FALSE(recs9.empty());
  for (const auto& r : recs9) EXPECT_EQ(r.degree, 9u);
}

TEST(Corpus, Checksum) {
  EXPECT_EQ(corpus_checksum(""), "cbf29ce484222325");
  EXPECT_NE(corpus_checksum("a"), corpus_checksum("b"));
}

TEST(Specs, ResolveLabeled) {
  EXPECT_EQ(resolve_labeled("C27").order(), 27u);
  EXPECT_EQ(classify_p3_type(resolve_labeled("C9xC3")), P3Type::mix);
  EXPECT_EQ(classify_p3_type(resolve_labeled("C3^3")), P3Type::elem);
  EXPECT_EQ(classify_p3_type(resolve_labeled("H27")), P3Type::heis);
  EXPECT_EQ(classify_p3_type(resolve_labeled("G125")), P3Type::exp2);
  EXPECT_EQ(resolve_labeled("C3xC3").order(), 9u);
  EXPECT_EQ(code_of([] { resolve_labeled("Q8"); }), ErrorCode::bad_spec);
  EXPECT_EQ(code_of([] { resolve_labeled("H9"); }), ErrorCode::bad_spec);
  EXPECT_EQ(code_of([] { resolve_labeled("C4^3"); }), ErrorCode::bad_spec);
}

TEST(Specs, ResolvePointed) {
  Corpus corpus(load_transitive_file(kData + "/trans27.txt"));
  EXPECT_EQ(resolve_spec("27T7", &corpus).group().order(), corpus.find(27, 7)->pointed().group().order());
  EXPECT_EQ(resolve_spec("C27:C2").group().order(), 54u);
  EXPECT_EQ(resolve_spec("Hol(C9)").group().order(), 54u);
  EXPECT_EQ(resolve_spec("P1@3").group().order(), 729u);
  EXPECT_TRUE(is_regular(resolve_spec("H27")));
  EXPECT_EQ(code_of([&] { resolve_spec("27T99", &corpus); }), ErrorCode::unknown_record);
  EXPECT_EQ(code_of([] { resolve_spec("27T1"); }), ErrorCode::unknown_record);
  EXPECT_EQ(code_of([] { resolve_spec("C27:C4"); }), ErrorCode::bad_spec);
  EXPECT_EQ(code_of([] { resolve_spec(""); }), ErrorCode::bad_spec);
}

}  // namespace
}  // namespace hgs
