#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "hgs/report.hpp"

namespace hgs {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Drops the leading '#' metadata lines.
std::string data_section(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line))
    if (line.empty() || line[0] != '#') out += line + "\n";
  return out;
}

std::vector<TransitiveGroupRecord> corpus() {
  return load_transitive_file(std::string(HGS_DATA_DIR) + "/trans27.txt");
}

TEST(Report, RowsOneToFiveMatchGolden) {
  auto recs = corpus();
  std::vector<PointedGroup> groups;
  for (std::size_t i = 0; i < 5; ++i) {
    auto pg = recs[i].pointed();
    groups.emplace_back(pg.group(), 0, display_name(recs[i]));
  }
  TargetCache cache;
  TableDocument doc;
  doc.rows = hgs_table(groups, cache, {}, {}, 4);
  doc.corpus_checksum = "0";
  auto csv = render_table(doc);
  EXPECT_EQ(data_section(csv), read_file(std::string(HGS_TEST_DIR) + "/golden/rows_1_5.csv"));
  EXPECT_EQ(render_table(doc), csv);

  doc.format = TableFormat::markdown;
  auto md = render_table(doc);
  EXPECT_NE(md.find("| G | C27 | C9xC3 | H27 | C3^3 | G27 | Total |"), std::string::npos);
  EXPECT_NE(md.find("| C3^3 | 0 | 624 | 1326 | 339 | 1248 | 3537 |"), std::string::npos);
}

TEST(Report, DisplayNames) {
  auto recs = corpus();
  EXPECT_EQ(display_name(recs[0]), "C27");
  EXPECT_EQ(display_name(recs[2]), "H27");
  EXPECT_EQ(display_name(recs[5]), "27T6");
}

TEST(Report, ErrorRowsAreMarked) {
  TableDocument doc;
  HgsRow bad;
  bad.name = "27T99";
  bad.error = "INFEASIBLE: budget";
  doc.rows.push_back(bad);
  auto csv = render_table(doc);
  EXPECT_NE(csv.find("# 27T99: INFEASIBLE: budget\n"), std::string::npos);
  EXPECT_NE(csv.find("27T99,ERR,ERR,ERR,ERR,ERR,ERR\n"), std::string::npos);
}

TEST(Report, ColumnOrder) {
  EXPECT_EQ(table_columns(3), (std::vector<std::string>{"C27", "C9xC3", "H27", "C3^3", "G27"}));
  EXPECT_EQ(table_columns(5), (std::vector<std::string>{"C125", "C25xC5", "H125", "C5^3", "G125"}));
}

}  // namespace
}  // namespace hgs
