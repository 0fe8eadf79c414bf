// Acceptance run: one PASS/FAIL line per criterion. Counts are exact (zero tolerance).
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hgs/hgs.hpp"

namespace {

using namespace hgs;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<PointedGroup> corpus27() {
  auto recs = load_transitive_file(std::string(HGS_DATA_DIR) + "/trans27.txt");
  std::vector<PointedGroup> out;
  for (const auto& r : recs) {
    auto pg = r.pointed();
    out.emplace_back(pg.group(), pg.base_point(), display_name(r));
  }
  return out;
}

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string failing_items(const std::vector<CheckReport>& reports) {
  std::string out;
  for (const auto& r : reports)
    for (const auto& i : r.items)
      if (!i.pass) out += " [" + r.id + " " + r.params + ": " + i.name + " = " + i.measured + "]";
  return out;
}

Outcome from_reports(const std::vector<CheckReport>& reports) {
  Outcome o{true, ""};
  std::size_t items = 0;
  for (const auto& r : reports) {
    o.pass = o.pass && r.passed();
    items += r.items.size();
  }
  o.detail = std::to_string(items) + " assertions" + failing_items(reports);
  return o;
}

Outcome criterion1(TargetCache& cache) {
  const std::array<std::array<std::uint64_t, 5>, 5> expected{{{9, 0, 0, 0, 0},
                                                              {0, 39, 12, 6, 78},
                                                              {0, 48, 318, 51, 96},
                                                              {0, 624, 1326, 339, 1248},
                                                              {0, 39, 12, 6, 78}}};
  const std::array<std::uint64_t, 5> totals{9, 135, 513, 3537, 135};
  std::vector<PointedGroup> groups;
  for (auto t : kP3Types) groups.push_back(regular_representation(build_p3(t, 3)));
  auto rows = hgs_table(groups, cache, {}, {}, jobs());
  Outcome o{true, ""};
  for (std::size_t i = 0; i < 5; ++i) {
    bool ok = !rows[i].error && rows[i].counts == expected[i] && rows[i].total == totals[i];
    o.pass = o.pass && ok;
    o.detail += rows[i].name + "=" + (rows[i].error ? "ERR" : std::to_string(rows[i].total)) +
                (ok ? " " : "(mismatch) ");
  }
  return o;
}

Outcome criterion2(TargetCache& cache) {
  auto rows = hgs_table(corpus27(), cache, {}, {}, jobs());
  Outcome o{true, ""};
  std::size_t matched = 0, listed = 0, errors = 0, unlisted = 0;
  std::string bad;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.error) {
      ++errors;
      bad += " " + row.name + ":" + *row.error;
      o.pass = false;
      continue;
    }
    auto ref = reference_row(row.name);
    if (!ref) {
      ++unlisted;
      continue;
    }
    ++listed;
    if (row.counts == ref->counts && row.total == ref->total) {
      ++matched;
    } else {
      o.pass = false;
      bad += " " + row.name;
    }
  }
  bool range_ok = true;
  for (std::size_t i = 5; i < 23 && i < rows.size(); ++i)
    range_ok = range_ok && reference_row(rows[i].name).has_value();
  o.pass = o.pass && range_ok && listed == kDegree27Reference.size();
  o.detail = std::to_string(matched) + "/" + std::to_string(kDegree27Reference.size()) +
             " reference rows match, " + std::to_string(unlisted) +
             " corpus rows not in the reference table, " + std::to_string(errors) + " errors" + bad;
  return o;
}

Outcome criterion3(TargetCache& cache) {
  std::vector<CheckReport> reports;
  for (auto [p, n] : {std::pair{3u, 2u}, {3u, 3u}, {5u, 2u}, {7u, 2u}})
    reports.push_back(verify_prop_pn2(p, n, &cache));
  return from_reports(reports);
}

Outcome criterion4(TargetCache& cache) {
  return from_reports({verify_prop_p3(3, &cache), verify_prop_p3(5, &cache)});
}

Outcome criterion5() {
  std::vector<CheckReport> reports;
  for (auto [p, n] : {std::pair{3u, 2u}, {3u, 3u}, {5u, 2u}}) reports.push_back(verify_prop_pn(p, n));
  return from_reports(reports);
}

Outcome criterion6() {
  Outcome o{true, ""};
  for (auto t : {P3Type::mix, P3Type::elem, P3Type::heis, P3Type::exp2}) {
    auto hol = holomorph(build_p3(t, 3)).group();
    auto census = order_census(hol);
    std::uint64_t c27 = census.count(27) ? census.at(27) : 0;
    o.pass = o.pass && c27 == 0 && hol.order() == 27 * expected_aut_order(t, 3);
    o.detail += "Hol(" + type_name(t, 3) + "): |H|=" + std::to_string(hol.order()) +
                " census[27]=" + std::to_string(c27) + " ";
  }
  return o;
}

Outcome criterion7() {
  Outcome o{true, ""};
  for (unsigned p : {3u, 5u, 7u}) {
    for (auto t : kP3Types) {
      std::uint64_t got = 0;
      if (p == 3)
        got = automorphism_group(build_p3(t, p)).order();
      else if (t == P3Type::elem)
        got = general_linear_order(p, 3);
      else
        got = count_automorphisms(build_p3(t, p));
      bool ok = got == expected_aut_order(t, p);
      o.pass = o.pass && ok;
      if (!ok) o.detail += type_name(t, p) + "=" + std::to_string(got) + "(mismatch) ";
    }
  }
  o.detail += "15 orders; GL(3,5), GL(3,7) by Schreier-Sims on the matrix action";
  return o;
}

Outcome criterion8() { return from_reports({verify_thm_abin(5), verify_thm_abin(7)}); }

Outcome criterion9() { return from_reports({verify_thm_nonab(3), verify_thm_nonab(5)}); }

Outcome criterion10() {
  auto recs = load_transitive_file(std::string(HGS_DATA_DIR) + "/trans9.txt");
  std::vector<PointedGroup> groups{
      regular_representation(build_cyclic(3, 2)),
      regular_representation(build_cyclic_product({3, 3}, "C3xC3", 3))};
  for (std::uint64_t d : {2u, 3u, 6u}) groups.push_back(build_cpn_semidirect(3, 2, d));
  groups.push_back(resolve_spec("Hol(C9)"));
  groups.push_back(resolve_spec("Hol(C3xC3)"));
  for (const auto& r : recs) groups.push_back(r.pointed());
  HolomorphTarget c9(build_cyclic(3, 2));
  HolomorphTarget c3c3(build_cyclic_product({3, 3}, "C3xC3", 3));
  Outcome o{true, ""};
  std::size_t nonzero = 0;
  for (const auto& g : groups) {
    auto row = oracle_row(g);
    auto a9 = hgs_count(g, c9).count;
    auto a33 = hgs_count(g, c3c3).count;
    bool ok = row["C9"] == a9 && row["C3xC3"] == a33;
    if (a9 + a33 > 0) ++nonzero;
    o.pass = o.pass && ok;
    if (!ok) o.detail += g.name() + "(mismatch) ";
  }
  o.detail += std::to_string(groups.size()) + " groups, " + std::to_string(nonzero) +
              " with structures";
  return o;
}

}  // namespace

int main() {
  TargetCache cache;
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, "table rows 1-5", [&] { return criterion1(cache); }},
      {2, "extended table rows (27T corpus)", [&] { return criterion2(cache); }},
      {3, "cyclic counts p^(n-1) and 1", [&] { return criterion3(cache); }},
      {4, "cyclic counts for C_{p^3} x| C_D", [&] { return criterion4(cache); }},
      {5, "transitive subgroups contain an element of order p^n", criterion5},
      {6, "no element of order 27 in noncyclic holomorphs", criterion6},
      {7, "automorphism orders at p = 3, 5, 7", criterion7},
      {8, "P1/P2 censuses at p = 5, 7", criterion8},
      {9, "constructive nonabelian-type checks at p = 3, 5", criterion9},
      {10, "regular-subgroup oracle equals counter at degree 9", criterion10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d %s: %s (%s; %.1f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
