#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "hgs/hgs.hpp"

#ifndef HGS_DATA_DIR
#define HGS_DATA_DIR "data"
#endif

namespace {

using namespace hgs;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct Settings {
  std::string data = HGS_DATA_DIR;
  std::string out;
  std::string format = "csv";
  std::size_t max_group_order = kDefaultEnumerationCap;
  std::uint64_t node_budget = kDefaultNodeBudget;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

struct Loaded {
  Corpus corpus;
  std::string checksum;
};

Loaded load_data(const std::string& path) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& e : fs::directory_iterator(path))
      if (e.path().extension() == ".txt") files.push_back(e.path());
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(path);
  }
  Loaded out;
  std::string all;
  for (const auto& f : files) {
    std::ifstream in(f);
    if (!in) throw Error(ErrorCode::parse_error, "cannot open " + f.string());
    std::stringstream ss;
    ss << in.rdbuf();
    all += ss.str();
    try {
      out.corpus.add(parse_transitive_file(ss.str()));
    } catch (const Error& e) {
      throw Error(e.code(), f.filename().string() + ": " + e.what());
    }
  }
  out.checksum = corpus_checksum(all);
  return out;
}

void require_order(const PointedGroup& g, std::size_t cap) {
  g.group().order(cap);
}

EmbeddingOptions embedding_options(const Settings& s) {
  EmbeddingOptions opt;
  opt.node_budget = s.node_budget;
  return opt;
}

std::ostream& output(const Settings& s, std::ofstream& file) {
  if (s.out.empty()) return std::cout;
  file.open(s.out);
  if (!file) throw Error(ErrorCode::bad_params, "cannot write " + s.out);
  return file;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::string(detail::trim(item)));
  return out;
}

int cmd_count(const Settings& s, const std::string& g_spec, const std::string& n_spec) {
  auto data = load_data(s.data);
  auto g = resolve_spec(g_spec, &data.corpus);
  require_order(g, s.max_group_order);
  HolomorphTarget target(resolve_labeled(n_spec));
  EmbeddingStats stats;
  auto c = hgs_count(g, target, embedding_options(s), &stats);
  std::cout << "G = " << g.name() << " (|G| = " << g.group().order() << ", degree "
            << g.degree() << ")\n";
  std::cout << "N = " << target.group().name() << "\n";
  std::cout << "e = " << c.embeddings << "\n";
  std::cout << "|Aut(N)| = " << c.aut_n << "\n";
  try {
    auto pair = aut_pair_count(g);
    std::cout << "|Aut(G,G')| = " << pair << "\n";
    std::cout << "b = " << c.embeddings / pair << "\n";
  } catch (const Error& e) {
    if (!is_cap_error(e.code())) throw;
    std::cout << "|Aut(G,G')| = n/a (" << e.what() << ")\n";
  }
  std::cout << "a = " << c.count << "\n";
  std::cerr << "search nodes: " << stats.nodes << "\n";
  return kExitOk;
}

int cmd_table(const Settings& s, const std::string& rows_filter) {
  auto data = load_data(s.data);
  std::vector<PointedGroup> groups;
  auto wanted = split_list(rows_filter);
  std::vector<const TransitiveGroupRecord*> records;
  if (wanted.empty()) {
    for (const auto& r : data.corpus.records()) {
      auto pp = nt::prime_power(r.degree);
      if (pp && pp->second == 3 && pp->first > 2) records.push_back(&r);
    }
  } else {
    for (const auto& w : wanted) {
      auto id = detail::parse_record_id(w);
      const TransitiveGroupRecord* rec = id ? data.corpus.find(id->first, id->second) : nullptr;
      if (!rec) throw Error(ErrorCode::unknown_record, w + " is not in the loaded corpus");
      records.push_back(rec);
    }
  }
  unsigned p = 0;
  for (const auto* r : records) {
    auto pg = r->pointed();
    groups.emplace_back(pg.group(), pg.base_point(), display_name(*r));
    auto pp = nt::prime_power(r->degree);
    if (pp && pp->second == 3) p = pp->first;
  }
  TableDocument doc;
  doc.p = p ? p : 3;
  doc.format = s.format == "md" ? TableFormat::markdown : TableFormat::csv;
  doc.corpus_checksum = data.checksum;
  TargetCache cache;
  for (auto t : kP3Types) cache.get(t, doc.p);
  auto opt = embedding_options(s);
  doc.rows = hgs_table(groups, cache, opt, [](const HgsRow& row) {
    std::cerr << row.name << ": " << (row.error ? *row.error : std::to_string(row.total))
              << " (" << row.seconds << " s)\n";
  }, s.jobs);
  std::ofstream file;
  write_table(output(s, file), doc);
  int status = kExitOk;
  for (const auto& row : doc.rows) {
    if (row.error_code && is_cap_error(*row.error_code)) return kExitCap;
    if (row.error) status = kExitCheckFailed;
  }
  return status;
}

int cmd_aut(const std::string& spec) {
  auto n = resolve_labeled(spec);
  auto pp = nt::prime_power(n.order());
  if (pp && pp->second == 3 && pp->first > 3 && classify_p3_type(n) == P3Type::elem) {
    std::cout << general_linear_order(pp->first, 3) << "\n";
    std::cerr << "order of GL(3," << pp->first << ") from its matrix action\n";
    return kExitOk;
  }
  std::cout << count_automorphisms(n) << "\n";
  return kExitOk;
}

int cmd_hol(const std::string& spec) {
  auto n = resolve_labeled(spec);
  auto pp = nt::prime_power(n.order());
  if (pp && pp->second == 3 && pp->first > 3 && classify_p3_type(n) == P3Type::elem) {
    std::cout << general_linear_order(pp->first, 3) * n.order() << "\n";
    return kExitOk;
  }
  auto hol = holomorph(n);
  std::cout << schreier_sims_order(hol.group().generators()) << "\n";
  return kExitOk;
}

int cmd_census(const Settings& s, const std::string& spec) {
  auto data = load_data(s.data);
  auto g = resolve_spec(spec, &data.corpus);
  auto census = order_census(g.group(), s.max_group_order);
  std::uint64_t total = 0;
  for (const auto& [order, count] : census) total += count;
  std::cout << g.name() << ": order " << total << "\n";
  for (const auto& [order, count] : census) std::cout << "  " << order << " -> " << count << "\n";
  return kExitOk;
}

std::vector<HgsRow> corpus_rows(const Settings& s) {
  auto data = load_data(s.data);
  std::vector<PointedGroup> groups;
  for (const auto& r : data.corpus.records()) {
    if (r.degree != 27) continue;
    auto pg = r.pointed();
    groups.emplace_back(pg.group(), pg.base_point(), display_name(r));
  }
  TargetCache cache;
  for (auto t : kP3Types) cache.get(t, 3);
  return hgs_table(groups, cache, embedding_options(s), {}, s.jobs);
}

int cmd_verify(const Settings& s, const std::string& suite) {
  static const std::vector<std::string> suites{"prop-pn",  "prop-pn2",    "prop-p3",  "thm-nonab",
                                               "thm-abin", "corollaries", "table-27"};
  if (suite != "all" && std::find(suites.begin(), suites.end(), suite) == suites.end())
    throw CLI::ValidationError("suite", "unknown suite " + suite);
  auto want = [&](const char* name) { return suite == "all" || suite == name; };
  std::vector<CheckReport> reports;
  TargetCache cache;
  if (want("prop-pn"))
    for (auto [p, n] : {std::pair{3u, 2u}, {3u, 3u}, {5u, 2u}}) reports.push_back(verify_prop_pn(p, n));
  if (want("prop-pn2"))
    for (auto [p, n] : {std::pair{3u, 2u}, {3u, 3u}, {5u, 2u}, {7u, 2u}})
      reports.push_back(verify_prop_pn2(p, n, &cache));
  if (want("prop-p3"))
    for (unsigned p : {3u, 5u}) reports.push_back(verify_prop_p3(p, &cache));
  std::optional<std::vector<HgsRow>> rows;
  auto table_rows = [&]() -> const std::vector<HgsRow>& {
    if (!rows) rows = corpus_rows(s);
    return *rows;
  };
  if (want("thm-nonab")) {
    reports.push_back(verify_thm_nonab(3, &table_rows()));
    reports.push_back(verify_thm_nonab(5));
  }
  if (want("thm-abin"))
    for (unsigned p : {3u, 5u, 7u}) reports.push_back(verify_thm_abin(p));
  if (want("corollaries")) reports.push_back(verify_corollaries(table_rows()));
  if (want("table-27")) reports.push_back(verify_table_27(table_rows()));
  bool ok = true;
  for (const auto& r : reports) {
    std::cout << format_report(r);
    std::cerr << r.id << " (" << r.params << "): " << r.seconds << " s\n";
    ok = ok && r.passed();
  }
  std::cout << (ok ? "all checks passed" : "some checks failed") << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_oracle(const Settings& s, const std::string& spec) {
  auto data = load_data(s.data);
  auto g = resolve_spec(spec, &data.corpus);
  auto pp = nt::prime_power(g.degree());
  if (!pp || pp->second != 2)
    throw Error(ErrorCode::bad_params, "oracle comparison needs degree p^2");
  unsigned p = pp->first;
  auto oracle = oracle_row(g);
  std::vector<std::pair<std::string, LabeledGroup>> types{
      {"C" + std::to_string(p * p), build_cyclic(p, 2)},
      {"C" + std::to_string(p) + "xC" + std::to_string(p), build_cyclic_product({p, p}, "", p)}};
  bool ok = true;
  std::cout << "type,oracle,byott\n";
  for (const auto& [tag, n] : types) {
    HolomorphTarget target(n);
    auto a = hgs_count(g, target, embedding_options(s)).count;
    std::uint64_t o = oracle.count(tag) ? oracle.at(tag) : 0;
    std::cout << tag << "," << o << "," << a << "\n";
    ok = ok && o == a;
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counts Hopf Galois structures of degree p^3 via Byott's translation"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--data", s.data, "transitive-group file or directory of *.txt files")
      ->envname("HGS_DATA");
  app.add_option("--max-group-order", s.max_group_order, "enumeration cap on |G|")
      ->envname("HGS_MAX_GROUP_ORDER");
  app.add_option("--node-budget", s.node_budget, "search node budget per count")
      ->envname("HGS_NODE_BUDGET");
  app.add_option("--jobs", s.jobs, "worker threads for table rows")->envname("HGS_JOBS");

  std::string g_spec, n_spec, group_spec, rows_filter, suite;

  auto* count = app.add_subcommand("count", "a(N, L/K) for one G and N");
  count->add_option("--g", g_spec, "G spec: C27, 27T6, C27:C2, Hol(C9), ...")->required();
  count->add_option("--n", n_spec, "N spec: C27, C9xC3, H27, C3^3, G27, ...")->required();

  auto* table = app.add_subcommand("table", "table of counts for corpus records");
  table->add_option("--rows", rows_filter, "comma-separated record ids, e.g. 27T6,27T7");
  table->add_option("--out", s.out, "output file (default stdout)");
  table->add_option("--format", s.format, "csv or md")->check(CLI::IsMember({"csv", "md"}));

  auto* aut = app.add_subcommand("aut", "|Aut(N)|");
  aut->add_option("--group", group_spec)->required();
  auto* hol = app.add_subcommand("hol", "|Hol(N)|");
  hol->add_option("--group", group_spec)->required();
  auto* census = app.add_subcommand("census", "element-order census of a group");
  census->add_option("--group", group_spec)->required();

  auto* verify = app.add_subcommand("verify", "run the consistency checks");
  verify->add_option("suite", suite,
                     "prop-pn, prop-pn2, prop-p3, thm-nonab, thm-abin, corollaries, table-27, all")
      ->required();

  auto* oracle = app.add_subcommand("oracle", "compare regular-subgroup enumeration with the counter");
  oracle->add_option("--group", group_spec)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count) return cmd_count(s, g_spec, n_spec);
    if (*table) return cmd_table(s, rows_filter);
    if (*aut) return cmd_aut(group_spec);
    if (*hol) return cmd_hol(group_spec);
    if (*census) return cmd_census(s, group_spec);
    if (*verify) return cmd_verify(s, suite);
    if (*oracle) return cmd_oracle(s, group_spec);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (is_cap_error(e.code())) return kExitCap;
    switch (e.code()) {
      case ErrorCode::bad_spec:
      case ErrorCode::unknown_record:
      case ErrorCode::bad_params:
      case ErrorCode::parse_error:
      case ErrorCode::not_order_p3:
        return kExitUsage;
      default:
        return kExitCheckFailed;
    }
  }
  return kExitUsage;
}
