#pragma once

#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdint>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hgs/catalog.hpp"
#include "hgs/error.hpp"
#include "hgs/holomorph.hpp"
#include "hgs/perm_group.hpp"

namespace hgs {

struct TransitiveGroupRecord {
  std::size_t degree = 0;
  std::size_t index = 0;
  std::vector<Permutation> generators;
  std::string note;  // the comment line preceding the record, if any

  std::string id() const { return std::to_string(degree) + "T" + std::to_string(index); }
  PointedGroup pointed() const { return PointedGroup(PermGroup(generators), 0, id()); }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::optional<std::size_t> parse_size(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

/// "27T6" -> (27, 6).
inline std::optional<std::pair<std::size_t, std::size_t>> parse_record_id(std::string_view s) {
  auto t = s.find('T');
  if (t == std::string_view::npos) return std::nullopt;
  auto d = parse_size(s.substr(0, t));
  auto k = parse_size(s.substr(t + 1));
  if (!d || !k || *d == 0 || *k == 0) return std::nullopt;
  return std::pair{*d, *k};
}

}  // namespace detail

/// Parses `<degree>T<index> | gen ; gen ; ...` records, one per line, with `#` comments.
/// Every record is checked for transitivity.
inline std::vector<TransitiveGroupRecord> parse_transitive_file(std::string_view text) {
  std::vector<TransitiveGroupRecord> out;
  std::string pending_note;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = detail::trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    auto fail = [&](const std::string& why) {
      throw Error(ErrorCode::parse_error, "line " + std::to_string(line_no) + ": " + why);
    };
    if (line.empty()) continue;
    if (line.front() == '#') {
      pending_note = std::string(detail::trim(line.substr(1)));
      continue;
    }
    auto bar = line.find('|');
    if (bar == std::string_view::npos) fail("missing '|'");
    auto id = detail::parse_record_id(detail::trim(line.substr(0, bar)));
    if (!id) fail("bad record id \"" + std::string(detail::trim(line.substr(0, bar))) + "\"");
    TransitiveGroupRecord rec;
    rec.degree = id->first;
    rec.index = id->second;
    if (rec.degree > kMaxDegree) fail("degree too large");
    for (const auto& r : out)
      if (r.degree == rec.degree && r.index == rec.index) fail("duplicate record " + rec.id());
    std::string_view rest = line.substr(bar + 1);
    while (true) {
      auto semi = rest.find(';');
      std::string_view piece = detail::trim(rest.substr(0, semi));
      if (piece.empty()) fail("empty generator");
      try {
        rec.generators.push_back(parse_cycles(piece, rec.degree));
      } catch (const Error& e) {
        fail(e.what());
      }
      if (semi == std::string_view::npos) break;
      rest = rest.substr(semi + 1);
    }
    if (pending_note.rfind(rec.id() + ":", 0) == 0) rec.note = pending_note;
    pending_note.clear();
    if (!is_transitive(PermGroup(rec.generators)))
      throw Error(ErrorCode::not_transitive, rec.id() + " is not transitive");
    out.push_back(std::move(rec));
  }
  return out;
}

inline std::vector<TransitiveGroupRecord> load_transitive_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::parse_error, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_transitive_file(ss.str());
}

inline std::string format_record(const TransitiveGroupRecord& rec) {
  std::string out = rec.id() + " |";
  for (std::size_t i = 0; i < rec.generators.size(); ++i) {
    out += i == 0 ? " " : " ; ";
    out += to_cycle_string(rec.generators[i]);
  }
  return out;
}

/// FNV-1a over the raw bytes; printed in table metadata.
inline std::string corpus_checksum(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// A corpus of records from one or more files.
class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::vector<TransitiveGroupRecord> records) : records_(std::move(records)) {}

  void add(std::vector<TransitiveGroupRecord> records) {
    for (auto& r : records) records_.push_back(std::move(r));
  }

  const std::vector<TransitiveGroupRecord>& records() const noexcept { return records_; }

  const TransitiveGroupRecord* find(std::size_t degree, std::size_t index) const {
    for (const auto& r : records_)
      if (r.degree == degree && r.index == index) return &r;
    return nullptr;
  }

 private:
  std::vector<TransitiveGroupRecord> records_;
};

namespace detail {

inline unsigned odd_prime_of_power(std::uint64_t n, unsigned& exponent) {
  auto pp = nt::prime_power(n);
  if (!pp || pp->first == 2) throw Error(ErrorCode::bad_spec, std::to_string(n) + " is not an odd prime power");
  exponent = pp->second;
  return pp->first;
}

}  // namespace detail

/// Abstract groups named in the spec language: C27, C9xC3, C3^3, H27, G27, C125, C9xC3xC3.
inline LabeledGroup resolve_labeled(std::string_view spec) {
  std::string s(detail::trim(spec));
  std::smatch m;
  static const std::regex power(R"(C(\d+)\^(\d+))");
  static const std::regex product(R"(C\d+(xC\d+)*)");
  static const std::regex nonab(R"(([HG])(\d+))");
  try {
    if (std::regex_match(s, m, power)) {
      unsigned p = static_cast<unsigned>(std::stoul(m[1]));
      unsigned k = static_cast<unsigned>(std::stoul(m[2]));
      if (!nt::is_prime(p) || k == 0 || k > 16) throw Error(ErrorCode::bad_spec, s);
      if (k == 3 && p > 2) return build_elementary(p);
      return build_cyclic_product(std::vector<unsigned>(k, p), s, p);
    }
    if (std::regex_match(s, product)) {
      std::vector<unsigned> moduli;
      std::size_t i = 0;
      while (i < s.size()) {
        std::size_t j = s.find('x', i);
        if (j == std::string::npos) j = s.size();
        moduli.push_back(static_cast<unsigned>(std::stoul(s.substr(i + 1, j - i - 1))));
        i = j + 1;
      }
      if (moduli.size() == 1) {
        unsigned e = 0;
        unsigned p = detail::odd_prime_of_power(moduli[0], e);
        return build_cyclic(p, e);
      }
      std::uint64_t order = 1;
      for (unsigned q : moduli) order *= q;
      auto pp = nt::prime_power(order);
      std::optional<unsigned> prime;
      if (pp) prime = pp->first;
      if (pp && pp->second == 3 && pp->first > 2 && moduli.size() == 2 &&
          moduli[0] == pp->first * pp->first)
        return build_mixed(pp->first);
      return build_cyclic_product(moduli, s, prime);
    }
    if (std::regex_match(s, m, nonab)) {
      unsigned e = 0;
      unsigned p = detail::odd_prime_of_power(std::stoull(m[2]), e);
      if (e != 3) throw Error(ErrorCode::bad_spec, s + ": order must be p^3");
      return m[1] == "H" ? build_heisenberg(p) : build_exp_p2(p);
    }
  } catch (const std::out_of_range&) {
    throw Error(ErrorCode::bad_spec, s + ": number out of range");
  }
  throw Error(ErrorCode::bad_spec, "not an abstract group spec: \"" + s + "\"");
}

/// Resolves a spec into a transitive group with base point 0 (point 1 in 1-based output).
/// Accepts abstract group specs (regular representation), C<p^n>:C<D>, Hol(<spec>),
/// P1@p, P2@p and <d>T<k> corpus records.
inline PointedGroup resolve_spec(std::string_view spec, const Corpus* corpus = nullptr) {
  std::string s(detail::trim(spec));
  if (s.empty()) throw Error(ErrorCode::bad_spec, "empty spec");
  std::smatch m;
  static const std::regex record(R"((\d+)T(\d+))");
  static const std::regex semidirect(R"(C(\d+):C(\d+))");
  static const std::regex sylow_cmp(R"(P([12])@(\d+))");
  if (std::regex_match(s, m, record)) {
    auto id = detail::parse_record_id(s);
    const TransitiveGroupRecord* rec = corpus ? corpus->find(id->first, id->second) : nullptr;
    if (!rec) throw Error(ErrorCode::unknown_record, s + " is not in the loaded corpus");
    return rec->pointed();
  }
  try {
    if (std::regex_match(s, m, semidirect)) {
      unsigned e = 0;
      unsigned p = detail::odd_prime_of_power(std::stoull(m[1]), e);
      auto pg = build_cpn_semidirect(p, e, std::stoull(m[2]));
      return PointedGroup(pg.group(), 0, s);
    }
    if (std::regex_match(s, m, sylow_cmp)) {
      unsigned p = static_cast<unsigned>(std::stoul(m[2]));
      auto g = m[1] == "1" ? build_P1(p) : build_P2(p);
      return PointedGroup(std::move(g), 0, s);
    }
  } catch (const std::out_of_range&) {
    throw Error(ErrorCode::bad_spec, s + ": number out of range");
  } catch (const Error& e) {
    if (e.code() == ErrorCode::bad_params) throw Error(ErrorCode::bad_spec, e.what());
    throw;
  }
  if (s.rfind("Hol(", 0) == 0 && s.back() == ')') {
    auto inner = resolve_labeled(s.substr(4, s.size() - 5));
    auto hol = holomorph(inner);
    return PointedGroup(hol.group(), 0, s);
  }
  auto n = resolve_labeled(s);
  auto reg = regular_representation(n);
  return PointedGroup(reg.group(), 0, s);
}

}  // namespace hgs
