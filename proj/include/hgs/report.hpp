#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hgs/byott.hpp"
#include "hgs/catalog.hpp"
#include "hgs/transgrp.hpp"

namespace hgs {

enum class TableFormat { csv, markdown };

struct TableDocument {
  std::vector<HgsRow> rows;
  TableFormat format = TableFormat::csv;
  unsigned p = 3;
  std::optional<std::string> corpus_checksum;
};

/// Column headers after "G", in table order, e.g. C27, C9xC3, H27, C3^3, G27.
inline std::vector<std::string> table_columns(unsigned p) {
  std::vector<std::string> out;
  for (auto t : kP3Types) out.push_back(type_name(t, p));
  return out;
}

/// Regular corpus groups of order p^3 are shown under their isomorphism type, as in the
/// reference table; everything else keeps its record id.
inline std::string display_name(const TransitiveGroupRecord& rec) {
  auto pg = rec.pointed();
  auto pp = nt::prime_power(rec.degree);
  if (pp && pp->second == 3 && pp->first > 2 && pg.group().order() == rec.degree)
    return type_name(classify_p3_type(pg.group()), pp->first);
  return rec.id();
}

inline std::string format_cell(const HgsRow& row, std::size_t i) {
  if (row.error) return "ERR";
  return std::to_string(row.counts[i]);
}

inline void write_csv(std::ostream& out, const TableDocument& doc) {
  out << "# p=" << doc.p << "\n";
  if (doc.corpus_checksum) out << "# corpus-fnv1a=" << *doc.corpus_checksum << "\n";
  for (const auto& row : doc.rows)
    if (row.error) out << "# " << row.name << ": " << *row.error << "\n";
  out << "G";
  for (const auto& c : table_columns(doc.p)) out << "," << c;
  out << ",Total\n";
  for (const auto& row : doc.rows) {
    out << row.name;
    for (std::size_t i = 0; i < 5; ++i) out << "," << format_cell(row, i);
    out << "," << (row.error ? "ERR" : std::to_string(row.total)) << "\n";
  }
}

inline void write_markdown(std::ostream& out, const TableDocument& doc) {
  out << "Hopf Galois structures on degree " << doc.p * doc.p * doc.p << " extensions";
  if (doc.corpus_checksum) out << " (corpus fnv1a " << *doc.corpus_checksum << ")";
  out << "\n\n| G |";
  for (const auto& c : table_columns(doc.p)) out << " " << c << " |";
  out << " Total |\n|---|";
  for (std::size_t i = 0; i < 6; ++i) out << "---:|";
  out << "\n";
  for (const auto& row : doc.rows) {
    out << "| " << row.name << " |";
    for (std::size_t i = 0; i < 5; ++i) out << " " << format_cell(row, i) << " |";
    out << " " << (row.error ? "ERR" : std::to_string(row.total)) << " |\n";
  }
  for (const auto& row : doc.rows)
    if (row.error) out << "\n" << row.name << ": " << *row.error << "\n";
}

inline void write_table(std::ostream& out, const TableDocument& doc) {
  if (doc.format == TableFormat::csv)
    write_csv(out, doc);
  else
    write_markdown(out, doc);
}

inline std::string render_table(const TableDocument& doc) {
  std::ostringstream out;
  write_table(out, doc);
  return out.str();
}

}  // namespace hgs
