#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace hgs {

/// Reference degree-27 table: counts per type in column order C27, C9xC3, H27, C3^3, G27,
/// then the total. The first five rows are the regular representations.
struct ReferenceRow {
  std::string_view name;
  std::array<std::uint64_t, 5> counts;
  std::uint64_t total;
};

inline constexpr std::array<ReferenceRow, 40> kDegree27Reference{{
    {"C27", {9, 0, 0, 0, 0}, 9},
    {"C9xC3", {0, 39, 12, 6, 78}, 135},
    {"H27", {0, 48, 318, 51, 96}, 513},
    {"C3^3", {0, 624, 1326, 339, 1248}, 3537},
    {"G27", {0, 39, 12, 6, 78}, 135},
    {"27T6", {0, 0, 78, 27, 0}, 105},
    {"27T7", {0, 0, 0, 1, 0}, 1},
    {"27T8", {1, 0, 0, 0, 0}, 1},
    {"27T9", {0, 7, 4, 2, 14}, 27},
    {"27T10", {0, 1, 0, 0, 0}, 1},
    {"27T11", {0, 4, 22, 5, 8}, 39},
    {"27T12", {0, 9, 0, 0, 0}, 9},
    {"27T13", {0, 16, 94, 35, 32}, 177},
    {"27T14", {0, 7, 4, 2, 14}, 27},
    {"27T15", {0, 0, 0, 33, 0}, 33},
    {"27T16", {0, 39, 12, 6, 78}, 135},
    {"27T17", {0, 9, 0, 0, 18}, 27},
    {"27T18", {0, 12, 120, 33, 24}, 189},
    {"27T19", {0, 12, 12, 6, 24}, 54},
    {"27T20", {0, 9, 0, 0, 18}, 27},
    {"27T21", {0, 6, 6, 3, 12}, 27},
    {"27T22", {9, 0, 0, 0, 0}, 9},
    {"27T23", {0, 3, 12, 6, 6}, 27},
    {"27T27", {0, 6, 6, 3, 12}, 27},
    {"27T28", {0, 27, 0, 0, 54}, 81},
    {"27T29", {0, 0, 10, 3, 0}, 13},
    {"27T30", {0, 1, 0, 0, 0}, 1},
    {"27T31", {0, 0, 0, 9, 0}, 9},
    {"27T32", {0, 0, 6, 3, 0}, 9},
    {"27T33", {0, 0, 6, 3, 0}, 9},
    {"27T34", {0, 0, 0, 1, 0}, 1},
    {"27T35", {0, 0, 18, 7, 0}, 25},
    {"27T36", {0, 0, 0, 9, 0}, 9},
    {"27T37", {0, 0, 0, 6, 0}, 6},
    {"27T39", {0, 9, 0, 0, 0}, 9},
    {"27T46", {0, 0, 0, 15, 0}, 15},
    {"27T47", {0, 3, 0, 0, 0}, 3},
    {"27T48", {0, 0, 0, 3, 0}, 3},
    {"27T49", {0, 3, 0, 0, 0}, 3},
    {"27T50", {0, 0, 6, 3, 0}, 9},
}};

inline std::optional<ReferenceRow> reference_row(std::string_view name) {
  for (const auto& r : kDegree27Reference)
    if (r.name == name) return r;
  return std::nullopt;
}

}  // namespace hgs
