#pragma once
// Serialized forms of BigradedTable.
//
// JSON ("loghodge/1"), fields in this order:
//   {"schema":"loghodge/1","source":{...},"jmax":N,
//    "entries":[{"i":..,"j":..,"dim":..},...],
//    ["strip":{"q":..,"r":..},] "checksums":{"<j>":<euler>,...}}
// Entries are sorted by (j, i) and only non-zero dimensions are written.

#include <string>

#include "loghodge/table.hpp"

namespace loghodge::io {

std::string to_json(const BigradedTable& t);
std::string to_csv(const BigradedTable& t);
/// Triangular grid: i down, j across, '.' for zero, blank below the diagonal.
std::string to_pretty(const BigradedTable& t);

/// Throws InputError on malformed documents or a schema other than loghodge/1.
BigradedTable from_json(const std::string& text);

}  // namespace loghodge::io
