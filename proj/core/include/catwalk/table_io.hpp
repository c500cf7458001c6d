#pragma once

#include <iosfwd>
#include <string>

#include "catwalk/bc_table.hpp"

namespace catwalk {

// On-disk table formats. Values are decimal strings in both formats, since
// the cells outgrow every native integer width.
//
// CSV: one line per row n, n_max + 1 comma-separated fields; fields with
// m > n are empty.
//
// JSON: an array of arrays of decimal strings, row n holding n + 1 entries.

void write_table_csv(const BcTable& table, std::ostream& out);
void write_table_json(const BcTable& table, std::ostream& out);

BcTable read_table_csv(std::istream& in);
BcTable read_table_json(std::istream& in);

/// Writes in the format implied by the path suffix (".csv" or ".json").
void save_table(const BcTable& table, const std::string& path);
/// Loads a cache written by save_table, dispatching on the suffix.
BcTable load_table(const std::string& path);

}  // namespace catwalk
