#pragma once

#include <iosfwd>

#include "hetealloc/dynamic.hpp"

namespace hetealloc {

// Newline-delimited JSON, one record per (year, author):
//   {"year": 1950, "author": "A1", "expertise": {"C05": 1.5}}
// Values are rounded to 6 significant digits. Records are ordered by year,
// then author label.
void write_snapshots(std::ostream& out, const ExpertiseStore& store);

// Inverse of write_snapshots. Records of one year must be contiguous and
// years increasing. Throws DataError with the line number on bad input.
ExpertiseStore read_snapshots(std::istream& in, const std::string& source = "<stream>");

double round_significant(double value, int digits = 6);

}  // namespace hetealloc
