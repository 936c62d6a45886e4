#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mxpbf/matrix.hpp"

namespace mxpbf {

/// Comma-delimited, rows = observations, no header unless `skip_header`.
/// Entries must be finite; parse failures name the 1-based row and column.
SampleMatrix read_sample_csv(std::istream& in, bool skip_header = false);
SampleMatrix read_sample_csv_file(const std::string& path, bool skip_header = false);

/// Writes with 17 significant digits, so a round trip reproduces every value
/// exactly.
void write_sample_csv(std::ostream& out, const SampleMatrix& m);
void write_sample_csv_file(const std::string& path, const SampleMatrix& m);

/// One statistic per line (or comma-separated); "inf" / "-inf" tokens are
/// accepted, NaN is not.
std::vector<double> read_statistics_file(const std::string& path);

}  // namespace mxpbf
