#include "mxpbf/csv.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mxpbf/errors.hpp"

namespace mxpbf {

namespace {

double parse_field(const std::string& field, std::size_t row, std::size_t col, bool allow_inf) {
  std::size_t a = 0, b = field.size();
  while (a < b && std::isspace(static_cast<unsigned char>(field[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(field[b - 1]))) --b;
  const std::string_view sv(field.data() + a, b - a);
  const auto fail = [&](const char* why) -> double {
    throw InvalidInputError("CSV parse error at row " + std::to_string(row) + ", column " +
                            std::to_string(col) + ": " + why + " ('" + std::string(sv) + "')");
  };
  if (sv.empty()) return fail("empty field");
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
  if (ec != std::errc() || ptr != sv.data() + sv.size()) return fail("not a number");
  if (std::isnan(value)) return fail("NaN is not allowed");
  if (!allow_inf && !std::isfinite(value)) return fail("non-finite value");
  return value;
}

std::vector<double> parse_line(const std::string& line, std::size_t row, bool allow_inf) {
  std::vector<double> fields;
  std::size_t start = 0, col = 1;
  while (true) {
    const std::size_t comma = line.find(',', start);
    const std::string field =
        comma == std::string::npos ? line.substr(start) : line.substr(start, comma - start);
    fields.push_back(parse_field(field, row, col, allow_inf));
    if (comma == std::string::npos) break;
    start = comma + 1;
    ++col;
  }
  return fields;
}

}  // namespace

SampleMatrix read_sample_csv(std::istream& in, bool skip_header) {
  std::string line;
  std::size_t row = 0;
  if (skip_header) {
    std::getline(in, line);
    ++row;
  }
  std::vector<std::vector<double>> rows;
  std::size_t cols = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = parse_line(line, row, /*allow_inf=*/false);
    if (cols == 0) {
      cols = fields.size();
    } else if (fields.size() != cols) {
      throw InvalidInputError("CSV parse error at row " + std::to_string(row) + ": expected " +
                              std::to_string(cols) + " columns, found " +
                              std::to_string(fields.size()));
    }
    rows.push_back(std::move(fields));
  }
  if (rows.empty()) {
    throw InvalidInputError("CSV parse error: no data rows");
  }
  SampleMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

SampleMatrix read_sample_csv_file(const std::string& path, bool skip_header) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInputError("cannot open CSV file '" + path + "'");
  }
  return read_sample_csv(in, skip_header);
}

void write_sample_csv(std::ostream& out, const SampleMatrix& m) {
  char buf[40];
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      out << buf << (j + 1 < m.cols() ? "," : "");
    }
    out << '\n';
  }
}

void write_sample_csv_file(const std::string& path, const SampleMatrix& m) {
  std::ofstream out(path);
  if (!out) {
    throw InvalidInputError("cannot open CSV file '" + path + "' for writing");
  }
  write_sample_csv(out, m);
}

std::vector<double> read_statistics_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInputError("cannot open statistics file '" + path + "'");
  }
  std::vector<double> values;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    for (double v : parse_line(line, row, /*allow_inf=*/true)) values.push_back(v);
  }
  return values;
}

}  // namespace mxpbf
