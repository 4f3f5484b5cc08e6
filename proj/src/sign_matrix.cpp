#include "minorstat/sign_matrix.hpp"

#include <json.hpp>

#include <bit>
#include <cstddef>
#include <sstream>

namespace minorstat {

SignMatrix::SignMatrix(int n_rows, int n_cols, std::vector<std::int8_t> entries)
    : rows_(n_rows), cols_(n_cols), entries_(std::move(entries)) {
  if (rows_ < 1 || cols_ < 1) {
    throw ValidationError("SignMatrix: dimensions must be positive");
  }
  if (entries_.size() != static_cast<std::size_t>(rows_) * cols_) {
    throw ValidationError("SignMatrix: entry count does not match dimensions");
  }
  for (std::int8_t e : entries_) {
    if (e != 1 && e != -1) {
      throw ValidationError("SignMatrix: entries must be +1 or -1");
    }
  }
}

bool is_hadamard(const SignMatrix& a) {
  if (!a.square()) return false;
  const int n = a.rows();

  // Pack each row as a bitmask (bit = entry is +1); two rows of a {+-1}
  // matrix are orthogonal iff they disagree in exactly n/2 positions.
  const int words = (n + 63) / 64;
  std::vector<std::uint64_t> packed(static_cast<std::size_t>(n) * words, 0);
  for (int i = 0; i < n; ++i) {
    const std::int8_t* r = a.row(i);
    for (int j = 0; j < n; ++j) {
      if (r[j] > 0) packed[static_cast<std::size_t>(i) * words + j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }
  if (n % 2 != 0) return n == 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int disagreements = 0;
      const std::uint64_t* ri = packed.data() + static_cast<std::size_t>(i) * words;
      const std::uint64_t* rj = packed.data() + static_cast<std::size_t>(j) * words;
      for (int w = 0; w < words; ++w) disagreements += std::popcount(ri[w] ^ rj[w]);
      if (2 * disagreements != n) return false;
    }
  }
  return true;
}

namespace {

SignMatrix parse_had(std::string_view text) {
  if (text.empty()) throw ParseError("empty matrix input");
  // Tolerate exactly one trailing newline; any other whitespace is an error.
  if (text.back() == '\n') text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty matrix input");

  std::vector<std::int8_t> entries;
  int cols = -1;
  int row = 1;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    const std::string_view line = text.substr(line_start, line_end - line_start);
    if (line.empty()) {
      throw ParseError("empty row " + std::to_string(row));
    }
    for (std::size_t c = 0; c < line.size(); ++c) {
      switch (line[c]) {
        case '+':
          entries.push_back(1);
          break;
        case '-':
          entries.push_back(-1);
          break;
        default:
          throw ParseError("invalid character at row " + std::to_string(row) +
                           ", column " + std::to_string(c + 1));
      }
    }
    if (cols == -1) {
      cols = static_cast<int>(line.size());
    } else if (static_cast<int>(line.size()) != cols) {
      throw ParseError("row " + std::to_string(row) + " has " +
                       std::to_string(line.size()) + " entries, expected " +
                       std::to_string(cols));
    }
    ++row;
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  return SignMatrix(row - 1, cols, std::move(entries));
}

SignMatrix parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") ||
      !doc.contains("data")) {
    throw ParseError("JSON matrix must be {\"rows\", \"cols\", \"data\"}");
  }
  if (!doc["rows"].is_number_integer() || !doc["cols"].is_number_integer()) {
    throw ParseError("rows/cols must be integers");
  }
  const long long rows = doc["rows"].get<long long>();
  const long long cols = doc["cols"].get<long long>();
  if (rows < 1 || cols < 1) throw ParseError("rows/cols must be positive");
  const auto& data = doc["data"];
  if (!data.is_array() || static_cast<long long>(data.size()) != rows) {
    throw ParseError("data must be an array of " + std::to_string(rows) + " rows");
  }
  std::vector<std::int8_t> entries;
  entries.reserve(static_cast<std::size_t>(rows * cols));
  for (long long i = 0; i < rows; ++i) {
    const auto& r = data[static_cast<std::size_t>(i)];
    if (!r.is_array() || static_cast<long long>(r.size()) != cols) {
      throw ParseError("row " + std::to_string(i + 1) + " must have " +
                       std::to_string(cols) + " entries");
    }
    for (long long j = 0; j < cols; ++j) {
      const auto& v = r[static_cast<std::size_t>(j)];
      if (!v.is_number_integer()) {
        throw ParseError("non-integer entry at row " + std::to_string(i + 1) +
                         ", column " + std::to_string(j + 1));
      }
      const long long x = v.get<long long>();
      if (x != 1 && x != -1) {
        throw ParseError("entry must be +1 or -1 at row " + std::to_string(i + 1) +
                         ", column " + std::to_string(j + 1));
      }
      entries.push_back(static_cast<std::int8_t>(x));
    }
  }
  return SignMatrix(static_cast<int>(rows), static_cast<int>(cols), std::move(entries));
}

}  // namespace

SignMatrix parse_sign_matrix(std::string_view text, MatrixFormat format) {
  return format == MatrixFormat::had ? parse_had(text) : parse_json(text);
}

std::string serialize_sign_matrix(const SignMatrix& a, MatrixFormat format) {
  if (format == MatrixFormat::had) {
    std::string out;
    out.reserve(static_cast<std::size_t>(a.rows()) * (a.cols() + 1));
    for (int i = 0; i < a.rows(); ++i) {
      const std::int8_t* r = a.row(i);
      for (int j = 0; j < a.cols(); ++j) out.push_back(r[j] > 0 ? '+' : '-');
      out.push_back('\n');
    }
    return out;
  }
  nlohmann::ordered_json doc;
  doc["rows"] = a.rows();
  doc["cols"] = a.cols();
  auto data = nlohmann::ordered_json::array();
  for (int i = 0; i < a.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int j = 0; j < a.cols(); ++j) row.push_back(static_cast<int>(a.at(i, j)));
    data.push_back(std::move(row));
  }
  doc["data"] = std::move(data);
  return doc.dump();
}

}  // namespace minorstat
