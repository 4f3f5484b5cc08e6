#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "minorstat/errors.hpp"

namespace minorstat {

enum class MatrixFormat { had, json };

/// Immutable rectangular matrix with entries in {+1, -1}, stored row-major
/// as signed 8-bit values. Safe to share across concurrent readers.
class SignMatrix {
 public:
  SignMatrix(int n_rows, int n_cols, std::vector<std::int8_t> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  std::int8_t at(int r, int c) const {
    return entries_[static_cast<std::size_t>(r) * cols_ + c];
  }
  const std::int8_t* row(int r) const {
    return entries_.data() + static_cast<std::size_t>(r) * cols_;
  }
  const std::vector<std::int8_t>& entries() const { return entries_; }

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  int rows_;
  int cols_;
  std::vector<std::int8_t> entries_;
};

/// True iff `a` is square of order n and A A^T = n I, computed in exact
/// integer arithmetic. Non-square inputs return false.
bool is_hadamard(const SignMatrix& a);

/// Parses the `had` text format ('+'/'-' rows separated by '\n', one optional
/// trailing newline) or the JSON object {"rows": R, "cols": C, "data": [[..]]}.
SignMatrix parse_sign_matrix(std::string_view text, MatrixFormat format);

/// Round-trips bit-exactly with parse_sign_matrix. `had` output is
/// newline-terminated on every row.
std::string serialize_sign_matrix(const SignMatrix& a, MatrixFormat format);

}  // namespace minorstat
