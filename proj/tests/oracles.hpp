#pragma once

// Test-only oracles, deliberately independent of the engine under test:
// cofactor-expansion determinants and plain nested-loop subset enumeration
// (lexicographic, not colex).

#include <cstdint>
#include <map>
#include <vector>

#include "minorstat/bigint.hpp"
#include "minorstat/sign_matrix.hpp"

namespace oracle {

inline __int128 det_cofactor_rec(const std::int64_t* a, int m, int row, std::uint32_t used) {
  if (row == m) return 1;
  __int128 acc = 0;
  int sign = 1;
  for (int c = 0; c < m; ++c) {
    if (used & (1u << c)) continue;
    const std::int64_t e = a[row * m + c];
    if (e != 0) acc += sign * __int128(e) * det_cofactor_rec(a, m, row + 1, used | (1u << c));
    sign = -sign;
  }
  return acc;
}

inline std::int64_t det_cofactor(const std::vector<std::int64_t>& a, int m) {
  return static_cast<std::int64_t>(det_cofactor_rec(a.data(), m, 0, 0));
}

inline bool next_lex_subset(std::vector<int>& s, int n) {
  const int m = static_cast<int>(s.size());
  for (int i = m - 1; i >= 0; --i) {
    if (s[i] < n - m + i) {
      ++s[i];
      for (int j = i + 1; j < m; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct Census {
  minorstat::BigInt total = 0;
  minorstat::BigInt zero = 0;
  minorstat::BigInt sum_squares = 0;
  std::map<std::int64_t, minorstat::BigInt> histogram;
};

/// Brute-force census over all (row, column) subset pairs via cofactor
/// determinants. Feasible for small matrices and m <= 7 or so.
inline Census census(const minorstat::SignMatrix& a, int m) {
  Census out;
  std::vector<int> rows(m), cols(m);
  for (int i = 0; i < m; ++i) rows[i] = i;
  std::vector<std::int64_t> buf(static_cast<std::size_t>(m) * m);
  do {
    for (int i = 0; i < m; ++i) cols[i] = i;
    do {
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          buf[static_cast<std::size_t>(i) * m + j] = a.at(rows[i], cols[j]);
        }
      }
      const std::int64_t d = det_cofactor(buf, m);
      out.total += 1;
      if (d == 0) out.zero += 1;
      out.sum_squares += minorstat::BigInt(d) * d;
      out.histogram[d] += 1;
    } while (next_lex_subset(cols, a.cols()));
  } while (next_lex_subset(rows, a.rows()));
  return out;
}

/// Direct A A^T multiplication; the is_hadamard oracle is "equals n I".
inline bool gram_is_n_times_identity(const minorstat::SignMatrix& a) {
  if (!a.square()) return false;
  const int n = a.rows();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      long long dot = 0;
      for (int c = 0; c < n; ++c) dot += static_cast<long long>(a.at(i, c)) * a.at(j, c);
      if (dot != (i == j ? n : 0)) return false;
    }
  }
  return true;
}

}  // namespace oracle
