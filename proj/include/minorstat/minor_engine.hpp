#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minorstat/bigint.hpp"
#include "minorstat/sign_matrix.hpp"

namespace minorstat {

/// Largest supported minor order. Hadamard's bound keeps every Bareiss
/// intermediate of an order-20 {+-1} minor below 2^127.
inline constexpr int kMaxMinorOrder = 20;

inline constexpr std::uint64_t kDefaultWorkCap = 1'000'000'000;

/// Exact census of the order-m minors of a sign matrix.
struct MinorStats {
  int order_m = 0;
  BigInt total_count;    // C(n_rows, m) * C(n_cols, m)
  BigInt zero_count;     // Z(m, A)
  BigInt nonzero_count;  // Y(m, A)
  BigInt sum_squares;
  /// Determinant value -> count; present only in full-enumeration mode.
  std::optional<std::map<std::int64_t, BigInt>> histogram;
};

struct EngineOptions {
  bool with_histogram = false;
  std::uint64_t work_cap = kDefaultWorkCap;
  int threads = 0;  // 0 = all hardware threads
};

/// Exact determinant of the submatrix of `a` selected by strictly increasing
/// row and column index lists of equal size m <= 20.
std::int64_t det_exact(const SignMatrix& a, std::span<const int> row_subset,
                       std::span<const int> col_subset);

/// Exact det(B B^T) for a sign matrix B with n_rows <= n_cols, n_rows <= 20.
/// The result lies in [0, n_cols^n_rows], the upper bound attained iff the
/// rows are pairwise orthogonal.
BigInt gram_determinant(const SignMatrix& b);

/// Visits every (row-subset, column-subset) pair exactly once in
/// colexicographic order (row-subset major) and returns the exact census.
/// Work is partitioned over contiguous colex blocks of row subsets; partial
/// results merge by componentwise addition, so the output is independent of
/// the thread count.
MinorStats enumerate_minors(const SignMatrix& a, int m, const EngineOptions& opts = {});

/// Sum of det(B B^T) over all m-row submatrices B of `a`. By Cauchy-Binet
/// this equals enumerate_minors(a, m).sum_squares at C(n_rows, m) Gram
/// determinants instead of C(n_rows, m) * C(n_cols, m) minor determinants.
BigInt sum_squares_gram(const SignMatrix& a, int m, const EngineOptions& opts = {});

/// CSV dump of a histogram: header "det,count", keys ascending, exact
/// decimal integers.
std::string histogram_csv(const MinorStats& stats);

// Colexicographic m-subset machinery over {0, .., n-1}. The first subset is
// {0, .., m-1}; next_colex_subset advances in place and returns false once the
// last subset {n-m, .., n-1} has been passed.
bool next_colex_subset(std::span<int> subset, int n);
std::uint64_t colex_rank(std::span<const int> subset);
std::vector<int> colex_unrank(std::uint64_t rank, int m, int n);

// Low-level exact determinant kernels (in place, clobber the buffer).
// det_pm1_inplace requires every entry in {+1, -1} and m <= 20;
// det_gram_inplace requires |entries| <= entry_bound and picks an exact
// kernel from that bound.
std::int64_t det_pm1_inplace(std::int64_t* a, int m);
BigInt det_gram_inplace(std::int64_t* g, int m, std::int64_t entry_bound);

}  // namespace minorstat
