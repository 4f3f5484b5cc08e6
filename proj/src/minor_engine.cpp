#include "minorstat/minor_engine.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <utility>

namespace minorstat {

namespace {

using int128 = __int128;
using uint128 = unsigned __int128;

// Fraction-free (Bareiss) elimination on an m x m int64 buffer, in place,
// with partial pivoting by row swaps. Every intermediate is a minor of the
// input bordered by leading rows/columns, so for inputs whose order-k minors
// stay below 2^63 the buffer never overflows; Prod must hold a product of two
// such minors. The final value is returned as Prod because it may exceed the
// intermediate bound (Gram inputs).
template <typename Prod>
Prod bareiss_det(std::int64_t* a, int m) {
  if (m == 1) return a[0];
  std::int64_t prev = 1;
  int sign = 1;
  for (int k = 0; k + 2 < m; ++k) {
    int p = -1;
    for (int i = k; i < m; ++i) {
      if (a[static_cast<std::size_t>(i) * m + k] != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) return 0;
    if (p != k) {
      for (int j = k; j < m; ++j) {
        std::swap(a[static_cast<std::size_t>(k) * m + j], a[static_cast<std::size_t>(p) * m + j]);
      }
      sign = -sign;
    }
    const std::int64_t piv = a[static_cast<std::size_t>(k) * m + k];
    const std::int64_t* rowk = a + static_cast<std::size_t>(k) * m;
    for (int i = k + 1; i < m; ++i) {
      std::int64_t* rowi = a + static_cast<std::size_t>(i) * m;
      const std::int64_t aik = rowi[k];
      if (prev == 1) {
        for (int j = k + 1; j < m; ++j) {
          rowi[j] = static_cast<std::int64_t>(Prod(piv) * rowi[j] - Prod(aik) * rowk[j]);
        }
      } else {
        for (int j = k + 1; j < m; ++j) {
          rowi[j] =
              static_cast<std::int64_t>((Prod(piv) * rowi[j] - Prod(aik) * rowk[j]) / prev);
        }
      }
      rowi[k] = 0;
    }
    prev = piv;
  }
  // Final 2x2 step.
  const int k = m - 2;
  std::int64_t a00 = a[static_cast<std::size_t>(k) * m + k];
  std::int64_t a01 = a[static_cast<std::size_t>(k) * m + k + 1];
  std::int64_t a10 = a[static_cast<std::size_t>(k + 1) * m + k];
  std::int64_t a11 = a[static_cast<std::size_t>(k + 1) * m + k + 1];
  if (a00 == 0) {
    std::swap(a00, a10);
    std::swap(a01, a11);
    sign = -sign;
    if (a00 == 0) return 0;
  }
  const Prod det = (Prod(a00) * a11 - Prod(a10) * a01) / prev;
  return sign < 0 ? -det : det;
}

// Full-bignum fallback for Gram matrices whose minors can exceed 2^63.
BigInt bareiss_det_big(std::vector<BigInt> a, int m) {
  if (m == 1) return a[0];
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < m; ++k) {
    int p = -1;
    for (int i = k; i < m; ++i) {
      if (a[static_cast<std::size_t>(i) * m + k] != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) return 0;
    if (p != k) {
      for (int j = k; j < m; ++j) {
        std::swap(a[static_cast<std::size_t>(k) * m + j], a[static_cast<std::size_t>(p) * m + j]);
      }
      sign = -sign;
    }
    const BigInt piv = a[static_cast<std::size_t>(k) * m + k];
    for (int i = k + 1; i < m; ++i) {
      for (int j = k + 1; j < m; ++j) {
        a[static_cast<std::size_t>(i) * m + j] =
            (piv * a[static_cast<std::size_t>(i) * m + j] -
             a[static_cast<std::size_t>(i) * m + k] * a[static_cast<std::size_t>(k) * m + j]) /
            prev;
      }
      a[static_cast<std::size_t>(i) * m + k] = 0;
    }
    prev = piv;
  }
  BigInt det = a[static_cast<std::size_t>(m - 1) * m + (m - 1)];
  return sign < 0 ? -det : det;
}

enum class GramKernel { i64, i128, big };

// Select the cheapest exact kernel from the intermediate bound
// entry_bound^(m-1) (a k x k minor of a Gram matrix of an m x n sign matrix
// is at most n^k in absolute value).
GramKernel select_gram_kernel(int m, std::int64_t entry_bound) {
  const BigInt v = big_pow(entry_bound, static_cast<unsigned>(m > 0 ? m - 1 : 0));
  if (v < (BigInt(1) << 31)) return GramKernel::i64;
  if (v < (BigInt(1) << 63)) return GramKernel::i128;
  return GramKernel::big;
}

BigInt run_gram_kernel(std::int64_t* g, int m, GramKernel kernel) {
  switch (kernel) {
    case GramKernel::i64:
      return bareiss_det<std::int64_t>(g, m);
    case GramKernel::i128: {
      const int128 det = bareiss_det<int128>(g, m);
      return BigInt(det);
    }
    case GramKernel::big: {
      std::vector<BigInt> cells(static_cast<std::size_t>(m) * m);
      for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = g[i];
      return bareiss_det_big(std::move(cells), m);
    }
  }
  return 0;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::uint64_t binomial_u64(int n, int k) {
  const BigInt b = binomial(n, static_cast<unsigned>(k));
  return b.convert_to<std::uint64_t>();
}

// Bit-packed rows: word w of row r holds columns [64w, 64w+63], bit set when
// the entry is +1. Dot products become popcounts.
struct PackedRows {
  int cols = 0;
  int words = 0;
  std::vector<std::uint64_t> bits;

  explicit PackedRows(const SignMatrix& a)
      : cols(a.cols()), words((a.cols() + 63) / 64),
        bits(static_cast<std::size_t>(a.rows()) * words, 0) {
    for (int r = 0; r < a.rows(); ++r) {
      const std::int8_t* row = a.row(r);
      for (int c = 0; c < cols; ++c) {
        if (row[c] > 0) bits[static_cast<std::size_t>(r) * words + c / 64] |= std::uint64_t{1} << (c % 64);
      }
    }
  }

  std::int64_t dot(int r1, int r2) const {
    const std::uint64_t* a = bits.data() + static_cast<std::size_t>(r1) * words;
    const std::uint64_t* b = bits.data() + static_cast<std::size_t>(r2) * words;
    int disagree = 0;
    for (int w = 0; w < words; ++w) disagree += std::popcount(a[w] ^ b[w]);
    return cols - 2 * static_cast<std::int64_t>(disagree);
  }
};

struct EnumPartial {
  std::uint64_t visited = 0;
  std::uint64_t zero = 0;
  uint128 sum_squares = 0;
  std::unordered_map<std::int64_t, std::uint64_t> hist;
};

BigInt bigint_from_u128(uint128 v) {
  const std::uint64_t hi = static_cast<std::uint64_t>(v >> 64);
  const std::uint64_t lo = static_cast<std::uint64_t>(v);
  return (BigInt(hi) << 64) | lo;
}

}  // namespace

bool next_colex_subset(std::span<int> subset, int n) {
  const int m = static_cast<int>(subset.size());
  for (int i = 0; i < m; ++i) {
    const int limit = (i + 1 < m) ? subset[i + 1] : n;
    if (subset[i] + 1 < limit) {
      ++subset[i];
      for (int j = 0; j < i; ++j) subset[j] = j;
      return true;
    }
  }
  return false;
}

std::uint64_t colex_rank(std::span<const int> subset) {
  BigInt rank = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    rank += binomial(subset[i], static_cast<unsigned>(i + 1));
  }
  return rank.convert_to<std::uint64_t>();
}

std::vector<int> colex_unrank(std::uint64_t rank, int m, int n) {
  std::vector<int> subset(static_cast<std::size_t>(m));
  BigInt r = rank;
  for (int i = m - 1; i >= 0; --i) {
    // Largest c with C(c, i+1) <= r.
    int c = i;  // C(i, i+1) = 0
    BigInt b = 0;
    while (c + 1 < n) {
      const BigInt nb = binomial(c + 1, static_cast<unsigned>(i + 1));
      if (nb > r) break;
      ++c;
      b = nb;
    }
    subset[static_cast<std::size_t>(i)] = c;
    r -= b;
    n = c;
  }
  return subset;
}

std::int64_t det_pm1_inplace(std::int64_t* a, int m) {
  if (m <= 16) return bareiss_det<std::int64_t>(a, m);
  return static_cast<std::int64_t>(bareiss_det<int128>(a, m));
}

BigInt det_gram_inplace(std::int64_t* g, int m, std::int64_t entry_bound) {
  return run_gram_kernel(g, m, select_gram_kernel(m, entry_bound));
}

std::int64_t det_exact(const SignMatrix& a, std::span<const int> row_subset,
                       std::span<const int> col_subset) {
  const int m = static_cast<int>(row_subset.size());
  if (m != static_cast<int>(col_subset.size())) {
    throw ValidationError("det_exact: row and column subsets differ in size");
  }
  if (m < 1) throw ValidationError("det_exact: empty subset");
  if (m > kMaxMinorOrder) {
    throw ValidationError("det_exact: order " + std::to_string(m) + " exceeds supported cap " +
                          std::to_string(kMaxMinorOrder));
  }
  auto check = [](std::span<const int> s, int limit, const char* what) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] >= limit) {
        throw ValidationError(std::string("det_exact: ") + what + " index out of range");
      }
      if (i > 0 && s[i] <= s[i - 1]) {
        throw ValidationError(std::string("det_exact: ") + what +
                              " indices must be strictly increasing");
      }
    }
  };
  check(row_subset, a.rows(), "row");
  check(col_subset, a.cols(), "column");

  std::vector<std::int64_t> buf(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    const std::int8_t* row = a.row(row_subset[i]);
    for (int j = 0; j < m; ++j) buf[static_cast<std::size_t>(i) * m + j] = row[col_subset[j]];
  }
  return det_pm1_inplace(buf.data(), m);
}

BigInt gram_determinant(const SignMatrix& b) {
  if (b.rows() > b.cols()) {
    throw ValidationError("gram_determinant: requires n_rows <= n_cols");
  }
  if (b.rows() > kMaxMinorOrder) {
    throw ValidationError("gram_determinant: n_rows exceeds cap " +
                          std::to_string(kMaxMinorOrder));
  }
  const int m = b.rows();
  const PackedRows packed(b);
  std::vector<std::int64_t> g(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      g[static_cast<std::size_t>(i) * m + j] = g[static_cast<std::size_t>(j) * m + i] =
          packed.dot(i, j);
    }
  }
  return det_gram_inplace(g.data(), m, b.cols());
}

MinorStats enumerate_minors(const SignMatrix& a, int m, const EngineOptions& opts) {
  if (m < 1 || m > std::min(a.rows(), a.cols())) {
    throw ValidationError("enumerate_minors: m must be in [1, min(n_rows, n_cols)]");
  }
  if (m > kMaxMinorOrder) {
    throw ValidationError("enumerate_minors: order " + std::to_string(m) +
                          " exceeds supported cap " + std::to_string(kMaxMinorOrder));
  }
  const BigInt row_subsets = binomial(a.rows(), static_cast<unsigned>(m));
  const BigInt col_subsets = binomial(a.cols(), static_cast<unsigned>(m));
  const BigInt work = row_subsets * col_subsets;
  if (work > opts.work_cap) {
    throw BudgetError("enumerate_minors: " + work.str() + " minors exceed the work cap " +
                      std::to_string(opts.work_cap) +
                      "; for sums of squares use sum_squares_gram instead");
  }

  const std::uint64_t total_rows = row_subsets.convert_to<std::uint64_t>();
  const int threads =
      static_cast<int>(std::min<std::uint64_t>(resolve_threads(opts.threads), total_rows));
  std::vector<EnumPartial> partials(static_cast<std::size_t>(threads));

  auto worker = [&](int w, std::uint64_t lo, std::uint64_t hi) {
    EnumPartial& out = partials[static_cast<std::size_t>(w)];
    std::vector<int> rowsel = colex_unrank(lo, m, a.rows());
    std::vector<int> colsel(static_cast<std::size_t>(m));
    const std::int8_t* rowptr[kMaxMinorOrder];
    std::int64_t buf[kMaxMinorOrder * kMaxMinorOrder];
    for (std::uint64_t rank = lo; rank < hi; ++rank) {
      for (int i = 0; i < m; ++i) rowptr[i] = a.row(rowsel[static_cast<std::size_t>(i)]);
      for (int j = 0; j < m; ++j) colsel[static_cast<std::size_t>(j)] = j;
      do {
        for (int i = 0; i < m; ++i) {
          std::int64_t* bi = buf + static_cast<std::size_t>(i) * m;
          const std::int8_t* ri = rowptr[i];
          for (int j = 0; j < m; ++j) bi[j] = ri[colsel[static_cast<std::size_t>(j)]];
        }
        const std::int64_t d = m <= 16 ? bareiss_det<std::int64_t>(buf, m)
                                       : static_cast<std::int64_t>(bareiss_det<int128>(buf, m));
        ++out.visited;
        if (d == 0) {
          ++out.zero;
        } else {
          out.sum_squares += static_cast<uint128>(static_cast<int128>(d) * d);
        }
        if (opts.with_histogram) ++out.hist[d];
      } while (next_colex_subset(colsel, a.cols()));
      next_colex_subset(rowsel, a.rows());
    }
  };

  if (threads <= 1) {
    worker(0, 0, total_rows);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
      const std::uint64_t lo = total_rows * static_cast<std::uint64_t>(w) / threads;
      const std::uint64_t hi = total_rows * (static_cast<std::uint64_t>(w) + 1) / threads;
      pool.emplace_back(worker, w, lo, hi);
    }
    for (auto& t : pool) t.join();
  }

  MinorStats stats;
  stats.order_m = m;
  stats.total_count = work;
  uint128 sum_squares = 0;
  std::uint64_t zeros = 0;
  std::map<std::int64_t, BigInt> hist;
  for (const EnumPartial& p : partials) {
    zeros += p.zero;
    sum_squares += p.sum_squares;
    for (const auto& [value, count] : p.hist) hist[value] += count;
  }
  stats.zero_count = zeros;
  stats.nonzero_count = stats.total_count - zeros;
  stats.sum_squares = bigint_from_u128(sum_squares);
  if (opts.with_histogram) stats.histogram = std::move(hist);
  return stats;
}

BigInt sum_squares_gram(const SignMatrix& a, int m, const EngineOptions& opts) {
  if (m < 1 || m > a.rows()) {
    throw ValidationError("sum_squares_gram: m must be in [1, n_rows]");
  }
  if (m > kMaxMinorOrder) {
    throw ValidationError("sum_squares_gram: order " + std::to_string(m) +
                          " exceeds supported cap " + std::to_string(kMaxMinorOrder));
  }
  // With fewer columns than m every Gram determinant is zero (rank < m).
  if (m > a.cols()) return 0;

  const BigInt row_subsets = binomial(a.rows(), static_cast<unsigned>(m));
  if (row_subsets > opts.work_cap) {
    throw BudgetError("sum_squares_gram: " + row_subsets.str() +
                      " row subsets exceed the work cap " + std::to_string(opts.work_cap));
  }
  const std::uint64_t total_rows = row_subsets.convert_to<std::uint64_t>();
  const int threads =
      static_cast<int>(std::min<std::uint64_t>(resolve_threads(opts.threads), total_rows));
  const PackedRows packed(a);
  const GramKernel kernel = select_gram_kernel(m, a.cols());

  std::vector<BigInt> sums(static_cast<std::size_t>(threads), BigInt(0));
  auto worker = [&](int w, std::uint64_t lo, std::uint64_t hi) {
    BigInt local = 0;
    std::vector<int> rowsel = colex_unrank(lo, m, a.rows());
    std::vector<std::int64_t> g(static_cast<std::size_t>(m) * m);
    for (std::uint64_t rank = lo; rank < hi; ++rank) {
      for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
          g[static_cast<std::size_t>(i) * m + j] = g[static_cast<std::size_t>(j) * m + i] =
              packed.dot(rowsel[static_cast<std::size_t>(i)], rowsel[static_cast<std::size_t>(j)]);
        }
      }
      local += run_gram_kernel(g.data(), m, kernel);
      next_colex_subset(rowsel, a.rows());
    }
    sums[static_cast<std::size_t>(w)] = std::move(local);
  };

  if (threads <= 1) {
    worker(0, 0, total_rows);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
      const std::uint64_t lo = total_rows * static_cast<std::uint64_t>(w) / threads;
      const std::uint64_t hi = total_rows * (static_cast<std::uint64_t>(w) + 1) / threads;
      pool.emplace_back(worker, w, lo, hi);
    }
    for (auto& t : pool) t.join();
  }

  BigInt total = 0;
  for (const BigInt& s : sums) total += s;
  return total;
}

std::string histogram_csv(const MinorStats& stats) {
  if (!stats.histogram) {
    throw ValidationError("histogram_csv: stats carry no histogram");
  }
  std::string out = "det,count\n";
  for (const auto& [value, count] : *stats.histogram) {
    out += std::to_string(value);
    out += ',';
    out += count.str();
    out += '\n';
  }
  return out;
}

}  // namespace minorstat
