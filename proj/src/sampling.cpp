#include "minorstat/sampling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <thread>
#include <vector>

#include "minorstat/construct.hpp"
#include "minorstat/errors.hpp"
#include "minorstat/minor_engine.hpp"

namespace minorstat {

namespace {

using int128 = __int128;
using uint128 = unsigned __int128;

// Laplace expansion along rows with a column mask. Exponential in m, used
// only at oracle scale (m <= 8); independent of the Bareiss engine.
int128 det_cofactor(const std::int64_t* a, int m, int row, std::uint32_t used_cols) {
  if (row == m) return 1;
  int128 acc = 0;
  int sign = 1;
  for (int c = 0; c < m; ++c) {
    if (used_cols & (std::uint32_t{1} << c)) continue;
    const std::int64_t entry = a[static_cast<std::size_t>(row) * m + c];
    if (entry != 0) {
      const int128 sub = det_cofactor(a, m, row + 1, used_cols | (std::uint32_t{1} << c));
      acc += sign * int128(entry) * sub;
    }
    sign = -sign;
  }
  return acc;
}

int128 det_cofactor(const std::int64_t* a, int m) { return det_cofactor(a, m, 0, 0); }

BigInt bigint_from_i128(int128 v) {
  const bool neg = v < 0;
  uint128 u = neg ? static_cast<uint128>(-v) : static_cast<uint128>(v);
  BigInt r = (BigInt(static_cast<std::uint64_t>(u >> 64)) << 64) +
             static_cast<std::uint64_t>(u);
  return neg ? -r : r;
}

// Draws a uniform value in [0, range) from one 64-bit stream value
// (multiply-shift; deterministic, platform independent).
std::uint64_t bounded(std::uint64_t raw, std::uint64_t range) {
  return static_cast<std::uint64_t>((uint128(raw) * range) >> 64);
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Shared Monte Carlo driver: sample_value(s) must be a pure function of the
// sample index, so any partition over workers merges to the same exact sums.
Estimate run_montecarlo(std::uint64_t samples, std::uint64_t seed, int threads,
                        const std::function<BigInt(std::uint64_t)>& sample_value) {
  if (samples < 2) {
    throw ValidationError("montecarlo: needs at least 2 samples");
  }
  struct Sums {
    BigInt x;
    BigInt x2;
  };
  const int workers = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(resolve_threads(threads)), samples));
  std::vector<Sums> partial(static_cast<std::size_t>(workers));
  auto body = [&](int w, std::uint64_t lo, std::uint64_t hi) {
    BigInt x = 0, x2 = 0;
    for (std::uint64_t s = lo; s < hi; ++s) {
      const BigInt v = sample_value(s);
      x += v;
      x2 += v * v;
    }
    partial[static_cast<std::size_t>(w)] = {std::move(x), std::move(x2)};
  };
  if (workers <= 1) {
    body(0, 0, samples);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back(body, w, samples * static_cast<std::uint64_t>(w) / workers,
                        samples * (static_cast<std::uint64_t>(w) + 1) / workers);
    }
    for (auto& t : pool) t.join();
  }
  BigInt sum_x = 0, sum_x2 = 0;
  for (const Sums& p : partial) {
    sum_x += p.x;
    sum_x2 += p.x2;
  }

  Estimate est;
  est.mean = BigRational(sum_x, samples);
  const BigInt n = samples;
  const BigInt var_num = n * sum_x2 - sum_x * sum_x;  // n(n-1) * sample variance
  const BigRational var_over_n(var_num, n * n * (n - 1));
  est.stderr_value = std::sqrt(var_over_n.convert_to<double>());
  est.samples = samples;
  est.seed = seed;
  est.exhaustive = false;
  return est;
}

Estimate exact_estimate(const BigInt& sum, const BigInt& count) {
  Estimate est;
  est.mean = BigRational(sum, count);
  est.stderr_value = 0.0;
  est.samples = count.convert_to<std::uint64_t>();
  est.exhaustive = true;
  return est;
}

}  // namespace

namespace detail {

ExhaustiveSums exhaustive_square_detsq(int m, bool normalize_first_row) {
  if (m < 1 || m > 4) {
    throw BudgetError("exhaustive square enumeration requires m <= 4");
  }
  const int free_rows = normalize_first_row ? m - 1 : m;
  const std::uint64_t patterns = std::uint64_t{1} << m;
  const std::uint64_t states = std::uint64_t{1} << (free_rows * m);

  std::int64_t buf[16];
  uint128 sum = 0;
  std::uint64_t zeros = 0;
  for (std::uint64_t state = 0; state < states; ++state) {
    std::uint64_t s = state;
    int idx = 0;
    if (normalize_first_row) {
      for (int j = 0; j < m; ++j) buf[idx++] = 1;
    }
    for (int i = 0; i < free_rows; ++i) {
      const std::uint64_t rowbits = s % patterns;
      s /= patterns;
      for (int j = 0; j < m; ++j) buf[idx++] = (rowbits >> j) & 1 ? 1 : -1;
    }
    const int128 d = det_cofactor(buf, m);
    if (d == 0) {
      ++zeros;
    } else {
      sum += static_cast<uint128>(d * d);
    }
  }

  ExhaustiveSums out;
  const unsigned lift = normalize_first_row ? static_cast<unsigned>(m) : 0;
  out.value_sum = (BigInt(static_cast<std::uint64_t>(sum >> 64)) << 64) +
                  static_cast<std::uint64_t>(sum);
  out.value_sum <<= lift;
  out.zero_count = BigInt(zeros) << lift;
  out.matrix_count = BigInt(1) << static_cast<unsigned>(m * m);
  return out;
}

ExhaustiveSums exhaustive_gram_det(int m, int n, bool normalize_first_row) {
  if (m < 1 || n < 1 || m * n > 20) {
    throw BudgetError("exhaustive gram enumeration requires m*n <= 20");
  }
  ExhaustiveSums out;
  out.matrix_count = BigInt(1) << static_cast<unsigned>(m * n);
  if (m > n) {
    // B has rank < m, so det(B B^T) = 0 for every matrix.
    out.value_sum = 0;
    out.zero_count = out.matrix_count;
    return out;
  }

  const int free_rows = normalize_first_row ? m - 1 : m;
  const std::uint64_t patterns = std::uint64_t{1} << n;
  const std::uint64_t states = std::uint64_t{1} << (free_rows * n);

  std::uint64_t rows[20];
  std::int64_t g[16];
  uint128 sum = 0;
  std::uint64_t zeros = 0;
  const std::uint64_t all_ones = patterns - 1;
  for (std::uint64_t state = 0; state < states; ++state) {
    std::uint64_t s = state;
    int idx = 0;
    if (normalize_first_row) rows[idx++] = all_ones;
    for (int i = 0; i < free_rows; ++i) {
      rows[idx++] = s % patterns;
      s /= patterns;
    }
    for (int i = 0; i < m; ++i) {
      for (int j = i; j < m; ++j) {
        const int agree = n - 2 * std::popcount(rows[i] ^ rows[j]);
        g[i * m + j] = g[j * m + i] = agree;
      }
    }
    const int128 d = det_cofactor(g, m);
    if (d == 0) {
      ++zeros;
    } else {
      sum += static_cast<uint128>(d);  // Gram determinants are nonnegative
    }
  }

  const unsigned lift = normalize_first_row ? static_cast<unsigned>(n) : 0;
  out.value_sum = (BigInt(static_cast<std::uint64_t>(sum >> 64)) << 64) +
                  static_cast<std::uint64_t>(sum);
  out.value_sum <<= lift;
  out.zero_count = BigInt(zeros) << lift;
  return out;
}

}  // namespace detail

Estimate turan_expectation(int m, const SampleMode& mode) {
  if (m < 1) throw ValidationError("turan_expectation: m must be positive");
  if (mode.exhaustive) {
    if (m > 4) {
      throw BudgetError("turan_expectation: exhaustive mode requires m <= 4; use montecarlo");
    }
    const auto sums = detail::exhaustive_square_detsq(m, true);
    return exact_estimate(sums.value_sum, sums.matrix_count);
  }
  if (m > kMaxMinorOrder) {
    throw ValidationError("turan_expectation: m exceeds cap " + std::to_string(kMaxMinorOrder));
  }
  const std::uint64_t cells = static_cast<std::uint64_t>(m) * m;
  return run_montecarlo(mode.samples, mode.seed, mode.threads, [&, m](std::uint64_t s) {
    std::int64_t buf[kMaxMinorOrder * kMaxMinorOrder];
    const std::uint64_t base = s * cells;
    for (std::uint64_t t = 0; t < cells; ++t) {
      buf[t] = (splitmix64_at(mode.seed, base + t) >> 63) ? 1 : -1;
    }
    const std::int64_t d = det_pm1_inplace(buf, m);
    return bigint_from_i128(int128(d) * d);
  });
}

Estimate singular_fraction(int m, const SampleMode& mode) {
  if (m < 1) throw ValidationError("singular_fraction: m must be positive");
  if (mode.exhaustive) {
    if (m > 4) {
      throw BudgetError("singular_fraction: exhaustive mode requires m <= 4; use montecarlo");
    }
    const auto sums = detail::exhaustive_square_detsq(m, true);
    return exact_estimate(sums.zero_count, sums.matrix_count);
  }
  if (m > kMaxMinorOrder) {
    throw ValidationError("singular_fraction: m exceeds cap " + std::to_string(kMaxMinorOrder));
  }
  const std::uint64_t cells = static_cast<std::uint64_t>(m) * m;
  return run_montecarlo(mode.samples, mode.seed, mode.threads, [&, m](std::uint64_t s) {
    std::int64_t buf[kMaxMinorOrder * kMaxMinorOrder];
    const std::uint64_t base = s * cells;
    for (std::uint64_t t = 0; t < cells; ++t) {
      buf[t] = (splitmix64_at(mode.seed, base + t) >> 63) ? 1 : -1;
    }
    return BigInt(det_pm1_inplace(buf, m) == 0 ? 1 : 0);
  });
}

Estimate gram_expectation(int m, int n, const SampleMode& mode) {
  if (m < 1 || n < 1) throw ValidationError("gram_expectation: m, n must be positive");
  if (mode.exhaustive) {
    if (m * n > 20) {
      throw BudgetError("gram_expectation: exhaustive mode requires m*n <= 20; use montecarlo");
    }
    const auto sums = detail::exhaustive_gram_det(m, n, true);
    return exact_estimate(sums.value_sum, sums.matrix_count);
  }
  if (m > n || n > 64) {
    throw ValidationError("gram_expectation: montecarlo mode requires m <= n <= 64");
  }
  const std::uint64_t cells = static_cast<std::uint64_t>(m) * n;
  return run_montecarlo(mode.samples, mode.seed, mode.threads, [&, m, n](std::uint64_t s) {
    std::vector<std::int64_t> b(cells);
    const std::uint64_t base = s * cells;
    for (std::uint64_t t = 0; t < cells; ++t) {
      b[t] = (splitmix64_at(mode.seed, base + t) >> 63) ? 1 : -1;
    }
    std::vector<std::int64_t> g(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i) {
      for (int j = i; j < m; ++j) {
        std::int64_t dot = 0;
        for (int c = 0; c < n; ++c) {
          dot += b[static_cast<std::size_t>(i) * n + c] * b[static_cast<std::size_t>(j) * n + c];
        }
        g[static_cast<std::size_t>(i) * m + j] = g[static_cast<std::size_t>(j) * m + i] = dot;
      }
    }
    return det_gram_inplace(g.data(), m, n);
  });
}

Estimate submatrix_gram_expectation(const SignMatrix& h, int n_rows, int m,
                                    const SampleMode& mode) {
  if (!is_hadamard(h)) {
    throw ValidationError("submatrix_gram_expectation: input is not a Hadamard matrix");
  }
  const int order = h.rows();
  if (m < 1 || m > n_rows || n_rows > order) {
    throw ValidationError("submatrix_gram_expectation: requires 1 <= m <= n_rows <= order");
  }
  if (!mode.exhaustive && m > kMaxMinorOrder) {
    throw ValidationError("submatrix_gram_expectation: m exceeds cap " +
                          std::to_string(kMaxMinorOrder));
  }

  if (mode.exhaustive) {
    const BigInt row_choices = binomial(order, static_cast<unsigned>(n_rows));
    const BigInt col_choices = binomial(order, static_cast<unsigned>(m));
    const BigInt pairs = row_choices * col_choices;
    // Cofactor expansion costs m! per pair; keep the whole run at desk scale.
    const bool over_budget =
        pairs > 10'000'000 || m > 8 ||
        pairs * (factorial(static_cast<unsigned>(m)) + m * m * n_rows) > 1'000'000'000;
    if (over_budget) {
      throw BudgetError("submatrix_gram_expectation: exhaustive mode over " + pairs.str() +
                        " subset pairs (m = " + std::to_string(m) +
                        ") exceeds the budget; use montecarlo");
    }
    BigInt sum = 0;
    std::vector<int> rowsel(static_cast<std::size_t>(n_rows));
    std::vector<int> colsel(static_cast<std::size_t>(m));
    std::iota(rowsel.begin(), rowsel.end(), 0);
    std::int64_t g[64];
    do {
      std::iota(colsel.begin(), colsel.end(), 0);
      int128 block_sum = 0;
      do {
        for (int a = 0; a < m; ++a) {
          for (int b = a; b < m; ++b) {
            std::int64_t dot = 0;
            for (int r : rowsel) dot += h.at(r, colsel[a]) * h.at(r, colsel[b]);
            g[a * m + b] = g[b * m + a] = dot;
          }
        }
        block_sum += det_cofactor(g, m);
      } while (next_colex_subset(colsel, order));
      sum += bigint_from_i128(block_sum);
    } while (next_colex_subset(rowsel, order));
    return exact_estimate(sum, pairs);
  }

  const std::uint64_t draws = static_cast<std::uint64_t>(n_rows) + m;
  return run_montecarlo(mode.samples, mode.seed, mode.threads, [&, n_rows, m](std::uint64_t s) {
    const std::uint64_t base = s * draws;
    // Uniform subsets via partial Fisher-Yates keyed to the sample index.
    std::vector<int> pool(static_cast<std::size_t>(order));
    std::uint64_t t = 0;
    auto pick = [&](int k) {
      std::iota(pool.begin(), pool.end(), 0);
      for (int i = 0; i < k; ++i) {
        const std::uint64_t j =
            i + bounded(splitmix64_at(mode.seed, base + t++), static_cast<std::uint64_t>(order - i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
      }
      return std::vector<int>(pool.begin(), pool.begin() + k);
    };
    const std::vector<int> rowsel = pick(n_rows);
    const std::vector<int> colsel = pick(m);
    std::int64_t g[kMaxMinorOrder * kMaxMinorOrder];
    for (int a = 0; a < m; ++a) {
      for (int b = a; b < m; ++b) {
        std::int64_t dot = 0;
        for (int r : rowsel) dot += h.at(r, colsel[static_cast<std::size_t>(a)]) *
                                    h.at(r, colsel[static_cast<std::size_t>(b)]);
        g[a * m + b] = g[b * m + a] = dot;
      }
    }
    return det_gram_inplace(g, m, n_rows);
  });
}

}  // namespace minorstat
