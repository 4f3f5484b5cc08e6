#include "minorstat/bounds.hpp"

#include <stdexcept>

namespace minorstat {

BigInt ZFormula::integer() const {
  if (denominator(value) != 1) {
    throw ValidationError("ZFormula: value " + numerator(value).str() + "/" +
                          denominator(value).str() + " is not integral");
  }
  return numerator(value);
}

BigRational mean_square_bound(int n, int m) {
  if (m < 1 || m > n) {
    throw ValidationError("mean_square_bound: requires 1 <= m <= n");
  }
  const BigRational direct(big_pow(n, static_cast<unsigned>(m)),
                           binomial(n, static_cast<unsigned>(m)));
  BigRational product = factorial(static_cast<unsigned>(m));
  for (int k = 1; k < m; ++k) product *= BigRational(n, n - k);
  if (direct != product) {
    throw std::logic_error("mean_square_bound: evaluation routes disagree");
  }
  return direct;
}

BigRational y_upper_bound(int n, int m) {
  if (m <= 1 || m > n) {
    throw ValidationError("y_upper_bound: requires 1 < m <= n");
  }
  return BigRational(4 * big_pow(n, static_cast<unsigned>(m)) *
                         binomial(n, static_cast<unsigned>(m)),
                     big_pow(4, static_cast<unsigned>(m)));
}

BigRational z_lower_bound(int n, int m) {
  if (m <= 1 || m > n) {
    throw ValidationError("z_lower_bound: requires 1 < m <= n");
  }
  const BigInt c = binomial(n, static_cast<unsigned>(m));
  return c * (BigRational(c) - BigRational(4 * big_pow(n, static_cast<unsigned>(m)),
                                           big_pow(4, static_cast<unsigned>(m))));
}

namespace {

// C(n,m) > 4 (n/4)^m, compared as C(n,m) 4^m > 4 n^m in integers.
bool zero_minor_criterion(int n, int m) {
  return binomial(n, static_cast<unsigned>(m)) * big_pow(4, static_cast<unsigned>(m)) >
         4 * big_pow(n, static_cast<unsigned>(m));
}

}  // namespace

int n0_threshold(int m) {
  if (m < 2 || m > 6) {
    throw ValidationError("n0_threshold: m must be in [2, 6]");
  }
  int n = m;
  while (!zero_minor_criterion(n, m)) ++n;
  return n;
}

BigRational density_pm(int m) {
  if (m < 2) throw ValidationError("density_pm: requires m >= 2");
  return 1 - BigRational(factorial(static_cast<unsigned>(m)),
                         big_pow(4, static_cast<unsigned>(m - 1)));
}

BigRational density_pm_hat(int m) {
  if (m < 2) throw ValidationError("density_pm_hat: requires m >= 2");
  const BigInt denom = big_pow(2, static_cast<unsigned>(m - 1));
  BigRational prod = 1;
  for (int k = 1; k < m; ++k) prod *= 1 - BigRational(k, denom);
  return 1 - prod;
}

ZFormula z2_exact(std::int64_t n) {
  if (n < 2) throw ValidationError("z2_exact: requires n >= 2");
  ZFormula out;
  const BigInt nn = n;
  out.value = BigRational(nn * nn * (nn - 1) * (nn - 2), 8);
  out.hadamard_feasible_order = n == 1 || n == 2 || n % 4 == 0;
  return out;
}

ZFormula z3_exact(std::int64_t n) {
  if (n < 3) throw ValidationError("z3_exact: requires n >= 3");
  ZFormula out;
  const BigInt nn = n;
  out.value = BigRational(nn * nn * (nn - 1) * (nn - 2) * (nn - 4) * (5 * nn - 4), 288);
  out.hadamard_feasible_order = n % 4 == 0;
  return out;
}

std::vector<Table1Row> table1(int m_max) {
  if (m_max < 2 || m_max > 6) {
    throw ValidationError("table1: m_max must be in [2, 6]");
  }
  std::vector<Table1Row> rows;
  for (int m = 2; m <= m_max; ++m) {
    Table1Row row;
    row.m = m;
    row.p_m = density_pm(m);
    row.p_m_hat = density_pm_hat(m);
    row.n0 = n0_threshold(m);
    row.pigeonhole_threshold = (std::int64_t{1} << (m - 1)) + 1;
    row.p_m_rendered = fixed_decimal(row.p_m, 4);
    row.p_m_hat_rendered = fixed_decimal(row.p_m_hat, 4);
    rows.push_back(std::move(row));
  }
  return rows;
}

BoundsReport bounds_report(const SignMatrix& a, int m, const EngineOptions& opts) {
  if (!a.square()) {
    throw ValidationError("bounds_report: requires a square matrix");
  }
  if (m < 2 || m > a.rows()) {
    throw ValidationError("bounds_report: requires 2 <= m <= n");
  }
  const int n = a.rows();
  const MinorStats stats = enumerate_minors(a, m, opts);

  BoundsReport report;
  report.n = n;
  report.m = m;
  report.observed_mean_sq = BigRational(stats.sum_squares, stats.total_count);
  report.bound_mean_sq = mean_square_bound(n, m);
  report.is_hadamard = minorstat::is_hadamard(a);
  report.equality_attained = report.observed_mean_sq == report.bound_mean_sq;
  report.turan_floor = factorial(static_cast<unsigned>(m));
  report.y_observed = stats.nonzero_count;
  report.y_upper = y_upper_bound(n, m);
  report.z_observed = stats.zero_count;
  report.z_lower = z_lower_bound(n, m);
  return report;
}

std::vector<ComplementEntry> complement_check(const SignMatrix& h, const EngineOptions& opts) {
  if (!is_hadamard(h)) {
    throw ValidationError("complement_check: input is not a Hadamard matrix");
  }
  const int n = h.rows();
  std::vector<BigInt> z(static_cast<std::size_t>(n), BigInt(0));
  EngineOptions census = opts;
  census.with_histogram = false;
  for (int m = 1; m < n; ++m) {
    z[static_cast<std::size_t>(m)] = enumerate_minors(h, m, census).zero_count;
  }
  std::vector<ComplementEntry> entries;
  entries.reserve(static_cast<std::size_t>(n - 1));
  for (int m = 1; m < n; ++m) {
    ComplementEntry e;
    e.m = m;
    e.z_m = z[static_cast<std::size_t>(m)];
    e.z_complement = z[static_cast<std::size_t>(n - m)];
    e.equal = e.z_m == e.z_complement;
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace minorstat
