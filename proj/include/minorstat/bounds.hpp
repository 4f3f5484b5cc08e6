#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minorstat/bigint.hpp"
#include "minorstat/minor_engine.hpp"
#include "minorstat/sign_matrix.hpp"

namespace minorstat {

/// Observed minor statistics of one (matrix, m) pair against the closed-form
/// bounds, all comparisons exact.
struct BoundsReport {
  int n = 0;
  int m = 0;
  BigRational observed_mean_sq;  // sum_squares / total_count
  BigRational bound_mean_sq;     // n^m / C(n,m)
  bool is_hadamard = false;
  bool equality_attained = false;
  BigInt turan_floor;  // m!
  BigInt y_observed;
  BigRational y_upper;
  BigInt z_observed;
  BigRational z_lower;
};

struct Table1Row {
  int m = 0;
  BigRational p_m;      // 1 - 4^{1-m} m!
  BigRational p_m_hat;  // 1 - prod_{k=1}^{m-1} (1 - 2^{1-m} k)
  int n0 = 0;
  std::int64_t pigeonhole_threshold = 0;  // 2^{m-1} + 1
  std::string p_m_rendered;               // 4 decimals, round half to even
  std::string p_m_hat_rendered;
};

/// Exact evaluation of a zero-minor count formula. The formulas are proven
/// for Hadamard matrices only; hadamard_feasible_order flags whether such a
/// matrix can exist at this n.
struct ZFormula {
  BigRational value;
  bool hadamard_feasible_order = false;

  BigInt integer() const;  // throws unless the value is integral
};

struct ComplementEntry {
  int m = 0;
  BigInt z_m;
  BigInt z_complement;  // Z(n - m)
  bool equal = false;
};

/// n^m / C(n,m); checked internally against the equivalent product form
/// m! * prod_{k=1}^{m-1} n/(n-k).
BigRational mean_square_bound(int n, int m);

/// 4 (n/4)^m C(n,m); requires 1 < m <= n.
BigRational y_upper_bound(int n, int m);

/// C(n,m) (C(n,m) - 4 (n/4)^m); may be negative (then vacuous).
BigRational z_lower_bound(int n, int m);

/// Least n >= m with C(n,m) > 4 (n/4)^m, for m in [2, 6]. Outside that range
/// the criterion never fires (m! >= 4^{m-1} from m = 7 on).
int n0_threshold(int m);

BigRational density_pm(int m);
BigRational density_pm_hat(int m);

ZFormula z2_exact(std::int64_t n);  // n^2 (n-1) (n-2) / 8, n >= 2
ZFormula z3_exact(std::int64_t n);  // n^2 (n-1) (n-2) (n-4) (5n-4) / 288, n >= 3

/// Rows m = 2 .. m_max of the zero-minor density table, m_max in [2, 6].
std::vector<Table1Row> table1(int m_max);

/// Full enumeration census of `a` at order m compared against every bound;
/// requires a square with n >= m >= 2.
BoundsReport bounds_report(const SignMatrix& a, int m, const EngineOptions& opts = {});

/// Z(m) for every m in 1..n-1 of a Hadamard matrix, paired with Z(n-m).
std::vector<ComplementEntry> complement_check(const SignMatrix& h,
                                              const EngineOptions& opts = {});

}  // namespace minorstat
