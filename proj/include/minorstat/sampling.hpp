#pragma once

#include <cstdint>

#include "minorstat/bigint.hpp"
#include "minorstat/sign_matrix.hpp"

namespace minorstat {

/// Monte Carlo estimate or exact exhaustive value of a random-matrix
/// expectation. Exhaustive results have stderr 0 and an exact mean.
struct Estimate {
  BigRational mean;
  double stderr_value = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;  // meaningful only when exhaustive is false
  bool exhaustive = false;
};

struct SampleMode {
  bool exhaustive = true;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int threads = 0;  // Monte Carlo only; 0 = all hardware threads

  static SampleMode exhaustive_mode() { return {}; }
  static SampleMode montecarlo(std::uint64_t samples, std::uint64_t seed, int threads = 0) {
    return {false, samples, seed, threads};
  }
};

/// Mean of det(A)^2 over uniformly random m x m sign matrices (expected m!).
/// Exhaustive mode requires m <= 4 and sums all 2^{m^2} matrices exactly.
Estimate turan_expectation(int m, const SampleMode& mode);

/// Mean of det(B B^T) over uniformly random m x n sign matrices (expected
/// m! C(n,m)). Exhaustive mode requires m*n <= 20.
Estimate gram_expectation(int m, int n, const SampleMode& mode);

/// Fraction of m x m sign matrices with determinant zero.
Estimate singular_fraction(int m, const SampleMode& mode);

/// Mean of det(B^T B) over uniformly chosen n_rows x m submatrices B of the
/// Hadamard matrix h (rows and columns chosen as subsets); expected
/// h^m C(n_rows, m) / C(h, m). Exhaustive mode enumerates all subset pairs.
Estimate submatrix_gram_expectation(const SignMatrix& h, int n_rows, int m,
                                    const SampleMode& mode);

namespace detail {

/// Exact sums over a bit-encoded matrix universe; the oracle core behind the
/// exhaustive modes, deliberately independent of the minor-engine code path.
struct ExhaustiveSums {
  BigInt value_sum;     // sum of det^2 (square case) or det(B B^T) (gram case)
  BigInt zero_count;    // matrices with value 0
  BigInt matrix_count;  // universe size, 2^{m^2} or 2^{mn}
};

/// Conditioning on an all-ones first row is a pure 2^m (resp. 2^n) fold
/// speedup: column negations preserve det^2, det(B B^T), and zero-ness.
ExhaustiveSums exhaustive_square_detsq(int m, bool normalize_first_row);
ExhaustiveSums exhaustive_gram_det(int m, int n, bool normalize_first_row);

}  // namespace detail

}  // namespace minorstat
