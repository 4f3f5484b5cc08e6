#pragma once

#include <cstdint>
#include <optional>

#include "minorstat/sign_matrix.hpp"

namespace minorstat {

inline constexpr int kMaxHadamardOrder = 8192;
inline constexpr std::uint64_t kMaxRandomCells = std::uint64_t{1} << 24;

/// Name of the deterministic generator, embedded in every emitted report.
inline constexpr const char* kGeneratorName = "splitmix64";

/// Counter-based generator: the value at `index` of the splitmix64 stream for
/// `seed`. A pure function of (seed, index), identical on every platform and
/// independent of call order or thread count.
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index);

/// Deterministic trial division; intended for the Paley parameter range.
bool is_prime(std::uint64_t q);

/// Hadamard matrix of order 2^k via the doubling recursion
/// H_{2n} = [[H_n, H_n], [H_n, -H_n]], base H_1 = [[+1]]. Requires k <= 13.
SignMatrix sylvester(int k);

enum class PaleyKind { one, two };

/// Paley constructions from the quadratic-residue character of GF(q), q prime.
/// Kind one requires q = 3 (mod 4) and yields order q+1; kind two requires
/// q = 1 (mod 4) and yields order 2(q+1).
SignMatrix paley_construct(PaleyKind kind, std::uint64_t q);

/// Each entry independently +-1 under the splitmix64 stream for `seed`;
/// identical (dims, seed) always yields the identical matrix.
SignMatrix random_sign_matrix(int n_rows, int n_cols, std::uint64_t seed);

/// Parsed form of a `gen` request; see the CLI.
struct ConstructionSpec {
  enum class Kind { sylvester, paley1, paley2, random };
  Kind kind = Kind::sylvester;
  std::uint64_t parameter = 0;  // k, q, or n_rows for random
  int random_cols = 0;          // random only; 0 means square of order `parameter`
  std::optional<std::uint64_t> seed;

  SignMatrix build() const;
};

}  // namespace minorstat
