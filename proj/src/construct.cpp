#include "minorstat/construct.hpp"

#include <string>
#include <vector>

namespace minorstat {

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  if (q % 2 == 0) return q == 2;
  for (std::uint64_t d = 3; d * d <= q; d += 2) {
    if (q % d == 0) return false;
  }
  return true;
}

SignMatrix sylvester(int k) {
  if (k < 0 || k > 13) {
    throw ValidationError("sylvester: k must be in [0, 13] (order cap " +
                          std::to_string(kMaxHadamardOrder) + ")");
  }
  int n = 1;
  std::vector<std::int8_t> h{1};
  for (int step = 0; step < k; ++step) {
    const int n2 = 2 * n;
    std::vector<std::int8_t> next(static_cast<std::size_t>(n2) * n2);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const std::int8_t v = h[static_cast<std::size_t>(i) * n + j];
        next[static_cast<std::size_t>(i) * n2 + j] = v;
        next[static_cast<std::size_t>(i) * n2 + n + j] = v;
        next[static_cast<std::size_t>(i + n) * n2 + j] = v;
        next[static_cast<std::size_t>(i + n) * n2 + n + j] = static_cast<std::int8_t>(-v);
      }
    }
    h = std::move(next);
    n = n2;
  }
  return SignMatrix(n, n, std::move(h));
}

namespace {

// chi(x) = x^{(q-1)/2} mod q mapped to {-1, 0, +1}.
std::vector<std::int8_t> quadratic_character(std::uint64_t q) {
  std::vector<std::int8_t> chi(q, -1);
  chi[0] = 0;
  for (std::uint64_t x = 1; x < q; ++x) {
    chi[x * x % q] = 1;
  }
  return chi;
}

}  // namespace

SignMatrix paley_construct(PaleyKind kind, std::uint64_t q) {
  if (!is_prime(q)) {
    throw ValidationError("paley: q = " + std::to_string(q) + " is not prime");
  }
  if (kind == PaleyKind::one && q % 4 != 3) {
    throw ValidationError("paley1: q = " + std::to_string(q) + " is not 3 (mod 4)");
  }
  if (kind == PaleyKind::two && q % 4 != 1) {
    throw ValidationError("paley2: q = " + std::to_string(q) + " is not 1 (mod 4)");
  }
  const std::uint64_t order = kind == PaleyKind::one ? q + 1 : 2 * (q + 1);
  if (order > static_cast<std::uint64_t>(kMaxHadamardOrder)) {
    throw ValidationError("paley: order " + std::to_string(order) + " exceeds cap " +
                          std::to_string(kMaxHadamardOrder));
  }
  const auto chi = quadratic_character(q);
  const int s = static_cast<int>(q) + 1;

  // Core (q+1) x (q+1) matrix C: bordered Jacobsthal matrix Q_ij = chi(j - i).
  // For q = 3 (mod 4), C is skew (C^T = -C) and H = I + C is Hadamard.
  // For q = 1 (mod 4), C is symmetric and H is the order-2(q+1) blow-up below.
  std::vector<std::int8_t> core(static_cast<std::size_t>(s) * s, 0);
  for (int j = 1; j < s; ++j) core[j] = 1;
  const std::int8_t first_col = kind == PaleyKind::one ? -1 : 1;
  for (int i = 1; i < s; ++i) core[static_cast<std::size_t>(i) * s] = first_col;
  for (int i = 1; i < s; ++i) {
    for (int j = 1; j < s; ++j) {
      const std::uint64_t diff = (q + static_cast<std::uint64_t>(j) - i) % q;
      core[static_cast<std::size_t>(i) * s + j] = chi[diff];
    }
  }

  if (kind == PaleyKind::one) {
    std::vector<std::int8_t> h = core;
    for (int i = 0; i < s; ++i) h[static_cast<std::size_t>(i) * s + i] = 1;
    return SignMatrix(s, s, std::move(h));
  }

  // Each entry c of C becomes c * [[+,+],[+,-]]; each diagonal zero becomes
  // [[+,-],[-,-]].
  const int n = 2 * s;
  std::vector<std::int8_t> h(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      const std::int8_t c = core[static_cast<std::size_t>(i) * s + j];
      std::int8_t b00, b01, b10, b11;
      if (i == j) {
        b00 = 1, b01 = -1, b10 = -1, b11 = -1;
      } else {
        b00 = c, b01 = c, b10 = c, b11 = static_cast<std::int8_t>(-c);
      }
      h[static_cast<std::size_t>(2 * i) * n + 2 * j] = b00;
      h[static_cast<std::size_t>(2 * i) * n + 2 * j + 1] = b01;
      h[static_cast<std::size_t>(2 * i + 1) * n + 2 * j] = b10;
      h[static_cast<std::size_t>(2 * i + 1) * n + 2 * j + 1] = b11;
    }
  }
  return SignMatrix(n, n, std::move(h));
}

SignMatrix random_sign_matrix(int n_rows, int n_cols, std::uint64_t seed) {
  if (n_rows < 1 || n_cols < 1) {
    throw ValidationError("random_sign_matrix: dimensions must be positive");
  }
  const std::uint64_t cells =
      static_cast<std::uint64_t>(n_rows) * static_cast<std::uint64_t>(n_cols);
  if (cells > kMaxRandomCells) {
    throw ValidationError("random_sign_matrix: " + std::to_string(cells) +
                          " cells exceeds cap " + std::to_string(kMaxRandomCells));
  }
  std::vector<std::int8_t> entries(cells);
  for (std::uint64_t i = 0; i < cells; ++i) {
    entries[i] = (splitmix64_at(seed, i) >> 63) ? 1 : -1;
  }
  return SignMatrix(n_rows, n_cols, std::move(entries));
}

SignMatrix ConstructionSpec::build() const {
  switch (kind) {
    case Kind::sylvester:
      return sylvester(static_cast<int>(parameter));
    case Kind::paley1:
      return paley_construct(PaleyKind::one, parameter);
    case Kind::paley2:
      return paley_construct(PaleyKind::two, parameter);
    case Kind::random: {
      const int rows = static_cast<int>(parameter);
      const int cols = random_cols > 0 ? random_cols : rows;
      return random_sign_matrix(rows, cols, seed.value_or(0));
    }
  }
  throw ValidationError("ConstructionSpec: unknown kind");
}

}  // namespace minorstat
