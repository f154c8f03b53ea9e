#pragma once

#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tianji/exact.hpp"

namespace tianji {

/// One row of the Eulerian triangle: counts[m] = E(n, m), the number of
/// permutations of {1..n} with exactly m excedances, for m = 0..n-1.
/// Reads outside that range return 0 (E(n, -1) = E(n, n) = 0).
struct EulerianRow {
  int n = 0;
  std::vector<Int> counts;

  Int at(long long m) const {
    if (m < 0 || m >= static_cast<long long>(counts.size())) return 0;
    return counts[static_cast<std::size_t>(m)];
  }
};

namespace detail {

// Rows built bottom-up from E(1) = [1] via
//   E(n, m) = (m+1) E(n-1, m) + (n-m) E(n-1, m-1).
// Cached rows are shared across calls; the cache only ever grows and is
// guarded by a mutex, so callers see the same values in any interleaving.
inline std::vector<Int> eulerian_counts(int n) {
  static std::mutex mutex;
  static std::vector<std::vector<Int>> cache;  // cache[i] = row for n = i+1

  std::lock_guard<std::mutex> lock(mutex);
  if (cache.empty()) cache.push_back({Int(1)});
  while (static_cast<int>(cache.size()) < n) {
    const std::vector<Int>& prev = cache.back();
    const int size = static_cast<int>(cache.size()) + 1;
    std::vector<Int> row(static_cast<std::size_t>(size));
    for (int m = 0; m < size; ++m) {
      Int value = 0;
      if (m < size - 1) value += (m + 1) * prev[static_cast<std::size_t>(m)];
      if (m >= 1) value += (size - m) * prev[static_cast<std::size_t>(m - 1)];
      row[static_cast<std::size_t>(m)] = std::move(value);
    }
    cache.push_back(std::move(row));
  }
  return cache[static_cast<std::size_t>(n - 1)];
}

}  // namespace detail

/// Eulerian row by the recurrence, memoizing lower rows.
inline EulerianRow eulerian_row_recurrence(int n) {
  if (n < 1) throw std::domain_error("undefined for zero horses");
  return EulerianRow{n, detail::eulerian_counts(n)};
}

/// E(n, m) by the alternating closed-form sum
///   sum_{j=0..m} (-1)^j C(n+1, j) (m-j+1)^n,
/// kept independent of the recurrence so the two paths cross-check
/// each other. Returns 0 for m outside [0, n-1].
inline Int eulerian_closed_form(int n, long long m) {
  if (n < 1) throw std::domain_error("undefined for zero horses");
  if (m < 0 || m >= n) return 0;
  Int sum = 0;
  for (long long j = 0; j <= m; ++j) {
    Int term = binomial(Int(n + 1), j) *
               boost::multiprecision::pow(Int(m - j + 1), static_cast<unsigned>(n));
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

/// Both sides of Worpitzky's identity
///   k^n = sum_{m=0..n-1} E(n, m) C(m+k, n)
/// evaluated separately; the caller asserts equality.
inline std::pair<Int, Int> worpitzky_lhs_rhs(int k, int n) {
  if (k < 1 || n < 1) throw std::domain_error("worpitzky_lhs_rhs: arguments must be positive");
  Int lhs = boost::multiprecision::pow(Int(k), static_cast<unsigned>(n));
  EulerianRow row = eulerian_row_recurrence(n);
  Int rhs = 0;
  for (int m = 0; m < n; ++m) rhs += row.at(m) * binomial(Int(m + k), n);
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace tianji
