#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tianji/eulerian.hpp"
#include "tianji/exact.hpp"

namespace tianji {

/// The matchup model. Two players, T and K, each own one horse per speed
/// class 1..n; class 1 is fastest and within a class K's horse beats T's.
/// The full capability chain is
///
///   T_{c+1} < K_{c+1} < T_c < K_c        ("<" = loses to)
///
/// so T's class-c horse wins race r exactly when c < r. K races its horses
/// in class order (K_1, ..., K_n); T races (T_{sigma(1)}, ..., T_{sigma(n)})
/// for a lineup permutation sigma, winning race r iff sigma(r) < r. A match
/// is won by whoever takes more of the n races; there are no per-race draws.

constexpr int kDefaultEnumerationLimit = 10;  // 10! = 3628800 lineups

/// Thrown when an exhaustive scan would exceed the configured lineup budget.
class EnumerationLimitError : public std::runtime_error {
 public:
  EnumerationLimitError(int n, int limit)
      : std::runtime_error("enumeration budget exceeded: n = " + std::to_string(n) +
                           " is above the limit " + std::to_string(limit)),
        limit_(limit) {}
  int limit() const { return limit_; }

 private:
  int limit_;
};

/// A bijection on {1..n} stored as its image sequence:
/// image()[k-1] = sigma(k). Construction validates bijectivity.
class Permutation {
 public:
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
    const int n = static_cast<int>(image_.size());
    if (n == 0) throw std::invalid_argument("not a bijection: empty lineup");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : image_) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
        throw std::invalid_argument("not a bijection: lineup must use each of 1.." +
                                    std::to_string(n) + " exactly once");
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
  }

  int size() const { return static_cast<int>(image_.size()); }
  /// sigma(k), 1-based.
  int operator()(int k) const { return image_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& image() const { return image_; }

 private:
  std::vector<int> image_;
};

/// sigma(k) = k: T mirrors K's order and loses every race.
inline Permutation identity_permutation(int n) {
  if (n < 1) throw std::domain_error("identity_permutation: n must be positive");
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image));
}

/// sigma(1) = n, sigma(k) = k-1 otherwise: the classic lineup that
/// sacrifices the slowest horse against K's fastest and wins the other
/// n-1 races. No lineup does better.
inline Permutation shift_permutation(int n) {
  if (n < 1) throw std::domain_error("shift_permutation: n must be positive");
  std::vector<int> image(static_cast<std::size_t>(n));
  image[0] = n;
  std::iota(image.begin() + 1, image.end(), 1);
  return Permutation(std::move(image));
}

/// Single race: T's class-t horse beats K's class-k horse iff t < k.
/// Equal classes go to K.
inline bool t_beats_k(int t_class, int k_class) { return t_class < k_class; }

enum class MatchClass { Win, Draw, Loss };

inline const char* to_string(MatchClass c) {
  switch (c) {
    case MatchClass::Win: return "WIN";
    case MatchClass::Draw: return "DRAW";
    case MatchClass::Loss: return "LOSS";
  }
  return "?";
}

struct MatchResult {
  int t_wins = 0;
  int t_losses = 0;
  MatchClass match_class = MatchClass::Loss;
};

namespace detail {

// Race wins for T under lineup sigma are the deficiencies of sigma:
// indices k with sigma(k) < k.
inline int count_deficiencies(const std::vector<int>& image) {
  int wins = 0;
  for (int k = 1; k <= static_cast<int>(image.size()); ++k)
    if (image[static_cast<std::size_t>(k - 1)] < k) ++wins;
  return wins;
}

inline MatchResult classify(const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  const int wins = count_deficiencies(image);
  const int losses = n - wins;
  MatchClass c = MatchClass::Draw;
  if (wins > losses) c = MatchClass::Win;
  if (wins < losses) c = MatchClass::Loss;
  return MatchResult{wins, losses, c};
}

}  // namespace detail

/// Full n-race match for lineup p, classified from T's side.
inline MatchResult match_result(const Permutation& p) { return detail::classify(p.image()); }

/// Number of indices k with sigma(k) > k. Not T's win count (that is the
/// deficiency count), but inversion sigma -> sigma^{-1} swaps the two
/// statistics, so they have the same census over all n! lineups and the
/// Eulerian numbers count both.
inline int excedance_count(const Permutation& p) {
  int count = 0;
  for (int k = 1; k <= p.size(); ++k)
    if (p(k) > k) ++count;
  return count;
}

/// Exact match-outcome counts for one n, with reduced probabilities.
struct OutcomeSummary {
  int n = 0;
  Int total;
  Int winning;
  Int drawing;
  Int losing;
  Rational p_win;
  Rational p_draw;
  Rational p_loss;
};

namespace detail {

inline OutcomeSummary make_summary(int n, Int total, Int winning, Int drawing, Int losing) {
  OutcomeSummary s;
  s.n = n;
  s.p_win = Rational(winning, total);
  s.p_draw = Rational(drawing, total);
  s.p_loss = Rational(losing, total);
  s.total = std::move(total);
  s.winning = std::move(winning);
  s.drawing = std::move(drawing);
  s.losing = std::move(losing);
  return s;
}

}  // namespace detail

/// Closed-form outcome counts over all n! lineups. T wins a match iff it
/// takes more than n/2 races, so the counts are partial sums of the
/// Eulerian row:
///
///   odd n:   winning = sum_{m > n/2} E(n, m),  drawing = 0
///   even n:  drawing = E(n, n/2),  losing = n!/2 by the row's symmetry
inline OutcomeSummary count_outcomes(int n) {
  EulerianRow row = eulerian_row_recurrence(n);
  Int total = factorial(n);
  Int winning = 0, drawing = 0, losing = 0;
  if (n % 2 == 1) {
    for (int m = (n + 1) / 2; m <= n - 1; ++m) winning += row.at(m);
    for (int m = 0; m <= (n - 1) / 2; ++m) losing += row.at(m);
  } else {
    drawing = row.at(n / 2);
    losing = total / 2;
    winning = total / 2 - drawing;
  }
  return detail::make_summary(n, std::move(total), std::move(winning), std::move(drawing),
                              std::move(losing));
}

/// Brute-force oracle: classify every one of the n! lineups. Independent
/// of the Eulerian formulas; must agree with count_outcomes.
inline OutcomeSummary enumerate_outcomes(int n, int limit = kDefaultEnumerationLimit) {
  if (n < 1) throw std::domain_error("enumerate_outcomes: n must be positive");
  if (n > limit) throw EnumerationLimitError(n, limit);
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  std::uint64_t winning = 0, drawing = 0, losing = 0;
  do {
    switch (detail::classify(image).match_class) {
      case MatchClass::Win: ++winning; break;
      case MatchClass::Draw: ++drawing; break;
      case MatchClass::Loss: ++losing; break;
    }
  } while (std::next_permutation(image.begin(), image.end()));
  return detail::make_summary(n, Int(winning) + Int(drawing) + Int(losing), Int(winning),
                              Int(drawing), Int(losing));
}

/// Census of T's race-win totals over all n! lineups: slot m counts the
/// lineups with exactly m race wins. Equals the Eulerian row.
inline std::vector<Int> wins_histogram(int n, int limit = kDefaultEnumerationLimit) {
  if (n < 1) throw std::domain_error("wins_histogram: n must be positive");
  if (n > limit) throw EnumerationLimitError(n, limit);
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  std::vector<std::uint64_t> histogram(static_cast<std::size_t>(n), 0);
  do {
    ++histogram[static_cast<std::size_t>(detail::count_deficiencies(image))];
  } while (std::next_permutation(image.begin(), image.end()));
  return std::vector<Int>(histogram.begin(), histogram.end());
}

/// Monte Carlo estimate over uniformly random lineups. Fractions are kept
/// exact (counts over sample size); rendering decides precision.
struct MonteCarloEstimate {
  int n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t wins = 0;
  std::uint64_t draws = 0;
  std::uint64_t losses = 0;
  Rational p_win;
  Rational p_draw;
  Rational p_loss;
};

namespace detail {

// Uniform draw from [0, bound) by rejection: retry raw 64-bit outputs
// below 2^64 mod bound, then reduce. No modulo bias, and fully
// determined by the engine's standardized output stream.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t min = (std::uint64_t(0) - bound) % bound;
  std::uint64_t x = rng();
  while (x < min) x = rng();
  return x % bound;
}

// Fisher-Yates with the rejection draw above.
inline void shuffle_lineup(std::vector<int>& image, std::mt19937_64& rng) {
  for (std::size_t i = image.size() - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(uniform_below(rng, i + 1));
    std::swap(image[i], image[j]);
  }
}

}  // namespace detail

/// Samples uniformly random lineups from a mt19937_64 seeded with `seed`.
/// Identical (n, samples, seed) produce bit-identical results on every
/// platform: the engine, the bounded draw, and the shuffle are all fixed.
inline MonteCarloEstimate monte_carlo_outcomes(int n, std::uint64_t samples, std::uint64_t seed) {
  if (n < 1) throw std::domain_error("monte_carlo_outcomes: n must be positive");
  if (samples < 1) throw std::domain_error("monte_carlo_outcomes: need at least one sample");
  std::mt19937_64 rng(seed);
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  MonteCarloEstimate e;
  e.n = n;
  e.samples = samples;
  e.seed = seed;
  for (std::uint64_t s = 0; s < samples; ++s) {
    if (n > 1) detail::shuffle_lineup(image, rng);
    switch (detail::classify(image).match_class) {
      case MatchClass::Win: ++e.wins; break;
      case MatchClass::Draw: ++e.draws; break;
      case MatchClass::Loss: ++e.losses; break;
    }
  }
  e.p_win = Rational(Int(e.wins), Int(samples));
  e.p_draw = Rational(Int(e.draws), Int(samples));
  e.p_loss = Rational(Int(e.losses), Int(samples));
  return e;
}

}  // namespace tianji
