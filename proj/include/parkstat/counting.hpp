#ifndef PARKSTAT_COUNTING_HPP
#define PARKSTAT_COUNTING_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "parkstat/bigint.hpp"
#include "parkstat/error.hpp"
#include "parkstat/parallel.hpp"
#include "parkstat/trees.hpp"
#include "parkstat/words.hpp"

namespace parkstat {

/// Polynomial sum_r coeffs[r] t^r with 0 <= r <= n.
struct Enumerator {
  int n = 0;
  std::vector<BigInt> coeffs;

  explicit Enumerator(int n_ = 0) : n(n_), coeffs(static_cast<std::size_t>(n_) + 1, 0) {}

  const BigInt& operator[](int r) const { return coeffs[static_cast<std::size_t>(r)]; }
  BigInt& operator[](int r) { return coeffs[static_cast<std::size_t>(r)]; }

  BigInt total() const {
    BigInt sum = 0;
    for (const auto& c : coeffs) sum += c;
    return sum;
  }

  friend bool operator==(const Enumerator&, const Enumerator&) = default;
};

/// Human-readable form, e.g. "4t + 6t^2 + 6t^3".
inline std::string to_string(const Enumerator& e) {
  std::string out;
  for (int r = 0; r <= e.n; ++r) {
    if (e[r] == 0) continue;
    if (!out.empty()) out += " + ";
    const bool unit = e[r] == 1 && r > 0;
    if (!unit) out += to_decimal(e[r]);
    if (r >= 1) out += "t";
    if (r >= 2) out += "^" + std::to_string(r);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Brute-force enumerators

/// One pass over [n]^n classifying parking functions by center size and by
/// run, and rook words by run.
struct WordCensus {
  Enumerator zp, rp, rr;
};

namespace detail {

struct ShardCounts {
  std::vector<std::uint64_t> zp, rp, rr;
};

inline Enumerator to_enumerator(int n, const std::vector<std::uint64_t>& counts) {
  Enumerator e(n);
  for (int r = 0; r <= n; ++r) e[r] = counts[static_cast<std::size_t>(r)];
  return e;
}

}  // namespace detail

inline WordCensus word_census(int n, int threads = 1, int max_n = kDefaultMaxN) {
  check_enumeration_cap(n, max_n);
  const auto shards = run_shards<detail::ShardCounts>(n, threads, [n](int shard) {
    detail::ShardCounts counts{std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0),
                               std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0),
                               std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0)};
    const std::array<int, 1> prefix{shard + 1};
    for_each_word_with_prefix(n, prefix, [&](const Word& w) {
      const bool parking = is_parking(w);
      const int r = run(w);
      if (parking) {
        ++counts.zp[static_cast<std::size_t>(z(w))];
        ++counts.rp[static_cast<std::size_t>(r)];
      }
      if (w(1) <= r) ++counts.rr[static_cast<std::size_t>(r)];
    });
    return counts;
  });
  std::vector<std::uint64_t> zp(static_cast<std::size_t>(n) + 1, 0), rp = zp, rr = zp;
  for (const auto& s : shards) {
    for (std::size_t r = 0; r < zp.size(); ++r) {
      zp[r] += s.zp[r];
      rp[r] += s.rp[r];
      rr[r] += s.rr[r];
    }
  }
  return {detail::to_enumerator(n, zp), detail::to_enumerator(n, rp), detail::to_enumerator(n, rr)};
}

/// Trees on {0..n} counted by leg, sharded by the first Prüfer letter.
inline Enumerator lt(int n, int threads = 1, int max_n = kDefaultMaxN) {
  check_enumeration_cap(n, max_n);
  const int num_shards = n >= 2 ? n + 1 : 1;
  const auto shards = run_shards<std::vector<std::uint64_t>>(num_shards, threads, [n](int shard) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    auto tally = [&](const RootedTree& t) { ++counts[static_cast<std::size_t>(leg(t))]; };
    if (n >= 2) {
      const std::array<int, 1> prefix{shard};
      for_each_tree_with_prefix(n, prefix, tally);
    } else {
      for_each_tree_with_prefix(n, {}, tally);
    }
    return counts;
  });
  std::vector<std::uint64_t> merged(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& s : shards) {
    for (std::size_t r = 0; r < merged.size(); ++r) merged[r] += s[r];
  }
  return detail::to_enumerator(n, merged);
}

inline Enumerator zp(int n, int threads = 1, int max_n = kDefaultMaxN) { return word_census(n, threads, max_n).zp; }
inline Enumerator rp(int n, int threads = 1, int max_n = kDefaultMaxN) { return word_census(n, threads, max_n).rp; }
inline Enumerator rr(int n, int threads = 1, int max_n = kDefaultMaxN) { return word_census(n, threads, max_n).rr; }

// ---------------------------------------------------------------------------
// Closed forms for the coefficient of t^r

inline void check_coefficient_params(int n, int r) {
  if (n < 1 || r < 1 || r > n) {
    throw Error(ErrorKind::ParamOutOfRange,
                "need 1 <= r <= n, got n=" + std::to_string(n) + " r=" + std::to_string(r));
  }
}

/// r! times the complete homogeneous sum over e_1 + ... + e_r = n - r of
/// (n-1)^{e_1} ... (n-r)^{e_r}. Each weight is folded in with the prefix
/// recurrence h[s] += x h[s-1], so no composition is listed explicitly.
inline BigInt coeff_composition_sum(int n, int r) {
  check_coefficient_params(n, r);
  const int degree = n - r;
  std::vector<BigInt> h(static_cast<std::size_t>(degree) + 1, 0);
  h[0] = 1;
  for (int m = 1; m <= r; ++m) {
    const BigInt x = n - m;
    for (int s = 1; s <= degree; ++s) h[static_cast<std::size_t>(s)] += x * h[static_cast<std::size_t>(s - 1)];
  }
  return factorial(r) * h[static_cast<std::size_t>(degree)];
}

/// r * sum_{j=0}^{r-1} (-1)^j binom(r-1, j) (n-1-j)^{n-1}.
inline BigInt coeff_inclusion_exclusion(int n, int r) {
  check_coefficient_params(n, r);
  BigInt sum = 0;
  for (int j = 0; j < r; ++j) {
    const BigInt term = binom(r - 1, j) * ipow(n - 1 - j, static_cast<unsigned>(n - 1));
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return r * sum;
}

/// Coefficients r = 1..n from the inclusion-exclusion form; r = 0 is zero.
inline Enumerator closed_form(int n) {
  Enumerator e(n);
  for (int r = 1; r <= n; ++r) e[r] = coeff_inclusion_exclusion(n, r);
  return e;
}

// ---------------------------------------------------------------------------
// Cross-verification

struct TheoremCheck {
  std::string name;
  std::string claim;
  bool passed = false;
};

struct TheoremReport {
  int n = 0;
  Enumerator lt, zp, rp, rr;
  Enumerator composition_sum, inclusion_exclusion;
  std::vector<TheoremCheck> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

/// Computes every enumerator by brute force (one pass over trees, one over
/// words) plus both closed forms, and records each claimed equality.
/// Failures are report content, not exceptions.
inline TheoremReport verify_theorems(int n, int threads = 1, int max_n = kDefaultMaxN) {
  TheoremReport report;
  report.n = n;
  report.lt = lt(n, threads, max_n);
  auto census = word_census(n, threads, max_n);
  report.zp = std::move(census.zp);
  report.rp = std::move(census.rp);
  report.rr = std::move(census.rr);
  report.composition_sum = Enumerator(n);
  report.inclusion_exclusion = Enumerator(n);
  for (int r = 1; r <= n; ++r) {
    report.composition_sum[r] = coeff_composition_sum(n, r);
    report.inclusion_exclusion[r] = coeff_inclusion_exclusion(n, r);
  }
  const BigInt mass = ipow(n + 1, static_cast<unsigned>(n - 1));
  report.checks = {
      {"leg-center", "trees by leg = parking functions by center size", report.lt == report.zp},
      {"center-run", "parking functions by center size = by run", report.zp == report.rp},
      {"run-rook", "parking functions by run = rook words by run", report.rp == report.rr},
      {"closed-forms", "composition sum = inclusion-exclusion for every r",
       report.composition_sum == report.inclusion_exclusion},
      {"census-closed", "brute-force coefficients = closed form", report.rr == report.inclusion_exclusion},
      {"mass", "total mass = (n+1)^(n-1)", report.lt.total() == mass && report.rr.total() == mass},
  };
  return report;
}

}  // namespace parkstat

#endif  // PARKSTAT_COUNTING_HPP
