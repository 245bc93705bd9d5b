#ifndef PARKSTAT_LATTICE_HPP
#define PARKSTAT_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parkstat/bigint.hpp"
#include "parkstat/error.hpp"
#include "parkstat/text.hpp"
#include "parkstat/words.hpp"

namespace parkstat {

/// Parts (l_1, ..., l_k). Parts after the first are positive; the first may be
/// any integer, since shifted first parts appear in cyclic sums.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 1; i < parts_.size(); ++i) {
      if (parts_[i] < 1) {
        throw Error(ErrorKind::InvalidComposition, "part " + std::to_string(i + 1) + " must be positive");
      }
    }
  }

  int size() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  const std::vector<std::int64_t>& parts() const noexcept { return parts_; }
  std::int64_t part(int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }

  /// Cumulative sums L_1, ..., L_k.
  std::vector<std::int64_t> cumsum() const {
    std::vector<std::int64_t> sums;
    std::int64_t total = 0;
    for (std::int64_t p : parts_) sums.push_back(total += p);
    return sums;
  }

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<std::int64_t> parts_;
};

inline Composition parse_composition(std::string_view text) { return Composition(parse_int64_list(text)); }

inline std::string to_string(const Composition& c) { return join_ints(c.parts()); }

/// Sequence (x_0 = 0, x_1, ..., x_k).
using RestrictedSequence = std::vector<std::int64_t>;

inline constexpr std::uint64_t kDefaultSequenceCap = 50'000'000;

/// Visits every 0 = x_0 < x_1 < ... < x_k with x_i <= L_i, lexicographically.
template <typename Fn>
void for_each_restricted(const Composition& c, Fn&& fn) {
  const auto bound = c.cumsum();
  const std::size_t k = bound.size();
  RestrictedSequence x(k + 1, 0);
  std::size_t depth = 1;
  if (k == 0) {
    fn(static_cast<const RestrictedSequence&>(x));
    return;
  }
  x[1] = x[0];
  while (depth > 0) {
    ++x[depth];
    if (x[depth] > bound[depth - 1]) {
      --depth;
      continue;
    }
    if (depth == k) {
      fn(static_cast<const RestrictedSequence&>(x));
    } else {
      ++depth;
      x[depth] = x[depth - 1];
    }
  }
}

inline std::vector<RestrictedSequence> enumerate(const Composition& c, std::uint64_t cap = kDefaultSequenceCap) {
  std::vector<RestrictedSequence> out;
  for_each_restricted(c, [&](const RestrictedSequence& x) {
    if (out.size() >= cap) throw Error(ErrorKind::ResourceCap, "restricted sequence count exceeds cap");
    out.push_back(x);
  });
  return out;
}

inline bool contains(const Composition& c, std::span<const std::int64_t> x) {
  if (x.size() != static_cast<std::size_t>(c.size()) + 1 || x[0] != 0) return false;
  const auto bound = c.cumsum();
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (x[i] <= x[i - 1] || x[i] > bound[i - 1]) return false;
  }
  return true;
}

inline BigInt count_brute(const Composition& c, std::uint64_t cap = kDefaultSequenceCap) {
  std::uint64_t count = 0;
  for_each_restricted(c, [&](const RestrictedSequence&) {
    if (++count > cap) throw Error(ErrorKind::ResourceCap, "restricted sequence count exceeds cap");
  });
  return count;
}

/// Matrix (binom(L_i - i + shift, j - i + 1)) over rows/columns `first..last`
/// (1-based, inclusive) given the cumulative sums L.
inline BigMatrix ladder_matrix(std::span<const std::int64_t> cumulative, int first, int last, int shift) {
  BigMatrix m;
  for (int i = first; i <= last; ++i) {
    std::vector<BigInt> row;
    for (int j = first; j <= last; ++j) {
      row.push_back(binom(cumulative[static_cast<std::size_t>(i - 1)] - i + shift, j - i + 1));
    }
    m.push_back(std::move(row));
  }
  return m;
}

/// |<l_1, ..., l_k>| as the determinant of binom(L_i - i + 1, j - i + 1).
/// A nonpositive first part zeroes the first row, so the count is 0 there.
inline BigInt count_det(const Composition& c) {
  const auto sums = c.cumsum();
  return determinant(ladder_matrix(sums, 1, c.size(), 1));
}

// ---------------------------------------------------------------------------
// Recurrences between restricted-sequence counts

struct LemmaCheck {
  /// <.., l_i + 1, l_{i+1} - 1, ..> = <l> + <l_1..l_{i-1}> <l_{i+1} - 1, ..>; needs i < k, l_{i+1} > 1.
  std::optional<bool> shift;
  /// <l_1, .., l_k + 1> = <l> + <l_1, .., l_{k-1}>; always applicable for k >= 1.
  std::optional<bool> extend;
  /// <l_1 - 1, l_2, ..> = <l> - <l_1 + l_2 - 1, l_3, ..>; needs l_1 > 1.
  std::optional<bool> shrink;
};

/// Evaluates both sides of each applicable recurrence with count_det.
/// `i` (1-based, 1 <= i <= k) selects the pair touched by the shift identity.
inline LemmaCheck lemma_identities_check(const Composition& c, int i) {
  const int k = c.size();
  const auto& l = c.parts();
  if (k < 1 || i < 1 || i > k) {
    throw Error(ErrorKind::SideConditionViolated, "need k >= 1 and 1 <= i <= k");
  }
  for (std::int64_t p : l) {
    if (p < 1) throw Error(ErrorKind::SideConditionViolated, "parts must be positive");
  }
  auto slice = [&](std::size_t from, std::size_t to) {
    return std::vector<std::int64_t>(l.begin() + static_cast<std::ptrdiff_t>(from),
                                     l.begin() + static_cast<std::ptrdiff_t>(to));
  };
  const BigInt base = count_det(c);
  LemmaCheck out;

  if (i < k && l[static_cast<std::size_t>(i)] > 1) {
    auto moved = l;
    moved[static_cast<std::size_t>(i - 1)] += 1;
    moved[static_cast<std::size_t>(i)] -= 1;
    auto tail = slice(static_cast<std::size_t>(i), l.size());
    tail[0] -= 1;
    out.shift = count_det(Composition(moved)) ==
                base + count_det(Composition(slice(0, static_cast<std::size_t>(i - 1)))) *
                           count_det(Composition(tail));
  }

  {
    auto longer = l;
    longer.back() += 1;
    out.extend = count_det(Composition(longer)) == base + count_det(Composition(slice(0, l.size() - 1)));
  }

  if (l[0] > 1) {
    auto smaller = l;
    smaller[0] -= 1;
    std::vector<std::int64_t> merged;
    if (k >= 2) {
      merged.push_back(l[0] + l[1] - 1);
      for (std::size_t j = 2; j < l.size(); ++j) merged.push_back(l[j]);
    }
    // k = 1 leaves the empty composition, whose count is 1.
    out.shrink = count_det(Composition(smaller)) == base - count_det(Composition(merged));
  }
  return out;
}

/// Sum over the k rotations of |<(l_{i+1} + ... + l_{i+r}) + t, l_{i+r+1}, ..., l_{i+k-1}>|,
/// indices modulo k. Requires 0 < r < k and positive parts. `count` evaluates
/// each term (count_det by default, count_brute as a cross-check).
template <typename Counter>
BigInt cyclic_sum(const Composition& c, int r, std::int64_t t, Counter&& count) {
  const int k = c.size();
  if (r <= 0 || r >= k) throw Error(ErrorKind::ParamOutOfRange, "need 0 < r < k");
  const auto& l = c.parts();
  if (l[0] < 1) throw Error(ErrorKind::ParamOutOfRange, "parts must be positive");
  auto at = [&](int index) { return l[static_cast<std::size_t>(((index - 1) % k + k) % k)]; };
  BigInt total = 0;
  for (int i = 0; i < k; ++i) {
    std::int64_t head = t;
    for (int j = 1; j <= r; ++j) head += at(i + j);
    std::vector<std::int64_t> parts{head};
    for (int j = i + r + 1; j <= i + k - 1; ++j) parts.push_back(at(j));
    const Composition term(std::move(parts));
    // A nonpositive shifted head denotes the empty set.
    if (term.part(1) >= 1) total += count(term);
  }
  return total;
}

inline BigInt cyclic_sum(const Composition& c, int r, std::int64_t t) {
  return cyclic_sum(c, r, t, [](const Composition& term) { return count_det(term); });
}

// ---------------------------------------------------------------------------
// Counting words with a prescribed coimage or type

/// Parking functions with coimage exactly p: the restricted sequences of the
/// length-vector, since w parks iff its reduced image lies in <|A_1|, ..., |A_{k-1}|>.
inline BigInt count_pf_coimage(const OrderedPartition& p) {
  return count_det(Composition(p.length_vector()));
}

/// Run-r parking functions with coimage exactly p.
inline BigInt count_pf_run_coimage(const OrderedPartition& p, int r) {
  const int k = p.num_blocks();
  if (r < 1) throw Error(ErrorKind::ParamOutOfRange, "r must be positive");
  if (r > k) return 0;
  const auto sums = Composition(p.length_vector()).cumsum();
  return determinant(ladder_matrix(sums, r, k - 1, 0));
}

/// Rook words with coimage exactly p: the first letter names block i + 1, the
/// reduced image must start 0, 1, ..., i and the remaining k - 1 - i entries
/// are free in (i, n - 1].
inline BigInt count_rw_coimage(const OrderedPartition& p) {
  const int i = p.block_of(1) - 1;
  return binom(p.n() - 1 - i, p.num_blocks() - 1 - i);
}

/// Parking functions (equally, rook words) in one type class with k blocks.
inline BigInt type_count_pf(int n, int k) {
  if (k < 1 || k > n) throw Error(ErrorKind::ParamOutOfRange, "need 1 <= k <= n");
  return binom(n, k - 1);
}

/// Run-r parking functions (equally, rook words) in one type class with k blocks.
inline BigInt type_count_run(int n, int k, int r) {
  if (k < 1 || k > n || r < 1 || r > n) throw Error(ErrorKind::ParamOutOfRange, "need 1 <= k, r <= n");
  return r * binom(n - r - 1, k - r);
}

}  // namespace parkstat

#endif  // PARKSTAT_LATTICE_HPP
