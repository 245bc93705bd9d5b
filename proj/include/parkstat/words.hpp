#ifndef PARKSTAT_WORDS_HPP
#define PARKSTAT_WORDS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parkstat/error.hpp"
#include "parkstat/text.hpp"

namespace parkstat {

/// Sorted ascending set of 1-based positions.
using IndexSet = std::vector<int>;

/// Largest n the exhaustive generators accept unless the caller raises it.
inline constexpr int kDefaultMaxN = 9;

/// An element of [n]^n. Positions and values are 1-based at the API boundary.
class Word {
 public:
  explicit Word(std::vector<int> values) : values_(std::move(values)) {
    const int n = size();
    if (n < 1) throw Error(ErrorKind::InvalidWord, "word must have at least one letter");
    for (int v : values_) {
      if (v < 1 || v > n) {
        throw Error(ErrorKind::InvalidWord,
                    "letter " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
      }
    }
  }

  int size() const noexcept { return static_cast<int>(values_.size()); }

  /// Letter at 1-based position `pos`.
  int operator()(int pos) const { return values_[static_cast<std::size_t>(pos - 1)]; }

  /// Letters in storage order (0-based container, 1-based values).
  std::span<const int> values() const noexcept { return values_; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  friend class WordCursor;
  std::vector<int> values_;
};

/// Ordered set partition (A_1, ..., A_k) of [n]; each block is kept sorted.
class OrderedPartition {
 public:
  OrderedPartition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
    if (n_ < 1) throw Error(ErrorKind::InvalidPartition, "n must be positive");
    if (blocks_.empty()) throw Error(ErrorKind::InvalidPartition, "partition needs at least one block");
    std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
    int covered = 0;
    for (auto& block : blocks_) {
      if (block.empty()) throw Error(ErrorKind::InvalidPartition, "empty block");
      std::sort(block.begin(), block.end());
      for (int x : block) {
        if (x < 1 || x > n_) throw Error(ErrorKind::InvalidPartition, "element outside [1,n]");
        if (seen[static_cast<std::size_t>(x)]) throw Error(ErrorKind::InvalidPartition, "blocks overlap");
        seen[static_cast<std::size_t>(x)] = true;
        ++covered;
      }
    }
    if (covered != n_) throw Error(ErrorKind::InvalidPartition, "blocks do not cover [1,n]");
  }

  int n() const noexcept { return n_; }
  int num_blocks() const noexcept { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }

  /// (|A_1|, ..., |A_{k-1}|); the last block is excluded.
  std::vector<std::int64_t> length_vector() const {
    std::vector<std::int64_t> lengths;
    for (std::size_t i = 0; i + 1 < blocks_.size(); ++i) {
      lengths.push_back(static_cast<std::int64_t>(blocks_[i].size()));
    }
    return lengths;
  }

  /// 1-based index of the block holding `element`.
  int block_of(int element) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), element)) return static_cast<int>(i) + 1;
    }
    throw Error(ErrorKind::InvalidPartition, "element not in partition");
  }

  /// Block sequence rotated left by `shift`.
  OrderedPartition rotated(int shift) const {
    const int k = num_blocks();
    std::vector<std::vector<int>> out;
    out.reserve(blocks_.size());
    for (int i = 0; i < k; ++i) out.push_back(blocks_[static_cast<std::size_t>(((i + shift) % k + k) % k)]);
    return OrderedPartition(n_, std::move(out));
  }

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
  friend auto operator<=>(const OrderedPartition&, const OrderedPartition&) = default;

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

// ---------------------------------------------------------------------------
// Statistics

/// The center Z(w): the maximal set x_1 < ... < x_l with w(x_i) <= i.
/// A single greedy pass suffices: position i joins iff w(i) <= |chosen| + 1.
inline IndexSet center(const Word& w) {
  IndexSet chosen;
  for (int i = 1; i <= w.size(); ++i) {
    if (w(i) <= static_cast<int>(chosen.size()) + 1) chosen.push_back(i);
  }
  return chosen;
}

inline int z(const Word& w) { return static_cast<int>(center(w).size()); }

inline int run(const Word& w) {
  const int n = w.size();
  std::vector<bool> present(static_cast<std::size_t>(n) + 2, false);
  for (int v : w.values()) present[static_cast<std::size_t>(v)] = true;
  int r = 0;
  while (r < n && present[static_cast<std::size_t>(r) + 1]) ++r;
  return r;
}

/// Positions of the last occurrences of 1, ..., run(w), ascending.
inline IndexSet run_set(const Word& w) {
  const int r = run(w);
  std::vector<int> last(static_cast<std::size_t>(r) + 1, 0);
  for (int i = 1; i <= w.size(); ++i) {
    if (w(i) <= r) last[static_cast<std::size_t>(w(i))] = i;
  }
  IndexSet out(last.begin() + 1, last.end());
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_parking(const Word& w) {
  std::vector<int> sorted(w.values().begin(), w.values().end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] > static_cast<int>(i) + 1) return false;
  }
  return true;
}

inline bool is_rook(const Word& w) { return w(1) <= run(w); }

/// Sorted distinct letters, each decreased by one.
inline std::vector<int> reduced_image(const Word& w) {
  std::vector<int> image(w.values().begin(), w.values().end());
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  for (int& x : image) --x;
  return image;
}

/// Fibers of w ordered by increasing letter.
inline OrderedPartition coimage(const Word& w) {
  const int n = w.size();
  std::vector<std::vector<int>> fibers(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) fibers[static_cast<std::size_t>(w(i))].push_back(i);
  std::vector<std::vector<int>> blocks;
  for (auto& fiber : fibers) {
    if (!fiber.empty()) blocks.push_back(std::move(fiber));
  }
  return OrderedPartition(n, std::move(blocks));
}

/// True iff q's block sequence is a cyclic rotation of p's.
inline bool same_type(const OrderedPartition& p, const OrderedPartition& q) {
  if (p.n() != q.n() || p.num_blocks() != q.num_blocks()) return false;
  const auto& a = p.blocks();
  const auto& b = q.blocks();
  const std::size_t k = a.size();
  for (std::size_t shift = 0; shift < k; ++shift) {
    bool match = true;
    for (std::size_t i = 0; i < k && match; ++i) match = a[(i + shift) % k] == b[i];
    if (match) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Exhaustive generators

inline void check_enumeration_cap(int n, int max_n) {
  if (n < 1) throw Error(ErrorKind::ParamOutOfRange, "n must be positive");
  if (n > max_n) {
    throw Error(ErrorKind::ResourceCap,
                "n=" + std::to_string(n) + " exceeds enumeration cap " + std::to_string(max_n));
  }
}

/// Lexicographic odometer over the words of [n]^n that start with a fixed prefix.
class WordCursor {
 public:
  WordCursor(int n, std::span<const int> prefix)
      : word_(std::vector<int>(static_cast<std::size_t>(n), 1)), fixed_(prefix.size()) {
    if (prefix.size() > static_cast<std::size_t>(n)) {
      throw Error(ErrorKind::ParamOutOfRange, "prefix longer than word");
    }
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (prefix[i] < 1 || prefix[i] > n) throw Error(ErrorKind::InvalidWord, "prefix letter out of range");
      word_.values_[i] = prefix[i];
    }
  }

  const Word& current() const noexcept { return word_; }

  bool advance() {
    auto& v = word_.values_;
    const int n = word_.size();
    for (std::size_t i = v.size(); i-- > fixed_;) {
      if (v[i] < n) {
        ++v[i];
        return true;
      }
      v[i] = 1;
    }
    return false;
  }

 private:
  Word word_;
  std::size_t fixed_;
};

template <typename Fn>
void for_each_word_with_prefix(int n, std::span<const int> prefix, Fn&& fn) {
  WordCursor cursor(n, prefix);
  do {
    fn(cursor.current());
  } while (cursor.advance());
}

template <typename Fn>
void for_each_word(int n, Fn&& fn, int max_n = kDefaultMaxN) {
  check_enumeration_cap(n, max_n);
  for_each_word_with_prefix(n, {}, fn);
}

template <typename Fn>
void for_each_parking(int n, Fn&& fn, int max_n = kDefaultMaxN) {
  for_each_word(n, [&](const Word& w) { if (is_parking(w)) fn(w); }, max_n);
}

template <typename Fn>
void for_each_rook(int n, Fn&& fn, int max_n = kDefaultMaxN) {
  for_each_word(n, [&](const Word& w) { if (is_rook(w)) fn(w); }, max_n);
}

inline std::vector<Word> all_words(int n, int max_n = kDefaultMaxN) {
  std::vector<Word> out;
  for_each_word(n, [&](const Word& w) { out.push_back(w); }, max_n);
  return out;
}

inline std::vector<Word> all_parking(int n, int max_n = kDefaultMaxN) {
  std::vector<Word> out;
  for_each_parking(n, [&](const Word& w) { out.push_back(w); }, max_n);
  return out;
}

inline std::vector<Word> all_rook(int n, int max_n = kDefaultMaxN) {
  std::vector<Word> out;
  for_each_rook(n, [&](const Word& w) { out.push_back(w); }, max_n);
  return out;
}

/// Every ordered partition of [n], obtained as the coimages of the packed
/// words (those whose image is an initial segment [k]).
inline std::vector<OrderedPartition> all_ordered_partitions(int n, int max_n = kDefaultMaxN) {
  std::vector<OrderedPartition> out;
  for_each_word(n, [&](const Word& w) {
    const auto rim = reduced_image(w);
    if (rim.back() == static_cast<int>(rim.size()) - 1) out.push_back(coimage(w));
  }, max_n);
  return out;
}

// ---------------------------------------------------------------------------
// Text forms: `3,4,1,1,8,3,4,1,4` and `{3,4,8}|{1,6}|{2,7,9}|{5}`

inline Word parse_word(std::string_view text) { return Word(parse_int_list(text)); }

inline std::string to_string(const Word& w) { return join_ints(w.values()); }

inline std::string format_index_set(const IndexSet& s) { return "{" + join_ints(s) + "}"; }

inline std::string to_string(const OrderedPartition& p) {
  std::string out;
  for (const auto& block : p.blocks()) {
    if (!out.empty()) out += '|';
    out += format_index_set(block);
  }
  return out;
}

inline OrderedPartition parse_partition(std::string_view text) {
  std::vector<std::vector<int>> blocks;
  int n = 0;
  for (std::string_view part : split(text, '|')) {
    part = trim(part);
    if (part.size() < 2 || part.front() != '{' || part.back() != '}') {
      throw Error(ErrorKind::ParseError, "block must be written as {a,b,...}");
    }
    auto block = parse_int_list(part.substr(1, part.size() - 2));
    n += static_cast<int>(block.size());
    blocks.push_back(std::move(block));
  }
  return OrderedPartition(n, std::move(blocks));
}

}  // namespace parkstat

#endif  // PARKSTAT_WORDS_HPP
