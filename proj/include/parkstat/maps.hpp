#ifndef PARKSTAT_MAPS_HPP
#define PARKSTAT_MAPS_HPP

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parkstat/error.hpp"
#include "parkstat/trees.hpp"
#include "parkstat/words.hpp"

namespace parkstat {

using Edge = std::pair<int, int>;

/// Output of the DFS-burning algorithm on the complete graph over {0..n}.
struct BurnTrace {
  RootedTree tree;
  std::vector<int> burnt_order;      // starts with the root 0
  std::vector<Edge> tree_edges;      // (parent, child) in burn order
  std::vector<Edge> dampened_edges;  // (caller, vertex) each time a potential dropped
};

/// Runs the DFS-burning algorithm with potential w - 1. Each call sweeps the
/// other vertices from the largest label down: an unburnt vertex with zero
/// potential is burnt and explored at once, any other unburnt vertex loses
/// one unit of potential. Throws NotParking if some vertex stays unburnt.
inline BurnTrace dfs_burn(const Word& w) {
  const int n = w.size();
  std::vector<int> potential(static_cast<std::size_t>(n) + 1, 0);
  for (int j = 1; j <= n; ++j) potential[static_cast<std::size_t>(j)] = w(j) - 1;
  std::vector<bool> burnt(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> parents(static_cast<std::size_t>(n), -1);
  std::vector<int> order{0};
  std::vector<Edge> tree_edges;
  std::vector<Edge> dampened;
  burnt[0] = true;

  std::function<void(int)> dfs_from = [&](int i) {
    for (int j = n; j >= 0; --j) {
      if (j == i || burnt[static_cast<std::size_t>(j)]) continue;
      if (potential[static_cast<std::size_t>(j)] == 0) {
        burnt[static_cast<std::size_t>(j)] = true;
        order.push_back(j);
        tree_edges.emplace_back(i, j);
        parents[static_cast<std::size_t>(j - 1)] = i;
        dfs_from(j);
      } else {
        --potential[static_cast<std::size_t>(j)];
        dampened.emplace_back(i, j);
      }
    }
  };
  dfs_from(0);

  if (static_cast<int>(order.size()) != n + 1) {
    throw Error(ErrorKind::NotParking, to_string(w) + " leaves vertices unburnt");
  }
  return BurnTrace{RootedTree(n, std::move(parents)), std::move(order), std::move(tree_edges),
                   std::move(dampened)};
}

/// Inverse of dfs_burn: replays the sweep with the tree deciding which
/// vertex burns; each letter is one more than the dampenings its vertex took.
inline Word unburn(const RootedTree& t) {
  const int n = t.n();
  std::vector<bool> burnt(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> dampenings(static_cast<std::size_t>(n) + 1, 0);
  burnt[0] = true;
  std::function<void(int)> dfs_from = [&](int i) {
    for (int j = n; j >= 1; --j) {
      if (j == i || burnt[static_cast<std::size_t>(j)]) continue;
      if (t.parent(j) == i) {
        burnt[static_cast<std::size_t>(j)] = true;
        dfs_from(j);
      } else {
        ++dampenings[static_cast<std::size_t>(j)];
      }
    }
  };
  dfs_from(0);
  std::vector<int> letters(dampenings.begin() + 1, dampenings.end());
  for (int& a : letters) ++a;
  return Word(std::move(letters));
}

// ---------------------------------------------------------------------------
// Permutation code t_k: S_k -> [1] x [2] x ... x [k]

inline void check_permutation(std::span<const int> p) {
  const int k = static_cast<int>(p.size());
  std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
  for (int v : p) {
    if (v < 1 || v > k || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorKind::InvalidPermutation, "not a permutation of [" + std::to_string(k) + "]");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

/// code[v-1] = number of entries at or before v's position that are <= v.
inline std::vector<int> t_code(std::span<const int> permutation) {
  check_permutation(permutation);
  std::vector<int> code(permutation.size(), 0);
  for (std::size_t i = 0; i < permutation.size(); ++i) {
    int count = 0;
    for (std::size_t k = 0; k <= i; ++k) count += permutation[k] <= permutation[i];
    code[static_cast<std::size_t>(permutation[i] - 1)] = count;
  }
  return code;
}

/// Inserts 1, 2, ..., k in turn; when j arrives every placed value is smaller,
/// so putting it at index code[j-1] - 1 fixes how many smaller values precede it.
inline std::vector<int> t_decode(std::span<const int> code) {
  for (std::size_t j = 0; j < code.size(); ++j) {
    if (code[j] < 1 || code[j] > static_cast<int>(j) + 1) {
      throw Error(ErrorKind::CodeOutOfRange,
                  "entry " + std::to_string(j + 1) + " is " + std::to_string(code[j]));
    }
  }
  std::vector<int> permutation;
  permutation.reserve(code.size());
  for (std::size_t j = 0; j < code.size(); ++j) {
    permutation.insert(permutation.begin() + (code[j] - 1), static_cast<int>(j) + 1);
  }
  return permutation;
}

// ---------------------------------------------------------------------------
// Center <-> run bijections on [n]^n

namespace detail {

// Permutation of [n] that may name n + 1 in a slot that is never read.
class PartialPermutation {
 public:
  explicit PartialPermutation(int n) : n_(n), image_(static_cast<std::size_t>(n) + 1) {
    for (int j = 1; j <= n; ++j) image_[static_cast<std::size_t>(j)] = j;
  }
  void set(int j, int value) {
    if (j >= 1 && j <= n_) image_[static_cast<std::size_t>(j)] = value;
  }
  int operator()(int j) const {
    const int v = image_[static_cast<std::size_t>(j)];
    if (v < 1 || v > n_) throw std::logic_error("partial permutation applied outside its domain");
    return v;
  }

 private:
  int n_;
  std::vector<int> image_;
};

}  // namespace detail

/// Sends the center of w onto the run set of the result.
inline Word phi(const Word& w) {
  const IndexSet zc = center(w);
  if (zc.empty()) return w;
  const int n = w.size();
  const int k = static_cast<int>(zc.size());
  std::vector<int> code;
  for (int i : zc) code.push_back(w(i));
  const std::vector<int> b = t_decode(code);

  detail::PartialPermutation sigma(n);
  sigma.set(1, k + 1);
  for (int j = 2; j <= k + 1; ++j) sigma.set(j, b[static_cast<std::size_t>(j - 2)]);

  std::vector<int> out(static_cast<std::size_t>(n));
  std::size_t next = 0;
  for (int j = 1; j <= n; ++j) {
    if (next < zc.size() && zc[next] == j) {
      out[static_cast<std::size_t>(j - 1)] = b[next++];
    } else {
      out[static_cast<std::size_t>(j - 1)] = sigma(w(j));
    }
  }
  return Word(std::move(out));
}

/// Inverse of phi: sends the run set of w onto the center of the result.
inline Word psi(const Word& w) {
  const IndexSet rs = run_set(w);
  if (rs.empty()) return w;
  const int n = w.size();
  const int k = static_cast<int>(rs.size());
  std::vector<int> letters;
  for (int i : rs) letters.push_back(w(i));
  const std::vector<int> c = t_code(letters);

  detail::PartialPermutation tau(n);
  for (int l = 1; l <= k; ++l) tau.set(letters[static_cast<std::size_t>(l - 1)], l + 1);
  tau.set(k + 1, 1);

  std::vector<int> out(static_cast<std::size_t>(n));
  std::size_t next = 0;
  for (int j = 1; j <= n; ++j) {
    if (next < rs.size() && rs[next] == j) {
      out[static_cast<std::size_t>(j - 1)] = c[next++];
    } else {
      out[static_cast<std::size_t>(j - 1)] = tau(w(j));
    }
  }
  return Word(std::move(out));
}

/// Cyclic lemma shift from parking functions to rook words of the same type:
/// a non-rook parking function is shifted down by m = max([a_1] minus image)
/// modulo n.
inline Word cyclic_to_rook(const Word& w) {
  if (!is_parking(w)) throw Error(ErrorKind::NotParking, to_string(w) + " is not a parking function");
  if (is_rook(w)) return w;
  const int n = w.size();
  std::vector<bool> present(static_cast<std::size_t>(n) + 1, false);
  for (int v : w.values()) present[static_cast<std::size_t>(v)] = true;
  int m = w(1);
  while (present[static_cast<std::size_t>(m)]) --m;
  std::vector<int> out;
  for (int v : w.values()) out.push_back(((v - m - 1) % n + n) % n + 1);
  return Word(std::move(out));
}

}  // namespace parkstat

#endif  // PARKSTAT_MAPS_HPP
