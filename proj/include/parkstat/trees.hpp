#ifndef PARKSTAT_TREES_HPP
#define PARKSTAT_TREES_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parkstat/error.hpp"
#include "parkstat/text.hpp"
#include "parkstat/words.hpp"

namespace parkstat {

/// Labeled tree on {0, ..., n} rooted at 0, stored as a parent assignment.
class RootedTree {
 public:
  /// `parents[i-1]` is the parent of vertex i.
  RootedTree(int n, std::vector<int> parents) : n_(n), parent_(static_cast<std::size_t>(n) + 1, -1) {
    if (n < 1) throw Error(ErrorKind::InvalidTree, "n must be positive");
    if (static_cast<int>(parents.size()) != n) {
      throw Error(ErrorKind::InvalidTree, "expected " + std::to_string(n) + " parents");
    }
    for (int v = 1; v <= n; ++v) {
      const int p = parents[static_cast<std::size_t>(v - 1)];
      if (p < 0 || p > n || p == v) {
        throw Error(ErrorKind::InvalidTree, "bad parent " + std::to_string(p) + " for vertex " + std::to_string(v));
      }
      parent_[static_cast<std::size_t>(v)] = p;
    }
    // Every vertex must reach the root in at most n steps.
    for (int v = 1; v <= n; ++v) {
      int u = v;
      int steps = 0;
      while (u != 0 && steps <= n) {
        u = parent_[static_cast<std::size_t>(u)];
        ++steps;
      }
      if (u != 0) throw Error(ErrorKind::InvalidTree, "parent assignment has a cycle");
    }
  }

  int n() const noexcept { return n_; }
  int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }

  std::vector<int> parents() const { return {parent_.begin() + 1, parent_.end()}; }

  /// Undirected neighbor lists, each sorted descending.
  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_) + 1);
    for (int v = 1; v <= n_; ++v) {
      adj[static_cast<std::size_t>(v)].push_back(parent(v));
      adj[static_cast<std::size_t>(parent(v))].push_back(v);
    }
    for (auto& list : adj) std::sort(list.rbegin(), list.rend());
    return adj;
  }

  /// Children lists, each sorted descending.
  std::vector<std::vector<int>> children() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n_) + 1);
    for (int v = n_; v >= 1; --v) out[static_cast<std::size_t>(parent(v))].push_back(v);
    return out;
  }

  friend bool operator==(const RootedTree&, const RootedTree&) = default;
  friend auto operator<=>(const RootedTree&, const RootedTree&) = default;

 private:
  int n_;
  std::vector<int> parent_;
};

// ---------------------------------------------------------------------------
// Prüfer code. Convention: repeatedly strip the largest-labeled leaf other
// than the root and record its neighbor; n - 1 letters over {0, ..., n}.

inline std::vector<int> prufer_encode(const RootedTree& t) {
  const int n = t.n();
  auto adj = t.adjacency();
  std::vector<int> degree(static_cast<std::size_t>(n) + 1);
  for (int v = 0; v <= n; ++v) degree[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
  std::vector<bool> removed(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> code;
  for (int step = 0; step + 1 < n; ++step) {
    int leaf = n;
    while (removed[static_cast<std::size_t>(leaf)] || degree[static_cast<std::size_t>(leaf)] != 1) --leaf;
    removed[static_cast<std::size_t>(leaf)] = true;
    for (int u : adj[static_cast<std::size_t>(leaf)]) {
      if (!removed[static_cast<std::size_t>(u)]) {
        code.push_back(u);
        --degree[static_cast<std::size_t>(u)];
        break;
      }
    }
  }
  return code;
}

inline RootedTree prufer_decode(int n, std::span<const int> code) {
  if (n < 1 || static_cast<int>(code.size()) != n - 1) {
    throw Error(ErrorKind::ParamOutOfRange, "Prüfer code must have n-1 letters");
  }
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
  for (int c : code) {
    if (c < 0 || c > n) throw Error(ErrorKind::ParamOutOfRange, "Prüfer letter outside {0..n}");
    ++degree[static_cast<std::size_t>(c)];
  }
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  std::vector<bool> removed(static_cast<std::size_t>(n) + 1, false);
  for (int c : code) {
    int leaf = n;
    while (leaf > 0 && (removed[static_cast<std::size_t>(leaf)] || degree[static_cast<std::size_t>(leaf)] != 1)) --leaf;
    removed[static_cast<std::size_t>(leaf)] = true;
    adj[static_cast<std::size_t>(leaf)].push_back(c);
    adj[static_cast<std::size_t>(c)].push_back(leaf);
    --degree[static_cast<std::size_t>(c)];
  }
  int last = n;
  while (removed[static_cast<std::size_t>(last)]) --last;
  adj[static_cast<std::size_t>(last)].push_back(0);
  adj[0].push_back(last);

  std::vector<int> parents(static_cast<std::size_t>(n), -1);
  std::vector<int> stack{0};
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  seen[0] = true;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        parents[static_cast<std::size_t>(v - 1)] = u;
        stack.push_back(v);
      }
    }
  }
  return RootedTree(n, std::move(parents));
}

/// Visits every tree whose Prüfer code starts with `prefix`, in lexicographic
/// code order.
template <typename Fn>
void for_each_tree_with_prefix(int n, std::span<const int> prefix, Fn&& fn) {
  const std::size_t len = static_cast<std::size_t>(n - 1);
  if (prefix.size() > len) throw Error(ErrorKind::ParamOutOfRange, "prefix longer than code");
  std::vector<int> code(len, 0);
  std::copy(prefix.begin(), prefix.end(), code.begin());
  while (true) {
    fn(prufer_decode(n, code));
    std::size_t i = len;
    while (i > prefix.size() && code[i - 1] == n) code[--i] = 0;
    if (i == prefix.size()) return;
    ++code[i - 1];
  }
}

template <typename Fn>
void for_each_tree(int n, Fn&& fn, int max_n = kDefaultMaxN) {
  check_enumeration_cap(n, max_n);
  for_each_tree_with_prefix(n, {}, fn);
}

inline std::vector<RootedTree> all_trees(int n, int max_n = kDefaultMaxN) {
  std::vector<RootedTree> out;
  for_each_tree(n, [&](const RootedTree& t) { out.push_back(t); }, max_n);
  return out;
}

// ---------------------------------------------------------------------------
// Leg

/// Vertices visited by a highest-label-first DFS from the root before it
/// first backtracks, root excluded: the maximal greedy walk from 0.
inline std::vector<int> leg_path(const RootedTree& t) {
  const auto adj = t.adjacency();
  std::vector<bool> on_path(static_cast<std::size_t>(t.n()) + 1, false);
  on_path[0] = true;
  std::vector<int> path;
  int current = 0;
  while (true) {
    int next = -1;
    for (int v : adj[static_cast<std::size_t>(current)]) {
      if (!on_path[static_cast<std::size_t>(v)]) {
        next = v;
        break;
      }
    }
    if (next < 0) return path;
    on_path[static_cast<std::size_t>(next)] = true;
    path.push_back(next);
    current = next;
  }
}

inline int leg(const RootedTree& t) { return static_cast<int>(leg_path(t).size()); }

// ---------------------------------------------------------------------------
// Text forms

inline RootedTree parse_tree(std::string_view text) {
  auto parents = parse_int_list(text);
  const int n = static_cast<int>(parents.size());
  return RootedTree(n, std::move(parents));
}

inline std::string to_string(const RootedTree& t) { return join_ints(t.parents()); }

/// Graphviz digraph with edges directed away from the root. Edges appear in
/// highest-label-first preorder of their heads.
inline std::string to_dot(const RootedTree& t) {
  std::string out = "digraph tree {\n";
  for (int v = 0; v <= t.n(); ++v) out += "  " + std::to_string(v) + ";\n";
  const auto kids = t.children();
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    if (u != 0) out += "  " + std::to_string(t.parent(u)) + " -> " + std::to_string(u) + ";\n";
    const auto& list = kids[static_cast<std::size_t>(u)];
    for (auto it = list.rbegin(); it != list.rend(); ++it) stack.push_back(*it);
  }
  out += "}\n";
  return out;
}

}  // namespace parkstat

#endif  // PARKSTAT_TREES_HPP
