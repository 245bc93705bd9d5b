// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "parkstat/parkstat.hpp"

namespace {

using namespace parkstat;

Word W(std::string_view digits) {
  std::vector<int> letters;
  for (char ch : digits) letters.push_back(ch - '0');
  return Word(std::move(letters));
}

Enumerator E(int n, std::vector<int> coeffs) {
  Enumerator e(n);
  for (std::size_t r = 0; r < coeffs.size(); ++r) e[static_cast<int>(r) + 1] = coeffs[r];
  return e;
}

OrderedPartition type_of(const Word& w) {
  const OrderedPartition p = coimage(w);
  OrderedPartition best = p;
  for (int s = 1; s < p.num_blocks(); ++s) best = std::min(best, p.rotated(s));
  return best;
}

std::vector<std::vector<std::int64_t>> compositions_of(int total) {
  if (total == 0) return {{}};
  std::vector<std::vector<std::int64_t>> out;
  for (unsigned mask = 0; mask < (1u << (total - 1)); ++mask) {
    std::vector<std::int64_t> parts{1};
    for (int bit = 0; bit < total - 1; ++bit) {
      if (mask & (1u << bit)) {
        parts.push_back(1);
      } else {
        ++parts.back();
      }
    }
    out.push_back(parts);
  }
  return out;
}

bool a1() {
  const Enumerator table = E(3, {4, 6, 6});
  if (!(lt(3) == table && zp(3) == table && rp(3) == table && rr(3) == table)) return false;
  const std::map<int, std::vector<std::string>> z_cells{
      {1, {"213", "221", "231", "321"}},
      {2, {"131", "132", "211", "212", "311", "312"}},
      {3, {"111", "112", "113", "121", "122", "123"}}};
  const std::map<int, std::vector<std::string>> run_cells{
      {1, {"113", "111", "131", "311"}},
      {2, {"211", "122", "221", "112", "121", "212"}},
      {3, {"321", "231", "213", "312", "132", "123"}}};
  std::set<Word> seen;
  for (const auto& [value, words] : z_cells) {
    for (const auto& text : words) {
      const Word w = W(text);
      if (!is_parking(w) || z(w) != value) return false;
      seen.insert(w);
    }
  }
  const auto parking = all_parking(3);
  if (seen.size() != 16 || seen != std::set<Word>(parking.begin(), parking.end())) return false;
  for (const auto& [value, words] : run_cells) {
    for (const auto& text : words) {
      if (run(W(text)) != value) return false;
    }
  }
  return true;
}

bool a2() {
  for (int n = 1; n <= 6; ++n) {
    const Enumerator trees = lt(n);
    const auto census = word_census(n);
    if (!(trees == census.zp && census.zp == census.rp && census.rp == census.rr)) return false;
    if (trees.total() != ipow(n + 1, static_cast<unsigned>(n - 1))) return false;
  }
  return lt(6).total() == 16807;
}

bool a3() {
  for (int n = 1; n <= 60; ++n) {
    BigInt sum = 0;
    for (int r = 1; r <= n; ++r) {
      const BigInt value = coeff_inclusion_exclusion(n, r);
      if (coeff_composition_sum(n, r) != value) return false;
      sum += value;
    }
    if (sum != ipow(n + 1, static_cast<unsigned>(n - 1))) return false;
  }
  return true;
}

bool a4() {
  for (int n = 1; n <= 6; ++n) {
    std::set<RootedTree> images;
    bool ok = true;
    for_each_parking(n, [&](const Word& w) {
      const BurnTrace trace = dfs_burn(w);
      auto path = leg_path(trace.tree);
      std::sort(path.begin(), path.end());
      ok = ok && leg(trace.tree) == z(w) && path == center(w) && unburn(trace.tree) == w;
      images.insert(trace.tree);
    });
    if (!ok) return false;
    if (n <= 5) {
      const auto trees = all_trees(n);
      if (images != std::set<RootedTree>(trees.begin(), trees.end())) return false;
    }
  }
  return true;
}

bool a5() {
  for (int n = 1; n <= 5; ++n) {
    bool ok = true;
    std::set<Word> parking_images;
    for_each_word(n, [&](const Word& w) {
      const Word f = phi(w);
      const Word g = psi(w);
      ok = ok && psi(f) == w && phi(g) == w;
      ok = ok && run(f) == z(w) && run_set(f) == center(w);
      ok = ok && z(g) == run(w) && center(g) == run_set(w);
      if (is_parking(w)) {
        ok = ok && is_parking(f);
        parking_images.insert(f);
      }
    });
    if (!ok || parking_images.size() != all_parking(n).size()) return false;
  }
  return true;
}

bool a6() {
  const Word w = W("341183414");
  const BurnTrace trace = dfs_burn(w);
  const std::vector<int> burnt_prefix(trace.burnt_order.begin(), trace.burnt_order.begin() + 7);
  return to_string(phi(w)) == "2,1,5,2,8,1,6,3,4" && to_string(psi(w)) == "3,4,2,2,8,3,4,1,4" &&
         run_set(w) == IndexSet{8} && center(w) == IndexSet{3, 4, 6, 7, 8, 9} &&
         join_ints(t_code(std::vector<int>{5, 2, 1, 6, 3, 4})) == "1,1,3,4,1,4" &&
         join_ints(t_decode(std::vector<int>{1, 1, 3, 4, 1, 4})) == "5,2,1,6,3,4" &&
         burnt_prefix == std::vector<int>{0, 8, 4, 3, 9, 6, 7};
}

bool a7() {
  for (int total = 0; total <= 9; ++total) {
    for (const auto& parts : compositions_of(total)) {
      if (count_det(Composition(parts)) != count_brute(Composition(parts))) return false;
    }
  }
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::int64_t> parts(1 + rng() % 5);
    for (auto& p : parts) p = static_cast<std::int64_t>(1 + rng() % 6);
    const Composition c(parts);
    for (int i = 1; i <= c.size(); ++i) {
      const LemmaCheck check = lemma_identities_check(c, i);
      for (const auto& flag : {check.shift, check.extend, check.shrink}) {
        if (flag && !*flag) return false;
      }
    }
  }
  if (cyclic_sum(Composition({3, 1, 5, 2, 4}), 3, -3) != 165) return false;
  if (cyclic_sum(Composition({2, 1, 7, 3, 2}), 3, -3) != 165) return false;
  for (int n = 2; n <= 10; ++n) {
    std::map<std::tuple<int, int, int>, BigInt> seen;
    for (const auto& parts : compositions_of(n)) {
      const int k = static_cast<int>(parts.size());
      if (k > 4) continue;
      for (const auto& [r, t] : std::vector<std::pair<int, int>>{{1, 0}, {2, -2}, {3, -3}}) {
        if (r >= k) continue;
        const BigInt value = cyclic_sum(Composition(parts), r, t);
        const auto [it, inserted] = seen.emplace(std::make_tuple(k, r, t), value);
        if (!inserted && it->second != value) return false;
      }
    }
  }
  return true;
}

bool a8() {
  for (int n = 1; n <= 5; ++n) {
    std::map<OrderedPartition, int> pf_class, rw_class;
    std::map<std::pair<OrderedPartition, int>, int> pf_run_class, rw_run_class;
    std::map<OrderedPartition, int> pf_exact, rw_exact;
    std::map<std::pair<OrderedPartition, int>, int> pf_run_exact;
    for_each_word(n, [&](const Word& w) {
      const OrderedPartition type = type_of(w);
      const OrderedPartition p = coimage(w);
      if (is_parking(w)) {
        ++pf_class[type];
        ++pf_run_class[{type, run(w)}];
        ++pf_exact[p];
        ++pf_run_exact[{p, run(w)}];
      }
      if (is_rook(w)) {
        ++rw_class[type];
        ++rw_run_class[{type, run(w)}];
        ++rw_exact[p];
      }
    });
    for (const auto& p : all_ordered_partitions(n)) {
      const int k = p.num_blocks();
      if (count_pf_coimage(p) != pf_exact[p] || count_rw_coimage(p) != rw_exact[p]) return false;
      for (int r = 1; r <= n; ++r) {
        if (count_pf_run_coimage(p, r) != pf_run_exact[{p, r}]) return false;
      }
      OrderedPartition type = p;
      for (int s = 1; s < k; ++s) type = std::min(type, p.rotated(s));
      if (type != p) continue;
      if (pf_class[type] != type_count_pf(n, k) || rw_class[type] != type_count_pf(n, k)) return false;
      for (int r = 1; r <= n; ++r) {
        const BigInt expected = type_count_run(n, k, r);
        if (pf_run_class[{type, r}] != expected || rw_run_class[{type, r}] != expected) return false;
      }
    }
  }
  return true;
}

std::string g_note;

bool a9() {
  for (int n = 1; n <= 6; ++n) {
    std::map<OrderedPartition, std::set<Word>> rook_by_type, image_by_type;
    std::map<Word, Word> preimage;
    bool ok = true;
    for_each_word(n, [&](const Word& w) {
      if (is_rook(w)) rook_by_type[type_of(w)].insert(w);
      if (!is_parking(w)) return;
      const Word image = cyclic_to_rook(w);
      ok = ok && is_rook(image) && type_of(image) == type_of(w);
      image_by_type[type_of(w)].insert(image);
      const auto [it, inserted] = preimage.emplace(image, w);
      if (!inserted && ok) {
        g_note = " " + to_string(it->second) + " and " + to_string(w) + " both map to " + to_string(image);
        ok = false;
      }
    });
    if (!ok || rook_by_type != image_by_type) return false;
  }
  return true;
}

std::string verify_output(const std::string& threads) {
  std::ostringstream out, err;
  cli::run({"verify", "--n", "1..5", "--seed", "42", "--threads", threads}, out, err);
  return out.str();
}

bool a10() {
  const std::string first = verify_output("1");
  return first.find("overall: PASS") != std::string::npos && verify_output("1") == first &&
         verify_output("4") == first;
}

struct Criterion {
  const char* id;
  const char* description;
  int limit_seconds;
  bool (*check)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"A1", "n=3 enumerators and center/run cells", 1, a1},
      {"A2", "lt = zp = rp = rr with mass (n+1)^(n-1), n <= 6", 30, a2},
      {"A3", "composition sum = inclusion-exclusion, n <= 60", 5, a3},
      {"A4", "DFS-burning: leg = z, leg path = center, unburn inverts, n <= 6", 60, a4},
      {"A5", "phi/psi mutually inverse and exchange center with run, n <= 5", 10, a5},
      {"A6", "worked-example goldens", 1, a6},
      {"A7", "restricted-sequence counts, recurrences and cyclic sums", 60, a7},
      {"A8", "type-class and coimage counts, n <= 5", 30, a8},
      {"A9", "cyclic shift is a bijection PF -> RW per type class, n <= 6", 60, a9},
      {"A10", "verify --n 1..5 --seed 42 is byte-identical across runs and threads", 60, a10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    bool passed = false;
    std::string note;
    g_note.clear();
    try {
      passed = c.check();
    } catch (const std::exception& e) {
      note = std::string(" exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    if (passed && !in_time) note = " over time limit";
    note += g_note;
    const bool ok = passed && in_time;
    failures += ok ? 0 : 1;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (ok ? "[PASS] " : "[FAIL] ") << c.id << " " << c.description << " (" << seconds << " s, limit "
         << c.limit_seconds << " s)" << note;
    std::cout << line.str() << "\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
