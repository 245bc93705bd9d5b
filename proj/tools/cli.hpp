#ifndef PARKSTAT_TOOLS_CLI_HPP
#define PARKSTAT_TOOLS_CLI_HPP

#include <algorithm>
#include <chrono>
#include <climits>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "parkstat/parkstat.hpp"
#include "parkstat/serialize.hpp"

namespace parkstat::cli {

inline constexpr const char* kSchemaVersion = "1";

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kDomain = 3,
  kResourceCap = 4,
};

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotParking:
    case ErrorKind::CodeOutOfRange:
      return kDomain;
    case ErrorKind::ResourceCap:
      return kResourceCap;
    default:
      return kUsage;
  }
}

/// Largest n for brute-force enumeration: n^n <= 1e8 words and
/// (n+1)^(n-1) <= 1e7 trees. PARKSTAT_CAP replaces it with an explicit n.
inline int default_brute_cap() {
  int n = 1;
  while (true) {
    const int next = n + 1;
    const BigInt words = ipow(next, static_cast<unsigned>(next));
    const BigInt trees = ipow(next + 1, static_cast<unsigned>(next - 1));
    if (words > 100'000'000 || trees > 10'000'000) return n;
    n = next;
  }
}

inline int brute_cap(bool force) {
  if (force) return INT_MAX;
  if (const char* env = std::getenv("PARKSTAT_CAP"); env != nullptr && *env != '\0') {
    const std::int64_t value = parse_int(env);
    if (value < 1 || value > INT_MAX) throw Error(ErrorKind::ParseError, "PARKSTAT_CAP must be a positive integer");
    return static_cast<int>(value);
  }
  return default_brute_cap();
}

/// Parses "a..b" or a single integer.
inline std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = static_cast<int>(parse_int(text));
    return {v, v};
  }
  const auto lo = static_cast<int>(parse_int(std::string_view(text).substr(0, dots)));
  const auto hi = static_cast<int>(parse_int(std::string_view(text).substr(dots + 2)));
  if (lo > hi) throw Error(ErrorKind::ParseError, "empty range " + text);
  return {lo, hi};
}

// Plain-text "key  value" lines with the keys padded to a common width.
class KeyValueText {
 public:
  void add(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
  std::string str() const {
    std::size_t width = 0;
    for (const auto& row : rows_) width = std::max(width, row.first.size());
    std::ostringstream out;
    for (const auto& [key, value] : rows_) out << std::left << std::setw(static_cast<int>(width) + 2) << key << value << '\n';
    return out.str();
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

struct Outcome {
  Json result;
  std::string text;
  int code = kOk;
};

// ---------------------------------------------------------------------------
// Commands

inline Outcome cmd_stats(const std::string& word_text) {
  const Word w = parse_word(word_text);
  const auto zc = center(w);
  const auto rs = run_set(w);
  const auto rim = reduced_image(w);
  Outcome o;
  o.result = Json{{"word", to_string(w)},
                  {"z", std::to_string(zc.size())},
                  {"center", zc},
                  {"run", std::to_string(rs.size())},
                  {"run_set", rs},
                  {"parking", is_parking(w)},
                  {"rook", is_rook(w)},
                  {"rim", rim},
                  {"coimage", to_string(coimage(w))}};
  KeyValueText t;
  t.add("word", to_string(w));
  t.add("z", std::to_string(zc.size()));
  t.add("center", format_index_set(zc));
  t.add("run", std::to_string(rs.size()));
  t.add("run_set", format_index_set(rs));
  t.add("parking", is_parking(w) ? "true" : "false");
  t.add("rook", is_rook(w) ? "true" : "false");
  t.add("rim", join_ints(rim));
  t.add("coimage", to_string(coimage(w)));
  o.text = t.str();
  return o;
}

struct MapArgs {
  std::string kind;
  std::optional<std::string> word, tree, code, perm;
};

inline const std::string& require(const std::optional<std::string>& value, const char* flag, const std::string& kind) {
  if (!value) throw Error(ErrorKind::ParseError, "--kind " + kind + " needs " + flag);
  return *value;
}

inline Outcome cmd_map(const MapArgs& a) {
  Outcome o;
  auto word_result = [&](const Word& w) {
    o.result = Json{{"kind", a.kind}, {"word", to_string(w)}};
    o.text = to_string(w) + "\n";
  };
  if (a.kind == "burn") {
    const BurnTrace trace = dfs_burn(parse_word(require(a.word, "--word", a.kind)));
    o.result = to_json(trace);
    std::string dampened;
    for (const auto& [from, to] : trace.dampened_edges) {
      if (!dampened.empty()) dampened += ' ';
      dampened += "(" + std::to_string(from) + "," + std::to_string(to) + ")";
    }
    KeyValueText t;
    t.add("tree", to_string(trace.tree));
    t.add("burnt_order", join_ints(trace.burnt_order));
    t.add("dampened_edges", dampened);
    o.text = t.str();
  } else if (a.kind == "unburn") {
    word_result(unburn(parse_tree(require(a.tree, "--tree", a.kind))));
  } else if (a.kind == "phi") {
    word_result(phi(parse_word(require(a.word, "--word", a.kind))));
  } else if (a.kind == "psi") {
    word_result(psi(parse_word(require(a.word, "--word", a.kind))));
  } else if (a.kind == "cyclic") {
    word_result(cyclic_to_rook(parse_word(require(a.word, "--word", a.kind))));
  } else if (a.kind == "t-code") {
    const auto& text = a.perm ? *a.perm : require(a.word, "--perm", a.kind);
    const auto code = t_code(parse_int_list(text));
    o.result = Json{{"kind", a.kind}, {"code", join_ints(code)}};
    o.text = join_ints(code) + "\n";
  } else if (a.kind == "t-decode") {
    const auto perm = t_decode(parse_int_list(require(a.code, "--code", a.kind)));
    o.result = Json{{"kind", a.kind}, {"permutation", join_ints(perm)}};
    o.text = join_ints(perm) + "\n";
  } else {
    throw Error(ErrorKind::ParseError, "unknown map kind '" + a.kind + "'");
  }
  return o;
}

struct CountArgs {
  std::string stat;
  int n = 0;
  std::optional<int> r;
  std::string method = "brute";
  std::string format = "text";
  int threads = 1;
  bool force = false;
};

inline Outcome cmd_count(const CountArgs& a) {
  if (a.n < 1) throw Error(ErrorKind::ParamOutOfRange, "n must be positive");
  if (a.r && (*a.r < 1 || *a.r > a.n)) throw Error(ErrorKind::ParamOutOfRange, "need 1 <= r <= n");
  Enumerator e(a.n);
  if (a.method == "closed") {
    e = closed_form(a.n);
  } else if (a.method == "brute") {
    const int cap = brute_cap(a.force);
    if (a.stat == "leg") {
      e = lt(a.n, a.threads, cap);
    } else {
      auto census = word_census(a.n, a.threads, cap);
      if (a.stat == "center") e = census.zp;
      else if (a.stat == "run-pf") e = census.rp;
      else e = census.rr;
    }
  } else {
    throw Error(ErrorKind::ParseError, "unknown method '" + a.method + "'");
  }
  Outcome o;
  if (a.r) {
    const BigInt& value = e[*a.r];
    o.result = Json{{"stat", a.stat}, {"method", a.method}, {"n", a.n}, {"r", *a.r}, {"value", to_decimal(value)}};
    o.text = a.format == "csv" ? std::to_string(a.n) + "," + std::to_string(*a.r) + "," + to_decimal(value) + "\n"
                               : to_decimal(value) + "\n";
  } else {
    o.result = Json{{"stat", a.stat}, {"method", a.method}, {"enumerator", to_json(e)}};
    if (a.format == "csv") {
      o.text = to_csv(e);
    } else {
      std::vector<std::string> parts;
      for (int r = 1; r <= a.n; ++r) parts.push_back(to_decimal(e[r]));
      std::string line;
      for (const auto& p : parts) line += (line.empty() ? "" : ",") + p;
      o.text = line + "\n";
    }
  }
  return o;
}

struct LatticeArgs {
  std::string op;
  std::string parts;
  std::optional<int> r;
  std::int64_t t = 0;
  std::string method = "det";
  std::string partition;
};

inline Outcome cmd_lattice(const LatticeArgs& a) {
  Outcome o;
  if (a.method != "det" && a.method != "brute") throw Error(ErrorKind::ParseError, "method must be det or brute");
  const bool brute = a.method == "brute";
  if (a.op == "count") {
    const Composition c = parse_composition(a.parts);
    const BigInt value = brute ? count_brute(c) : count_det(c);
    o.result = Json{{"parts", to_string(c)}, {"method", a.method}, {"count", to_decimal(value)}};
    o.text = to_decimal(value) + "\n";
  } else if (a.op == "sum") {
    const Composition c = parse_composition(a.parts);
    if (!a.r) throw Error(ErrorKind::ParseError, "lattice sum needs --r");
    const BigInt value = brute ? cyclic_sum(c, *a.r, a.t, [](const Composition& x) { return count_brute(x); })
                               : cyclic_sum(c, *a.r, a.t);
    o.result = Json{{"parts", to_string(c)}, {"r", *a.r}, {"t", a.t}, {"method", a.method}, {"sum", to_decimal(value)}};
    o.text = to_decimal(value) + "\n";
  } else if (a.op == "coimage") {
    const OrderedPartition p = parse_partition(a.partition);
    KeyValueText t;
    o.result = Json{{"partition", to_string(p)},
                    {"parking", to_decimal(count_pf_coimage(p))},
                    {"rook", to_decimal(count_rw_coimage(p))}};
    t.add("partition", to_string(p));
    t.add("parking", to_decimal(count_pf_coimage(p)));
    t.add("rook", to_decimal(count_rw_coimage(p)));
    if (a.r) {
      const BigInt run_count = count_pf_run_coimage(p, *a.r);
      o.result["run"] = std::to_string(*a.r);
      o.result["parking_with_run"] = to_decimal(run_count);
      t.add("parking_with_run", to_decimal(run_count));
    }
    o.text = t.str();
  } else {
    throw Error(ErrorKind::ParseError, "unknown lattice op '" + a.op + "'");
  }
  return o;
}

struct VerifyArgs {
  std::string range = "1..5";
  std::uint64_t seed = 42;
  int threads = 1;
  bool force = false;
};

/// Seeded lattice checks: the three recurrences on random compositions and
/// cyclic-sum invariance on random 5-compositions of 15.
inline std::vector<TheoremCheck> lattice_suite(std::uint64_t seed, Json& detail) {
  std::mt19937_64 rng(seed);
  auto draw = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };

  bool recurrences_ok = true;
  int applied = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::int64_t> parts(static_cast<std::size_t>(draw(1, 5)));
    for (auto& p : parts) p = draw(1, 6);
    const Composition c(parts);
    const auto check = lemma_identities_check(c, static_cast<int>(draw(1, c.size())));
    for (const auto& flag : {check.shift, check.extend, check.shrink}) {
      if (flag) {
        ++applied;
        recurrences_ok = recurrences_ok && *flag;
      }
    }
  }

  auto random_composition = [&](int total, int k) {
    // k - 1 distinct cut points in [1, total - 1].
    std::vector<std::int64_t> cuts;
    while (static_cast<int>(cuts.size()) < k - 1) {
      const auto cut = draw(1, total - 1);
      if (std::find(cuts.begin(), cuts.end(), cut) == cuts.end()) cuts.push_back(cut);
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::int64_t> parts;
    std::int64_t previous = 0;
    for (auto cut : cuts) {
      parts.push_back(cut - previous);
      previous = cut;
    }
    parts.push_back(total - previous);
    return Composition(parts);
  };

  bool invariant_ok = true;
  Json sums = Json::object();
  for (const auto& [r, t] : std::vector<std::pair<int, int>>{{1, 0}, {2, -2}, {3, -3}}) {
    const BigInt reference = cyclic_sum(random_composition(15, 5), r, t);
    for (int trial = 0; trial < 20; ++trial) {
      invariant_ok = invariant_ok && cyclic_sum(random_composition(15, 5), r, t) == reference;
    }
    sums["r=" + std::to_string(r) + ",t=" + std::to_string(t)] = to_decimal(reference);
  }
  detail = Json{{"seed", std::to_string(seed)},
                {"recurrence_checks", std::to_string(applied)},
                {"cyclic_sums", sums}};
  return {
      {"recurrences", "restricted-sequence recurrences on 200 random compositions", recurrences_ok},
      {"cyclic-invariance", "cyclic sum constant over random 5-compositions of 15", invariant_ok},
  };
}

inline std::string join_coeffs(const Enumerator& e) {
  std::string out;
  for (int r = 1; r <= e.n; ++r) out += (r > 1 ? "," : "") + to_decimal(e[r]);
  return out;
}

inline Outcome cmd_verify(const VerifyArgs& a) {
  const auto [lo, hi] = parse_range(a.range);
  if (lo < 1) throw Error(ErrorKind::ParamOutOfRange, "n must be positive");
  const int cap = brute_cap(a.force);
  if (hi > cap) {
    throw Error(ErrorKind::ResourceCap, "n=" + std::to_string(hi) + " exceeds brute-force cap " + std::to_string(cap));
  }
  std::ostringstream text;
  Json per_n = Json::array();
  bool all_ok = true;
  text << "verify n=" << lo << ".." << hi << " seed=" << a.seed << "\n";
  for (int n = lo; n <= hi; ++n) {
    const TheoremReport report = verify_theorems(n, a.threads, cap);
    text << "\nn=" << n << "\n";
    KeyValueText table;
    table.add("  leg", join_coeffs(report.lt));
    table.add("  center", join_coeffs(report.zp));
    table.add("  run-pf", join_coeffs(report.rp));
    table.add("  run-rw", join_coeffs(report.rr));
    table.add("  closed", join_coeffs(report.inclusion_exclusion));
    text << table.str();
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      text << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << ": " << c.claim << "\n";
      checks.push_back(Json{{"name", c.name}, {"claim", c.claim}, {"passed", c.passed}});
    }
    all_ok = all_ok && report.passed();
    per_n.push_back(Json{{"n", n},
                         {"lt", to_json(report.lt)},
                         {"zp", to_json(report.zp)},
                         {"rp", to_json(report.rp)},
                         {"rr", to_json(report.rr)},
                         {"checks", std::move(checks)},
                         {"passed", report.passed()}});
  }
  Json lattice_detail;
  const auto lattice_checks = lattice_suite(a.seed, lattice_detail);
  text << "\nlattice\n";
  Json lattice_json = Json::array();
  for (const auto& c : lattice_checks) {
    text << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << ": " << c.claim << "\n";
    lattice_json.push_back(Json{{"name", c.name}, {"claim", c.claim}, {"passed", c.passed}});
    all_ok = all_ok && c.passed;
  }
  for (const auto& [key, value] : lattice_detail.at("cyclic_sums").items()) {
    text << "  cyclic sum (" << key << ") = " << value.get<std::string>() << "\n";
  }
  text << "\noverall: " << (all_ok ? "PASS" : "FAIL") << "\n";

  Outcome o;
  o.result = Json{{"range", std::to_string(lo) + ".." + std::to_string(hi)},
                  {"per_n", std::move(per_n)},
                  {"lattice", Json{{"checks", std::move(lattice_json)}, {"detail", std::move(lattice_detail)}}},
                  {"passed", all_ok}};
  o.text = text.str();
  o.code = all_ok ? kOk : kVerificationFailed;
  return o;
}

inline Outcome cmd_export(const std::string& tree_text, const std::string& format) {
  if (format != "dot") throw Error(ErrorKind::ParseError, "only --format dot is supported");
  const RootedTree t = parse_tree(tree_text);
  Outcome o;
  o.text = to_dot(t);
  o.result = Json{{"format", "dot"}, {"document", o.text}};
  return o;
}

// ---------------------------------------------------------------------------
// Entry point

/// Runs the CLI on `args` (program name excluded). Data goes to `out`,
/// diagnostics to `err`; returns the process exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"parkstat: parking functions, tree legs and rook words"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Wrap output in a versioned JSON envelope");

  std::string word_text;
  auto* stats = app.add_subcommand("stats", "Statistics of a word");
  stats->add_option("--word", word_text, "Comma-separated letters, e.g. 3,4,1,1,8,3,4,1,4")->required();

  MapArgs map_args;
  auto* map = app.add_subcommand("map", "Apply a bijection");
  map->add_option("--kind", map_args.kind, "burn|unburn|phi|psi|t-code|t-decode|cyclic")
      ->required()
      ->check(CLI::IsMember({"burn", "unburn", "phi", "psi", "t-code", "t-decode", "cyclic"}));
  map->add_option("--word", map_args.word, "Input word");
  map->add_option("--tree", map_args.tree, "Parent list p_1,...,p_n");
  map->add_option("--code", map_args.code, "Code in [1]x[2]x...x[k]");
  map->add_option("--perm", map_args.perm, "Permutation of [k]");

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Coefficients of an enumerator");
  count->add_option("--stat", count_args.stat, "leg|center|run-pf|run-rw")
      ->required()
      ->check(CLI::IsMember({"leg", "center", "run-pf", "run-rw"}));
  count->add_option("--n", count_args.n, "Length")->required();
  count->add_option("--r", count_args.r, "Single exponent");
  count->add_option("--method", count_args.method, "brute|closed")->check(CLI::IsMember({"brute", "closed"}));
  count->add_option("--format", count_args.format, "text|csv")->check(CLI::IsMember({"text", "csv"}));
  count->add_option("--threads", count_args.threads, "Worker threads")->check(CLI::PositiveNumber);
  count->add_flag("--force", count_args.force, "Ignore the brute-force cap");

  LatticeArgs lattice_args;
  auto* lattice = app.add_subcommand("lattice", "Restricted sequence counts");
  lattice->add_option("op", lattice_args.op, "count|sum|coimage")
      ->required()
      ->check(CLI::IsMember({"count", "sum", "coimage"}));
  lattice->add_option("--parts", lattice_args.parts, "Composition l_1,...,l_k");
  lattice->add_option("--r", lattice_args.r, "Window length (sum) or run (coimage)");
  lattice->add_option("--t", lattice_args.t, "Shift of the window sum");
  lattice->add_option("--method", lattice_args.method, "det|brute")->check(CLI::IsMember({"det", "brute"}));
  lattice->add_option("--partition", lattice_args.partition, "Ordered partition {..}|{..}");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Exhaustive cross-verification");
  verify->add_option("--n", verify_args.range, "n or a..b");
  verify->add_option("--seed", verify_args.seed, "Seed for randomized lattice checks");
  verify->add_option("--threads", verify_args.threads, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--force", verify_args.force, "Ignore the brute-force cap");

  std::string tree_text;
  std::string export_format = "dot";
  auto* exporter = app.add_subcommand("export", "Export a tree");
  exporter->add_option("--tree", tree_text, "Parent list p_1,...,p_n")->required();
  exporter->add_option("--format", export_format, "dot");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  std::string command;
  try {
    if (stats->parsed()) {
      command = "stats";
      outcome = cmd_stats(word_text);
    } else if (map->parsed()) {
      command = "map";
      outcome = cmd_map(map_args);
    } else if (count->parsed()) {
      command = "count";
      outcome = cmd_count(count_args);
    } else if (lattice->parsed()) {
      command = "lattice";
      outcome = cmd_lattice(lattice_args);
    } else if (verify->parsed()) {
      command = "verify";
      outcome = cmd_verify(verify_args);
    } else {
      command = "export";
      outcome = cmd_export(tree_text, export_format);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

  if (json) {
    const Json envelope{{"schema_version", kSchemaVersion},
                        {"command", command},
                        {"result", outcome.result},
                        {"elapsed_ms", elapsed.count()}};
    out << envelope.dump(2) << "\n";
  } else {
    out << outcome.text;
  }
  return outcome.code;
}

}  // namespace parkstat::cli

#endif  // PARKSTAT_TOOLS_CLI_HPP
