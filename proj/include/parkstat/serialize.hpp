#ifndef PARKSTAT_SERIALIZE_HPP
#define PARKSTAT_SERIALIZE_HPP

#include <string>

#include "json.hpp"

#include "parkstat/counting.hpp"
#include "parkstat/maps.hpp"

namespace parkstat {

using Json = nlohmann::ordered_json;

/// {"tree":[parents], "burnt_order":[...], "dampened_edges":[[i,j],...]}
inline Json to_json(const BurnTrace& trace) {
  Json edges = Json::array();
  for (const auto& [from, to] : trace.dampened_edges) edges.push_back({from, to});
  return Json{{"tree", trace.tree.parents()},
              {"burnt_order", trace.burnt_order},
              {"dampened_edges", std::move(edges)}};
}

/// {"n":3,"coeffs":{"1":"4","2":"6","3":"6"}}; coefficients are decimal strings
/// and the r = 0 entry is written only when nonzero.
inline Json to_json(const Enumerator& e) {
  Json coeffs = Json::object();
  for (int r = 0; r <= e.n; ++r) {
    if (r == 0 && e[r] == 0) continue;
    coeffs[std::to_string(r)] = to_decimal(e[r]);
  }
  return Json{{"n", e.n}, {"coeffs", std::move(coeffs)}};
}

inline Enumerator enumerator_from_json(const Json& j) {
  Enumerator e(j.at("n").get<int>());
  for (const auto& [key, value] : j.at("coeffs").items()) {
    const int r = std::stoi(key);
    if (r < 0 || r > e.n) throw Error(ErrorKind::ParseError, "exponent out of range in enumerator");
    e[r] = BigInt(value.get<std::string>());
  }
  return e;
}

/// CSV rows "n,r,value" for r = 1..n, no header.
inline std::string to_csv(const Enumerator& e) {
  std::string out;
  for (int r = 1; r <= e.n; ++r) {
    out += std::to_string(e.n) + "," + std::to_string(r) + "," + to_decimal(e[r]) + "\n";
  }
  return out;
}

}  // namespace parkstat

#endif  // PARKSTAT_SERIALIZE_HPP
