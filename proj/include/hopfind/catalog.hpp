#ifndef HOPFIND_CATALOG_HPP
#define HOPFIND_CATALOG_HPP

#include <json.hpp>

#include "hopfind/fusionindex.hpp"
#include "hopfind/indicators.hpp"

namespace hopfind {

using nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

// ---- JSON descriptors ----

inline Group group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw parse_error("group descriptor: expected an object with a 'kind' field");
  std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "cyclic") return Group::cyclic(j.at("n").get<long>());
    if (kind == "symmetric") return Group::symmetric(j.at("n").get<long>());
    if (kind == "alternating") return Group::alternating(j.at("n").get<long>());
    if (kind == "semidirect_pq")
      return Group::semidirect_zq_zp(j.at("q").get<long>(), j.at("p").get<long>(),
                                     j.at("a").get<long>());
    if (kind == "perm_gens") {
      std::vector<std::vector<long>> gens;
      for (const auto& g : j.at("gens")) gens.push_back(g.get<std::vector<long>>());
      return Group::from_perm_generators(gens, j.at("degree").get<long>());
    }
  } catch (const json::exception& e) {
    throw parse_error(std::string("group descriptor: ") + e.what());
  }
  throw parse_error("group descriptor: unknown kind '" + kind + "'");
}

inline GroupAction action_from_json(const json& j, const Group& f, const Group& g) {
  if (!j.is_object() || !j.contains("kind"))
    throw parse_error("action descriptor: expected an object with a 'kind' field");
  std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "conj_by_perm") {
      std::vector<long> perm = j.at("perm").get<std::vector<long>>();
      return GroupAction::conjugation_by(f, g, g.index_of_images(perm));
    }
    if (kind == "table") {
      std::vector<std::int32_t> entries;
      for (const auto& row : j.at("entries"))
        for (const auto& v : row) entries.push_back(v.get<std::int32_t>());
      return GroupAction::from_table(f, g, entries);
    }
  } catch (const json::exception& e) {
    throw parse_error(std::string("action descriptor: ") + e.what());
  }
  throw parse_error("action descriptor: unknown kind '" + kind + "'");
}

inline HopfAlg algebra_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw parse_error("algebra descriptor: expected an object with a 'kind' field");
  std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "group_algebra") return HopfAlg::group_algebra(group_from_json(j.at("group")));
    if (kind == "dual_group") return HopfAlg::dual_group_algebra(group_from_json(j.at("group")));
    if (kind == "double") return HopfAlg::double_of_group(group_from_json(j.at("group")));
    if (kind == "smash") {
      Group f = group_from_json(j.at("f"));
      // the self-conjugation action is the double case: G = F^op
      if (j.at("action").contains("kind") &&
          j.at("action").at("kind").get<std::string>() == "conjugation_self") {
        if (j.contains("g") && group_from_json(j.at("g")).order() != f.order())
          throw parse_error("algebra descriptor: conjugation_self requires g = f^op");
        return HopfAlg::double_of_group(f);
      }
      Group g = group_from_json(j.at("g"));
      GroupAction act = action_from_json(j.at("action"), f, g);
      return HopfAlg::smash(g, f, act);
    }
  } catch (const json::exception& e) {
    throw parse_error(std::string("algebra descriptor: ") + e.what());
  }
  throw parse_error("algebra descriptor: unknown kind '" + kind + "'");
}

// ---- built-in catalog ----

struct CatalogEntry {
  std::string name;
  json descriptor;
  std::string notes;
};

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    auto cyc = [](long n) { return json{{"kind", "cyclic"}, {"n", n}}; };
    auto sym = [](long n) { return json{{"kind", "symmetric"}, {"n", n}}; };
    out.push_back({"group:S3", json{{"kind", "group_algebra"}, {"group", sym(3)}},
                   "group ring of S3"});
    out.push_back({"group:A4",
                   json{{"kind", "group_algebra"}, {"group", json{{"kind", "alternating"}, {"n", 4}}}},
                   "group ring of A4"});
    out.push_back({"dual:S3", json{{"kind", "dual_group"}, {"group", sym(3)}},
                   "function algebra on S3"});
    out.push_back({"smash:a4-z9",
                   json{{"kind", "smash"},
                        {"g", json{{"kind", "alternating"}, {"n", 4}}},
                        {"f", cyc(9)},
                        {"action", json{{"kind", "conj_by_perm"}, {"perm", {2, 3, 1, 4}}}}},
                   "nonintegral third indicator"});
    out.push_back({"smash:s5-z3",
                   json{{"kind", "smash"},
                        {"g", sym(5)},
                        {"f", cyc(3)},
                        {"action", json{{"kind", "conj_by_perm"}, {"perm", {2, 3, 1, 4, 5}}}}},
                   "noncocommutative second integral power"});
    out.push_back({"smash:s8-z8",
                   json{{"kind", "smash"},
                        {"g", sym(8)},
                        {"f", cyc(8)},
                        {"action",
                         json{{"kind", "conj_by_perm"}, {"perm", {2, 3, 4, 5, 6, 7, 8, 1}}}}},
                   "noncentral [4,2] integral power"});
    out.push_back({"group:pq-5-11-3",
                   json{{"kind", "group_algebra"},
                        {"group", json{{"kind", "semidirect_pq"}, {"q", 11}, {"p", 5}, {"a", 3}}}},
                   "order-3 simple over dimension 55"});
    out.push_back({"double:Z2", json{{"kind", "double"}, {"group", cyc(2)}},
                   "smallest Drinfel'd double"});
    out.push_back({"double:S3", json{{"kind", "double"}, {"group", sym(3)}},
                   "double of the smallest nonabelian group"});
    out.push_back({"double:Z4", json{{"kind", "double"}, {"group", cyc(4)}},
                   "cyclic double with index-4 fusion"});
    return out;
  }();
  return entries;
}

/// Resolve an algebra key: a catalog name, a dynamic pattern
/// (group:Z<n>/S<n>/A<n>, dual:Z<n>/S<n>, double:Z<n>/S<n>), or
/// "@file.json" for a descriptor file read by the CLI layer.
inline HopfAlg algebra_by_key(const std::string& key) {
  for (const CatalogEntry& e : catalog())
    if (e.name == key) return algebra_from_json(e.descriptor);
  auto make_group = [](const std::string& spec) -> Group {
    if (spec.size() < 2) throw parse_error("algebra key: bad group spec '" + spec + "'");
    long n = 0;
    try {
      n = std::stol(spec.substr(1));
    } catch (...) {
      throw parse_error("algebra key: bad group spec '" + spec + "'");
    }
    switch (spec[0]) {
      case 'Z': return Group::cyclic(n);
      case 'S': return Group::symmetric(n);
      case 'A': return Group::alternating(n);
      default: throw parse_error("algebra key: bad group spec '" + spec + "'");
    }
  };
  auto colon = key.find(':');
  if (colon != std::string::npos) {
    std::string head = key.substr(0, colon), tail = key.substr(colon + 1);
    if (head == "group") return HopfAlg::group_algebra(make_group(tail));
    if (head == "dual") return HopfAlg::dual_group_algebra(make_group(tail));
    if (head == "double") return HopfAlg::double_of_group(make_group(tail));
  }
  throw parse_error("algebra key: unknown algebra '" + key + "'");
}

/// Character selector: "i<N>" for the N-th irreducible (0-based in ring
/// order) or "dim<D>" for the first irreducible of degree D.
inline long select_character(const CharRing& ring, const std::string& sel) {
  if (sel.rfind("dim", 0) == 0) {
    long d = std::stol(sel.substr(3));
    for (long i = 0; i < ring.size(); ++i)
      if (ring.degrees[i] == d) return i;
    throw parse_error("character selector: no irreducible of degree " + std::to_string(d));
  }
  if (sel.rfind("i", 0) == 0) {
    long i = std::stol(sel.substr(1));
    if (i < 0 || i >= ring.size()) throw parse_error("character selector: index out of range");
    return i;
  }
  throw parse_error("character selector: expected i<N> or dim<D>, got '" + sel + "'");
}

/// Deterministic run wrapper emitted by the CLI: outputs are byte-stable
/// for fixed inputs and seed; timings go to stderr, never into outputs.
struct RunReport {
  std::string command;
  json inputs;
  json outputs;
  double elapsed_seconds = 0.0;
  std::string version = kVersion;
  unsigned long seed = kDefaultSeed;

  json to_json() const {
    return json{{"command", command},
                {"inputs", inputs},
                {"outputs", outputs},
                {"version", version},
                {"seed", seed}};
  }
};

} // namespace hopfind

#endif
