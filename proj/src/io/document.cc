#include "elana/io/document.h"

#include <fstream>
#include <sstream>

#include "elana/error.h"

namespace elana::io {
namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw StructureError(where + ": " + what);
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a list of names");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) fail(where, "expected a name");
    out.push_back(x.get<std::string>());
  }
  return out;
}

FeatureSet feature_list(const FeatureSpace& space, const Json& j, const std::string& where) {
  try {
    return space.make_set(string_list(j, where));
  } catch (const StructureError& e) {
    fail(where, e.what());
  }
}

int domain_id(const Json& j, int k, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected a domain id");
  int d = j.get<int>();
  if (d < 1 || d > k) fail(where, "domain id " + std::to_string(d) + " out of range");
  return d - 1;
}

std::pair<int, int> parse_arrow(const std::string& key, int k, const std::string& where) {
  size_t arrow = key.find("->");
  if (arrow == std::string::npos) fail(where, "expected key of the form \"s->t\"");
  try {
    int s = std::stoi(key.substr(0, arrow));
    int t = std::stoi(key.substr(arrow + 2));
    if (s < 1 || t < 1 || s > k || t > k) fail(where, "domain id out of range in " + key);
    return {s - 1, t - 1};
  } catch (const std::logic_error&) {
    fail(where, "bad domain pair '" + key + "'");
  }
}

int individual(const Interpretation& interp, const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected an individual name or feature-set literal");
  int i = interp.find_individual(j.get<std::string>());
  if (i < 0) fail(where, "unknown individual " + j.get<std::string>());
  return i;
}

Json names_of(const FeatureSpace& space, FeatureSet f) {
  Json out = Json::array();
  for (const auto& n : space.set_names(f)) out.push_back(n);
  return out;
}

}  // namespace

Interpretation interpretation_from_json(const Json& doc) {
  if (!doc.is_object()) fail("document", "expected an object");
  for (const char* key : {"features", "domains"}) {
    if (!doc.contains(key)) fail("document", std::string("missing field '") + key + "'");
  }
  auto features = string_list(doc["features"], "features");
  std::vector<std::vector<std::string>> domains;
  if (!doc["domains"].is_array()) fail("domains", "expected a list of lists");
  for (const auto& d : doc["domains"]) domains.push_back(string_list(d, "domains"));
  std::vector<std::vector<std::string>> forbidden;
  bool all_token = false;
  if (doc.contains("forbidden")) {
    if (!doc["forbidden"].is_array()) fail("forbidden", "expected a list");
    for (const auto& x : doc["forbidden"]) {
      if (x.is_string() && x.get<std::string>() == "ALL") {
        all_token = true;
        continue;
      }
      auto names = string_list(x, "forbidden");
      if (names.size() == 1 && names[0] == "ALL") {
        all_token = true;
        continue;
      }
      forbidden.push_back(std::move(names));
    }
  }
  if (all_token) forbidden.push_back(features);
  FeatureSpace space(features, domains, forbidden);
  const int k = space.domain_count();

  std::vector<DomainPair> generators;
  if (doc.contains("analogous")) {
    for (const auto& p : doc["analogous"]) {
      if (!p.is_array() || p.size() != 2) fail("analogous", "expected pairs [s, t]");
      generators.emplace_back(domain_id(p[0], k, "analogous"), domain_id(p[1], k, "analogous"));
    }
  }
  std::map<DomainPair, FeatureMap> bijections;
  if (doc.contains("bijections")) {
    if (!doc["bijections"].is_object()) fail("bijections", "expected an object");
    for (const auto& [key, m] : doc["bijections"].items()) {
      std::string where = "bijections." + key;
      auto p = parse_arrow(key, k, where);
      if (!m.is_object()) fail(where, "expected a feature map");
      FeatureMap fm;
      for (const auto& [f, g] : m.items()) {
        if (!g.is_string()) fail(where, "expected a feature name");
        try {
          fm[space.index(f)] = space.index(g.get<std::string>());
        } catch (const StructureError& e) {
          fail(where, e.what());
        }
      }
      bijections[p] = std::move(fm);
    }
  }
  Mode mode = Mode::kStrong;
  if (doc.contains("mode")) {
    if (!doc["mode"].is_string()) fail("mode", "expected \"strong\" or \"weak\"");
    mode = parse_mode(doc["mode"].get<std::string>());
  }
  std::vector<ExtraIndividual> extras;
  if (doc.contains("individuals")) {
    for (const auto& [name, fs] : doc["individuals"].items()) {
      extras.push_back({name, feature_list(space, fs, "individuals." + name)});
    }
  }
  AnalogyStructure analogy(space, std::move(generators), std::move(bijections));
  Interpretation interp(space, analogy, mode, std::move(extras));

  if (doc.contains("natural_atoms")) {
    for (const auto& [name, fs] : doc["natural_atoms"].items()) {
      interp.set_natural_atom(name, feature_list(space, fs, "natural_atoms." + name));
    }
  }
  if (doc.contains("plain_atoms")) {
    for (const auto& [name, members] : doc["plain_atoms"].items()) {
      std::string where = "plain_atoms." + name;
      if (!members.is_array()) fail(where, "expected a list of individuals");
      IndividualSet set = interp.empty_set();
      for (const auto& m : members) set.set(individual(interp, m, where));
      interp.set_plain_atom(name, std::move(set));
    }
  }
  if (doc.contains("roles")) {
    for (const auto& [name, pairs] : doc["roles"].items()) {
      std::string where = "roles." + name;
      if (!pairs.is_array()) fail(where, "expected a list of pairs");
      std::vector<std::pair<int, int>> rel;
      for (const auto& p : pairs) {
        if (!p.is_array() || p.size() != 2) fail(where, "expected pairs of individuals");
        rel.emplace_back(individual(interp, p[0], where), individual(interp, p[1], where));
      }
      interp.set_role(name, std::move(rel));
    }
  }
  if (doc.contains("kappa")) {
    for (const auto& [role, spec] : doc["kappa"].items()) {
      std::string where = "kappa." + role;
      if (!spec.is_object() || !spec.contains("tables")) fail(where, "expected {mode, tables}");
      std::string kmode = spec.value("mode", "tabular");
      const Json& tables = spec["tables"];
      if (!tables.is_object()) fail(where, "tables must be an object");
      if (kmode == "tabular") {
        std::map<int, KappaEntries> entries;
        for (const auto& [dom, list] : tables.items()) {
          int d;
          try {
            d = std::stoi(dom) - 1;
          } catch (const std::logic_error&) {
            fail(where, "table key '" + dom + "' is not a domain id");
          }
          if (d < 0 || d >= k) fail(where, "table key '" + dom + "' out of range");
          if (!list.is_array()) fail(where, "expected a list of {from, to} entries");
          for (const auto& e : list) {
            if (!e.is_object() || !e.contains("from") || !e.contains("to")) {
              fail(where, "expected {from, to} entries");
            }
            entries[d].emplace_back(feature_list(space, e["from"], where),
                                    feature_list(space, e["to"], where));
          }
        }
        interp.set_kappa(role, KappaTable::Tabular(space, interp.analogy(), std::move(entries)));
      } else if (kmode == "additive") {
        std::map<int, FeatureSet> images;
        for (const auto& [f, img] : tables.items()) {
          int idx = space.find(f);
          if (idx < 0) fail(where, "unknown feature '" + f + "'");
          images[idx] = feature_list(space, img, where);
        }
        interp.set_kappa(role, KappaTable::Additive(space, interp.analogy(), std::move(images)));
      } else {
        fail(where, "unknown kappa mode '" + kmode + "'");
      }
    }
  }
  return interp;
}

Json interpretation_to_json(const Interpretation& interp) {
  const FeatureSpace& space = interp.space();
  Json doc;
  doc["features"] = space.names();
  Json domains = Json::array();
  for (FeatureSet b : space.blocks()) domains.push_back(names_of(space, b));
  doc["domains"] = domains;
  Json forbidden = Json::array();
  const auto& xs = space.forbidden();
  size_t n = space.all_inserted() ? xs.size() - 1 : xs.size();
  for (size_t i = 0; i < n; ++i) {
    if (xs[i] == space.all()) {
      forbidden.push_back("ALL");
    } else {
      forbidden.push_back(names_of(space, xs[i]));
    }
  }
  doc["forbidden"] = forbidden;
  Json analogous = Json::array();
  for (auto [s, t] : interp.analogy().generators()) analogous.push_back({s + 1, t + 1});
  doc["analogous"] = analogous;
  Json bij = Json::object();
  for (const auto& [p, m] : interp.analogy().given_bijections()) {
    Json fm = Json::object();
    for (auto [f, g] : m) fm[space.name(f)] = space.name(g);
    bij[std::to_string(p.first + 1) + "->" + std::to_string(p.second + 1)] = fm;
  }
  doc["bijections"] = bij;
  doc["mode"] = to_string(interp.mode());
  if (!interp.extras().empty()) {
    Json extras = Json::object();
    for (const auto& e : interp.extras()) extras[e.name] = names_of(space, e.features);
    doc["individuals"] = extras;
  }
  Json natural = Json::object();
  for (const auto& [name, f] : interp.natural_atoms()) natural[name] = names_of(space, f);
  doc["natural_atoms"] = natural;
  Json plain = Json::object();
  for (const auto& [name, set] : interp.plain_atoms()) {
    Json members = Json::array();
    for (auto i = set.find_first(); i != IndividualSet::npos; i = set.find_next(i)) {
      members.push_back(interp.individuals()[i].name);
    }
    plain[name] = members;
  }
  doc["plain_atoms"] = plain;
  Json roles = Json::object();
  for (const auto& [name, pairs] : interp.roles()) {
    Json rel = Json::array();
    for (auto [a, b] : pairs) {
      rel.push_back({interp.individuals()[a].name, interp.individuals()[b].name});
    }
    roles[name] = rel;
  }
  doc["roles"] = roles;
  Json kappa = Json::object();
  for (const auto& [role, k] : interp.kappas()) {
    Json spec;
    Json tables = Json::object();
    if (k.mode() == KappaTable::Mode::kTabular) {
      spec["mode"] = "tabular";
      for (const auto& [d, entries] : k.given_tables()) {
        Json list = Json::array();
        for (auto [from, to] : entries) {
          list.push_back({{"from", names_of(space, from)}, {"to", names_of(space, to)}});
        }
        tables[std::to_string(d + 1)] = list;
      }
    } else {
      spec["mode"] = "additive";
      for (auto [f, img] : k.given_images()) tables[space.name(f)] = names_of(space, img);
    }
    spec["tables"] = tables;
    kappa[role] = spec;
  }
  doc["kappa"] = kappa;
  return doc;
}

Interpretation parse_interpretation(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw StructureError(std::string("malformed document: ") + e.what());
  }
  return interpretation_from_json(doc);
}

std::string print_interpretation(const Interpretation& interp) {
  return interpretation_to_json(interp).dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Interpretation load_interpretation(const std::filesystem::path& path) {
  return parse_interpretation(read_file(path));
}

}  // namespace elana::io
