#include "conductor/json_io.hpp"

#include <set>
#include <string>

#include "conductor/kodaira.hpp"

namespace conductor::io {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::kSchemaError, (path.empty() ? "/" : path) + ": " + msg);
}

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object");
}

void allow_keys(const json& j, const std::string& path,
                std::initializer_list<const char*> keys,
                std::initializer_list<const char*> extra = {}) {
  std::set<std::string> ok(keys.begin(), keys.end());
  ok.insert(extra.begin(), extra.end());
  for (const auto& [key, value] : j.items()) {
    if (!ok.contains(key)) schema(path + "/" + key, "unexpected key");
  }
}

const json& field(const json& j, const std::string& path, const char* key) {
  if (!j.contains(key)) schema(path + "/" + key, "required key missing");
  return j.at(key);
}

long read_long(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema(path, "expected an integer");
  return j.get<long>();
}

long read_long(const json& j, const std::string& path, const char* key) {
  return read_long(field(j, path, key), path + "/" + key);
}

std::optional<long> read_opt_long(const json& j, const std::string& path,
                                  const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return read_long(j.at(key), path + "/" + key);
}

std::vector<long> read_long_array(const json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array");
  std::vector<long> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(read_long(j[i], path + "/" + std::to_string(i)));
  }
  return out;
}

std::string read_id(const json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long>());
  schema(path, "expected a string or integer id");
}

dualgraph::SncdGraph graph_document(const json& j, const std::string& path,
                                    std::initializer_list<const char*> extra) {
  allow_keys(j, path, {"components", "edges", "flags", "expected_genus"}, extra);
  dualgraph::SncdGraph g;
  const auto& comps = field(j, path, "components");
  if (!comps.is_array()) schema(path + "/components", "expected an array");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string p = path + "/components/" + std::to_string(i);
    require_object(comps[i], p);
    allow_keys(comps[i], p, {"id", "n", "g"});
    const std::string id = comps[i].contains("id")
                               ? read_id(comps[i].at("id"), p + "/id")
                               : std::to_string(i);
    g.add_component(id, read_long(comps[i], p, "n"),
                    read_opt_long(comps[i], p, "g").value_or(0));
  }
  if (j.contains("edges")) {
    const auto& edges = j.at("edges");
    if (!edges.is_array()) schema(path + "/edges", "expected an array");
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const std::string p = path + "/edges/" + std::to_string(k);
      if (!edges[k].is_array() || edges[k].size() != 2) {
        schema(p, "expected a pair of component ids");
      }
      const auto a = read_id(edges[k][0], p + "/0");
      const auto b = read_id(edges[k][1], p + "/1");
      const auto ia = g.index_of(a);
      const auto ib = g.index_of(b);
      if (!ia) schema(p + "/0", "unknown component '" + a + "'");
      if (!ib) schema(p + "/1", "unknown component '" + b + "'");
      g.add_edge(*ia, *ib);
    }
  }
  if (j.contains("flags")) {
    const auto& flags = j.at("flags");
    require_object(flags, path + "/flags");
    allow_keys(flags, path + "/flags", {"index_one"});
    if (flags.contains("index_one")) {
      if (!flags.at("index_one").is_boolean()) {
        schema(path + "/flags/index_one", "expected a boolean");
      }
      g.index_one = flags.at("index_one").get<bool>();
    }
  }
  g.expected_genus = read_opt_long(j, path, "expected_genus");
  return g;
}

}  // namespace

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    throw Error(ErrorCode::kParseError, err.what());
  }
}

Rational read_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const Error& err) {
      schema(path, err.what());
    }
  }
  schema(path, "expected an integer or a rational string \"num/den\"");
}

json write(const Rational& r) { return r.str(); }

dualgraph::SncdGraph read_graph(const json& j,
                                std::initializer_list<const char*> extra_keys) {
  require_object(j, "");
  for (const char* key : {"type", "kodaira"}) {
    if (j.contains(key)) {
      allow_keys(j, "", {key}, extra_keys);
      if (!j.at(key).is_string()) schema(std::string("/") + key, "expected a string");
      return dualgraph::kodaira_catalog(j.at(key).get<std::string>());
    }
  }
  if (j.contains("result") && j.at("result").is_object() &&
      j.at("result").contains("graph")) {
    return graph_document(j.at("result").at("graph"), "/result/graph", {});
  }
  return graph_document(j, "", extra_keys);
}

json write(const dualgraph::SncdGraph& graph) {
  json comps = json::array();
  for (const auto& c : graph.components) {
    comps.push_back({{"id", c.id}, {"n", c.n}, {"g", c.g}});
  }
  json edges = json::array();
  for (const auto& e : graph.edges) {
    edges.push_back({graph.components[e.a].id, graph.components[e.b].id});
  }
  json out{{"components", comps}, {"edges", edges}};
  if (graph.index_one) out["flags"] = {{"index_one", true}};
  if (graph.expected_genus) out["expected_genus"] = *graph.expected_genus;
  return out;
}

json write(const dualgraph::GraphInvariants& inv,
           const dualgraph::SncdGraph& graph) {
  json self = json::object();
  for (std::size_t i = 0; i < graph.components.size(); ++i) {
    self[graph.components[i].id] = inv.self_intersections[i];
  }
  return {{"V", inv.V},
          {"E", inv.E},
          {"b1", inv.b1},
          {"R", write(inv.R)},
          {"chi_generic", inv.chi_generic},
          {"chi_special", inv.chi_special},
          {"g", inv.g},
          {"a", inv.a},
          {"t", inv.t},
          {"u", inv.u},
          {"art_tame", inv.art_tame},
          {"self_intersections", self}};
}

json write(const Diagnostics& diags) {
  json out = json::array();
  for (const auto& d : diags) out.push_back({{"rule", d.rule}, {"message", d.message}});
  return out;
}

singularity::ResolutionDatum read_resolution(const json& j) {
  require_object(j, "");
  allow_keys(j, "", {"genera", "intersection", "p_g", "rational"});
  singularity::ResolutionDatum d;
  const auto& rows = field(j, "", "intersection");
  if (!rows.is_array() || rows.empty()) {
    schema("/intersection", "expected a non-empty array of rows");
  }
  std::vector<RationalVector> m;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string p = "/intersection/" + std::to_string(i);
    if (!rows[i].is_array()) schema(p, "expected an array");
    RationalVector row;
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      row.push_back(read_rational(rows[i][k], p + "/" + std::to_string(k)));
    }
    m.push_back(std::move(row));
  }
  try {
    d.intersection = SymMatrix::from_rows(m);
  } catch (const Error& err) {
    schema("/intersection", err.what());
  }
  if (j.contains("genera")) {
    d.genera = read_long_array(j.at("genera"), "/genera");
  } else {
    d.genera.assign(m.size(), 0);
  }
  d.p_g = read_opt_long(j, "", "p_g");
  if (j.contains("rational")) {
    if (!j.at("rational").is_boolean()) schema("/rational", "expected a boolean");
    d.rational_flag = j.at("rational").get<bool>();
  }
  return d;
}

cover::TameCoverData read_tame_cover(const json& j) {
  require_object(j, "");
  allow_keys(j, "", {"e", "g", "g_bar", "branch"});
  cover::TameCoverData d;
  d.e = read_long(j, "", "e");
  d.g = read_long(j, "", "g");
  d.g_bar = read_long(j, "", "g_bar");
  const auto& br = field(j, "", "branch");
  if (!br.is_array()) schema("/branch", "expected an array");
  for (std::size_t k = 0; k < br.size(); ++k) {
    const std::string p = "/branch/" + std::to_string(k);
    require_object(br[k], p);
    allow_keys(br[k], p, {"d", "count", "r"});
    d.branch.push_back({read_long(br[k], p, "d"), read_long(br[k], p, "count"),
                        read_long(br[k], p, "r")});
  }
  return d;
}

cover::WildCoverData read_wild_cover(const json& j) {
  require_object(j, "");
  allow_keys(j, "", {"p", "r", "g", "g_bar", "chi_bar", "sw_ext", "branch",
                     "ordinary"});
  cover::WildCoverData d;
  d.p = read_long(j, "", "p");
  d.r = read_long(j, "", "r");
  d.g = read_long(j, "", "g");
  d.g_bar = read_long(j, "", "g_bar");
  d.chi_bar = read_opt_long(j, "", "chi_bar");
  d.sw_ext = read_long(j, "", "sw_ext");
  const auto& br = field(j, "", "branch");
  if (!br.is_array()) schema("/branch", "expected an array");
  for (std::size_t k = 0; k < br.size(); ++k) {
    const std::string p = "/branch/" + std::to_string(k);
    require_object(br[k], p);
    allow_keys(br[k], p, {"i", "count", "sw_locals"});
    cover::WildBranch b;
    b.i = read_long(br[k], p, "i");
    b.count = read_long(br[k], p, "count");
    b.sw_locals = read_long_array(field(br[k], p, "sw_locals"), p + "/sw_locals");
    d.branch.push_back(std::move(b));
  }
  if (j.contains("ordinary") && !j.at("ordinary").is_null()) {
    const auto& o = j.at("ordinary");
    require_object(o, "/ordinary");
    allow_keys(o, "/ordinary", {"gamma", "gamma_bar", "small_orbits"});
    cover::OrdinaryData od;
    od.gamma = read_long(o, "/ordinary", "gamma");
    od.gamma_bar = read_long(o, "/ordinary", "gamma_bar");
    if (o.contains("small_orbits")) {
      od.small_orbits = read_long_array(o.at("small_orbits"), "/ordinary/small_orbits");
    }
    d.ordinary = std::move(od);
  }
  return d;
}

json write(const cover::ConductorReport& rep) {
  json terms = json::array();
  for (const auto& t : rep.terms) {
    terms.push_back({{"name", t.name}, {"value", write(t.value)}, {"formula", t.formula}});
  }
  return {{"c_tame", write(rep.c_tame)},
          {"c_wild", write(rep.c_wild)},
          {"c_total", write(rep.c_total)},
          {"u", rep.u},
          {"terms", terms},
          {"notes", write(rep.notes)}};
}

RamificationInput read_ramification(const json& j) {
  require_object(j, "");
  allow_keys(j, "", {"sizes", "p", "rep"});
  RamificationInput in;
  in.filtration.sizes = read_long_array(field(j, "", "sizes"), "/sizes");
  in.filtration.p = read_opt_long(j, "", "p");
  if (j.contains("rep")) {
    const auto& r = j.at("rep");
    require_object(r, "/rep");
    allow_keys(r, "/rep", {"dim", "fixed_dims"});
    ramification::RepFixedDims rep;
    rep.dim = read_long(r, "/rep", "dim");
    rep.fixed_dims = read_long_array(field(r, "/rep", "fixed_dims"), "/rep/fixed_dims");
    in.rep = std::move(rep);
  }
  return in;
}

}  // namespace conductor::io
