#include "stablehom_cli/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "stablehom/errors.hpp"

namespace stablehom::cli {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string require_string(const json& j, const std::string& what) {
  if (!j.is_string()) throw ParseError(what + " must be a string");
  return j.get<std::string>();
}

Partition parse_partition(const json& doc, const char* key, const std::vector<std::string>& ids,
                          const std::unordered_map<std::string, std::size_t>& lookup) {
  if (!doc.contains(key) || doc.at(key).is_null()) return Partition::singletons(ids.size());
  const json& classes = doc.at(key);
  if (!classes.is_array()) throw ParseError(std::string(key) + " must be a list of id lists");
  std::vector<std::vector<std::size_t>> out;
  for (const auto& cls : classes) {
    if (!cls.is_array()) throw ParseError(std::string(key) + " must be a list of id lists");
    std::vector<std::size_t> members;
    for (const auto& id : cls) {
      const std::string name = require_string(id, std::string(key) + " entry");
      auto it = lookup.find(name);
      if (it == lookup.end()) throw ParseError(std::string(key) + " mentions unknown id '" + name + "'");
      members.push_back(it->second);
    }
    out.push_back(std::move(members));
  }
  try {
    return Partition::from_classes(out, ids.size());
  } catch (const DomainMismatch& e) {
    throw ParseError(std::string(key) + ": " + e.what());
  }
}

json partition_to_json(const Partition& p, const std::vector<std::string>& ids) {
  json out = json::array();
  for (std::size_t c = 0; c < p.class_count(); ++c) {
    json cls = json::array();
    for (std::size_t e : p.members(c)) cls.push_back(ids[e]);
    out.push_back(std::move(cls));
  }
  return out;
}

Integer parse_integer(const json& j) {
  const std::string s = require_string(j, "matrix entry");
  Integer out;
  if (s.empty() || out.set_str(s, 10) != 0) throw ParseError("bad integer '" + s + "'");
  return out;
}

json integers_to_json(const std::vector<Integer>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.get_str());
  return out;
}

std::vector<Integer> integers_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected a list of integers");
  std::vector<Integer> out;
  for (const auto& x : j) out.push_back(parse_integer(x));
  return out;
}

}  // namespace

InputDocument parse_input(const json& doc) {
  try {
    const json& graph = require(doc, "graph");
    std::vector<std::string> vertices;
    for (const auto& v : require(graph, "vertices")) vertices.push_back(require_string(v, "vertex id"));
    std::vector<Graph::EdgeSpec> edges;
    for (const auto& e : require(graph, "edges")) {
      edges.push_back({require_string(require(e, "id"), "edge id"), require_string(require(e, "src"), "edge src"),
                       require_string(require(e, "dst"), "edge dst")});
    }
    Graph g;
    try {
      g = Graph::from_ids(vertices, edges);
    } catch (const DomainMismatch& e) {
      throw ParseError(e.what());
    }
    std::unordered_map<std::string, std::size_t> vlookup;
    std::unordered_map<std::string, std::size_t> elookup;
    std::vector<std::string> edge_ids;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) vlookup.emplace(g.vertex_ids()[i], i);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      elookup.emplace(g.edges()[i].id, i);
      edge_ids.push_back(g.edges()[i].id);
    }
    InputDocument out;
    out.presentation.y_vertex = parse_partition(doc, "y_vertex_classes", g.vertex_ids(), vlookup);
    out.presentation.y_edge = parse_partition(doc, "y_edge_classes", edge_ids, elookup);
    out.presentation.z_vertex = parse_partition(doc, "z_vertex_classes", g.vertex_ids(), vlookup);
    out.presentation.z_edge = parse_partition(doc, "z_edge_classes", edge_ids, elookup);
    out.presentation.base = std::move(g);
    if (doc.contains("mode") && !doc.at("mode").is_null()) {
      try {
        out.mode = parse_spectral_mode(require_string(doc.at("mode"), "mode"));
      } catch (const DomainMismatch& e) {
        throw ParseError(e.what());
      }
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

InputDocument load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return parse_input(doc);
}

json input_to_json(const InputDocument& doc) {
  const Graph& g = doc.presentation.base;
  json edges = json::array();
  std::vector<std::string> edge_ids;
  for (const auto& e : g.edges()) {
    edges.push_back({{"id", e.id}, {"src", g.vertex_ids()[e.source]}, {"dst", g.vertex_ids()[e.target]}});
    edge_ids.push_back(e.id);
  }
  json out;
  out["graph"] = {{"vertices", g.vertex_ids()}, {"edges", edges}};
  out["y_vertex_classes"] = partition_to_json(doc.presentation.y_vertex, g.vertex_ids());
  out["y_edge_classes"] = partition_to_json(doc.presentation.y_edge, edge_ids);
  out["z_vertex_classes"] = partition_to_json(doc.presentation.z_vertex, g.vertex_ids());
  out["z_edge_classes"] = partition_to_json(doc.presentation.z_edge, edge_ids);
  if (doc.mode) out["mode"] = to_string(*doc.mode);
  return out;
}

IntMatrix parse_matrix_literal(const std::string& text) {
  std::vector<std::vector<Integer>> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<Integer> entries;
    std::stringstream es(row);
    std::string entry;
    while (std::getline(es, entry, ',')) {
      const auto first = entry.find_first_not_of(" \t");
      const auto last = entry.find_last_not_of(" \t");
      if (first == std::string::npos) throw ParseError("empty matrix entry in '" + text + "'");
      Integer x;
      if (x.set_str(entry.substr(first, last - first + 1), 10) != 0)
        throw ParseError("bad matrix entry '" + entry + "'");
      entries.push_back(x);
    }
    rows.push_back(std::move(entries));
  }
  if (rows.empty()) throw ParseError("empty matrix");
  const std::size_t cols = rows.front().size();
  std::vector<Integer> flat;
  for (const auto& r : rows) {
    if (r.size() != cols) throw ParseError("ragged matrix '" + text + "'");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return IntMatrix(rows.size(), cols, std::move(flat));
}

json matrix_to_json(const IntMatrix& m) {
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", integers_to_json(m.entries())}};
}

IntMatrix matrix_from_json(const json& j) {
  try {
    const auto rows = require(j, "rows").get<std::size_t>();
    const auto cols = require(j, "cols").get<std::size_t>();
    std::vector<Integer> entries = integers_from_json(require(j, "entries"));
    if (entries.size() != rows * cols) throw ParseError("matrix entry count does not match its shape");
    return IntMatrix(rows, cols, std::move(entries));
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

json group_to_json(const FgAbGroup& g) {
  return {{"rank", g.free_rank()}, {"torsion", integers_to_json(g.invariant_factors())}, {"text", g.to_string()}};
}

json invariants_to_json(const StationaryInvariants& inv) {
  return {{"rank", inv.rank},
          {"torsion", integers_to_json(inv.invariant_factors)},
          {"endo_det_abs", inv.endo_det_abs.get_str()},
          {"bowen_franks", group_to_json(inv.bowen_franks)}};
}

StationaryInvariants invariants_from_json(const json& j) {
  try {
    StationaryInvariants inv;
    inv.rank = require(j, "rank").get<std::size_t>();
    inv.invariant_factors = integers_from_json(require(j, "torsion"));
    inv.endo_det_abs = parse_integer(require(j, "endo_det_abs"));
    const json& bf = require(j, "bowen_franks");
    inv.bowen_franks =
        FgAbGroup::from_invariants(require(bf, "rank").get<std::size_t>(), integers_from_json(require(bf, "torsion")));
    return inv;
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

json validation_to_json(const ValidationReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back({{"rule", v.rule}, {"detail", v.detail}});
  return {{"schema_version", schema_version}, {"kind", "validation"}, {"valid", r.valid()},
          {"violations", violations}};
}

json report_to_json(const HomologyReport& r) {
  json degrees = json::array();
  for (const auto& [k, s] : r.systems) {
    degrees.push_back({{"degree", k},
                       {"stage", {{"generators", s.stage().generators()},
                                  {"relations", matrix_to_json(s.stage().relations())}}},
                       {"endo", matrix_to_json(s.endo())},
                       {"normalized", s.normalized()},
                       {"group", s.stage().to_string()},
                       {"invariants", invariants_to_json(r.at(k))}});
  }
  json log = json::array();
  for (const auto& c : r.provenance.guardrail_log)
    log.push_back({{"identity", c.identity}, {"l", c.l}, {"m", c.m}, {"passed", c.passed}});
  return {{"schema_version", schema_version},
          {"kind", "homology"},
          {"provenance",
           {{"source", r.provenance.source},
            {"digest", r.provenance.digest},
            {"row_bound", r.provenance.row_bound},
            {"column_bound", r.provenance.column_bound},
            {"guardrail_log", log}}},
          {"degrees", degrees}};
}

HomologyReport report_from_json(const json& j) {
  try {
    if (require(j, "schema_version").get<int>() != schema_version) throw ParseError("unsupported schema_version");
    HomologyReport r;
    const json& prov = require(j, "provenance");
    r.provenance.source = require(prov, "source").get<std::string>();
    r.provenance.digest = require(prov, "digest").get<std::string>();
    r.provenance.row_bound = require(prov, "row_bound").get<std::size_t>();
    r.provenance.column_bound = require(prov, "column_bound").get<std::size_t>();
    for (const auto& c : require(prov, "guardrail_log")) {
      r.provenance.guardrail_log.push_back({require(c, "identity").get<std::string>(),
                                            require(c, "l").get<std::size_t>(), require(c, "m").get<std::size_t>(),
                                            require(c, "passed").get<bool>()});
    }
    for (const auto& d : require(j, "degrees")) {
      const int k = require(d, "degree").get<int>();
      const json& stage = require(d, "stage");
      FgAbGroup group(require(stage, "generators").get<std::size_t>(), matrix_from_json(require(stage, "relations")));
      r.systems.emplace(k, StationarySystem(std::move(group), matrix_from_json(require(d, "endo")),
                                            require(d, "normalized").get<bool>()));
      r.invariants.emplace(k, invariants_from_json(require(d, "invariants")));
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

json spectral_to_json(const SpectralRankReport& r) {
  json e2 = json::array();
  for (const auto& [key, rank] : r.e2_ranks) e2.push_back({{"p", key.first}, {"q_parity", key.second}, {"rank", rank}});
  return {{"schema_version", schema_version},
          {"kind", "k-ranks"},
          {"mode", to_string(r.mode)},
          {"e2_ranks", e2},
          {"collapse", r.certified ? "certified" : "bounds-only"},
          {"k0_rank", r.k0_rank},
          {"k1_rank", r.k1_rank}};
}

SpectralRankReport spectral_from_json(const json& j) {
  try {
    SpectralRankReport r;
    r.mode = parse_spectral_mode(require(j, "mode").get<std::string>());
    for (const auto& e : require(j, "e2_ranks")) {
      r.e2_ranks[{require(e, "p").get<int>(), require(e, "q_parity").get<int>()}] = require(e, "rank").get<std::size_t>();
    }
    const std::string collapse = require(j, "collapse").get<std::string>();
    if (collapse != "certified" && collapse != "bounds-only") throw ParseError("bad collapse '" + collapse + "'");
    r.certified = collapse == "certified";
    r.k0_rank = require(j, "k0_rank").get<std::size_t>();
    r.k1_rank = require(j, "k1_rank").get<std::size_t>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const DomainMismatch& e) {
    throw ParseError(e.what());
  }
}

}  // namespace stablehom::cli
