#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "absorber.hpp"
#include "loose.hpp"
#include "strip.hpp"
#include "template.hpp"

namespace hyperloose {

using Json = nlohmann::json;

namespace detail {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::invalid_query, std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(ErrorKind::invalid_query, std::string("field \"") + key + "\" has the wrong type");
  }
}

}  // namespace detail

inline Json to_json(const Hypergraph& g) {
  Json edges = Json::array();
  std::vector<VertexList> es;
  for (EdgeId e = 0; e < g.edge_count(); ++e) es.emplace_back(g.edge(e).begin(), g.edge(e).end());
  std::sort(es.begin(), es.end());
  for (auto& e : es) edges.push_back(e);
  return Json{{"n", g.n()}, {"k", g.k()}, {"edges", std::move(edges)}};
}

inline Hypergraph hypergraph_from_json(const Json& j) {
  auto n = detail::field<std::size_t>(j, "n");
  auto k = detail::field<std::size_t>(j, "k");
  auto edges = detail::field<std::vector<VertexList>>(j, "edges");
  require(k >= 1, ErrorKind::invalid_query, "uniformity must be positive");
  for (auto& e : edges) {
    require(e.size() == k, ErrorKind::invalid_query, "edge of the wrong size");
    for (Vertex v : e) require(v < n, ErrorKind::invalid_query, "edge vertex out of range");
  }
  return Hypergraph(n, k, edges);
}

inline Json to_json(const LoosePath& p) { return Json{{"kind", "path"}, {"k", p.k}, {"vertices", p.vertices}}; }
inline Json to_json(const LooseCycle& c) { return Json{{"kind", "cycle"}, {"k", c.k}, {"vertices", c.vertices}}; }

inline LoosePath path_from_json(const Json& j) {
  return LoosePath{detail::field<std::size_t>(j, "k"), detail::field<VertexList>(j, "vertices")};
}

// Accepts a bare cycle or anything carrying one under "cycle", such as the
// output of `find`.
inline LooseCycle cycle_from_json(const Json& j) {
  if (j.is_object() && j.contains("cycle")) return cycle_from_json(j.at("cycle"));
  auto k = detail::field<std::size_t>(j, "k");
  require(k >= 2, ErrorKind::invalid_query, "uniformity below 2");
  return LooseCycle{k, detail::field<VertexList>(j, "vertices")};
}

inline Json to_json(const Absorber& a) {
  Json active = Json::array(), passive = Json::array();
  for (auto& p : a.active) active.push_back(p.vertices);
  for (auto& p : a.passive) passive.push_back(p.vertices);
  return Json{{"k", a.k}, {"root", a.root}, {"active", active}, {"passive", passive}};
}

inline Absorber absorber_from_json(const Json& j) {
  if (j.is_object() && j.contains("absorber")) return absorber_from_json(j.at("absorber"));
  Absorber a;
  a.k = detail::field<std::size_t>(j, "k");
  require(a.k >= 2, ErrorKind::invalid_query, "uniformity below 2");
  a.root = detail::field<VertexList>(j, "root");
  for (auto& v : detail::field<std::vector<VertexList>>(j, "active")) a.active.push_back(LoosePath{a.k, v});
  for (auto& v : detail::field<std::vector<VertexList>>(j, "passive")) a.passive.push_back(LoosePath{a.k, v});
  return a;
}

inline Json to_json(const Template& t) { return Json{{"r", t.r}, {"graph", to_json(t.t)}, {"z", t.z}}; }

inline Template template_from_json(const Json& j) {
  if (j.is_object() && j.contains("template")) return template_from_json(j.at("template"));
  return Template{detail::field<std::size_t>(j, "r"), hypergraph_from_json(detail::field<Json>(j, "graph")),
                  detail::field<VertexList>(j, "z")};
}

inline Json to_json(const Strip& h) { return Json{{"m", h.m}, {"layers", h.layers}}; }
inline Json to_json(const DoubleStrip& d) {
  return Json{{"m", d.m()}, {"first", d.first.layers}, {"second", d.second.layers}};
}

inline Strip strip_from_json(const Json& j) {
  return Strip{detail::field<std::size_t>(j, "m"), detail::field<std::vector<Permutation>>(j, "layers")};
}

inline DoubleStrip double_strip_from_json(const Json& j) {
  if (j.is_object() && j.contains("double_strip")) return double_strip_from_json(j.at("double_strip"));
  auto m = detail::field<std::size_t>(j, "m");
  return DoubleStrip{Strip{m, detail::field<std::vector<Permutation>>(j, "first")},
                     Strip{m, detail::field<std::vector<Permutation>>(j, "second")}};
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::invalid_query, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::invalid_query, path + ": " + e.what());
  }
}

}  // namespace hyperloose
