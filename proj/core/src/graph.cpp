#include "stablehom/graph.hpp"

#include <utility>

#include "stablehom/errors.hpp"

namespace stablehom {

Graph::Graph(std::vector<std::string> vertex_ids, std::vector<GraphEdge> edges)
    : vertex_ids_(std::move(vertex_ids)), edges_(std::move(edges)) {
  for (std::size_t v = 0; v < vertex_ids_.size(); ++v) {
    if (!vertex_lookup_.emplace(vertex_ids_[v], v).second)
      throw DomainMismatch("Graph: duplicate vertex id '" + vertex_ids_[v] + "'");
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& edge = edges_[e];
    if (edge.source >= vertex_ids_.size() || edge.target >= vertex_ids_.size())
      throw DomainMismatch("Graph: edge '" + edge.id + "' has a dangling endpoint");
    if (!edge_lookup_.emplace(edge.id, e).second)
      throw DomainMismatch("Graph: duplicate edge id '" + edge.id + "'");
  }
}

Graph Graph::from_ids(std::vector<std::string> vertex_ids, const std::vector<EdgeSpec>& edges) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t v = 0; v < vertex_ids.size(); ++v) index.emplace(vertex_ids[v], v);
  std::vector<GraphEdge> resolved;
  resolved.reserve(edges.size());
  for (const auto& spec : edges) {
    auto s = index.find(spec.source);
    auto t = index.find(spec.target);
    if (s == index.end() || t == index.end())
      throw DomainMismatch("Graph: edge '" + spec.id + "' refers to an unknown vertex");
    resolved.push_back(GraphEdge{spec.id, s->second, t->second});
  }
  return Graph(std::move(vertex_ids), std::move(resolved));
}

std::optional<std::size_t> Graph::vertex_index(const std::string& id) const {
  auto it = vertex_lookup_.find(id);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Graph::edge_index(const std::string& id) const {
  auto it = edge_lookup_.find(id);
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

IntMatrix Graph::adjacency() const {
  IntMatrix a(vertex_count(), vertex_count());
  for (const auto& e : edges_) a(e.source, e.target) += 1;
  return a;
}

std::optional<std::size_t> Graph::first_inessential_vertex() const {
  std::vector<bool> has_in(vertex_count(), false), has_out(vertex_count(), false);
  for (const auto& e : edges_) {
    has_out[e.source] = true;
    has_in[e.target] = true;
  }
  for (std::size_t v = 0; v < vertex_count(); ++v)
    if (!has_in[v] || !has_out[v]) return v;
  return std::nullopt;
}

}  // namespace stablehom
