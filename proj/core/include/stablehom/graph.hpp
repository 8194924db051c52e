#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "stablehom/exact_linear.hpp"

namespace stablehom {

struct GraphEdge {
  std::string id;
  std::size_t source = 0;
  std::size_t target = 0;
};

/// Finite directed graph; loops and parallel edges are allowed.
class Graph {
 public:
  Graph() = default;
  /// Throws DomainMismatch on duplicate ids or dangling endpoints.
  Graph(std::vector<std::string> vertex_ids, std::vector<GraphEdge> edges);

  struct EdgeSpec {
    std::string id;
    std::string source;
    std::string target;
  };
  static Graph from_ids(std::vector<std::string> vertex_ids, const std::vector<EdgeSpec>& edges);

  std::size_t vertex_count() const noexcept { return vertex_ids_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::string>& vertex_ids() const noexcept { return vertex_ids_; }
  const std::vector<GraphEdge>& edges() const noexcept { return edges_; }

  std::optional<std::size_t> vertex_index(const std::string& id) const;
  std::optional<std::size_t> edge_index(const std::string& id) const;

  /// A[v][w] = number of edges v -> w.
  IntMatrix adjacency() const;

  /// First vertex without an incoming or without an outgoing edge.
  std::optional<std::size_t> first_inessential_vertex() const;
  bool essential() const { return !first_inessential_vertex().has_value(); }

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<GraphEdge> edges_;
  std::unordered_map<std::string, std::size_t> vertex_lookup_;
  std::unordered_map<std::string, std::size_t> edge_lookup_;
};

}  // namespace stablehom
