#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace prodcurves {

struct EdgeSpec {
  std::string id;
  std::string tail;
  std::string head;
};

struct GraphEdge {
  std::string id;
  std::size_t tail;
  std::size_t head;
};

/// A regular 1-dimensional CW complex. Loops are rejected, parallel edges are
/// allowed. Vertex and edge ids share one namespace so that a coordinate id in
/// a product cell names exactly one cell of the factor.
class Graph {
 public:
  Graph() = default;

  const std::string& name() const { return name_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::string& vertex_id(std::size_t v) const { return vertices_.at(v); }
  const GraphEdge& edge(std::size_t e) const { return edges_.at(e); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }

  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::optional<std::size_t> find_edge(std::string_view id) const;
  bool has_id(std::string_view id) const;

  std::vector<std::size_t> degrees() const;
  // Edge indices incident to each vertex.
  std::vector<std::vector<std::size_t>> incidence() const;

  // Appending keeps existing indices stable; both throw on invalid input.
  std::size_t add_vertex(std::string id);
  std::size_t add_edge(std::string id, std::size_t tail, std::size_t head);

  // Returns an id not used in this graph, derived from `stem`.
  std::string fresh_id(std::string_view stem) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<GraphEdge> edges_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> edge_index_;

  friend Graph build_graph(std::string, std::vector<std::string>, std::vector<EdgeSpec>);
};

Graph build_graph(std::string name, std::vector<std::string> vertices, std::vector<EdgeSpec> edges);

struct GraphProfile {
  std::size_t components = 0;
  std::vector<std::string> endpoint_vertices;
  bool is_circle = false;
  bool is_tree = false;
  long b1 = 0;
};

GraphProfile graph_profile(const Graph& g);

// Connected component label per vertex.
std::vector<std::size_t> vertex_components(const Graph& g, std::size_t* count = nullptr);

}  // namespace prodcurves
