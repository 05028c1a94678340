#include "prodcurves/graph.hpp"

#include <numeric>

#include "prodcurves/error.hpp"

namespace prodcurves {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorKind::BadCoordinate: return "BadCoordinate";
    case ErrorKind::InvalidComplex: return "InvalidComplex";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotASurface: return "NotASurface";
    case ErrorKind::EmptyIndexSet: return "EmptyIndexSet";
    case ErrorKind::CellNotInProjection: return "CellNotInProjection";
    case ErrorKind::NotRamified: return "NotRamified";
    case ErrorKind::FactorizationMismatch: return "FactorizationMismatch";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotTwoDimensional: return "NotTwoDimensional";
    case ErrorKind::NotSimplePath: return "NotSimplePath";
    case ErrorKind::ArcNotInProduct: return "ArcNotInProduct";
    case ErrorKind::BadWitness: return "BadWitness";
    case ErrorKind::BadDimensionSplit: return "BadDimensionSplit";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::NotExportable: return "NotExportable";
    case ErrorKind::SchemaViolation: return "SchemaViolation";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

std::optional<std::size_t> Graph::find_vertex(std::string_view id) const {
  auto it = vertex_index_.find(std::string(id));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Graph::find_edge(std::string_view id) const {
  auto it = edge_index_.find(std::string(id));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

bool Graph::has_id(std::string_view id) const {
  return find_vertex(id).has_value() || find_edge(id).has_value();
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> deg(vertices_.size(), 0);
  for (const auto& e : edges_) {
    ++deg[e.tail];
    ++deg[e.head];
  }
  return deg;
}

std::vector<std::vector<std::size_t>> Graph::incidence() const {
  std::vector<std::vector<std::size_t>> inc(vertices_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    inc[edges_[e].tail].push_back(e);
    inc[edges_[e].head].push_back(e);
  }
  return inc;
}

std::size_t Graph::add_vertex(std::string id) {
  if (has_id(id)) throw Error(ErrorKind::DuplicateId, "id '" + id + "' already used in graph '" + name_ + "'");
  vertex_index_.emplace(id, vertices_.size());
  vertices_.push_back(std::move(id));
  return vertices_.size() - 1;
}

std::size_t Graph::add_edge(std::string id, std::size_t tail, std::size_t head) {
  if (has_id(id)) throw Error(ErrorKind::DuplicateId, "id '" + id + "' already used in graph '" + name_ + "'");
  if (tail >= vertices_.size() || head >= vertices_.size())
    throw Error(ErrorKind::DanglingEndpoint, "edge '" + id + "' references a missing vertex");
  if (tail == head) throw Error(ErrorKind::LoopEdge, "edge '" + id + "' has equal endpoints");
  edge_index_.emplace(id, edges_.size());
  edges_.push_back({std::move(id), tail, head});
  return edges_.size() - 1;
}

std::string Graph::fresh_id(std::string_view stem) const {
  std::string candidate(stem);
  for (std::size_t k = 1; has_id(candidate); ++k) candidate = std::string(stem) + "_" + std::to_string(k);
  return candidate;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.name_ != b.name_ || a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const auto& x = a.edges_[i];
    const auto& y = b.edges_[i];
    if (x.id != y.id || x.tail != y.tail || x.head != y.head) return false;
  }
  return true;
}

Graph build_graph(std::string name, std::vector<std::string> vertices, std::vector<EdgeSpec> edges) {
  Graph g;
  g.name_ = std::move(name);
  for (auto& v : vertices) g.add_vertex(std::move(v));
  for (auto& e : edges) {
    auto t = g.find_vertex(e.tail);
    auto h = g.find_vertex(e.head);
    if (!t || !h) {
      if (g.find_edge(e.id) || g.find_vertex(e.id))
        throw Error(ErrorKind::DuplicateId, "id '" + e.id + "' already used in graph '" + g.name_ + "'");
      throw Error(ErrorKind::DanglingEndpoint, "edge '" + e.id + "' references a missing vertex");
    }
    g.add_edge(std::move(e.id), *t, *h);
  }
  return g;
}

std::vector<std::size_t> vertex_components(const Graph& g, std::size_t* count) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges()) parent[find(e.tail)] = find(e.head);
  std::vector<std::size_t> label(g.vertex_count());
  std::vector<std::size_t> remap(g.vertex_count(), SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::size_t r = find(v);
    if (remap[r] == SIZE_MAX) remap[r] = next++;
    label[v] = remap[r];
  }
  if (count) *count = next;
  return label;
}

GraphProfile graph_profile(const Graph& g) {
  GraphProfile p;
  vertex_components(g, &p.components);
  auto deg = g.degrees();
  bool all_two = g.vertex_count() > 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (deg[v] == 1) p.endpoint_vertices.push_back(g.vertex_id(v));
    if (deg[v] != 2) all_two = false;
  }
  p.b1 = static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count()) + static_cast<long>(p.components);
  p.is_circle = p.components == 1 && all_two;
  p.is_tree = p.components == 1 && p.b1 == 0;
  return p;
}

}  // namespace prodcurves
