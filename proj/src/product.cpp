#include "prodcurves/product.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "prodcurves/error.hpp"

namespace prodcurves {

int cell_dim(const ProductCell& cell) {
  return static_cast<int>(std::count_if(cell.begin(), cell.end(), [](const Coord& c) { return c.is_edge; }));
}

namespace {

void check_cell(const Factors& factors, const ProductCell& cell) {
  if (cell.size() != factors.size())
    throw Error(ErrorKind::BadCoordinate, "cell has " + std::to_string(cell.size()) + " coordinates, expected " +
                                              std::to_string(factors.size()));
  for (std::size_t i = 0; i < cell.size(); ++i) {
    std::size_t bound = cell[i].is_edge ? factors[i].edge_count() : factors[i].vertex_count();
    if (cell[i].index >= bound)
      throw Error(ErrorKind::BadCoordinate, "coordinate " + std::to_string(i) + " out of range in factor '" +
                                                factors[i].name() + "'");
  }
}

}  // namespace

std::vector<SignedProductFace> signed_facets(const Factors& factors, const ProductCell& cell) {
  std::vector<SignedProductFace> out;
  int edges_before = 0;
  for (std::size_t i = 0; i < cell.size(); ++i) {
    if (!cell[i].is_edge) continue;
    const int parity = (edges_before % 2 == 0) ? 1 : -1;
    const auto& e = factors[i].edge(cell[i].index);
    ProductCell head = cell;
    head[i] = Coord::vertex(e.head);
    ProductCell tail = cell;
    tail[i] = Coord::vertex(e.tail);
    out.push_back({std::move(head), parity});
    out.push_back({std::move(tail), -parity});
    ++edges_before;
  }
  return out;
}

CellSet closure_of(const Factors& factors, const ProductCell& cell) {
  CellSet out{cell};
  std::vector<ProductCell> stack{cell};
  while (!stack.empty()) {
    ProductCell c = std::move(stack.back());
    stack.pop_back();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!c[i].is_edge) continue;
      const auto& e = factors[i].edge(c[i].index);
      for (std::size_t v : {e.tail, e.head}) {
        ProductCell f = c;
        f[i] = Coord::vertex(v);
        if (out.insert(f).second) stack.push_back(std::move(f));
      }
    }
  }
  return out;
}

CellSet face_closure(const Factors& factors, const CellSet& cells) {
  CellSet out;
  for (const auto& c : cells) {
    if (out.count(c)) continue;
    auto cl = closure_of(factors, c);
    out.insert(cl.begin(), cl.end());
  }
  return out;
}

ProductCell make_cell(const Factors& factors, std::span<const std::string> ids) {
  if (ids.size() != factors.size())
    throw Error(ErrorKind::BadCoordinate, "cell has " + std::to_string(ids.size()) + " coordinates, expected " +
                                              std::to_string(factors.size()));
  ProductCell cell;
  cell.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (auto v = factors[i].find_vertex(ids[i])) {
      cell.push_back(Coord::vertex(*v));
    } else if (auto e = factors[i].find_edge(ids[i])) {
      cell.push_back(Coord::edge(*e));
    } else {
      throw Error(ErrorKind::BadCoordinate, "no cell '" + ids[i] + "' in factor '" + factors[i].name() + "'");
    }
  }
  return cell;
}

std::vector<std::string> cell_ids(const Factors& factors, const ProductCell& cell) {
  std::vector<std::string> ids;
  ids.reserve(cell.size());
  for (std::size_t i = 0; i < cell.size(); ++i)
    ids.push_back(cell[i].is_edge ? factors[i].edge(cell[i].index).id : factors[i].vertex_id(cell[i].index));
  return ids;
}

std::string cell_label(const Factors& factors, const ProductCell& cell) {
  std::string out = "(";
  auto ids = cell_ids(factors, cell);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ",";
    out += ids[i];
  }
  return out + ")";
}

ProductSubcomplex::ProductSubcomplex(FactorsPtr factors, CellSet cells)
    : factors_(std::move(factors)), cells_(std::move(cells)) {
  if (!factors_) throw Error(ErrorKind::InvalidComplex, "product subcomplex without factors");
  for (const auto& c : cells_) {
    check_cell(*factors_, c);
    for (const auto& f : signed_facets(*factors_, c)) {
      if (!cells_.count(f.face))
        throw Error(ErrorKind::InvalidComplex, "cell set is not face-closed at " + label(c));
    }
  }
}

int ProductSubcomplex::dimension() const {
  int d = -1;
  for (const auto& c : cells_) d = std::max(d, cell_dim(c));
  return d;
}

std::vector<ProductCell> ProductSubcomplex::cells_of_dim(int k) const {
  std::vector<ProductCell> out;
  for (const auto& c : cells_)
    if (cell_dim(c) == k) out.push_back(c);
  return out;
}

std::vector<ProductCell> ProductSubcomplex::maximal_cells() const {
  CellSet proper_faces;
  for (const auto& c : cells_)
    for (const auto& f : signed_facets(*factors_, c)) proper_faces.insert(f.face);
  std::vector<ProductCell> out;
  for (const auto& c : cells_)
    if (!proper_faces.count(c)) out.push_back(c);
  return out;
}

bool operator==(const ProductSubcomplex& a, const ProductSubcomplex& b) {
  if (a.cells_ != b.cells_) return false;
  if (a.factors_ == b.factors_) return true;
  if (!a.factors_ || !b.factors_) return false;
  return *a.factors_ == *b.factors_;
}

ProductSubcomplex build_product(FactorsPtr factors, std::span<const ProductCell> top_cells) {
  for (const auto& c : top_cells) check_cell(*factors, c);
  CellSet seeds(top_cells.begin(), top_cells.end());
  auto closed = face_closure(*factors, seeds);
  return ProductSubcomplex(std::move(factors), std::move(closed));
}

ProductSubcomplex build_product(Factors factors, std::span<const ProductCell> top_cells) {
  return build_product(std::make_shared<const Factors>(std::move(factors)), top_cells);
}

ProductSubcomplex build_product(Factors factors, const std::vector<std::vector<std::string>>& top_cells) {
  auto ptr = std::make_shared<const Factors>(std::move(factors));
  std::vector<ProductCell> cells;
  for (const auto& ids : top_cells) cells.push_back(make_cell(*ptr, ids));
  return build_product(ptr, cells);
}

ProductSubcomplex full_product(FactorsPtr factors) {
  std::vector<ProductCell> tops{ProductCell{}};
  for (const auto& g : *factors) {
    std::vector<ProductCell> next;
    for (const auto& partial : tops) {
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto c = partial;
        c.push_back(Coord::edge(e));
        next.push_back(std::move(c));
      }
      // Isolated vertices carry top cells of their own.
      auto deg = g.degrees();
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (deg[v] != 0) continue;
        auto c = partial;
        c.push_back(Coord::vertex(v));
        next.push_back(std::move(c));
      }
    }
    tops = std::move(next);
  }
  return build_product(std::move(factors), tops);
}

Graph as_graph(const ProductSubcomplex& m) {
  if (m.arity() != 1) throw Error(ErrorKind::DimensionMismatch, "as_graph needs a 1-factor subcomplex");
  const Graph& g = m.factors()[0];
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  for (const auto& c : m.cells()) {
    if (c[0].is_edge) {
      const auto& e = g.edge(c[0].index);
      edges.push_back({e.id, g.vertex_id(e.tail), g.vertex_id(e.head)});
    } else {
      vertices.push_back(g.vertex_id(c[0].index));
    }
  }
  return build_graph(g.name(), std::move(vertices), std::move(edges));
}

std::vector<ProductSubcomplex> components(const ProductSubcomplex& m) {
  std::vector<ProductCell> verts = m.cells_of_dim(0);
  std::map<ProductCell, std::size_t> vid;
  for (std::size_t i = 0; i < verts.size(); ++i) vid[verts[i]] = i;
  std::vector<std::size_t> parent(verts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& c : m.cells_of_dim(1)) {
    auto f = signed_facets(m.factors(), c);
    parent[find(vid.at(f[0].face))] = find(vid.at(f[1].face));
  }
  // Each cell joins the component of its first vertex (minimal corner).
  std::map<std::size_t, CellSet> groups;
  for (const auto& c : m.cells()) {
    ProductCell corner = c;
    for (std::size_t i = 0; i < corner.size(); ++i)
      if (corner[i].is_edge) corner[i] = Coord::vertex(m.factors()[i].edge(corner[i].index).tail);
    groups[find(vid.at(corner))].insert(c);
  }
  std::vector<ProductSubcomplex> out;
  for (auto& [root, cells] : groups) out.emplace_back(m.factors_ptr(), std::move(cells));
  std::sort(out.begin(), out.end(),
            [](const ProductSubcomplex& a, const ProductSubcomplex& b) { return *a.cells().begin() < *b.cells().begin(); });
  return out;
}

namespace {

// Closed cell of one factor coordinate, as a set of coordinates.
bool coord_in_closure(const Graph& g, const Coord& x, const Coord& closed) {
  if (x == closed) return true;
  if (!closed.is_edge || x.is_edge) return false;
  const auto& e = g.edge(closed.index);
  return x.index == e.tail || x.index == e.head;
}

}  // namespace

bool open_cell_meets(const Factors& factors, const ProductCell& sigma, const ProductCell& tau) {
  // Open sigma_i is a vertex or an open arc; it meets closed tau_i iff it lies in it.
  for (std::size_t i = 0; i < sigma.size(); ++i)
    if (!coord_in_closure(factors[i], sigma[i], tau[i])) return false;
  return true;
}

bool is_face(const Factors& factors, const ProductCell& sigma, const ProductCell& tau) {
  return closure_of(factors, tau).count(sigma) > 0;
}

bool has_proper_cells(const ProductSubcomplex& m) {
  std::vector<ProductCell> cells(m.cells().begin(), m.cells().end());
  for (const auto& sigma : cells) {
    for (const auto& tau : cells) {
      if (!open_cell_meets(m.factors(), sigma, tau)) continue;
      if (!is_face(m.factors(), sigma, tau)) return false;
    }
  }
  return true;
}

}  // namespace prodcurves
