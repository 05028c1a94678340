#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "prodcurves/algebra.hpp"
#include "prodcurves/error.hpp"
#include "prodcurves/face_poset.hpp"
#include "prodcurves/fibers.hpp"
#include "prodcurves/graph.hpp"
#include "prodcurves/product.hpp"
#include "prodcurves/treeembed.hpp"

namespace support {

using namespace prodcurves;

inline Graph cycle(const std::string& name, int n, const std::string& pre = "v") {
  std::vector<std::string> vs;
  std::vector<EdgeSpec> es;
  for (int i = 0; i < n; ++i) vs.push_back(pre + std::to_string(i));
  for (int i = 0; i < n; ++i)
    es.push_back({pre + "e" + std::to_string(i), vs[static_cast<std::size_t>(i)],
                  vs[static_cast<std::size_t>((i + 1) % n)]});
  return build_graph(name, vs, es);
}

inline Graph theta() {
  return build_graph("theta", {"a0", "a1"}, {{"t0", "a0", "a1"}, {"t1", "a0", "a1"}, {"t2", "a0", "a1"}});
}

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvariantViolation;
}

inline FactorsPtr share(Factors f) { return std::make_shared<const Factors>(std::move(f)); }

// Top squares of a 2-factor product, in lexicographic edge order.
inline std::vector<ProductCell> all_squares(const Factors& f) {
  std::vector<ProductCell> out;
  for (std::size_t a = 0; a < f[0].edge_count(); ++a)
    for (std::size_t b = 0; b < f[1].edge_count(); ++b) out.push_back({Coord::edge(a), Coord::edge(b)});
  return out;
}

// Subcomplex generated by the squares selected in `mask`.
inline ProductSubcomplex from_mask(const FactorsPtr& f, std::size_t mask) {
  auto squares = all_squares(*f);
  std::vector<ProductCell> tops;
  for (std::size_t i = 0; i < squares.size(); ++i)
    if (mask >> i & 1) tops.push_back(squares[i]);
  return build_product(f, tops);
}

// The 511 nonempty square-generated subcomplexes of theta x theta.
inline std::vector<ProductSubcomplex> theta_census() {
  auto f = share({theta(), theta()});
  std::vector<ProductSubcomplex> out;
  for (std::size_t mask = 1; mask < 512; ++mask) out.push_back(from_mask(f, mask));
  return out;
}

// Random multigraph without loops; may be disconnected.
inline Graph random_graph(std::mt19937_64& rng, const std::string& name, int max_vertices = 5, int max_edges = 7) {
  const int nv = std::uniform_int_distribution<int>(2, max_vertices)(rng);
  const int ne = std::uniform_int_distribution<int>(1, max_edges)(rng);
  std::vector<std::string> vs;
  for (int i = 0; i < nv; ++i) vs.push_back(name + "v" + std::to_string(i));
  std::vector<EdgeSpec> es;
  std::uniform_int_distribution<int> pick(0, nv - 1);
  for (int i = 0; i < ne; ++i) {
    int a = pick(rng), b = pick(rng);
    while (b == a) b = pick(rng);
    es.push_back({name + "e" + std::to_string(i), vs[static_cast<std::size_t>(a)], vs[static_cast<std::size_t>(b)]});
  }
  return build_graph(name, vs, es);
}

// Circle with shuffled vertex names and random edge directions.
inline Graph shuffled_circle(std::mt19937_64& rng, const std::string& name, int edges) {
  std::vector<int> order(static_cast<std::size_t>(edges));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::string> vs;
  for (int i : order) vs.push_back(name + "x" + std::to_string(i));
  std::vector<EdgeSpec> es;
  for (int i = 0; i < edges; ++i) {
    const auto a = static_cast<std::size_t>(i), b = static_cast<std::size_t>((i + 1) % edges);
    if (rng() % 2) es.push_back({name + "f" + std::to_string(order[a]), vs[a], vs[b]});
    else es.push_back({name + "f" + std::to_string(order[a]), vs[b], vs[a]});
  }
  return build_graph(name, vs, es);
}

// Rank by fraction-free (Bareiss) elimination.
inline std::size_t bareiss_rank(IntMatrix m) {
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t p = rank;
    while (p < m.rows() && m.at(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(rank, c));
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      for (std::size_t c = col + 1; c < m.cols(); ++c)
        m.at(r, c) = (m.at(rank, col) * m.at(r, c) - m.at(r, col) * m.at(rank, c)) / prev;
      m.at(r, col) = 0;
    }
    prev = m.at(rank, col);
    ++rank;
  }
  return rank;
}

// Determinant of a square matrix by cofactor-free Bareiss elimination.
inline BigInt bareiss_det(IntMatrix m) {
  const std::size_t n = m.rows();
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m.at(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m.at(p, c), m.at(k, c));
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r)
      for (std::size_t c = k + 1; c < n; ++c) m.at(r, c) = (m.at(k, k) * m.at(r, c) - m.at(r, k) * m.at(k, c)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim = 20, int bound = 9) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<int> val(-bound, bound);
  std::uniform_int_distribution<int> sparse(0, 3);
  IntMatrix m(dim(rng), dim(rng));
  // Mix in sparse and low-rank matrices so that rank deficiency is exercised.
  const int mode = sparse(rng);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = (mode == 0 && val(rng) % 3 != 0) ? 0 : val(rng);
  if (mode == 1 && m.rows() > 2)
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(m.rows() - 1, c) = 2 * m.at(0, c) - 3 * m.at(1, c);
  return m;
}

// Same complex with every cell renamed and cells of each dimension added in
// shuffled order.
inline FacePoset relabel(const FacePoset& x, std::mt19937_64& rng, const std::string& prefix = "r") {
  FacePoset out;
  std::vector<std::size_t> map(x.size());
  for (int k = 0; k <= x.dimension(); ++k) {
    auto cells = x.cells_of_dim(k);
    std::shuffle(cells.begin(), cells.end(), rng);
    for (auto c : cells) {
      std::vector<SignedFace> b;
      for (const auto& f : x.boundary(c)) b.push_back({map[f.cell], f.sign});
      map[c] = out.add_cell(prefix + x.label(c), k, b);
    }
  }
  return out;
}

// Random simple edge path in g1 x g2 by a self-avoiding walk; at least one edge.
inline EdgePath random_arc(std::mt19937_64& rng, const Factors& f, std::size_t max_edges = 12) {
  std::uniform_int_distribution<std::size_t> len(1, max_edges);
  for (;;) {
    ProductCell at{Coord::vertex(rng() % f[0].vertex_count()), Coord::vertex(rng() % f[1].vertex_count())};
    EdgePath p{{at}, {}};
    std::set<ProductCell> seen{at};
    const std::size_t target = len(rng);
    while (p.edges.size() < target) {
      std::vector<std::pair<ProductCell, ProductCell>> moves;
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t e = 0; e < f[i].edge_count(); ++e) {
          const auto& ge = f[i].edge(e);
          const auto here = p.vertices.back()[i].index;
          if (ge.tail != here && ge.head != here) continue;
          ProductCell next = p.vertices.back();
          next[i] = Coord::vertex(ge.tail == here ? ge.head : ge.tail);
          ProductCell edge = p.vertices.back();
          edge[i] = Coord::edge(e);
          if (!seen.count(next)) moves.push_back({next, edge});
        }
      if (moves.empty()) break;
      auto [next, edge] = moves[rng() % moves.size()];
      seen.insert(next);
      p.vertices.push_back(next);
      p.edges.push_back(edge);
    }
    if (!p.edges.empty()) return p;
  }
}

// Cells of `cells` whose coordinates all index into the first counts of each factor.
inline CellSet old_part(const CellSet& cells, const Factors& old) {
  CellSet out;
  for (const auto& c : cells) {
    bool inside = true;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i].index >= (c[i].is_edge ? old[i].edge_count() : old[i].vertex_count())) inside = false;
    if (inside) out.insert(c);
  }
  return out;
}

// chi = 1 and the edges on a single square form one cycle.
inline bool is_disc(const Factors& f, const CellSet& squares) {
  auto closed = face_closure(f, squares);
  long chi = 0;
  for (const auto& c : closed) chi += cell_dim(c) % 2 ? -1 : 1;
  if (chi != 1) return false;
  std::map<ProductCell, int> count;
  for (const auto& s : squares)
    for (const auto& fc : signed_facets(f, s)) ++count[fc.face];
  std::map<ProductCell, std::vector<ProductCell>> adj;
  std::size_t edges = 0;
  for (const auto& [e, n] : count) {
    if (n > 2) return false;
    if (n != 1) continue;
    ++edges;
    for (const auto& fc : signed_facets(f, e)) adj[fc.face].push_back(e);
  }
  if (edges == 0) return false;
  for (const auto& [v, es] : adj)
    if (es.size() != 2) return false;
  std::set<ProductCell> seen{adj.begin()->first};
  std::vector<ProductCell> stack{adj.begin()->first};
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (const auto& e : adj[v])
      for (const auto& fc : signed_facets(f, e))
        if (seen.insert(fc.face).second) stack.push_back(fc.face);
  }
  return seen.size() == adj.size();
}

// First failure of the fiber identities over every nonempty proper factor
// set; empty when all hold. Equality of circle vertex fibers needs a connected base.
inline std::string fiber_property_defect(const ProductSubcomplex& m) {
  const std::size_t n = m.arity();
  auto includes = [](const CellSet& big, const CellSet& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) members.push_back(i);
    const IndexSet J(members);
    const auto base = project(m, J.complement(n));
    const auto pj = project(m, J).cells();
    const auto tops = base.maximal_cells();
    std::map<ProductCell, CellSet> fib;
    for (const auto& tau : base.cells()) fib[tau] = fiber_complex(m, tau, J).cells();
    for (const auto& tau : base.cells()) {
      for (const auto& face : closure_of(base.factors(), tau))
        if (!includes(fib[face], fib[tau])) return "fiber shrinks onto a face over " + base.label(tau);
      CellSet over;
      for (const auto& top : tops)
        if (is_face(base.factors(), tau, top)) over.insert(fib[top].begin(), fib[top].end());
      if (over != fib[tau]) return "fiber is not the union over top cofaces at " + base.label(tau);
    }
    for (int k = 0; k <= base.dimension(); ++k) {
      CellSet u;
      for (const auto& tau : base.cells_of_dim(k)) u.insert(fib[tau].begin(), fib[tau].end());
      if (u != pj) return "fibers miss the projection in dimension " + std::to_string(k);
    }
    bool all_circles = J.size() == 1;
    for (const auto& v : base.cells_of_dim(0))
      if (all_circles) all_circles = graph_profile(as_graph(fiber_complex(m, v, J))).is_circle;
    if (all_circles && components(base).size() == 1)
      for (const auto& v : base.cells_of_dim(0))
        if (fib[v] != pj) return "circle fiber differs from the projection over " + base.label(v);
  }
  return {};
}

}  // namespace support
