#include "prodcurves/treeembed.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "prodcurves/algebra.hpp"
#include "prodcurves/error.hpp"

namespace prodcurves {

EdgePath EdgePath::reversed() const {
  EdgePath out{{vertices.rbegin(), vertices.rend()}, {edges.rbegin(), edges.rend()}};
  return out;
}

void EdgePath::append(const EdgePath& next) {
  if (vertices.empty()) {
    *this = next;
    return;
  }
  if (next.vertices.empty()) return;
  if (next.vertices.front() != vertices.back())
    throw Error(ErrorKind::InvariantViolation, "appended path does not continue");
  vertices.insert(vertices.end(), next.vertices.begin() + 1, next.vertices.end());
  edges.insert(edges.end(), next.edges.begin(), next.edges.end());
}

CellSet EdgePath::cells() const {
  CellSet out(vertices.begin(), vertices.end());
  out.insert(edges.begin(), edges.end());
  return out;
}

namespace {

bool in_product(const Factors& f, const ProductCell& c) {
  if (c.size() != f.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto limit = c[i].is_edge ? f[i].edge_count() : f[i].vertex_count();
    if (c[i].index >= limit) return false;
  }
  return true;
}

ProductCell swapped(const ProductCell& c) { return {c.at(1), c.at(0)}; }

EdgePath swapped(const EdgePath& p) {
  EdgePath out;
  for (const auto& v : p.vertices) out.vertices.push_back(swapped(v));
  for (const auto& e : p.edges) out.edges.push_back(swapped(e));
  return out;
}

CellSet swapped(const CellSet& s) {
  CellSet out;
  for (const auto& c : s) out.insert(swapped(c));
  return out;
}

void check_path(const Factors& f, const EdgePath& a) {
  if (a.vertices.size() != a.edges.size() + 1) throw Error(ErrorKind::ArcNotInProduct, "path is malformed");
  for (const auto& c : a.vertices)
    if (!in_product(f, c) || cell_dim(c) != 0) throw Error(ErrorKind::ArcNotInProduct, "path vertex outside the product");
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    if (!in_product(f, a.edges[i]) || cell_dim(a.edges[i]) != 1)
      throw Error(ErrorKind::ArcNotInProduct, "path edge outside the product");
    auto [t, h] = product_edge_ends(f, a.edges[i]);
    const bool ok = (t == a.vertices[i] && h == a.vertices[i + 1]) || (h == a.vertices[i] && t == a.vertices[i + 1]);
    if (!ok) throw Error(ErrorKind::ArcNotInProduct, "path edge " + std::to_string(i) + " does not join its vertices");
  }
}

// Boundary (k-1)-cells of a set of k-cells: those on exactly one of them.
std::map<ProductCell, int> facet_counts(const Factors& f, const CellSet& cells, int k) {
  std::map<ProductCell, int> count;
  for (const auto& c : cells)
    if (cell_dim(c) == k)
      for (const auto& s : signed_facets(f, c)) ++count[s.face];
  return count;
}

CellSet boundary_of(const Factors& f, const CellSet& cells, int k) {
  CellSet tops;
  for (const auto& [c, n] : facet_counts(f, cells, k))
    if (n == 1) tops.insert(c);
  return face_closure(f, tops);
}

bool is_point_homology(const HomologySummary& h) {
  for (std::size_t i = 0; i < h.betti.size(); ++i)
    if (h.betti[i] != (i == 0 ? 1 : 0)) return false;
  return std::all_of(h.torsion.begin(), h.torsion.end(), [](const auto& t) { return t.empty(); });
}

bool is_sphere_homology(const HomologySummary& h, int d) {
  if (d == 0) return h.betti.size() == 1 && h.betti[0] == 2;
  if (static_cast<int>(h.betti.size()) != d + 1) return false;
  for (int i = 0; i <= d; ++i)
    if (h.betti[static_cast<std::size_t>(i)] != ((i == 0 || i == d) ? 1 : 0)) return false;
  return std::all_of(h.torsion.begin(), h.torsion.end(), [](const auto& t) { return t.empty(); });
}

std::string link_defect(const FacePoset& x) {
  std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> corners;
  for (auto f : x.cells_of_dim(2)) {
    std::map<std::size_t, std::vector<std::size_t>> at;
    for (const auto& b : x.boundary(f)) {
      auto [t, h] = edge_endpoints(x, b.cell);
      at[t].push_back(b.cell);
      at[h].push_back(b.cell);
    }
    for (auto& [v, es] : at) corners[v].push_back({es.at(0), es.at(1)});
  }
  for (auto& [v, links] : corners) {
    std::map<std::size_t, std::vector<std::size_t>> adj;
    for (auto [a, b] : links) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    for (auto& [node, nb] : adj)
      if (nb.size() > 2) return "link of vertex '" + x.label(v) + "' branches";
    std::set<std::size_t> seen{adj.begin()->first};
    std::vector<std::size_t> stack{adj.begin()->first};
    while (!stack.empty()) {
      auto a = stack.back();
      stack.pop_back();
      for (auto b : adj[a])
        if (seen.insert(b).second) stack.push_back(b);
    }
    if (seen.size() != adj.size()) return "link of vertex '" + x.label(v) + "' is disconnected";
  }
  return {};
}

std::size_t add_pendant(Graph& g, std::size_t v, std::vector<std::string>& names) {
  const std::string vid = g.vertex_id(v);
  auto nv = g.add_vertex(g.fresh_id(vid + "'"));
  auto e = g.add_edge(g.fresh_id(vid + "-" + g.vertex_id(nv)), v, nv);
  names.push_back(g.edge(e).id);
  return e;
}

}  // namespace

std::pair<ProductCell, ProductCell> product_edge_ends(const Factors& f, const ProductCell& edge) {
  if (cell_dim(edge) != 1) throw Error(ErrorKind::InvariantViolation, "not a 1-cell");
  for (std::size_t i = 0; i < edge.size(); ++i) {
    if (!edge[i].is_edge) continue;
    const auto& e = f.at(i).edge(edge[i].index);
    ProductCell t = edge, h = edge;
    t[i] = Coord::vertex(e.tail);
    h[i] = Coord::vertex(e.head);
    return {t, h};
  }
  throw Error(ErrorKind::InvariantViolation, "not a 1-cell");
}

EdgePath path_from_edges(const Factors& f, ProductCell start, std::span<const ProductCell> edges) {
  EdgePath p;
  p.vertices.push_back(std::move(start));
  for (const auto& e : edges) {
    if (!in_product(f, e) || cell_dim(e) != 1) throw Error(ErrorKind::ArcNotInProduct, "edge outside the product");
    auto [t, h] = product_edge_ends(f, e);
    if (t == p.vertices.back()) p.vertices.push_back(h);
    else if (h == p.vertices.back()) p.vertices.push_back(t);
    else throw Error(ErrorKind::ArcNotInProduct, "edge " + cell_label(f, e) + " does not continue the path");
    p.edges.push_back(e);
  }
  return p;
}

StaircaseArc normalize_staircase(const Factors& f, const EdgePath& a) {
  if (f.size() != 2) throw Error(ErrorKind::ArcNotInProduct, "staircases live in a product of two graphs");
  check_path(f, a);
  if (a.edges.empty()) throw Error(ErrorKind::NotSimplePath, "path has no edges");
  std::set<ProductCell> seen;
  for (const auto& v : a.vertices)
    if (!seen.insert(v).second) throw Error(ErrorKind::NotSimplePath, "path revisits " + cell_label(f, v));
  StaircaseArc out;
  out.transposed = a.edges.front()[0].is_edge;
  out.path = out.transposed ? swapped(a) : a;
  for (std::size_t i = 0; i < out.path.edges.size(); ++i) {
    const bool vertical = out.path.edges[i][1].is_edge;
    if (out.segments.empty() || out.segments.back().vertical != vertical) out.segments.push_back({vertical, i, i});
    out.segments.back().last = i + 1;
  }
  return out;
}

StaircaseDisc staircase_disc(const Graph& k1, const Graph& k2, const StaircaseArc& a) {
  StaircaseDisc out;
  out.transposed = a.transposed;
  Graph g1 = a.transposed ? k2 : k1;
  Graph g2 = a.transposed ? k1 : k2;
  check_path(Factors{g1, g2}, a.path);
  if (a.segments.empty() || !a.segments.front().vertical)
    throw Error(ErrorKind::ArcNotInProduct, "staircase must start with a vertical segment");
  const std::size_t n1 = g1.vertex_count(), e1 = g1.edge_count();
  const std::size_t n2 = g2.vertex_count(), e2 = g2.edge_count();
  std::vector<std::string> names1, names2;
  std::map<std::size_t, std::size_t> pend1, pend2;
  auto p1 = [&](std::size_t v) {
    auto it = pend1.find(v);
    return it != pend1.end() ? it->second : pend1[v] = add_pendant(g1, v, names1);
  };
  auto p2 = [&](std::size_t w) {
    auto it = pend2.find(w);
    return it != pend2.end() ? it->second : pend2[w] = add_pendant(g2, w, names2);
  };
  CellSet disc;
  auto sq = [&](std::size_t x, std::size_t y) { disc.insert({Coord::edge(x), Coord::edge(y)}); };
  const auto& path = a.path;
  for (std::size_t s = 0; s < a.segments.size(); s += 2) {
    const auto& vseg = a.segments[s];
    const std::size_t v = path.vertices[vseg.first][0].index;
    const std::size_t w = path.vertices[vseg.first][1].index;
    const std::size_t w_next = path.vertices[vseg.last][1].index;
    sq(p1(v), p2(w));
    for (std::size_t i = vseg.first; i < vseg.last; ++i) sq(p1(v), path.edges[i][1].index);
    if (s + 1 >= a.segments.size()) break;
    const auto& hseg = a.segments[s + 1];
    sq(p1(v), p2(w_next));
    for (std::size_t i = hseg.first; i < hseg.last; ++i) sq(path.edges[i][0].index, p2(w_next));
  }

  const Factors fs{g1, g2};
  const CellSet arc_edges(path.edges.begin(), path.edges.end());
  std::map<ProductCell, std::vector<ProductCell>> adj;
  for (const auto& [c, count] : facet_counts(fs, disc, 2)) {
    if (count != 1 || arc_edges.count(c)) continue;
    auto [t, h] = product_edge_ends(fs, c);
    adj[t].push_back(c);
    adj[h].push_back(c);
  }
  EdgePath free_path{{path.vertices.back()}, {}};
  std::set<ProductCell> used;
  while (free_path.vertices.back() != path.vertices.front()) {
    const auto& at = adj[free_path.vertices.back()];
    auto next = std::find_if(at.begin(), at.end(), [&](const ProductCell& e) { return !used.count(e); });
    if (next == at.end()) throw Error(ErrorKind::InvariantViolation, "disc boundary does not close up");
    used.insert(*next);
    auto [t, h] = product_edge_ends(fs, *next);
    free_path.edges.push_back(*next);
    free_path.vertices.push_back(t == free_path.vertices.back() ? h : t);
  }

  auto fp = std::make_shared<const Factors>(fs);
  auto closed = face_closure(fs, disc);
  if (auto why = ball_defect(fp, closed, 2); !why.empty())
    throw Error(ErrorKind::InvariantViolation, "staircase union is not a disc: " + why);
  CellSet old;
  for (const auto& c : closed) {
    bool inside = true;
    for (std::size_t i = 0; i < 2; ++i) {
      const auto limit = c[i].is_edge ? (i == 0 ? e1 : e2) : (i == 0 ? n1 : n2);
      if (c[i].index >= limit) inside = false;
    }
    if (inside) old.insert(c);
  }
  if (old != path.cells()) throw Error(ErrorKind::InvariantViolation, "disc meets the old product outside the arc");

  if (a.transposed) {
    out.k1 = std::move(g2);
    out.k2 = std::move(g1);
    out.disc = swapped(disc);
    out.free_path = swapped(free_path);
    out.pendants1 = std::move(names2);
    out.pendants2 = std::move(names1);
  } else {
    out.k1 = std::move(g1);
    out.k2 = std::move(g2);
    out.disc = std::move(disc);
    out.free_path = std::move(free_path);
    out.pendants1 = std::move(names1);
    out.pendants2 = std::move(names2);
  }
  return out;
}

std::string ball_defect(const FactorsPtr& f, const CellSet& cells, int k) {
  if (cells.empty()) return "image is empty";
  CellSet tops;
  for (const auto& c : cells) {
    if (!in_product(*f, c)) return "cell outside the target";
    const int d = cell_dim(c);
    if (d > k) return "cell " + cell_label(*f, c) + " above dimension " + std::to_string(k);
    if (d == k) tops.insert(c);
  }
  if (face_closure(*f, tops) != cells) return "image is not a pure, face-closed " + std::to_string(k) + "-complex";
  if (k == 0) return cells.size() == 1 ? std::string{} : "vertex image is not a single vertex";
  for (const auto& [c, n] : facet_counts(*f, cells, k))
    if (n > 2) return "cell " + cell_label(*f, c) + " lies on " + std::to_string(n) + " top cells";
  auto x = to_face_poset(ProductSubcomplex(f, cells));
  if (!is_point_homology(homology_summary(x))) return "image is not acyclic";
  auto rim = boundary_of(*f, cells, k);
  if (rim.empty()) return "image has no boundary";
  if (!is_sphere_homology(homology_summary(to_face_poset(ProductSubcomplex(f, rim))), k - 1))
    return "boundary is not a " + std::to_string(k - 1) + "-sphere";
  if (k == 2) return link_defect(x);
  return {};
}

ProductSubcomplex image_complex(const CellwiseMap& h) {
  CellSet all;
  for (const auto& s : h.image) all.insert(s.begin(), s.end());
  return ProductSubcomplex(h.target.factors_ptr(), std::move(all));
}

MapVerification verify_cellwise_map(const CellwiseMap& h) {
  MapVerification r;
  const auto& x = h.source;
  const auto& f = h.target.factors();
  auto fail = [&](std::string why, std::size_t a, std::optional<std::size_t> b = std::nullopt) {
    r.passed = false;
    r.violation = std::move(why);
    r.first_cell = x.label(a);
    if (b) r.second_cell = x.label(*b);
    return r;
  };
  if (h.image.size() != x.size()) {
    r.passed = false;
    r.violation = "image has " + std::to_string(h.image.size()) + " entries for " + std::to_string(x.size()) + " cells";
    return r;
  }
  for (std::size_t c = 0; c < x.size(); ++c) {
    const auto& img = h.image[c];
    for (const auto& cell : img)
      if (!h.target.contains(cell)) return fail("image leaves the target", c);
    if (auto why = ball_defect(h.target.factors_ptr(), img, x.dim(c)); !why.empty()) return fail(why, c);
    CellSet faces;
    for (auto d : x.closure(c))
      if (d != c) faces.insert(h.image[d].begin(), h.image[d].end());
    if (x.dim(c) > 0 && boundary_of(f, img, x.dim(c)) != faces)
      return fail("image boundary differs from the images of the faces", c);
  }
  std::vector<std::vector<std::size_t>> cl(x.size());
  for (std::size_t c = 0; c < x.size(); ++c) {
    cl[c] = x.closure(c);
    std::sort(cl[c].begin(), cl[c].end());
  }
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = a + 1; b < x.size(); ++b) {
      CellSet meet;
      std::set_intersection(h.image[a].begin(), h.image[a].end(), h.image[b].begin(), h.image[b].end(),
                            std::inserter(meet, meet.end()));
      std::vector<std::size_t> common;
      std::set_intersection(cl[a].begin(), cl[a].end(), cl[b].begin(), cl[b].end(), std::back_inserter(common));
      CellSet expected;
      for (auto c : common) expected.insert(h.image[c].begin(), h.image[c].end());
      if (meet != expected) return fail("images intersect outside the image of the common faces", a, b);
    }
  return r;
}

TreeEmbedding embed_in_trees(const FacePoset& x, std::span<const CollapseStep> witness) {
  auto rest = replay(x, witness);
  if (rest.size() != 1) throw Error(ErrorKind::BadWitness, "witness stops at " + std::to_string(rest.size()) + " cells");
  Graph t1 = build_graph("T1", {"s"}, {});
  Graph t2 = build_graph("T2", {"s"}, {});
  std::vector<CellSet> image(x.size());
  std::vector<EdgePath> paths(x.size());
  const std::size_t star = *x.find(rest.label(0));
  image[star] = {ProductCell{Coord::vertex(0), Coord::vertex(0)}};
  std::vector<std::string> unused;

  auto vertex_image = [&](std::size_t v) { return *image[v].begin(); };

  for (auto it = witness.rbegin(); it != witness.rend(); ++it) {
    const std::size_t c = *x.find(it->free_cell);
    const std::size_t d = *x.find(it->coface);
    if (x.dim(c) == 0) {
      // Edge d sticks out of the vertex u0 at its other end.
      auto [tail, head] = edge_endpoints(x, d);
      const std::size_t u0 = tail == c ? head : tail;
      auto at = vertex_image(u0);
      const std::size_t e = add_pendant(t2, at[1].index, unused);
      ProductCell out{at[0], Coord::vertex(t2.edge(e).head)};
      ProductCell edge{at[0], Coord::edge(e)};
      EdgePath p{{at, out}, {edge}};
      image[c] = {out};
      paths[d] = head == c ? p : p.reversed();
      image[d] = paths[d].cells();
      continue;
    }
    // 2-cell d attached along its boundary minus the free edge c, from head(c) to tail(c).
    auto [ctail, chead] = edge_endpoints(x, c);
    std::vector<std::size_t> others;
    for (const auto& b : x.boundary(d))
      if (b.cell != c) others.push_back(b.cell);
    EdgePath arc;
    std::size_t at = chead;
    std::set<std::size_t> done;
    while (done.size() < others.size()) {
      auto next = std::find_if(others.begin(), others.end(), [&](std::size_t e) {
        if (done.count(e)) return false;
        auto [t, h] = edge_endpoints(x, e);
        return t == at || h == at;
      });
      if (next == others.end()) throw Error(ErrorKind::InvariantViolation, "2-cell boundary is not a cycle");
      auto [t, h] = edge_endpoints(x, *next);
      arc.append(t == at ? paths[*next] : paths[*next].reversed());
      at = t == at ? h : t;
      done.insert(*next);
    }
    if (at != ctail) throw Error(ErrorKind::InvariantViolation, "2-cell boundary does not close at the free edge");
    const Factors fs{t1, t2};
    StaircaseArc sa;
    try {
      sa = normalize_staircase(fs, arc);
    } catch (const Error& e) {
      throw Error(ErrorKind::InvariantViolation, "attaching arc of " + x.label(d) + " is not simple: " + e.what());
    }
    auto disc = staircase_disc(t1, t2, sa);
    t1 = std::move(disc.k1);
    t2 = std::move(disc.k2);
    paths[c] = std::move(disc.free_path);
    image[c] = paths[c].cells();
    image[d] = face_closure(Factors{t1, t2}, disc.disc);
  }

  auto fp = std::make_shared<const Factors>(Factors{t1, t2});
  CellSet all;
  for (const auto& s : image) all.insert(s.begin(), s.end());
  TreeEmbedding out{t1, t2, {x, ProductSubcomplex(fp, std::move(all)), std::move(image)}};
  return out;
}

}  // namespace prodcurves
