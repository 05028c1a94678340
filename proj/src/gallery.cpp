#include "prodcurves/gallery.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <random>
#include <set>

#include "prodcurves/error.hpp"

namespace prodcurves {

namespace {

Graph cycle_graph(const std::string& name, int n, const std::string& v = "v", const std::string& e = "e") {
  std::vector<std::string> vs;
  std::vector<EdgeSpec> es;
  for (int i = 0; i < n; ++i) vs.push_back(v + std::to_string(i));
  for (int i = 0; i < n; ++i) es.push_back({e + std::to_string(i), vs[static_cast<std::size_t>(i)],
                                            vs[static_cast<std::size_t>((i + 1) % n)]});
  return build_graph(name, vs, es);
}

// Builds polygonal complexes from named vertices; edges keyed by vertex pair.
class PolygonBuilder {
 public:
  std::size_t vertex(const std::string& name) {
    if (auto c = x_.find(name)) return *c;
    return x_.add_cell(name, 0);
  }
  std::size_t edge(const std::string& a, const std::string& b) {
    auto key = std::minmax(a, b);
    auto it = edges_.find(key);
    if (it != edges_.end()) return it->second;
    auto va = vertex(key.first);
    auto vb = vertex(key.second);
    auto e = x_.add_cell(key.first + "-" + key.second, 1, {{vb, 1}, {va, -1}});
    edges_[key] = e;
    return e;
  }
  void face(const std::string& label, const std::vector<std::string>& cycle) {
    std::vector<std::size_t> es;
    for (std::size_t i = 0; i < cycle.size(); ++i) es.push_back(edge(cycle[i], cycle[(i + 1) % cycle.size()]));
    add_polygon(x_, label, es);
  }
  FacePoset take() { return std::move(x_); }

 private:
  FacePoset x_;
  std::map<std::pair<std::string, std::string>, std::size_t> edges_;
};

void require_range(const std::string& item, const std::string& key, long value, long lo, long hi) {
  if (value < lo || value > hi)
    throw Error(ErrorKind::BadParams, item + ": " + key + "=" + std::to_string(value) + " outside [" +
                                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

}  // namespace

namespace gallery {

Graph theta() {
  return build_graph("theta", {"a0", "a1"}, {{"t0", "a0", "a1"}, {"t1", "a0", "a1"}, {"t2", "a0", "a1"}});
}

Graph circle(int edges) {
  if (edges < 2) throw Error(ErrorKind::BadParams, "circle needs at least 2 edges");
  return cycle_graph("C", edges);
}

Graph path(int edges) {
  std::vector<std::string> vs;
  std::vector<EdgeSpec> es;
  for (int i = 0; i <= edges; ++i) vs.push_back("v" + std::to_string(i));
  for (int i = 0; i < edges; ++i)
    es.push_back({"e" + std::to_string(i), vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(i + 1)]});
  return build_graph("path", vs, es);
}

Graph complete_graph(int n) {
  std::vector<std::string> vs;
  std::vector<EdgeSpec> es;
  for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      es.push_back({"e" + std::to_string(i) + std::to_string(j), vs[static_cast<std::size_t>(i)],
                    vs[static_cast<std::size_t>(j)]});
  return build_graph("K" + std::to_string(n), vs, es);
}

Graph star(int leaves) {
  std::vector<std::string> vs{"c"};
  std::vector<EdgeSpec> es;
  for (int i = 0; i < leaves; ++i) {
    vs.push_back("l" + std::to_string(i));
    es.push_back({"s" + std::to_string(i), "c", vs.back()});
  }
  return build_graph("star", vs, es);
}

SimplicialComplex delta2_boundary() { return SimplicialComplex::from_facets({{"a", "b"}, {"b", "c"}, {"a", "c"}}); }

ProductSubcomplex torus(int m, int n) {
  auto f = std::make_shared<const Factors>(Factors{cycle_graph("C1", m, "p", "pe"), cycle_graph("C2", n, "q", "qe")});
  return full_product(f);
}

ProductSubcomplex torus3(int edges) {
  auto f = std::make_shared<const Factors>(Factors{cycle_graph("C1", edges, "p", "pe"),
                                                   cycle_graph("C2", edges, "q", "qe"),
                                                   cycle_graph("C3", edges, "r", "re")});
  return full_product(f);
}

ProductSubcomplex theta_theta() { return full_product(std::make_shared<const Factors>(Factors{theta(), theta()})); }

SimplicialComplex dunce_hat() {
  static constexpr std::array<std::array<int, 3>, 17> tri{{{1, 2, 4}, {2, 3, 4}, {1, 3, 5}, {1, 2, 5}, {2, 3, 6},
                                                         {1, 3, 6}, {1, 3, 7}, {2, 3, 7}, {1, 2, 8}, {3, 4, 5},
                                                         {2, 5, 6}, {1, 6, 7}, {2, 7, 8}, {1, 4, 8}, {4, 5, 6},
                                                         {4, 6, 7}, {4, 7, 8}}};
  std::vector<std::vector<std::string>> facets;
  for (const auto& t : tri) facets.push_back({"d" + std::to_string(t[0]), "d" + std::to_string(t[1]), "d" + std::to_string(t[2])});
  return SimplicialComplex::from_facets(facets);
}

FacePoset bing_house() {
  // Unit squares (axis, fixed, a, b) in the box [0,5]x[0,3]x[0,4] with a
  // floor at z=2; axis is the fixed coordinate.
  std::set<std::array<int, 4>> sq;
  auto add = [&](int axis, int fixed, int a0, int a1, int b0, int b1) {
    for (int a = a0; a < a1; ++a)
      for (int b = b0; b < b1; ++b) sq.insert({axis, fixed, a, b});
  };
  auto rem = [&](int axis, int fixed, int a, int b) { sq.erase({axis, fixed, a, b}); };
  add(0, 0, 0, 3, 0, 4);
  add(0, 5, 0, 3, 0, 4);
  add(1, 0, 0, 5, 0, 4);
  add(1, 3, 0, 5, 0, 4);
  add(2, 0, 0, 5, 0, 3);
  add(2, 4, 0, 5, 0, 3);
  add(2, 2, 0, 5, 0, 3);
  // Tube through the upper room, open at the roof and the floor.
  rem(2, 4, 1, 1);
  rem(2, 2, 1, 1);
  add(0, 1, 1, 2, 2, 4);
  add(0, 2, 1, 2, 2, 4);
  add(1, 1, 1, 2, 2, 4);
  add(1, 2, 1, 2, 2, 4);
  // Tube through the lower room, open at the bottom and the floor.
  rem(2, 0, 3, 1);
  rem(2, 2, 3, 1);
  add(0, 3, 1, 2, 0, 2);
  add(0, 4, 1, 2, 0, 2);
  add(1, 1, 3, 4, 0, 2);
  add(1, 2, 3, 4, 0, 2);
  // Support walls.
  add(1, 1, 0, 1, 2, 4);
  add(1, 1, 4, 5, 0, 2);

  PolygonBuilder b;
  auto name = [](const std::array<int, 3>& p) {
    return "p" + std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]);
  };
  for (const auto& s : sq) {
    const int ax = s[0];
    int o0 = ax == 0 ? 1 : 0;
    int o1 = ax == 2 ? 1 : 2;
    std::vector<std::string> cyc;
    for (auto [da, db] : std::array<std::pair<int, int>, 4>{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}) {
      std::array<int, 3> p{};
      p[static_cast<std::size_t>(ax)] = s[1];
      p[static_cast<std::size_t>(o0)] = s[2] + da;
      p[static_cast<std::size_t>(o1)] = s[3] + db;
      cyc.push_back(name(p));
    }
    b.face("s" + std::to_string(s[0]) + "_" + std::to_string(s[1]) + "_" + std::to_string(s[2]) + "_" +
               std::to_string(s[3]),
           cyc);
  }
  return b.take();
}

SimplicialComplex klein_bottle() {
  // 4x4 grid, (4, j) ~ (0, j) and (i, 4) ~ (-i mod 4, 0).
  auto v = [](int a, int b) {
    if (b == 4) {
      a = (4 - a) % 4;
      b = 0;
    }
    a %= 4;
    return "k" + std::to_string(a) + std::to_string(b);
  };
  std::vector<std::vector<std::string>> facets;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      facets.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
      facets.push_back({v(i, j), v(i + 1, j + 1), v(i, j + 1)});
    }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex annulus(int segments) {
  if (segments < 3) throw Error(ErrorKind::BadParams, "annulus needs at least 3 segments");
  std::vector<std::vector<std::string>> facets;
  auto o = [&](int k) { return "o" + std::to_string(k % segments); };
  auto i = [&](int k) { return "i" + std::to_string(k % segments); };
  for (int k = 0; k < segments; ++k) {
    facets.push_back({o(k), o(k + 1), i(k)});
    facets.push_back({o(k + 1), i(k + 1), i(k)});
  }
  return SimplicialComplex::from_facets(facets);
}

SimplicialComplex disc() { return SimplicialComplex::from_facets({{"a", "b", "c"}}); }

ProductSubcomplex square() {
  auto edge = [](const std::string& name) { return build_graph(name, {"a", "b"}, {{"e", "a", "b"}}); };
  return full_product(std::make_shared<const Factors>(Factors{edge("I1"), edge("I2")}));
}

SimplicialComplex fan(int triangles) {
  if (triangles < 1) throw Error(ErrorKind::BadParams, "fan needs at least one triangle");
  std::vector<std::vector<std::string>> facets;
  for (int k = 0; k < triangles; ++k) facets.push_back({"c", "p" + std::to_string(k), "p" + std::to_string(k + 1)});
  return SimplicialComplex::from_facets(facets);
}

ProductSubcomplex example_2B3() {
  auto y1 = build_graph("Y1", {"a", "b"},
                        {{"alpha0", "a", "b"}, {"alpha1", "a", "b"}, {"beta1", "a", "b"}, {"beta2", "a", "b"}});
  auto y2 = build_graph("Y2", {"p0", "q0", "p1", "q1"},
                        {{"L0", "p0", "q0"},
                         {"L1", "p1", "q1"},
                         {"A0", "q0", "p1"},
                         {"A1", "q0", "p1"},
                         {"B0", "q1", "p0"},
                         {"B1", "q1", "p0"}});
  std::vector<std::vector<std::string>> tops;
  for (const char* s : {"L0", "A0", "L1", "B0"}) tops.push_back({"alpha0", s});
  for (const char* s : {"L0", "A1", "L1", "B1"}) tops.push_back({"alpha1", s});
  for (const char* s : {"A0", "A1"}) tops.push_back({"beta1", s});
  for (const char* s : {"B0", "B1"}) tops.push_back({"beta2", s});
  return build_product(Factors{y1, y2}, tops);
}

ProductSubcomplex example_2B4(int n) {
  if (n < 4) throw Error(ErrorKind::BadParams, "example_2B4 needs n >= 4");
  auto idx = [n](int j) { return ((j % n) + n) % n; };
  auto z = [&](int j, int level) { return "z" + std::to_string(idx(j)) + "_" + std::to_string(level); };
  std::vector<std::string> vs;
  std::vector<EdgeSpec> es;
  for (int j = 0; j < n; ++j) {
    vs.push_back(z(j, 0));
    vs.push_back(z(j, 1));
  }
  for (int j = 0; j < n; ++j) {
    es.push_back({"A" + std::to_string(j) + "_0", z(j, 0), z(j + 1, 0)});
    es.push_back({"A" + std::to_string(j) + "_1", z(j, 1), z(j + 1, 1)});
    es.push_back({"I" + std::to_string(j), z(j, 0), z(j, 1)});
  }
  auto p = build_graph("P", vs, es);
  auto circle_edges = [&](int j) {
    return std::vector<std::string>{"I" + std::to_string(idx(j)), "A" + std::to_string(idx(j)) + "_0",
                                    "A" + std::to_string(idx(j)) + "_1", "I" + std::to_string(idx(j + 1))};
  };
  std::set<std::vector<std::string>> tops;
  for (int j = 0; j < n; ++j)
    for (const auto& a : circle_edges(j))
      for (const auto& b : circle_edges(j + 2)) tops.insert({a, b});
  for (int j = 0; j < n; ++j) tops.erase({"I" + std::to_string(idx(j + 1)), "I" + std::to_string(idx(j + 3))});
  return build_product(Factors{p, p}, std::vector<std::vector<std::string>>(tops.begin(), tops.end()));
}

FacePoset example_2F6() {
  auto pp = lower_product(theta_theta());
  std::vector<bool> keep(pp.poset.size(), true);
  keep[*pp.poset.find("(t0,t0)")] = false;
  FacePoset x = pp.poset.restrict_to(keep);
  auto cell = [&](const std::string& l) { return *x.find(l); };
  const std::size_t q0 = cell("(a0,a0)"), q1 = cell("(a1,a0)"), q2 = cell("(a1,a1)"), q3 = cell("(a0,a1)");
  const std::size_t c1 = x.add_cell("c1", 0), c2 = x.add_cell("c2", 0);
  auto edge = [&](const std::string& l, std::size_t t, std::size_t h) { return x.add_cell(l, 1, {{h, 1}, {t, -1}}); };
  const std::size_t q0c1 = edge("a0a0-c1", q0, c1), q1c1 = edge("a1a0-c1", q1, c1), c1q3 = edge("c1-a0a1", c1, q3);
  const std::size_t c1c2 = edge("c1-c2", c1, c2), q1c2 = edge("a1a0-c2", q1, c2), c2q3 = edge("c2-a0a1", c2, q3);
  const std::size_t q2c2 = edge("a1a1-c2", q2, c2);
  const std::size_t bottom = cell("(t0,a0)"), right = cell("(a1,t0)"), top = cell("(t0,a1)"), left = cell("(a0,t0)");
  add_polygon(x, "sq1", {bottom, q1c1, q0c1});
  add_polygon(x, "sq2", {q0c1, c1q3, left});
  add_polygon(x, "sq3", {q1c2, c1c2, q1c1});
  add_polygon(x, "sq4", {c1c2, c2q3, c1q3});
  add_polygon(x, "sq5", {right, q2c2, q1c2});
  add_polygon(x, "sq6", {top, c2q3, q2c2});
  const std::size_t d1 = x.add_cell("d1", 0);
  const std::size_t d1q0 = edge("d1-a0a0", d1, q0), d1c1 = edge("d1-c1", d1, c1), d1c2 = edge("d1-c2", d1, c2);
  add_polygon(x, "D1", {d1q0, q0c1, d1c1});
  add_polygon(x, "D2", {d1c1, c1c2, d1c2});
  return x;
}

Staircase2F6 staircase_2F6(int truncation) {
  const int N = truncation;
  if (N < 2) throw Error(ErrorKind::BadParams, "staircase_2F6 needs N >= 2");
  auto a = [](int n) { return "a" + std::to_string(n); };
  std::vector<std::string> vs{"a0", "a1"};
  std::vector<EdgeSpec> es;
  for (int n = 2; n <= N + 1; ++n) vs.push_back(a(n));
  // The arc t0 runs a0, a_{N+1}, ..., a_2, a1.
  es.push_back({"t0_" + std::to_string(N + 1), "a0", a(N + 1)});
  for (int n = N; n >= 2; --n) es.push_back({"t0_" + std::to_string(n), a(n + 1), a(n)});
  es.push_back({"t0_1", a(2), "a1"});
  es.push_back({"t1", "a0", "a1"});
  es.push_back({"t2", "a0", "a1"});
  auto p_only = build_graph("Y", vs, es);
  for (int n = 2; n <= N + 1; ++n) {
    vs.push_back("b" + std::to_string(n));
    es.push_back({"p" + std::to_string(n), a(n), "b" + std::to_string(n)});
  }
  auto y = build_graph("Y", vs, es);
  auto f = std::make_shared<const Factors>(Factors{y, y});

  std::vector<ProductCell> base_tops;
  for (const auto& e : p_only.edges())
    for (const auto& g : p_only.edges())
      base_tops.push_back({Coord::edge(*y.find_edge(e.id)), Coord::edge(*y.find_edge(g.id))});
  auto cell = [&](const std::string& s, const std::string& t) {
    std::array<std::string, 2> ids{s, t};
    return make_cell(*f, ids);
  };
  std::vector<ProductCell> arc_tops, disc_tops;
  for (int n = 2; n <= N; ++n) {
    const std::string s = "t0_" + std::to_string(n);
    const std::string pn = "p" + std::to_string(n), pn1 = "p" + std::to_string(n + 1);
    arc_tops.push_back(cell(a(n), s));
    arc_tops.push_back(cell(s, a(n + 1)));
    disc_tops.push_back(cell(pn, pn));
    disc_tops.push_back(cell(pn, s));
    disc_tops.push_back(cell(pn, pn1));
    disc_tops.push_back(cell(s, pn1));
  }
  return {build_product(f, base_tops), build_product(f, arc_tops), build_product(f, disc_tops)};
}

RandomCollapsible random_collapsible(std::uint64_t seed, int size) {
  std::mt19937_64 rng(seed);
  FacePoset x;
  x.add_cell("x0", 0);
  std::size_t nv = 1, ne = 0, nf = 0;
  std::vector<CollapseStep> expansions;
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  for (int step = 0; step < size; ++step) {
    auto verts = x.cells_of_dim(0);
    auto edges = x.cells_of_dim(1);
    const bool pendant = edges.empty() || std::uniform_real_distribution<double>(0, 1)(rng) < 0.4;
    if (pendant) {
      auto v = verts[pick(verts.size())];
      auto w = x.add_cell("x" + std::to_string(nv++), 0);
      auto e = x.add_cell("y" + std::to_string(ne++), 1, {{w, 1}, {v, -1}});
      expansions.push_back({x.label(w), x.label(e)});
      continue;
    }
    // Random simple walk of 1..4 edges, closed off by a new edge.
    const std::size_t want = 1 + pick(4);
    auto e0 = edges[pick(edges.size())];
    auto [t, h] = edge_endpoints(x, e0);
    std::vector<std::size_t> walk{e0};
    std::set<std::size_t> seen{t, h};
    std::size_t cur = h;
    while (walk.size() < want) {
      std::vector<std::pair<std::size_t, std::size_t>> next;
      for (auto e : x.cofaces(cur)) {
        if (x.dim(e) != 1) continue;
        auto [a, b] = edge_endpoints(x, e);
        auto other = a == cur ? b : a;
        if (!seen.count(other)) next.push_back({e, other});
      }
      if (next.empty()) break;
      auto [e, other] = next[pick(next.size())];
      walk.push_back(e);
      seen.insert(other);
      cur = other;
    }
    auto g = x.add_cell("y" + std::to_string(ne++), 1, {{t, 1}, {cur, -1}});
    walk.push_back(g);
    auto face = add_polygon(x, "f" + std::to_string(nf++), walk);
    expansions.push_back({x.label(g), x.label(face)});
  }
  std::reverse(expansions.begin(), expansions.end());
  return {std::move(x), std::move(expansions)};
}

}  // namespace gallery

FacePoset lower(const Payload& p) {
  return std::visit(
      [](const auto& v) -> FacePoset {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Graph>) {
          return to_face_poset(build_product(Factors{v}, [&] {
            std::vector<std::vector<std::string>> tops;
            for (const auto& e : v.edges()) tops.push_back({e.id});
            auto deg = v.degrees();
            for (std::size_t i = 0; i < v.vertex_count(); ++i)
              if (deg[i] == 0) tops.push_back({v.vertex_id(i)});
            return tops;
          }()));
        } else if constexpr (std::is_same_v<T, FacePoset>) {
          return v;
        } else {
          return to_face_poset(v);
        }
      },
      p);
}

int payload_dimension(const Payload& p) { return lower(p).dimension(); }

const std::vector<GalleryEntry>& gallery_list() {
  static const std::vector<GalleryEntry> entries{
      {"theta", "theta-curve: two vertices joined by three arcs", {}},
      {"circle", "circle graph with n edges", {{"n", 3}}},
      {"k4", "complete graph on four vertices", {}},
      {"delta2_boundary", "boundary of the 2-simplex (simplicial)", {}},
      {"torus", "product of two circles with m and n edges", {{"m", 2}, {"n", 2}}},
      {"torus3", "product of three circles", {{"n", 2}}},
      {"theta_theta", "full product of two theta-curves", {}},
      {"dunce_hat", "8-vertex dunce hat triangulation", {}},
      {"bing_house", "Bing's house with two rooms, as unit squares", {}},
      {"klein_bottle", "4x4 triangulated Klein bottle", {}},
      {"annulus", "triangulated annulus", {{"n", 4}}},
      {"disc", "single 2-simplex", {}},
      {"square", "single square, product of two arcs", {}},
      {"fan", "cone over a path, n triangles", {{"n", 4}}},
      {"example_2B3", "orientable surface N in the product of two finite graphs", {}},
      {"example_2B4", "closed orientable surface in P x P built from n tori", {{"n", 4}}},
      {"example_2F6", "theta x theta with a disc attached along an arc", {}},
      {"staircase_2F6", "truncated staircase arc and disc in Y x Y", {{"N", 3}}},
      {"random_collapsible", "random expansions of a point", {{"seed", 42}, {"size", 20}}},
  };
  return entries;
}

GalleryItem make(std::string_view name_view, const Params& given) {
  const std::string name(name_view);
  const auto& list = gallery_list();
  auto entry = std::find_if(list.begin(), list.end(), [&](const GalleryEntry& e) { return e.name == name; });
  if (entry == list.end()) throw Error(ErrorKind::UnknownName, "no gallery item '" + name + "'");
  Params params = entry->defaults;
  for (const auto& [k, v] : given) {
    if (!params.count(k)) throw Error(ErrorKind::BadParams, name + " has no parameter '" + k + "'");
    params[k] = v;
  }
  using nlohmann::json;
  auto get = [&](const std::string& k) { return params.at(k); };
  GalleryItem item{name, params, Graph{}, json::object()};
  auto surface = [](long chi, bool orientable) {
    return json{{"closed", true}, {"orientable", orientable}, {"chi", chi}};
  };

  if (name == "theta") {
    item.payload = gallery::theta();
    item.expected = {{"b1", 2}, {"endpoints", 0}};
  } else if (name == "circle") {
    require_range(name, "n", get("n"), 2, 1000);
    item.payload = gallery::circle(static_cast<int>(get("n")));
    item.expected = {{"b1", 1}, {"endpoints", 0}, {"is_circle", true}};
  } else if (name == "k4") {
    item.payload = gallery::complete_graph(4);
    item.expected = {{"b1", 3}, {"endpoints", 0}};
  } else if (name == "delta2_boundary") {
    item.payload = gallery::delta2_boundary();
    item.expected = {{"betti", {1, 1}}};
  } else if (name == "torus") {
    require_range(name, "m", get("m"), 2, 100);
    require_range(name, "n", get("n"), 2, 100);
    item.payload = gallery::torus(static_cast<int>(get("m")), static_cast<int>(get("n")));
    item.expected = {{"betti", {1, 2, 1}},   {"surface", surface(0, true)}, {"genus", 1},
                     {"J_M", {1, 2}},        {"is_full_torus", true},       {"remainder", "torus"},
                     {"certificate", nullptr}};
  } else if (name == "torus3") {
    require_range(name, "n", get("n"), 2, 20);
    item.payload = gallery::torus3(static_cast<int>(get("n")));
    item.expected = {{"betti", {1, 3, 3, 1}}, {"J_M", {1, 2, 3}}, {"is_full_torus", true}};
  } else if (name == "theta_theta") {
    item.payload = gallery::theta_theta();
    item.expected = {{"betti", {1, 4, 4}}, {"ramified", true}, {"J_M", json::array()}};
  } else if (name == "dunce_hat" || name == "bing_house") {
    if (name == "dunce_hat") item.payload = gallery::dunce_hat();
    else item.payload = gallery::bing_house();
    item.expected = {{"betti", {1, 0, 0}},     {"ramified", true},         {"pseudo", false},
                     {"free_faces", 0},        {"remainder", "other_2dim"}, {"collapse_steps", 0},
                     {"certificate", "2E.1(i)"}, {"collapsible", "no"}};
  } else if (name == "klein_bottle") {
    item.payload = gallery::klein_bottle();
    item.expected = {{"betti", {1, 1, 0}}, {"surface", surface(0, false)}, {"torsion1", {2}}};
  } else if (name == "annulus") {
    require_range(name, "n", get("n"), 3, 1000);
    item.payload = gallery::annulus(static_cast<int>(get("n")));
    item.expected = {{"betti", {1, 1, 0}}, {"remainder", "circle"}, {"certificate", nullptr}};
  } else if (name == "disc") {
    item.payload = gallery::disc();
    item.expected = {{"betti", {1, 0, 0}}, {"remainder", "point"}, {"certificate", nullptr}, {"collapsible", "yes"}};
  } else if (name == "square") {
    item.payload = gallery::square();
    item.expected = {{"betti", {1, 0, 0}}, {"remainder", "point"}, {"collapsible", "yes"}};
  } else if (name == "fan") {
    require_range(name, "n", get("n"), 1, 1000);
    item.payload = gallery::fan(static_cast<int>(get("n")));
    item.expected = {{"betti", {1, 0, 0}}, {"remainder", "point"}, {"collapsible", "yes"}};
  } else if (name == "example_2B3") {
    item.payload = gallery::example_2B3();
    item.expected = {{"surface", surface(-4, true)}, {"surjective_projections", true}, {"ramified_projections", true}};
  } else if (name == "example_2B4") {
    require_range(name, "n", get("n"), 4, 64);
    const long n = get("n");
    item.payload = gallery::example_2B4(static_cast<int>(n));
    item.expected = {{"surface", surface(-2 * n, true)},
                     {"b1_at_least", 2 * n},
                     {"involution_invariant", true},
                     {"diagonal_disjoint", true},
                     {"surjective_projections", true},
                     {"J_M", json::array()},
                     {"top_cells", 14 * n}};
  } else if (name == "example_2F6") {
    item.payload = gallery::example_2F6();
    item.expected = {{"betti", {1, 4, 4}},
                     {"arc", {"a0a0-c1", "c1-c2"}},
                     {"arc_endpoint", "(a0,a0)"},
                     {"subdivided_cell", {"sq1", "sq2", "sq3", "sq4", "sq5", "sq6"}},
                     {"disc", {"D1", "D2"}},
                     {"collapse_reaches_product", true}};
  } else if (name == "staircase_2F6") {
    require_range(name, "N", get("N"), 2, 200);
    item.payload = gallery::staircase_2F6(static_cast<int>(get("N"))).disc;
    item.expected = {{"disc", true}, {"exact_intersection", true}};
  } else if (name == "random_collapsible") {
    require_range(name, "size", get("size"), 0, 100000);
    require_range(name, "seed", get("seed"), 0, std::numeric_limits<long>::max());
    item.payload = gallery::random_collapsible(static_cast<std::uint64_t>(get("seed")), static_cast<int>(get("size"))).complex;
    item.expected = {{"collapsible", "yes"}, {"witness_replays", true}};
  }
  return item;
}

}  // namespace prodcurves
