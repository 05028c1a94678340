#include <doctest.h>

#include <algorithm>
#include <random>

#include "prodcurves/classify.hpp"
#include "prodcurves/error.hpp"
#include "prodcurves/face_poset.hpp"
#include "prodcurves/graph.hpp"
#include "prodcurves/product.hpp"
#include "prodcurves/simplicial.hpp"

using namespace prodcurves;

namespace {

Graph cycle(const std::string& name, int n, const std::string& pre = "v") {
  std::vector<std::string> vs;
  std::vector<EdgeSpec> es;
  for (int i = 0; i < n; ++i) vs.push_back(pre + std::to_string(i));
  for (int i = 0; i < n; ++i) es.push_back({pre + "e" + std::to_string(i), vs[i], vs[(i + 1) % n]});
  return build_graph(name, vs, es);
}

Graph theta() {
  return build_graph("theta", {"a0", "a1"}, {{"t0", "a0", "a1"}, {"t1", "a0", "a1"}, {"t2", "a0", "a1"}});
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvariantViolation;
}

// Every subset of the top squares of a full 2-factor product, as closed subcomplexes.
std::vector<ProductSubcomplex> square_census(const FactorsPtr& f) {
  std::vector<ProductCell> squares;
  for (std::size_t a = 0; a < (*f)[0].edge_count(); ++a)
    for (std::size_t b = 0; b < (*f)[1].edge_count(); ++b) squares.push_back({Coord::edge(a), Coord::edge(b)});
  std::vector<ProductSubcomplex> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << squares.size()); ++mask) {
    std::vector<ProductCell> tops;
    for (std::size_t i = 0; i < squares.size(); ++i)
      if (mask >> i & 1) tops.push_back(squares[i]);
    out.push_back(build_product(f, tops));
  }
  return out;
}

}  // namespace

TEST_CASE("build_graph accepts minimal circle and theta") {
  auto c = build_graph("c", {"a", "b"}, {{"x", "a", "b"}, {"y", "b", "a"}});
  CHECK(c.edge_count() == 2);
  CHECK(graph_profile(c).is_circle);
  auto t = theta();
  CHECK(t.vertex_count() == 2);
  CHECK(t.edge_count() == 3);
}

TEST_CASE("build_graph errors") {
  CHECK(kind_of([] { build_graph("g", {"a"}, {{"l", "a", "a"}}); }) == ErrorKind::LoopEdge);
  CHECK(kind_of([] { build_graph("g", {"a", "a"}, {}); }) == ErrorKind::DuplicateId);
  CHECK(kind_of([] { build_graph("g", {"a", "b"}, {{"a", "a", "b"}}); }) == ErrorKind::DuplicateId);
  CHECK(kind_of([] { build_graph("g", {"a"}, {{"e", "a", "z"}}); }) == ErrorKind::DanglingEndpoint);
}

TEST_CASE("graph_profile") {
  auto p5 = graph_profile(cycle("c5", 5));
  CHECK(p5.endpoint_vertices.empty());
  CHECK(p5.is_circle);
  CHECK(p5.b1 == 1);
  auto pt = graph_profile(theta());
  CHECK(pt.endpoint_vertices.empty());
  CHECK_FALSE(pt.is_circle);
  CHECK(pt.b1 == 2);
  auto pe = graph_profile(build_graph("e", {"a", "b"}, {{"e", "a", "b"}}));
  CHECK(pe.endpoint_vertices == std::vector<std::string>{"a", "b"});
  CHECK(pe.is_tree);
  CHECK_FALSE(pe.is_circle);
  CHECK(pe.b1 == 0);
}

TEST_CASE("torus product complex") {
  auto f = std::make_shared<const Factors>(Factors{cycle("C1", 2, "p"), cycle("C2", 2, "q")});
  auto m = full_product(f);
  CHECK(m.cells_of_dim(0).size() == 4);
  CHECK(m.cells_of_dim(1).size() == 8);
  CHECK(m.cells_of_dim(2).size() == 4);
  auto x = to_face_poset(m);
  validate(x);
  for (auto s : x.cells_of_dim(2)) {
    CHECK(x.boundary(s).size() == 4);
    CHECK(polygon_vertices(x, s).size() == 4);
  }
  auto flags = classify(x, 2);
  CHECK(flags.top_cover);
  CHECK(flags.ramified);
  CHECK(flags.pseudo);
  CHECK(flags.simple == true);
  CHECK(flags.free_faces.empty());
}

TEST_CASE("torus inside theta x theta") {
  Factors f{theta(), theta()};
  auto m = build_product(f, std::vector<std::vector<std::string>>{{"t0", "t0"}, {"t0", "t1"}, {"t1", "t0"}, {"t1", "t1"}});
  CHECK(m.cells_of_dim(2).size() == 4);
  CHECK(m.cells_of_dim(1).size() == 8);
  CHECK(m.cells_of_dim(0).size() == 4);
  CHECK(classify(m, 2).pseudo);
  CHECK(kind_of([&] { build_product(f, std::vector<std::vector<std::string>>{{"t0", "nope"}}); }) ==
        ErrorKind::BadCoordinate);
}

TEST_CASE("simplex lowering and classification") {
  auto k = SimplicialComplex::from_facets({{"a", "b", "c"}});
  auto x = to_face_poset(k);
  validate(x);
  CHECK(x.count_by_dim() == std::vector<std::size_t>{3, 3, 1});
  auto flags = classify(x, 2);
  CHECK_FALSE(flags.ramified);
  CHECK(flags.free_faces.size() == 3);
  CHECK(kind_of([&] { classify(x, 1); }) == ErrorKind::DimensionMismatch);
  CHECK_FALSE(classify(x, 3).top_cover);
}

TEST_CASE("dunce hat triangulation") {
  std::vector<std::vector<std::string>> facets;
  for (auto t : std::vector<std::array<int, 3>>{{1, 2, 4}, {2, 3, 4}, {1, 3, 5}, {1, 2, 5}, {2, 3, 6}, {1, 3, 6},
                                                 {1, 3, 7}, {2, 3, 7}, {1, 2, 8}, {3, 4, 5}, {2, 5, 6}, {1, 6, 7},
                                                 {2, 7, 8}, {1, 4, 8}, {4, 5, 6}, {4, 6, 7}, {4, 7, 8}})
    facets.push_back({std::to_string(t[0]), std::to_string(t[1]), std::to_string(t[2])});
  auto x = to_face_poset(SimplicialComplex::from_facets(facets));
  validate(x);
  CHECK(x.count_by_dim() == std::vector<std::size_t>{8, 24, 17});
  auto flags = classify(x, 2);
  CHECK(flags.ramified);
  CHECK_FALSE(flags.pseudo);
  CHECK(flags.free_faces.empty());
  auto inc = top_incidence(x, 2);
  std::size_t triple = 0;
  for (auto e : x.cells_of_dim(1)) triple += inc[e] == 3;
  CHECK(triple == 3);
}

TEST_CASE("validator rejects malformed posets") {
  FacePoset x;
  auto a = x.add_cell("a", 0);
  auto b = x.add_cell("b", 0);
  x.add_cell("e", 1, {{a, 1}, {b, 1}});
  CHECK(kind_of([&] { validate(x); }) == ErrorKind::InvalidComplex);
  FacePoset y;
  auto p = y.add_cell("p", 0);
  auto q = y.add_cell("q", 0);
  auto r = y.add_cell("r", 0);
  auto e1 = y.add_cell("e1", 1, {{q, 1}, {p, -1}});
  auto e2 = y.add_cell("e2", 1, {{r, 1}, {q, -1}});
  y.add_cell("f", 2, {{e1, 1}, {e2, 1}});
  CHECK(kind_of([&] { validate(y); }) == ErrorKind::InvalidComplex);
}

TEST_CASE("face closure is idempotent and cells are proper") {
  Factors fs{theta(), cycle("C", 3)};
  auto f = std::make_shared<const Factors>(fs);
  auto m = build_product(f, std::vector<ProductCell>{{Coord::edge(0), Coord::edge(1)}, {Coord::edge(2), Coord::vertex(0)}});
  CHECK(face_closure(*f, m.cells()) == m.cells());
  CHECK(has_proper_cells(m));
  CHECK(has_proper_cells(full_product(f)));
}

TEST_CASE("ramified subcomplexes of a torus are the whole torus") {
  for (int n : {2, 3}) {
    auto f = std::make_shared<const Factors>(Factors{cycle("A", n, "p"), cycle("B", n, "q")});
    auto whole = full_product(f);
    std::size_t ramified = 0;
    for (const auto& l : square_census(f)) {
      if (!classify(l, 2).ramified) continue;
      ++ramified;
      CHECK(l == whole);
    }
    CHECK(ramified == 1);
  }
}

TEST_CASE("classify is invariant under relabeling and factor permutation") {
  std::mt19937 rng(7);
  auto base = std::make_shared<const Factors>(Factors{theta(), cycle("C", 3)});
  auto census = square_census(base);
  std::shuffle(census.begin(), census.end(), rng);
  census.resize(60);
  for (const auto& m : census) {
    auto ref = classify(m, 2);
    // Swap the factors and rename every id.
    Factors swapped;
    for (int i : {1, 0}) {
      const Graph& g = (*base)[static_cast<std::size_t>(i)];
      std::vector<std::string> vs;
      std::vector<EdgeSpec> es;
      for (const auto& v : g.vertices()) vs.push_back("r_" + v);
      for (const auto& e : g.edges()) es.push_back({"r_" + e.id, "r_" + g.vertex_id(e.tail), "r_" + g.vertex_id(e.head)});
      swapped.push_back(build_graph(g.name(), vs, es));
    }
    auto sf = std::make_shared<const Factors>(std::move(swapped));
    CellSet cells;
    for (const auto& c : m.cells()) cells.insert({c[1], c[0]});
    auto flags = classify(ProductSubcomplex(sf, cells), 2);
    CHECK(flags.top_cover == ref.top_cover);
    CHECK(flags.ramified == ref.ramified);
    CHECK(flags.pseudo == ref.pseudo);
    CHECK(flags.simple == ref.simple);
    CHECK(flags.free_faces.size() == ref.free_faces.size());
    CHECK(flags.combinatorial_components.size() == ref.combinatorial_components.size());
  }
}

TEST_CASE("components of a product subcomplex") {
  auto f = std::make_shared<const Factors>(Factors{theta(), build_graph("P", {"x", "y", "z", "w"}, {{"e", "x", "y"}, {"g", "z", "w"}})});
  auto m = full_product(f);
  auto parts = components(m);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].size() + parts[1].size() == m.size());
}

TEST_CASE("triangulate gives the order complex") {
  auto k = SimplicialComplex::from_facets({{"a", "b", "c"}});
  auto sd = triangulate(to_face_poset(k));
  CHECK(sd.vertex_count() == 7);
  CHECK(sd.simplices_of_dim(2).size() == 6);
  auto g = to_simplicial(theta());
  CHECK(g.vertex_count() == 5);
  CHECK(g.simplices_of_dim(1).size() == 6);
}
