#include <doctest.h>

#include "prodcurves/classify.hpp"
#include "prodcurves/fibers.hpp"
#include "prodcurves/gallery.hpp"
#include "support.hpp"

using namespace prodcurves;
using namespace support;

namespace {

CellSet cells_of(const ProductSubcomplex& m) { return m.cells(); }

bool includes(const CellSet& big, const CellSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

TEST_CASE("index sets") {
  IndexSet j{2, 0, 2};
  CHECK(j.members() == std::vector<std::size_t>{0, 2});
  CHECK(j.complement(4).members() == std::vector<std::size_t>{1, 3});
  ProductCell c{Coord::vertex(1), Coord::edge(2), Coord::vertex(3)};
  auto a = restrict_cell(c, j);
  auto b = restrict_cell(c, j.complement(3));
  CHECK(merge_cell(a, j, b) == c);
}

TEST_CASE("projections") {
  auto t = gallery::torus(3, 2);
  auto p1 = project(t, {0});
  CHECK(as_graph(p1) == t.factors()[0]);
  CHECK(kind_of([&] { project(t, IndexSet{}); }) == ErrorKind::EmptyIndexSet);
  auto m = gallery::example_2B4(4);
  CHECK(as_graph(project(m, {0})).edge_count() == m.factors()[0].edge_count());
  CHECK(as_graph(project(m, {1})).vertex_count() == m.factors()[1].vertex_count());
  auto tt = gallery::theta_theta();
  CHECK(graph_profile(as_graph(project(tt, {1}))).b1 == 2);
}

TEST_CASE("projection preserves ramified and pseudo") {
  auto m = gallery::example_2B4(5);
  for (std::size_t j : {0u, 1u}) {
    auto flags = classify(project(m, {j}), 1);
    CHECK(flags.ramified);
  }
  auto n = gallery::example_2B3();
  for (std::size_t j : {0u, 1u}) CHECK(classify(project(n, {j}), 1).ramified);
  auto t3 = gallery::torus3(3);
  auto p = classify(project(t3, {0, 2}), 2);
  CHECK(p.pseudo);
  CHECK(p.simple == std::optional<bool>(true));
}

TEST_CASE("fibers") {
  auto t = gallery::torus(3, 2);
  auto w = ProductCell{Coord::vertex(0)};
  auto r = fiber(t, w, {0});
  CHECK(as_graph(r.fiber) == t.factors()[0]);
  REQUIRE(r.component_profiles.size() == 1);
  CHECK(r.component_profiles[0].b1 == 1);
  CHECK(r.component_profiles[0].flags.pseudo);

  auto tt = gallery::theta_theta();
  CHECK(graph_profile(as_graph(fiber(tt, {Coord::vertex(1)}, {0}).fiber)).b1 == 2);

  auto m = gallery::example_2B4(4);
  auto z0 = *m.factors()[1].find_vertex("z0_0");
  auto f = fiber(m, {Coord::vertex(z0)}, {0});
  CHECK_FALSE(f.component_profiles.empty());
  for (const auto& p : f.component_profiles) {
    CHECK(p.flags.ramified);
    CHECK(p.b1 >= 1);
  }

  auto sq = gallery::torus(2, 2);
  std::vector<ProductCell> tops{{Coord::edge(0), Coord::edge(0)}};
  auto one = build_product(sq.factors_ptr(), tops);
  CHECK(kind_of([&] { fiber(one, {Coord::edge(1)}, {0}); }) == ErrorKind::CellNotInProjection);
  CHECK(kind_of([&] { fiber(one, {Coord::edge(1), Coord::edge(0)}, {0}); }) == ErrorKind::BadCoordinate);
}

TEST_CASE("fiber calculus on the theta x theta census") {
  for (const auto& m : theta_census()) {
    for (std::size_t j : {0u, 1u}) {
      const IndexSet J{j};
      const IndexSet Jc = J.complement(2);
      auto base = project(m, Jc);
      for (const auto& tau : base.cells()) {
        auto f = cells_of(fiber_complex(m, tau, J));
        // Faces have larger fibers.
        for (const auto& face : closure_of(base.factors(), tau))
          CHECK(includes(cells_of(fiber_complex(m, face, J)), f));
        // The fiber is the union of fibers over top cofaces.
        CellSet over_tops;
        for (const auto& top : base.cells_of_dim(base.dimension()))
          if (is_face(base.factors(), tau, top)) {
            auto g = cells_of(fiber_complex(m, top, J));
            over_tops.insert(g.begin(), g.end());
          }
        CHECK(f == over_tops);
      }
      // The projection is the union of fibers over cells of any fixed dimension.
      for (int k = 0; k <= base.dimension(); ++k) {
        CellSet u;
        for (const auto& tau : base.cells_of_dim(k)) {
          auto g = cells_of(fiber_complex(m, tau, J));
          u.insert(g.begin(), g.end());
        }
        CHECK(u == project(m, J).cells());
      }
    }
  }
}

TEST_CASE("fiber properties on the census and the gallery") {
  for (const auto& m : theta_census()) CHECK(fiber_property_defect(m).empty());
  for (const auto& entry : gallery_list()) {
    auto item = make(entry.name);
    if (auto m = std::get_if<ProductSubcomplex>(&item.payload); m && m->arity() > 1) {
      CAPTURE(entry.name);
      CHECK(fiber_property_defect(*m) == "");
    }
  }
  for (int n = 5; n <= 8; ++n) CHECK(fiber_property_defect(gallery::example_2B4(n)) == "");
}

TEST_CASE("circle directions") {
  CHECK(circle_directions(gallery::torus(2, 3)).members() == std::vector<std::size_t>{0, 1});
  CHECK(circle_directions(gallery::example_2B4(4)).empty());
  auto f = share({cycle("C", 3), theta()});
  CHECK(circle_directions(full_product(f)).members() == std::vector<std::size_t>{0});
  CHECK(kind_of([] { circle_directions(from_mask(share({theta(), theta()}), 1)); }) == ErrorKind::NotRamified);
}

TEST_CASE("factorization") {
  auto t = factorize(gallery::torus(2, 2));
  CHECK(t.is_full_torus);
  CHECK(t.j_m.size() == 2);
  CHECK(t.rank_data.b1 == 2);
  CHECK(t.rank_data.rank_at_least_n);

  auto m4 = factorize(gallery::example_2B4(4));
  CHECK(m4.j_m.empty());
  REQUIRE(m4.residual);
  CHECK(*m4.residual == gallery::example_2B4(4));
  CHECK(m4.rank_data.b1 == 10);
  CHECK(m4.rank_data.rank_at_least_fiber_sum);

  auto t3 = factorize(gallery::torus3(2));
  CHECK(t3.is_full_torus);
  CHECK(t3.rank_data.b1 == 3);

  auto ct = factorize(full_product(share({cycle("C", 3), theta()})));
  CHECK(ct.j_m.members() == std::vector<std::size_t>{0});
  REQUIRE(ct.residual);
  CHECK(graph_profile(as_graph(*ct.residual)).b1 == 2);
  CHECK_FALSE(ct.is_full_torus);
}

TEST_CASE("rank bound and torus recognition over the census") {
  std::size_t tori = 0;
  for (const auto& m : theta_census()) {
    if (!classify(m, 2).ramified || components(m).size() != 1) continue;
    auto r = factorize(m);
    CHECK(r.rank_data.rank_at_least_n);
    CHECK(r.rank_data.rank_at_least_fiber_sum);
    CHECK(r.rank_data.circle_bound);
    if (r.rank_data.b1 == 2) {
      CHECK(r.is_full_torus);
      ++tori;
    }
    auto x = to_face_poset(m);
    if (surface_defect(x).empty() && r.rank_data.b1 <= 3) CHECK(r.is_full_torus);
  }
  CHECK(tori == 9);
}

TEST_CASE("vertex fibers of tori agree with the projection") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = share({shuffled_circle(rng, "A", 2 + trial % 4), shuffled_circle(rng, "B", 3 + trial % 3)});
    auto m = full_product(f);
    for (std::size_t j : {0u, 1u}) {
      const IndexSet J{j};
      auto p = project(m, J).cells();
      for (const auto& v : project(m, J.complement(2)).cells_of_dim(0)) CHECK(fiber_complex(m, v, J).cells() == p);
    }
    auto r = factorize(m);
    CHECK(r.is_full_torus);
    CHECK(as_graph(r.torus_factors[0]) == (*f)[0]);
  }
}
