#include <doctest.h>

#include "prodcurves/algebra.hpp"
#include "prodcurves/gallery.hpp"
#include "prodcurves/simplicial.hpp"
#include "support.hpp"

using namespace prodcurves;
using namespace support;

namespace {

IntMatrix diag(std::vector<long> d, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

std::vector<BigInt> big(std::vector<long> v) { return {v.begin(), v.end()}; }

bool chain_ok(const SnfResult& s) {
  for (std::size_t i = 0; i < s.invariant_factors.size(); ++i) {
    if (s.invariant_factors[i] <= 0) return false;
    if (i + 1 < s.invariant_factors.size() && s.invariant_factors[i + 1] % s.invariant_factors[i] != 0) return false;
  }
  return s.invariant_factors.size() == s.rank;
}

bool same_homology(const HomologySummary& a, const HomologySummary& b) {
  return a.betti == b.betti && a.torsion == b.torsion && a.euler == b.euler;
}

long alternating_count(const FacePoset& x) {
  long chi = 0;
  auto counts = x.count_by_dim();
  for (std::size_t k = 0; k < counts.size(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<long>(counts[k]);
  return chi;
}

}  // namespace

TEST_CASE("snf small cases") {
  auto id = diag({1, 1, 1}, 3, 3);
  auto s = smith_normal_form(id);
  CHECK(s.rank == 3);
  CHECK(s.invariant_factors == big({1, 1, 1}));
  CHECK(smith_normal_form(diag({2, 4}, 2, 2)).invariant_factors == big({2, 4}));
  CHECK(smith_normal_form(diag({4, 6}, 2, 3)).invariant_factors == big({2, 12}));
  CHECK(smith_normal_form(diag({6, 10, 15}, 3, 3)).invariant_factors == big({1, 30, 30}));
  CHECK(smith_normal_form(IntMatrix(3, 4)).rank == 0);
  CHECK(smith_normal_form(IntMatrix(0, 4)).rank == 0);
}

TEST_CASE("snf against fraction-free oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    auto m = random_matrix(rng);
    auto s = smith_normal_form(m);
    CHECK(chain_ok(s));
    CHECK(s.rank == bareiss_rank(m));
    CHECK(s.rank <= std::min(m.rows(), m.cols()));
    if (m.rows() == m.cols()) {
      BigInt prod = s.rank == m.rows() ? BigInt(1) : BigInt(0);
      if (s.rank == m.rows())
        for (const auto& d : s.invariant_factors) prod *= d;
      BigInt det = bareiss_det(m);
      CHECK(prod == abs(det));
    }
  }
}

TEST_CASE("snf survives large coefficients") {
  IntMatrix m(2, 2);
  m.at(0, 0) = BigInt("123456789012345678901234567890");
  m.at(0, 1) = 7;
  m.at(1, 0) = 11;
  m.at(1, 1) = BigInt("98765432109876543210");
  auto s = smith_normal_form(m);
  CHECK(s.rank == 2);
  CHECK(s.invariant_factors.back() == abs(bareiss_det(m)));
}

TEST_CASE("boundary matrices") {
  auto c2 = lower(make("circle", {{"n", 2}}).payload);
  auto d = boundary_matrices(c2);
  REQUIRE(d.size() == 1);
  CHECK(d[0].rows() == 2);
  CHECK(d[0].cols() == 2);
  CHECK(smith_normal_form(d[0]).rank == 1);

  auto torus = to_face_poset(gallery::torus(2, 2));
  auto dt = boundary_matrices(torus);
  REQUIRE(dt.size() == 2);
  CHECK(dt[0].rows() == 4);
  CHECK(dt[0].cols() == 8);
  CHECK(smith_normal_form(dt[0]).rank == 3);
  CHECK(smith_normal_form(dt[1]).rank == 3);
  CHECK((dt[0] * dt[1]).is_zero());

  auto tri = to_face_poset(gallery::disc());
  auto ds = boundary_matrices(tri);
  CHECK(ds[1].rows() == 3);
  CHECK(ds[1].cols() == 1);
  CHECK((ds[0] * ds[1]).is_zero());
}

TEST_CASE("boundary squares to zero on random theta x theta subcomplexes") {
  auto f = share({theta(), theta()});
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> mask(1, 511);
  for (int trial = 0; trial < 1000; ++trial) {
    auto x = to_face_poset(from_mask(f, mask(rng)));
    auto d = boundary_matrices(x);
    if (d.size() >= 2) CHECK((d[0] * d[1]).is_zero());
  }
}

TEST_CASE("homology of standard complexes") {
  auto t = homology_summary(to_face_poset(gallery::torus(2, 2)));
  CHECK(t.betti == std::vector<long>{1, 2, 1});
  CHECK(t.euler == 0);
  auto tt = homology_summary(to_face_poset(gallery::theta_theta()));
  CHECK(tt.betti == std::vector<long>{1, 4, 4});
  CHECK(tt.euler == 1);
  auto dh = homology_summary(to_face_poset(gallery::dunce_hat()));
  CHECK(dh.betti == std::vector<long>{1, 0, 0});
  auto bh = homology_summary(gallery::bing_house());
  CHECK(bh.betti == std::vector<long>{1, 0, 0});
  auto t3 = homology_summary(to_face_poset(gallery::torus3(2)));
  CHECK(t3.betti == std::vector<long>{1, 3, 3, 1});
}

TEST_CASE("klein bottle has Z/2 torsion") {
  auto k = to_face_poset(gallery::klein_bottle());
  auto h = homology_summary(k);
  CHECK(h.betti == std::vector<long>{1, 1, 0});
  REQUIRE(h.torsion.size() >= 2);
  CHECK(h.torsion[0].empty());
  CHECK(h.torsion[1] == big({2}));
  auto s = surface_summary(k);
  CHECK(s.closed);
  CHECK_FALSE(s.orientable);
  CHECK(s.genus == 2);
  CHECK(s.chi == 0);
  CHECK(s.orientation.empty());
}

TEST_CASE("surface summaries") {
  auto t = surface_summary(to_face_poset(gallery::torus(3, 2)));
  CHECK(t.closed);
  CHECK(t.orientable);
  CHECK(t.genus == 1);
  CHECK(t.chi == 0);
  CHECK(t.orientation.size() == 6);

  auto m4 = surface_summary(to_face_poset(gallery::example_2B4(4)));
  CHECK(m4.closed);
  CHECK(m4.orientable);
  CHECK(m4.chi == -8);
  CHECK(m4.genus == 5);
}

TEST_CASE("surface errors") {
  CHECK(kind_of([] { surface_summary(to_face_poset(gallery::disc())); }) == ErrorKind::NotASurface);
  CHECK(kind_of([] { surface_summary(to_face_poset(gallery::dunce_hat())); }) == ErrorKind::NotASurface);
  CHECK_FALSE(surface_defect(to_face_poset(gallery::disc())).empty());
  CHECK(surface_defect(to_face_poset(gallery::torus(2, 2))).empty());
  // Two tori glued at a vertex: every edge is fine, the vertex link is not.
  auto f = share({cycle("A", 4, "p"), cycle("B", 4, "q")});
  std::vector<ProductCell> tops;
  for (std::size_t a : {0u, 1u})
    for (std::size_t b : {0u, 1u}) tops.push_back({Coord::edge(a), Coord::edge(b)});
  for (std::size_t a : {2u, 3u})
    for (std::size_t b : {2u, 3u}) tops.push_back({Coord::edge(a), Coord::edge(b)});
  auto pinched = to_face_poset(build_product(f, tops));
  CHECK_FALSE(surface_defect(pinched).empty());
}

TEST_CASE("sphere from the boundary of a tetrahedron") {
  auto k = SimplicialComplex::from_facets({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
  auto s = surface_summary(to_face_poset(k));
  CHECK(s.closed);
  CHECK(s.orientable);
  CHECK(s.genus == 0);
  CHECK(s.chi == 2);
}

TEST_CASE("kunneth rank identity on random graph pairs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_graph(rng, "G");
    auto h = random_graph(rng, "H");
    auto pg = graph_profile(g);
    auto ph = graph_profile(h);
    const long g0 = static_cast<long>(pg.components), h0 = static_cast<long>(ph.components);
    auto x = to_face_poset(full_product(share({g, h})));
    auto s = homology_summary(x);
    REQUIRE(s.betti.size() == 3);
    CHECK(s.betti[0] == g0 * h0);
    CHECK(s.betti[1] == pg.b1 * h0 + g0 * ph.b1);
    CHECK(s.betti[2] == pg.b1 * ph.b1);
    for (const auto& t : s.torsion) CHECK(t.empty());
  }
}

TEST_CASE("homology invariant under relabeling and subdivision") {
  std::mt19937_64 rng(3);
  std::vector<FacePoset> items{to_face_poset(gallery::torus(2, 3)), to_face_poset(gallery::dunce_hat()),
                               to_face_poset(gallery::klein_bottle()), gallery::bing_house(),
                               to_face_poset(gallery::annulus(4)), to_face_poset(gallery::example_2B3()),
                               gallery::example_2F6()};
  for (const auto& x : items) {
    auto h = homology_summary(x);
    CHECK(same_homology(h, homology_summary(relabel(x, rng))));
    CHECK(same_homology(h, homology_summary(to_face_poset(triangulate(x)))));
    CHECK(h.euler == alternating_count(x));
  }
}

TEST_CASE("chi agrees on gallery surfaces") {
  for (int n = 4; n <= 8; ++n) {
    auto x = to_face_poset(gallery::example_2B4(n));
    auto s = surface_summary(x);
    CHECK(s.chi == alternating_count(x));
    CHECK(s.chi == homology_summary(x).euler);
    // The cyclic gluing of the tori is coherent only for an even number of them.
    CHECK(s.orientable == (n % 2 == 0));
    CHECK(s.chi == (s.orientable ? 2 - 2 * s.genus : 2 - s.genus));
  }
}
