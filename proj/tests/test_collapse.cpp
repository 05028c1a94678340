#include <doctest.h>

#include "prodcurves/collapse.hpp"
#include "prodcurves/gallery.hpp"
#include "prodcurves/simplicial.hpp"
#include "support.hpp"

using namespace prodcurves;
using namespace support;

namespace {

// Random square-generated subcomplex of a random product of two graphs.
FacePoset random_square_complex(std::mt19937_64& rng) {
  auto f = share({random_graph(rng, "G", 4, 5), random_graph(rng, "H", 4, 5)});
  auto squares = all_squares(*f);
  std::vector<ProductCell> tops;
  std::bernoulli_distribution keep(0.55);
  for (const auto& s : squares)
    if (keep(rng)) tops.push_back(s);
  if (tops.empty()) tops.push_back(squares.front());
  return to_face_poset(build_product(f, tops));
}

}  // namespace

TEST_CASE("maximal collapse of basic complexes") {
  auto disc = maximal_collapse(to_face_poset(gallery::disc()));
  CHECK(disc.remainder.size() == 1);
  CHECK(disc.steps.size() == 3);
  CHECK(classify_remainder(disc.remainder) == RemainderClass::Point);

  auto dunce = to_face_poset(gallery::dunce_hat());
  auto d = maximal_collapse(dunce);
  CHECK(d.steps.empty());
  CHECK(d.remainder.size() == dunce.size());
  CHECK(free_pairs(dunce).empty());

  auto annulus = maximal_collapse(to_face_poset(gallery::annulus(5)));
  CHECK(classify_remainder(annulus.remainder) == RemainderClass::Circle);

  auto torus = maximal_collapse(to_face_poset(gallery::torus(2, 2)));
  CHECK(torus.steps.empty());
  CHECK(classify_remainder(torus.remainder) == RemainderClass::Torus);
}

TEST_CASE("replay reproduces greedy remainders for every policy") {
  std::vector<FacePoset> items{to_face_poset(gallery::annulus(4)), to_face_poset(gallery::fan(5)),
                               to_face_poset(gallery::example_2B3()), gallery::example_2F6(),
                               lower(make("square").payload)};
  for (const auto& x : items)
    for (auto policy : {CollapsePolicy::LowestId, CollapsePolicy::HighestId, CollapsePolicy::Shuffled}) {
      auto seq = maximal_collapse(x, policy, 99);
      auto r = replay(x, seq.steps);
      CHECK(r.size() == seq.remainder.size());
      for (std::size_t c = 0; c < r.size(); ++c) CHECK(r.label(c) == seq.remainder.label(c));
      CHECK(free_pairs(seq.remainder).empty());
    }
}

TEST_CASE("replay rejects illegal steps") {
  auto x = to_face_poset(gallery::disc());
  std::vector<CollapseStep> bad{{"{a}", "{a,b}"}};
  CHECK(kind_of([&] { replay(x, bad); }) == ErrorKind::BadWitness);
  std::vector<CollapseStep> unknown{{"nope", "{a,b}"}};
  CHECK(kind_of([&] { replay(x, unknown); }) == ErrorKind::BadWitness);
  std::vector<CollapseStep> ok{{"{a,b}", "{a,b,c}"}, {"{a,b}", "{a,b,c}"}};
  CHECK(kind_of([&] { replay(x, ok); }) == ErrorKind::BadWitness);
}

TEST_CASE("homology preserved by maximal collapse") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    auto x = random_square_complex(rng);
    auto seq = maximal_collapse(x, CollapsePolicy::Shuffled, static_cast<std::uint64_t>(trial));
    auto before = homology_summary(x);
    auto after = homology_summary(seq.remainder);
    for (std::size_t k = 1; k < 3; ++k) {
      const long b = k < before.betti.size() ? before.betti[k] : 0;
      const long a = k < after.betti.size() ? after.betti[k] : 0;
      CHECK(a == b);
    }
    CHECK(after.betti[0] == before.betti[0]);
    if (seq.remainder.dimension() == 1)
      for (auto v : seq.remainder.cells_of_dim(0)) CHECK(seq.remainder.cofaces(v).size() != 1);
  }
}

TEST_CASE("collapsibility search") {
  auto disc = search_collapsible(to_face_poset(gallery::disc()));
  CHECK(disc.outcome == SearchOutcome::Yes);
  CHECK(replay(to_face_poset(gallery::disc()), disc.witness).size() == 1);
  CHECK(search_collapsible(to_face_poset(gallery::dunce_hat())).outcome == SearchOutcome::No);
  CHECK(search_collapsible(gallery::bing_house()).outcome == SearchOutcome::No);
  CHECK(search_collapsible(to_face_poset(gallery::annulus(4))).outcome == SearchOutcome::No);
  CHECK(search_collapsible(to_face_poset(gallery::annulus(6)), 3).outcome == SearchOutcome::Unknown);
}

TEST_CASE("random collapsible complexes are found collapsible") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto rc = gallery::random_collapsible(seed, static_cast<int>(seed % 25));
    validate(rc.complex);
    CHECK(replay(rc.complex, rc.witness).size() == 1);
    auto s = search_collapsible(rc.complex);
    REQUIRE(s.outcome == SearchOutcome::Yes);
    CHECK(replay(rc.complex, s.witness).size() == 1);
  }
  CHECK(gallery::random_collapsible(5, 0).complex.size() == 1);
  auto a = gallery::random_collapsible(42, 20);
  auto b = gallery::random_collapsible(42, 20);
  REQUIRE(a.complex.size() == b.complex.size());
  for (std::size_t c = 0; c < a.complex.size(); ++c) CHECK(a.complex.label(c) == b.complex.label(c));
  CHECK(a.witness == b.witness);
}

TEST_CASE("remainder classes") {
  CHECK(classify_remainder(lower(gallery::circle(4))) == RemainderClass::Circle);
  CHECK(classify_remainder(lower(gallery::theta())) == RemainderClass::Quasi1Manifold);
  CHECK(classify_remainder(lower(gallery::path(2))) == RemainderClass::OtherGraph);
  CHECK(classify_remainder(to_face_poset(gallery::klein_bottle())) == RemainderClass::Other2Dim);
  CHECK(classify_remainder(to_face_poset(gallery::torus(2, 3))) == RemainderClass::Torus);
  CHECK(to_string(RemainderClass::Quasi1Manifold) == "quasi_1_manifold");
}

TEST_CASE("non-embeddability certificates") {
  for (const auto& x : {to_face_poset(gallery::dunce_hat()), gallery::bing_house()}) {
    auto v = certify_nonembeddable(x);
    CHECK(v.b1 == 0);
    REQUIRE(v.certificate);
    CHECK(v.certificate->rule == "2E.1(i)");
    CHECK(v.certificate->supporting == std::vector<std::string>{"1.7"});
    CHECK(v.steps.empty());
    CHECK(v.remainder_class == RemainderClass::Other2Dim);
    REQUIRE(v.existential);
    CHECK(v.existential->allowed_remainder_found == SearchOutcome::No);
    CHECK_FALSE(v.readings_disagree);
  }
  auto disc = certify_nonembeddable(to_face_poset(gallery::disc()));
  CHECK_FALSE(disc.certificate);
  CHECK(disc.remainder_class == RemainderClass::Point);
  auto ann = certify_nonembeddable(to_face_poset(gallery::annulus(4)));
  CHECK_FALSE(ann.certificate);
  CHECK(ann.b1 == 1);
  CHECK(ann.remainder_class == RemainderClass::Circle);
  auto tor = certify_nonembeddable(to_face_poset(gallery::torus(2, 2)));
  CHECK_FALSE(tor.certificate);
  CHECK(tor.b1 == 2);
  CHECK(tor.remainder_class == RemainderClass::Torus);
  auto klein = certify_nonembeddable(to_face_poset(gallery::klein_bottle()));
  REQUIRE(klein.certificate);
  CHECK(klein.certificate->rule == "2E.1(ii)");
  auto tt = certify_nonembeddable(to_face_poset(gallery::theta_theta()));
  CHECK_FALSE(tt.theorem_applies);
  CHECK_FALSE(tt.certificate);
}

TEST_CASE("certify preconditions") {
  CHECK(kind_of([] { certify_nonembeddable(lower(gallery::theta())); }) == ErrorKind::NotTwoDimensional);
  auto two = SimplicialComplex::from_facets({{"a", "b", "c"}, {"x", "y", "z"}});
  CHECK(kind_of([&] { certify_nonembeddable(to_face_poset(two)); }) == ErrorKind::NotConnected);
}
