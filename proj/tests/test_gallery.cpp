#include <doctest.h>

#include "prodcurves/gallery.hpp"
#include "support.hpp"

using namespace prodcurves;
using namespace support;

TEST_CASE("every gallery item reproduces its expected outcomes") {
  for (const auto& entry : gallery_list()) {
    auto item = make(entry.name);
    CAPTURE(entry.name);
    auto checks = verify_item(item);
    CHECK(checks.size() == item.expected.size());
    for (const auto& c : checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
  }
}

TEST_CASE("parameterised items") {
  for (long n : {2, 5, 9}) {
    auto item = make("circle", {{"n", n}});
    for (const auto& c : verify_item(item)) CHECK(c.passed);
  }
  for (long n : {3, 4}) {
    auto item = make("torus", {{"m", n}, {"n", n + 1}});
    for (const auto& c : verify_item(item)) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
  }
  for (long n : {2, 5}) {
    auto item = make("staircase_2F6", {{"N", n}});
    for (const auto& c : verify_item(item)) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
  }
  // Odd n gives a nonorientable surface, and the swap symmetry only holds at n = 4.
  auto odd = verify_item(make("example_2B4", {{"n", 5}}));
  auto failed = [&](const std::string& key) {
    return std::any_of(odd.begin(), odd.end(), [&](const CheckResult& c) { return c.name == key && !c.passed; });
  };
  CHECK(failed("surface"));
  CHECK(failed("involution_invariant"));
  CHECK_FALSE(failed("diagonal_disjoint"));
  CHECK_FALSE(failed("b1_at_least"));
  CHECK_FALSE(failed("J_M"));
}

TEST_CASE("gallery errors") {
  CHECK(kind_of([] { make("nope"); }) == ErrorKind::UnknownName);
  CHECK(kind_of([] { make("example_2B4", {{"n", 3}}); }) == ErrorKind::BadParams);
  CHECK(kind_of([] { make("circle", {{"k", 3}}); }) == ErrorKind::BadParams);
  CHECK(kind_of([] { make("staircase_2F6", {{"N", 1}}); }) == ErrorKind::BadParams);
}

TEST_CASE("random collapsible determinism") {
  auto a = gallery::random_collapsible(42, 20);
  auto b = gallery::random_collapsible(42, 20);
  CHECK(a.witness == b.witness);
  REQUIRE(a.complex.size() == b.complex.size());
  for (std::size_t c = 0; c < a.complex.size(); ++c) CHECK(a.complex.label(c) == b.complex.label(c));
  CHECK(gallery::random_collapsible(7, 0).complex.size() == 1);
}
