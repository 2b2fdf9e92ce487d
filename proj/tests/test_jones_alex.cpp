#include <doctest.h>

#include <random>

#include "util.hpp"
#include "ybco/braid.hpp"
#include "ybco/errors.hpp"
#include "ybco/jones_alex.hpp"

using namespace ybco;
using ybco::testing::el;

namespace {

BraidWord bw(const char* text) { return BraidWord::parse(text); }

const BraidWord kUnknot = BraidWord::parse("strands=1;");
const BraidWord kHopf = BraidWord::parse("strands=2; 1 1");
const BraidWord kHopfMirror = BraidWord::parse("strands=2; -1 -1");
const BraidWord kTrefoil = BraidWord::parse("strands=2; 1 1 1");
const BraidWord kFigureEight = BraidWord::parse("strands=3; 1 -2 1 -2");

}  // namespace

TEST_CASE("Jones oracle values") {
  Ring r = laurent_ring();
  CHECK(oracle_jones(kUnknot).is_one());
  CHECK(oracle_jones(kTrefoil) == el(r, "h^2 + h^6 - h^8"));
  CHECK(oracle_jones(kFigureEight) == el(r, "h^-4 - h^-2 + 1 - h^2 + h^4"));
  CHECK(jones_t_form(oracle_jones(kTrefoil)) == "t + t^3 - t^4");
  CHECK(jones_t_form(oracle_jones(kHopf)) == "-t^(1/2) - t^(5/2)");
  // Mirror images: h -> h^-1.
  CHECK(oracle_jones(kHopfMirror) == invert_variable(oracle_jones(kHopf)));
  CHECK(oracle_jones(bw("strands=2; -1 -1 -1")) == invert_variable(oracle_jones(kTrefoil)));
  CHECK(oracle_jones(kFigureEight) == invert_variable(oracle_jones(kFigureEight)));
}

TEST_CASE("Jones from the trace") {
  Ring r = laurent_ring();
  RingElement loop = el(r, "h + h^-1");
  for (const auto& b : {kUnknot, kHopf, kHopfMirror, kTrefoil, kFigureEight}) {
    CHECK_MESSAGE(jones_invariant(b) == loop * oracle_jones(b), b.to_string());
  }
  CHECK(jones_invariant(kUnknot).to_string() == "h + h^-1");
  std::mt19937_64 rng(31);
  for (int k = 0; k < 30; ++k) {
    BraidWord b = random_braid(rng, 4, 7);
    CHECK_MESSAGE(jones_invariant(b) == loop * oracle_jones(b), b.to_string());
  }
}

TEST_CASE("Alexander values") {
  Ring r = laurent_ring();
  AlexanderResult t = alexander_invariant(kTrefoil);
  REQUIRE(t.is_scalar);
  CHECK(normalize_up_to_units(t.scalar) == el(r, "1 - h^2 + h^4"));
  AlexanderResult f = alexander_invariant(kFigureEight);
  REQUIRE(f.is_scalar);
  CHECK(normalize_up_to_units(f.scalar) == el(r, "1 - 3*h^2 + h^4"));
  CHECK(t_form(normalize_up_to_units(f.scalar), 1) == "1 - 3*t + t^2");
  AlexanderResult u = alexander_invariant(bw("strands=2; 1"));
  REQUIRE(u.is_scalar);
  CHECK(normalize_up_to_units(u.scalar).is_one());
  AlexanderResult split = alexander_invariant(bw("strands=2;"));
  REQUIRE(split.is_scalar);
  CHECK(split.scalar.is_zero());
  CHECK_THROWS_AS(alexander_invariant(kUnknot), DomainError);
}

TEST_CASE("Alexander against the Conway oracle") {
  for (const auto& b : {kHopf, kTrefoil, kFigureEight, bw("strands=3; 1 1 2 2"), bw("strands=3; 1 2 1 2")}) {
    AlexanderResult a = alexander_invariant(b);
    REQUIRE(a.is_scalar);
    CHECK_MESSAGE(equal_up_to_units(a.scalar, oracle_alexander(b)), b.to_string());
  }
  std::mt19937_64 rng(32);
  for (int k = 0; k < 30; ++k) {
    BraidWord b = random_braid(rng, 4, 7);
    if (b.strands < 2) continue;
    AlexanderResult a = alexander_invariant(b);
    REQUIRE(a.is_scalar);
    CHECK_MESSAGE(equal_up_to_units(a.scalar, oracle_alexander(b)), b.to_string());
  }
}

TEST_CASE("units and t-forms") {
  Ring r = laurent_ring();
  CHECK(normalize_up_to_units(el(r, "-h^-3 + 2*h^-1")) == el(r, "1 - 2*h^2"));
  CHECK(equal_up_to_units(el(r, "h^5 - h^7"), el(r, "-1 + h^2")));
  CHECK_FALSE(equal_up_to_units(el(r, "1 + h"), el(r, "1 + h^2")));
  CHECK(t_form(el(r, "h"), 1) == "t^(1/2)");
  CHECK(t_form(el(r, "h"), -1) == "-t^(1/2)");
  CHECK(t_form(el(r, "h^-2 + 3"), 1) == "t^-1 + 3");
}
