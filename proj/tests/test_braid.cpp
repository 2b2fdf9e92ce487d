#include <doctest.h>

#include <random>

#include "util.hpp"
#include "ybco/braid.hpp"
#include "ybco/errors.hpp"
#include "ybco/jones_alex.hpp"
#include "ybco/models.hpp"
#include "ybco/quandle.hpp"

using namespace ybco;
using ybco::testing::el;

namespace {

BraidWord bw(const char* text) { return BraidWord::parse(text); }

}  // namespace

TEST_CASE("braid words parse and print") {
  BraidWord t = bw("strands=2; 1 1 1");
  CHECK(t.strands == 2);
  CHECK(t.letters == std::vector<int>{1, 1, 1});
  CHECK(t.to_string() == "strands=2; 1 1 1");
  CHECK(bw("strands=1;").letters.empty());
  CHECK(bw("strands=3; 1 -2 1 -2").writhe() == 0);
  CHECK(bw("strands=3; 1 -2 1 -2").positive() == 2);
  CHECK(torus_braid(5).writhe() == 5);
  CHECK(torus_braid(2) == bw("strands=2; 1 1"));
  CHECK_THROWS_AS(bw("strands=2; 2"), DomainError);
  CHECK_THROWS_AS(bw("strands=2; 0"), DomainError);
  CHECK_THROWS_AS(bw("1 1 1"), ParseError);
  CHECK_THROWS_AS(bw("strands=2; 1 x"), ParseError);
  std::mt19937_64 rng(1);
  for (int k = 0; k < 100; ++k) {
    BraidWord b = random_braid(rng, 5, 8);
    CHECK(BraidWord::parse(b.to_string()) == b);
  }
}

TEST_CASE("Markov moves") {
  BraidWord t = torus_braid(3);
  CHECK(markov_transform(t, {MarkovMove::Kind::Conjugate, 1}) == t);
  CHECK(markov_transform(t, {MarkovMove::Kind::StabilizePos, 1}) == bw("strands=3; 1 1 1 2"));
  CHECK(markov_transform(t, {MarkovMove::Kind::StabilizeNeg, 1}) == bw("strands=3; 1 1 1 -2"));
  CHECK(markov_transform(bw("strands=3; 1 1 1 2"), {MarkovMove::Kind::Destabilize, 1}) == t);
  CHECK_FALSE(can_destabilize(bw("strands=3; 2 1 2")));
  CHECK_THROWS_AS(markov_transform(bw("strands=3; 2 1 2"), {MarkovMove::Kind::Destabilize, 1}), DomainError);
  CHECK(free_reduce(bw("strands=3; 1 2 -2 -1 2")) == bw("strands=3; 2"));
}

TEST_CASE("psi") {
  Eybo tau = transposition_eybo(parse_ring("QQ"), 2);
  DeformedEybo u = undeformed(tau, 1);
  CHECK(psi(bw("strands=2; 1"), u).part(0) == tau.R);
  DeformedEybo d = tau_deformed(RingElement::variable(tau_ring(), "q"));
  GradedOperator inv_pair = psi(bw("strands=2; 1 -1"), d);
  CHECK(inv_pair == GradedOperator::identity(d.base, 2, 2, 1));
  GradedOperator sq = psi(bw("strands=2; 1 1"), d);
  TensorOperator R = d.R.part(0), phi = d.R.part(1);
  CHECK(sq.part(1) == compose(phi, R) + compose(R, phi));
  CHECK(psi(bw("strands=1;"), d) == GradedOperator::identity(d.base, 2, 1, 1));
}

TEST_CASE("trace invariants") {
  Eybo tau = transposition_eybo(parse_ring("QQ"), 2);
  CHECK(trace_invariant(bw("strands=2; 1"), undeformed(tau)).to_string() == "2");
  CHECK(trace_invariant(bw("strands=1;"), undeformed(tau)).to_string() == "2");
  CHECK(trace_invariant(bw("strands=2;"), undeformed(tau)).to_string() == "4");

  DeformedEybo d = tau_deformed(RingElement::variable(tau_ring(), "q"));
  for (int n = 1; n <= 8; ++n) {
    std::string expected = n % 2 ? "2" : "4 + " + std::to_string(2 * n) + "*q*h";
    CHECK(trace_invariant(torus_braid(n), d).to_string() == expected);
  }

  std::mt19937_64 rng(2);
  for (int k = 0; k < 20; ++k) {
    TensorOperator f = random_operator(parse_ring("QQ"), 2, 2, 2, rng);
    TensorOperator g = random_operator(parse_ring("QQ"), 2, 2, 2, rng);
    CHECK(trace_of_product(f, g) == trace(compose(f, g)));
  }
}

TEST_CASE("Markov invariance on random pairs") {
  std::vector<DeformedEybo> models{tau_deformed(RingElement::variable(tau_ring(), "q")),
                                   *yb_from_quandle(alexander_quandle_F4(), chi_cocycle()).deformed,
                                   jones_model().def};
  std::mt19937_64 rng(3);
  for (const auto& def : models) {
    for (int k = 0; k < 30; ++k) {
      BraidWord b = random_braid(rng, 4, 6);
      MarkovMove move = random_move(rng, b);
      BraidWord after = markov_transform(b, move);
      CHECK_MESSAGE(trace_invariant(b, def) == trace_invariant(after, def),
                    std::string(b.to_string() + " under " + move.to_string()));
    }
  }
}

TEST_CASE("random braids are reproducible") {
  std::mt19937_64 a(99), b(99);
  for (int k = 0; k < 20; ++k) CHECK(random_braid(a, 4, 6) == random_braid(b, 4, 6));
}
