#include <doctest.h>

#include <random>

#include "util.hpp"
#include "ybco/bracket.hpp"
#include "ybco/errors.hpp"
#include "ybco/jones_alex.hpp"
#include "ybco/models.hpp"
#include "ybco/quandle.hpp"
#include "ybco/tensor.hpp"

using namespace ybco;
using ybco::testing::el;

namespace {

Ring qq() { return parse_ring("QQ"); }

// Column of f for the basis tensor with the given digits.
std::vector<int> image_of_basis(const TensorOperator& f, const std::vector<int>& in) {
  std::size_t col = f.flat_index(in);
  std::vector<int> out;
  for (std::size_t row = 0; row < f.rows(); ++row) {
    if (f.entry(row, col).is_zero()) continue;
    REQUIRE(f.entry(row, col).is_one());
    REQUIRE(out.empty());
    std::size_t r = row;
    out.assign(static_cast<std::size_t>(f.m_out()), 0);
    for (int k = f.m_out() - 1; k >= 0; --k) {
      out[static_cast<std::size_t>(k)] = static_cast<int>(r % static_cast<std::size_t>(f.d()));
      r /= static_cast<std::size_t>(f.d());
    }
  }
  return out;
}

}  // namespace

TEST_CASE("index convention") {
  TensorOperator tau = transposition(qq(), 3);
  CHECK(image_of_basis(pad(tau, 3, 1), {0, 1, 2}) == std::vector<int>{1, 0, 2});
  CHECK(image_of_basis(pad(tau, 3, 2), {0, 1, 2}) == std::vector<int>{0, 2, 1});
  TensorOperator f = TensorOperator::from_rows(qq(), 2, 1, 1, {{1, 2}, {3, 4}});
  // f(e_1) = 2 e_0 + 4 e_1.
  CHECK(f.at({0}, {1}) == RingElement::integer(qq(), 2));
  CHECK(f.at({1}, {1}) == RingElement::integer(qq(), 4));
}

TEST_CASE("compose and pad") {
  TensorOperator tau = transposition(qq(), 2);
  CHECK(compose(tau, tau) == TensorOperator::identity(qq(), 2, 2));
  std::mt19937_64 rng(1);
  TensorOperator f = random_operator(qq(), 2, 2, 2, rng);
  CHECK(compose(TensorOperator::identity(qq(), 2, 2), f) == f);
  CHECK(pad(f, 2, 1) == f);

  auto q = alexander_quandle_F4();
  auto model = yb_from_quandle(q, std::nullopt);
  TensorOperator p = pad(model.base.R, 3, 2);
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      for (int z = 0; z < 4; ++z) {
        CHECK(image_of_basis(p, {x, y, z}) == std::vector<int>{x, z, q.op(y, z)});
      }
    }
  }

  BracketModel b = build_bracket_model(false, Specialization::GenericA);
  CHECK(compose(b.R, b.R_inv) == TensorOperator::identity(b.ring, 2, 2));
}

TEST_CASE("operator properties on random inputs") {
  std::mt19937_64 rng(2);
  Ring r = qq();
  for (int k = 0; k < 20; ++k) {
    TensorOperator f = random_operator(r, 2, 2, 2, rng), g = random_operator(r, 2, 2, 2, rng),
                   h = random_operator(r, 2, 2, 2, rng);
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    CHECK(compose(pad(f, 3, 2), pad(g, 3, 2)) == pad(compose(f, g), 3, 2));
    CHECK(trace(compose(f, g)) == trace(compose(g, f)));
    CHECK(trace(tensor(f, g)) == trace(f) * trace(g));
    TensorOperator u = random_operator(r, 2, 1, 1, rng);
    TensorOperator one_u = tensor(TensorOperator::identity(r, 2, 1), u);
    CHECK(partial_trace(compose(one_u, f), {2}) == partial_trace(compose(f, one_u), {2}));
    TensorOperator x = random_operator(r, 2, 3, 3, rng);
    CHECK(apply_padded_left(f, 2, x) == compose(pad(f, 3, 2), x));
    CHECK(apply_padded_right(x, f, 1) == compose(x, pad(f, 3, 1)));
  }
}

TEST_CASE("partial traces") {
  Ring r = qq();
  auto id1 = TensorOperator::identity(r, 2, 1);
  CHECK(partial_trace(TensorOperator::identity(r, 2, 2), {2}) == RingElement::integer(r, 2) * id1);
  TensorOperator tau = transposition(r, 2);
  CHECK(partial_trace(tau, {2}) == id1);
  CHECK(trace(tau) == RingElement::integer(r, 2));
  CHECK(partial_trace(tau, {}) == tau);
  CHECK(partial_trace(tau, {1, 2}).entry(0, 0) == trace(tau));
  CHECK_THROWS(partial_trace(tau, {3}));
}

TEST_CASE("invert") {
  Ring r = qq();
  TensorOperator tau = transposition(r, 2);
  CHECK(invert(tau) == tau);
  auto two = RingElement::integer(r, 2) * TensorOperator::identity(r, 2, 1);
  CHECK(invert(two) == RingElement::constant(r, Rational(1, 2)) * TensorOperator::identity(r, 2, 1));
  CHECK_THROWS_AS(invert(jones_model().phis[0]), SingularError);
  Ring t = parse_ring("QQ[h:trunc1]");
  TensorOperator nilpotent(t, 1, 1);
  nilpotent.set(0, 0, RingElement::variable(t, "h"));
  CHECK_THROWS_AS(invert(nilpotent), NotAField);
}

TEST_CASE("linear_combine") {
  Ring r = parse_ring("QQ[q,h:trunc1]");
  TauCocycle c = tau_cocycle(RingElement::variable(r, "q"));
  TensorOperator tau = transposition(r, 2);
  TensorOperator sum = linear_combine({{RingElement::one(r), tau}, {RingElement::variable(r, "h"), c.phi}});
  CHECK(grade(sum, "h", 0) == transposition(ring_without_variable(r, "h"), 2));
  CHECK(grade(sum, "h", 1) == tau_cocycle(RingElement::variable(ring_without_variable(r, "h"), "q")).phi);
  CHECK(linear_combine({{RingElement::zero(r), c.phi}, {RingElement::one(r), tau}}) == tau);
}

TEST_CASE("text round trip") {
  BracketModel m = build_bracket_model(true, Specialization::AEqualsI);
  TensorOperator f = m.R_full();
  CHECK(TensorOperator::from_text(f.to_text()) == f);
  CHECK(TensorOperator::from_text(m.cup.to_text()) == m.cup);
  CHECK(f.to_text().rfind("2 2 QQ(i)[B,h:trunc1]\n", 0) == 0);
}
