#include <doctest.h>

#include <random>

#include "util.hpp"
#include "ybco/bracket.hpp"
#include "ybco/errors.hpp"
#include "ybco/jones_alex.hpp"
#include "ybco/models.hpp"
#include "ybco/quandle.hpp"
#include "ybco/ybcoh.hpp"

using namespace ybco;

namespace {

Ring qq() { return parse_ring("QQ"); }

TensorOperator quandle_R() { return yb_from_quandle(alexander_quandle_F4(), std::nullopt).base.R; }

// Pre-YBOs of the catalog, each over its own ring.
std::vector<TensorOperator> catalog() {
  return {transposition(qq(), 2), transposition(qq(), 3), quandle_R(), jones_model().phis[0],
          alexander_model().phis[0]};
}

}  // namespace

TEST_CASE("ybe_defect on the catalog") {
  for (const auto& R : catalog()) CHECK(ybe_defect(R).is_zero());
  CHECK(ybe_defect(build_bracket_model(false, Specialization::GenericA).R).is_zero());
  std::mt19937_64 rng(4);
  CHECK_FALSE(ybe_defect(random_operator(qq(), 2, 2, 2, rng)).is_zero());
}

TEST_CASE("delta1") {
  std::mt19937_64 rng(5);
  TensorOperator tau = transposition(qq(), 2);
  for (int k = 0; k < 10; ++k) CHECK(delta1(tau, random_operator(qq(), 2, 1, 1, rng)).is_zero());
  for (const auto& R : catalog()) {
    CHECK(delta1(R, TensorOperator(R.ring(), R.d(), 1)).is_zero());
    CHECK(delta1(R, TensorOperator::identity(R.ring(), R.d(), 1)).is_zero());
  }
}

TEST_CASE("delta2") {
  std::mt19937_64 rng(6);
  TensorOperator tau = transposition(qq(), 2);
  for (int k = 0; k < 10; ++k) CHECK(delta2(tau, random_operator(qq(), 2, 2, 2, rng)).is_zero());
  const auto& J = jones_model();
  CHECK(delta2(J.phis[0], J.phis[1]).is_zero());
  TensorOperator Rq = quandle_R();
  CHECK(delta2(Rq, Rq).is_zero());
}

TEST_CASE("delta2 after delta1 vanishes") {
  std::mt19937_64 rng(7);
  for (const auto& R : catalog()) {
    for (int k = 0; k < 5; ++k) {
      TensorOperator f = random_operator(R.ring(), R.d(), 1, 1, rng);
      CHECK(delta2(R, delta1(R, f)).is_zero());
    }
  }
}

TEST_CASE("full differential matches the low-degree formulas") {
  std::mt19937_64 rng(8);
  for (const auto& R : catalog()) {
    TensorOperator f = random_operator(R.ring(), R.d(), 1, 1, rng);
    TensorOperator phi = random_operator(R.ring(), R.d(), 2, 2, rng);
    CHECK(full_diff(R, f) == -delta1(R, f));
    CHECK(full_diff(R, phi) == delta2(R, phi));
    CHECK(full_diff(R, TensorOperator(R.ring(), R.d(), 2)).is_zero());
  }
}

TEST_CASE("partial differentials commute as a cosimplicial family") {
  std::mt19937_64 rng(9);
  for (const auto& R : {transposition(qq(), 2), jones_model().phis[0], quandle_R()}) {
    for (int n = 1; n <= 2; ++n) {
      TensorOperator phi = random_operator(R.ring(), R.d(), n, n, rng);
      for (int j = 2; j <= n + 2; ++j) {
        for (int i = 1; i < j; ++i) {
          CHECK(partial_diff(R, partial_diff(R, phi, i), j) ==
                partial_diff(R, partial_diff(R, phi, j - 1), i));
        }
      }
    }
  }
}

TEST_CASE("cochain complex on random cochains") {
  std::mt19937_64 rng(10);
  for (const auto& R : {transposition(qq(), 2), quandle_R(), jones_model().phis[0]}) {
    for (int n = 1; n <= 2; ++n) {
      for (int k = 0; k < 3; ++k) {
        TensorOperator psi = random_operator(R.ring(), R.d(), n, n, rng);
        CHECK(full_diff(R, full_diff(R, psi)).is_zero());
      }
    }
  }
}

TEST_CASE("conjugated YBOs stay YBOs") {
  std::mt19937_64 rng(11);
  for (const auto& R : {transposition(qq(), 2), jones_model().phis[0]}) {
    TensorOperator mu = random_operator(R.ring(), 2, 1, 1, rng);
    while (true) {
      try {
        invert(mu);
        break;
      } catch (const SingularError&) {
        mu = random_operator(R.ring(), 2, 1, 1, rng);
      }
    }
    TensorOperator mm = tensor(mu, mu);
    CHECK(ybe_defect(compose(mm, compose(R, invert(mm)))).is_zero());
  }
}

TEST_CASE("cobound_solve and cohomology") {
  std::mt19937_64 rng(12);
  TensorOperator tau = transposition(qq(), 2);
  CHECK_FALSE(cobound_solve(tau, random_operator(qq(), 2, 2, 2, rng) + TensorOperator::identity(qq(), 2, 2)));
  auto zero = cobound_solve(tau, TensorOperator(qq(), 2, 2));
  REQUIRE(zero);
  CHECK(delta1(tau, *zero).is_zero());

  TensorOperator J0 = jones_model().phis[0];
  for (int k = 0; k < 5; ++k) {
    TensorOperator f = random_operator(J0.ring(), 2, 1, 1, rng);
    auto g = cobound_solve(J0, delta1(J0, f));
    REQUIRE(g);
    CHECK(delta1(J0, *g) == delta1(J0, f));
  }
  CHECK(cohomology_dimension(tau, 1) == 4);
  CHECK(cohomology_dimension(tau, 2) == 16);
  CHECK_THROWS_AS(cobound_solve(quandle_R(), TensorOperator(quandle_R().ring(), 4, 2)), NotAField);
}
