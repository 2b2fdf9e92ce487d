#include <doctest.h>

#include <random>

#include "util.hpp"
#include "ybco/errors.hpp"
#include "ybco/eybo.hpp"
#include "ybco/jones_alex.hpp"
#include "ybco/models.hpp"
#include "ybco/quandle.hpp"
#include "ybco/ybcoh.hpp"

using namespace ybco;

namespace {

Ring qq() { return parse_ring("QQ"); }

Eybo quandle_base() { return yb_from_quandle(alexander_quandle_F4(), std::nullopt).base; }

}  // namespace

TEST_CASE("verify_eybo") {
  Eybo tau = transposition_eybo(qq(), 2);
  CHECK(verify_eybo(tau).ok());
  CHECK(verify_eybo(quandle_base()).ok());
  Eybo bad = tau;
  bad.alpha = RingElement::integer(qq(), 2);
  Report r = verify_eybo(bad);
  CHECK_FALSE(r.passed("trace_plus"));
  CHECK(r.passed("trace_forms_agree"));
  CHECK(r.to_text().find("trace_plus: FAIL residual_zero=false") != std::string::npos);
}

TEST_CASE("inverse EYBO") {
  for (const Eybo& s : {transposition_eybo(qq(), 2), transposition_eybo(qq(), 3), quandle_base()}) {
    CHECK(verify_eybo(inverse_eybo(s)).ok());
  }
}

TEST_CASE("enhanced 2-cocycles") {
  Eybo tau = transposition_eybo(tau_ring(), 2);
  TauCocycle c = tau_cocycle(RingElement::variable(tau_ring(), "q"));
  ExtensionResult res = verify_enhanced_2cocycle(tau, c.phi, c.mu1);
  CHECK(res.report.ok());
  REQUIRE(res.deformed);
  CHECK(verify_deformed(*res.deformed).ok());
  // mu_1 = -tr_2(phi): tr_2(phi) sends e0 to e0 + e1 and e1 to -e1.
  CHECK(c.mu1 == TensorOperator::from_rows(tau_ring(), 2, 1, 1, {{-1, 0}, {-1, 1}}));

  TensorOperator zero(tau_ring(), 2, 2);
  CHECK(verify_enhanced_2cocycle(tau, zero, TensorOperator(tau_ring(), 2, 1)).report.ok());
  // A wrong mu_1 is caught by the trace equations.
  CHECK_FALSE(verify_enhanced_2cocycle(tau, c.phi, -c.mu1).report.passed("trace_plus"));
}

TEST_CASE("quandle lifts") {
  Quandle q = alexander_quandle_F4();
  // A cocycle over Z lifts to an enhanced 2-cocycle.
  QuandleCocycle cob = quandle_coboundary(q, {0, 2, -1, 5}, 7);
  CHECK(cob.integral(q));
  QuandleModel m = yb_from_quandle(q, cob);
  REQUIRE(m.deformed);
  CHECK(verify_deformed(*m.deformed).ok());
  CHECK(verify_enhanced_2cocycle(m.base, m.deformed->R.part(1), m.deformed->mu.part(1)).report.ok());

  // chi is a cocycle mod 2 only; read in Z its lift misses the cocycle
  // condition on six basis triples by +-2.
  QuandleCocycle chi = chi_cocycle();
  CHECK_NOTHROW(chi.validate(q));
  CHECK_FALSE(chi.integral(q));
  QuandleModel mc = yb_from_quandle(q, chi);
  TensorOperator defect = delta2(mc.base.R, mc.deformed->R.part(1));
  CHECK(defect.nonzeros() == 6);
  for (std::size_t i = 0; i < defect.rows(); ++i) {
    for (std::size_t j = 0; j < defect.cols(); ++j) {
      RingElement v = defect.entry(i, j);
      if (!v.is_zero()) CHECK((v == RingElement::integer(v.ring(), 2) || v == RingElement::integer(v.ring(), -2)));
    }
  }
  Report r = verify_deformed(*mc.deformed);
  CHECK_FALSE(r.passed("ybe"));
  CHECK(r.passed("inverse_right"));
  CHECK(r.passed("inverse_left"));
  CHECK(r.passed("trace_plus"));
  CHECK(r.passed("trace_minus"));
}

TEST_CASE("coboundary enhancements") {
  std::mt19937_64 rng(21);
  Eybo tau = transposition_eybo(qq(), 2);
  Eybo qb = quandle_base();
  for (int k = 0; k < 5; ++k) {
    TensorOperator f = random_operator(qq(), 2, 1, 1, rng);
    DeformedEybo d = coboundary_enhancement(tau, f);
    CHECK(d.R.part(1).is_zero());
    CHECK(d.mu.part(1).is_zero());
    CHECK(verify_deformed(d).ok());
    TensorOperator g = random_operator(qb.R.ring(), 4, 1, 1, rng);
    CHECK(verify_deformed(coboundary_enhancement(qb, g)).ok());
  }
  DeformedEybo id = coboundary_enhancement(qb, TensorOperator::identity(qb.R.ring(), 4, 1));
  CHECK(id.R.part(1).is_zero());
  CHECK(id.mu.part(1).is_zero());
}

TEST_CASE("inverse series") {
  std::mt19937_64 rng(22);
  Ring r = qq();
  TensorOperator R = transposition(r, 2);
  TensorOperator phi = random_operator(r, 2, 2, 2, rng);
  auto hats = inverse_series({R, phi});
  CHECK(hats[0] == R);
  CHECK(hats[1] == -compose(R, compose(phi, R)));

  auto id = TensorOperator::identity(r, 2, 2);
  auto zero = TensorOperator(r, 2, 2);
  auto trivial = inverse_series({id, zero, zero});
  CHECK(trivial[0] == id);
  CHECK(trivial[1].is_zero());
  CHECK(trivial[2].is_zero());

  auto geometric = inverse_series({id, phi, zero});
  CHECK(geometric[1] == -phi);
  CHECK(geometric[2] == compose(phi, phi));

  for (int n = 1; n <= 4; ++n) {
    std::vector<TensorOperator> phis{id};
    for (int k = 1; k <= n; ++k) phis.push_back(random_operator(r, 2, 2, 2, rng));
    CHECK_NOTHROW(inverse_series(phis));
  }
  CHECK_THROWS_AS(inverse_series({jones_model().phis[0]}), SingularError);
}

TEST_CASE("theta against the expanded YBE") {
  std::mt19937_64 rng(23);
  Ring r = qq();
  TensorOperator tau = transposition(r, 2);
  for (int k = 0; k < 10; ++k) {
    std::vector<TensorOperator> phis{tau, random_operator(r, 2, 2, 2, rng), random_operator(r, 2, 2, 2, rng)};
    CHECK(delta2(tau, phis[2]) + theta(phis, 2) == ybe_expansion_component(phis, 2));
    phis.push_back(random_operator(r, 2, 2, 2, rng));
    CHECK(delta2(tau, phis[3]) + theta(phis, 3) == ybe_expansion_component(phis, 3));
  }
  // Theta_2 collects (0,1,1), (1,0,1), (1,1,0): no phi_2 and no (0,0,2).
  std::vector<TensorOperator> only_two{tau, TensorOperator(r, 2, 2), random_operator(r, 2, 2, 2, rng)};
  CHECK(theta(only_two, 2).is_zero());
}

TEST_CASE("higher extensions") {
  const LaurentModel& J = jones_model();
  DeformedEybo order1{J.phis[0].ring(),
                      DeformMode::Truncated,
                      1,
                      "h",
                      GradedOperator::from_list({J.phis[0], J.phis[1]}, 0, 1),
                      GradedOperator(J.phis[0].ring(), 2, 2, 2, 1),
                      GradedOperator::identity(J.phis[0].ring(), 2, 1, 1),
                      RingElement::one(parse_ring("QQ[h:trunc1]")),
                      RingElement::one(parse_ring("QQ[h:trunc1]"))};
  ExtensionResult res = verify_higher_extension(order1, J.phis[2], TensorOperator(J.phis[0].ring(), 2, 1));
  CHECK(res.report.passed("obstruction"));
  CHECK(res.report.passed("obstruction_matches_expansion"));
  CHECK_FALSE(res.report.passed("trace_minus"));
  CHECK(res.report.find("trace_minus")->detail == "phi_0 singular; inverse series undefined");

  // Extending tau by zero maps.
  Eybo tau = transposition_eybo(qq(), 2);
  DeformedEybo base = undeformed(tau, 1);
  ExtensionResult z = verify_higher_extension(base, TensorOperator(qq(), 2, 2), TensorOperator(qq(), 2, 1));
  CHECK(z.report.ok());
  REQUIRE(z.deformed);
  CHECK(verify_deformed(*z.deformed).ok());
}

TEST_CASE("Laurent models are exact deformations") {
  for (const LaurentModel* m : {&jones_model(), &alexander_model()}) {
    Report r = verify_deformed(m->def);
    CHECK(r.passed("ybe"));
    CHECK(r.passed("ybe_inverse"));
    CHECK(r.passed("inverse_right"));
    CHECK(r.passed("inverse_left"));
    CHECK(r.passed("mu_commutation"));
  }
  CHECK(verify_deformed(jones_model().def).ok());
}
