#include "ybco/models.hpp"

#include "ybco/errors.hpp"

namespace ybco {

Eybo transposition_eybo(const Ring& r, int d) {
  TensorOperator tau = transposition(r, d);
  RingElement one = RingElement::one(r);
  return {tau, tau, TensorOperator::identity(r, d, 1), one, one};
}

TauCocycle tau_cocycle(const RingElement& q) {
  const Ring& r = q.ring();
  TensorOperator phi(r, 2, 2);
  auto one = RingElement::one(r);
  // set({k, l}, {i, j}, c): coefficient of e_k e_l in phi(e_i e_j).
  phi.set({0, 1}, {0, 1}, one);
  phi.set({1, 1}, {0, 1}, one);
  phi.set({1, 0}, {0, 1}, q);
  phi.set({1, 0}, {1, 0}, -one);
  phi.set({1, 1}, {1, 0}, -one);
  phi.set({0, 1}, {1, 0}, q);
  return {phi, -partial_trace(phi, {2})};
}

DeformedEybo tau_deformed(const RingElement& q) {
  Eybo base = transposition_eybo(q.ring(), 2);
  TauCocycle c = tau_cocycle(q);
  ExtensionResult res = verify_enhanced_2cocycle(base, c.phi, c.mu1);
  if (!res.report.ok() || !res.deformed) {
    throw InternalError("tau deformation fails its checks:\n" + res.report.to_text());
  }
  return *res.deformed;
}

Ring tau_ring() { return make_ring(Base::Rationals, {{"q", VarKind::Polynomial, 0}}); }

TensorOperator random_operator(const Ring& r, int d, int m_out, int m_in, std::mt19937_64& rng,
                               int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  TensorOperator f(r, d, m_out, m_in);
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      int v = dist(rng);
      if (v != 0) f.set(i, j, RingElement::integer(r, v));
    }
  }
  return f;
}

}  // namespace ybco
