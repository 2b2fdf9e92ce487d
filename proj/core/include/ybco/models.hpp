#pragma once

#include <random>

#include "ybco/eybo.hpp"

namespace ybco {

// (tau, 1, 1, 1) on a free module of rank d.
Eybo transposition_eybo(const Ring& r, int d);

// Deformation of tau on rank 2 (basis e_0, e_1):
//   phi(e0 e1) = e0 e1 + e1 e1 + q e1 e0,  phi(e1 e0) = -e1 e0 - e1 e1 + q e0 e1,
// zero on e0 e0 and e1 e1, with mu_1 = -tr_2(phi).
struct TauCocycle {
  TensorOperator phi;
  TensorOperator mu1;
};
TauCocycle tau_cocycle(const RingElement& q);

// The order-1 deformation (tau + h phi, 1, 1, 1 + h mu_1) over q's ring;
// throws InternalError if any enhancement check fails.
DeformedEybo tau_deformed(const RingElement& q);

// Q[q], the ring of the symbolic parameter.
Ring tau_ring();

// Operator V^m_in -> V^m_out with integer entries uniform in [-bound, bound].
TensorOperator random_operator(const Ring& r, int d, int m_out, int m_in, std::mt19937_64& rng,
                               int bound = 3);

}  // namespace ybco
