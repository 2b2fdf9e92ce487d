#pragma once

#include <string>
#include <vector>

#include "ybco/braid.hpp"
#include "ybco/eybo.hpp"

namespace ybco {

// Exact Laurent deformation on V = Q^2 over Q[h, h^-1]. R = sum h^i phi_i
// (i = 0, 1, 2) and R^-1 = sum h^-i phi^_i.
struct LaurentModel {
  std::string name;
  DeformedEybo def;
  std::vector<TensorOperator> phis;
  std::vector<TensorOperator> phi_hats;
  TensorOperator R_full;
  TensorOperator R_inv_full;
  TensorOperator mu_full;
};

// Q[h:laurent].
Ring laurent_ring();

// R = [1 0 0 0; 0 0 h 0; 0 h 1-h^2 0; 0 0 0 1], R^-1 its inverse,
// mu~ = h mu = diag(1, 0) + h^2 diag(0, 1), alpha = h^-1, beta = h.
// Construction asserts exact YBE, inverse, the singular phi_0 and
// delta2(phi_0, phi_1) = 0.
const LaurentModel& jones_model();

// R = [1 0 0 0; 0 0 h 0; 0 h 1-h^2 0; 0 0 0 -h^2], mu = h diag(1, -1).
// alpha and beta are 1 (the model is only used through a partial trace).
const LaurentModel& alexander_model();

// h^(m+ - m- - n) tr(Psi(b) mu~^(x)n), which should be (h + h^-1) J(K).
RingElement jones_invariant(const BraidWord& b);

struct AlexanderResult {
  TensorOperator op;  // h^(-m+ + m- + m - 1) tr_{2..m}(Psi(b)(1 (x) mu^(x)(m-1)))
  bool is_scalar = false;
  RingElement scalar;
};

// Needs m >= 2 strands.
AlexanderResult alexander_invariant(const BraidWord& b);

// Jones polynomial from the Kauffman state sum of the closed braid,
// (-A^3)^-w <D>, with A^e mapped to (-h)^(-e/2) (t = h^2, t^(1/2) = -h).
RingElement oracle_jones(const BraidWord& b, int max_crossings = 12);

// Conway polynomial by the descending-diagram skein recursion on the
// closed braid, at z = h - h^-1.
RingElement oracle_alexander(const BraidWord& b, int max_crossings = 12);

// Shifts so the lowest h-power is h^0 and makes its coefficient positive.
RingElement normalize_up_to_units(const RingElement& x, const std::string& var = "h");
bool equal_up_to_units(const RingElement& a, const RingElement& b, const std::string& var = "h");

// Substitutes var -> var^-1 (var must be Laurent).
RingElement invert_variable(const RingElement& x, const std::string& var = "h");

// An element of Q[h:laurent] written in t with h = -t^(1/2), e.g.
// "-t^(1/2) - t^(5/2)".
std::string jones_t_form(const RingElement& x);
// Same with h = root_sign * t^(1/2).
std::string t_form(const RingElement& x, int root_sign);

}  // namespace ybco
