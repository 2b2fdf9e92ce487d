#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybco/graded.hpp"
#include "ybco/report.hpp"
#include "ybco/tensor.hpp"

namespace ybco {

// Enhanced Yang-Baxter operator (R, alpha, beta, mu) with R's inverse.
struct Eybo {
  TensorOperator R;
  TensorOperator R_inv;
  TensorOperator mu;
  RingElement alpha;
  RingElement beta;
};

enum class DeformMode { Truncated, Laurent };

// R~ = sum h^i phi_i, its inverse R~^-1 (h^-i phi^_i in Laurent mode) and
// mu~ = sum h^i mu_i, all stored by h-degree over a base ring without h.
// alpha and beta live in full_ring() = base + h.
struct DeformedEybo {
  Ring base;
  DeformMode mode = DeformMode::Truncated;
  int order = 0;
  std::string var = "h";
  GradedOperator R;
  GradedOperator R_inv;
  GradedOperator mu;
  RingElement alpha;
  RingElement beta;

  Ring full_ring() const;
  std::optional<int> max_degree() const;
  int d() const { return R.d(); }
  // Components phi_0..phi_order (Truncated mode).
  std::vector<TensorOperator> phis() const;
  std::vector<TensorOperator> phi_hats() const;
  std::vector<TensorOperator> mus() const;
};

// base + var, truncated at order or Laurent.
Ring deformation_ring(const Ring& base, DeformMode mode, int order, const std::string& var = "h");

// Lines: inverse (R R^-1 = R^-1 R = 1), mu_commutation
// ((mu(x)mu)R = R(mu(x)mu)), trace_plus / trace_minus
// (tr_2(R^{+-1}(mu(x)mu)) = alpha^{+-1} beta mu) and, when mu is invertible,
// the equivalent unit forms tr_2(R^{+-1}(1(x)mu)) = alpha^{+-1} beta 1.
Report verify_eybo(const Eybo& s);

// (R^-1, alpha^-1, beta, mu).
Eybo inverse_eybo(const Eybo& s);

// The same checks for a deformation, degree by degree (all degrees up to
// the truncation order, or exactly in Laurent mode), plus the YBE for R~ and
// R~^-1.
Report verify_deformed(const DeformedEybo& def);

// Order-0 deformation wrapping an undeformed EYBO.
DeformedEybo undeformed(const Eybo& s, int order = 0);

struct ExtensionResult {
  Report report;
  std::optional<DeformedEybo> deformed;
};

// Infinitesimal enhanced deformation R + h phi, mu + h mu1. Lines:
// cocycle (delta2(R, phi) = 0), mu-commutation, trace+ and trace- at
// h-degree 1, plus the base EYBO checks.
ExtensionResult verify_enhanced_2cocycle(const Eybo& base, const TensorOperator& phi,
                                         const TensorOperator& mu1);

// phi = delta1(R, f), mu1 = mu f - f mu.
DeformedEybo coboundary_enhancement(const Eybo& base, const TensorOperator& f);

// Coefficients of (sum h^i phi_i)^-1 modulo h^(N+1).
std::vector<TensorOperator> inverse_series(const std::vector<TensorOperator>& phis);

// Obstruction at degree n: sum over i+j+k = n with every index < n of
//   (phi_i(x)1)(1(x)phi_j)(phi_k(x)1) - (1(x)phi_i)(phi_j(x)1)(1(x)phi_k).
TensorOperator theta(const std::vector<TensorOperator>& phis, int n);

// Degree-n component of the YBE defect of sum h^i phi_i, computed by
// building the operator over Q[h]/(h^(n+1)) and grading; independent of theta.
TensorOperator ybe_expansion_component(const std::vector<TensorOperator>& phis, int n);

// Extends a truncated deformation of order n by (phi_{n+1}, mu_{n+1}).
// Lines: obstruction (delta2(phi_0, phi_{n+1}) + theta = 0), its agreement
// with the brute-force YBE expansion, and mu_commutation, trace_plus,
// trace_minus at degree n+1. trace_minus needs phi_0 invertible.
ExtensionResult verify_higher_extension(const DeformedEybo& def, const TensorOperator& phi_next,
                                        const TensorOperator& mu_next);

}  // namespace ybco
