#pragma once

#include <optional>
#include <vector>

#include "ybco/tensor.hpp"

namespace ybco {

// An n-cochain is an endomorphism of V^n; the operators below take and
// return plain TensorOperators whose arity is the cochain degree.

// (R(x)1)(1(x)R)(R(x)1) - (1(x)R)(R(x)1)(1(x)R).
TensorOperator ybe_defect(const TensorOperator& R);

// R(f(x)1) + R(1(x)f) - (f(x)1)R - (1(x)f)R.
TensorOperator delta1(const TensorOperator& R, const TensorOperator& f);

// Linearized YBE at phi: the six-term sum with s1 = R(x)1, s2 = 1(x)R,
//   s1 s2 (phi(x)1) + s1 (1(x)phi) s1 + (phi(x)1) s2 s1
//   - s2 s1 (1(x)phi) - s2 (phi(x)1) s2 - (1(x)phi) s1 s2.
TensorOperator delta2(const TensorOperator& R, const TensorOperator& phi);

// Partial differential d_i (1 <= i <= n+1) of an n-cochain, on n+1 strands:
//   s_{n+1-i}...s_1 (1(x)phi) s_1...s_{i-1} - s_{n+2-i}...s_n (phi(x)1) s_n...s_i
// where s_j = pad(R, n+1, j) and empty products are the identity.
TensorOperator partial_diff(const TensorOperator& R, const TensorOperator& phi, int i);

// sum_{i=1}^{n+1} (-1)^i d_i. In degrees 1 and 2 this equals -delta1 and
// delta2 respectively.
TensorOperator full_diff(const TensorOperator& R, const TensorOperator& phi);

// Some f with delta1(R, f) == phi, or nullopt when phi is not a
// coboundary. Field coefficients only.
std::optional<TensorOperator> cobound_solve(const TensorOperator& R, const TensorOperator& phi);

// dim ker d^n - rank d^(n-1), over a field.
int cohomology_dimension(const TensorOperator& R, int n);

// Rank of a list of vectors (each an operator flattened) over a field.
int rank_over_field(const std::vector<TensorOperator>& vectors);

}  // namespace ybco
