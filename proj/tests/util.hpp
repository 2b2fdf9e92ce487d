#pragma once

#include <random>
#include <string>
#include <vector>

#include "ybco/ring.hpp"
#include "ybco/tensor.hpp"

namespace ybco::testing {

inline RingElement el(const Ring& r, const std::string& text) { return parse_element(r, text); }

// Sum of up to `terms` monomials with small coefficients; exponents follow
// each variable's kind.
inline RingElement random_element(const Ring& r, std::mt19937_64& rng, int terms = 4) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> count(0, terms);
  RingElement out(r);
  int n = count(rng);
  for (int t = 0; t < n; ++t) {
    Coeff c = r->base() == Base::Integers ? Coeff(coeff(rng)) : Coeff(Rational(coeff(rng), den(rng)));
    if (r->base() == Base::GaussianRationals) c = Coeff(c.re, Rational(coeff(rng), den(rng)));
    RingElement term = RingElement::constant(r, c);
    for (const auto& v : r->variables()) {
      int lo = 0, hi = 3;
      if (v.kind == VarKind::Laurent) lo = -3;
      if (v.kind == VarKind::Truncated) hi = v.order + 1;
      if (v.kind == VarKind::Cyclic) hi = v.order - 1;
      std::uniform_int_distribution<int> e(lo, hi);
      term *= RingElement::variable(r, v.name, e(rng));
    }
    out += term;
  }
  return out;
}

}  // namespace ybco::testing
