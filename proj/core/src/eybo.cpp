#include "ybco/eybo.hpp"

#include <string>

#include "ybco/errors.hpp"
#include "ybco/ybcoh.hpp"

namespace ybco {

namespace {

// (R(x)1)(1(x)R)(R(x)1) - (1(x)R)(R(x)1)(1(x)R) for a graded R.
GradedOperator graded_ybe_defect(const GradedOperator& R) {
  auto id3 = GradedOperator::identity(R.base(), R.d(), 3, R.max_degree());
  auto lhs = apply_padded_left(R, 1, apply_padded_left(R, 2, apply_padded_left(R, 1, id3)));
  auto rhs = apply_padded_left(R, 2, apply_padded_left(R, 1, apply_padded_left(R, 2, id3)));
  return lhs - rhs;
}

GradedOperator mu_commutation(const GradedOperator& R, const GradedOperator& mu) {
  auto mm = tensor(mu, mu);
  return compose(mm, R) - compose(R, mm);
}

GradedOperator trace_residual(const GradedOperator& R, const GradedOperator& mu,
                              const GradedScalar& coeff) {
  return partial_trace(compose(R, tensor(mu, mu)), {2}) - scale(coeff, mu);
}

void add_graded(Report& rep, const std::string& name, const GradedOperator& residual) {
  if (residual.is_zero()) {
    rep.add(name, true);
    return;
  }
  int k = residual.parts().begin()->first;
  rep.lines.push_back({name, false, false, "first nonzero degree " + std::to_string(k),
                       residual.parts().begin()->second});
}

void add_degree(Report& rep, const std::string& name, const GradedOperator& residual, int degree) {
  rep.add_residual(name, residual.part(degree));
}

std::string fresh_variable(const Ring& r) {
  std::string v = "h";
  while (r->index_of(v)) v += "_";
  return v;
}

// alpha, beta re-expressed over another deformation ring.
RingElement move_scalar(const RingElement& x, const std::string& var, const Ring& target) {
  return collapse_scalar(split_scalar(x, var), target, var);
}

}  // namespace

Ring deformation_ring(const Ring& base, DeformMode mode, int order, const std::string& var) {
  if (base->index_of(var)) throw DomainError("deformation variable already in base ring: " + var);
  if (mode == DeformMode::Truncated) {
    if (order < 0) throw DomainError("negative truncation order");
    return ring_with_variable(base, {var, VarKind::Truncated, order});
  }
  return ring_with_variable(base, {var, VarKind::Laurent, 0});
}

Ring DeformedEybo::full_ring() const { return deformation_ring(base, mode, order, var); }

std::optional<int> DeformedEybo::max_degree() const {
  if (mode == DeformMode::Truncated) return order;
  return std::nullopt;
}

std::vector<TensorOperator> DeformedEybo::phis() const {
  std::vector<TensorOperator> out;
  int top = mode == DeformMode::Truncated ? order
                                          : (R.is_zero() ? 0 : R.parts().rbegin()->first);
  for (int k = 0; k <= top; ++k) out.push_back(R.part(k));
  return out;
}

std::vector<TensorOperator> DeformedEybo::phi_hats() const {
  std::vector<TensorOperator> out;
  if (mode == DeformMode::Truncated) {
    for (int k = 0; k <= order; ++k) out.push_back(R_inv.part(k));
  } else {
    int low = R_inv.is_zero() ? 0 : R_inv.parts().begin()->first;
    for (int k = 0; k >= low; --k) out.push_back(R_inv.part(k));
  }
  return out;
}

std::vector<TensorOperator> DeformedEybo::mus() const {
  std::vector<TensorOperator> out;
  int low = mu.is_zero() ? 0 : std::min(0, mu.parts().begin()->first);
  int top = mode == DeformMode::Truncated ? order
                                          : (mu.is_zero() ? 0 : mu.parts().rbegin()->first);
  for (int k = low; k <= top; ++k) out.push_back(mu.part(k));
  return out;
}

Report verify_eybo(const Eybo& s) {
  Report rep;
  const Ring& r = s.R.ring();
  auto id2 = TensorOperator::identity(r, s.R.d(), 2);
  rep.add("inverse", compose(s.R, s.R_inv) == id2 && compose(s.R_inv, s.R) == id2);
  auto mm = tensor(s.mu, s.mu);
  rep.add_residual("mu_commutation", compose(mm, s.R) - compose(s.R, mm));
  RingElement ab = s.alpha * s.beta;
  RingElement aib = invert_unit(s.alpha) * s.beta;
  rep.add_residual("trace_plus", partial_trace(compose(s.R, mm), {2}) - ab * s.mu);
  rep.add_residual("trace_minus", partial_trace(compose(s.R_inv, mm), {2}) - aib * s.mu);

  std::optional<TensorOperator> mu_inv;
  try {
    mu_inv = invert(s.mu);
  } catch (const SingularError&) {
  } catch (const NotAField&) {
  }
  if (mu_inv) {
    auto id1 = TensorOperator::identity(r, s.R.d(), 1);
    auto one_mu = tensor(id1, s.mu);
    auto up = partial_trace(compose(s.R, one_mu), {2}) - ab * id1;
    auto down = partial_trace(compose(s.R_inv, one_mu), {2}) - aib * id1;
    rep.add_residual("trace_plus_unit_form", up);
    rep.add_residual("trace_minus_unit_form", down);
    rep.add("trace_forms_agree", up.is_zero() == rep.passed("trace_plus") &&
                                     down.is_zero() == rep.passed("trace_minus"));
  }
  return rep;
}

Eybo inverse_eybo(const Eybo& s) {
  return {s.R_inv, s.R, s.mu, invert_unit(s.alpha), s.beta};
}

Report verify_deformed(const DeformedEybo& def) {
  Report rep;
  auto N = def.max_degree();
  auto id2 = GradedOperator::identity(def.base, def.d(), 2, N);
  add_graded(rep, "ybe", graded_ybe_defect(def.R));
  add_graded(rep, "ybe_inverse", graded_ybe_defect(def.R_inv));
  add_graded(rep, "inverse_right", compose(def.R, def.R_inv) - id2);
  add_graded(rep, "inverse_left", compose(def.R_inv, def.R) - id2);
  add_graded(rep, "mu_commutation", mu_commutation(def.R, def.mu));
  auto ab = split_scalar(def.alpha * def.beta, def.var);
  auto aib = split_scalar(invert_unit(def.alpha) * def.beta, def.var);
  add_graded(rep, "trace_plus", trace_residual(def.R, def.mu, ab));
  add_graded(rep, "trace_minus", trace_residual(def.R_inv, def.mu, aib));
  return rep;
}

DeformedEybo undeformed(const Eybo& s, int order) {
  Ring base = s.R.ring();
  std::string var = fresh_variable(base);
  Ring full = deformation_ring(base, DeformMode::Truncated, order, var);
  return DeformedEybo{base,
                      DeformMode::Truncated,
                      order,
                      var,
                      GradedOperator::single(s.R, 0, order),
                      GradedOperator::single(s.R_inv, 0, order),
                      GradedOperator::single(s.mu, 0, order),
                      embed(s.alpha, full),
                      embed(s.beta, full)};
}

ExtensionResult verify_enhanced_2cocycle(const Eybo& base, const TensorOperator& phi,
                                         const TensorOperator& mu1) {
  ExtensionResult res;
  res.report.append(verify_eybo(base), "base_");
  res.report.add_residual("cocycle", delta2(base.R, phi));

  DeformedEybo def = undeformed(base, 1);
  def.R.add_part(1, phi);
  def.R_inv.add_part(1, -compose(base.R_inv, compose(phi, base.R_inv)));
  def.mu.add_part(1, mu1);
  auto ab = split_scalar(def.alpha * def.beta, def.var);
  auto aib = split_scalar(invert_unit(def.alpha) * def.beta, def.var);
  add_degree(res.report, "mu_commutation", mu_commutation(def.R, def.mu), 1);
  add_degree(res.report, "trace_plus", trace_residual(def.R, def.mu, ab), 1);
  add_degree(res.report, "trace_minus", trace_residual(def.R_inv, def.mu, aib), 1);
  res.deformed = std::move(def);
  return res;
}

DeformedEybo coboundary_enhancement(const Eybo& base, const TensorOperator& f) {
  DeformedEybo def = undeformed(base, 1);
  TensorOperator phi = delta1(base.R, f);
  def.R.add_part(1, phi);
  def.R_inv.add_part(1, -compose(base.R_inv, compose(phi, base.R_inv)));
  def.mu.add_part(1, compose(base.mu, f) - compose(f, base.mu));
  return def;
}

std::vector<TensorOperator> inverse_series(const std::vector<TensorOperator>& phis) {
  if (phis.empty()) throw ShapeError("inverse_series: empty series");
  TensorOperator inv0 = invert(phis[0]);
  std::vector<TensorOperator> hats{inv0};
  for (std::size_t n = 1; n < phis.size(); ++n) {
    TensorOperator acc(inv0.ring(), inv0.d(), inv0.m_out(), inv0.m_in());
    for (std::size_t k = 1; k <= n; ++k) acc = acc + compose(phis[k], hats[n - k]);
    hats.push_back(-compose(inv0, acc));
  }
  // Both products must be 1 modulo h^(N+1).
  for (std::size_t n = 0; n < phis.size(); ++n) {
    TensorOperator right(inv0.ring(), inv0.d(), inv0.m_out(), inv0.m_in());
    TensorOperator left = right;
    for (std::size_t k = 0; k <= n; ++k) {
      right = right + compose(phis[k], hats[n - k]);
      left = left + compose(hats[k], phis[n - k]);
    }
    if (n == 0) {
      auto id = TensorOperator::identity(inv0.ring(), inv0.d(), inv0.m_in());
      right = right - id;
      left = left - id;
    }
    if (!right.is_zero() || !left.is_zero()) throw InternalError("inverse_series: check failed");
  }
  return hats;
}

TensorOperator theta(const std::vector<TensorOperator>& phis, int n) {
  if (phis.empty()) throw ShapeError("theta: empty series");
  const auto& p0 = phis[0];
  TensorOperator out(p0.ring(), p0.d(), 3);
  auto id3 = TensorOperator::identity(p0.ring(), p0.d(), 3);
  int avail = static_cast<int>(phis.size());
  for (int i = 0; i < n && i < avail; ++i) {
    for (int j = 0; j < n && i + j <= n && j < avail; ++j) {
      int k = n - i - j;
      if (k >= n || k >= avail) continue;
      // Rightmost factor acts first.
      auto a = apply_padded_left(phis[i], 1,
                                 apply_padded_left(phis[j], 2, apply_padded_left(phis[k], 1, id3)));
      auto b = apply_padded_left(phis[i], 2,
                                 apply_padded_left(phis[j], 1, apply_padded_left(phis[k], 2, id3)));
      out = out + a - b;
    }
  }
  return out;
}

TensorOperator ybe_expansion_component(const std::vector<TensorOperator>& phis, int n) {
  if (phis.empty()) throw ShapeError("ybe_expansion_component: empty series");
  const Ring& base = phis[0].ring();
  std::string var = fresh_variable(base);
  Ring full = ring_with_variable(base, {var, VarKind::Truncated, n});
  TensorOperator R(full, phis[0].d(), 2);
  for (int k = 0; k <= n && k < static_cast<int>(phis.size()); ++k) {
    R = R + RingElement::variable(full, var, k) * embed(phis[k], full);
  }
  return grade(ybe_defect(R), var, n);
}

ExtensionResult verify_higher_extension(const DeformedEybo& def, const TensorOperator& phi_next,
                                        const TensorOperator& mu_next) {
  if (def.mode != DeformMode::Truncated) {
    throw DomainError("higher extension needs a truncated deformation");
  }
  ExtensionResult res;
  int n1 = def.order + 1;
  auto phis = def.phis();
  phis.push_back(phi_next);

  TensorOperator obstruction = delta2(phis[0], phi_next) + theta(phis, n1);
  res.report.add_residual("obstruction", obstruction);
  res.report.add("obstruction_matches_expansion", obstruction == ybe_expansion_component(phis, n1));

  auto mus = def.mus();
  mus.push_back(mu_next);
  Ring full = deformation_ring(def.base, DeformMode::Truncated, n1, def.var);
  DeformedEybo next{def.base,
                    DeformMode::Truncated,
                    n1,
                    def.var,
                    GradedOperator::from_list(phis, 0, n1),
                    GradedOperator(def.base, def.d(), 2, 2, n1),
                    GradedOperator::from_list(mus, 0, n1),
                    move_scalar(def.alpha, def.var, full),
                    move_scalar(def.beta, def.var, full)};

  add_degree(res.report, "mu_commutation", mu_commutation(next.R, next.mu), n1);
  auto ab = split_scalar(next.alpha * next.beta, next.var);
  add_degree(res.report, "trace_plus", trace_residual(next.R, next.mu, ab), n1);

  std::optional<std::vector<TensorOperator>> hats;
  try {
    hats = inverse_series(phis);
  } catch (const SingularError&) {
  } catch (const NotAField&) {
  }
  if (!hats) {
    res.report.add("trace_minus", false, "phi_0 singular; inverse series undefined");
    res.deformed = std::move(next);
    return res;
  }
  next.R_inv = GradedOperator::from_list(*hats, 0, n1);
  auto aib = split_scalar(invert_unit(next.alpha) * next.beta, next.var);
  add_degree(res.report, "trace_minus", trace_residual(next.R_inv, next.mu, aib), n1);
  res.deformed = std::move(next);
  return res;
}

}  // namespace ybco
