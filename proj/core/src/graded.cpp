#include "ybco/graded.hpp"

#include <algorithm>

#include "ybco/errors.hpp"

namespace ybco {

namespace {

std::optional<int> min_bound(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

void require_same_grading(const GradedOperator& a, const GradedOperator& b) {
  if (a.d() != b.d() || a.m_out() != b.m_out() || a.m_in() != b.m_in()) {
    throw ShapeError("graded: shape mismatch");
  }
  require_same_ring(a.base(), b.base());
}

}  // namespace

GradedOperator::GradedOperator(Ring base, int d, int m_out, int m_in, std::optional<int> max_degree)
    : base_(std::move(base)), d_(d), m_out_(m_out), m_in_(m_in), max_degree_(max_degree) {}

GradedOperator GradedOperator::identity(const Ring& base, int d, int m, std::optional<int> max_degree) {
  return single(TensorOperator::identity(base, d, m), 0, max_degree);
}

GradedOperator GradedOperator::single(const TensorOperator& op, int degree, std::optional<int> max_degree) {
  GradedOperator g(op.ring(), op.d(), op.m_out(), op.m_in(), max_degree);
  g.add_part(degree, op);
  return g;
}

GradedOperator GradedOperator::from_list(const std::vector<TensorOperator>& parts, int first_degree,
                                         std::optional<int> max_degree, int step) {
  if (parts.empty()) throw ShapeError("graded: empty component list");
  const auto& f = parts.front();
  GradedOperator g(f.ring(), f.d(), f.m_out(), f.m_in(), max_degree);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    g.add_part(first_degree + static_cast<int>(k) * step, parts[k]);
  }
  return g;
}

GradedOperator GradedOperator::split(const TensorOperator& op, std::string_view var,
                                     std::optional<int> max_degree) {
  Ring base = ring_without_variable(op.ring(), var);
  GradedOperator g(base, op.d(), op.m_out(), op.m_in(), max_degree);
  std::optional<std::pair<int, int>> range;
  for (std::size_t i = 0; i < op.rows(); ++i) {
    for (std::size_t j = 0; j < op.cols(); ++j) {
      auto r = degree_range(op.entry(i, j), var);
      if (!r) continue;
      if (!range) {
        range = r;
      } else {
        range->first = std::min(range->first, r->first);
        range->second = std::max(range->second, r->second);
      }
    }
  }
  if (!range) return g;
  for (int k = range->first; k <= range->second; ++k) g.add_part(k, grade(op, var, k));
  return g;
}

TensorOperator GradedOperator::part(int degree) const {
  auto it = parts_.find(degree);
  if (it != parts_.end()) return it->second;
  return TensorOperator(base_, d_, m_out_, m_in_);
}

void GradedOperator::add_part(int degree, const TensorOperator& op) {
  if (op.d() != d_ || op.m_out() != m_out_ || op.m_in() != m_in_) {
    throw ShapeError("graded: component shape mismatch");
  }
  require_same_ring(base_, op.ring());
  if (max_degree_ && degree > *max_degree_) return;
  auto it = parts_.find(degree);
  if (it == parts_.end()) {
    if (!op.is_zero()) parts_.emplace(degree, op);
    return;
  }
  it->second = it->second + op;
  if (it->second.is_zero()) parts_.erase(it);
}

TensorOperator GradedOperator::collapse(const Ring& full, std::string_view var) const {
  TensorOperator out(full, d_, m_out_, m_in_);
  for (const auto& [k, op] : parts_) {
    out = out + RingElement::variable(full, var, k) * embed(op, full);
  }
  return out;
}

bool operator==(const GradedOperator& a, const GradedOperator& b) {
  if (a.d_ != b.d_ || a.m_out_ != b.m_out_ || a.m_in_ != b.m_in_) return false;
  if (a.parts_.size() != b.parts_.size()) return false;
  for (const auto& [k, op] : a.parts_) {
    auto it = b.parts_.find(k);
    if (it == b.parts_.end() || !(it->second == op)) return false;
  }
  return true;
}

GradedScalar split_scalar(const RingElement& full, std::string_view var) {
  GradedScalar out;
  auto range = degree_range(full, var);
  if (!range) return out;
  for (int k = range->first; k <= range->second; ++k) {
    RingElement g = grade(full, var, k);
    if (!g.is_zero()) out.emplace(k, g);
  }
  return out;
}

RingElement collapse_scalar(const GradedScalar& s, const Ring& full, std::string_view var) {
  RingElement out(full);
  for (const auto& [k, c] : s) out += RingElement::variable(full, var, k) * embed(c, full);
  return out;
}

GradedOperator compose(const GradedOperator& f, const GradedOperator& g) {
  GradedOperator out(f.base(), f.d(), f.m_out(), g.m_in(), min_bound(f.max_degree(), g.max_degree()));
  for (const auto& [a, fa] : f.parts()) {
    for (const auto& [b, gb] : g.parts()) {
      if (out.max_degree() && a + b > *out.max_degree()) continue;
      out.add_part(a + b, compose(fa, gb));
    }
  }
  return out;
}

GradedOperator tensor(const GradedOperator& f, const GradedOperator& g) {
  GradedOperator out(f.base(), f.d(), f.m_out() + g.m_out(), f.m_in() + g.m_in(),
                     min_bound(f.max_degree(), g.max_degree()));
  for (const auto& [a, fa] : f.parts()) {
    for (const auto& [b, gb] : g.parts()) {
      if (out.max_degree() && a + b > *out.max_degree()) continue;
      out.add_part(a + b, tensor(fa, gb));
    }
  }
  return out;
}

GradedOperator pad(const GradedOperator& f, int m, int i) {
  GradedOperator out(f.base(), f.d(), m - f.m_in() + f.m_out(), m, f.max_degree());
  for (const auto& [k, op] : f.parts()) out.add_part(k, pad(op, m, i));
  return out;
}

GradedOperator partial_trace(const GradedOperator& f, const std::vector<int>& factors) {
  int remaining = f.m_out() - static_cast<int>(factors.size());
  GradedOperator out(f.base(), f.d(), remaining, remaining, f.max_degree());
  for (const auto& [k, op] : f.parts()) out.add_part(k, partial_trace(op, factors));
  return out;
}

GradedOperator operator+(const GradedOperator& a, const GradedOperator& b) {
  require_same_grading(a, b);
  GradedOperator out(a.base(), a.d(), a.m_out(), a.m_in(), min_bound(a.max_degree(), b.max_degree()));
  for (const auto& [k, op] : a.parts()) out.add_part(k, op);
  for (const auto& [k, op] : b.parts()) out.add_part(k, op);
  return out;
}

GradedOperator operator-(const GradedOperator& a) {
  GradedOperator out(a.base(), a.d(), a.m_out(), a.m_in(), a.max_degree());
  for (const auto& [k, op] : a.parts()) out.add_part(k, -op);
  return out;
}

GradedOperator operator-(const GradedOperator& a, const GradedOperator& b) { return a + (-b); }

GradedOperator scale(const GradedScalar& c, const GradedOperator& f) {
  GradedOperator out(f.base(), f.d(), f.m_out(), f.m_in(), f.max_degree());
  for (const auto& [a, ca] : c) {
    RingElement s = embed(ca, f.base());
    for (const auto& [b, op] : f.parts()) out.add_part(a + b, s * op);
  }
  return out;
}

GradedOperator apply_padded_left(const GradedOperator& f, int i, const GradedOperator& x) {
  GradedOperator out(x.base(), x.d(), x.m_out() - f.m_in() + f.m_out(), x.m_in(),
                     min_bound(f.max_degree(), x.max_degree()));
  for (const auto& [a, fa] : f.parts()) {
    for (const auto& [b, xb] : x.parts()) {
      if (out.max_degree() && a + b > *out.max_degree()) continue;
      out.add_part(a + b, apply_padded_left(fa, i, xb));
    }
  }
  return out;
}

GradedOperator tensor_power(const GradedOperator& f, int m) {
  if (m < 0) throw ShapeError("graded: negative tensor power");
  GradedOperator out = GradedOperator::identity(f.base(), f.d(), 0, f.max_degree());
  for (int k = 0; k < m; ++k) out = tensor(out, f);
  return out;
}

}  // namespace ybco
