#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "ybco/tensor.hpp"

namespace ybco {

// sum_k h^k parts[k] with operators over a base ring that does not contain
// h. Degrees may be negative (Laurent mode). When max_degree is set, every
// product drops components above it (the truncated ring h^(N+1) = 0).
class GradedOperator {
 public:
  GradedOperator(Ring base, int d, int m_out, int m_in, std::optional<int> max_degree);

  static GradedOperator identity(const Ring& base, int d, int m, std::optional<int> max_degree);
  static GradedOperator single(const TensorOperator& op, int degree, std::optional<int> max_degree);
  // parts[k] sits in degree first_degree + k * step.
  static GradedOperator from_list(const std::vector<TensorOperator>& parts, int first_degree,
                                  std::optional<int> max_degree, int step = 1);
  // Splits an operator over a ring containing var into its var-degrees.
  static GradedOperator split(const TensorOperator& op, std::string_view var,
                              std::optional<int> max_degree);

  const Ring& base() const { return base_; }
  int d() const { return d_; }
  int m_out() const { return m_out_; }
  int m_in() const { return m_in_; }
  std::optional<int> max_degree() const { return max_degree_; }
  const std::map<int, TensorOperator>& parts() const { return parts_; }

  TensorOperator part(int degree) const;
  void add_part(int degree, const TensorOperator& op);
  bool is_zero() const { return parts_.empty(); }

  // sum_k var^k parts[k] as one operator over full (which contains var).
  TensorOperator collapse(const Ring& full, std::string_view var) const;

  friend bool operator==(const GradedOperator& a, const GradedOperator& b);

 private:
  Ring base_;
  int d_, m_out_, m_in_;
  std::optional<int> max_degree_;
  std::map<int, TensorOperator> parts_;
};

using GradedScalar = std::map<int, RingElement>;

// Components of an element over a ring containing var.
GradedScalar split_scalar(const RingElement& full, std::string_view var);
RingElement collapse_scalar(const GradedScalar& s, const Ring& full, std::string_view var);

GradedOperator compose(const GradedOperator& f, const GradedOperator& g);
GradedOperator tensor(const GradedOperator& f, const GradedOperator& g);
GradedOperator pad(const GradedOperator& f, int m, int i);
GradedOperator partial_trace(const GradedOperator& f, const std::vector<int>& factors);
GradedOperator operator+(const GradedOperator& a, const GradedOperator& b);
GradedOperator operator-(const GradedOperator& a, const GradedOperator& b);
GradedOperator operator-(const GradedOperator& a);
GradedOperator scale(const GradedScalar& c, const GradedOperator& f);
GradedOperator apply_padded_left(const GradedOperator& f, int i, const GradedOperator& x);
GradedOperator tensor_power(const GradedOperator& f, int m);

}  // namespace ybco
