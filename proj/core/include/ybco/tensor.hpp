#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ybco/ring.hpp"

namespace ybco {

// Linear map V^(m_in) -> V^(m_out) for a free module V of rank d, stored
// densely. Row = output multi-index, column = input multi-index; the
// leftmost tensor factor is the most significant digit, so
//   f(e_j) = sum_i f[i][j] e_i.
// Endomorphisms (m_in == m_out == m) are the common case; cups and caps use
// the rectangular shapes.
class TensorOperator {
 public:
  TensorOperator(Ring ring, int d, int m);
  TensorOperator(Ring ring, int d, int m_out, int m_in);

  static TensorOperator identity(const Ring& ring, int d, int m);
  // Integer matrix given row by row; rows.size() == d^m_out.
  static TensorOperator from_rows(const Ring& ring, int d, int m_out, int m_in,
                                  const std::vector<std::vector<std::int64_t>>& rows);

  const Ring& ring() const { return ring_; }
  int d() const { return d_; }
  int m() const { return m_out_; }
  int m_out() const { return m_out_; }
  int m_in() const { return m_in_; }
  bool square() const { return m_out_ == m_in_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  RingElement entry(std::size_t row, std::size_t col) const;
  RingElement at(const std::vector<int>& out, const std::vector<int>& in) const;
  void set(std::size_t row, std::size_t col, const RingElement& v);
  void set(const std::vector<int>& out, const std::vector<int>& in, const RingElement& v);

  const Poly& raw(std::size_t row, std::size_t col) const { return data_[row * cols_ + col]; }
  Poly& raw_mut(std::size_t row, std::size_t col) { return data_[row * cols_ + col]; }

  bool is_zero() const;
  std::size_t nonzeros() const;
  friend bool operator==(const TensorOperator& a, const TensorOperator& b);

  // Header "d m ring" (or "d m_out:m_in ring" when rectangular), then one
  // canonical entry per line in lexicographic (row, column) order.
  std::string to_text() const;
  static TensorOperator from_text(std::string_view text);

  std::size_t flat_index(const std::vector<int>& digits) const;

 private:
  Ring ring_;
  int d_;
  int m_out_;
  int m_in_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Poly> data_;
};

std::size_t ipow(std::size_t base, int exp);

void require_same_shape(const TensorOperator& a, const TensorOperator& b, const char* what);

// f o g: g acts first.
TensorOperator compose(const TensorOperator& f, const TensorOperator& g);
TensorOperator tensor(const TensorOperator& f, const TensorOperator& g);
// 1^(i-1) (x) f (x) 1^(m - i - k + 1) for f on k factors; i is 1-based.
TensorOperator pad(const TensorOperator& f, int m, int i);
// Traces the listed (1-based) factors of a square operator.
TensorOperator partial_trace(const TensorOperator& f, const std::vector<int>& factors);
RingElement trace(const TensorOperator& f);
TensorOperator invert(const TensorOperator& f);
TensorOperator linear_combine(const std::vector<std::pair<RingElement, TensorOperator>>& terms);

TensorOperator operator+(const TensorOperator& a, const TensorOperator& b);
TensorOperator operator-(const TensorOperator& a, const TensorOperator& b);
TensorOperator operator-(const TensorOperator& a);
TensorOperator operator*(const RingElement& c, const TensorOperator& f);
TensorOperator transpose(const TensorOperator& f);

// Same as compose(pad(f, x.m_out(), i), x) and compose(x, pad(f, x.m_in(), i))
// but without building the padded operator; cost scales with nonzeros.
TensorOperator apply_padded_left(const TensorOperator& f, int i, const TensorOperator& x);
TensorOperator apply_padded_right(const TensorOperator& x, const TensorOperator& f, int i);

TensorOperator map_entries(const TensorOperator& f, const Ring& target,
                           const std::function<RingElement(const RingElement&)>& fn);
TensorOperator specialize(const TensorOperator& f, const std::map<std::string, RingElement>& assignment);
TensorOperator grade(const TensorOperator& f, std::string_view var, int degree);
TensorOperator embed(const TensorOperator& f, const Ring& target);

// Permutation operator e_x -> e_{p(x)} on V^m, p given on flat indices.
TensorOperator permutation_operator(const Ring& ring, int d, int m,
                                    const std::function<std::size_t(std::size_t)>& p);

// The flip e_i (x) e_j -> e_j (x) e_i.
TensorOperator transposition(const Ring& ring, int d);

}  // namespace ybco
