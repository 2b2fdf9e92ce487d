#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ybco/braid.hpp"
#include "ybco/eybo.hpp"

namespace ybco {

// Finite quandle on {0, ..., n-1} given by its operation table.
class Quandle {
 public:
  Quandle(int n, std::vector<int> table, std::string name = {});

  // "n" followed by n rows of n entries (whitespace separated); '#' starts
  // a comment.
  static Quandle parse(std::string_view text);
  // x*y = 2y - x mod n.
  static Quandle dihedral(int n);

  int size() const { return n_; }
  const std::string& name() const { return name_; }
  int op(int x, int y) const { return table_[static_cast<std::size_t>(x * n_ + y)]; }
  // The unique z with z*x = y.
  int solve(int x, int y) const { return inverse_[static_cast<std::size_t>(x * n_ + y)]; }

  // Throws DomainError naming the first violated axiom.
  void validate() const;
  std::string to_text() const;

 private:
  int n_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::string name_;
};

// Z_2[t]/(t^2+t+1) with x*y = tx + (1+t)y; element a + bt has index a + 2b,
// so 0, 1, t, 1+t are 0, 1, 2, 3.
Quandle alexander_quandle_F4();

// Values psi(x, y) in Z/group_order, stored as integers 0..group_order-1.
struct QuandleCocycle {
  int size = 0;
  int group_order = 2;
  std::vector<std::int64_t> values;

  std::int64_t value(int x, int y) const { return values[static_cast<std::size_t>(x * size + y)]; }
  void validate(const Quandle& q) const;
  // The 2-cocycle condition with psi read in Z rather than Z/group_order.
  bool integral(const Quandle& q) const;
};

// psi(a, b) = 1 for a != b with a, b in {0, 1, 1+t}, valued in Z_2.
QuandleCocycle chi_cocycle();
QuandleCocycle zero_cocycle(const Quandle& q, int group_order = 2);
// psi(x, y) = f(x) - f(x*y), a cocycle over Z.
QuandleCocycle quandle_coboundary(const Quandle& q, const std::vector<std::int64_t>& f, int group_order);

// Z[zeta] with zeta^group_order = 1, zeta written "z".
Ring quandle_ring(int group_order);

struct QuandleModel {
  Eybo base;
  std::optional<DeformedEybo> deformed;
};

// R(e_x (x) e_y) = e_y (x) e_{x*y} with alpha = beta = 1 and mu = 1. With a
// cocycle: phi(x (x) y) = psi(x, y) R(x (x) y), phi^(x (x) y) = -psi(z, x) R^-1(x (x) y)
// for z*x = y, and mu_1 = 0.
QuandleModel yb_from_quandle(const Quandle& q, const std::optional<QuandleCocycle>& psi);

// Tuples fixed by the braid's action; sigma_i sends (x, y) to (y, x*y).
std::vector<std::vector<int>> colorings(const BraidWord& b, const Quandle& q);

struct StateSums {
  std::size_t colorings = 0;
  RingElement classical;  // sum over colorings of zeta^(sum eps psi)
  RingElement quantum;    // |Col| + h sum eps psi, psi read as integers
};

StateSums state_sum_invariants(const BraidWord& b, const Quandle& q, const QuandleCocycle& psi);

}  // namespace ybco
