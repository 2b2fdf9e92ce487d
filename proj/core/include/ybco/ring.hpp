#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ybco/rational.hpp"

namespace ybco {

enum class Base { Integers, Rationals, GaussianRationals };

enum class VarKind {
  Polynomial,
  Laurent,
  Truncated,  // v^(order+1) = 0
  Cyclic,     // v^order = 1, a group-ring generator
};

struct Variable {
  std::string name;
  VarKind kind = VarKind::Polynomial;
  int order = 0;

  friend bool operator==(const Variable&, const Variable&) = default;
};

inline constexpr int kMaxVariables = 8;

class RingDescriptor {
 public:
  RingDescriptor(Base base, std::vector<Variable> vars);

  Base base() const { return base_; }
  const std::vector<Variable>& variables() const { return vars_; }
  int num_variables() const { return static_cast<int>(vars_.size()); }
  std::optional<int> index_of(std::string_view name) const;
  int require_index(std::string_view name) const;

  // True when the ring is Q or Q(i) with no variables.
  bool is_field() const;

  // Canonical id, e.g. "QQ(i)[A:laurent,B,h:trunc1]". Parsed by parse_ring.
  const std::string& id() const { return id_; }

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
    return a.id_ == b.id_;
  }

 private:
  Base base_;
  std::vector<Variable> vars_;
  std::string id_;
};

using Ring = std::shared_ptr<const RingDescriptor>;

Ring make_ring(Base base, std::vector<Variable> vars = {});
Ring parse_ring(std::string_view id);
Ring ring_with_variable(const Ring& r, Variable v);
Ring ring_without_variable(const Ring& r, std::string_view name);
Ring ring_with_base(const Ring& r, Base b);
bool same_ring(const Ring& a, const Ring& b);
void require_same_ring(const Ring& a, const Ring& b);

// Exponent vector, one slot per ring variable (unused slots stay zero).
using Monomial = std::array<std::int16_t, kMaxVariables>;

struct Term {
  Monomial exp{};
  Coeff coeff;
};

// Terms in canonical order, no zero coefficients, no repeated monomials.
using Poly = std::vector<Term>;

// Low-level arithmetic on raw term lists. All arguments must belong to the
// ring passed as the first parameter.
namespace poly {

bool monomial_less(const RingDescriptor& r, const Monomial& a, const Monomial& b);
void normalize(const RingDescriptor& r, Poly& p);
Poly add(const RingDescriptor& r, const Poly& a, const Poly& b);
Poly sub(const RingDescriptor& r, const Poly& a, const Poly& b);
Poly mul(const RingDescriptor& r, const Poly& a, const Poly& b);
Poly neg(const Poly& a);
void add_into(const RingDescriptor& r, Poly& acc, const Poly& a);
void add_product_into(const RingDescriptor& r, Poly& acc, const Poly& a, const Poly& b);
Poly constant(const Coeff& c);
bool is_one(const Poly& a);

}  // namespace poly

class RingElement {
 public:
  explicit RingElement(Ring ring);
  RingElement(Ring ring, Poly p);

  static RingElement zero(const Ring& r) { return RingElement(r); }
  static RingElement one(const Ring& r) { return constant(r, Coeff(1)); }
  static RingElement constant(const Ring& r, const Coeff& c);
  static RingElement integer(const Ring& r, std::int64_t n) { return constant(r, Coeff(n)); }
  static RingElement imaginary_unit(const Ring& r);
  static RingElement variable(const Ring& r, std::string_view name, int exponent = 1);

  const Ring& ring() const { return ring_; }
  const Poly& poly() const { return poly_; }

  bool is_zero() const { return poly_.empty(); }
  bool is_one() const { return poly::is_one(poly_); }
  // Element with no variables; its value is constant_term().
  bool is_constant() const;
  Coeff constant_term() const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& b);
  RingElement& operator-=(const RingElement& b);
  RingElement& operator*=(const RingElement& b);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend bool operator==(const RingElement& a, const RingElement& b);

  // Negative exponents go through invert_unit.
  RingElement pow(int e) const;

  std::string to_string() const;

 private:
  Ring ring_;
  Poly poly_;
};

std::ostream& operator<<(std::ostream& os, const RingElement& a);

enum class ArithOp { Add, Sub, Mul };
RingElement arithmetic(const RingElement& a, const RingElement& b, ArithOp op);

RingElement invert_unit(const RingElement& a);

// Substitutes the assigned variables. The result lives in the ring with
// those variables removed (base widened to Q(i) if a value needs it).
RingElement specialize(const RingElement& a, const std::map<std::string, RingElement>& assignment);

// Coefficient of var^degree, in the ring with var removed.
RingElement grade(const RingElement& a, std::string_view var, int degree);

// Smallest and largest exponent of var occurring in a (nullopt for 0).
std::optional<std::pair<int, int>> degree_range(const RingElement& a, std::string_view var);

// Maps a into target by variable name. Every variable of a must exist in
// target and the target base must contain the source base.
RingElement embed(const RingElement& a, const Ring& target);

// q with q*b == a, when b divides a exactly. Laurent and polynomial
// variables only on the divisor side; throws DomainError otherwise.
RingElement divide_exact(const RingElement& a, const RingElement& b);

RingElement parse_element(const Ring& r, std::string_view text);

}  // namespace ybco
