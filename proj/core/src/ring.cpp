#include "ybco/ring.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "ybco/errors.hpp"

namespace ybco {

namespace {

bool valid_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string base_name(Base b) {
  switch (b) {
    case Base::Integers:
      return "ZZ";
    case Base::Rationals:
      return "QQ";
    case Base::GaussianRationals:
      return "QQ(i)";
  }
  return "?";
}

int base_rank(Base b) {
  switch (b) {
    case Base::Integers:
      return 0;
    case Base::Rationals:
      return 1;
    case Base::GaussianRationals:
      return 2;
  }
  return 0;
}

Base base_join(Base a, Base b) { return base_rank(a) >= base_rank(b) ? a : b; }

// Canonical ordering key of one exponent: 0, 1, -1, 2, -2, ...
int exp_key(int e) { return e > 0 ? 2 * e - 1 : -2 * e; }

constexpr int kExpLimit = 30000;

// Applies truncation and cyclic relations; false means the term vanishes.
bool reduce_monomial(const RingDescriptor& r, Monomial& m) {
  const auto& vars = r.variables();
  for (std::size_t v = 0; v < vars.size(); ++v) {
    int e = m[v];
    switch (vars[v].kind) {
      case VarKind::Polynomial:
      case VarKind::Laurent:
        break;
      case VarKind::Truncated:
        if (e > vars[v].order) return false;
        break;
      case VarKind::Cyclic: {
        int n = vars[v].order;
        m[v] = static_cast<std::int16_t>(((e % n) + n) % n);
        break;
      }
    }
  }
  return true;
}

Monomial add_monomials(const Monomial& a, const Monomial& b, int nvars) {
  Monomial out{};
  for (int v = 0; v < nvars; ++v) {
    int e = a[v] + b[v];
    if (e > kExpLimit || e < -kExpLimit) throw Overflow("ring: exponent out of range");
    out[v] = static_cast<std::int16_t>(e);
  }
  return out;
}

void check_coeff_in_base(Base b, const Coeff& c) {
  if (b != Base::GaussianRationals && !c.im.is_zero()) {
    throw DomainError("ring: imaginary coefficient in a real ring");
  }
  if (b == Base::Integers && !(c.re.is_integer() && c.im.is_integer())) {
    throw DomainError("ring: non-integer coefficient in ZZ ring: " + c.re.to_string());
  }
}

}  // namespace

RingDescriptor::RingDescriptor(Base base, std::vector<Variable> vars)
    : base_(base), vars_(std::move(vars)) {
  if (vars_.size() > static_cast<std::size_t>(kMaxVariables)) {
    throw DomainError("ring: at most " + std::to_string(kMaxVariables) + " variables supported");
  }
  id_ = base_name(base_);
  if (!vars_.empty()) id_ += "[";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto& v = vars_[i];
    if (!valid_identifier(v.name) || v.name == "i") {
      throw DomainError("ring: invalid variable name '" + v.name + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (vars_[j].name == v.name) throw DomainError("ring: duplicate variable '" + v.name + "'");
    }
    if (i > 0) id_ += ",";
    id_ += v.name;
    switch (v.kind) {
      case VarKind::Polynomial:
        break;
      case VarKind::Laurent:
        id_ += ":laurent";
        break;
      case VarKind::Truncated:
        if (v.order < 0) throw DomainError("ring: truncation order must be >= 0");
        id_ += ":trunc" + std::to_string(v.order);
        break;
      case VarKind::Cyclic:
        if (v.order < 1) throw DomainError("ring: cyclic order must be >= 1");
        id_ += ":cyclic" + std::to_string(v.order);
        break;
    }
  }
  if (!vars_.empty()) id_ += "]";
}

std::optional<int> RingDescriptor::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

int RingDescriptor::require_index(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw DomainError("ring: no variable '" + std::string(name) + "' in " + id_);
  return *idx;
}

bool RingDescriptor::is_field() const { return base_ != Base::Integers && vars_.empty(); }

Ring make_ring(Base base, std::vector<Variable> vars) {
  return std::make_shared<const RingDescriptor>(base, std::move(vars));
}

Ring parse_ring(std::string_view id) {
  auto fail = [&]() { throw ParseError("ring: bad ring id '" + std::string(id) + "'"); };
  Base base;
  std::string_view rest;
  if (id.substr(0, 5) == "QQ(i)") {
    base = Base::GaussianRationals;
    rest = id.substr(5);
  } else if (id.substr(0, 2) == "QQ") {
    base = Base::Rationals;
    rest = id.substr(2);
  } else if (id.substr(0, 2) == "ZZ") {
    base = Base::Integers;
    rest = id.substr(2);
  } else {
    fail();
  }
  std::vector<Variable> vars;
  if (!rest.empty()) {
    if (rest.front() != '[' || rest.back() != ']') fail();
    rest = rest.substr(1, rest.size() - 2);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
      Variable v;
      auto colon = item.find(':');
      v.name = std::string(item.substr(0, colon));
      if (colon != std::string_view::npos) {
        std::string_view kind = item.substr(colon + 1);
        auto number = [&](std::string_view s) {
          if (s.empty()) fail();
          for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) fail();
          }
          return std::stoi(std::string(s));
        };
        if (kind == "laurent") {
          v.kind = VarKind::Laurent;
        } else if (kind.substr(0, 5) == "trunc") {
          v.kind = VarKind::Truncated;
          v.order = number(kind.substr(5));
        } else if (kind.substr(0, 6) == "cyclic") {
          v.kind = VarKind::Cyclic;
          v.order = number(kind.substr(6));
        } else {
          fail();
        }
      }
      vars.push_back(v);
    }
  }
  return make_ring(base, std::move(vars));
}

Ring ring_with_variable(const Ring& r, Variable v) {
  auto vars = r->variables();
  vars.push_back(std::move(v));
  return make_ring(r->base(), std::move(vars));
}

Ring ring_without_variable(const Ring& r, std::string_view name) {
  auto vars = r->variables();
  std::erase_if(vars, [&](const Variable& v) { return v.name == name; });
  return make_ring(r->base(), std::move(vars));
}

Ring ring_with_base(const Ring& r, Base b) { return make_ring(b, r->variables()); }

bool same_ring(const Ring& a, const Ring& b) { return a == b || *a == *b; }

void require_same_ring(const Ring& a, const Ring& b) {
  if (!same_ring(a, b)) {
    throw RingMismatch("ring: ring mismatch between " + a->id() + " and " + b->id());
  }
}

// ---------------------------------------------------------------------------

namespace poly {

bool monomial_less(const RingDescriptor& r, const Monomial& a, const Monomial& b) {
  int n = r.num_variables();
  for (int v = 0; v < n; ++v) {
    if (a[v] != b[v]) return exp_key(a[v]) < exp_key(b[v]);
  }
  return false;
}

void normalize(const RingDescriptor& r, Poly& p) {
  std::sort(p.begin(), p.end(),
            [&](const Term& x, const Term& y) { return monomial_less(r, x.exp, y.exp); });
  std::size_t out = 0;
  for (std::size_t i = 0; i < p.size();) {
    Term t = p[i];
    std::size_t j = i + 1;
    while (j < p.size() && p[j].exp == t.exp) {
      t.coeff = t.coeff + p[j].coeff;
      ++j;
    }
    if (!t.coeff.is_zero()) p[out++] = t;
    i = j;
  }
  p.resize(out);
}

namespace {

template <bool Subtract>
Poly merge(const RingDescriptor& r, const Poly& a, const Poly& b) {
  Poly out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && monomial_less(r, a[i].exp, b[j].exp))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || monomial_less(r, b[j].exp, a[i].exp)) {
      Term t = b[j++];
      if constexpr (Subtract) t.coeff = -t.coeff;
      out.push_back(t);
    } else {
      Coeff c = Subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back({a[i].exp, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly add(const RingDescriptor& r, const Poly& a, const Poly& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return merge<false>(r, a, b);
}

Poly sub(const RingDescriptor& r, const Poly& a, const Poly& b) {
  if (b.empty()) return a;
  return merge<true>(r, a, b);
}

Poly neg(const Poly& a) {
  Poly out = a;
  for (auto& t : out) t.coeff = -t.coeff;
  return out;
}

Poly mul(const RingDescriptor& r, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  int n = r.num_variables();
  Poly out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) {
      Monomial e = add_monomials(x.exp, y.exp, n);
      if (!reduce_monomial(r, e)) continue;
      Coeff c = x.coeff * y.coeff;
      if (!c.is_zero()) out.push_back({e, c});
    }
  }
  if (out.size() > 1) normalize(r, out);
  return out;
}

void add_into(const RingDescriptor& r, Poly& acc, const Poly& a) {
  if (a.empty()) return;
  if (acc.empty()) {
    acc = a;
    return;
  }
  if (a.size() == 1 && acc.size() == 1 && acc[0].exp == a[0].exp) {
    Coeff c = acc[0].coeff + a[0].coeff;
    if (c.is_zero()) {
      acc.clear();
    } else {
      acc[0].coeff = c;
    }
    return;
  }
  acc = merge<false>(r, acc, a);
}

void add_product_into(const RingDescriptor& r, Poly& acc, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return;
  add_into(r, acc, mul(r, a, b));
}

Poly constant(const Coeff& c) {
  if (c.is_zero()) return {};
  return Poly{Term{Monomial{}, c}};
}

bool is_one(const Poly& a) {
  return a.size() == 1 && a[0].coeff.is_one() && a[0].exp == Monomial{};
}

}  // namespace poly

// ---------------------------------------------------------------------------

RingElement::RingElement(Ring ring) : ring_(std::move(ring)) {
  if (!ring_) throw InternalError("ring: null ring descriptor");
}

RingElement::RingElement(Ring ring, Poly p) : ring_(std::move(ring)), poly_(std::move(p)) {
  if (!ring_) throw InternalError("ring: null ring descriptor");
}

RingElement RingElement::constant(const Ring& r, const Coeff& c) {
  check_coeff_in_base(r->base(), c);
  return RingElement(r, poly::constant(c));
}

RingElement RingElement::imaginary_unit(const Ring& r) {
  if (r->base() != Base::GaussianRationals) {
    throw DomainError("ring: i is not an element of " + r->id());
  }
  return RingElement(r, poly::constant(Coeff(0, 1)));
}

RingElement RingElement::variable(const Ring& r, std::string_view name, int exponent) {
  int idx = r->require_index(name);
  const auto& var = r->variables()[idx];
  if (exponent < 0 && var.kind != VarKind::Laurent && var.kind != VarKind::Cyclic) {
    throw NotAUnit("ring: negative power of non-invertible variable '" + var.name + "'");
  }
  Monomial m{};
  if (exponent > kExpLimit || exponent < -kExpLimit) throw Overflow("ring: exponent out of range");
  m[idx] = static_cast<std::int16_t>(exponent);
  if (!reduce_monomial(*r, m)) return RingElement(r);
  return RingElement(r, Poly{Term{m, Coeff(1)}});
}

bool RingElement::is_constant() const {
  return poly_.empty() || (poly_.size() == 1 && poly_[0].exp == Monomial{});
}

Coeff RingElement::constant_term() const {
  for (const auto& t : poly_) {
    if (t.exp == Monomial{}) return t.coeff;
  }
  return Coeff();
}

RingElement RingElement::operator-() const { return RingElement(ring_, poly::neg(poly_)); }

RingElement& RingElement::operator+=(const RingElement& b) {
  require_same_ring(ring_, b.ring_);
  poly_ = poly::add(*ring_, poly_, b.poly_);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& b) {
  require_same_ring(ring_, b.ring_);
  poly_ = poly::sub(*ring_, poly_, b.poly_);
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& b) {
  require_same_ring(ring_, b.ring_);
  poly_ = poly::mul(*ring_, poly_, b.poly_);
  return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same_ring(a.ring_, b.ring_);
  return RingElement(a.ring_, poly::mul(*a.ring_, a.poly_, b.poly_));
}

bool operator==(const RingElement& a, const RingElement& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.poly_.size() != b.poly_.size()) return false;
  for (std::size_t i = 0; i < a.poly_.size(); ++i) {
    if (a.poly_[i].exp != b.poly_[i].exp || !(a.poly_[i].coeff == b.poly_[i].coeff)) return false;
  }
  return true;
}

RingElement RingElement::pow(int e) const {
  if (e < 0) return invert_unit(*this).pow(-e);
  RingElement result = one(ring_);
  RingElement base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

namespace {

std::string render_monomial(const RingDescriptor& r, const Monomial& m) {
  std::string out;
  for (int v = 0; v < r.num_variables(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += r.variables()[v].name;
    if (m[v] != 1) out += "^" + std::to_string(m[v]);
  }
  return out;
}

std::string render_part(const Rational& c, bool imaginary, const std::string& mono) {
  std::string body;
  bool negative = c.sign() < 0;
  Rational mag = negative ? -c : c;
  std::vector<std::string> factors;
  if (!mag.is_one() || (!imaginary && mono.empty())) factors.push_back(mag.to_string());
  if (imaginary) factors.push_back("i");
  if (!mono.empty()) factors.push_back(mono);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k > 0) body += "*";
    body += factors[k];
  }
  return (negative ? "-" : "") + body;
}

}  // namespace

std::string RingElement::to_string() const {
  if (poly_.empty()) return "0";
  std::vector<std::string> parts;
  for (const auto& t : poly_) {
    std::string mono = render_monomial(*ring_, t.exp);
    if (!t.coeff.re.is_zero()) parts.push_back(render_part(t.coeff.re, false, mono));
    if (!t.coeff.im.is_zero()) parts.push_back(render_part(t.coeff.im, true, mono));
  }
  std::string out = parts[0];
  for (std::size_t k = 1; k < parts.size(); ++k) {
    if (parts[k][0] == '-') {
      out += " - " + parts[k].substr(1);
    } else {
      out += " + " + parts[k];
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RingElement& a) { return os << a.to_string(); }

RingElement arithmetic(const RingElement& a, const RingElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add:
      return a + b;
    case ArithOp::Sub:
      return a - b;
    case ArithOp::Mul:
      return a * b;
  }
  throw InternalError("ring: unknown arithmetic op");
}

// ---------------------------------------------------------------------------

RingElement invert_unit(const RingElement& a) {
  const Ring& r = a.ring();
  const auto& vars = r->variables();
  if (a.is_zero()) throw NotAUnit("ring: 0 is not a unit");
  const Poly& p = a.poly();
  if (p.size() == 1) {
    const Term& t = p[0];
    Coeff c = t.coeff;
    if (r->base() == Base::Integers) {
      bool unit = c.im.is_zero() && (c.re == Rational(1) || c.re == Rational(-1));
      if (!unit) throw NotAUnit("ring: integer coefficient " + c.re.to_string() + " is not a unit in ZZ");
    }
    Monomial inv{};
    for (std::size_t v = 0; v < vars.size(); ++v) {
      int e = t.exp[v];
      if (e == 0) continue;
      switch (vars[v].kind) {
        case VarKind::Polynomial:
          throw NotAUnit("ring: polynomial variable '" + vars[v].name + "' is not invertible");
        case VarKind::Truncated:
          throw NotAUnit("ring: nilpotent variable '" + vars[v].name + "' has no inverse (zero constant term in a truncated series)");
        case VarKind::Laurent:
          inv[v] = static_cast<std::int16_t>(-e);
          break;
        case VarKind::Cyclic:
          inv[v] = static_cast<std::int16_t>((vars[v].order - e) % vars[v].order);
          break;
      }
    }
    return RingElement(r, Poly{Term{inv, c.inverse()}});
  }

  bool has_truncated = std::any_of(vars.begin(), vars.end(),
                                   [](const Variable& v) { return v.kind == VarKind::Truncated; });
  if (has_truncated) {
    Poly head;
    for (const auto& t : p) {
      bool nil = false;
      for (std::size_t v = 0; v < vars.size(); ++v) {
        if (vars[v].kind == VarKind::Truncated && t.exp[v] != 0) nil = true;
      }
      if (!nil) head.push_back(t);
    }
    if (head.empty()) {
      throw NotAUnit("ring: zero constant term in a truncated series; " + a.to_string() + " is not a unit");
    }
    RingElement head_inv = invert_unit(RingElement(r, head));
    RingElement u = head_inv * a;  // 1 + nilpotent
    RingElement nil = u - RingElement::one(r);
    RingElement sum = RingElement::one(r);
    RingElement power = RingElement::one(r);
    int bound = 1;
    for (const auto& v : vars) {
      if (v.kind == VarKind::Truncated) bound += v.order;
    }
    for (int k = 1; k <= bound && !power.is_zero(); ++k) {
      power = -(power * nil);
      sum += power;
    }
    return sum * head_inv;
  }
  throw NotAUnit("ring: " + a.to_string() + " is not a unit in " + r->id());
}

RingElement embed(const RingElement& a, const Ring& target) {
  const Ring& src = a.ring();
  if (same_ring(src, target)) return RingElement(target, a.poly());
  if (base_rank(target->base()) < base_rank(src->base())) {
    throw RingMismatch("ring: cannot embed " + src->id() + " into " + target->id());
  }
  std::vector<int> map(src->num_variables());
  for (int v = 0; v < src->num_variables(); ++v) {
    auto idx = target->index_of(src->variables()[v].name);
    bool ok = idx.has_value();
    if (ok) {
      const auto& sv = src->variables()[v];
      const auto& tv = target->variables()[*idx];
      ok = sv.kind == tv.kind && sv.order == tv.order;
      // Polynomial variables may be embedded into Laurent ones.
      if (!ok && sv.kind == VarKind::Polynomial && tv.kind == VarKind::Laurent) ok = true;
    }
    if (!ok) {
      throw RingMismatch("ring: cannot embed " + src->id() + " into " + target->id());
    }
    map[v] = *idx;
  }
  Poly out;
  out.reserve(a.poly().size());
  for (const auto& t : a.poly()) {
    Term u;
    u.coeff = t.coeff;
    for (int v = 0; v < src->num_variables(); ++v) u.exp[map[v]] = t.exp[v];
    out.push_back(u);
  }
  poly::normalize(*target, out);
  return RingElement(target, std::move(out));
}

RingElement specialize(const RingElement& a, const std::map<std::string, RingElement>& assignment) {
  const Ring& src = a.ring();
  Ring target = src;
  Base base = src->base();
  for (const auto& [name, value] : assignment) {
    src->require_index(name);
    base = base_join(base, value.ring()->base());
  }
  {
    auto vars = src->variables();
    std::erase_if(vars, [&](const Variable& v) { return assignment.count(v.name) > 0; });
    target = make_ring(base, std::move(vars));
  }
  struct Slot {
    int src_index;
    RingElement value;
    std::optional<RingElement> inverse;
    std::map<int, RingElement> powers;
  };
  std::vector<Slot> slots;
  for (const auto& [name, value] : assignment) {
    int idx = src->require_index(name);
    Slot s{idx, embed(value, target), std::nullopt, {}};
    if (src->variables()[idx].kind == VarKind::Laurent) {
      try {
        s.inverse = invert_unit(s.value);
      } catch (const NotAUnit&) {
        throw NotAUnit("ring: cannot substitute non-unit " + value.to_string() +
                       " for Laurent variable '" + name + "'");
      }
    }
    slots.push_back(std::move(s));
  }
  std::vector<int> keep_map(src->num_variables(), -1);
  for (int v = 0; v < src->num_variables(); ++v) {
    if (!assignment.count(src->variables()[v].name)) {
      keep_map[v] = *target->index_of(src->variables()[v].name);
    }
  }
  RingElement result(target);
  for (const auto& t : a.poly()) {
    Term rest;
    rest.coeff = t.coeff;
    for (int v = 0; v < src->num_variables(); ++v) {
      if (keep_map[v] >= 0) rest.exp[keep_map[v]] = t.exp[v];
    }
    RingElement term(target, Poly{rest});
    for (auto& s : slots) {
      int e = t.exp[s.src_index];
      if (e == 0) continue;
      auto it = s.powers.find(e);
      if (it == s.powers.end()) {
        RingElement pw = e > 0 ? s.value.pow(e) : s.inverse->pow(-e);
        it = s.powers.emplace(e, pw).first;
      }
      term *= it->second;
    }
    result += term;
  }
  return result;
}

RingElement grade(const RingElement& a, std::string_view var, int degree) {
  const Ring& src = a.ring();
  int idx = src->require_index(var);
  Ring target = ring_without_variable(src, var);
  Poly out;
  for (const auto& t : a.poly()) {
    if (t.exp[idx] != degree) continue;
    Term u;
    u.coeff = t.coeff;
    int k = 0;
    for (int v = 0; v < src->num_variables(); ++v) {
      if (v == idx) continue;
      u.exp[k++] = t.exp[v];
    }
    out.push_back(u);
  }
  poly::normalize(*target, out);
  return RingElement(target, std::move(out));
}

std::optional<std::pair<int, int>> degree_range(const RingElement& a, std::string_view var) {
  int idx = a.ring()->require_index(var);
  if (a.is_zero()) return std::nullopt;
  int lo = a.poly()[0].exp[idx], hi = lo;
  for (const auto& t : a.poly()) {
    lo = std::min<int>(lo, t.exp[idx]);
    hi = std::max<int>(hi, t.exp[idx]);
  }
  return std::make_pair(lo, hi);
}

RingElement divide_exact(const RingElement& a, const RingElement& b) {
  require_same_ring(a.ring(), b.ring());
  const Ring& r = a.ring();
  const auto& vars = r->variables();
  int n = r->num_variables();
  if (b.is_zero()) throw DomainError("ring: division by zero");
  if (a.is_zero()) return RingElement(r);
  for (const auto& t : b.poly()) {
    for (int v = 0; v < n; ++v) {
      if (t.exp[v] != 0 && (vars[v].kind == VarKind::Truncated || vars[v].kind == VarKind::Cyclic)) {
        throw DomainError("ring: exact division by an element involving '" + vars[v].name +
                          "' is not supported; use invert_unit");
      }
    }
  }
  // Shift Laurent exponents so both sides are polynomials, then run the
  // single-divisor division algorithm with a plain lex order.
  Monomial shift_a{}, shift_b{};
  for (int v = 0; v < n; ++v) {
    if (vars[v].kind != VarKind::Laurent) continue;
    int ma = 0, mb = 0;
    for (const auto& t : a.poly()) ma = std::min<int>(ma, t.exp[v]);
    for (const auto& t : b.poly()) mb = std::min<int>(mb, t.exp[v]);
    shift_a[v] = static_cast<std::int16_t>(-ma);
    shift_b[v] = static_cast<std::int16_t>(-mb);
  }
  auto shifted = [&](const Poly& p, const Monomial& s) {
    Poly out = p;
    for (auto& t : out) t.exp = add_monomials(t.exp, s, n);
    poly::normalize(*r, out);
    return out;
  };
  auto lex_greater = [&](const Term& x, const Term& y) {
    for (int v = 0; v < n; ++v) {
      if (x.exp[v] != y.exp[v]) return x.exp[v] > y.exp[v];
    }
    return false;
  };
  auto leading = [&](const Poly& p) {
    return *std::min_element(p.begin(), p.end(), lex_greater);
  };
  Poly rem = shifted(a.poly(), shift_a);
  Poly div = shifted(b.poly(), shift_b);
  Term lt_b = leading(div);
  Poly quot;
  std::size_t guard = 0;
  while (!rem.empty()) {
    if (++guard > 100000) throw DomainError("ring: exact division did not terminate");
    Term lt = leading(rem);
    Term q;
    for (int v = 0; v < n; ++v) {
      int e = lt.exp[v] - lt_b.exp[v];
      if (e < 0) throw DomainError("ring: " + a.to_string() + " is not divisible by " + b.to_string());
      q.exp[v] = static_cast<std::int16_t>(e);
    }
    q.coeff = lt.coeff * lt_b.coeff.inverse();
    if (r->base() == Base::Integers && !(q.coeff.re.is_integer() && q.coeff.im.is_integer())) {
      throw DomainError("ring: " + a.to_string() + " is not divisible by " + b.to_string());
    }
    Poly qp{q};
    quot = poly::add(*r, quot, qp);
    rem = poly::sub(*r, rem, poly::mul(*r, qp, div));
  }
  Monomial back{};
  for (int v = 0; v < n; ++v) back[v] = static_cast<std::int16_t>(shift_b[v] - shift_a[v]);
  Poly out = shifted(quot, back);
  poly::normalize(*r, out);
  return RingElement(r, std::move(out));
}

// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(const Ring& r, std::string_view text) : ring_(r), text_(text) {}

  RingElement run() {
    RingElement e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("ring: cannot parse '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RingElement expr() {
    RingElement acc(ring_);
    bool first = true;
    while (true) {
      skip_ws();
      bool negative = false;
      if (accept('+')) {
      } else if (accept('-')) {
        negative = true;
      } else if (!first) {
        break;
      }
      RingElement t = term();
      acc = negative ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  RingElement term() {
    RingElement acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  RingElement factor() {
    if (accept('-')) return -factor();
    RingElement base = primary();
    if (accept('^')) {
      skip_ws();
      bool negative = accept('-');
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      base = base.pow(negative ? -e : e);
    }
    return base;
  }

  RingElement primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RingElement e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected denominator");
      }
      return RingElement::constant(ring_, Coeff(Rational::parse(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      if (name == "i") return RingElement::imaginary_unit(ring_);
      if (!ring_->index_of(name)) fail("unknown variable '" + std::string(name) + "'");
      return RingElement::variable(ring_, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const Ring& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElement parse_element(const Ring& r, std::string_view text) { return Parser(r, text).run(); }

}  // namespace ybco
