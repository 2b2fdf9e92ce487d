#include "ybco/jones_alex.hpp"

#include <algorithm>
#include <map>

#include "ybco/bracket.hpp"
#include "ybco/errors.hpp"
#include "ybco/ybcoh.hpp"

namespace ybco {

namespace {

TensorOperator mat(const Ring& r, const std::vector<std::vector<std::int64_t>>& rows) {
  int m = rows.size() == 4 ? 2 : 1;
  return TensorOperator::from_rows(r, 2, m, m, rows);
}

LaurentModel make_model(const std::string& name, std::vector<TensorOperator> phis,
                        std::vector<TensorOperator> hats, GradedOperator mu, const RingElement& alpha,
                        const RingElement& beta) {
  Ring base = phis.front().ring();
  Ring full = laurent_ring();
  DeformedEybo def{base,
                   DeformMode::Laurent,
                   0,
                   "h",
                   GradedOperator::from_list(phis, 0, std::nullopt),
                   GradedOperator::from_list(hats, 0, std::nullopt, -1),
                   std::move(mu),
                   alpha,
                   beta};
  LaurentModel m{name,
                 def,
                 std::move(phis),
                 std::move(hats),
                 def.R.collapse(full, "h"),
                 def.R_inv.collapse(full, "h"),
                 def.mu.collapse(full, "h")};
  auto id2 = TensorOperator::identity(full, 2, 2);
  if (!ybe_defect(m.R_full).is_zero()) throw InternalError(name + ": YBE fails");
  if (!ybe_defect(m.R_inv_full).is_zero()) throw InternalError(name + ": inverse YBE fails");
  if (!(compose(m.R_full, m.R_inv_full) == id2) || !(compose(m.R_inv_full, m.R_full) == id2)) {
    throw InternalError(name + ": R R^-1 != 1");
  }
  if (!delta2(m.phis[0], m.phis[1]).is_zero()) throw InternalError(name + ": phi_1 not a cocycle");
  bool singular = false;
  try {
    invert(m.phis[0]);
  } catch (const SingularError&) {
    singular = true;
  }
  if (!singular) throw InternalError(name + ": phi_0 unexpectedly invertible");
  return m;
}

LaurentModel build_jones() {
  Ring q = make_ring(Base::Rationals);
  Ring full = laurent_ring();
  std::vector<TensorOperator> phis{
      mat(q, {{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
      mat(q, {{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}}),
      mat(q, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 0}})};
  std::vector<TensorOperator> hats{
      mat(q, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}}),
      mat(q, {{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}}),
      mat(q, {{0, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}})};
  GradedOperator mu(q, 2, 1, 1, std::nullopt);
  mu.add_part(0, mat(q, {{1, 0}, {0, 0}}));
  mu.add_part(2, mat(q, {{0, 0}, {0, 1}}));
  return make_model("jones", std::move(phis), std::move(hats), std::move(mu),
                    RingElement::variable(full, "h", -1), RingElement::variable(full, "h"));
}

LaurentModel build_alexander() {
  Ring q = make_ring(Base::Rationals);
  Ring full = laurent_ring();
  std::vector<TensorOperator> phis{
      mat(q, {{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}}),
      mat(q, {{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}}),
      mat(q, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}})};
  std::vector<TensorOperator> hats{
      mat(q, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}),
      mat(q, {{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}}),
      mat(q, {{0, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1}})};
  GradedOperator mu(q, 2, 1, 1, std::nullopt);
  mu.add_part(1, mat(q, {{1, 0}, {0, -1}}));
  return make_model("alexander", std::move(phis), std::move(hats), std::move(mu),
                    RingElement::one(full), RingElement::one(full));
}

RingElement h_power(int k) { return RingElement::variable(laurent_ring(), "h", k); }

struct ConwayOracle {
  RingElement z;
  int cap;
  std::map<std::string, RingElement> memo;

  RingElement eval(const BraidWord& b) {
    auto key = b.to_string();
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    RingElement out = compute(b);
    memo.emplace(key, out);
    return out;
  }

  RingElement compute(const BraidWord& b) {
    const int m = b.strands;
    const auto n = b.letters.size();
    std::vector<bool> seen(n, false), top_done(static_cast<std::size_t>(m), false);
    int components = 0;
    for (int p = 0; p < m; ++p) {
      if (top_done[static_cast<std::size_t>(p)]) continue;
      ++components;
      int pos = p;
      do {
        top_done[static_cast<std::size_t>(pos)] = true;
        for (std::size_t k = 0; k < n; ++k) {
          int l = b.letters[k];
          int i = std::abs(l) - 1;
          if (pos != i && pos != i + 1) continue;
          bool from_left = pos == i;
          bool over = l > 0 ? !from_left : from_left;
          if (!seen[k]) {
            seen[k] = true;
            if (!over) return skein(b, k);
          }
          pos = from_left ? i + 1 : i;
        }
      } while (pos != p);
    }
    // Descending diagram: an unlink.
    return components == 1 ? RingElement::one(z.ring()) : RingElement(z.ring());
  }

  // N(L) = N(L switched at k) + eps z N(L smoothed at k).
  RingElement skein(const BraidWord& b, std::size_t k) {
    BraidWord switched = b;
    switched.letters[k] = -switched.letters[k];
    BraidWord smoothed = b;
    smoothed.letters.erase(smoothed.letters.begin() + static_cast<std::ptrdiff_t>(k));
    RingElement term = z * eval(smoothed);
    return eval(switched) + (b.letters[k] > 0 ? term : -term);
  }
};

}  // namespace

Ring laurent_ring() { return make_ring(Base::Rationals, {{"h", VarKind::Laurent, 0}}); }

const LaurentModel& jones_model() {
  static const LaurentModel m = build_jones();
  return m;
}

const LaurentModel& alexander_model() {
  static const LaurentModel m = build_alexander();
  return m;
}

RingElement jones_invariant(const BraidWord& b) {
  return h_power(b.positive() - b.negative() - b.strands) * raw_trace(b, jones_model().def);
}

AlexanderResult alexander_invariant(const BraidWord& b) {
  if (b.strands < 2) throw DomainError("alexander_invariant: needs at least 2 strands");
  const auto& def = alexander_model().def;
  GradedOperator P = psi(b, def);
  GradedOperator M = tensor(GradedOperator::identity(def.base, 2, 1, std::nullopt),
                            tensor_power(def.mu, b.strands - 1));
  std::vector<int> factors;
  for (int k = 2; k <= b.strands; ++k) factors.push_back(k);
  GradedOperator T = partial_trace(compose(P, M), factors);
  Ring full = laurent_ring();
  RingElement norm = h_power(-b.positive() + b.negative() + b.strands - 1);
  TensorOperator op = norm * T.collapse(full, "h");
  AlexanderResult out{op, false, op.entry(0, 0)};
  out.is_scalar = op.entry(0, 1).is_zero() && op.entry(1, 0).is_zero() && op.entry(0, 0) == op.entry(1, 1);
  return out;
}

RingElement oracle_jones(const BraidWord& b, int max_crossings) {
  b.validate();
  if (static_cast<int>(b.letters.size()) > max_crossings) {
    throw DomainError("oracle_jones: more than " + std::to_string(max_crossings) + " crossings");
  }
  Ring ra = make_ring(Base::Rationals, {{"A", VarKind::Laurent, 0}});
  RingElement A = RingElement::variable(ra, "A");
  RingElement delta = -(A * A) - A.pow(-2);
  RingElement bracket = divide_exact(kauffman_state_sum(braid_to_morse(b), A, delta), delta);
  RingElement v = (-(A.pow(3))).pow(-b.writhe()) * bracket;
  Ring full = laurent_ring();
  RingElement out(full);
  for (const auto& t : v.poly()) {
    int e = t.exp[0];
    if (e % 2 != 0) throw InternalError("oracle_jones: odd power of A");
    int k = -e / 2;
    RingElement c = RingElement::constant(full, t.coeff);
    out += (k % 2 == 0 ? c : -c) * h_power(k);
  }
  return out;
}

RingElement oracle_alexander(const BraidWord& b, int max_crossings) {
  b.validate();
  if (static_cast<int>(b.letters.size()) > max_crossings) {
    throw DomainError("oracle_alexander: more than " + std::to_string(max_crossings) + " crossings");
  }
  ConwayOracle oracle{h_power(1) - h_power(-1), max_crossings, {}};
  return oracle.eval(b);
}

RingElement normalize_up_to_units(const RingElement& x, const std::string& var) {
  auto range = degree_range(x, var);
  if (!range) return x;
  RingElement shifted = x * RingElement::variable(x.ring(), var, -range->first);
  RingElement low = grade(shifted, var, 0);
  const Coeff& c = low.poly().front().coeff;
  bool negative = c.re.is_zero() ? c.im.sign() < 0 : c.re.sign() < 0;
  return negative ? -shifted : shifted;
}

bool equal_up_to_units(const RingElement& a, const RingElement& b, const std::string& var) {
  return normalize_up_to_units(a, var) == normalize_up_to_units(b, var);
}

RingElement invert_variable(const RingElement& x, const std::string& var) {
  int idx = x.ring()->require_index(var);
  if (x.ring()->variables()[static_cast<std::size_t>(idx)].kind != VarKind::Laurent) {
    throw DomainError("invert_variable: " + var + " is not a Laurent variable");
  }
  RingElement out(x.ring());
  for (auto t : x.poly()) {
    t.exp[static_cast<std::size_t>(idx)] = static_cast<std::int16_t>(-t.exp[static_cast<std::size_t>(idx)]);
    out += RingElement(x.ring(), Poly{t});
  }
  return out;
}

std::string jones_t_form(const RingElement& x) { return t_form(x, -1); }

std::string t_form(const RingElement& x, int root_sign) {
  int idx = x.ring()->require_index("h");
  if (x.ring()->num_variables() != 1) throw DomainError("t_form: expected Q[h:laurent]");
  std::vector<std::pair<int, Coeff>> terms;
  for (const auto& t : x.poly()) {
    int k = t.exp[static_cast<std::size_t>(idx)];
    terms.push_back({k, (k % 2 == 0 || root_sign > 0) ? t.coeff : -t.coeff});
  }
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms) {
    if (!c.is_real()) throw DomainError("t_form: non-real coefficient");
    Rational v = c.re;
    bool neg = v.sign() < 0;
    Rational mag = neg ? -v : v;
    std::string power;
    if (k != 0) {
      if (k % 2 == 0) {
        power = k == 2 ? "t" : "t^" + std::to_string(k / 2);
      } else {
        power = "t^(" + std::to_string(k) + "/2)";
      }
    }
    std::string body;
    if (power.empty()) {
      body = mag.to_string();
    } else if (mag.is_one()) {
      body = power;
    } else {
      body = mag.to_string() + "*" + power;
    }
    if (out.empty()) {
      out = (neg ? "-" : "") + body;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

}  // namespace ybco
