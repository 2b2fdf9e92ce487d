#include "ybco/quandle.hpp"

#include <sstream>

#include "ybco/errors.hpp"

namespace ybco {

Quandle::Quandle(int n, std::vector<int> table, std::string name)
    : n_(n), table_(std::move(table)), name_(std::move(name)) {
  if (n_ < 1) throw DomainError("quandle: empty set");
  if (table_.size() != static_cast<std::size_t>(n_ * n_)) throw ShapeError("quandle: table size");
  for (int v : table_) {
    if (v < 0 || v >= n_) throw DomainError("quandle: table entry out of range");
  }
  inverse_.assign(table_.size(), -1);
  for (int z = 0; z < n_; ++z) {
    for (int x = 0; x < n_; ++x) {
      auto& slot = inverse_[static_cast<std::size_t>(x * n_ + op(z, x))];
      if (slot != -1) throw DomainError("quandle: right translation by " + std::to_string(x) +
                                        " is not a bijection");
      slot = z;
    }
  }
  validate();
}

Quandle Quandle::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line, cleaned;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    cleaned += line.substr(0, hash) + "\n";
  }
  std::istringstream body(cleaned);
  int n = 0;
  if (!(body >> n)) throw ParseError("quandle: expected element count");
  if (n < 1 || n > 64) throw ParseError("quandle: element count out of range");
  std::vector<int> table;
  for (int k = 0; k < n * n; ++k) {
    int v;
    if (!(body >> v)) throw ParseError("quandle: table too short");
    table.push_back(v);
  }
  std::string extra;
  if (body >> extra) throw ParseError("quandle: trailing token '" + extra + "'");
  return Quandle(n, std::move(table));
}

Quandle Quandle::dihedral(int n) {
  if (n < 1) throw DomainError("dihedral quandle needs n >= 1");
  std::vector<int> table;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) table.push_back((((2 * y - x) % n) + n) % n);
  }
  return Quandle(n, std::move(table), "dihedral:" + std::to_string(n));
}

void Quandle::validate() const {
  for (int x = 0; x < n_; ++x) {
    if (op(x, x) != x) throw DomainError("quandle: not idempotent at " + std::to_string(x));
  }
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      for (int z = 0; z < n_; ++z) {
        if (op(op(x, y), z) != op(op(x, z), op(y, z))) {
          throw DomainError("quandle: not self-distributive at (" + std::to_string(x) + "," +
                            std::to_string(y) + "," + std::to_string(z) + ")");
        }
      }
    }
  }
}

std::string Quandle::to_text() const {
  std::string out = std::to_string(n_) + "\n";
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) out += (y ? " " : "") + std::to_string(op(x, y));
    out += "\n";
  }
  return out;
}

Quandle alexander_quandle_F4() {
  // a + bt <-> a + 2b; t(a + bt) = b + (a + b)t.
  auto add = [](int u, int v) { return u ^ v; };
  auto times_t = [](int u) {
    int a = u & 1, b = u >> 1;
    return b | (((a ^ b) & 1) << 1);
  };
  std::vector<int> table;
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) table.push_back(add(times_t(x), add(times_t(y), y)));
  }
  return Quandle(4, std::move(table), "F4");
}

void QuandleCocycle::validate(const Quandle& q) const {
  if (size != q.size() || values.size() != static_cast<std::size_t>(size * size)) {
    throw ShapeError("cocycle: size does not match quandle");
  }
  if (group_order < 1) throw DomainError("cocycle: group order must be positive");
  auto mod = [&](std::int64_t v) { return ((v % group_order) + group_order) % group_order; };
  for (int x = 0; x < size; ++x) {
    if (mod(value(x, x)) != 0) throw DomainError("cocycle: psi(x,x) != 0 at " + std::to_string(x));
  }
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) {
      for (int z = 0; z < size; ++z) {
        std::int64_t s = value(x, y) + value(q.op(x, y), z) - value(x, z) - value(q.op(x, z), q.op(y, z));
        if (mod(s) != 0) {
          throw DomainError("cocycle: 2-cocycle condition fails at (" + std::to_string(x) + "," +
                            std::to_string(y) + "," + std::to_string(z) + ")");
        }
      }
    }
  }
}

bool QuandleCocycle::integral(const Quandle& q) const {
  validate(q);
  for (int x = 0; x < size; ++x) {
    if (value(x, x) != 0) return false;
    for (int y = 0; y < size; ++y) {
      for (int z = 0; z < size; ++z) {
        if (value(x, y) + value(q.op(x, y), z) - value(x, z) - value(q.op(x, z), q.op(y, z)) != 0) return false;
      }
    }
  }
  return true;
}

QuandleCocycle chi_cocycle() {
  QuandleCocycle c{4, 2, std::vector<std::int64_t>(16, 0)};
  const int marked[] = {0, 1, 3};
  for (int a : marked) {
    for (int b : marked) {
      if (a != b) c.values[static_cast<std::size_t>(a * 4 + b)] = 1;
    }
  }
  return c;
}

QuandleCocycle zero_cocycle(const Quandle& q, int group_order) {
  return {q.size(), group_order, std::vector<std::int64_t>(static_cast<std::size_t>(q.size() * q.size()), 0)};
}

QuandleCocycle quandle_coboundary(const Quandle& q, const std::vector<std::int64_t>& f, int group_order) {
  if (f.size() != static_cast<std::size_t>(q.size())) throw ShapeError("cocycle: f has the wrong length");
  QuandleCocycle c{q.size(), group_order, {}};
  for (int x = 0; x < q.size(); ++x) {
    for (int y = 0; y < q.size(); ++y) {
      c.values.push_back(f[static_cast<std::size_t>(x)] - f[static_cast<std::size_t>(q.op(x, y))]);
    }
  }
  return c;
}

Ring quandle_ring(int group_order) {
  if (group_order < 1) throw DomainError("quandle_ring: group order must be positive");
  return make_ring(Base::Integers, {{"z", VarKind::Cyclic, group_order}});
}

QuandleModel yb_from_quandle(const Quandle& q, const std::optional<QuandleCocycle>& psi) {
  int d = q.size();
  Ring r = quandle_ring(psi ? psi->group_order : 2);
  if (psi) psi->validate(q);
  auto flat = [d](int x, int y) { return static_cast<std::size_t>(x * d + y); };
  TensorOperator R(r, d, 2), R_inv(r, d, 2), phi(r, d, 2), phi_hat(r, d, 2);
  auto one = RingElement::one(r);
  for (int x = 0; x < d; ++x) {
    for (int y = 0; y < d; ++y) {
      R.set(flat(y, q.op(x, y)), flat(x, y), one);
      int z = q.solve(x, y);
      R_inv.set(flat(z, x), flat(x, y), one);
      if (psi) {
        phi.set(flat(y, q.op(x, y)), flat(x, y), RingElement::integer(r, psi->value(x, y)));
        phi_hat.set(flat(z, x), flat(x, y), RingElement::integer(r, -psi->value(z, x)));
      }
    }
  }
  QuandleModel model{Eybo{R, R_inv, TensorOperator::identity(r, d, 1), one, one}, std::nullopt};
  if (psi) {
    DeformedEybo def = undeformed(model.base, 1);
    def.R.add_part(1, phi);
    def.R_inv.add_part(1, phi_hat);
    model.deformed = std::move(def);
  }
  return model;
}

namespace {

// Applies one letter to a coloring; returns eps * psi of the crossing.
std::int64_t act(const Quandle& q, const QuandleCocycle* psi, int letter, std::vector<int>& c) {
  std::size_t i = static_cast<std::size_t>(std::abs(letter) - 1);
  int x = c[i], y = c[i + 1];
  if (letter > 0) {
    c[i] = y;
    c[i + 1] = q.op(x, y);
    return psi ? psi->value(x, y) : 0;
  }
  int z = q.solve(x, y);
  c[i] = z;
  c[i + 1] = x;
  return psi ? -psi->value(z, x) : 0;
}

template <typename Visit>
void for_each_coloring(const BraidWord& b, const Quandle& q, const QuandleCocycle* psi, Visit visit) {
  b.validate();
  std::vector<int> start(static_cast<std::size_t>(b.strands), 0);
  while (true) {
    std::vector<int> c = start;
    std::int64_t weight = 0;
    for (int l : b.letters) weight += act(q, psi, l, c);
    if (c == start) visit(start, weight);
    std::size_t k = 0;
    while (k < start.size() && ++start[k] == q.size()) start[k++] = 0;
    if (k == start.size()) break;
  }
}

}  // namespace

std::vector<std::vector<int>> colorings(const BraidWord& b, const Quandle& q) {
  std::vector<std::vector<int>> out;
  for_each_coloring(b, q, nullptr, [&](const std::vector<int>& c, std::int64_t) { out.push_back(c); });
  return out;
}

StateSums state_sum_invariants(const BraidWord& b, const Quandle& q, const QuandleCocycle& psi) {
  psi.validate(q);
  Ring r = quandle_ring(psi.group_order);
  Ring rh = ring_with_variable(r, {"h", VarKind::Truncated, 1});
  StateSums out{0, RingElement(r), RingElement(rh)};
  std::int64_t total = 0;
  for_each_coloring(b, q, &psi, [&](const std::vector<int>&, std::int64_t w) {
    ++out.colorings;
    int e = static_cast<int>(((w % psi.group_order) + psi.group_order) % psi.group_order);
    out.classical += RingElement::variable(r, "z", e);
    total += w;
  });
  out.quantum = RingElement::integer(rh, static_cast<std::int64_t>(out.colorings)) +
                RingElement::integer(rh, total) * RingElement::variable(rh, "h");
  return out;
}

}  // namespace ybco
