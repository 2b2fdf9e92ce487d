#include "ybco/bracket.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ybco/errors.hpp"
#include "ybco/ybcoh.hpp"

namespace ybco {

namespace {

std::string event_text(const MorseEvent& e) {
  switch (e.kind) {
    case MorseEvent::Kind::Cap:
      return "cap:" + std::to_string(e.pos);
    case MorseEvent::Kind::Cup:
      return "cup:" + std::to_string(e.pos);
    case MorseEvent::Kind::Cross:
      return std::string(e.sign > 0 ? "x+:" : "x-:") + std::to_string(e.pos);
  }
  return "?";
}

// Segments are the arcs between events; end 2s is the top of segment s and
// 2s+1 its bottom. link pairs ends joined by a cap, cup or crossing strand.
struct SegmentGraph {
  int segments = 0;
  std::vector<int> link;
  struct Site {
    int old_left = -1, old_right = -1, new_left = -1, new_right = -1;
  };
  std::vector<Site> sites;  // one per event
};

SegmentGraph build_segments(const MorseWord& w) {
  w.validate();
  SegmentGraph g;
  std::vector<int> pos;
  auto fresh = [&]() {
    g.link.push_back(-1);
    g.link.push_back(-1);
    return g.segments++;
  };
  auto join = [&](int a, int b) {
    g.link[static_cast<std::size_t>(a)] = b;
    g.link[static_cast<std::size_t>(b)] = a;
  };
  for (const auto& e : w.events) {
    SegmentGraph::Site s;
    auto i = static_cast<std::size_t>(e.pos - 1);
    switch (e.kind) {
      case MorseEvent::Kind::Cap: {
        s.new_left = fresh();
        s.new_right = fresh();
        join(2 * s.new_left, 2 * s.new_right);
        pos.insert(pos.begin() + static_cast<std::ptrdiff_t>(i), {s.new_left, s.new_right});
        break;
      }
      case MorseEvent::Kind::Cup: {
        s.old_left = pos[i];
        s.old_right = pos[i + 1];
        join(2 * s.old_left + 1, 2 * s.old_right + 1);
        pos.erase(pos.begin() + static_cast<std::ptrdiff_t>(i), pos.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        break;
      }
      case MorseEvent::Kind::Cross: {
        s.old_left = pos[i];
        s.old_right = pos[i + 1];
        s.new_left = fresh();
        s.new_right = fresh();
        join(2 * s.old_left + 1, 2 * s.new_right);
        join(2 * s.old_right + 1, 2 * s.new_left);
        pos[i] = s.new_left;
        pos[i + 1] = s.new_right;
        break;
      }
    }
    g.sites.push_back(s);
  }
  return g;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
  int classes() {
    int n = 0;
    for (std::size_t k = 0; k < parent.size(); ++k) n += find(static_cast<int>(k)) == static_cast<int>(k);
    return n;
  }
};

RingElement divide_by(const RingElement& a, const RingElement& b) {
  if (b.is_constant()) return a * invert_unit(b);
  return divide_exact(a, b);
}

TensorOperator id_op(const Ring& r, int m) { return TensorOperator::identity(r, 2, m); }

}  // namespace

MorseWord MorseWord::parse(std::string_view text) {
  MorseWord w;
  std::istringstream in{std::string(text)};
  std::string tok;
  std::size_t index = 0;
  while (in >> tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) {
      throw ParseError("morse: event " + std::to_string(index) + " '" + tok + "': expected kind:position");
    }
    std::string kind = tok.substr(0, colon);
    std::string num = tok.substr(colon + 1);
    MorseEvent e;
    if (kind == "cap") {
      e.kind = MorseEvent::Kind::Cap;
    } else if (kind == "cup") {
      e.kind = MorseEvent::Kind::Cup;
    } else if (kind == "x+" || kind == "x-") {
      e.kind = MorseEvent::Kind::Cross;
      e.sign = kind == "x+" ? 1 : -1;
    } else {
      throw ParseError("morse: event " + std::to_string(index) + " '" + tok + "': unknown kind");
    }
    try {
      std::size_t used = 0;
      e.pos = std::stoi(num, &used);
      if (used != num.size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw ParseError("morse: event " + std::to_string(index) + " '" + tok + "': bad position");
    }
    w.events.push_back(e);
    ++index;
  }
  w.validate();
  return w;
}

std::string MorseWord::to_string() const {
  std::string out;
  for (const auto& e : events) {
    if (!out.empty()) out += ' ';
    out += event_text(e);
  }
  return out;
}

void MorseWord::validate() const {
  int count = 0;
  for (std::size_t k = 0; k < events.size(); ++k) {
    const auto& e = events[k];
    auto fail = [&](const std::string& why) {
      throw ParseError("morse: event " + std::to_string(k) + " '" + event_text(e) + "': " + why);
    };
    if (e.pos < 1) fail("position must be >= 1");
    switch (e.kind) {
      case MorseEvent::Kind::Cap:
        if (e.pos > count + 1) fail("cap position beyond strand count " + std::to_string(count));
        count += 2;
        break;
      case MorseEvent::Kind::Cup:
        if (e.pos > count - 1) fail("cup needs strands i, i+1 among " + std::to_string(count));
        count -= 2;
        break;
      case MorseEvent::Kind::Cross:
        if (e.sign != 1 && e.sign != -1) fail("crossing sign must be +-1");
        if (e.pos > count - 1) fail("crossing needs strands i, i+1 among " + std::to_string(count));
        break;
    }
  }
  if (count != 0) throw ParseError("morse: word ends with " + std::to_string(count) + " open strands");
}

int MorseWord::crossings() const {
  return static_cast<int>(std::count_if(events.begin(), events.end(),
                                        [](const MorseEvent& e) { return e.kind == MorseEvent::Kind::Cross; }));
}

int MorseWord::max_width() const {
  int count = 0, best = 0;
  for (const auto& e : events) {
    if (e.kind == MorseEvent::Kind::Cap) count += 2;
    if (e.kind == MorseEvent::Kind::Cup) count -= 2;
    best = std::max(best, count);
  }
  return best;
}

MorseWord torus_morse(int m) {
  if (m < 1) throw DomainError("torus_morse: m must be >= 1");
  MorseWord w;
  w.events.push_back({MorseEvent::Kind::Cap, 1, 1});
  w.events.push_back({MorseEvent::Kind::Cap, 2, 1});
  for (int k = 0; k < m; ++k) w.events.push_back({MorseEvent::Kind::Cross, 1, 1});
  w.events.push_back({MorseEvent::Kind::Cup, 2, 1});
  w.events.push_back({MorseEvent::Kind::Cup, 1, 1});
  return w;
}

MorseWord braid_to_morse(const BraidWord& b) {
  b.validate();
  MorseWord w;
  for (int k = 1; k <= b.strands; ++k) w.events.push_back({MorseEvent::Kind::Cap, k, 1});
  for (int l : b.letters) w.events.push_back({MorseEvent::Kind::Cross, std::abs(l), l > 0 ? 1 : -1});
  for (int k = b.strands; k >= 1; --k) w.events.push_back({MorseEvent::Kind::Cup, k, 1});
  return w;
}

MorseWord random_morse(std::mt19937_64& rng, int max_crossings, int max_width) {
  if (max_width < 2) throw DomainError("random_morse: width must be >= 2");
  MorseWord w;
  int count = 0;
  int budget = std::uniform_int_distribution<int>(0, std::max(0, max_crossings))(rng);
  std::uniform_int_distribution<int> coin(0, 99);
  while (true) {
    bool can_cap = count + 2 <= max_width;
    bool can_cross = count >= 2 && budget > 0;
    if (count == 0 && budget == 0 && !w.events.empty()) break;
    int roll = coin(rng);
    if (count == 0 || (can_cap && roll < 25)) {
      int i = std::uniform_int_distribution<int>(1, count + 1)(rng);
      w.events.push_back({MorseEvent::Kind::Cap, i, 1});
      count += 2;
    } else if (can_cross && roll < 80) {
      int i = std::uniform_int_distribution<int>(1, count - 1)(rng);
      w.events.push_back({MorseEvent::Kind::Cross, i, coin(rng) < 50 ? 1 : -1});
      --budget;
    } else {
      int i = std::uniform_int_distribution<int>(1, count - 1)(rng);
      w.events.push_back({MorseEvent::Kind::Cup, i, 1});
      count -= 2;
    }
  }
  return w;
}

CrossingSigns orientation_signs(const MorseWord& w) {
  SegmentGraph g = build_segments(w);
  std::vector<int> dir(static_cast<std::size_t>(g.segments), 0);
  CrossingSigns out;
  for (int seed = 0; seed < g.segments; ++seed) {
    if (dir[static_cast<std::size_t>(seed)] != 0) continue;
    ++out.components;
    int cur = seed, d = 1;
    while (dir[static_cast<std::size_t>(cur)] == 0) {
      dir[static_cast<std::size_t>(cur)] = d;
      int exit_end = 2 * cur + (d > 0 ? 1 : 0);
      int enter = g.link[static_cast<std::size_t>(exit_end)];
      if (enter < 0) throw InternalError("morse: dangling segment end");
      cur = enter / 2;
      d = enter % 2 == 0 ? 1 : -1;
    }
  }
  for (std::size_t k = 0; k < w.events.size(); ++k) {
    const auto& e = w.events[k];
    if (e.kind != MorseEvent::Kind::Cross) continue;
    const auto& s = g.sites[k];
    bool parallel = dir[static_cast<std::size_t>(s.old_left)] == dir[static_cast<std::size_t>(s.old_right)];
    int sign = e.sign * (parallel ? 1 : -1);
    (sign > 0 ? out.positive : out.negative)++;
  }
  return out;
}

TensorOperator BracketModel::R_full() const {
  return R + RingElement::variable(ring, "h") * phi;
}

TensorOperator BracketModel::R_inv_full() const {
  return R_inv + RingElement::variable(ring, "h") * phi_hat;
}

TensorOperator BracketModel::cup_full() const {
  return cup + RingElement::variable(ring, "h") * cup1;
}

TensorOperator BracketModel::cap_full() const {
  return cap + RingElement::variable(ring, "h") * cap1;
}

TensorOperator BracketModel::E() const { return compose(cap, cup); }

Ring bracket_ring(Specialization spec, const std::vector<std::string>& symbols) {
  std::vector<Variable> vars;
  if (spec == Specialization::GenericA) vars.push_back({"A", VarKind::Laurent, 0});
  for (const auto& s : symbols) vars.push_back({s, VarKind::Polynomial, 0});
  vars.push_back({"h", VarKind::Truncated, 1});
  return make_ring(Base::GaussianRationals, std::move(vars));
}

BracketModel bracket_model(const Ring& ring, const RingElement& A, const RingElement& B,
                           const RingElement& Bb, const RingElement& C, const RingElement& Cb) {
  RingElement i = RingElement::imaginary_unit(ring);
  RingElement Ai = invert_unit(A);
  TensorOperator cup(ring, 2, 0, 2), cap(ring, 2, 2, 0);
  cup.set(0, 1, i * A);
  cup.set(0, 2, -(i * Ai));
  cap.set(1, 0, i * A);
  cap.set(2, 0, -(i * Ai));
  TensorOperator E = compose(cap, cup);
  TensorOperator id2 = id_op(ring, 2);
  bool zero_def = B.is_zero() && Bb.is_zero() && C.is_zero() && Cb.is_zero();
  return BracketModel{ring,
                      Specialization::GenericA,
                      !zero_def,
                      A,
                      -(A * A) - Ai * Ai,
                      cup,
                      cap,
                      A * id2 + Ai * E,
                      Ai * id2 + A * E,
                      B * id2 + Bb * E,
                      C * E + Cb * id2,
                      TensorOperator(ring, 2, 0, 2),
                      TensorOperator(ring, 2, 2, 0)};
}

BracketModel build_bracket_model(bool deform, Specialization spec) {
  if (deform && spec == Specialization::GenericA) {
    throw DomainError(
        "bracket: the deformed model needs A = i; at generic A the cocycle condition "
        "requires 2(A^4 - 1)B = 0");
  }
  Ring ring = bracket_ring(spec);
  RingElement A = spec == Specialization::GenericA ? RingElement::variable(ring, "A")
                                                   : RingElement::imaginary_unit(ring);
  RingElement zero(ring);
  BracketModel m = [&] {
    if (!deform) return bracket_model(ring, A, zero, zero, zero, zero);
    RingElement B = RingElement::variable(ring, "B");
    RingElement Bb = -(A.pow(-2) * B);
    return bracket_model(ring, A, B, Bb, B, Bb);
  }();
  m.spec = spec;
  if (deform) {
    Report rep = verify_bracket_conditions(m);
    if (!rep.ok()) throw InternalError("bracket: deformed model fails its conditions:\n" + rep.to_text());
  }
  return m;
}

BracketModel coboundary_cupcap_model(const BracketModel& base, const TensorOperator& f) {
  TensorOperator fe = embed(f, base.ring);
  TensorOperator id1 = id_op(base.ring, 1);
  TensorOperator F = tensor(fe, id1) + tensor(id1, fe);
  BracketModel m = base;
  m.deformed = true;
  m.phi = delta1(base.R, fe);
  m.phi_hat = compose(base.R_inv, F) - compose(F, base.R_inv);
  m.cup1 = compose(base.cup, F);
  m.cap1 = -compose(F, base.cap);
  return m;
}

Report verify_deformed_cupcap(const BracketModel& m, bool type_one) {
  Report rep;
  const Ring& r = m.ring;
  TensorOperator id1 = id_op(r, 1);
  TensorOperator cup = m.cup_full(), cap = m.cap_full();
  TensorOperator R = m.R_full(), Ri = m.R_inv_full();
  rep.add_residual("switchback_left", compose(tensor(cup, id1), tensor(id1, cap)) - id1);
  rep.add_residual("switchback_right", compose(tensor(id1, cup), tensor(cap, id1)) - id1);
  rep.add_residual("passcup_R", compose(tensor(id1, cup), tensor(R, id1)) -
                                    compose(tensor(cup, id1), tensor(id1, Ri)));
  rep.add_residual("passcup_Rinv", compose(tensor(id1, cup), tensor(Ri, id1)) -
                                       compose(tensor(cup, id1), tensor(id1, R)));
  rep.add_residual("passcap_R", compose(tensor(R, id1), tensor(id1, cap)) -
                                    compose(tensor(id1, Ri), tensor(cap, id1)));
  rep.add_residual("passcap_Rinv", compose(tensor(Ri, id1), tensor(id1, cap)) -
                                       compose(tensor(id1, R), tensor(cap, id1)));
  if (type_one) {
    auto lower = [&](const TensorOperator& op) { return embed(grade(op, "h", 1), r); };
    rep.add_residual("type1_cup", lower(compose(cup, R)) - m.cup1);
    rep.add_residual("type1_cap", lower(compose(R, cap)) - m.cap1);
  }
  return rep;
}

Report verify_bracket_conditions(const BracketModel& m) {
  Report rep = verify_deformed_cupcap(m, false);
  TensorOperator id2 = id_op(m.ring, 2);
  TensorOperator R = m.R_full(), Ri = m.R_inv_full();
  rep.add("inverse", compose(R, Ri) == id2 && compose(Ri, R) == id2);
  rep.add_residual("ybe", ybe_defect(R));
  rep.add_residual("ybe_inverse", ybe_defect(Ri));
  rep.add_residual("cocycle", delta2(m.R, m.phi));
  RingElement prod = kink_plus(m) * kink_minus(m);
  rep.add("kink_product", prod.is_one(), "w+ w- = " + prod.to_string());
  return rep;
}

RingElement evaluate_morse(const MorseWord& w, const BracketModel& m) {
  w.validate();
  TensorOperator state(m.ring, 2, 0, 0);
  state.set(0, 0, RingElement::one(m.ring));
  TensorOperator cup = m.cup_full(), cap = m.cap_full();
  TensorOperator R = m.R_full(), Ri = m.R_inv_full();
  for (const auto& e : w.events) {
    switch (e.kind) {
      case MorseEvent::Kind::Cap:
        state = apply_padded_left(cap, e.pos, state);
        break;
      case MorseEvent::Kind::Cup:
        state = apply_padded_left(cup, e.pos, state);
        break;
      case MorseEvent::Kind::Cross:
        state = apply_padded_left(e.sign > 0 ? R : Ri, e.pos, state);
        break;
    }
  }
  return state.entry(0, 0);
}

RingElement kink_plus(const BracketModel& m) {
  return divide_by(evaluate_morse(MorseWord::parse("cap:1 cap:2 x+:1 cup:2 cup:1"), m), m.delta);
}

RingElement kink_minus(const BracketModel& m) {
  return divide_by(evaluate_morse(MorseWord::parse("cap:1 x+:1 cup:1"), m), m.delta);
}

BracketInvariants normalized_invariants(const MorseWord& w, const BracketModel& m,
                                        std::optional<CrossingSigns> signs) {
  CrossingSigns s = signs ? *signs : orientation_signs(w);
  RingElement ev = evaluate_morse(w, m);
  RingElement pm = divide_by(ev, m.delta);
  RingElement pw = kink_minus(m).pow(s.positive) * kink_plus(m).pow(s.negative) * pm;
  return {ev, pm, pw, s};
}

RingElement kauffman_state_sum(const MorseWord& w, const RingElement& A, const RingElement& delta) {
  SegmentGraph g = build_segments(w);
  std::vector<std::size_t> crossing_events;
  for (std::size_t k = 0; k < w.events.size(); ++k) {
    if (w.events[k].kind == MorseEvent::Kind::Cross) crossing_events.push_back(k);
  }
  if (crossing_events.size() > 16) throw DomainError("kauffman_state_sum: too many crossings");
  const Ring& r = A.ring();
  RingElement total(r);
  std::size_t states = std::size_t{1} << crossing_events.size();
  for (std::size_t mask = 0; mask < states; ++mask) {
    UnionFind uf(g.segments);
    int a_exp = 0;
    for (std::size_t k = 0; k < w.events.size(); ++k) {
      const auto& e = w.events[k];
      const auto& s = g.sites[k];
      if (e.kind == MorseEvent::Kind::Cap) uf.unite(s.new_left, s.new_right);
      if (e.kind == MorseEvent::Kind::Cup) uf.unite(s.old_left, s.old_right);
    }
    for (std::size_t c = 0; c < crossing_events.size(); ++c) {
      const auto& e = w.events[crossing_events[c]];
      const auto& s = g.sites[crossing_events[c]];
      bool vertical = ((mask >> c) & 1U) == 0;
      if (vertical) {
        uf.unite(s.old_left, s.new_left);
        uf.unite(s.old_right, s.new_right);
      } else {
        uf.unite(s.old_left, s.old_right);
        uf.unite(s.new_left, s.new_right);
      }
      a_exp += (vertical ? 1 : -1) * e.sign;
    }
    total += A.pow(a_exp) * delta.pow(uf.classes());
  }
  return total;
}

}  // namespace ybco
