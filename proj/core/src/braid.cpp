#include "ybco/braid.hpp"

#include <cstdlib>
#include <sstream>

#include "ybco/errors.hpp"

namespace ybco {

BraidWord BraidWord::parse(std::string_view text) {
  std::string s(text);
  auto semi = s.find(';');
  if (semi == std::string::npos) throw ParseError("braid: expected 'strands=<m>;' prefix");
  std::istringstream head(s.substr(0, semi));
  std::string key;
  if (!std::getline(head, key, '=')) throw ParseError("braid: missing strands");
  auto trim = [](std::string t) {
    auto a = t.find_first_not_of(" \t\n");
    auto z = t.find_last_not_of(" \t\n");
    return a == std::string::npos ? std::string() : t.substr(a, z - a + 1);
  };
  if (trim(key) != "strands") throw ParseError("braid: expected 'strands=', got '" + key + "'");
  std::string count;
  std::getline(head, count);
  count = trim(count);
  BraidWord b;
  try {
    std::size_t used = 0;
    b.strands = std::stoi(count, &used);
    if (used != count.size()) throw ParseError("braid: bad strand count '" + count + "'");
  } catch (const std::logic_error&) {
    throw ParseError("braid: bad strand count '" + count + "'");
  }
  std::istringstream body(s.substr(semi + 1));
  std::string tok;
  while (body >> tok) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw ParseError("braid: bad letter '" + tok + "'");
      b.letters.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("braid: bad letter '" + tok + "'");
    }
  }
  b.validate();
  return b;
}

std::string BraidWord::to_string() const {
  std::string out = "strands=" + std::to_string(strands) + ";";
  for (int l : letters) out += " " + std::to_string(l);
  return out;
}

void BraidWord::validate() const {
  if (strands < 1) throw ParseError("braid: strands must be >= 1");
  for (int l : letters) {
    if (l == 0 || std::abs(l) > strands - 1) {
      throw DomainError("braid: letter " + std::to_string(l) + " out of range for " +
                        std::to_string(strands) + " strands");
    }
  }
}

int BraidWord::positive() const {
  int n = 0;
  for (int l : letters) n += l > 0;
  return n;
}

int BraidWord::negative() const {
  return static_cast<int>(letters.size()) - positive();
}

int BraidWord::writhe() const { return positive() - negative(); }

GradedOperator psi(const BraidWord& b, const DeformedEybo& def) {
  b.validate();
  auto acc = GradedOperator::identity(def.base, def.d(), b.strands, def.max_degree());
  for (int l : b.letters) {
    const GradedOperator& R = l > 0 ? def.R : def.R_inv;
    acc = apply_padded_left(R, std::abs(l), acc);
  }
  return acc;
}

RingElement trace_of_product(const TensorOperator& f, const TensorOperator& g) {
  if (f.rows() != g.cols() || f.cols() != g.rows()) throw ShapeError("trace_of_product: shapes");
  require_same_ring(f.ring(), g.ring());
  const RingDescriptor& r = *f.ring();
  Poly acc;
  for (std::size_t a = 0; a < f.rows(); ++a) {
    for (std::size_t b = 0; b < f.cols(); ++b) {
      const Poly& x = f.raw(a, b);
      if (x.empty()) continue;
      const Poly& y = g.raw(b, a);
      if (y.empty()) continue;
      poly::add_product_into(r, acc, x, y);
    }
  }
  return RingElement(f.ring(), std::move(acc));
}

RingElement raw_trace(const BraidWord& b, const DeformedEybo& def) {
  GradedOperator P = psi(b, def);
  GradedOperator M = tensor_power(def.mu, b.strands);
  auto N = def.max_degree();
  GradedScalar out;
  for (const auto& [p, Pp] : P.parts()) {
    for (const auto& [q, Mq] : M.parts()) {
      if (N && p + q > *N) continue;
      RingElement t = trace_of_product(Pp, Mq);
      if (t.is_zero()) continue;
      auto it = out.find(p + q);
      if (it == out.end()) {
        out.emplace(p + q, t);
      } else {
        it->second += t;
      }
    }
  }
  return collapse_scalar(out, def.full_ring(), def.var);
}

RingElement trace_invariant(const BraidWord& b, const DeformedEybo& def) {
  return def.alpha.pow(-b.writhe()) * def.beta.pow(-b.strands) * raw_trace(b, def);
}

std::string MarkovMove::to_string() const {
  switch (kind) {
    case Kind::Conjugate:
      return "conjugate " + std::to_string(letter);
    case Kind::StabilizePos:
      return "stabilize +";
    case Kind::StabilizeNeg:
      return "stabilize -";
    case Kind::Destabilize:
      return "destabilize";
  }
  return "?";
}

BraidWord free_reduce(BraidWord b) {
  std::vector<int> out;
  for (int l : b.letters) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  b.letters = std::move(out);
  return b;
}

bool can_destabilize(const BraidWord& b) {
  if (b.strands < 2 || b.letters.empty()) return false;
  int top = b.strands - 1;
  if (std::abs(b.letters.back()) != top) return false;
  for (std::size_t k = 0; k + 1 < b.letters.size(); ++k) {
    if (std::abs(b.letters[k]) == top) return false;
  }
  return true;
}

BraidWord markov_transform(const BraidWord& b, const MarkovMove& move) {
  b.validate();
  BraidWord out = b;
  switch (move.kind) {
    case MarkovMove::Kind::Conjugate: {
      if (move.letter == 0 || std::abs(move.letter) > b.strands - 1) {
        throw DomainError("markov: conjugating letter out of range");
      }
      out.letters.clear();
      out.letters.push_back(-move.letter);
      out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
      out.letters.push_back(move.letter);
      return free_reduce(out);
    }
    case MarkovMove::Kind::StabilizePos:
    case MarkovMove::Kind::StabilizeNeg:
      out.strands = b.strands + 1;
      out.letters.push_back(move.kind == MarkovMove::Kind::StabilizePos ? b.strands : -b.strands);
      return out;
    case MarkovMove::Kind::Destabilize:
      if (!can_destabilize(b)) throw DomainError("markov: destabilization not applicable");
      out.letters.pop_back();
      out.strands = b.strands - 1;
      return out;
  }
  throw InternalError("markov: unknown move");
}

BraidWord torus_braid(int n) {
  if (n < 1) throw DomainError("torus_braid: n must be >= 1");
  return BraidWord{2, std::vector<int>(static_cast<std::size_t>(n), 1)};
}

BraidWord random_braid(std::mt19937_64& rng, int max_strands, int max_letters) {
  if (max_strands < 2) throw DomainError("random_braid: need at least 2 strands");
  BraidWord b;
  b.strands = std::uniform_int_distribution<int>(2, max_strands)(rng);
  int len = std::uniform_int_distribution<int>(1, std::max(1, max_letters))(rng);
  std::uniform_int_distribution<int> gen(1, b.strands - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int k = 0; k < len; ++k) {
    int g = gen(rng);
    b.letters.push_back(sign(rng) ? g : -g);
  }
  return b;
}

MarkovMove random_move(std::mt19937_64& rng, const BraidWord& b) {
  std::vector<MarkovMove::Kind> kinds{MarkovMove::Kind::StabilizePos, MarkovMove::Kind::StabilizeNeg};
  if (b.strands >= 2) kinds.push_back(MarkovMove::Kind::Conjugate);
  if (can_destabilize(b)) kinds.push_back(MarkovMove::Kind::Destabilize);
  MarkovMove m;
  m.kind = kinds[std::uniform_int_distribution<std::size_t>(0, kinds.size() - 1)(rng)];
  if (m.kind == MarkovMove::Kind::Conjugate) {
    int g = std::uniform_int_distribution<int>(1, b.strands - 1)(rng);
    m.letter = std::uniform_int_distribution<int>(0, 1)(rng) ? g : -g;
  }
  return m;
}

}  // namespace ybco
