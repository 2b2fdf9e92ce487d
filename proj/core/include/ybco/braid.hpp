#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ybco/eybo.hpp"
#include "ybco/graded.hpp"

namespace ybco {

// Braid on `strands` strands. Letter +i is sigma_i, -i its inverse.
// Text form: "strands=3; 1 -2 1" (an empty word is "strands=1;").
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  static BraidWord parse(std::string_view text);
  std::string to_string() const;
  void validate() const;

  int writhe() const;
  int positive() const;
  int negative() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Graded Psi(b) on V^(x)strands. The first letter acts first.
GradedOperator psi(const BraidWord& b, const DeformedEybo& def);

// tr(Psi(b) mu~^(x)m) in def.full_ring(), with no normalization.
RingElement raw_trace(const BraidWord& b, const DeformedEybo& def);

// alpha^-w beta^-m tr(Psi(b) mu~^(x)m).
RingElement trace_invariant(const BraidWord& b, const DeformedEybo& def);

// Trace of f o g without forming the product.
RingElement trace_of_product(const TensorOperator& f, const TensorOperator& g);

struct MarkovMove {
  enum class Kind { Conjugate, StabilizePos, StabilizeNeg, Destabilize };
  Kind kind = Kind::Conjugate;
  int letter = 1;  // conjugating letter, Conjugate only

  std::string to_string() const;
};

// Cancels adjacent inverse pairs.
BraidWord free_reduce(BraidWord b);

// Conjugate(g) gives g^-1 b g, freely reduced. Destabilize throws
// DomainError unless the last letter is +-(m-1) and m-1 occurs nowhere else.
BraidWord markov_transform(const BraidWord& b, const MarkovMove& move);
bool can_destabilize(const BraidWord& b);

// sigma_1^n in B_2.
BraidWord torus_braid(int n);

BraidWord random_braid(std::mt19937_64& rng, int max_strands, int max_letters);
MarkovMove random_move(std::mt19937_64& rng, const BraidWord& b);

}  // namespace ybco
