#pragma once

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ybco/braid.hpp"
#include "ybco/report.hpp"
#include "ybco/tensor.hpp"

namespace ybco {

struct MorseEvent {
  enum class Kind { Cap, Cup, Cross };
  Kind kind = Kind::Cap;
  int pos = 1;   // 1-based strand position
  int sign = 1;  // crossing type, Cross only

  friend bool operator==(const MorseEvent&, const MorseEvent&) = default;
};

// Read top to bottom. Cap(i) creates strands i, i+1 (a local maximum, the
// copairing); Cup(i) joins strands i, i+1 (a local minimum, the pairing).
// Text form: "cap:1 cap:2 x+:1 x-:1 cup:2 cup:1".
struct MorseWord {
  std::vector<MorseEvent> events;

  static MorseWord parse(std::string_view text);
  std::string to_string() const;
  // Throws ParseError naming the offending event index.
  void validate() const;
  int crossings() const;
  int max_width() const;

  friend bool operator==(const MorseWord&, const MorseWord&) = default;
};

// cap:1 cap:2 x+:1 (m times) cup:2 cup:1, the closure of sigma_1^m.
MorseWord torus_morse(int m);

// Closure of a braid: nested caps 1..m, letter i as a crossing at i,
// nested cups m..1.
MorseWord braid_to_morse(const BraidWord& b);

// Random closed word with at most max_crossings crossings.
MorseWord random_morse(std::mt19937_64& rng, int max_crossings, int max_width = 6);

struct CrossingSigns {
  int positive = 0;
  int negative = 0;
  int components = 0;
};

// Each component is oriented from its lowest-numbered segment, running
// downward. A crossing of type s is positive when s times (+1 for parallel
// strands, -1 for antiparallel) is positive.
CrossingSigns orientation_signs(const MorseWord& w);

enum class Specialization { GenericA, AEqualsI };

// Operators over one ring containing a truncated variable h (h^2 = 0).
// Full operators are X~ = X + h X1.
struct BracketModel {
  Ring ring;
  Specialization spec = Specialization::GenericA;
  bool deformed = false;
  RingElement A;
  RingElement delta;
  TensorOperator cup, cap, R, R_inv;
  TensorOperator phi, phi_hat, cup1, cap1;

  TensorOperator R_full() const;
  TensorOperator R_inv_full() const;
  TensorOperator cup_full() const;
  TensorOperator cap_full() const;
  // E = cap o cup.
  TensorOperator E() const;
};

Ring bracket_ring(Specialization spec, const std::vector<std::string>& symbols = {"B"});

// cup(e1 e2) = iA, cup(e2 e1) = -iA^-1, cap(1) = iA e1e2 - iA^-1 e2e1,
// R = A + A^-1 E, R^-1 = A^-1 + A E, phi = B + Bb E, phi^ = C E + Cb.
// No conditions are imposed.
BracketModel bracket_model(const Ring& ring, const RingElement& A, const RingElement& B,
                           const RingElement& Bb, const RingElement& C, const RingElement& Cb);

// Undeformed, or deformed with Bb = -A^-2 B, C = B, Cb = Bb. Deforming
// requires A = i since the cocycle condition needs 2(A^4 - 1)B = 0;
// throws DomainError otherwise. Deformed models are verified on
// construction.
BracketModel build_bracket_model(bool deform, Specialization spec);

// Undeformed model plus phi = delta1(R, f), phi^ = R^-1 F - F R^-1,
// cup1 = cup F and cap1 = -F cap with F = f(x)1 + 1(x)f.
BracketModel coboundary_cupcap_model(const BracketModel& base, const TensorOperator& f);

// Switchback, passcup and passcap for the full operators (both h-degrees),
// and optionally the two type-I equations in h-degree 1:
//   cup phi + cup1 R = cup1,  phi cap + R cap1 = cap1.
Report verify_deformed_cupcap(const BracketModel& m, bool type_one = true);

// verify_deformed_cupcap without type I, plus inverse, YBE, the cocycle
// condition delta2(R, phi) = 0 and w+ w- = 1.
Report verify_bracket_conditions(const BracketModel& m);

// Slice-by-slice composition of the full operators.
RingElement evaluate_morse(const MorseWord& w, const BracketModel& m);

// Kink factors measured on the model: the closure of one positive crossing
// and the single-cap kink.
RingElement kink_plus(const BracketModel& m);
RingElement kink_minus(const BracketModel& m);

struct BracketInvariants {
  RingElement evaluation;
  RingElement phi_m;  // evaluation / delta
  RingElement phi_w;  // w-^p w+^n phi_m
  CrossingSigns signs;
};

BracketInvariants normalized_invariants(const MorseWord& w, const BracketModel& m,
                                        std::optional<CrossingSigns> signs = std::nullopt);

// Kauffman state sum: each crossing of type +1 smooths to the identity
// with weight A and to E with weight A^-1 (swapped for type -1), each
// state weighted by delta^(loops).
RingElement kauffman_state_sum(const MorseWord& w, const RingElement& A, const RingElement& delta);

}  // namespace ybco
