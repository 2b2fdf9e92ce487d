#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "ybco/bracket.hpp"
#include "ybco/braid.hpp"
#include "ybco/errors.hpp"
#include "ybco/eybo.hpp"
#include "ybco/jones_alex.hpp"
#include "ybco/models.hpp"
#include "ybco/quandle.hpp"
#include "ybco/ybcoh.hpp"

namespace ybco::cli {

namespace {

const std::set<std::string> kVerbs = {"invariant", "check", "oracle", "jones", "alexander"};
const std::set<std::string> kSuites = {"ybe", "eybo", "cocycle", "inverse", "markov", "complex", "all"};

struct HelpRequested {
  std::string text;
};

bool is_quandle(const std::string& model) { return model.rfind("quandle:", 0) == 0; }

void require(bool ok, const std::string& message) {
  if (!ok) throw ParseError("cli: " + message);
}

void validate(Command& c) {
  require(kVerbs.count(c.verb) > 0, "unknown verb '" + c.verb + "'");
  if (c.verb == "jones" || c.verb == "alexander") {
    require(c.model.empty() || c.model == c.verb, "--model " + c.model + " conflicts with verb " + c.verb);
  } else {
    require(!c.model.empty(), "--model is required for " + c.verb);
    require(c.model == "tau-deform" || c.model == "bracket" || c.model == "jones" ||
                c.model == "alexander" || (is_quandle(c.model) && c.model.size() > 8),
            "unknown model '" + c.model + "'");
  }
  require(c.format == "text" || c.format == "structured", "unknown format '" + c.format + "'");
  require(kSuites.count(c.suite) > 0, "unknown suite '" + c.suite + "'");
  require(c.A == "generic" || c.A == "i", "--A must be 'generic' or 'i', got '" + c.A + "'");
  require(c.cocycle.empty() || c.cocycle == "chi" || c.cocycle == "zero",
          "unknown cocycle '" + c.cocycle + "'");
  require(c.trials >= 1, "--trials must be positive");
  require(c.suite == "all" || c.verb == "check", "--suite needs verb check");

  bool bracket = c.model == "bracket";
  require(!c.deform || bracket, "--deform applies to the bracket model only");
  require(c.A == "generic" || bracket, "--A applies to the bracket model only");
  require(c.B == "symbolic" || bracket, "--B applies to the bracket model only");
  require(c.q == "symbolic" || c.model == "tau-deform", "--q applies to the tau-deform model only");
  require(c.cocycle.empty() || is_quandle(c.model), "--cocycle applies to quandle models only");
  require(c.B == "symbolic" || c.verb != "check", "--B conflicts with check (checks use symbolic B)");
  require(!(bracket && c.deform && c.A != "i"),
          "--deform needs --A i: the deformed cocycle condition requires 2(A^4 - 1)B = 0");
  if (c.q != "symbolic") Rational::parse(c.q);
  if (c.B != "symbolic") Rational::parse(c.B);

  int inputs = !c.braid.empty() + !c.morse.empty() + !c.input.empty();
  require(inputs <= 1, "give at most one of --braid, --morse, --input");
  require(c.morse.empty() || bracket, "--morse applies to the bracket model only");
  if (c.verb != "check") require(inputs == 1, c.verb + " needs --braid, --morse or --input");
  if (!c.braid.empty()) BraidWord::parse(c.braid).validate();
  if (!c.morse.empty()) MorseWord::parse(c.morse).validate();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cli: cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string s) {
  auto sp = [](unsigned char ch) { return std::isspace(ch) != 0; };
  while (!s.empty() && sp(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t k = 0;
  while (k < s.size() && sp(static_cast<unsigned char>(s[k]))) ++k;
  return s.substr(k);
}

// Structured output keeps insertion order.
struct Fields {
  std::vector<std::pair<std::string, std::string>> items;
  void add(std::string key, std::string value) { items.emplace_back(std::move(key), std::move(value)); }
  std::string render() const {
    std::string out;
    for (const auto& [k, v] : items) out += k + " = " + v + "\n";
    return out;
  }
};

BraidWord braid_of(const Command& c) {
  if (!c.braid.empty()) return BraidWord::parse(c.braid);
  if (!c.input.empty()) return BraidWord::parse(trim(read_file(c.input)));
  throw DomainError("cli: model " + c.model + " needs a braid word");
}

MorseWord morse_of(const Command& c) {
  if (!c.morse.empty()) return MorseWord::parse(c.morse);
  if (!c.braid.empty()) return braid_to_morse(BraidWord::parse(c.braid));
  if (!c.input.empty()) {
    std::string text = trim(read_file(c.input));
    if (text.rfind("strands=", 0) == 0) return braid_to_morse(BraidWord::parse(text));
    return MorseWord::parse(text);
  }
  throw DomainError("cli: the bracket model needs a Morse or braid word");
}

Quandle quandle_of(const std::string& model) {
  std::string name = model.substr(8);
  if (name == "F4") return alexander_quandle_F4();
  if (name.rfind("dihedral:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(name.substr(9));
    } catch (const std::exception&) {
      throw ParseError("cli: bad dihedral order in '" + name + "'");
    }
    return Quandle::dihedral(n);
  }
  return Quandle::parse(read_file(name));
}

QuandleCocycle cocycle_of(const Command& c, const Quandle& q) {
  std::string which = c.cocycle;
  if (which.empty()) which = q.name() == "F4" ? "chi" : "zero";
  if (which == "zero") return zero_cocycle(q);
  if (q.size() != 4) throw DomainError("cli: the chi cocycle needs a 4-element quandle");
  QuandleCocycle chi = chi_cocycle();
  chi.validate(q);
  return chi;
}

RingElement tau_parameter(const Command& c) {
  if (c.q == "symbolic") return RingElement::variable(tau_ring(), "q");
  return RingElement::constant(make_ring(Base::Rationals), Rational::parse(c.q));
}

BracketModel bracket_of(const Command& c) {
  return build_bracket_model(c.deform, c.A == "i" ? Specialization::AEqualsI : Specialization::GenericA);
}

RingElement specialize_B(const Command& c, const RingElement& x) {
  if (c.B == "symbolic" || !x.ring()->index_of("B")) return x;
  Ring q = make_ring(Base::Rationals);
  return specialize(x, {{"B", RingElement::constant(q, Rational::parse(c.B))}});
}

RingElement h_plus_inverse() {
  Ring r = laurent_ring();
  return RingElement::variable(r, "h") + RingElement::variable(r, "h", -1);
}

// The deformation a trace-based model is evaluated with.
DeformedEybo deformation_of(const Command& c) {
  if (c.model == "tau-deform") return tau_deformed(tau_parameter(c));
  if (c.model == "jones") return jones_model().def;
  if (c.model == "alexander") return alexander_model().def;
  Quandle q = quandle_of(c.model);
  return *yb_from_quandle(q, cocycle_of(c, q)).deformed;
}

void add_degrees(Fields& f, const RingElement& x) {
  if (!x.ring()->index_of("h")) return;
  for (const auto& [k, v] : split_scalar(x, "h")) f.add("degree." + std::to_string(k), v.to_string());
}

Outcome finish(const Command& c, const std::string& text, Fields& f) {
  return {0, c.format == "structured" ? f.render() : text + "\n"};
}

Outcome run_invariant(const Command& c) {
  Fields f;
  f.add("verb", c.verb);
  f.add("model", c.model);
  if (c.model == "bracket") {
    MorseWord w = morse_of(c);
    BracketModel m = bracket_of(c);
    BracketInvariants inv = normalized_invariants(w, m);
    RingElement value = specialize_B(c, inv.phi_w);
    f.add("morse", w.to_string());
    f.add("positive", std::to_string(inv.signs.positive));
    f.add("negative", std::to_string(inv.signs.negative));
    f.add("components", std::to_string(inv.signs.components));
    f.add("evaluation", specialize_B(c, inv.evaluation).to_string());
    f.add("phi_m", specialize_B(c, inv.phi_m).to_string());
    f.add("phi_w", value.to_string());
    return finish(c, value.to_string(), f);
  }
  BraidWord b = braid_of(c);
  f.add("braid", b.to_string());
  if (c.model == "alexander") {
    AlexanderResult a = alexander_invariant(b);
    f.add("scalar", a.is_scalar ? "true" : "false");
    if (!a.is_scalar) {
      f.add("value", "not a scalar");
      return {1, c.format == "structured" ? f.render() : "not a scalar\n" + a.op.to_text()};
    }
    f.add("value", a.scalar.to_string());
    return finish(c, a.scalar.to_string(), f);
  }
  if (c.model == "jones") {
    RingElement value = jones_invariant(b);
    f.add("value", value.to_string());
    return finish(c, value.to_string(), f);
  }
  DeformedEybo def = deformation_of(c);
  RingElement value = trace_invariant(b, def);
  if (is_quandle(c.model)) {
    Quandle q = quandle_of(c.model);
    StateSums s = state_sum_invariants(b, q, cocycle_of(c, q));
    f.add("colorings", std::to_string(s.colorings));
    f.add("classical", s.classical.to_string());
    f.add("state_sum", s.quantum.to_string());
    f.add("state_sum_agrees", embed(s.quantum, value.ring()) == value ? "true" : "false");
  }
  add_degrees(f, value);
  f.add("value", value.to_string());
  return finish(c, value.to_string(), f);
}

Outcome run_oracle(const Command& c) {
  Fields f;
  f.add("verb", c.verb);
  f.add("model", c.model);
  RingElement value = [&] {
    if (c.model == "bracket") {
      if (c.deform) throw DomainError("cli: the bracket oracle is the undeformed state sum");
      MorseWord w = morse_of(c);
      BracketModel m = bracket_of(c);
      f.add("morse", w.to_string());
      return divide_exact(kauffman_state_sum(w, m.A, m.delta), m.delta);
    }
    BraidWord b = braid_of(c);
    f.add("braid", b.to_string());
    if (c.model == "jones") return oracle_jones(b);
    if (c.model == "alexander") return normalize_up_to_units(oracle_alexander(b));
    if (is_quandle(c.model)) {
      Quandle q = quandle_of(c.model);
      return state_sum_invariants(b, q, cocycle_of(c, q)).quantum;
    }
    throw DomainError("cli: no independent oracle for " + c.model);
  }();
  f.add("value", value.to_string());
  return finish(c, value.to_string(), f);
}

Outcome run_polynomial(const Command& c) {
  BraidWord b = braid_of(c);
  RingElement h_form = c.verb == "jones" ? divide_exact(jones_invariant(b), h_plus_inverse()) : [&] {
    AlexanderResult a = alexander_invariant(b);
    if (!a.is_scalar) throw InternalError("alexander: partial trace is not a scalar");
    return normalize_up_to_units(a.scalar);
  }();
  std::string t = c.verb == "jones" ? jones_t_form(h_form) : t_form(h_form, 1);
  Fields f;
  f.add("verb", c.verb);
  f.add("braid", b.to_string());
  f.add("h", h_form.to_string());
  f.add("t", t);
  return finish(c, "h: " + h_form.to_string() + "\nt: " + t, f);
}

// ---- check suites

Report filtered(const Report& r, const std::set<std::string>& names) {
  Report out;
  for (const auto& l : r.lines) {
    if (names.count(l.name)) out.lines.push_back(l);
  }
  return out;
}

TensorOperator base_R(const Command& c) {
  if (c.model == "bracket") return bracket_of(c).R;
  if (c.model == "jones") return jones_model().phis[0];
  if (c.model == "alexander") return alexander_model().phis[0];
  return deformation_of(c).R.part(0);
}

Report complex_suite(const Command& c, std::mt19937_64& rng) {
  TensorOperator R = base_R(c);
  Report rep;
  for (int n = 1; n <= 2; ++n) {
    bool ok = true;
    for (int t = 0; t < c.trials && ok; ++t) {
      TensorOperator f = random_operator(R.ring(), R.d(), n, n, rng);
      ok = full_diff(R, full_diff(R, f)).is_zero();
    }
    rep.add("dd_zero_n" + std::to_string(n), ok, std::to_string(c.trials) + " random cochains");
  }
  return rep;
}

Report cocycle_suite(const Command& c) {
  if (c.model == "bracket") return filtered(verify_bracket_conditions(bracket_of(c)), {"cocycle"});
  if (c.model == "jones" || c.model == "alexander") {
    const LaurentModel& m = c.model == "jones" ? jones_model() : alexander_model();
    Report rep;
    rep.add_residual("cocycle", delta2(m.phis[0], m.phis[1]));
    rep.add_residual("phi0_ybe", ybe_defect(m.phis[0]));
    bool singular = false;
    try {
      invert(m.phis[0]);
    } catch (const SingularError&) {
      singular = true;
    }
    rep.add("phi0_singular", singular);
    return rep;
  }
  DeformedEybo def = deformation_of(c);
  Eybo base{def.R.part(0), def.R_inv.part(0), def.mu.part(0), RingElement::one(def.base),
            RingElement::one(def.base)};
  return verify_enhanced_2cocycle(base, def.R.part(1), def.mu.part(1)).report;
}

Report markov_suite(const Command& c, std::mt19937_64& rng) {
  std::optional<DeformedEybo> def;
  std::optional<BracketModel> bm;
  if (c.model == "bracket") {
    bm = bracket_of(c);
  } else if (c.model != "alexander") {
    def = deformation_of(c);
  }
  auto value = [&](BraidWord b) {
    if (bm) return normalized_invariants(braid_to_morse(b), *bm).phi_w;
    if (def) return trace_invariant(b, *def);
    if (b.strands < 2) b = markov_transform(b, {MarkovMove::Kind::StabilizePos, 1});
    AlexanderResult a = alexander_invariant(b);
    if (!a.is_scalar) throw InternalError("alexander: partial trace is not a scalar");
    return normalize_up_to_units(a.scalar);
  };
  Report rep;
  std::string failure;
  for (int t = 0; t < c.trials && failure.empty(); ++t) {
    BraidWord b = random_braid(rng, 4, 6);
    MarkovMove move = random_move(rng, b);
    BraidWord after = markov_transform(b, move);
    if (!(value(b) == value(after))) failure = b.to_string() + " under " + move.to_string();
  }
  rep.add("invariant_preserved", failure.empty(),
          failure.empty() ? std::to_string(c.trials) + " random moves" : failure);
  return rep;
}

Report eybo_suite(const Command& c) {
  if (c.model == "bracket") {
    Report r = verify_bracket_conditions(bracket_of(c));
    Report out;
    for (const auto& l : r.lines) {
      if (l.name != "cocycle") out.lines.push_back(l);
    }
    return out;
  }
  return verify_deformed(deformation_of(c));
}

Report suite_report(const Command& c, const std::string& suite, std::mt19937_64& rng) {
  if (suite == "eybo") return eybo_suite(c);
  if (suite == "ybe") return filtered(eybo_suite(c), {"ybe", "ybe_inverse"});
  if (suite == "inverse") return filtered(eybo_suite(c), {"inverse", "inverse_right", "inverse_left"});
  if (suite == "cocycle") return cocycle_suite(c);
  if (suite == "complex") return complex_suite(c, rng);
  return markov_suite(c, rng);
}

Outcome run_check(const Command& c) {
  std::mt19937_64 rng(c.seed);
  Report rep;
  if (c.suite == "all") {
    for (const char* s : {"eybo", "cocycle", "complex", "markov"}) {
      rep.append(suite_report(c, s, rng), std::string(s) + ".");
    }
  } else {
    rep = suite_report(c, c.suite, rng);
  }
  bool ok = rep.ok();
  std::string out;
  if (c.format == "structured") {
    Fields f;
    f.add("verb", c.verb);
    f.add("model", c.model);
    f.add("suite", c.suite);
    for (const auto& l : rep.lines) f.add("check." + l.name, l.pass ? "PASS" : "FAIL");
    f.add("result", ok ? "PASS" : "FAIL");
    out = f.render();
  } else {
    out = rep.to_text() + "result: " + (ok ? "PASS" : "FAIL") + "\n";
  }
  return {ok ? 0 : 1, out};
}

}  // namespace

Command parse_command(const std::vector<std::string>& args) {
  Command c;
  CLI::App app{"Knot invariants from enhanced Yang-Baxter operators and their deformations", "ybco"};
  app.add_option("verb", c.verb, "invariant | check | oracle | jones | alexander");
  app.add_option("--model", c.model, "tau-deform | quandle:<name> | bracket | jones | alexander");
  app.add_option("--braid", c.braid, "braid word, e.g. \"strands=2; 1 1 1\"");
  app.add_option("--morse", c.morse, "Morse word, e.g. \"cap:1 cup:1\"");
  app.add_option("--input", c.input, "file holding a braid or Morse word");
  app.add_option("--cocycle", c.cocycle, "chi | zero");
  app.add_flag("--deform", c.deform, "deform the bracket model");
  app.add_option("--A", c.A, "generic | i");
  app.add_option("--q", c.q, "symbolic or a rational value");
  app.add_option("--B", c.B, "symbolic or a rational value");
  app.add_option("--seed", c.seed, "RNG seed");
  app.add_option("--format", c.format, "text | structured");
  app.add_option("--suite", c.suite, "ybe | eybo | cocycle | inverse | markov | complex | all");
  app.add_option("--trials", c.trials, "random trials per property");
  app.add_option("--batch", c.batch, "file with one command per line");
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw ParseError(std::string("cli: ") + e.what());
  }
  if (!c.batch.empty()) {
    Command only_batch;
    only_batch.batch = c.batch;
    require(c == only_batch, "--batch takes no other arguments");
    return c;
  }
  validate(c);
  return c;
}

std::vector<std::string> render_command(const Command& c) {
  if (!c.batch.empty()) return {"--batch", c.batch};
  const Command d;
  std::vector<std::string> out{c.verb};
  auto opt = [&](const char* name, const std::string& v, const std::string& def) {
    if (v != def) {
      out.emplace_back(name);
      out.push_back(v);
    }
  };
  opt("--model", c.model, d.model);
  opt("--braid", c.braid, d.braid);
  opt("--morse", c.morse, d.morse);
  opt("--input", c.input, d.input);
  opt("--cocycle", c.cocycle, d.cocycle);
  if (c.deform) out.emplace_back("--deform");
  opt("--A", c.A, d.A);
  opt("--q", c.q, d.q);
  opt("--B", c.B, d.B);
  opt("--seed", std::to_string(c.seed), std::to_string(d.seed));
  opt("--format", c.format, d.format);
  opt("--suite", c.suite, d.suite);
  opt("--trials", std::to_string(c.trials), std::to_string(d.trials));
  return out;
}

Outcome run_command(const Command& c) {
  if (!c.batch.empty()) return run_batch(c.batch, 0);
  if (c.verb == "check") return run_check(c);
  if (c.verb == "oracle") return run_oracle(c);
  if (c.verb == "jones" || c.verb == "alexander") return run_polynomial(c);
  return run_invariant(c);
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool in_token = false;
  char quote = 0;
  for (char ch : line) {
    if (quote) {
      if (ch == quote) {
        quote = 0;
      } else {
        cur += ch;
      }
    } else if (ch == '"' || ch == '\'') {
      quote = ch;
      in_token = true;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      if (in_token) out.push_back(cur);
      cur.clear();
      in_token = false;
    } else {
      cur += ch;
      in_token = true;
    }
  }
  if (quote) throw ParseError("cli: unterminated quote");
  if (in_token) out.push_back(cur);
  return out;
}

namespace {

Outcome guarded(const std::vector<std::string>& args, bool allow_batch) {
  try {
    Command c = parse_command(args);
    require(allow_batch || c.batch.empty(), "nested --batch");
    if (const char* env = std::getenv("YBCO_SEED")) {
      try {
        c.seed = std::stoull(env);
      } catch (const std::exception&) {
        throw ParseError(std::string("cli: YBCO_SEED is not a number: ") + env);
      }
    }
    return run_command(c);
  } catch (const HelpRequested& h) {
    return {0, h.text};
  } catch (const InternalError& e) {
    return {3, std::string("internal error: ") + e.what() + "\n"};
  } catch (const Error& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {3, std::string("internal error: ") + e.what() + "\n"};
  }
}

}  // namespace

Outcome run_batch(const std::string& path, unsigned threads) {
  std::istringstream in(read_file(path));
  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    lines.push_back(split_line(t));
  }
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  std::vector<Outcome> results(lines.size());
  for (std::size_t start = 0; start < lines.size(); start += threads) {
    std::vector<std::future<Outcome>> jobs;
    std::size_t end = std::min(lines.size(), start + threads);
    for (std::size_t k = start; k < end; ++k) {
      jobs.push_back(std::async(std::launch::async, [&lines, k] { return guarded(lines[k], false); }));
    }
    for (std::size_t k = start; k < end; ++k) results[k] = jobs[k - start].get();
  }
  Outcome out;
  for (const auto& r : results) {
    out.output += r.output;
    out.status = std::max(out.status, r.status);
  }
  return out;
}

Outcome run_main(const std::vector<std::string>& args) { return guarded(args, true); }

}  // namespace ybco::cli
