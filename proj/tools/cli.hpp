#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ybco::cli {

// One parsed command line. Empty strings mean "not given".
struct Command {
  std::string verb;   // invariant | check | oracle | jones | alexander
  std::string model;  // tau-deform | quandle:<name> | bracket | jones | alexander
  std::string braid;
  std::string morse;
  std::string input;    // file holding a braid or Morse word
  std::string cocycle;  // chi | zero; default chi for F4, zero otherwise
  bool deform = false;
  std::string A = "generic";  // generic | i
  std::string q = "symbolic";
  std::string B = "symbolic";
  std::uint64_t seed = 1;
  std::string format = "text";  // text | structured
  std::string suite = "all";    // ybe | eybo | cocycle | inverse | markov | complex | all
  int trials = 20;
  std::string batch;

  friend bool operator==(const Command&, const Command&) = default;
};

// Throws ybco::ParseError on unknown verbs, models, malformed values or
// conflicting options; the message names the offending token.
Command parse_command(const std::vector<std::string>& args);

// Canonical argument list; parse_command(render_command(c)) == c.
std::vector<std::string> render_command(const Command& c);

struct Outcome {
  int status = 0;  // 0 ok, 1 check failure, 2 usage or input error, 3 internal error
  std::string output;
};

Outcome run_command(const Command& c);

// Splits a line into arguments, honouring single and double quotes.
std::vector<std::string> split_line(const std::string& line);

// Runs one command per non-empty, non-comment line; output stays in line
// order and the status is the largest of the line statuses.
Outcome run_batch(const std::string& path, unsigned threads);

// Full entry point: parsing, YBCO_SEED override, errors and exit codes.
Outcome run_main(const std::vector<std::string>& args);

}  // namespace ybco::cli
