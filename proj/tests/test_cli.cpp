#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "cli.hpp"
#include "ybco/errors.hpp"

using namespace ybco;
using namespace ybco::cli;

namespace {

using Args = std::vector<std::string>;

Command random_command(std::mt19937_64& rng) {
  auto pick = [&](const std::vector<std::string>& xs) {
    return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
  };
  Command c;
  c.verb = pick({"invariant", "check", "oracle"});
  c.model = pick({"tau-deform", "quandle:F4", "quandle:dihedral:3", "bracket", "jones", "alexander"});
  if (c.verb != "check" || rng() % 2) {
    if (c.model == "bracket" && rng() % 2) {
      c.morse = "cap:1 cap:2 x+:1 x-:1 cup:2 cup:1";
    } else {
      c.braid = pick({"strands=2; 1 1 1", "strands=3; 1 -2 1 -2", "strands=1;"});
    }
  }
  if (c.model == "tau-deform" && rng() % 2) c.q = pick({"1", "-2/3"});
  if (c.model.rfind("quandle:", 0) == 0 && rng() % 2) c.cocycle = "zero";
  if (c.model == "bracket") {
    if (rng() % 2) c.A = "i";
    if (c.A == "i" && rng() % 2) c.deform = true;
    if (c.verb != "check" && rng() % 2) c.B = "3";
  }
  c.seed = rng() % 1000;
  c.format = pick({"text", "structured"});
  if (c.verb == "check") {
    c.suite = pick({"ybe", "eybo", "cocycle", "inverse", "markov", "complex", "all"});
    c.trials = 1 + static_cast<int>(rng() % 50);
  }
  return c;
}

std::string temp_file(const std::string& name, const std::string& text) {
  std::string path = "ybco_test_" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("parse and render round-trip") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 200; ++k) {
    Command c = random_command(rng);
    Args args = render_command(c);
    CHECK(parse_command(args) == c);
  }
  Command b = parse_command({"--batch", "jobs.txt"});
  CHECK(b.batch == "jobs.txt");
  CHECK(render_command(b) == Args{"--batch", "jobs.txt"});
}

TEST_CASE("usage errors") {
  CHECK_THROWS_AS(parse_command({"frobnicate", "--model", "jones", "--braid", "strands=1;"}), ParseError);
  CHECK_THROWS_AS(parse_command({"invariant", "--model", "nope", "--braid", "strands=1;"}), ParseError);
  CHECK_THROWS_AS(parse_command({"invariant", "--model", "jones"}), ParseError);
  CHECK_THROWS_AS(parse_command({"invariant", "--model", "jones", "--braid", "strands=2; 3"}), DomainError);
  CHECK_THROWS_AS(parse_command({"invariant", "--model", "jones", "--braid", "strands=2; x"}), ParseError);
  CHECK_THROWS_AS(parse_command({"invariant", "--model", "jones", "--braid", "strands=1;", "--format", "xml"}),
                  ParseError);
  CHECK_THROWS_AS(parse_command({"invariant", "--model", "jones", "--bogus", "1"}), ParseError);
  // Conflicts.
  CHECK_THROWS_AS(parse_command({"invariant", "--model", "jones", "--braid", "strands=1;", "--morse", "cap:1 cup:1"}),
                  ParseError);
  CHECK_THROWS_AS(parse_command({"invariant", "--model", "bracket", "--morse", "cap:1 cup:1", "--deform"}),
                  ParseError);
  CHECK_THROWS_AS(parse_command({"invariant", "--model", "jones", "--braid", "strands=1;", "--deform"}), ParseError);
  CHECK_THROWS_AS(parse_command({"invariant", "--model", "jones", "--braid", "strands=1;", "--q", "2"}), ParseError);
  CHECK_THROWS_AS(parse_command({"invariant", "--model", "tau-deform", "--braid", "strands=1;", "--cocycle", "chi"}),
                  ParseError);
  CHECK_THROWS_AS(parse_command({"check", "--model", "bracket", "--B", "2"}), ParseError);
  CHECK_THROWS_AS(parse_command({"invariant", "--model", "jones", "--braid", "strands=1;", "--suite", "ybe"}),
                  ParseError);
  CHECK_THROWS_AS(parse_command({"jones", "--model", "alexander", "--braid", "strands=1;"}), ParseError);
  CHECK_THROWS_AS(parse_command({"--batch", "x", "--seed", "4"}), ParseError);
  CHECK_NOTHROW(parse_command({"check", "--model", "tau-deform"}));
  CHECK_NOTHROW(parse_command({"jones", "--braid", "strands=1;"}));
}

TEST_CASE("split_line") {
  CHECK(split_line("invariant --braid \"strands=2; 1 1\"") == Args{"invariant", "--braid", "strands=2; 1 1"});
  CHECK(split_line("  a  'b c'  \"\" ") == Args{"a", "b c", ""});
  CHECK(split_line("").empty());
  CHECK_THROWS_AS(split_line("a \"b"), ParseError);
}

TEST_CASE("command outputs") {
  Outcome tau = run_main({"invariant", "--model", "tau-deform", "--braid", "strands=2; 1 1"});
  CHECK(tau.status == 0);
  CHECK(tau.output == "4 + 4*q*h\n");
  CHECK(run_main({"invariant", "--model", "tau-deform", "--braid", "strands=2; 1 1", "--q", "1"}).output ==
        "4 + 4*h\n");
  CHECK(run_main({"invariant", "--model", "jones", "--braid", "strands=1;"}).output == "h + h^-1\n");
  CHECK(run_main({"invariant", "--model", "quandle:F4", "--braid", "strands=2; 1 1 1"}).output == "16 + 18*h\n");
  CHECK(run_main({"jones", "--braid", "strands=2; 1 1 1"}).output == "h: h^2 + h^6 - h^8\nt: t + t^3 - t^4\n");
  CHECK(run_main({"alexander", "--braid", "strands=3; 1 -2 1 -2"}).output ==
        "h: 1 - 3*h^2 + h^4\nt: 1 - 3*t + t^2\n");
  Outcome s = run_main({"invariant", "--model", "quandle:F4", "--braid", "strands=2; 1 1 1", "--format", "structured"});
  CHECK(s.output.find("colorings = 16\n") != std::string::npos);
  CHECK(s.output.find("classical = 4 + 12*z\n") != std::string::npos);
  CHECK(s.output.find("state_sum_agrees = true\n") != std::string::npos);
  Outcome br = run_main({"invariant", "--model", "bracket", "--morse", "cap:1 cup:1"});
  CHECK(br.output == "1\n");
  CHECK(run_main({"oracle", "--model", "jones", "--braid", "strands=2; 1 1 1"}).output == "h^2 + h^6 - h^8\n");
}

TEST_CASE("exit codes") {
  CHECK(run_main({"invariant", "--model", "nope"}).status == 2);
  Outcome help = run_main({"--help"});
  CHECK(help.status == 0);
  CHECK(help.output.find("--model") != std::string::npos);
  CHECK(run_main({"invariant", "--model", "nope"}).output.rfind("error: ", 0) == 0);
  CHECK(run_main({"oracle", "--model", "tau-deform", "--braid", "strands=1;"}).status == 2);
  CHECK(run_main({"invariant", "--model", "jones", "--input", "/nonexistent/braid.txt"}).status == 2);
  CHECK(run_main({"check", "--model", "tau-deform", "--suite", "eybo"}).status == 0);
  CHECK(run_main({"check", "--model", "alexander", "--suite", "eybo"}).status == 1);
}

TEST_CASE("determinism and batch") {
  Args args{"check", "--model", "jones", "--suite", "markov", "--trials", "5", "--seed", "7"};
  CHECK(run_main(args).output == run_main(args).output);
  std::string braid = temp_file("braid.txt", "strands=2; 1 1\n");
  std::string jobs = temp_file("jobs.txt",
                               "# comment\n"
                               "invariant --model tau-deform --braid \"strands=2; 1 1\"\n"
                               "\n"
                               "invariant --model jones --input " + braid + "\n"
                               "invariant --model nope\n");
  Outcome out = run_batch(jobs, 2);
  CHECK(out.status == 2);
  CHECK(out.output.rfind("4 + 4*q*h\n", 0) == 0);
  CHECK(out.output.find("error: ") != std::string::npos);
  CHECK(run_batch(jobs, 1).output == out.output);
  CHECK(run_main({"--batch", jobs}).output == out.output);
  std::remove(braid.c_str());
  std::remove(jobs.c_str());
}
