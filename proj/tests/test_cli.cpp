#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#ifndef PARTBIJ_CLI_PATH
#error "PARTBIJ_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI through the shell and captures stdout (stderr discarded).
RunResult run(const std::string& args, const std::string& stdin_text = "") {
  std::string cmd = std::string(PARTBIJ_CLI_PATH) + " " + args + " 2>/dev/null";
  if (!stdin_text.empty())
    cmd = "printf '%s\\n' \"" + stdin_text + "\" | " + cmd;
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string first_line(const std::string& s) {
  return s.substr(0, s.find('\n'));
}

std::string last_line(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  const auto pos = s.rfind('\n');
  return pos == std::string::npos ? s : s.substr(pos + 1);
}

}  // namespace

TEST_CASE("map golden examples") {
  RunResult r = run("map --bijection new --input \"13^4,11^2,9,5^5,3^3,1^4\"");
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.out) == "28,22,20,16,13,7,6,4,3,2");

  r = run("map --bijection new --inverse --input \"17,16,14,10,7,4,2,1\"");
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.out) == "21,11^2,9,5^2,3^3");

  r = run("map --bijection glaisher --input \"1\"");
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.out) == "1");

  r = run("map --bijection glaisher --input \"7^13,5^3,3^2,1^5\"");
  CHECK(first_line(r.out) == "56,28,10,7,6,5,4,1");

  r = run("map --bijection sylvester --input \"13^2,11,5^2,3,1^2\"");
  CHECK(first_line(r.out) == "14,11,10,8,6,3");

  r = run("map --bijection bressoud --input \"29,21,19,17,13,11,7,5,1\"");
  CHECK(first_line(r.out) == "23,21,17,15,11,10,9,7,5,4,1");

  r = run("map --bijection sylvester --inverse --input \"14,11,10,8,6,3\"");
  CHECK(first_line(r.out) == "13^2,11,5^2,3,1^2");

  r = run("map --bijection bressoud --inverse --input \"7,5,3,2\"");
  CHECK(first_line(r.out) == "9,5,3");
}

TEST_CASE("map domain violations exit with 2") {
  RunResult r = run("map --bijection glaisher --input \"2\"");
  CHECK(r.exit_code == 2);
  r = run("map --bijection bressoud --input \"3,3\"");
  CHECK(r.exit_code == 2);
  r = run("map --bijection new --inverse --input \"3,3\"");
  CHECK(r.exit_code == 2);
  r = run("map --bijection bogus --input \"1\"");
  CHECK(r.exit_code == 2);
  r = run("map --bijection new --input \"5,,3\"");
  CHECK(r.exit_code == 2);
  r = run("bogus-subcommand");
  CHECK(r.exit_code == 2);
}

TEST_CASE("map reads stdin and prints stats") {
  RunResult r = run("map --bijection new --input -", "9,5,3");
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.out) == "7,5,3,2");

  r = run("map --bijection new --input \"9,5,3\" --stats");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "7,5,3,2\n"
                 "in:  length=3 odd_parts=3 alt_sum=7 odd_mult_parts=3 odd_runs=1\n"
                 "out: length=4 odd_parts=3 alt_sum=3 odd_mult_parts=4 odd_runs=1\n");
}

TEST_CASE("map json output") {
  const RunResult r = run("map --bijection new --input \"1,1\" --json");
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.out) ==
        R"({"input":[1,1],"output":[2],"stats_in":{"alt_sum":0,"length":2,"odd_mult_parts":0,"odd_parts":2,"odd_runs":0},"stats_out":{"alt_sum":2,"length":1,"odd_mult_parts":1,"odd_parts":0,"odd_runs":0}})");
}

TEST_CASE("trace output") {
  RunResult r = run("trace --bijection bressoud --input \"29,21,19,17,13,11,7,5,1\"");
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.out) == "15,14 | 21,19 | 9,8 | 13,11 | 7,5 | 1,0");
  CHECK(last_line(r.out) == "23,21 | 17,15 | 11,10 | 9,7 | 5,4 | 1,0");

  r = run("trace --bijection sylvester --input \"13^2,11,5^2,3,1^2\"");
  CHECK(r.exit_code == 0);
  CHECK(last_line(r.out) == "14,11 | 10,8 | 6,3");
  // one stanza per part, separated by blank lines
  std::size_t blanks = 0;
  for (std::size_t pos = 0; (pos = r.out.find("\n\n", pos)) != std::string::npos; ++pos)
    ++blanks;
  CHECK(blanks == 7);

  r = run("trace --bijection new --input \"1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1,0\n");

  r = run("trace --bijection glaisher --input \"1\"");
  CHECK(r.exit_code == 2);
  r = run("trace --bijection sylvester --inverse --input \"2,1\"");
  CHECK(r.exit_code == 2);
}

TEST_CASE("help exits cleanly") {
  CHECK(run("--help").exit_code == 0);
  CHECK(run("map --help").exit_code == 0);
}

TEST_CASE("diagram output") {
  RunResult r = run("diagram --style young --input \"3,2\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "###\n##\n");

  r = run("diagram --style sylvester --input \"13^2,11,5^2,3,1^2\"");
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.out) == "#############");

  r = run("diagram --style shifted2 --input \"28,22,20,16,13,7,6,4,3,2\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "22222222222222\n"
                 "  22222222222\n"
                 "  2222222222\n"
                 "   22222222\n"
                 "   2222221\n"
                 "     2221\n"
                 "     222\n"
                 "     22\n"
                 "     21\n"
                 "     2\n");

  r = run("diagram --style shifted --input \"14,11,10,8,6,3\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "##############\n"
                 "  ###########\n"
                 "  ##########\n"
                 "   ########\n"
                 "   ######\n"
                 "     ###\n");

  r = run("diagram --style 2modular --input \"5,4\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "221\n22\n");

  r = run("diagram --style sylvester --input \"2,1\"");
  CHECK(r.exit_code == 2);
  r = run("diagram --style bogus --input \"1\"");
  CHECK(r.exit_code == 2);
}

TEST_CASE("trace of the inverse pairing map") {
  const RunResult r = run("trace --bijection bressoud --inverse "
                          "--input \"23,21,17,15,11,10,9,7,5,4,1\"");
  CHECK(r.exit_code == 0);
  CHECK(last_line(r.out) == "15,14 | 21,19 | 9,8 | 13,11 | 7,5 | 1,0");
}

TEST_CASE("count output") {
  RunResult r = run("count --max-n 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "n\tO\tD\tOD\tS\tSR\tDle2\tODS\n0\t1\t1\t1\t1\t1\t1\t1\n");

  r = run("count --max-n 10 --classes O,D --format csv");
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.out) == "n,O,D\r");
  CHECK(r.out.find("10,10,10\r\n") != std::string::npos);

  r = run("count --max-n 3 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"n\":3") != std::string::npos);

  r = run("count --max-n 5 --classes O,Bogus");
  CHECK(r.exit_code == 2);
}

TEST_CASE("verify output") {
  RunResult r = run("verify --max-n 30");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("new: checked=2035 failures=0") != std::string::npos);
  CHECK(r.out.find("bressoud: checked=181 failures=0") != std::string::npos);

  r = run("verify --max-n 1");
  CHECK(r.exit_code == 0);

  r = run("verify --max-n 12 --bijection sylvester-agreement");
  CHECK(r.exit_code == 0);
  CHECK(first_line(r.out).find("sylvester-agreement: checked=") == 0);

  r = run("verify --max-n 5 --bijection bogus");
  CHECK(r.exit_code == 2);
}
