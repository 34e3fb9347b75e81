#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rookmn/cli.hpp"

using rookmn::run_cli;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return CliResult{code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += (c == '\n') ? 1 : 0;
  return n;
}

struct TempFile {
  std::string path;
  explicit TempFile(std::string p) : path(std::move(p)) {}
  ~TempFile() { std::remove(path.c_str()); }
  void write(const std::string& content) const {
    std::ofstream f(path, std::ios::binary);
    f << content;
  }
  std::string read() const {
    std::ifstream f(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
};

}  // namespace

TEST_CASE("mul multiplies in a finite or unbounded ambient") {
  CliResult r = cli({"mul", "-n", "6", "<1,1,3>", "<2,3,4>"});
  CHECK(r.code == 0);
  CHECK(r.out == "<3,2,3>\n");
  CHECK(r.err.empty());

  r = cli({"mul", "<1,1,3>", "<2,3,4>"});
  CHECK(r.code == 0);
  CHECK(r.out == "<3,2,3>\n");

  r = cli({"mul", "-n", "2", "<1,1,1>", "<1,1,1>"});
  CHECK(r.out == "0\n");
}

TEST_CASE("elements can be given and printed as json") {
  CliResult r = cli({"mul", "-n", "6", "--format", "json", R"({"d":1,"k":1,"m":3})", "<2,3,4>"});
  CHECK(r.code == 0);
  CHECK(r.out == R"({"d":3,"k":2,"m":3})" "\n");

  r = cli({"mul", "-n", "2", "--format", "json", "<1,1,1>", R"("zero")"});
  CHECK(r.code == 0);
  CHECK(r.out == "\"zero\"\n");

  r = cli({"mul", "-n", "2", R"({"d":1,"k":1})", "0"});
  CHECK(r.code == 1);
  CHECK(r.err.find("error:") == 0);
}

TEST_CASE("bad elements and out-of-range ambients exit with code 1") {
  CliResult r = cli({"mul", "<0,2,1>", "0"});
  CHECK(r.code == 1);
  CHECK(r.err.find("error:") == 0);

  r = cli({"mul", "-n", "2", "<1,1,2>", "0"});  // valid triplet, too big for n=2
  CHECK(r.code == 1);
  CHECK(r.err.find("not valid for n=2") != std::string::npos);

  r = cli({"pow", "<1,1,1>", "0"});
  CHECK(r.code == 1);
}

TEST_CASE("pow uses the closed form even for enormous exponents") {
  CliResult r = cli({"pow", "-n", "4", "<1,1,3>", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "<2,1,2>\n");

  r = cli({"pow", "<1,2,5>", "1000000000000000"});
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");

  r = cli({"pow", "<0,2,5>", "1000000000000000"});
  CHECK(r.out == "<0,2,5>\n");
}

TEST_CASE("root prints the unique root or reports there is none") {
  CliResult r = cli({"root", "-n", "6", "<3,2,3>", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "<1,2,5>\n");

  r = cli({"root", "-n", "6", "<3,2,3>", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "none\n");

  r = cli({"root", "-n", "6", "--format", "json", "<3,2,3>", "2"});
  CHECK(r.out == "null\n");

  r = cli({"root", "0", "2"});
  CHECK(r.code == 1);
}

TEST_CASE("classify names the class and reports nilpotency indices") {
  CHECK(cli({"classify", "-n", "4", "<1,1,3>"}).out == "nilpotent index=4\n");
  CHECK(cli({"classify", "-n", "4", "<0,1,4>"}).out == "identity\n");
  CHECK(cli({"classify", "<0,1,4>"}).out == "idempotent\n");
  CHECK(cli({"classify", "0"}).out == "zero\n");

  CliResult r = cli({"classify", "-n", "4", "--format", "json", "<1,1,3>"});
  CHECK(r.out == R"({"index":4,"kind":"nilpotent"})" "\n");
  r = cli({"classify", "--format", "json", "0"});
  CHECK(r.out == R"({"kind":"zero"})" "\n");
}

TEST_CASE("transpose and commutes wrap the element algebra") {
  CHECK(cli({"transpose", "<1,1,3>"}).out == "<-1,2,4>\n");
  CHECK(cli({"transpose", "0"}).out == "0\n");
  CHECK(cli({"commutes", "<0,1,5>", "<0,3,9>"}).out == "true\n");
  CHECK(cli({"commutes", "-n", "2", "<1,1,1>", "<0,1,1>"}).out == "false\n");
}

TEST_CASE("enumerate lists families and counts them") {
  CliResult r = cli({"enumerate", "-n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "0\n<-1,2,2>\n<0,1,1>\n<0,1,2>\n<0,2,2>\n<1,1,1>\n");

  r = cli({"enumerate", "-n", "2", "--family", "SUF", "--format", "json"});
  CHECK(r.out == R"(["zero",{"d":1,"k":1,"m":1}])" "\n");

  // Orders with a closed form skip materialization entirely.
  // n^3/3 + n^2/2 + n/6 + 1 at n = 100000, straight off the formula.
  r = cli({"enumerate", "-n", "100000", "--family", "Mn", "--count"});
  CHECK(r.code == 0);
  CHECK(r.out == "333338333350001\n");

  r = cli({"enumerate", "-n", "5", "--family", "B", "--count"});
  CHECK(r.out == "26\n");

  CHECK(cli({"enumerate", "-n", "301"}).code == 1);
  CHECK(cli({"enumerate", "-n", "4", "--family", "nope"}).code == 1);
  CHECK(cli({"enumerate", "-n", "4", "--family", "AtMostJOnes(9)"}).code == 1);
  CHECK(cli({"enumerate"}).code == 1);  // -n is required
}

TEST_CASE("cayley renders tables to stdout or a file") {
  CliResult r = cli({"cayley", "-n", "2", "--family", "Sn"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 7);  // header, rule, five element rows
  CHECK(r.out.find("| 0") != std::string::npos);

  r = cli({"cayley", "-n", "2", "--family", "Sn", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 4) == "*,0,");
  CHECK(count_lines(r.out) == 6);

  const TempFile file("cli_test_cayley.csv");
  r = cli({"cayley", "-n", "2", "--family", "Sn", "--format", "csv", "-o", file.path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(file.read().substr(0, 4) == "*,0,");

  r = cli({"cayley", "-n", "20", "--family", "Mn"});  // 2871 elements
  CHECK(r.code == 1);
  CHECK(r.err.find("at most") != std::string::npos);
}

TEST_CASE("census emits csv plus a stderr note about the direct cross-check") {
  CliResult r = cli({"census", "2", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("n,psi_reduced,psi_conjecture,conjecture_ok,ratio,ratio_closed_form\n") == 0);
  CHECK(r.out.find("2,17,17,true,1/2,1/2\n") != std::string::npos);
  CHECK(r.out.find("5,1681,1681,true,131/243,131/243\n") != std::string::npos);
  CHECK(r.err ==
        "direct route ran for n=2..5 and agreed with the reduced route\n"
        "ratio_closed_form is conditional on the degree-7 pair-count polynomial;\n"
        "conjecture_ok records where that polynomial was verified by counting\n");

  r = cli({"census", "2", "4", "--budget-direct", "0"});
  CHECK(r.code == 0);
  CHECK(r.err.find("direct route") == std::string::npos);
  CHECK(r.err.find("conditional") != std::string::npos);

  const TempFile csv("cli_test_census.csv");
  const TempFile plot("cli_test_census.dat");
  r = cli({"census", "2", "3", "--csv", csv.path, "--gnuplot", plot.path});
  CHECK(r.code == 0);
  CHECK(csv.read() == r.out);
  CHECK(plot.read() ==
        "# n ratio\n"
        "2 0.500000\n"
        "3 0.538462\n");

  CHECK(cli({"census", "1", "5"}).code == 1);
  CHECK(cli({"census", "5", "2"}).code == 1);
}

TEST_CASE("verify runs a named suite and reports per-check lines") {
  CliResult r = cli({"verify", "--suite", "counts", "--n-max", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[ ok ]") != std::string::npos);
  CHECK(r.out.find("CHECKS FAILED") == std::string::npos);
  const std::string tail = "all checks passed\n";
  CHECK(r.out.rfind(tail) == r.out.size() - tail.size());

  CHECK(cli({"verify", "--suite", "bogus"}).code == 1);
  CHECK(cli({"verify", "--n-max", "1"}).code == 1);
}

TEST_CASE("render draws single elements and product traces") {
  CliResult r = cli({"render", "<1,1,3>", "-n", "6"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "1   2   3   4   5   6\n"
        " \\   \\   \\\n"
        "  \\   \\   \\\n"
        "   \\   \\   \\\n"
        "1   2   3   4   5   6\n");

  r = cli({"render", "<1,1,3>", "-n", "6", "--format", "svg"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 5) == "<svg ");

  r = cli({"render", "<1,1,3>", "<2,3,4>", "-n", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("stroke=\"crimson\"") != std::string::npos);

  const TempFile file("cli_test_render.svg");
  r = cli({"render", "<1,1,3>", "<2,3,4>", "-n", "6", "-o", file.path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(file.read().substr(0, 5) == "<svg ");

  CHECK(cli({"render", "<1,1,3>", "<2,3,4>", "-n", "6", "--format", "ascii"}).code == 1);
  CHECK(cli({"render", "<1,1,3>", "-n", "201"}).code == 1);
  CHECK(cli({"render", "<1,1,3>", "-n", "3"}).code == 1);  // element too big for n
}

TEST_CASE("from-matrix recognizes block-diagonal patterns from a file") {
  const TempFile file("cli_test_matrix.txt");
  file.write("0100\n0010\n0001\n0000\n");
  CliResult r = cli({"from-matrix", file.path});
  CHECK(r.code == 0);
  CHECK(r.out == "<1,1,3>\n");

  r = cli({"from-matrix", file.path, "--format", "json"});
  CHECK(r.out == R"({"d":1,"k":1,"m":3})" "\n");

  file.write("100\n001\n000\n");  // two separate diagonals: a rook matrix,
  r = cli({"from-matrix", file.path});  // but not one of ours
  CHECK(r.code == 0);
  CHECK(r.out == "none\n");

  file.write("11\n00\n");
  CHECK(cli({"from-matrix", file.path}).code == 1);

  CHECK(cli({"from-matrix", "does_not_exist.txt"}).code == 1);
}

TEST_CASE("usage errors and help follow the exit-code contract") {
  CHECK(cli({}).code == 1);
  CHECK(cli({"not-a-command"}).code == 1);
  CHECK(cli({"mul", "<1,1,1>"}).code == 1);  // missing y
  CHECK(cli({"mul", "-n", "6", "--format", "yaml", "0", "0"}).code == 1);

  CliResult r = cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rookmn") != std::string::npos);
  CHECK(cli({"census", "--help"}).code == 0);
}
