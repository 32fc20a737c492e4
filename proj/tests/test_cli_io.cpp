#include <doctest.h>

#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "oracles.hpp"
#include "roofbasis/io.hpp"
#include "roofbasis/roof.hpp"

using namespace roofbasis;

namespace {

const char* kBigLiteral = "n=5;<=0;3,4,7,10,12,14,17,18,23,27,32,33,35,37";

IntegerSet big_example() {
  return canonicalize(5, 0, {3, 4, 7, 10, 12, 14, 17, 18, 23, 27, 32, 33, 35, 37});
}

std::string big_word_compact() {
  std::string w = "2,1,3,2,0";
  for (int k = 0; k < 9; ++k) w += ",4,3,2,1,0";
  w += ",4";
  return w;
}

}  // namespace

TEST_CASE("set literal round trip") {
  IntegerSet j = big_example();
  CHECK(format_set(j) == kBigLiteral);
  CHECK(parse_set(kBigLiteral) == j);

  CHECK(format_set(lowest_set(2, 3)) == "n=2;<=3;");
  CHECK(parse_set("n=2;<=3;") == lowest_set(2, 3));
  CHECK(parse_set(" n=2;<= -1 ; 1 , 2 ") == canonicalize(2, -1, {1, 2}));

  // non-canonical input is normalized
  CHECK(parse_set("n=2;<=0;1,2,5") == canonicalize(2, 0, {1, 2, 5}));
  CHECK(parse_set("n=2;<=0;1,2,5").tail == 2);

  std::mt19937_64 rng(101);
  for (int t = 0; t < 200; ++t) {
    IntegerSet x = testutil::random_bounded(rng, 2 + t % 4, t % 9 - 4, 8);
    CHECK(parse_set(format_set(x)) == x);
  }
}

TEST_CASE("set literal parse errors") {
  CHECK_THROWS_AS(parse_set(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_set("garbage"), std::invalid_argument);
  CHECK_THROWS_AS(parse_set("n=2;3,4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_set("n=2;<=x;3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_set("n=1;<=0;"), std::invalid_argument);
  CHECK_THROWS_AS(parse_set("n=2;<=0;3a"), std::invalid_argument);
}

TEST_CASE("json round trips") {
  IntegerSet j = big_example();
  CHECK(set_from_json(set_to_json(j)) == j);
  CHECK_THROWS_AS(set_from_json(nlohmann::json{{"n", 2}}), std::invalid_argument);

  nlohmann::json w = weight_to_json(weight(j));
  CHECK(w.contains("label"));
  CHECK(w.contains("alpha"));
}

TEST_CASE("word formatting and parsing") {
  ReducedWord w{2, {1, 0}};
  CHECK(format_word(w) == "s1 s0");
  CHECK(format_word_compact(w) == "1,0");
  CHECK(format_word(ReducedWord{2, {}}) == "e");

  CHECK(parse_word(2, "1,0") == w);
  CHECK(parse_word(2, "1 0") == w);
  CHECK(parse_word(2, "s1 s0") == w);
  CHECK(parse_word(5, big_word_compact()).letters.size() == 51);
  CHECK_THROWS_AS(parse_word(3, "0,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word(3, "0,x"), std::invalid_argument);
}

TEST_CASE("term dump is lex-descending and bit-exact") {
  FockVector v;
  v[lowest_set(2, 2)] = -1;
  v[canonicalize(2, 0, {2, 4})] = 3;
  CHECK(term_dump(v) == "3 * n=2;<=0;2,4\n-1 * n=2;<=2;\n");

  // every line parses back
  std::string dump = term_dump(v);
  size_t pos = 0;
  int lines = 0;
  while (pos < dump.size()) {
    size_t eol = dump.find('\n', pos);
    std::string line = dump.substr(pos, eol - pos);
    size_t sep = line.find(" * ");
    REQUIRE(sep != std::string::npos);
    IntegerSet k = parse_set(line.substr(sep + 3));
    Coeff c(line.substr(0, sep));
    CHECK(coefficient(v, k) == c);
    pos = eol + 1;
    ++lines;
  }
  CHECK(lines == 2);
}

TEST_CASE("dot exports") {
  IntegerSet j = canonicalize(2, -1, {1, 2});
  RoofResult rr = roof(j);
  std::string chain = dot_chain(j, rr.steps);
  CHECK(chain.find("digraph") != std::string::npos);
  CHECK(chain.find("2->3") != std::string::npos);

  std::vector<IntegerSet> fam = demazure_bottom_up(canonicalize(2, 0, {2, 4}));
  std::string graph = dot_crystal(fam);
  CHECK(graph.find("digraph") != std::string::npos);
  // four vertices, three lowering edges along the chain
  CHECK(graph.find("n=2;<=2;") != std::string::npos);
  CHECK(graph.find("label=\"0\"") != std::string::npos);
  CHECK(graph.find("label=\"1\"") != std::string::npos);
}

#ifdef CLI_BIN

namespace {

std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd = std::string(CLI_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int rc = pclose(pipe);
  const int code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return {code, out};
}

}  // namespace

TEST_CASE("cli: roof of the n=5 example") {
  auto [code, out] = run_cli(std::string("roof '") + kBigLiteral + "' --ceiling");
  CHECK(code == 0);
  CHECK(out.find("(35,38) (33,42) (38,47)") != std::string::npos);
  CHECK(out.find("steps: 44") != std::string::npos);
  CHECK(out.find("word length: 51") != std::string::npos);
  CHECK(out.find("agree: yes") != std::string::npos);
}

TEST_CASE("cli: roof of a vacuum is trivial") {
  auto [code, out] = run_cli("roof 'n=5;<=14;'");
  CHECK(code == 0);
  CHECK(out.find("trace: (empty)") != std::string::npos);
  CHECK(out.find("word length: 0") != std::string::npos);
}

TEST_CASE("cli: json output parses") {
  auto [code, out] = run_cli(std::string("--json roof '") + kBigLiteral + "'");
  CHECK(code == 0);
  nlohmann::json doc = nlohmann::json::parse(out);
  CHECK(doc["steps"] == 44);
  CHECK(doc["word_length"] == 51);
  CHECK(set_from_json(doc["roof"]) ==
        canonicalize(5, 0, {3, 4, 8, 13, 18, 23, 28, 33, 38, 43, 48, 53, 58, 63}));
}

TEST_CASE("cli: demazure generation and membership") {
  auto [code, out] = run_cli("demazure --word 0 --n 2 --mode both");
  CHECK(code == 0);
  CHECK(out.find("elements: 2") != std::string::npos);
  CHECK(out.find("agree: yes") != std::string::npos);

  auto [code1, out1] = run_cli("demazure --word '' --n 2");
  CHECK(code1 == 0);
  CHECK(out1.find("elements: 1") != std::string::npos);

  auto [code2, out2] = run_cli(std::string("demazure --word '") + big_word_compact() +
                               "' --n 5 --m 14 --mode top-down --contains '" + kBigLiteral + "'");
  CHECK(code2 == 0);
  CHECK(out2.find("contains: true") != std::string::npos);

  auto [code3, out3] = run_cli("demazure --word 0,0 --n 2");
  CHECK(code3 == 1);
  CHECK(out3.find("not reduced") != std::string::npos);
}

TEST_CASE("cli: expansion and coefficients") {
  auto [code, out] = run_cli("expand 'n=2;<=3;'");
  CHECK(code == 0);
  CHECK(out == "1 * n=2;<=3;\n");

  auto [code1, out1] = run_cli("expand 'n=2;<=-1;1,2'");
  CHECK(code1 == 0);
  CHECK(out1 == "1 * n=2;<=-1;1,2\n1 * n=2;<=0;3\n");

  auto [code2, out2] = run_cli("coeff 'n=2;<=-1;1,2' 'n=2;<=0;3'");
  CHECK(code2 == 0);
  CHECK(out2 == "1\n");
}

TEST_CASE("cli: verify suite") {
  auto [code, out] = run_cli("verify roof-ceiling --n 2 --height 8");
  CHECK(code == 0);
  CHECK(out.find("0 failures") != std::string::npos);
  CHECK(out.find("verify: PASS") != std::string::npos);
}

TEST_CASE("cli: errors carry the documented exit codes") {
  auto [code, out] = run_cli("roof 'garbage'");
  CHECK(code == 1);
  CHECK(out.find("error:") != std::string::npos);

  auto [code1, out1] = run_cli("roof 'n=2;<=0;5'");  // not bounded
  CHECK(code1 == 1);

  auto [code2, out2] = run_cli("nonsense");
  CHECK(code2 == 1);

  auto [code3, out3] = run_cli("");
  CHECK(code3 == 1);
}

#endif  // CLI_BIN
