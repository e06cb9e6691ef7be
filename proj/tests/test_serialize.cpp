#include <doctest.h>

#include <fstream>

#include "relmach/algebra.hpp"
#include "relmach/corpus.hpp"
#include "relmach/oracle.hpp"
#include "relmach/serialize.hpp"
#include "relmach/verify.hpp"

using namespace relmach;
using nlohmann::json;

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  json j;
  in >> j;
  return j;
}

}  // namespace

TEST_CASE("relation serialization is byte-stable and round-trips") {
  const Nfa m = corpus::three_state_machine();
  const json j = rel_to_json(m.step[1]);
  CHECK(j["pairs"] == json::parse(R"([["a","b"],["b","c"],["c","a"]])"));
  CHECK(rel_from_json(j) == m.step[1]);
  CHECK(rel_to_json(rel_from_json(j)).dump() == j.dump());

  json bad = j;
  bad["extra"] = 1;
  CHECK_THROWS_AS(rel_from_json(bad), ParseError);

  verify::Rng rng(7);
  auto labeled = [](const char* prefix, int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
    return Carrier(labels);
  };
  for (int trial = 0; trial < 50; ++trial) {
    const Carrier dom = labeled("d", rng.between(0, 4));
    const Carrier cod = labeled("c", rng.between(0, 4));
    const Rel r = verify::random_rel(rng, dom, cod);
    CHECK(rel_from_json(rel_to_json(r)) == r);
  }
}

TEST_CASE("square serialization round-trips") {
  const Square s = twoway_oracle(corpus::machine_e(), std::vector<int>{0});
  CHECK(square_from_json(square_to_json(s)) == s);

  verify::Rng rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const TwoWayAutomaton m = verify::random_twoway(rng, 3, 2);
    const Square r = resolution_letter(m, 0);
    CHECK(square_from_json(square_to_json(r)) == r);
  }
}

TEST_CASE("corpus files parse to the built-in machines") {
  const std::string dir = RELMACH_CORPUS_DIR;
  CHECK(std::get<Nfa>(load_machine_file(dir + "/sec2.machine")) ==
        corpus::three_state_machine());
  CHECK(std::get<Nfa>(load_machine_file(dir + "/sec2_1.machine")) == corpus::collapse_machine());
  CHECK(std::get<Nfa>(load_machine_file(dir + "/sec2_1_reversed.machine")) ==
        corpus::collapse_machine_reversed());
  CHECK(std::get<Mealy>(load_machine_file(dir + "/carry.machine")) == corpus::carry_machine());
  CHECK(std::get<Nfa>(load_machine_file(dir + "/carry_underlying.machine")) ==
        corpus::carry_underlying_machine());
  CHECK(std::get<Nfa>(load_machine_file(dir + "/identity_only.machine")) ==
        corpus::identity_only_machine());
  CHECK(std::get<TwoWayAutomaton>(load_machine_file(dir + "/machine_e.machine")) ==
        corpus::machine_e());
  CHECK(std::get<Btm>(load_machine_file(dir + "/flip.machine")) == corpus::flip_machine());
}

TEST_CASE("machine serialization round-trips and hashes are stable") {
  const AnyMachine machines[] = {corpus::three_state_machine(), corpus::carry_machine(),
                                 corpus::machine_e(), corpus::flip_machine()};
  for (const auto& m : machines) {
    const json j = machine_to_json(m);
    const AnyMachine back = machine_from_json(j);
    CHECK(machine_to_json(back).dump() == j.dump());
    CHECK(digest_hex(j) == digest_hex(machine_to_json(back)));
  }
  CHECK(digest_hex(machine_to_json(machines[0])) != digest_hex(machine_to_json(machines[1])));

  verify::Rng rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const AnyMachine m = verify::random_btm(rng, 3, 2);
    CHECK(machine_to_json(machine_from_json(machine_to_json(m))).dump() ==
          machine_to_json(m).dump());
  }
}

TEST_CASE("parser names the offending rule") {
  const std::string dir = RELMACH_CORPUS_DIR;
  try {
    load_machine_file(std::string(dir) + "/../tests/data/bad.machine");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    const std::string what = e.what();
    CHECK(what.find("rule #0") != std::string::npos);
    CHECK(what.find("'d'") != std::string::npos);
  }

  CHECK_THROWS_AS(machine_from_json(json{{"type", "nfa"}}), ParseError);
  CHECK_THROWS_AS(machine_from_json(json::parse(
                      R"({"type":"nfa","states":["a"],"alphabet":["f"],"rules":[],"x":1})")),
                  ParseError);
  CHECK_THROWS_AS(machine_from_json(json::parse(
                      R"({"type":"nfa","states":["a","a"],"alphabet":["f"],"rules":[]})")),
                  ParseError);
}

TEST_CASE("transition monoid of the three-state machine matches the golden file") {
  const json golden = load_json(std::string(RELMACH_GOLDEN_DIR) + "/sec2_monoid.json");
  const Nfa m = corpus::three_state_machine();
  const auto monoid = transition_monoid(m);
  REQUIRE(monoid.complete);
  CHECK(monoid.elements.size() == golden["element_count"].get<std::size_t>());
  for (std::size_t i = 0; i < monoid.elements.size(); ++i) {
    std::string word;
    for (int x : monoid.words[i]) word += m.alphabet.label(static_cast<std::size_t>(x));
    CHECK(word == golden["words"][i].get<std::string>());
    CHECK(rel_to_json(monoid.elements[i])["pairs"] == golden["elements"][i]);
    for (std::size_t j = 0; j < monoid.elements.size(); ++j) {
      CHECK(monoid.table[i][j] == golden["table"][i][j].get<int>());
    }
  }
}
