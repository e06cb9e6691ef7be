#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "relmach/algebra.hpp"
#include "relmach/oracle.hpp"
#include "relmach/serialize.hpp"
#include "relmach/verify.hpp"

namespace {

using nlohmann::json;
using namespace relmach;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses a word against carrier labels: comma-separated names, or one
/// character per symbol when every label is a single character.
std::vector<int> parse_word(const Carrier& alphabet, const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  auto lookup = [&](const std::string& name) {
    const auto idx = alphabet.index_of(name);
    if (!idx) throw UsageError("unknown symbol '" + name + "'");
    return static_cast<int>(*idx);
  };
  if (text.find(',') != std::string::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = text.find(',', start);
      const std::string name = text.substr(start, end == std::string::npos ? end : end - start);
      out.push_back(lookup(name));
      if (end == std::string::npos) break;
      start = end + 1;
    }
    return out;
  }
  for (char c : text) out.push_back(lookup(std::string(1, c)));
  return out;
}

int parse_state(const Carrier& states, const std::string& text) {
  const auto idx = states.index_of(text);
  if (!idx) throw UsageError("unknown state '" + text + "'");
  return static_cast<int>(*idx);
}

struct Report {
  std::string command;
  std::string digest;
  json body = json::object();
  std::vector<std::string> lines;
  bool as_json = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void emit() const {
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (as_json) {
      json out = body;
      out["command"] = command;
      if (!digest.empty()) out["machine_digest"] = digest;
      out["elapsed_ms"] = ms;
      std::cout << out.dump(2) << "\n";
      return;
    }
    std::cout << "command: " << command << "\n";
    if (!digest.empty()) std::cout << "machine_digest: " << digest << "\n";
    for (const auto& line : lines) std::cout << line << "\n";
    std::cout << "elapsed_ms: " << ms << "\n";
  }
};

std::string join_args(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i) out += " ";
    out += argv[i];
  }
  return out;
}

void print_square(Report& report, const std::string& key, const Square& s) {
  if (report.as_json) {
    report.body[key] = square_to_json(s);
  } else {
    report.lines.push_back(key + ":");
    const std::string text = square_to_text(s, "  ");
    std::size_t start = 0;
    while (start < text.size()) {
      const std::size_t end = text.find('\n', start);
      report.lines.push_back(text.substr(start, end - start));
      start = end + 1;
    }
  }
}

int cmd_simulate(Report& report, const AnyMachine& machine, const std::string& input,
                 const std::string& start, std::optional<int> length, bool trace) {
  if (const auto* nfa = std::get_if<Nfa>(&machine)) {
    const auto word = parse_word(nfa->alphabet, input);
    const Rel t = nfa_hom(*nfa, word);
    if (report.as_json) {
      report.body["relation"] = rel_to_json(t);
    } else {
      report.lines.push_back("t(" + (input.empty() ? std::string("<empty>") : input) +
                             ") = " + rel_to_text(t));
    }
    return kExitOk;
  }
  if (const auto* mealy = std::get_if<Mealy>(&machine)) {
    if (start.empty()) throw UsageError("mealy simulation needs --start");
    const auto word = parse_word(mealy->alphabet, input);
    const auto results = mealy_run(*mealy, word, parse_state(mealy->states, start));
    json arr = json::array();
    for (const auto& [out_word, end_state] : results) {
      std::string text;
      for (int y : out_word) text += mealy->alphabet.label(static_cast<std::size_t>(y));
      const std::string state = mealy->states.label(static_cast<std::size_t>(end_state));
      arr.push_back({{"output", text}, {"end_state", state}});
      report.lines.push_back("output " + text + ", end state " + state);
    }
    if (report.as_json) report.body["results"] = arr;
    return kExitOk;
  }
  if (const auto* tw = std::get_if<TwoWayAutomaton>(&machine)) {
    const auto word = parse_word(tw->alphabet, input);
    if (word.empty()) throw UsageError("two_way simulation needs a non-empty --input");
    print_square(report, "square", twoway_oracle(*tw, word));
    if (trace) {
      for (const auto& edge : config_edges(*tw, word)) report.lines.push_back("  " + edge);
    }
    return kExitOk;
  }
  const auto& btm = std::get<Btm>(machine);
  if (!length) throw UsageError("btm simulation needs --length");
  print_square(report, "square", btm_oracle(btm, *length));
  if (trace) {
    for (const auto& edge : config_edges(btm, *length)) report.lines.push_back("  " + edge);
  }
  return kExitOk;
}

int cmd_monoid(Report& report, const AnyMachine& machine, std::size_t max_elements) {
  const auto* nfa = std::get_if<Nfa>(&machine);
  if (!nfa) throw UsageError("monoid enumeration needs an nfa machine file");
  const auto monoid = transition_monoid(*nfa, max_elements);
  if (!monoid.complete) {
    report.lines.push_back("bound exceeded: more than " + std::to_string(max_elements) +
                           " elements");
    report.body["bound_exceeded"] = true;
    return kExitVerifyFailed;
  }
  report.body["element_count"] = monoid.elements.size();
  report.lines.push_back("elements: " + std::to_string(monoid.elements.size()));
  json elements = json::array();
  for (std::size_t i = 0; i < monoid.elements.size(); ++i) {
    std::string word;
    for (int x : monoid.words[i]) word += nfa->alphabet.label(static_cast<std::size_t>(x));
    if (word.empty()) word = "<empty>";
    elements.push_back({{"word", word}, {"pairs", rel_to_json(monoid.elements[i])["pairs"]}});
    report.lines.push_back("  [" + std::to_string(i) + "] " + word + " : " +
                           rel_to_text(monoid.elements[i]));
  }
  report.lines.push_back("table:");
  json table = json::array();
  for (const auto& row : monoid.table) {
    std::string text = "  ";
    json jrow = json::array();
    for (int v : row) {
      text += std::to_string(v) + " ";
      jrow.push_back(v);
    }
    table.push_back(jrow);
    report.lines.push_back(text);
  }
  report.body["elements"] = elements;
  report.body["table"] = table;
  return kExitOk;
}

int cmd_global(Report& report, const AnyMachine& machine, const std::string& word_text) {
  const auto* tw = std::get_if<TwoWayAutomaton>(&machine);
  if (!tw) throw UsageError("global relations need a two_way machine file");
  const auto word = parse_word(tw->alphabet, word_text);
  if (word.empty()) throw UsageError("global relations need a non-empty word");
  print_square(report, "square", word_square(*tw, word));
  return kExitOk;
}

int cmd_comprel(Report& report, const AnyMachine& machine, int n, const std::string& method) {
  const auto* btm = std::get_if<Btm>(&machine);
  if (!btm) throw UsageError("computation relations need a btm machine file");
  if (n < 0) throw UsageError("tape length must be non-negative");
  if (method != "oracle" && method != "algebra" && method != "both") {
    throw UsageError("--method must be oracle, algebra or both");
  }
  if (method == "oracle" || method == "both") {
    print_square(report, "oracle", btm_oracle(*btm, n));
  }
  if (method == "algebra" || method == "both") {
    print_square(report, "algebra", computation_square(*btm, n).square);
  }
  if (method == "both") {
    const bool match = btm_oracle(*btm, n) == computation_square(*btm, n).square;
    report.lines.push_back(match ? "MATCH" : "MISMATCH");
    report.body["match"] = match;
    return match ? kExitOk : kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_verify(Report& report, const verify::Options& opts) {
  const auto results = verify::run_all(opts);
  bool all_passed = true;
  int skipped = 0;
  json arr = json::array();
  for (const auto& r : results) {
    std::string status = r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL");
    if (r.skipped) ++skipped;
    all_passed = all_passed && (r.passed || r.skipped);
    char line[160];
    std::snprintf(line, sizeof(line), "criterion %2d  %-58s %s", r.id, r.name.c_str(),
                  status.c_str());
    report.lines.push_back(line);
    json jr{{"id", r.id}, {"name", r.name}, {"status", status}, {"trials", r.trials_run}};
    if (r.counterexample) {
      report.lines.push_back("  trial " + std::to_string(r.counterexample->trial) + " (seed " +
                             std::to_string(r.counterexample->trial_seed) + "):");
      report.lines.push_back(r.counterexample->detail);
      jr["counterexample"] = {{"trial", r.counterexample->trial},
                              {"trial_seed", r.counterexample->trial_seed},
                              {"detail", r.counterexample->detail}};
    }
    arr.push_back(std::move(jr));
  }
  if (skipped > 0) {
    report.lines.push_back("warning: " + std::to_string(skipped) +
                           " randomized criteria skipped (0 trials), passing vacuously");
  }
  report.lines.push_back(all_passed ? "result: PASS" : "result: FAIL");
  report.body["criteria"] = arr;
  report.body["result"] = all_passed ? "PASS" : "FAIL";
  return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"algebraic models of automata, two-way machines and bounded Turing machines"};
  app.require_subcommand(1);

  std::string machine_path, input, start, word, method = "algebra";
  std::optional<int> length;
  int comprel_n = 0;
  bool trace = false, as_json = false;
  std::size_t max_elements = 10000;
  verify::Options vopts;
  int user_trials = -1;

  auto* simulate = app.add_subcommand("simulate", "run a machine file on an input");
  simulate->add_option("machine", machine_path, "machine file")->required();
  simulate->add_option("--input", input, "input word (chars or comma-separated labels)");
  simulate->add_option("--start", start, "start state (mealy)");
  simulate->add_option("--length", length, "tape length (btm)");
  simulate->add_flag("--trace", trace, "dump the configuration graph edges");
  simulate->add_flag("--json", as_json, "structured output");

  auto* monoid = app.add_subcommand("monoid", "enumerate the transition monoid of an nfa");
  monoid->add_option("machine", machine_path, "machine file")->required();
  monoid->add_option("--max-elements", max_elements, "enumeration cap");
  monoid->add_flag("--json", as_json, "structured output");

  auto* global = app.add_subcommand("global", "global transition relations of a word");
  global->add_option("machine", machine_path, "two_way machine file")->required();
  global->add_option("word", word, "input word")->required();
  global->add_flag("--json", as_json, "structured output");

  auto* comprel = app.add_subcommand("comprel", "computation relations of a tape length");
  comprel->add_option("machine", machine_path, "btm machine file")->required();
  comprel->add_option("n", comprel_n, "tape length")->required();
  comprel->add_option("--method", method, "oracle, algebra or both");
  comprel->add_flag("--json", as_json, "structured output");

  auto* verify_cmd = app.add_subcommand("verify", "run the differential property suite");
  verify_cmd->add_option("--seed", vopts.seed, "base seed");
  verify_cmd->add_option("--trials", user_trials, "trials per randomized criterion")
      ->check(CLI::Range(0, 1000000));
  verify_cmd->add_option("--max-states", vopts.max_states, "state bound for random machines")
      ->check(CLI::Range(1, 12));
  verify_cmd->add_option("--max-symbols", vopts.max_symbols, "alphabet bound")
      ->check(CLI::Range(1, 12));
  verify_cmd->add_option("--max-length", vopts.max_length, "word/tape length bound")
      ->check(CLI::Range(1, 8));
  verify_cmd->add_option("--threads", vopts.threads, "worker threads (0 = auto)")
      ->check(CLI::Range(0, 256));
  verify_cmd->add_flag("--json", as_json, "structured output");
  verify_cmd->add_flag("--corrupt-vcompose", vopts.corrupt_vcompose, "")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Report report;
  report.command = join_args(argc, argv);
  report.as_json = as_json;

  try {
    int code = kExitOk;
    if (app.got_subcommand(verify_cmd)) {
      vopts.trials = user_trials;
      code = cmd_verify(report, vopts);
    } else {
      const AnyMachine machine = load_machine_file(machine_path);
      report.digest = digest_hex(machine_to_json(machine));
      const auto validation = std::visit([](const auto& m) { return validate(m); }, machine);
      if (!validation.ok) {
        for (const auto& e : validation.errors) std::cerr << "error: " << e << "\n";
        return kExitUsage;
      }
      if (app.got_subcommand(simulate)) {
        code = cmd_simulate(report, machine, input, start, length, trace);
      } else if (app.got_subcommand(monoid)) {
        code = cmd_monoid(report, machine, max_elements);
      } else if (app.got_subcommand(global)) {
        code = cmd_global(report, machine, word);
      } else if (app.got_subcommand(comprel)) {
        code = cmd_comprel(report, machine, comprel_n, method);
      }
    }
    report.emit();
    return code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
