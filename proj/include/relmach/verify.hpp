#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relmach/machine.hpp"
#include "relmach/square.hpp"

namespace relmach::verify {

/// Deterministic splitmix64 stream; identical output on every platform, so
/// failures replay from (seed, criterion, trial) alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  int below(int n);             // uniform in [0, n)
  int between(int lo, int hi);  // uniform in [lo, hi]
  bool coin() { return next() >> 63; }

 private:
  std::uint64_t state_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t criterion, std::uint64_t trial);

/// Random machines: each (symbol,state) rule is present with probability
/// 1/2; present rules draw a uniformly random non-empty target set (and,
/// for rewrites, a non-empty output set).
Nfa random_nfa(Rng& rng, int max_states, int max_symbols);
TwoWayAutomaton random_twoway(Rng& rng, int max_states, int max_symbols);
Btm random_btm(Rng& rng, int max_states, int max_symbols);

/// Relation/square with each pair present with probability 1/2.
Rel random_rel(Rng& rng, const Carrier& dom, const Carrier& cod);
Square random_square(Rng& rng, const Carrier& c);

std::vector<int> random_word(Rng& rng, int alphabet_size, int min_len, int max_len);

struct Options {
  std::uint64_t seed = 42;
  int trials = -1;       // -1: per-criterion defaults; 0: skip randomized criteria
  int max_states = -1;   // -1: per-criterion defaults
  int max_symbols = -1;
  int max_length = -1;
  int threads = 0;       // 0: hardware default
  bool corrupt_vcompose = false;  // harness self-check: must make the suite fail
};

struct Failure {
  int trial = 0;
  std::uint64_t trial_seed = 0;
  std::string detail;  // includes the offending machine's serialization
};

struct CriterionResult {
  int id = 0;
  std::string name;
  int trials_run = 0;
  bool passed = true;
  bool skipped = false;
  std::optional<Failure> counterexample;
  double ms = 0.0;
};

/// Runs the whole differential property suite; deterministic given the
/// options. Every failure carries a replayable (seed, trial) pair and the
/// machine that broke the property.
std::vector<CriterionResult> run_all(const Options& opts);

}  // namespace relmach::verify
