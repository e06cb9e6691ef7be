#include "relmach/machine.hpp"

#include <algorithm>
#include <stdexcept>

namespace relmach {

namespace {

std::string moving_set_note(const char* name, const Carrier& states,
                            const std::vector<bool>& members) {
  std::string out = std::string(name) + " = {";
  bool sep = false;
  for (std::size_t q = 0; q < members.size(); ++q) {
    if (!members[q]) continue;
    if (sep) out += ",";
    out += states.label(q);
    sep = true;
  }
  return out + "}";
}

void check_rule_map(const RuleMap& map, const char* name, std::size_t symbols,
                    std::size_t states, std::size_t target_bound,
                    ValidationReport& report) {
  if (map.size() != symbols) {
    report.errors.push_back(std::string(name) + ": expected one row per symbol");
    return;
  }
  for (std::size_t x = 0; x < symbols; ++x) {
    if (map[x].size() != states) {
      report.errors.push_back(std::string(name) + ": expected one cell per state");
      return;
    }
    for (std::size_t q = 0; q < states; ++q) {
      for (int t : map[x][q]) {
        if (t < 0 || static_cast<std::size_t>(t) >= target_bound) {
          report.errors.push_back(std::string(name) + "[" + std::to_string(x) + "][" +
                                  std::to_string(q) + "]: target " + std::to_string(t) +
                                  " out of range");
        }
      }
    }
  }
}

std::vector<bool> nonempty_domain(const RuleMap& map, std::size_t states) {
  std::vector<bool> dom(states, false);
  for (const auto& row : map) {
    for (std::size_t q = 0; q < row.size(); ++q) {
      if (!row[q].empty()) dom[q] = true;
    }
  }
  return dom;
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

RuleMap empty_rules(std::size_t symbols, std::size_t states) {
  return RuleMap(symbols, std::vector<std::vector<int>>(states));
}

std::vector<bool> left_moving_states(const TwoWayAutomaton& m) {
  return nonempty_domain(m.left, m.states.size());
}

std::vector<bool> right_moving_states(const TwoWayAutomaton& m) {
  return nonempty_domain(m.right, m.states.size());
}

Rel left_step(const TwoWayAutomaton& m, int symbol) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const auto& row = m.left.at(static_cast<std::size_t>(symbol));
  for (std::size_t q = 0; q < row.size(); ++q) {
    for (int b : row[q]) pairs.emplace_back(static_cast<std::size_t>(b), q);
  }
  return Rel::from_pairs(m.states, m.states, pairs);
}

Rel right_step(const TwoWayAutomaton& m, int symbol) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const auto& row = m.right.at(static_cast<std::size_t>(symbol));
  for (std::size_t q = 0; q < row.size(); ++q) {
    for (int c : row[q]) pairs.emplace_back(static_cast<std::size_t>(c), q);
  }
  return Rel::from_pairs(m.states, m.states, pairs);
}

Nfa reverse_nfa(const Nfa& m) {
  Nfa out{m.states, m.alphabet, {}};
  out.step.reserve(m.step.size());
  for (const auto& r : m.step) out.step.push_back(converse(r));
  return out;
}

Mealy mealy_dual(const Mealy& m) {
  Mealy out{m.alphabet, m.states, empty_rules(m.states.size(), m.alphabet.size()),
            empty_rules(m.states.size(), m.alphabet.size())};
  for (std::size_t x = 0; x < m.alphabet.size(); ++x) {
    for (std::size_t q = 0; q < m.states.size(); ++q) {
      out.next[q][x] = m.out[x][q];
      out.out[q][x] = m.next[x][q];
    }
  }
  return out;
}

Nfa underlying_nfa(const Mealy& m) {
  Nfa out{m.states, m.alphabet, {}};
  out.step.reserve(m.alphabet.size());
  for (std::size_t x = 0; x < m.alphabet.size(); ++x) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t q = 0; q < m.states.size(); ++q) {
      for (int p : m.next[x][q]) pairs.emplace_back(static_cast<std::size_t>(p), q);
    }
    out.step.push_back(Rel::from_pairs(m.states, m.states, pairs));
  }
  return out;
}

TwoWayAutomaton swap_directions(const TwoWayAutomaton& m) {
  return TwoWayAutomaton{m.states, m.alphabet, m.right, m.left};
}

SplitResult split_to_birget(const TwoWayAutomaton& m) {
  const std::size_t n = m.states.size();
  const auto ql = left_moving_states(m);
  const auto qr = right_moving_states(m);

  // New state layout: unsplit states keep their label; a state in both
  // moving sets becomes <label>_l and <label>_r.
  std::vector<int> to_original;
  std::vector<int> left_copy(n, -1);   // index of the left-moving copy, if any
  std::vector<int> right_copy(n, -1);
  std::vector<std::string> labels;
  for (std::size_t q = 0; q < n; ++q) {
    const bool split = ql[q] && qr[q];
    if (split) {
      left_copy[q] = static_cast<int>(labels.size());
      labels.push_back(m.states.label(q) + "_l");
      to_original.push_back(static_cast<int>(q));
      right_copy[q] = static_cast<int>(labels.size());
      labels.push_back(m.states.label(q) + "_r");
      to_original.push_back(static_cast<int>(q));
    } else {
      const int idx = static_cast<int>(labels.size());
      labels.push_back(m.states.label(q));
      to_original.push_back(static_cast<int>(q));
      if (ql[q]) left_copy[q] = idx;
      if (qr[q]) right_copy[q] = idx;
      if (!ql[q] && !qr[q]) left_copy[q] = right_copy[q] = idx;
    }
  }
  Carrier states(labels);

  auto expand_targets = [&](const std::vector<int>& targets) {
    std::vector<int> out;
    for (int t : targets) {
      if (left_copy[t] >= 0) out.push_back(left_copy[t]);
      if (right_copy[t] >= 0 && right_copy[t] != left_copy[t]) out.push_back(right_copy[t]);
    }
    return sorted_unique(std::move(out));
  };

  TwoWayAutomaton split{states, m.alphabet,
                        empty_rules(m.alphabet.size(), states.size()),
                        empty_rules(m.alphabet.size(), states.size())};
  for (std::size_t x = 0; x < m.alphabet.size(); ++x) {
    for (std::size_t q = 0; q < n; ++q) {
      if (!m.left[x][q].empty()) {
        split.left[x][static_cast<std::size_t>(left_copy[q])] = expand_targets(m.left[x][q]);
      }
      if (!m.right[x][q].empty()) {
        split.right[x][static_cast<std::size_t>(right_copy[q])] = expand_targets(m.right[x][q]);
      }
    }
  }
  return SplitResult{std::move(split), std::move(to_original)};
}

TwoWayAutomaton btm_to_letter_automaton(const Btm& m) {
  const std::size_t nq = m.states.size();
  const std::size_t ns = m.alphabet.size();
  std::vector<std::string> labels;
  labels.reserve(nq * ns);
  for (std::size_t x = 0; x < ns; ++x) {
    for (std::size_t q = 0; q < nq; ++q) {
      labels.push_back("[" + m.states.label(q) + "," + m.alphabet.label(x) + "]");
    }
  }
  Carrier states(labels);
  auto pack = [&](int x, int q) { return q + static_cast<int>(nq) * x; };

  TwoWayAutomaton out{states, Carrier(std::vector<std::string>{"1"}),
                      empty_rules(1, states.size()), empty_rules(1, states.size())};
  for (std::size_t x = 0; x < ns; ++x) {
    for (std::size_t q = 0; q < nq; ++q) {
      const auto at = static_cast<std::size_t>(pack(static_cast<int>(x), static_cast<int>(q)));
      std::vector<int> lt, rt;
      for (int y : m.left_out[x][q]) {
        for (int p : m.left_next[x][q]) lt.push_back(pack(y, p));
      }
      for (int z : m.right_out[x][q]) {
        for (int c : m.right_next[x][q]) rt.push_back(pack(z, c));
      }
      out.left[0][at] = sorted_unique(std::move(lt));
      out.right[0][at] = sorted_unique(std::move(rt));
    }
  }
  return out;
}

ValidationReport validate(const Nfa& m) {
  ValidationReport report;
  if (m.step.size() != m.alphabet.size()) {
    report.errors.push_back("nfa: expected one step relation per symbol");
  }
  bool deterministic = true;
  for (std::size_t x = 0; x < m.step.size(); ++x) {
    if (m.step[x].dom() != m.states || m.step[x].cod() != m.states) {
      report.errors.push_back("nfa: step relation for symbol '" + m.alphabet.label(x) +
                              "' is not on the state carrier");
      continue;
    }
    for (std::size_t q = 0; q < m.states.size(); ++q) {
      std::size_t targets = 0;
      for (std::size_t b = 0; b < m.states.size(); ++b) {
        if (m.step[x].contains(b, q)) ++targets;
      }
      if (targets != 1) deterministic = false;
    }
  }
  report.ok = report.errors.empty();
  if (report.ok) {
    report.notes.push_back(deterministic ? "deterministic" : "non-deterministic");
  }
  return report;
}

ValidationReport validate(const Mealy& m) {
  ValidationReport report;
  check_rule_map(m.next, "next", m.alphabet.size(), m.states.size(), m.states.size(), report);
  check_rule_map(m.out, "out", m.alphabet.size(), m.states.size(), m.alphabet.size(), report);
  report.ok = report.errors.empty();
  if (report.ok) {
    bool deterministic = true;
    for (std::size_t x = 0; x < m.alphabet.size(); ++x) {
      for (std::size_t q = 0; q < m.states.size(); ++q) {
        if (m.next[x][q].size() != 1 || m.out[x][q].size() != 1) deterministic = false;
      }
    }
    report.notes.push_back(deterministic ? "deterministic" : "non-deterministic");
  }
  return report;
}

ValidationReport validate(const TwoWayAutomaton& m) {
  ValidationReport report;
  check_rule_map(m.left, "left", m.alphabet.size(), m.states.size(), m.states.size(), report);
  check_rule_map(m.right, "right", m.alphabet.size(), m.states.size(), m.states.size(), report);
  report.ok = report.errors.empty();
  if (report.ok) {
    report.notes.push_back(moving_set_note("Q_l", m.states, left_moving_states(m)));
    report.notes.push_back(moving_set_note("Q_r", m.states, right_moving_states(m)));
  }
  return report;
}

ValidationReport validate(const Btm& m) {
  ValidationReport report;
  check_rule_map(m.left_next, "left_next", m.alphabet.size(), m.states.size(), m.states.size(),
                 report);
  check_rule_map(m.left_out, "left_out", m.alphabet.size(), m.states.size(), m.alphabet.size(),
                 report);
  check_rule_map(m.right_next, "right_next", m.alphabet.size(), m.states.size(), m.states.size(),
                 report);
  check_rule_map(m.right_out, "right_out", m.alphabet.size(), m.states.size(), m.alphabet.size(),
                 report);
  report.ok = report.errors.empty();
  if (report.ok) {
    // A move is enabled only when both its state set and rewrite set are
    // non-empty; report the enabled moving state sets.
    const std::size_t n = m.states.size();
    std::vector<bool> ql(n, false), qr(n, false);
    for (std::size_t x = 0; x < m.alphabet.size(); ++x) {
      for (std::size_t q = 0; q < n; ++q) {
        if (!m.left_next[x][q].empty() && !m.left_out[x][q].empty()) ql[q] = true;
        if (!m.right_next[x][q].empty() && !m.right_out[x][q].empty()) qr[q] = true;
      }
    }
    report.notes.push_back(moving_set_note("Q_l", m.states, ql));
    report.notes.push_back(moving_set_note("Q_r", m.states, qr));
  }
  return report;
}

}  // namespace relmach
