#include "relmach/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <tuple>

namespace relmach {

namespace {

using nlohmann::json;

void reject_unknown_fields(const json& j, std::initializer_list<const char*> allowed,
                           const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&](const char* a) { return key == a; }) == allowed.end()) {
      throw ParseError(where + ": unknown field '" + key + "'");
    }
  }
}

Carrier carrier_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a label array");
  std::vector<std::string> labels;
  for (const auto& l : j) {
    if (!l.is_string()) throw ParseError(where + ": labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  try {
    return Carrier(std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
}

json carrier_labels(const Carrier& c) {
  json out = json::array();
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(c.label(i));
  return out;
}

json pairs_to_json(const Rel& r) {
  json out = json::array();
  for (const auto& [b, a] : r.pairs()) {
    out.push_back(json::array({r.cod().label(b), r.dom().label(a)}));
  }
  return out;
}

Rel pairs_from_json(const json& j, const Carrier& dom, const Carrier& cod,
                    const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a pair array");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      throw ParseError(where + ": pairs must be [target, source] label pairs");
    }
    const auto b = cod.index_of(p[0].get<std::string>());
    const auto a = dom.index_of(p[1].get<std::string>());
    if (!b) throw ParseError(where + ": unknown target label '" + p[0].get<std::string>() + "'");
    if (!a) throw ParseError(where + ": unknown source label '" + p[1].get<std::string>() + "'");
    pairs.emplace_back(*b, *a);
  }
  return Rel::from_pairs(dom, cod, pairs);
}

struct LabelIndex {
  std::map<std::string, int> map;

  int at(const json& j, const std::string& where) const {
    if (!j.is_string()) throw ParseError(where + ": expected a label string");
    const auto it = map.find(j.get<std::string>());
    if (it == map.end()) {
      throw ParseError(where + ": unknown name '" + j.get<std::string>() + "'");
    }
    return it->second;
  }
};

LabelIndex index_of(const Carrier& c) {
  LabelIndex idx;
  for (std::size_t i = 0; i < c.size(); ++i) idx.map.emplace(c.label(i), static_cast<int>(i));
  return idx;
}

std::vector<int> targets_from_json(const json& j, const LabelIndex& idx,
                                   const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  std::vector<int> out;
  for (const auto& t : j) out.push_back(idx.at(t, where));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

json targets_to_json(const std::vector<int>& targets, const Carrier& c) {
  json out = json::array();
  for (int t : targets) out.push_back(c.label(static_cast<std::size_t>(t)));
  return out;
}

struct RawRule {
  std::string kind;
  int symbol;
  int state;
  std::vector<int> next_states;
  std::vector<int> outputs;
  bool has_next = false;
  bool has_outputs = false;
};

std::vector<RawRule> rules_from_json(const json& j, const Carrier& states,
                                     const Carrier& alphabet) {
  if (!j.is_array()) throw ParseError("rules: expected an array");
  const auto state_idx = index_of(states);
  const auto symbol_idx = index_of(alphabet);
  std::vector<RawRule> out;
  int k = 0;
  for (const auto& r : j) {
    const std::string where = "rule #" + std::to_string(k++);
    reject_unknown_fields(r, {"kind", "symbol", "state", "next_states", "outputs"}, where);
    if (!r.contains("kind") || !r.contains("symbol") || !r.contains("state")) {
      throw ParseError(where + ": kind, symbol and state are required");
    }
    RawRule rule;
    rule.kind = r.at("kind").get<std::string>();
    if (rule.kind != "left" && rule.kind != "right" && rule.kind != "step") {
      throw ParseError(where + ": kind must be left, right or step");
    }
    rule.symbol = symbol_idx.at(r.at("symbol"), where + ".symbol");
    rule.state = state_idx.at(r.at("state"), where + ".state");
    if (r.contains("next_states")) {
      rule.next_states = targets_from_json(r.at("next_states"), state_idx, where + ".next_states");
      rule.has_next = true;
    }
    if (r.contains("outputs")) {
      rule.outputs = targets_from_json(r.at("outputs"), symbol_idx, where + ".outputs");
      rule.has_outputs = true;
    }
    out.push_back(std::move(rule));
  }
  return out;
}

void merge_into(RuleMap& map, int symbol, int state, const std::vector<int>& targets) {
  auto& cell = map[static_cast<std::size_t>(symbol)][static_cast<std::size_t>(state)];
  cell.insert(cell.end(), targets.begin(), targets.end());
  std::sort(cell.begin(), cell.end());
  cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
}

json rule_json(const char* kind, const Carrier& alphabet, const Carrier& states, int symbol,
               int state) {
  json r;
  r["kind"] = kind;
  r["symbol"] = alphabet.label(static_cast<std::size_t>(symbol));
  r["state"] = states.label(static_cast<std::size_t>(state));
  return r;
}

}  // namespace

json rel_to_json(const Rel& r) {
  json out;
  out["dom"] = carrier_labels(r.dom());
  out["cod"] = carrier_labels(r.cod());
  out["pairs"] = pairs_to_json(r);
  return out;
}

Rel rel_from_json(const json& j) {
  reject_unknown_fields(j, {"dom", "cod", "pairs"}, "relation");
  if (!j.contains("dom") || !j.contains("cod") || !j.contains("pairs")) {
    throw ParseError("relation: dom, cod and pairs are required");
  }
  const Carrier dom = carrier_from_json(j.at("dom"), "relation.dom");
  const Carrier cod = carrier_from_json(j.at("cod"), "relation.cod");
  return pairs_from_json(j.at("pairs"), dom, cod, "relation.pairs");
}

json square_to_json(const Square& s) {
  json out;
  out["carrier"] = carrier_labels(s.carrier);
  out["pass_left"] = pairs_to_json(s.pass_left);
  out["left_turn"] = pairs_to_json(s.left_turn);
  out["right_turn"] = pairs_to_json(s.right_turn);
  out["pass_right"] = pairs_to_json(s.pass_right);
  return out;
}

Square square_from_json(const json& j) {
  reject_unknown_fields(j, {"carrier", "pass_left", "left_turn", "right_turn", "pass_right"},
                        "square");
  for (const char* field : {"carrier", "pass_left", "left_turn", "right_turn", "pass_right"}) {
    if (!j.contains(field)) throw ParseError(std::string("square: missing field '") + field + "'");
  }
  const Carrier c = carrier_from_json(j.at("carrier"), "square.carrier");
  return Square(c, pairs_from_json(j.at("pass_left"), c, c, "square.pass_left"),
                pairs_from_json(j.at("left_turn"), c, c, "square.left_turn"),
                pairs_from_json(j.at("right_turn"), c, c, "square.right_turn"),
                pairs_from_json(j.at("pass_right"), c, c, "square.pass_right"));
}

json machine_to_json(const AnyMachine& m) {
  json out;
  out["states"] = carrier_labels(machine_states(m));
  out["alphabet"] = carrier_labels(machine_alphabet(m));
  json rules = json::array();

  auto emit_map = [&](const char* kind, const RuleMap& next, const RuleMap* outs,
                      const Carrier& alphabet, const Carrier& states) {
    for (std::size_t x = 0; x < next.size(); ++x) {
      for (std::size_t q = 0; q < next[x].size(); ++q) {
        const bool has_next = !next[x][q].empty();
        const bool has_out = outs && !(*outs)[x][q].empty();
        if (!has_next && !has_out) continue;
        json r = rule_json(kind, alphabet, states, static_cast<int>(x), static_cast<int>(q));
        if (has_next) r["next_states"] = targets_to_json(next[x][q], states);
        if (has_out) r["outputs"] = targets_to_json((*outs)[x][q], alphabet);
        rules.push_back(std::move(r));
      }
    }
  };

  if (const auto* nfa = std::get_if<Nfa>(&m)) {
    out["type"] = "nfa";
    for (std::size_t x = 0; x < nfa->step.size(); ++x) {
      for (std::size_t q = 0; q < nfa->states.size(); ++q) {
        std::vector<int> targets;
        for (std::size_t b = 0; b < nfa->states.size(); ++b) {
          if (nfa->step[x].contains(b, q)) targets.push_back(static_cast<int>(b));
        }
        if (targets.empty()) continue;
        json r = rule_json("step", nfa->alphabet, nfa->states, static_cast<int>(x),
                           static_cast<int>(q));
        r["next_states"] = targets_to_json(targets, nfa->states);
        rules.push_back(std::move(r));
      }
    }
  } else if (const auto* mealy = std::get_if<Mealy>(&m)) {
    out["type"] = "mealy";
    for (std::size_t x = 0; x < mealy->alphabet.size(); ++x) {
      for (std::size_t q = 0; q < mealy->states.size(); ++q) {
        const bool has_next = !mealy->next[x][q].empty();
        const bool has_out = !mealy->out[x][q].empty();
        if (!has_next && !has_out) continue;
        json r = rule_json("step", mealy->alphabet, mealy->states, static_cast<int>(x),
                           static_cast<int>(q));
        if (has_next) r["next_states"] = targets_to_json(mealy->next[x][q], mealy->states);
        if (has_out) r["outputs"] = targets_to_json(mealy->out[x][q], mealy->alphabet);
        rules.push_back(std::move(r));
      }
    }
  } else if (const auto* tw = std::get_if<TwoWayAutomaton>(&m)) {
    out["type"] = "two_way";
    emit_map("left", tw->left, nullptr, tw->alphabet, tw->states);
    emit_map("right", tw->right, nullptr, tw->alphabet, tw->states);
  } else {
    const auto& btm = std::get<Btm>(m);
    out["type"] = "btm";
    emit_map("left", btm.left_next, &btm.left_out, btm.alphabet, btm.states);
    emit_map("right", btm.right_next, &btm.right_out, btm.alphabet, btm.states);
  }
  out["rules"] = std::move(rules);
  return out;
}

AnyMachine machine_from_json(const json& j) {
  reject_unknown_fields(j, {"type", "states", "alphabet", "rules"}, "machine");
  for (const char* field : {"type", "states", "alphabet", "rules"}) {
    if (!j.contains(field)) throw ParseError(std::string("machine: missing field '") + field + "'");
  }
  const std::string type = j.at("type").get<std::string>();
  const Carrier states = carrier_from_json(j.at("states"), "machine.states");
  const Carrier alphabet = carrier_from_json(j.at("alphabet"), "machine.alphabet");
  const auto rules = rules_from_json(j.at("rules"), states, alphabet);

  auto expect_kind = [&](const RawRule& r, int k, std::initializer_list<const char*> kinds) {
    if (std::find_if(kinds.begin(), kinds.end(),
                     [&](const char* a) { return r.kind == a; }) == kinds.end()) {
      throw ParseError("rule #" + std::to_string(k) + ": kind '" + r.kind +
                       "' not allowed for type " + type);
    }
  };

  if (type == "nfa") {
    RuleMap next = empty_rules(alphabet.size(), states.size());
    int k = 0;
    for (const auto& r : rules) {
      expect_kind(r, k, {"step"});
      if (!r.has_next || r.has_outputs) {
        throw ParseError("rule #" + std::to_string(k) + ": nfa rules carry next_states only");
      }
      merge_into(next, r.symbol, r.state, r.next_states);
      ++k;
    }
    Nfa out{states, alphabet, {}};
    for (std::size_t x = 0; x < alphabet.size(); ++x) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t q = 0; q < states.size(); ++q) {
        for (int b : next[x][q]) pairs.emplace_back(static_cast<std::size_t>(b), q);
      }
      out.step.push_back(Rel::from_pairs(states, states, pairs));
    }
    return out;
  }
  if (type == "mealy") {
    Mealy out{states, alphabet, empty_rules(alphabet.size(), states.size()),
              empty_rules(alphabet.size(), states.size())};
    int k = 0;
    for (const auto& r : rules) {
      expect_kind(r, k, {"step"});
      if (!r.has_next && !r.has_outputs) {
        throw ParseError("rule #" + std::to_string(k) + ": empty rule");
      }
      if (r.has_next) merge_into(out.next, r.symbol, r.state, r.next_states);
      if (r.has_outputs) merge_into(out.out, r.symbol, r.state, r.outputs);
      ++k;
    }
    return out;
  }
  if (type == "two_way") {
    TwoWayAutomaton out{states, alphabet, empty_rules(alphabet.size(), states.size()),
                        empty_rules(alphabet.size(), states.size())};
    int k = 0;
    for (const auto& r : rules) {
      expect_kind(r, k, {"left", "right"});
      if (!r.has_next || r.has_outputs) {
        throw ParseError("rule #" + std::to_string(k) + ": two_way rules carry next_states only");
      }
      merge_into(r.kind == "left" ? out.left : out.right, r.symbol, r.state, r.next_states);
      ++k;
    }
    return out;
  }
  if (type == "btm") {
    Btm out{states,
            alphabet,
            empty_rules(alphabet.size(), states.size()),
            empty_rules(alphabet.size(), states.size()),
            empty_rules(alphabet.size(), states.size()),
            empty_rules(alphabet.size(), states.size())};
    int k = 0;
    for (const auto& r : rules) {
      expect_kind(r, k, {"left", "right"});
      if (!r.has_next && !r.has_outputs) {
        throw ParseError("rule #" + std::to_string(k) + ": empty rule");
      }
      if (r.kind == "left") {
        if (r.has_next) merge_into(out.left_next, r.symbol, r.state, r.next_states);
        if (r.has_outputs) merge_into(out.left_out, r.symbol, r.state, r.outputs);
      } else {
        if (r.has_next) merge_into(out.right_next, r.symbol, r.state, r.next_states);
        if (r.has_outputs) merge_into(out.right_out, r.symbol, r.state, r.outputs);
      }
      ++k;
    }
    return out;
  }
  throw ParseError("machine: unknown type '" + type + "'");
}

AnyMachine load_machine_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open machine file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  try {
    return machine_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

const char* machine_type_name(const AnyMachine& m) {
  if (std::holds_alternative<Nfa>(m)) return "nfa";
  if (std::holds_alternative<Mealy>(m)) return "mealy";
  if (std::holds_alternative<TwoWayAutomaton>(m)) return "two_way";
  return "btm";
}

const Carrier& machine_states(const AnyMachine& m) {
  return std::visit([](const auto& x) -> const Carrier& { return x.states; }, m);
}

const Carrier& machine_alphabet(const AnyMachine& m) {
  return std::visit([](const auto& x) -> const Carrier& { return x.alphabet; }, m);
}

std::string digest_hex(const json& j) {
  const std::string text = j.dump();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string rel_to_text(const Rel& r) {
  std::string out = "{";
  bool sep = false;
  for (const auto& [b, a] : r.pairs()) {
    if (sep) out += ", ";
    out += "(" + r.cod().label(b) + "," + r.dom().label(a) + ")";
    sep = true;
  }
  return out + "}";
}

std::string square_to_text(const Square& s, const std::string& indent) {
  std::string out;
  out += indent + "pass_left : " + rel_to_text(s.pass_left) + "\n";
  out += indent + "left_turn : " + rel_to_text(s.left_turn) + "\n";
  out += indent + "right_turn: " + rel_to_text(s.right_turn) + "\n";
  out += indent + "pass_right: " + rel_to_text(s.pass_right) + "\n";
  return out;
}

}  // namespace relmach
