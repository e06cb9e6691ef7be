#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "relmach/machine.hpp"
#include "relmach/square.hpp"

namespace relmach {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using AnyMachine = std::variant<Nfa, Mealy, TwoWayAutomaton, Btm>;

/// Relation as {"dom": [...], "cod": [...], "pairs": [[target, source], ...]}
/// with label strings and the pair list sorted by (target, source) index.
nlohmann::json rel_to_json(const Rel& r);
Rel rel_from_json(const nlohmann::json& j);

/// Square as a carrier label list plus four named pair lists.
nlohmann::json square_to_json(const Square& s);
Square square_from_json(const nlohmann::json& j);

/// Machine files: {"type", "states", "alphabet", "rules"}, one rule object
/// per (kind, symbol, state) with non-empty target sets. Unknown fields are
/// rejected. Serialization is canonical: rules sorted by kind, symbol,
/// state; sets sorted.
nlohmann::json machine_to_json(const AnyMachine& m);
AnyMachine machine_from_json(const nlohmann::json& j);
AnyMachine load_machine_file(const std::string& path);

const char* machine_type_name(const AnyMachine& m);
const Carrier& machine_states(const AnyMachine& m);
const Carrier& machine_alphabet(const AnyMachine& m);

/// FNV-1a hash of the canonical dump, as fixed-width hex. Stable across
/// platforms; used to fingerprint machines in reports.
std::string digest_hex(const nlohmann::json& j);

/// One-line display form "{(b,a), (d,c)}" using carrier labels.
std::string rel_to_text(const Rel& r);
std::string square_to_text(const Square& s, const std::string& indent = "");

}  // namespace relmach
