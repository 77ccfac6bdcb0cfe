#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "aicrepair/core.hpp"
#include "aicrepair/lp.hpp"

namespace aicrepair {

struct Instance {
  UniversePtr universe;
  Database db;
  std::variant<AicProgram, RevisionProgram, LogicProgram> program;
  std::vector<std::string> warnings;
};

// Throws SyntaxError, UnknownAtom, UpdatableConditionViolated,
// EmptyRevisionRule.
Instance parse_instance(std::string_view text);

// Comma separated lists, e.g. "+a,-b", "in(a), out(b)", "a, not b", "a,b".
// Empty or "{}" yields the empty set.
UpdateSet parse_update_set(const Universe& u, std::string_view text);
RevisionSet parse_revision_set(const Universe& u, std::string_view text);
LiteralSet parse_literal_set(const Universe& u, std::string_view text);
AtomSet parse_atom_set(const Universe& u, std::string_view text);

std::string print_rule(const Universe& u, const AicRule& r);
std::string print_rule(const Universe& u, const RevisionRule& r);
std::string print_rule(const Universe& u, const LpRule& r);
// Canonical text; parsing it back gives an equal instance.
std::string print_instance(const Universe& u, const Database& db,
                           const AicProgram& p);
std::string print_instance(const Universe& u, const Database& db,
                           const RevisionProgram& p);
std::string print_instance(const Universe& u, const Database& db,
                           const LogicProgram& p);
std::string print_instance(const Instance& inst);

// Signed strings: "+a", "in(a)"; atoms as plain names.
std::vector<std::string> to_strings(const Universe& u, const UpdateSet& s);
std::vector<std::string> to_strings(const Universe& u, const RevisionSet& s);
std::vector<std::string> to_strings(const Universe& u, const AtomSet& s);

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace aicrepair
