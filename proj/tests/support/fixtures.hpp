#pragma once

#include <string_view>

#include "aicrepair/frontend.hpp"

namespace fx {

using namespace aicrepair;

struct Loaded {
  Instance inst;

  const Universe& u() const { return *inst.universe; }
  const Database& db() const { return inst.db; }
  const AicProgram& aic() const { return std::get<AicProgram>(inst.program); }
  const RevisionProgram& rev() const {
    return std::get<RevisionProgram>(inst.program);
  }
  const LogicProgram& lp() const { return std::get<LogicProgram>(inst.program); }
  UpdateSet acts(std::string_view s) const { return parse_update_set(u(), s); }
  RevisionSet rlits(std::string_view s) const {
    return parse_revision_set(u(), s);
  }
  LiteralSet lits(std::string_view s) const { return parse_literal_set(u(), s); }
  AtomSet atoms(std::string_view s) const { return parse_atom_set(u(), s); }
  Atom at(std::string_view name) const { return u().at(name); }
};

inline Loaded load(std::string_view text) { return {parse_instance(text)}; }

}  // namespace fx
