#include "aicrepair/lp.hpp"

#include <algorithm>

namespace aicrepair {

bool is_simple(const LogicProgram& p) {
  return std::all_of(p.begin(), p.end(),
                     [](const LpRule& r) { return r.simple(); });
}

LogicProgram reduct(const LogicProgram& p, const AtomSet& m) {
  LogicProgram out(p.universe_ptr());
  for (const LpRule& r : p)
    if (!r.neg.intersects(m)) out.add({r.head, r.pos, {}});
  return out;
}

bool is_model(const AtomSet& m, const LogicProgram& p) {
  for (const LpRule& r : p)
    if (r.pos.is_subset_of(m) && !r.neg.intersects(m) && !r.head.intersects(m))
      return false;
  return true;
}

bool is_answer_set(const LogicProgram& p, const AtomSet& m) {
  LogicProgram pm = reduct(p, m);
  if (!is_model(m, pm)) return false;
  auto atoms = m.atoms();
  if (atoms.size() >= 64) throw UniverseTooLarge(atoms.size(), kAtomCeiling);
  std::uint64_t full = (std::uint64_t{1} << atoms.size()) - 1;
  for (std::uint64_t mask = 0; mask < full; ++mask)
    if (is_model(AtomSet::from_mask(mask, atoms), pm)) return false;
  return true;
}

std::vector<AtomSet> answer_sets(const LogicProgram& p,
                                 const EnumerationLimits& limits) {
  check_bound(p.universe(), limits);
  std::vector<AtomSet> out;
  const std::uint64_t total = std::uint64_t{1} << p.universe().size();
  auto all = p.universe().all().atoms();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    AtomSet m = AtomSet::from_mask(mask, all);
    if (is_answer_set(p, m)) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

AicRule aic_of_rule(const Universe& u, const LpRule& r) {
  if (!r.simple()) throw NotSimpleRule("rule mentions an atom twice");
  LiteralSet body(r.pos, r.neg | r.head);
  return validate_aic_rule(u, std::move(body), UpdateSet(r.head, {}));
}

AicProgram aic_of_program(const LogicProgram& p) {
  AicProgram out(p.universe_ptr());
  for (const LpRule& r : p) out.add(aic_of_rule(p.universe(), r));
  return out;
}

}  // namespace aicrepair
