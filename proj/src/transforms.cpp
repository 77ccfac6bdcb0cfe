#include "aicrepair/transforms.hpp"

#include <algorithm>

namespace aicrepair {

namespace {

template <class Rule>
void add_unique(std::vector<Rule>& rules, Rule r) {
  if (std::find(rules.begin(), rules.end(), r) == rules.end())
    rules.push_back(std::move(r));
}

void require_in_universe(const Universe& u, const AtomSet& w) {
  if (!w.is_subset_of(u.all()))
    throw UnknownAtom("shift set mentions an atom outside the universe");
}

}  // namespace

AicProgram normalize_aic(const AicProgram& eta) {
  std::vector<AicRule> rules;
  for (const AicRule& r : eta) {
    if (r.normal()) {
      add_unique(rules, r);
      continue;
    }
    for (UpdateAction a : r.head().elements())
      add_unique(rules, validate_aic_rule(eta.universe(), r.body(), {a}));
  }
  return AicProgram(eta.universe_ptr(), std::move(rules));
}

RevisionProgram normalize_rev(const RevisionProgram& p) {
  std::vector<RevisionRule> rules;
  for (const RevisionRule& r : p) {
    if (r.normal()) {
      add_unique(rules, r);
      continue;
    }
    for (RevisionLiteral a : r.head().elements()) {
      RevisionSet rest = r.head();
      rest.erase(a);
      add_unique(rules, validate_revision_rule(p.universe(), {a},
                                               r.body() | rest.dual()));
    }
  }
  return RevisionProgram(p.universe_ptr(), std::move(rules));
}

RevisionProgram properize(const RevisionProgram& p) {
  // The body never changes, so one pass reaches the fixpoint.
  RevisionProgram out(p.universe_ptr());
  for (const RevisionRule& r : p)
    out.add(validate_revision_rule(p.universe(), r.head() - r.body().dual(),
                                   r.body()));
  return out;
}

AicRule to_aic(const Universe& u, const RevisionRule& r) {
  if (!r.proper())
    throw NotProperProgram("revision rule is not proper");
  return validate_aic_rule(u, lit(r.body()) | lit(r.head()).dual(),
                           ua(r.head()));
}

AicProgram to_aic(const RevisionProgram& p) {
  AicProgram out(p.universe_ptr());
  for (const RevisionRule& r : p) out.add(to_aic(p.universe(), r));
  return out;
}

RevisionRule to_rev(const Universe& u, const AicRule& r) {
  return validate_revision_rule(u, retag<RevisionTag>(r.head()),
                                retag<RevisionTag>(r.nup()));
}

RevisionProgram to_rev(const AicProgram& eta) {
  RevisionProgram out(eta.universe_ptr());
  for (const AicRule& r : eta) out.add(to_rev(eta.universe(), r));
  return out;
}

AicRule shift(const Universe& u, const AicRule& r, const AtomSet& w) {
  return validate_aic_rule(u, shift(r.body(), w), shift(r.head(), w));
}

RevisionRule shift(const Universe& u, const RevisionRule& r,
                   const AtomSet& w) {
  return validate_revision_rule(u, shift(r.head(), w), shift(r.body(), w));
}

AicProgram shift(const AicProgram& eta, const AtomSet& w) {
  require_in_universe(eta.universe(), w);
  AicProgram out(eta.universe_ptr());
  for (const AicRule& r : eta) out.add(shift(eta.universe(), r, w));
  return out;
}

RevisionProgram shift(const RevisionProgram& p, const AtomSet& w) {
  require_in_universe(p.universe(), w);
  RevisionProgram out(p.universe_ptr());
  for (const RevisionRule& r : p) out.add(shift(p.universe(), r, w));
  return out;
}

namespace {

template <class Set>
bool transported(std::vector<Set> original, const std::vector<Set>& shifted,
                 const AtomSet& w) {
  for (auto& s : original) s = shift(s, w);
  std::sort(original.begin(), original.end(), [](const Set& a, const Set& b) {
    return canonical_less(a, b);
  });
  return original == shifted;
}

}  // namespace

std::vector<ShiftCheck> verify_shift(const ShiftWitness<AicProgram>& s,
                                     const EnumerationLimits& limits) {
  std::vector<ShiftCheck> out;
  for (RepairClass c : kRepairClasses) {
    auto a = enumerate(s.original_db, s.original, c, limits);
    auto b = enumerate(s.shifted_db, s.shifted, c, limits);
    out.push_back({std::string(class_name(c)),
                   transported(a.sets, b.sets, s.w), a.sets.size()});
  }
  return out;
}

std::vector<ShiftCheck> verify_shift(const ShiftWitness<RevisionProgram>& s,
                                     const EnumerationLimits& limits) {
  std::vector<ShiftCheck> out;
  for (RevisionClass c : kRevisionClasses) {
    if (c == RevisionClass::SuppRev) continue;
    auto a = enumerate_rev(s.original, s.original_db, c, limits);
    auto b = enumerate_rev(s.shifted, s.shifted_db, c, limits);
    out.push_back({std::string(class_name(c)),
                   transported(a.sets, b.sets, s.w), a.sets.size()});
  }
  return out;
}

}  // namespace aicrepair
