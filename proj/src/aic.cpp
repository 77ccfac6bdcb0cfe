#include "aicrepair/aic.hpp"

#include "aicrepair/transforms.hpp"
#include "aicrepair/update.hpp"

namespace aicrepair {

namespace {

// lit(u) contains ls
bool covers(const UpdateSet& u, const LiteralSet& ls) {
  return ls.positive().is_subset_of(u.positive()) &&
         ls.negative().is_subset_of(u.negative());
}

bool enforced_by_smaller(const Database& db, const AicProgram& eta,
                         const UpdateSet& u) {
  return some_proper_subset(u, [&](const UpdateSet& sub) {
    return entails(apply_update(db, sub), eta);
  });
}

}  // namespace

bool check_weak_repair(const Database& db, const AicProgram& eta,
                       const UpdateSet& u) {
  return u.consistent() && is_essential(db, u) &&
         entails(apply_update(db, u), eta);
}

bool check_repair(const Database& db, const AicProgram& eta,
                  const UpdateSet& u) {
  return check_weak_repair(db, eta, u) && !enforced_by_smaller(db, eta, u);
}

bool is_founded_action(UpdateAction a, const Database& db,
                       const AicProgram& eta, const UpdateSet& u) {
  Database r = apply_update(db, u);
  for (const AicRule& rule : eta) {
    if (!rule.head().contains(a)) continue;
    UpdateSet others = rule.head();
    others.erase(a);
    if (entails(r, rule.nup()) && entails(r, lit(others).dual())) return true;
  }
  return false;
}

bool is_founded(const Database& db, const AicProgram& eta, const UpdateSet& u) {
  if (!u.consistent()) return false;
  for (UpdateAction a : u.elements())
    if (!is_founded_action(a, db, eta, u)) return false;
  return true;
}

bool check_founded_weak_repair(const Database& db, const AicProgram& eta,
                               const UpdateSet& u) {
  return check_weak_repair(db, eta, u) && is_founded(db, eta, u);
}

bool check_founded_repair(const Database& db, const AicProgram& eta,
                          const UpdateSet& u) {
  return check_founded_weak_repair(db, eta, u) &&
         !enforced_by_smaller(db, eta, u);
}

bool is_closed(const UpdateSet& u, const AicProgram& eta) {
  for (const AicRule& r : eta)
    if (covers(u, r.nup()) && !r.head().intersects(u)) return false;
  return true;
}

bool check_justified_action_set(const Database& db, const AicProgram& eta,
                                const UpdateSet& u) {
  if (!u.consistent()) return false;
  UpdateSet ne = no_effect_set(eta.universe(), db, apply_update(db, u));
  if (!ne.is_subset_of(u) || !is_closed(u, eta)) return false;
  // Every closed set between ne and u has the form ne | sub.
  return !some_proper_subset(u - ne, [&](const UpdateSet& sub) {
    return is_closed(ne | sub, eta);
  });
}

bool check_justified_weak_repair(const Database& db, const AicProgram& eta,
                                 const UpdateSet& e) {
  if (!e.consistent()) return false;
  UpdateSet ne = no_effect_set(eta.universe(), db, apply_update(db, e));
  if (e.intersects(ne)) return false;
  return check_justified_action_set(db, eta, e | ne);
}

std::vector<UpdateSet> justified_action_sets(const Database& db,
                                             const AicProgram& eta,
                                             const EnumerationLimits& limits) {
  const Universe& u = eta.universe();
  check_bound(u, limits);
  std::vector<UpdateSet> out;
  std::vector<unsigned> digit(u.size(), 0);  // 0 absent, 1 plus, 2 minus
  while (true) {
    UpdateSet s;
    for (std::uint32_t i = 0; i < digit.size(); ++i) {
      if (digit[i] == 1) s.insert(plus(Atom{i}));
      if (digit[i] == 2) s.insert(minus(Atom{i}));
    }
    if (check_justified_action_set(db, eta, s)) out.push_back(std::move(s));
    std::size_t k = 0;
    while (k < digit.size() && digit[k] == 2) digit[k++] = 0;
    if (k == digit.size()) break;
    ++digit[k];
  }
  std::sort(out.begin(), out.end(), canonical_less<ActionTag>);
  return out;
}

bool check_justified_weak_repair_by_definition(
    const Database& db, const AicProgram& eta, const UpdateSet& e,
    const EnumerationLimits& limits) {
  for (const UpdateSet& u : justified_action_sets(db, eta, limits)) {
    UpdateSet ne = no_effect_set(eta.universe(), db, apply_update(db, u));
    if (u - ne == e) return true;
  }
  return false;
}

bool check_justified_repair(const Database& db, const AicProgram& eta,
                            const UpdateSet& e) {
  return check_justified_weak_repair(db, eta, e) &&
         !enforced_by_smaller(db, eta, e);
}

bool check(RepairClass c, const Database& db, const AicProgram& eta,
           const UpdateSet& u) {
  switch (c) {
    case RepairClass::WR: return check_weak_repair(db, eta, u);
    case RepairClass::R: return check_repair(db, eta, u);
    case RepairClass::FWR: return check_founded_weak_repair(db, eta, u);
    case RepairClass::FR: return check_founded_repair(db, eta, u);
    case RepairClass::JWR: return check_justified_weak_repair(db, eta, u);
    case RepairClass::JR: return check_justified_repair(db, eta, u);
    case RepairClass::JWR_N:
      return check_justified_weak_repair(db, normalize_aic(eta), u);
    case RepairClass::JR_N:
      return check_justified_repair(db, normalize_aic(eta), u);
  }
  return false;
}

RepairReport enumerate(const Database& db, const AicProgram& eta,
                       RepairClass c, const EnumerationLimits& limits) {
  RepairReport report{c, {}, {}};
  check_bound(eta.universe(), limits);
  bool normalized = c == RepairClass::JWR_N || c == RepairClass::JR_N;
  const AicProgram target = normalized ? normalize_aic(eta) : eta;
  RepairClass base = c == RepairClass::JWR_N  ? RepairClass::JWR
                     : c == RepairClass::JR_N ? RepairClass::JR
                                              : c;
  report.sets = enumerate_essential(
      eta.universe(), db, limits,
      [&](const UpdateSet& e) { return check(base, db, target, e); },
      report.stats);
  return report;
}

std::optional<UpdateSet> least_closure(const UpdateSet& seed,
                                       const AicProgram& eta) {
  if (!eta.normal())
    throw NotNormalProgram("least closure needs heads of size at most one");
  UpdateSet w = seed;
  for (bool changed = true; changed;) {
    changed = false;
    for (const AicRule& r : eta) {
      if (!covers(w, r.nup())) continue;
      if (r.head().empty()) return std::nullopt;
      if (!r.head().is_subset_of(w)) {
        w |= r.head();
        changed = true;
      }
    }
  }
  return w;
}

bool decide_jwr_normal(const Database& db, const AicProgram& eta,
                       const UpdateSet& e) {
  if (!eta.normal())
    throw NotNormalProgram("decide_jwr_normal needs a normal program");
  if (!e.consistent()) return false;
  UpdateSet ne = no_effect_set(eta.universe(), db, apply_update(db, e));
  if (e.intersects(ne)) return false;
  auto w = least_closure(ne, eta);
  return w && *w == (e | ne);
}

}  // namespace aicrepair
