#include "aicrepair/revision.hpp"

#include <algorithm>

#include "aicrepair/transforms.hpp"
#include "aicrepair/update.hpp"

namespace aicrepair {

namespace {

void require_normal(const RevisionProgram& p) {
  if (!p.normal())
    throw NotNormalProgram("supported semantics need a normal program");
}

bool enforced_by_smaller(const RevisionProgram& p, const Database& db,
                         const RevisionSet& e) {
  return some_proper_subset(e, [&](const RevisionSet& sub) {
    return entails(apply_revision(db, sub), p);
  });
}

// A triggered rule with an empty head contributes the head false, which no
// set of revision literals can equal.
bool fires_constraint(const RevisionProgram& triggered) {
  return std::any_of(triggered.begin(), triggered.end(),
                     [](const RevisionRule& r) { return r.head().empty(); });
}

}  // namespace

RevisionProgram triggered_subprogram(const RevisionProgram& p,
                                     const Database& r) {
  require_normal(p);
  RevisionProgram out(p.universe_ptr());
  for (const auto& rule : p)
    if (entails(r, rule.body())) out.add(rule);
  return out;
}

RevisionSet heads(const RevisionProgram& p) {
  RevisionSet out;
  for (const auto& r : p) out |= r.head();
  return out;
}

bool check_supported_update(const RevisionProgram& p, const Database& db,
                            const RevisionSet& u) {
  auto triggered = triggered_subprogram(p, apply_revision(db, u));
  return !fires_constraint(triggered) && u == heads(triggered);
}

bool check_supported_revision(const RevisionProgram& p, const Database& db,
                              const RevisionSet& e) {
  require_normal(p);
  // Any supported update U with E = U \ I(I, I+U) has I+U = I+E, so U is
  // forced to be head(P_{I+E}).
  Database r = apply_revision(db, e);
  auto triggered = triggered_subprogram(p, r);
  if (fires_constraint(triggered)) return false;
  RevisionSet u = heads(triggered);
  return u.consistent() && u - inertia_set(p.universe(), db, r) == e;
}

bool check_weak_revision(const RevisionProgram& p, const Database& db,
                         const RevisionSet& e) {
  return e.consistent() && is_essential(db, e) &&
         entails(apply_revision(db, e), p);
}

bool check_revision(const RevisionProgram& p, const Database& db,
                    const RevisionSet& e) {
  return check_weak_revision(p, db, e) && !enforced_by_smaller(p, db, e);
}

bool is_closed_rev(const RevisionSet& u, const RevisionProgram& p,
                   const RevisionSet& facts) {
  if (!facts.is_subset_of(u)) return false;
  for (const auto& r : p)
    if (r.body().is_subset_of(u) && !r.head().intersects(u)) return false;
  return true;
}

bool check_justified_update(const RevisionProgram& p, const Database& db,
                            const RevisionSet& u) {
  if (!u.consistent()) return false;
  RevisionSet inertia =
      inertia_set(p.universe(), db, apply_revision(db, u));
  if (!is_closed_rev(u, p, inertia)) return false;
  return !some_proper_subset(u - inertia, [&](const RevisionSet& sub) {
    return is_closed_rev(inertia | sub, p, inertia);
  });
}

bool check_justified_weak_revision(const RevisionProgram& p,
                                   const Database& db, const RevisionSet& e) {
  if (!e.consistent()) return false;
  RevisionSet inertia =
      inertia_set(p.universe(), db, apply_revision(db, e));
  if (e.intersects(inertia)) return false;
  return check_justified_update(p, db, e | inertia);
}

bool check_justified_revision(const RevisionProgram& p, const Database& db,
                              const RevisionSet& e) {
  return check_justified_weak_revision(p, db, e) &&
         !enforced_by_smaller(p, db, e);
}

bool is_founded_rev_literal(RevisionLiteral a, const RevisionProgram& p,
                            const Database& db, const RevisionSet& e) {
  Database r = apply_revision(db, e);
  for (const auto& rule : p) {
    if (!rule.head().contains(a)) continue;
    RevisionSet others = rule.head();
    others.erase(a);
    if (entails(r, rule.body()) && entails(r, others.dual())) return true;
  }
  return false;
}

namespace {

bool all_founded(const RevisionProgram& p, const Database& db,
                 const RevisionSet& e) {
  for (RevisionLiteral a : e.elements())
    if (!is_founded_rev_literal(a, p, db, e)) return false;
  return true;
}

}  // namespace

bool check_founded_weak_revision(const RevisionProgram& p, const Database& db,
                                 const RevisionSet& e) {
  return check_weak_revision(p, db, e) && all_founded(p, db, e);
}

bool check_founded_revision(const RevisionProgram& p, const Database& db,
                            const RevisionSet& e) {
  return check_revision(p, db, e) && all_founded(p, db, e);
}

bool check(RevisionClass c, const Database& db, const RevisionProgram& p,
           const RevisionSet& e) {
  switch (c) {
    case RevisionClass::WRev: return check_weak_revision(p, db, e);
    case RevisionClass::Rev: return check_revision(p, db, e);
    case RevisionClass::FWRev: return check_founded_weak_revision(p, db, e);
    case RevisionClass::FRev: return check_founded_revision(p, db, e);
    case RevisionClass::JWRev: return check_justified_weak_revision(p, db, e);
    case RevisionClass::JRev: return check_justified_revision(p, db, e);
    case RevisionClass::JWRev_N:
      return check_justified_weak_revision(normalize_rev(p), db, e);
    case RevisionClass::JRev_N:
      return check_justified_revision(normalize_rev(p), db, e);
    case RevisionClass::SuppRev:
      return e.consistent() && check_supported_revision(p, db, e);
  }
  return false;
}

RevisionReport enumerate_rev(const RevisionProgram& p, const Database& db,
                             RevisionClass c,
                             const EnumerationLimits& limits) {
  RevisionReport report{c, {}, {}};
  check_bound(p.universe(), limits);
  if (c == RevisionClass::SuppRev) require_normal(p);
  bool normalized = c == RevisionClass::JWRev_N || c == RevisionClass::JRev_N;
  const RevisionProgram target = normalized ? normalize_rev(p) : p;
  RevisionClass base = c == RevisionClass::JWRev_N  ? RevisionClass::JWRev
                       : c == RevisionClass::JRev_N ? RevisionClass::JRev
                                                    : c;
  auto found = enumerate_essential(
      p.universe(), db, limits,
      [&](const UpdateSet& e) {
        return check(base, db, target, retag<RevisionTag>(e));
      },
      report.stats);
  for (const auto& e : found) report.sets.push_back(retag<RevisionTag>(e));
  return report;
}

}  // namespace aicrepair
