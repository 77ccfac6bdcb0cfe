#include "aicrepair/update.hpp"

namespace aicrepair {

Database apply_update(const Database& db, const UpdateSet& u) {
  if (!u.consistent())
    throw InconsistentUpdateSet("update set contains +a and -a");
  return (db | u.positive()) - u.negative();
}

Database apply_revision(const Database& db, const RevisionSet& u) {
  return apply_update(db, ua(u));
}

UpdateSet no_effect_set(const Universe& u, const Database& i,
                        const Database& r) {
  return {i & r, u.all() - (i | r)};
}

RevisionSet inertia_set(const Universe& u, const Database& i,
                        const Database& r) {
  return {i & r, u.all() - (i | r)};
}

bool entails(const Database& db, Literal l) {
  return db.contains(l.atom) == l.positive;
}

bool entails(const Database& db, const LiteralSet& ls) {
  return ls.positive().is_subset_of(db) && !ls.negative().intersects(db);
}

bool entails(const Database& db, RevisionLiteral l) {
  return entails(db, lit(l));
}

bool entails(const Database& db, const RevisionSet& ls) {
  return entails(db, lit(ls));
}

bool entails(const Database& db, const AicRule& r) {
  return !entails(db, r.body());
}

bool entails(const Database& db, const AicProgram& p) {
  for (const auto& r : p)
    if (!entails(db, r)) return false;
  return true;
}

bool entails(const Database& db, const RevisionRule& r) {
  if (!entails(db, r.body())) return true;
  return r.head().positive().intersects(db) ||
         !r.head().negative().is_subset_of(db);
}

bool entails(const Database& db, const RevisionProgram& p) {
  for (const auto& r : p)
    if (!entails(db, r)) return false;
  return true;
}

}  // namespace aicrepair
