#pragma once

#include "aicrepair/core.hpp"

namespace aicrepair {

// I o U. Throws InconsistentUpdateSet.
Database apply_update(const Database& db, const UpdateSet& u);
// I (+) U on revision literals.
Database apply_revision(const Database& db, const RevisionSet& u);

// {+a | a in I and R} u {-a | a in neither}, over the universe.
UpdateSet no_effect_set(const Universe& u, const Database& i,
                        const Database& r);
RevisionSet inertia_set(const Universe& u, const Database& i,
                        const Database& r);

// No action of s is already true in db, i.e. every action changes db.
template <class Tag>
bool is_essential(const Database& db, const SignedSet<Tag>& s) {
  return !s.positive().intersects(db) && s.negative().is_subset_of(db);
}

inline bool is_consistent(const UpdateSet& u) { return u.consistent(); }

bool entails(const Database& db, Literal l);
bool entails(const Database& db, const LiteralSet& ls);
bool entails(const Database& db, RevisionLiteral l);
bool entails(const Database& db, const RevisionSet& ls);
bool entails(const Database& db, const AicRule& r);
bool entails(const Database& db, const AicProgram& p);
bool entails(const Database& db, const RevisionRule& r);
bool entails(const Database& db, const RevisionProgram& p);

}  // namespace aicrepair
