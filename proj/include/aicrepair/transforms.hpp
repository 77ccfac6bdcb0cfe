#pragma once

#include <string>
#include <vector>

#include "aicrepair/aic.hpp"
#include "aicrepair/core.hpp"
#include "aicrepair/revision.hpp"

namespace aicrepair {

// phi > a1|...|an becomes phi > a1, ..., phi > an. Duplicate rules are
// dropped, keeping the first.
AicProgram normalize_aic(const AicProgram& eta);
// a1|...|ak <- phi becomes ai <- phi, aj^D (j != i).
RevisionProgram normalize_rev(const RevisionProgram& p);
// Drops head literals whose dual occurs in the body.
RevisionProgram properize(const RevisionProgram& p);

// Throws NotProperProgram.
AicRule to_aic(const Universe& u, const RevisionRule& r);
AicProgram to_aic(const RevisionProgram& p);
RevisionRule to_rev(const Universe& u, const AicRule& r);
RevisionProgram to_rev(const AicProgram& eta);

// Shifting by W: dualize everything whose atom is in W.
template <class Tag>
Signed<Tag> shift(Signed<Tag> s, const AtomSet& w) {
  return w.contains(s.atom) ? s.dual() : s;
}
template <class Tag>
SignedSet<Tag> shift(const SignedSet<Tag>& s, const AtomSet& w) {
  return {(s.positive() - w) | (s.negative() & w),
          (s.negative() - w) | (s.positive() & w)};
}
// Databases shift to I xor W.
inline Database shift(const Database& db, const AtomSet& w) { return db ^ w; }
AicRule shift(const Universe& u, const AicRule& r, const AtomSet& w);
RevisionRule shift(const Universe& u, const RevisionRule& r,
                   const AtomSet& w);
// Throw UnknownAtom when w leaves the universe.
AicProgram shift(const AicProgram& eta, const AtomSet& w);
RevisionProgram shift(const RevisionProgram& p, const AtomSet& w);

template <class P>
struct ShiftWitness {
  AtomSet w;
  Database original_db;
  P original;
  Database shifted_db;
  P shifted;
};

template <class P>
ShiftWitness<P> shift_instance(const Database& db, const P& program,
                               const AtomSet& w) {
  return {w, db, program, shift(db, w), shift(program, w)};
}

struct ShiftCheck {
  std::string cls;
  bool ok = false;
  std::size_t count = 0;  // size of the class on the original side
};

// Enumerates each class on both sides and compares the original one,
// shifted element-wise, with the shifted side.
std::vector<ShiftCheck> verify_shift(const ShiftWitness<AicProgram>& s,
                                     const EnumerationLimits& limits = {});
std::vector<ShiftCheck> verify_shift(const ShiftWitness<RevisionProgram>& s,
                                     const EnumerationLimits& limits = {});

}  // namespace aicrepair
