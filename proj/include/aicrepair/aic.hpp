#pragma once

#include <optional>
#include <vector>

#include "aicrepair/core.hpp"
#include "aicrepair/enumerate.hpp"

namespace aicrepair {

using RepairReport = Report<UpdateSet, RepairClass>;

bool check_weak_repair(const Database& db, const AicProgram& eta,
                       const UpdateSet& u);
bool check_repair(const Database& db, const AicProgram& eta,
                  const UpdateSet& u);

// Throws InconsistentUpdateSet.
bool is_founded_action(UpdateAction a, const Database& db,
                       const AicProgram& eta, const UpdateSet& u);
// Every element of u is founded; false for inconsistent u.
bool is_founded(const Database& db, const AicProgram& eta, const UpdateSet& u);
bool check_founded_weak_repair(const Database& db, const AicProgram& eta,
                               const UpdateSet& u);
bool check_founded_repair(const Database& db, const AicProgram& eta,
                          const UpdateSet& u);

// For every rule, nup(r) within lit(u) forces head(r) to meet u.
bool is_closed(const UpdateSet& u, const AicProgram& eta);

bool check_justified_action_set(const Database& db, const AicProgram& eta,
                                const UpdateSet& u);
// E u ne(I, I o E) is a justified action set and E misses ne.
bool check_justified_weak_repair(const Database& db, const AicProgram& eta,
                                 const UpdateSet& e);
// Straight from the definition: some justified action set U has
// E = U \ ne(I, I o U). Enumerates all consistent U, so bounded by limits.
bool check_justified_weak_repair_by_definition(
    const Database& db, const AicProgram& eta, const UpdateSet& e,
    const EnumerationLimits& limits = {});
std::vector<UpdateSet> justified_action_sets(
    const Database& db, const AicProgram& eta,
    const EnumerationLimits& limits = {});
bool check_justified_repair(const Database& db, const AicProgram& eta,
                            const UpdateSet& e);

// The _N classes are checked against normalize_aic(eta).
bool check(RepairClass c, const Database& db, const AicProgram& eta,
           const UpdateSet& u);

RepairReport enumerate(const Database& db, const AicProgram& eta,
                       RepairClass c, const EnumerationLimits& limits = {});

// Least superset of seed closed under a normal eta, or nullopt when none
// exists (an empty-head rule fires). Throws NotNormalProgram.
std::optional<UpdateSet> least_closure(const UpdateSet& seed,
                                       const AicProgram& eta);
// Polynomial justified-weak-repair test for normal eta.
bool decide_jwr_normal(const Database& db, const AicProgram& eta,
                       const UpdateSet& e);

}  // namespace aicrepair
