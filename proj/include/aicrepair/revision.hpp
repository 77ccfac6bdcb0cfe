#pragma once

#include <vector>

#include "aicrepair/core.hpp"
#include "aicrepair/enumerate.hpp"

namespace aicrepair {

using RevisionReport = Report<RevisionSet, RevisionClass>;

// Rules whose body holds in r. Throws NotNormalProgram.
RevisionProgram triggered_subprogram(const RevisionProgram& p,
                                     const Database& r);
RevisionSet heads(const RevisionProgram& p);

bool check_supported_update(const RevisionProgram& p, const Database& db,
                            const RevisionSet& u);
bool check_supported_revision(const RevisionProgram& p, const Database& db,
                              const RevisionSet& e);

bool check_weak_revision(const RevisionProgram& p, const Database& db,
                         const RevisionSet& e);
bool check_revision(const RevisionProgram& p, const Database& db,
                    const RevisionSet& e);

// Closed under p plus the body-free rules {l <- | l in facts}.
bool is_closed_rev(const RevisionSet& u, const RevisionProgram& p,
                   const RevisionSet& facts = {});

bool check_justified_update(const RevisionProgram& p, const Database& db,
                            const RevisionSet& u);
bool check_justified_weak_revision(const RevisionProgram& p,
                                   const Database& db, const RevisionSet& e);
bool check_justified_revision(const RevisionProgram& p, const Database& db,
                              const RevisionSet& e);

// Throws InconsistentUpdateSet.
bool is_founded_rev_literal(RevisionLiteral a, const RevisionProgram& p,
                            const Database& db, const RevisionSet& e);
bool check_founded_weak_revision(const RevisionProgram& p, const Database& db,
                                 const RevisionSet& e);
bool check_founded_revision(const RevisionProgram& p, const Database& db,
                            const RevisionSet& e);

bool check(RevisionClass c, const Database& db, const RevisionProgram& p,
           const RevisionSet& e);

RevisionReport enumerate_rev(const RevisionProgram& p, const Database& db,
                             RevisionClass c,
                             const EnumerationLimits& limits = {});

}  // namespace aicrepair
