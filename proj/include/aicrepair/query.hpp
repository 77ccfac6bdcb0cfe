#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "aicrepair/aic.hpp"
#include "aicrepair/revision.hpp"

namespace aicrepair {

enum class CqaStatus { True, False, Unknown, NoRepairs };

struct CqaVerdict {
  LiteralSet query;
  CqaStatus status = CqaStatus::NoRepairs;
  std::size_t witness_count = 0;
  std::vector<Database> witnesses;  // repaired databases, sorted
  bool interrupted = false;
};

std::string_view status_name(CqaStatus s);

CqaVerdict cqa(const Database& db, const AicProgram& eta, RepairClass c,
               const LiteralSet& query, const EnumerationLimits& limits = {});
CqaVerdict cqa(const Database& db, const RevisionProgram& p, RevisionClass c,
               const LiteralSet& query, const EnumerationLimits& limits = {});

// Inclusions among the semantics, evaluated on one instance.
struct LatticeRelation {
  std::string name;  // e.g. "justified-repair <= founded-repair"
  bool holds = false;
};
struct Lattice {
  std::vector<std::pair<std::string, std::size_t>> sizes;
  std::vector<LatticeRelation> relations;
  bool all_hold() const;
};

Lattice lattice(const Database& db, const AicProgram& eta,
                const EnumerationLimits& limits = {});
// Supported revisions take part only for normal programs.
Lattice lattice(const Database& db, const RevisionProgram& p,
                const EnumerationLimits& limits = {});

}  // namespace aicrepair
