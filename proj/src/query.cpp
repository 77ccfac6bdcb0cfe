#include "aicrepair/query.hpp"

#include <algorithm>
#include <map>

#include "aicrepair/update.hpp"

namespace aicrepair {

std::string_view status_name(CqaStatus s) {
  switch (s) {
    case CqaStatus::True: return "true";
    case CqaStatus::False: return "false";
    case CqaStatus::Unknown: return "unknown";
    case CqaStatus::NoRepairs: return "no-repairs";
  }
  return "?";
}

namespace {

CqaVerdict verdict(const LiteralSet& query, std::vector<Database> dbs,
                   bool interrupted) {
  CqaVerdict v;
  v.query = query;
  v.interrupted = interrupted;
  std::sort(dbs.begin(), dbs.end(), lex_less);
  v.witness_count = dbs.size();
  if (!dbs.empty()) {
    auto holds = [&](const Database& d) { return entails(d, query); };
    std::size_t n = std::count_if(dbs.begin(), dbs.end(), holds);
    v.status = n == dbs.size() ? CqaStatus::True
               : n == 0        ? CqaStatus::False
                               : CqaStatus::Unknown;
  }
  v.witnesses = std::move(dbs);
  return v;
}

}  // namespace

CqaVerdict cqa(const Database& db, const AicProgram& eta, RepairClass c,
               const LiteralSet& query, const EnumerationLimits& limits) {
  auto report = enumerate(db, eta, c, limits);
  std::vector<Database> dbs;
  for (const auto& e : report.sets) dbs.push_back(apply_update(db, e));
  return verdict(query, std::move(dbs), report.stats.interrupted);
}

CqaVerdict cqa(const Database& db, const RevisionProgram& p, RevisionClass c,
               const LiteralSet& query, const EnumerationLimits& limits) {
  auto report = enumerate_rev(p, db, c, limits);
  std::vector<Database> dbs;
  for (const auto& e : report.sets) dbs.push_back(apply_revision(db, e));
  return verdict(query, std::move(dbs), report.stats.interrupted);
}

}  // namespace aicrepair

#include "aicrepair/transforms.hpp"

namespace aicrepair {

bool Lattice::all_hold() const {
  return std::all_of(relations.begin(), relations.end(),
                     [](const LatticeRelation& r) { return r.holds; });
}

namespace {

template <class Set>
bool subset(const std::vector<Set>& a, const std::vector<Set>& b) {
  return std::all_of(a.begin(), a.end(), [&](const Set& x) {
    return std::find(b.begin(), b.end(), x) != b.end();
  });
}

// Shared shape of the two lattices; names[i] labels sets[i].
template <class Set>
struct Builder {
  Lattice out;
  std::map<std::string, std::vector<Set>> sets;

  void add(const std::string& name, std::vector<Set> s) {
    out.sizes.emplace_back(name, s.size());
    sets[name] = std::move(s);
  }
  void le(const std::string& a, const std::string& b) {
    out.relations.push_back({a + " <= " + b, subset(sets.at(a), sets.at(b))});
  }
  void eq(const std::string& a, const std::string& b) {
    out.relations.push_back({a + " == " + b, sets.at(a) == sets.at(b)});
  }
};

}  // namespace

Lattice lattice(const Database& db, const AicProgram& eta,
                const EnumerationLimits& limits) {
  Builder<UpdateSet> b;
  for (RepairClass c : kRepairClasses)
    b.add(std::string(class_name(c)), enumerate(db, eta, c, limits).sets);
  AicProgram n = normalize_aic(eta);
  for (RepairClass c : {RepairClass::WR, RepairClass::R, RepairClass::FWR,
                        RepairClass::FR})
    b.add(std::string(class_name(c)) + "[normalized]",
          enumerate(db, n, c, limits).sets);

  b.le("justified-repair-normalized", "justified-repair");
  b.le("justified-repair", "founded-repair");
  b.le("founded-repair", "repair");
  b.eq("repair", "repair[normalized]");
  b.le("justified-weak-repair-normalized", "justified-weak-repair");
  b.le("justified-weak-repair", "founded-weak-repair");
  b.le("founded-weak-repair", "weak-repair");
  b.eq("weak-repair", "weak-repair[normalized]");
  b.eq("founded-repair", "founded-repair[normalized]");
  b.eq("founded-weak-repair", "founded-weak-repair[normalized]");
  b.le("repair", "weak-repair");
  b.le("founded-repair", "founded-weak-repair");
  b.le("justified-repair", "justified-weak-repair");
  b.le("justified-repair-normalized", "justified-weak-repair-normalized");
  return b.out;
}

Lattice lattice(const Database& db, const RevisionProgram& p,
                const EnumerationLimits& limits) {
  Builder<RevisionSet> b;
  for (RevisionClass c : kRevisionClasses) {
    if (c == RevisionClass::SuppRev && !p.normal()) continue;
    b.add(std::string(class_name(c)), enumerate_rev(p, db, c, limits).sets);
  }
  RevisionProgram n = normalize_rev(p);
  for (RevisionClass c : {RevisionClass::WRev, RevisionClass::Rev,
                          RevisionClass::FWRev, RevisionClass::FRev})
    b.add(std::string(class_name(c)) + "[normalized]",
          enumerate_rev(n, db, c, limits).sets);

  b.le("justified-revision-normalized", "justified-revision");
  b.le("justified-revision", "founded-revision");
  b.le("founded-revision", "revision");
  b.eq("revision", "revision[normalized]");
  b.le("justified-weak-revision-normalized", "justified-weak-revision");
  b.le("justified-weak-revision", "founded-weak-revision");
  b.le("founded-weak-revision", "weak-revision");
  b.eq("weak-revision", "weak-revision[normalized]");
  b.eq("founded-revision", "founded-revision[normalized]");
  b.eq("founded-weak-revision", "founded-weak-revision[normalized]");
  b.le("revision", "weak-revision");
  b.le("founded-revision", "founded-weak-revision");
  b.le("justified-revision", "justified-weak-revision");
  b.le("justified-revision-normalized", "justified-weak-revision-normalized");
  if (p.normal()) b.eq("founded-weak-revision", "supported-revision");
  return b.out;
}

}  // namespace aicrepair
