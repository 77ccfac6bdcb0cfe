#include "aicrepair/core.hpp"

#include <array>
#include <utility>

namespace aicrepair {

Universe::Universe(std::vector<std::string> names, bool declared)
    : names_(std::move(names)), declared_(declared) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    Atom a{static_cast<std::uint32_t>(i)};
    if (!index_.emplace(names_[i], a).second)
      throw Error("duplicate atom '" + names_[i] + "' in universe");
  }
  all_ = AtomSet::first(names_.size());
}

std::optional<Atom> Universe::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Atom Universe::at(std::string_view name) const {
  if (auto a = find(name)) return *a;
  throw UnknownAtom("unknown atom '" + std::string(name) + "'");
}

AicRule::AicRule(LiteralSet body, UpdateSet head)
    : body_(std::move(body)), head_(std::move(head)) {
  up_ = lit(head_).dual();
  nup_ = body_ - up_;
}

AicRule validate_aic_rule(const Universe& u, LiteralSet body, UpdateSet head) {
  if (!(body.atoms() | head.atoms()).is_subset_of(u.all()))
    throw UnknownAtom("rule mentions an atom outside the universe");
  for (UpdateAction a : head.elements()) {
    if (!body.contains(lit(a).dual()))
      throw UpdatableConditionViolated(
          "head action " + to_string(u, a) + " needs " +
          to_string(u, lit(a).dual()) + " in the body");
  }
  return AicRule(std::move(body), std::move(head));
}

RevisionRule validate_revision_rule(const Universe& u, RevisionSet head,
                                    RevisionSet body) {
  if (!(body.atoms() | head.atoms()).is_subset_of(u.all()))
    throw UnknownAtom("rule mentions an atom outside the universe");
  if (head.empty() && body.empty())
    throw EmptyRevisionRule("revision rule with empty head and empty body");
  return RevisionRule(std::move(head), std::move(body));
}

namespace {

constexpr std::array<std::pair<RepairClass, std::string_view>, 8> kRepairNames{{
    {RepairClass::WR, "weak-repair"},
    {RepairClass::R, "repair"},
    {RepairClass::FWR, "founded-weak-repair"},
    {RepairClass::FR, "founded-repair"},
    {RepairClass::JWR, "justified-weak-repair"},
    {RepairClass::JR, "justified-repair"},
    {RepairClass::JWR_N, "justified-weak-repair-normalized"},
    {RepairClass::JR_N, "justified-repair-normalized"},
}};

constexpr std::array<std::pair<RevisionClass, std::string_view>, 9>
    kRevisionNames{{
        {RevisionClass::WRev, "weak-revision"},
        {RevisionClass::Rev, "revision"},
        {RevisionClass::FWRev, "founded-weak-revision"},
        {RevisionClass::FRev, "founded-revision"},
        {RevisionClass::JWRev, "justified-weak-revision"},
        {RevisionClass::JRev, "justified-revision"},
        {RevisionClass::JWRev_N, "justified-weak-revision-normalized"},
        {RevisionClass::JRev_N, "justified-revision-normalized"},
        {RevisionClass::SuppRev, "supported-revision"},
    }};

}  // namespace

std::string_view class_name(RepairClass c) {
  for (auto [k, n] : kRepairNames)
    if (k == c) return n;
  return "?";
}

std::string_view class_name(RevisionClass c) {
  for (auto [k, n] : kRevisionNames)
    if (k == c) return n;
  return "?";
}

std::optional<RepairClass> parse_repair_class(std::string_view s) {
  for (auto [k, n] : kRepairNames)
    if (n == s) return k;
  return std::nullopt;
}

std::optional<RevisionClass> parse_revision_class(std::string_view s) {
  for (auto [k, n] : kRevisionNames)
    if (n == s) return k;
  return std::nullopt;
}

std::string to_string(const Universe& u, Literal l) {
  return (l.positive ? "" : "not ") + u.name(l.atom);
}

std::string to_string(const Universe& u, UpdateAction a) {
  return (a.positive ? "+" : "-") + u.name(a.atom);
}

std::string to_string(const Universe& u, RevisionLiteral r) {
  return (r.positive ? "in(" : "out(") + u.name(r.atom) + ")";
}

std::string to_string(const Universe& u, const AtomSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Atom a) {
    if (!first) out += ", ";
    first = false;
    out += u.name(a);
  });
  return out + "}";
}

}  // namespace aicrepair
