#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "aicrepair/atom_set.hpp"
#include "aicrepair/errors.hpp"

namespace aicrepair {

class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<std::string> names, bool declared = false);

  std::size_t size() const { return names_.size(); }
  bool declared() const { return declared_; }
  const std::string& name(Atom a) const { return names_.at(a.id); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Atom> find(std::string_view name) const;
  Atom at(std::string_view name) const;  // throws UnknownAtom
  bool contains(Atom a) const { return a.id < names_.size(); }
  const AtomSet& all() const { return all_; }

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Atom> index_;
  AtomSet all_;
  bool declared_ = false;
};

using UniversePtr = std::shared_ptr<const Universe>;
using Database = AtomSet;

struct LiteralTag {};
struct ActionTag {};
struct RevisionTag {};

// A signed atom. positive reads as a / +a / in(a) depending on Tag.
template <class Tag>
struct Signed {
  Atom atom;
  bool positive = true;

  constexpr Signed dual() const { return {atom, !positive}; }
  friend constexpr bool operator==(Signed, Signed) = default;
  friend constexpr std::strong_ordering operator<=>(Signed x, Signed y) {
    if (auto c = x.atom <=> y.atom; c != 0) return c;
    return y.positive <=> x.positive;  // positive first
  }
};

using Literal = Signed<LiteralTag>;
using UpdateAction = Signed<ActionTag>;
using RevisionLiteral = Signed<RevisionTag>;

constexpr Literal pos(Atom a) { return {a, true}; }
constexpr Literal neg(Atom a) { return {a, false}; }
constexpr UpdateAction plus(Atom a) { return {a, true}; }
constexpr UpdateAction minus(Atom a) { return {a, false}; }
constexpr RevisionLiteral in(Atom a) { return {a, true}; }
constexpr RevisionLiteral out(Atom a) { return {a, false}; }

template <class To, class From>
constexpr Signed<To> retag(Signed<From> s) {
  return {s.atom, s.positive};
}
constexpr UpdateAction ua(Literal l) { return retag<ActionTag>(l); }
constexpr UpdateAction ua(RevisionLiteral l) { return retag<ActionTag>(l); }
constexpr Literal lit(UpdateAction a) { return retag<LiteralTag>(a); }
constexpr Literal lit(RevisionLiteral a) { return retag<LiteralTag>(a); }

template <class Tag>
class SignedSet {
 public:
  using value_type = Signed<Tag>;

  SignedSet() = default;
  SignedSet(AtomSet positive, AtomSet negative)
      : pos_(std::move(positive)), neg_(std::move(negative)) {}
  SignedSet(std::initializer_list<value_type> xs) {
    for (auto x : xs) insert(x);
  }

  const AtomSet& positive() const { return pos_; }
  const AtomSet& negative() const { return neg_; }
  // Atoms mentioned with either sign.
  AtomSet atoms() const { return pos_ | neg_; }

  bool contains(value_type x) const {
    return x.positive ? pos_.contains(x.atom) : neg_.contains(x.atom);
  }
  void insert(value_type x) { (x.positive ? pos_ : neg_).insert(x.atom); }
  void erase(value_type x) { (x.positive ? pos_ : neg_).erase(x.atom); }

  bool empty() const { return pos_.empty() && neg_.empty(); }
  std::size_t size() const { return pos_.size() + neg_.size(); }
  bool consistent() const { return !pos_.intersects(neg_); }
  bool is_subset_of(const SignedSet& o) const {
    return pos_.is_subset_of(o.pos_) && neg_.is_subset_of(o.neg_);
  }
  bool intersects(const SignedSet& o) const {
    return pos_.intersects(o.pos_) || neg_.intersects(o.neg_);
  }
  SignedSet dual() const { return {neg_, pos_}; }

  SignedSet& operator|=(const SignedSet& o) {
    pos_ |= o.pos_;
    neg_ |= o.neg_;
    return *this;
  }
  SignedSet& operator&=(const SignedSet& o) {
    pos_ &= o.pos_;
    neg_ &= o.neg_;
    return *this;
  }
  SignedSet& operator-=(const SignedSet& o) {
    pos_ -= o.pos_;
    neg_ -= o.neg_;
    return *this;
  }
  friend SignedSet operator|(SignedSet a, const SignedSet& b) { return a |= b; }
  friend SignedSet operator&(SignedSet a, const SignedSet& b) { return a &= b; }
  friend SignedSet operator-(SignedSet a, const SignedSet& b) { return a -= b; }
  friend bool operator==(const SignedSet&, const SignedSet&) = default;

  // Canonical order: by atom id, positive sign first.
  std::vector<value_type> elements() const {
    std::vector<value_type> out;
    out.reserve(size());
    AtomSet both = pos_ | neg_;
    both.for_each([&](Atom a) {
      if (pos_.contains(a)) out.push_back({a, true});
      if (neg_.contains(a)) out.push_back({a, false});
    });
    return out;
  }

 private:
  AtomSet pos_;
  AtomSet neg_;
};

using LiteralSet = SignedSet<LiteralTag>;
using UpdateSet = SignedSet<ActionTag>;
using RevisionSet = SignedSet<RevisionTag>;

template <class To, class From>
SignedSet<To> retag(const SignedSet<From>& s) {
  return {s.positive(), s.negative()};
}
inline UpdateSet ua(const LiteralSet& s) { return retag<ActionTag>(s); }
inline UpdateSet ua(const RevisionSet& s) { return retag<ActionTag>(s); }
inline LiteralSet lit(const UpdateSet& s) { return retag<LiteralTag>(s); }
inline LiteralSet lit(const RevisionSet& s) { return retag<LiteralTag>(s); }

// Lexicographic order on canonical element sequences; used to sort results.
template <class Tag>
bool canonical_less(const SignedSet<Tag>& a, const SignedSet<Tag>& b) {
  auto x = a.elements();
  auto y = b.elements();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

// {+a | a in db} or {in(a) | a in db}
template <class Tag>
SignedSet<Tag> positive_part(const AtomSet& db) {
  return {db, AtomSet{}};
}

class AicRule {
 public:
  const LiteralSet& body() const { return body_; }
  const UpdateSet& head() const { return head_; }
  const LiteralSet& up() const { return up_; }
  const LiteralSet& nup() const { return nup_; }
  bool normal() const { return head_.size() <= 1; }
  // Some atom occurs in the body with both polarities.
  bool unsatisfiable_body() const { return !body_.consistent(); }
  AtomSet atoms() const { return body_.atoms() | head_.atoms(); }

  friend bool operator==(const AicRule& a, const AicRule& b) {
    return a.body_ == b.body_ && a.head_ == b.head_;
  }

 private:
  friend AicRule validate_aic_rule(const Universe&, LiteralSet, UpdateSet);
  AicRule(LiteralSet body, UpdateSet head);
  LiteralSet body_;
  UpdateSet head_;
  LiteralSet up_;
  LiteralSet nup_;
};

// Checks condition {lit(a)^D | a in head} subset of body and atom ranges.
AicRule validate_aic_rule(const Universe& u, LiteralSet body, UpdateSet head);

class RevisionRule {
 public:
  const RevisionSet& head() const { return head_; }
  const RevisionSet& body() const { return body_; }
  bool normal() const { return head_.size() <= 1; }
  // No head literal is the dual of a body literal.
  bool proper() const { return !head_.dual().intersects(body_); }
  AtomSet atoms() const { return body_.atoms() | head_.atoms(); }

  friend bool operator==(const RevisionRule&, const RevisionRule&) = default;

 private:
  friend RevisionRule validate_revision_rule(const Universe&, RevisionSet,
                                             RevisionSet);
  RevisionRule(RevisionSet head, RevisionSet body)
      : head_(std::move(head)), body_(std::move(body)) {}
  RevisionSet head_;
  RevisionSet body_;
};

RevisionRule validate_revision_rule(const Universe& u, RevisionSet head,
                                    RevisionSet body);

template <class Rule>
class Program {
 public:
  using rule_type = Rule;

  explicit Program(UniversePtr u) : universe_(std::move(u)) {}
  Program(UniversePtr u, std::vector<Rule> rules)
      : universe_(std::move(u)), rules_(std::move(rules)) {
    for (const Rule& r : rules_) check(r);
  }

  void add(Rule r) {
    check(r);
    rules_.push_back(std::move(r));
  }

  const Universe& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const { return universe_; }
  std::span<const Rule> rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }
  auto begin() const { return rules_.begin(); }
  auto end() const { return rules_.end(); }
  const Rule& operator[](std::size_t i) const { return rules_[i]; }

  bool normal() const {
    for (const Rule& r : rules_)
      if (!r.normal()) return false;
    return true;
  }

  friend bool operator==(const Program& a, const Program& b) {
    return *a.universe_ == *b.universe_ && a.rules_ == b.rules_;
  }

 private:
  void check(const Rule& r) const {
    if (!r.atoms().is_subset_of(universe_->all()))
      throw UnknownAtom("rule mentions an atom outside the universe");
  }

  UniversePtr universe_;
  std::vector<Rule> rules_;
};

using AicProgram = Program<AicRule>;
using RevisionProgram = Program<RevisionRule>;

inline bool all_proper(const RevisionProgram& p) {
  for (const auto& r : p)
    if (!r.proper()) return false;
  return true;
}

enum class RepairClass { WR, R, FWR, FR, JWR, JR, JWR_N, JR_N };
enum class RevisionClass {
  WRev, Rev, FWRev, FRev, JWRev, JRev, JWRev_N, JRev_N, SuppRev
};

inline constexpr RepairClass kRepairClasses[] = {
    RepairClass::WR,  RepairClass::R,  RepairClass::FWR,   RepairClass::FR,
    RepairClass::JWR, RepairClass::JR, RepairClass::JWR_N, RepairClass::JR_N};
inline constexpr RevisionClass kRevisionClasses[] = {
    RevisionClass::WRev,    RevisionClass::Rev,    RevisionClass::FWRev,
    RevisionClass::FRev,    RevisionClass::JWRev,  RevisionClass::JRev,
    RevisionClass::JWRev_N, RevisionClass::JRev_N, RevisionClass::SuppRev};

std::string_view class_name(RepairClass c);
std::string_view class_name(RevisionClass c);
std::optional<RepairClass> parse_repair_class(std::string_view s);
std::optional<RevisionClass> parse_revision_class(std::string_view s);

// Text forms: "a" / "not a", "+a" / "-a", "in(a)" / "out(a)".
std::string to_string(const Universe& u, Literal l);
std::string to_string(const Universe& u, UpdateAction a);
std::string to_string(const Universe& u, RevisionLiteral r);
// "{x, y}" in canonical order.
template <class Tag>
std::string to_string(const Universe& u, const SignedSet<Tag>& s) {
  std::string out = "{";
  bool first = true;
  for (auto x : s.elements()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(u, x);
  }
  return out + "}";
}
std::string to_string(const Universe& u, const AtomSet& s);

}  // namespace aicrepair
