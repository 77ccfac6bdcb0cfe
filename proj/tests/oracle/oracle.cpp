#include "oracle/oracle.hpp"

#include <algorithm>

namespace oracle {

using aicrepair::RepairClass;
using aicrepair::RevisionClass;

Db to_db(const aicrepair::AtomSet& s) {
  Db out;
  for (auto a : s.atoms()) out.insert(a.id);
  return out;
}

Instance from(const aicrepair::Database& db, const aicrepair::AicProgram& p) {
  Instance in;
  in.n = static_cast<std::uint32_t>(p.universe().size());
  in.db = to_db(db);
  for (const auto& r : p) in.rules.push_back({to_set(r.head()), to_set(r.body())});
  return in;
}

Instance from(const aicrepair::Database& db,
              const aicrepair::RevisionProgram& p) {
  Instance in;
  in.n = static_cast<std::uint32_t>(p.universe().size());
  in.db = to_db(db);
  for (const auto& r : p) in.rules.push_back({to_set(r.head()), to_set(r.body())});
  return in;
}

std::vector<Set> consistent_sets(std::uint32_t n) {
  std::vector<Set> out{Set{}};
  for (std::uint32_t a = 0; a < n; ++a) {
    std::vector<Set> next;
    for (const Set& s : out) {
      next.push_back(s);
      Set p = s;
      p.insert({a, true});
      next.push_back(p);
      Set m = s;
      m.insert({a, false});
      next.push_back(m);
    }
    out = std::move(next);
  }
  return out;
}

namespace {

bool consistent(const Set& s) {
  for (auto [a, pos] : s)
    if (pos && s.count({a, false})) return false;
  return true;
}

bool holds(const Db& db, Item lit) { return db.count(lit.first) == (lit.second ? 1u : 0u); }

bool holds_all(const Db& db, const Set& lits) {
  return std::all_of(lits.begin(), lits.end(), [&](Item l) { return holds(db, l); });
}

Item dual(Item x) { return {x.first, !x.second}; }

std::vector<Set> subsets(const Set& s) {
  std::vector<Set> out{Set{}};
  for (Item x : s) {
    std::size_t k = out.size();
    for (std::size_t i = 0; i < k; ++i) {
      Set t = out[i];
      t.insert(x);
      out.push_back(t);
    }
  }
  return out;
}

bool subset_of(const Set& a, const Set& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Set minus(const Set& a, const Set& b) {
  Set out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

Set unite(const Set& a, const Set& b) {
  Set out = a;
  out.insert(b.begin(), b.end());
  return out;
}

bool disjoint(const Set& a, const Set& b) {
  for (Item x : a)
    if (b.count(x)) return false;
  return true;
}

Set nup(const Rule& r) {
  Set up;
  for (Item h : r.head) up.insert(dual(h));
  return minus(r.body, up);
}

// U contains no action that already holds in I.
bool essential(const Db& i, const Set& u) {
  for (auto [a, pos] : u)
    if (pos == (i.count(a) == 1)) return false;
  return true;
}

bool minimal_enforcement(const Db& i, const Set& u,
                         bool (*sat)(const Db&, const std::vector<Rule>&),
                         const std::vector<Rule>& rules) {
  for (const Set& sub : subsets(u))
    if (sub != u && sat(apply(i, sub), rules)) return false;
  return true;
}

bool founded_aic(const Instance& in, const std::vector<Rule>& rules,
                 const Set& u) {
  Db r = apply(in.db, u);
  for (Item alpha : u) {
    bool ok = false;
    for (const Rule& rule : rules) {
      if (!rule.head.count(alpha)) continue;
      bool others = true;
      for (Item beta : rule.head)
        if (beta != alpha && !holds(r, dual(beta))) others = false;
      if (others && holds_all(r, nup(rule))) ok = true;
    }
    if (!ok) return false;
  }
  return true;
}

Set restricted_ne(const Instance& in, const Db& r, NeMode mode) {
  Set ne = no_effect(in.n, in.db, r);
  if (mode == NeMode::Full) return ne;
  Set out;
  for (Item x : ne) {
    if (x.second) {
      out.insert(x);
      continue;
    }
    bool keep = false;
    for (const Rule& rule : in.rules) {
      if (rule.body.count({x.first, false})) keep = true;
      if (mode == NeMode::BodyOrHead && rule.head.count(x)) keep = true;
    }
    if (keep) out.insert(x);
  }
  return out;
}

// Every E = U \ ne(I, I o U) for a justified action set U.
std::vector<Set> jwr_by_definition(const Instance& in, NeMode mode) {
  std::vector<Set> out;
  for (const Set& u : consistent_sets(in.n)) {
    if (!justified_action_set(in, u, mode)) continue;
    out.push_back(minus(u, restricted_ne(in, apply(in.db, u), mode)));
  }
  return out;
}

Set inertia(std::uint32_t n, const Db& i, const Db& r) { return no_effect(n, i, r); }

bool rev_closed(const Set& u, const std::vector<Rule>& rules) {
  for (const Rule& r : rules) {
    if (!subset_of(r.body, u)) continue;
    if (disjoint(r.head, u)) return false;
  }
  return true;
}

bool justified_update(const Instance& in, const std::vector<Rule>& rules,
                      const Set& u) {
  if (!consistent(u)) return false;
  std::vector<Rule> with_facts = rules;
  for (Item x : inertia(in.n, in.db, apply(in.db, u)))
    with_facts.push_back({{x}, {}});
  if (!rev_closed(u, with_facts)) return false;
  for (const Set& sub : subsets(u))
    if (sub != u && rev_closed(sub, with_facts)) return false;
  return true;
}

bool founded_rev(const Instance& in, const std::vector<Rule>& rules,
                 const Set& e) {
  Db r = apply(in.db, e);
  for (Item alpha : e) {
    bool ok = false;
    for (const Rule& rule : rules) {
      if (!rule.head.count(alpha) || !holds_all(r, rule.body)) continue;
      bool others = true;
      for (Item beta : rule.head)
        if (beta != alpha && !holds(r, dual(beta))) others = false;
      if (others) ok = true;
    }
    if (!ok) return false;
  }
  return true;
}

std::vector<Set> sorted_unique(std::vector<Set> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Db apply(const Db& db, const Set& u) {
  Db out = db;
  for (auto [a, pos] : u)
    if (pos) out.insert(a);
  for (auto [a, pos] : u)
    if (!pos) out.erase(a);
  return out;
}

Set no_effect(std::uint32_t n, const Db& i, const Db& r) {
  Set out;
  for (std::uint32_t a = 0; a < n; ++a) {
    if (i.count(a) && r.count(a)) out.insert({a, true});
    if (!i.count(a) && !r.count(a)) out.insert({a, false});
  }
  return out;
}

bool aic_sat(const Db& db, const std::vector<Rule>& rules) {
  for (const Rule& r : rules)
    if (holds_all(db, r.body)) return false;
  return true;
}

bool rev_sat(const Db& db, const std::vector<Rule>& rules) {
  for (const Rule& r : rules) {
    if (!holds_all(db, r.body)) continue;
    bool some = false;
    for (Item h : r.head)
      if (holds(db, h)) some = true;
    if (!some) return false;
  }
  return true;
}

bool aic_closed(const Set& u, const std::vector<Rule>& rules) {
  for (const Rule& r : rules)
    if (subset_of(nup(r), u) && disjoint(r.head, u)) return false;
  return true;
}

bool justified_action_set(const Instance& in, const Set& u, NeMode mode) {
  if (!consistent(u)) return false;
  Set ne = restricted_ne(in, apply(in.db, u), mode);
  if (!subset_of(ne, u) || !aic_closed(u, in.rules)) return false;
  for (const Set& sub : subsets(u))
    if (sub != u && subset_of(ne, sub) && aic_closed(sub, in.rules))
      return false;
  return true;
}

std::vector<Rule> normalize_aic(const std::vector<Rule>& rules) {
  std::vector<Rule> out;
  for (const Rule& r : rules) {
    if (r.head.size() <= 1) {
      out.push_back(r);
      continue;
    }
    for (Item h : r.head) out.push_back({{h}, r.body});
  }
  return out;
}

std::vector<Rule> normalize_rev(const std::vector<Rule>& rules) {
  std::vector<Rule> out;
  for (const Rule& r : rules) {
    if (r.head.size() <= 1) {
      out.push_back(r);
      continue;
    }
    for (Item h : r.head) {
      Set body = r.body;
      for (Item g : r.head)
        if (g != h) body.insert(dual(g));
      out.push_back({{h}, body});
    }
  }
  return out;
}

std::vector<Set> aic_class(const Instance& in, RepairClass c, NeMode mode) {
  if (c == RepairClass::JWR_N || c == RepairClass::JR_N) {
    Instance n = in;
    n.rules = normalize_aic(in.rules);
    return aic_class(n, c == RepairClass::JWR_N ? RepairClass::JWR : RepairClass::JR,
                     mode);
  }
  std::vector<Set> out;
  if (c == RepairClass::JWR || c == RepairClass::JR) {
    for (const Set& e : jwr_by_definition(in, mode)) {
      if (c == RepairClass::JR &&
          !minimal_enforcement(in.db, e, aic_sat, in.rules))
        continue;
      out.push_back(e);
    }
    return sorted_unique(out);
  }
  for (const Set& u : consistent_sets(in.n)) {
    if (!essential(in.db, u) || !aic_sat(apply(in.db, u), in.rules)) continue;
    bool minimal = minimal_enforcement(in.db, u, aic_sat, in.rules);
    bool founded = founded_aic(in, in.rules, u);
    bool keep = false;
    switch (c) {
      case RepairClass::WR: keep = true; break;
      case RepairClass::R: keep = minimal; break;
      case RepairClass::FWR: keep = founded; break;
      case RepairClass::FR: keep = founded && minimal; break;
      default: break;
    }
    if (keep) out.push_back(u);
  }
  return sorted_unique(out);
}

bool aic_member(const Instance& in, RepairClass c, const Set& u, NeMode mode) {
  auto all = aic_class(in, c, mode);
  return std::binary_search(all.begin(), all.end(), u);
}

std::vector<Set> rev_class(const Instance& in, RevisionClass c) {
  if (c == RevisionClass::JWRev_N || c == RevisionClass::JRev_N) {
    Instance n = in;
    n.rules = normalize_rev(in.rules);
    return rev_class(n, c == RevisionClass::JWRev_N ? RevisionClass::JWRev
                                                    : RevisionClass::JRev);
  }
  std::vector<Set> out;
  if (c == RevisionClass::JWRev || c == RevisionClass::JRev) {
    for (const Set& u : consistent_sets(in.n)) {
      if (!justified_update(in, in.rules, u)) continue;
      Set e = minus(u, inertia(in.n, in.db, apply(in.db, u)));
      if (c == RevisionClass::JRev &&
          !minimal_enforcement(in.db, e, rev_sat, in.rules))
        continue;
      out.push_back(e);
    }
    return sorted_unique(out);
  }
  if (c == RevisionClass::SuppRev) {
    for (const Set& u : consistent_sets(in.n)) {
      Db r = apply(in.db, u);
      Set heads;
      bool bottom = false;
      for (const Rule& rule : in.rules)
        if (holds_all(r, rule.body)) {
          heads = unite(heads, rule.head);
          bottom = bottom || rule.head.empty();
        }
      if (!bottom && heads == u) out.push_back(minus(u, inertia(in.n, in.db, r)));
    }
    return sorted_unique(out);
  }
  for (const Set& e : consistent_sets(in.n)) {
    Db r = apply(in.db, e);
    if (!disjoint(e, inertia(in.n, in.db, r)) || !rev_sat(r, in.rules)) continue;
    bool minimal = minimal_enforcement(in.db, e, rev_sat, in.rules);
    bool founded = founded_rev(in, in.rules, e);
    bool keep = false;
    switch (c) {
      case RevisionClass::WRev: keep = true; break;
      case RevisionClass::Rev: keep = minimal; break;
      case RevisionClass::FWRev: keep = founded; break;
      case RevisionClass::FRev: keep = founded && minimal; break;
      default: break;
    }
    if (keep) out.push_back(e);
  }
  return sorted_unique(out);
}

bool rev_member(const Instance& in, RevisionClass c, const Set& u) {
  auto all = rev_class(in, c);
  return std::binary_search(all.begin(), all.end(), u);
}

std::optional<Set> least_closed_superset(std::uint32_t n, const Set& seed,
                                         const std::vector<Rule>& rules) {
  Set universe;
  for (std::uint32_t a = 0; a < n; ++a) {
    universe.insert({a, true});
    universe.insert({a, false});
  }
  std::vector<Set> closed;
  for (const Set& extra : subsets(minus(universe, seed))) {
    Set s = unite(seed, extra);
    if (aic_closed(s, rules)) closed.push_back(s);
  }
  for (const Set& c : closed) {
    bool least = std::all_of(closed.begin(), closed.end(),
                             [&](const Set& d) { return subset_of(c, d); });
    if (least) return c;
  }
  return std::nullopt;
}

std::vector<Db> answer_sets(const aicrepair::LogicProgram& p) {
  struct R {
    Db head, pos, neg;
  };
  std::vector<R> rules;
  for (const auto& r : p) rules.push_back({to_db(r.head), to_db(r.pos), to_db(r.neg)});
  auto n = static_cast<std::uint32_t>(p.universe().size());
  auto model_of_reduct = [&](const Db& m, const Db& of) {
    for (const R& r : rules) {
      bool blocked = false;
      for (auto a : r.neg)
        if (of.count(a)) blocked = true;
      if (blocked) continue;
      bool body = std::all_of(r.pos.begin(), r.pos.end(),
                              [&](std::uint32_t a) { return m.count(a) > 0; });
      bool head = std::any_of(r.head.begin(), r.head.end(),
                              [&](std::uint32_t a) { return m.count(a) > 0; });
      if (body && !head) return false;
    }
    return true;
  };
  std::vector<Db> all{Db{}};
  for (std::uint32_t a = 0; a < n; ++a) {
    std::size_t k = all.size();
    for (std::size_t i = 0; i < k; ++i) {
      Db t = all[i];
      t.insert(a);
      all.push_back(t);
    }
  }
  std::vector<Db> out;
  for (const Db& m : all) {
    if (!model_of_reduct(m, m)) continue;
    bool minimal = true;
    for (const Db& s : all)
      if (s != m && std::includes(m.begin(), m.end(), s.begin(), s.end()) &&
          model_of_reduct(s, m))
        minimal = false;
    if (minimal) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
