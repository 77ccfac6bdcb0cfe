#pragma once

#include <vector>

#include "aicrepair/core.hpp"
#include "aicrepair/enumerate.hpp"

namespace aicrepair {

struct LpRule {
  AtomSet head;
  AtomSet pos;
  AtomSet neg;

  bool normal() const { return head.size() <= 1; }
  // No atom occurs twice across head, pos and neg.
  bool simple() const {
    return !head.intersects(pos) && !head.intersects(neg) &&
           !pos.intersects(neg);
  }
  AtomSet atoms() const { return head | pos | neg; }
  friend bool operator==(const LpRule&, const LpRule&) = default;
};

using LogicProgram = Program<LpRule>;

bool is_simple(const LogicProgram& p);
LogicProgram reduct(const LogicProgram& p, const AtomSet& m);
// m satisfies every rule, reading "not" against m itself.
bool is_model(const AtomSet& m, const LogicProgram& p);
bool is_answer_set(const LogicProgram& p, const AtomSet& m);
// Brute force over all subsets of the universe; sorted.
std::vector<AtomSet> answer_sets(const LogicProgram& p,
                                 const EnumerationLimits& limits = {});

// not a1, ..., not ak, body > +a1 | ... | +ak. Throws NotSimpleRule.
AicRule aic_of_rule(const Universe& u, const LpRule& r);
AicProgram aic_of_program(const LogicProgram& p);

}  // namespace aicrepair
