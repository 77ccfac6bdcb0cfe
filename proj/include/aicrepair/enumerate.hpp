#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "aicrepair/core.hpp"

namespace aicrepair {

inline constexpr std::size_t kDefaultMaxAtoms = 12;
inline constexpr std::size_t kAtomCeiling = 20;

struct EnumerationLimits {
  std::size_t max_atoms = kDefaultMaxAtoms;  // clamped to kAtomCeiling
  unsigned jobs = 1;
  std::optional<std::uint64_t> max_candidates;
  std::optional<std::chrono::milliseconds> time_budget;

  // Defaults, with max_atoms taken from AICREPAIR_MAX_ATOMS when set.
  static EnumerationLimits from_env();
  std::size_t effective_max_atoms() const;
};

struct EnumerationStats {
  std::uint64_t candidates = 0;
  std::chrono::nanoseconds elapsed{0};
  // A budget ran out; the result list is partial.
  bool interrupted = false;
};

template <class Set, class Class>
struct Report {
  Class cls;
  std::vector<Set> sets;
  EnumerationStats stats;
};

// Walks every essential action set for db (one candidate per subset of the
// universe), keeps those accepted by pred, and returns them sorted
// canonically. pred must be safe to call from several threads.
std::vector<UpdateSet> enumerate_essential(
    const Universe& u, const Database& db, const EnumerationLimits& limits,
    const std::function<bool(const UpdateSet&)>& pred,
    EnumerationStats& stats);

// Throws UniverseTooLarge when u is over the limit.
void check_bound(const Universe& u, const EnumerationLimits& limits);

// True iff some proper subset s of set (as a list of elements) has pred(s).
// Exponential in |set|.
template <class Tag, class Pred>
bool some_proper_subset(const SignedSet<Tag>& set, Pred&& pred) {
  auto xs = set.elements();
  if (xs.size() > kAtomCeiling * 2) throw UniverseTooLarge(xs.size(), kAtomCeiling * 2);
  std::uint64_t full = (std::uint64_t{1} << xs.size()) - 1;
  for (std::uint64_t m = 0; m < full; ++m) {
    SignedSet<Tag> sub;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if ((m >> i) & 1u) sub.insert(xs[i]);
    if (pred(sub)) return true;
  }
  return false;
}

}  // namespace aicrepair
