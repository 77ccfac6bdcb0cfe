#include "aicrepair/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

namespace aicrepair {

EnumerationLimits EnumerationLimits::from_env() {
  EnumerationLimits l;
  if (const char* v = std::getenv("AICREPAIR_MAX_ATOMS")) {
    try {
      l.max_atoms = std::stoul(v);
    } catch (const std::exception&) {
      throw Error(std::string("AICREPAIR_MAX_ATOMS is not a number: ") + v);
    }
  }
  return l;
}

std::size_t EnumerationLimits::effective_max_atoms() const {
  return std::min(max_atoms, kAtomCeiling);
}

void check_bound(const Universe& u, const EnumerationLimits& limits) {
  if (u.size() > limits.effective_max_atoms())
    throw UniverseTooLarge(u.size(), limits.effective_max_atoms());
}

namespace {

UpdateSet candidate(std::uint64_t mask, const Database& db) {
  AtomSet flip;
  for (std::uint32_t i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1u) flip.insert(Atom{i});
  return {flip - db, flip & db};
}

}  // namespace

std::vector<UpdateSet> enumerate_essential(
    const Universe& u, const Database& db, const EnumerationLimits& limits,
    const std::function<bool(const UpdateSet&)>& pred,
    EnumerationStats& stats) {
  check_bound(u, limits);
  auto start = std::chrono::steady_clock::now();
  const std::uint64_t total = std::uint64_t{1} << u.size();
  const unsigned jobs =
      static_cast<unsigned>(std::clamp<std::uint64_t>(limits.jobs, 1, total));

  std::atomic<std::uint64_t> examined{0};
  std::atomic<bool> stop{false};
  std::vector<std::vector<UpdateSet>> found(jobs);

  auto work = [&](unsigned j) {
    std::uint64_t lo = total * j / jobs;
    std::uint64_t hi = total * (j + 1) / jobs;
    for (std::uint64_t m = lo; m < hi && !stop.load(std::memory_order_relaxed);
         ++m) {
      std::uint64_t n = examined.fetch_add(1, std::memory_order_relaxed) + 1;
      if (limits.max_candidates && n > *limits.max_candidates) {
        stop = true;
        break;
      }
      if (limits.time_budget && (n & 255u) == 0 &&
          std::chrono::steady_clock::now() - start > *limits.time_budget) {
        stop = true;
        break;
      }
      UpdateSet e = candidate(m, db);
      if (pred(e)) found[j].push_back(std::move(e));
    }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j);
    for (auto& t : pool) t.join();
  }

  std::vector<UpdateSet> out;
  for (auto& f : found)
    for (auto& e : f) out.push_back(std::move(e));
  std::sort(out.begin(), out.end(), canonical_less<ActionTag>);

  stats.candidates += std::min(examined.load(), total);
  if (limits.max_candidates) stats.candidates = std::min(stats.candidates, *limits.max_candidates);
  stats.interrupted = stats.interrupted || stop.load();
  stats.elapsed += std::chrono::steady_clock::now() - start;
  return out;
}

}  // namespace aicrepair
