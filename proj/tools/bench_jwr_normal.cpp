// Times the polynomial justified-weak-repair test for normal programs
// against the generic checker on chains
//   not x1 -> +x1.  x1, not x2 -> +x2.  ...  x(n-1), not xn -> +xn.
// with I empty and E = {+x1, ..., +xn}. The generic checker walks the
// subsets of E; the normal-program test runs one closure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "aicrepair/aic.hpp"

using namespace aicrepair;

namespace {

double millis(std::chrono::steady_clock::duration d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t max_n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 20;
  std::size_t generic_cap = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 18;
  std::printf("%6s %16s %16s %8s\n", "atoms", "normal_ms", "generic_ms", "agree");
  for (std::size_t n = 2; n <= max_n; n += 2) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    auto u = std::make_shared<const Universe>(names);
    AicProgram eta(u);
    UpdateSet e;
    for (std::uint32_t i = 0; i < n; ++i) {
      LiteralSet body{neg(Atom{i})};
      if (i > 0) body.insert(pos(Atom{i - 1}));
      eta.add(validate_aic_rule(*u, body, {plus(Atom{i})}));
      e.insert(plus(Atom{i}));
    }
    auto t0 = std::chrono::steady_clock::now();
    bool fast = decide_jwr_normal({}, eta, e);
    auto t1 = std::chrono::steady_clock::now();
    if (n <= generic_cap) {
      bool slow = check_justified_weak_repair({}, eta, e);
      auto t2 = std::chrono::steady_clock::now();
      std::printf("%6zu %16.4f %16.4f %8s\n", n, millis(t1 - t0),
                  millis(t2 - t1), fast == slow ? "yes" : "NO");
    } else {
      std::printf("%6zu %16.4f %16s %8s\n", n, millis(t1 - t0), "-", "-");
    }
  }
}
