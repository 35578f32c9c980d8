// Runs the 14 acceptance criteria and prints one line per criterion.
#include <cstdio>

#include "dmw/selftest.hpp"

int main() {
  auto results = dmw::run_acceptance();
  bool all = true;
  for (const auto& r : results) {
    std::printf("criterion %2d: %s — %s (%s; %.0f ms)\n", r.id,
                r.pass ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str(),
                r.ms);
    all = all && r.pass;
  }
  std::printf("%s\n", all ? "all 14 criteria passed"
                          : "ACCEPTANCE FAILURES PRESENT");
  return all ? 0 : 1;
}
