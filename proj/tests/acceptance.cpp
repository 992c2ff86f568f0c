// Acceptance suite: one PASS/FAIL line per criterion. Comparisons are exact.

#include <cstdio>

#include "hopflift/suite.hpp"

int main() {
  const std::size_t total = hopflift::criterion_count();
  std::size_t passed = 0;
  for (std::size_t i = 1; i <= total; ++i) {
    const auto r = hopflift::run_criterion(static_cast<int>(i));
    passed += r.pass;
    std::printf("criterion %2d %s  %s: %s (%.1fs)\n", r.id, r.pass ? "PASS" : "FAIL", r.name.c_str(), r.note.c_str(),
                r.seconds);
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria pass\n", passed, total);
  return passed == total ? 0 : 1;
}
