// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: crackwave_acceptance [N ...] [--jobs J] [--verbose]
#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "crackwave/validation.hpp"

int main(int argc, char** argv) {
  std::vector<int> selected;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--jobs" && i + 1 < argc) {
      jobs = std::atoi(argv[++i]);
    } else if (a == "--verbose" || a == "-v") {
      verbose = true;
    } else {
      selected.push_back(std::atoi(a.c_str()));
    }
  }
  if (selected.empty()) selected = crackwave::criterion_numbers();

  int failed = 0;
  for (int n : selected) {
    const crackwave::CriterionResult r = crackwave::run_criterion(n, jobs);
    std::printf("%s  %2d  %-40s %8.2f s\n", r.pass() ? "PASS" : "FAIL", r.number, r.title.c_str(), r.seconds);
    for (const auto& row : r.rows) {
      if (!verbose && row.pass) continue;
      std::printf("        %-4s %-44s target=%-12.6g computed=%-14.8g tol=%-8.3g %s\n", row.pass ? "ok" : "FAIL",
                  row.id.c_str(), row.target, row.computed, row.tolerance, row.note.c_str());
    }
    std::fflush(stdout);
    if (!r.pass()) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(selected.size()) - failed, selected.size());
  return failed == 0 ? 0 : 1;
}
