// Acceptance suite: one PASS/FAIL/SKIPPED line per criterion.
// Slow criteria run with --slow or WREATH_SLOW=1.

#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <iostream>

#include <wreath/acceptance.hpp>

int main(int argc, char** argv) {
  wreath::AcceptanceOptions opt;
  const char* env = std::getenv("WREATH_SLOW");
  opt.slow = env && *env && std::strcmp(env, "0") != 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--slow") == 0) {
      opt.slow = true;
    } else if (std::strcmp(argv[i], "--cache-dir") == 0 && i + 1 < argc) {
      opt.cache_dir = argv[++i];
    } else {
      std::cerr << "usage: acceptance [--slow] [--cache-dir DIR]\n";
      return 2;
    }
  }
  int failed = 0, passed = 0, skipped = 0;
  wreath::run_acceptance(opt, [&](const wreath::CriterionResult& r) {
    std::cout << std::left << std::setw(8) << wreath::to_string(r.status) << std::setw(5) << r.id << r.name;
    if (r.status != wreath::Status::Skipped) std::cout << " [" << std::fixed << std::setprecision(2) << r.seconds << "s]";
    std::cout << "\n        " << r.detail << std::endl;
    if (r.status == wreath::Status::Fail) ++failed;
    else if (r.status == wreath::Status::Pass) ++passed;
    else ++skipped;
  });
  std::cout << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  return failed ? 1 : 0;
}
