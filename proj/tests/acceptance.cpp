// Runs every named verification target and reports one line per target.
#include <cstdio>

#include "qhall/verify.hpp"

int main() {
  int failures = 0;
  for (const auto& r : qhall::run_all_verify()) {
    if (r.pass) {
      std::printf("PASS %s\n", r.name.c_str());
    } else {
      std::printf("FAIL %s: %s\n", r.name.c_str(), r.detail.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
