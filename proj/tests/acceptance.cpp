// Runs the sixteen acceptance checks with the default bounds and prints one
// line per criterion. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>

#include "lcsfi/verify.hpp"

using namespace lcsfi;

namespace {
// Wall-clock limits in seconds; 0 means none.
double time_limit(int criterion) {
  switch (criterion) {
    case 1:
    case 2:
      return 1.0;
    case 6:
      return 10.0;
    default:
      return 0.0;
  }
}
}  // namespace

int main() {
  const VerifyConfig cfg;
  int failed = 0;
  for (const CheckInfo& info : verify_checks()) {
    if (info.criterion == 0) continue;
    const auto t0 = std::chrono::steady_clock::now();
    const CheckResult r = run_check(info.name, cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    bool ok = r.status == CheckStatus::Pass;
    std::string note = r.detail;
    const double limit = time_limit(info.criterion);
    if (ok && limit > 0 && secs >= limit) {
      ok = false;
      note = "took " + std::to_string(secs) + " s, limit " + std::to_string(limit) + " s";
    }
    if (!ok && r.status != CheckStatus::Pass)
      for (const auto& [k, v] : r.witness) note += "; " + k + "=" + v;
    if (!ok) ++failed;
    std::printf("%-4s criterion %2d  %-30s %7.3f s  %s\n", ok ? "PASS" : "FAIL", info.criterion, info.name.c_str(), secs,
                note.c_str());
  }
  std::printf("%d of 16 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
