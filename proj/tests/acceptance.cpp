#include <cstdio>
#include <string>

#include "digitop/suite.hpp"

int main(int argc, char** argv) {
  std::string scope = argc > 1 ? argv[1] : "all";
  int failed = 0;
  auto results = digitop::run_suite(scope, [&](const digitop::CriterionResult& r) {
    bool in_time = r.elapsed_ms <= r.limit_ms;
    bool ok = r.pass && in_time;
    failed += !ok;
    std::printf("%s %2d %-24s %-12s %6lld ms / %lld ms  %s\n", ok ? "PASS" : "FAIL", r.id, r.name.c_str(), r.module.c_str(),
                static_cast<long long>(r.elapsed_ms), static_cast<long long>(r.limit_ms),
                in_time ? r.detail.c_str() : ("over time limit; " + r.detail).c_str());
    std::fflush(stdout);
  });
  std::printf("%zu criteria, %d failed\n", results.size(), failed);
  return failed == 0 ? 0 : 1;
}
