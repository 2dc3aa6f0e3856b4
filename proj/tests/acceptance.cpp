// Runs every acceptance criterion and prints one line per criterion.
#include <cstdio>
#include <exception>

#include "bosonic/verify.hpp"

int main() {
  const auto& names = bosonic::suite_names();
  int failed = 0;
  for (std::size_t n = 0; n < names.size(); ++n) {
    bool ok = false;
    std::string why;
    double secs = 0;
    try {
      const bosonic::SuiteReport r = bosonic::run_suite(names[n]);
      ok = r.ok();
      secs = r.seconds;
      for (const auto& c : r.checks)
        if (!c.ok) {
          why = c.name + ": " + c.detail;
          break;
        }
    } catch (const std::exception& e) {
      why = e.what();
    }
    std::printf("criterion %zu %s: %s (%.2f s)%s%s\n", n + 1, names[n].c_str(), ok ? "PASS" : "FAIL", secs,
                why.empty() ? "" : " ", why.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
