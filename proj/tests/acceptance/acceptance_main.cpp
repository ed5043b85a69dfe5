#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "cyclab/acceptance.hpp"

// One line per criterion; exit status 1 if any criterion fails.
int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  const auto results = cyclab::run_acceptance(ids);
  int failed = 0;
  for (const auto& r : results) {
    std::printf("criterion %2d %s  %-28s %7.2fs  %s\n", r.id, r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.seconds, r.detail.c_str());
    failed += !r.pass;
  }
  std::printf("%zu criteria, %d failed\n", results.size(), failed);
  return failed == 0 ? 0 : 1;
}
