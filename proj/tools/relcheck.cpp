#include <cstdio>

#include "torus2/braid.hpp"

int main() {
  int failures = 0;
  for (const auto& r : torus2::check_relations()) {
    std::printf("%s  %s\n", r.pass ? "ok  " : "FAIL", r.name.c_str());
    if (!r.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
