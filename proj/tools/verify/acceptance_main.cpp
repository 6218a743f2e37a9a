#include <cstdlib>
#include <iostream>
#include <string>

#include "acceptance.hpp"

// One PASS/FAIL line per criterion; nonzero exit if any fails.
int main(int argc, char** argv) {
  qca::verify::AcceptanceOptions opt;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--rng-seed" && i + 1 < argc) opt.rng_seed = std::strtoull(argv[++i], nullptr, 10);
    else opt.criteria.insert(std::atoi(a.c_str()));
  }
  bool ok = true;
  qca::verify::run_acceptance(opt, [&](const qca::verify::CriterionResult& r) {
    std::cout << qca::verify::format_line(r) << std::endl;
    ok = ok && r.passed;
  });
  return ok ? 0 : 1;
}
