#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace qca::verify {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;  // all checks held and the run finished inside the limit
  double seconds = 0;
  double limit = 0;
  std::vector<std::string> notes;  // failures first, then summary facts
};

struct AcceptanceOptions {
  std::set<int> criteria;  // empty: all
  std::uint64_t rng_seed = 20240601;
};

// Criteria belonging to a named suite: all, a2, a3, triangle.
std::set<int> suite_criteria(const std::string& suite);

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

// "PASS 3 mutation soundness (1.20 s / 60 s): ..." 
std::string format_line(const CriterionResult& r);

}  // namespace qca::verify
