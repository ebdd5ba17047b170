#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ujac {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the full acceptance suite; one result per criterion. When `print` is
// set, emits one PASS/FAIL line per criterion as it completes.
std::vector<CriterionResult> run_acceptance(bool print);

bool all_pass(const std::vector<CriterionResult>& results);

// Proves the suite detects an injected sign flip in the torus trace: returns
// the name of the criterion that catches it, or an empty string if none does.
std::string run_mutation_check();

// File cache keyed by (key, engine version); corrupt or mismatched entries
// are recomputed and rewritten. With bypass set, always recomputes.
struct CacheConfig {
  std::string dir;
  bool bypass = false;
};
std::string cached_or_compute(const CacheConfig& cfg, const std::string& key,
                              const std::function<std::string()>& compute);

}  // namespace ujac
