#include <cstdio>

#include "ujac/selftest.hpp"

int main() {
  auto results = ujac::run_acceptance(true);
  return ujac::all_pass(results) ? 0 : 1;
}
