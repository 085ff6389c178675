#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stern::verify {

/// Outcome of one verified identity. Failing checks carry the parameters
/// and both sides of the first counterexample.
struct Check {
  std::string suite;
  std::string name;
  std::string params;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

struct Options {
  int base_max = 4;
  std::uint64_t n_max = 256;
  int product_n_max = 4;       // N range of the finite product identity
  unsigned cf_l_max = 4;       // convergent depth
  unsigned jacobsthal_k_max = 40;
  std::uint64_t scan_bound = 250'000;
  std::uint64_t seed = 24601;
  int trials = 40;             // random ring-property trials per base
};

const std::vector<std::string>& suite_names();

/// Runs one suite ("ring", "core", "oracle", "product", "matrix",
/// "extremal", "cf") or "all".
std::vector<Check> run_suite(const std::string& suite, const Options& opt);

}  // namespace stern::verify
