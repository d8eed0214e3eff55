#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "orelclm/document.hpp"
#include "orelclm/lclm.hpp"

namespace orelclm::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

struct BenchRecord {
  int n = 0;
  int k = 0;
  std::string algorithm;
  std::uint64_t seed = 0;
  double time_ms = 0;
  int order = -1;
  int degree = -1;
  long size = -1;
};

/// k operators of exact order r with uniform random coefficients of degree <= d.
OperatorDocument random_document(const PrimeField& f, int k, int d, int r, std::uint64_t seed);

/// Times one LCLM computation on random_document(f, k, n, n, seed).
BenchRecord bench_case(const PrimeField& f, int n, int k, const std::string& algorithm, std::uint64_t seed);
std::string bench_csv_header();
std::string to_csv(const BenchRecord& r);

struct SelfcheckReport {
  struct Property {
    std::string name;
    int passed = 0;
    int total = 0;
  };
  std::vector<Property> properties;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Divisibility, minimality, bounds, cross-algorithm equality and CLM bounds
/// on `trials` random instances.  force_failure corrupts the first result.
SelfcheckReport selfcheck(std::uint64_t seed, int trials, bool force_failure = false);

/// Full command line, argv[0] excluded.  Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace orelclm::cli
