#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hopoly/cherednik.hpp"
#include "hopoly/root_system.hpp"

namespace hopoly {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t cases = 25;
  long max_coord = 2;
};

/// Seeded sampling helpers shared by the verify suites.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi);
  /// Rational in (0, 3] with denominator at most 6.
  BigRational positive_k();
  KValues k_values(const RootSystem& rs);
  BigRational small_rational();
  Weight weight(const RootSystem& rs, long max_abs);
  Weight dominant_weight(const RootSystem& rs, long max_coord);
  Vector vector(const RootSystem& rs);
  NumericSum small_sum(const RootSystem& rs);

 private:
  std::mt19937_64 rng_;
};

/// Runs commutativity, both intertwiner relations, the eigen-equation,
/// tilde equivariance, oracle equivalence and subset-sum agreement. The
/// outcome depends only on the root system and the options.
std::vector<SuiteResult> run_verification(const RootSystem& rs, const VerifyOptions& options);

}  // namespace hopoly
