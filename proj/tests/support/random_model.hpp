#pragma once

// Random well-formed architectures for property tests.

#include <cstdint>
#include <random>
#include <string>

#include "sccadl/model.hpp"

namespace sccadl::testing {

struct RandomModelOptions {
  int maxContexts = 5;
  int maxControllers = 3;
  int maxOperators = 8;
  int maxDisjuncts = 2;
  int maxPulls = 2;
};

/// Small enough that the brute-force enumerator handles most seeds.
inline constexpr RandomModelOptions kOracleSized{.maxContexts = 3, .maxControllers = 2, .maxOperators = 5};

/// Architecture text that passes every check. The same seed always yields
/// the same text.
std::string random_architecture(std::uint32_t seed, const RandomModelOptions& options = {});

/// Invariant text over the elements of `model`: a mix of never, precedes and
/// leadsto lines, some with wildcards and some naming unlicensed methods.
std::string random_invariants(std::uint32_t seed, const ArchitectureModel& model, int count);

}  // namespace sccadl::testing
