#pragma once

// Seeded instance samplers for the growth procedures, shared by the CLI and
// the verification suite. Each sampler draws from the parameter region the
// worked instances occupy: chord pairs and cross sets symmetric across the
// distinguished axis, attachments at axis-fixed indices, and the pinned
// swap-symmetric base. See the regression tests for parameter choices just
// outside these regions that break cospectrality.

#include <cstdint>
#include <vector>

#include "qspectral/generators.hpp"

namespace qspectral {

// procedure in 1..5; returns `count` verified reports.
std::vector<GeneratorReport> sample_procedure_instances(int procedure, int count,
                                                        std::uint32_t seed);

}  // namespace qspectral
