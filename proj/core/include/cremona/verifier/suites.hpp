#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/groupkit/group.hpp"
#include "cremona/verifier/report.hpp"

namespace cremona {

/// all, minkowski, pgl3, lattice, conic, dp1, ..., dp9.
std::vector<std::string> suite_names();

/// Runs the checks registered for `selection`. Failing checks and exceptions
/// inside a check are recorded, never propagated. Throws PreconditionError for
/// an unknown selection.
VerificationReport run_suite(std::string_view selection, std::uint64_t seed = 1,
                             std::size_t cap = kDefaultClosureCap);

}  // namespace cremona
