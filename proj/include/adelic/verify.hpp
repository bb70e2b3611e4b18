#pragma once

#include "adelic/serialize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace adelic {

enum class Suite { Core, Traces, Duality, All };

/// Throws ParseError for anything but core, traces, duality or all.
Suite parse_suite(const std::string& name);

struct VerifyOptions {
    Suite suite = Suite::All;
    std::uint64_t seed = 0;
    /// Random characters per duality/traces check.
    std::size_t lambdas = 25;
    /// Adds a deliberately broken trace function (λ evaluated without the
    /// support restriction); its centrality record is expected to fail.
    bool negative_control = false;
};

/// Runs the property suites on the system. Output order and content depend
/// only on the inputs.
std::vector<VerificationRecord> run_verification(const LeviSystem& system,
                                                 const std::vector<NamedLeviElement>& named_elements,
                                                 const VerifyOptions& options);

}  // namespace adelic
