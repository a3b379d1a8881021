#pragma once

#include <stdexcept>
#include <string>

namespace uavloc {

// Invalid experiment / model configuration (bad parameter ranges, bad spec
// files). The CLI maps these to a nonzero exit with the message verbatim.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace uavloc
