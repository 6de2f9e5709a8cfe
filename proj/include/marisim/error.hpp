#pragma once

#include <stdexcept>
#include <string>

namespace marisim {

enum class ErrorKind {
    invalid_config,
    degenerate_economy,  // total wealth <= 0, ratios undefined
    population_cap,
    undefined_metric,
    domain,
};

class SimError : public std::runtime_error {
public:
    SimError(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace marisim
