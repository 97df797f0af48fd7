#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace grsobs {

// Error carrying the pipeline stage that failed ("parse", "validate",
// "compute", "io", "limit"). The CLI prefixes messages with the stage so a
// caller can tell a bad input apart from an internal failure.
class Error : public std::runtime_error {
public:
    Error(std::string stage, const std::string& message)
        : std::runtime_error(message), stage_(std::move(stage)) {}

    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

}  // namespace grsobs
