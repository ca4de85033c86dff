#pragma once

#include <stdexcept>
#include <string>

namespace pulsegrid {

// Every failure the library reports carries a category so callers (the CLI
// in particular) can prefix messages consistently without parsing text.
enum class ErrorCategory {
    parse,         // malformed kernel/PGM input
    config,        // inconsistent window/register/sample-rate configuration
    unrealizable,  // coefficient cannot be expressed at the given sample rate
    dimension,     // plane/kernel shape mismatch
    io,            // filesystem failures
    internal,      // invariant violation inside the library
};

std::string to_string(ErrorCategory category);

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& message)
        : std::runtime_error(message), category_(category) {}

    ErrorCategory category() const { return category_; }

private:
    ErrorCategory category_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error(ErrorCategory::parse, m) {}
};
struct ConfigError : Error {
    explicit ConfigError(const std::string& m) : Error(ErrorCategory::config, m) {}
};
struct UnrealizableError : Error {
    explicit UnrealizableError(const std::string& m) : Error(ErrorCategory::unrealizable, m) {}
};
struct DimensionError : Error {
    explicit DimensionError(const std::string& m) : Error(ErrorCategory::dimension, m) {}
};
struct IoError : Error {
    explicit IoError(const std::string& m) : Error(ErrorCategory::io, m) {}
};
struct InternalError : Error {
    explicit InternalError(const std::string& m) : Error(ErrorCategory::internal, m) {}
};

}  // namespace pulsegrid
