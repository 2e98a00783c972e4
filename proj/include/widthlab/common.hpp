#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace widthlab {

using Vertex = std::uint32_t;

/// Thrown when an exact (exponential-time) routine is asked to run above its
/// documented instance-size cap. Callers that sweep over instances of mixed
/// size are expected to catch this and record the skip.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& message) : std::runtime_error(message) {}
};

namespace detail {

inline void require(bool condition, const char* message) {
    if (!condition) throw std::invalid_argument(message);
}

}  // namespace detail

}  // namespace widthlab
