#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace trirank {

using NodeId = std::uint32_t;
using Rank = std::int32_t;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

enum class ErrorCode {
    equal_ranks,
    dominance,
    unknown_node,
    multiple_odd_neighbors,
    missing_odd_neighbor,
    stuck,
    hop_limit_exceeded,
    unreachable,
    degenerate_input,
    too_large,
    parse_error,
    io_error,
};

const char* to_string(ErrorCode code);

/// Domain error. The code tells callers which contract was broken;
/// the message carries the offending ids/ranks for diagnosis.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline constexpr const char* kVersion = "0.1.0";

} // namespace trirank
