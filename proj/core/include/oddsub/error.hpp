#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace oddsub {

enum class ErrorCode {
    VertexOutOfRange,
    SelfLoop,
    TooLarge,
    InvalidArgument,
    MalformedHeader,
    TruncatedBits,
    MalformedBits,
    Disconnected,
    DimensionMismatch,
    Infeasible,
    BudgetExceeded,
    NotATree,
    NotPrime,
    OddInput,
    RetryExhausted,
    IsolatedVertex,
};

auto to_string(ErrorCode code) -> std::string_view;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string & what) :
        std::runtime_error(std::string{to_string(code)} + ": " + what),
        _code(code)
    {
    }

    auto code() const noexcept -> ErrorCode { return _code; }

private:
    ErrorCode _code;
};

/// Raised by the throwing solver entry points when the node cap is hit.
/// `lower_bound` is the best value proven feasible before the search stopped.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string & what, int lower_bound, std::uint64_t nodes) :
        Error(ErrorCode::BudgetExceeded, what),
        _lower_bound(lower_bound),
        _nodes(nodes)
    {
    }

    auto lower_bound() const noexcept -> int { return _lower_bound; }
    auto nodes() const noexcept -> std::uint64_t { return _nodes; }

private:
    int _lower_bound;
    std::uint64_t _nodes;
};

}
