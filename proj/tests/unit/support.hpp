#pragma once

#include <oddsub/error.hpp>

#include <optional>

// Code of the oddsub::Error thrown by `f`, or nullopt if it returns normally.
template <typename F>
auto error_code(F && f) -> std::optional<oddsub::ErrorCode>
{
    try {
        f();
    }
    catch (const oddsub::Error & e) {
        return e.code();
    }
    return std::nullopt;
}
