#pragma once

#include <doctest.h>

#include <functional>
#include <random>

#include "cremona/errors.hpp"

namespace testutil {

inline bool throws_kind(cremona::ErrorKind k, const std::function<void()>& f) {
    try {
        f();
    } catch (const cremona::Error& e) {
        return e.kind() == k;
    }
    return false;
}

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0xC0FFEEULL ^ salt); }

}  // namespace testutil
