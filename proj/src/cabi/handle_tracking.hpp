#pragma once

#include <cstdint>

// Only available in the instrumented test build (FFIBENCH_TRACK_HANDLES).
namespace ffibench::cabi {

/// Number of Array handles created by array_init and not yet freed.
std::int64_t live_handles() noexcept;

}  // namespace ffibench::cabi
