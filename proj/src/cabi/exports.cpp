// C-ABI surface over the statistics kernels.
//
// Two binding strategies share the same kernels:
//   - flat `mean` / `stddev`: copy the caller's array on every call
//   - `array_*`: copy once into a library-owned Array, then compute on it
//
// Only the six functions in exports.map are visible from the shared object.

#include "ffibench/c/array.h"
#include "ffibench/c/stats.h"
#include "ffibench/stats.hpp"

#include <cstdint>
#include <limits>
#include <new>
#include <span>
#include <utility>
#include <vector>

#ifdef FFIBENCH_TRACK_HANDLES
#include "handle_tracking.hpp"

#include <atomic>
#endif

struct Array {
    ffibench::stats::Float64Buffer values;
};

namespace {

#ifdef FFIBENCH_TRACK_HANDLES
std::atomic<std::int64_t> g_live_handles{0};
#endif

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// The lifetime of caller memory is unknown, so the kernels never run on it
// directly.
ffibench::stats::Float64Buffer copy_view(const double *values, std::uint64_t n) {
    return ffibench::stats::Float64Buffer(values, values + n);
}

double owned_mean(const ffibench::stats::Float64Buffer &buf) noexcept {
    return buf.empty() ? kNaN : ffibench::stats::mean(buf);
}

double owned_stddev(const ffibench::stats::Float64Buffer &buf) noexcept {
    return buf.empty() ? kNaN : ffibench::stats::stddev(buf);
}

}  // namespace

#ifdef FFIBENCH_TRACK_HANDLES
namespace ffibench::cabi {
std::int64_t live_handles() noexcept { return g_live_handles.load(); }
}  // namespace ffibench::cabi
#endif

// The shared object is built with hidden visibility; these six opt back in.
#define FFIBENCH_EXPORT __attribute__((visibility("default")))

extern "C" {

FFIBENCH_EXPORT double mean(double *values, uint64_t n) {
    if (n == 0) {
        return kNaN;
    }
    try {
        return owned_mean(copy_view(values, n));
    } catch (const std::bad_alloc &) {
        return kNaN;
    }
}

FFIBENCH_EXPORT double stddev(double *values, uint64_t n) {
    if (n == 0) {
        return kNaN;
    }
    try {
        return owned_stddev(copy_view(values, n));
    } catch (const std::bad_alloc &) {
        return kNaN;
    }
}

FFIBENCH_EXPORT struct Array *array_init(double *values, uint64_t n) {
    if (values == nullptr && n > 0) {
        return nullptr;
    }
    try {
        auto *arr = new Array{n == 0 ? ffibench::stats::Float64Buffer{} : copy_view(values, n)};
#ifdef FFIBENCH_TRACK_HANDLES
        g_live_handles.fetch_add(1);
#endif
        return arr;
    } catch (const std::bad_alloc &) {
        return nullptr;
    }
}

FFIBENCH_EXPORT double array_mean(struct Array *arr) { return owned_mean(arr->values); }

FFIBENCH_EXPORT double array_stddev(struct Array *arr) { return owned_stddev(arr->values); }

FFIBENCH_EXPORT void array_free(struct Array *arr) {
    if (arr == nullptr) {
        return;
    }
#ifdef FFIBENCH_TRACK_HANDLES
    g_live_handles.fetch_sub(1);
#endif
    delete arr;
}

}  // extern "C"
