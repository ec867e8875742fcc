#include "ffibench/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace ffibench::stats {

double sum(std::span<const double> values) noexcept {
    double total = 0.0;
    for (const double v : values) {
        total += v;
    }
    return total;
}

double mean(std::span<const double> values) {
    if (values.empty()) {
        throw std::domain_error("mean of an empty buffer is undefined");
    }
    return sum(values) / static_cast<double>(values.size());
}

double stddev(std::span<const double> values) {
    if (values.empty()) {
        throw std::domain_error("stddev of an empty buffer is undefined");
    }
    const double m = mean(values);
    double squared_sum = 0.0;
    for (const double v : values) {
        const double shifted = v - m;
        squared_sum += shifted * shifted;
    }
    return std::sqrt(squared_sum / static_cast<double>(values.size()));
}

}  // namespace ffibench::stats
