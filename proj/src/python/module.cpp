// Native extension module exposing both binding strategies to Python:
//   ffibench_native.mean(values) / stddev(values)  convert the list per call
//   ffibench_native.Array(values).mean() / .stddev()  convert once
//
// Argument conversion is left to pybind11's generated sequence caster, which
// widens ints, rejects non-numeric elements with TypeError and str/bytes as
// a whole. Empty input raises ValueError (std::domain_error maps to it).

#include "ffibench/stats.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <utility>

namespace py = pybind11;

namespace {

using ffibench::stats::Float64Buffer;

class NativeArray {
public:
    explicit NativeArray(Float64Buffer values) : values_(std::move(values)) {
        if (values_.empty()) {
            throw std::domain_error("Array requires at least one value");
        }
    }

    [[nodiscard]] double mean() const { return ffibench::stats::mean(values_); }
    [[nodiscard]] double stddev() const { return ffibench::stats::stddev(values_); }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

private:
    const Float64Buffer values_;
};

}  // namespace

PYBIND11_MODULE(ffibench_native, m) {
    m.doc() = "Statistics kernels bound with in-situ conversion and with a preconverted Array type";

    m.def(
        "mean", [](const Float64Buffer &values) { return ffibench::stats::mean(values); },
        py::arg("values"), "Arithmetic mean; the sequence is converted on every call.");
    m.def(
        "stddev", [](const Float64Buffer &values) { return ffibench::stats::stddev(values); },
        py::arg("values"), "Population standard deviation; the sequence is converted on every call.");

    py::class_<NativeArray>(m, "Array")
        .def(py::init<Float64Buffer>(), py::arg("values"))
        .def("mean", &NativeArray::mean)
        .def("stddev", &NativeArray::stddev)
        .def("__len__", &NativeArray::size);
}
