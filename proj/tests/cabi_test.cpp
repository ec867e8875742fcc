// Exercises the C-ABI surface through the instrumented static build.

#include "support/alloc_counter.hpp"
#include "support/cabi_checks.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

namespace stats = ffibench::stats;
using ffibench::testing::bit_equal;

constexpr double kStddevOneTwoThree = 0.816496580927726;

TEST(FlatExports, Mean) {
    std::vector<double> constant{2.0, 2.0};
    EXPECT_EQ(mean(constant.data(), constant.size()), 2.0);
    std::vector<double> v{1.0, 2.0, 3.0};
    EXPECT_EQ(mean(v.data(), v.size()), 2.0);
}

TEST(FlatExports, Stddev) {
    std::vector<double> constant{5.0, 5.0};
    EXPECT_EQ(stddev(constant.data(), constant.size()), 0.0);
    std::vector<double> v{1.0, 2.0, 3.0};
    EXPECT_NEAR(stddev(v.data(), v.size()), kStddevOneTwoThree, 1e-15);
}

TEST(FlatExports, ZeroCountIsNaN) {
    EXPECT_TRUE(std::isnan(mean(nullptr, 0)));
    EXPECT_TRUE(std::isnan(stddev(nullptr, 0)));
    std::vector<double> v{1.0};
    EXPECT_TRUE(std::isnan(mean(v.data(), 0)));
}

TEST(FlatExports, BitIdenticalToKernelsOnRandomData) {
    auto v = ffibench::testing::uniform_values(1000, 99);
    EXPECT_TRUE(bit_equal(mean(v.data(), v.size()), stats::mean(v)));
    EXPECT_TRUE(bit_equal(stddev(v.data(), v.size()), stats::stddev(v)));
}

TEST(FlatExports, DoNotModifyCallerStorage) {
    auto v = ffibench::testing::uniform_values(257, 5);
    const auto copy = v;
    (void)mean(v.data(), v.size());
    (void)stddev(v.data(), v.size());
    EXPECT_EQ(v, copy);
}

TEST(ArrayHandle, InitThenMean) {
    std::vector<double> v{1.0, 2.0, 3.0};
    Array *h = array_init(v.data(), v.size());
    ASSERT_NE(h, nullptr);
    EXPECT_EQ(array_mean(h), 2.0);
    EXPECT_NEAR(array_stddev(h), kStddevOneTwoThree, 1e-15);
    array_free(h);
}

TEST(ArrayHandle, MeanOfPair) {
    std::vector<double> v{2.0, 4.0};
    Array *h = array_init(v.data(), v.size());
    EXPECT_EQ(array_mean(h), 3.0);
    array_free(h);
}

TEST(ArrayHandle, Singleton) {
    for (const double x : {-7.25, 0.0, 1e-300, 3.5e200}) {
        std::vector<double> v{x};
        Array *h = array_init(v.data(), v.size());
        EXPECT_EQ(array_mean(h), x);
        EXPECT_EQ(array_stddev(h), 0.0);
        array_free(h);
    }
}

TEST(ArrayHandle, ConstantStddevIsZero) {
    std::vector<double> v{7.0, 7.0, 7.0};
    Array *h = array_init(v.data(), v.size());
    EXPECT_EQ(array_stddev(h), 0.0);
    array_free(h);
}

TEST(ArrayHandle, CopySemantics) {
    std::vector<double> v{1.0, 2.0, 3.0};
    Array *h = array_init(v.data(), v.size());
    v = {100.0, 200.0, 300.0};
    EXPECT_EQ(array_mean(h), 2.0);
    array_free(h);
}

TEST(ArrayHandle, NullWithPositiveCountGivesNullHandle) { EXPECT_EQ(array_init(nullptr, 5), nullptr); }

TEST(ArrayHandle, EmptyHandleReportsNaN) {
    Array *h = array_init(nullptr, 0);
    ASSERT_NE(h, nullptr);
    EXPECT_TRUE(std::isnan(array_mean(h)));
    EXPECT_TRUE(std::isnan(array_stddev(h)));
    array_free(h);
}

TEST(ArrayHandle, RepeatedCallsAreBitIdentical) {
    auto v = ffibench::testing::uniform_values(1000, 17);
    Array *h = array_init(v.data(), v.size());
    const double m = array_mean(h);
    const double sd = array_stddev(h);
    EXPECT_TRUE(bit_equal(m, stats::mean(v)));
    EXPECT_TRUE(bit_equal(sd, stats::stddev(v)));
    for (int i = 0; i < 1000; ++i) {
        ASSERT_TRUE(bit_equal(array_mean(h), m));
        ASSERT_TRUE(bit_equal(array_stddev(h), sd));
    }
    array_free(h);
}

TEST(ArrayHandle, FreeNullIsNoOp) {
    const auto before = ffibench::testing::live_allocations();
    array_free(nullptr);
    EXPECT_EQ(ffibench::testing::live_allocations(), before);
}

TEST(ArrayHandle, InitFreeRestoresAllocationCount) {
    std::vector<double> v{1.0, 2.0, 3.0};
    const auto before = ffibench::testing::live_allocations();
    Array *h = array_init(v.data(), v.size());
    EXPECT_GT(ffibench::testing::live_allocations(), before);
    EXPECT_EQ(ffibench::cabi::live_handles(), 1);
    array_free(h);
    EXPECT_EQ(ffibench::testing::live_allocations(), before);
    EXPECT_EQ(ffibench::cabi::live_handles(), 0);
}

TEST(ArrayHandle, ThousandCyclesLeaveNoAllocations) {
    const auto r = ffibench::testing::lifecycle_balance(1000, 512);
    EXPECT_EQ(r.net_allocations, 0);
    EXPECT_EQ(r.live_handles, 0);
}

TEST(CabiProperties, AgreementWithKernels) {
    const auto r = ffibench::testing::export_agreement_sweep(31, 100);
    EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(CabiProperties, HandleIndependence) {
    const auto r = ffibench::testing::copy_independence_sweep(32, 100);
    EXPECT_TRUE(r.ok()) << r.first_failure;
}
