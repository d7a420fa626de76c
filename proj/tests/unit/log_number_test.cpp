#include <gtest/gtest.h>

#include <cmath>

#include "euler_orient/log_number.hpp"
#include "euler_orient/rng.hpp"

namespace eo {
namespace {

TEST(LogNumber, ZeroAndConversions) {
    EXPECT_TRUE(LogNumber::zero().is_zero());
    EXPECT_TRUE(LogNumber::from_value(0.0).is_zero());
    EXPECT_TRUE(LogNumber::from_count(0).is_zero());
    EXPECT_EQ(LogNumber::zero().value(), 0.0);
    EXPECT_NEAR(LogNumber::from_value(24.0).log(), std::log(24.0), 1e-15);
    EXPECT_NEAR(LogNumber::from_count(2640).value(), 2640.0, 1e-9);
    EXPECT_THROW(LogNumber::from_value(-1.0), std::domain_error);
}

TEST(LogNumber, HugeCountsStayFinite) {
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 3, 5000);
    EXPECT_NEAR(LogNumber::from_count(big).log(), 5000 * std::log(3.0), 1e-9);
    EXPECT_NEAR(ln(big), 5000 * std::log(3.0), 1e-9);
}

TEST(LogNumber, MultiplicationAddsLogs) {
    Rng rng(17);
    for (int i = 0; i < 1000; ++i) {
        const double a = uniform_real(rng, 1e-3, 1e3);
        const double b = uniform_real(rng, 1e-3, 1e3);
        const LogNumber p = LogNumber::from_value(a) * LogNumber::from_value(b);
        EXPECT_NEAR(p.value(), a * b, 1e-12 * a * b);
        const LogNumber q = LogNumber::from_value(a) / LogNumber::from_value(b);
        EXPECT_NEAR(q.value(), a / b, 1e-12 * a / b);
    }
    EXPECT_TRUE((LogNumber::zero() * LogNumber::from_value(5.0)).is_zero());
}

TEST(LogNumber, CompareWithCounts) {
    const LogNumber x = LogNumber::from_value(24.0);
    EXPECT_EQ(x.compare(mpz_class(24)), 0);
    EXPECT_EQ(x.compare(mpz_class(25)), -1);
    EXPECT_EQ(x.compare(mpz_class(23)), 1);
    EXPECT_EQ(LogNumber::from_log(std::log(24.0) + 1e-10).compare(mpz_class(24)), 1);
    EXPECT_EQ(LogNumber::from_log(std::log(24.0) + 1e-10).compare(mpz_class(24), 1e-9), 0);
    EXPECT_EQ(LogNumber::zero().compare(mpz_class(0)), 0);
    EXPECT_EQ(LogNumber::zero().compare(mpz_class(1)), -1);
    EXPECT_EQ(x.compare(LogNumber::zero()), 1);
}

TEST(LogNumber, ApproxStringIsMarked) {
    EXPECT_EQ(LogNumber::from_value(29.652).approx_string(), "≈2.9652e+01");
    EXPECT_EQ(LogNumber::zero().approx_string(), "0");
    EXPECT_EQ(LogNumber::from_log(10000.0).approx_string(3).rfind("≈", 0), 0u);
}

TEST(LogNumber, Ratio) {
    EXPECT_NEAR(ratio(mpz_class(24), LogNumber::from_value(12.0)), 2.0, 1e-14);
}

}  // namespace
}  // namespace eo
