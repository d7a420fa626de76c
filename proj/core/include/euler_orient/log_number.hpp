#pragma once

#include <string>

#include "euler_orient/big_count.hpp"

namespace eo {

// Non-negative quantity held as the natural log of its magnitude, for values
// far outside the double range. Zero is represented explicitly.
class LogNumber {
public:
    // Comparisons treat logs closer than this as equal.
    static constexpr double kResolution = 1e-12;

    LogNumber() = default;

    static LogNumber zero() { return LogNumber(); }
    static LogNumber from_log(double ln_magnitude);
    // value >= 0.
    static LogNumber from_value(double value);
    static LogNumber from_count(const BigCount& count);

    bool is_zero() const { return !positive_; }
    // Throws std::domain_error on zero.
    double log() const;
    // May overflow to +inf.
    double value() const;

    LogNumber operator*(const LogNumber& rhs) const;
    // Throws std::domain_error when dividing by zero.
    LogNumber operator/(const LogNumber& rhs) const;

    // -1, 0, +1 with |ln a - ln b| <= slack counted as equal.
    int compare(const LogNumber& rhs, double slack = kResolution) const;
    int compare(const BigCount& rhs, double slack = kResolution) const;

    // "≈2.9652e+01" style, computed from the log so it never overflows.
    std::string approx_string(int digits = 5) const;

private:
    bool positive_ = false;
    double ln_ = 0.0;
};

// exact / estimate as a plain double (exp of the log difference).
double ratio(const BigCount& exact, const LogNumber& estimate);

}  // namespace eo
