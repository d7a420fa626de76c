#include "euler_orient/log_number.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace eo {

double ln(const BigInt& value) {
    if (value < 0) throw std::domain_error("ln of a negative integer");
    if (value == 0) return -std::numeric_limits<double>::infinity();
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
}

LogNumber LogNumber::from_log(double ln_magnitude) {
    if (std::isnan(ln_magnitude)) throw std::domain_error("LogNumber from NaN");
    LogNumber out;
    if (ln_magnitude == -std::numeric_limits<double>::infinity()) return out;
    out.positive_ = true;
    out.ln_ = ln_magnitude;
    return out;
}

LogNumber LogNumber::from_value(double value) {
    if (!(value >= 0.0)) throw std::domain_error("LogNumber holds non-negative values only");
    return value == 0.0 ? zero() : from_log(std::log(value));
}

LogNumber LogNumber::from_count(const BigCount& count) {
    return count == 0 ? zero() : from_log(eo::ln(count));
}

double LogNumber::log() const {
    if (!positive_) throw std::domain_error("log of zero LogNumber");
    return ln_;
}

double LogNumber::value() const { return positive_ ? std::exp(ln_) : 0.0; }

LogNumber LogNumber::operator*(const LogNumber& rhs) const {
    if (!positive_ || !rhs.positive_) return zero();
    return from_log(ln_ + rhs.ln_);
}

LogNumber LogNumber::operator/(const LogNumber& rhs) const {
    if (!rhs.positive_) throw std::domain_error("division by zero LogNumber");
    if (!positive_) return zero();
    return from_log(ln_ - rhs.ln_);
}

int LogNumber::compare(const LogNumber& rhs, double slack) const {
    if (!positive_ || !rhs.positive_) return static_cast<int>(positive_) - static_cast<int>(rhs.positive_);
    const double diff = ln_ - rhs.ln_;
    if (std::abs(diff) <= slack) return 0;
    return diff < 0 ? -1 : 1;
}

int LogNumber::compare(const BigCount& rhs, double slack) const {
    return compare(from_count(rhs), slack);
}

std::string LogNumber::approx_string(int digits) const {
    if (!positive_) return "0";
    const double log10 = ln_ / std::numbers::ln10;
    double exponent = std::floor(log10);
    double mantissa = std::pow(10.0, log10 - exponent);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits - 1, mantissa);
    if (std::string(buf).starts_with("10")) {
        mantissa /= 10.0;
        exponent += 1.0;
        std::snprintf(buf, sizeof buf, "%.*f", digits - 1, mantissa);
    }
    char out[96];
    std::snprintf(out, sizeof out, "\xE2\x89\x88%se%+03.0f", buf, exponent);
    return out;
}

double ratio(const BigCount& exact, const LogNumber& estimate) {
    if (exact == 0) return 0.0;
    return std::exp(eo::ln(exact) - estimate.log());
}

}  // namespace eo
