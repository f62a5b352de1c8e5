#include "multizero/bigfloat.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace multizero {

namespace {

mpfr_prec_t clamp(long precision) { return static_cast<mpfr_prec_t>(std::max(precision, BigFloat::min_precision)); }

long wider(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

BigFloat::BigFloat(long precision) {
    mpfr_init2(value_, clamp(precision));
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, long precision) {
    mpfr_init2(value_, clamp(precision));
    mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rat& value, long precision) {
    mpfr_init2(value_, clamp(precision));
    mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::parse(const std::string& text, long precision) {
    BigFloat out(precision);
    if (text.empty()) {
        throw std::invalid_argument("empty decimal number");
    }
    char* end = nullptr;
    mpfr_strtofr(out.value_, text.c_str(), &end, 10, MPFR_RNDN);
    if (end == text.c_str() || *end != '\0') {
        throw std::invalid_argument("not a decimal number: '" + text + "'");
    }
    return out;
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::with_precision(long precision) const {
    BigFloat out(precision);
    mpfr_set(out.value_, value_, MPFR_RNDN);
    return out;
}

Sign BigFloat::sign() const {
    const int s = mpfr_sgn(value_);
    return static_cast<Sign>((s > 0) - (s < 0));
}

Rat BigFloat::to_rat() const {
    if (!is_finite()) {
        throw PrecisionExhausted("non-finite value cannot be converted to a rational");
    }
    Rat out;
    mpfr_get_q(out.get_mpq_t(), value_);
    return out;
}

std::string BigFloat::to_string() const {
    if (is_zero()) {
        return "0";
    }
    // Digits needed so that parsing back at this precision is exact.
    const auto digits = static_cast<std::size_t>(std::ceil(precision() * std::log10(2.0))) + 2;
    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, digits, value_, MPFR_RNDN);
    std::string mantissa(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!mantissa.empty() && mantissa[0] == '-') {
        sign = "-";
        mantissa.erase(0, 1);
    }
    if (!std::isdigit(static_cast<unsigned char>(mantissa[0]))) {
        return sign + mantissa;  // inf or nan
    }
    return sign + mantissa.substr(0, 1) + "." + mantissa.substr(1) + "e" + std::to_string(exp10 - 1);
}

long BigFloat::exponent() const {
    if (is_zero()) {
        return -1000000000L;
    }
    return static_cast<long>(mpfr_get_exp(value_));
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat out(wider(a, b));
    mpfr_add(out.value_, a.value_, b.value_, MPFR_RNDN);
    return out;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat out(wider(a, b));
    mpfr_sub(out.value_, a.value_, b.value_, MPFR_RNDN);
    return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat out(wider(a, b));
    mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDN);
    return out;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat out(wider(a, b));
    mpfr_div(out.value_, a.value_, b.value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::operator-() const {
    BigFloat out(precision());
    mpfr_neg(out.value_, value_, MPFR_RNDN);
    return out;
}

BigFloat exp(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_exp(out.value_, x.value_, MPFR_RNDN);
    return out;
}

BigFloat log(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_log(out.value_, x.value_, MPFR_RNDN);
    return out;
}

BigFloat abs(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_abs(out.value_, x.value_, MPFR_RNDN);
    return out;
}

BigFloat pow(const BigFloat& x, long n) {
    BigFloat out(x.precision());
    mpfr_pow_si(out.value_, x.value_, n, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::power_of_two(long e, long precision) {
    BigFloat out(precision);
    mpfr_set_ui_2exp(out.value_, 1, static_cast<mpfr_exp_t>(e), MPFR_RNDN);
    return out;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

}  // namespace multizero
