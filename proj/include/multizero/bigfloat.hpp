#pragma once

#include <string>

#include <mpfr.h>

#include "multizero/rational.hpp"

namespace multizero {

/// MPFR-backed float with a per-value precision in bits. Binary operations
/// round to the larger precision of their operands.
class BigFloat {
public:
    static constexpr long min_precision = 64;

    explicit BigFloat(long precision = 128);
    BigFloat(long value, long precision);
    BigFloat(const Rat& value, long precision);
    /// Decimal or scientific notation; throws std::invalid_argument.
    static BigFloat parse(const std::string& text, long precision);

    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
    /// Same value rounded to a new precision.
    BigFloat with_precision(long precision) const;

    Sign sign() const;
    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    bool is_finite() const { return mpfr_number_p(value_) != 0; }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    Rat to_rat() const;
    /// Decimal scientific notation with enough digits to round-trip.
    std::string to_string() const;
    /// Base-2 exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
    long exponent() const;

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;
    BigFloat& operator+=(const BigFloat& b) { return *this = *this + b; }
    BigFloat& operator-=(const BigFloat& b) { return *this = *this - b; }
    BigFloat& operator*=(const BigFloat& b) { return *this = *this * b; }
    BigFloat& operator/=(const BigFloat& b) { return *this = *this / b; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

    friend BigFloat exp(const BigFloat& x);
    friend BigFloat log(const BigFloat& x);
    friend BigFloat abs(const BigFloat& x);
    friend BigFloat pow(const BigFloat& x, long n);
    /// 2^e at the given precision.
    static BigFloat power_of_two(long e, long precision);

    mpfr_srcptr get() const { return value_; }

private:
    mpfr_t value_;
};

BigFloat max(const BigFloat& a, const BigFloat& b);

}  // namespace multizero
