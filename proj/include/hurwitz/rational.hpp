#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hurwitz {

using BigInt = mpz_class;

/// Exact rational number in canonical reduced form (positive denominator).
class BigRational {
public:
    BigRational() = default;
    BigRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    BigRational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    BigRational(const BigInt& num, const BigInt& den) {
        if (den == 0) {
            throw std::domain_error("BigRational: zero denominator");
        }
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    explicit BigRational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    /// Parses "n" or "n/d" (optional sign on the numerator).
    static BigRational parse(std::string_view text) {
        std::string s(text);
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                return BigRational(BigInt(s, 10));
            }
            return BigRational(BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("not a rational number: '" + s + "'");
        }
    }

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// "n" for integers, "n/d" otherwise.
    std::string to_string() const { return value_.get_str(10); }

    /// Always "n/d", even for integers.
    std::string to_fraction_string() const {
        return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
    }

    BigRational operator-() const { return BigRational(mpq_class(-value_)); }

    BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
    BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
    BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero()) {
            throw std::domain_error("BigRational: division by zero");
        }
        value_ /= o.value_;
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

private:
    mpq_class value_;
};

/// Integer power; negative exponents invert (base must be nonzero then).
inline BigRational pow(const BigRational& base, int exponent) {
    BigRational result(1);
    BigRational factor = exponent < 0 ? BigRational(1) / base : base;
    for (int e = exponent < 0 ? -exponent : exponent; e > 0; --e) {
        result *= factor;
    }
    return result;
}

inline BigInt factorial(int n) {
    BigInt result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return result;
}

}  // namespace hurwitz
