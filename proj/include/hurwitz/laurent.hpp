#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "rational.hpp"

namespace hurwitz {

/// Laurent polynomial in the genus marker z with exact rational coefficients.
/// Zero coefficients are never stored, so equality is structural.
class ZLaurent {
public:
    ZLaurent() = default;
    ZLaurent(BigRational constant) { add(0, std::move(constant)); }  // NOLINT(google-explicit-constructor)
    ZLaurent(long constant) : ZLaurent(BigRational(constant)) {}     // NOLINT(google-explicit-constructor)

    /// c * z^exponent
    static ZLaurent monomial(BigRational c, int exponent) {
        ZLaurent out;
        out.add(exponent, std::move(c));
        return out;
    }
    static ZLaurent z_power(int exponent) { return monomial(BigRational(1), exponent); }

    const std::map<int, BigRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    BigRational coefficient(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? BigRational(0) : it->second;
    }
    std::optional<int> min_exponent() const {
        return terms_.empty() ? std::nullopt : std::optional<int>(terms_.begin()->first);
    }
    std::optional<int> max_exponent() const {
        return terms_.empty() ? std::nullopt : std::optional<int>(terms_.rbegin()->first);
    }

    void add(int exponent, const BigRational& c) {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(exponent, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    /// Multiplies by z^shift.
    ZLaurent shifted(int shift) const {
        ZLaurent out;
        for (const auto& [e, c] : terms_) {
            out.terms_.emplace(e + shift, c);
        }
        return out;
    }

    /// Substitutes a rational value for z (nonzero when negative powers occur).
    BigRational evaluate(const BigRational& z) const {
        BigRational total;
        for (const auto& [e, c] : terms_) {
            total += c * pow(z, e);
        }
        return total;
    }

    ZLaurent operator-() const {
        ZLaurent out;
        for (const auto& [e, c] : terms_) {
            out.terms_.emplace(e, -c);
        }
        return out;
    }

    ZLaurent& operator+=(const ZLaurent& o) {
        for (const auto& [e, c] : o.terms_) {
            add(e, c);
        }
        return *this;
    }
    ZLaurent& operator-=(const ZLaurent& o) { return *this += -o; }

    friend ZLaurent operator+(ZLaurent a, const ZLaurent& b) { return a += b; }
    friend ZLaurent operator-(ZLaurent a, const ZLaurent& b) { return a -= b; }
    friend ZLaurent operator*(const ZLaurent& a, const ZLaurent& b) {
        ZLaurent out;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                out.add(ea + eb, ca * cb);
            }
        }
        return out;
    }
    ZLaurent& operator*=(const ZLaurent& o) { return *this = *this * o; }

    friend bool operator==(const ZLaurent&, const ZLaurent&) = default;

    /// e.g. "1/2*z^-4", "z^2 - 3", "0". Terms in decreasing z-power.
    std::string to_string() const {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            BigRational magnitude = c.sign() < 0 ? -c : c;
            if (first) {
                out += c.sign() < 0 ? "-" : "";
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            first = false;
            if (e == 0) {
                out += magnitude.to_string();
                continue;
            }
            if (magnitude != BigRational(1)) {
                out += magnitude.to_string() + "*";
            }
            out += e == 1 ? std::string("z") : "z^" + std::to_string(e);
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const ZLaurent& z) { return os << z.to_string(); }

private:
    std::map<int, BigRational> terms_;
};

}  // namespace hurwitz
