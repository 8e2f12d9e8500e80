#pragma once

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "errors.hpp"
#include "laurent.hpp"
#include "partition.hpp"

namespace hurwitz {

/// p_Γ, or the bi-monomial q_Δ p_Γ when a second alphabet is present.
struct Monomial {
    Partition p;
    std::optional<Partition> q;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.p <=> b.p; c != 0) {
            return c;
        }
        if (a.q.has_value() != b.q.has_value()) {
            return a.q.has_value() ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        return a.q ? (*a.q <=> *b.q) : std::strong_ordering::equal;
    }

    std::string to_string() const {
        std::string out;
        if (q) {
            out += "q_" + q->to_string() + "*";
        }
        return out + "p_" + p.to_string();
    }
};

/// Finite linear combination of power-sum monomials with ZLaurent coefficients.
class PPoly {
public:
    using TermMap = std::map<Monomial, ZLaurent>;

    PPoly() = default;

    static PPoly monomial(const Partition& p, const ZLaurent& c = ZLaurent(1)) {
        PPoly out;
        out.add(Monomial{p, std::nullopt}, c);
        return out;
    }
    static PPoly bimonomial(const Partition& q, const Partition& p, const ZLaurent& c = ZLaurent(1)) {
        PPoly out;
        out.add(Monomial{p, q}, c);
        return out;
    }

    void add(const Monomial& m, const ZLaurent& c) {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    ZLaurent coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? ZLaurent() : it->second;
    }

    /// True when every p-part has degree d (q-parts unconstrained). Zero is homogeneous.
    bool is_homogeneous(int d) const {
        for (const auto& [m, c] : terms_) {
            if (m.p.degree() != d) {
                return false;
            }
        }
        return true;
    }

    /// Common p-degree; nullopt for zero. Throws if the degrees differ.
    std::optional<int> p_degree() const {
        if (terms_.empty()) {
            return std::nullopt;
        }
        int d = terms_.begin()->first.p.degree();
        if (!is_homogeneous(d)) {
            throw DegreeMismatch("polynomial is not homogeneous in p");
        }
        return d;
    }

    bool has_q() const {
        for (const auto& [m, c] : terms_) {
            if (m.q) {
                return true;
            }
        }
        return false;
    }

    PPoly& operator+=(const PPoly& o) {
        for (const auto& [m, c] : o.terms_) {
            add(m, c);
        }
        return *this;
    }
    PPoly& operator-=(const PPoly& o) { return *this += o.scaled(ZLaurent(-1)); }
    friend PPoly operator+(PPoly a, const PPoly& b) { return a += b; }
    friend PPoly operator-(PPoly a, const PPoly& b) { return a -= b; }

    PPoly scaled(const ZLaurent& c) const {
        PPoly out;
        if (c.is_zero()) {
            return out;
        }
        for (const auto& [m, coeff] : terms_) {
            out.add(m, coeff * c);
        }
        return out;
    }
    friend PPoly operator*(const ZLaurent& c, const PPoly& a) { return a.scaled(c); }

    /// Substitutes z = value in every coefficient.
    PPoly at_z(const BigRational& value) const {
        PPoly out;
        for (const auto& [m, c] : terms_) {
            out.add(m, ZLaurent(c.evaluate(value)));
        }
        return out;
    }

    friend bool operator==(const PPoly&, const PPoly&) = default;

    /// e.g. "1/2*z^-4*q_(2)*p_(2) - z^-3*p_(1,1)"; "0" when empty.
    std::string to_string() const {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string coeff;
            bool negative = false;
            if (c.is_monomial()) {
                const auto& [e, value] = *c.terms().begin();
                negative = value.sign() < 0;
                ZLaurent magnitude = negative ? -c : c;
                if (!(magnitude == ZLaurent(1))) {
                    coeff = magnitude.to_string() + "*";
                }
            } else {
                coeff = "(" + c.to_string() + ")*";
            }
            if (first) {
                out += negative ? "-" : "";
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            out += coeff + m.to_string();
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const PPoly& p) { return os << p.to_string(); }

private:
    TermMap terms_;
};

inline PPoly ppoly_add(const PPoly& a, const PPoly& b) { return a + b; }
inline PPoly ppoly_scale(const ZLaurent& c, const PPoly& a) { return a.scaled(c); }

/// Normalized derivative ∂/∂p_Δ = (1/Δ!) ∂/∂p_{δ1}...∂/∂p_{δn} applied to
/// p_Γ for Δ, Γ of the same degree: the Kronecker delta.
inline BigRational partial_p(const Partition& delta, const Partition& gamma) {
    require_same_degree(delta, gamma, "partial_p");
    return delta == gamma ? BigRational(1) : BigRational(0);
}

}  // namespace hurwitz
