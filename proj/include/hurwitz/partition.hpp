#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace hurwitz {

/// Integer partition with weakly decreasing positive parts.
///
/// Serves both as a cycle type (conjugacy class of S_d) and as a Young
/// diagram (irreducible representation of S_d). The empty partition is the
/// unique partition of 0.
///
/// Ordering: by degree, then decreasing lexicographic on parts, so that
/// (3) < (2,1) < (1,1,1). This is the canonical order used for every table
/// and every serialized listing.
class Partition {
public:
    Partition() = default;

    /// Parts may be given in any order; they are sorted. Non-positive parts throw.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_) {
            if (p <= 0) {
                throw ParseError("partition parts must be positive, got " + std::to_string(p));
            }
        }
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
        degree_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// (1,1,...,1) with d ones: the identity class.
    static Partition ones(int d) { return Partition(std::vector<int>(static_cast<std::size_t>(d), 1)); }

    /// Accepts "(2,1)", "2,1", "()", "" and tolerates whitespace.
    static Partition parse(std::string_view text) {
        std::string s;
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                s.push_back(c);
            }
        }
        if (!s.empty() && s.front() == '(') {
            if (s.back() != ')') {
                throw ParseError("unbalanced parentheses in partition '" + std::string(text) + "'");
            }
            s = s.substr(1, s.size() - 2);
        }
        std::vector<int> parts;
        if (s.empty()) {
            return Partition();
        }
        std::size_t pos = 0;
        while (pos <= s.size()) {
            auto comma = s.find(',', pos);
            auto token = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) {
                    return std::isdigit(static_cast<unsigned char>(c));
                })) {
                throw ParseError("bad partition part '" + token + "' in '" + std::string(text) + "'");
            }
            parts.push_back(std::stoi(token));
            if (comma == std::string::npos) {
                break;
            }
            pos = comma + 1;
        }
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int degree() const { return degree_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    /// m_r: number of parts equal to r.
    int multiplicity(int r) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), r));
    }

    /// d - l, the minimal number of transpositions with this cycle type.
    int colength() const { return degree_ - length(); }

    bool is_identity_class() const { return degree_ == length(); }

    /// Conjugate (transposed) Young diagram.
    Partition conjugate() const {
        std::vector<int> result;
        for (int col = 1; !parts_.empty() && col <= parts_.front(); ++col) {
            result.push_back(static_cast<int>(
                std::count_if(parts_.begin(), parts_.end(), [col](int p) { return p >= col; })));
        }
        return Partition(std::move(result));
    }

    /// Canonical rendering "(d1,d2,...)"; the empty partition is "()".
    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) {
                out += ',';
            }
            out += std::to_string(parts_[i]);
        }
        return out + ")";
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        if (auto c = a.degree_ <=> b.degree_; c != 0) {
            return c;
        }
        // decreasing lexicographic: larger leading parts come first
        return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(),
                                                      a.parts_.begin(), a.parts_.end());
    }

    friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

private:
    std::vector<int> parts_;
    int degree_ = 0;
};

/// All partitions of d in canonical (decreasing lexicographic) order.
inline std::vector<Partition> partitions_of(int d) {
    std::vector<Partition> result;
    if (d < 0) {
        return result;
    }
    if (d == 0) {
        result.emplace_back();
        return result;
    }
    std::vector<int> current{d};
    while (true) {
        result.emplace_back(current);
        // Next in decreasing lex order: take the rightmost part > 1, decrement
        // it, and refill greedily with the freed weight.
        int ones = 0;
        while (!current.empty() && current.back() == 1) {
            current.pop_back();
            ++ones;
        }
        if (current.empty()) {
            break;
        }
        int part = --current.back();
        int remaining = ones + 1;
        while (remaining > 0) {
            int next = std::min(part, remaining);
            current.push_back(next);
            remaining -= next;
        }
    }
    return result;
}

/// |C_Δ| = d! / prod_r (r^{m_r} m_r!).
inline BigInt class_size(const Partition& delta) {
    BigInt centralizer = 1;
    const auto& parts = delta.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) {
            ++j;
        }
        int m = static_cast<int>(j - i);
        BigInt r_pow;
        mpz_ui_pow_ui(r_pow.get_mpz_t(), static_cast<unsigned long>(parts[i]), static_cast<unsigned long>(m));
        centralizer *= r_pow * factorial(m);
        i = j;
    }
    return BigInt(factorial(delta.degree()) / centralizer);
}

/// Δ! = prod_r m_r(Δ)!.
inline BigInt aut_factor(const Partition& delta) {
    BigInt result = 1;
    const auto& parts = delta.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) {
            ++j;
        }
        result *= factorial(static_cast<int>(j - i));
        i = j;
    }
    return result;
}

/// Hook lengths of every cell, row by row.
inline std::vector<int> hook_lengths(const Partition& lambda) {
    std::vector<int> hooks;
    Partition conj = lambda.conjugate();
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) {
            int arm = lambda[static_cast<std::size_t>(i)] - j - 1;
            int leg = conj[static_cast<std::size_t>(j)] - i - 1;
            hooks.push_back(arm + leg + 1);
        }
    }
    return hooks;
}

/// dim λ = d! / prod(hooks); 1 for the empty partition.
inline BigInt dim_irrep(const Partition& lambda) {
    BigInt hook_product = 1;
    for (int h : hook_lengths(lambda)) {
        hook_product *= h;
    }
    return BigInt(factorial(lambda.degree()) / hook_product);
}

inline void require_same_degree(const Partition& a, const Partition& b, std::string_view context) {
    if (a.degree() != b.degree()) {
        throw DegreeMismatch(std::string(context) + ": " + a.to_string() + " and " + b.to_string() +
                             " have different degrees");
    }
}

}  // namespace hurwitz
