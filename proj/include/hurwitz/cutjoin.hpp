#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "characters.hpp"
#include "errors.hpp"
#include "hurwitz_numbers.hpp"
#include "laurent.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "ppoly.hpp"

namespace hurwitz {

/// Linear operator on span{p_Γ : Γ ⊢ d}. Entry (from, to) is the
/// coefficient of p_to in the image of p_from. Zero entries are not stored.
class OperatorMatrix {
public:
    using Key = std::pair<Partition, Partition>;

    explicit OperatorMatrix(int degree) : degree_(degree) {}

    static OperatorMatrix identity(int degree) {
        OperatorMatrix out(degree);
        for (const auto& gamma : partitions_of(degree)) {
            out.add(gamma, gamma, ZLaurent(1));
        }
        return out;
    }

    int degree() const { return degree_; }
    const std::map<Key, ZLaurent>& entries() const { return entries_; }

    ZLaurent entry(const Partition& from, const Partition& to) const {
        auto it = entries_.find(Key{from, to});
        return it == entries_.end() ? ZLaurent() : it->second;
    }

    void add(const Partition& from, const Partition& to, const ZLaurent& value) {
        if (from.degree() != degree_ || to.degree() != degree_) {
            throw DegreeMismatch("operator entry outside degree " + std::to_string(degree_));
        }
        if (value.is_zero()) {
            return;
        }
        auto [it, inserted] = entries_.try_emplace(Key{from, to}, value);
        if (!inserted) {
            it->second += value;
            if (it->second.is_zero()) {
                entries_.erase(it);
            }
        }
    }

    /// Linear extension to polynomials; q-factors pass through unchanged.
    PPoly apply(const PPoly& poly) const {
        if (!poly.is_homogeneous(degree_)) {
            throw DegreeMismatch("operator of degree " + std::to_string(degree_) +
                                 " applied to a polynomial that is not homogeneous of that degree");
        }
        PPoly out;
        for (const auto& [monomial, coeff] : poly.terms()) {
            auto lo = entries_.lower_bound(Key{monomial.p, Partition()});
            for (auto it = lo; it != entries_.end() && it->first.first == monomial.p; ++it) {
                out.add(Monomial{it->first.second, monomial.q}, coeff * it->second);
            }
        }
        return out;
    }

    OperatorMatrix scaled(const ZLaurent& c) const {
        OperatorMatrix out(degree_);
        for (const auto& [key, value] : entries_) {
            out.add(key.first, key.second, value * c);
        }
        return out;
    }

    /// Substitutes z = value in every entry.
    OperatorMatrix at_z(const BigRational& value) const {
        OperatorMatrix out(degree_);
        for (const auto& [key, entry] : entries_) {
            out.add(key.first, key.second, ZLaurent(entry.evaluate(value)));
        }
        return out;
    }

    OperatorMatrix& operator+=(const OperatorMatrix& o) {
        if (o.degree_ != degree_) {
            throw DegreeMismatch("adding operators of different degrees");
        }
        for (const auto& [key, value] : o.entries_) {
            add(key.first, key.second, value);
        }
        return *this;
    }
    friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { return a += b; }

    friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;

private:
    int degree_;
    std::map<Key, ZLaurent> entries_;
};

/// a ∘ b: b is applied first.
inline OperatorMatrix compose(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.degree() != b.degree()) {
        throw DegreeMismatch("composing operators of degrees " + std::to_string(a.degree()) + " and " +
                             std::to_string(b.degree()));
    }
    OperatorMatrix out(a.degree());
    for (const auto& [key_b, value_b] : b.entries()) {
        const auto& [from, middle] = key_b;
        auto lo = a.entries().lower_bound(OperatorMatrix::Key{middle, Partition()});
        for (auto it = lo; it != a.entries().end() && it->first.first == middle; ++it) {
            out.add(from, it->first.second, value_b * it->second);
        }
    }
    return out;
}

/// Genus-expanded cut-and-join operator W(Δ, z), or its normalization
/// Ŵ(Δ, z) = z^{l(Δ)-d} W(Δ, z) when normalized() is set.
class CutJoinOp {
public:
    CutJoinOp(Partition source, bool normalized, OperatorMatrix matrix)
        : source_(std::move(source)), normalized_(normalized), matrix_(std::move(matrix)) {}

    int degree() const { return matrix_.degree(); }
    const Partition& source() const { return source_; }
    bool normalized() const { return normalized_; }
    const OperatorMatrix& matrix() const { return matrix_; }

    PPoly apply(const PPoly& poly) const { return matrix_.apply(poly); }

    friend bool operator==(const CutJoinOp&, const CutJoinOp&) = default;

private:
    Partition source_;
    bool normalized_;
    OperatorMatrix matrix_;
};

/// W(Δ, z): entry (Γ', Γ) = (d!/|C_Γ'|) z^{d + l(Γ') - l(Δ) - l(Γ)} μ_0(Γ', Δ, Γ).
inline CutJoinOp build_w(int d, const Partition& delta) {
    if (delta.degree() != d) {
        throw DegreeMismatch(delta.to_string() + " is not a partition of " + std::to_string(d));
    }
    auto basis = partitions_of(d);
    BigRational d_fact(factorial(d));
    OperatorMatrix matrix(d);
    for (const auto& from : basis) {
        BigRational scale = d_fact / BigRational(class_size(from));
        for (const auto& to : basis) {
            BigRational mu = hurwitz_number(CoverSpec{0, d, {from, delta, to}});
            if (mu.is_zero()) {
                continue;
            }
            int exponent = d + from.length() - delta.length() - to.length();
            matrix.add(from, to, ZLaurent::monomial(scale * mu, exponent));
        }
    }
    return CutJoinOp(delta, false, std::move(matrix));
}

inline PPoly apply_w(const CutJoinOp& op, const PPoly& poly) { return op.apply(poly); }

inline OperatorMatrix compose(const CutJoinOp& a, const CutJoinOp& b) { return compose(a.matrix(), b.matrix()); }

/// Ŵ(Δ, z) = z^{-d + l(Δ)} W(Δ, z).
inline CutJoinOp normalize(const CutJoinOp& op) {
    if (op.normalized()) {
        throw std::invalid_argument("operator for " + op.source().to_string() + " is already normalized");
    }
    int shift = op.source().length() - op.degree();
    OperatorMatrix matrix(op.degree());
    for (const auto& [key, value] : op.matrix().entries()) {
        matrix.add(key.first, key.second, value.shifted(shift));
    }
    return CutJoinOp(op.source(), true, std::move(matrix));
}

inline CutJoinOp build_w_hat(int d, const Partition& delta) { return normalize(build_w(d, delta)); }

/// Multiplication table C^{Δ3}_{Δ1Δ2} of the class sums of S_d, all triples stored.
class StructureConstants {
public:
    using Key = std::tuple<Partition, Partition, Partition>;

    explicit StructureConstants(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::map<Key, BigRational>& table() const { return table_; }

    void set(const Partition& a, const Partition& b, const Partition& c, BigRational value) {
        table_[Key{a, b, c}] = std::move(value);
    }

    /// C^{c}_{ab}.
    BigRational at(const Partition& a, const Partition& b, const Partition& c) const {
        auto it = table_.find(Key{a, b, c});
        return it == table_.end() ? BigRational(0) : it->second;
    }

    friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

private:
    int degree_;
    std::map<Key, BigRational> table_;
};

/// C^{Δ3}_{Δ1Δ2} = (d!/|C_Δ3|) μ_0(Δ1, Δ2, Δ3).
inline StructureConstants structure_constants(int d) {
    StructureConstants out(d);
    auto basis = partitions_of(d);
    BigRational d_fact(factorial(d));
    for (const auto& a : basis) {
        for (const auto& b : basis) {
            for (const auto& c : basis) {
                out.set(a, b, c, d_fact / BigRational(class_size(c)) * hurwitz_number(CoverSpec{0, d, {a, b, c}}));
            }
        }
    }
    return out;
}

inline constexpr int kDefaultClassSumCap = 7;

/// Structure constants by explicit multiplication of class sums in C[S_d]:
/// compose every pair in C_Δ1 × C_Δ2 and tally cycle types.
inline StructureConstants class_sum_oracle(int d, int cap = kDefaultClassSumCap) {
    if (d < 1) {
        throw std::invalid_argument("degree must be positive");
    }
    if (d > cap) {
        throw LimitExceeded("class-sum oracle degree " + std::to_string(d) + " exceeds cap " + std::to_string(cap));
    }
    auto classes = conjugacy_classes(d);
    StructureConstants out(d);
    for (const auto& [a, members_a] : classes) {
        for (const auto& [b, members_b] : classes) {
            std::map<Partition, BigInt> tally;
            for (const auto& x : members_a) {
                for (const auto& y : members_b) {
                    tally[(x * y).cycle_type()] += 1;
                }
            }
            for (const auto& [c, members_c] : classes) {
                BigInt hits = tally.count(c) ? tally[c] : BigInt(0);
                out.set(a, b, c, BigRational(hits, BigInt(static_cast<unsigned long>(members_c.size()))));
            }
        }
    }
    return out;
}

/// Outcome of an identity check with the first counterexample on failure.
struct Verdict {
    bool passed = true;
    std::string counterexample;

    explicit operator bool() const { return passed; }

    static Verdict fail(std::string what) { return Verdict{false, std::move(what)}; }
};

/// W(Δ1)W(Δ2) = Σ_Δ3 z^{d - l(Δ1) - l(Δ2) + l(Δ3)} C^{Δ3}_{Δ1Δ2} W(Δ3) for all Δ1, Δ2 ⊢ d,
/// with W(Δ2) applied first.
inline Verdict verify_composition_law(int d) {
    auto basis = partitions_of(d);
    auto constants = structure_constants(d);
    std::map<Partition, CutJoinOp> ops;
    for (const auto& delta : basis) {
        ops.emplace(delta, build_w(d, delta));
    }
    for (const auto& a : basis) {
        for (const auto& b : basis) {
            OperatorMatrix lhs = compose(ops.at(a), ops.at(b));
            OperatorMatrix rhs(d);
            for (const auto& c : basis) {
                BigRational k = constants.at(a, b, c);
                if (k.is_zero()) {
                    continue;
                }
                rhs += ops.at(c).matrix().scaled(ZLaurent::monomial(k, d - a.length() - b.length() + c.length()));
            }
            if (!(lhs == rhs)) {
                return Verdict::fail("W" + a.to_string() + " W" + b.to_string());
            }
        }
    }
    return {};
}

/// Ŵ(Δ1)Ŵ(Δ2) = Σ C^{Δ3}_{Δ1Δ2} Ŵ(Δ3) and Ŵ(Δ1)Ŵ(Δ2) = Ŵ(Δ2)Ŵ(Δ1).
inline Verdict verify_normalized_algebra(int d) {
    auto basis = partitions_of(d);
    auto constants = structure_constants(d);
    std::map<Partition, CutJoinOp> ops;
    for (const auto& delta : basis) {
        ops.emplace(delta, build_w_hat(d, delta));
    }
    for (const auto& a : basis) {
        for (const auto& b : basis) {
            OperatorMatrix ab = compose(ops.at(a), ops.at(b));
            if (!(ab == compose(ops.at(b), ops.at(a)))) {
                return Verdict::fail("Ŵ" + a.to_string() + " and Ŵ" + b.to_string() + " do not commute");
            }
            OperatorMatrix rhs(d);
            for (const auto& c : basis) {
                BigRational k = constants.at(a, b, c);
                if (!k.is_zero()) {
                    rhs += ops.at(c).matrix().scaled(ZLaurent(k));
                }
            }
            if (!(ab == rhs)) {
                return Verdict::fail("Ŵ" + a.to_string() + " Ŵ" + b.to_string() + " != Σ C Ŵ");
            }
        }
    }
    return {};
}

/// Genus-expanded Schur function Σ_Γ' z^{-d - l(Γ')} (dim λ / d!) φ_λ(Γ') p_Γ'.
inline PPoly schur_z(const Partition& lambda) {
    const int d = lambda.degree();
    auto table = CharTable::of_degree(d);
    BigRational weight = BigRational(table->dim(lambda)) / BigRational(factorial(d));
    PPoly out;
    for (const auto& gamma : table->partitions()) {
        out.add(Monomial{gamma, std::nullopt},
                ZLaurent::monomial(weight * table->phi(lambda, gamma), -d - gamma.length()));
    }
    return out;
}

/// Ŵ(Δ) S_λ{p,z} = φ_λ(Δ) S_λ{p,z} for all λ, Δ ⊢ d.
inline Verdict eigen_check(int d) {
    auto basis = partitions_of(d);
    std::map<Partition, PPoly> schur;
    for (const auto& lambda : basis) {
        schur.emplace(lambda, schur_z(lambda));
    }
    for (const auto& delta : basis) {
        CutJoinOp op = build_w_hat(d, delta);
        for (const auto& lambda : basis) {
            const PPoly& s = schur.at(lambda);
            if (!(op.apply(s) == s.scaled(ZLaurent(phi(lambda, delta))))) {
                return Verdict::fail("λ=" + lambda.to_string() + ", Δ=" + delta.to_string());
            }
        }
    }
    return {};
}

/// True when {S_λ{p,z}} spans the degree-d slice. Each column Γ' of the
/// change-of-basis matrix carries the single factor z^{-d-l(Γ')}, so this is
/// the rank of the rational matrix (dim λ/d!) φ_λ(Γ').
inline bool schur_basis_is_invertible(int d) {
    auto table = CharTable::of_degree(d);
    const auto& basis = table->partitions();
    std::size_t n = basis.size();
    BigRational d_fact(factorial(d));
    std::vector<std::vector<BigRational>> m(n, std::vector<BigRational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = BigRational(table->dim(basis[i])) / d_fact * table->phi(basis[i], basis[j]);
        }
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            return false;
        }
        std::swap(m[pivot], m[col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) {
                continue;
            }
            BigRational factor = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) {
                m[row][k] -= factor * m[col][k];
            }
        }
    }
    return true;
}

/// One term c z^e p_multiply ∂^n/∂p_{δ1}...∂p_{δn} of the differential form,
/// with the raw (unnormalized) derivative, so c already includes 1/Γ'!.
struct DifferentialTerm {
    BigRational coefficient;
    int z_exponent = 0;
    Partition multiply;
    Partition differentiate;

    friend bool operator==(const DifferentialTerm&, const DifferentialTerm&) = default;
};

inline std::vector<DifferentialTerm> differential_terms(const OperatorMatrix& matrix) {
    std::vector<DifferentialTerm> terms;
    for (const auto& [key, entry] : matrix.entries()) {
        BigRational aut(aut_factor(key.first));
        for (const auto& [e, c] : entry.terms()) {
            terms.push_back(DifferentialTerm{c / aut, e, key.second, key.first});
        }
    }
    std::stable_sort(terms.begin(), terms.end(), [](const DifferentialTerm& a, const DifferentialTerm& b) {
        return a.z_exponent > b.z_exponent;
    });
    return terms;
}

inline std::vector<DifferentialTerm> differential_terms(const CutJoinOp& op) { return differential_terms(op.matrix()); }

namespace detail {

inline std::string render_factors(const Partition& p) {
    std::string out;
    auto parts = p.parts();
    std::sort(parts.begin(), parts.end());
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) {
            ++j;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += "p_" + std::to_string(parts[i]);
        if (j - i > 1) {
            out += "^" + std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

inline std::string render_derivative(const Partition& p) {
    auto parts = p.parts();
    std::sort(parts.begin(), parts.end());
    std::string out = parts.size() == 1 ? "d/" : "d^" + std::to_string(parts.size()) + "/";
    for (int part : parts) {
        out += "dp_" + std::to_string(part);
    }
    return out;
}

}  // namespace detail

/// ASCII rendering, e.g. "1/2 z^2 p_2 d^2/dp_1dp_1 + p_1^2 d/dp_2".
inline std::string render_differential(const std::vector<DifferentialTerm>& terms) {
    if (terms.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        bool negative = t.coefficient.sign() < 0;
        BigRational magnitude = negative ? -t.coefficient : t.coefficient;
        if (i == 0) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        if (magnitude != BigRational(1)) {
            out += magnitude.to_string() + " ";
        }
        if (t.z_exponent == 1) {
            out += "z ";
        } else if (t.z_exponent != 0) {
            out += "z^" + std::to_string(t.z_exponent) + " ";
        }
        out += detail::render_factors(t.multiply) + " " + detail::render_derivative(t.differentiate);
    }
    return out;
}

}  // namespace hurwitz
