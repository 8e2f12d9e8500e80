#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cutjoin.hpp"
#include "hurwitz_numbers.hpp"
#include "laurent.hpp"
#include "partition.hpp"
#include "ppoly.hpp"

namespace hurwitz {

inline constexpr int kDefaultSeriesOrder = 6;

/// A branch profile Δ_i together with the name of its formal variable u_i.
struct MarkedProfile {
    std::string label;
    Partition profile;

    friend bool operator==(const MarkedProfile&, const MarkedProfile&) = default;
};

/// Truncated generating function Φ_g. coefficients[l] is the coefficient of
/// Π u_i^{l_i}, for every exponent vector with l_i <= orders[i]. Entries
/// beyond the orders are unknown, not zero.
struct GenFunSeries {
    int genus = 0;
    int degree = 1;
    std::vector<MarkedProfile> marks;
    bool double_alphabet = false;
    std::vector<int> orders;
    std::map<std::vector<int>, PPoly> coefficients;

    friend bool operator==(const GenFunSeries&, const GenFunSeries&) = default;
};

/// Every exponent vector 0 <= l_i <= orders[i] in lexicographic order.
inline std::vector<std::vector<int>> exponent_box(const std::vector<int>& orders) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(orders.size(), 0);
    while (true) {
        out.push_back(current);
        std::size_t i = orders.size();
        while (i > 0) {
            --i;
            if (current[i] < orders[i]) {
                ++current[i];
                std::fill(current.begin() + static_cast<long>(i) + 1, current.end(), 0);
                break;
            }
            if (i == 0) {
                return out;
            }
        }
        if (orders.empty()) {
            return out;
        }
    }
}

/// Coefficient of Π(u_j^{l_j}) q_{Γ_1}...p_Γ in Φ_g:
/// z^{2h-2} μ_g(Δ_1^{l_1},...,Δ_n^{l_n}, Γ_1..Γ_k, Γ) / Π l_j!, 2h - 2 from the
/// Hurwitz formula. Zero when the formula has no integral solution.
inline ZLaurent phi_coefficient(int genus, int d, const std::vector<std::pair<Partition, int>>& marks,
                                const std::vector<Partition>& extra, const Partition& gamma) {
    CoverSpec spec{genus, d, {}};
    BigRational weight(1);
    for (const auto& [delta, l] : marks) {
        if (l < 0) {
            throw std::invalid_argument("negative exponent");
        }
        spec.profiles.insert(spec.profiles.end(), static_cast<std::size_t>(l), delta);
        weight /= BigRational(factorial(l));
    }
    spec.profiles.insert(spec.profiles.end(), extra.begin(), extra.end());
    spec.profiles.push_back(gamma);
    GenusResult euler = source_euler(spec);
    BigRational mu = hurwitz_number(spec);
    if (mu.is_zero() || euler.parity_failure()) {
        return {};
    }
    return ZLaurent::monomial(mu * weight, *euler.euler2h2);
}

/// Φ_0{z||p} = z^{-2d} p_1^d / d!.
inline PPoly initial_k0(int d) {
    return PPoly::monomial(Partition::ones(d), ZLaurent::monomial(BigRational(1, factorial(d)), -2 * d));
}

/// Φ_0{z||q,p} = Σ_Δ z^{-2l(Δ)} (|C_Δ|/d!) q_Δ p_Δ.
inline PPoly initial_k1(int d) {
    PPoly out;
    for (const auto& delta : partitions_of(d)) {
        out.add(Monomial{delta, delta}, ZLaurent::monomial(BigRational(class_size(delta), factorial(d)),
                                                            -2 * delta.length()));
    }
    return out;
}

/// Σ_λ (dim λ / d!) S_λ{p,z}.
inline PPoly initial_k0_schur_sum(int d) {
    PPoly out;
    BigRational d_fact(factorial(d));
    for (const auto& lambda : partitions_of(d)) {
        out += schur_z(lambda).scaled(ZLaurent(BigRational(dim_irrep(lambda)) / d_fact));
    }
    return out;
}

/// Σ_λ z^{2d} S_λ{q,z} S_λ{p,z}.
inline PPoly initial_k1_schur_sum(int d) {
    PPoly out;
    for (const auto& lambda : partitions_of(d)) {
        PPoly s = schur_z(lambda);
        for (const auto& [mq, cq] : s.terms()) {
            for (const auto& [mp, cp] : s.terms()) {
                out.add(Monomial{mp.p, mq.p}, (cq * cp).shifted(2 * d));
            }
        }
    }
    return out;
}

/// Φ_g with no marks, evaluated coefficient by coefficient. For g = 0 this
/// equals initial_k0 / initial_k1.
inline PPoly initial_value(int genus, int d, bool double_alphabet) {
    PPoly out;
    auto basis = partitions_of(d);
    for (const auto& gamma : basis) {
        if (!double_alphabet) {
            out.add(Monomial{gamma, std::nullopt}, phi_coefficient(genus, d, {}, {}, gamma));
            continue;
        }
        for (const auto& gamma1 : basis) {
            out.add(Monomial{gamma, gamma1}, phi_coefficient(genus, d, {}, {gamma1}, gamma));
        }
    }
    return out;
}

namespace detail {

inline void check_marks(int d, const std::vector<MarkedProfile>& marks, const std::vector<int>& orders) {
    if (marks.size() != orders.size()) {
        throw std::invalid_argument("need one truncation order per mark");
    }
    for (int order : orders) {
        if (order < 0) {
            throw std::invalid_argument("truncation orders must be nonnegative");
        }
    }
    for (const auto& m : marks) {
        if (m.profile.degree() != d) {
            throw DegreeMismatch("mark " + m.label + " = " + m.profile.to_string() + " is not a partition of " +
                                 std::to_string(d));
        }
    }
}

}  // namespace detail

/// Π_i exp(u_i W(Δ_i, z)) applied to the initial value, truncated at
/// u_i^{orders[i]}. The coefficient of Π u_i^{l_i} is
/// W_1^{l_1}/l_1! ... W_n^{l_n}/l_n! initial (rightmost factor first).
inline GenFunSeries evolve(const PPoly& initial, const std::vector<MarkedProfile>& marks,
                           const std::vector<int>& orders, int genus = 0) {
    std::optional<int> degree = initial.p_degree();
    if (!degree) {
        if (marks.empty()) {
            throw std::invalid_argument("cannot infer degree from a zero initial value without marks");
        }
        degree = marks.front().profile.degree();
    }
    const int d = *degree;
    detail::check_marks(d, marks, orders);

    std::vector<CutJoinOp> ops;
    for (const auto& m : marks) {
        ops.push_back(build_w(d, m.profile));
    }

    GenFunSeries series{genus, d, marks, initial.has_q(), orders, {}};
    for (const auto& l : exponent_box(orders)) {
        auto first = std::find_if(l.begin(), l.end(), [](int x) { return x > 0; });
        if (first == l.end()) {
            series.coefficients.emplace(l, initial);
            continue;
        }
        auto i = static_cast<std::size_t>(first - l.begin());
        std::vector<int> previous = l;
        --previous[i];
        PPoly next = ops[i].apply(series.coefficients.at(previous));
        series.coefficients.emplace(l, next.scaled(ZLaurent(BigRational(1, l[i]))));
    }
    return series;
}

/// Φ_g assembled term by term from phi_coefficient (no operators involved).
inline GenFunSeries direct_series(int genus, int d, const std::vector<MarkedProfile>& marks,
                                  const std::vector<int>& orders, bool double_alphabet) {
    detail::check_marks(d, marks, orders);
    GenFunSeries series{genus, d, marks, double_alphabet, orders, {}};
    auto basis = partitions_of(d);
    for (const auto& l : exponent_box(orders)) {
        std::vector<std::pair<Partition, int>> exps;
        for (std::size_t i = 0; i < marks.size(); ++i) {
            exps.emplace_back(marks[i].profile, l[i]);
        }
        PPoly coeff;
        for (const auto& gamma : basis) {
            if (!double_alphabet) {
                coeff.add(Monomial{gamma, std::nullopt}, phi_coefficient(genus, d, exps, {}, gamma));
                continue;
            }
            for (const auto& gamma1 : basis) {
                coeff.add(Monomial{gamma, gamma1}, phi_coefficient(genus, d, exps, {gamma1}, gamma));
            }
        }
        series.coefficients.emplace(l, std::move(coeff));
    }
    return series;
}

/// Initial value for (genus, d, alphabet count) evolved by the marks.
inline GenFunSeries generating_function(int genus, int d, const std::vector<MarkedProfile>& marks,
                                        const std::vector<int>& orders, bool double_alphabet) {
    PPoly initial;
    if (genus == 0) {
        initial = double_alphabet ? initial_k1(d) : initial_k0(d);
    } else {
        initial = initial_value(genus, d, double_alphabet);
    }
    GenFunSeries series = evolve(initial, marks, orders, genus);
    series.degree = d;
    series.double_alphabet = double_alphabet;
    return series;
}

/// ∂Φ/∂u_i - W(Δ_i, z)Φ, coefficient by coefficient, for every exponent
/// vector with l_i < orders[i] (where both sides are known).
inline std::map<std::vector<int>, PPoly> pde_residual(const GenFunSeries& series, std::size_t mark_index) {
    std::map<std::vector<int>, PPoly> residual;
    if (series.marks.empty()) {
        return residual;
    }
    if (mark_index >= series.marks.size()) {
        throw std::out_of_range("mark index " + std::to_string(mark_index) + " out of range");
    }
    CutJoinOp op = build_w(series.degree, series.marks[mark_index].profile);
    for (const auto& [l, coeff] : series.coefficients) {
        if (l[mark_index] >= series.orders[mark_index]) {
            continue;
        }
        std::vector<int> up = l;
        ++up[mark_index];
        PPoly derivative = series.coefficients.at(up).scaled(ZLaurent(BigRational(up[mark_index])));
        residual.emplace(l, derivative - op.apply(coeff));
    }
    return residual;
}

/// Term ordering for display: total u-degree, then exponent vector
/// (descending lexicographic), then canonical monomial order.
inline std::vector<std::vector<int>> display_order(const GenFunSeries& series) {
    std::vector<std::vector<int>> keys;
    for (const auto& [l, c] : series.coefficients) {
        keys.push_back(l);
    }
    std::stable_sort(keys.begin(), keys.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        int ta = std::accumulate(a.begin(), a.end(), 0);
        int tb = std::accumulate(b.begin(), b.end(), 0);
        if (ta != tb) {
            return ta < tb;
        }
        return a > b;
    });
    return keys;
}

/// e.g. "1/6*z^-6*p_(1,1,1) + 1/2*u*z^-4*p_(2,1) + ..."
inline std::string render_series(const GenFunSeries& series) {
    std::string out;
    for (const auto& l : display_order(series)) {
        std::string u_part;
        for (std::size_t i = 0; i < l.size(); ++i) {
            if (l[i] == 0) {
                continue;
            }
            u_part += series.marks[i].label;
            if (l[i] > 1) {
                u_part += "^" + std::to_string(l[i]);
            }
            u_part += "*";
        }
        for (const auto& [m, c] : series.coefficients.at(l).terms()) {
            bool negative = false;
            std::string coeff;
            std::string z_part;
            if (c.is_monomial()) {
                const auto& [e, value] = *c.terms().begin();
                negative = value.sign() < 0;
                BigRational magnitude = negative ? -value : value;
                if (magnitude != BigRational(1)) {
                    coeff = magnitude.to_string() + "*";
                }
                if (e != 0) {
                    z_part = (e == 1 ? std::string("z") : "z^" + std::to_string(e)) + "*";
                }
            } else {
                coeff = "(" + c.to_string() + ")*";
            }
            if (out.empty()) {
                out += negative ? "-" : "";
            } else {
                out += negative ? " - " : " + ";
            }
            out += coeff + u_part + z_part + m.to_string();
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace hurwitz
