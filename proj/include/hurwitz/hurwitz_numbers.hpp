#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "characters.hpp"
#include "errors.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "rational.hpp"

namespace hurwitz {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

/// Enumeration budget: $HURWITZ_ENUM_BUDGET if set and valid, else 10^8.
inline std::uint64_t default_enumeration_budget() {
    if (const char* env = std::getenv("HURWITZ_ENUM_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
        }
    }
    return kDefaultEnumerationBudget;
}

/// Degree-d cover of a genus-g target with ramification profiles Δ_1..Δ_k.
struct CoverSpec {
    int genus = 0;
    int degree = 1;
    std::vector<Partition> profiles;

    void validate() const {
        if (genus < 0) {
            throw std::invalid_argument("genus must be nonnegative");
        }
        if (degree < 1) {
            throw std::invalid_argument("degree must be positive");
        }
        for (const auto& p : profiles) {
            if (p.degree() != degree) {
                throw DegreeMismatch("profile " + p.to_string() + " is not a partition of " +
                                     std::to_string(degree));
            }
        }
    }
};

/// 2h - 2 of the source surface, or empty when the Hurwitz formula has no
/// integral solution (odd Euler characteristic).
struct GenusResult {
    std::optional<int> euler2h2;

    bool parity_failure() const { return !euler2h2.has_value(); }
};

/// Solves (2-2g)d - (2-2h) = Σ (d - l(Δ_i)) for 2h - 2.
inline GenusResult source_euler(const CoverSpec& spec) {
    spec.validate();
    int ramification = 0;
    for (const auto& p : spec.profiles) {
        ramification += p.colength();
    }
    int euler = ramification - (2 - 2 * spec.genus) * spec.degree;
    if (euler % 2 != 0) {
        return {};
    }
    return {euler};
}

/// μ_g(Δ_1..Δ_k) = Σ_λ (dim λ / d!)^{2-2g} Π_i φ_λ(Δ_i).
inline BigRational hurwitz_number(const CoverSpec& spec) {
    spec.validate();
    auto table = CharTable::of_degree(spec.degree);
    BigRational d_fact(factorial(spec.degree));
    BigRational total;
    for (const auto& lambda : table->partitions()) {
        BigRational term = pow(BigRational(table->dim(lambda)) / d_fact, 2 - 2 * spec.genus);
        for (const auto& delta : spec.profiles) {
            term *= table->phi(lambda, delta);
            if (term.is_zero()) {
                break;
            }
        }
        total += term;
    }
    return total;
}

/// Nominal number of tuples the oracle composes: |S_d|^{2g} times the class
/// sizes of every profile except the largest, which is solved by inversion.
inline BigInt oracle_tuple_estimate(const CoverSpec& spec) {
    spec.validate();
    BigInt group = factorial(spec.degree);
    BigInt estimate = 1;
    for (int j = 0; j < 2 * spec.genus; ++j) {
        estimate *= group;
    }
    std::vector<BigInt> sizes;
    for (const auto& p : spec.profiles) {
        sizes.push_back(class_size(p));
    }
    std::sort(sizes.begin(), sizes.end());
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
        estimate *= sizes[i];
    }
    return estimate;
}

namespace detail {

// Group-algebra element of C[S_d] with integer coefficients indexed by rank.
using GroupVector = std::vector<BigInt>;

inline GroupVector multiply(const GroupVector& lhs, const GroupVector& rhs, const std::vector<Permutation>& group) {
    GroupVector out(group.size(), BigInt(0));
    for (std::size_t i = 0; i < group.size(); ++i) {
        if (lhs[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < group.size(); ++j) {
            if (rhs[j] != 0) {
                out[(group[i] * group[j]).rank()] += lhs[i] * rhs[j];
            }
        }
    }
    return out;
}

// S_d with cycle types, plus the tally of commutators [a,b] over all pairs
// (built on first use). Shared per degree.
struct GroupData {
    std::vector<Permutation> elements;
    std::vector<Partition> cycle_types;

    explicit GroupData(int d) : elements(symmetric_group(d)) {
        cycle_types.reserve(elements.size());
        for (const auto& sigma : elements) {
            cycle_types.push_back(sigma.cycle_type());
        }
    }

    static std::shared_ptr<const GroupData> of_degree(int d) {
        static std::mutex mutex;
        static std::map<int, std::shared_ptr<const GroupData>> cache;
        std::lock_guard lock(mutex);
        auto& slot = cache[d];
        if (!slot) {
            slot = std::make_shared<const GroupData>(d);
        }
        return slot;
    }

    const GroupVector& commutators() const {
        std::call_once(commutators_once_, [this] {
            commutators_.assign(elements.size(), BigInt(0));
            std::vector<Permutation> inverses;
            inverses.reserve(elements.size());
            for (const auto& a : elements) {
                inverses.push_back(a.inverse());
            }
            for (std::size_t i = 0; i < elements.size(); ++i) {
                for (std::size_t j = 0; j < elements.size(); ++j) {
                    commutators_[(elements[i] * elements[j] * inverses[i] * inverses[j]).rank()] += 1;
                }
            }
        });
        return commutators_;
    }

private:
    mutable std::once_flag commutators_once_;
    mutable GroupVector commutators_;
};

}  // namespace detail

/// μ_g by counting tuples (a_1,b_1,...,a_g,b_g,σ_1..σ_k) in S_d with
/// Π[a_j,b_j] σ_1...σ_k = e, divided by d!.
///
/// The commutator part is tallied over all pairs, then class sums are
/// multiplied in smallest-first; the last (largest) class is matched by
/// inversion instead of enumerated. Throws LimitExceeded when
/// oracle_tuple_estimate exceeds the budget.
inline BigRational hurwitz_oracle(const CoverSpec& spec, std::uint64_t budget = default_enumeration_budget()) {
    spec.validate();
    BigInt estimate = oracle_tuple_estimate(spec);
    if (estimate > BigInt(std::to_string(budget))) {
        throw LimitExceeded("enumeration needs about " + estimate.get_str() + " composed tuples, budget is " +
                            std::to_string(budget));
    }
    const int d = spec.degree;
    auto data = detail::GroupData::of_degree(d);
    const auto& group = data->elements;
    const auto& types = data->cycle_types;
    detail::GroupVector state(group.size(), BigInt(0));
    state[0] = 1;  // identity has rank 0
    for (int g = 0; g < spec.genus; ++g) {
        state = detail::multiply(state, data->commutators(), group);
    }

    std::vector<Partition> profiles = spec.profiles;
    std::sort(profiles.begin(), profiles.end(), [](const Partition& a, const Partition& b) {
        return class_size(a) < class_size(b);
    });

    BigInt count = 0;
    if (profiles.empty()) {
        count = state[0];
    } else {
        for (std::size_t i = 0; i + 1 < profiles.size(); ++i) {
            detail::GroupVector next(group.size(), BigInt(0));
            std::vector<std::size_t> members;
            for (std::size_t j = 0; j < group.size(); ++j) {
                if (types[j] == profiles[i]) {
                    members.push_back(j);
                }
            }
            for (std::size_t s = 0; s < group.size(); ++s) {
                if (state[s] == 0) {
                    continue;
                }
                for (std::size_t j : members) {
                    next[(group[s] * group[j]).rank()] += state[s];
                }
            }
            state = std::move(next);
        }
        // π σ_k = e  <=>  σ_k = π^{-1}, and classes are closed under inversion.
        const Partition& last = profiles.back();
        for (std::size_t s = 0; s < group.size(); ++s) {
            if (state[s] != 0 && types[s] == last) {
                count += state[s];
            }
        }
    }
    return BigRational(count, factorial(d));
}

/// Right side of the gluing identity for one genus allocation:
/// Σ_{Δ'} μ_{g1}(Δ_1..Δ_l, Δ') (d!/|C_Δ'|) μ_{g2}(Δ', Δ_{l+1}..Δ_k), g1 + g2 = g.
inline BigRational associativity_split_sum(const CoverSpec& spec, int split, int left_genus) {
    spec.validate();
    const int k = static_cast<int>(spec.profiles.size());
    if (split < 1 || split >= k) {
        throw std::invalid_argument("split index " + std::to_string(split) + " must satisfy 1 <= l < k = " +
                                    std::to_string(k));
    }
    if (left_genus < 0 || left_genus > spec.genus) {
        throw std::invalid_argument("left genus out of range");
    }
    BigRational d_fact(factorial(spec.degree));
    BigRational total;
    for (const auto& middle : partitions_of(spec.degree)) {
        CoverSpec left{left_genus, spec.degree,
                       std::vector<Partition>(spec.profiles.begin(), spec.profiles.begin() + split)};
        left.profiles.push_back(middle);
        CoverSpec right{spec.genus - left_genus, spec.degree, {middle}};
        right.profiles.insert(right.profiles.end(), spec.profiles.begin() + split, spec.profiles.end());
        BigRational lhs = hurwitz_number(left);
        if (lhs.is_zero()) {
            continue;
        }
        total += lhs * (d_fact / BigRational(class_size(middle))) * hurwitz_number(right);
    }
    return total;
}

/// Gluing identity: μ_g(Δ_1..Δ_k) equals associativity_split_sum for the
/// given split l and for every allocation g1 + g2 = g of the handles.
inline bool associativity_check(const CoverSpec& spec, int split) {
    BigRational whole = hurwitz_number(spec);
    for (int g1 = 0; g1 <= spec.genus; ++g1) {
        if (associativity_split_sum(spec, split, g1) != whole) {
            return false;
        }
    }
    return true;
}

}  // namespace hurwitz
