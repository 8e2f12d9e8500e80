#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"
#include "rational.hpp"

namespace hurwitz {

inline constexpr int kDefaultCharacterDegreeCap = 10;

namespace detail {

// Murnaghan-Nakayama on beta-sets. A partition of length n becomes the set
// {λ_i + n - 1 - i}; removing a border strip of length r moves one bead from
// b to b - r (target empty), with sign (-1)^(beads strictly between).
class MurnaghanNakayama {
public:
    BigInt operator()(const Partition& lambda, const Partition& rho) {
        return evaluate(lambda, rho.parts(), 0);
    }

private:
    BigInt evaluate(const Partition& lambda, const std::vector<int>& rho, std::size_t next) {
        if (next == rho.size()) {
            return lambda.empty() ? BigInt(1) : BigInt(0);
        }
        auto key = std::make_pair(lambda, Partition(std::vector<int>(rho.begin() + static_cast<long>(next), rho.end())));
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        int r = rho[next];
        int n = lambda.length();
        std::set<int> beads;
        for (int i = 0; i < n; ++i) {
            beads.insert(lambda[static_cast<std::size_t>(i)] + n - 1 - i);
        }
        BigInt total = 0;
        for (int b : beads) {
            int target = b - r;
            if (target < 0 || beads.count(target)) {
                continue;
            }
            int between = static_cast<int>(std::distance(beads.upper_bound(target), beads.lower_bound(b)));
            std::set<int> moved = beads;
            moved.erase(b);
            moved.insert(target);
            std::vector<int> parts;
            int i = 0;
            for (auto it = moved.rbegin(); it != moved.rend(); ++it, ++i) {
                int part = *it - (n - 1 - i);
                if (part > 0) {
                    parts.push_back(part);
                }
            }
            BigInt sub = evaluate(Partition(std::move(parts)), rho, next + 1);
            if (between % 2) {
                total -= sub;
            } else {
                total += sub;
            }
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

    std::map<std::pair<Partition, Partition>, BigInt> memo_;
};

}  // namespace detail

/// Character table of S_d with dimensions and normalized characters.
///
/// Rows λ and columns Δ both run over partitions_of(d). Tables are immutable
/// and shared through a process-wide cache (see of_degree).
class CharTable {
public:
    explicit CharTable(int d) : degree_(d), partitions_(partitions_of(d)) {
        for (std::size_t i = 0; i < partitions_.size(); ++i) {
            index_.emplace(partitions_[i], i);
        }
        std::size_t n = partitions_.size();
        values_.assign(n * n, BigInt(0));
        phi_.assign(n * n, BigRational(0));
        dims_.reserve(n);
        detail::MurnaghanNakayama mn;
        for (std::size_t row = 0; row < n; ++row) {
            dims_.push_back(dim_irrep(partitions_[row]));
        }
        for (std::size_t col = 0; col < n; ++col) {
            class_sizes_.push_back(class_size(partitions_[col]));
        }
        for (std::size_t row = 0; row < n; ++row) {
            for (std::size_t col = 0; col < n; ++col) {
                values_[row * n + col] = mn(partitions_[row], partitions_[col]);
                phi_[row * n + col] = BigRational(class_sizes_[col] * values_[row * n + col], dims_[row]);
            }
        }
    }

    /// Cached table for degree d; throws LimitExceeded when d > cap.
    static std::shared_ptr<const CharTable> of_degree(int d, int cap = kDefaultCharacterDegreeCap) {
        if (d < 0) {
            throw std::invalid_argument("negative degree " + std::to_string(d));
        }
        if (d > cap) {
            throw LimitExceeded("character table degree " + std::to_string(d) + " exceeds cap " +
                                std::to_string(cap));
        }
        static std::mutex mutex;
        static std::map<int, std::shared_ptr<const CharTable>> cache;
        std::lock_guard lock(mutex);
        auto& slot = cache[d];
        if (!slot) {
            slot = std::make_shared<const CharTable>(d);
        }
        return slot;
    }

    int degree() const { return degree_; }
    const std::vector<Partition>& partitions() const { return partitions_; }
    std::size_t size() const { return partitions_.size(); }

    std::size_t index(const Partition& p) const {
        auto it = index_.find(p);
        if (it == index_.end()) {
            throw DegreeMismatch(p.to_string() + " is not a partition of " + std::to_string(degree_));
        }
        return it->second;
    }

    const BigInt& value(const Partition& lambda, const Partition& delta) const {
        return values_[index(lambda) * size() + index(delta)];
    }
    const BigRational& phi(const Partition& lambda, const Partition& delta) const {
        return phi_[index(lambda) * size() + index(delta)];
    }
    const BigInt& dim(const Partition& lambda) const { return dims_[index(lambda)]; }
    const BigInt& class_size_of(const Partition& delta) const { return class_sizes_[index(delta)]; }

private:
    int degree_;
    std::vector<Partition> partitions_;
    std::map<Partition, std::size_t> index_;
    std::vector<BigInt> values_;
    std::vector<BigRational> phi_;
    std::vector<BigInt> dims_;
    std::vector<BigInt> class_sizes_;
};

/// χ_λ(Δ).
inline BigInt character(const Partition& lambda, const Partition& delta) {
    require_same_degree(lambda, delta, "character");
    return CharTable::of_degree(lambda.degree())->value(lambda, delta);
}

/// φ_λ(Δ) = |C_Δ| χ_λ(Δ) / dim λ.
inline BigRational phi(const Partition& lambda, const Partition& delta) {
    require_same_degree(lambda, delta, "phi");
    return CharTable::of_degree(lambda.degree())->phi(lambda, delta);
}

/// Row orthogonality (1/d!) Σ_Δ χ_λ(Δ)|C_Δ|χ_κ(Δ) = δ_{λκ} for all λ, κ ⊢ d.
inline bool check_orthogonality(int d) {
    auto table = CharTable::of_degree(d);
    const auto& parts = table->partitions();
    BigInt d_fact = factorial(d);
    for (const auto& lambda : parts) {
        for (const auto& kappa : parts) {
            BigInt sum = 0;
            for (const auto& delta : parts) {
                sum += table->value(lambda, delta) * table->class_size_of(delta) * table->value(kappa, delta);
            }
            if (sum != (lambda == kappa ? d_fact : BigInt(0))) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace hurwitz
