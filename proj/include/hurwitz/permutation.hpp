#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "partition.hpp"

namespace hurwitz {

/// Permutation of {0, ..., d-1} stored as its array of images.
///
/// Products compose left to right: (a * b)(x) = b(a(x)), i.e. a acts first.
/// The commutator is [a, b] = a * b * a^{-1} * b^{-1} under that convention.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {}

    static Permutation identity(int d) {
        std::vector<std::uint8_t> images(static_cast<std::size_t>(d));
        std::iota(images.begin(), images.end(), std::uint8_t{0});
        return Permutation(std::move(images));
    }

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
    const std::vector<std::uint8_t>& images() const { return images_; }

    friend Permutation operator*(const Permutation& first, const Permutation& second) {
        std::vector<std::uint8_t> images(first.images_.size());
        for (std::size_t x = 0; x < images.size(); ++x) {
            images[x] = second.images_[first.images_[x]];
        }
        return Permutation(std::move(images));
    }

    Permutation inverse() const {
        std::vector<std::uint8_t> images(images_.size());
        for (std::size_t x = 0; x < images.size(); ++x) {
            images[images_[x]] = static_cast<std::uint8_t>(x);
        }
        return Permutation(std::move(images));
    }

    bool is_identity() const {
        for (std::size_t x = 0; x < images_.size(); ++x) {
            if (images_[x] != x) {
                return false;
            }
        }
        return true;
    }

    Partition cycle_type() const {
        std::vector<int> lengths;
        std::vector<bool> seen(images_.size(), false);
        for (std::size_t start = 0; start < images_.size(); ++start) {
            if (seen[start]) {
                continue;
            }
            int length = 0;
            for (std::size_t x = start; !seen[x]; x = images_[x]) {
                seen[x] = true;
                ++length;
            }
            lengths.push_back(length);
        }
        return Partition(std::move(lengths));
    }

    /// Position in the lexicographic listing of S_d (Lehmer code).
    std::size_t rank() const {
        std::size_t n = images_.size();
        std::size_t result = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t smaller = 0;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (images_[j] < images_[i]) {
                    ++smaller;
                }
            }
            result = result * (n - i) + smaller;
        }
        return result;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint8_t> images_;
};

/// S_d in lexicographic order; element i has rank() == i.
inline std::vector<Permutation> symmetric_group(int d) {
    std::vector<Permutation> result;
    Permutation current = Permutation::identity(d);
    auto images = current.images();
    do {
        result.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return result;
}

/// Elements of S_d grouped by cycle type.
inline std::map<Partition, std::vector<Permutation>> conjugacy_classes(int d) {
    std::map<Partition, std::vector<Permutation>> classes;
    for (auto& sigma : symmetric_group(d)) {
        classes[sigma.cycle_type()].push_back(sigma);
    }
    return classes;
}

}  // namespace hurwitz
