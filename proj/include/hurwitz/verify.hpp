#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "characters.hpp"
#include "cutjoin.hpp"
#include "genfun.hpp"
#include "hurwitz_numbers.hpp"
#include "partition.hpp"

namespace hurwitz {

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Skipped: return "SKIPPED";
    }
    return "?";
}

struct CheckEntry {
    std::string name;
    int degree = 0;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckEntry> entries;

    bool all_passed() const {
        for (const auto& e : entries) {
            if (e.status == CheckStatus::Fail) {
                return false;
            }
        }
        return true;
    }
};

/// All multisets of size k drawn from items, as nondecreasing index tuples.
inline std::vector<std::vector<Partition>> multisets(const std::vector<Partition>& items, int k) {
    std::vector<std::vector<Partition>> out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
        if (pos == idx.size()) {
            std::vector<Partition> pick;
            for (auto i : idx) {
                pick.push_back(items[i]);
            }
            out.push_back(std::move(pick));
            return;
        }
        for (std::size_t i = from; i < items.size(); ++i) {
            idx[pos] = i;
            rec(pos + 1, i);
        }
    };
    rec(0, 0);
    return out;
}

/// All ordered k-tuples drawn from items.
inline std::vector<std::vector<Partition>> tuples(const std::vector<Partition>& items, int k) {
    std::vector<std::vector<Partition>> out{{}};
    for (int i = 0; i < k; ++i) {
        std::vector<std::vector<Partition>> next;
        for (const auto& prefix : out) {
            for (const auto& item : items) {
                next.push_back(prefix);
                next.back().push_back(item);
            }
        }
        out = std::move(next);
    }
    return out;
}

namespace detail {

inline std::string describe(const CoverSpec& spec) {
    std::string out = "g=" + std::to_string(spec.genus) + " [";
    for (std::size_t i = 0; i < spec.profiles.size(); ++i) {
        out += (i ? ";" : "") + spec.profiles[i].to_string();
    }
    return out + "]";
}

inline CheckEntry combinatorial_identities(int d) {
    CheckEntry e{"class sizes / Burnside / centralizer", d, CheckStatus::Pass, {}};
    BigInt d_fact = factorial(d);
    BigInt classes = 0;
    BigInt squares = 0;
    for (const auto& p : partitions_of(d)) {
        classes += class_size(p);
        BigInt dim = dim_irrep(p);
        squares += dim * dim;
        BigInt parts_product = 1;
        for (int part : p.parts()) {
            parts_product *= part;
        }
        if (class_size(p) * aut_factor(p) * parts_product != d_fact) {
            return {e.name, d, CheckStatus::Fail, "centralizer identity fails at " + p.to_string()};
        }
    }
    if (classes != d_fact || squares != d_fact) {
        return {e.name, d, CheckStatus::Fail, "class or dimension sum differs from d!"};
    }
    return e;
}

inline CheckEntry column_orthogonality(int d) {
    CheckEntry e{"orthogonality (rows and columns)", d, CheckStatus::Pass, {}};
    if (!check_orthogonality(d)) {
        return {e.name, d, CheckStatus::Fail, "row orthogonality"};
    }
    auto table = CharTable::of_degree(d);
    BigInt d_fact = factorial(d);
    for (const auto& a : table->partitions()) {
        for (const auto& b : table->partitions()) {
            BigInt sum = 0;
            for (const auto& lambda : table->partitions()) {
                sum += table->value(lambda, a) * table->value(lambda, b);
            }
            BigInt expected = a == b ? BigInt(d_fact / table->class_size_of(a)) : BigInt(0);
            if (sum != expected) {
                return {e.name, d, CheckStatus::Fail, "columns " + a.to_string() + ", " + b.to_string()};
            }
        }
    }
    return e;
}

inline CheckEntry oracle_equivalence(int d, int genus, int k, std::uint64_t budget) {
    CheckEntry e{"character formula = enumeration (g=" + std::to_string(genus) + ", k=" + std::to_string(k) + ")",
                 d, CheckStatus::Pass, {}};
    auto specs = multisets(partitions_of(d), k);
    BigInt limit(std::to_string(budget));
    for (const auto& profiles : specs) {
        if (oracle_tuple_estimate(CoverSpec{genus, d, profiles}) > limit) {
            e.status = CheckStatus::Skipped;
            e.detail = "enumeration budget exceeded";
            return e;
        }
    }
    for (const auto& profiles : specs) {
        CoverSpec spec{genus, d, profiles};
        if (hurwitz_number(spec) != hurwitz_oracle(spec, budget)) {
            return {e.name, d, CheckStatus::Fail, describe(spec)};
        }
    }
    e.detail = std::to_string(specs.size()) + " profile sets";
    return e;
}

inline CheckEntry associativity(int d, int max_profiles) {
    CheckEntry e{"gluing associativity (g<=1, k<=" + std::to_string(max_profiles) + ")", d, CheckStatus::Pass, {}};
    auto basis = partitions_of(d);
    std::size_t count = 0;
    for (int genus = 0; genus <= 1; ++genus) {
        for (int k = 2; k <= max_profiles; ++k) {
            auto specs = d <= 4 ? tuples(basis, k) : multisets(basis, k);
            for (const auto& profiles : specs) {
                CoverSpec spec{genus, d, profiles};
                for (int split = 1; split < k; ++split) {
                    ++count;
                    if (!associativity_check(spec, split)) {
                        return {e.name, d, CheckStatus::Fail, describe(spec) + " split " + std::to_string(split)};
                    }
                }
            }
        }
    }
    e.detail = std::to_string(count) + " splits";
    return e;
}

inline CheckEntry from_verdict(std::string name, int d, const Verdict& v) {
    return {std::move(name), d, v.passed ? CheckStatus::Pass : CheckStatus::Fail, v.counterexample};
}

inline CheckEntry z_grading(int d) {
    CheckEntry e{"operator z-grading (single even power >= 0)", d, CheckStatus::Pass, {}};
    for (const auto& delta : partitions_of(d)) {
        CutJoinOp op = build_w(d, delta);
        for (const auto& [key, value] : op.matrix().entries()) {
            int expected = d + key.first.length() - delta.length() - key.second.length();
            if (!value.is_monomial() || value.terms().begin()->first != expected || expected < 0 || expected % 2) {
                return {e.name, d, CheckStatus::Fail,
                        "W" + delta.to_string() + " entry " + key.first.to_string() + "->" + key.second.to_string()};
            }
        }
    }
    return e;
}

inline CheckEntry structure_constant_oracle(int d) {
    CheckEntry e{"structure constants = class-sum multiplication", d, CheckStatus::Pass, {}};
    if (d > kDefaultClassSumCap) {
        return {e.name, d, CheckStatus::Skipped, "degree above class-sum cap"};
    }
    if (!(structure_constants(d) == class_sum_oracle(d))) {
        return {e.name, d, CheckStatus::Fail, "tables differ"};
    }
    return e;
}

inline CheckEntry initial_values(int d) {
    CheckEntry e{"initial values (hook and Cauchy expansions)", d, CheckStatus::Pass, {}};
    if (!(initial_k0(d) == initial_k0_schur_sum(d)) || !(initial_k0(d) == initial_value(0, d, false))) {
        return {e.name, d, CheckStatus::Fail, "single alphabet"};
    }
    if (!(initial_k1(d) == initial_k1_schur_sum(d)) || !(initial_k1(d) == initial_value(0, d, true))) {
        return {e.name, d, CheckStatus::Fail, "double alphabet"};
    }
    return e;
}

inline std::vector<std::vector<MarkedProfile>> sample_marks(int d) {
    Partition simple = d >= 2 ? Partition([d] {
        std::vector<int> parts(static_cast<std::size_t>(d - 1), 1);
        parts[0] = 2;
        return parts;
    }()) : Partition::ones(d);
    Partition cycle{d};
    return {{{"u", simple}}, {{"u1", simple}, {"u2", cycle}}};
}

inline CheckEntry series_identities(int d, int order) {
    CheckEntry e{"generating function PDE and evolution = direct sum", d, CheckStatus::Pass, {}};
    for (bool dbl : {false, true}) {
        for (const auto& marks : sample_marks(d)) {
            std::vector<int> orders(marks.size(), order);
            GenFunSeries evolved = generating_function(0, d, marks, orders, dbl);
            GenFunSeries direct = direct_series(0, d, marks, orders, dbl);
            std::string where = std::to_string(marks.size()) + " mark(s), k=" + std::to_string(dbl ? 1 : 0);
            if (!(evolved == direct)) {
                return {e.name, d, CheckStatus::Fail, "evolved != direct, " + where};
            }
            for (std::size_t i = 0; i < marks.size(); ++i) {
                for (const auto& [l, r] : pde_residual(direct, i)) {
                    if (!r.is_zero()) {
                        return {e.name, d, CheckStatus::Fail, "nonzero residual, " + where};
                    }
                }
            }
        }
    }
    return e;
}

}  // namespace detail

/// Runs every identity check for degrees 1..d_max in a fixed order.
/// Oracle checks whose enumeration would exceed budget are SKIPPED.
inline VerifyReport verify_all(int d_max, std::uint64_t budget = default_enumeration_budget()) {
    if (d_max < 1) {
        throw std::invalid_argument("verify needs a degree >= 1");
    }
    VerifyReport report;
    for (int d = 1; d <= d_max; ++d) {
        report.entries.push_back(detail::combinatorial_identities(d));
        report.entries.push_back(detail::column_orthogonality(d));
        for (int genus = 0; genus <= 1; ++genus) {
            for (int k = 0; k <= 3; ++k) {
                report.entries.push_back(detail::oracle_equivalence(d, genus, k, budget));
            }
        }
        report.entries.push_back(detail::associativity(d, 4));
        report.entries.push_back(detail::z_grading(d));
        report.entries.push_back(detail::from_verdict("composition law W W = Σ z C W", d, verify_composition_law(d)));
        report.entries.push_back(detail::from_verdict("normalized algebra (commutative, Σ C Ŵ)", d,
                                                      verify_normalized_algebra(d)));
        report.entries.push_back(detail::structure_constant_oracle(d));
        report.entries.push_back(detail::from_verdict("Schur eigenfunctions", d, eigen_check(d)));
        report.entries.push_back({"Schur basis spans degree slice", d,
                                  schur_basis_is_invertible(d) ? CheckStatus::Pass : CheckStatus::Fail, {}});
        report.entries.push_back(detail::initial_values(d));
        report.entries.push_back(detail::series_identities(d, 4));
    }
    return report;
}

}  // namespace hurwitz
