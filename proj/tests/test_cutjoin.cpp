#include <gtest/gtest.h>

#include <set>

#include "hurwitz/cutjoin.hpp"
#include "oracles.hpp"

using hurwitz::BigInt;
using hurwitz::BigRational;
using hurwitz::CutJoinOp;
using hurwitz::DifferentialTerm;
using hurwitz::OperatorMatrix;
using hurwitz::Partition;
using hurwitz::PPoly;
using hurwitz::ZLaurent;

namespace {

BigRational frac(long n, long d) { return BigRational(BigInt(n), BigInt(d)); }

using TermKey = std::tuple<BigRational, int, Partition, Partition>;

std::set<TermKey> term_set(const std::vector<DifferentialTerm>& terms) {
    std::set<TermKey> out;
    for (const auto& t : terms) {
        out.emplace(t.coefficient, t.z_exponent, t.multiply, t.differentiate);
    }
    return out;
}

}  // namespace

TEST(BuildW, DegreeTwoTransposition) {
    auto terms = hurwitz::differential_terms(hurwitz::build_w(2, Partition({2})));
    std::set<TermKey> expected{
        {frac(1, 2), 2, Partition({2}), Partition({1, 1})},
        {BigRational(1), 0, Partition({1, 1}), Partition({2})},
    };
    EXPECT_EQ(term_set(terms), expected);
    EXPECT_EQ(hurwitz::render_differential(terms), "1/2 z^2 p_2 d^2/dp_1dp_1 + p_1^2 d/dp_2");
}

TEST(BuildW, DegreeThreeTransposition) {
    auto terms = hurwitz::differential_terms(hurwitz::build_w(3, Partition({2, 1})));
    std::set<TermKey> expected{
        {BigRational(2), 2, Partition({3}), Partition({2, 1})},
        {frac(1, 2), 2, Partition({2, 1}), Partition({1, 1, 1})},
        {BigRational(1), 0, Partition({1, 1, 1}), Partition({2, 1})},
        {BigRational(3), 0, Partition({2, 1}), Partition({3})},
    };
    EXPECT_EQ(term_set(terms), expected);
}

TEST(BuildW, IdentityClassIsIdentity) {
    for (int d = 1; d <= 5; ++d) {
        EXPECT_EQ(hurwitz::build_w(d, Partition::ones(d)).matrix(), OperatorMatrix::identity(d)) << d;
        EXPECT_EQ(hurwitz::build_w_hat(d, Partition::ones(d)).matrix(), OperatorMatrix::identity(d)) << d;
    }
}

TEST(BuildW, RejectsWrongDegree) {
    EXPECT_THROW(hurwitz::build_w(3, Partition({2})), hurwitz::DegreeMismatch);
}

TEST(ApplyW, Examples) {
    CutJoinOp w2 = hurwitz::build_w(2, Partition({2}));
    EXPECT_EQ(hurwitz::apply_w(w2, PPoly::monomial(Partition({1, 1}))),
              PPoly::monomial(Partition({2}), ZLaurent::z_power(2)));
    EXPECT_EQ(hurwitz::apply_w(w2, PPoly::monomial(Partition({2}))), PPoly::monomial(Partition({1, 1})));
    CutJoinOp id = hurwitz::build_w(3, Partition::ones(3));
    PPoly p = PPoly::monomial(Partition({2, 1}), ZLaurent::monomial(frac(2, 3), -1));
    EXPECT_EQ(hurwitz::apply_w(id, p), p);
    EXPECT_THROW(hurwitz::apply_w(w2, PPoly::monomial(Partition({3}))), hurwitz::DegreeMismatch);
}

TEST(ApplyW, SecondAlphabetPassesThrough) {
    CutJoinOp w2 = hurwitz::build_w(2, Partition({2}));
    PPoly p = PPoly::bimonomial(Partition({3}), Partition({2}));
    EXPECT_EQ(hurwitz::apply_w(w2, p), PPoly::bimonomial(Partition({3}), Partition({1, 1})));
}

TEST(Compose, Examples) {
    CutJoinOp w2 = hurwitz::build_w(2, Partition({2}));
    EXPECT_EQ(hurwitz::compose(w2, w2), OperatorMatrix::identity(2).scaled(ZLaurent::z_power(2)));

    for (const auto& delta : hurwitz::partitions_of(4)) {
        CutJoinOp hat = hurwitz::build_w_hat(4, delta);
        EXPECT_EQ(hurwitz::compose(hat, hurwitz::build_w_hat(4, Partition::ones(4))), hat.matrix());
    }

    CutJoinOp a = hurwitz::build_w_hat(3, Partition({2, 1}));
    CutJoinOp b = hurwitz::build_w_hat(3, Partition({3}));
    EXPECT_EQ(hurwitz::compose(a, b), hurwitz::compose(b, a));
    EXPECT_THROW(hurwitz::compose(w2, hurwitz::build_w(3, Partition({3}))), hurwitz::DegreeMismatch);
}

TEST(Compose, AppliesRightOperandFirst) {
    CutJoinOp a = hurwitz::build_w(3, Partition({2, 1}));
    CutJoinOp b = hurwitz::build_w(3, Partition({3}));
    OperatorMatrix ab = hurwitz::compose(a, b);
    for (const auto& gamma : hurwitz::partitions_of(3)) {
        PPoly p = PPoly::monomial(gamma);
        EXPECT_EQ(ab.apply(p), a.apply(b.apply(p)));
    }
}

TEST(StructureConstants, Examples) {
    auto c2 = hurwitz::structure_constants(2);
    EXPECT_EQ(c2.at(Partition({2}), Partition({2}), Partition({1, 1})), BigRational(1));
    EXPECT_EQ(c2.at(Partition({2}), Partition({2}), Partition({2})), BigRational(0));

    auto c3 = hurwitz::structure_constants(3);
    Partition t({2, 1});
    EXPECT_EQ(c3.at(t, t, Partition({1, 1, 1})), BigRational(3));
    EXPECT_EQ(c3.at(t, t, Partition({3})), BigRational(3));
    EXPECT_EQ(c3.at(t, t, t), BigRational(0));

    for (int d = 1; d <= 5; ++d) {
        auto c = hurwitz::structure_constants(d);
        for (const auto& a : hurwitz::partitions_of(d)) {
            for (const auto& b : hurwitz::partitions_of(d)) {
                EXPECT_EQ(c.at(Partition::ones(d), a, b), BigRational(a == b ? 1 : 0));
            }
        }
    }
}

TEST(StructureConstants, SymmetricNonnegativeIntegers) {
    for (int d = 1; d <= 5; ++d) {
        auto c = hurwitz::structure_constants(d);
        for (const auto& [key, value] : c.table()) {
            const auto& [a, b, target] = key;
            EXPECT_TRUE(value.is_integer());
            EXPECT_GE(value.sign(), 0);
            EXPECT_EQ(value, c.at(b, a, target));
        }
    }
}

TEST(ClassSumOracle, MatchesStructureConstants) {
    for (int d = 1; d <= 6; ++d) {
        EXPECT_EQ(hurwitz::structure_constants(d), hurwitz::class_sum_oracle(d)) << d;
    }
    auto o3 = hurwitz::class_sum_oracle(3);
    EXPECT_EQ(o3.at(Partition({2, 1}), Partition({2, 1}), Partition({3})), BigRational(3));
    EXPECT_THROW(hurwitz::class_sum_oracle(8), hurwitz::LimitExceeded);
}

TEST(CompositionLaw, HoldsAtSeveralDegrees) {
    for (int d : {1, 2, 3, 5}) {
        auto v = hurwitz::verify_composition_law(d);
        EXPECT_TRUE(v.passed) << d << ": " << v.counterexample;
    }
}

TEST(Normalize, Examples) {
    CutJoinOp hat = hurwitz::build_w_hat(2, Partition({2}));
    EXPECT_TRUE(hat.normalized());
    EXPECT_EQ(hurwitz::render_differential(hurwitz::differential_terms(hat)),
              "1/2 z p_2 d^2/dp_1dp_1 + z^-1 p_1^2 d/dp_2");
    EXPECT_THROW(hurwitz::normalize(hat), std::invalid_argument);
    auto v = hurwitz::verify_normalized_algebra(4);
    EXPECT_TRUE(v.passed) << v.counterexample;
}

TEST(SchurZ, Examples) {
    EXPECT_EQ(hurwitz::schur_z(Partition({2})),
              PPoly::monomial(Partition({1, 1}), ZLaurent::monomial(frac(1, 2), -4)) +
                  PPoly::monomial(Partition({2}), ZLaurent::monomial(frac(1, 2), -3)));
    EXPECT_EQ(hurwitz::schur_z(Partition({1, 1})),
              PPoly::monomial(Partition({1, 1}), ZLaurent::monomial(frac(1, 2), -4)) +
                  PPoly::monomial(Partition({2}), ZLaurent::monomial(frac(-1, 2), -3)));
}

TEST(SchurZ, AtZOneMatchesJacobiTrudi) {
    for (int d = 1; d <= 4; ++d) {
        for (const auto& lambda : hurwitz::partitions_of(d)) {
            PPoly expected;
            for (const auto& [gamma, c] : oracle::jacobi_trudi(lambda)) {
                expected.add(hurwitz::Monomial{gamma, std::nullopt}, ZLaurent(c));
            }
            EXPECT_EQ(hurwitz::schur_z(lambda).at_z(BigRational(1)), expected) << lambda;
        }
    }
}

TEST(Eigen, Examples) {
    CutJoinOp hat = hurwitz::build_w_hat(2, Partition({2}));
    PPoly s2 = hurwitz::schur_z(Partition({2}));
    PPoly s11 = hurwitz::schur_z(Partition({1, 1}));
    EXPECT_EQ(hat.apply(s2), s2);
    EXPECT_EQ(hat.apply(s11), s11.scaled(ZLaurent(-1)));
    for (int d = 1; d <= 5; ++d) {
        auto v = hurwitz::eigen_check(d);
        EXPECT_TRUE(v.passed) << d << ": " << v.counterexample;
        EXPECT_TRUE(hurwitz::schur_basis_is_invertible(d)) << d;
    }
}

TEST(Grading, EvenNonnegativeSinglePower) {
    for (int d = 1; d <= 6; ++d) {
        for (const auto& delta : hurwitz::partitions_of(d)) {
            CutJoinOp op = hurwitz::build_w(d, delta);
            for (const auto& [key, value] : op.matrix().entries()) {
                ASSERT_TRUE(value.is_monomial());
                int e = value.terms().begin()->first;
                EXPECT_EQ(e, d + key.first.length() - delta.length() - key.second.length());
                EXPECT_GE(e, 0);
                EXPECT_EQ(e % 2, 0);
            }
        }
    }
}

TEST(ClassicalLimit, ZOneMatchesGroupAlgebraCount) {
    for (int d = 1; d <= 5; ++d) {
        for (const auto& delta : hurwitz::partitions_of(d)) {
            OperatorMatrix expected(d);
            for (const auto& [key, count] : oracle::classical_cut_join(d, delta)) {
                expected.add(key.first, key.second, ZLaurent(BigRational(count)));
            }
            EXPECT_EQ(hurwitz::build_w(d, delta).matrix().at_z(BigRational(1)), expected) << delta;
        }
    }
}

TEST(Render, NegativeAndUnitCoefficients) {
    std::vector<DifferentialTerm> terms{
        {BigRational(-1), 1, Partition({1}), Partition({1})},
        {frac(-3, 2), 0, Partition({2, 1}), Partition({3})},
    };
    EXPECT_EQ(hurwitz::render_differential(terms), "-z p_1 d/dp_1 - 3/2 p_1 p_2 d/dp_3");
    EXPECT_EQ(hurwitz::render_differential({}), "0");
}
