#include <gtest/gtest.h>

#include "hurwitz/genfun.hpp"
#include "hurwitz/serialize.hpp"
#include "hurwitz/verify.hpp"

using hurwitz::BigInt;
using hurwitz::BigRational;
using hurwitz::GenFunSeries;
using hurwitz::MarkedProfile;
using hurwitz::Monomial;
using hurwitz::Partition;
using hurwitz::PPoly;
using hurwitz::ZLaurent;

namespace {

BigRational frac(long n, long d) { return BigRational(BigInt(n), BigInt(d)); }

ZLaurent zc(long n, long d, int e) { return ZLaurent::monomial(frac(n, d), e); }

Monomial p(std::initializer_list<int> parts) { return Monomial{Partition(parts), std::nullopt}; }

}  // namespace

TEST(InitialValues, K0Examples) {
    EXPECT_EQ(hurwitz::initial_k0(1), PPoly::monomial(Partition({1}), ZLaurent::z_power(-2)));
    EXPECT_EQ(hurwitz::initial_k0(2), PPoly::monomial(Partition({1, 1}), zc(1, 2, -4)));
    EXPECT_EQ(hurwitz::initial_k0(3), PPoly::monomial(Partition({1, 1, 1}), zc(1, 6, -6)));
}

TEST(InitialValues, K1Examples) {
    EXPECT_EQ(hurwitz::initial_k1(1), PPoly::bimonomial(Partition({1}), Partition({1}), ZLaurent::z_power(-2)));
    EXPECT_EQ(hurwitz::initial_k1(2), PPoly::bimonomial(Partition({1, 1}), Partition({1, 1}), zc(1, 2, -4)) +
                                          PPoly::bimonomial(Partition({2}), Partition({2}), zc(1, 2, -2)));
    PPoly k3 = hurwitz::initial_k1(3);
    EXPECT_EQ(k3.size(), 3u);
    EXPECT_EQ(k3.coefficient(Monomial{Partition({1, 1, 1}), Partition({1, 1, 1})}), zc(1, 6, -6));
    EXPECT_EQ(k3.coefficient(Monomial{Partition({2, 1}), Partition({2, 1})}), zc(1, 2, -4));
    EXPECT_EQ(k3.coefficient(Monomial{Partition({3}), Partition({3})}), zc(1, 3, -2));
}

TEST(InitialValues, ClosedFormsMatchSchurExpansions) {
    for (int d = 1; d <= 6; ++d) {
        EXPECT_EQ(hurwitz::initial_k0(d), hurwitz::initial_k0_schur_sum(d)) << d;
        EXPECT_EQ(hurwitz::initial_k0(d), hurwitz::initial_value(0, d, false)) << d;
    }
    for (int d = 1; d <= 5; ++d) {
        EXPECT_EQ(hurwitz::initial_k1(d), hurwitz::initial_k1_schur_sum(d)) << d;
        EXPECT_EQ(hurwitz::initial_k1(d), hurwitz::initial_value(0, d, true)) << d;
    }
}

TEST(PhiCoefficient, Examples) {
    Partition t({2, 1});
    EXPECT_EQ(hurwitz::phi_coefficient(0, 3, {{t, 2}}, {}, Partition({3})), zc(1, 2, -2));
    EXPECT_EQ(hurwitz::phi_coefficient(0, 3, {{t, 2}}, {}, Partition({1, 1, 1})), zc(1, 4, -4));
    EXPECT_EQ(hurwitz::phi_coefficient(0, 3, {{t, 0}}, {}, Partition({1, 1, 1})), zc(1, 6, -6));
    // Odd total colength: no cover exists.
    EXPECT_TRUE(hurwitz::phi_coefficient(0, 3, {{t, 1}}, {}, Partition({3})).is_zero());
    // General k goes through the extra list.
    EXPECT_EQ(hurwitz::phi_coefficient(0, 2, {}, {Partition({2}), Partition({2})}, Partition({1, 1})),
              zc(1, 2, -2));
}

TEST(Evolve, ThreeSheetsOneTranspositionMark) {
    GenFunSeries s = hurwitz::generating_function(0, 3, {{"u", Partition({2, 1})}}, {3}, false);
    ASSERT_EQ(s.coefficients.size(), 4u);
    EXPECT_EQ(s.coefficients.at({0}).coefficient(p({1, 1, 1})), zc(1, 6, -6));
    EXPECT_EQ(s.coefficients.at({1}).coefficient(p({2, 1})), zc(1, 2, -4));
    EXPECT_EQ(s.coefficients.at({2}).coefficient(p({3})), zc(1, 2, -2));
    EXPECT_EQ(s.coefficients.at({2}).coefficient(p({1, 1, 1})), zc(1, 4, -4));
    EXPECT_EQ(s.coefficients.at({3}).coefficient(p({2, 1})).coefficient(-2), frac(3, 4));
}

TEST(Evolve, TwoSheetsSeries) {
    GenFunSeries s = hurwitz::evolve(hurwitz::initial_k0(2), {{"u", Partition({2})}}, {3});
    EXPECT_EQ(s.coefficients.at({0}), PPoly::monomial(Partition({1, 1}), zc(1, 2, -4)));
    EXPECT_EQ(s.coefficients.at({1}), PPoly::monomial(Partition({2}), zc(1, 2, -2)));
    EXPECT_EQ(s.coefficients.at({2}), PPoly::monomial(Partition({1, 1}), zc(1, 4, -2)));
    EXPECT_EQ(s.coefficients.at({3}), PPoly::monomial(Partition({2}), zc(1, 12, 0)));
    EXPECT_EQ(hurwitz::render_series(s), "1/2*z^-4*p_(1,1) + 1/2*u*z^-2*p_(2) + 1/4*u^2*z^-2*p_(1,1) + 1/12*u^3*p_(2)");
}

TEST(Evolve, NoMarksReturnsInitial) {
    for (int d = 1; d <= 4; ++d) {
        GenFunSeries s = hurwitz::evolve(hurwitz::initial_k1(d), {}, {});
        ASSERT_EQ(s.coefficients.size(), 1u);
        EXPECT_EQ(s.coefficients.at({}), hurwitz::initial_k1(d));
        EXPECT_TRUE(hurwitz::pde_residual(s, 0).empty());
    }
}

TEST(Evolve, Errors) {
    EXPECT_THROW(hurwitz::evolve(hurwitz::initial_k0(3), {{"u", Partition({2})}}, {2}), hurwitz::DegreeMismatch);
    EXPECT_THROW(hurwitz::evolve(hurwitz::initial_k0(3), {{"u", Partition({3})}}, {}), std::invalid_argument);
    PPoly mixed = hurwitz::initial_k0(3) + hurwitz::initial_k0(2);
    EXPECT_THROW(hurwitz::evolve(mixed, {}, {}), hurwitz::DegreeMismatch);
}

TEST(PdeResidual, VanishesOnExamples) {
    GenFunSeries three = hurwitz::direct_series(0, 3, {{"u", Partition({2, 1})}}, {3}, false);
    GenFunSeries two = hurwitz::direct_series(0, 2, {{"u", Partition({2})}}, {3}, false);
    for (const auto* s : {&three, &two}) {
        auto residual = hurwitz::pde_residual(*s, 0);
        EXPECT_EQ(residual.size(), 3u);
        for (const auto& [l, r] : residual) {
            EXPECT_TRUE(r.is_zero()) << l[0] << ": " << r;
        }
    }
    EXPECT_THROW(hurwitz::pde_residual(three, 1), std::out_of_range);
}

TEST(PdeResidual, DetectsWrongSeries) {
    GenFunSeries s = hurwitz::direct_series(0, 2, {{"u", Partition({2})}}, {2}, false);
    s.coefficients.at({1}) += PPoly::monomial(Partition({2}));
    bool nonzero = false;
    for (const auto& [l, r] : hurwitz::pde_residual(s, 0)) {
        nonzero = nonzero || !r.is_zero();
    }
    EXPECT_TRUE(nonzero);
}

TEST(CrossMethod, EvolutionEqualsDirectSum) {
    for (int d = 1; d <= 4; ++d) {
        auto basis = hurwitz::partitions_of(d);
        for (bool dbl : {false, true}) {
            for (const auto& delta : basis) {
                std::vector<MarkedProfile> marks{{"u", delta}};
                for (int order = 0; order <= 4; ++order) {
                    EXPECT_EQ(hurwitz::generating_function(0, d, marks, {order}, dbl),
                              hurwitz::direct_series(0, d, marks, {order}, dbl))
                        << "d=" << d << " " << delta << " order " << order;
                }
            }
            for (const auto& a : basis) {
                for (const auto& b : basis) {
                    std::vector<MarkedProfile> marks{{"u1", a}, {"u2", b}};
                    EXPECT_EQ(hurwitz::generating_function(0, d, marks, {2, 2}, dbl),
                              hurwitz::direct_series(0, d, marks, {2, 2}, dbl))
                        << "d=" << d << " " << a << " " << b;
                }
            }
        }
    }
}

TEST(CrossMethod, HigherGenusEvolution) {
    for (int d = 1; d <= 3; ++d) {
        for (const auto& delta : hurwitz::partitions_of(d)) {
            std::vector<MarkedProfile> marks{{"u", delta}};
            EXPECT_EQ(hurwitz::generating_function(1, d, marks, {3}, false),
                      hurwitz::direct_series(1, d, marks, {3}, false))
                << d << " " << delta;
        }
    }
    // Unbranched double covers of the torus; p_2 alone has odd colength.
    EXPECT_EQ(hurwitz::initial_value(1, 2, false), PPoly::monomial(Partition({1, 1}), ZLaurent(2)));
}

TEST(Grading, CoefficientExponentsFollowHurwitzFormula) {
    for (int d = 1; d <= 4; ++d) {
        for (const auto& delta : hurwitz::partitions_of(d)) {
            GenFunSeries s = hurwitz::generating_function(0, d, {{"u", delta}}, {4}, true);
            for (const auto& [l, poly] : s.coefficients) {
                for (const auto& [m, c] : poly.terms()) {
                    ASSERT_TRUE(c.is_monomial());
                    int colength = l[0] * delta.colength() + m.p.colength() + m.q->colength();
                    EXPECT_EQ(c.terms().begin()->first, colength - 2 * d);
                }
            }
        }
    }
}

TEST(Series, JsonRoundTrip) {
    GenFunSeries s = hurwitz::generating_function(0, 3, {{"u1", Partition({2, 1})}, {"u2", Partition({3})}},
                                                  {2, 1}, true);
    std::string text = hurwitz::to_json(s).dump();
    GenFunSeries back = hurwitz::series_from_json(hurwitz::Json::parse(text));
    EXPECT_EQ(back, s);
    EXPECT_EQ(hurwitz::to_json(back).dump(), text);
    EXPECT_THROW(hurwitz::series_from_json(hurwitz::Json::parse("{\"genus\": 0}")), hurwitz::ParseError);
}

TEST(Series, ExponentBox) {
    auto box = hurwitz::exponent_box({1, 2});
    ASSERT_EQ(box.size(), 6u);
    EXPECT_EQ(box.front(), (std::vector<int>{0, 0}));
    EXPECT_EQ(box.back(), (std::vector<int>{1, 2}));
    EXPECT_EQ(hurwitz::exponent_box({}).size(), 1u);
}

TEST(Verify, SeriesIdentitiesThroughOrderFour) {
    for (int d = 1; d <= 4; ++d) {
        auto entry = hurwitz::detail::series_identities(d, 5);
        EXPECT_EQ(entry.status, hurwitz::CheckStatus::Pass) << d << ": " << entry.detail;
    }
}
