#include <gtest/gtest.h>

#include "ellgen/ellgen.hpp"

using namespace ellgen;

namespace {

ChernVector cv(const std::string& name) { return catalog::lookup(name).cv; }

std::vector<Poly> to_q(const std::vector<Poly>& ps) {
    std::vector<Poly> out;
    for (auto& p : ps) out.push_back(abcd_poly_to_q(p));
    return out;
}

TruncatedSeries<Rational> expand(const RationalFunction& f, int prec) {
    auto up = [&](const UPoly& u) { return TruncatedSeries<Rational>::generate(prec, [&](int k) { return u.coeff(k); }); };
    return up(f.num()) * up(f.den()).inverse();
}

}  // namespace

TEST(LevelN, Level3IdealInQCoordinates) {
    const auto& L = level_data(3);
    const HomogeneousIdeal computed(to_q({L.R_minus, L.R_plus}), q_ids());
    const HomogeneousIdeal printed({parse_poly("q2 + 3/4*q1^2"), parse_poly("q4 + 1/2*q1*q3")}, q_ids());
    for (auto& g : printed.generators()) EXPECT_TRUE(computed.contains(g)) << g.str();
    for (auto& g : computed.generators()) EXPECT_TRUE(printed.contains(g)) << g.str();
    EXPECT_TRUE(computed.same_pieces(printed, {1, 2, 3, 4, 5, 6, 7, 8}));
}

TEST(LevelN, Level3EliminantInQCoordinates) {
    const auto& L = level_data(3);
    const auto g = to_q({L.R_minus, L.R_plus});
    const Poly res = resultant_in(g[0], g[1], "q1");
    ASSERT_FALSE(res.is_zero());
    EXPECT_TRUE(proportionality(res, parse_poly("q3^2*q2 + 3*q4^2")).has_value()) << res.str();
}

TEST(LevelN, Level3EliminantInABCD) {
    const Poly res = eliminate(level_data(3));
    EXPECT_TRUE(proportionality(res, parse_poly("-B*C^2/18 + D^2/9")).has_value()) << res.str();
}

TEST(LevelN, PoincareFootnoteIdentity) {
    const UPoly t = UPoly::x();
    auto om = [&](int d) { return one_minus_t_pow(d); };
    const RationalFunction P = poincare_series(level_presentation(3));
    EXPECT_EQ(P, RationalFunction(om(2) * om(4), om(1) * om(2) * om(3) * om(4)));
    const RationalFunction rhs =
        RationalFunction(om(8), om(2) * om(3) * om(4)) + RationalFunction(t * om(3) * om(4), om(2) * om(3) * om(4));
    EXPECT_EQ(P, rhs);
}

TEST(LevelN, DegreeH0) {
    for (int N = 2; N <= 6; ++N) {
        EXPECT_EQ(degree_h0(level_presentation(N)), Rational(N * N - 1)) << N;
        EXPECT_EQ(degree_h0(eliminant_presentation(N)), Rational(N * N - 1)) << N;
    }
}

TEST(LevelN, PresentationDimensionsMatchComputedIdeal) {
    // the weight pieces of the computed ideal have the size a regular sequence predicts
    for (int N = 2; N <= 4; ++N) {
        const auto I = level_data(N).ideal();
        const RationalFunction P = poincare_series(level_presentation(N));
        const auto S = expand(P, 10);
        for (int w = 1; w < 10; ++w)
            EXPECT_EQ(Rational(static_cast<long>(monomials_of_weight(abcd_ids(), w).size() - I.dimension(w))), S.coeff(w)) << N << " " << w;
    }
}

TEST(LevelN, KernelOfLevelGenus) {
    for (int N = 2; N <= 4; ++N) {
        EXPECT_TRUE(kernel_membership("phi_tilde_N", cv("CP" + std::to_string(N - 1)), N).in_kernel) << N;
        EXPECT_TRUE(kernel_membership("phi_tilde_N", cv("TwCP(" + std::to_string(N + 1) + ",1)"), N).in_kernel) << N;
        // control
        EXPECT_FALSE(kernel_membership("phi_tilde_N", cv("CP" + std::to_string(N)), N).in_kernel) << N;
    }
}

TEST(LevelN, KernelOfATilde) {
    for (int N = 2; N <= 5; ++N) {
        const auto X = cv("CP" + std::to_string(N - 1));
        EXPECT_TRUE(kernel_membership("a_tilde_N", X, N).in_kernel) << N;
        const Poly v = a_tilde(12).evaluate(X);
        const auto alpha = proportionality(v, t_poly(N));
        ASSERT_TRUE(alpha.has_value()) << N << " " << v.str();
        EXPECT_FALSE(alpha->is_zero());
    }
    EXPECT_THROW(kernel_membership("bogus", cv("CP1"), 2), UnknownName);
}

TEST(LevelN, CuspsLieOnTheCurve) {
    for (int N = 2; N <= 5; ++N) {
        const auto& L = level_data(N);
        const auto c = cusp_points(N);
        for (auto& p : c.type_i) {
            EXPECT_TRUE(eval_abcd(L.R_minus, p).is_zero()) << N;
            EXPECT_TRUE(eval_abcd(L.R_plus, p).is_zero()) << N;
        }
        EXPECT_TRUE(is_zero(eval_abcd(L.R_minus, c.type_ii))) << N;
        EXPECT_TRUE(is_zero(eval_abcd(L.R_plus, c.type_ii))) << N;
    }
}

TEST(LevelN, ZolotarevRelationHoldsOnTheCurve) {
    for (int N = 2; N <= 4; ++N) {
        const auto& L = level_data(N);
        const auto I = L.ideal();
        for (auto& c : zolotarev_relation_defect(L)) EXPECT_TRUE(c.is_zero() || I.contains(c)) << N;
        EXPECT_TRUE(L.extra_all_in_ideal()) << N;
    }
}

TEST(LevelN, Level2ModularForms) {
    auto [delta, eps] = level2_modular_forms(4);
    EXPECT_EQ(delta.coeff(0), Rational(1, 4));
    EXPECT_EQ(delta.coeff(1), Rational(6));
    EXPECT_EQ(delta.coeff(2), Rational(6));
    EXPECT_EQ(delta.coeff(3), Rational(24));
    EXPECT_EQ(eps.coeff(0), Rational(1, 16));
    EXPECT_EQ(eps.coeff(1), Rational(-1));
    EXPECT_THROW(level2_modular_forms(-1), BadParams);
}

TEST(LevelN, RejectsBadLevels) {
    EXPECT_THROW(level_data(1), BadParams);
    EXPECT_THROW(compute_level_data(3, 5), InsufficientOrder);
    EXPECT_THROW(t_poly(1), BadParams);
}
