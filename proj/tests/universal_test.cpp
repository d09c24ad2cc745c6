#include <gtest/gtest.h>

#include "ellgen/ellgen.hpp"

using namespace ellgen;

namespace {

ChernVector cv(const std::string& name) { return catalog::lookup(name).cv; }

bool has_var(const Poly& p, const std::string& v) {
    const int id = var_id(v);
    for (auto& [m, c] : p.terms())
        for (auto& [i, e] : m)
            if (i == id && e > 0) return true;
    return false;
}

}  // namespace

TEST(UniversalGenus, CharacteristicSeriesCoefficients) {
    const auto& phi = phi_ell(5);
    EXPECT_EQ(phi.a(1), parse_poly("1/2*A"));
    EXPECT_EQ(phi.a(2), parse_poly("1/(2^4*3)*(6*A^2-B)"));
    EXPECT_EQ(phi.a(3), parse_poly("1/(2^5*3)*(2*A^3-A*B+16*C)"));
    EXPECT_EQ(phi.a(4), parse_poly("1/(2^9*3^2*5)*(60*A^4-60*A^2*B+1920*A*C+7*B^2-1152*D)"));
    EXPECT_EQ(phi.a(5), parse_poly("1/(2^10*3^2*5)*(12*A^5-20*A^3*B+960*A^2*C+7*A*B^2-1152*A*D+32*C*B)"));
}

TEST(UniversalGenus, MultiplicativeSequence) {
    const auto& phi = phi_ell(5);
    EXPECT_EQ(chern_poly_to_poly(phi.K(1)), parse_poly("1/2*A*c1"));
    EXPECT_EQ(chern_poly_to_poly(phi.K(2)), parse_poly("1/(2^4*3)*(2*B*c2+(6*A^2-B)*c1^2)"));
    EXPECT_EQ(chern_poly_to_poly(phi.K(3)), parse_poly("1/(2^5*3)*(48*C*c3+(2*A*B-48*C)*c2*c1+(2*A^3-A*B+16*C)*c1^3)"));
    EXPECT_EQ(chern_poly_to_poly(phi.K(4)),
              parse_poly("1/(2^9*3^2*5)*((-8*B^2+4608*D)*c4+(5760*A*C+8*B^2-4608*D)*c3*c1+(24*B^2-2304*D)*c2^2"
                         "+(120*A^2*B-5760*A*C-28*B^2+4608*D)*c1^2*c2+(60*A^4-60*A^2*B+1920*A*C+7*B^2-1152*D)*c1^4)"));
    EXPECT_EQ(chern_poly_to_poly(phi.K(5)),
              parse_poly("1/(2^10*3^2*5)*(960*B*C*c5+(-8*A*B^2+4608*A*D-960*B*C)*c4*c1+(8*A*B^2+2880*A^2*C-4608*A*D+480*B*C)*c3*c1^2"
                         "+(24*A*B^2-2304*A*D)*c2^2*c1+(40*A^3*B-2880*A^2*C-28*A*B^2+4608*A*D-160*B*C)*c2*c1^3"
                         "+(12*A^5-20*A^3*B+960*A^2*C+7*A*B^2-1152*A*D+32*B*C)*c1^5)"));
}

TEST(UniversalGenus, SatisfiesTheDifferentialEquation) {
    const int n = 8;
    const auto h = solve_h(q_symbols(), n);
    const auto res = ode_residual(q_symbols(), h);
    for (int e = res.valuation(); e < res.prec(); ++e) EXPECT_TRUE(res.coeff(e).is_zero()) << e;
    const auto Qq = q_of_h(h, n);
    for (int k = 0; k <= n; ++k) EXPECT_EQ(q_poly_to_abcd(Qq.coeff(k)), phi_ell(n).Q().coeff(k)) << k;
}

TEST(UniversalGenus, BasisValues) {
    const auto& phi = phi_ell(8);
    EXPECT_EQ(phi.evaluate(cv("W1")), vars::A());
    EXPECT_EQ(phi.evaluate(cv("W2")), vars::B());
    EXPECT_EQ(phi.evaluate(cv("W3")), vars::C());
    EXPECT_EQ(phi.evaluate(cv("W4")), vars::D());
    for (const char* w : {"W5", "W6", "W7", "W8"}) EXPECT_TRUE(phi.evaluate(cv(w)).is_zero()) << w;
}

TEST(UniversalGenus, ProjectivePlaneFromK2) {
    // c1^2 = 9, c2 = 3 inserted in K2
    EXPECT_EQ(phi_ell(4).evaluate(cp_model(2)), parse_poly("9/8*A^2 - B/16"));
}

TEST(UniversalGenus, ValuesAreHomogeneous) {
    const auto& phi = phi_ell(8);
    for (const char* name : {"CP1", "CP2", "CP5", "W2", "W5", "W6", "TwCP(4,2)", "TwCP(3,3)"}) {
        const auto x = cv(name);
        const Poly v = phi.evaluate(x);
        if (!v.is_zero()) {
            EXPECT_EQ(v.weight_or_throw(), x.dim()) << name;
        }
    }
}

TEST(UniversalGenus, SUValuesDoNotInvolveA) {
    const auto& phi = phi_ell(8);
    for (const char* name : {"W2", "W3", "W4", "W5", "W6", "TwCP(2,2)", "TwCP(3,3)", "TwCP(4,4)"}) {
        const auto x = cv(name);
        ASSERT_TRUE(x.is_su()) << name;
        EXPECT_FALSE(has_var(phi.evaluate(x), "A")) << name;
    }
    const auto prod = product_chern_vector(cv("W2"), cv("W3"));
    EXPECT_EQ(phi.evaluate(prod), vars::B() * vars::C());
}

TEST(UniversalGenus, ClassicalSpecializations) {
    const int n = 8;
    const auto& phi = phi_ell(n);
    EXPECT_EQ(specialize(phi, points::signature()).Q(), classical_genus("signature", n).Q());
    EXPECT_EQ(specialize(phi, points::a_hat()).Q(), classical_genus("a_hat", n).Q());
    EXPECT_EQ(specialize(phi, points::todd()).Q(), classical_genus("todd", n).Q());
    EXPECT_EQ(specialize(phi, points::chi_KkN(Rational(1), Rational(3))).Q(), classical_genus("chi_KkN", n, {Rational(1), Rational(3)}).Q());
    EXPECT_EQ(specialize(phi_ell(6), points::chi_y()).Q(), chi_y_genus(6).Q());
}

TEST(UniversalGenus, EllipticGenusAtPointMatchesSpecialization) {
    const auto p = points::signature();
    EXPECT_EQ(elliptic_genus_at(p, 8).Q(), specialize(phi_ell(8), p).Q());
}

TEST(Weierstrass, DiscriminantIdentity) {
    const Poly g2 = g2_poly(), g3 = g3_poly();
    EXPECT_TRUE((g2 * g2 * g2 - Poly(27) * g3 * g3 - discriminant_poly()).is_zero());
}

TEST(Characterization, TestVectors) {
    auto [v3, v4] = test_vectors_Q3_Q4();
    EXPECT_EQ(v3, parse_poly("3/4*q3"));
    EXPECT_EQ(v4, parse_poly("9/16*q1*q3 + 9/8*q4"));
}

TEST(Coordinates, RoundTripOnPoints) {
    const ABCDPoint<Rational> p{Rational(3), Rational(-2, 7), Rational(5), Rational(1, 9)};
    const auto back = q_to_abcd(abcd_to_q(p));
    EXPECT_EQ(back.A, p.A);
    EXPECT_EQ(back.B, p.B);
    EXPECT_EQ(back.C, p.C);
    EXPECT_EQ(back.D, p.D);
}
