#include <gtest/gtest.h>

#include "ellgen/ellgen.hpp"

using namespace ellgen;

namespace {

ChernVector cv(const std::string& name) { return catalog::lookup(name).cv; }

LaurentPoly Ly(std::initializer_list<std::pair<int, long>> terms) {
    LaurentPoly r;
    for (auto [e, c] : terms) r += LaurentPoly::monomial(Rational(c), e);
    return r;
}

/// Phi(tau, -z) from the product in u, with u = -y.
QSeries<RationalFunction> phi_minus_z(int qorder) {
    const UXSeries p = phi_product(qorder);
    std::vector<RationalFunction> v;
    for (int n = 0; n <= qorder; ++n) {
        LaurentPoly s;
        const LaurentPoly pn = p.coeff(n);
        for (auto& [k, c] : pn.terms()) s += LaurentPoly::monomial(k % 2 == 0 ? c : -c, k);
        v.push_back(s.to_rational_function());
    }
    return QSeries<RationalFunction>(v, 0, qorder + 1);
}

LaurentQSeries mul(const LaurentQSeries& a, const LaurentQSeries& b) {
    LaurentQSeries r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace

TEST(Jacobi, K3PrintedCoefficients) {
    const auto s = chi_y_loop(cv("W2"), 2);
    const LaurentPoly sq = Ly({{0, 1}, {1, 2}, {2, 1}});
    EXPECT_EQ(s[0], Ly({{2, 2}, {1, -20}, {0, 2}}));
    EXPECT_EQ(s[1], sq * Ly({{-1, -20}, {0, -88}, {1, -20}}));
    EXPECT_EQ(s[2], sq * Ly({{-2, 2}, {-1, -220}, {0, -588}, {1, -220}, {2, 2}}));
}

TEST(Jacobi, K3IsWeierstrassTimesPhiSquared) {
    const int qo = 5;
    const auto phi = phi_minus_z(qo);
    const auto oracle = (weierstrass_p(qo).scaled(RationalFunction(Rational(24))) * phi * phi).truncated(qo + 1);
    EXPECT_EQ(from_laurent(chi_y_loop(cv("W2"), qo)), oracle);
}

TEST(Jacobi, IntegralCoefficients) {
    for (const char* name : {"W2", "W4", "W5"}) {
        const auto r = integrality_check(chi_y_loop(cv(name), 5));
        EXPECT_TRUE(r.ok) << name << " q^" << r.q_power << " y^" << r.y_power << " " << r.value.str();
    }
    LaurentQSeries bad{Ly({{0, 1}}), LaurentPoly::monomial(Rational(1, 2), 3)};
    const auto r = integrality_check(bad);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.q_power, 1);
    EXPECT_EQ(r.y_power, 3);
}

TEST(Jacobi, MultiplicativeOnProducts) {
    const auto a = chi_y_loop(cv("W2"), 3);
    EXPECT_EQ(chi_y_loop(product_chern_vector(cv("W2"), cv("W2")), 3), mul(a, a));
}

TEST(Jacobi, RejectsNonSU) { EXPECT_THROW(chi_y_loop(cv("CP2"), 2), NotSU); }

TEST(Jacobi, PhiShift) {
    EXPECT_TRUE(verify_phi_shift(4));
    EXPECT_TRUE(verify_phi_shift(7));
}

TEST(Jacobi, WeierstrassPrimeSquared) {
    // wp'^2 = 4 wp^3 - g2 wp - g3 eliminates g3 after one derivative: 2 wp'' = 12 wp^2 - g2
    const int qo = 4;
    const auto p = weierstrass_p(qo);
    const auto pp = weierstrass_p_prime(qo).map<RationalFunction>([](const RationalFunction& c) { return euler_derivative(c); });
    const auto g2 = g2_series(qo).map<RationalFunction>([](const Rational& c) { return RationalFunction(c); });
    EXPECT_EQ(pp.scaled(RationalFunction(Rational(2))), (p * p).scaled(RationalFunction(Rational(12))) - g2);
}

TEST(Jacobi, LevelTwoExtraction) {
    const int qo = 4;
    const auto e = extract_qi(cyclotomic_y(2), qo);
    auto [delta, eps] = level2_modular_forms(qo);
    for (int n = 0; n <= qo; ++n) {
        EXPECT_TRUE(is_zero(e.abcd.A.coeff(n))) << n;
        EXPECT_EQ(e.abcd.B.coeff(n), QElem(delta.coeff(n) * Rational(-16))) << n;
        EXPECT_TRUE(is_zero(e.abcd.C.coeff(n))) << n;
        EXPECT_EQ(e.abcd.D.coeff(n), QElem(eps.coeff(n) * Rational(2))) << n;
    }
}

TEST(Jacobi, ExtractedPointsSatisfyTheRelations) {
    const int qo = 4;
    for (int N = 2; N <= 3; ++N) {
        const auto e = extract_qi(cyclotomic_y(N), qo);
        const auto& L = level_data(N);
        const auto rm = eval_abcd(L.R_minus, e.abcd), rp = eval_abcd(L.R_plus, e.abcd);
        for (int n = 0; n <= qo; ++n) {
            EXPECT_TRUE(is_zero(rm.coeff(n))) << N << " q^" << n;
            EXPECT_TRUE(is_zero(rp.coeff(n))) << N << " q^" << n;
        }
    }
}

TEST(Jacobi, ExtractionAtQZeroIsTheCusp) {
    const auto e = extract_qi(formal_y(), 1);
    const auto c = cusp_ii_point(RationalFunction::var());
    EXPECT_EQ(e.abcd.A.coeff(0), c.A);
    EXPECT_EQ(e.abcd.B.coeff(0), c.B);
    EXPECT_EQ(e.abcd.C.coeff(0), c.C);
    EXPECT_EQ(e.abcd.D.coeff(0), c.D);
}

TEST(Jacobi, LevelGenusKillsProjectiveSpace) {
    for (int N = 2; N <= 4; ++N) {
        const auto g = qx_of_phiell_product(cyclotomic_y(N), 3, N + 1);
        const auto v = g.evaluate(cv("CP" + std::to_string(N - 1)));
        for (int n = 0; n <= 3; ++n) EXPECT_TRUE(is_zero(v.coeff(n))) << N << " q^" << n;
        const auto w = g.evaluate(cv("TwCP(" + std::to_string(N + 1) + ",1)"));
        for (int n = 0; n <= 3; ++n) EXPECT_TRUE(is_zero(w.coeff(n))) << N << " q^" << n;
    }
}

TEST(Jacobi, DirectProductMatchesLogarithmicExpansion) {
    const int qo = 3, xo = 6;
    const auto Y = formal_y();
    const auto f = level_f_direct(Y, qo, xo);
    const auto Q = q_product_series(Y, qo, xo);
    // x = f(x) Q(x)
    const auto prod = (f * Q).truncated(xo + 1);
    ASSERT_EQ(prod.valuation(), 1);
    for (int e = 1; e <= xo; ++e) {
        const auto c = prod.coeff(e);
        for (int n = 0; n <= qo; ++n) EXPECT_EQ(c.coeff(n), RationalFunction(Rational(e == 1 && n == 0 ? 1 : 0))) << e << " q^" << n;
    }
}

TEST(Jacobi, LaurentConversionRejectsPoles) {
    const RationalFunction y = RationalFunction::var();
    const QSeries<RationalFunction> s(std::vector<RationalFunction>{(RationalFunction(Rational(1)) + y).inverse()}, 0, 1);
    EXPECT_THROW(to_laurent(s, 0), NonDivisible);
}
