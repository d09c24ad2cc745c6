#include <gtest/gtest.h>

#include <random>

#include "ellgen/ellgen.hpp"

using namespace ellgen;

namespace {

ChernVector cv(const std::string& name) { return catalog::lookup(name).cv; }

GenusSpec<Rational> random_genus(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> d(-4, 4);
    auto q = TruncatedSeries<Rational>::generate(order + 1, [&](int k) { return k == 0 ? Rational(1) : Rational(d(rng), 1 + std::abs(d(rng))); });
    return GenusSpec<Rational>(q, order);
}

/// F(X, Y) for 2-variable F and 3-variable arguments.
MSeries<Poly> substitute2(const MSeries<Poly>& F, const MSeries<Poly>& X, const MSeries<Poly>& Y, const std::vector<int>& caps, int total) {
    using M = MSeries<Poly>;
    M r(caps, total);
    std::vector<M> xp{M::constant(Poly(1), caps, total)}, yp{M::constant(Poly(1), caps, total)};
    for (int k = 1; k <= total; ++k) {
        xp.push_back(xp.back() * X);
        yp.push_back(yp.back() * Y);
    }
    for (auto& [e, c] : F.terms()) r = r + (xp[static_cast<std::size_t>(e[0])] * yp[static_cast<std::size_t>(e[1])]).scaled(c);
    return r;
}

}  // namespace

TEST(ClassicalGenera, ProjectiveSpaces) {
    const auto todd = classical_genus("todd", 8), sig = classical_genus("signature", 8), ahat = classical_genus("a_hat", 8);
    for (int n = 1; n <= 8; ++n) {
        const auto x = cp_model(n).chern_vector();
        EXPECT_EQ(todd.evaluate(x), Rational(1)) << n;
        EXPECT_EQ(sig.evaluate(x), n % 2 == 0 ? Rational(1) : Rational(0)) << n;
    }
    EXPECT_EQ(ahat.evaluate(cp_model(2).chern_vector()), Rational(-1, 8));
}

TEST(ClassicalGenera, K3Surface) {
    const auto w2 = cv("W2");
    EXPECT_EQ(classical_genus("todd", 4).evaluate(w2), Rational(2));
    EXPECT_EQ(classical_genus("a_hat", 4).evaluate(w2), Rational(2));
    EXPECT_EQ(classical_genus("signature", 4).evaluate(w2), Rational(-16));
    EXPECT_EQ(classical_genus("euler", 4).evaluate(w2), Rational(24));
}

TEST(ClassicalGenera, ChiKkNInterpolatesTodd) {
    // k = 0 is the Todd genus
    const auto g = classical_genus("chi_KkN", 6, {Rational(0), Rational(3)});
    EXPECT_EQ(g.Q(), classical_genus("todd", 6).Q());
    EXPECT_THROW(classical_genus("chi_KkN", 6, {Rational(1)}), BadParams);
    EXPECT_THROW(classical_genus("nonsense", 6), UnknownName);
}

TEST(ChiY, ProjectiveSpacesAndCatalog) {
    const auto chi = chi_y_genus(6);
    const LaurentPoly y = LaurentPoly::var();
    EXPECT_EQ(chi.evaluate(cp_model(3).chern_vector()), LaurentPoly(1) - y + y * y - y * y * y);
    EXPECT_EQ(chi.evaluate(cv("W2")), LaurentPoly(2) * y * y - LaurentPoly(20) * y + LaurentPoly(2));
    EXPECT_EQ(chi.evaluate(cv("W3")), y * y - y);
}

TEST(ChiY, EulerAndSignaturePoints) {
    const auto chi = chi_y_genus(6);
    const auto euler = at_y(chi, EULER_POINT), sig = at_y(chi, SIGNATURE_POINT);
    for (const char* name : {"CP2", "CP3", "W2", "W5", "TwCP(3,1)"}) {
        const auto x = cv(name);
        EXPECT_EQ(euler.evaluate(x), x.get({x.dim()})) << name;
        EXPECT_EQ(sig.evaluate(x), classical_genus("signature", 6).evaluate(x)) << name;
    }
}

TEST(GenusSpec, MultiplicativeOnProducts) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        const auto g = random_genus(rng, 6);
        for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {1, 4}, {3, 3}}) {
            const auto xa = cp_model(a), xb = cp_model(b);
            EXPECT_EQ(g.evaluate(product_model(xa, xb)), g.evaluate(xa) * g.evaluate(xb));
        }
        EXPECT_EQ(g.evaluate(product_chern_vector(cv("W2"), cv("W1"))), g.evaluate(cv("W2")) * g.evaluate(cv("W1")));
    }
}

TEST(GenusSpec, LogarithmRoundTrip) {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 5; ++trial) {
        const auto g = random_genus(rng, 7);
        const auto back = genus_from_log(g.log_series(), 7);
        EXPECT_EQ(back.Q(), g.Q());
    }
}

TEST(GenusSpec, RejectsBadInput) {
    EXPECT_THROW(GenusSpec<Rational>(TruncatedSeries<Rational>::generate(3, [](int k) { return Rational(k + 2); }), 2), BadParams);
    EXPECT_THROW(GenusSpec<Rational>(series_lib::todd_series(3), 5), InsufficientOrder);
    EXPECT_THROW(classical_genus("todd", 2).evaluate(cp_model(3).chern_vector()), DimensionMismatch);
}

TEST(FormalGroupLaw, ToddIsMultiplicative) {
    const auto F = formal_group_law(classical_genus("todd", 8), 6);
    const std::vector<int> caps{6, 6};
    using M = MSeries<Rational>;
    const M u = M::var(0, caps, 6), v = M::var(1, caps, 6);
    // Q(x) = x/(1-e^{-x}) gives f(x) = 1 - e^{-x} and F(u,v) = u + v - uv
    EXPECT_EQ(F, u + v - u * v);
}

TEST(FormalGroupLaw, UniversalIsAssociative) {
    const int n = 6;
    const auto F = formal_group_law(phi_ell(8), n);
    const std::vector<int> caps{n, n, n};
    using M = MSeries<Poly>;
    const M u = M::var(0, caps, n), v = M::var(1, caps, n), w = M::var(2, caps, n);
    const M left = substitute2(F, substitute2(F, u, v, caps, n), w, caps, n);
    const M right = substitute2(F, u, substitute2(F, v, w, caps, n), caps, n);
    EXPECT_EQ(left, right);
    // commutative with unit
    const M Fuv = substitute2(F, u, v, caps, n), Fvu = substitute2(F, v, u, caps, n);
    EXPECT_EQ(Fuv, Fvu);
    EXPECT_EQ(substitute2(F, u, M(caps, n), caps, n), u);
}
