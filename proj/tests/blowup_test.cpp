#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ellgen/ellgen.hpp"

using namespace ellgen;

namespace {

std::vector<Rational> distinct_tuple(std::mt19937& rng, int q) {
    std::uniform_int_distribution<int> num(-30, 30), den(1, 7);
    std::set<Rational> seen;
    std::vector<Rational> x;
    while (static_cast<int>(x.size()) < q) {
        const Rational r(num(rng), den(rng));
        if (seen.insert(r).second) x.push_back(r);
    }
    return x;
}

/// x1^a times the elementary symmetric polynomial e_k of x2..xq.
MPoly<Rational> sample_integrand(int q, int a, int k) {
    MPoly<Rational> t;
    std::vector<int> pick(static_cast<std::size_t>(q - 1), 0);
    for (int i = 0; i < k && i < q - 1; ++i) pick[static_cast<std::size_t>(q - 2 - i)] = 1;
    std::sort(pick.begin(), pick.end());
    do {
        std::vector<int> e{a};
        e.insert(e.end(), pick.begin(), pick.end());
        mpoly::add_term(t, e, Rational(1));
    } while (std::next_permutation(pick.begin(), pick.end()));
    return t;
}

struct Center {
    std::string name;
    CohomologyModel model;
};

std::vector<Center> centers() {
    return {{"point", point_model()}, {"CP1", cp_model(1)},           {"CP2", cp_model(2)},
            {"CP3", cp_model(3)},     {"K3", catalog::lookup("K3").model.value()}, {"TwCP(2,1)", catalog::twisted_cp_model(2, 1)}};
}

template <class R>
R defect(const GenusSpec<R>& g, const CohomologyModel& Y, const std::vector<int>& multiples) {
    BlowupInput<R> in{Y, {}, g};
    for (int k : multiples) in.roots.push_back(hyperplane_multiple(Y, k));
    return genus_defect(in);
}

}  // namespace

TEST(FlagPushforward, MatchesResidueSum) {
    std::mt19937 rng(20240503);
    std::uniform_int_distribution<int> qd(1, 5), ad(0, 6);
    for (int trial = 0; trial < 50; ++trial) {
        const int q = qd(rng);
        const int k = std::uniform_int_distribution<int>(0, q - 1)(rng);
        const auto t = sample_integrand(q, ad(rng), k);
        const auto x = distinct_tuple(rng, q);
        EXPECT_EQ(evaluate_mpoly(flag_pushforward(t, q), x), residue_sum(t, x)) << "trial " << trial;
        EXPECT_TRUE(verify_rational_identity(x)) << "trial " << trial;
    }
}

TEST(FlagPushforward, KnownValues) {
    // sum_i x_i^{q-1} / prod_{j != i}(x_j - x_i) = (-1)^{q-1}
    for (int q = 1; q <= 5; ++q) {
        const auto p = flag_pushforward(sample_integrand(q, q - 1, 0), q);
        ASSERT_EQ(p.size(), 1u);
        EXPECT_EQ(p.begin()->second, Rational(q % 2 == 1 ? 1 : -1));
        EXPECT_EQ(std::accumulate(p.begin()->first.begin(), p.begin()->first.end(), 0), 0);
    }
    EXPECT_TRUE(flag_pushforward(sample_integrand(4, 1, 0), 4).empty());
}

TEST(FlagPushforward, RejectsDegenerateInput) {
    EXPECT_THROW(residue_sum(sample_integrand(2, 1, 0), {Rational(1), Rational(1)}), DegenerateSample);
    EXPECT_THROW(verify_rational_identity({Rational(2), Rational(3), Rational(2)}), DegenerateSample);
    EXPECT_THROW(flag_pushforward(sample_integrand(2, 1, 0), 0), BadParams);
}

TEST(EllipticIdentity, VanishesInTheCodimensionRange) {
    EXPECT_TRUE(verify_elliptic_identity(2, 3, 2, 3).vanishes);
    EXPECT_TRUE(verify_elliptic_identity(3, 4, 2, 3).vanishes);
}

TEST(EllipticIdentity, NegativeControl) {
    const auto r = verify_elliptic_identity(2, 2, 2, 3);
    EXPECT_FALSE(r.vanishes);
    EXPECT_FALSE(r.coefficient.empty());
}

TEST(GenusDefect, ToddIsABirationalInvariant) {
    const auto todd = classical_genus("todd", 8);
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> m(-3, 3);
    for (auto& c : centers())
        for (int q = 1; c.model.dim() + q <= 6; ++q) {
            std::vector<int> mult;
            for (int i = 0; i < q; ++i) mult.push_back(m(rng));
            EXPECT_EQ(defect(todd, c.model, mult), Rational(0)) << c.name << " codim " << q;
        }
}

TEST(GenusDefect, SignatureChangesByMinusSignatureOfCenter) {
    const auto sig = classical_genus("signature", 8);
    for (auto& c : centers())
        for (int q = 1; c.model.dim() + q <= 6; ++q) {
            const std::vector<int> mult(static_cast<std::size_t>(q), 1);
            const Rational expected = q % 2 == 0 ? -sig.evaluate(c.model) : Rational(0);
            EXPECT_EQ(defect(sig, c.model, mult), expected) << c.name << " codim " << q;
        }
}

TEST(GenusDefect, EulerCharacteristicGrowsByProjectiveFibre) {
    const auto eu = classical_genus("euler", 8);
    for (auto& c : centers())
        for (int q = 1; c.model.dim() + q <= 6; ++q) {
            const std::vector<int> mult(static_cast<std::size_t>(q), 2);
            EXPECT_EQ(defect(eu, c.model, mult), Rational(q - 1) * eu.evaluate(c.model)) << c.name << " codim " << q;
        }
}

TEST(GenusDefect, InvariantUnderPermutingRoots) {
    const auto g = phi_ell(6);
    const CohomologyModel Y = cp_model(2);
    std::vector<int> mult{1, -2, 3};
    const Poly ref = defect(g, Y, mult);
    std::sort(mult.begin(), mult.end());
    do EXPECT_EQ(defect(g, Y, mult), ref);
    while (std::next_permutation(mult.begin(), mult.end()));
}

TEST(GenusDefect, ChiYOfPointBlowup) {
    // blowing up a point swaps a point for CP_{q-1}: chi_y changes by chi_y(CP_{q-1}) - 1
    const auto chi = chi_y_genus(6);
    for (int q = 1; q <= 5; ++q) {
        const LaurentPoly d = defect(chi, point_model(), std::vector<int>(static_cast<std::size_t>(q), 0));
        EXPECT_EQ(d, chi.evaluate(cp_model(q - 1)) - LaurentPoly(1)) << q;
    }
}

TEST(GenusDefect, LevelGenusCases) {
    const auto cases = verify_blowup_invariance(2);
    ASSERT_EQ(cases.size(), 4u);
    for (auto& c : cases) {
        if (c.hypothesis)
            EXPECT_TRUE(c.defect_zero) << c.label << ": " << c.defect;
        else
            EXPECT_FALSE(c.defect_zero) << c.label;
    }
}

TEST(GenusDefect, RejectsBadInput) {
    BlowupInput<Rational> few{cp_model(3), {}, classical_genus("todd", 8)};
    EXPECT_THROW(genus_defect(few), BadParams);
    BlowupInput<Rational> shallow{cp_model(3), {hyperplane_multiple(cp_model(3), 1)}, classical_genus("todd", 3)};
    EXPECT_THROW(genus_defect(shallow), InsufficientOrder);
    const auto Y = cp_model(2);
    BlowupInput<Rational> deg2{Y, {Y.power(Y.line_class({Rational(1)}), 2)}, classical_genus("todd", 8)};
    EXPECT_THROW(genus_defect(deg2), BadParams);
}
