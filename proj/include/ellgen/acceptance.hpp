#ifndef ELLGEN_ACCEPTANCE_HPP
#define ELLGEN_ACCEPTANCE_HPP

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "blowup.hpp"
#include "jacobi.hpp"
#include "level_n.hpp"
#include "universal.hpp"

namespace ellgen {

/** \brief Outcome of one acceptance criterion. */
struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
};

namespace acceptance {

/// Collects failures; the first one becomes the detail line.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        ++count_;
        if (!ok && first_.empty()) first_ = what;
        if (!ok) ++failed_;
    }
    bool ok() const { return failed_ == 0; }
    std::string summary() const {
        if (ok()) return std::to_string(count_) + " checks";
        return std::to_string(failed_) + "/" + std::to_string(count_) + " failed, first: " + first_;
    }

private:
    int count_ = 0;
    int failed_ = 0;
    std::string first_;
};

inline ChernVector cv(const std::string& name) { return catalog::lookup(name).cv; }

inline void universal_coefficients(Check& c) {
    const auto& phi = phi_ell(5);
    const std::vector<std::string> a{
        "1/2*A",
        "1/(2^4*3)*(6*A^2-B)",
        "1/(2^5*3)*(2*A^3-A*B+16*C)",
        "1/(2^9*3^2*5)*(60*A^4-60*A^2*B+1920*A*C+7*B^2-1152*D)",
        "1/(2^10*3^2*5)*(12*A^5-20*A^3*B+960*A^2*C+7*A*B^2-1152*A*D+32*C*B)",
    };
    const std::vector<std::string> K{
        "1/2*A*c1",
        "1/(2^4*3)*(2*B*c2+(6*A^2-B)*c1^2)",
        "1/(2^5*3)*(48*C*c3+(2*A*B-48*C)*c2*c1+(2*A^3-A*B+16*C)*c1^3)",
        "1/(2^9*3^2*5)*((-8*B^2+4608*D)*c4+(5760*A*C+8*B^2-4608*D)*c3*c1+(24*B^2-2304*D)*c2^2"
        "+(120*A^2*B-5760*A*C-28*B^2+4608*D)*c1^2*c2+(60*A^4-60*A^2*B+1920*A*C+7*B^2-1152*D)*c1^4)",
        "1/(2^10*3^2*5)*(960*B*C*c5+(-8*A*B^2+4608*A*D-960*B*C)*c4*c1+(8*A*B^2+2880*A^2*C-4608*A*D+480*B*C)*c3*c1^2"
        "+(24*A*B^2-2304*A*D)*c2^2*c1+(40*A^3*B-2880*A^2*C-28*A*B^2+4608*A*D-160*B*C)*c2*c1^3"
        "+(12*A^5-20*A^3*B+960*A^2*C+7*A*B^2-1152*A*D+32*B*C)*c1^5)",
    };
    for (int k = 1; k <= 5; ++k) {
        c.expect(phi.a(k) == parse_poly(a[static_cast<std::size_t>(k - 1)]), "a" + std::to_string(k));
        c.expect(chern_poly_to_poly(phi.K(k)) == parse_poly(K[static_cast<std::size_t>(k - 1)]), "K" + std::to_string(k));
    }
}

inline void basis_values(Check& c) {
    const auto& phi = phi_ell(6);
    c.expect(phi.evaluate(cv("W1")) == vars::A(), "W1");
    c.expect(phi.evaluate(cv("W2")) == vars::B(), "W2");
    c.expect(phi.evaluate(cv("W3")) == vars::C(), "W3");
    c.expect(phi.evaluate(cv("W4")) == vars::D(), "W4");
    c.expect(phi.evaluate(cv("W5")).is_zero(), "W5");
    c.expect(phi.evaluate(cv("W6")).is_zero(), "W6");
}

inline void chern_tables(Check& c) {
    struct Row {
        const char* name;
        std::vector<int> part;
        long value;
    };
    const std::vector<Row> rows{
        {"W1", {1}, 2},           {"W2", {1, 1}, 0},    {"W2", {2}, 24},        {"W3", {3}, 2},      {"W3", {2, 1}, 0},
        {"W3", {1, 1, 1}, 0},     {"W4", {2, 2}, 2},    {"W4", {4}, 6},         {"W4", {3, 1}, 0},   {"W5", {3, 2}, -256},
        {"W5", {5}, 0},           {"W6", {2, 2, 2}, 192}, {"W6", {4, 2}, 192}, {"W6", {3, 3}, 192}, {"W6", {6}, 0},
    };
    for (auto& r : rows) c.expect(cv(r.name).get(r.part) == Rational(r.value), std::string(r.name) + " chern number");
    const std::vector<std::pair<const char*, long>> milnor{{"W1", 2}, {"W2", -48}, {"W3", 6}, {"W4", -20}, {"W5", 1280}, {"W6", 1344}};
    for (auto& [n, s] : milnor) c.expect(milnor_number(cv(n)) == Rational(s), std::string(n) + " milnor number");
    for (int n = 2; n <= 3; ++n) {
        const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
        c.expect(milnor_number(cv("W" + std::to_string(2 * n + 1))) == sign * Rational(128 * n * (2 * n + 1)), "odd family");
        c.expect(milnor_number(cv("W" + std::to_string(2 * n + 2))) == sign * Rational(192 * (n - 1) * (2 * n - 3) * (2 * n + 3)), "even family");
    }
    // random split bundles over surfaces and threefolds
    std::mt19937 rng(20240501);
    std::uniform_int_distribution<int> rank(1, 3), coef(-3, 3), coin(0, 2);
    const std::vector<CohomologyModel> bases{cp_model(2), product_model(cp_model(1), cp_model(1)), cp_model(3), product_model(cp_model(1), cp_model(2))};
    for (int trial = 0; trial < 20; ++trial) {
        const CohomologyModel& B = bases[static_cast<std::size_t>(trial % 4)];
        const int nb = static_cast<int>(B.degree_one_basis().size());
        auto bundle = [&](int r) {
            SplitBundle b;
            for (int i = 0; i < r; ++i) {
                if (coin(rng) == 0) {
                    ++b.trivial;
                    continue;
                }
                std::vector<Rational> v;
                for (int k = 0; k < nb; ++k) v.push_back(Rational(coef(rng)));
                b.lines.push_back(B.line_class(v));
            }
            return b;
        };
        const int p = rank(rng);
        int q = rank(rng);
        if ((p + q) % 2 != 0) ++q;
        const SplitBundle E = bundle(p), F = bundle(q);
        const auto X = twisted_proj_bundle_model(B, E, F);
        c.expect(milnor_number(X.chern_vector()) == twisted_milnor_closed_form(B, E, F), "closed form trial " + std::to_string(trial));
    }
}

inline void level_n(Check& c) {
    const auto& L = level_data(3);
    const std::vector<Poly> gq{abcd_poly_to_q(L.R_minus), abcd_poly_to_q(L.R_plus)};
    const HomogeneousIdeal computed(gq, q_ids());
    const HomogeneousIdeal printed({parse_poly("q2 + 3/4*q1^2"), parse_poly("q4 + 1/2*q1*q3")}, q_ids());
    for (auto& g : printed.generators()) c.expect(computed.contains(g), "printed generator in computed ideal");
    for (auto& g : computed.generators()) c.expect(printed.contains(g), "computed generator in printed ideal");
    const Poly res = resultant_in(gq[0], gq[1], "q1");
    c.expect(proportionality(res, parse_poly("q3^2*q2 + 3*q4^2")).has_value(), "eliminant " + res.str());
    for (int N = 2; N <= 6; ++N) {
        c.expect(degree_h0(level_presentation(N)) == Rational(N * N - 1), "h0 level N=" + std::to_string(N));
        c.expect(degree_h0(eliminant_presentation(N)) == Rational(N * N - 1), "h0 eliminant N=" + std::to_string(N));
    }
    const UPoly t = UPoly::x();
    auto om = [](int d) { return one_minus_t_pow(d); };
    const RationalFunction lhs(om(2) * om(4), om(1) * om(2) * om(3) * om(4));
    const RationalFunction rhs = RationalFunction(om(8), om(2) * om(3) * om(4)) + RationalFunction(t * om(3) * om(4), om(2) * om(3) * om(4));
    c.expect(poincare_series(level_presentation(3)) == lhs, "poincare series");
    c.expect(lhs == rhs, "poincare identity");
}

inline void kernels(Check& c) {
    for (int N = 2; N <= 4; ++N) {
        c.expect(kernel_membership("phi_tilde_N", cv("CP" + std::to_string(N - 1)), N).in_kernel, "phi_N(CP_{N-1}) N=" + std::to_string(N));
        c.expect(kernel_membership("phi_tilde_N", cv("TwCP(" + std::to_string(N + 1) + ",1)"), N).in_kernel,
                 "phi_N(twisted CP_{N+1,1}) N=" + std::to_string(N));
    }
    for (int N = 2; N <= 5; ++N) {
        const auto X = cv("CP" + std::to_string(N - 1));
        c.expect(kernel_membership("a_tilde_N", X, N).in_kernel, "A_N(CP_{N-1}) N=" + std::to_string(N));
        const auto alpha = proportionality(a_tilde(12).evaluate(X), t_poly(N));
        c.expect(alpha.has_value() && !alpha->is_zero(), "A(CP_{N-1}) proportional to T N=" + std::to_string(N));
    }
}

inline LaurentPoly laurent(std::initializer_list<std::pair<int, long>> terms) {
    LaurentPoly r;
    for (auto [e, v] : terms) r += LaurentPoly::monomial(Rational(v), e);
    return r;
}

inline void q_expansions(Check& c) {
    const int qo = 5;
    const auto s = chi_y_loop(cv("W2"), qo);
    const LaurentPoly sq = laurent({{0, 1}, {1, 2}, {2, 1}});
    c.expect(s[0] == laurent({{2, 2}, {1, -20}, {0, 2}}), "q^0");
    c.expect(s[1] == sq * laurent({{-1, -20}, {0, -88}, {1, -20}}), "q^1");
    c.expect(s[2] == sq * laurent({{-2, 2}, {-1, -220}, {0, -588}, {1, -220}, {2, 2}}), "q^2");
    const auto phi = phi_at_minus_y(qo);
    const auto wp = (weierstrass_p(qo).scaled(RationalFunction(Rational(24))) * phi * phi).truncated(qo + 1);
    c.expect(from_laurent(s) == wp, "24 wp Phi^2");
    for (const char* name : {"W2", "W4", "W5"}) c.expect(integrality_check(chi_y_loop(cv(name), qo)).ok, std::string("integrality ") + name);
}

inline void cross_validation(Check& c) {
    const int qo = 4;
    const auto e = extract_qi(cyclotomic_y(2), qo);
    auto [delta, eps] = level2_modular_forms(qo);
    for (int n = 0; n <= qo; ++n) {
        const std::string at = " at q^" + std::to_string(n);
        c.expect(is_zero(e.abcd.A.coeff(n)), "A" + at);
        c.expect(e.abcd.B.coeff(n) == QElem(delta.coeff(n) * Rational(-16)), "B" + at);
        c.expect(is_zero(e.abcd.C.coeff(n)), "C" + at);
        c.expect(e.abcd.D.coeff(n) == QElem(eps.coeff(n) * Rational(2)), "D" + at);
    }
    for (int N = 2; N <= 3; ++N) {
        const auto x = extract_qi(cyclotomic_y(N), qo);
        const auto& L = level_data(N);
        const auto rm = eval_abcd(L.R_minus, x.abcd), rp = eval_abcd(L.R_plus, x.abcd);
        for (int n = 0; n <= qo; ++n) {
            c.expect(is_zero(rm.coeff(n)), "R_{N-1} N=" + std::to_string(N));
            c.expect(is_zero(rp.coeff(n)), "R_{N+1} N=" + std::to_string(N));
        }
    }
}

inline void characterization(Check& c) {
    auto [v3, v4] = test_vectors_Q3_Q4();
    c.expect(v3 == parse_poly("3/4*q3"), "Q3");
    c.expect(v4 == parse_poly("9/16*q1*q3 + 9/8*q4"), "Q4");
}

inline void blowup(Check& c) {
    std::mt19937 rng(20240503);
    std::uniform_int_distribution<int> qd(1, 5), ad(0, 6), num(-30, 30), den(1, 7);
    for (int trial = 0; trial < 50; ++trial) {
        const int q = qd(rng);
        const int a = ad(rng);
        MPoly<Rational> t;
        // x1^a times e_1(x2..xq), symmetric in the trailing variables
        for (int i = 1; i < q; ++i) {
            std::vector<int> e(static_cast<std::size_t>(q), 0);
            e[0] = a;
            e[static_cast<std::size_t>(i)] = 1;
            mpoly::add_term(t, e, Rational(1));
        }
        if (q == 1) mpoly::add_term(t, {a}, Rational(1));
        std::vector<Rational> x;
        while (static_cast<int>(x.size()) < q) {
            const Rational r(num(rng), den(rng));
            if (std::find(x.begin(), x.end(), r) == x.end()) x.push_back(r);
        }
        c.expect(verify_rational_identity(x), "rational identity trial " + std::to_string(trial));
        c.expect(evaluate_mpoly(flag_pushforward(t, q), x) == residue_sum(t, x), "pushforward trial " + std::to_string(trial));
    }
    c.expect(verify_elliptic_identity(2, 3, 2, 3).vanishes, "identity (2,3)");
    c.expect(verify_elliptic_identity(3, 4, 2, 3).vanishes, "identity (3,4)");
    c.expect(!verify_elliptic_identity(2, 2, 2, 3).vanishes, "control (2,2)");

    const auto todd = classical_genus("todd", 8), sig = classical_genus("signature", 8);
    const std::vector<std::pair<std::string, CohomologyModel>> centers{
        {"point", point_model()}, {"CP1", cp_model(1)}, {"CP2", cp_model(2)}, {"K3", catalog::lookup("K3").model.value()}};
    for (auto& [name, Y] : centers)
        for (int q = 1; Y.dim() + q <= 6; ++q) {
            BlowupInput<Rational> in{Y, {}, todd};
            for (int i = 0; i < q; ++i) in.roots.push_back(hyperplane_multiple(Y, i + 1));
            c.expect(genus_defect(in).is_zero(), "todd " + name + " codim " + std::to_string(q));
            if (q % 2 == 0) {
                BlowupInput<Rational> sin{Y, in.roots, sig};
                c.expect(genus_defect(sin) == -sig.evaluate(Y), "signature " + name + " codim " + std::to_string(q));
            }
        }
    for (auto& bc : verify_blowup_invariance(2)) c.expect(bc.hypothesis == bc.defect_zero, "level case " + bc.label);
}

inline void properties(Check& c) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-4, 4);
    const int n = 6;
    for (int trial = 0; trial < 3; ++trial) {
        auto Q = TruncatedSeries<Rational>::generate(n + 1, [&](int k) { return k == 0 ? Rational(1) : Rational(d(rng), 1 + std::abs(d(rng))); });
        const GenusSpec<Rational> g(Q, n);
        for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {3, 3}})
            c.expect(g.evaluate(product_model(cp_model(a), cp_model(b))) == g.evaluate(cp_model(a)) * g.evaluate(cp_model(b)), "product law");
        c.expect(genus_from_log(g.log_series(), n).Q() == g.Q(), "log round trip");
        c.expect(Q.log().exp() == Q, "log/exp round trip");
        const auto f = Q.inverse().shifted(1);
        c.expect(f.compose(f.reversion()) == TruncatedSeries<Rational>::var(f.prec()), "reversion round trip");
    }
    const auto& phi = phi_ell(8);
    for (const char* name : {"CP2", "CP5", "W2", "W5", "W6", "TwCP(3,3)", "TwCP(4,2)"}) {
        const auto x = cv(name);
        const Poly v = phi.evaluate(x);
        c.expect(v.is_zero() || v.weight_or_throw() == x.dim(), std::string("homogeneity ") + name);
        if (x.is_su()) {
            bool has_a = false;
            for (auto& [m, coef] : v.terms())
                for (auto& [id, e] : m) has_a = has_a || (id == var_id("A") && e > 0);
            c.expect(!has_a, std::string("SU A-independence ") + name);
        }
    }
    const int o = 6;
    const auto F = formal_group_law(phi_ell(8), o);
    const std::vector<int> caps{o, o, o};
    using M = MSeries<Poly>;
    auto sub = [&](const M& X, const M& Y) {
        std::vector<M> xp{M::constant(Poly(1), caps, o)}, yp = xp;
        for (int k = 1; k <= o; ++k) {
            xp.push_back(xp.back() * X);
            yp.push_back(yp.back() * Y);
        }
        M r(caps, o);
        for (auto& [e, coef] : F.terms()) r = r + (xp[static_cast<std::size_t>(e[0])] * yp[static_cast<std::size_t>(e[1])]).scaled(coef);
        return r;
    };
    const M u = M::var(0, caps, o), v = M::var(1, caps, o), w = M::var(2, caps, o);
    c.expect(sub(sub(u, v), w) == sub(u, sub(v, w)), "formal group law associativity");
}

}  // namespace acceptance

/// Titles of the ten criteria, in order.
inline const std::vector<std::pair<std::string, std::function<void(acceptance::Check&)>>>& acceptance_criteria() {
    static const std::vector<std::pair<std::string, std::function<void(acceptance::Check&)>>> list{
        {"universal coefficients a1..a5, K1..K5", acceptance::universal_coefficients},
        {"basis values W1..W6", acceptance::basis_values},
        {"Chern and Milnor tables, closed forms", acceptance::chern_tables},
        {"level-N ideal, eliminant, h0, Poincare series", acceptance::level_n},
        {"kernel of level-N genera", acceptance::kernels},
        {"q-expansion of W2, integrality", acceptance::q_expansions},
        {"level-2 extraction and relations", acceptance::cross_validation},
        {"characterization vectors Q3, Q4", acceptance::characterization},
        {"blow-up formulas and defects", acceptance::blowup},
        {"property suites", acceptance::properties},
    };
    return list;
}

/// Runs criterion `id` (1-based); exceptions count as failures.
inline CriterionResult run_criterion(int id) {
    const auto& list = acceptance_criteria();
    if (id < 1 || id > static_cast<int>(list.size())) throw BadParams("no criterion " + std::to_string(id));
    CriterionResult r;
    r.id = id;
    r.title = list[static_cast<std::size_t>(id - 1)].first;
    acceptance::Check c;
    try {
        list[static_cast<std::size_t>(id - 1)].second(c);
        r.pass = c.ok();
        r.detail = c.summary();
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

inline std::vector<CriterionResult> run_acceptance() {
    std::vector<CriterionResult> out;
    for (int i = 1; i <= static_cast<int>(acceptance_criteria().size()); ++i) out.push_back(run_criterion(i));
    return out;
}

}  // namespace ellgen

#endif
