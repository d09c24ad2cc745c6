#ifndef ELLGEN_UNIVERSAL_HPP
#define ELLGEN_UNIVERSAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "genus.hpp"
#include "poly_algebra.hpp"

namespace ellgen {

/// Coefficients of S(y) = y^4 + q1 y^3 + q2 y^2 + q3 y + q4.
template <class R>
struct QuarticData {
    R q1, q2, q3, q4;
};

template <class R>
struct ABCDPoint {
    R A, B, C, D;
};

template <class R>
QuarticData<R> abcd_to_q(const ABCDPoint<R>& p) {
    const R A = p.A, B = p.B, C = p.C, D = p.D;
    const R A2 = A * A;
    return {R(Rational(2)) * A,
            R(Rational(3, 2)) * A2 - R(Rational(1, 4)) * B,
            R(Rational(1, 2)) * A2 * A - R(Rational(1, 4)) * A * B + R(Rational(4)) * C,
            R(Rational(1, 16)) * A2 * A2 - R(Rational(1, 16)) * A2 * B + R(Rational(2)) * A * C + R(Rational(1, 64)) * B * B - R(Rational(2)) * D};
}

template <class R>
ABCDPoint<R> q_to_abcd(const QuarticData<R>& q) {
    const R q12 = q.q1 * q.q1;
    return {R(Rational(1, 2)) * q.q1,
            R(Rational(3, 2)) * q12 - R(Rational(4)) * q.q2,
            R(Rational(1, 32)) * q12 * q.q1 - R(Rational(1, 8)) * q.q1 * q.q2 + R(Rational(1, 4)) * q.q3,
            R(Rational(3, 128)) * q12 * q12 - R(Rational(1, 8)) * q12 * q.q2 + R(Rational(1, 8)) * q.q1 * q.q3 + R(Rational(1, 8)) * q.q2 * q.q2 - R(Rational(1, 2)) * q.q4};
}

inline ABCDPoint<Poly> abcd_symbols() { return {vars::A(), vars::B(), vars::C(), vars::D()}; }
inline QuarticData<Poly> q_symbols() { return {vars::q(1), vars::q(2), vars::q(3), vars::q(4)}; }

/// Rewrites a polynomial in A..D into q1..q4 and back.
inline Poly abcd_poly_to_q(const Poly& p) {
    auto a = q_to_abcd(q_symbols());
    return p.substitute(std::map<std::string, Poly>{{"A", a.A}, {"B", a.B}, {"C", a.C}, {"D", a.D}});
}
inline Poly q_poly_to_abcd(const Poly& p) {
    auto q = abcd_to_q(abcd_symbols());
    return p.substitute(std::map<std::string, Poly>{{"q1", q.q1}, {"q2", q.q2}, {"q3", q.q3}, {"q4", q.q4}});
}

/// S evaluated on a series.
template <class R>
TruncatedSeries<R> quartic_of(const QuarticData<R>& S, const TruncatedSeries<R>& h) {
    const TruncatedSeries<R> h2 = h * h;
    return h2 * h2 + h2 * h * TruncatedSeries<R>(S.q1, kExact) + h2 * TruncatedSeries<R>(S.q2, kExact) + h * TruncatedSeries<R>(S.q3, kExact) +
           TruncatedSeries<R>(S.q4, kExact);
}

/// h' squared minus S(h).
template <class R>
TruncatedSeries<R> ode_residual(const QuarticData<R>& S, const TruncatedSeries<R>& h) {
    const TruncatedSeries<R> d = h.derivative();
    return d * d - quartic_of(S, h);
}

/**
 * \brief Solves (h')^2 = S(h) with h = 1/x + c1 + c2 x + ...
 *
 * Returns h known through x^{order-1}, i.e. c_1..c_order.
 */
template <class R>
TruncatedSeries<R> solve_h(const QuarticData<R>& S, int order) {
    if (order < 1) throw BadParams("order must be at least 1");
    std::vector<R> c{R(Rational(1))};  // exponents -1, 0, 1, ...
    for (int n = 1; n <= order; ++n) {
        c.push_back(R(Rational(0)));
        // with c_n = 0 the x^{n-4} residual coefficient is linear in c_n with slope -(2n+2)
        const R res = ode_residual(S, TruncatedSeries<R>(c, -1, n + 1)).coeff(n - 4);
        c.back() = res * R(Rational(1, 2 * n + 2));
    }
    return TruncatedSeries<R>(c, -1, order);
}

/// Q(x) = exp(-sum c_n x^n / n) from h = 1/x + sum c_n x^{n-1}.
template <class R>
TruncatedSeries<R> q_of_h(const TruncatedSeries<R>& h, int order) {
    std::vector<R> s(static_cast<std::size_t>(order + 1), R(Rational(0)));
    for (int n = 1; n <= order; ++n) s[static_cast<std::size_t>(n)] = -(h.coeff(n - 1) * R(Rational(1, n)));
    return TruncatedSeries<R>(s, 0, order + 1).exp();
}

/// phi_ell-type genus at an arbitrary point of any exact ring.
template <class R>
GenusSpec<R> elliptic_genus_at(const ABCDPoint<R>& p, int order) {
    return GenusSpec<R>(q_of_h(solve_h(abcd_to_q(p), order), order), order);
}

/// The universal genus over Q[A,B,C,D]; cached per order.
inline const GenusSpec<Poly>& phi_ell(int order = 12) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const GenusSpec<Poly>>> cache;
    std::shared_ptr<const GenusSpec<Poly>> ptr;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.lower_bound(order);
        if (it != cache.end() && it->first == order) return *it->second;
    }
    ptr = std::make_shared<const GenusSpec<Poly>>(elliptic_genus_at(abcd_symbols(), order));
    std::lock_guard<std::mutex> lock(mu);
    return *cache.emplace(order, ptr).first->second;
}

/// Coefficient-wise substitution of a point for A, B, C, D.
template <class R>
GenusSpec<R> specialize(const GenusSpec<Poly>& spec, const ABCDPoint<R>& p) {
    const int a = var_id("A"), b = var_id("B"), c = var_id("C"), d = var_id("D");
    return spec.template map<R>([&](const Poly& x) {
        return x.eval<R>([&](int id) -> R {
            if (id == a) return p.A;
            if (id == b) return p.B;
            if (id == c) return p.C;
            if (id == d) return p.D;
            throw VariableNotPresent("unexpected variable " + VariableRegistry::instance().name(id));
        });
    });
}

inline ABCDPoint<Rational> point(const Rational& A, const Rational& B, const Rational& C, const Rational& D) { return {A, B, C, D}; }

namespace points {
inline ABCDPoint<Rational> signature() { return point(0, -16, 0, 2); }
inline ABCDPoint<Rational> a_hat() { return point(0, 2, 0, 0); }
inline ABCDPoint<Rational> todd() { return point(1, 2, 0, 0); }
inline ABCDPoint<Rational> chi_KkN(const Rational& k, const Rational& N) { return point(Rational(1) - Rational(2) * k / N, 2, 0, 0); }
/// Point whose genus is chi_y.
inline ABCDPoint<LaurentPoly> chi_y() {
    const LaurentPoly y = LaurentPoly::var(), one(1);
    const LaurentPoly m = one - y, p = one + y;
    const LaurentPoly m2 = m * m, p2 = p * p;
    return {m, LaurentPoly(2) * y * y - LaurentPoly(20) * y + LaurentPoly(2), y * (y - one),
            LaurentPoly(Rational(3, 8)) * m2 * m2 - LaurentPoly(Rational(1, 2)) * m2 * p2 + LaurentPoly(Rational(1, 8)) * p2 * p2};
}
}  // namespace points

/// Ã: the universal genus at C = D = 0, valued in Q[A,B].
inline GenusSpec<Poly> a_tilde(int order) {
    return specialize(phi_ell(order), ABCDPoint<Poly>{vars::A(), vars::B(), Poly(), Poly()});
}

/// K_n with coefficients in Q[A..D] as a polynomial in A..D, c1..cn.
inline Poly chern_poly_to_poly(const ChernPoly<Poly>& k) {
    Poly r;
    for (auto& [part, coef] : k) {
        Poly m = coef;
        for (int p : part.parts()) m = m * vars::c(p);
        r += m;
    }
    return r;
}
inline Poly chern_poly_to_poly(const ChernPoly<Rational>& k) {
    Poly r;
    for (auto& [part, coef] : k) {
        Poly m(coef);
        for (int p : part.parts()) m = m * vars::c(p);
        r += m;
    }
    return r;
}

/// Weierstrass invariants as polynomials in A..D.
inline Poly g2_poly() {
    using namespace vars;
    return B() * B() * Poly(Rational(1, 48)) - Poly(2) * D();
}
inline Poly g3_poly() {
    using namespace vars;
    return -(B() * B() * B()) * Poly(Rational(1, 1728)) + B() * D() * Poly(Rational(1, 12)) - C() * C();
}
inline Poly discriminant_poly() {
    using namespace vars;
    const Poly b3 = B() * B() * B(), c2 = C() * C();
    return b3 * c2 * Poly(Rational(-1, 32)) + B() * c2 * D() * Poly(Rational(9, 2)) + B() * B() * D() * D() * Poly(Rational(1, 16)) -
           Poly(27) * c2 * c2 - Poly(8) * D() * D() * D();
}

/// [Q3] = [xi3] - [CP2][CP1] and [Q4] = [xi4] - [CP2]^2 as q-polynomials of phi_ell.
inline std::pair<Poly, Poly> test_vectors_Q3_Q4() {
    const auto& phi = phi_ell(4);
    CohomologyModel cp2 = cp_model(2);
    const auto K = cp2.line_class({Rational(3)});
    const auto K2 = cp2.line_class({Rational(6)});
    CohomologyModel xi3 = twisted_proj_bundle_model(cp2, SplitBundle{0, {K, K2}}, SplitBundle{});
    CohomologyModel xi4 = twisted_proj_bundle_model(cp2, SplitBundle{2, {K}}, SplitBundle{});
    const Poly p2 = phi.evaluate(cp2), p1 = phi.evaluate(cp_model(1));
    const Poly v3 = phi.evaluate(xi3) - p2 * p1;
    const Poly v4 = phi.evaluate(xi4) - p2 * p2;
    return {abcd_poly_to_q(v3), abcd_poly_to_q(v4)};
}

}  // namespace ellgen

#endif
