#ifndef ELLGEN_JACOBI_HPP
#define ELLGEN_JACOBI_HPP

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "level_n.hpp"

namespace ellgen {

/// Series in q with coefficients in C.
template <class C>
using QSeries = TruncatedSeries<C>;
/// Series in x with q-series coefficients.
template <class C>
using XQSeries = TruncatedSeries<QSeries<C>>;
/// Series in q whose coefficients are Laurent polynomials in u = e^{-x}.
using UXSeries = TruncatedSeries<LaurentPoly>;

/**
 * \brief How the variable y is realized: formally (rational functions) or in Q[y]/Phi_N(-y).
 */
template <class C>
struct YContext {
    C y;
    C y_inv;
    std::string mode;
};

inline YContext<RationalFunction> formal_y() {
    const RationalFunction y = RationalFunction::var();
    return {y, y.inverse(), "formal"};
}

inline YContext<QElem> cyclotomic_y(int N) {
    auto ring = QuotientRing::cyclotomic_minus_y(N);
    const QElem y = QElem::gen(ring);
    return {y, y.inverse(), "cyclotomic(" + std::to_string(N) + ")"};
}

// ---------------------------------------------------------------- Phi in u, q

/// (1-u) prod (1-q^n u)(1-q^n/u)/(1-q^n)^2 to q^qorder.
inline UXSeries phi_product(int qorder) {
    if (qorder < 0) throw BadParams("negative q order");
    const int p = qorder + 1;
    const LaurentPoly u = LaurentPoly::monomial(Rational(1), 1), ui = LaurentPoly::monomial(Rational(1), -1);
    UXSeries r = UXSeries(std::vector<LaurentPoly>{LaurentPoly(1) - u}, 0, p);
    for (int n = 1; n <= qorder; ++n) {
        UXSeries a(std::vector<LaurentPoly>{LaurentPoly(1)}, 0, p), b = a, c = a;
        a = a - UXSeries::monomial(u, n, p);
        b = b - UXSeries::monomial(ui, n, p);
        c = c - UXSeries::monomial(LaurentPoly(1), n, p);
        r = r * a * b * c.inverse() * c.inverse();
    }
    return r;
}

/// u -> q u. Output is exact below q^qout provided the input was long enough.
inline UXSeries ux_shift(const UXSeries& s, int qout) {
    std::vector<LaurentPoly> out(static_cast<std::size_t>(qout + 1));
    for (int n = 0; n < s.prec(); ++n) {
        const LaurentPoly c = s.coeff_or_zero(n);
        for (auto& [k, v] : c.terms()) {
            const int m = n + k;
            if (m < 0) throw BadValuation("shift produced a negative q power");
            if (m <= qout) out[static_cast<std::size_t>(m)] += LaurentPoly::monomial(v, k);
        }
    }
    return UXSeries(out, 0, qout + 1);
}

/// Checks Phi(qu) = -u^{-1} Phi(u) to q^qorder.
inline bool verify_phi_shift(int qorder) {
    int K = 1;
    while (K * (K - 1) / 2 <= qorder) ++K;
    const UXSeries phi = phi_product(qorder + K + 1);
    const UXSeries lhs = ux_shift(phi, qorder);
    const UXSeries rhs = (phi * UXSeries(LaurentPoly::monomial(Rational(-1), -1), kExact)).truncated(qorder + 1);
    return lhs == rhs;
}

/// Phi(tau, -z) as a q-series over Q(y), from the product in u at u = -y.
inline QSeries<RationalFunction> phi_at_minus_y(int qorder) {
    const UXSeries p = phi_product(qorder);
    std::vector<RationalFunction> v;
    for (int n = 0; n <= qorder; ++n) {
        const LaurentPoly pn = p.coeff(n);
        LaurentPoly s;
        for (auto& [k, c] : pn.terms()) s += LaurentPoly::monomial(k % 2 == 0 ? c : -c, k);
        v.push_back(s.to_rational_function());
    }
    return QSeries<RationalFunction>(v, 0, qorder + 1);
}

// ---------------------------------------------------------------- x-expansions

namespace detail {

template <class C>
QSeries<C> qconst(const C& c, int qp) {
    return QSeries<C>(c, qp);
}

template <class C>
QSeries<C> qmono(const C& c, int e, int qp) {
    return QSeries<C>::monomial(c, e, qp);
}

/// sum_k c (sign)^k x^k / k!, i.e. c e^{sign x}, with q-series coefficient cq.
template <class C>
XQSeries<C> exp_times(const QSeries<C>& cq, int sign, int xp) {
    std::vector<QSeries<C>> v;
    for (int k = 0; k < xp; ++k) {
        Rational f = factorial(k).inverse();
        if (sign < 0 && k % 2 == 1) f = -f;
        v.push_back(cq.scaled(C(f)));
    }
    return XQSeries<C>(v, 0, xp);
}

}  // namespace detail

/// Phi(tau, -z) = (1+y) prod (1+q^n y)(1+q^n/y)/(1-q^n)^2.
template <class C>
QSeries<C> normalizer(const YContext<C>& Y, int qorder) {
    const int qp = qorder + 1;
    using S = QSeries<C>;
    S r = S(C(Rational(1)) + Y.y, qp);
    for (int n = 1; n <= qorder; ++n) {
        S one = S(C(Rational(1)), qp);
        S a = one + S::monomial(Y.y, n, qp);
        S b = one + S::monomial(Y.y_inv, n, qp);
        S c = one - S::monomial(C(Rational(1)), n, qp);
        r = r * a * b * c.inverse() * c.inverse();
    }
    return r;
}

/// log Q(x) for the normalized product series, x-coefficients 0..xorder.
template <class C>
XQSeries<C> log_q_product(const YContext<C>& Y, int qorder, int xorder) {
    const int qp = qorder + 1, xp = xorder + 1;
    using S = QSeries<C>;
    std::vector<S> L(static_cast<std::size_t>(xp), S::zero(qp));
    // x / (1 - e^{-x})
    const auto lt = series_lib::todd_series(xp).log();
    for (int k = 1; k < xp; ++k) L[static_cast<std::size_t>(k)] = S(C(lt.coeff(k)), qp);
    // (1 + y e^{-x}) / (1 + y)
    {
        TruncatedSeries<C> w = TruncatedSeries<C>::generate(xp, [&](int k) {
            if (k == 0) return C(Rational(0));
            Rational f = factorial(k).inverse();
            if (k % 2 == 1) f = -f;
            return Y.y * C(f);
        });
        w = w.scaled(C(C(Rational(1)) + Y.y).inverse());
        const auto lw = (TruncatedSeries<C>(C(Rational(1)), xp) + w).log();
        for (int k = 1; k < xp; ++k) L[static_cast<std::size_t>(k)] = L[static_cast<std::size_t>(k)] + S(lw.coeff(k), qp);
    }
    // products over n
    std::vector<C> ypow(static_cast<std::size_t>(qorder + 1)), yipow(static_cast<std::size_t>(qorder + 1));
    ypow[0] = yipow[0] = C(Rational(1));
    for (int m = 1; m <= qorder; ++m) {
        ypow[static_cast<std::size_t>(m)] = ypow[static_cast<std::size_t>(m - 1)] * Y.y;
        yipow[static_cast<std::size_t>(m)] = yipow[static_cast<std::size_t>(m - 1)] * Y.y_inv;
    }
    for (int n = 1; n <= qorder; ++n)
        for (int m = 1; n * m <= qorder; ++m) {
            const Rational sgn = (m % 2 == 1) ? Rational(1) : Rational(-1);
            for (int k = 1; k < xp; ++k) {
                const Rational mk = Rational(m).pow(k) / factorial(k);
                const Rational mmk = (k % 2 == 0) ? mk : -mk;  // (-m)^k / k!
                C c = (ypow[static_cast<std::size_t>(m)] * C(mmk) + yipow[static_cast<std::size_t>(m)] * C(mk)) * C(sgn / Rational(m));
                c = c + C((mmk + mk) / Rational(m));
                L[static_cast<std::size_t>(k)] = L[static_cast<std::size_t>(k)] + S::monomial(c, n * m, qp);
            }
        }
    return XQSeries<C>(L, 0, xp);
}

/// Q(x) of the normalized product as a series in x over q-series.
template <class C>
XQSeries<C> q_product_series(const YContext<C>& Y, int qorder, int xorder) {
    return log_q_product(Y, qorder, xorder).exp();
}

/// The genus of the product series.
template <class C>
GenusSpec<QSeries<C>> qx_of_phiell_product(const YContext<C>& Y, int qorder, int xorder) {
    return GenusSpec<QSeries<C>>(q_product_series(Y, qorder, xorder), xorder);
}

/// Phi(tau, x) with e^{-x} replaced by s e^{-x}, expanded directly from the product.
template <class C>
XQSeries<C> phi_x_direct(const YContext<C>& Y, const C& s, int qorder, int xorder) {
    (void)Y;
    const int qp = qorder + 1, xp = xorder + 1;
    using S = QSeries<C>;
    using X = XQSeries<C>;
    const S one = S(C(Rational(1)), qp);
    const X xone = X(std::vector<S>{one}, 0, xp);
    const C si = s.inverse();
    X r = xone - detail::exp_times(S(s, qp), -1, xp);
    for (int n = 1; n <= qorder; ++n) {
        X a = xone - detail::exp_times(S::monomial(s, n, qp), -1, xp);
        X b = xone - detail::exp_times(S::monomial(si, n, qp), 1, xp);
        S c = one - S::monomial(C(Rational(1)), n, qp);
        S ci = c.inverse();
        r = r * a * b;
        r = r.scaled(ci * ci);
    }
    return r;
}

/// f(x) = Phi(x) Phi(-alpha) / Phi(x - alpha) with e^{alpha} = -y.
template <class C>
XQSeries<C> level_f_direct(const YContext<C>& Y, int qorder, int xorder) {
    const C my = C(Rational(0)) - Y.y;
    const XQSeries<C> num = phi_x_direct(Y, C(Rational(1)), qorder, xorder + 1);
    const XQSeries<C> den = phi_x_direct(Y, my, qorder, xorder + 1);
    return (num * den.inverse()).scaled(den.coeff(0)).truncated(xorder + 2);
}

// ---------------------------------------------------------------- Laurent views

using LaurentQSeries = std::vector<LaurentPoly>;

/// Converts a q-series over Q(y) with monomial denominators into Laurent polynomials.
inline LaurentQSeries to_laurent(const QSeries<RationalFunction>& s, int qorder) {
    LaurentQSeries out;
    for (int n = 0; n <= qorder; ++n) {
        auto l = LaurentPoly::from_rational_function(s.coeff(n));
        if (!l) throw NonDivisible("q^" + std::to_string(n) + " coefficient " + s.coeff(n).str("y") + " is not a Laurent polynomial");
        out.push_back(*l);
    }
    return out;
}

inline QSeries<RationalFunction> from_laurent(const LaurentQSeries& s) {
    std::vector<RationalFunction> v;
    for (auto& l : s) v.push_back(l.to_rational_function());
    return QSeries<RationalFunction>(v, 0, static_cast<int>(s.size()));
}

inline std::string laurent_qseries_str(const LaurentQSeries& s) {
    std::string out;
    for (std::size_t n = 0; n < s.size(); ++n) out += "q^" + std::to_string(n) + ": " + s[n].str() + "\n";
    return out;
}

// ---------------------------------------------------------------- chi_y(q, LX)

/// The full expansion phi(X) Phi(tau,-z)^d for an SU class X.
inline LaurentQSeries chi_y_loop(const ChernVector& X, int qorder) {
    if (!X.is_su()) throw NotSU("class has a nonzero Chern number containing c1");
    const auto Y = formal_y();
    const int d = X.dim();
    const auto spec = qx_of_phiell_product(Y, qorder, std::max(d, 1));
    QSeries<RationalFunction> v = spec.evaluate(X) * normalizer(Y, qorder).pow(d);
    return to_laurent(v.truncated(qorder + 1), qorder);
}

// ---------------------------------------------------------------- Weierstrass functions

inline Rational sigma_k(int n, int k) {
    Rational s;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) s += Rational(d).pow(k);
    return s;
}

/// The printed expansion of wp(tau, z) in q and y.
inline QSeries<RationalFunction> weierstrass_p(int qorder) {
    const RationalFunction y = RationalFunction::var(), one(Rational(1));
    const RationalFunction my = RationalFunction(Rational(0)) - y;
    std::vector<RationalFunction> v;
    v.push_back(RationalFunction(Rational(1, 12)) - y * ((one + y) * (one + y)).inverse());
    for (int n = 1; n <= qorder; ++n) {
        RationalFunction c = RationalFunction(Rational(-2) * sigma_k(n, 1));
        for (int dd = 1; dd <= n; ++dd) {
            if (n % dd != 0) continue;
            RationalFunction pw(Rational(1));
            for (int k = 0; k < dd; ++k) pw = pw * my;
            c = c + RationalFunction(Rational(dd)) * (pw + pw.inverse());
        }
        v.push_back(c);
    }
    return QSeries<RationalFunction>(v, 0, qorder + 1);
}

/// y d/dy on a rational function.
inline RationalFunction euler_derivative(const RationalFunction& f) {
    const UPoly& n = f.num();
    const UPoly& d = f.den();
    const UPoly x = UPoly::x();
    return RationalFunction(x * (n.derivative() * d - n * d.derivative()), d * d);
}

/// wp' as y d wp / dy.
inline QSeries<RationalFunction> weierstrass_p_prime(int qorder) {
    return weierstrass_p(qorder).map<RationalFunction>([](const RationalFunction& c) { return euler_derivative(c); });
}

/// g2 = E4 / 12 for the lattice 2 pi i (Z tau + Z).
inline QSeries<Rational> g2_series(int qorder) {
    return TruncatedSeries<Rational>::generate(qorder + 1, [](int n) {
        if (n == 0) return Rational(1, 12);
        return Rational(20) * sigma_k(n, 3);
    });
}

// ---------------------------------------------------------------- extraction of q_i

template <class C>
struct ExtractedQ {
    QuarticData<QSeries<C>> q;
    ABCDPoint<QSeries<C>> abcd;
};

/**
 * \brief Reads q1..q4 off (h')^2 = S(h) for h = f'/f of the product series.
 *
 * Remaining coefficients of the equation are checked and must vanish.
 */
template <class C>
ExtractedQ<C> extract_qi(const YContext<C>& Y, int qorder, int xorder = 10) {
    using S = QSeries<C>;
    using X = XQSeries<C>;
    const int qp = qorder + 1;
    const X L = log_q_product(Y, qorder, xorder);
    std::vector<S> hc;  // exponents -1, 0, ...
    hc.push_back(S(C(Rational(1)), qp));
    for (int n = 1; n <= xorder; ++n) hc.push_back(L.coeff(n).scaled(C(Rational(-n))));
    const X h(hc, -1, xorder);
    const X d = h.derivative();
    const X h2 = h * h, h3 = h2 * h, h4 = h2 * h2;
    X res = d * d - h4;
    std::array<S, 5> q;
    const std::array<const X*, 4> hp{&h3, &h2, &h, nullptr};
    for (int n = 1; n <= 4; ++n) {
        q[static_cast<std::size_t>(n)] = res.coeff(n - 4);
        if (n < 4)
            res = res - (*hp[static_cast<std::size_t>(n - 1)]).scaled(q[static_cast<std::size_t>(n)]);
        else
            res = res - X(std::vector<S>{q[4]}, 0, kExact);
    }
    for (int e = -4; e < res.prec(); ++e)
        if (!is_zero(res.coeff(e))) throw InconsistentSystem("equation fails at x^" + std::to_string(e));
    ExtractedQ<C> out;
    out.q = {q[1], q[2], q[3], q[4]};
    out.abcd = q_to_abcd(out.q);
    return out;
}

// ---------------------------------------------------------------- integrality

struct IntegralityReport {
    bool ok = true;
    int q_power = -1;
    int y_power = 0;
    Rational value;
};

inline IntegralityReport integrality_check(const LaurentQSeries& s) {
    for (std::size_t n = 0; n < s.size(); ++n)
        for (auto& [e, c] : s[n].terms())
            if (!c.is_integer()) return {false, static_cast<int>(n), e, c};
    return {};
}

}  // namespace ellgen

#endif
