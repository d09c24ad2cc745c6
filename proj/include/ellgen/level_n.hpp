#ifndef ELLGEN_LEVEL_N_HPP
#define ELLGEN_LEVEL_N_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "quotient_ring.hpp"
#include "rational_function.hpp"
#include "universal.hpp"

namespace ellgen {

/** \brief One extracted constraint beyond the two defining relations. */
struct ExtraConstraint {
    int x_power;   ///< Laurent exponent the constraint came from
    Poly value;    ///< in A..D
    bool in_ideal; ///< lies in the ideal of the two relations
};

/**
 * \brief Zolotarev data of level N.
 *
 * d[1..N] and d2N are polynomials in q1..q4; the relations are in A..D.
 */
struct LevelNData {
    int N = 0;
    int order = 0;
    std::vector<Poly> d;  ///< d[0] = 1
    Poly d2N;
    Poly R_minus;  ///< R_{N-1}
    Poly R_plus;   ///< R_{N+1}
    std::vector<ExtraConstraint> extra;

    HomogeneousIdeal ideal() const { return HomogeneousIdeal({R_minus, R_plus}, abcd_ids()); }
    bool extra_all_in_ideal() const {
        for (auto& e : extra)
            if (!e.in_ideal) return false;
        return true;
    }
};

namespace detail {

inline Poly coefficient(const TruncatedSeries<Poly>& s, int e) { return s.coeff(e); }

inline Poly monomial_power(const std::string& v, int e) {
    return Poly::term(Rational(1), e == 0 ? Monomial{} : Monomial{{var_id(v), e}});
}

}  // namespace detail

/**
 * \brief Expands P_N(h) - x^{-N} Q^N - d_{2N} x^N Q^{-N} and reads off d_i and the relations.
 *
 * `order` is the largest power of x inspected; it must be at least 2N+2.
 */
inline LevelNData compute_level_data(int N, int order) {
    if (N < 2) throw BadParams("level must be at least 2");
    if (order < 2 * N + 2) throw InsufficientOrder("level " + std::to_string(N) + " needs order >= " + std::to_string(2 * N + 2));
    using S = TruncatedSeries<Poly>;
    const int hord = order + N;
    const S h = solve_h(q_symbols(), hord);
    const S Q = q_of_h(h, hord);
    const S QN = Q.pow(N);
    const S QmN = QN.inverse();
    std::vector<S> H{S(Rational(1))};
    for (int j = 1; j <= N; ++j) H.push_back(H.back() * h);

    LevelNData out;
    out.N = N;
    out.order = order;
    out.d.assign(static_cast<std::size_t>(N + 1), Poly());
    out.d[0] = Poly(1);
    // E_m without the d_{2N} term
    auto base_coeff = [&](int m, int upto) {
        Poly v;
        for (int j = 0; j <= upto; ++j) v += out.d[static_cast<std::size_t>(j)] * H[static_cast<std::size_t>(N - j)].coeff_or_zero(m);
        return v - QN.coeff(m + N);
    };
    for (int k = 1; k <= N; ++k) out.d[static_cast<std::size_t>(k)] = -base_coeff(k - N, k - 1);
    out.d2N = base_coeff(N, N);

    auto to_abcd = [](const Poly& p) { return q_poly_to_abcd(p); };
    const int a = var_id("A");
    Poly rm = to_abcd(out.d[static_cast<std::size_t>(N - 1)]);
    const Rational lead = rm.coeff(Monomial{{a, N - 1}});
    if (lead.is_zero()) throw InconsistentSystem("R_{N-1} has no A^{N-1} term");
    out.R_minus = rm.scaled(lead.inverse());

    Poly rp = to_abcd(base_coeff(1, N));
    const Poly A2R = detail::monomial_power("A", 2) * out.R_minus;
    const Poly BR = vars::B() * out.R_minus;
    rp -= A2R.scaled(rp.coeff(Monomial{{a, N + 1}}));
    Monomial ab = N - 1 > 0 ? Monomial{{a, N - 1}, {var_id("B"), 1}} : Monomial{{var_id("B"), 1}};
    rp -= BR.scaled(rp.coeff(ab));
    if (rp.is_zero()) throw InconsistentSystem("R_{N+1} reduces to zero");
    out.R_plus = lex_monic(rp);

    const HomogeneousIdeal I = out.ideal();
    for (int m = 2; m <= order; ++m) {
        if (m == N) continue;
        Poly e = base_coeff(m, N);
        if (m > N) e -= out.d2N * QmN.coeff(m - N);
        Poly ea = to_abcd(e);
        out.extra.push_back({m, ea, I.contains(ea)});
    }
    return out;
}

/// Cached level data at the default order 2N+2.
inline const LevelNData& level_data(int N) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const LevelNData>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(N);
        if (it != cache.end()) return *it->second;
    }
    auto p = std::make_shared<const LevelNData>(compute_level_data(N, 2 * N + 2));
    std::lock_guard<std::mutex> lock(mu);
    return *cache.emplace(N, p).first->second;
}

/// res_A(R_{N-1}, R_{N+1}) in Q[B,C,D].
inline Poly eliminate(const LevelNData& data) { return resultant_in(data.R_minus, data.R_plus, "A"); }

/// Coefficients in y^k of S(y) P_N'(y)^2 - N^2 y^2 (P_N(y)^2 - 4 d_{2N}), in A..D.
inline std::vector<Poly> zolotarev_relation_defect(const LevelNData& data) {
    const int N = data.N;
    // polynomials in y as coefficient vectors
    using V = std::vector<Poly>;
    auto mul = [](const V& x, const V& y) {
        V r(x.size() + y.size() - 1);
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
        return r;
    };
    V P(static_cast<std::size_t>(N + 1));
    for (int k = 0; k <= N; ++k) P[static_cast<std::size_t>(N - k)] = data.d[static_cast<std::size_t>(k)];
    V dP(static_cast<std::size_t>(N));
    for (int k = 1; k <= N; ++k) dP[static_cast<std::size_t>(k - 1)] = P[static_cast<std::size_t>(k)] * Poly(k);
    const auto qs = q_symbols();
    V Sy{qs.q4, qs.q3, qs.q2, qs.q1, Poly(1)};
    V lhs = mul(Sy, mul(dP, dP));
    V P2 = mul(P, P);
    P2[0] -= data.d2N * Poly(4);
    V rhs(P2.size() + 2);
    for (std::size_t i = 0; i < P2.size(); ++i) rhs[i + 2] = P2[i] * Poly(N * N);
    V out(std::max(lhs.size(), rhs.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        Poly v;
        if (i < lhs.size()) v += lhs[i];
        if (i < rhs.size()) v -= rhs[i];
        out[i] = q_poly_to_abcd(v);
    }
    return out;
}

/** \brief Weighted polynomial ring modulo a homogeneous ideal, given by weights and generator degrees. */
struct GradedIdealPresentation {
    std::vector<int> weights;
    std::vector<int> degrees;
    bool regular_sequence = true;
};

inline UPoly one_minus_t_pow(int d) { return UPoly(1) - UPoly::monomial(Rational(1), d); }

/// prod(1 - t^{r_j}) / prod(1 - t^{d_i}).
inline RationalFunction poincare_series(const GradedIdealPresentation& p) {
    if (!p.regular_sequence) throw BadParams("closed form needs a regular sequence");
    UPoly num(1), den(1);
    for (int r : p.degrees) num *= one_minus_t_pow(r);
    for (int d : p.weights) den *= one_minus_t_pow(d);
    return RationalFunction(num, den);
}

/// Q~(1) for Q~(t) = P(t) (1-t)^kdim prod_i (1 + t + ... + t^{d_i - 1}).
inline Rational degree_h0(const RationalFunction& P, const std::vector<int>& weights, int kdim) {
    UPoly m = one_minus_t_pow(1).pow(kdim);
    for (int d : weights) {
        UPoly s;
        for (int l = 0; l < d; ++l) s += UPoly::monomial(Rational(1), l);
        m *= s;
    }
    const RationalFunction q = P * RationalFunction(m);
    if (q.order_at(Rational(1)) != 0)
        throw WrongPoleOrder("Krull dimension " + std::to_string(kdim) + " does not match the pole order at t = 1");
    return q.eval(Rational(1));
}

inline Rational degree_h0(const GradedIdealPresentation& p) {
    const int kdim = static_cast<int>(p.weights.size()) - static_cast<int>(p.degrees.size());
    return degree_h0(poincare_series(p), p.weights, kdim);
}

/// The presentation of <R_{N-1}, R_{N+1}> in weights 1..4.
inline GradedIdealPresentation level_presentation(int N) { return {{1, 2, 3, 4}, {N - 1, N + 1}, true}; }
/// The eliminant presentation in Q[B,C,D].
inline GradedIdealPresentation eliminant_presentation(int N) { return {{2, 3, 4}, {N * N - 1}, true}; }

/** \brief Cusp points of level N. */
struct CuspPoints {
    std::vector<ABCDPoint<Rational>> type_i;  ///< k = 1..N-1
    std::shared_ptr<const QuotientRing> ring;
    ABCDPoint<QElem> type_ii;  ///< generic primitive root, over Q[y]/Phi_N(-y)
};

/// Type-(ii') cusp point over any ring containing y with 1+y invertible.
template <class R>
ABCDPoint<R> cusp_ii_point(const R& y) {
    const R one(Rational(1));
    const R inv = R(one + y).inverse();
    const R inv2 = inv * inv;
    return {(one - y) * inv, R(Rational(2)) * (y * y - R(Rational(10)) * y + one) * inv2, y * (y - one) * inv2 * inv,
            y * (-(y * y) + R(Rational(4)) * y - one) * inv2 * inv2};
}

inline CuspPoints cusp_points(int N) {
    if (N < 2) throw BadParams("level must be at least 2");
    CuspPoints c;
    for (int k = 1; k < N; ++k) c.type_i.push_back(points::chi_KkN(Rational(k), Rational(N)));
    c.ring = QuotientRing::cyclotomic_minus_y(N);
    c.type_ii = cusp_ii_point(QElem::gen(c.ring));
    return c;
}

template <class R>
R eval_abcd(const Poly& p, const ABCDPoint<R>& pt) {
    const int a = var_id("A"), b = var_id("B"), c = var_id("C"), d = var_id("D");
    return p.eval<R>([&](int id) -> R {
        if (id == a) return pt.A;
        if (id == b) return pt.B;
        if (id == c) return pt.C;
        if (id == d) return pt.D;
        throw VariableNotPresent("unexpected variable " + VariableRegistry::instance().name(id));
    });
}

/// T_{N-1} in Q[A,B].
inline Poly t_poly(int N) {
    if (N < 2) throw BadParams("level must be at least 2");
    const Poly A = vars::A(), B = vars::B();
    Poly r = (N % 2 == 0) ? A : Poly(1);
    const int top = (N % 2 == 0) ? N / 2 - 1 : N / 2;
    for (int k = 1; k <= top; ++k) {
        const Rational s = Rational(1, 2) - Rational(k, N);
        r = r * (A * A - B.scaled(Rational(2) * s * s));
    }
    return r;
}

struct KernelResult {
    bool in_kernel;
    Poly reduced;
};

/// Reduces the value of phi_tilde_N or a_tilde_N on X and tests whether it vanishes.
inline KernelResult kernel_membership(const std::string& name, const ChernVector& X, int N) {
    const int order = std::max(X.dim(), 1);
    if (name == "phi_tilde_N") {
        const Poly v = phi_ell(std::max(order, 12)).evaluate(X);
        const Poly r = level_data(N).ideal().normal_form(v);
        return {r.is_zero(), r};
    }
    if (name == "a_tilde_N") {
        const Poly v = a_tilde(std::max(order, 12)).evaluate(X);
        const HomogeneousIdeal I({t_poly(N)}, {var_id("A"), var_id("B")});
        const Poly r = I.normal_form(v);
        return {r.is_zero(), r};
    }
    throw UnknownName("genus '" + name + "'");
}

/// delta and epsilon of level 2 to q^qorder.
inline std::pair<TruncatedSeries<Rational>, TruncatedSeries<Rational>> level2_modular_forms(int qorder) {
    if (qorder < 0) throw BadParams("negative q order");
    const int p = qorder + 1;
    auto delta = TruncatedSeries<Rational>::generate(p, [](int n) {
        if (n == 0) return Rational(1, 4);
        long s = 0;
        for (int d = 1; d <= n; d += 2)
            if (n % d == 0) s += d;
        return Rational(6 * s);
    });
    using S = TruncatedSeries<Rational>;
    S prod(Rational(1));
    prod = prod.truncated(p);
    for (int n = 1; n < p; ++n) {
        S num = S(Rational(1)).truncated(p) - S::monomial(Rational(1), n, p);
        S den = S(Rational(1)).truncated(p) + S::monomial(Rational(1), n, p);
        prod = prod * num * den.inverse();
    }
    S eps = prod.pow(8).scaled(Rational(1, 16));
    return {delta, eps};
}

}  // namespace ellgen

#endif
