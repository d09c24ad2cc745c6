#ifndef ELLGEN_BLOWUP_HPP
#define ELLGEN_BLOWUP_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jacobi.hpp"

namespace ellgen {

/// Exact polynomial in several variables; exponent vectors all have the same length.
template <class R>
using MPoly = std::map<std::vector<int>, R>;

namespace mpoly {

template <class R>
void add_term(MPoly<R>& p, const std::vector<int>& e, const R& c) {
    if (detail::value_is_zero(c)) return;
    auto it = p.find(e);
    if (it == p.end()) {
        p.emplace(e, c);
        return;
    }
    it->second = it->second + c;
    if (detail::value_is_zero(it->second)) p.erase(it);
}

template <class R>
MPoly<R> mul(const MPoly<R>& a, const MPoly<R>& b) {
    MPoly<R> r;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            add_term(r, e, ca * cb);
        }
    return r;
}

template <class R>
MPoly<R> scaled(const MPoly<R>& a, const R& s) {
    MPoly<R> r;
    for (auto& [e, c] : a) add_term(r, e, c * s);
    return r;
}

/// x_b - x_a in n variables.
template <class R>
MPoly<R> difference(int n, int b, int a) {
    MPoly<R> r;
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(b)] = 1;
    add_term(r, e, R(Rational(1)));
    e[static_cast<std::size_t>(b)] = 0;
    e[static_cast<std::size_t>(a)] = 1;
    add_term(r, e, R(Rational(-1)));
    return r;
}

/// prod_{a<b, a,b >= from} (x_b - x_a).
template <class R>
MPoly<R> vandermonde(int n, int from = 0) {
    MPoly<R> r{{std::vector<int>(static_cast<std::size_t>(n), 0), R(Rational(1))}};
    for (int b = from; b < n; ++b)
        for (int a = from; a < b; ++a) r = mul(r, difference<R>(n, b, a));
    return r;
}

/// Exact quotient by x_i - x_j; throws NonDivisible on a remainder.
template <class R>
MPoly<R> divide_by_difference(MPoly<R> p, int i, int j) {
    MPoly<R> q;
    const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
    while (!p.empty()) {
        // term of largest x_i exponent
        auto best = p.begin();
        for (auto it = p.begin(); it != p.end(); ++it)
            if (it->first[ui] > best->first[ui]) best = it;
        if (best->first[ui] == 0) throw NonDivisible("polynomial not divisible by x" + std::to_string(i + 1) + " - x" + std::to_string(j + 1));
        std::vector<int> e = best->first;
        const R c = best->second;
        e[ui] -= 1;
        add_term(q, e, c);
        add_term(p, best->first, R(Rational(0)) - c);
        std::vector<int> f = e;
        f[uj] += 1;
        add_term(p, f, c);
    }
    return q;
}

template <class R>
MPoly<R> permuted(const MPoly<R>& p, const std::vector<int>& sigma) {
    MPoly<R> r;
    for (auto& [e, c] : p) {
        std::vector<int> f(e.size());
        for (std::size_t k = 0; k < e.size(); ++k) f[static_cast<std::size_t>(sigma[k])] = e[k];
        add_term(r, f, c);
    }
    return r;
}

inline int permutation_sign(const std::vector<int>& s) {
    int inv = 0;
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            if (s[a] > s[b]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

/// Homogeneous part of total degree k.
template <class R>
MPoly<R> homogeneous_part(const MPoly<R>& p, int k) {
    MPoly<R> r;
    for (auto& [e, c] : p)
        if (std::accumulate(e.begin(), e.end(), 0) == k) r.emplace(e, c);
    return r;
}

template <class R>
MPoly<R> from_mseries(const MSeries<R>& s) {
    MPoly<R> r;
    for (auto& [e, c] : s.terms()) r.emplace(e, c);
    return r;
}

}  // namespace mpoly

/**
 * \brief Pushforward along the flag bundle of the normal bundle to the center.
 *
 * t is a polynomial in the roots x_1..x_q, symmetric in x_2..x_q. Returns
 * (1/(q-1)!) sum_sigma sign(sigma) sigma(V' t) / V with V' the Vandermonde of x_2..x_q.
 */
template <class R>
MPoly<R> flag_pushforward(const MPoly<R>& t, int q) {
    if (q < 1) throw BadParams("codimension must be positive");
    const MPoly<R> vp = mpoly::vandermonde<R>(q, 1);
    const MPoly<R> base = mpoly::mul(vp, t);
    std::vector<int> sigma(static_cast<std::size_t>(q));
    std::iota(sigma.begin(), sigma.end(), 0);
    MPoly<R> anti;
    do {
        const R s(Rational(mpoly::permutation_sign(sigma)));
        for (auto& [e, c] : mpoly::permuted(base, sigma)) mpoly::add_term(anti, e, c * s);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    for (int b = 1; b < q; ++b)
        for (int a = 0; a < b; ++a) anti = mpoly::divide_by_difference(anti, b, a);
    return mpoly::scaled(anti, R(factorial(q - 1).inverse()));
}

/// sum_i t(x_i, others) / prod_{j != i}(x_j - x_i), evaluated at distinct rational points.
template <class R>
R residue_sum(const MPoly<R>& t, const std::vector<Rational>& x) {
    const int q = static_cast<int>(x.size());
    R total(Rational(0));
    for (int i = 0; i < q; ++i) {
        // move x_i to the first slot
        std::vector<Rational> pt{x[static_cast<std::size_t>(i)]};
        for (int j = 0; j < q; ++j)
            if (j != i) pt.push_back(x[static_cast<std::size_t>(j)]);
        R v(Rational(0));
        for (auto& [e, c] : t) {
            Rational m(1);
            for (int k = 0; k < q; ++k) m *= pt[static_cast<std::size_t>(k)].pow(e[static_cast<std::size_t>(k)]);
            v = v + c * R(m);
        }
        Rational den(1);
        for (int j = 0; j < q; ++j)
            if (j != i) den *= x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(i)];
        if (den.is_zero()) throw DegenerateSample("sample points must be pairwise distinct");
        total = total + v * R(den.inverse());
    }
    return total;
}

template <class R>
R evaluate_mpoly(const MPoly<R>& t, const std::vector<Rational>& x) {
    R v(Rational(0));
    for (auto& [e, c] : t) {
        Rational m(1);
        for (std::size_t k = 0; k < x.size(); ++k) m *= x[k].pow(e[k]);
        v = v + c * R(m);
    }
    return v;
}

/**
 * \brief A blow-up along a center Y with normal bundle split into the given roots.
 */
template <class R>
struct BlowupInput {
    CohomologyModel center;
    std::vector<CohomologyModel::Element> roots;
    GenusSpec<R> genus;
};

/// The integrand (Q(x1)/x1)(prod_{i>=2} Q(x_i - x1) - prod_{i>=2} Q(x_i)) to total degree `total`.
template <class R>
MPoly<R> defect_integrand(const TruncatedSeries<R>& Q, int q, int total) {
    const std::vector<int> caps(static_cast<std::size_t>(q), total + 1);
    using M = MSeries<R>;
    const M x1 = M::var(0, caps, total + 1);
    M a = M::constant(R(Rational(1)), caps, total + 1), b = a;
    for (int i = 1; i < q; ++i) {
        const M xi = M::var(i, caps, total + 1);
        a = a * (xi - x1).compose_into(Q);
        b = b * xi.compose_into(Q);
    }
    MPoly<R> diff = mpoly::from_mseries(a - b);
    MPoly<R> quot;
    for (auto& [e, c] : diff) {
        if (e[0] == 0) throw NonDivisible("defect integrand not divisible by x1");
        std::vector<int> f = e;
        f[0] -= 1;
        quot.emplace(f, c);
    }
    MPoly<R> qx1 = mpoly::from_mseries(x1.compose_into(Q));
    MPoly<R> r;
    for (auto& [e, c] : mpoly::mul(quot, qx1))
        if (std::accumulate(e.begin(), e.end(), 0) <= total) r.emplace(e, c);
    return r;
}

/**
 * \brief phi(blow-up) - phi(X), computed over the center.
 */
template <class R>
R genus_defect(const BlowupInput<R>& in) {
    const CohomologyModel& Y = in.center;
    const int q = static_cast<int>(in.roots.size());
    const int dy = Y.dim();
    if (q < 1) throw BadParams("codimension must be positive");
    if (in.genus.order() < dy + q) throw InsufficientOrder("genus order must be at least dim Y + codim");
    for (auto& r : in.roots)
        if (!(Y.component(r, 1) == r)) throw BadParams("normal bundle roots must be degree-one classes");
    const int total = dy + q - 1;
    const MPoly<R> integrand = defect_integrand(in.genus.Q(), q, total);
    const MPoly<R> pushed = flag_pushforward(integrand, q);

    // root monomials of each degree, as rational classes
    std::map<std::vector<int>, CohomologyModel::Element> mono;
    for (auto& [e, c] : pushed) {
        if (mono.count(e)) continue;
        CohomologyModel::Element m = Y.one();
        for (int i = 0; i < q; ++i) m = Y.mul(m, Y.power(in.roots[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)]));
        mono.emplace(e, m);
    }
    std::vector<CohomologyModel::Element> ck;
    for (int k = 0; k <= dy; ++k) ck.push_back(Y.chern_class(k));

    R total_value(Rational(0));
    for (auto& [e, c] : pushed) {
        const int m = std::accumulate(e.begin(), e.end(), 0);
        if (m > dy) continue;
        for (auto& [part, kc] : in.genus.K(dy - m)) {
            CohomologyModel::Element cls = mono.at(e);
            for (int p : part.parts()) cls = Y.mul(cls, ck[static_cast<std::size_t>(p)]);
            const Rational v = Y.integrate(cls);
            if (!v.is_zero()) total_value = total_value + c * kc * R(v);
        }
    }
    return total_value;
}

/// sum_i prod_{j != i} x_j / (x_j - x_i) == 1.
inline bool verify_rational_identity(const std::vector<Rational>& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (x[i] == x[j]) throw DegenerateSample("sample points must be pairwise distinct");
    Rational s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        Rational p(1);
        for (std::size_t j = 0; j < x.size(); ++j)
            if (j != i) p *= x[j] / (x[j] - x[i]);
        s += p;
    }
    return s == Rational(1);
}

/// Result of a series identity check; on failure carries the first nonzero coefficient.
struct IdentityReport {
    bool vanishes = true;
    std::vector<int> exponent;
    std::string coefficient;
};

/**
 * \brief sum_i (1/f(x_i)) prod_{j != i} 1/f(x_j - x_i) - prod_i 1/f(x_i) for the level-N series.
 *
 * Cleared of denominators by prod x_k times the Vandermonde, then expanded to
 * x-degree xorder per variable and q-order qorder.
 */
inline IdentityReport verify_elliptic_identity(int N, int q, int qorder, int xorder) {
    if (N < 2 || q < 1) throw BadParams("need N >= 2 and q >= 1");
    const auto Y = cyclotomic_y(N);
    using C = QSeries<QElem>;
    using M = MSeries<C>;
    const std::vector<int> caps(static_cast<std::size_t>(q), xorder);
    const int total = q * xorder;
    const XQSeries<QElem> Q = q_product_series(Y, qorder, total + 1);

    auto to_m = [&](const MPoly<C>& p) {
        M r(caps, total);
        for (auto& [e, c] : p) r.add_term(e, c);
        return r;
    };
    std::vector<M> x, qx;
    for (int i = 0; i < q; ++i) {
        x.push_back(M::var(i, caps, total));
        qx.push_back(x.back().compose_into(Q));
    }
    M sum(caps, total);
    for (int i = 0; i < q; ++i) {
        M term = qx[static_cast<std::size_t>(i)];
        for (int j = 0; j < q; ++j)
            if (j != i) term = term * (x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(i)]).compose_into(Q) * x[static_cast<std::size_t>(j)];
        // Vandermonde without index i, in the remaining variables
        MPoly<C> v{{std::vector<int>(static_cast<std::size_t>(q), 0), C(Rational(1))}};
        for (int b = 0; b < q; ++b)
            for (int a = 0; a < b; ++a)
                if (a != i && b != i) v = mpoly::mul(v, mpoly::difference<C>(q, b, a));
        term = term * to_m(v);
        sum = (i % 2 == 0) ? sum + term : sum - term;
    }
    M last = to_m(mpoly::vandermonde<C>(q));
    for (int i = 0; i < q; ++i) last = last * qx[static_cast<std::size_t>(i)];
    const M diff = sum - last;
    IdentityReport rep;
    if (auto t = diff.first_term()) {
        rep.vanishes = false;
        rep.exponent = t->first;
        rep.coefficient = t->second.str("q");
    }
    return rep;
}

/// One center/genus combination in a blow-up invariance report.
struct BlowupCase {
    std::string label;
    int N = 0;
    int codim = 0;
    bool hypothesis = false;  // codim == 1 mod N
    bool defect_zero = false;
    std::string defect;
};

inline CohomologyModel::Element hyperplane_multiple(const CohomologyModel& Y, int k) {
    if (Y.degree_one_basis().empty()) return Y.zero();
    return Y.line_class({Rational(k)});
}

/**
 * \brief Defect of the level-N q-series genus for a center with normal roots given as hyperplane multiples.
 */
inline BlowupCase level_defect_case(int N, const std::string& center_name, const CohomologyModel& Y, const std::vector<int>& root_multiples, int qorder) {
    const int q = static_cast<int>(root_multiples.size());
    const auto spec = qx_of_phiell_product(cyclotomic_y(N), qorder, Y.dim() + q);
    BlowupInput<QSeries<QElem>> in{Y, {}, spec};
    for (int k : root_multiples) in.roots.push_back(hyperplane_multiple(Y, k));
    const auto d = genus_defect(in);
    BlowupCase c;
    c.label = center_name + ", codim " + std::to_string(q);
    c.N = N;
    c.codim = q;
    c.hypothesis = (q - 1) % N == 0;
    c.defect_zero = is_zero(d);
    c.defect = d.str("q");
    return c;
}

/// The standard examples: point and CP1 centers with N=2, codim 3; a point with N=3, codim 4; CP2 with N=2, codim 2 as a control.
inline std::vector<BlowupCase> verify_blowup_invariance(int qorder = 2) {
    std::vector<BlowupCase> out;
    out.push_back(level_defect_case(2, "point", point_model(), {0, 0, 0}, qorder));
    out.push_back(level_defect_case(2, "CP1", cp_model(1), {1, 1, 1}, qorder));
    out.push_back(level_defect_case(3, "point", point_model(), {0, 0, 0, 0}, qorder));
    out.push_back(level_defect_case(2, "CP2", cp_model(2), {1, 1}, qorder));
    return out;
}

}  // namespace ellgen

#endif
