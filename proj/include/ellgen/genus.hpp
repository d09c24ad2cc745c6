#ifndef ELLGEN_GENUS_HPP
#define ELLGEN_GENUS_HPP

#include <string>
#include <utility>
#include <vector>

#include "cohomology.hpp"
#include "laurent_poly.hpp"
#include "mseries.hpp"
#include "series.hpp"

namespace ellgen {

/// y values at which chi_y becomes the Euler characteristic and the signature.
inline const Rational EULER_POINT(-1);
inline const Rational SIGNATURE_POINT(1);

/**
 * \brief A genus given by its characteristic series Q(x) = 1 + a1 x + ...
 *
 * Log coefficients and the multiplicative sequence K_0..K_order are computed
 * at construction.
 */
template <class R>
class GenusSpec {
public:
    GenusSpec() = default;
    GenusSpec(TruncatedSeries<R> q, int order) : order_(order) {
        if (order < 0) throw BadParams("negative genus order");
        if (q.prec() <= order) throw InsufficientOrder("characteristic series known below x^" + std::to_string(q.prec()) + ", need " + std::to_string(order + 1));
        if (q.valuation() != 0 || !(q.coeff(0) == R(Rational(1)))) throw BadParams("characteristic series must start with 1");
        q_ = q.truncated(order + 1);
        TruncatedSeries<R> lg = q_.log();
        ell_.assign(static_cast<std::size_t>(order + 1), R(Rational(0)));
        for (int m = 1; m <= order; ++m) ell_[static_cast<std::size_t>(m)] = lg.coeff_or_zero(m);
        build_sequence();
    }

    int order() const { return order_; }
    const TruncatedSeries<R>& Q() const { return q_; }
    R a(int n) const { return q_.coeff(n); }
    /// Coefficient of x^m in log Q(x).
    const R& ell(int m) const { return ell_.at(static_cast<std::size_t>(m)); }
    /// K_m as a polynomial in Chern classes.
    const ChernPoly<R>& K(int m) const {
        if (m < 0 || m > order_) throw InsufficientOrder("K_" + std::to_string(m) + " beyond order " + std::to_string(order_));
        return k_[static_cast<std::size_t>(m)];
    }

    /// f(x) = x / Q(x).
    TruncatedSeries<R> f() const { return q_.inverse().shifted(1); }
    /// Logarithm g = f^{-1}.
    TruncatedSeries<R> log_series() const { return f().reversion(); }

    R evaluate(const ChernVector& x) const {
        if (x.dim() > order_) throw DimensionMismatch("genus known to order " + std::to_string(order_) + ", class has dimension " + std::to_string(x.dim()));
        return evaluate_on(k_[static_cast<std::size_t>(x.dim())], x);
    }
    R evaluate(const CohomologyModel& m) const { return evaluate(m.chern_vector()); }
    R evaluate(const ManifoldClass& m) const { return evaluate(m.cv); }

    /// Coefficient-wise image under a ring map R -> S.
    template <class S, class F>
    GenusSpec<S> map(F&& fn) const {
        return GenusSpec<S>(q_.template map<S>(fn), order_);
    }

private:
    void build_sequence() {
        const auto p = newton_power_sums(order_);
        std::vector<ChernPoly<R>> L(static_cast<std::size_t>(order_ + 1));
        for (int m = 1; m <= order_; ++m) {
            const R& l = ell_[static_cast<std::size_t>(m)];
            if (is_zero(l)) continue;
            for (auto& [part, c] : p[static_cast<std::size_t>(m)]) L[static_cast<std::size_t>(m)].emplace(part, l * R(c));
        }
        k_.assign(static_cast<std::size_t>(order_ + 1), ChernPoly<R>{});
        k_[0] = ChernPoly<R>{{Partition(), R(Rational(1))}};
        for (int n = 1; n <= order_; ++n) {
            ChernPoly<R> acc;
            for (int m = 1; m <= n; ++m) {
                if (L[static_cast<std::size_t>(m)].empty()) continue;
                chern_add_into(acc, chern_mul(L[static_cast<std::size_t>(m)], k_[static_cast<std::size_t>(n - m)], n), R(Rational(m, n)));
            }
            k_[static_cast<std::size_t>(n)] = std::move(acc);
        }
    }

    int order_ = 0;
    TruncatedSeries<R> q_;
    std::vector<R> ell_;
    std::vector<ChernPoly<R>> k_;
};

template <class R>
ChernPoly<R> multiplicative_sequence(const GenusSpec<R>& spec, int n) {
    return spec.K(n);
}

template <class R, class X>
R evaluate(const GenusSpec<R>& spec, const X& x) {
    return spec.evaluate(x);
}

/// Genus whose logarithm is g.
template <class R>
GenusSpec<R> genus_from_log(const TruncatedSeries<R>& g, int order) {
    if (g.valuation() != 1) throw BadValuation("logarithm must have valuation 1");
    TruncatedSeries<R> gt = g.is_exact() ? g.truncated(order + 2) : g;
    TruncatedSeries<R> f = gt.reversion();
    return GenusSpec<R>(f.shifted(-1).inverse(), order);
}

/// F(u, v) = f(g(u) + g(v)) with total degree cap `order`.
template <class R>
MSeries<R> formal_group_law(const GenusSpec<R>& spec, int order) {
    if (spec.order() + 1 < order) throw InsufficientOrder("genus order too small for the formal group law");
    const std::vector<int> caps{order, order};
    TruncatedSeries<R> f = spec.f().truncated(order + 1);
    TruncatedSeries<R> g = f.reversion();
    MSeries<R> u = MSeries<R>::var(0, caps, order), v = MSeries<R>::var(1, caps, order);
    return (u.compose_into(g) + v.compose_into(g)).compose_into(f);
}

namespace series_lib {

/// sum_{k<p} c_k x^k from a rational coefficient function.
template <class F>
TruncatedSeries<Rational> rational_series(int p, F&& coef) {
    return TruncatedSeries<Rational>::generate(p, [&](int k) { return coef(k); });
}

/// x / (1 - e^{-x})
inline TruncatedSeries<Rational> todd_series(int p) {
    auto d = rational_series(p, [](int k) {
        Rational v = factorial(k + 1).inverse();
        return k % 2 == 0 ? v : -v;
    });
    return d.inverse();
}

/// x / tanh(x)
inline TruncatedSeries<Rational> signature_series(int p) {
    auto ch = rational_series(p, [](int k) { return k % 2 == 0 ? factorial(k).inverse() : Rational(0); });
    auto sh = rational_series(p, [](int k) { return k % 2 == 0 ? factorial(k + 1).inverse() : Rational(0); });
    return ch * sh.inverse();
}

/// (x/2) / sinh(x/2)
inline TruncatedSeries<Rational> a_hat_series(int p) {
    auto sh = rational_series(p, [](int k) {
        return k % 2 == 0 ? (factorial(k + 1) * Rational(2).pow(k)).inverse() : Rational(0);
    });
    return sh.inverse();
}

}  // namespace series_lib

/// chi_y series x(1 + y e^{-x(1+y)}) / (1 - e^{-x(1+y)}) over Q[y].
inline GenusSpec<LaurentPoly> chi_y_genus(int order) {
    auto t = series_lib::todd_series(order + 1);
    const LaurentPoly y = LaurentPoly::var(), one_y = LaurentPoly(1) + y;
    std::vector<LaurentPoly> c;
    LaurentPoly pw(1);
    for (int k = 0; k <= order; ++k) {
        LaurentPoly v = pw * LaurentPoly(t.coeff(k));
        if (k == 1) v -= y;
        c.push_back(v);
        pw *= one_y;
    }
    return GenusSpec<LaurentPoly>(TruncatedSeries<LaurentPoly>(c, 0, order + 1), order);
}

/// Substitutes a rational value for y.
inline GenusSpec<Rational> at_y(const GenusSpec<LaurentPoly>& g, const Rational& y) {
    return g.map<Rational>([&](const LaurentPoly& p) { return p.eval(y); });
}

/**
 * \brief Classical genera over the rationals.
 *
 * Names: todd, signature, a_hat, euler, chi_KkN (params {k, N}).
 */
inline GenusSpec<Rational> classical_genus(const std::string& name, int order, const std::vector<Rational>& params = {}) {
    const int p = order + 1;
    if (name == "todd") return GenusSpec<Rational>(series_lib::todd_series(p), order);
    if (name == "signature") return GenusSpec<Rational>(series_lib::signature_series(p), order);
    if (name == "a_hat") return GenusSpec<Rational>(series_lib::a_hat_series(p), order);
    if (name == "euler") return GenusSpec<Rational>(TruncatedSeries<Rational>({Rational(1), Rational(1)}, 0, p), order);
    if (name == "chi_KkN") {
        if (params.size() != 2 || params[1].is_zero()) throw BadParams("chi_KkN needs parameters k and N != 0");
        const Rational s = -params[0] / params[1];
        return GenusSpec<Rational>(series_lib::todd_series(p) * exp_linear(s, p), order);
    }
    throw UnknownName("genus '" + name + "'");
}

}  // namespace ellgen

#endif
