#ifndef ELLGEN_POLY_ALGEBRA_HPP
#define ELLGEN_POLY_ALGEBRA_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weighted_poly.hpp"

namespace ellgen {

/// Exact multivariate division; throws NonDivisible on a nonzero remainder.
inline Poly divide_exact(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (den.is_constant()) return num.scaled(den.constant_term().inverse());
    auto [dm, dc] = den.lex_leading();
    const Rational dinv = dc.inverse();
    Poly rem = num, quot;
    while (!rem.is_zero()) {
        auto [rm, rc] = rem.lex_leading();
        for (auto& [v, de] : dm)
            if (mono_exp(rm, v) < de) throw NonDivisible(num.str() + " by " + den.str());
        Monomial qm;
        for (auto& [v, e] : rm) {
            const int r = e - mono_exp(dm, v);
            if (r > 0) qm.emplace_back(v, r);
        }
        Poly t = Poly::term(rc * dinv, qm);
        quot += t;
        rem -= t * den;
    }
    return quot;
}

/// Sylvester resultant of p and q with respect to `var`, by fraction-free Bareiss elimination.
inline Poly resultant_in(const Poly& p, const Poly& q, const std::string& var) {
    const auto id = VariableRegistry::instance().find(var);
    if (!id || (!p.contains_var(*id) && !q.contains_var(*id)))
        throw VariableNotPresent("variable '" + var + "' occurs in neither polynomial");
    const int m = p.degree_in(*id), n = q.degree_in(*id);
    if (m == 0) return p.pow(n);
    if (n == 0) return q.pow(m);
    const int sz = m + n;
    std::vector<std::vector<Poly>> M(static_cast<std::size_t>(sz), std::vector<Poly>(static_cast<std::size_t>(sz)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) M[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = p.coeff_of(*id, m - k);
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) M[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = q.coeff_of(*id, n - k);

    int sign = 1;
    Poly prev(1);
    for (int k = 0; k < sz - 1; ++k) {
        auto K = static_cast<std::size_t>(k);
        if (M[K][K].is_zero()) {
            std::size_t piv = K + 1;
            while (piv < static_cast<std::size_t>(sz) && M[piv][K].is_zero()) ++piv;
            if (piv == static_cast<std::size_t>(sz)) return Poly();
            std::swap(M[K], M[piv]);
            sign = -sign;
        }
        for (std::size_t i = K + 1; i < static_cast<std::size_t>(sz); ++i) {
            for (std::size_t j = K + 1; j < static_cast<std::size_t>(sz); ++j) {
                Poly v = M[K][K] * M[i][j] - M[i][K] * M[K][j];
                M[i][j] = divide_exact(v, prev);
            }
            M[i][K] = Poly();
        }
        prev = M[K][K];
    }
    Poly det = M[static_cast<std::size_t>(sz - 1)][static_cast<std::size_t>(sz - 1)];
    return sign < 0 ? -det : det;
}

/// All monomials in `ids` of exact weight w.
inline std::vector<Monomial> monomials_of_weight(const std::vector<int>& ids, int w) {
    std::vector<Monomial> out;
    Monomial cur;
    auto& reg = VariableRegistry::instance();
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rest) {
        if (i == ids.size()) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        const int wt = reg.weight(ids[i]);
        for (int e = rest / wt; e >= 0; --e) {
            if (e > 0) cur.emplace_back(ids[i], e);
            rec(i + 1, rest - e * wt);
            if (e > 0) cur.pop_back();
        }
    };
    if (w >= 0) rec(0, w);
    return out;
}

/**
 * \brief Degree-wise normal forms modulo a homogeneous ideal.
 *
 * The weight-w piece of the ideal is spanned by monomial multiples of the
 * generators; it is row reduced with lex-descending pivots, which makes the
 * normal form of any weight-w polynomial canonical.
 */
class HomogeneousIdeal {
public:
    HomogeneousIdeal(std::vector<Poly> gens, std::vector<int> ambient_ids)
        : gens_(std::move(gens)), ids_(std::move(ambient_ids)) {
        std::sort(ids_.begin(), ids_.end());
        for (auto& g : gens_) g.weight_or_throw();
    }

    const std::vector<Poly>& generators() const { return gens_; }

    /// Canonical representative of p modulo the ideal (p homogeneous).
    Poly normal_form(const Poly& p) const {
        if (p.is_zero()) return p;
        const int w = p.weight_or_throw();
        const auto& basis = reduced_basis(w);
        Poly r = p;
        for (auto& [lead, row] : basis) {
            const Rational c = r.coeff(lead);
            if (!c.is_zero()) r -= row.scaled(c);
        }
        return r;
    }

    bool contains(const Poly& p) const { return normal_form(p).is_zero(); }

    /// Dimension of the weight-w piece of the ideal.
    std::size_t dimension(int w) const { return reduced_basis(w).size(); }

    /// Reduced echelon basis of the weight-w piece as (pivot monomial, row with pivot coefficient 1).
    const std::vector<std::pair<Monomial, Poly>>& reduced_basis(int w) const {
        auto it = cache_.find(w);
        if (it != cache_.end()) return it->second;
        std::vector<Poly> rows;
        for (auto& g : gens_) {
            const int gw = g.weight_or_throw();
            if (g.is_zero() || gw > w) continue;
            for (auto& m : monomials_of_weight(ids_, w - gw)) rows.push_back(Poly::term(Rational(1), m) * g);
        }
        std::vector<std::pair<Monomial, Poly>> basis;
        for (auto& row : rows) {
            Poly r = row;
            for (auto& [lead, b] : basis) {
                const Rational c = r.coeff(lead);
                if (!c.is_zero()) r -= b.scaled(c);
            }
            if (r.is_zero()) continue;
            auto [lm, lc] = r.lex_leading();
            r = r.scaled(lc.inverse());
            for (auto& [lead, b] : basis) {
                const Rational c = b.coeff(lm);
                if (!c.is_zero()) b -= r.scaled(c);
            }
            basis.emplace_back(lm, r);
        }
        return cache_.emplace(w, std::move(basis)).first->second;
    }

    /// True iff both ideals agree in every listed weight.
    bool same_pieces(const HomogeneousIdeal& o, const std::vector<int>& weights) const {
        for (int w : weights) {
            if (dimension(w) != o.dimension(w)) return false;
            for (auto& [lm, row] : reduced_basis(w))
                if (!o.contains(row)) return false;
        }
        return true;
    }

private:
    std::vector<Poly> gens_;
    std::vector<int> ids_;
    mutable std::map<int, std::vector<std::pair<Monomial, Poly>>> cache_;
};

/// Ids of A, B, C, D.
inline std::vector<int> abcd_ids() { return {var_id("A"), var_id("B"), var_id("C"), var_id("D")}; }
inline std::vector<int> q_ids() { return {var_id("q1"), var_id("q2"), var_id("q3"), var_id("q4")}; }

/// p scaled so that its lex-leading coefficient is 1.
inline Poly lex_monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p.scaled(p.lex_leading().second.inverse());
}

/// If a = lambda * b for a rational lambda, returns lambda.
inline std::optional<Rational> proportionality(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    auto [bm, bc] = b.lex_leading();
    const Rational lam = a.coeff(bm) / bc;
    if (lam.is_zero()) return std::nullopt;
    if (a == b.scaled(lam)) return lam;
    return std::nullopt;
}

}  // namespace ellgen

#endif
