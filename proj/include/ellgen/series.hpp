#ifndef ELLGEN_SERIES_HPP
#define ELLGEN_SERIES_HPP

#include <algorithm>
#include <climits>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace ellgen {

/// Precision value meaning "no truncation".
inline constexpr int kExact = 1 << 28;

namespace detail {
template <class R>
bool value_is_zero(const R& c) { return is_zero(c); }
template <class R>
R value_inverse(const R& c) { return inverse(c); }
}  // namespace detail

inline int prec_add(int a, int b) {
    if (a >= kExact || b >= kExact) return kExact;
    return std::min(a + b, kExact);
}

/**
 * \brief Truncated Laurent series in one formal variable over an exact ring R.
 *
 * Stores coefficients for exponents val()..prec()-1. Every binary operation
 * takes the smaller of the two precisions it can justify.
 *
 * R must be constructible from Rational and provide +, -, *, ==, and the free
 * functions is_zero, inverse and to_string.
 */
template <class R>
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(const Rational& c) : TruncatedSeries(R(c), kExact) {}
    TruncatedSeries(int c) : TruncatedSeries(Rational(c)) {}
    TruncatedSeries(const R& c, int prec) : start_(0), prec_(prec) {
        if (prec_ > 0) c_.push_back(c);
        normalize();
    }
    /// Coefficients for exponents start, start+1, ... known below prec.
    TruncatedSeries(std::vector<R> coeffs, int start, int prec) : start_(start), c_(std::move(coeffs)), prec_(prec) {
        normalize();
    }

    static TruncatedSeries zero(int prec) {
        TruncatedSeries s;
        s.prec_ = prec;
        s.start_ = prec;
        return s;
    }
    static TruncatedSeries monomial(const R& c, int e, int prec = kExact) {
        if (e >= prec) return zero(prec);
        return TruncatedSeries(std::vector<R>{c}, e, prec);
    }
    static TruncatedSeries var(int prec = kExact) { return monomial(R(Rational(1)), 1, prec); }

    /// Series from a coefficient generator, exponents 0..prec-1.
    template <class F>
    static TruncatedSeries generate(int prec, F&& gen) {
        std::vector<R> c;
        c.reserve(static_cast<std::size_t>(std::max(prec, 0)));
        for (int k = 0; k < prec; ++k) c.push_back(gen(k));
        return TruncatedSeries(std::move(c), 0, prec);
    }

    int prec() const { return prec_; }
    bool is_exact() const { return prec_ >= kExact; }
    int start() const { return start_; }
    int end() const { return start_ + static_cast<int>(c_.size()); }

    /// First exponent with nonzero coefficient, or prec() if none is known.
    int valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!is_zero(c_[i])) return start_ + static_cast<int>(i);
        return prec_;
    }
    bool is_zero_series() const { return valuation() >= prec_; }

    R coeff(int e) const {
        if (e >= prec_) throw PrecisionError("coefficient x^" + std::to_string(e) + " beyond precision " + std::to_string(prec_));
        if (e < start_ || e >= end()) return R(Rational(0));
        return c_[static_cast<std::size_t>(e - start_)];
    }
    /// Like coeff but zero beyond the stored range without checking precision.
    R coeff_or_zero(int e) const {
        if (e < start_ || e >= end()) return R(Rational(0));
        return c_[static_cast<std::size_t>(e - start_)];
    }

    TruncatedSeries truncated(int p) const {
        TruncatedSeries r = *this;
        r.prec_ = std::min(prec_, p);
        r.normalize();
        return r;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b, false); }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b, true); }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        const int va = a.valuation(), vb = b.valuation();
        const int p = std::min(prec_add(a.prec_, vb), prec_add(b.prec_, va));
        if (va >= a.prec_ || vb >= b.prec_) return zero(p);
        const int lo = va + vb;
        const int hi = std::min(p, prec_add(a.end(), b.end()));
        std::vector<R> r(static_cast<std::size_t>(std::max(0, hi - lo)), R(Rational(0)));
        for (int i = va; i < a.end(); ++i) {
            const R& ci = a.c_[static_cast<std::size_t>(i - a.start_)];
            if (is_zero(ci)) continue;
            for (int j = vb; j < b.end() && i + j < hi; ++j) {
                const R& cj = b.c_[static_cast<std::size_t>(j - b.start_)];
                if (is_zero(cj)) continue;
                r[static_cast<std::size_t>(i + j - lo)] += ci * cj;
            }
        }
        return TruncatedSeries(std::move(r), lo, p);
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    /// Equal on the common range of known coefficients.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        const int p = std::min(a.prec_, b.prec_);
        const auto [lo, hi] = joint_range(a, b, p);
        for (int e = lo; e < hi; ++e)
            if (!(a.coeff_or_zero(e) == b.coeff_or_zero(e))) return false;
        return true;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

    TruncatedSeries scaled(const R& s) const {
        TruncatedSeries r = *this;
        for (auto& c : r.c_) c = c * s;
        r.normalize();
        return r;
    }
    TruncatedSeries shifted(int k) const {
        TruncatedSeries r = *this;
        r.start_ += k;
        r.prec_ = prec_add(prec_, k);
        return r;
    }

    /// Multiplicative inverse; the lowest nonzero coefficient must be a unit.
    TruncatedSeries inverse() const {
        const int v = valuation();
        if (v >= prec_) throw NonUnitLeadingCoefficient("series is zero to its precision");
        const R lead = coeff(v);
        R li;
        try {
            li = detail::value_inverse(lead);
        } catch (const Error&) {
            throw NonUnitLeadingCoefficient("leading coefficient " + to_string(lead) + " is not a unit");
        }
        if (is_exact()) {
            if (end() - v == 1) return monomial(li, -v);
            throw PrecisionError("inverse of an exact non-monomial series needs a truncation");
        }
        const int n = prec_ - v;  // relative precision
        std::vector<R> b(static_cast<std::size_t>(n), R(Rational(0)));
        b[0] = li;
        for (int k = 1; k < n; ++k) {
            R s(Rational(0));
            for (int j = 1; j <= k; ++j) {
                const R a = coeff_or_zero(v + j);
                if (!is_zero(a)) s += a * b[static_cast<std::size_t>(k - j)];
            }
            b[static_cast<std::size_t>(k)] = -(s * li);
        }
        return TruncatedSeries(std::move(b), -v, n - v);
    }

    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b.inverse(); }

    TruncatedSeries pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        TruncatedSeries r(R(Rational(1)), kExact), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    TruncatedSeries derivative() const {
        std::vector<R> r;
        r.reserve(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i)
            r.push_back(c_[i] * R(Rational(start_ + static_cast<int>(i))));
        return TruncatedSeries(std::move(r), start_ - 1, prec_ >= kExact ? kExact : prec_ - 1);
    }

    /// Antiderivative with zero constant term; x^-1 must have zero coefficient.
    TruncatedSeries integral() const {
        std::vector<R> r;
        r.reserve(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const int e = start_ + static_cast<int>(i);
            if (e == -1) {
                if (!is_zero(c_[i])) throw BadValuation("cannot integrate x^-1");
                r.push_back(R(Rational(0)));
                continue;
            }
            r.push_back(c_[i] * R(Rational(1, e + 1)));
        }
        return TruncatedSeries(std::move(r), start_ + 1, prec_add(prec_, 1));
    }

    /// f(g) for f with nonnegative valuation and g with positive valuation.
    TruncatedSeries compose(const TruncatedSeries& g) const {
        if (valuation() < 0) throw BadValuation("outer series has a pole");
        const int vg = g.valuation();
        if (vg < 1) throw BadValuation("inner series must have positive valuation");
        int p = g.prec_;
        if (!is_exact()) p = std::min(p, static_cast<int>(std::min<long long>(static_cast<long long>(prec_) * vg, kExact)));
        const int top = std::min(end(), p) - 1;
        TruncatedSeries r = zero(p);
        TruncatedSeries gt = g.truncated(p);
        for (int k = top; k >= 0; --k) {
            r = r * gt + TruncatedSeries(coeff_or_zero(k), p);
        }
        return r.truncated(p);
    }

    /// Compositional inverse g of f (f(g(y)) = y); f must have valuation 1 with unit linear coefficient.
    TruncatedSeries reversion() const {
        if (valuation() != 1) throw BadValuation("reversion needs valuation exactly 1");
        if (is_exact() && end() > 2) throw PrecisionError("reversion of an exact nonlinear series needs a truncation");
        R a1inv;
        try {
            a1inv = detail::value_inverse(coeff(1));
        } catch (const Error&) {
            throw BadValuation("linear coefficient is not a unit");
        }
        const int p = prec_;
        if (p >= kExact) return monomial(a1inv, 1);
        TruncatedSeries g = monomial(a1inv, 1, p);
        for (int k = 2; k < p; ++k) {
            TruncatedSeries fg = compose(g.truncated(k + 1));
            const R err = fg.coeff(k);
            if (!is_zero(err)) {
                std::vector<R> c = g.c_;
                const int idx = k - g.start_;
                if (static_cast<int>(c.size()) <= idx) c.resize(static_cast<std::size_t>(idx + 1), R(Rational(0)));
                c[static_cast<std::size_t>(idx)] = c[static_cast<std::size_t>(idx)] - err * a1inv;
                g = TruncatedSeries(std::move(c), g.start_, p);
            }
        }
        return g;
    }

    /// exp(s) for s with zero constant term.
    TruncatedSeries exp() const {
        if (valuation() < 1) throw BadValuation("exp needs a series without constant term");
        const int p = prec_;
        if (p >= kExact) throw PrecisionError("exp of an exact series needs a truncation");
        std::vector<R> e(static_cast<std::size_t>(p), R(Rational(0)));
        e[0] = R(Rational(1));
        for (int n = 1; n < p; ++n) {
            R s(Rational(0));
            for (int k = 1; k <= n; ++k) {
                const R a = coeff_or_zero(k);
                if (!is_zero(a)) s += a * e[static_cast<std::size_t>(n - k)] * R(Rational(k));
            }
            e[static_cast<std::size_t>(n)] = s * R(Rational(1, n));
        }
        return TruncatedSeries(std::move(e), 0, p);
    }

    /// log(s) for s with constant term 1.
    TruncatedSeries log() const {
        if (valuation() < 0 || !(coeff(0) == R(Rational(1))))
            throw BadValuation("log needs constant term 1");
        return (derivative() * inverse()).integral();
    }

    std::string str(const std::string& var = "x") const {
        std::string out;
        for (int e = start_; e < end(); ++e) {
            const R& c = c_[static_cast<std::size_t>(e - start_)];
            if (is_zero(c)) continue;
            if (!out.empty()) out += " + ";
            std::string cs = to_string(c);
            std::string mono = e == 0 ? "" : (e == 1 ? var : var + "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e)));
            if (mono.empty())
                out += "(" + cs + ")";
            else
                out += "(" + cs + ")*" + mono;
        }
        if (out.empty()) out = "0";
        if (!is_exact()) out += " + O(" + var + "^" + std::to_string(prec_) + ")";
        return out;
    }

    /// Applies a coefficient map R -> S.
    template <class S, class F>
    TruncatedSeries<S> map(F&& f) const {
        std::vector<S> r;
        r.reserve(c_.size());
        for (auto& c : c_) r.push_back(f(c));
        return TruncatedSeries<S>(std::move(r), start_, prec_);
    }

    const std::vector<R>& raw() const { return c_; }

private:
    static std::pair<int, int> joint_range(const TruncatedSeries& a, const TruncatedSeries& b, int p) {
        if (a.c_.empty() && b.c_.empty()) return {0, 0};
        if (a.c_.empty()) return {b.start_, std::min(p, b.end())};
        if (b.c_.empty()) return {a.start_, std::min(p, a.end())};
        return {std::min(a.start_, b.start_), std::min(p, std::max(a.end(), b.end()))};
    }

    static TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b, bool sub) {
        const int p = std::min(a.prec_, b.prec_);
        if (a.c_.empty()) return TruncatedSeries(sub ? (-b).c_ : b.c_, b.start_, p);
        if (b.c_.empty()) return TruncatedSeries(a.c_, a.start_, p);
        const auto [lo, hi] = joint_range(a, b, p);
        std::vector<R> r;
        r.reserve(static_cast<std::size_t>(std::max(0, hi - lo)));
        for (int e = lo; e < hi; ++e) {
            if (sub)
                r.push_back(a.coeff_or_zero(e) - b.coeff_or_zero(e));
            else
                r.push_back(a.coeff_or_zero(e) + b.coeff_or_zero(e));
        }
        return TruncatedSeries(std::move(r), lo, p);
    }

    void normalize() {
        // drop coefficients at or beyond precision, then zeros at both ends
        if (end() > prec_) c_.resize(static_cast<std::size_t>(std::max(0, prec_ - start_)));
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
        std::size_t lead = 0;
        while (lead < c_.size() && is_zero(c_[lead])) ++lead;
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            start_ += static_cast<int>(lead);
        }
        if (c_.empty()) start_ = std::min(start_, prec_);
    }

    int start_ = 0;
    std::vector<R> c_;
    int prec_ = kExact;
};

template <class R>
bool is_zero(const TruncatedSeries<R>& s) { return s.is_zero_series(); }
template <class R>
TruncatedSeries<R> inverse(const TruncatedSeries<R>& s) { return s.inverse(); }
template <class R>
std::string to_string(const TruncatedSeries<R>& s) { return s.str(); }

/// Free-function forms of the named module operations.
template <class R>
TruncatedSeries<R> series_inverse(const TruncatedSeries<R>& s) { return s.inverse(); }
template <class R>
TruncatedSeries<R> series_compose_inverse(const TruncatedSeries<R>& f) { return f.reversion(); }

/// exp(c*x) to precision p.
template <class R>
TruncatedSeries<R> exp_linear(const R& c, int p) {
    std::vector<R> v;
    R term(Rational(1));
    for (int k = 0; k < p; ++k) {
        v.push_back(term);
        term = term * c * R(Rational(1, k + 1));
    }
    return TruncatedSeries<R>(std::move(v), 0, p);
}

}  // namespace ellgen

#endif
