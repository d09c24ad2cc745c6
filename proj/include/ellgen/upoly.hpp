#ifndef ELLGEN_UPOLY_HPP
#define ELLGEN_UPOLY_HPP

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace ellgen {

/** \brief Dense univariate polynomial over the rationals. */
class UPoly {
public:
    UPoly() = default;
    UPoly(const Rational& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    UPoly(int c) : UPoly(Rational(c)) {}
    explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly monomial(const Rational& c, int e) {
        std::vector<Rational> v(static_cast<std::size_t>(e) + 1);
        v[static_cast<std::size_t>(e)] = c;
        return UPoly(std::move(v));
    }
    static UPoly x() { return monomial(Rational(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : Rational(0);
    }
    Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational eval(const Rational& x) const {
        Rational r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    UPoly& operator+=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) { return *this += -o; }
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(r));
    }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    UPoly scaled(const Rational& s) const {
        if (s.is_zero()) return UPoly();
        UPoly r = *this;
        for (auto& c : r.c_) c *= s;
        return r;
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        return scaled(lead().inverse());
    }

    /// Euclidean division; returns (quotient, remainder).
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
        UPoly r = *this;
        std::vector<Rational> q(std::max(0, degree() - d.degree() + 1));
        const Rational inv = d.lead().inverse();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            const int k = r.degree() - d.degree();
            const Rational c = r.lead() * inv;
            q[static_cast<std::size_t>(k)] = c;
            for (int i = 0; i <= d.degree(); ++i)
                r.c_[static_cast<std::size_t>(i + k)] -= c * d.c_[static_cast<std::size_t>(i)];
            r.trim();
        }
        return {UPoly(std::move(q)), r};
    }
    UPoly operator/(const UPoly& d) const { return divmod(d).first; }
    UPoly operator%(const UPoly& d) const { return divmod(d).second; }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<Rational> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return UPoly(std::move(r));
    }

    UPoly pow(int e) const {
        UPoly r(1), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    /// p(c * x)
    UPoly rescaled(const Rational& c) const {
        UPoly r = *this;
        Rational p(1);
        for (auto& v : r.c_) {
            v *= p;
            p *= c;
        }
        r.trim();
        return r;
    }

    std::string str(const std::string& var = "t") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g monic.
inline std::tuple<UPoly, UPoly, UPoly> ext_gcd(const UPoly& a, const UPoly& b) {
    UPoly r0 = a, r1 = b, s0(1), s1, t0, t1(1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        UPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Rational inv = r0.lead().inverse();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

inline std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool neg = c.sign() < 0;
        if (neg) cs = cs.substr(1);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (i == 0) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

/// n-th cyclotomic polynomial via the divisor recursion.
inline UPoly cyclotomic(int n) {
    if (n < 1) throw BadParams("cyclotomic index must be positive");
    UPoly num = UPoly::monomial(Rational(1), n) - UPoly(1);
    for (int d = 1; d < n; ++d)
        if (n % d == 0) num = num / cyclotomic(d);
    return num;
}

}  // namespace ellgen

#endif
