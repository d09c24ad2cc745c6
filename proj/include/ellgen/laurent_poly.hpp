#ifndef ELLGEN_LAURENT_POLY_HPP
#define ELLGEN_LAURENT_POLY_HPP

#include <map>
#include <optional>
#include <string>

#include "rational_function.hpp"

namespace ellgen {

/** \brief Laurent polynomial in a single variable (y by default) over the rationals. */
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c) {
        if (!c.is_zero()) t_[0] = c;
    }
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}
    static LaurentPoly monomial(const Rational& c, int e) {
        LaurentPoly p;
        if (!c.is_zero()) p.t_[e] = c;
        return p;
    }
    static LaurentPoly var() { return monomial(Rational(1), 1); }
    static LaurentPoly from_upoly(const UPoly& p, int shift = 0) {
        LaurentPoly r;
        for (int i = 0; i <= p.degree(); ++i)
            if (!p.coeff(i).is_zero()) r.t_[i + shift] = p.coeff(i);
        return r;
    }

    const std::map<int, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Rational coeff(int e) const {
        auto it = t_.find(e);
        return it == t_.end() ? Rational(0) : it->second;
    }
    Rational eval(const Rational& y) const {
        Rational r;
        for (auto& [e, c] : t_) r += c * y.pow(e);
        return r;
    }
    int min_exp() const { return t_.empty() ? 0 : t_.begin()->first; }
    int max_exp() const { return t_.empty() ? 0 : t_.rbegin()->first; }

    bool is_integral() const {
        for (auto& [e, c] : t_)
            if (!c.is_integer()) return false;
        return true;
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (auto& [e, c] : o.t_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto& [e1, c1] : a.t_)
            for (auto& [e2, c2] : b.t_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Only monomials are units.
    LaurentPoly inverse() const {
        if (t_.size() != 1) throw NonUnitLeadingCoefficient("Laurent polynomial is not a monomial");
        return monomial(t_.begin()->second.inverse(), -t_.begin()->first);
    }

    /// y d/dy
    LaurentPoly euler_derivative() const {
        LaurentPoly r;
        for (auto& [e, c] : t_) r.add_term(e, c * Rational(e));
        return r;
    }

    /// Substitutes y -> c*y^k for integer k != 0.
    LaurentPoly substitute_monomial(const Rational& c, int k) const {
        LaurentPoly r;
        for (auto& [e, v] : t_) r.add_term(e * k, v * c.pow(e));
        return r;
    }

    RationalFunction to_rational_function() const {
        if (t_.empty()) return RationalFunction();
        const int lo = min_exp();
        UPoly num;
        for (auto& [e, c] : t_) num += UPoly::monomial(c, e - lo);
        if (lo >= 0) return RationalFunction(num * UPoly::monomial(Rational(1), lo));
        return RationalFunction(num, UPoly::monomial(Rational(1), -lo));
    }

    /// Converts a rational function whose denominator is a monomial; nullopt otherwise.
    static std::optional<LaurentPoly> from_rational_function(const RationalFunction& f) {
        const UPoly& d = f.den();
        for (int i = 0; i < d.degree(); ++i)
            if (!d.coeff(i).is_zero()) return std::nullopt;
        LaurentPoly r = from_upoly(f.num(), -d.degree());
        return r * LaurentPoly(d.lead().inverse());
    }

    std::string str(const std::string& var = "y") const {
        if (t_.empty()) return "0";
        std::string out;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            const int e = it->first;
            const Rational& c = it->second;
            std::string cs = c.str();
            bool neg = c.sign() < 0;
            if (neg) cs = cs.substr(1);
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            if (e == 0) {
                out += cs;
            } else {
                if (cs != "1") out += cs + "*";
                out += var;
                if (e != 1) out += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
            }
        }
        return out;
    }

private:
    void add_term(int e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, ins] = t_.emplace(e, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    std::map<int, Rational> t_;
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }
inline LaurentPoly inverse(const LaurentPoly& p) { return p.inverse(); }
inline std::string to_string(const LaurentPoly& p) { return p.str(); }

}  // namespace ellgen

#endif
