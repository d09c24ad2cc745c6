#ifndef ELLGEN_RATIONAL_FUNCTION_HPP
#define ELLGEN_RATIONAL_FUNCTION_HPP

#include <string>
#include <utility>

#include "upoly.hpp"

namespace ellgen {

/** \brief Quotient of univariate rational polynomials, reduced with monic denominator. */
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {}
    RationalFunction(int c) : RationalFunction(Rational(c)) {}
    RationalFunction(const UPoly& p) : num_(p), den_(1) {}
    RationalFunction(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RationalFunction var() { return RationalFunction(UPoly::x()); }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero rational function");
        return RationalFunction(den_, num_);
    }

    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return RationalFunction();
        if (a.is_polynomial() && b.is_polynomial()) {
            RationalFunction r;
            r.num_ = a.num_ * b.num_;
            return r;
        }
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        if (d.is_zero()) throw DivisionByZero("pole of rational function");
        return num_.eval(x) / d;
    }

    /// Order of vanishing at t = a (negative for poles).
    int order_at(const Rational& a) const {
        const UPoly lin(std::vector<Rational>{-a, Rational(1)});
        auto count = [&](UPoly p) {
            int k = 0;
            while (!p.is_zero()) {
                auto [q, r] = p.divmod(lin);
                if (!r.is_zero()) break;
                p = q;
                ++k;
            }
            return k;
        };
        return count(num_) - count(den_);
    }

    std::string str(const std::string& var = "t") const {
        if (is_polynomial()) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

private:
    void normalize() {
        if (den_.is_zero()) throw DivisionByZero("zero denominator");
        if (num_.is_zero()) {
            den_ = UPoly(1);
            return;
        }
        UPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        const Rational l = den_.lead();
        if (!l.is_one()) {
            const Rational inv = l.inverse();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }
    UPoly num_, den_;
};

inline bool is_zero(const RationalFunction& r) { return r.is_zero(); }
inline RationalFunction inverse(const RationalFunction& r) { return r.inverse(); }
inline std::string to_string(const RationalFunction& r) { return r.str("y"); }

}  // namespace ellgen

#endif
