#ifndef ELLGEN_RATIONAL_HPP
#define ELLGEN_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

#include "errors.hpp"

namespace ellgen {

/** \brief Exact rational number in lowest terms with positive denominator. */
class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}
    Rational(long v) : v_(v) {}
    Rational(long long v) : v_(static_cast<long>(v)) {}
    Rational(long num, long den) {
        if (den == 0) throw DivisionByZero("zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    explicit Rational(const mpz_class& v) : v_(v) {}

    /// Parses "p", "-p" or "p/q".
    static Rational parse(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw ParseError("not a rational: '" + s + "'");
        if (v.get_den() == 0) throw DivisionByZero("zero denominator in '" + s + "'");
        v.canonicalize();
        return Rational(v);
    }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    Rational pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
        return Rational(mpq_class(n, d));
    }

private:
    mpq_class v_{0};
};

inline Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

inline Rational factorial(long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r);
}

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline Rational inverse(const Rational& r) { return r.inverse(); }
inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace ellgen

template <>
struct std::hash<ellgen::Rational> {
    std::size_t operator()(const ellgen::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.str());
    }
};

#endif
