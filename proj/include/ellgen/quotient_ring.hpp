#ifndef ELLGEN_QUOTIENT_RING_HPP
#define ELLGEN_QUOTIENT_RING_HPP

#include <memory>
#include <string>

#include "laurent_poly.hpp"

namespace ellgen {

/** \brief Q[y]/(m(y)) with m monic. */
class QuotientRing {
public:
    explicit QuotientRing(UPoly modulus, std::string var = "y")
        : m_(modulus.monic()), var_(std::move(var)) {
        if (m_.degree() < 1) throw BadParams("quotient modulus must have positive degree");
    }

    /// Q[y]/(Φ_N(−y)) made monic, so that −y is a primitive N-th root of unity.
    static std::shared_ptr<const QuotientRing> cyclotomic_minus_y(int N) {
        return std::make_shared<const QuotientRing>(cyclotomic(N).rescaled(Rational(-1)));
    }

    const UPoly& modulus() const { return m_; }
    const std::string& var() const { return var_; }
    UPoly reduce(const UPoly& p) const { return p.degree() >= m_.degree() ? p % m_ : p; }

private:
    UPoly m_;
    std::string var_;
};

/**
 * \brief Element of a QuotientRing.
 *
 * Constants built from a Rational carry no ring and adopt the ring of the other operand.
 */
class QElem {
public:
    QElem() = default;
    QElem(const Rational& c) : p_(c) {}
    QElem(int c) : p_(Rational(c)) {}
    QElem(std::shared_ptr<const QuotientRing> ring, const UPoly& p) : ring_(std::move(ring)) {
        p_ = ring_ ? ring_->reduce(p) : p;
    }

    static QElem gen(std::shared_ptr<const QuotientRing> ring) { return QElem(std::move(ring), UPoly::x()); }

    const UPoly& rep() const { return p_; }
    const std::shared_ptr<const QuotientRing>& ring() const { return ring_; }
    bool is_zero() const { return p_.is_zero(); }

    QElem inverse() const {
        if (is_zero()) throw NonUnitLeadingCoefficient("zero in quotient ring");
        if (!ring_) return QElem(p_.lead().inverse());
        auto [g, s, t] = ext_gcd(p_, ring_->modulus());
        if (g.degree() != 0) throw NonUnitLeadingCoefficient("element shares a factor with the modulus");
        return QElem(ring_, s);
    }

    QElem operator-() const { return QElem(ring_, -p_); }
    friend QElem operator+(const QElem& a, const QElem& b) { return QElem(pick(a, b), a.p_ + b.p_); }
    friend QElem operator-(const QElem& a, const QElem& b) { return QElem(pick(a, b), a.p_ - b.p_); }
    friend QElem operator*(const QElem& a, const QElem& b) { return QElem(pick(a, b), a.p_ * b.p_); }
    friend QElem operator/(const QElem& a, const QElem& b) { return a * b.inverse(); }
    QElem& operator+=(const QElem& o) { return *this = *this + o; }
    QElem& operator-=(const QElem& o) { return *this = *this - o; }
    QElem& operator*=(const QElem& o) { return *this = *this * o; }
    friend bool operator==(const QElem& a, const QElem& b) { return a.p_ == b.p_; }
    friend bool operator!=(const QElem& a, const QElem& b) { return !(a == b); }

    /// Image of a Laurent polynomial in y (y must be invertible).
    static QElem from_laurent(std::shared_ptr<const QuotientRing> ring, const LaurentPoly& l) {
        QElem y = gen(ring), yi = y.inverse(), r(ring, UPoly());
        for (auto& [e, c] : l.terms()) {
            QElem m(c);
            const QElem& b = e >= 0 ? y : yi;
            for (int k = 0; k < std::abs(e); ++k) m *= b;
            r += m;
        }
        return r;
    }

    std::string str() const { return p_.str(ring_ ? ring_->var() : "y"); }

private:
    static std::shared_ptr<const QuotientRing> pick(const QElem& a, const QElem& b) {
        if (a.ring_ && b.ring_ && a.ring_ != b.ring_ && a.ring_->modulus() != b.ring_->modulus())
            throw BadParams("mixing elements of different quotient rings");
        return a.ring_ ? a.ring_ : b.ring_;
    }
    std::shared_ptr<const QuotientRing> ring_;
    UPoly p_;
};

inline bool is_zero(const QElem& e) { return e.is_zero(); }
inline QElem inverse(const QElem& e) { return e.inverse(); }
inline std::string to_string(const QElem& e) { return e.str(); }

}  // namespace ellgen

#endif
