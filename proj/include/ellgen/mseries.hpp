#ifndef ELLGEN_MSERIES_HPP
#define ELLGEN_MSERIES_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "series.hpp"

namespace ellgen {

/**
 * \brief Truncated power series in k variables with per-variable and total degree caps.
 *
 * A term x^e is kept iff e_i <= caps[i] for all i and |e| <= total.
 */
template <class R>
class MSeries {
public:
    using Exps = std::vector<int>;

    MSeries() = default;
    MSeries(std::vector<int> caps, int total) : caps_(std::move(caps)), total_(total) {}

    static MSeries constant(const R& c, std::vector<int> caps, int total) {
        MSeries s(std::move(caps), total);
        s.add_term(Exps(s.caps_.size(), 0), c);
        return s;
    }
    static MSeries var(int i, std::vector<int> caps, int total) {
        MSeries s(std::move(caps), total);
        Exps e(s.caps_.size(), 0);
        e[static_cast<std::size_t>(i)] = 1;
        s.add_term(e, R(Rational(1)));
        return s;
    }

    int nvars() const { return static_cast<int>(caps_.size()); }
    const std::vector<int>& caps() const { return caps_; }
    int total() const { return total_; }
    const std::map<Exps, R>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    R coeff(const Exps& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? R(Rational(0)) : it->second;
    }
    R constant_term() const { return coeff(Exps(caps_.size(), 0)); }

    bool admissible(const Exps& e) const {
        int s = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > caps_[i]) return false;
            s += e[i];
        }
        return s <= total_;
    }

    void add_term(const Exps& e, const R& c) {
        if (is_zero_value(c) || !admissible(e)) return;
        auto it = t_.find(e);
        if (it == t_.end())
            t_.emplace(e, c);
        else {
            it->second = it->second + c;
            if (is_zero_value(it->second)) t_.erase(it);
        }
    }

    MSeries operator-() const {
        MSeries r = *this;
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }
    friend MSeries operator+(const MSeries& a, const MSeries& b) {
        MSeries r = a;
        for (auto& [e, c] : b.t_) r.add_term(e, c);
        return r;
    }
    friend MSeries operator-(const MSeries& a, const MSeries& b) { return a + (-b); }
    friend MSeries operator*(const MSeries& a, const MSeries& b) {
        MSeries r(a.caps_, a.total_);
        Exps e(a.caps_.size());
        for (auto& [ea, ca] : a.t_)
            for (auto& [eb, cb] : b.t_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                if (!r.admissible(e)) continue;
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MSeries scaled(const R& s) const {
        MSeries r(caps_, total_);
        for (auto& [e, c] : t_) r.add_term(e, c * s);
        return r;
    }
    friend bool operator==(const MSeries& a, const MSeries& b) { return (a - b).is_zero(); }

    /// f(s) for a univariate f; s must have zero constant term.
    MSeries compose_into(const TruncatedSeries<R>& f) const {
        if (!is_zero_value(constant_term())) throw BadValuation("inner series has a constant term");
        if (f.valuation() < 0) throw BadValuation("outer series has a pole");
        const int top = total_;
        if (!f.is_exact() && f.prec() <= top) throw PrecisionError("outer series too short for the total cap");
        MSeries r(caps_, total_);
        for (int k = top; k >= 0; --k) {
            r = r * (*this);
            r.add_term(Exps(caps_.size(), 0), f.coeff_or_zero(k));
        }
        return r;
    }

    /// First nonzero term in exponent order, for reporting.
    std::optional<std::pair<Exps, R>> first_term() const {
        if (t_.empty()) return std::nullopt;
        return *t_.begin();
    }

private:
    static bool is_zero_value(const R& c) { return detail::value_is_zero(c); }
    std::vector<int> caps_;
    int total_ = 0;
    std::map<Exps, R> t_;
};

}  // namespace ellgen

#endif
