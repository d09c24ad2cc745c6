#ifndef ELLGEN_WEIGHTED_POLY_HPP
#define ELLGEN_WEIGHTED_POLY_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace ellgen {

/**
 * \brief Process-wide table of named variables with positive weights.
 *
 * Ids are handed out in registration order; the first ids are reserved so that
 * A > B > C > D > q1 > ... in lexicographic comparisons.
 */
class VariableRegistry {
public:
    static VariableRegistry& instance() {
        static VariableRegistry reg;
        return reg;
    }

    int id(const std::string& name, int weight) {
        if (weight <= 0) throw BadParams("variable weight must be positive: " + name);
        std::lock_guard<std::mutex> lock(mu_);
        auto it = ids_.find(name);
        if (it != ids_.end()) {
            if (weights_[static_cast<std::size_t>(it->second)] != weight)
                throw BadParams("variable '" + name + "' already registered with weight " +
                                std::to_string(weights_[static_cast<std::size_t>(it->second)]));
            return it->second;
        }
        const int i = static_cast<int>(names_.size());
        names_.push_back(name);
        weights_.push_back(weight);
        ids_.emplace(name, i);
        return i;
    }

    std::optional<int> find(const std::string& name) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = ids_.find(name);
        if (it == ids_.end()) return std::nullopt;
        return it->second;
    }

    std::string name(int id) const {
        std::lock_guard<std::mutex> lock(mu_);
        return names_.at(static_cast<std::size_t>(id));
    }
    int weight(int id) const {
        std::lock_guard<std::mutex> lock(mu_);
        return weights_.at(static_cast<std::size_t>(id));
    }

private:
    VariableRegistry() {
        const char* abcd[] = {"A", "B", "C", "D"};
        for (int i = 0; i < 4; ++i) id_unlocked(abcd[i], i + 1);
        for (int i = 1; i <= 4; ++i) id_unlocked("q" + std::to_string(i), i);
        for (int i = 1; i <= 16; ++i) id_unlocked("c" + std::to_string(i), i);
    }
    void id_unlocked(const std::string& name, int w) {
        ids_.emplace(name, static_cast<int>(names_.size()));
        names_.push_back(name);
        weights_.push_back(w);
    }
    mutable std::mutex mu_;
    std::vector<std::string> names_;
    std::vector<int> weights_;
    std::unordered_map<std::string, int> ids_;
};

/// Sorted list of (variable id, positive exponent).
using Monomial = std::vector<std::pair<int, int>>;

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.push_back(b[j++]);
        } else {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

inline int mono_exp(const Monomial& m, int var) {
    for (auto& [v, e] : m)
        if (v == var) return e;
    return 0;
}

inline int mono_weight(const Monomial& m) {
    int w = 0;
    for (auto& [v, e] : m) w += e * VariableRegistry::instance().weight(v);
    return w;
}

/// Lexicographic "greater" with smaller ids dominating.
inline bool mono_lex_greater(const Monomial& a, const Monomial& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size()) {
        if (a[i].first != b[i].first) return a[i].first < b[i].first;
        if (a[i].second != b[i].second) return a[i].second > b[i].second;
        ++i;
    }
    return i < a.size() && i >= b.size();
}

/// Graded lex: larger weight first, then lex.
inline bool mono_grlex_greater(const Monomial& a, const Monomial& b) {
    const int wa = mono_weight(a), wb = mono_weight(b);
    if (wa != wb) return wa > wb;
    return mono_lex_greater(a, b);
}

/** \brief Multivariate polynomial over the rationals in weighted named variables. */
class Poly {
public:
    using TermMap = std::map<Monomial, Rational>;

    Poly() = default;
    Poly(const Rational& c) {
        if (!c.is_zero()) t_.emplace(Monomial{}, c);
    }
    Poly(int c) : Poly(Rational(c)) {}

    static Poly var(const std::string& name, int weight = 1) {
        Poly p;
        p.t_.emplace(Monomial{{VariableRegistry::instance().id(name, weight), 1}}, Rational(1));
        return p;
    }
    static Poly var_id(int id) {
        Poly p;
        p.t_.emplace(Monomial{{id, 1}}, Rational(1));
        return p;
    }
    static Poly term(const Rational& c, Monomial m) {
        Poly p;
        if (!c.is_zero()) p.t_.emplace(std::move(m), c);
        return p;
    }

    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }
    Rational constant_term() const {
        auto it = t_.find(Monomial{});
        return it == t_.end() ? Rational(0) : it->second;
    }
    Rational coeff(const Monomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? Rational(0) : it->second;
    }
    std::size_t size() const { return t_.size(); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        for (auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        if (a.is_constant()) return b.scaled(a.constant_term());
        if (b.is_constant()) return a.scaled(b.constant_term());
        Poly r;
        for (auto& [m1, c1] : a.t_)
            for (auto& [m2, c2] : b.t_) r.add_term(mono_mul(m1, m2), c1 * c2);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const Rational& s) const {
        if (s.is_zero()) return Poly();
        Poly r = *this;
        for (auto& [m, c] : r.t_) c *= s;
        return r;
    }

    Poly pow(int e) const {
        if (e < 0) throw BadParams("negative power of polynomial");
        Poly r(1), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    /// Only nonzero constants are units.
    Poly inverse() const {
        if (!is_constant() || is_zero()) throw NonUnitLeadingCoefficient("polynomial is not a unit");
        return Poly(constant_term().inverse());
    }

    /// Weight of a homogeneous polynomial; nullopt if not homogeneous (zero counts as homogeneous of weight 0).
    std::optional<int> homogeneous_weight() const {
        std::optional<int> w;
        for (auto& [m, c] : t_) {
            const int mw = mono_weight(m);
            if (w && *w != mw) return std::nullopt;
            w = mw;
        }
        return w.value_or(0);
    }
    int weight_or_throw() const {
        auto w = homogeneous_weight();
        if (!w) throw NotHomogeneous(str());
        return *w;
    }

    std::vector<int> variables() const {
        std::vector<int> v;
        for (auto& [m, c] : t_)
            for (auto& [id, e] : m) v.push_back(id);
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    }
    bool contains_var(int id) const {
        for (auto& [m, c] : t_)
            if (mono_exp(m, id) > 0) return true;
        return false;
    }
    int degree_in(int id) const {
        int d = 0;
        for (auto& [m, c] : t_) d = std::max(d, mono_exp(m, id));
        return d;
    }
    /// Coefficient of var^k, as a polynomial in the remaining variables.
    Poly coeff_of(int id, int k) const {
        Poly r;
        for (auto& [m, c] : t_) {
            if (mono_exp(m, id) != k) continue;
            Monomial rest;
            for (auto& p : m)
                if (p.first != id) rest.push_back(p);
            r.add_term(rest, c);
        }
        return r;
    }

    /// Leading monomial in lexicographic order (smaller ids dominate).
    std::pair<Monomial, Rational> lex_leading() const {
        if (t_.empty()) throw BadParams("leading term of zero polynomial");
        auto best = t_.begin();
        for (auto it = t_.begin(); it != t_.end(); ++it)
            if (mono_lex_greater(it->first, best->first)) best = it;
        return *best;
    }

    /// Generic evaluation; `val(id)` supplies the value of each variable.
    template <class T, class F>
    T eval(F&& val) const {
        std::map<std::pair<int, int>, T> pw;
        auto power = [&](int id, int e) -> T {
            auto it = pw.find({id, e});
            if (it != pw.end()) return it->second;
            T base = T(val(id)), v = base;
            for (int k = 2; k <= e; ++k) v = v * base;
            pw.emplace(std::make_pair(id, e), v);
            return v;
        };
        T r(Rational(0));
        for (auto& [m, c] : t_) {
            T term = T(c);
            for (auto& [id, e] : m) term = term * power(id, e);
            r = r + term;
        }
        return r;
    }

    /// Substitutes polynomials for some variables; others stay.
    Poly substitute(const std::map<int, Poly>& s) const {
        return eval<Poly>([&](int id) {
            auto it = s.find(id);
            return it == s.end() ? var_id(id) : it->second;
        });
    }
    Poly substitute(const std::map<std::string, Poly>& s) const {
        std::map<int, Poly> byid;
        for (auto& [n, p] : s) {
            auto id = VariableRegistry::instance().find(n);
            if (id) byid.emplace(*id, p);
        }
        return substitute(byid);
    }

    /// Terms sorted by graded lex (descending).
    std::vector<std::pair<Monomial, Rational>> sorted_terms() const {
        std::vector<std::pair<Monomial, Rational>> v(t_.begin(), t_.end());
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return mono_grlex_greater(a.first, b.first); });
        return v;
    }

    static std::string mono_str(const Monomial& m) {
        std::string s;
        for (auto& [id, e] : m) {
            if (!s.empty()) s += "*";
            s += VariableRegistry::instance().name(id);
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string out;
        for (auto& [m, c] : sorted_terms()) {
            std::string cs = c.str();
            const bool neg = c.sign() < 0;
            if (neg) cs = cs.substr(1);
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            if (m.empty())
                out += cs;
            else if (cs == "1")
                out += mono_str(m);
            else
                out += cs + "*" + mono_str(m);
        }
        return out;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, ins] = t_.emplace(m, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

private:
    TermMap t_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }
inline Poly inverse(const Poly& p) { return p.inverse(); }
inline std::string to_string(const Poly& p) { return p.str(); }

/// Returns the id of a registered variable or throws.
inline int var_id(const std::string& name) {
    auto id = VariableRegistry::instance().find(name);
    if (!id) throw VariableNotPresent("unknown variable '" + name + "'");
    return *id;
}

namespace vars {
inline Poly A() { return Poly::var("A", 1); }
inline Poly B() { return Poly::var("B", 2); }
inline Poly C() { return Poly::var("C", 3); }
inline Poly D() { return Poly::var("D", 4); }
inline Poly q(int i) { return Poly::var("q" + std::to_string(i), i); }
inline Poly c(int i) { return Poly::var("c" + std::to_string(i), i); }
}  // namespace vars

namespace detail {

class PolyParser {
public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    Poly run() {
        Poly p = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const { throw ParseError("polynomial '" + s_ + "': " + why); }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    Poly expr() {
        Poly r = term();
        for (;;) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                return r;
        }
    }
    Poly term() {
        Poly r = unary();
        for (;;) {
            if (eat('*')) {
                r = r * unary();
            } else if (eat('/')) {
                const Poly d = unary();
                if (d.is_zero() || !d.is_constant()) fail("division by a non-constant");
                r = r * Poly(d.terms().begin()->second.inverse());
            } else {
                return r;
            }
        }
    }
    Poly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    Poly power() {
        Poly b = primary();
        if (eat('^')) {
            skip();
            std::size_t st = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (st == i_) fail("exponent must be a nonnegative integer");
            const int e = std::stoi(s_.substr(st, i_ - st));
            Poly r(1);
            for (int k = 0; k < e; ++k) r = r * b;
            return r;
        }
        return b;
    }
    Poly primary() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end");
        if (eat('(')) {
            Poly r = expr();
            if (!eat(')')) fail("missing ')'");
            return r;
        }
        const char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t st = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return Poly(Rational::parse(s_.substr(st, i_ - st)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t st = i_;
            while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
            return variable(s_.substr(st, i_ - st));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
    Poly variable(const std::string& name) {
        if (name == "A") return vars::A();
        if (name == "B") return vars::B();
        if (name == "C") return vars::C();
        if (name == "D") return vars::D();
        if (name.size() >= 2 && (name[0] == 'q' || name[0] == 'c') &&
            std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; })) {
            const int k = std::stoi(name.substr(1));
            if (k < 1) fail("index must be positive");
            return name[0] == 'q' ? vars::q(k) : vars::c(k);
        }
        if (auto id = VariableRegistry::instance().find(name)) return Poly::var_id(*id);
        fail("unknown variable '" + name + "'");
    }

    std::string s_;
    std::size_t i_ = 0;
};

}  // namespace detail

/// Parses expressions like "3/2*A^2 - B/4" over the registered variables.
inline Poly parse_poly(const std::string& s) { return detail::PolyParser(s).run(); }

}  // namespace ellgen

#endif
