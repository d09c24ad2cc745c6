#ifndef ELLGEN_PARTITION_HPP
#define ELLGEN_PARTITION_HPP

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "rational.hpp"

namespace ellgen {

/**
 * \brief Partition of n as a multiplicity vector (i_1, ..., i_n).
 *
 * Stored without trailing zeros so that partitions of different n can share a map.
 */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> mult) : m_(std::move(mult)) { trim(); }

    /// From a list of parts, e.g. {2,1,1} = c2*c1^2.
    static Partition from_parts(const std::vector<int>& parts) {
        std::vector<int> m;
        for (int p : parts) {
            if (p <= 0) throw BadParams("partition parts must be positive");
            if (static_cast<int>(m.size()) < p) m.resize(static_cast<std::size_t>(p), 0);
            ++m[static_cast<std::size_t>(p - 1)];
        }
        return Partition(m);
    }

    const std::vector<int>& mult() const { return m_; }
    int mult_of(int part) const {
        return part >= 1 && part <= static_cast<int>(m_.size()) ? m_[static_cast<std::size_t>(part - 1)] : 0;
    }
    int size() const {
        int n = 0;
        for (std::size_t i = 0; i < m_.size(); ++i) n += static_cast<int>(i + 1) * m_[i];
        return n;
    }
    int length() const {
        int l = 0;
        for (int v : m_) l += v;
        return l;
    }
    /// Parts in descending order.
    std::vector<int> parts() const {
        std::vector<int> p;
        for (int i = static_cast<int>(m_.size()); i >= 1; --i)
            for (int k = 0; k < m_[static_cast<std::size_t>(i - 1)]; ++k) p.push_back(i);
        return p;
    }

    friend Partition operator+(const Partition& a, const Partition& b) {
        std::vector<int> m(std::max(a.m_.size(), b.m_.size()), 0);
        for (std::size_t i = 0; i < a.m_.size(); ++i) m[i] += a.m_[i];
        for (std::size_t i = 0; i < b.m_.size(); ++i) m[i] += b.m_[i];
        return Partition(m);
    }
    friend bool operator==(const Partition& a, const Partition& b) { return a.m_ == b.m_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return a.m_ != b.m_; }
    /// Lexicographic on the multiplicity vector.
    friend bool operator<(const Partition& a, const Partition& b) { return a.m_ < b.m_; }

    /// "c1^2*c2" style label; "1" for the empty partition.
    std::string chern_label() const {
        std::string s;
        for (std::size_t i = 0; i < m_.size(); ++i) {
            if (m_[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += "c" + std::to_string(i + 1);
            if (m_[i] > 1) s += "^" + std::to_string(m_[i]);
        }
        return s.empty() ? "1" : s;
    }
    /// Comma-separated parts in descending order, the JSON key format.
    std::string key() const {
        std::string s;
        for (int p : parts()) s += (s.empty() ? "" : ",") + std::to_string(p);
        return s;
    }
    static Partition parse_key(const std::string& key) {
        std::vector<int> parts;
        std::stringstream ss(key);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            try {
                parts.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw ParseError("bad partition key '" + key + "'");
            }
        }
        return from_parts(parts);
    }

private:
    void trim() {
        while (!m_.empty() && m_.back() == 0) m_.pop_back();
    }
    std::vector<int> m_;
};

/// All partitions of n, sorted lexicographically on the full-length multiplicity vector.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur(static_cast<std::size_t>(std::max(n, 0)), 0);
    std::function<void(int, int)> rec = [&](int part, int rest) {
        if (part == 0) {
            if (rest == 0) all.push_back(cur);
            return;
        }
        for (int k = rest / part; k >= 0; --k) {
            cur[static_cast<std::size_t>(part - 1)] = k;
            rec(part - 1, rest - k * part);
        }
        cur[static_cast<std::size_t>(part - 1)] = 0;
    };
    if (n == 0) return {Partition()};
    rec(n, n);
    std::sort(all.begin(), all.end());
    std::vector<Partition> out;
    for (auto& m : all) out.emplace_back(m);
    return out;
}

/** \brief All Chern numbers c_I[X] of an n-dimensional class. */
class ChernVector {
public:
    ChernVector() = default;
    explicit ChernVector(int n) : n_(n) {
        v_.clear();
        for (auto& p : partitions_of(n)) v_.emplace(p, Rational(0));
    }
    ChernVector(int n, const std::map<Partition, Rational>& values) : ChernVector(n) {
        for (auto& [p, c] : values) set(p, c);
    }

    int dim() const { return n_; }
    const std::map<Partition, Rational>& values() const { return v_; }
    Rational get(const Partition& p) const {
        auto it = v_.find(p);
        if (it == v_.end()) throw DimensionMismatch("partition " + p.chern_label() + " is not a partition of " + std::to_string(n_));
        return it->second;
    }
    Rational get(const std::vector<int>& parts) const { return get(Partition::from_parts(parts)); }
    void set(const Partition& p, const Rational& c) {
        if (p.size() != n_) throw DimensionMismatch("partition " + p.chern_label() + " is not a partition of " + std::to_string(n_));
        v_[p] = c;
    }

    /// True iff every Chern number containing c1 vanishes.
    bool is_su() const {
        for (auto& [p, c] : v_)
            if (p.mult_of(1) > 0 && !c.is_zero()) return false;
        return true;
    }

    ChernVector operator+(const ChernVector& o) const {
        if (o.n_ != n_) throw DimensionMismatch("adding classes of different dimension");
        ChernVector r = *this;
        for (auto& [p, c] : o.v_) r.v_[p] += c;
        return r;
    }
    ChernVector operator-(const ChernVector& o) const { return *this + o.scaled(Rational(-1)); }
    ChernVector scaled(const Rational& s) const {
        ChernVector r = *this;
        for (auto& [p, c] : r.v_) c *= s;
        return r;
    }
    friend bool operator==(const ChernVector& a, const ChernVector& b) { return a.n_ == b.n_ && a.v_ == b.v_; }

    std::string str() const {
        std::string s;
        for (auto& [p, c] : v_) s += p.chern_label() + " = " + c.str() + "\n";
        return s;
    }

private:
    int n_ = 0;
    std::map<Partition, Rational> v_{{Partition(), Rational(1)}};
};

/**
 * \brief Polynomial in Chern classes c_1, c_2, ... with coefficients in R, keyed by partition.
 */
template <class R>
using ChernPoly = std::map<Partition, R>;

template <class R>
ChernPoly<R> chern_mul(const ChernPoly<R>& a, const ChernPoly<R>& b, int max_degree) {
    ChernPoly<R> r;
    for (auto& [pa, ca] : a)
        for (auto& [pb, cb] : b) {
            if (pa.size() + pb.size() > max_degree) continue;
            R v = ca * cb;
            if (is_zero(v)) continue;
            auto key = pa + pb;
            auto it = r.find(key);
            if (it == r.end())
                r.emplace(key, v);
            else {
                it->second += v;
                if (is_zero(it->second)) r.erase(it);
            }
        }
    return r;
}

template <class R>
void chern_add_into(ChernPoly<R>& a, const ChernPoly<R>& b, const R& scale) {
    for (auto& [p, c] : b) {
        R v = c * scale;
        if (is_zero(v)) continue;
        auto it = a.find(p);
        if (it == a.end())
            a.emplace(p, v);
        else {
            it->second += v;
            if (is_zero(it->second)) a.erase(it);
        }
    }
}

/// Power sums p_1..p_n of the Chern roots expressed in c_i via Newton's identities.
inline std::vector<ChernPoly<Rational>> newton_power_sums(int n) {
    std::vector<ChernPoly<Rational>> p(static_cast<std::size_t>(n + 1));
    auto e = [](int i) { return Partition::from_parts({i}); };
    for (int m = 1; m <= n; ++m) {
        ChernPoly<Rational> pm;
        const Rational sgn_m = (m % 2 == 1) ? Rational(1) : Rational(-1);
        pm[e(m)] = sgn_m * Rational(m);
        for (int i = 1; i < m; ++i) {
            const Rational s = (i % 2 == 1) ? Rational(1) : Rational(-1);
            ChernPoly<Rational> ei{{e(i), Rational(1)}};
            chern_add_into(pm, chern_mul(ei, p[static_cast<std::size_t>(m - i)], n), s);
        }
        p[static_cast<std::size_t>(m)] = pm;
    }
    return p;
}

/// Evaluates a homogeneous Chern polynomial of degree dim on a ChernVector.
template <class R>
R evaluate_on(const ChernPoly<R>& k, const ChernVector& x) {
    R r(Rational(0));
    for (auto& [p, c] : k) {
        if (p.size() != x.dim()) continue;
        const Rational v = x.get(p);
        if (!v.is_zero()) r += c * R(v);
    }
    return r;
}

/// Milnor number: p_n evaluated on the class.
inline Rational milnor_number(const ChernVector& x) {
    if (x.dim() == 0) return Rational(0);
    return evaluate_on(newton_power_sums(x.dim())[static_cast<std::size_t>(x.dim())], x);
}

}  // namespace ellgen

#endif
