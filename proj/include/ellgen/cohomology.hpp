#ifndef ELLGEN_COHOMOLOGY_HPP
#define ELLGEN_COHOMOLOGY_HPP

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "partition.hpp"

namespace ellgen {

/**
 * \brief Finite graded commutative algebra with total Chern class and integration.
 *
 * Degrees are complex degrees (H^{2k} has degree k). Elements are dense
 * coefficient vectors over the basis.
 */
class CohomologyModel {
public:
    using Element = std::vector<Rational>;
    using Sparse = std::vector<std::pair<int, Rational>>;

    CohomologyModel() = default;

    /// `mul(i, j)` returns the product of basis elements as a dense vector.
    CohomologyModel(int dim, std::vector<int> degrees, std::vector<std::string> labels,
                    const std::function<Element(int, int)>& mul, Element integral, Element chern)
        : dim_(dim), deg_(std::move(degrees)), labels_(std::move(labels)), integ_(std::move(integral)), chern_(std::move(chern)) {
        const int b = rank();
        if (b == 0 || deg_[0] != 0) throw BadParams("basis must start with the unit");
        table_.assign(static_cast<std::size_t>(b), std::vector<Sparse>(static_cast<std::size_t>(b)));
        for (int i = 0; i < b; ++i)
            for (int j = i; j < b; ++j) {
                Sparse s;
                if (deg_[static_cast<std::size_t>(i)] + deg_[static_cast<std::size_t>(j)] <= dim_) {
                    Element e = mul(i, j);
                    for (int k = 0; k < b; ++k)
                        if (!e[static_cast<std::size_t>(k)].is_zero()) s.emplace_back(k, e[static_cast<std::size_t>(k)]);
                }
                table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
                table_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = s;
            }
        if (chern_.size() != static_cast<std::size_t>(b) || !(chern_[0] == Rational(1)))
            throw BadParams("total Chern class must start with 1");
    }

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(deg_.size()); }
    int degree(int i) const { return deg_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& degrees() const { return deg_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Element& chern() const { return chern_; }
    const Element& integration() const { return integ_; }
    const Sparse& product_of(int i, int j) const { return table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    Element zero() const { return Element(static_cast<std::size_t>(rank())); }
    Element one() const {
        Element e = zero();
        e[0] = Rational(1);
        return e;
    }
    Element basis(int i) const {
        Element e = zero();
        e[static_cast<std::size_t>(i)] = Rational(1);
        return e;
    }
    /// Indices of degree-1 basis elements.
    std::vector<int> degree_one_basis() const {
        std::vector<int> v;
        for (int i = 0; i < rank(); ++i)
            if (deg_[static_cast<std::size_t>(i)] == 1) v.push_back(i);
        return v;
    }
    /// Degree-1 class from integer coefficients on degree_one_basis().
    Element line_class(const std::vector<Rational>& coeffs) const {
        auto idx = degree_one_basis();
        if (coeffs.size() != idx.size())
            throw BadParams("line bundle needs " + std::to_string(idx.size()) + " coefficients, got " + std::to_string(coeffs.size()));
        Element e = zero();
        for (std::size_t k = 0; k < idx.size(); ++k) e[static_cast<std::size_t>(idx[k])] = coeffs[k];
        return e;
    }

    template <class R>
    std::vector<R> mul_generic(const std::vector<R>& a, const std::vector<R>& b) const {
        std::vector<R> r(static_cast<std::size_t>(rank()), R(Rational(0)));
        for (int i = 0; i < rank(); ++i) {
            if (is_zero(a[static_cast<std::size_t>(i)])) continue;
            for (int j = 0; j < rank(); ++j) {
                if (is_zero(b[static_cast<std::size_t>(j)])) continue;
                const auto& s = table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (s.empty()) continue;
                R ab = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
                for (auto& [k, c] : s) r[static_cast<std::size_t>(k)] += ab * R(c);
            }
        }
        return r;
    }
    Element mul(const Element& a, const Element& b) const { return mul_generic<Rational>(a, b); }

    static Element add(const Element& a, const Element& b) {
        Element r = a;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
        return r;
    }
    static Element scale(const Element& a, const Rational& s) {
        Element r = a;
        for (auto& c : r) c *= s;
        return r;
    }
    /// Degree-k component.
    Element component(const Element& a, int k) const {
        Element r = zero();
        for (int i = 0; i < rank(); ++i)
            if (deg_[static_cast<std::size_t>(i)] == k) r[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)];
        return r;
    }
    Element power(const Element& a, int e) const {
        Element r = one();
        for (int k = 0; k < e; ++k) r = mul(r, a);
        return r;
    }
    /// (1 + a)^{-1} for a of positive degree.
    Element one_plus_inverse(const Element& a) const {
        Element r = one(), p = one();
        for (int k = 1; k <= dim_; ++k) {
            p = mul(p, scale(a, Rational(-1)));
            r = add(r, p);
        }
        return r;
    }

    template <class R>
    R integrate_generic(const std::vector<R>& a) const {
        R r(Rational(0));
        for (int i = 0; i < rank(); ++i)
            if (!integ_[static_cast<std::size_t>(i)].is_zero() && !is_zero(a[static_cast<std::size_t>(i)]))
                r += a[static_cast<std::size_t>(i)] * R(integ_[static_cast<std::size_t>(i)]);
        return r;
    }
    Rational integrate(const Element& a) const { return integrate_generic<Rational>(a); }

    Element chern_class(int k) const { return component(chern_, k); }

    /// All Chern numbers.
    ChernVector chern_vector() const {
        ChernVector cv(dim_);
        std::vector<Element> ck;
        for (int k = 0; k <= dim_; ++k) ck.push_back(chern_class(k));
        for (auto& [p, v] : cv.values()) {
            Element e = one();
            for (int part : p.parts()) e = mul(e, ck[static_cast<std::size_t>(part)]);
            cv.set(p, integrate(e));
        }
        return cv;
    }

    std::string element_str(const Element& a) const {
        std::string s;
        for (int i = 0; i < rank(); ++i) {
            const Rational& c = a[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")" + (i == 0 ? "" : "*" + labels_[static_cast<std::size_t>(i)]);
        }
        return s.empty() ? "0" : s;
    }

private:
    int dim_ = 0;
    std::vector<int> deg_;
    std::vector<std::string> labels_;
    std::vector<std::vector<Sparse>> table_;
    Element integ_;
    Element chern_;
};

/// A direct sum of line bundles and trivial summands over a base model.
struct SplitBundle {
    int trivial = 0;
    std::vector<CohomologyModel::Element> lines;  ///< first Chern classes, degree 1 in the base
    int rank() const { return trivial + static_cast<int>(lines.size()); }
};

/// Z[g]/g^{n+1} with c = (1+g)^{n+1}.
inline CohomologyModel cp_model(int n) {
    if (n < 0) throw BadParams("CP_n needs n >= 0");
    std::vector<int> deg;
    std::vector<std::string> lab;
    for (int k = 0; k <= n; ++k) {
        deg.push_back(k);
        lab.push_back(k == 0 ? "1" : (k == 1 ? "g" : "g^" + std::to_string(k)));
    }
    auto mul = [n](int i, int j) {
        CohomologyModel::Element e(static_cast<std::size_t>(n + 1));
        if (i + j <= n) e[static_cast<std::size_t>(i + j)] = Rational(1);
        return e;
    };
    CohomologyModel::Element integ(static_cast<std::size_t>(n + 1)), c(static_cast<std::size_t>(n + 1));
    integ[static_cast<std::size_t>(n)] = Rational(1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = binomial(n + 1, k);
    return CohomologyModel(n, deg, lab, mul, integ, c);
}

inline CohomologyModel point_model() { return cp_model(0); }

inline CohomologyModel product_model(const CohomologyModel& x, const CohomologyModel& y) {
    const int bx = x.rank(), by = y.rank();
    std::vector<int> deg;
    std::vector<std::string> lab;
    for (int i = 0; i < bx; ++i)
        for (int j = 0; j < by; ++j) {
            deg.push_back(x.degree(i) + y.degree(j));
            const std::string& a = x.labels()[static_cast<std::size_t>(i)];
            std::string b = y.labels()[static_cast<std::size_t>(j)];
            // primes keep labels of the second factor distinct
            if (j != 0) {
                for (std::size_t p = 0; p < b.size(); ++p)
                    if (b[p] == 'g' || b[p] == 't') b.insert(p + 1, "'"), ++p;
            }
            if (i == 0 && j == 0)
                lab.push_back("1");
            else if (i == 0)
                lab.push_back(b);
            else if (j == 0)
                lab.push_back(a);
            else
                lab.push_back(a + "*" + b);
        }
    auto mul = [&](int u, int v) {
        const int i1 = u / by, j1 = u % by, i2 = v / by, j2 = v % by;
        CohomologyModel::Element e(static_cast<std::size_t>(bx * by));
        for (auto& [k1, c1] : x.product_of(i1, i2))
            for (auto& [k2, c2] : y.product_of(j1, j2)) e[static_cast<std::size_t>(k1 * by + k2)] += c1 * c2;
        return e;
    };
    CohomologyModel::Element integ(static_cast<std::size_t>(bx * by)), c(static_cast<std::size_t>(bx * by));
    for (int i = 0; i < bx; ++i)
        for (int j = 0; j < by; ++j) {
            integ[static_cast<std::size_t>(i * by + j)] = x.integration()[static_cast<std::size_t>(i)] * y.integration()[static_cast<std::size_t>(j)];
            c[static_cast<std::size_t>(i * by + j)] = x.chern()[static_cast<std::size_t>(i)] * y.chern()[static_cast<std::size_t>(j)];
        }
    return CohomologyModel(x.dim() + y.dim(), deg, lab, mul, integ, c);
}

/// Zero locus of a section of L: c = c(ambient)/(1+c1(L)), integration against c1(L).
inline CohomologyModel hypersurface_model(const CohomologyModel& amb, const CohomologyModel::Element& L) {
    const int n = amb.dim();
    if (n < 1) throw BadParams("hypersurface needs an ambient of positive dimension");
    std::vector<int> keep;
    for (int i = 0; i < amb.rank(); ++i)
        if (amb.degree(i) <= n - 1) keep.push_back(i);
    std::vector<int> pos(static_cast<std::size_t>(amb.rank()), -1);
    for (std::size_t k = 0; k < keep.size(); ++k) pos[static_cast<std::size_t>(keep[k])] = static_cast<int>(k);
    auto restrict_elem = [&](const CohomologyModel::Element& e) {
        CohomologyModel::Element r(keep.size());
        for (std::size_t k = 0; k < keep.size(); ++k) r[k] = e[static_cast<std::size_t>(keep[k])];
        return r;
    };
    std::vector<int> deg;
    std::vector<std::string> lab;
    for (int i : keep) {
        deg.push_back(amb.degree(i));
        lab.push_back(amb.labels()[static_cast<std::size_t>(i)]);
    }
    auto mul = [&](int u, int v) { return restrict_elem(amb.mul(amb.basis(keep[static_cast<std::size_t>(u)]), amb.basis(keep[static_cast<std::size_t>(v)]))); };
    CohomologyModel::Element integ(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k)
        if (amb.degree(keep[k]) == n - 1) integ[k] = amb.integrate(amb.mul(amb.basis(keep[k]), L));
    CohomologyModel::Element c = restrict_elem(amb.mul(amb.chern(), amb.one_plus_inverse(L)));
    return CohomologyModel(n - 1, deg, lab, mul, integ, c);
}

/**
 * \brief Twisted projective bundle over `base` built from E and F.
 *
 * Ring: H*(B)[t] / prod over roots v of V = E + conj(F) of (t + v).
 * Chern class: prod(1 + t + x_i) prod(1 - t + y_j) c(B).
 * Integration: t^{p+q-1} * a maps to (-1)^q * integral of a over B.
 */
inline CohomologyModel twisted_proj_bundle_model(const CohomologyModel& base, const SplitBundle& E, const SplitBundle& F) {
    const int p = E.rank(), q = F.rank(), r = p + q;
    if (r == 0) throw RankZeroTotal("E and F are both zero");
    const int bb = base.rank();
    const int dim = base.dim() + r - 1;
    using El = CohomologyModel::Element;
    using TPoly = std::vector<El>;  // coefficients of t^k, base elements

    // roots of V
    std::vector<El> vroots;
    for (int k = 0; k < E.trivial; ++k) vroots.push_back(base.zero());
    for (auto& x : E.lines) vroots.push_back(x);
    for (int k = 0; k < F.trivial; ++k) vroots.push_back(base.zero());
    for (auto& y : F.lines) vroots.push_back(CohomologyModel::scale(y, Rational(-1)));
    // elementary symmetric c_i(V)
    std::vector<El> cV(static_cast<std::size_t>(r + 1), base.zero());
    cV[0] = base.one();
    for (auto& v : vroots)
        for (int i = r; i >= 1; --i) cV[static_cast<std::size_t>(i)] = CohomologyModel::add(cV[static_cast<std::size_t>(i)], base.mul(cV[static_cast<std::size_t>(i - 1)], v));

    auto reduce = [&](TPoly a) {
        for (int k = static_cast<int>(a.size()) - 1; k >= r; --k) {
            const El top = a[static_cast<std::size_t>(k)];
            bool nz = std::any_of(top.begin(), top.end(), [](const Rational& c) { return !c.is_zero(); });
            if (nz)
                for (int i = 1; i <= r; ++i)
                    a[static_cast<std::size_t>(k - i)] = CohomologyModel::add(a[static_cast<std::size_t>(k - i)], CohomologyModel::scale(base.mul(cV[static_cast<std::size_t>(i)], top), Rational(-1)));
            a.pop_back();
        }
        a.resize(static_cast<std::size_t>(r), base.zero());
        return a;
    };
    auto tmul = [&](const TPoly& a, const TPoly& b) {
        TPoly c(a.size() + b.size() - 1, base.zero());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = CohomologyModel::add(c[i + j], base.mul(a[i], b[j]));
        return reduce(c);
    };

    std::vector<int> deg;
    std::vector<std::string> lab;
    std::vector<std::pair<int, int>> idx;  // (base index, t power)
    std::vector<int> pos(static_cast<std::size_t>(bb * r), -1);
    for (int j = 0; j < r; ++j)
        for (int b = 0; b < bb; ++b) {
            if (base.degree(b) + j > dim) continue;
            pos[static_cast<std::size_t>(b * r + j)] = static_cast<int>(idx.size());
            idx.emplace_back(b, j);
            deg.push_back(base.degree(b) + j);
            std::string tl = j == 0 ? "" : (j == 1 ? "t" : "t^" + std::to_string(j));
            const std::string& bl = base.labels()[static_cast<std::size_t>(b)];
            if (b == 0)
                lab.push_back(j == 0 ? "1" : tl);
            else
                lab.push_back(j == 0 ? bl : bl + "*" + tl);
        }
    const int n = static_cast<int>(idx.size());
    auto to_tpoly = [&](int u) {
        TPoly a(static_cast<std::size_t>(r), base.zero());
        a[static_cast<std::size_t>(idx[static_cast<std::size_t>(u)].second)] = base.basis(idx[static_cast<std::size_t>(u)].first);
        return a;
    };
    auto from_tpoly = [&](const TPoly& a) {
        El e(static_cast<std::size_t>(n));
        for (int j = 0; j < r; ++j)
            for (int b = 0; b < bb; ++b) {
                const Rational& c = a[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)];
                if (c.is_zero()) continue;
                const int k = pos[static_cast<std::size_t>(b * r + j)];
                if (k >= 0) e[static_cast<std::size_t>(k)] += c;
            }
        return e;
    };
    auto mul = [&](int u, int v) { return from_tpoly(tmul(to_tpoly(u), to_tpoly(v))); };

    El integ(static_cast<std::size_t>(n));
    const Rational sign = (q % 2 == 0) ? Rational(1) : Rational(-1);
    for (int k = 0; k < n; ++k) {
        auto [b, j] = idx[static_cast<std::size_t>(k)];
        if (j == r - 1) integ[static_cast<std::size_t>(k)] = sign * base.integration()[static_cast<std::size_t>(b)];
    }

    // total Chern class
    auto linear = [&](const Rational& tc, const El& x) {
        TPoly a(static_cast<std::size_t>(std::max(r, 2)), base.zero());
        a[0] = CohomologyModel::add(base.one(), x);
        a[1] = CohomologyModel::add(a[1], CohomologyModel::scale(base.one(), tc));
        return a;
    };
    TPoly c(static_cast<std::size_t>(r), base.zero());
    c[0] = base.chern();
    for (int k = 0; k < E.trivial; ++k) c = tmul(c, linear(Rational(1), base.zero()));
    for (auto& x : E.lines) c = tmul(c, linear(Rational(1), x));
    for (int k = 0; k < F.trivial; ++k) c = tmul(c, linear(Rational(-1), base.zero()));
    for (auto& y : F.lines) c = tmul(c, linear(Rational(-1), y));
    return CohomologyModel(dim, deg, lab, mul, integ, from_tpoly(c));
}

/// c_1 of a split bundle.
inline CohomologyModel::Element bundle_c1(const CohomologyModel& base, const SplitBundle& b) {
    CohomologyModel::Element e = base.zero();
    for (auto& x : b.lines) e = CohomologyModel::add(e, x);
    return e;
}

inline ChernVector chern_vector(const CohomologyModel& m) { return m.chern_vector(); }

/** \brief A manifold class: Chern numbers plus, when available, a cohomology model. */
struct ManifoldClass {
    std::string name;
    ChernVector cv;
    std::optional<CohomologyModel> model;

    int dim() const { return cv.dim(); }
    static ManifoldClass from_model(std::string name, CohomologyModel m) {
        ManifoldClass c{std::move(name), m.chern_vector(), std::nullopt};
        c.model = std::move(m);
        return c;
    }
    static ManifoldClass from_numbers(std::string name, ChernVector cv) { return ManifoldClass{std::move(name), std::move(cv), std::nullopt}; }
};

/// Chern vector of a product, by partition convolution of the factors.
inline ChernVector product_chern_vector(const ChernVector& x, const ChernVector& y) {
    // c(X x Y) = c(X) c(Y); expand each c_I into bidegree pieces
    const int n = x.dim() + y.dim();
    ChernVector r(n);
    for (auto& [p, v] : r.values()) {
        // c_I[X x Y] = sum over splittings of each c_k into c_a(X) c_b(Y)
        // track pairs (partition in X, partition in Y) via a combined key
        std::map<std::pair<Partition, Partition>, Rational> cur{{{Partition(), Partition()}, Rational(1)}};
        for (int part : p.parts()) {
            std::map<std::pair<Partition, Partition>, Rational> nxt;
            for (auto& [key, c] : cur)
                for (int a = 0; a <= part; ++a) {
                    Partition px = a > 0 ? key.first + Partition::from_parts({a}) : key.first;
                    Partition py = part - a > 0 ? key.second + Partition::from_parts({part - a}) : key.second;
                    if (px.size() > x.dim() || py.size() > y.dim()) continue;
                    nxt[{px, py}] += c;
                }
            cur = std::move(nxt);
        }
        Rational s;
        for (auto& [key, c] : cur)
            if (key.first.size() == x.dim() && key.second.size() == y.dim()) s += c * x.get(key.first) * y.get(key.second);
        r.set(p, s);
    }
    return r;
}

namespace detail {

/// Graded pieces 0..dim of prod (1 + x_i), or prod (1 - x_i) when conj is set.
inline std::vector<CohomologyModel::Element> split_chern(const CohomologyModel& base, const SplitBundle& b, bool conj) {
    using El = CohomologyModel::Element;
    El c = base.one();
    for (auto& x : b.lines) c = base.mul(c, CohomologyModel::add(base.one(), conj ? CohomologyModel::scale(x, Rational(-1)) : x));
    std::vector<El> out;
    for (int k = 0; k <= base.dim(); ++k) out.push_back(base.component(c, k));
    return out;
}

inline Rational milnor_closed_form_surface(const CohomologyModel& B, const SplitBundle& E, const SplitBundle& F) {
    using M = CohomologyModel;
    const int p = E.rank(), q = F.rank();
    const auto cE = split_chern(B, E, false), cF = split_chern(B, F, false), cFbar = split_chern(B, F, true);
    const auto cV = B.mul(M::add(M::add(cE[0], cE[1]), cE[2]), M::add(M::add(cFbar[0], cFbar[1]), cFbar[2]));
    const auto v1 = B.component(cV, 1), v2 = B.component(cV, 2);
    auto t = M::scale(M::add(B.mul(v1, v1), M::scale(v2, Rational(-1))), Rational(p - q));
    t = M::add(t, M::scale(B.mul(v1, M::add(cE[1], cF[1])), -Rational(p + q + 1)));
    auto e = M::add(B.mul(cE[1], cE[1]), M::scale(B.mul(cF[1], cF[1]), Rational(-1)));
    e = M::add(e, M::scale(cE[2], Rational(-2)));
    e = M::add(e, M::scale(cF[2], Rational(2)));
    t = M::add(t, M::scale(e, binomial(p + q + 1, 2)));
    const Rational s = B.integrate(t);
    return q % 2 == 0 ? s : -s;
}

inline Rational milnor_closed_form_threefold(const CohomologyModel& B, const SplitBundle& E, const SplitBundle& F) {
    using M = CohomologyModel;
    const int p = E.rank(), q = F.rank();
    const auto cE = split_chern(B, E, false), cFbar = split_chern(B, F, true);
    auto ce = B.one(), cf = B.one();
    for (int k = 1; k <= 3; ++k) {
        ce = M::add(ce, cE[static_cast<std::size_t>(k)]);
        cf = M::add(cf, cFbar[static_cast<std::size_t>(k)]);
    }
    const auto cV = B.mul(ce, cf);
    const auto c1 = B.component(cV, 1), c2 = B.component(cV, 2), c3 = B.component(cV, 3);
    const Rational i111 = B.integrate(B.mul(B.mul(c1, c1), c1)), i12 = B.integrate(B.mul(c1, c2)), i3 = B.integrate(c3);
    Rational s = Rational(p + q) * (-i3 + Rational(2) * i12 - i111);
    s += Rational(p + q + 2) * (i111 - i12);
    s += binomial(p + q + 2, 2) * (-i111 + Rational(2) * i12);
    s += binomial(p + q + 2, 3) * (i111 - Rational(3) * i12 + Rational(3) * i3);
    return q % 2 == 0 ? s : -s;
}

}  // namespace detail

/**
 * \brief Milnor number of a twisted projective bundle from integrals over its base.
 *
 * Bases of dimension 2 and 3 are supported.
 */
inline Rational twisted_milnor_closed_form(const CohomologyModel& base, const SplitBundle& E, const SplitBundle& F) {
    if (base.dim() == 2) return detail::milnor_closed_form_surface(base, E, F);
    if (base.dim() == 3) return detail::milnor_closed_form_threefold(base, E, F);
    throw BadParams("closed form needs a base of dimension 2 or 3");
}

// ---------------------------------------------------------------- catalog

namespace catalog {

/// The quartic surface in CP_3.
inline CohomologyModel w2_model() {
    CohomologyModel cp3 = cp_model(3);
    return hypersurface_model(cp3, cp3.line_class({Rational(4)}));
}

/// W_{2n+1} for n >= 2: twisted bundle over W2 with E = (n-1) eps + nu^2, F = (n-2) eps + 2 nu^{-1}, nu = 4g.
inline CohomologyModel w_odd_model(int n) {
    if (n < 2) throw BadParams("W_{2n+1} needs n >= 2");
    CohomologyModel b = w2_model();
    SplitBundle E{n - 1, {b.line_class({Rational(8)})}};
    SplitBundle F{n - 2, {b.line_class({Rational(-4)}), b.line_class({Rational(-4)})}};
    return twisted_proj_bundle_model(b, E, F);
}

/// W_{2n+2} for n >= 2: twisted bundle over CP_3 with E = (n-1) eps + K, F = (n-1) eps + K^{-2}, K = 4g.
inline CohomologyModel w_even_model(int n) {
    if (n < 2) throw BadParams("W_{2n+2} needs n >= 2");
    CohomologyModel b = cp_model(3);
    SplitBundle E{n - 1, {b.line_class({Rational(4)})}};
    SplitBundle F{n - 1, {b.line_class({Rational(-8)})}};
    return twisted_proj_bundle_model(b, E, F);
}

/// Twisted CP_{p,q} over a point: c = (1+t)^p (1-t)^q.
inline CohomologyModel twisted_cp_model(int p, int q) {
    return twisted_proj_bundle_model(point_model(), SplitBundle{p, {}}, SplitBundle{q, {}});
}

inline ChernVector w3_numbers() {
    ChernVector cv(3);
    cv.set(Partition::from_parts({3}), Rational(2));
    return cv;
}

inline ChernVector w4_numbers() {
    ChernVector cv(4);
    cv.set(Partition::from_parts({2, 2}), Rational(2));
    cv.set(Partition::from_parts({4}), Rational(6));
    return cv;
}

/// Parses "W5", "CP3", "TwCP(3,1)", "K3", "point".
inline ManifoldClass lookup(const std::string& name) {
    auto parse_int = [&](const std::string& s) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) throw UnknownName("manifold '" + name + "'");
        return std::stoi(s);
    };
    if (name == "point") return ManifoldClass::from_model(name, point_model());
    if (name == "K3") return ManifoldClass::from_model(name, w2_model());
    if (name.rfind("CP", 0) == 0) return ManifoldClass::from_model(name, cp_model(parse_int(name.substr(2))));
    if (name.rfind("TwCP(", 0) == 0 && name.back() == ')') {
        const std::string inner = name.substr(5, name.size() - 6);
        const auto comma = inner.find(',');
        if (comma == std::string::npos) throw UnknownName("manifold '" + name + "'");
        return ManifoldClass::from_model(name, twisted_cp_model(parse_int(inner.substr(0, comma)), parse_int(inner.substr(comma + 1))));
    }
    if (name.size() >= 2 && name[0] == 'W') {
        const int k = parse_int(name.substr(1));
        switch (k) {
            case 1: return ManifoldClass::from_model(name, cp_model(1));
            case 2: return ManifoldClass::from_model(name, w2_model());
            case 3: return ManifoldClass::from_numbers(name, w3_numbers());
            case 4: return ManifoldClass::from_numbers(name, w4_numbers());
            default: break;
        }
        if (k >= 5 && k % 2 == 1) return ManifoldClass::from_model(name, w_odd_model((k - 1) / 2));
        if (k >= 6 && k % 2 == 0) return ManifoldClass::from_model(name, w_even_model((k - 2) / 2));
    }
    throw UnknownName("manifold '" + name + "'");
}

}  // namespace catalog

}  // namespace ellgen

#endif
