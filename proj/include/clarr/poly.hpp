#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "clarr/scalars.hpp"

namespace clarr {

// ---------------------------------------------------------------------------
// Monomials

struct Mono3 {
    int x = 0, y = 0, z = 0;
    int deg() const { return x + y + z; }
    friend bool operator==(const Mono3&, const Mono3&) = default;
    friend Mono3 operator*(const Mono3& a, const Mono3& b) {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
};

/// Graded lexicographic order (degree first, then x, y, z exponents).
struct Mono3Less {
    bool operator()(const Mono3& a, const Mono3& b) const {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

struct Mono2 {
    int u = 0, v = 0;
    int deg() const { return u + v; }
    friend bool operator==(const Mono2&, const Mono2&) = default;
};

struct Mono2Less {
    bool operator()(const Mono2& a, const Mono2& b) const {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        return a.u < b.u;
    }
};

// ---------------------------------------------------------------------------
// Homogeneous polynomial in x, y, z

/// Sparse homogeneous polynomial of a fixed formal degree. The zero
/// polynomial keeps its formal degree and an empty term map; nonzero terms
/// all have total degree equal to the formal degree, and zero coefficients
/// are never stored.
template <class S>
class Poly3 {
public:
    using Terms = std::map<Mono3, S, Mono3Less>;

    Poly3() = default;
    explicit Poly3(int degree) : degree_(degree) {}

    static Poly3 monomial(const Mono3& m, const S& c) {
        Poly3 p(m.deg());
        if (!(c == S(0))) p.terms_[m] = c;
        return p;
    }

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Mono3& m, const S& c) {
        if (c == S(0)) return;
        if (terms_.empty() && degree_ < 0) degree_ = m.deg();
        if (m.deg() != degree_)
            throw Error("non-homogeneous term: degree " + std::to_string(m.deg()) +
                        " in a polynomial of degree " + std::to_string(degree_));
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == S(0)) terms_.erase(it);
        }
    }

    S coeff(const Mono3& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? S(0) : it->second;
    }

    friend Poly3 operator+(const Poly3& a, const Poly3& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        Poly3 r = a;
        for (auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Poly3 operator-(const Poly3& a, const Poly3& b) {
        if (b.is_zero()) return a;
        Poly3 r = a.is_zero() ? Poly3(b.degree_) : a;
        for (auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend Poly3 operator*(const Poly3& a, const Poly3& b) {
        Poly3 r(a.degree_ + b.degree_);
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    friend Poly3 operator*(const S& c, const Poly3& a) {
        Poly3 r(a.degree_);
        if (c == S(0)) return r;
        for (auto& [m, v] : a.terms_) r.terms_[m] = c * v;
        return r;
    }
    friend bool operator==(const Poly3& a, const Poly3& b) { return a.terms_ == b.terms_; }

private:
    int degree_ = -1;
    Terms terms_;
};

using HPoly = Poly3<Rat>;

template <class S>
std::array<Poly3<S>, 3> partials(const Poly3<S>& f) {
    std::array<Poly3<S>, 3> out{Poly3<S>(f.degree() - 1), Poly3<S>(f.degree() - 1),
                                Poly3<S>(f.degree() - 1)};
    for (auto& [m, c] : f.terms()) {
        if (m.x) out[0].add_term({m.x - 1, m.y, m.z}, S(m.x) * c);
        if (m.y) out[1].add_term({m.x, m.y - 1, m.z}, S(m.y) * c);
        if (m.z) out[2].add_term({m.x, m.y, m.z - 1}, S(m.z) * c);
    }
    return out;
}

/// Evaluation with scalar promotion (rational coefficients at quadratic points).
template <class S, class T>
T eval(const Poly3<S>& f, const T& x, const T& y, const T& z) {
    // Power tables keep the cost linear in the term count.
    int mx = 0, my = 0, mz = 0;
    for (auto& [m, c] : f.terms()) {
        mx = std::max(mx, m.x);
        my = std::max(my, m.y);
        mz = std::max(mz, m.z);
    }
    auto powers = [](const T& t, int n) {
        std::vector<T> p(n + 1, T(1));
        for (int i = 1; i <= n; ++i) p[i] = p[i - 1] * t;
        return p;
    };
    auto px = powers(x, mx), py = powers(y, my), pz = powers(z, mz);
    T acc(0);
    for (auto& [m, c] : f.terms()) acc += T(c) * px[m.x] * py[m.y] * pz[m.z];
    return acc;
}

/// True when q = c * p for a nonzero scalar c.
template <class S>
bool proportional(const Poly3<S>& p, const Poly3<S>& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    if (p.term_count() != q.term_count() || p.degree() != q.degree()) return false;
    auto ip = p.terms().begin();
    auto iq = q.terms().begin();
    S ratio = iq->second / ip->second;
    for (; ip != p.terms().end(); ++ip, ++iq) {
        if (!(ip->first == iq->first) || !(iq->second == ratio * ip->second)) return false;
    }
    return true;
}

/// Substitutes x_i -> sum_j M[i][j] * x_j (an exact linear change of coordinates).
HPoly substitute_linear(const HPoly& f, const std::array<std::array<Rat, 3>, 3>& M);

/// Primitive integer coefficient list: scaled by the denominator lcm, divided
/// by the content, first (grlex-least) coefficient positive.
std::vector<std::pair<Mono3, Int>> primitive_integer_terms(const HPoly& f);

/// Parses the documented ASCII grammar over x, y, z with integer or rational
/// coefficients, '^' exponents and '*' products. Requires homogeneity.
HPoly parse_hpoly(const std::string& text);

std::string to_string(const HPoly& f);

// ---------------------------------------------------------------------------
// Affine polynomial in two chart variables

template <class S>
class Poly2 {
public:
    using Terms = std::map<Mono2, S, Mono2Less>;

    Poly2() = default;

    void add_term(const Mono2& m, const S& c) {
        if (c == S(0)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == S(0)) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    /// Order of vanishing at the origin (minimal total degree; -1 for zero).
    int ord() const { return terms_.empty() ? -1 : terms_.begin()->first.deg(); }
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.deg(); }

    /// Drops all terms of total degree >= n.
    Poly2 truncated(int n) const {
        Poly2 r;
        for (auto& [m, c] : terms_) {
            if (m.deg() >= n) break;
            r.terms_.emplace(m, c);
        }
        return r;
    }

    friend Poly2 operator*(const S& c, const Poly2& a) {
        Poly2 r;
        if (c == S(0)) return r;
        for (auto& [m, v] : a.terms_) r.terms_[m] = c * v;
        return r;
    }

private:
    Terms terms_;
};

template <class S>
std::array<Poly2<S>, 2> partials2(const Poly2<S>& f) {
    std::array<Poly2<S>, 2> out;
    for (auto& [m, c] : f.terms()) {
        if (m.u) out[0].add_term({m.u - 1, m.v}, S(m.u) * c);
        if (m.v) out[1].add_term({m.u, m.v - 1}, S(m.v) * c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dense univariate polynomial

template <class S>
class Poly1 {
public:
    Poly1() = default;
    explicit Poly1(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly1 constant(const S& c) { return Poly1(std::vector<S>{c}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<S>& coeffs() const { return c_; }
    S coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : S(0); }
    const S& lead() const { return c_.back(); }

    friend Poly1 operator+(const Poly1& a, const Poly1& b) {
        std::vector<S> r(std::max(a.c_.size(), b.c_.size()), S(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly1(std::move(r));
    }
    friend Poly1 operator-(const Poly1& a, const Poly1& b) {
        std::vector<S> r(std::max(a.c_.size(), b.c_.size()), S(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return Poly1(std::move(r));
    }
    friend Poly1 operator*(const Poly1& a, const Poly1& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<S> r(a.c_.size() + b.c_.size() - 1, S(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly1(std::move(r));
    }
    friend Poly1 operator*(const S& s, const Poly1& a) {
        if (s == S(0)) return {};
        std::vector<S> r = a.c_;
        for (auto& v : r) v = s * v;
        return Poly1(std::move(r));
    }
    friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }

    template <class T>
    T eval(const T& t) const {
        T acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * t + T(c_[i]);
        return acc;
    }

    Poly1 derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<S> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = S(static_cast<long>(i)) * c_[i];
        return Poly1(std::move(r));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == S(0)) c_.pop_back();
    }
    std::vector<S> c_;
};

/// Quotient of exact division; throws if the division leaves a remainder.
template <class S>
Poly1<S> divexact(const Poly1<S>& a, const Poly1<S>& b) {
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    if (a.is_zero()) return {};
    std::vector<S> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) throw Error("inexact polynomial division");
    std::vector<S> q(a.degree() - db + 1, S(0));
    for (int i = a.degree(); i >= db; --i) {
        S f = rem[i] / b.lead();
        if (f == S(0)) continue;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeff(j);
    }
    for (auto& v : rem)
        if (!(v == S(0))) throw Error("inexact polynomial division");
    return Poly1<S>(std::move(q));
}

/// Remainder of Euclidean division over a field.
template <class S>
Poly1<S> mod(const Poly1<S>& a, const Poly1<S>& b) {
    std::vector<S> rem = a.coeffs();
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        S f = rem[i] / b.lead();
        if (f == S(0)) continue;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeff(j);
    }
    return Poly1<S>(std::move(rem));
}

/// Monic gcd over a field.
template <class S>
Poly1<S> gcd(Poly1<S> a, Poly1<S> b) {
    while (!b.is_zero()) {
        Poly1<S> r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return (S(1) / a.lead()) * a;
}

} // namespace clarr
