#pragma once

#include <gmpxx.h>
#include <optional>
#include <string>

#include "clarr/errors.hpp"
#include "clarr/int_factor.hpp"

namespace clarr {

/// Exact rational, kept in canonical form (gcd(|num|, den) = 1, den > 0).
using Rat = mpq_class;

/// num/den with canonicalization; throws on zero denominator.
Rat make_rat(const Int& num, const Int& den);

/// Parses "p", "-p" or "p/q".
Rat parse_rat(const std::string& text);

std::string to_string(const Rat& r);

inline int bit_size(const Int& n) {
    return n == 0 ? 0 : static_cast<int>(mpz_sizeinbase(n.get_mpz_t(), 2));
}
inline int bit_size(const Rat& r) { return bit_size(r.get_num()); }

/// Element a + b*sqrt(m) of Q or of a quadratic extension Q(sqrt(m)).
///
/// m is a squarefree integer != 1; m = 0 encodes "pure rational" and then
/// b = 0.  A value whose b becomes 0 is demoted to m = 0 on the spot, so a
/// rational value compares equal regardless of the extension it was computed
/// in.  Binary operations require compatible tags: equal m, or at least one
/// operand rational.  Values are immutable in spirit: every operation returns
/// a fresh canonical value.
class Quad {
public:
    Quad() : a_(0), b_(0), m_(0) {}
    Quad(int v) : a_(v), b_(0), m_(0) {} // NOLINT: implicit by design
    Quad(const Rat& a) : a_(a), b_(0), m_(0) {} // NOLINT
    Quad(Rat a, Rat b, Int m) : a_(std::move(a)), b_(std::move(b)), m_(std::move(m)) {
        normalize();
    }

    const Rat& rational_part() const { return a_; }
    const Rat& root_part() const { return b_; }
    const Int& extension() const { return m_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    /// The rational value when b = 0.
    std::optional<Rat> demote() const {
        if (b_ == 0) return a_;
        return std::nullopt;
    }

    /// Image under sqrt(m) -> -sqrt(m).
    Quad conjugate() const { return Quad(a_, -b_, m_); }

    /// a^2 - m b^2; zero only for the zero value.
    Rat norm() const { return a_ * a_ - Rat(m_) * b_ * b_; }

    Quad operator-() const { return Quad(-a_, -b_, m_); }

    friend Quad operator+(const Quad& x, const Quad& y) {
        Int m = merged_tag(x, y);
        return Quad(x.a_ + y.a_, x.b_ + y.b_, m);
    }
    friend Quad operator-(const Quad& x, const Quad& y) {
        Int m = merged_tag(x, y);
        return Quad(x.a_ - y.a_, x.b_ - y.b_, m);
    }
    friend Quad operator*(const Quad& x, const Quad& y) {
        Int m = merged_tag(x, y);
        return Quad(x.a_ * y.a_ + Rat(m) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, m);
    }
    friend Quad operator/(const Quad& x, const Quad& y) {
        if (y.is_zero()) throw DivisionByZeroError("division by zero scalar");
        Int m = merged_tag(x, y);
        // 1/(a+b sqrt m) = (a - b sqrt m)/(a^2 - m b^2)
        Rat n = y.norm();
        Quad conj = y.conjugate();
        Quad num = x * conj;
        return Quad(num.a_ / n, num.b_ / n, m);
    }

    Quad& operator+=(const Quad& y) { return *this = *this + y; }
    Quad& operator-=(const Quad& y) { return *this = *this - y; }
    Quad& operator*=(const Quad& y) { return *this = *this * y; }
    Quad& operator/=(const Quad& y) { return *this = *this / y; }

    friend bool operator==(const Quad& x, const Quad& y) {
        if (x.b_ == 0 && y.b_ == 0) return x.a_ == y.a_;
        return x.m_ == y.m_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }

    /// Deterministic total order (no numeric meaning for m < 0).
    friend int compare(const Quad& x, const Quad& y) {
        if (int c = cmp(x.m_, y.m_)) return c;
        if (int c = cmp(x.a_, y.a_)) return c;
        return cmp(x.b_, y.b_);
    }

private:
    static Int merged_tag(const Quad& x, const Quad& y) {
        if (x.b_ == 0) return y.m_;
        if (y.b_ == 0) return x.m_;
        if (x.m_ != y.m_)
            throw MixedExtensionError("operands live in distinct extensions sqrt(" +
                                      x.m_.get_str() + ") and sqrt(" + y.m_.get_str() + ")");
        return x.m_;
    }
    void normalize() {
        if (b_ == 0) m_ = 0;
    }

    Rat a_, b_;
    Int m_;
};

inline int bit_size(const Quad& q) {
    return std::max(bit_size(q.rational_part()), bit_size(q.root_part()));
}

/// Renders "a", "b*sqrt(m)" or "a + b*sqrt(m)" with canonical rational parts.
std::string to_string(const Quad& q);

struct SqrtRepr {
    Rat coefficient;  ///< r in sqrt(q) = r * sqrt(m)
    Int extension;    ///< squarefree m; 0 when the root is rational
    Quad value() const { return extension == 0 ? Quad(coefficient) : Quad(Rat(0), coefficient, extension); }
};

/// Writes sqrt(q) as r*sqrt(m) with r rational and m squarefree (m may be
/// negative); m = 0 when q is a perfect square of a rational. Total.
SqrtRepr sqrt_in_field(const Rat& q);

/// Square root of x inside its own field Q(sqrt(m)) if one exists there.
std::optional<Quad> sqrt_in_same_field(const Quad& x);

} // namespace clarr
