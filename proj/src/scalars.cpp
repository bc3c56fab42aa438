#include "clarr/scalars.hpp"

namespace clarr {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat parse_rat(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return make_rat(Int(text), 1);
        return make_rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw SchemaError("malformed rational literal: '" + text + "'");
    }
}

std::string to_string(const Rat& r) { return r.get_str(); }

std::string to_string(const Quad& q) {
    if (q.is_rational()) return to_string(q.rational_part());
    const std::string root = "sqrt(" + q.extension().get_str() + ")";
    std::string rhs;
    if (q.root_part() == 1) rhs = root;
    else if (q.root_part() == -1) rhs = "-" + root;
    else rhs = to_string(q.root_part()) + "*" + root;
    if (q.rational_part() == 0) return rhs;
    if (rhs[0] == '-') return to_string(q.rational_part()) + " - " + rhs.substr(1);
    return to_string(q.rational_part()) + " + " + rhs;
}

SqrtRepr sqrt_in_field(const Rat& q) {
    if (q == 0) return {Rat(0), Int(0)};
    // sqrt(n/d) = sqrt(n d)/d
    const Int n = q.get_num() * q.get_den();
    auto [root, rest] = squarefree_decomposition(n);
    Rat coeff = make_rat(root, q.get_den());
    if (rest == 1 && n > 0) return {coeff, Int(0)};
    return {coeff, n > 0 ? rest : Int(-rest)};
}

std::optional<Quad> sqrt_in_same_field(const Quad& x) {
    if (x.is_zero()) return Quad();
    if (x.is_rational()) {
        SqrtRepr r = sqrt_in_field(x.rational_part());
        return r.value();
    }
    // (alpha + beta sqrt m)^2 = x  with  alpha^2 + m beta^2 = a, 2 alpha beta = b.
    // Eliminating beta: alpha^2 = (a +- sqrt(a^2 - m b^2))/2, which must be a
    // rational square; a^2 - m b^2 is the field norm of x.
    SqrtRepr norm_root = sqrt_in_field(x.norm());
    if (norm_root.extension != 0) return std::nullopt;
    for (int sign : {+1, -1}) {
        Rat alpha_sq = (x.rational_part() + sign * norm_root.coefficient) / 2;
        if (alpha_sq <= 0) continue;
        SqrtRepr ar = sqrt_in_field(alpha_sq);
        if (ar.extension != 0) continue;
        Rat alpha = ar.coefficient;
        Rat beta = x.root_part() / (2 * alpha);
        Quad candidate(alpha, beta, x.extension());
        if (candidate * candidate == x) return candidate;
    }
    return std::nullopt;
}

} // namespace clarr
