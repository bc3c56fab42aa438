#include "clarr/poly.hpp"

#include <cctype>
#include <sstream>

namespace clarr {

HPoly substitute_linear(const HPoly& f, const std::array<std::array<Rat, 3>, 3>& M) {
    std::array<HPoly, 3> img;
    for (int i = 0; i < 3; ++i) {
        HPoly l(1);
        l.add_term({1, 0, 0}, M[i][0]);
        l.add_term({0, 1, 0}, M[i][1]);
        l.add_term({0, 0, 1}, M[i][2]);
        img[i] = l;
    }
    int mx = 0, my = 0, mz = 0;
    for (auto& [m, c] : f.terms()) {
        mx = std::max(mx, m.x);
        my = std::max(my, m.y);
        mz = std::max(mz, m.z);
    }
    auto powers = [](const HPoly& p, int n) {
        std::vector<HPoly> out;
        out.reserve(n + 1);
        out.push_back(HPoly::monomial({0, 0, 0}, Rat(1)));
        for (int i = 1; i <= n; ++i) out.push_back(out.back() * p);
        return out;
    };
    auto px = powers(img[0], mx), py = powers(img[1], my), pz = powers(img[2], mz);
    HPoly r(f.degree());
    for (auto& [m, c] : f.terms()) {
        HPoly t = c * (px[m.x] * py[m.y] * pz[m.z]);
        r = r + t;
    }
    return r;
}

std::vector<std::pair<Mono3, Int>> primitive_integer_terms(const HPoly& f) {
    std::vector<std::pair<Mono3, Int>> out;
    if (f.is_zero()) return out;
    Int lcm = 1;
    for (auto& [m, c] : f.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    Int content = 0;
    for (auto& [m, c] : f.terms()) {
        Int v = c.get_num() * (lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.emplace_back(m, v);
    }
    const bool flip = out.front().second < 0;
    for (auto& [m, v] : out) {
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
        if (flip) v = -v;
    }
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw SchemaError("polynomial parse error at position " + std::to_string(i) + ": " + what);
    }

    Int integer() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected an integer");
        return Int(s.substr(start, i - start));
    }

    // term := [coefficient] factor*   with '*' or adjacency between factors
    // coefficient := integer ['/' integer]
    // factor := ('x'|'y'|'z') ['^' integer]
    void term(HPoly& acc, int sign) {
        Rat coeff(sign);
        Mono3 mono;
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Int num = integer();
            Int den = 1;
            if (peek() == '/') {
                ++i;
                den = integer();
            }
            coeff *= make_rat(num, den);
            any = true;
        }
        while (true) {
            char c = peek();
            if (c == '*') {
                ++i;
                c = peek();
            }
            int* slot = nullptr;
            if (c == 'x') slot = &mono.x;
            else if (c == 'y') slot = &mono.y;
            else if (c == 'z') slot = &mono.z;
            else break;
            ++i;
            int exp = 1;
            if (peek() == '^') {
                ++i;
                Int e = integer();
                if (e < 0 || e > 64) fail("exponent out of range");
                exp = static_cast<int>(e.get_si());
            }
            *slot += exp;
            any = true;
        }
        if (!any) fail("expected a coefficient or a variable");
        acc.add_term(mono, coeff);
    }
};

} // namespace

HPoly parse_hpoly(const std::string& text) {
    Parser p(text);
    HPoly acc;
    int sign = 1;
    if (p.peek() == '-') {
        sign = -1;
        ++p.i;
    } else if (p.peek() == '+') {
        ++p.i;
    }
    try {
        while (true) {
            p.term(acc, sign);
            if (p.eof()) break;
            char c = p.peek();
            if (c == '+') sign = 1;
            else if (c == '-') sign = -1;
            else p.fail("expected '+' or '-'");
            ++p.i;
        }
    } catch (const Error& e) {
        throw SchemaError(std::string(e.what()) + " in '" + text + "'");
    }
    if (acc.is_zero()) throw SchemaError("zero polynomial: '" + text + "'");
    return acc;
}

std::string to_string(const HPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    // Descending graded-lex reads most naturally.
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string vars;
        auto add_var = [&vars](char v, int e) {
            if (!e) return;
            if (!vars.empty()) vars += '*';
            vars += v;
            if (e > 1) vars += "^" + std::to_string(e);
        };
        add_var('x', m.x);
        add_var('y', m.y);
        add_var('z', m.z);
        if (vars.empty()) os << to_string(a);
        else if (a == 1) os << vars;
        else os << to_string(a) << "*" << vars;
    }
    return os.str();
}

} // namespace clarr
