#include "clarr/int_factor.hpp"

#include <algorithm>
#include <cstdlib>

namespace clarr {

namespace {

Int pollard_rho(const Int& n) {
    // n odd composite, not a prime power of interest; Brent's variant.
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC1A77UL);
    while (true) {
        Int y = rng.get_z_range(n - 2) + 1;
        Int c = rng.get_z_range(n - 2) + 1;
        Int x = y, d = 1, q = 1, ys = y;
        unsigned long r = 1;
        const unsigned long m = 128;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (d == n) {
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                Int diff = abs(x - ys);
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (d != n) return d;
    }
}

void factor_into(Int n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 32) != 0) {
        out[n] += 1;
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Int r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        std::map<Int, int> sub;
        factor_into(r, sub);
        for (auto& [p, e] : sub) out[p] += 2 * e;
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

std::map<Int, int> factorize(const Int& n) {
    std::map<Int, int> out;
    Int m = abs(n);
    if (m <= 1) return out;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            out[Int(p)] += 1;
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    unsigned long p = 17;
    while (m > 1 && p < 100000) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            out[Int(p)] += 1;
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        } else {
            p += 2;
        }
    }
    if (m > 1) factor_into(m, out);
    return out;
}

std::vector<Int> divisors(const Int& n) {
    std::vector<Int> out{Int(1)};
    for (auto& [p, e] : factorize(n)) {
        const size_t base = out.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

std::pair<Int, Int> squarefree_decomposition(const Int& n) {
    Int root = 1, rest = 1;
    for (auto& [p, e] : factorize(n)) {
        for (int i = 0; i < e / 2; ++i) root *= p;
        if (e % 2) rest *= p;
    }
    return {root, rest};
}

} // namespace clarr
