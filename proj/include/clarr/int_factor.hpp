#pragma once

#include <gmpxx.h>
#include <map>
#include <vector>

namespace clarr {

using Int = mpz_class;

/// Prime factorization of |n| as prime -> exponent (n != 0).
/// Trial division for small primes, Miller-Rabin + Pollard rho above that.
std::map<Int, int> factorize(const Int& n);

/// All positive divisors of |n|, unsorted. Intended for small factored numbers.
std::vector<Int> divisors(const Int& n);

/// Writes |n| = square * squarefree and returns {sqrt(square), squarefree}.
std::pair<Int, Int> squarefree_decomposition(const Int& n);

} // namespace clarr
