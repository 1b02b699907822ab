#pragma once

#include <map>
#include <set>

#include "ellh/rational.hpp"

namespace ellh {

bool is_probable_prime(const Int& n);

// Full factorization of |n| (n nonzero): trial division by primes below
// 10^5, then primality testing and Pollard-Brent splitting of the residual.
// Throws FactorizationOverflowError when a composite residual resists
// splitting within the iteration budget.
std::map<Int, int> factorize(const Int& n);

// Prime divisors of |n| as machine integers; FactorizationOverflowError if
// one exceeds the unsigned long range.
std::set<unsigned long> prime_divisors(const Int& n);

} // namespace ellh
