#ifndef CYCDEG_COMBINATORICS_HPP
#define CYCDEG_COMBINATORICS_HPP

#include <cycdeg/bigint.hpp>

namespace cycdeg {

// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
BigInt binomial(long long n, long long k);

// n! for n >= 0.
BigInt factorial(long long n);

} // namespace cycdeg

#endif // CYCDEG_COMBINATORICS_HPP
