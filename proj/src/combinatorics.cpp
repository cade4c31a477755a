#include <cycdeg/combinatorics.hpp>

#include <stdexcept>

namespace cycdeg {

BigInt binomial(long long n, long long k) {
    if (n < 0) throw std::domain_error("binomial: n must be non-negative");
    if (k < 0 || k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt result(1);
    // numerator grows one factor ahead of the denominator, so every
    // intermediate division is exact
    for (long long i = 1; i <= k; ++i) {
        result *= BigInt(n - k + i);
        result = divexact(result, BigInt(i));
    }
    return result;
}

BigInt factorial(long long n) {
    if (n < 0) throw std::domain_error("factorial: n must be non-negative");
    BigInt result(1);
    for (long long i = 2; i <= n; ++i) result *= BigInt(i);
    return result;
}

} // namespace cycdeg
