#include "doctest.h"

#include <stdexcept>

#include <cycdeg/bigint.hpp>
#include <cycdeg/combinatorics.hpp>
#include <cycdeg/rational.hpp>
#include <cycdeg/rng.hpp>

#include <vector>

using namespace cycdeg;

namespace {

// Pascal-triangle oracle, independent of the multiplicative implementation.
std::vector<std::vector<BigInt>> pascal_rows(int max_n) {
    std::vector<std::vector<BigInt>> rows(max_n + 1);
    for (int n = 0; n <= max_n; ++n) {
        rows[n].assign(n + 1, BigInt(1));
        for (int k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
    }
    return rows;
}

BigInt random_bigint(Rng& rng) {
    BigInt v(static_cast<long long>(rng.next() % 2000001) - 1000000);
    int extra = static_cast<int>(rng.below(3));
    for (int i = 0; i < extra; ++i) v = v * BigInt(static_cast<long long>(rng.next() % 1000000007)) + BigInt(rng.in_range(-50, 50));
    return v;
}

} // namespace

TEST_CASE("bigint string round trip and comparisons") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-1).to_string() == "-1");
    CHECK(BigInt::from_string("137846528820").to_string() == "137846528820");
    CHECK(BigInt::from_string("-987654321098765432109876543210").to_string() ==
          "-987654321098765432109876543210");
    CHECK(BigInt(5) < BigInt(7));
    CHECK(BigInt(-5) > BigInt(-7));
    CHECK(BigInt::two_pow(64).to_string() == "18446744073709551616");

    Rng rng(7, 0);
    for (int i = 0; i < 200; ++i) {
        BigInt v = random_bigint(rng);
        CHECK(BigInt::from_string(v.to_string()) == v);
    }
}

TEST_CASE("bigint ring identities on random values") {
    Rng rng(11, 0);
    for (int i = 0; i < 300; ++i) {
        BigInt a = random_bigint(rng);
        BigInt b = random_bigint(rng);
        BigInt c = random_bigint(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) - b == a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) {
            BigInt q, r;
            BigInt::divmod(a, b, q, r);
            CHECK(q * b + r == a);
            CHECK(r.abs() < b.abs());
            if (!r.is_zero()) CHECK(r.sign() == a.sign());
            CHECK((a * b) / b == a);
        }
    }
}

TEST_CASE("gcd and divexact") {
    CHECK(gcd(BigInt(12), BigInt(-18)) == BigInt(6));
    CHECK(gcd(BigInt(0), BigInt(5)) == BigInt(5));
    CHECK(divexact(BigInt(91), BigInt(7)) == BigInt(13));
    CHECK_THROWS_AS(divexact(BigInt(10), BigInt(3)), std::logic_error);

    Rng rng(13, 0);
    for (int i = 0; i < 100; ++i) {
        BigInt a = random_bigint(rng);
        BigInt b = random_bigint(rng);
        if (a.is_zero() && b.is_zero()) continue;
        BigInt g = gcd(a, b);
        CHECK(!g.is_negative());
        if (!a.is_zero()) CHECK((a % g).is_zero());
        if (!b.is_zero()) CHECK((b % g).is_zero());
    }
}

TEST_CASE("binomial values") {
    CHECK(binomial(6, 3) == BigInt(20));
    CHECK(binomial(5, 7) == BigInt(0));
    CHECK(binomial(5, -1) == BigInt(0));
    CHECK(binomial(0, 0) == BigInt(1));

    auto rows = pascal_rows(60);
    CHECK(binomial(40, 20) == rows[40][20]);
    CHECK(binomial(40, 20) == BigInt::from_string("137846528820"));
}

TEST_CASE("binomial satisfies the Pascal recurrence and row sums") {
    auto rows = pascal_rows(60);
    for (int n = 1; n <= 60; ++n) {
        BigInt row_sum(0);
        for (int k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == rows[n][k]);
            row_sum += binomial(n, k);
        }
        CHECK(row_sum == BigInt::two_pow(static_cast<unsigned>(n)));
        for (int k = 1; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
}

TEST_CASE("factorial values") {
    CHECK(factorial(0) == BigInt(1));
    CHECK(factorial(5) == BigInt(120));

    // repeated multiplication oracle
    unsigned long long acc = 1;
    for (unsigned long long i = 1; i <= 20; ++i) acc *= i;
    CHECK(factorial(20) == BigInt(static_cast<long long>(acc)));
    CHECK(factorial(20) == BigInt::from_string("2432902008176640000"));
}

TEST_CASE("rationals stay normalized and round trip") {
    Rat half(2, 4);
    CHECK(half.numerator() == BigInt(1));
    CHECK(half.denominator() == BigInt(2));
    CHECK(Rat(3, -6) == Rat(-1, 2));
    CHECK(Rat(0, 17).denominator() == BigInt(1));
    CHECK_THROWS_AS(Rat(BigInt(1), BigInt(0)), std::domain_error);
    CHECK(Rat(7, 3).to_string() == "7/3");

    Rng rng(17, 0);
    for (int i = 0; i < 300; ++i) {
        Rat x(rng.in_range(-40, 40), rng.in_range(1, 23));
        Rat y(rng.in_range(-40, 40), rng.in_range(1, 23));
        CHECK((x + y) - y == x);
        CHECK(gcd(x.numerator(), x.denominator()) == BigInt(1));
        CHECK(!x.denominator().is_negative());
        if (!y.is_zero()) CHECK((x / y) * y == x);
    }
}
