#include "doctest.h"

#include <stdexcept>

#include <cycdeg/divisors.hpp>
#include <cycdeg/rng.hpp>

using namespace cycdeg;

namespace {

std::vector<Rat> rats(std::initializer_list<Rat> v) { return v; }

} // namespace

TEST_CASE("s_in_l_basis matches the Picard relation") {
    CHECK(s_in_l_basis(3, 1).coeffs == rats({Rat(2), Rat(-1)}));
    CHECK(s_in_l_basis(3, 2).coeffs == rats({Rat(-1), Rat(2)}));
    CHECK(s_in_l_basis(5, 3).coeffs == rats({Rat(0), Rat(-1), Rat(2), Rat(-1)}));
    CHECK_THROWS_AS(s_in_l_basis(5, 0), std::out_of_range);
    CHECK_THROWS_AS(s_in_l_basis(5, 5), std::out_of_range);
}

TEST_CASE("l_last_in_s_basis and its round trip") {
    CHECK(l_last_in_s_basis(3) == rats({Rat(1, 3), Rat(2, 3)}));
    CHECK(l_last_in_s_basis(4) == rats({Rat(1, 4), Rat(2, 4), Rat(3, 4)}));

    for (int n = 3; n <= 30; ++n) {
        DivisorClass back = from_s_coords(n, l_last_in_s_basis(n));
        DivisorClass l_last{n, std::vector<Rat>(n - 1, Rat(0))};
        l_last.coeffs[n - 2] = Rat(1);
        CHECK(back == l_last);
    }
}

TEST_CASE("relation two holds across the admissible range") {
    CHECK(verify_relation_two(5, 0));
    CHECK(verify_relation_two(5, 2));
    CHECK(verify_relation_two(8, 6));
    for (int n = 3; n <= 30; ++n)
        for (int i = 0; i <= n - 2; ++i) CHECK(verify_relation_two(n, i));
}

TEST_CASE("the change of basis is invertible on every basis vector") {
    for (int n = 3; n <= 30; ++n) {
        for (int i = 0; i < n - 1; ++i) {
            std::vector<Rat> unit(n - 1, Rat(0));
            unit[i] = Rat(1);
            DivisorClass as_l = from_s_coords(n, unit);
            CHECK(to_s_coords(as_l) == unit);
        }
    }
}

TEST_CASE("basis conversions invert each other") {
    Rng rng(23, 0);
    for (int n = 3; n <= 12; ++n) {
        std::vector<Rat> s_coords;
        for (int i = 0; i < n - 1; ++i) s_coords.emplace_back(rng.in_range(-9, 9), rng.in_range(1, 5));
        DivisorClass in_l = from_s_coords(n, s_coords);
        CHECK(to_s_coords(in_l) == s_coords);

        DivisorClass l_class{n, {}};
        for (int i = 0; i < n - 1; ++i) l_class.coeffs.emplace_back(rng.in_range(-9, 9), rng.in_range(1, 5));
        CHECK(from_s_coords(n, to_s_coords(l_class)) == l_class);
    }
}
