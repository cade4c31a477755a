#include "doctest.h"

#include <stdexcept>

#include <cycdeg/combinatorics.hpp>
#include <cycdeg/marked_paths.hpp>

#include <algorithm>
#include <set>

using namespace cycdeg;

namespace {

const Step U = Step::Up;
const Step R = Step::Right;

// the two paths of the worked example at n = 15, r = 9, j = 10
MarkedPath example_p_prime() {
    return MarkedPath{{U, R, R, U, U, U, R, R, R}, {0, 3, 6, 7, 9}, {1, 1, 2, 1, 0}};
}

MarkedPath example_p() {
    return MarkedPath{{R, R, R, U, U, R, R, R, R}, {0, 3, 6, 7, 9}, {1, 1, 2, 1, 0}};
}

} // namespace

TEST_CASE("two-colored path count equals both sides of the identity") {
    CHECK(count_two_colored(4, 1) == BigInt(60));
    CHECK(two_colored_lhs(4, 1) == BigInt(60));
    CHECK(count_two_colored(3, 0) == BigInt(6));
    CHECK(count_two_colored(5, 2) == BigInt(360));
    CHECK(two_colored_rhs(5, 2) == BigInt(360));

    for (int n = 3; n <= 10; ++n) {
        for (int r = 0; r <= n - 3; ++r) {
            BigInt counted = count_two_colored(n, r);
            CHECK(counted == two_colored_lhs(n, r));
            CHECK(counted == two_colored_rhs(n, r));
        }
    }
}

TEST_CASE("materialized two-colored paths satisfy all four family properties") {
    for (int n : {4, 5, 6}) {
        for (int r = 0; r <= n - 3; ++r) {
            auto family = two_colored_paths(n, r);
            CHECK(BigInt(static_cast<long long>(family.size())) == count_two_colored(n, r));
            std::set<ColoredPath> distinct(family.begin(), family.end());
            CHECK(distinct.size() == family.size());
            for (const auto& path : family) {
                int red = 0, blue_up = 0, blue_right = 0, ups = 0, rights = 0;
                for (const auto& step : path) {
                    if (step.color == Color::Red) ++red;
                    else if (step.direction == Step::Up) ++blue_up;
                    else ++blue_right;
                    (step.direction == Step::Up ? ups : rights) += 1;
                }
                CHECK(red == r);
                CHECK(blue_up == n - r - 1);
                CHECK(blue_right == n - r - 1);
                // endpoint (rights, ups) lies on the stated antidiagonal segment
                CHECK(rights + ups == 2 * n - 2 - r);
                CHECK(rights >= n - 1 - r);
                CHECK(rights <= n - 1);
            }
        }
    }
}

TEST_CASE("marked path families have the stated sizes") {
    CHECK(enumerate_P_prime(4, 1, 2).size() == 3);
    CHECK(enumerate_P(5, 2, 3).size() == 9);
    CHECK(enumerate_P(5, 0, 4).size() == 1);
    CHECK(enumerate_P_prime(5, 0, 4).size() == 1);

    for (int n = 3; n <= 7; ++n) {
        for (int r = 0; r <= n - 3; ++r) {
            const long long total = n - 1 - r;
            for (int j = n - 1 - r; j <= n - 1; ++j) {
                auto p = enumerate_P(n, r, j);
                auto pp = enumerate_P_prime(n, r, j);
                BigInt expected = binomial(j, n - 1 - r) * binomial(2 * n - 2 - r - j, n - 1 - r);
                CHECK(BigInt(static_cast<long long>(p.size())) == expected);
                CHECK(BigInt(static_cast<long long>(pp.size())) == expected);
                for (const auto& path : p) CHECK(is_valid_marked_path(path, total));
                for (const auto& path : pp) CHECK(is_valid_marked_path(path, total));
                for (const auto& path : p) {
                    auto [x, y] = point_at(path, static_cast<int>(path.steps.size()));
                    CHECK(x + y == r);
                    CHECK(y <= std::min<long long>(n - 1 - j, j - (n - 1 - r)));
                }
            }
        }
    }
}

TEST_CASE("worked example: sequences of the red path") {
    auto [u, r] = path_to_sequences(example_p_prime());
    CHECK(u == "010111000");
    CHECK(r == "0110001011");
    MarkedPath back = sequences_to_path(u, r);
    CHECK(back == example_p_prime());
}

TEST_CASE("worked example: reflection sends the red path to the blue one") {
    CHECK(reflect_to_P(example_p_prime()) == example_p());
    CHECK(reflect_to_P_prime(example_p(), 4) == example_p_prime());
    // a path already below the diagonal is a fixed point
    CHECK(reflect_to_P(example_p()) == example_p());
}

TEST_CASE("degenerate single-mark path round trips") {
    MarkedPath point{{}, {0}, {4}};
    auto [u, r] = path_to_sequences(point);
    CHECK(u == "0000");
    CHECK(r == "0000");
    CHECK(sequences_to_path(u, r) == point);
}

TEST_CASE("sequence encoding is a bijection onto admissible pairs") {
    for (auto [n, r, j] : {std::array<int, 3>{6, 2, 4}, {6, 3, 3}, {7, 2, 5}}) {
        auto family = enumerate_P_prime(n, r, j);
        std::set<std::pair<std::string, std::string>> seen;
        for (const auto& path : family) {
            auto pair = path_to_sequences(path);
            CHECK(std::count(pair.first.begin(), pair.first.end(), '1') == n - 1 - j);
            CHECK(std::count(pair.first.begin(), pair.first.end(), '0') == n - 1 - r);
            CHECK(std::count(pair.second.begin(), pair.second.end(), '1') == r - n + 1 + j);
            CHECK(std::count(pair.second.begin(), pair.second.end(), '0') == n - 1 - r);
            CHECK(sequences_to_path(pair.first, pair.second) == path);
            seen.insert(pair);
        }
        // injective, and counting shows it is onto all admissible pairs
        CHECK(seen.size() == family.size());
        BigInt pairs = binomial(j, n - 1 - r) * binomial(2 * n - 2 - r - j, n - 1 - r);
        CHECK(BigInt(static_cast<long long>(seen.size())) == pairs);
    }
}

TEST_CASE("reflection is a bijection between the two families") {
    for (int n = 3; n <= 7; ++n) {
        for (int r = 0; r <= n - 3; ++r) {
            for (int j = n - 1 - r; j <= n - 1; ++j) {
                auto p = enumerate_P(n, r, j);
                auto pp = enumerate_P_prime(n, r, j);
                std::set<MarkedPath> targets(p.begin(), p.end());
                std::set<MarkedPath> images;
                for (const auto& path : pp) {
                    MarkedPath image = reflect_to_P(path);
                    CHECK(targets.count(image) == 1);
                    CHECK(reflect_to_P_prime(image, n - 1 - j) == path);
                    images.insert(image);
                }
                CHECK(images.size() == pp.size());
                CHECK(images.size() == targets.size());
            }
        }
    }
}

TEST_CASE("malformed sequences are rejected") {
    CHECK_THROWS_AS(sequences_to_path("01", "11"), std::invalid_argument);
    CHECK_THROWS_AS(sequences_to_path("0x", "0"), std::invalid_argument);
}

TEST_CASE("malformed marked paths are rejected by the encoder") {
    // missing endpoint mark
    CHECK_THROWS_AS(path_to_sequences(MarkedPath{{U, R}, {0}, {2}}), std::invalid_argument);
    // segment goes right then up without a mark in between
    CHECK_THROWS_AS(path_to_sequences(MarkedPath{{R, U}, {0, 2}, {1, 1}}), std::invalid_argument);
    // interior mark with assigned zero
    CHECK_THROWS_AS(path_to_sequences(MarkedPath{{U, R}, {0, 1, 2}, {1, 0, 1}}), std::invalid_argument);
}
