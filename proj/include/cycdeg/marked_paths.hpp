#ifndef CYCDEG_MARKED_PATHS_HPP
#define CYCDEG_MARKED_PATHS_HPP

#include <cycdeg/bigint.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cycdeg {

enum class Step : uint8_t { Up, Right };

enum class Color : uint8_t { Red, Blue };

struct ColoredStep {
    Step direction;
    Color color;

    friend auto operator<=>(const ColoredStep&, const ColoredStep&) = default;
};

// Monotone path whose steps carry a color; the families counted here have
// exactly r red steps and n-r-1 blue steps in each direction.
using ColoredPath = std::vector<ColoredStep>;

/*
 * Monotone lattice path from (0,0) with marked points and an assigned
 * non-negative integer per mark. Marks are indices into the sequence of
 * lattice points visited (0 = start, steps.size() = end); both endpoints
 * are always marked, between consecutive marks the path goes up-then-right,
 * and interior marks carry a positive assigned number.
 */
struct MarkedPath {
    std::vector<Step> steps;
    std::vector<int> marks;
    std::vector<long long> assigned;

    friend auto operator<=>(const MarkedPath&, const MarkedPath&) = default;
};

// Structural validity; total is the required sum of assigned numbers.
bool is_valid_marked_path(const MarkedPath& p, long long total);

// Lattice point reached after the first `index` steps.
std::pair<long long, long long> point_at(const MarkedPath& p, int index);

// Counts, by exhaustive enumeration, the two-colored monotone paths with
// exactly r red steps, n-r-1 blue right steps and n-r-1 blue up steps.
BigInt count_two_colored(int n, int r);

// Materialized version of the same family, for small n.
std::vector<ColoredPath> two_colored_paths(int n, int r);

// The same count as a binomial sum over endpoints:
// sum_j C(2n-2-r, j) C(j, n-1-r) C(2n-2-r-j, n-1-r).
BigInt two_colored_lhs(int n, int r);

// And as the closed form (2n-2-r)! 2^r / ((n-r-1)!^2 r!).
BigInt two_colored_rhs(int n, int r);

// The family P: paths to (b1, b2) with b1 + b2 = r and
// b2 <= min(n-1-j, j-(n-1-r)), weakly below the diagonal y = x,
// assigned numbers summing to n-1-r. Sorted canonically.
std::vector<MarkedPath> enumerate_P(int n, int r, int j);

// The family P': paths to (r-n+1+j, n-1-j), no diagonal constraint.
std::vector<MarkedPath> enumerate_P_prime(int n, int r, int j);

// Encoding of a path in P' as binary sequences (U, R): zeros spell out the
// assigned numbers at marks, ones the up (resp. right) steps, in path order.
std::pair<std::string, std::string> path_to_sequences(const MarkedPath& p);

// Inverse of path_to_sequences. Throws std::invalid_argument on malformed input.
MarkedPath sequences_to_path(const std::string& u, const std::string& r);

// Reflection P' -> P: repeatedly flips the up-step into the first point of
// maximal excess y - x until the path is weakly below the diagonal.
MarkedPath reflect_to_P(const MarkedPath& p);

// Inverse reflection: flips the right-step out of the last point on the
// current ceiling line until the endpoint height reaches target_y = n-1-j.
MarkedPath reflect_to_P_prime(const MarkedPath& p, long long target_y);

} // namespace cycdeg

#endif // CYCDEG_MARKED_PATHS_HPP
