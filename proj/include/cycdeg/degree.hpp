#ifndef CYCDEG_DEGREE_HPP
#define CYCDEG_DEGREE_HPP

#include <cycdeg/bigint.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace cycdeg {

// q(n) = (n+2)/4 C(2n,n) - 3 2^(2n-3); exact for n >= 2 (the division by 4
// always clears; a remainder throws std::logic_error).
BigInt q_value(int n);

// H(n,r) = (2n-r-2)! n 2^(r-1) / ((n-r)! (n-r-1)!) for 0 <= r <= n-3, else 0.
// At r = 0 the power of two is the rational 1/2; the value is still integral.
BigInt h_closed(int n, int r);

// H(n,r) as the Schur/Lascoux sum over labeled subgraphs of the n-cycle:
// sum over r-edge labeled subgraphs and over b1 >= b2, b1 + b2 = r of
// M(gamma; b1, b2) psi_{n-2-b1, n-1-b2}.
BigInt h_combinatorial(int n, int r);

// F(n,r) = q(n-r) 2^(r+1) n (2n-r-1)! / (2n-2r)! for 0 <= r <= n-2, else 0.
BigInt f_closed(int n, int r);

// Which H feeds the F recurrence.
enum class HRoute { Combinatorial, Closed };

/*
 * Memoized evaluation of the recurrence
 *   F(n,r) = 2nr/(n-1) F(n-1,r-1) + 1/(n-r) F(n,r+1) + (n-r-2)/(n-r) H(n,r)
 * with base case F(3,0) = 1 and F = 0 outside 0 <= r <= n-3. With
 * HRoute::Combinatorial the route is independent of both closed forms.
 * One table per worker; the table is not synchronized.
 */
class FTable {
public:
    explicit FTable(HRoute route = HRoute::Combinatorial) : route_(route) {}
    BigInt value(int n, int r);

private:
    HRoute route_;
    std::map<std::pair<int, int>, BigInt> memo_;
};

// Fresh-table convenience for the fully combinatorial route.
BigInt f_recurrence(int n, int r);

// Thrown when two routes disagree on the same cell; never resolved silently.
struct RouteDisagreement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The combinatorial cross-check in degree() is enabled up to this n; the
// labeled-graph sum grows as n!/(n-r)! and stops being desk scale beyond it.
inline constexpr int kDegreeCrossCheckMax = 9;

struct DegreeRoutes {
    BigInt closed;                      // f_closed(n, 0)
    BigInt q;                           // q(n)
    std::optional<BigInt> recurrence;   // FTable with h_closed
    std::optional<BigInt> combinatorial; // FTable with h_combinatorial
    bool consistent = false;
};

DegreeRoutes degree_routes(int n, bool with_recurrence, bool with_combinatorial);

// deg L(C_n)^{-1} = F(n, 0); cross-checks the closed form against q(n) and
// the recurrence, plus the fully combinatorial route for n <= kDegreeCrossCheckMax.
// Throws RouteDisagreement when any pair differs.
BigInt degree(int n);

} // namespace cycdeg

#endif // CYCDEG_DEGREE_HPP
