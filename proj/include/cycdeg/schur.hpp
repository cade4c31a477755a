#ifndef CYCDEG_SCHUR_HPP
#define CYCDEG_SCHUR_HPP

#include <cycdeg/bigint.hpp>

#include <compare>
#include <map>
#include <vector>

namespace cycdeg {

/*
 * Two-row Schur polynomial calculus in two variables x1, x2.
 *
 * Partitions with three or more rows index Schur polynomials that vanish
 * in two variables, so every operation silently drops them.
 */
struct TwoRowPartition {
    long long b1 = 0;
    long long b2 = 0;

    long long size() const { return b1 + b2; }
    friend auto operator<=>(const TwoRowPartition&, const TwoRowPartition&) = default;
};

// Linear combination of s_{b1,b2}; all keys share the same size, all
// coefficients are strictly positive.
using SchurCombination = std::map<TwoRowPartition, BigInt>;

// Pieri step: s_{b1,b2} * s_a expanded over two-row shapes, i.e. all
// (c1, c2) with c1 + c2 = b1 + b2 + a and c1 >= b1 >= c2 >= b2.
SchurCombination pieri_multiply(const TwoRowPartition& p, long long a);
SchurCombination pieri_multiply(const SchurCombination& c, long long a);

// The product s_{a1} ... s_{ak} as a SchurCombination; empty product is s_{0,0}.
SchurCombination row_product(const std::vector<long long>& a);

// Coefficient of s_{b1,b2} in s_{a1} ... s_{ak}, by iterated Pieri steps.
// Requires every a_i positive and sum a_i = b1 + b2.
BigInt m_coefficient(const std::vector<long long>& a, const TwoRowPartition& b);

// Same coefficient by exhaustive enumeration of semistandard fillings of
// the shape (b1, b2) with content a: rows weakly increase, columns strictly
// increase, value i used exactly a_i times. Independent of the Pieri path.
BigInt m_coefficient_oracle(const std::vector<long long>& a, const TwoRowPartition& b);

} // namespace cycdeg

#endif // CYCDEG_SCHUR_HPP
