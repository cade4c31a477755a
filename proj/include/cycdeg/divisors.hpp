#ifndef CYCDEG_DIVISORS_HPP
#define CYCDEG_DIVISORS_HPP

#include <cycdeg/rational.hpp>

#include <vector>

namespace cycdeg {

/*
 * Divisor classes on the space of complete quadrics for n x n symmetric
 * matrices, written in the basis L_1, ..., L_{n-1} of hyperplane pullbacks.
 * coeffs[i] is the coordinate of L_{i+1}.
 */
struct DivisorClass {
    int n = 0;
    std::vector<Rat> coeffs;

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

// The exceptional class S_i = -L_{i-1} + 2 L_i - L_{i+1}, with L_0 = L_n = 0.
// Requires n >= 3 and 1 <= i <= n-1.
DivisorClass s_in_l_basis(int n, int i);

// S-basis coordinates of L_{n-1}: (1/n, 2/n, ..., (n-1)/n).
std::vector<Rat> l_last_in_s_basis(int n);

// The class sum_i c_i S_i expressed in the L basis.
DivisorClass from_s_coords(int n, const std::vector<Rat>& c);

// Inverse of from_s_coords (solves the tridiagonal system exactly).
std::vector<Rat> to_s_coords(const DivisorClass& d);

// Checks L_{n-1} = (1/(n-i)) (L_i + sum_{j=1}^{n-i-1} j S_{i+j}), with L_0 = 0.
// Admissible range: n >= 3, 0 <= i <= n-2.
bool verify_relation_two(int n, int i);

} // namespace cycdeg

#endif // CYCDEG_DIVISORS_HPP
