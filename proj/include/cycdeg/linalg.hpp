#ifndef CYCDEG_LINALG_HPP
#define CYCDEG_LINALG_HPP

#include <cycdeg/rational.hpp>

#include <vector>

namespace cycdeg {

using RatMatrix = std::vector<std::vector<Rat>>;

// Rank over the rationals via fraction-free (Bareiss) elimination on the
// row-scaled integer matrix. Exact; no thresholds anywhere.
int rank_exact(const RatMatrix& m);

// Reduced row echelon form in place; returns the rank.
int rref(RatMatrix& m);

// Basis of the right kernel {x : m x = 0}.
std::vector<std::vector<Rat>> nullspace(const RatMatrix& m);

RatMatrix identity_matrix(int n);

} // namespace cycdeg

#endif // CYCDEG_LINALG_HPP
