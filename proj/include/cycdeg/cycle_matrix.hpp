#ifndef CYCDEG_CYCLE_MATRIX_HPP
#define CYCDEG_CYCLE_MATRIX_HPP

#include <cycdeg/linalg.hpp>
#include <cycdeg/rng.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cycdeg {

/*
 * Symmetric matrix supported on the diagonal and the edges of the n-cycle:
 * diag(i) = a_i at (i,i), off(i) = b_i at (i, i+1) and (i+1, i), with b_n
 * sitting at (n, 1). Everything is 1-based in the math and 0-based in the
 * vectors.
 */
struct CycleMatrix {
    int n = 0;
    std::vector<Rat> a; // size n
    std::vector<Rat> b; // size n

    RatMatrix expand() const;
};

// Z(A) = { i : b_i = 0 }, sorted, 1-based.
std::vector<int> zero_set(const CycleMatrix& m);

/*
 * Cyclic-block decomposition. With zeros z_1 < ... < z_k, block t (0-based)
 * spans rows z_{t+1} ... z_{t+2} cyclically, i.e. the first listed block
 * starts right after the smallest zero. Each block is tridiagonal.
 */
struct BlockDecomposition {
    std::vector<int> zeros;
    std::vector<std::vector<int>> blocks; // 1-based row/column indices per block

    std::vector<int> sizes() const;
};

// Requires Z(A) nonempty; throws std::domain_error otherwise.
BlockDecomposition decompose(const CycleMatrix& m);

RatMatrix block_submatrix(const CycleMatrix& m, const std::vector<int>& indices);

struct BlockRankReport {
    std::vector<int> sizes;
    std::vector<int> ranks;
    int matrix_rank = 0;
    bool ranks_consistent = false; // every block rank in {t, t-1} and ranks sum to matrix_rank
};

BlockRankReport check_block_rank(const CycleMatrix& m);

// Element of the dihedral group acting by e_i -> e_{sigma(i)}; reflection
// (v -> n+1-v) first, then rotation by `rotation`.
struct Dihedral {
    int rotation = 0;
    bool reflect = false;
};

CycleMatrix apply(const Dihedral& s, const CycleMatrix& m);

struct BlockFormResult {
    Dihedral sigma;
    std::vector<int> type; // t_1, ..., t_k with the chosen zeros ending at n
};

/*
 * Rotates a zero of b to position n and merges full-rank blocks leftward
 * (wrapping the first block into the second) until every block has rank
 * t_i - 1. Requires A singular and in cyclic-block form.
 */
BlockFormResult normalize_block_form(const CycleMatrix& m);

// Thrown when an input subspace violates the reconstruction hypothesis
// (some nonzero member has at most two nonzero coordinates).
struct DegenerateSubspace : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/*
 * Given a basis (rows) of an (n-2)-dimensional subspace U containing no
 * nonzero vector with at most two nonzero coordinates, returns the unique
 * matrix A in the cycle space with image U, normalized to a_{1,1} = 1.
 * The unconstrained symmetry a_{1,n} = a_{n,1} is verified on the output.
 */
CycleMatrix reconstruct_from_image(const RatMatrix& basis_rows);

// Seeded sampling: numerators uniform in [-20, 20], denominators in [1, 9].
Rat random_rat(Rng& rng);
Rat random_nonzero_rat(Rng& rng);

// Per-sample verification sweeps; each sample uses the stream (seed, index).
struct SweepReport {
    int samples = 0;
    int failures = 0;
    std::vector<std::string> failing; // one short description per failing sample
};

SweepReport sweep_block_rank(int n, int samples, uint64_t seed);
SweepReport sweep_lowrank_contrapositive(int n, int samples, uint64_t seed);
SweepReport sweep_normalize_block_form(int n, int samples, uint64_t seed);
SweepReport sweep_reconstruct(int n, int samples, uint64_t seed);

} // namespace cycdeg

#endif // CYCDEG_CYCLE_MATRIX_HPP
