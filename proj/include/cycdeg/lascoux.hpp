#ifndef CYCDEG_LASCOUX_HPP
#define CYCDEG_LASCOUX_HPP

#include <cycdeg/bigint.hpp>

namespace cycdeg {

// Index of a two-element Lascoux coefficient; requires 0 <= a < b.
struct PsiIndex {
    long long a = 0;
    long long b = 0;
};

// psi_{a,b} = (1/2) * sum_{k=a+1}^{b} C(a+b+1, k).
// The halving is always exact; a non-integral result throws std::logic_error.
BigInt psi_halfsum(const PsiIndex& idx);

// Same coefficient from the Segre-class expansion:
// (1/2) C(a+b, a) + C(a+b, a+1) + ... + C(a+b, b-1) + (1/2) C(a+b, b).
BigInt psi_llt(const PsiIndex& idx);

inline BigInt psi_halfsum(long long a, long long b) { return psi_halfsum(PsiIndex{a, b}); }
inline BigInt psi_llt(long long a, long long b) { return psi_llt(PsiIndex{a, b}); }

} // namespace cycdeg

#endif // CYCDEG_LASCOUX_HPP
