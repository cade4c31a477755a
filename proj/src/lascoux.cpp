#include <cycdeg/lascoux.hpp>

#include <cycdeg/combinatorics.hpp>

#include <stdexcept>

namespace cycdeg {

namespace {

void check_index(const PsiIndex& idx) {
    if (idx.a < 0 || idx.a >= idx.b)
        throw std::invalid_argument("PsiIndex: need 0 <= a < b");
}

BigInt halve(BigInt v, const char* where) {
    if (!v.is_even()) throw std::logic_error(std::string(where) + ": non-integral value");
    return divexact(v, BigInt(2));
}

} // namespace

BigInt psi_halfsum(const PsiIndex& idx) {
    check_index(idx);
    BigInt sum(0);
    for (long long k = idx.a + 1; k <= idx.b; ++k) sum += binomial(idx.a + idx.b + 1, k);
    return halve(std::move(sum), "psi_halfsum");
}

BigInt psi_llt(const PsiIndex& idx) {
    check_index(idx);
    BigInt ends = binomial(idx.a + idx.b, idx.a) + binomial(idx.a + idx.b, idx.b);
    BigInt sum = halve(std::move(ends), "psi_llt");
    for (long long k = idx.a + 1; k <= idx.b - 1; ++k) sum += binomial(idx.a + idx.b, k);
    return sum;
}

#ifndef NDEBUG
namespace {
// Both formulas are two ends of the same telescoping identity; cross-check a
// small range once per process in debug builds.
const bool psi_formulas_agree = [] {
    for (long long b = 1; b <= 12; ++b)
        for (long long a = 0; a < b; ++a)
            if (psi_halfsum(a, b) != psi_llt(a, b))
                throw std::logic_error("lascoux: psi formulas disagree");
    return true;
}();
} // namespace
#endif

} // namespace cycdeg
