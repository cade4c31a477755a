#include <cycdeg/schur.hpp>

#include <numeric>
#include <stdexcept>

namespace cycdeg {

namespace {

void check_partition(const TwoRowPartition& p) {
    if (p.b2 < 0 || p.b1 < p.b2) throw std::invalid_argument("TwoRowPartition: need b1 >= b2 >= 0");
}

void check_content(const std::vector<long long>& a, const TwoRowPartition& b) {
    check_partition(b);
    long long total = 0;
    for (long long ai : a) {
        if (ai <= 0) throw std::invalid_argument("m_coefficient: parts must be positive");
        total += ai;
    }
    if (total != b.size())
        throw std::invalid_argument("m_coefficient: content size does not match shape size");
}

} // namespace

SchurCombination pieri_multiply(const TwoRowPartition& p, long long a) {
    check_partition(p);
    if (a < 0) throw std::invalid_argument("pieri_multiply: strip size must be non-negative");
    SchurCombination out;
    const long long total = p.size() + a;
    // c2 ranges over the second row; shapes needing a third row never appear
    for (long long c2 = p.b2; c2 <= p.b1; ++c2) {
        long long c1 = total - c2;
        if (c1 < p.b1 || c1 < c2) continue;
        out[TwoRowPartition{c1, c2}] = BigInt(1);
    }
    return out;
}

SchurCombination pieri_multiply(const SchurCombination& c, long long a) {
    SchurCombination out;
    for (const auto& [shape, coeff] : c) {
        for (const auto& [next, one] : pieri_multiply(shape, a)) {
            (void)one;
            auto it = out.find(next);
            if (it == out.end())
                out.emplace(next, coeff);
            else
                it->second += coeff;
        }
    }
    return out;
}

SchurCombination row_product(const std::vector<long long>& a) {
    SchurCombination acc{{TwoRowPartition{0, 0}, BigInt(1)}};
    for (long long ai : a) acc = pieri_multiply(acc, ai);
    return acc;
}

BigInt m_coefficient(const std::vector<long long>& a, const TwoRowPartition& b) {
    check_content(a, b);
    SchurCombination prod = row_product(a);
    auto it = prod.find(b);
    return it == prod.end() ? BigInt(0) : it->second;
}

namespace {

// Counts fillings recursively, row 1 left to right, then row 2. Cells are
// visited in row-reading order so the enumeration is lexicographic.
void count_fillings(const TwoRowPartition& shape, long long cell,
                    std::vector<long long>& remaining,
                    std::vector<long long>& row1, std::vector<long long>& row2,
                    BigInt& count) {
    const long long k = static_cast<long long>(remaining.size());
    if (cell == shape.b1 + shape.b2) {
        count += BigInt(1);
        return;
    }
    if (cell < shape.b1) {
        long long col = cell;
        long long min_value = col == 0 ? 1 : row1[col - 1];
        for (long long v = min_value; v <= k; ++v) {
            if (remaining[v - 1] == 0) continue;
            --remaining[v - 1];
            row1[col] = v;
            count_fillings(shape, cell + 1, remaining, row1, row2, count);
            ++remaining[v - 1];
        }
    } else {
        long long col = cell - shape.b1;
        long long min_value = row1[col] + 1; // column strict
        if (col > 0 && row2[col - 1] > min_value - 1) min_value = row2[col - 1];
        for (long long v = min_value; v <= k; ++v) {
            if (remaining[v - 1] == 0) continue;
            --remaining[v - 1];
            row2[col] = v;
            count_fillings(shape, cell + 1, remaining, row1, row2, count);
            ++remaining[v - 1];
        }
    }
}

} // namespace

BigInt m_coefficient_oracle(const std::vector<long long>& a, const TwoRowPartition& b) {
    check_content(a, b);
    std::vector<long long> remaining = a;
    std::vector<long long> row1(static_cast<size_t>(b.b1), 0);
    std::vector<long long> row2(static_cast<size_t>(b.b2), 0);
    BigInt count(0);
    count_fillings(b, 0, remaining, row1, row2, count);
    return count;
}

} // namespace cycdeg
