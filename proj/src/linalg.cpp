#include <cycdeg/linalg.hpp>

#include <stdexcept>
#include <utility>

namespace cycdeg {

namespace {

void check_rectangular(const RatMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m.front().size())
            throw std::invalid_argument("linalg: matrix is not rectangular");
}

// Clears denominators row by row; row scaling does not change the rank.
std::vector<std::vector<BigInt>> to_integer_rows(const RatMatrix& m) {
    std::vector<std::vector<BigInt>> out;
    out.reserve(m.size());
    for (const auto& row : m) {
        BigInt scale(1);
        for (const auto& v : row) {
            BigInt d = v.denominator();
            scale = divexact(scale * d, gcd(scale, d));
        }
        std::vector<BigInt> irow;
        irow.reserve(row.size());
        for (const auto& v : row)
            irow.push_back(v.numerator() * divexact(scale, v.denominator()));
        out.push_back(std::move(irow));
    }
    return out;
}

} // namespace

int rank_exact(const RatMatrix& m) {
    if (m.empty() || m.front().empty()) return 0;
    check_rectangular(m);
    auto a = to_integer_rows(m);
    const size_t rows = a.size(), cols = a.front().size();

    int rank = 0;
    BigInt prev_pivot(1);
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
        size_t sel = pivot_row;
        while (sel < rows && a[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[pivot_row]);
        const BigInt& pivot = a[pivot_row][col];
        for (size_t i = pivot_row + 1; i < rows; ++i) {
            for (size_t j = col + 1; j < cols; ++j)
                a[i][j] = divexact(a[i][j] * pivot - a[i][col] * a[pivot_row][j], prev_pivot);
            a[i][col] = BigInt(0);
        }
        prev_pivot = pivot;
        ++pivot_row;
        ++rank;
    }
    return rank;
}

int rref(RatMatrix& m) {
    if (m.empty() || m.front().empty()) return 0;
    check_rectangular(m);
    const size_t rows = m.size(), cols = m.front().size();
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
        size_t sel = pivot_row;
        while (sel < rows && m[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[pivot_row]);
        Rat inv = Rat(1) / m[pivot_row][col];
        for (auto& v : m[pivot_row]) v *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == pivot_row || m[i][col].is_zero()) continue;
            Rat f = m[i][col];
            for (size_t j = 0; j < cols; ++j) m[i][j] -= f * m[pivot_row][j];
        }
        ++pivot_row;
    }
    return static_cast<int>(pivot_row);
}

std::vector<std::vector<Rat>> nullspace(const RatMatrix& m) {
    if (m.empty() || m.front().empty()) return {};
    RatMatrix a = m;
    rref(a);
    const size_t rows = a.size(), cols = a.front().size();

    std::vector<int> pivot_col_of_row;
    std::vector<char> is_pivot_col(cols, 0);
    for (size_t i = 0; i < rows; ++i) {
        size_t j = 0;
        while (j < cols && a[i][j].is_zero()) ++j;
        if (j == cols) break;
        pivot_col_of_row.push_back(static_cast<int>(j));
        is_pivot_col[j] = 1;
    }

    std::vector<std::vector<Rat>> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot_col[free_col]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free_col] = Rat(1);
        for (size_t i = 0; i < pivot_col_of_row.size(); ++i)
            v[pivot_col_of_row[i]] = -a[i][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

RatMatrix identity_matrix(int n) {
    RatMatrix m(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) m[i][i] = Rat(1);
    return m;
}

} // namespace cycdeg
