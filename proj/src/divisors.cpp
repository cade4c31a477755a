#include <cycdeg/divisors.hpp>

#include <stdexcept>

namespace cycdeg {

namespace {

void require_size(int n) {
    if (n < 3) throw std::invalid_argument("divisors: n must be at least 3");
}

} // namespace

DivisorClass s_in_l_basis(int n, int i) {
    require_size(n);
    if (i < 1 || i > n - 1) throw std::out_of_range("s_in_l_basis: index out of range");
    DivisorClass d;
    d.n = n;
    d.coeffs.assign(n - 1, Rat(0));
    if (i - 2 >= 0) d.coeffs[i - 2] = Rat(-1);
    d.coeffs[i - 1] = Rat(2);
    if (i < n - 1) d.coeffs[i] = Rat(-1);
    return d;
}

std::vector<Rat> l_last_in_s_basis(int n) {
    require_size(n);
    std::vector<Rat> c;
    c.reserve(n - 1);
    for (int i = 1; i <= n - 1; ++i) c.emplace_back(i, n);
    return c;
}

DivisorClass from_s_coords(int n, const std::vector<Rat>& c) {
    require_size(n);
    if (static_cast<int>(c.size()) != n - 1)
        throw std::invalid_argument("from_s_coords: expected n-1 coordinates");
    DivisorClass d;
    d.n = n;
    d.coeffs.assign(n - 1, Rat(0));
    for (int i = 1; i <= n - 1; ++i) {
        if (c[i - 1].is_zero()) continue;
        DivisorClass s = s_in_l_basis(n, i);
        for (int k = 0; k < n - 1; ++k) d.coeffs[k] += c[i - 1] * s.coeffs[k];
    }
    return d;
}

std::vector<Rat> to_s_coords(const DivisorClass& d) {
    require_size(d.n);
    const int m = d.n - 1;
    if (static_cast<int>(d.coeffs.size()) != m)
        throw std::invalid_argument("to_s_coords: malformed class");

    // Solve T x = coeffs with T = tridiag(-1, 2, -1) by Thomas elimination.
    std::vector<Rat> diag(m, Rat(2));
    std::vector<Rat> rhs = d.coeffs;
    for (int k = 1; k < m; ++k) {
        Rat factor = Rat(-1) / diag[k - 1];
        diag[k] -= factor * Rat(-1);
        rhs[k] -= factor * rhs[k - 1];
    }
    std::vector<Rat> x(m);
    x[m - 1] = rhs[m - 1] / diag[m - 1];
    for (int k = m - 2; k >= 0; --k) {
        x[k] = (rhs[k] + x[k + 1]) / diag[k];
    }
    return x;
}

bool verify_relation_two(int n, int i) {
    require_size(n);
    if (i < 0 || i > n - 2) throw std::out_of_range("verify_relation_two: index out of range");

    DivisorClass sum;
    sum.n = n;
    sum.coeffs.assign(n - 1, Rat(0));
    if (i >= 1) sum.coeffs[i - 1] = Rat(1); // L_i, absent for i = 0
    for (int j = 1; j <= n - i - 1; ++j) {
        DivisorClass s = s_in_l_basis(n, i + j);
        for (int k = 0; k < n - 1; ++k) sum.coeffs[k] += Rat(j) * s.coeffs[k];
    }
    Rat scale(1, n - i);
    for (auto& c : sum.coeffs) c *= scale;

    DivisorClass l_last;
    l_last.n = n;
    l_last.coeffs.assign(n - 1, Rat(0));
    l_last.coeffs[n - 2] = Rat(1);
    return sum == l_last;
}

} // namespace cycdeg
