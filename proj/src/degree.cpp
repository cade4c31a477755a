#include <cycdeg/degree.hpp>

#include <cycdeg/combinatorics.hpp>
#include <cycdeg/cycle_graphs.hpp>
#include <cycdeg/lascoux.hpp>
#include <cycdeg/rational.hpp>
#include <cycdeg/schur.hpp>

#include <string>
#include <vector>

namespace cycdeg {

BigInt q_value(int n) {
    if (n < 2) throw std::invalid_argument("q_value: n must be at least 2");
    Rat value = Rat(n + 2, 4) * Rat(binomial(2 * n, n)) -
                Rat(3) * Rat(BigInt::two_pow(static_cast<unsigned>(2 * n - 3)));
    return value.to_integer();
}

BigInt h_closed(int n, int r) {
    if (n < 3) throw std::invalid_argument("h_closed: n must be at least 3");
    if (r < 0 || r > n - 3) return BigInt(0);
    Rat power = r == 0 ? Rat(1, 2) : Rat(BigInt::two_pow(static_cast<unsigned>(r - 1)));
    Rat value = Rat(factorial(2 * n - r - 2)) * Rat(n) * power /
                (Rat(factorial(n - r)) * Rat(factorial(n - r - 1)));
    return value.to_integer();
}

BigInt h_combinatorial(int n, int r) {
    if (n < 3) throw std::invalid_argument("h_combinatorial: n must be at least 3");
    if (r < 0 || r > n - 3) return BigInt(0);

    std::map<std::vector<int>, SchurCombination> products; // keyed by sorted gamma
    std::map<std::pair<long long, long long>, BigInt> psi;

    BigInt total(0);
    for (const LabeledSubgraph& lg : enumerate_labeled(n, r)) {
        std::vector<int> gamma = path_lengths(lg.base);
        auto pit = products.find(gamma);
        if (pit == products.end()) {
            std::vector<long long> parts(gamma.begin(), gamma.end());
            pit = products.emplace(gamma, row_product(parts)).first;
        }
        for (long long b2 = 0; 2 * b2 <= r; ++b2) {
            long long b1 = r - b2;
            if (b1 > n - 2) continue; // partition must fit the rectangle
            auto cit = pit->second.find(TwoRowPartition{b1, b2});
            if (cit == pit->second.end()) continue;
            auto key = std::make_pair<long long, long long>(n - 2 - b1, n - 1 - b2);
            auto qit = psi.find(key);
            if (qit == psi.end()) qit = psi.emplace(key, psi_halfsum(key.first, key.second)).first;
            total += cit->second * qit->second;
        }
    }
    return total;
}

BigInt f_closed(int n, int r) {
    if (n < 3) throw std::invalid_argument("f_closed: n must be at least 3");
    if (r < 0 || r > n - 2) return BigInt(0);
    Rat value = Rat(q_value(n - r)) * Rat(BigInt::two_pow(static_cast<unsigned>(r + 1))) * Rat(n) *
                Rat(factorial(2 * n - r - 1)) / Rat(factorial(2 * n - 2 * r));
    return value.to_integer();
}

BigInt FTable::value(int n, int r) {
    if (n < 3) throw std::invalid_argument("FTable: n must be at least 3");
    if (r < 0 || r > n - 3) return BigInt(0);
    if (n == 3) return BigInt(1); // the full space of 3x3 symmetric quadrics
    auto key = std::make_pair(n, r);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    Rat sum(0);
    if (r >= 1) sum += Rat(2LL * n * r, n - 1) * Rat(value(n - 1, r - 1));
    sum += Rat(1, n - r) * Rat(value(n, r + 1));
    BigInt h = route_ == HRoute::Combinatorial ? h_combinatorial(n, r) : h_closed(n, r);
    sum += Rat(n - r - 2, n - r) * Rat(h);

    BigInt result = sum.to_integer();
    memo_.emplace(key, result);
    return result;
}

BigInt f_recurrence(int n, int r) {
    FTable table(HRoute::Combinatorial);
    return table.value(n, r);
}

DegreeRoutes degree_routes(int n, bool with_recurrence, bool with_combinatorial) {
    if (n < 3) throw std::invalid_argument("degree: n must be at least 3");
    DegreeRoutes routes;
    routes.closed = f_closed(n, 0);
    routes.q = q_value(n);
    if (with_recurrence) {
        FTable table(HRoute::Closed);
        routes.recurrence = table.value(n, 0);
    }
    if (with_combinatorial) {
        FTable table(HRoute::Combinatorial);
        routes.combinatorial = table.value(n, 0);
    }
    routes.consistent = routes.closed == routes.q &&
                        (!routes.recurrence || *routes.recurrence == routes.closed) &&
                        (!routes.combinatorial || *routes.combinatorial == routes.closed);
    return routes;
}

BigInt degree(int n) {
    DegreeRoutes routes = degree_routes(n, /*with_recurrence=*/true,
                                        /*with_combinatorial=*/n <= kDegreeCrossCheckMax);
    if (!routes.consistent) {
        std::string msg = "degree(" + std::to_string(n) + "): route disagreement:" +
                          " closed=" + routes.closed.to_string() +
                          " q=" + routes.q.to_string();
        if (routes.recurrence) msg += " recurrence=" + routes.recurrence->to_string();
        if (routes.combinatorial) msg += " combinatorial=" + routes.combinatorial->to_string();
        throw RouteDisagreement(msg);
    }
    return routes.closed;
}

} // namespace cycdeg
