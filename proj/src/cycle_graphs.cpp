#include <cycdeg/cycle_graphs.hpp>

#include <algorithm>
#include <stdexcept>

namespace cycdeg {

namespace {

void check_graph(const CycleSubgraph& g) {
    if (g.n < 3) throw std::invalid_argument("CycleSubgraph: n must be at least 3");
    for (int e : g.edges)
        if (e < 1 || e > g.n) throw std::invalid_argument("CycleSubgraph: edge index out of range");
}

// r-subsets of {1..limit} in lexicographic order
void subsets(int limit, int r, std::vector<int>& cur, std::vector<std::vector<int>>& out, int next) {
    if (static_cast<int>(cur.size()) == r) {
        out.push_back(cur);
        return;
    }
    for (int e = next; e <= limit - (r - static_cast<int>(cur.size())) + 1; ++e) {
        cur.push_back(e);
        subsets(limit, r, cur, out, e + 1);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> edge_subsets(int limit, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    subsets(limit, r, cur, out, 1);
    return out;
}

} // namespace

std::vector<int> path_lengths(const CycleSubgraph& g) {
    check_graph(g);
    if (static_cast<int>(g.edges.size()) >= g.n)
        throw std::invalid_argument("path_lengths: the full cycle is not a union of paths");
    if (g.edges.empty()) return {};

    std::vector<char> present(g.n + 1, 0);
    for (int e : g.edges) present[e] = 1;

    // scan cyclically starting just after some absent edge
    int start = 0;
    for (int e = 1; e <= g.n; ++e) {
        if (!present[e]) {
            start = e;
            break;
        }
    }
    std::vector<int> lengths;
    int run = 0;
    for (int k = 1; k <= g.n; ++k) {
        int e = (start + k - 1) % g.n + 1;
        if (present[e]) {
            ++run;
        } else if (run > 0) {
            lengths.push_back(run);
            run = 0;
        }
    }
    if (run > 0) lengths.push_back(run);
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

std::vector<CycleSubgraph> enumerate_prime(int n, int r) {
    if (n < 3) throw std::invalid_argument("enumerate_prime: n must be at least 3");
    if (r < 0 || r > n - 1) throw std::invalid_argument("enumerate_prime: edge count out of range");
    std::vector<CycleSubgraph> out;
    for (auto& s : edge_subsets(n - 1, r)) out.push_back(CycleSubgraph{n, std::move(s)});
    return out;
}

std::vector<CycleSubgraph> enumerate_all(int n, int r) {
    if (n < 3) throw std::invalid_argument("enumerate_all: n must be at least 3");
    if (r < 0 || r > n) throw std::invalid_argument("enumerate_all: edge count out of range");
    std::vector<CycleSubgraph> out;
    for (auto& s : edge_subsets(n, r)) out.push_back(CycleSubgraph{n, std::move(s)});
    return out;
}

std::vector<LabeledSubgraph> enumerate_labeled(int n, int r) {
    if (n < 3) throw std::invalid_argument("enumerate_labeled: n must be at least 3");
    if (r < 0 || r > n) throw std::invalid_argument("enumerate_labeled: edge count out of range");
    std::vector<LabeledSubgraph> out;
    for (const auto& g : enumerate_all(n, r)) {
        std::vector<int> perm = g.edges;
        do {
            out.push_back(LabeledSubgraph{g, perm});
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

CycleSubgraph rotated(const CycleSubgraph& g, int s) {
    check_graph(g);
    CycleSubgraph out{g.n, {}};
    out.edges.reserve(g.edges.size());
    for (int e : g.edges) out.edges.push_back((e - 1 + s % g.n + g.n) % g.n + 1);
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

CycleSubgraph reflected(const CycleSubgraph& g) {
    check_graph(g);
    CycleSubgraph out{g.n, {}};
    out.edges.reserve(g.edges.size());
    // v -> n+1-v sends edge i = (i, i+1) to edge n-i, and fixes edge n
    for (int e : g.edges) out.edges.push_back(e == g.n ? g.n : g.n - e);
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

} // namespace cycdeg
