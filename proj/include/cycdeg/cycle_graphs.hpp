#ifndef CYCDEG_CYCLE_GRAPHS_HPP
#define CYCDEG_CYCLE_GRAPHS_HPP

#include <vector>

namespace cycdeg {

/*
 * Subgraphs of the n-cycle on the full vertex set {1..n}.
 * Edge i joins vertices i and i+1; edge n joins n and 1.
 */
struct CycleSubgraph {
    int n = 0;
    std::vector<int> edges; // sorted, values in 1..n

    friend bool operator==(const CycleSubgraph&, const CycleSubgraph&) = default;
};

struct LabeledSubgraph {
    CycleSubgraph base;
    std::vector<int> labels; // labels[t] = edge carrying label t+1; a bijection onto base.edges
};

// Multiset of path lengths of the union-of-paths subgraph, sorted ascending.
// The empty graph yields {}. Throws when all n edges are present.
std::vector<int> path_lengths(const CycleSubgraph& g);

// All r-edge subgraphs avoiding edge n (the edge (1,n)), i.e. subsets of {1..n-1}.
std::vector<CycleSubgraph> enumerate_prime(int n, int r);

// All r-edge subgraphs, edge n allowed.
std::vector<CycleSubgraph> enumerate_all(int n, int r);

// All r-edge subgraphs with edges labeled bijectively by 1..r;
// count is n (n-1) ... (n-r+1).
std::vector<LabeledSubgraph> enumerate_labeled(int n, int r);

// Image under the rotation v -> v + s (mod n).
CycleSubgraph rotated(const CycleSubgraph& g, int s);

// Image under the reflection v -> n + 1 - v.
CycleSubgraph reflected(const CycleSubgraph& g);

} // namespace cycdeg

#endif // CYCDEG_CYCLE_GRAPHS_HPP
