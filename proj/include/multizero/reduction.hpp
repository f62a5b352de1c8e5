#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "multizero/model.hpp"
#include "multizero/rational.hpp"

namespace multizero {

enum class PartitionMode { Maximal, Singleton };

std::string to_string(PartitionMode mode);
PartitionMode parse_partition_mode(const std::string& text);

/// Reduced matrix Pbar together with row/column partitions and the
/// simplified reduced matrix P built from their representatives.
///
/// Row block k is `tau[k]`, its representative `row_rep[k] == tau[k].front()`.
/// For i in tau[k]: row i of Pbar = gamma_prime[i] * row row_rep[k] of Pbar,
/// gamma_prime[i] > 0 and gamma_prime = 1 on representatives. Columns
/// likewise with gamma (any nonzero factor).
struct Reduction {
    PartitionMode mode = PartitionMode::Maximal;
    RatMatrix Pbar;
    std::vector<std::vector<std::size_t>> tau;
    std::vector<std::vector<std::size_t>> alpha;
    std::vector<std::size_t> row_rep;    // r : [s] -> [s-bar]
    std::vector<std::size_t> col_rep;    // c : [l] -> [l-bar]
    std::vector<std::size_t> row_block;  // [s-bar] -> [s]
    std::vector<std::size_t> col_block;  // [l-bar] -> [l]
    std::vector<Rat> gamma;              // length l-bar
    std::vector<Rat> gamma_prime;        // length s-bar
    std::vector<bool> in_U1;             // per column block
    RatMatrix P;
    /// Two nonzero rows of Pbar are proportional with a negative factor, so
    /// Pbar mu > 0 has no solution.
    bool negative_row_proportionality = false;

    std::size_t s() const { return tau.size(); }
    std::size_t l() const { return alpha.size(); }
    std::size_t m() const { return tau.size() + alpha.size(); }
    std::vector<std::size_t> U1() const;
    std::vector<std::size_t> U2() const;
};

/// Upper block of the kernel basis [Pbar; I] of the system's C.
RatMatrix reduced_matrix(const AugmentedVerticalSystem& sys);

Reduction compute_partitions(const RatMatrix& Pbar, PartitionMode mode);

/// P with P(i, k) = Pbar(r(i), c(k)).
RatMatrix simplified_matrix(const Reduction& red);

inline constexpr std::size_t no_node = std::numeric_limits<std::size_t>::max();

struct GraphNode {
    enum class Side { Row, Column };
    Side side;
    std::size_t index;

    friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

/// One connected component of G_P with a BFS spanning tree rooted at its
/// smallest row node (or at its single column node if it has no rows).
struct TreeComponent {
    std::vector<GraphNode> order;  // BFS order, root first
    std::size_t root_row = no_node;
    std::size_t edge_count = 0;
};

struct ForestInfo {
    bool is_forest = true;
    std::size_t edge_count = 0;
    std::vector<TreeComponent> components;
    std::vector<std::size_t> row_parent;     // parent column of each row, no_node for roots
    std::vector<std::size_t> column_parent;  // iota(j): parent row of each column, no_node if isolated
};

/// Bipartite support graph of P; is_forest iff it is acyclic.
ForestInfo induces_forest(const RatMatrix& P);

}  // namespace multizero
