#include "multizero/reduction.hpp"

#include <deque>
#include <optional>
#include <span>

#include "multizero/linalg.hpp"

namespace multizero {

std::string to_string(PartitionMode mode) { return mode == PartitionMode::Maximal ? "max" : "singleton"; }

PartitionMode parse_partition_mode(const std::string& text) {
    if (text == "max" || text == "maximal") {
        return PartitionMode::Maximal;
    }
    if (text == "singleton") {
        return PartitionMode::Singleton;
    }
    throw Error("unknown partition mode '" + text + "'");
}

std::vector<std::size_t> Reduction::U1() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < in_U1.size(); ++k) {
        if (in_U1[k]) {
            out.push_back(k);
        }
    }
    return out;
}

std::vector<std::size_t> Reduction::U2() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < in_U1.size(); ++k) {
        if (!in_U1[k]) {
            out.push_back(k);
        }
    }
    return out;
}

RatMatrix reduced_matrix(const AugmentedVerticalSystem& sys) {
    const RatMatrix basis = kernel_basis_principal(sys.C);
    const std::size_t s = sys.C.rows();
    RatMatrix pbar(s, basis.cols());
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t k = 0; k < basis.cols(); ++k) {
            pbar(i, k) = basis(i, k);
        }
    }
    return pbar;
}

namespace {

/// Factor f with u = f * v, if any. Both zero gives 1; exactly one zero gives none.
std::optional<Rat> proportionality(const std::vector<Rat>& u, const std::vector<Rat>& v) {
    std::size_t k = 0;
    while (k < v.size() && v[k] == 0) {
        ++k;
    }
    if (k == v.size()) {
        for (const auto& x : u) {
            if (x != 0) {
                return std::nullopt;
            }
        }
        return Rat(1);
    }
    const Rat f = u[k] / v[k];
    if (f == 0) {
        return std::nullopt;
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] != f * v[i]) {
            return std::nullopt;
        }
    }
    return f;
}

bool is_zero_vector(const std::vector<Rat>& v) {
    for (const auto& x : v) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

std::vector<Rat> row_of(const RatMatrix& a, std::size_t i) {
    const auto r = a.row(i);
    return {r.begin(), r.end()};
}

}  // namespace

Reduction compute_partitions(const RatMatrix& pbar, PartitionMode mode) {
    Reduction red;
    red.mode = mode;
    red.Pbar = pbar;
    const std::size_t s_bar = pbar.rows();
    const std::size_t l_bar = pbar.cols();
    red.gamma.assign(l_bar, Rat(1));
    red.gamma_prime.assign(s_bar, Rat(1));
    red.row_block.assign(s_bar, 0);
    red.col_block.assign(l_bar, 0);

    for (std::size_t i = 0; i < s_bar; ++i) {
        const auto row = row_of(pbar, i);
        bool placed = false;
        if (mode == PartitionMode::Maximal) {
            for (std::size_t k = 0; k < red.tau.size() && !placed; ++k) {
                const auto f = proportionality(row, row_of(pbar, red.row_rep[k]));
                if (!f) {
                    continue;
                }
                if (*f > 0) {
                    red.tau[k].push_back(i);
                    red.row_block[i] = k;
                    red.gamma_prime[i] = *f;
                    placed = true;
                } else if (!is_zero_vector(row)) {
                    red.negative_row_proportionality = true;
                }
            }
        } else {
            // Singleton mode still reports the flag; it does not affect the blocks.
            for (std::size_t k = 0; k < i; ++k) {
                const auto f = proportionality(row, row_of(pbar, k));
                if (f && *f < 0) {
                    red.negative_row_proportionality = true;
                }
            }
        }
        if (!placed) {
            red.row_block[i] = red.tau.size();
            red.tau.push_back({i});
            red.row_rep.push_back(i);
        }
    }

    for (std::size_t j = 0; j < l_bar; ++j) {
        const auto col = pbar.column(j);
        bool placed = false;
        if (mode == PartitionMode::Maximal) {
            for (std::size_t k = 0; k < red.alpha.size() && !placed; ++k) {
                const auto f = proportionality(col, pbar.column(red.col_rep[k]));
                if (f) {
                    red.alpha[k].push_back(j);
                    red.col_block[j] = k;
                    red.gamma[j] = *f;
                    placed = true;
                }
            }
        }
        if (!placed) {
            red.col_block[j] = red.alpha.size();
            red.alpha.push_back({j});
            red.col_rep.push_back(j);
        }
    }

    red.in_U1.assign(red.alpha.size(), true);
    for (std::size_t k = 0; k < red.alpha.size(); ++k) {
        for (auto j : red.alpha[k]) {
            if (red.gamma[j] < 0) {
                red.in_U1[k] = false;
            }
        }
    }
    red.P = simplified_matrix(red);
    return red;
}

RatMatrix simplified_matrix(const Reduction& red) {
    RatMatrix p(red.row_rep.size(), red.col_rep.size());
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t k = 0; k < p.cols(); ++k) {
            p(i, k) = red.Pbar(red.row_rep[i], red.col_rep[k]);
        }
    }
    return p;
}

ForestInfo induces_forest(const RatMatrix& p) {
    const std::size_t s = p.rows();
    const std::size_t l = p.cols();
    ForestInfo info;
    info.row_parent.assign(s, no_node);
    info.column_parent.assign(l, no_node);
    std::vector<bool> row_seen(s, false);
    std::vector<bool> col_seen(l, false);

    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < l; ++j) {
            if (p(i, j) != 0) {
                ++info.edge_count;
            }
        }
    }

    const auto explore = [&](GraphNode root) {
        TreeComponent comp;
        if (root.side == GraphNode::Side::Row) {
            comp.root_row = root.index;
            row_seen[root.index] = true;
        } else {
            col_seen[root.index] = true;
        }
        std::deque<GraphNode> queue{root};
        std::size_t nodes = 0;
        while (!queue.empty()) {
            const GraphNode node = queue.front();
            queue.pop_front();
            comp.order.push_back(node);
            ++nodes;
            if (node.side == GraphNode::Side::Row) {
                for (std::size_t j = 0; j < l; ++j) {
                    if (p(node.index, j) == 0) {
                        continue;
                    }
                    ++comp.edge_count;
                    if (!col_seen[j]) {
                        col_seen[j] = true;
                        info.column_parent[j] = node.index;
                        queue.push_back({GraphNode::Side::Column, j});
                    }
                }
            } else {
                for (std::size_t i = 0; i < s; ++i) {
                    if (p(i, node.index) != 0 && !row_seen[i]) {
                        row_seen[i] = true;
                        info.row_parent[i] = node.index;
                        queue.push_back({GraphNode::Side::Row, i});
                    }
                }
            }
        }
        if (comp.edge_count != nodes - 1) {
            info.is_forest = false;
        }
        info.components.push_back(std::move(comp));
    };

    for (std::size_t i = 0; i < s; ++i) {
        if (!row_seen[i]) {
            explore({GraphNode::Side::Row, i});
        }
    }
    for (std::size_t j = 0; j < l; ++j) {
        if (!col_seen[j]) {
            explore({GraphNode::Side::Column, j});
        }
    }
    return info;
}

}  // namespace multizero
