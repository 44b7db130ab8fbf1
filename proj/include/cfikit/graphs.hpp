#pragma once
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cfikit/bigint.hpp"
#include "cfikit/exactalg.hpp"
#include "cfikit/gf2.hpp"

namespace cfikit::graphs {

struct BipartiteGraph {
    std::size_t left_size = 0, right_size = 0;
    std::vector<std::pair<uint32_t, uint32_t>> edges;  // sorted, unique
    std::vector<std::string> left_labels, right_labels;  // optional (empty or full)
    std::vector<std::vector<uint32_t>> adj_left, adj_right;

    static BipartiteGraph from_edges(std::size_t l, std::size_t r,
                                     std::vector<std::pair<uint32_t, uint32_t>> e,
                                     std::vector<std::string> left_labels = {},
                                     std::vector<std::string> right_labels = {});

    bool has_edge(uint32_t u, uint32_t v) const;
    std::optional<uint32_t> edge_index(uint32_t u, uint32_t v) const;
    std::size_t deg_left(uint32_t u) const { return adj_left[u].size(); }
    std::size_t deg_right(uint32_t v) const { return adj_right[v].size(); }
    bool is_regular(std::size_t d) const;
};

struct Matching {
    static constexpr uint32_t none = UINT32_MAX;
    std::vector<uint32_t> to_right;  // indexed by left vertex

    bool perfect(const BipartiteGraph& g) const;
};

// Rows ordered by row_order (row i holds left vertex row_order[i]),
// columns by col_order.
exact::IntMatrix biadjacency(const BipartiteGraph& g,
                             const std::vector<uint32_t>& row_order,
                             const std::vector<uint32_t>& col_order);
exact::IntMatrix biadjacency(const BipartiteGraph& g);  // identity orders
gf2::GF2Matrix gf2_biadjacency(const BipartiteGraph& g);

// Lexicographic backtracking over left vertices in index order, right
// candidates ascending. visit returns false to stop early.
void for_each_perfect_matching(const BipartiteGraph& g,
                               const std::function<bool(const Matching&)>& visit);
std::vector<Matching> enumerate_perfect_matchings(const BipartiteGraph& g);

// Equals the enumeration length; switches to Ryser's permanent when the
// Bregman-Minc estimate says enumeration would be costlier.
BigInt count_perfect_matchings(const BipartiteGraph& g);

// 2-factors of a 3-regular bipartite graph as sorted edge-index sets
// (complements of perfect matchings).
std::vector<std::vector<uint32_t>> two_factors(const BipartiteGraph& g);

struct SimpleGraph {
    std::size_t n = 0;
    std::vector<std::vector<uint32_t>> adj;  // sorted

    static SimpleGraph from_edges(std::size_t n,
                                  const std::vector<std::pair<uint32_t, uint32_t>>& edges);
    bool has_edge(uint32_t u, uint32_t v) const;
};

// One-part view: left vertices keep their ids, right vertex v becomes l + v.
SimpleGraph as_simple(const BipartiteGraph& g);

// Connected components after deleting vertices with removed[v] set; each
// component sorted, components ordered by least vertex.
std::vector<std::vector<uint32_t>> components(const SimpleGraph& g,
                                              const std::vector<char>& removed);

struct SeparatorResult {
    std::vector<uint32_t> separator;
    std::vector<std::vector<uint32_t>> components;
};

// Exhaustive search for a smallest balanced separator of size <= s: after
// deleting S, no component may exceed |V|/2 (exactly half is balanced).
// Sizes ascending, subsets in lexicographic order, so the result is the
// lexicographically least among the smallest. Throws when the subset count
// exceeds subset_budget.
std::optional<SeparatorResult> min_balanced_separator_upto(
    const SimpleGraph& g, std::size_t s, uint64_t subset_budget = 50'000'000);

bool is_k_well_connected(const SimpleGraph& g, std::size_t k,
                         uint64_t subset_budget = 50'000'000);

// Announced-move cops-and-robbers: k cops win iff treewidth(g) <= k-1.
// Exhaustive fixpoint over (cop set, robber component) positions.
bool cops_win(const SimpleGraph& g, std::size_t k, uint64_t position_budget = 200'000);

}  // namespace cfikit::graphs
