#include "cfikit/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cfikit::graphs {

BipartiteGraph BipartiteGraph::from_edges(std::size_t l, std::size_t r,
                                          std::vector<std::pair<uint32_t, uint32_t>> e,
                                          std::vector<std::string> left_labels,
                                          std::vector<std::string> right_labels) {
    BipartiteGraph g;
    g.left_size = l;
    g.right_size = r;
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    for (auto [u, v] : e)
        if (u >= l || v >= r) throw std::invalid_argument("edge endpoint out of range");
    g.edges = std::move(e);
    if (!left_labels.empty() && left_labels.size() != l)
        throw std::invalid_argument("left label count mismatch");
    if (!right_labels.empty() && right_labels.size() != r)
        throw std::invalid_argument("right label count mismatch");
    g.left_labels = std::move(left_labels);
    g.right_labels = std::move(right_labels);
    g.adj_left.assign(l, {});
    g.adj_right.assign(r, {});
    for (auto [u, v] : g.edges) {
        g.adj_left[u].push_back(v);
        g.adj_right[v].push_back(u);
    }
    return g;
}

bool BipartiteGraph::has_edge(uint32_t u, uint32_t v) const {
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::optional<uint32_t> BipartiteGraph::edge_index(uint32_t u, uint32_t v) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
    if (it == edges.end() || *it != std::make_pair(u, v)) return std::nullopt;
    return uint32_t(it - edges.begin());
}

bool BipartiteGraph::is_regular(std::size_t d) const {
    for (std::size_t u = 0; u < left_size; ++u)
        if (adj_left[u].size() != d) return false;
    for (std::size_t v = 0; v < right_size; ++v)
        if (adj_right[v].size() != d) return false;
    return true;
}

bool Matching::perfect(const BipartiteGraph& g) const {
    if (g.left_size != g.right_size || to_right.size() != g.left_size) return false;
    std::vector<char> used(g.right_size, 0);
    for (std::size_t u = 0; u < to_right.size(); ++u) {
        uint32_t v = to_right[u];
        if (v == none || v >= g.right_size || used[v]) return false;
        if (!g.has_edge(uint32_t(u), v)) return false;
        used[v] = 1;
    }
    return true;
}

exact::IntMatrix biadjacency(const BipartiteGraph& g,
                             const std::vector<uint32_t>& row_order,
                             const std::vector<uint32_t>& col_order) {
    if (row_order.size() != g.left_size || col_order.size() != g.right_size)
        throw std::invalid_argument("biadjacency: order size mismatch");
    exact::IntMatrix m(g.left_size, g.right_size);
    for (std::size_t i = 0; i < g.left_size; ++i)
        for (std::size_t j = 0; j < g.right_size; ++j)
            m.at(i, j) = g.has_edge(row_order[i], col_order[j]) ? 1 : 0;
    return m;
}

exact::IntMatrix biadjacency(const BipartiteGraph& g) {
    std::vector<uint32_t> rows(g.left_size), cols(g.right_size);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    return biadjacency(g, rows, cols);
}

gf2::GF2Matrix gf2_biadjacency(const BipartiteGraph& g) {
    gf2::GF2Matrix m(g.left_size, g.right_size);
    for (auto [u, v] : g.edges) m.set(u, v, true);
    return m;
}

void for_each_perfect_matching(const BipartiteGraph& g,
                               const std::function<bool(const Matching&)>& visit) {
    if (g.left_size != g.right_size) return;
    std::size_t n = g.left_size;
    Matching m;
    m.to_right.assign(n, Matching::none);
    std::vector<char> used(n, 0);
    bool stop = false;
    std::function<void(std::size_t)> rec = [&](std::size_t u) {
        if (stop) return;
        if (u == n) {
            if (!visit(m)) stop = true;
            return;
        }
        for (uint32_t v : g.adj_left[u]) {
            if (used[v]) continue;
            used[v] = 1;
            m.to_right[u] = v;
            rec(u + 1);
            used[v] = 0;
            m.to_right[u] = Matching::none;
            if (stop) return;
        }
    };
    rec(0);
}

std::vector<Matching> enumerate_perfect_matchings(const BipartiteGraph& g) {
    std::vector<Matching> out;
    for_each_perfect_matching(g, [&](const Matching& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

BigInt count_perfect_matchings(const BipartiteGraph& g) {
    if (g.left_size != g.right_size) return 0;
    std::size_t n = g.left_size;
    if (n == 0) return 1;
    double log2_bregman = 0;
    for (std::size_t u = 0; u < n; ++u) {
        std::size_t d = g.adj_left[u].size();
        if (d == 0) return 0;
        double lf = 0;
        for (std::size_t t = 2; t <= d; ++t) lf += std::log2(double(t));
        log2_bregman += lf / double(d);
    }
    if (n > 4 && n <= 30 && log2_bregman > double(n)) {
        return exact::permanent_ryser(biadjacency(g), 30);
    }
    BigInt count = 0;
    for_each_perfect_matching(g, [&](const Matching&) {
        ++count;
        return true;
    });
    return count;
}

std::vector<std::vector<uint32_t>> two_factors(const BipartiteGraph& g) {
    if (!g.is_regular(3) || g.left_size != g.right_size)
        throw std::invalid_argument("two_factors: graph must be 3-regular bipartite");
    std::vector<std::vector<uint32_t>> out;
    for_each_perfect_matching(g, [&](const Matching& m) {
        std::vector<uint32_t> f;
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            auto [u, v] = g.edges[i];
            if (m.to_right[u] != v) f.push_back(uint32_t(i));
        }
        out.push_back(std::move(f));
        return true;
    });
    return out;
}

SimpleGraph SimpleGraph::from_edges(std::size_t n,
                                    const std::vector<std::pair<uint32_t, uint32_t>>& edges) {
    SimpleGraph g;
    g.n = n;
    g.adj.assign(n, {});
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loops not allowed");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return g;
}

bool SimpleGraph::has_edge(uint32_t u, uint32_t v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

SimpleGraph as_simple(const BipartiteGraph& g) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (auto [u, v] : g.edges) edges.emplace_back(u, uint32_t(g.left_size + v));
    return SimpleGraph::from_edges(g.left_size + g.right_size, edges);
}

std::vector<std::vector<uint32_t>> components(const SimpleGraph& g,
                                              const std::vector<char>& removed) {
    std::vector<std::vector<uint32_t>> comps;
    std::vector<char> seen(g.n, 0);
    for (std::size_t s = 0; s < g.n; ++s) {
        if (seen[s] || removed[s]) continue;
        std::vector<uint32_t> comp, stack{uint32_t(s)};
        seen[s] = 1;
        while (!stack.empty()) {
            uint32_t u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (uint32_t v : g.adj[u])
                if (!seen[v] && !removed[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

namespace {

uint64_t subsets_up_to(std::size_t n, std::size_t s) {
    uint64_t total = 0, c = 1;
    for (std::size_t i = 0; i <= s && i <= n; ++i) {
        total += c;
        if (total > (uint64_t(1) << 62)) return total;
        c = c * (n - i) / (i + 1);
    }
    return total;
}

bool balanced_after_removal(const SimpleGraph& g, const std::vector<char>& removed,
                            std::vector<std::vector<uint32_t>>* comps_out) {
    auto comps = components(g, removed);
    std::size_t half2 = g.n;  // compare 2*|comp| <= |V| to avoid rounding
    for (const auto& c : comps)
        if (2 * c.size() > half2) return false;
    if (comps_out) *comps_out = std::move(comps);
    return true;
}

}  // namespace

std::optional<SeparatorResult> min_balanced_separator_upto(const SimpleGraph& g,
                                                           std::size_t s,
                                                           uint64_t subset_budget) {
    std::size_t smax = std::min(s, g.n);
    if (subsets_up_to(g.n, smax) > subset_budget)
        throw std::runtime_error("min_balanced_separator_upto: subset budget exceeded");
    std::vector<char> removed(g.n, 0);
    for (std::size_t size = 0; size <= smax; ++size) {
        std::vector<uint32_t> pick(size);
        std::iota(pick.begin(), pick.end(), 0);
        for (;;) {
            if (size > g.n) break;
            std::fill(removed.begin(), removed.end(), 0);
            for (uint32_t v : pick) removed[v] = 1;
            std::vector<std::vector<uint32_t>> comps;
            if (balanced_after_removal(g, removed, &comps)) {
                return SeparatorResult{pick, std::move(comps)};
            }
            // next lexicographic size-combination
            if (size == 0) break;
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == g.n - (size - (i - 1))) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

bool is_k_well_connected(const SimpleGraph& g, std::size_t k, uint64_t subset_budget) {
    return !min_balanced_separator_upto(g, k, subset_budget).has_value();
}

namespace {

struct CopsGame {
    const SimpleGraph& g;
    std::size_t k;
    std::vector<uint64_t> cop_sets;                       // all |C| <= k, as masks
    std::vector<std::vector<uint64_t>> comps_of;          // per cop set: component masks
    std::map<std::pair<uint64_t, uint64_t>, bool> winning;

    explicit CopsGame(const SimpleGraph& g_, std::size_t k_) : g(g_), k(k_) {}

    std::vector<uint64_t> component_masks(uint64_t removed) const {
        std::vector<uint64_t> res;
        uint64_t seen = removed;
        for (std::size_t s = 0; s < g.n; ++s) {
            if (seen & (uint64_t(1) << s)) continue;
            uint64_t comp = 0, stack = uint64_t(1) << s;
            seen |= uint64_t(1) << s;
            while (stack) {
                int u = std::countr_zero(stack);
                stack &= stack - 1;
                comp |= uint64_t(1) << u;
                for (uint32_t v : g.adj[u]) {
                    uint64_t b = uint64_t(1) << v;
                    if (!(seen & b)) {
                        seen |= b;
                        stack |= b;
                    }
                }
            }
            res.push_back(comp);
        }
        return res;
    }

    uint64_t reach(uint64_t from_comp, uint64_t blocked) const {
        // from_comp is connected and disjoint from blocked; grow it in G - blocked
        uint64_t frontier = from_comp, seen = from_comp | blocked;
        uint64_t comp = from_comp;
        while (frontier) {
            int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            for (uint32_t v : g.adj[u]) {
                uint64_t b = uint64_t(1) << v;
                if (!(seen & b)) {
                    seen |= b;
                    comp |= b;
                    frontier |= b;
                }
            }
        }
        return comp;
    }
};

}  // namespace

bool cops_win(const SimpleGraph& g, std::size_t k, uint64_t position_budget) {
    if (g.n == 0) return true;
    if (g.n > 63) throw std::runtime_error("cops_win: graph too large");
    uint64_t n_sets = subsets_up_to(g.n, k);
    if (n_sets * g.n > position_budget)
        throw std::runtime_error("cops_win: position budget exceeded");

    CopsGame game(g, k);
    for (std::size_t size = 0; size <= std::min(k, g.n); ++size) {
        std::vector<uint32_t> pick(size);
        std::iota(pick.begin(), pick.end(), 0);
        for (;;) {
            uint64_t mask = 0;
            for (uint32_t v : pick) mask |= uint64_t(1) << v;
            game.cop_sets.push_back(mask);
            if (size == 0) break;
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == g.n - (size - (i - 1))) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    game.comps_of.resize(game.cop_sets.size());
    std::map<uint64_t, std::size_t> set_index;
    for (std::size_t i = 0; i < game.cop_sets.size(); ++i) {
        set_index[game.cop_sets[i]] = i;
        game.comps_of[i] = game.component_masks(game.cop_sets[i]);
    }

    // least fixpoint of cop-winning positions
    std::map<std::pair<uint64_t, uint64_t>, bool> win;
    for (std::size_t i = 0; i < game.cop_sets.size(); ++i)
        for (uint64_t comp : game.comps_of[i])
            win[{game.cop_sets[i], comp}] = false;

    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [pos, w] : win) {
            if (w) continue;
            auto [cmask, rcomp] = pos;
            for (std::size_t j = 0; j < game.cop_sets.size(); ++j) {
                uint64_t next = game.cop_sets[j];
                uint64_t stay = cmask & next;
                // rcomp avoids cmask, so it is disjoint from the stationary cops
                uint64_t reach = game.reach(rcomp, stay);
                if ((reach & ~next) == 0) {  // nowhere to stand
                    w = true;
                    changed = true;
                    break;
                }
                bool all_lost = true;
                for (uint64_t d : game.comps_of[j]) {
                    if (!(d & reach)) continue;
                    if (!win[{next, d}]) {
                        all_lost = false;
                        break;
                    }
                }
                if (all_lost) {
                    w = true;
                    changed = true;
                    break;
                }
            }
        }
    }

    for (uint64_t comp : game.comps_of[set_index[0]])
        if (!win[{uint64_t(0), comp}]) return false;
    return true;
}

}  // namespace cfikit::graphs
