#include "cfikit/forge.hpp"

#include <algorithm>
#include <numeric>

#include "cfikit/rng.hpp"

namespace cfikit::forge {

namespace {

std::vector<uint32_t> random_bijection(std::size_t n, Rng& rng) {
    std::vector<uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (std::size_t i = n - 1; i > 0; --i)
        std::swap(p[i], p[rng.below(i + 1)]);
    return p;
}

bool pairwise_disjoint(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                       const std::vector<uint32_t>& c) {
    for (std::size_t u = 0; u < a.size(); ++u)
        if (a[u] == b[u] || a[u] == c[u] || b[u] == c[u]) return false;
    return true;
}

}  // namespace

graphs::BipartiteGraph sample_three_matchings(std::size_t n, uint64_t seed,
                                              uint64_t* rejections) {
    if (n < 3) throw std::invalid_argument("sample_three_matchings: need n >= 3");
    Rng rng(seed);
    uint64_t rejected = 0;
    for (;;) {
        auto p1 = random_bijection(n, rng);
        auto p2 = random_bijection(n, rng);
        auto p3 = random_bijection(n, rng);
        if (!pairwise_disjoint(p1, p2, p3)) {
            ++rejected;
            continue;
        }
        if (rejections) *rejections += rejected;
        std::vector<std::pair<uint32_t, uint32_t>> edges;
        for (std::size_t u = 0; u < n; ++u) {
            edges.emplace_back(u, p1[u]);
            edges.emplace_back(u, p2[u]);
            edges.emplace_back(u, p3[u]);
        }
        return graphs::BipartiteGraph::from_edges(n, n, std::move(edges));
    }
}

double disjoint_triple_acceptance(std::size_t n, std::size_t trials, uint64_t seed) {
    Rng rng(seed);
    std::size_t accepted = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        auto p1 = random_bijection(n, rng);
        auto p2 = random_bijection(n, rng);
        auto p3 = random_bijection(n, rng);
        if (pairwise_disjoint(p1, p2, p3)) ++accepted;
    }
    return double(accepted) / double(trials);
}

RepairStep repair_step(graphs::BipartiteGraph& g) {
    std::size_t n = g.left_size;
    auto a = graphs::gf2_biadjacency(g);
    // admissible zero-sum sets are strictly smaller than 2n/3
    std::size_t max_size = (2 * n - 1) / 3;
    auto s_opt = gf2::find_zero_sum_set(a, max_size);
    if (!s_opt) throw NoAdmissibleZeroSum();
    const auto& s = *s_opt;
    if (s.size() % 2 != 0)
        throw std::logic_error("repair_step: zero-sum set of odd size");

    std::vector<char> in_s(n, 0);
    for (uint32_t u : s) in_s[u] = 1;
    std::vector<char> in_ns(n, 0);  // N(S) on the right side
    for (uint32_t u : s)
        for (uint32_t v : g.adj_left[u]) in_ns[v] = 1;

    // weight-2 target t_ij outside the row span, i in N(S), j outside
    std::optional<std::pair<uint32_t, uint32_t>> ij;
    for (uint32_t i = 0; i < n && !ij; ++i) {
        if (!in_ns[i]) continue;
        for (uint32_t j = 0; j < n && !ij; ++j) {
            if (in_ns[j]) continue;
            gf2::BitVec t(n);
            t.set(i, true);
            t.set(j, true);
            if (!a.in_row_span(t)) ij = {i, j};
        }
    }
    if (!ij) throw std::runtime_error("repair_step: no rank-increasing switch target");
    auto [i, j] = *ij;

    std::optional<uint32_t> k, l;
    for (uint32_t u = 0; u < n && !k; ++u)
        if (in_s[u] && g.has_edge(u, i) && !g.has_edge(u, j)) k = u;
    for (uint32_t u = 0; u < n && !l; ++u)
        if (!in_s[u] && g.has_edge(u, j) && !g.has_edge(u, i)) l = u;
    if (!k || !l) throw std::runtime_error("repair_step: no switchable pair");

    std::size_t rank_before = a.rank();
    std::vector<std::pair<uint32_t, uint32_t>> edges = g.edges;
    auto drop = [&](uint32_t u, uint32_t v) {
        auto it = std::find(edges.begin(), edges.end(), std::make_pair(u, v));
        edges.erase(it);
    };
    drop(*k, i);
    drop(*l, j);
    edges.emplace_back(*k, j);
    edges.emplace_back(*l, i);
    g = graphs::BipartiteGraph::from_edges(n, n, std::move(edges), g.left_labels,
                                           g.right_labels);
    if (!g.is_regular(3))
        throw std::logic_error("repair_step: switch broke 3-regularity");

    std::size_t rank_after = graphs::gf2_biadjacency(g).rank();
    if (rank_after <= rank_before)
        throw std::logic_error("repair_step: rank did not increase");

    RepairStep step;
    step.zero_sum_set = s;
    step.i = i;
    step.j = j;
    step.k = *k;
    step.l = *l;
    step.removed[0] = {*k, i};
    step.removed[1] = {*l, j};
    step.added[0] = {*k, j};
    step.added[1] = {*l, i};
    step.rank_after = rank_after;
    return step;
}

ForgeReport forge(std::size_t n, uint64_t seed, std::size_t connectivity_k,
                  std::size_t max_resamples) {
    ForgeReport rep;
    rep.seed = seed;
    uint64_t chain_seed = seed;
    for (std::size_t attempt = 0;; ++attempt) {
        if (attempt > max_resamples)
            throw std::runtime_error("forge: resample budget exhausted");
        rep.repairs.clear();
        rep.rank_trace.clear();
        auto g = sample_three_matchings(n, chain_seed, &rep.rejections);
        rep.rank_trace.push_back(graphs::gf2_biadjacency(g).rank());
        bool dead_end = false;
        while (rep.rank_trace.back() < n) {
            try {
                auto step = repair_step(g);
                rep.rank_trace.push_back(step.rank_after);
                rep.repairs.push_back(std::move(step));
            } catch (const NoAdmissibleZeroSum&) {
                dead_end = true;
                break;
            }
        }
        if (!dead_end) {
            rep.graph = std::move(g);
            rep.chain_seed = chain_seed;
            rep.resamples = attempt;
            break;
        }
        chain_seed = Rng::derive(seed, attempt + 1);
    }

    if (connectivity_k > 0) {
        rep.connectivity.requested = connectivity_k;
        auto sep = graphs::min_balanced_separator_upto(graphs::as_simple(rep.graph),
                                                       connectivity_k);
        rep.connectivity.exact = true;
        if (sep) {
            rep.connectivity.certified =
                sep->separator.empty() ? 0 : sep->separator.size() - 1;
            rep.connectivity.counterexample = std::move(sep);
        } else {
            rep.connectivity.certified = connectivity_k;
        }
    }
    return rep;
}

}  // namespace cfikit::forge
