#include "cfikit/cfi.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cfikit::cfi {

namespace {

uint64_t subset_key(const std::vector<uint32_t>& s) {
    if (s.empty()) return 0;
    return (uint64_t(s[0] + 1) << 32) | uint64_t(s[1] + 1);
}

// even subsets of three incident edges, canonical order: {}, then pairs lex
std::vector<std::vector<uint32_t>> even_subsets(const std::vector<uint32_t>& inc) {
    return {{}, {inc[0], inc[1]}, {inc[0], inc[2]}, {inc[1], inc[2]}};
}

std::vector<uint32_t> incident_edge_ids(const graphs::BipartiteGraph& base, uint32_t w) {
    std::size_t m = base.left_size;
    std::vector<uint32_t> ids;
    for (std::size_t i = 0; i < base.edges.size(); ++i) {
        auto [u, v] = base.edges[i];
        if ((w < m && u == w) || (w >= m && v == w - m)) ids.push_back(uint32_t(i));
    }
    return ids;  // ascending because base.edges is sorted
}

std::string base_name(const graphs::BipartiteGraph& base, uint32_t w) {
    std::size_t m = base.left_size;
    if (w < m)
        return base.left_labels.empty() ? "u" + std::to_string(w) : base.left_labels[w];
    return base.right_labels.empty() ? "v" + std::to_string(w - m)
                                     : base.right_labels[w - m];
}

}  // namespace

perm::Domain CfiGraph::domain() const {
    return perm::Domain::make({{"X", n}, {"Y", n}});
}

uint32_t CfiGraph::outer_id(uint32_t base_v, uint32_t edge, uint8_t bit) const {
    auto it = outer_index.find({base_v, edge, bit});
    if (it == outer_index.end()) throw std::out_of_range("outer_id: no such vertex");
    return it->second;
}

uint32_t CfiGraph::inner_id(uint32_t base_v, const std::vector<uint32_t>& subset) const {
    auto it = inner_index.find({base_v, subset_key(subset)});
    if (it == inner_index.end()) throw std::out_of_range("inner_id: no such vertex");
    return it->second;
}

uint32_t CfiGraph::base_edge(uint32_t w, uint32_t nb) const {
    std::size_t mm = base.left_size;
    uint32_t u, v;
    if (w < mm && nb >= mm) {
        u = w;
        v = nb - uint32_t(mm);
    } else if (w >= mm && nb < mm) {
        u = nb;
        v = w - uint32_t(mm);
    } else {
        throw std::invalid_argument("base_edge: vertices on the same side");
    }
    auto id = base.edge_index(u, v);
    if (!id) throw std::invalid_argument("base_edge: not adjacent");
    return *id;
}

std::vector<uint32_t> CfiGraph::incident_edges(uint32_t w) const {
    return incident_edge_ids(base, w);
}

std::vector<uint32_t> CfiGraph::base_neighbours(uint32_t w) const {
    std::size_t mm = base.left_size;
    std::vector<uint32_t> nb;
    for (uint32_t e : incident_edges(w)) {
        auto [u, v] = base.edges[e];
        nb.push_back(w < mm ? uint32_t(mm) + v : u);
    }
    return nb;
}

CfiGraph build_cfi(const graphs::BipartiteGraph& base) {
    if (base.left_size != base.right_size || !base.is_regular(3))
        throw std::invalid_argument("build_cfi: base must be 3-regular bipartite");
    CfiGraph c;
    c.base = base;
    c.m = base.left_size;
    c.n = 10 * c.m;
    c.info.assign(2 * c.n, {});
    c.inner_of.assign(2 * c.m, {});
    c.outer_of.assign(2 * c.m, {});

    std::vector<std::string> x_labels, y_labels;
    uint32_t next = 0;

    auto add_inner = [&](uint32_t w, const std::vector<uint32_t>& s,
                         std::vector<std::string>& labels) {
        uint32_t gid = next++;
        CfiVertex info;
        info.base = w;
        info.inner = true;
        info.subset_size = uint8_t(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) info.subset[i] = s[i];
        c.info[gid] = info;
        c.inner_of[w].push_back(gid);
        c.inner_index[{w, subset_key(s)}] = gid;
        std::string lab = base_name(base, w) + ":{";
        for (std::size_t i = 0; i < s.size(); ++i) {
            auto [u, v] = base.edges[s[i]];
            uint32_t other = (w < c.m) ? uint32_t(c.m) + v : u;
            lab += base_name(base, other);
            if (i + 1 < s.size()) lab += ",";
        }
        lab += "}";
        labels.push_back(lab);
    };
    auto add_outer = [&](uint32_t w, uint32_t e, uint8_t bit,
                         std::vector<std::string>& labels) {
        uint32_t gid = next++;
        CfiVertex info;
        info.base = w;
        info.inner = false;
        info.edge = e;
        info.bit = bit;
        c.info[gid] = info;
        c.outer_of[w].push_back(gid);
        c.outer_index[{w, e, bit}] = gid;
        auto [u, v] = base.edges[e];
        uint32_t other = (w < c.m) ? uint32_t(c.m) + v : u;
        labels.push_back(base_name(base, w) + ":" + base_name(base, other) + ":" +
                         std::to_string(int(bit)));
    };

    // X: inner of U-gadgets, then outer of V-gadgets
    for (uint32_t u = 0; u < c.m; ++u)
        for (const auto& s : even_subsets(incident_edge_ids(base, u)))
            add_inner(u, s, x_labels);
    for (uint32_t v = 0; v < c.m; ++v)
        for (uint32_t e : incident_edge_ids(base, uint32_t(c.m) + v))
            for (uint8_t b = 0; b <= 1; ++b) add_outer(uint32_t(c.m) + v, e, b, x_labels);
    if (next != c.n) throw std::logic_error("build_cfi: X size mismatch");
    // Y: outer of U-gadgets, then inner of V-gadgets
    for (uint32_t u = 0; u < c.m; ++u)
        for (uint32_t e : incident_edge_ids(base, u))
            for (uint8_t b = 0; b <= 1; ++b) add_outer(u, e, b, y_labels);
    for (uint32_t v = 0; v < c.m; ++v)
        for (const auto& s : even_subsets(incident_edge_ids(base, uint32_t(c.m) + v)))
            add_inner(uint32_t(c.m) + v, s, y_labels);
    if (next != 2 * c.n) throw std::logic_error("build_cfi: Y size mismatch");

    std::vector<std::pair<uint32_t, uint32_t>> edges;
    auto link = [&](uint32_t gid_a, uint32_t gid_b) {
        uint32_t x = std::min(gid_a, gid_b), y = std::max(gid_a, gid_b);
        if (x >= c.n || y < c.n) throw std::logic_error("build_cfi: edge not across sides");
        edges.emplace_back(x, y - uint32_t(c.n));
    };
    // inner-outer edges inside each gadget: v_S meets (w,e,1) iff e in S
    for (uint32_t w = 0; w < 2 * c.m; ++w) {
        for (uint32_t gid : c.inner_of[w]) {
            const auto& info = c.info[gid];
            for (uint32_t e : incident_edge_ids(base, w)) {
                bool in_s = false;
                for (uint8_t i = 0; i < info.subset_size; ++i)
                    if (info.subset[i] == e) in_s = true;
                link(gid, c.outer_id(w, e, in_s ? 1 : 0));
            }
        }
    }
    // external pair edges
    for (uint32_t e = 0; e < base.edges.size(); ++e) {
        auto [u, v] = base.edges[e];
        for (uint8_t b = 0; b <= 1; ++b)
            link(c.outer_id(u, e, b), c.outer_id(uint32_t(c.m) + v, e, b));
    }
    c.graph = graphs::BipartiteGraph::from_edges(c.n, c.n, std::move(edges),
                                                 std::move(x_labels), std::move(y_labels));
    if (c.graph.edges.size() != 30 * c.m)
        throw std::logic_error("build_cfi: edge count mismatch");
    if (!c.graph.is_regular(3))
        throw std::logic_error("build_cfi: result not 3-regular");
    return c;
}

std::pair<uint32_t, uint32_t> twist_pair(const CfiGraph& c) {
    uint32_t e = c.incident_edges(0)[0];
    return {c.outer_id(0, e, 0), c.outer_id(0, e, 1)};
}

std::pair<exact::IntMatrix, exact::IntMatrix> matrices_MN(const CfiGraph& c) {
    exact::IntMatrix m = graphs::biadjacency(c.graph);
    exact::IntMatrix n = m;
    auto [p0, p1] = twist_pair(c);
    uint32_t c0 = p0 - uint32_t(c.n), c1 = p1 - uint32_t(c.n);
    for (std::size_t r = 0; r < n.rows; ++r) std::swap(n.at(r, c0), n.at(r, c1));
    return {std::move(m), std::move(n)};
}

perm::Permutation gadget_automorphism(const CfiGraph& c, uint32_t w, uint32_t nb_a,
                                      uint32_t nb_b) {
    if (nb_a == nb_b) throw std::invalid_argument("gadget_automorphism: equal neighbours");
    uint32_t ea = c.base_edge(w, nb_a), eb = c.base_edge(w, nb_b);
    perm::Domain d = c.domain();
    std::vector<uint32_t> img(d.total);
    std::iota(img.begin(), img.end(), 0);
    for (uint32_t gid : c.outer_of[w]) {
        const auto& info = c.info[gid];
        if (info.edge == ea || info.edge == eb)
            img[gid] = c.outer_id(w, info.edge, info.bit ^ 1);
    }
    for (uint32_t gid : c.inner_of[w]) {
        const auto& info = c.info[gid];
        std::vector<uint32_t> s(info.subset.begin(), info.subset.begin() + info.subset_size);
        for (uint32_t e : {ea, eb}) {
            auto it = std::find(s.begin(), s.end(), e);
            if (it == s.end()) s.push_back(e);
            else s.erase(it);
        }
        std::sort(s.begin(), s.end());
        img[gid] = c.inner_id(w, s);
    }
    auto p = perm::Permutation::from_images(d, std::move(img));
    // must preserve every internal edge of the gadget
    for (uint32_t gid : c.inner_of[w]) {
        for (uint32_t e : c.incident_edges(w)) {
            for (uint8_t b = 0; b <= 1; ++b) {
                uint32_t o = c.outer_id(w, e, b);
                uint32_t a1 = std::min(gid, o), a2 = std::max(gid, o);
                uint32_t i1 = std::min(p(gid), p(o)), i2 = std::max(p(gid), p(o));
                bool before = c.graph.has_edge(a1, a2 - uint32_t(c.n));
                bool after = c.graph.has_edge(i1, i2 - uint32_t(c.n));
                if (before != after)
                    throw std::logic_error("gadget_automorphism: internal edge broken");
            }
        }
    }
    return p;
}

perm::Permutation cycle_automorphism(const CfiGraph& c,
                                     const std::vector<uint32_t>& base_cycle) {
    std::size_t len = base_cycle.size();
    if (len < 4 || len % 2 != 0)
        throw std::invalid_argument("cycle_automorphism: need an even cycle, length >= 4");
    std::vector<uint32_t> sorted = base_cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("cycle_automorphism: repeated vertex");
    perm::Permutation p = perm::Permutation::identity(c.domain());
    for (std::size_t t = 0; t < len; ++t) {
        uint32_t w = base_cycle[t];
        uint32_t prev = base_cycle[(t + len - 1) % len];
        uint32_t next_v = base_cycle[(t + 1) % len];
        c.base_edge(w, prev);  // validates adjacency
        c.base_edge(w, next_v);
        p = p.compose(gadget_automorphism(c, w, prev, next_v));
    }
    if (!is_automorphism(c, p))
        throw std::logic_error("cycle_automorphism: composition is not an automorphism");
    return p;
}

bool is_automorphism(const CfiGraph& c, const perm::Permutation& p) {
    if (!p.part_preserving()) return false;
    for (auto [x, yr] : c.graph.edges) {
        uint32_t ix = p(x), iy = p(uint32_t(c.n) + yr);
        if (!c.graph.has_edge(ix, iy - uint32_t(c.n))) return false;
    }
    return true;
}

bool is_coherent(const CfiGraph& c, const perm::Permutation& p) {
    for (uint32_t w = 0; w < 2 * c.m; ++w) {
        for (uint32_t gid : c.inner_of[w]) {
            uint32_t im = p(gid);
            if (c.info[im].base != w || !c.info[im].inner) return false;
        }
        for (uint32_t gid : c.outer_of[w]) {
            uint32_t im = p(gid);
            if (c.info[im].base != w || c.info[im].inner) return false;
        }
    }
    return true;
}

bool is_good_bar(const CfiGraph& c, const perm::Permutation& beta, uint32_t u,
                 uint32_t v) {
    uint32_t e = c.base_edge(u, uint32_t(c.m) + v);
    uint32_t p0 = c.outer_id(u, e, 0), p1 = c.outer_id(u, e, 1);
    auto swap = perm::Permutation::transposition(beta.domain(), p0, p1);
    return is_automorphism(c, beta.compose(swap));
}

std::vector<std::array<uint8_t, 3>> gadget_swap_patterns(const CfiGraph& c, uint32_t w) {
    auto inc = c.incident_edges(w);
    std::vector<std::array<uint8_t, 3>> out;
    for (uint8_t mask = 0; mask < 8; ++mask) {
        std::array<uint8_t, 3> pat{uint8_t(mask & 1), uint8_t((mask >> 1) & 1),
                                   uint8_t((mask >> 2) & 1)};
        std::vector<uint32_t> flip;
        for (int i = 0; i < 3; ++i)
            if (pat[i]) flip.push_back(inc[i]);
        if (flip.size() % 2 != 0) continue;  // odd flips leave the even family
        // outer flips forced; inner map S -> S xor flip must preserve edges
        bool ok = true;
        for (uint32_t gid : c.inner_of[w]) {
            const auto& info = c.info[gid];
            std::vector<uint32_t> s(info.subset.begin(),
                                    info.subset.begin() + info.subset_size);
            for (uint32_t e : flip) {
                auto it = std::find(s.begin(), s.end(), e);
                if (it == s.end()) s.push_back(e);
                else s.erase(it);
            }
            std::sort(s.begin(), s.end());
            uint32_t im = c.inner_id(w, s);
            for (uint32_t e : inc) {
                bool in_old = false, in_new = false;
                for (uint8_t i = 0; i < info.subset_size; ++i)
                    if (info.subset[i] == e) in_old = true;
                for (uint32_t x : s)
                    if (x == e) in_new = true;
                bool flipped = std::find(flip.begin(), flip.end(), e) != flip.end();
                // edge to (w,e,b): before b=[e in S]; image must match flipped bit
                bool target_bit = flipped ? !in_old : in_old;
                if (in_new != target_bit) ok = false;
                (void)im;
            }
        }
        if (ok) out.push_back(pat);
    }
    return out;
}

MatchingClass classify_matching(const CfiGraph& c, const graphs::Matching& mu) {
    if (!mu.perfect(c.graph))
        throw std::invalid_argument("classify_matching: not a perfect matching");
    MatchingClass cls;
    std::vector<std::pair<uint32_t, uint8_t>> factor;  // (edge, f bit)
    std::vector<uint32_t> doubled;
    for (uint32_t e = 0; e < c.base.edges.size(); ++e) {
        auto [u, v] = c.base.edges[e];
        bool in[2];
        for (uint8_t b = 0; b <= 1; ++b) {
            uint32_t xl = c.outer_id(uint32_t(c.m) + v, e, b);
            uint32_t yr = c.outer_id(u, e, b) - uint32_t(c.n);
            in[b] = mu.to_right[xl] == yr;
        }
        if (in[0] && in[1]) doubled.push_back(e);
        else if (in[0]) factor.push_back({e, 0});
        else if (in[1]) factor.push_back({e, 1});
    }
    if (!doubled.empty()) {
        cls.uniform = false;
        uint32_t min_u = UINT32_MAX;
        for (uint32_t e : doubled) min_u = std::min(min_u, c.base.edges[e].first);
        cls.doubled_min_u = min_u;
        return cls;
    }
    cls.uniform = true;
    std::sort(factor.begin(), factor.end());
    std::vector<std::size_t> deg(2 * c.m, 0);
    for (auto [e, b] : factor) {
        cls.factor_edges.push_back(e);
        cls.f.push_back(b);
        auto [u, v] = c.base.edges[e];
        ++deg[u];
        ++deg[c.m + v];
    }
    for (std::size_t w = 0; w < 2 * c.m; ++w)
        if (deg[w] != 2)
            throw std::logic_error("classify_matching: uniform matching without a 2-factor");
    return cls;
}

std::vector<std::vector<std::pair<uint32_t, uint32_t>>> gadget_completions(
    const CfiGraph& c, uint32_t w, const std::vector<uint32_t>& covered) {
    std::vector<uint32_t> inner = c.inner_of[w];
    std::vector<uint32_t> outer;
    for (uint32_t gid : c.outer_of[w])
        if (std::find(covered.begin(), covered.end(), gid) == covered.end())
            outer.push_back(gid);
    if (inner.size() != outer.size())
        throw std::invalid_argument("gadget_completions: uncoverable gadget");

    auto adjacent = [&](uint32_t a, uint32_t b) {
        uint32_t x = std::min(a, b), y = std::max(a, b);
        return c.graph.has_edge(x, y - uint32_t(c.n));
    };
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> result;
    std::vector<char> used(outer.size(), 0);
    std::vector<std::pair<uint32_t, uint32_t>> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == inner.size()) {
            result.push_back(cur);
            return;
        }
        for (std::size_t t = 0; t < outer.size(); ++t) {
            if (used[t] || !adjacent(inner[idx], outer[t])) continue;
            used[t] = 1;
            uint32_t a = std::min(inner[idx], outer[t]);
            uint32_t b = std::max(inner[idx], outer[t]);
            cur.emplace_back(a, b);
            rec(idx + 1);
            cur.pop_back();
            used[t] = 0;
        }
    };
    rec(0);
    return result;
}

graphs::Matching pair_nonuniform(const CfiGraph& c, const graphs::Matching& mu) {
    MatchingClass cls = classify_matching(c, mu);
    if (cls.uniform) throw std::invalid_argument("pair_nonuniform: matching is uniform");
    uint32_t w = cls.doubled_min_u;
    // the doubled edge at w: both externals of some incident edge are matched
    std::optional<uint32_t> doubled_edge;
    for (uint32_t e : c.incident_edges(w)) {
        auto [u, v] = c.base.edges[e];
        (void)u;
        bool both = true;
        for (uint8_t b = 0; b <= 1 && both; ++b) {
            uint32_t xl = c.outer_id(uint32_t(c.m) + v, e, b);
            uint32_t yr = c.outer_id(w, e, b) - uint32_t(c.n);
            if (mu.to_right[xl] != yr) both = false;
        }
        if (both) {
            doubled_edge = e;
            break;
        }
    }
    if (!doubled_edge) throw std::logic_error("pair_nonuniform: doubled edge vanished");
    std::vector<uint32_t> covered = {c.outer_id(w, *doubled_edge, 0),
                                     c.outer_id(w, *doubled_edge, 1)};
    auto comps = gadget_completions(c, w, covered);
    if (comps.size() != 2)
        throw std::logic_error("pair_nonuniform: gadget does not have exactly 2 completions");

    // current internal pairs of gadget w (inner of U-gadget lives on side X)
    std::vector<std::pair<uint32_t, uint32_t>> current;
    for (uint32_t gid : c.inner_of[w])
        current.emplace_back(gid, uint32_t(c.n) + mu.to_right[gid]);
    std::sort(current.begin(), current.end());
    std::size_t keep = comps[0] == current ? 1 : 0;
    if (comps[1 - keep] != current)
        throw std::logic_error("pair_nonuniform: current completion not found");

    graphs::Matching out = mu;
    for (auto [x, y] : comps[keep]) out.to_right[x] = y - uint32_t(c.n);
    if (!out.perfect(c.graph))
        throw std::logic_error("pair_nonuniform: result not perfect");
    return out;
}

int matching_sign(const CfiGraph& c, const graphs::Matching& mu) {
    (void)c;
    return exact::permutation_sign(mu.to_right);
}

CensusResult census(const CfiGraph& c, uint64_t matching_budget) {
    CensusResult res;
    std::map<std::pair<std::vector<uint32_t>, std::vector<uint8_t>>, CensusBucket> buckets;
    uint64_t seen = 0;
    bool involution_ok = true;
    graphs::for_each_perfect_matching(c.graph, [&](const graphs::Matching& mu) {
        if (++seen > matching_budget)
            throw std::runtime_error("census: matching budget exceeded");
        res.total += 1;
        int sg = matching_sign(c, mu);
        res.signed_sum += sg;
        MatchingClass cls = classify_matching(c, mu);
        if (cls.uniform) {
            res.uniform += 1;
            auto key = std::make_pair(cls.factor_edges, cls.f);
            auto& b = buckets[key];
            if (b.count == 0) {
                b.factor_edges = cls.factor_edges;
                b.f = cls.f;
                b.sign = sg;
            } else if (b.sign != sg) {
                throw std::logic_error("census: sign varies within a bucket");
            }
            b.count += 1;
        } else {
            res.nonuniform += 1;
            res.nonuniform_signed_sum += sg;
            graphs::Matching partner = pair_nonuniform(c, mu);
            if (matching_sign(c, partner) != -sg) involution_ok = false;
            if (partner.to_right == mu.to_right) involution_ok = false;
            graphs::Matching back = pair_nonuniform(c, partner);
            if (back.to_right != mu.to_right) involution_ok = false;
        }
        return true;
    });
    res.involution_verified = involution_ok;
    if (res.nonuniform_signed_sum != 0)
        throw std::logic_error("census: non-uniform signed sum is nonzero");
    for (auto& [key, b] : buckets) res.buckets.push_back(std::move(b));
    std::set<std::vector<uint32_t>> factors;
    for (const auto& b : res.buckets) factors.insert(b.factor_edges);
    res.two_factor_count = factors.size();
    // sign constant across f for a fixed 2-factor
    for (const auto& f : factors) {
        int sign = 0;
        for (const auto& b : res.buckets) {
            if (b.factor_edges != f) continue;
            if (sign == 0) sign = b.sign;
            else if (sign != b.sign)
                throw std::logic_error("census: sign varies across f for one 2-factor");
        }
    }
    return res;
}

BigInt det_via_two_factors(const CfiGraph& c) {
    auto tf = graphs::two_factors(c.base);
    long long sum = 0;
    for (const auto& factor : tf) {
        graphs::Matching mu;
        mu.to_right.assign(c.n, graphs::Matching::none);
        std::vector<char> in_f(c.base.edges.size(), 0);
        for (uint32_t e : factor) in_f[e] = 1;
        for (uint32_t e : factor) {
            auto [u, v] = c.base.edges[e];
            uint32_t xl = c.outer_id(uint32_t(c.m) + v, e, 0);
            uint32_t yr = c.outer_id(u, e, 0) - uint32_t(c.n);
            mu.to_right[xl] = yr;
        }
        for (uint32_t w = 0; w < 2 * c.m; ++w) {
            std::vector<uint32_t> covered;
            for (uint32_t e : c.incident_edges(w))
                if (in_f[e]) covered.push_back(c.outer_id(w, e, 0));
            auto comps = gadget_completions(c, w, covered);
            if (comps.size() != 2)
                throw std::logic_error("det_via_two_factors: completions != 2");
            for (auto [x, y] : comps[0]) mu.to_right[x] = y - uint32_t(c.n);
        }
        if (!mu.perfect(c.graph))
            throw std::logic_error("det_via_two_factors: completion not perfect");
        sum += matching_sign(c, mu);
    }
    return BigInt(sum) << (4 * c.m);
}

std::pair<graphs::BipartiteGraph, graphs::BipartiteGraph> build_permanent_pair(
    const graphs::BipartiteGraph& base) {
    if (base.left_size != base.right_size || !base.is_regular(3))
        throw std::invalid_argument("build_permanent_pair: base must be 3-regular bipartite");
    std::size_t m = base.left_size;
    uint32_t twist_w = 0;
    uint32_t twist_e = incident_edge_ids(base, 0)[0];

    auto build = [&](bool twisted) {
        std::vector<std::pair<uint32_t, uint32_t>> edges;
        for (uint32_t w = 0; w < 2 * m; ++w) {
            auto inc = incident_edge_ids(base, w);
            auto subsets = even_subsets(inc);
            for (std::size_t si = 0; si < subsets.size(); ++si) {
                uint32_t left = uint32_t(4 * w + si);
                for (uint32_t e : inc) {
                    bool in_s = std::find(subsets[si].begin(), subsets[si].end(), e) !=
                                subsets[si].end();
                    uint8_t b = in_s ? 1 : 0;
                    if (twisted && w == twist_w && e == twist_e) b ^= 1;
                    edges.emplace_back(left, 2 * e + b);
                }
                edges.emplace_back(left, uint32_t(6 * m + w));  // apex
            }
        }
        return graphs::BipartiteGraph::from_edges(8 * m, 8 * m, std::move(edges));
    };
    return {build(false), build(true)};
}

}  // namespace cfikit::cfi
