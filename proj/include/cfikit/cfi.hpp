#pragma once
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cfikit/exactalg.hpp"
#include "cfikit/graphs.hpp"
#include "cfikit/permgroup.hpp"

namespace cfikit::cfi {

// One vertex of the gadget construction. Base vertices are numbered
// 0..m-1 (left part U) and m..2m-1 (right part V). Inner vertices carry an
// even subset of the incident base-edge ids; outer vertices carry (edge, bit).
struct CfiVertex {
    uint32_t base = 0;
    bool inner = false;
    std::array<uint32_t, 2> subset{};  // inner: sorted edge ids (subset_size of them)
    uint8_t subset_size = 0;
    uint32_t edge = 0;  // outer
    uint8_t bit = 0;    // outer
};

// The doubled bipartite graph over a 3-regular bipartite base. Side X holds
// inner vertices of U-gadgets then outer vertices of V-gadgets; side Y holds
// outer vertices of U-gadgets then inner vertices of V-gadgets. Global ids:
// X vertices are 0..n-1, Y vertices are n..2n-1 with n = 10m.
struct CfiGraph {
    graphs::BipartiteGraph base;
    std::size_t m = 0;  // |U| = |V|
    std::size_t n = 0;  // vertices per side (10m)
    graphs::BipartiteGraph graph;  // left = X, right = Y

    std::vector<CfiVertex> info;  // indexed by global id (size 2n)
    std::vector<std::vector<uint32_t>> inner_of, outer_of;  // per base vertex, global ids
    std::map<std::tuple<uint32_t, uint32_t, uint8_t>, uint32_t> outer_index;  // (base,edge,bit)
    std::map<std::pair<uint32_t, uint64_t>, uint32_t> inner_index;  // (base, subset key)

    perm::Domain domain() const;  // parts "X" (n), "Y" (n)

    uint32_t outer_id(uint32_t base_v, uint32_t edge, uint8_t bit) const;
    uint32_t inner_id(uint32_t base_v, const std::vector<uint32_t>& subset) const;
    // base edge id between base vertices w (either side) and its neighbour nb
    uint32_t base_edge(uint32_t w, uint32_t nb) const;
    std::vector<uint32_t> incident_edges(uint32_t w) const;  // sorted edge ids
    std::vector<uint32_t> base_neighbours(uint32_t w) const;  // base ids
};

CfiGraph build_cfi(const graphs::BipartiteGraph& base);

// Y-side outer pair of the first U-vertex's lowest incident edge; N swaps
// these two columns of M.
std::pair<uint32_t, uint32_t> twist_pair(const CfiGraph& c);
std::pair<exact::IntMatrix, exact::IntMatrix> matrices_MN(const CfiGraph& c);

// Swap within the a-pair and b-pair of gadget w plus the induced inner swap;
// an automorphism of the gadget's internal edges only. a, b are base ids of
// neighbours of w.
perm::Permutation gadget_automorphism(const CfiGraph& c, uint32_t w, uint32_t nb_a,
                                      uint32_t nb_b);

// Composition of gadget automorphisms along a simple base cycle (alternating
// U/V, given as base ids); a full automorphism of the doubled graph.
perm::Permutation cycle_automorphism(const CfiGraph& c,
                                     const std::vector<uint32_t>& base_cycle);

bool is_automorphism(const CfiGraph& c, const perm::Permutation& p);
bool is_coherent(const CfiGraph& c, const perm::Permutation& p);

// beta composed with the swap of the outer pair for edge {u, m+v} is an
// automorphism. u indexes U, v indexes V.
bool is_good_bar(const CfiGraph& c, const perm::Permutation& beta, uint32_t u,
                 uint32_t v);

// Which outer-pair swap patterns (one flag per incident edge, ascending edge
// order) extend to an automorphism of the gadget's internal edges.
std::vector<std::array<uint8_t, 3>> gadget_swap_patterns(const CfiGraph& c, uint32_t w);

struct MatchingClass {
    bool uniform = false;
    std::vector<uint32_t> factor_edges;  // sorted base edge ids (uniform)
    std::vector<uint8_t> f;              // aligned with factor_edges (uniform)
    uint32_t doubled_min_u = 0;          // least U-vertex on a doubled edge (non-uniform)
};

MatchingClass classify_matching(const CfiGraph& c, const graphs::Matching& mu);

// All internal perfect matchings of gadget w once the outer vertices in
// `covered` (global ids) are matched elsewhere; pairs are (X id, Y id).
std::vector<std::vector<std::pair<uint32_t, uint32_t>>> gadget_completions(
    const CfiGraph& c, uint32_t w, const std::vector<uint32_t>& covered);

// Sign-reversing partner of a non-uniform matching: re-match the gadget of
// the least doubled U-vertex the other way.
graphs::Matching pair_nonuniform(const CfiGraph& c, const graphs::Matching& mu);

int matching_sign(const CfiGraph& c, const graphs::Matching& mu);

struct CensusBucket {
    std::vector<uint32_t> factor_edges;
    std::vector<uint8_t> f;
    BigInt count = 0;
    int sign = 0;  // common sign of the bucket
};

struct CensusResult {
    BigInt total = 0, uniform = 0, nonuniform = 0;
    std::vector<CensusBucket> buckets;  // ordered by (factor_edges, f)
    BigInt signed_sum = 0;              // over every perfect matching
    BigInt nonuniform_signed_sum = 0;   // zero by the pairing
    bool involution_verified = false;
    std::size_t two_factor_count = 0;
};

CensusResult census(const CfiGraph& c, uint64_t matching_budget = 50'000'000);

// 2^{4m} * sum of signs of one canonical completion per base 2-factor.
BigInt det_via_two_factors(const CfiGraph& c);

// Contract both external pair edges of every base edge and attach one apex
// per gadget adjacent to its four inner vertices; the twisted twin flips the
// pair connections at the first U-vertex's lowest incident edge.
std::pair<graphs::BipartiteGraph, graphs::BipartiteGraph> build_permanent_pair(
    const graphs::BipartiteGraph& base);

}  // namespace cfikit::cfi
