#pragma once
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cfikit/graphs.hpp"

namespace cfikit::forge {

// Raised when every zero-sum row set sits on the 2n/3 boundary (K_{3,3} is
// the canonical case) and the switch repair cannot be applied.
struct NoAdmissibleZeroSum : std::runtime_error {
    NoAdmissibleZeroSum() : std::runtime_error("no admissible zero-sum set") {}
};

struct RepairStep {
    std::vector<uint32_t> zero_sum_set;  // rows (left vertices)
    uint32_t i, j;                       // columns: i in N(S), j outside
    uint32_t k, l;                       // rows: k in S, l outside
    std::pair<uint32_t, uint32_t> removed[2];  // {k,i}, {l,j}
    std::pair<uint32_t, uint32_t> added[2];    // {k,j}, {l,i}
    std::size_t rank_after;
};

struct ConnectivityCert {
    std::size_t requested = 0;   // 0 = not checked
    bool exact = false;          // exhaustive search completed
    std::size_t certified = 0;   // graph is certified-well-connected up to this
    std::optional<graphs::SeparatorResult> counterexample;  // witness if not
};

struct ForgeReport {
    graphs::BipartiteGraph graph;
    uint64_t seed = 0;           // caller's seed
    uint64_t chain_seed = 0;     // seed of the accepted sample
    std::size_t resamples = 0;   // repair dead-ends that forced a fresh sample
    uint64_t rejections = 0;     // non-disjoint triples discarded while sampling
    std::vector<RepairStep> repairs;
    std::vector<std::size_t> rank_trace;  // strictly increasing, ends at n
    ConnectivityCert connectivity;
};

// Union of three uniformly random pairwise-disjoint bijections U -> V
// (rejection sampling; acceptance probability tends to e^-3).
graphs::BipartiteGraph sample_three_matchings(std::size_t n, uint64_t seed,
                                              uint64_t* rejections = nullptr);

// One switch repair: strictly increases the GF(2) rank of the biadjacency.
// Throws NoAdmissibleZeroSum when no zero-sum set smaller than 2n/3 exists.
RepairStep repair_step(graphs::BipartiteGraph& g);

ForgeReport forge(std::size_t n, uint64_t seed, std::size_t connectivity_k = 0,
                  std::size_t max_resamples = 64);

// Fraction of trials in which three fresh bijections are pairwise disjoint.
double disjoint_triple_acceptance(std::size_t n, std::size_t trials, uint64_t seed);

}  // namespace cfikit::forge
