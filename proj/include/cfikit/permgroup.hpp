#pragma once
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfikit/bigint.hpp"

namespace cfikit::perm {

// Ordered list of named parts; elements are global indices [0, total).
struct Domain {
    struct Part {
        std::string name;
        std::size_t size;
        std::size_t offset;
    };
    std::vector<Part> parts;
    std::size_t total = 0;

    static Domain make(const std::vector<std::pair<std::string, std::size_t>>& spec);
    static Domain rows_cols(std::size_t rows, std::size_t cols);

    std::size_t part_of(std::size_t e) const;
    std::vector<uint32_t> part_elements(std::size_t p) const;
    bool operator==(const Domain& o) const;
};

class Permutation {
public:
    Permutation() = default;

    static Permutation identity(const Domain& d);
    static Permutation from_images(const Domain& d, std::vector<uint32_t> img);
    static Permutation transposition(const Domain& d, uint32_t a, uint32_t b);
    // cyc[0] -> cyc[1] -> ... -> cyc[0]
    static Permutation cycle(const Domain& d, const std::vector<uint32_t>& cyc);

    const Domain& domain() const { return *dom_; }
    uint32_t operator()(uint32_t x) const { return img_[x]; }
    const std::vector<uint32_t>& images() const { return img_; }

    Permutation compose(const Permutation& q) const;  // (p.compose(q))(x) = p(q(x))
    Permutation inverse() const;
    bool is_identity() const;
    bool part_preserving() const;
    std::vector<uint32_t> moved_points() const;

    int sign() const;
    int sign_on_part(std::size_t part) const;  // needs the part preserved setwise

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
    Permutation(std::shared_ptr<const Domain> d, std::vector<uint32_t> img)
        : dom_(std::move(d)), img_(std::move(img)) {}
    std::shared_ptr<const Domain> dom_;
    std::vector<uint32_t> img_;
};

// Symbolic group description. Sym/Alt act on an explicit element subset and
// fix everything else; Product factors must have pairwise disjoint supports;
// EqualSign permits arbitrary action within each listed set subject to all
// per-set signs being equal (two full parts give the determinant group D_n);
// Explicit stores a closed element list.
class GroupSpec {
public:
    enum class Kind { Trivial, Sym, Alt, Product, EqualSign, Explicit };

    static GroupSpec trivial(const Domain& d);
    static GroupSpec sym(const Domain& d, std::vector<uint32_t> set);
    static GroupSpec alt(const Domain& d, std::vector<uint32_t> set);
    static GroupSpec sym_part(const Domain& d, std::size_t part);
    static GroupSpec alt_part(const Domain& d, std::size_t part);
    static GroupSpec product(std::vector<GroupSpec> factors);
    static GroupSpec equal_sign(const Domain& d, std::vector<std::vector<uint32_t>> sets);
    static GroupSpec explicit_elements(const Domain& d, std::vector<Permutation> elems);

    Kind kind() const { return kind_; }
    const Domain& domain() const { return dom_; }
    const std::vector<uint32_t>& point_set() const { return set_; }
    const std::vector<GroupSpec>& factors() const { return factors_; }
    const std::vector<std::vector<uint32_t>>& linked_sets() const { return linked_; }
    const std::vector<Permutation>& explicit_list() const { return elems_; }

    bool contains(const Permutation& p) const;
    BigInt order() const;
    std::vector<Permutation> generators() const;
    std::vector<Permutation> enumerate(std::size_t budget = 10000) const;
    GroupSpec pointwise_stabilizer(const std::vector<uint32_t>& fixed) const;
    std::vector<uint32_t> support_points() const;  // everything possibly moved

private:
    GroupSpec() = default;
    Kind kind_ = Kind::Trivial;
    Domain dom_;
    std::vector<uint32_t> set_;
    std::vector<GroupSpec> factors_;
    std::vector<std::vector<uint32_t>> linked_;
    std::vector<Permutation> elems_;        // sorted
};

// Right coset T(G, alpha) = { gamma . alpha : gamma in G }.
struct BijectionCoset {
    Permutation base;
    GroupSpec group;

    bool contains(const Permutation& beta) const {
        return group.contains(beta.compose(base.inverse()));
    }
    std::vector<Permutation> enumerate(std::size_t budget = 10000) const;
};

std::vector<uint32_t> orbit_point(const GroupSpec& g, uint32_t x,
                                  std::size_t budget = 1 << 20);

template <typename T, typename Act>
std::vector<T> orbit(const GroupSpec& g, const T& x, Act act,
                     std::size_t budget = 1 << 20) {
    auto gens = g.generators();
    std::set<T> seen{x};
    std::vector<T> frontier{x};
    while (!frontier.empty()) {
        std::vector<T> next;
        for (const auto& y : frontier) {
            for (const auto& p : gens) {
                T z = act(p, y);
                if (seen.insert(z).second) {
                    if (seen.size() > budget) throw std::runtime_error("orbit: budget exceeded");
                    next.push_back(z);
                }
            }
        }
        frontier = std::move(next);
    }
    return std::vector<T>(seen.begin(), seen.end());
}

struct SupportResult {
    enum class Status { Found, NoSmallSupport };
    Status status;
    std::vector<uint32_t> support;  // meaningful when Found
};

// Least (size, then lex) S with pointwise-stab(S) <= stab of the target,
// searched over subsets of the whole domain strictly below half its size
// (where minimum supports are unique). fixes_x decides whether a permutation
// stabilizes the target.
SupportResult canonical_support(const GroupSpec& ambient,
                                const std::function<bool(const Permutation&)>& fixes_x,
                                std::optional<std::size_t> max_size = std::nullopt,
                                uint64_t subset_budget = 50'000'000);

// All supports of minimum size (test hook for uniqueness claims).
std::vector<std::vector<uint32_t>> min_supports(
    const GroupSpec& ambient, const std::function<bool(const Permutation&)>& fixes_x,
    uint64_t subset_budget = 50'000'000);

// A G-set presented by an action callback; spot_check probes identity and
// composition laws on sampled pairs.
struct IndexedSet {
    Domain y;
    std::size_t x_count = 0;
    std::function<uint32_t(const Permutation&, uint32_t)> act;

    void spot_check(const GroupSpec& g, std::size_t samples = 64) const;
};

}  // namespace cfikit::perm
