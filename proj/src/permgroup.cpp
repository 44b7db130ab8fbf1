#include "cfikit/permgroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cfikit/rng.hpp"

namespace cfikit::perm {

Domain Domain::make(const std::vector<std::pair<std::string, std::size_t>>& spec) {
    Domain d;
    std::size_t off = 0;
    for (const auto& [name, size] : spec) {
        d.parts.push_back({name, size, off});
        off += size;
    }
    d.total = off;
    return d;
}

Domain Domain::rows_cols(std::size_t rows, std::size_t cols) {
    return make({{"rows", rows}, {"cols", cols}});
}

std::size_t Domain::part_of(std::size_t e) const {
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (e >= parts[i].offset && e < parts[i].offset + parts[i].size) return i;
    throw std::out_of_range("Domain::part_of");
}

std::vector<uint32_t> Domain::part_elements(std::size_t p) const {
    std::vector<uint32_t> out(parts.at(p).size);
    std::iota(out.begin(), out.end(), uint32_t(parts[p].offset));
    return out;
}

bool Domain::operator==(const Domain& o) const {
    if (total != o.total || parts.size() != o.parts.size()) return false;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].name != o.parts[i].name || parts[i].size != o.parts[i].size)
            return false;
    return true;
}

Permutation Permutation::identity(const Domain& d) {
    std::vector<uint32_t> img(d.total);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::make_shared<Domain>(d), std::move(img));
}

Permutation Permutation::from_images(const Domain& d, std::vector<uint32_t> img) {
    if (img.size() != d.total) throw std::invalid_argument("permutation: size mismatch");
    std::vector<char> seen(d.total, 0);
    for (uint32_t v : img) {
        if (v >= d.total || seen[v]) throw std::invalid_argument("permutation: not a bijection");
        seen[v] = 1;
    }
    return Permutation(std::make_shared<Domain>(d), std::move(img));
}

Permutation Permutation::transposition(const Domain& d, uint32_t a, uint32_t b) {
    Permutation p = identity(d);
    if (a >= d.total || b >= d.total) throw std::invalid_argument("transposition: out of range");
    std::swap(p.img_[a], p.img_[b]);
    return p;
}

Permutation Permutation::cycle(const Domain& d, const std::vector<uint32_t>& cyc) {
    Permutation p = identity(d);
    for (std::size_t i = 0; i < cyc.size(); ++i)
        p.img_[cyc[i]] = cyc[(i + 1) % cyc.size()];
    // validate distinctness via from_images rules
    return from_images(d, p.img_);
}

Permutation Permutation::compose(const Permutation& q) const {
    if (!(domain() == q.domain())) throw std::invalid_argument("compose: domain mismatch");
    std::vector<uint32_t> img(img_.size());
    for (std::size_t x = 0; x < img.size(); ++x) img[x] = img_[q.img_[x]];
    return Permutation(dom_, std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<uint32_t> img(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x) img[img_[x]] = uint32_t(x);
    return Permutation(dom_, std::move(img));
}

bool Permutation::is_identity() const {
    for (std::size_t x = 0; x < img_.size(); ++x)
        if (img_[x] != x) return false;
    return true;
}

bool Permutation::part_preserving() const {
    for (const auto& part : dom_->parts)
        for (std::size_t x = part.offset; x < part.offset + part.size; ++x)
            if (img_[x] < part.offset || img_[x] >= part.offset + part.size) return false;
    return true;
}

std::vector<uint32_t> Permutation::moved_points() const {
    std::vector<uint32_t> out;
    for (std::size_t x = 0; x < img_.size(); ++x)
        if (img_[x] != x) out.push_back(uint32_t(x));
    return out;
}

namespace {

int cycle_sign(const std::vector<uint32_t>& img, std::size_t lo, std::size_t hi) {
    std::vector<char> seen(hi - lo, 0);
    int sign = 1;
    for (std::size_t i = lo; i < hi; ++i) {
        if (seen[i - lo]) continue;
        std::size_t len = 0, j = i;
        while (!seen[j - lo]) {
            seen[j - lo] = 1;
            j = img[j];
            if (j < lo || j >= hi) throw std::invalid_argument("sign: part not preserved");
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

}  // namespace

int Permutation::sign() const { return cycle_sign(img_, 0, img_.size()); }

int Permutation::sign_on_part(std::size_t part) const {
    const auto& p = dom_->parts.at(part);
    return cycle_sign(img_, p.offset, p.offset + p.size);
}

namespace {

std::vector<uint32_t> sorted_unique(std::vector<uint32_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// sign of p restricted to the setwise-invariant subset s
int sign_on_set(const Permutation& p, const std::vector<uint32_t>& s) {
    std::map<uint32_t, uint32_t> pos;
    for (std::size_t i = 0; i < s.size(); ++i) pos[s[i]] = uint32_t(i);
    std::vector<char> seen(s.size(), 0);
    int sign = 1;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            auto it = pos.find(p(s[j]));
            if (it == pos.end()) throw std::invalid_argument("sign_on_set: set not preserved");
            j = it->second;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

bool preserves_set(const Permutation& p, const std::vector<uint32_t>& s) {
    for (uint32_t x : s)
        if (!std::binary_search(s.begin(), s.end(), p(x))) return false;
    return true;
}

bool fixes_outside(const Permutation& p, const std::vector<uint32_t>& allowed) {
    for (std::size_t x = 0; x < p.images().size(); ++x) {
        if (p(uint32_t(x)) != x &&
            !std::binary_search(allowed.begin(), allowed.end(), uint32_t(x)))
            return false;
    }
    return true;
}

BigInt factorial(std::size_t n) {
    BigInt f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

GroupSpec GroupSpec::trivial(const Domain& d) {
    GroupSpec g;
    g.kind_ = Kind::Trivial;
    g.dom_ = d;
    return g;
}

GroupSpec GroupSpec::sym(const Domain& d, std::vector<uint32_t> set) {
    GroupSpec g;
    g.kind_ = Kind::Sym;
    g.dom_ = d;
    g.set_ = sorted_unique(std::move(set));
    for (uint32_t x : g.set_)
        if (x >= d.total) throw std::invalid_argument("sym: point out of range");
    return g;
}

GroupSpec GroupSpec::alt(const Domain& d, std::vector<uint32_t> set) {
    GroupSpec g = sym(d, std::move(set));
    g.kind_ = Kind::Alt;
    return g;
}

GroupSpec GroupSpec::sym_part(const Domain& d, std::size_t part) {
    return sym(d, d.part_elements(part));
}

GroupSpec GroupSpec::alt_part(const Domain& d, std::size_t part) {
    return alt(d, d.part_elements(part));
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
    if (factors.empty()) throw std::invalid_argument("product: no factors");
    GroupSpec g;
    g.kind_ = Kind::Product;
    g.dom_ = factors.front().dom_;
    std::vector<uint32_t> all;
    for (const auto& f : factors) {
        if (!(f.dom_ == g.dom_)) throw std::invalid_argument("product: domain mismatch");
        auto s = f.support_points();
        all.insert(all.end(), s.begin(), s.end());
    }
    std::size_t before = all.size();
    if (sorted_unique(all).size() != before)
        throw std::invalid_argument("product: factor supports overlap");
    g.factors_ = std::move(factors);
    return g;
}

GroupSpec GroupSpec::equal_sign(const Domain& d, std::vector<std::vector<uint32_t>> sets) {
    GroupSpec g;
    g.kind_ = Kind::EqualSign;
    g.dom_ = d;
    std::vector<uint32_t> all;
    for (auto& s : sets) {
        s = sorted_unique(std::move(s));
        for (uint32_t x : s)
            if (x >= d.total) throw std::invalid_argument("equal_sign: point out of range");
        all.insert(all.end(), s.begin(), s.end());
    }
    std::size_t before = all.size();
    if (sorted_unique(all).size() != before)
        throw std::invalid_argument("equal_sign: sets overlap");
    g.linked_ = std::move(sets);
    return g;
}

GroupSpec GroupSpec::explicit_elements(const Domain& d, std::vector<Permutation> elems) {
    GroupSpec g;
    g.kind_ = Kind::Explicit;
    g.dom_ = d;
    for (const auto& e : elems)
        if (!(e.domain() == d)) throw std::invalid_argument("explicit: domain mismatch");
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.empty()) throw std::invalid_argument("explicit: empty element list");
    auto member = [&](const Permutation& p) {
        return std::binary_search(elems.begin(), elems.end(), p);
    };
    if (!member(Permutation::identity(d)))
        throw std::invalid_argument("explicit: identity missing");
    // closure/inverse validation; exhaustive when small, sampled when large
    if (elems.size() <= 600) {
        for (const auto& a : elems) {
            if (!member(a.inverse()))
                throw std::invalid_argument("explicit: not closed under inverse");
            for (const auto& b : elems)
                if (!member(a.compose(b)))
                    throw std::invalid_argument("explicit: not closed under composition");
        }
    } else {
        Rng rng(0xC105EDu);
        for (std::size_t t = 0; t < 50000; ++t) {
            const auto& a = elems[rng.below(elems.size())];
            const auto& b = elems[rng.below(elems.size())];
            if (!member(a.compose(b)) || !member(a.inverse()))
                throw std::invalid_argument("explicit: closure spot-check failed");
        }
    }
    g.elems_ = std::move(elems);
    return g;
}

std::vector<uint32_t> GroupSpec::support_points() const {
    switch (kind_) {
        case Kind::Trivial:
            return {};
        case Kind::Sym:
        case Kind::Alt:
            return set_;
        case Kind::Product: {
            std::vector<uint32_t> all;
            for (const auto& f : factors_) {
                auto s = f.support_points();
                all.insert(all.end(), s.begin(), s.end());
            }
            return sorted_unique(std::move(all));
        }
        case Kind::EqualSign: {
            std::vector<uint32_t> all;
            for (const auto& s : linked_) all.insert(all.end(), s.begin(), s.end());
            return sorted_unique(std::move(all));
        }
        case Kind::Explicit: {
            std::vector<uint32_t> all;
            for (const auto& e : elems_) {
                auto m = e.moved_points();
                all.insert(all.end(), m.begin(), m.end());
            }
            return sorted_unique(std::move(all));
        }
    }
    return {};
}

bool GroupSpec::contains(const Permutation& p) const {
    if (!(p.domain() == dom_)) return false;
    switch (kind_) {
        case Kind::Trivial:
            return p.is_identity();
        case Kind::Sym:
            return fixes_outside(p, set_) && preserves_set(p, set_);
        case Kind::Alt:
            return fixes_outside(p, set_) && preserves_set(p, set_) &&
                   (set_.size() < 2 || sign_on_set(p, set_) == 1);
        case Kind::Product: {
            auto all = support_points();
            if (!fixes_outside(p, all)) return false;
            for (const auto& f : factors_) {
                auto s = f.support_points();
                if (!preserves_set(p, s)) return false;
                Permutation r = Permutation::identity(dom_);
                std::vector<uint32_t> img = r.images();
                for (uint32_t x : s) img[x] = p(x);
                if (!f.contains(Permutation::from_images(dom_, img))) return false;
            }
            return true;
        }
        case Kind::EqualSign: {
            auto all = support_points();
            if (!fixes_outside(p, all)) return false;
            int common = 0;
            for (const auto& s : linked_) {
                if (!preserves_set(p, s)) return false;
                int sg = s.size() < 2 ? 1 : sign_on_set(p, s);
                if (common == 0) common = sg;
                else if (sg != common) return false;
            }
            return true;
        }
        case Kind::Explicit:
            return std::binary_search(elems_.begin(), elems_.end(), p);
    }
    return false;
}

BigInt GroupSpec::order() const {
    switch (kind_) {
        case Kind::Trivial:
            return 1;
        case Kind::Sym:
            return factorial(set_.size());
        case Kind::Alt:
            return set_.size() < 2 ? BigInt(1) : factorial(set_.size()) / 2;
        case Kind::Product: {
            BigInt o = 1;
            for (const auto& f : factors_) o *= f.order();
            return o;
        }
        case Kind::EqualSign: {
            bool link = !linked_.empty();
            BigInt o = 1;
            for (const auto& s : linked_) {
                if (s.size() < 2) link = false;
                o *= s.size() < 2 ? BigInt(1) : factorial(s.size()) / 2;
            }
            return link ? o * 2 : o;
        }
        case Kind::Explicit:
            return BigInt(elems_.size());
    }
    return 1;
}

std::vector<Permutation> GroupSpec::generators() const {
    switch (kind_) {
        case Kind::Trivial:
            return {};
        case Kind::Sym: {
            std::vector<Permutation> g;
            for (std::size_t i = 0; i + 1 < set_.size(); ++i)
                g.push_back(Permutation::transposition(dom_, set_[i], set_[i + 1]));
            return g;
        }
        case Kind::Alt: {
            std::vector<Permutation> g;
            for (std::size_t i = 2; i < set_.size(); ++i)
                g.push_back(Permutation::cycle(dom_, {set_[0], set_[1], set_[i]}));
            return g;
        }
        case Kind::Product: {
            std::vector<Permutation> g;
            for (const auto& f : factors_) {
                auto fg = f.generators();
                g.insert(g.end(), fg.begin(), fg.end());
            }
            return g;
        }
        case Kind::EqualSign: {
            std::vector<Permutation> g;
            bool all_big = !linked_.empty();
            for (const auto& s : linked_) {
                if (s.size() < 2) all_big = false;
                for (std::size_t i = 2; i < s.size(); ++i)
                    g.push_back(Permutation::cycle(dom_, {s[0], s[1], s[i]}));
            }
            if (all_big) {
                Permutation link = Permutation::identity(dom_);
                for (const auto& s : linked_)
                    link = link.compose(Permutation::transposition(dom_, s[0], s[1]));
                g.push_back(link);
            }
            return g;
        }
        case Kind::Explicit: {
            std::vector<Permutation> g;
            for (const auto& e : elems_)
                if (!e.is_identity()) g.push_back(e);
            return g;
        }
    }
    return {};
}

std::vector<Permutation> GroupSpec::enumerate(std::size_t budget) const {
    if (kind_ == Kind::Explicit) {
        if (elems_.size() > budget) throw std::runtime_error("enumerate: budget exceeded");
        return elems_;
    }
    if (order() > budget) throw std::runtime_error("enumerate: group order exceeds budget");
    auto gens = generators();
    std::set<Permutation> seen{Permutation::identity(dom_)};
    std::vector<Permutation> frontier{Permutation::identity(dom_)};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& p : frontier)
            for (const auto& gen : gens) {
                Permutation q = gen.compose(p);
                if (seen.insert(q).second) next.push_back(q);
            }
        frontier = std::move(next);
    }
    return std::vector<Permutation>(seen.begin(), seen.end());
}

GroupSpec GroupSpec::pointwise_stabilizer(const std::vector<uint32_t>& fixed) const {
    auto fx = sorted_unique(fixed);
    auto minus = [&](const std::vector<uint32_t>& s) {
        std::vector<uint32_t> out;
        for (uint32_t x : s)
            if (!std::binary_search(fx.begin(), fx.end(), x)) out.push_back(x);
        return out;
    };
    switch (kind_) {
        case Kind::Trivial:
            return *this;
        case Kind::Sym:
            return sym(dom_, minus(set_));
        case Kind::Alt:
            // even permutations fixing the points form Alt of the rest
            return alt(dom_, minus(set_));
        case Kind::Product: {
            std::vector<GroupSpec> fs;
            for (const auto& f : factors_) fs.push_back(f.pointwise_stabilizer(fixed));
            return product(std::move(fs));
        }
        case Kind::EqualSign: {
            std::vector<std::vector<uint32_t>> sets;
            for (const auto& s : linked_) sets.push_back(minus(s));
            return equal_sign(dom_, std::move(sets));
        }
        case Kind::Explicit: {
            std::vector<Permutation> kept;
            for (const auto& e : elems_) {
                bool ok = true;
                for (uint32_t x : fx)
                    if (e(x) != x) { ok = false; break; }
                if (ok) kept.push_back(e);
            }
            return explicit_elements(dom_, std::move(kept));
        }
    }
    return *this;
}

std::vector<Permutation> BijectionCoset::enumerate(std::size_t budget) const {
    auto elems = group.enumerate(budget);
    std::vector<Permutation> out;
    out.reserve(elems.size());
    for (const auto& g : elems) out.push_back(g.compose(base));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<uint32_t> orbit_point(const GroupSpec& g, uint32_t x, std::size_t budget) {
    return orbit(
        g, x, [](const Permutation& p, uint32_t y) { return p(y); }, budget);
}

namespace {

template <typename Fn>
void for_each_subset(std::size_t n, std::size_t size, Fn fn) {
    std::vector<uint32_t> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    if (size > n) return;
    for (;;) {
        if (fn(pick)) return;
        if (size == 0) return;
        std::size_t i = size;
        while (i > 0 && pick[i - 1] == n - (size - (i - 1))) --i;
        if (i == 0) return;
        ++pick[i - 1];
        for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
}

bool is_support(const GroupSpec& ambient, const std::vector<uint32_t>& s,
                const std::function<bool(const Permutation&)>& fixes_x) {
    auto stab = ambient.pointwise_stabilizer(s);
    for (const auto& gen : stab.generators())
        if (!fixes_x(gen)) return false;
    return true;
}

}  // namespace

SupportResult canonical_support(const GroupSpec& ambient,
                                const std::function<bool(const Permutation&)>& fixes_x,
                                std::optional<std::size_t> max_size,
                                uint64_t subset_budget) {
    std::size_t n = ambient.domain().total;
    std::size_t cap = max_size.value_or(n);
    uint64_t tried = 0;
    for (std::size_t size = 0; size <= cap && 2 * size < n; ++size) {
        std::optional<std::vector<uint32_t>> found;
        for_each_subset(n, size, [&](const std::vector<uint32_t>& pick) {
            if (++tried > subset_budget)
                throw std::runtime_error("canonical_support: subset budget exceeded");
            if (is_support(ambient, pick, fixes_x)) {
                found = pick;
                return true;
            }
            return false;
        });
        if (found) return SupportResult{SupportResult::Status::Found, *found};
    }
    return SupportResult{SupportResult::Status::NoSmallSupport, {}};
}

std::vector<std::vector<uint32_t>> min_supports(
    const GroupSpec& ambient, const std::function<bool(const Permutation&)>& fixes_x,
    uint64_t subset_budget) {
    std::size_t n = ambient.domain().total;
    uint64_t tried = 0;
    for (std::size_t size = 0; 2 * size < n; ++size) {
        std::vector<std::vector<uint32_t>> found;
        for_each_subset(n, size, [&](const std::vector<uint32_t>& pick) {
            if (++tried > subset_budget)
                throw std::runtime_error("min_supports: subset budget exceeded");
            if (is_support(ambient, pick, fixes_x)) found.push_back(pick);
            return false;
        });
        if (!found.empty()) return found;
    }
    return {};
}

void IndexedSet::spot_check(const GroupSpec& g, std::size_t samples) const {
    if (x_count == 0) return;
    auto gens = g.generators();
    Permutation id = Permutation::identity(y);
    Rng rng(0x1DE7A5E7u);
    for (std::size_t t = 0; t < samples; ++t) {
        uint32_t x = uint32_t(rng.below(x_count));
        if (act(id, x) != x) throw std::runtime_error("indexed set: identity law fails");
        if (gens.empty()) continue;
        const auto& p = gens[rng.below(gens.size())];
        const auto& q = gens[rng.below(gens.size())];
        if (act(p.compose(q), x) != act(p, act(q, x)))
            throw std::runtime_error("indexed set: composition law fails");
    }
}

}  // namespace cfikit::perm
