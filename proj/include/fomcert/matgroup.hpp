#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "fomcert/parallel.hpp"
#include "fomcert/projmat.hpp"

namespace fomcert {

struct closure_cap_exceeded : std::runtime_error {
    std::size_t partial_count;
    closure_cap_exceeded(std::size_t n, std::size_t cap)
        : std::runtime_error("group closure exceeded cap " + std::to_string(cap) +
                             " (partial count " + std::to_string(n) + ")"),
          partial_count(n) {}
};

inline std::size_t& default_closure_cap() {
    static std::size_t cap = 5000;
    return cap;
}

template <FieldValue K>
struct MatGroup {
    std::vector<ProjMat<K>> gens;
    std::vector<ProjMat<K>> elements; // sorted, deduplicated, closed
    std::string label;

    std::size_t order() const { return elements.size(); }

    bool contains(const ProjMat<K>& m) const {
        return std::binary_search(elements.begin(), elements.end(), m);
    }

    bool same_elements(const MatGroup& o) const { return elements == o.elements; }

    bool subgroup_of(const MatGroup& o) const {
        for (const auto& m : elements)
            if (!o.contains(m)) return false;
        return true;
    }

    const ProjMat<K>& identity() const {
        for (const auto& m : elements)
            if (m.is_identity()) return m;
        throw std::logic_error("group without identity");
    }
};

// Breadth-first closure of the generator list. The frontier products are
// computed with the parallel map; the merge is a deterministic sorted union,
// so the element list never depends on scheduling.
template <FieldValue K>
MatGroup<K> group_closure(std::vector<ProjMat<K>> gens, std::size_t cap = 0,
                          bool parallel = true) {
    if (cap == 0) cap = default_closure_cap();
    if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
    MatGroup<K> g;
    g.gens = gens;
    std::set<ProjMat<K>> all;
    all.insert(ProjMat<K>::identity(gens[0].dim(), gens[0].at(0, 0)));
    for (const auto& m : gens) all.insert(m);
    std::vector<ProjMat<K>> frontier(all.begin(), all.end());
    while (!frontier.empty()) {
        const std::size_t rows = frontier.size(), cols = gens.size();
        auto products = [&](std::size_t idx) {
            return frontier[idx / cols] * gens[idx % cols];
        };
        std::vector<ProjMat<K>> prods =
            parallel ? par_map<ProjMat<K>>(rows * cols, products)
                     : serial_map<ProjMat<K>>(rows * cols, products);
        std::vector<ProjMat<K>> fresh;
        for (auto& m : prods) {
            if (all.insert(m).second) {
                fresh.push_back(std::move(m));
                if (all.size() > cap) throw closure_cap_exceeded(all.size(), cap);
            }
        }
        std::sort(fresh.begin(), fresh.end());
        fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
        frontier = std::move(fresh);
    }
    g.elements.assign(all.begin(), all.end());
    return g;
}

template <FieldValue K>
MatGroup<K> group_closure_serial(std::vector<ProjMat<K>> gens, std::size_t cap = 0) {
    return group_closure(std::move(gens), cap, false);
}

template <FieldValue K>
MatGroup<K> subgroup_from_elements(const MatGroup<K>& parent, std::vector<ProjMat<K>> elems) {
    MatGroup<K> g;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    g.gens = elems;
    g.elements = std::move(elems);
    (void)parent;
    return g;
}

// M G M^-1 = H as element sets.
template <FieldValue K>
bool conjugates_group(const ProjMat<K>& m, const MatGroup<K>& g, const MatGroup<K>& h) {
    if (g.order() != h.order()) return false;
    ProjMat<K> minv = m.inverse();
    for (const auto& x : g.elements)
        if (!h.contains(m * x * minv)) return false;
    return true;
}

template <FieldValue K>
bool normalizes(const ProjMat<K>& m, const MatGroup<K>& g) {
    return conjugates_group(m, g, g);
}

template <FieldValue K>
std::vector<ProjPoint<K>> orbit(const MatGroup<K>& g, const ProjPoint<K>& p,
                                bool parallel = true) {
    auto apply = [&](std::size_t i) { return g.elements[i].apply(p); };
    std::vector<ProjPoint<K>> pts = parallel
                                        ? par_map<ProjPoint<K>>(g.order(), apply)
                                        : serial_map<ProjPoint<K>>(g.order(), apply);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (g.order() % pts.size() != 0)
        throw std::logic_error("orbit size does not divide group order");
    return pts;
}

template <FieldValue K>
MatGroup<K> stabilizer(const MatGroup<K>& g, const ProjPoint<K>& p) {
    std::vector<ProjMat<K>> fix;
    for (const auto& m : g.elements)
        if (m.apply(p) == p) fix.push_back(m);
    if (fix.size() * orbit(g, p).size() != g.order())
        throw std::logic_error("orbit-stabilizer identity violated");
    return subgroup_from_elements(g, std::move(fix));
}

// Setwise stabilizer of a finite point set.
template <FieldValue K>
MatGroup<K> stabilizer_setwise(const MatGroup<K>& g, std::vector<ProjPoint<K>> pts) {
    std::sort(pts.begin(), pts.end());
    std::vector<ProjMat<K>> fix;
    for (const auto& m : g.elements) {
        bool ok = true;
        for (const auto& p : pts)
            if (!std::binary_search(pts.begin(), pts.end(), m.apply(p))) {
                ok = false;
                break;
            }
        if (ok) fix.push_back(m);
    }
    return subgroup_from_elements(g, std::move(fix));
}

// order + element-order multiset + commutativity; enough to tell apart every
// group arising from the catalogs here.
struct GroupFingerprint {
    std::size_t order = 0;
    std::map<unsigned long, unsigned> order_counts;
    bool abelian = true;
    bool cyclic = false;

    std::string classify() const;
};

template <FieldValue K>
GroupFingerprint fingerprint(const MatGroup<K>& g) {
    GroupFingerprint f;
    f.order = g.order();
    for (const auto& m : g.elements) ++f.order_counts[m.order()];
    for (std::size_t i = 0; i < g.elements.size() && f.abelian; ++i)
        for (std::size_t j = i + 1; j < g.elements.size(); ++j)
            if (!(g.elements[i] * g.elements[j] == g.elements[j] * g.elements[i])) {
                f.abelian = false;
                break;
            }
    f.cyclic = f.order_counts.count(f.order) > 0;
    return f;
}

inline std::string GroupFingerprint::classify() const {
    if (cyclic) return "C_" + std::to_string(order);
    auto count = [&](unsigned long k) {
        auto it = order_counts.find(k);
        return it == order_counts.end() ? 0u : it->second;
    };
    if (order == 12 && count(2) == 3 && count(3) == 8) return "A_4";
    if (order == 24 && count(2) == 9 && count(3) == 8 && count(4) == 6) return "S_4";
    if (order == 60 && count(2) == 15 && count(3) == 20 && count(5) == 24) return "A_5";
    if (order % 2 == 0) {
        unsigned long half = order / 2;
        // dihedral: a cyclic half plus `half` reflections
        unsigned refl = count(2);
        bool has_rotation = half < 2 || order_counts.count(half) > 0;
        if (has_rotation && refl >= half) return "D_" + std::to_string(order);
    }
    return "order_" + std::to_string(order);
}

} // namespace fomcert
