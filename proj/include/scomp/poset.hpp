#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "scomp/simplicial_complex.hpp"

namespace scomp {

/// The poset of intersections of maximal faces, ordered by containment.
/// Grading may fail for arbitrary complexes; that is recorded in the flags,
/// not reported as an error.
struct GradedPoset {
    std::vector<VertexSet> elements;  // sorted by (cardinality, mask value)
    /// covered_by[i] = indices of elements covering element i.
    std::vector<std::vector<int>> covered_by;
    /// True when every element has a single possible chain length from the
    /// bottom (so the rank function is well defined).
    bool ranks_well_defined = false;
    /// True when additionally all maximal chains share one length; then
    /// `rank` holds the poset rank and `ranks` the per-element ranks.
    bool graded = false;
    int rank = -1;
    std::vector<int> ranks;

    std::optional<int> rank_of(VertexSet element) const {
        if (!ranks_well_defined) return std::nullopt;
        for (std::size_t i = 0; i < elements.size(); ++i)
            if (elements[i] == element) return ranks[i];
        return std::nullopt;
    }

    bool contains(VertexSet element) const {
        return std::find(elements.begin(), elements.end(), element) != elements.end();
    }
};

/// All intersections of nonempty subfamilies of the maximal faces of K
/// (equivalently: the closure of the maximal faces under pairwise
/// intersection), with containment order and the grading attempt.
inline GradedPoset intersection_poset(const SimplicialComplex& K) {
    std::vector<VertexSet> elems = K.maximal_faces();
    std::sort(elems.begin(), elems.end());
    // close under pairwise intersection
    bool changed = true;
    while (changed) {
        changed = false;
        const std::size_t n = elems.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                VertexSet inter = elems[i] & elems[j];
                if (!std::binary_search(elems.begin(), elems.end(), inter)) {
                    elems.insert(std::lower_bound(elems.begin(), elems.end(), inter), inter);
                    changed = true;
                }
            }
        }
    }

    GradedPoset P;
    P.elements = std::move(elems);
    std::sort(P.elements.begin(), P.elements.end(), [](VertexSet a, VertexSet b) {
        int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    const std::size_t n = P.elements.size();
    P.covered_by.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !subset_of(P.elements[i], P.elements[j]) || P.elements[i] == P.elements[j])
                continue;
            bool covering = true;
            for (std::size_t k = 0; k < n && covering; ++k) {
                if (k == i || k == j) continue;
                covering = !(subset_of(P.elements[i], P.elements[k]) &&
                             subset_of(P.elements[k], P.elements[j]) &&
                             P.elements[k] != P.elements[i] && P.elements[k] != P.elements[j]);
            }
            if (covering) P.covered_by[i].push_back(static_cast<int>(j));
        }
    }

    // The bottom is the intersection of all maximal faces; it is contained in
    // every element, and elements are sorted, so it sits at index 0.
    std::vector<int> lo(n, -1), hi(n, -1);
    lo[0] = hi[0] = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (lo[i] < 0) continue;  // unreachable from bottom cannot happen with a unique bottom
        for (int j : P.covered_by[i]) {
            std::size_t ju = static_cast<std::size_t>(j);
            int cand = lo[i] + 1;
            lo[ju] = lo[ju] < 0 ? cand : std::min(lo[ju], cand);
            hi[ju] = std::max(hi[ju], hi[i] + 1);
        }
    }

    P.ranks_well_defined = true;
    P.ranks.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (lo[i] != hi[i] || lo[i] < 0) P.ranks_well_defined = false;
        P.ranks[i] = lo[i];
    }
    if (P.ranks_well_defined) {
        P.graded = true;
        int top_rank = -1;
        for (std::size_t i = 0; i < n; ++i) {
            if (!P.covered_by[i].empty()) continue;  // not maximal
            if (top_rank < 0) top_rank = P.ranks[i];
            if (P.ranks[i] != top_rank) P.graded = false;
        }
        if (P.graded) P.rank = top_rank;
    }
    if (!P.graded) {
        P.rank = -1;
        if (!P.ranks_well_defined) P.ranks.clear();
    }
    return P;
}

}  // namespace scomp
