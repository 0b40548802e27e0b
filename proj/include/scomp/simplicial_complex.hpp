#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "scomp/bits.hpp"
#include "scomp/errors.hpp"

namespace scomp {

/// Finite abstract simplicial complex on vertices {0..m-1}, stored in
/// canonical form as the antichain of maximal faces. The empty face is always
/// a face; vertices appearing in no face are ghost vertices. Values are
/// immutable after construction and safe to share across threads.
///
/// Faces are 64-bit masks, so the hard vertex limit is 64.
class SimplicialComplex {
  public:
    /// The complex {∅} on zero vertices.
    SimplicialComplex() : m_(0), maximal_{0} {}

    /// Downward closure of `generators` (plus the empty face) on m vertices.
    /// Vertices of {0..m-1} missing from all generators are ghosts.
    static SimplicialComplex from_generators(int m, std::vector<VertexSet> generators) {
        check_vertex_count(m);
        for (VertexSet g : generators)
            if (!subset_of(g, full_set(m)))
                throw InputError("generator mentions a vertex beyond the declared vertex count " +
                                 std::to_string(m));
        return SimplicialComplex(m, std::move(generators));
    }

    /// The full simplex on m >= 1 vertices.
    static SimplicialComplex simplex(int m) {
        check_positive(m);
        return SimplicialComplex(m, {full_set(m)});
    }

    /// Boundary of the simplex on m >= 1 vertices: all proper subsets of the
    /// vertex set. For m = 1 this is the one-ghost-vertex complex.
    static SimplicialComplex boundary(int m) {
        check_positive(m);
        if (m == 1) return ghost(1);
        std::vector<VertexSet> gens;
        for (int v = 0; v < m; ++v) gens.push_back(full_set(m) & ~(VertexSet{1} << v));
        return SimplicialComplex(m, std::move(gens));
    }

    /// m ghost vertices, no nonempty faces.
    static SimplicialComplex ghost(int m) {
        check_positive(m);
        return SimplicialComplex(m, {});
    }

    static SimplicialComplex point() { return simplex(1); }

    int vertex_count() const { return m_; }

    /// Canonical antichain of maximal faces, sorted ascending as masks.
    /// Never empty: it is {∅} when the complex has no nonempty face.
    const std::vector<VertexSet>& maximal_faces() const { return maximal_; }

    bool is_face(VertexSet f) const {
        for (VertexSet mx : maximal_)
            if (subset_of(f, mx)) return true;
        return false;
    }

    /// dim K = max face cardinality - 1; -1 when only the empty face exists.
    int dim() const {
        int best = 0;
        for (VertexSet mx : maximal_) best = std::max(best, popcount(mx));
        return best - 1;
    }

    /// Union of all faces; its complement in {0..m-1} is the ghost set.
    VertexSet vertex_support() const {
        VertexSet s = 0;
        for (VertexSet mx : maximal_) s |= mx;
        return s;
    }

    VertexSet ghost_vertices() const { return full_set(m_) & ~vertex_support(); }

    /// All faces, each listed once, sorted by (cardinality, mask value).
    /// Enumerates subsets of maximal faces; exponential in the largest face.
    std::vector<VertexSet> all_faces() const {
        std::vector<VertexSet> out;
        for (std::size_t k = 0; k < maximal_.size(); ++k) {
            for_each_subset(maximal_[k], [&](VertexSet f) {
                for (std::size_t j = 0; j < k; ++j)
                    if (subset_of(f, maximal_[j])) return;
                out.push_back(f);
            });
        }
        std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
            int pa = popcount(a), pb = popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        return out;
    }

    /// f_i = number of faces with i vertices; f_0 = 1. Length dim()+2.
    std::vector<long long> f_vector() const {
        std::vector<long long> f(static_cast<std::size_t>(dim()) + 2, 0);
        for (std::size_t k = 0; k < maximal_.size(); ++k) {
            for_each_subset(maximal_[k], [&](VertexSet face) {
                for (std::size_t j = 0; j < k; ++j)
                    if (subset_of(face, maximal_[j])) return;
                f[static_cast<std::size_t>(popcount(face))] += 1;
            });
        }
        return f;
    }

    long long face_count() const {
        long long n = 0;
        for (long long fi : f_vector()) n += fi;
        return n;
    }

    /// Canonical-form equality, i.e. equality of face families on the same
    /// vertex count.
    bool operator==(const SimplicialComplex&) const = default;

  private:
    SimplicialComplex(int m, std::vector<VertexSet> generators) : m_(m), maximal_(std::move(generators)) {
        canonicalize();
    }

    void canonicalize() {
        std::sort(maximal_.begin(), maximal_.end());
        maximal_.erase(std::unique(maximal_.begin(), maximal_.end()), maximal_.end());
        std::vector<VertexSet> keep;
        for (std::size_t i = 0; i < maximal_.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = 0; j < maximal_.size() && !dominated; ++j)
                dominated = i != j && subset_of(maximal_[i], maximal_[j]);
            if (!dominated) keep.push_back(maximal_[i]);
        }
        maximal_ = std::move(keep);
        if (maximal_.empty()) maximal_.push_back(0);
    }

    static void check_vertex_count(int m) {
        if (m < 0) throw InputError("vertex count must be nonnegative");
        if (m > 64) throw ResourceError("vertex count " + std::to_string(m) + " exceeds the 64-vertex representation limit", 64);
    }

    static void check_positive(int m) {
        if (m < 1) throw InputError("vertex count must be positive");
        check_vertex_count(m);
    }

    int m_;
    std::vector<VertexSet> maximal_;
};

/// A complex produced on a subset of another complex's vertices, re-indexed
/// contiguously, together with the index translation tables.
struct ReindexedComplex {
    SimplicialComplex complex;
    std::vector<int> old_to_new;  // size = old vertex count, -1 for removed vertices
    std::vector<int> new_to_old;  // size = new vertex count
};

namespace detail {

inline ReindexedComplex reindex_onto(const SimplicialComplex& K, VertexSet kept,
                                     std::vector<VertexSet> generators) {
    const int m = K.vertex_count();
    ReindexedComplex out;
    out.old_to_new.assign(static_cast<std::size_t>(m), -1);
    for (int v = 0; v < m; ++v) {
        if (kept & (VertexSet{1} << v)) {
            out.old_to_new[static_cast<std::size_t>(v)] = static_cast<int>(out.new_to_old.size());
            out.new_to_old.push_back(v);
        }
    }
    std::vector<VertexSet> compressed;
    compressed.reserve(generators.size());
    for (VertexSet g : generators) {
        VertexSet c = 0;
        for (int v : set_to_vertices(g)) c |= VertexSet{1} << out.old_to_new[static_cast<std::size_t>(v)];
        compressed.push_back(c);
    }
    out.complex = SimplicialComplex::from_generators(static_cast<int>(out.new_to_old.size()),
                                                     std::move(compressed));
    return out;
}

}  // namespace detail

/// link_K I: faces J on {0..m-1}\I with J ⊔ I ∈ K, re-indexed contiguously.
/// A link may have ghost vertices even if K does not.
inline ReindexedComplex link(const SimplicialComplex& K, VertexSet face) {
    if (!K.is_face(face)) throw DomainError("link: argument {" + vertex_list_string(face) + "} is not a face");
    std::vector<VertexSet> gens;
    for (VertexSet mx : K.maximal_faces())
        if (subset_of(face, mx)) gens.push_back(mx & ~face);
    return detail::reindex_onto(K, full_set(K.vertex_count()) & ~face, std::move(gens));
}

/// Full subcomplex K_A: faces of K contained in A, re-indexed onto A.
inline ReindexedComplex full_subcomplex(const SimplicialComplex& K, VertexSet vertices) {
    if (!subset_of(vertices, full_set(K.vertex_count())))
        throw InputError("full_subcomplex: vertex set out of range");
    std::vector<VertexSet> gens;
    for (VertexSet mx : K.maximal_faces()) gens.push_back(mx & vertices);
    return detail::reindex_onto(K, vertices, std::move(gens));
}

/// Drops ghost vertices (re-indexing the rest); the face family is unchanged.
inline ReindexedComplex strip_ghosts(const SimplicialComplex& K) {
    return full_subcomplex(K, K.vertex_support());
}

/// Join K * L on the disjoint union of vertex sets, K's block first.
inline SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L) {
    const int m = K.vertex_count() + L.vertex_count();
    if (m > 64) throw ResourceError("join exceeds the 64-vertex representation limit", 64);
    std::vector<VertexSet> gens;
    for (VertexSet a : K.maximal_faces())
        for (VertexSet b : L.maximal_faces()) gens.push_back(a | (b << K.vertex_count()));
    return SimplicialComplex::from_generators(m, std::move(gens));
}

}  // namespace scomp
