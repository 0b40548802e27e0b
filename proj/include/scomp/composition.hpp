#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "scomp/simplicial_complex.hpp"

namespace scomp {

/// Start offset of each part's vertex block inside the composed complex
/// (blocks are concatenated in part order), plus the total as a final entry.
inline std::vector<int> composition_offsets(const std::vector<SimplicialComplex>& parts) {
    std::vector<int> off(parts.size() + 1, 0);
    for (std::size_t i = 0; i < parts.size(); ++i) off[i + 1] = off[i] + parts[i].vertex_count();
    return off;
}

namespace detail {

inline void check_composition_args(const SimplicialComplex& K,
                                   const std::vector<SimplicialComplex>& parts) {
    if (static_cast<int>(parts.size()) != K.vertex_count())
        throw DomainError("composition arity mismatch: complex has " +
                          std::to_string(K.vertex_count()) + " vertices but " +
                          std::to_string(parts.size()) + " parts were given");
    long long total = 0;
    for (const auto& p : parts) {
        if (p.vertex_count() < 1) throw DomainError("composition parts must have at least one vertex");
        total += p.vertex_count();
    }
    if (total > 64) throw ResourceError("composed complex would exceed the 64-vertex limit", 64);
}

}  // namespace detail

/// Definitional membership test for the composed complex: the blocked set
/// I_1 ⊔ ... ⊔ I_m is a face iff {i : I_i not a face of parts[i]} is a face
/// of K. Slow path kept as the oracle for the maximal-face construction.
inline bool is_composition_face(const SimplicialComplex& K,
                                const std::vector<SimplicialComplex>& parts, VertexSet face) {
    detail::check_composition_args(K, parts);
    const std::vector<int> off = composition_offsets(parts);
    VertexSet outer = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        VertexSet block_face = (face >> off[i]) & full_set(parts[i].vertex_count());
        if (!parts[i].is_face(block_face)) outer |= VertexSet{1} << i;
    }
    return K.is_face(outer);
}

/// Composed complex K(parts[0], ..., parts[m-1]) on the concatenated vertex
/// blocks. Maximal faces are generated from maximal data: a maximal face I of
/// K contributes the full block for every i in I and a maximal part face for
/// every i outside I; the union is then canonicalized to an antichain.
inline SimplicialComplex compose(const SimplicialComplex& K,
                                 const std::vector<SimplicialComplex>& parts) {
    detail::check_composition_args(K, parts);
    const std::vector<int> off = composition_offsets(parts);
    const int m = K.vertex_count();
    const int total = off.back();

    std::vector<VertexSet> gens;
    for (VertexSet outer : K.maximal_faces()) {
        std::vector<int> free_blocks;  // blocks taking a maximal part face
        VertexSet base = 0;
        for (int i = 0; i < m; ++i) {
            if (outer & (VertexSet{1} << i))
                base |= full_set(parts[i].vertex_count()) << off[i];
            else
                free_blocks.push_back(i);
        }
        // cartesian product over maximal faces of the free blocks
        std::function<void(std::size_t, VertexSet)> expand = [&](std::size_t k, VertexSet acc) {
            if (k == free_blocks.size()) {
                gens.push_back(acc);
                return;
            }
            int i = free_blocks[k];
            for (VertexSet mf : parts[i].maximal_faces()) expand(k + 1, acc | (mf << off[i]));
        };
        expand(0, base);
    }
    return SimplicialComplex::from_generators(total, std::move(gens));
}

/// K(l_1, ..., l_m): the composition with simplex boundaries of the given
/// sizes (length 1 uses the one-ghost-vertex complex).
inline SimplicialComplex iterated_wedge(const SimplicialComplex& K, const std::vector<int>& lengths) {
    std::vector<SimplicialComplex> parts;
    parts.reserve(lengths.size());
    for (int l : lengths) {
        if (l < 1) throw DomainError("wedge lengths must be positive");
        parts.push_back(SimplicialComplex::boundary(l));
    }
    return compose(K, parts);
}

/// Blow-up of a single non-ghost vertex v into a block of l vertices placed
/// at v's position: the subcomplex avoiding v joined with the simplex
/// boundary on the block, united with link(v) joined with the full block.
inline SimplicialComplex vertex_blowup(const SimplicialComplex& K, int v, int l) {
    const int m = K.vertex_count();
    if (v < 0 || v >= m) throw DomainError("vertex_blowup: vertex out of range");
    if (l < 1) throw DomainError("vertex_blowup: block length must be positive");
    if (!K.is_face(VertexSet{1} << v)) throw DomainError("vertex_blowup: vertex is a ghost vertex");
    if (m - 1 + l > 64) throw ResourceError("blown-up complex would exceed the 64-vertex limit", 64);

    auto remap = [&](VertexSet s) {
        VertexSet out = 0;
        for (int u : set_to_vertices(s)) out |= VertexSet{1} << (u < v ? u : u + l - 1);
        return out;
    };
    const VertexSet block = full_set(l) << v;

    std::vector<VertexSet> gens;
    const SimplicialComplex block_boundary = SimplicialComplex::boundary(l);
    for (VertexSet mx : K.maximal_faces()) {
        VertexSet rest = remap(mx & ~(VertexSet{1} << v));
        for (VertexSet bf : block_boundary.maximal_faces()) gens.push_back(rest | (bf << v));
        if (mx & (VertexSet{1} << v)) gens.push_back(rest | block);
    }
    return SimplicialComplex::from_generators(m - 1 + l, std::move(gens));
}

/// Link of a face A of the composed complex, built from the link structure:
/// the link of its outer support composed with the per-block links, joined
/// with full simplices on the leftover vertices of blocks whose piece is a
/// non-face. Vertex numbering agrees with link(compose(K, parts), A).
inline SimplicialComplex composed_link(const SimplicialComplex& K,
                                       const std::vector<SimplicialComplex>& parts, VertexSet face) {
    detail::check_composition_args(K, parts);
    const std::vector<int> off = composition_offsets(parts);
    const int m = K.vertex_count();
    const int total = off.back();
    if (!subset_of(face, full_set(total))) throw DomainError("composed_link: face out of range");

    VertexSet outer_support = 0;  // blocks whose piece of the face is a non-face
    std::vector<VertexSet> piece(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        piece[i] = (face >> off[i]) & full_set(parts[i].vertex_count());
        if (!parts[i].is_face(piece[i])) outer_support |= VertexSet{1} << i;
    }
    if (!K.is_face(outer_support))
        throw DomainError("composed_link: argument is not a face of the composition");

    // new index of every kept global vertex (those outside the face)
    std::vector<int> new_index(static_cast<std::size_t>(total), -1);
    int next = 0;
    for (int g = 0; g < total; ++g)
        if (!(face & (VertexSet{1} << g))) new_index[g] = next++;
    auto kept_block = [&](int i) {
        VertexSet s = 0;
        for (int v = 0; v < parts[i].vertex_count(); ++v) {
            int g = off[i] + v;
            if (new_index[g] >= 0) s |= VertexSet{1} << new_index[g];
        }
        return s;
    };

    const ReindexedComplex outer_link = link(K, outer_support);
    std::vector<ReindexedComplex> part_links(static_cast<std::size_t>(m));
    std::vector<int> inner_blocks;  // blocks composed through the outer link
    VertexSet simplex_factor = 0;   // leftover vertices of outer-support blocks
    for (int i = 0; i < m; ++i) {
        if (outer_support & (VertexSet{1} << i)) {
            simplex_factor |= kept_block(i);
        } else {
            part_links[i] = link(parts[i], piece[i]);
            inner_blocks.push_back(i);
        }
    }

    std::vector<VertexSet> gens;
    for (VertexSet lmax : outer_link.complex.maximal_faces()) {
        VertexSet base = simplex_factor;
        std::vector<int> free_blocks;
        for (int i : inner_blocks) {
            int li = outer_link.old_to_new[static_cast<std::size_t>(i)];
            if (lmax & (VertexSet{1} << li))
                base |= kept_block(i);
            else
                free_blocks.push_back(i);
        }
        std::function<void(std::size_t, VertexSet)> expand = [&](std::size_t k, VertexSet acc) {
            if (k == free_blocks.size()) {
                gens.push_back(acc);
                return;
            }
            int i = free_blocks[k];
            const auto& pl = part_links[i];
            for (VertexSet mf : pl.complex.maximal_faces()) {
                VertexSet placed = 0;
                for (int v : set_to_vertices(mf)) {
                    int old_v = pl.new_to_old[static_cast<std::size_t>(v)];
                    placed |= VertexSet{1} << new_index[off[i] + old_v];
                }
                expand(k + 1, acc | placed);
            }
        };
        expand(0, base);
    }
    return SimplicialComplex::from_generators(total - popcount(face), std::move(gens));
}

/// Composition built in two steps through position i: first substitute only
/// parts[i] into K (identities elsewhere), then substitute the remaining
/// parts. Equals compose(K, parts).
inline SimplicialComplex operad_substitute_stepwise(const SimplicialComplex& K,
                                                    const std::vector<SimplicialComplex>& parts,
                                                    int i) {
    detail::check_composition_args(K, parts);
    const int m = K.vertex_count();
    if (i < 0 || i >= m) throw DomainError("operad_substitute_stepwise: index out of range");

    std::vector<SimplicialComplex> first(static_cast<std::size_t>(m), SimplicialComplex::ghost(1));
    first[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)];
    SimplicialComplex step = compose(K, first);

    std::vector<SimplicialComplex> second;
    for (int j = 0; j < m; ++j) {
        if (j == i) {
            for (int v = 0; v < parts[static_cast<std::size_t>(i)].vertex_count(); ++v)
                second.push_back(SimplicialComplex::ghost(1));
        } else {
            second.push_back(parts[static_cast<std::size_t>(j)]);
        }
    }
    return compose(step, second);
}

}  // namespace scomp
