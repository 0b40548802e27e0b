#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace scomp {

/// A subset of vertices {0..63}, one bit per vertex.
using VertexSet = std::uint64_t;

inline int popcount(VertexSet s) { return std::popcount(s); }

/// Bitmask of the full vertex set {0..m-1}.
inline VertexSet full_set(int m) {
    return m >= 64 ? ~VertexSet{0} : (VertexSet{1} << m) - 1;
}

inline bool subset_of(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

inline std::vector<int> set_to_vertices(VertexSet s) {
    std::vector<int> out;
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

inline VertexSet vertices_to_set(const std::vector<int>& verts) {
    VertexSet s = 0;
    for (int v : verts) s |= VertexSet{1} << v;
    return s;
}

/// Calls f on every subset of `mask`, including 0 and mask itself.
/// Enumeration order is decreasing as unsigned integers.
template <class F>
inline void for_each_subset(VertexSet mask, F&& f) {
    VertexSet s = mask;
    while (true) {
        f(s);
        if (s == 0) break;
        s = (s - 1) & mask;
    }
}

/// Renders a vertex set as a 1-based comma-separated list ("1,3,4"; "" for the
/// empty set).
inline std::string vertex_list_string(VertexSet s) {
    std::string out;
    for (int v : set_to_vertices(s)) {
        if (!out.empty()) out += ',';
        out += std::to_string(v + 1);
    }
    return out;
}

}  // namespace scomp
