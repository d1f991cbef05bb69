#pragma once

// Finite acyclic quivers, their doubled quivers with the star grading
// (deg a = 0 for base arrows, deg a* = 1 for reversed arrows), and raw path
// enumeration on the double quiver.

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppw {

using Word = std::vector<int>; // vertex ids, each letter a simple reflection

struct QuiverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Arrow {
    int id = 0;
    std::string name;
    int src = 0, tgt = 0; // vertex ids
};

struct Quiver {
    std::vector<int> verts;   // vertex ids, in input order
    std::vector<Arrow> arrows;

    int n() const { return (int)verts.size(); }
    int vindex(int vid) const; // throws on unknown id
    bool has_vertex(int vid) const;
    void validate() const;     // distinct ids, no loops, acyclic
    // Vertex ids ordered so no arrow goes from a later to an earlier vertex;
    // ties broken by ascending id, hence deterministic.
    std::vector<int> topological_order() const;
    // #paths from u to v (finite by acyclicity), as a dense matrix over
    // vertex indices: C[i][j] = #paths verts[i] -> verts[j].
    std::vector<std::vector<long>> path_count_matrix() const;
    std::string describe() const;
};

// One arrow of the double quiver; base arrows come first and keep their ids,
// the starred arrow of base arrow k has id |Q1|+k and degree one.
struct DArrow {
    int id = 0;
    std::string name;
    int src = 0, tgt = 0;
    int deg = 0;     // 0 base, 1 starred
    int base = 0;    // id of the underlying base arrow
    bool starred = false;
};

struct DoubleQuiver {
    Quiver base;
    std::vector<DArrow> arrows;

    explicit DoubleQuiver(const Quiver& q);
    DoubleQuiver() = default;
    int n() const { return base.n(); }
    int vindex(int vid) const { return base.vindex(vid); }
    const DArrow& arrow(int id) const { return arrows[id]; }
    std::vector<int> arrows_from(int vid) const;
    std::vector<int> arrows_into(int vid) const;
};

struct Path {
    int src = 0, tgt = 0;   // vertex ids; src==tgt with empty arrows = trivial path
    int deg = 0;            // number of starred arrows
    std::vector<int> arrows;
};

Quiver parse_quiver(const std::string& text);
Quiver support_subquiver(const Quiver& q, const std::set<int>& vs);

// All composable paths src -> tgt with star count <= max_degree, ordered by
// (length, then lexicographic arrow-id sequence).
std::vector<Path> enumerate_paths(const DoubleQuiver& dq, int src, int tgt, int max_degree);

// Reverse the arrows that start at the source vertex v.
Quiver reflect_at_source(const Quiver& q, int v);
bool is_source(const Quiver& q, int v);

} // namespace ppw
