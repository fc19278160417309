#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gsimrac {

using vertex_id = int; // 1-based
using edge = std::pair<vertex_id, vertex_id>; // normalized u < v

edge make_edge(vertex_id u, vertex_id v); // orders endpoints; u == v throws std::invalid_argument

enum class instance_kind { path_matching, cycle_matching, general };

// Two edge sets over a shared vertex set 1..n. For path_matching /
// cycle_matching, edges_a holds the spine (path or cycle through 1..n in
// label order) and edges_b the matching.
struct sim_instance {
    int n = 0;
    std::vector<edge> edges_a;
    std::vector<edge> edges_b;
    instance_kind kind = instance_kind::general;
};

sim_instance make_path_matching_instance(int n, std::vector<edge> matching);
sim_instance make_cycle_matching_instance(int n, std::vector<edge> matching);

struct instance_violation {
    std::string code; // vertex-out-of-range, self-loop, duplicate-edge,
                      // shared-edge, matched-twice, not-path, not-cycle
    std::string message;
};

std::vector<instance_violation> validate_instance(const sim_instance& inst);

// Path edges (v_i, v_{i+1}) with odd i — the spine edges that get drawn as
// slanted segments.
std::vector<edge> build_p_odd(int n);

// One component of the union of the odd spine edges with the matching.
// Stored starting at the component's minimum vertex, second vertex its odd
// spine partner; edges then alternate spine/matching, so the length is even.
struct alternating_cycle {
    std::vector<vertex_id> vertices;
};

// Components of p_odd union m, sorted by minimum vertex. The union must be
// 2-regular on its covered vertices (each one odd-spine edge and one matching
// edge); anything else throws std::domain_error.
std::vector<alternating_cycle> decompose_alternating(const std::vector<edge>& p_odd,
                                                     const std::vector<edge>& m);

// Outerplane graph: outer cycle 1..n plus non-crossing chords.
struct outerplane_embedding {
    int n = 0;
    std::vector<edge> chords;
};

std::vector<instance_violation> validate_embedding(const outerplane_embedding& emb);

struct dual_tree_edge {
    int face_a = 0; // indices into dual_structure::faces
    int face_b = 0;
    edge shared;    // the chord the two faces share
};

// Inner faces plus the dual tree over them. Faces are sorted vertex lists
// (an inner-face boundary follows the outer circular order), faces ordered
// lexicographically.
struct dual_structure {
    std::vector<std::vector<vertex_id>> faces;
    std::vector<dual_tree_edge> tree_edges;
};

// Splits the polygon 1..n along the chords. Invalid embeddings throw
// std::domain_error.
dual_structure compute_faces_and_dual(const outerplane_embedding& emb);

// Seven-vertex fixture: a triangular antiprism (octahedron) rim split into
// two 6-cycles plus a hub vertex joined to every rim vertex. 18 edges, which
// meets the size ceiling 4n-10 with equality for n = 7.
sim_instance fixture_augmented_triangle_antiprism();

} // namespace gsimrac
