#pragma once

#include "gsimrac/geom.hpp"
#include "gsimrac/model.hpp"

#include <map>
#include <string>
#include <vector>

namespace gsimrac {

// How the layout drew an edge; the structural checks key off these tags.
//   matching  — second-set edge, drawn horizontal (one may end up slanted)
//   path_odd  — spine edge drawn as a slanted segment
//   path_even — spine edge drawn vertical
//   plain     — no structural promise
enum class edge_role { matching, path_odd, path_even, plain };

// A polyline an edge was routed along when a single segment was impossible
// (detours around a coincident matching edge). Construction aid only; the
// drawn edges stay straight segments between consecutive route points.
struct aux_route {
    std::vector<geom::point> points;           // size k >= 3, endpoints = edge endpoints
    std::vector<edge_role> piece_roles;        // size k-1, one per straight piece
};

struct drawing {
    geom::coord_mode mode = geom::coord_mode::grid;
    std::map<vertex_id, geom::point> positions;
    std::vector<edge> edges_a;
    std::vector<edge> edges_b;
    std::map<edge, edge_role> annotations;
    std::map<edge, aux_route> aux_routes;
    std::map<std::string, std::string> metadata;
};

// Drawing of an outerplane graph together with its dual tree: one point per
// inner face, dual edges run between face points of adjacent faces.
struct dual_drawing {
    std::map<vertex_id, geom::point> primal_positions;
    std::vector<geom::point> face_points; // indexed like dual.faces
    outerplane_embedding embedding;
    dual_structure dual;
};

} // namespace gsimrac
