#pragma once

#include "gsimrac/drawing.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gsimrac {

struct violation {
    std::string code;              // SAME_SET_CROSS, OVERLAP, VERTEX_ON_EDGE, VERTEX_COINCIDE,
                                   // RAC_VIOLATION, NON_INTEGER, WIDTH_EXCEEDED, HEIGHT_EXCEEDED,
                                   // STRUCTURAL, CONTAINMENT, EXTRA_CROSSING, MISSING_CROSSING
    std::vector<int> subjects;     // vertex/edge-endpoint ids involved, layout-defined order
    geom::point where{};           // representative location, when one exists
    double measured = 0.0;         // offending quantity (angle deviation, distance, coordinate)
    std::string detail;
};

struct grid_bound {
    int width = 0;  // columns of grid points
    int height = 0; // rows of grid points
};

struct check_profile {
    geom::tolerances tol{};                      // incidence 1e-9, angle 1e-6
    bool planarity = true;                       // no same-set crossings/overlaps/vertex hits
    bool rac = true;                             // every cross-set crossing at a right angle
    bool structural = false;                     // role tags: matching horizontal, even spine vertical,
                                                 // crossings only horizontal x vertical
    std::optional<grid_bound> bound;             // integer coordinates within width x height points
    std::optional<vertex_id> slanted_ok;         // vertex whose matching edge may slant (then uncrossed)
    double containment_margin = 1e-12;           // dual checks: face-point clearance from face edges
};

struct verification_report {
    std::vector<violation> violations;           // sorted by (code, subjects)
    std::optional<bool> crossing_graph_bipartite; // informational two-colorability of crossings
    int crossings = 0;                           // proper cross-set crossings found

    bool ok() const { return violations.empty(); }
};

// Brute-force pairwise verification of a two-set drawing. Quadratic on
// purpose: this is the referee, not the construction. Empty drawings throw
// std::invalid_argument.
verification_report verify_drawing(const drawing& d, const check_profile& profile = {});

// Size ceiling for drawings whose crossings are all right angles: m <= 4n-10.
// n < 3 throws std::invalid_argument.
bool check_rac_size(int n, int m);

// Checks a drawn outerplane graph plus dual tree: both layers individually
// crossing-free, every dual edge crosses exactly its shared chord and at a
// right angle, every face point strictly inside its face with the given
// clearance from all face edges.
verification_report verify_dual_drawing(const dual_drawing& dd, const check_profile& profile = {});

} // namespace gsimrac
