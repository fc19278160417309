#pragma once

#include "gsimrac/drawing.hpp"
#include "gsimrac/model.hpp"

#include <vector>

namespace gsimrac {

// Grid drawing of the cycle 1..n plus a matching. Construction: relabel so a
// matched vertex leads, drop the closing edge, draw the remaining path, then
// pull the first vertex downward and the last vertex rightward until the
// re-inserted closing edge fits; the first vertex's matching edge is the one
// edge allowed to leave the horizontal, and it stays crossing-free. Perfect
// matchings on even n stay within an (n+2) x (n+2) grid. Invalid instances
// throw std::invalid_argument; a failed corner search throws std::logic_error.
drawing layout_cycle_matching(const sim_instance& inst);

// Draws a graph that decomposes into a Hamiltonian spine (path, or cycle when
// `closed`) plus a matching: relabels along the spine order, delegates to the
// spine layout, and maps the result back to the caller's vertex ids.
// `spine_order` lists the n vertices along the spine; `matching` uses the
// caller's ids. Bad decompositions throw std::invalid_argument.
drawing rac_layout_from_decomposition(int n, const std::vector<vertex_id>& spine_order,
                                      bool closed, const std::vector<edge>& matching);

} // namespace gsimrac
