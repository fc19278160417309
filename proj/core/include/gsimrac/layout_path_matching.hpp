#pragma once

#include "gsimrac/drawing.hpp"
#include "gsimrac/model.hpp"

#include <map>
#include <optional>
#include <vector>

namespace gsimrac {

struct path_layout_options {
    // post-pass that greedily merges grid columns leftwards, keeping a merge
    // only when the verifier still accepts the drawing
    bool compact_columns = false;
};

// Grid drawing of the path 1..n plus a matching: matching edges horizontal,
// even spine edges vertical, every crossing a right angle. Perfect matchings
// on even n land on a (n/2+1) x (n/2) grid in at most n/2 layers; partial or
// odd instances are drawn on a scaled grid with no size promise. Invalid
// instances throw std::invalid_argument.
drawing layout_path_matching(const sim_instance& inst, const path_layout_options& opts = {});

// One uncovered interior run, to be re-inserted along its host segment.
struct chain_restoration {
    edge host;                      // covered neighbors (original labels, path order)
    std::vector<vertex_id> chain;   // the uncovered run between them, in path order
};

// An uncovered run hanging off one end of the path.
struct end_restoration {
    vertex_id attach;               // the covered vertex the run attaches to
    std::vector<vertex_id> chain;   // original labels, walking away from attach
};

struct restoration_plan {
    std::vector<chain_restoration> interior;
    std::optional<end_restoration> prefix; // run before the first covered vertex
    std::optional<end_restoration> suffix; // run after the last covered vertex
    std::map<vertex_id, vertex_id> old_to_new; // covered original label -> contracted label
    std::map<vertex_id, vertex_id> new_to_old;
};

// Relabels the matching-covered vertices 1..k keeping order, records every
// uncovered run. Pure coverage bookkeeping: works on any instance shape.
// An empty matching leaves nothing to keep and throws std::domain_error.
std::pair<sim_instance, restoration_plan> contract_uncovered(const sim_instance& inst);

namespace layout_detail {

// Layer assignment for a perfect matching on even n: one entry per vertex.
std::map<vertex_id, int> cycle_layers(int n, const std::vector<edge>& m);

// Full grid drawing for a perfect matching on even n (no contraction).
drawing layout_perfect_even(int n, const std::vector<edge>& m);

} // namespace layout_detail

} // namespace gsimrac
