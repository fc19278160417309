#include "gsimrac/layout_path_matching.hpp"

#include "gsimrac/counters.hpp"
#include "gsimrac/errors.hpp"
#include "gsimrac/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace gsimrac {

namespace geo = gsimrac::geom;

namespace {

// occupied x-intervals per layer; touching at one column is allowed
struct layer_state {
    std::map<int, std::vector<std::pair<int, int>>> occ;

    bool fits(int layer, int lo, int hi) const {
        auto it = occ.find(layer);
        if (it == occ.end())
            return true;
        for (auto [l, r] : it->second)
            if (std::max(lo, l) < std::min(hi, r))
                return false;
        return true;
    }
    void occupy(int layer, int lo, int hi) { occ[layer].push_back({lo, hi}); }
};

struct layer_assignment {
    std::map<vertex_id, int> layer;
    int max_layer = 0;
};

std::pair<int, int> span(vertex_id a, vertex_id b) { return {std::min(a, b), std::max(a, b)}; }

// Layer choice per alternating cycle: a cycle strictly right of everything
// drawn so far restarts at the bottom (bumped one up when the vertex just
// left of it sits on the bottom layer and would be shifted into it);
// otherwise it stacks above everything. Inside a cycle: stay on the layer
// while both new edges fit, else climb exactly one layer.
layer_assignment assign_layers_impl(int n, const std::vector<edge>& m) {
    auto cycles = decompose_alternating(build_p_odd(n), m);
    layer_assignment out;
    layer_state ls;
    int right_frontier = 0;

    for (const alternating_cycle& cyc : cycles) {
        const auto& c = cyc.vertices;
        const std::size_t len = c.size();
        const vertex_id lo_v = c[0];
        const vertex_id hi_v = *std::max_element(c.begin(), c.end());

        int y;
        if (lo_v > right_frontier) {
            y = 1;
            auto left = out.layer.find(lo_v - 1);
            if (lo_v > 1 && left != out.layer.end() && left->second == 1)
                y = 2; // the shifted neighbor would land on this cycle's corner
        } else {
            y = out.max_layer + 1;
        }

        // traverse in reverse storage order so the first drawn edge is the
        // matching edge of the cycle's minimum vertex
        std::vector<vertex_id> w;
        w.reserve(len);
        w.push_back(c[0]);
        for (std::size_t i = len - 1; i >= 1; --i)
            w.push_back(c[i]);

        out.layer[w[0]] = y;
        out.layer[w[1]] = y;
        step_counter::bump(2);
        auto [m_lo, m_hi] = span(w[0], w[1]);
        ls.occupy(y, m_lo, m_hi);
        out.max_layer = std::max(out.max_layer, y);

        for (std::size_t k = 1; 2 * k + 1 < len; ++k) {
            const vertex_id pa = w[2 * k - 1], pb = w[2 * k], mb = w[2 * k + 1];
            auto [p_lo, p_hi] = span(pa, pb);
            auto [q_lo, q_hi] = span(pb, mb);
            const bool stay = ls.fits(y, p_lo, p_hi) && ls.fits(y, q_lo, q_hi) &&
                              std::max(p_lo, q_lo) >= std::min(p_hi, q_hi);
            if (stay) {
                ls.occupy(y, p_lo, p_hi);
                ls.occupy(y, q_lo, q_hi);
            } else {
                ++y; // the block above is clear: the odd spine edge rises one layer
                ls.occupy(y, q_lo, q_hi);
            }
            out.layer[pb] = y;
            out.layer[mb] = y;
            step_counter::bump(2);
            out.max_layer = std::max(out.max_layer, y);
        }
        right_frontier = std::max(right_frontier, hi_v);
    }
    return out;
}

edge_role spine_role(int i) { return i % 2 == 1 ? edge_role::path_odd : edge_role::path_even; }

drawing assemble_perfect(int n, const std::vector<edge>& m) {
    layer_assignment layers = assign_layers_impl(n, m);

    drawing d;
    d.mode = geo::coord_mode::grid;
    for (int i = 1; i <= n; ++i) {
        int x = i;
        if (i % 2 == 0 && i != n)
            x += 1; // verticalize the even spine edges
        x = x / 2 + 1;
        d.positions[i] = {static_cast<double>(x), static_cast<double>(layers.layer.at(i))};
        step_counter::bump();
    }
    for (int i = 1; i < n; ++i) {
        edge e{i, i + 1};
        d.edges_a.push_back(e);
        d.annotations[e] = spine_role(i);
        step_counter::bump();
    }
    for (edge e : m) {
        edge norm = make_edge(e.first, e.second);
        d.edges_b.push_back(norm);
        d.annotations[norm] = edge_role::matching;
        step_counter::bump();
    }
    d.metadata["layout"] = "path-matching";
    d.metadata["layers"] = std::to_string(layers.max_layer);
    return d;
}

drawing zigzag_unmatched(int n) {
    drawing d;
    d.mode = geo::coord_mode::grid;
    for (int i = 1; i <= n; ++i) {
        d.positions[i] = {static_cast<double>(i / 2 + 1), i % 2 == 1 ? 1.0 : 2.0};
        step_counter::bump();
    }
    for (int i = 1; i < n; ++i) {
        edge e{i, i + 1};
        d.edges_a.push_back(e);
        d.annotations[e] = spine_role(i);
    }
    d.metadata["layout"] = "path-matching";
    d.metadata["layers"] = n > 1 ? "2" : "1";
    return d;
}

check_profile restored_profile() {
    check_profile p;
    p.planarity = true;
    p.rac = true;
    p.structural = true;
    return p;
}

// ---- partial / odd instances: contract, draw with spacers, restore --------

struct spacer_setup {
    int n2 = 0;                                // vertex count handed to the core
    std::vector<edge> m2;                      // matching handed to the core
    std::map<vertex_id, vertex_id> to_core;    // contracted label -> core label
    std::map<vertex_id, vertex_id> spacer_for; // contracted left endpoint -> spacer core label
    int ghost_first = 0;                       // first ghost label (0 = none)
};

spacer_setup build_spacer_setup(const sim_instance& contracted) {
    const int n1 = contracted.n;
    std::set<edge> m1;
    for (edge e : contracted.edges_b)
        m1.insert(make_edge(e.first, e.second));

    std::set<vertex_id> needs_spacer; // left endpoints of matching edges that sit on the spine
    for (edge e : m1)
        if (e.second == e.first + 1)
            needs_spacer.insert(e.first);

    spacer_setup s;
    int next = 1;
    for (vertex_id i = 1; i <= n1; ++i) {
        s.to_core[i] = next++;
        if (needs_spacer.count(i))
            s.spacer_for[i] = next++;
    }
    s.n2 = next - 1;

    std::vector<vertex_id> loose; // spacers (and ghosts) needing matching partners
    for (auto [left, sp] : s.spacer_for) {
        (void)left;
        loose.push_back(sp);
    }
    std::sort(loose.begin(), loose.end());
    if (!loose.empty()) {
        s.ghost_first = s.n2 + 1;
        while (loose.size() % 2 != 0 ||
               (loose.size() == 2 && loose[1] - loose[0] == 1)) {
            ++s.n2;
            loose.push_back(s.n2);
        }
        const std::size_t h = loose.size() / 2;
        for (std::size_t i = 0; i < h; ++i)
            s.m2.push_back({loose[i], loose[i + h]});
    }
    for (edge e : m1)
        s.m2.push_back({s.to_core.at(e.first), s.to_core.at(e.second)});
    return s;
}

geo::point scale_pt(geo::point p, int s) { return {p.x * s, p.y * s}; }

// interior lattice points of an integer segment, in order from a to b
std::vector<geo::point> interior_lattice(geo::point a, geo::point b) {
    const long long dx = std::llround(b.x - a.x);
    const long long dy = std::llround(b.y - a.y);
    const long long g = std::gcd(std::llabs(dx), std::llabs(dy));
    std::vector<geo::point> out;
    for (long long j = 1; j < g; ++j)
        out.push_back({a.x + static_cast<double>(dx) / g * j,
                       a.y + static_cast<double>(dy) / g * j});
    return out;
}

struct restore_context {
    const drawing& core;              // drawing of the spacer-augmented instance
    const spacer_setup& setup;
    int s = 1;                        // grid scale factor
    std::vector<geo::segment> avoid;  // scaled live segments chain points must not touch
};

// pick `count` lattice points on the scaled segment a-b that avoid all live
// segments except the host itself; empty result means the scale is too small
std::optional<std::vector<geo::point>> pick_chain_points(const restore_context& ctx,
                                                         geo::point a, geo::point b,
                                                         std::size_t count) {
    std::vector<geo::point> picked;
    for (geo::point cand : interior_lattice(a, b)) {
        if (picked.size() == count)
            break;
        bool clear = true;
        for (const geo::segment& seg : ctx.avoid) {
            const bool host_itself = (seg.a == a && seg.b == b) || (seg.a == b && seg.b == a);
            if (host_itself)
                continue;
            if (geo::on_segment(cand, seg, geo::coord_mode::grid)) {
                clear = false;
                break;
            }
        }
        if (clear)
            picked.push_back(cand);
    }
    if (picked.size() < count)
        return std::nullopt;
    return picked;
}

std::optional<drawing> try_restore(const sim_instance& original, const restoration_plan& plan,
                                   const sim_instance& contracted, const spacer_setup& setup,
                                   const drawing& core, int s) {
    drawing d;
    d.mode = geo::coord_mode::grid;

    auto core_pos = [&](vertex_id core_label) {
        return scale_pt(core.positions.at(core_label), s);
    };

    // covered vertices carry over at scaled core positions
    for (auto [orig, lbl1] : plan.old_to_new)
        d.positions[orig] = core_pos(setup.to_core.at(lbl1));

    // live scaled segments: every core-drawn edge not incident to a ghost
    restore_context ctx{core, setup, s, {}};
    auto is_ghost = [&](vertex_id v) { return setup.ghost_first != 0 && v >= setup.ghost_first; };
    for (const auto& edges : {core.edges_a, core.edges_b})
        for (edge e : edges) {
            if (is_ghost(e.first) || is_ghost(e.second))
                continue;
            ctx.avoid.push_back({core_pos(e.first), core_pos(e.second)});
        }

    auto core_role = [&](vertex_id core_left) { return spine_role(core_left); };

    // matching edges: straight, horizontal, original labels
    for (edge e : original.edges_b) {
        edge norm = make_edge(e.first, e.second);
        d.edges_b.push_back(norm);
        d.annotations[norm] = edge_role::matching;
    }

    auto add_spine_edge = [&](vertex_id u, vertex_id v, edge_role role) {
        edge e = make_edge(u, v);
        d.edges_a.push_back(e);
        d.annotations[e] = role;
    };

    // interior runs: subdivide the drawn host segment (or the two legs of its
    // spacer detour) at free lattice points
    std::map<edge, const chain_restoration*> chain_of;
    for (const chain_restoration& cr : plan.interior)
        chain_of[cr.host] = &cr;

    for (int i = 1; i < contracted.n; ++i) {
        const vertex_id left_orig = plan.new_to_old.at(i);
        const vertex_id right_orig = plan.new_to_old.at(i + 1);
        auto it = chain_of.find({left_orig, right_orig});
        const std::vector<vertex_id>* chain =
            it == chain_of.end() ? nullptr : &it->second->chain;
        const std::size_t k = chain ? chain->size() : 0;

        auto sp_it = setup.spacer_for.find(i);
        if (sp_it == setup.spacer_for.end()) {
            const geo::point a = core_pos(setup.to_core.at(i));
            const geo::point b = core_pos(setup.to_core.at(i + 1));
            const edge_role role = core_role(setup.to_core.at(i));
            if (k == 0) {
                add_spine_edge(left_orig, right_orig, role);
                continue;
            }
            auto points = pick_chain_points(ctx, a, b, k);
            if (!points)
                return std::nullopt;
            vertex_id prev = left_orig;
            for (std::size_t t = 0; t < k; ++t) {
                d.positions[(*chain)[t]] = (*points)[t];
                add_spine_edge(prev, (*chain)[t], role);
                prev = (*chain)[t];
                step_counter::bump();
            }
            add_spine_edge(prev, right_orig, role);
        } else {
            // detour around the coincident matching edge: one chain vertex
            // takes the corner, the rest split across the two legs
            const vertex_id sp = sp_it->second;
            const geo::point a = core_pos(setup.to_core.at(i));
            const geo::point joint = core_pos(sp);
            const geo::point b = core_pos(setup.to_core.at(i + 1));
            const edge_role role1 = core_role(setup.to_core.at(i));
            const edge_role role2 = core_role(sp);
            if (k == 0)
                return std::nullopt; // a detour host always hosts a run
            const std::size_t k1 = (k - 1) / 2;
            const std::size_t k2 = k - 1 - k1;
            auto pts1 = pick_chain_points(ctx, a, joint, k1);
            auto pts2 = pick_chain_points(ctx, joint, b, k2);
            if (!pts1 || !pts2)
                return std::nullopt;
            vertex_id prev = left_orig;
            edge_role role = role1;
            for (std::size_t t = 0; t < k; ++t) {
                geo::point at;
                if (t < k1) {
                    at = (*pts1)[t];
                } else if (t == k1) {
                    at = joint;
                } else {
                    at = (*pts2)[t - k1 - 1];
                    role = role2;
                }
                d.positions[(*chain)[t]] = at;
                add_spine_edge(prev, (*chain)[t], role);
                prev = (*chain)[t];
                step_counter::bump();
            }
            add_spine_edge(prev, right_orig, role2);
        }
    }

    // prefix run: staircase into the empty region below-left of the first
    // covered vertex (the core pins it to the bottom-left corner)
    if (plan.prefix) {
        const geo::point a = d.positions.at(plan.prefix->attach);
        vertex_id prev = plan.prefix->attach;
        for (std::size_t j = 1; j <= plan.prefix->chain.size(); ++j) {
            const long long t = static_cast<long long>(j) / 2;
            geo::point at = j % 2 == 1 ? geo::point{a.x - t, a.y - t - 1}
                                       : geo::point{a.x - t, a.y - t};
            const vertex_id v = plan.prefix->chain[j - 1];
            d.positions[v] = at;
            add_spine_edge(prev, v, j % 2 == 1 ? edge_role::path_even : edge_role::plain);
            prev = v;
            step_counter::bump();
        }
    }

    // suffix run: staircase strictly right of everything drawn so far
    if (plan.suffix) {
        const geo::point b = d.positions.at(plan.suffix->attach);
        vertex_id prev = plan.suffix->attach;
        for (std::size_t j = 1; j <= plan.suffix->chain.size(); ++j) {
            const long long t = static_cast<long long>(j) / 2;
            geo::point at = j % 2 == 1 ? geo::point{b.x + t + 1, b.y - t}
                                       : geo::point{b.x + t, b.y - t};
            const vertex_id v = plan.suffix->chain[j - 1];
            d.positions[v] = at;
            add_spine_edge(prev, v, j % 2 == 1 ? edge_role::plain : edge_role::path_even);
            prev = v;
            step_counter::bump();
        }
    }

    d.metadata["layout"] = "path-matching";
    d.metadata["layers"] = core.metadata.count("layers") ? core.metadata.at("layers") : "";
    d.metadata["scale"] = std::to_string(s);

    verification_report rep = verify_drawing(d, restored_profile());
    if (!rep.ok())
        return std::nullopt;
    return d;
}

drawing layout_partial(const sim_instance& inst) {
    auto [contracted, plan] = contract_uncovered(inst);
    spacer_setup setup = build_spacer_setup(contracted);
    drawing core = assemble_perfect(setup.n2, setup.m2);

    int max_layer = 1;
    for (const auto& [v, p] : core.positions)
        max_layer = std::max(max_layer, static_cast<int>(p.y));
    std::size_t longest_chain = 0;
    for (const chain_restoration& cr : plan.interior)
        longest_chain = std::max(longest_chain, cr.chain.size());

    int s = 2 * (max_layer + 1 + static_cast<int>(longest_chain));
    for (int attempt = 0; attempt < 16; ++attempt, s *= 2) {
        auto d = try_restore(inst, plan, contracted, setup, core, s);
        if (d)
            return *d;
    }
    throw std::logic_error("re-insertion of uncovered vertices failed to stabilize");
}

} // namespace

namespace layout_detail {

std::map<vertex_id, int> cycle_layers(int n, const std::vector<edge>& m) {
    return assign_layers_impl(n, m).layer;
}

drawing layout_perfect_even(int n, const std::vector<edge>& m) {
    return assemble_perfect(n, m);
}

} // namespace layout_detail

std::pair<sim_instance, restoration_plan> contract_uncovered(const sim_instance& inst) {
    std::set<vertex_id> covered_set;
    for (edge e : inst.edges_b) {
        covered_set.insert(e.first);
        covered_set.insert(e.second);
    }
    if (covered_set.empty())
        throw std::domain_error("nothing is covered by the matching");

    std::vector<vertex_id> covered(covered_set.begin(), covered_set.end());
    restoration_plan plan;
    for (std::size_t i = 0; i < covered.size(); ++i) {
        plan.old_to_new[covered[i]] = static_cast<vertex_id>(i + 1);
        plan.new_to_old[static_cast<vertex_id>(i + 1)] = covered[i];
    }
    for (std::size_t i = 0; i + 1 < covered.size(); ++i) {
        if (covered[i + 1] - covered[i] > 1) {
            chain_restoration cr;
            cr.host = {covered[i], covered[i + 1]};
            for (vertex_id v = covered[i] + 1; v < covered[i + 1]; ++v)
                cr.chain.push_back(v);
            plan.interior.push_back(std::move(cr));
        }
    }
    if (covered.front() > 1) {
        end_restoration er;
        er.attach = covered.front();
        for (vertex_id v = covered.front() - 1; v >= 1; --v)
            er.chain.push_back(v);
        plan.prefix = std::move(er);
    }
    if (covered.back() < inst.n) {
        end_restoration er;
        er.attach = covered.back();
        for (vertex_id v = covered.back() + 1; v <= inst.n; ++v)
            er.chain.push_back(v);
        plan.suffix = std::move(er);
    }

    sim_instance contracted;
    contracted.n = static_cast<int>(covered.size());
    contracted.kind = instance_kind::path_matching;
    for (int i = 1; i < contracted.n; ++i)
        contracted.edges_a.push_back({i, i + 1});
    for (edge e : inst.edges_b)
        contracted.edges_b.push_back(
            make_edge(plan.old_to_new.at(e.first), plan.old_to_new.at(e.second)));
    return {std::move(contracted), std::move(plan)};
}

drawing layout_path_matching(const sim_instance& inst, const path_layout_options& opts) {
    if (inst.kind != instance_kind::path_matching)
        throw std::invalid_argument("layout expects a path-plus-matching instance");
    if (inst.n < 1)
        throw std::invalid_argument("instance needs at least one vertex");
    auto viol = validate_instance(inst);
    if (!viol.empty())
        throw std::invalid_argument("invalid instance: " + viol.front().code + " — " +
                                    viol.front().message);

    drawing d;
    if (inst.edges_b.empty()) {
        d = zigzag_unmatched(inst.n);
    } else if (static_cast<int>(inst.edges_b.size()) * 2 == inst.n) {
        d = assemble_perfect(inst.n, inst.edges_b);
    } else {
        d = layout_partial(inst);
    }

    if (opts.compact_columns) {
        check_profile profile = restored_profile();
        double min_x = 1e300, max_x = -1e300;
        for (const auto& [v, p] : d.positions) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
        }
        for (double c = min_x + 1; c <= max_x; ++c) {
            drawing trial = d;
            for (auto& [v, p] : trial.positions)
                if (p.x >= c)
                    p.x -= 1;
            if (verify_drawing(trial, profile).ok())
                d = std::move(trial);
        }
    }
    return d;
}

} // namespace gsimrac
