#include "gsimrac/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace gsimrac {

namespace geo = gsimrac::geom;

namespace {

struct piece {
    int set = 0;           // 0 = edges_a, 1 = edges_b
    int edge_index = 0;    // index into the flattened edge list (for the crossing graph)
    edge parent{};
    geo::segment seg{};
    edge_role role = edge_role::plain;
};

bool nearly(double a, double b, double tol) { return std::abs(a - b) <= tol; }

bool is_horizontal(const geo::segment& s, geo::coord_mode mode, double tol) {
    return mode == geo::coord_mode::grid ? s.a.y == s.b.y : nearly(s.a.y, s.b.y, tol);
}

bool is_vertical(const geo::segment& s, geo::coord_mode mode, double tol) {
    return mode == geo::coord_mode::grid ? s.a.x == s.b.x : nearly(s.a.x, s.b.x, tol);
}

double angle_deviation(geo::point u, geo::point v) {
    const double lu = geo::norm(u), lv = geo::norm(v);
    const double c = std::clamp(std::abs(geo::dot(u, v)) / (lu * lv), 0.0, 1.0);
    return std::asin(c);
}

} // namespace

bool check_rac_size(int n, int m) {
    if (n < 3)
        throw std::invalid_argument("size ceiling is defined for n >= 3");
    return m <= 4 * n - 10;
}

verification_report verify_drawing(const drawing& d, const check_profile& profile) {
    if (d.positions.empty())
        throw std::invalid_argument("cannot verify an empty drawing");
    for (const auto& edges : {d.edges_a, d.edges_b})
        for (edge e : edges)
            if (!d.positions.count(e.first) || !d.positions.count(e.second))
                throw std::invalid_argument("drawing references vertex " +
                                            std::to_string(d.positions.count(e.first) ? e.second
                                                                                      : e.first) +
                                            " without a position");

    verification_report rep;
    auto add = [&](std::string code, std::vector<int> subjects, geo::point where,
                   double measured, std::string detail) {
        rep.violations.push_back(
            {std::move(code), std::move(subjects), where, measured, std::move(detail)});
    };

    // grid drawings must sit on integer coordinates; if they do not, report it
    // and fall back to tolerance-based predicates for the remaining checks
    geo::coord_mode mode = d.mode;
    if (d.mode == geo::coord_mode::grid) {
        bool all_integral = true;
        auto integral = [](double v) { return std::nearbyint(v) == v; };
        for (const auto& [v, p] : d.positions)
            if (!integral(p.x) || !integral(p.y)) {
                add("NON_INTEGER", {v}, p, p.x, "vertex off the integer grid");
                all_integral = false;
            }
        for (const auto& [e, route] : d.aux_routes)
            for (const geo::point& p : route.points)
                if (!integral(p.x) || !integral(p.y)) {
                    add("NON_INTEGER", {e.first, e.second}, p, p.x,
                        "route point off the integer grid");
                    all_integral = false;
                }
        if (!all_integral)
            mode = geo::coord_mode::real;
    }
    const geo::tolerances& tol = profile.tol;

    // flatten both edge sets into drawn pieces (routes contribute one piece per leg)
    std::vector<piece> pieces;
    std::vector<std::pair<int, edge>> flat_edges; // (set, edge), indexed by edge_index
    auto role_of = [&](edge e, int set) {
        auto it = d.annotations.find(e);
        if (it != d.annotations.end())
            return it->second;
        return set == 1 ? edge_role::matching : edge_role::plain;
    };
    auto flatten = [&](const std::vector<edge>& edges, int set) {
        for (edge e : edges) {
            const int idx = static_cast<int>(flat_edges.size());
            flat_edges.push_back({set, e});
            auto rit = d.aux_routes.find(e);
            if (rit != d.aux_routes.end()) {
                const aux_route& r = rit->second;
                if (r.points.size() < 3 || r.piece_roles.size() + 1 != r.points.size())
                    throw std::invalid_argument("malformed route on edge (" +
                                                std::to_string(e.first) + "," +
                                                std::to_string(e.second) + ")");
                for (std::size_t i = 0; i + 1 < r.points.size(); ++i)
                    pieces.push_back({set, idx, e, {r.points[i], r.points[i + 1]}, r.piece_roles[i]});
            } else {
                pieces.push_back({set, idx, e,
                                  {d.positions.at(e.first), d.positions.at(e.second)},
                                  role_of(e, set)});
            }
        }
    };
    flatten(d.edges_a, 0);
    flatten(d.edges_b, 1);

    // vertex/vertex coincidences
    {
        std::map<std::pair<double, double>, std::vector<vertex_id>> at;
        for (const auto& [v, p] : d.positions)
            at[{p.x, p.y}].push_back(v);
        for (auto& [xy, vs] : at) {
            if (vs.size() > 1)
                add("VERTEX_COINCIDE", std::vector<int>(vs.begin(), vs.end()),
                    {xy.first, xy.second}, 0.0, "vertices share a position");
        }
        if (mode == geo::coord_mode::real) {
            // exact-key grouping misses near-coincidence; sweep pairs
            std::vector<std::pair<vertex_id, geo::point>> vs(d.positions.begin(), d.positions.end());
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j) {
                    const double dd = geo::dist(vs[i].second, vs[j].second);
                    if (dd > 0.0 && dd <= tol.incidence)
                        add("VERTEX_COINCIDE", {vs[i].first, vs[j].first}, vs[i].second, dd,
                            "vertices closer than the incidence tolerance");
                }
        }
    }

    // vertices in the interior of drawn pieces, and on interior route joints
    for (const auto& [v, p] : d.positions) {
        for (const piece& pc : pieces) {
            const bool at_a = mode == geo::coord_mode::grid ? p == pc.seg.a
                                                            : geo::dist(p, pc.seg.a) <= tol.incidence;
            const bool at_b = mode == geo::coord_mode::grid ? p == pc.seg.b
                                                            : geo::dist(p, pc.seg.b) <= tol.incidence;
            if (at_a || at_b) {
                // sitting on a route joint that is not this vertex's own edge endpoint
                const bool own_endpoint = pc.parent.first == v || pc.parent.second == v;
                const bool joint = d.aux_routes.count(pc.parent) &&
                                   !(p == d.positions.at(pc.parent.first)) &&
                                   !(p == d.positions.at(pc.parent.second));
                if (!own_endpoint && joint)
                    add("VERTEX_ON_EDGE", {v, pc.parent.first, pc.parent.second}, p, 0.0,
                        "vertex sits on a route joint");
                continue;
            }
            if (geo::on_segment(p, pc.seg, mode, tol))
                add("VERTEX_ON_EDGE", {v, pc.parent.first, pc.parent.second}, p,
                    geo::point_segment_distance(p, pc.seg), "vertex inside an edge");
        }
    }

    // pairwise piece checks: same-set planarity, overlaps, cross-set angles
    std::vector<std::pair<int, int>> crossing_pairs; // edge_index pairs
    std::map<const piece*, int> piece_cross_count;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        for (std::size_t j = i + 1; j < pieces.size(); ++j) {
            const piece& p1 = pieces[i];
            const piece& p2 = pieces[j];
            const bool same_parent = p1.edge_index == p2.edge_index;
            if (same_parent)
                continue; // legs of one route share joints by construction
            std::vector<int> subj{p1.parent.first, p1.parent.second,
                                  p2.parent.first, p2.parent.second};
            if (geo::overlaps(p1.seg, p2.seg, mode, tol)) {
                add("OVERLAP", subj, p1.seg.a, 0.0, "edges overlap in more than a point");
                continue;
            }
            auto hit = geo::proper_crossing(p1.seg, p2.seg, mode, tol);
            if (!hit)
                continue;
            if (p1.set == p2.set) {
                add("SAME_SET_CROSS", subj, *hit, 0.0,
                    p1.set == 0 ? "first-set edges cross" : "second-set edges cross");
                continue;
            }
            ++rep.crossings;
            crossing_pairs.push_back({p1.edge_index, p2.edge_index});
            ++piece_cross_count[&p1];
            ++piece_cross_count[&p2];
            const geo::point u = p1.seg.b - p1.seg.a;
            const geo::point v = p2.seg.b - p2.seg.a;
            if (profile.rac && !geo::is_right_angle(u, v, mode, tol))
                add("RAC_VIOLATION", subj, *hit, angle_deviation(u, v),
                    "crossing misses a right angle");
            if (profile.structural) {
                const bool hv = is_horizontal(p1.seg, mode, tol.incidence) &&
                                is_vertical(p2.seg, mode, tol.incidence);
                const bool vh = is_vertical(p1.seg, mode, tol.incidence) &&
                                is_horizontal(p2.seg, mode, tol.incidence);
                if (!hv && !vh)
                    add("STRUCTURAL", subj, *hit, 0.0,
                        "crossing is not horizontal-times-vertical");
            }
        }
    }
    if (!profile.planarity) {
        // planarity checks were requested off: drop what the loop collected
        std::erase_if(rep.violations, [](const violation& v) {
            return v.code == "SAME_SET_CROSS" || v.code == "OVERLAP" ||
                   v.code == "VERTEX_ON_EDGE" || v.code == "VERTEX_COINCIDE";
        });
    }

    // role promises: matching pieces horizontal (one sanctioned slant must stay
    // uncrossed), even-spine pieces vertical
    if (profile.structural) {
        for (const piece& pc : pieces) {
            std::vector<int> subj{pc.parent.first, pc.parent.second};
            if (pc.role == edge_role::matching && !is_horizontal(pc.seg, mode, tol.incidence)) {
                const bool sanctioned = profile.slanted_ok &&
                                        (pc.parent.first == *profile.slanted_ok ||
                                         pc.parent.second == *profile.slanted_ok);
                if (!sanctioned)
                    add("STRUCTURAL", subj, pc.seg.a, pc.seg.b.y - pc.seg.a.y,
                        "matching edge is not horizontal");
                else if (piece_cross_count[&pc] > 0)
                    add("STRUCTURAL", subj, pc.seg.a,
                        static_cast<double>(piece_cross_count[&pc]),
                        "slanted matching edge is crossed");
            }
            if (pc.role == edge_role::path_even && !is_vertical(pc.seg, mode, tol.incidence))
                add("STRUCTURAL", subj, pc.seg.a, pc.seg.b.x - pc.seg.a.x,
                    "even spine edge is not vertical");
        }
    }

    // grid bound: integer coordinates within width x height grid points
    if (profile.bound) {
        double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
        auto stretch = [&](geo::point p) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        };
        for (const auto& [v, p] : d.positions)
            stretch(p);
        for (const auto& [e, route] : d.aux_routes)
            for (const geo::point& p : route.points)
                stretch(p);
        if (max_x - min_x > profile.bound->width - 1)
            add("WIDTH_EXCEEDED", {}, {max_x, 0.0}, max_x - min_x + 1,
                "drawing needs more columns than the grid allows");
        if (max_y - min_y > profile.bound->height - 1)
            add("HEIGHT_EXCEEDED", {}, {0.0, max_y}, max_y - min_y + 1,
                "drawing needs more rows than the grid allows");
    }

    // informational: two-colorability of the crossing graph (edges as nodes,
    // crossing pairs as adjacencies)
    if (!crossing_pairs.empty()) {
        std::map<int, std::vector<int>> adj;
        for (auto [a, b] : crossing_pairs) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::map<int, int> color;
        bool bip = true;
        for (const auto& [start, nbrs] : adj) {
            (void)nbrs;
            if (color.count(start))
                continue;
            std::queue<int> q;
            q.push(start);
            color[start] = 0;
            while (!q.empty() && bip) {
                int cur = q.front();
                q.pop();
                for (int nxt : adj[cur]) {
                    if (!color.count(nxt)) {
                        color[nxt] = 1 - color[cur];
                        q.push(nxt);
                    } else if (color[nxt] == color[cur]) {
                        bip = false;
                        break;
                    }
                }
            }
        }
        rep.crossing_graph_bipartite = bip;
    } else {
        rep.crossing_graph_bipartite = true;
    }

    std::sort(rep.violations.begin(), rep.violations.end(),
              [](const violation& a, const violation& b) {
                  return std::tie(a.code, a.subjects, a.detail) <
                         std::tie(b.code, b.subjects, b.detail);
              });
    return rep;
}

verification_report verify_dual_drawing(const dual_drawing& dd, const check_profile& profile) {
    if (dd.primal_positions.empty())
        throw std::invalid_argument("cannot verify an empty drawing");
    if (dd.face_points.size() != dd.dual.faces.size())
        throw std::invalid_argument("face point count does not match face count");

    const geo::tolerances& tol = profile.tol;
    const geo::coord_mode mode = geo::coord_mode::real;
    verification_report rep;
    auto add = [&](std::string code, std::vector<int> subjects, geo::point where,
                   double measured, std::string detail) {
        rep.violations.push_back(
            {std::move(code), std::move(subjects), where, measured, std::move(detail)});
    };

    std::vector<edge> primal_edges;
    for (int i = 1; i < dd.embedding.n; ++i)
        primal_edges.push_back({i, i + 1});
    primal_edges.push_back({1, dd.embedding.n});
    for (edge c : dd.embedding.chords)
        primal_edges.push_back(c.first < c.second ? c : edge{c.second, c.first});

    auto pos = [&](vertex_id v) -> geo::point {
        auto it = dd.primal_positions.find(v);
        if (it == dd.primal_positions.end())
            throw std::invalid_argument("missing position for vertex " + std::to_string(v));
        return it->second;
    };
    std::vector<geo::segment> primal_segs;
    for (edge e : primal_edges)
        primal_segs.push_back({pos(e.first), pos(e.second)});

    // primal layer planarity
    for (std::size_t i = 0; i < primal_segs.size(); ++i)
        for (std::size_t j = i + 1; j < primal_segs.size(); ++j) {
            std::vector<int> subj{primal_edges[i].first, primal_edges[i].second,
                                  primal_edges[j].first, primal_edges[j].second};
            if (geo::overlaps(primal_segs[i], primal_segs[j], mode, tol))
                add("OVERLAP", subj, primal_segs[i].a, 0.0, "primal edges overlap");
            else if (auto hit = geo::proper_crossing(primal_segs[i], primal_segs[j], mode, tol))
                add("SAME_SET_CROSS", subj, *hit, 0.0, "primal edges cross");
        }
    for (const auto& [v, p] : dd.primal_positions) {
        for (std::size_t i = 0; i < primal_segs.size(); ++i) {
            if (primal_edges[i].first == v || primal_edges[i].second == v)
                continue;
            if (geo::on_segment(p, primal_segs[i], mode, tol))
                add("VERTEX_ON_EDGE", {v, primal_edges[i].first, primal_edges[i].second}, p,
                    geo::point_segment_distance(p, primal_segs[i]), "vertex inside a primal edge");
        }
    }

    // dual layer planarity
    std::vector<geo::segment> dual_segs;
    for (const dual_tree_edge& te : dd.dual.tree_edges)
        dual_segs.push_back({dd.face_points[te.face_a], dd.face_points[te.face_b]});
    for (std::size_t i = 0; i < dual_segs.size(); ++i)
        for (std::size_t j = i + 1; j < dual_segs.size(); ++j) {
            std::vector<int> subj{dd.dual.tree_edges[i].face_a, dd.dual.tree_edges[i].face_b,
                                  dd.dual.tree_edges[j].face_a, dd.dual.tree_edges[j].face_b};
            if (geo::overlaps(dual_segs[i], dual_segs[j], mode, tol))
                add("OVERLAP", subj, dual_segs[i].a, 0.0, "dual edges overlap");
            else if (auto hit = geo::proper_crossing(dual_segs[i], dual_segs[j], mode, tol))
                add("SAME_SET_CROSS", subj, *hit, 0.0, "dual edges cross");
        }

    // each dual edge crosses exactly its own chord, at a right angle
    for (std::size_t i = 0; i < dual_segs.size(); ++i) {
        const dual_tree_edge& te = dd.dual.tree_edges[i];
        const geo::segment chord_seg{pos(te.shared.first), pos(te.shared.second)};
        auto hit = geo::proper_crossing(dual_segs[i], chord_seg, mode, tol);
        if (!hit) {
            add("MISSING_CROSSING", {te.face_a, te.face_b, te.shared.first, te.shared.second},
                dual_segs[i].a, 0.0, "dual edge misses its chord");
        } else {
            ++rep.crossings;
            const geo::point u = dual_segs[i].b - dual_segs[i].a;
            const geo::point v = chord_seg.b - chord_seg.a;
            if (profile.rac && !geo::is_right_angle(u, v, mode, tol))
                add("RAC_VIOLATION", {te.face_a, te.face_b, te.shared.first, te.shared.second},
                    *hit, angle_deviation(u, v), "dual edge crosses its chord off the right angle");
        }
        for (std::size_t k = 0; k < primal_segs.size(); ++k) {
            if (primal_edges[k] == te.shared)
                continue;
            if (auto extra = geo::proper_crossing(dual_segs[i], primal_segs[k], mode, tol))
                add("EXTRA_CROSSING",
                    {te.face_a, te.face_b, primal_edges[k].first, primal_edges[k].second}, *extra,
                    0.0, "dual edge crosses a foreign primal edge");
            else if (geo::overlaps(dual_segs[i], primal_segs[k], mode, tol))
                add("OVERLAP",
                    {te.face_a, te.face_b, primal_edges[k].first, primal_edges[k].second},
                    dual_segs[i].a, 0.0, "dual edge overlaps a primal edge");
        }
        for (const auto& [v, p] : dd.primal_positions)
            if (geo::on_segment(p, dual_segs[i], mode, tol))
                add("VERTEX_ON_EDGE", {v, te.face_a, te.face_b}, p,
                    geo::point_segment_distance(p, dual_segs[i]), "vertex inside a dual edge");
    }

    // face points strictly inside their faces, clear of every face edge
    for (std::size_t f = 0; f < dd.dual.faces.size(); ++f) {
        const auto& face = dd.dual.faces[f];
        std::vector<geo::point> poly;
        for (vertex_id v : face)
            poly.push_back(pos(v));
        const geo::point fp = dd.face_points[f];
        bool inside = false;
        try {
            inside = geo::point_in_polygon(fp, poly, tol);
        } catch (const std::domain_error&) {
            add("CONTAINMENT", {static_cast<int>(f)}, fp, 0.0, "face polygon is degenerate");
            continue;
        }
        if (!inside) {
            add("CONTAINMENT", {static_cast<int>(f)}, fp, 0.0, "face point outside its face");
            continue;
        }
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const geo::segment side{poly[i], poly[(i + 1) % poly.size()]};
            const double dd2 = geo::point_segment_distance(fp, side);
            if (dd2 <= profile.containment_margin)
                add("CONTAINMENT", {static_cast<int>(f), face[i], face[(i + 1) % face.size()]},
                    fp, dd2, "face point hugs a face edge");
        }
    }

    std::sort(rep.violations.begin(), rep.violations.end(),
              [](const violation& a, const violation& b) {
                  return std::tie(a.code, a.subjects, a.detail) <
                         std::tie(b.code, b.subjects, b.detail);
              });
    return rep;
}

} // namespace gsimrac
