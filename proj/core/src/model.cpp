#include "gsimrac/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gsimrac {

edge make_edge(vertex_id u, vertex_id v) {
    if (u == v)
        throw std::invalid_argument("self-loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    return u < v ? edge{u, v} : edge{v, u};
}

std::vector<edge> build_p_odd(int n) {
    std::vector<edge> out;
    for (int i = 1; i + 1 <= n; i += 2)
        out.push_back({i, i + 1});
    return out;
}

namespace {

std::vector<edge> spine_path(int n) {
    std::vector<edge> out;
    for (int i = 1; i < n; ++i)
        out.push_back({i, i + 1});
    return out;
}

} // namespace

sim_instance make_path_matching_instance(int n, std::vector<edge> matching) {
    return {n, spine_path(n), std::move(matching), instance_kind::path_matching};
}

sim_instance make_cycle_matching_instance(int n, std::vector<edge> matching) {
    auto spine = spine_path(n);
    if (n >= 3)
        spine.push_back({1, n});
    return {n, std::move(spine), std::move(matching), instance_kind::cycle_matching};
}

std::vector<instance_violation> validate_instance(const sim_instance& inst) {
    std::vector<instance_violation> out;
    auto flag = [&](std::string code, std::string msg) {
        out.push_back({std::move(code), std::move(msg)});
    };
    auto edge_str = [](edge e) {
        return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
    };

    auto check_set = [&](const std::vector<edge>& es, const char* name) {
        std::set<edge> seen;
        for (edge e : es) {
            if (e.first == e.second)
                flag("self-loop", std::string(name) + " edge " + edge_str(e));
            if (e.first < 1 || e.first > inst.n || e.second < 1 || e.second > inst.n)
                flag("vertex-out-of-range", std::string(name) + " edge " + edge_str(e));
            edge norm = e.first < e.second ? e : edge{e.second, e.first};
            if (!seen.insert(norm).second)
                flag("duplicate-edge", std::string(name) + " edge " + edge_str(e) + " repeated");
        }
    };
    check_set(inst.edges_a, "first-set");
    check_set(inst.edges_b, "second-set");

    std::set<edge> set_a;
    for (edge e : inst.edges_a)
        if (e.first != e.second)
            set_a.insert(e.first < e.second ? e : edge{e.second, e.first});
    for (edge e : inst.edges_b) {
        edge norm = e.first < e.second ? e : edge{e.second, e.first};
        if (set_a.count(norm))
            flag("shared-edge", "edge " + edge_str(norm) + " appears in both sets");
    }

    if (inst.kind == instance_kind::path_matching || inst.kind == instance_kind::cycle_matching) {
        const bool cyc = inst.kind == instance_kind::cycle_matching;
        std::set<edge> want;
        for (edge e : cyc ? make_cycle_matching_instance(inst.n, {}).edges_a
                          : spine_path(inst.n))
            want.insert(e);
        std::set<edge> have;
        for (edge e : inst.edges_a)
            if (e.first != e.second)
                have.insert(e.first < e.second ? e : edge{e.second, e.first});
        if (have != want)
            flag(cyc ? "not-cycle" : "not-path",
                 cyc ? "first set is not the cycle 1..n" : "first set is not the path 1..n");

        std::map<vertex_id, int> deg;
        for (edge e : inst.edges_b) {
            ++deg[e.first];
            ++deg[e.second];
        }
        for (auto [v, d] : deg)
            if (d > 1)
                flag("matched-twice", "vertex " + std::to_string(v) + " covered by " +
                                          std::to_string(d) + " matching edges");
    }
    return out;
}

std::vector<alternating_cycle> decompose_alternating(const std::vector<edge>& p_odd,
                                                     const std::vector<edge>& m) {
    std::map<vertex_id, vertex_id> spine_partner, match_partner;
    auto add = [](std::map<vertex_id, vertex_id>& tbl, edge e, const char* what) {
        if (e.first == e.second)
            throw std::domain_error(std::string(what) + " contains a self-loop");
        if (tbl.count(e.first) || tbl.count(e.second))
            throw std::domain_error(std::string(what) + " covers a vertex twice");
        tbl[e.first] = e.second;
        tbl[e.second] = e.first;
    };
    for (edge e : p_odd)
        add(spine_partner, e, "odd spine set");
    for (edge e : m)
        add(match_partner, e, "matching");
    for (edge e : m) {
        edge norm = e.first < e.second ? e : edge{e.second, e.first};
        auto it = spine_partner.find(norm.first);
        if (it != spine_partner.end() && it->second == norm.second)
            throw std::domain_error("matching shares an edge with the odd spine set");
    }
    if (spine_partner.size() != match_partner.size())
        throw std::domain_error("odd spine set and matching cover different vertex sets");
    for (auto [v, w] : spine_partner) {
        (void)w;
        if (!match_partner.count(v))
            throw std::domain_error("vertex " + std::to_string(v) + " has a spine edge but no matching edge");
    }

    std::vector<alternating_cycle> out;
    std::set<vertex_id> visited;
    for (auto [start, first_partner] : spine_partner) {
        if (visited.count(start))
            continue;
        // start is the smallest unvisited vertex (map iterates in order);
        // walk spine edge first, then alternate
        std::vector<vertex_id> cyc{start, first_partner};
        visited.insert(start);
        visited.insert(first_partner);
        bool via_match = true;
        while (true) {
            vertex_id cur = cyc.back();
            const auto& tbl = via_match ? match_partner : spine_partner;
            auto it = tbl.find(cur);
            if (it == tbl.end())
                throw std::domain_error("alternating walk fell off at vertex " + std::to_string(cur));
            vertex_id nxt = it->second;
            if (nxt == start) {
                if (!via_match)
                    throw std::domain_error("alternating component closes on a spine edge twice");
                break;
            }
            if (visited.count(nxt))
                throw std::domain_error("alternating component is not a simple cycle");
            cyc.push_back(nxt);
            visited.insert(nxt);
            via_match = !via_match;
        }
        if (cyc.size() % 2 != 0 || cyc.size() < 4)
            throw std::domain_error("alternating component has odd or short length");
        out.push_back({std::move(cyc)});
    }
    return out;
}

std::vector<instance_violation> validate_embedding(const outerplane_embedding& emb) {
    std::vector<instance_violation> out;
    auto flag = [&](std::string code, std::string msg) {
        out.push_back({std::move(code), std::move(msg)});
    };
    auto edge_str = [](edge e) {
        return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
    };
    if (emb.n < 3)
        flag("vertex-out-of-range", "outer cycle needs at least 3 vertices");
    std::set<edge> seen;
    for (edge c : emb.chords) {
        if (c.first == c.second) {
            flag("self-loop", "chord " + edge_str(c));
            continue;
        }
        edge e = c.first < c.second ? c : edge{c.second, c.first};
        if (e.first < 1 || e.second > emb.n) {
            flag("vertex-out-of-range", "chord " + edge_str(c));
            continue;
        }
        if (e.second - e.first == 1 || (e.first == 1 && e.second == emb.n))
            flag("chord-adjacent", "chord " + edge_str(c) + " duplicates an outer edge");
        if (!seen.insert(e).second)
            flag("duplicate-edge", "chord " + edge_str(c) + " repeated");
    }
    std::vector<edge> cs(seen.begin(), seen.end());
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            auto [a, b] = cs[i];
            auto [c, d] = cs[j];
            // chords of a convex polygon cross iff their endpoints interleave
            const bool interleave = (a < c && c < b && b < d) || (c < a && a < d && d < b);
            if (interleave)
                flag("chord-crossing", "chords " + edge_str(cs[i]) + " and " + edge_str(cs[j]) + " cross");
        }
    return out;
}

namespace {

// Recursively split a circularly ordered region along any chord inside it.
void split_region(const std::vector<vertex_id>& region, const std::set<edge>& chords,
                  std::vector<std::vector<vertex_id>>& faces) {
    std::map<vertex_id, std::size_t> pos;
    for (std::size_t i = 0; i < region.size(); ++i)
        pos[region[i]] = i;
    for (edge c : chords) {
        auto iu = pos.find(c.first);
        auto iv = pos.find(c.second);
        if (iu == pos.end() || iv == pos.end())
            continue;
        std::size_t pu = iu->second, pv = iv->second;
        if (pu > pv)
            std::swap(pu, pv);
        if (pv - pu == 1 || (pu == 0 && pv == region.size() - 1))
            continue; // chord is an edge of this region boundary, splits nothing
        std::vector<vertex_id> left(region.begin() + pu, region.begin() + pv + 1);
        std::vector<vertex_id> right(region.begin() + pv, region.end());
        right.insert(right.end(), region.begin(), region.begin() + pu + 1);
        split_region(left, chords, faces);
        split_region(right, chords, faces);
        return;
    }
    // no chord splits this region: it is a face; rotate to the minimum vertex,
    // which makes the list ascending since the boundary follows outer order
    auto mn = std::min_element(region.begin(), region.end());
    std::vector<vertex_id> face(mn, region.end());
    face.insert(face.end(), region.begin(), mn);
    faces.push_back(std::move(face));
}

} // namespace

dual_structure compute_faces_and_dual(const outerplane_embedding& emb) {
    auto viol = validate_embedding(emb);
    if (!viol.empty())
        throw std::domain_error("invalid outerplane embedding: " + viol.front().code +
                                " — " + viol.front().message);
    std::set<edge> chords;
    for (edge c : emb.chords)
        chords.insert(c.first < c.second ? c : edge{c.second, c.first});

    std::vector<vertex_id> whole(emb.n);
    for (int i = 0; i < emb.n; ++i)
        whole[i] = i + 1;
    dual_structure out;
    split_region(whole, chords, out.faces);
    std::sort(out.faces.begin(), out.faces.end());
    if (out.faces.size() != chords.size() + 1)
        throw std::logic_error("face split produced a wrong face count");

    // each chord borders exactly two faces: the dual tree edges
    auto on_boundary = [](const std::vector<vertex_id>& face, edge e) {
        const std::size_t k = face.size();
        for (std::size_t i = 0; i < k; ++i) {
            vertex_id u = face[i], v = face[(i + 1) % k];
            if ((u == e.first && v == e.second) || (u == e.second && v == e.first))
                return true;
        }
        return false;
    };
    for (edge c : chords) {
        std::vector<int> hits;
        for (std::size_t f = 0; f < out.faces.size(); ++f)
            if (on_boundary(out.faces[f], c))
                hits.push_back(static_cast<int>(f));
        if (hits.size() != 2)
            throw std::logic_error("chord does not border exactly two faces");
        out.tree_edges.push_back({hits[0], hits[1], c});
    }
    return out;
}

sim_instance fixture_augmented_triangle_antiprism() {
    sim_instance inst;
    inst.n = 7;
    inst.kind = instance_kind::general;
    // hub 7 joined to every rim vertex, plus one rim 6-cycle 1-2-3-5-4-6
    inst.edges_a = {{1, 7}, {2, 7}, {3, 7}, {4, 7}, {5, 7}, {6, 7},
                    {1, 2}, {2, 3}, {3, 5}, {4, 5}, {4, 6}, {1, 6}};
    // complementary rim 6-cycle 1-3-4-2-6-5
    inst.edges_b = {{1, 3}, {3, 4}, {2, 4}, {2, 6}, {5, 6}, {1, 5}};
    return inst;
}

} // namespace gsimrac
