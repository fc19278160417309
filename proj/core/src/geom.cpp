#include "gsimrac/geom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gsimrac::geom {

namespace {

using i64 = long long;
using i128 = __int128;

bool integral(double v) { return std::nearbyint(v) == v && std::abs(v) < 9.0e15; }

i64 as_int(double v) {
    if (!integral(v))
        throw std::invalid_argument("grid-mode geometry requires integer coordinates");
    return static_cast<i64>(std::llround(v));
}

// Exact cross product (b-a) x (c-a) on integer points.
i128 cross3_exact(point a, point b, point c) {
    const i64 abx = as_int(b.x) - as_int(a.x);
    const i64 aby = as_int(b.y) - as_int(a.y);
    const i64 acx = as_int(c.x) - as_int(a.x);
    const i64 acy = as_int(c.y) - as_int(a.y);
    return static_cast<i128>(abx) * acy - static_cast<i128>(aby) * acx;
}

int sgn(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
int sgn(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

} // namespace

point operator+(point p, point q) { return {p.x + q.x, p.y + q.y}; }
point operator-(point p, point q) { return {p.x - q.x, p.y - q.y}; }
point operator*(double s, point p) { return {s * p.x, s * p.y}; }
bool operator==(point p, point q) { return p.x == q.x && p.y == q.y; }

double dot(point u, point v) { return u.x * v.x + u.y * v.y; }
double cross(point u, point v) { return u.x * v.y - u.y * v.x; }
double norm(point u) { return std::hypot(u.x, u.y); }
double dist(point p, point q) { return norm(q - p); }

point normalized(point u) {
    const double n = norm(u);
    if (n == 0.0)
        throw std::invalid_argument("cannot normalize a zero vector");
    return {u.x / n, u.y / n};
}

point rot90(point u) { return {-u.y, u.x}; }

int orientation(point a, point b, point c, coord_mode mode, const tolerances& tol) {
    if (mode == coord_mode::grid)
        return sgn(cross3_exact(a, b, c));
    const double cr = cross(b - a, c - a);
    const double base = norm(b - a);
    // distance from c to line ab below the incidence tolerance counts as collinear
    if (base == 0.0)
        return 0;
    if (std::abs(cr) / base <= tol.incidence)
        return 0;
    return sgn(cr);
}

bool on_segment(point p, const segment& s, coord_mode mode, const tolerances& tol) {
    if (mode == coord_mode::grid) {
        if (cross3_exact(s.a, s.b, p) != 0)
            return false;
        const i64 px = as_int(p.x), py = as_int(p.y);
        const i64 ax = as_int(s.a.x), ay = as_int(s.a.y);
        const i64 bx = as_int(s.b.x), by = as_int(s.b.y);
        return std::min(ax, bx) <= px && px <= std::max(ax, bx) &&
               std::min(ay, by) <= py && py <= std::max(ay, by);
    }
    return point_segment_distance(p, s) <= tol.incidence;
}

std::optional<point> proper_crossing(const segment& s1, const segment& s2,
                                     coord_mode mode, const tolerances& tol) {
    const point p1 = s1.a, p2 = s1.b, p3 = s2.a, p4 = s2.b;
    if (mode == coord_mode::grid) {
        const i128 d1 = cross3_exact(p3, p4, p1);
        const i128 d2 = cross3_exact(p3, p4, p2);
        const i128 d3 = cross3_exact(p1, p2, p3);
        const i128 d4 = cross3_exact(p1, p2, p4);
        if (!((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)))
            return std::nullopt;
        if (!((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
            return std::nullopt;
        // strict opposite signs on both segments: unique interior crossing
        const double t = static_cast<double>(d1) / (static_cast<double>(d1) - static_cast<double>(d2));
        return point{p1.x + t * (p2.x - p1.x), p1.y + t * (p2.y - p1.y)};
    }
    const point r = p2 - p1;
    const point s = p4 - p3;
    const double denom = cross(r, s);
    const double lr = norm(r), ls = norm(s);
    if (lr == 0.0 || ls == 0.0)
        return std::nullopt;
    if (std::abs(denom) / (lr * ls) <= 1e-15) // parallel or collinear
        return std::nullopt;
    const double t = cross(p3 - p1, s) / denom;
    const double u = cross(p3 - p1, r) / denom;
    // strictness margins expressed as distances from the respective endpoints
    const double mt = tol.incidence / lr;
    const double mu = tol.incidence / ls;
    if (t <= mt || t >= 1.0 - mt || u <= mu || u >= 1.0 - mu)
        return std::nullopt;
    return point{p1.x + t * r.x, p1.y + t * r.y};
}

bool overlaps(const segment& s1, const segment& s2, coord_mode mode, const tolerances& tol) {
    if (orientation(s1.a, s1.b, s2.a, mode, tol) != 0 ||
        orientation(s1.a, s1.b, s2.b, mode, tol) != 0 ||
        orientation(s2.a, s2.b, s1.a, mode, tol) != 0 ||
        orientation(s2.a, s2.b, s1.b, mode, tol) != 0)
        return false;
    // all collinear: project on the dominant axis and compare closed intervals
    const point d = s1.b - s1.a;
    const bool use_x = std::abs(d.x) >= std::abs(d.y) ||
                       std::abs(s2.b.x - s2.a.x) >= std::abs(s2.b.y - s2.a.y);
    auto coord = [use_x](point p) { return use_x ? p.x : p.y; };
    const double lo1 = std::min(coord(s1.a), coord(s1.b));
    const double hi1 = std::max(coord(s1.a), coord(s1.b));
    const double lo2 = std::min(coord(s2.a), coord(s2.b));
    const double hi2 = std::max(coord(s2.a), coord(s2.b));
    const double shared = std::min(hi1, hi2) - std::max(lo1, lo2);
    // sharing only a single point is a touch, not an overlap
    if (mode == coord_mode::grid)
        return shared > 0.0;
    return shared > tol.incidence;
}

bool is_right_angle(point u, point v, coord_mode mode, const tolerances& tol) {
    if (mode == coord_mode::grid) {
        const i64 ux = as_int(u.x), uy = as_int(u.y);
        const i64 vx = as_int(v.x), vy = as_int(v.y);
        if ((ux == 0 && uy == 0) || (vx == 0 && vy == 0))
            throw std::invalid_argument("right-angle test on a zero-length direction");
        return static_cast<i128>(ux) * vx + static_cast<i128>(uy) * vy == 0;
    }
    const double lu = norm(u), lv = norm(v);
    if (lu == 0.0 || lv == 0.0)
        throw std::invalid_argument("right-angle test on a zero-length direction");
    const double c = std::clamp(std::abs(dot(u, v)) / (lu * lv), 0.0, 1.0);
    return std::asin(c) <= tol.angle; // deviation of the angle from 90 degrees
}

double point_segment_distance(point p, const segment& s) {
    const point d = s.b - s.a;
    const double len2 = dot(d, d);
    if (len2 == 0.0)
        return dist(p, s.a);
    const double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
    return dist(p, s.a + t * d);
}

tangent_result tangent_from_point(point p, const circle& c, tangent_side side) {
    const double big_d = dist(p, c.center);
    if (big_d <= c.radius)
        throw std::domain_error("tangent from a point inside or on the circle");
    const double beta = std::acos(c.radius / big_d);
    const point w = normalized(p - c.center);
    auto rotated = [&](double ang) {
        const double cs = std::cos(ang), sn = std::sin(ang);
        return point{w.x * cs - w.y * sn, w.x * sn + w.y * cs};
    };
    const point t_plus = c.center + c.radius * rotated(beta);
    const point t_minus = c.center + c.radius * rotated(-beta);
    // left tangent: touch point counterclockwise of the p->center direction
    const bool plus_is_left = cross(c.center - p, t_plus - p) > 0.0;
    const point touch = (side == tangent_side::left) == plus_is_left ? t_plus : t_minus;
    return {touch, segment{p, touch}};
}

point ray_circle_far_intersection(point p, point dir, const circle& c) {
    const point d = normalized(dir);
    const point f = p - c.center;
    const double b = 2.0 * dot(f, d);
    const double cc = dot(f, f) - c.radius * c.radius;
    const double disc = b * b - 4.0 * cc;
    if (disc < 0.0)
        throw std::domain_error("ray misses the circle");
    const double t2 = (-b + std::sqrt(disc)) / 2.0;
    if (t2 < 0.0)
        throw std::domain_error("circle lies behind the ray origin");
    return p + t2 * d;
}

bool point_in_polygon(point p, const std::vector<point>& poly, const tolerances& tol) {
    const std::size_t n = poly.size();
    if (n < 3)
        throw std::domain_error("polygon needs at least 3 vertices");
    double area2 = 0.0;
    double perim = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        area2 += cross(poly[i], poly[(i + 1) % n]);
        perim += dist(poly[i], poly[(i + 1) % n]);
    }
    if (perim == 0.0 || std::abs(area2) / perim <= tol.incidence)
        throw std::domain_error("degenerate polygon");
    for (std::size_t i = 0; i < n; ++i)
        if (point_segment_distance(p, {poly[i], poly[(i + 1) % n]}) <= tol.incidence)
            return false; // boundary is not interior
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const bool straddles = (poly[i].y > p.y) != (poly[j].y > p.y);
        if (straddles) {
            const double x_hit = poly[j].x + (p.y - poly[j].y) / (poly[i].y - poly[j].y) *
                                                 (poly[i].x - poly[j].x);
            if (p.x < x_hit)
                inside = !inside;
        }
    }
    return inside;
}

semi_strip::semi_strip(point a, point b, point dir)
    : origin_a(a), origin_b(b), direction(normalized(dir)) {}

bool semi_strip::contains(point q, const tolerances& tol) const {
    const point e = origin_b - origin_a;
    const double denom = cross(e, direction);
    if (std::abs(denom) <= tol.incidence)
        return false; // degenerate strip has no interior
    const double s = cross(q - origin_a, direction) / denom;
    const double t = cross(e, q - origin_a) / denom;
    // convert parameter strictness into distances from the three boundary lines
    const double d_ray_a = std::abs(s) * std::abs(denom);
    const double d_ray_b = std::abs(1.0 - s) * std::abs(denom);
    const double d_base = std::abs(t) * std::abs(denom) / norm(e);
    return s > 0.0 && s < 1.0 && t > 0.0 &&
           d_ray_a > tol.incidence && d_ray_b > tol.incidence && d_base > tol.incidence;
}

double semi_strip::boundary_distance(point q) const {
    const double da = std::abs(cross(direction, q - origin_a));
    const double db = std::abs(cross(direction, q - origin_b));
    return std::min(da, db);
}

bool semi_strip::intersects_segment(const segment& seg, const tolerances& tol) const {
    const point e = origin_b - origin_a;
    const double denom = cross(e, direction);
    if (std::abs(denom) <= tol.incidence)
        return false;
    // segment point: seg.a + u*(seg.b-seg.a); strip coordinates s(u), t(u) are linear
    auto strip_coords = [&](point q) {
        return point{cross(q - origin_a, direction) / denom, // s
                     cross(e, q - origin_a) / denom};        // t
    };
    const point c0 = strip_coords(seg.a);
    const point c1 = strip_coords(seg.b);
    double lo = 0.0, hi = 1.0;
    // clip [lo,hi] against a strict linear constraint v0 + u*(v1-v0) > bound
    auto clip_above = [&](double v0, double v1, double bound) {
        const double dv = v1 - v0;
        if (std::abs(dv) < 1e-300) {
            if (v0 <= bound) { lo = 1.0; hi = 0.0; }
            return;
        }
        const double u_at = (bound - v0) / dv;
        if (dv > 0.0)
            lo = std::max(lo, u_at);
        else
            hi = std::min(hi, u_at);
    };
    auto clip_below = [&](double v0, double v1, double bound) {
        clip_above(-v0, -v1, -bound);
    };
    clip_above(c0.x, c1.x, 0.0); // s > 0
    clip_below(c0.x, c1.x, 1.0); // s < 1
    clip_above(c0.y, c1.y, 0.0); // t > 0
    return hi - lo > tol.incidence / std::max(1.0, dist(seg.a, seg.b));
}

} // namespace gsimrac::geom
