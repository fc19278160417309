#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace gsimrac::geom {

// Grid mode treats coordinates as exact integers (predicates use integer
// arithmetic, widened to 128 bits where products appear); Real mode uses
// floating point with explicit tolerances.
enum class coord_mode { grid, real };

struct tolerances {
    double incidence = 1e-9; // distances: on-segment, coincidence, overlap
    double angle = 1e-6;     // radians: right-angle deviation
};

struct point {
    double x = 0.0;
    double y = 0.0;
};

struct segment {
    point a;
    point b;
};

struct circle {
    point center;
    double radius = 0.0;
};

point operator+(point p, point q);
point operator-(point p, point q);
point operator*(double s, point p);
bool operator==(point p, point q);

double dot(point u, point v);
double cross(point u, point v);
double norm(point u);
double dist(point p, point q);
point normalized(point u);      // throws std::invalid_argument on zero vector
point rot90(point u);           // counterclockwise quarter turn

// Sign of the turn a->b->c: +1 left, -1 right, 0 collinear. Exact in grid mode.
int orientation(point a, point b, point c, coord_mode mode, const tolerances& tol = {});

// True proper crossing: the open interiors of the segments intersect in a
// single point. Returns the crossing point when it exists. Shared endpoints,
// touches, and collinear overlaps are not proper crossings.
std::optional<point> proper_crossing(const segment& s1, const segment& s2,
                                     coord_mode mode, const tolerances& tol = {});

// Collinear segments sharing more than a single point.
bool overlaps(const segment& s1, const segment& s2, coord_mode mode, const tolerances& tol = {});

// Point lies on the closed segment.
bool on_segment(point p, const segment& s, coord_mode mode, const tolerances& tol = {});

// Angle between the two direction vectors is 90 degrees. Zero-length input
// throws std::invalid_argument.
bool is_right_angle(point u, point v, coord_mode mode, const tolerances& tol = {});

double point_segment_distance(point p, const segment& s);

enum class tangent_side { left, right };

struct tangent_result {
    point touch;
    segment line; // from the external point to the touch point
};

// Tangent line from an external point to a circle. side selects which of the
// two tangents: left means the touch point lies counterclockwise of the
// direction from p to the center. p inside or on the circle throws
// std::domain_error.
tangent_result tangent_from_point(point p, const circle& c, tangent_side side);

// Intersection of the ray p + t*dir (t >= 0) with the circle, taking the
// larger parameter (the far intersection). No such intersection throws
// std::domain_error.
point ray_circle_far_intersection(point p, point dir, const circle& c);

// Strict interior test by ray casting; boundary points report false.
// Degenerate polygons (fewer than 3 vertices or near-zero area) throw
// std::domain_error.
bool point_in_polygon(point p, const std::vector<point>& poly, const tolerances& tol = {});

// Unbounded strip between two parallel rays ("semi-strip"): the region swept
// by the open segment (origin_a, origin_b) translated along direction.
struct semi_strip {
    point origin_a;
    point origin_b;
    point direction; // unit length

    semi_strip(point a, point b, point dir);

    // q strictly inside the strip (strictly between the rays, strictly past
    // the baseline segment).
    bool contains(point q, const tolerances& tol = {}) const;

    // Distance from q to the nearer of the two boundary lines.
    double boundary_distance(point q) const;

    // The closed segment meets the open strip region.
    bool intersects_segment(const segment& s, const tolerances& tol = {}) const;
};

} // namespace gsimrac::geom
