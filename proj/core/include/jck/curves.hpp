#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "jck/trees.hpp"

namespace jck {

struct Vec2 {
    double x = 0, y = 0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
double dot(Vec2 a, Vec2 b);
double cross(Vec2 a, Vec2 b);
double norm(Vec2 a);
double dist(Vec2 a, Vec2 b);

// Closed polygonal curve.  The constructor requires at least three vertices
// and nonzero signed area, and reverses the vertex order if needed so the
// stored orientation is always counterclockwise.  Simplicity is not checked
// here; validate_curves does that.
class PolyCurve {
  public:
    explicit PolyCurve(std::vector<Vec2> vertices);
    const std::vector<Vec2>& vertices() const { return verts_; }
    int size() const { return static_cast<int>(verts_.size()); }

  private:
    std::vector<Vec2> verts_;
};

double polygon_area(const PolyCurve& p);
Vec2 polygon_centroid(const PolyCurve& p);
bool polygon_is_simple(const PolyCurve& p);
bool point_in_polygon(Vec2 q, const PolyCurve& p);
// min distance from q to the boundary of p
double dist_to_polygon(Vec2 q, const PolyCurve& p);

// Tests strict convexity: every normalized edge turn must have cross product
// above the tolerance.  Near-degenerate (collinear) vertices fail the test.
bool polygon_is_convex(const PolyCurve& p, double tol = 1e-12);

struct CircleShape {
    Vec2 center;
    double radius = 0;
};

// A configuration member.  Retractions produce exact circles analytically,
// so a curve is either a polygon or a circle; a circle may additionally
// carry the vertex list it was discretized from, which keeps frames of an
// all-circles input bytewise stationary.
class Curve {
  public:
    static Curve polygon(PolyCurve p);
    static Curve circle(CircleShape c, int resolution = 128);
    static Curve circle_with_vertices(CircleShape c, std::vector<Vec2> verts);

    bool is_circle() const { return circle_.has_value(); }
    const CircleShape& circle_shape() const;
    // Polygonal view; for circle curves this is the stored or generated
    // discretization.
    const PolyCurve& poly() const { return poly_; }

  private:
    Curve(std::optional<CircleShape> c, PolyCurve p) : circle_(c), poly_(std::move(p)) {}
    std::optional<CircleShape> circle_;
    PolyCurve poly_;
};

std::vector<Vec2> discretize_circle(const CircleShape& c, int resolution);

// Subdivides edges by length until the closed polyline has roughly `target`
// vertices; original vertices are always kept.
std::vector<Vec2> resample_closed(const std::vector<Vec2>& v, int target);

struct JordanConfiguration {
    std::vector<Curve> curves;
    int size() const { return static_cast<int>(curves.size()); }
};

struct CurveValidation {
    std::vector<int> not_simple;                    // 1-based labels
    std::vector<std::pair<int, int>> overlapping;   // label pairs with
                                                    // intersecting images
    bool ok() const { return not_simple.empty() && overlapping.empty(); }
};

CurveValidation validate_curves(const JordanConfiguration& j);

// Nesting forest by image containment; parent is the containing curve of
// smallest area.  Throws on invalid configurations.
RootedTree curve_nesting_tree(const JordanConfiguration& j);

// Area centroid when it lies strictly inside the curve, otherwise the
// deepest interior point (max distance to the boundary, ties broken by
// lexicographic (x, y) order).
Vec2 curve_center(const Curve& c);

struct CurveMetrics {
    Vec2 center;
    double inradius = 0;   // min distance center -> edges
    double outradius = 0;  // max distance center -> vertices
};

CurveMetrics curve_metrics(const Curve& c);

bool is_round(const Curve& c, double tol);

// One frame of the inward contraction flow.  Global time t in [0, 1] is
// split uniformly into dmax+1 stages running from the deepest curves up to
// the top level; within its stage a curve interpolates radially to its
// inscribed circle while everything below it follows by the matching
// homothety.  Requires a valid configuration of convex curves.
JordanConfiguration convex_retract_frame(const JordanConfiguration& j, double t);

// Vertex count used when re-sampling active polygons for intermediate
// frames, so that the polygonal chords of a coarse input cannot cut across
// nearby followers.
inline constexpr int kConvexFrameResolution = 96;

}  // namespace jck
