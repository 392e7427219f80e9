#include "jck/curves.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "jck/geometry.hpp"

namespace jck {

double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double norm(Vec2 a) { return std::hypot(a.x, a.y); }
double dist(Vec2 a, Vec2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

namespace {

double signed_area(const std::vector<Vec2>& v) {
    double s = 0;
    const int n = static_cast<int>(v.size());
    for (int i = 0; i < n; ++i) {
        const Vec2& a = v[i];
        const Vec2& b = v[(i + 1) % n];
        s += a.x * b.y - a.y * b.x;
    }
    return 0.5 * s;
}

double point_segment_dist(Vec2 q, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0) return dist(q, a);
    double t = dot(q - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return dist(q, a + t * ab);
}

int sgn(double x) { return (x > 0) - (x < 0); }

bool on_segment_collinear(Vec2 p, Vec2 a, Vec2 b) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// closed-segment intersection, including touching and collinear overlap
bool segments_intersect(Vec2 p1, Vec2 p2, Vec2 p3, Vec2 p4) {
    const double d1 = cross(p4 - p3, p1 - p3);
    const double d2 = cross(p4 - p3, p2 - p3);
    const double d3 = cross(p2 - p1, p3 - p1);
    const double d4 = cross(p2 - p1, p4 - p1);
    if (sgn(d1) * sgn(d2) < 0 && sgn(d3) * sgn(d4) < 0) return true;
    if (d1 == 0 && on_segment_collinear(p1, p3, p4)) return true;
    if (d2 == 0 && on_segment_collinear(p2, p3, p4)) return true;
    if (d3 == 0 && on_segment_collinear(p3, p1, p2)) return true;
    if (d4 == 0 && on_segment_collinear(p4, p1, p2)) return true;
    return false;
}

struct BBox {
    double xmin = std::numeric_limits<double>::infinity();
    double ymin = std::numeric_limits<double>::infinity();
    double xmax = -std::numeric_limits<double>::infinity();
    double ymax = -std::numeric_limits<double>::infinity();

    void add(Vec2 p) {
        xmin = std::min(xmin, p.x);
        ymin = std::min(ymin, p.y);
        xmax = std::max(xmax, p.x);
        ymax = std::max(ymax, p.y);
    }
    bool overlaps(const BBox& o) const {
        return xmin <= o.xmax && o.xmin <= xmax && ymin <= o.ymax && o.ymin <= ymax;
    }
    double diag() const { return std::hypot(xmax - xmin, ymax - ymin); }
};

BBox polygon_bbox(const std::vector<Vec2>& v) {
    BBox b;
    for (const Vec2& p : v) b.add(p);
    return b;
}

// Uniform-grid index over the segments of one polygon; frame validation
// calls segment tests thousands of times, so the all-pairs loop is too slow.
class SegmentGrid {
  public:
    explicit SegmentGrid(const std::vector<Vec2>& pts) : pts_(pts) {
        const int n = static_cast<int>(pts.size());
        box_ = polygon_bbox(pts);
        double perim = 0;
        for (int i = 0; i < n; ++i) perim += dist(pts[i], pts[(i + 1) % n]);
        h_ = std::max(perim / std::max(1, n), box_.diag() / 1024.0);
        if (h_ <= 0) h_ = 1;
        for (int i = 0; i < n; ++i) {
            visit_cells(pts[i], pts[(i + 1) % n], [&](std::int64_t key) {
                cells_[key].push_back(i);
            });
        }
    }

    // invokes fn(segment index) once per candidate segment near [a, b]
    template <typename Fn>
    void candidates(Vec2 a, Vec2 b, Fn&& fn) const {
        ++stamp_;
        visit_cells(a, b, [&](std::int64_t key) {
            auto it = cells_.find(key);
            if (it == cells_.end()) return;
            for (int idx : it->second) {
                if (seen_.size() <= static_cast<size_t>(idx)) seen_.resize(idx + 1, 0);
                if (seen_[idx] == stamp_) continue;
                seen_[idx] = stamp_;
                fn(idx);
            }
        });
    }

    Vec2 seg_a(int i) const { return pts_[i]; }
    Vec2 seg_b(int i) const { return pts_[(i + 1) % pts_.size()]; }

  private:
    template <typename Fn>
    void visit_cells(Vec2 a, Vec2 b, Fn&& fn) const {
        const auto cx0 = static_cast<std::int64_t>(std::floor(std::min(a.x, b.x) / h_));
        const auto cx1 = static_cast<std::int64_t>(std::floor(std::max(a.x, b.x) / h_));
        const auto cy0 = static_cast<std::int64_t>(std::floor(std::min(a.y, b.y) / h_));
        const auto cy1 = static_cast<std::int64_t>(std::floor(std::max(a.y, b.y) / h_));
        for (std::int64_t cx = cx0; cx <= cx1; ++cx)
            for (std::int64_t cy = cy0; cy <= cy1; ++cy)
                fn((cx << 21) ^ cy);
    }

    const std::vector<Vec2>& pts_;
    BBox box_;
    double h_ = 1;
    std::unordered_map<std::int64_t, std::vector<int>> cells_;
    mutable std::vector<std::uint32_t> seen_;
    mutable std::uint32_t stamp_ = 0;
};

bool polygons_images_intersect(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
    if (!polygon_bbox(a).overlaps(polygon_bbox(b))) return false;
    SegmentGrid grid(a);
    const int nb = static_cast<int>(b.size());
    for (int j = 0; j < nb; ++j) {
        const Vec2 p = b[j], q = b[(j + 1) % nb];
        bool hit = false;
        grid.candidates(p, q, [&](int i) {
            if (!hit && segments_intersect(grid.seg_a(i), grid.seg_b(i), p, q)) hit = true;
        });
        if (hit) return true;
    }
    return false;
}

}  // namespace

PolyCurve::PolyCurve(std::vector<Vec2> vertices) : verts_(std::move(vertices)) {
    if (verts_.size() < 3)
        throw std::invalid_argument("PolyCurve: need at least 3 vertices");
    const double a = signed_area(verts_);
    if (a == 0)
        throw std::invalid_argument("PolyCurve: degenerate (zero area)");
    if (a < 0) std::reverse(verts_.begin(), verts_.end());
}

double polygon_area(const PolyCurve& p) { return signed_area(p.vertices()); }

Vec2 polygon_centroid(const PolyCurve& p) {
    const auto& v = p.vertices();
    const int n = p.size();
    double a = 0, cx = 0, cy = 0;
    for (int i = 0; i < n; ++i) {
        const Vec2& s = v[i];
        const Vec2& t = v[(i + 1) % n];
        const double w = s.x * t.y - t.x * s.y;
        a += w;
        cx += (s.x + t.x) * w;
        cy += (s.y + t.y) * w;
    }
    a *= 0.5;
    return {cx / (6 * a), cy / (6 * a)};
}

bool polygon_is_simple(const PolyCurve& p) {
    const auto& v = p.vertices();
    const int n = p.size();
    for (int i = 0; i < n; ++i)
        if (v[i].x == v[(i + 1) % n].x && v[i].y == v[(i + 1) % n].y)
            return false;  // zero-length edge
    SegmentGrid grid(v);
    for (int j = 0; j < n; ++j) {
        const Vec2 p1 = v[j], p2 = v[(j + 1) % n];
        bool bad = false;
        grid.candidates(p1, p2, [&](int i) {
            if (bad || i >= j) return;
            const bool adjacent = (j - i == 1) || (i == 0 && j == n - 1);
            if (adjacent) {
                // adjacent edges may only meet at the shared endpoint;
                // collinear fold-backs count as self-contact
                const Vec2 shared = (j - i == 1) ? v[j] : v[0];
                const Vec2 e1 = (j - i == 1) ? v[i] : v[n - 1];
                const Vec2 e2 = (j - i == 1) ? v[(j + 1) % n] : v[1];
                if (cross(e1 - shared, e2 - shared) == 0 && dot(e1 - shared, e2 - shared) > 0)
                    bad = true;
                return;
            }
            if (segments_intersect(grid.seg_a(i), grid.seg_b(i), p1, p2)) bad = true;
        });
        if (bad) return false;
    }
    return true;
}

bool point_in_polygon(Vec2 q, const PolyCurve& p) {
    const auto& v = p.vertices();
    const int n = p.size();
    bool inside = false;
    for (int i = 0, j = n - 1; i < n; j = i++) {
        if ((v[i].y > q.y) != (v[j].y > q.y)) {
            const double xcross = v[j].x + (q.y - v[j].y) / (v[i].y - v[j].y) * (v[i].x - v[j].x);
            if (q.x < xcross) inside = !inside;
        }
    }
    return inside;
}

double dist_to_polygon(Vec2 q, const PolyCurve& p) {
    const auto& v = p.vertices();
    const int n = p.size();
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        best = std::min(best, point_segment_dist(q, v[i], v[(i + 1) % n]));
    return best;
}

bool polygon_is_convex(const PolyCurve& p, double tol) {
    const auto& v = p.vertices();
    const int n = p.size();
    for (int i = 0; i < n; ++i) {
        const Vec2 a = v[i], b = v[(i + 1) % n], c = v[(i + 2) % n];
        Vec2 e1 = b - a, e2 = c - b;
        const double l1 = norm(e1), l2 = norm(e2);
        if (l1 == 0 || l2 == 0) return false;
        if (cross((1 / l1) * e1, (1 / l2) * e2) <= tol) return false;
    }
    return true;
}

std::vector<Vec2> discretize_circle(const CircleShape& c, int resolution) {
    std::vector<Vec2> out;
    out.reserve(resolution);
    for (int k = 0; k < resolution; ++k) {
        const double a = 2 * std::numbers::pi * k / resolution;
        out.push_back({c.center.x + c.radius * std::cos(a), c.center.y + c.radius * std::sin(a)});
    }
    return out;
}

Curve Curve::polygon(PolyCurve p) { return Curve(std::nullopt, std::move(p)); }

Curve Curve::circle(CircleShape c, int resolution) {
    if (c.radius <= 0) throw std::invalid_argument("Curve::circle: radius must be positive");
    return Curve(c, PolyCurve(discretize_circle(c, resolution)));
}

Curve Curve::circle_with_vertices(CircleShape c, std::vector<Vec2> verts) {
    if (c.radius <= 0) throw std::invalid_argument("Curve::circle: radius must be positive");
    return Curve(c, PolyCurve(std::move(verts)));
}

const CircleShape& Curve::circle_shape() const {
    if (!circle_) throw std::logic_error("Curve: not a circle");
    return *circle_;
}

namespace {

// true when the images of the two curves share a point, using exact circle
// tests where a circle representation is available
bool curves_images_intersect(const Curve& a, const Curve& b) {
    if (a.is_circle() && b.is_circle()) {
        const CircleShape& ca = a.circle_shape();
        const CircleShape& cb = b.circle_shape();
        return classify_pair({ca.center.x, ca.center.y, ca.radius},
                             {cb.center.x, cb.center.y, cb.radius}) == PairClass::Intersecting;
    }
    if (a.is_circle() != b.is_circle()) {
        const Curve& circ = a.is_circle() ? a : b;
        const Curve& poly = a.is_circle() ? b : a;
        const CircleShape& c = circ.circle_shape();
        double max_vert = 0;
        for (const Vec2& v : poly.poly().vertices())
            max_vert = std::max(max_vert, dist(v, c.center));
        if (max_vert < c.radius) return false;  // polygon strictly inside the disk
        if (dist_to_polygon(c.center, poly.poly()) > c.radius) return false;
        return true;
    }
    return polygons_images_intersect(a.poly().vertices(), b.poly().vertices());
}

// assumes disjoint images: does the image of inner lie inside outer?
bool curve_contains(const Curve& outer, const Curve& inner) {
    if (outer.is_circle()) {
        const CircleShape& c = outer.circle_shape();
        if (inner.is_circle()) {
            const CircleShape& ci = inner.circle_shape();
            return dist(ci.center, c.center) + ci.radius < c.radius;
        }
        double max_vert = 0;
        for (const Vec2& v : inner.poly().vertices())
            max_vert = std::max(max_vert, dist(v, c.center));
        return max_vert < c.radius;
    }
    // probe with a point ON the inner image (a circle's center is not one:
    // it can fall inside a sibling nested within the circle)
    return point_in_polygon(inner.poly().vertices()[0], outer.poly());
}

double curve_area(const Curve& c) {
    if (c.is_circle()) {
        const double r = c.circle_shape().radius;
        return std::numbers::pi * r * r;
    }
    return polygon_area(c.poly());
}

}  // namespace

CurveValidation validate_curves(const JordanConfiguration& j) {
    CurveValidation v;
    const int n = j.size();
    for (int i = 0; i < n; ++i) {
        if (j.curves[i].is_circle()) continue;  // analytic circles are simple
        if (!polygon_is_simple(j.curves[i].poly())) v.not_simple.push_back(i + 1);
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (curves_images_intersect(j.curves[a], j.curves[b]))
                v.overlapping.emplace_back(a + 1, b + 1);
    return v;
}

RootedTree curve_nesting_tree(const JordanConfiguration& j) {
    if (!validate_curves(j).ok())
        throw std::invalid_argument("curve_nesting_tree: configuration is not valid");
    const int n = j.size();
    RootedTree t;
    t.parents.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        int best = -1;
        double best_area = 0;
        for (int k = 0; k < n; ++k) {
            if (k == i) continue;
            if (curve_contains(j.curves[k], j.curves[i])) {
                const double a = curve_area(j.curves[k]);
                if (best < 0 || a < best_area) {
                    best = k;
                    best_area = a;
                }
            }
        }
        t.parents[i] = best + 1;
    }
    return t;
}

namespace {

// quadtree search for the interior point farthest from the boundary
Vec2 deepest_interior_point(const PolyCurve& p) {
    struct Cell {
        Vec2 c;
        double half;
        double d;  // signed distance of the center
        double potential() const { return d + half * std::numbers::sqrt2; }
    };
    const BBox box = polygon_bbox(p.vertices());
    const double diag = box.diag();
    const double precision = 1e-9 * diag;
    const double tie = 1e-12 * diag;

    auto signed_dist = [&](Vec2 q) {
        const double d = dist_to_polygon(q, p);
        return point_in_polygon(q, p) ? d : -d;
    };

    auto cmp = [](const Cell& a, const Cell& b) { return a.potential() < b.potential(); };
    std::priority_queue<Cell, std::vector<Cell>, decltype(cmp)> queue(cmp);

    const double w = box.xmax - box.xmin, h = box.ymax - box.ymin;
    const double cell = std::min(w, h) / 2;
    for (double x = box.xmin; x < box.xmax; x += 2 * cell)
        for (double y = box.ymin; y < box.ymax; y += 2 * cell) {
            const Vec2 c{x + cell, y + cell};
            queue.push({c, cell, signed_dist(c)});
        }

    Vec2 best_pt = polygon_centroid(p);
    double best_d = signed_dist(best_pt);
    auto consider = [&](Vec2 q, double d) {
        if (d > best_d + tie) {
            best_d = d;
            best_pt = q;
        } else if (std::abs(d - best_d) <= tie &&
                   (q.x < best_pt.x || (q.x == best_pt.x && q.y < best_pt.y))) {
            best_pt = q;
        }
    };

    while (!queue.empty()) {
        const Cell top = queue.top();
        queue.pop();
        if (top.potential() - best_d <= precision) break;
        const double half = top.half / 2;
        for (int dx = -1; dx <= 1; dx += 2)
            for (int dy = -1; dy <= 1; dy += 2) {
                const Vec2 c{top.c.x + dx * half, top.c.y + dy * half};
                const Cell sub{c, half, signed_dist(c)};
                consider(c, sub.d);
                if (sub.potential() - best_d > precision) queue.push(sub);
            }
    }
    return best_pt;
}

}  // namespace

Vec2 curve_center(const Curve& c) {
    if (c.is_circle()) return c.circle_shape().center;
    const PolyCurve& p = c.poly();
    const Vec2 centroid = polygon_centroid(p);
    const double diag = polygon_bbox(p.vertices()).diag();
    if (point_in_polygon(centroid, p) && dist_to_polygon(centroid, p) > 1e-12 * diag)
        return centroid;
    return deepest_interior_point(p);
}

CurveMetrics curve_metrics(const Curve& c) {
    CurveMetrics m;
    m.center = curve_center(c);
    if (c.is_circle()) {
        m.inradius = m.outradius = c.circle_shape().radius;
        return m;
    }
    const auto& v = c.poly().vertices();
    const int n = static_cast<int>(v.size());
    m.inradius = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        m.inradius = std::min(m.inradius, point_segment_dist(m.center, v[i], v[(i + 1) % n]));
        m.outradius = std::max(m.outradius, dist(m.center, v[i]));
    }
    return m;
}

bool is_round(const Curve& c, double tol) {
    if (tol < 0) throw std::invalid_argument("is_round: tolerance must be nonnegative");
    if (c.is_circle()) return true;
    const CurveMetrics m = curve_metrics(c);
    return (m.outradius - m.inradius) / m.inradius <= tol;
}

std::vector<Vec2> resample_closed(const std::vector<Vec2>& v, int target) {
    const int n = static_cast<int>(v.size());
    if (n >= target) return v;
    double perim = 0;
    for (int i = 0; i < n; ++i) perim += dist(v[i], v[(i + 1) % n]);
    std::vector<Vec2> out;
    out.reserve(target + n);
    for (int i = 0; i < n; ++i) {
        const Vec2 a = v[i], b = v[(i + 1) % n];
        const double len = dist(a, b);
        const int pieces = std::max(1, static_cast<int>(std::lround(target * len / perim)));
        for (int k = 0; k < pieces; ++k)
            out.push_back(a + (static_cast<double>(k) / pieces) * (b - a));
    }
    return out;
}

namespace {

struct StageState {
    // exactly one representation is live per curve
    std::optional<CircleShape> circle;        // set once the curve has contracted
    std::optional<std::vector<Vec2>> verts;   // polygon vertices (may coexist
                                              // with circle for round inputs)
};

void apply_homothety(StageState& s, Vec2 center, double lambda) {
    if (s.circle) {
        s.circle->center = center + lambda * (s.circle->center - center);
        s.circle->radius *= lambda;
    }
    if (s.verts)
        for (Vec2& v : *s.verts) v = center + lambda * (v - center);
}

}  // namespace

JordanConfiguration convex_retract_frame(const JordanConfiguration& j, double t) {
    if (t < 0 || t > 1)
        throw std::invalid_argument("convex_retract_frame: t must lie in [0, 1]");
    const CurveValidation val = validate_curves(j);
    if (!val.ok())
        throw std::invalid_argument("convex_retract_frame: configuration is not valid");
    const int n = j.size();
    for (int i = 0; i < n; ++i)
        if (!j.curves[i].is_circle() && !polygon_is_convex(j.curves[i].poly()))
            throw std::invalid_argument("convex_retract_frame: curve " + std::to_string(i + 1) +
                                        " is not convex");

    const RootedTree tree = curve_nesting_tree(j);
    const DepthIndex depth = depth_index(tree);
    const int stages = depth.dmax + 1;

    // metrics of each curve in its input position; a curve never moves
    // before its own stage, so these stay valid until then
    std::vector<CurveMetrics> metrics(n);
    for (int i = 0; i < n; ++i) metrics[i] = curve_metrics(j.curves[i]);

    std::vector<StageState> state(n);
    for (int i = 0; i < n; ++i) {
        if (j.curves[i].is_circle()) {
            state[i].circle = j.curves[i].circle_shape();
            state[i].verts = j.curves[i].poly().vertices();
        } else {
            state[i].verts = j.curves[i].poly().vertices();
        }
    }

    std::vector<std::vector<int>> descendants(n);
    for (int i = 1; i <= n; ++i) {
        int v = tree.parents[i - 1];
        while (v != 0) {
            descendants[v - 1].push_back(i - 1);
            v = tree.parents[v - 1];
        }
    }

    // stage k (1-based execution order) handles depth dmax - k + 1
    const double scaled = t * stages;
    const int completed = std::min(stages, static_cast<int>(std::floor(scaled)));
    const double local = scaled - completed;  // only meaningful when completed < stages

    auto run_stage = [&](int active_depth, double u) {
        for (int i = 0; i < n; ++i) {
            if (depth.depths[i] != active_depth) continue;
            const Vec2 c = metrics[i].center;
            const double r = metrics[i].inradius, R = metrics[i].outradius;
            if (!state[i].circle) {
                if (u >= 1) {
                    // project the vertices onto the circle rather than
                    // re-discretizing it, so the parametrization survives the
                    // snap: frames stay continuous across stage boundaries and
                    // transform exactly like the input under similarities
                    std::vector<Vec2> snapped =
                        resample_closed(*state[i].verts, kConvexFrameResolution);
                    for (Vec2& v : snapped) {
                        const Vec2 d = v - c;
                        v = c + (r / norm(d)) * d;
                    }
                    state[i].circle = CircleShape{c, r};
                    state[i].verts = std::move(snapped);
                } else {
                    // radial interpolation toward the inscribed circle
                    std::vector<Vec2> moved = resample_closed(*state[i].verts, kConvexFrameResolution);
                    for (Vec2& v : moved) {
                        const Vec2 d = v - c;
                        v = c + ((1 - u) + u * r / norm(d)) * d;
                    }
                    state[i].verts = std::move(moved);
                }
            }
            // followers ride the homothety of the active curve; for a curve
            // that is already a circle R == r and nothing moves
            const double lambda = 1 - u * (R - r) / R;
            if (lambda != 1)
                for (int q : descendants[i]) apply_homothety(state[q], c, lambda);
        }
    };

    for (int k = 1; k <= completed; ++k) run_stage(depth.dmax - k + 1, 1.0);
    if (completed < stages && local > 0) run_stage(depth.dmax - completed, local);

    JordanConfiguration out;
    out.curves.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (state[i].circle && state[i].verts)
            out.curves.push_back(Curve::circle_with_vertices(*state[i].circle, *state[i].verts));
        else if (state[i].circle)
            out.curves.push_back(Curve::circle(*state[i].circle));
        else
            out.curves.push_back(Curve::polygon(PolyCurve(*state[i].verts)));
    }
    return out;
}

}  // namespace jck
