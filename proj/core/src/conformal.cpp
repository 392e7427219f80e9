#include "jck/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace jck {

namespace {

using Cx = std::complex<double>;

Cx to_cx(Vec2 v) { return {v.x, v.y}; }
Vec2 to_vec(Cx z) { return {z.real(), z.imag()}; }

// square root with the branch cut along the positive reals, mapping the
// slit plane onto the upper half plane
Cx sqrt_upper(Cx z) {
    double a = std::arg(z);
    if (a < 0) a += 2 * std::numbers::pi;
    return std::polar(std::sqrt(std::abs(z)), a / 2);
}

// Values in the chains live in the closed upper half plane; an imaginary
// part below zero is roundoff drift and gets clamped back to +0.0 so the
// square roots cannot jump to the reflected sheet.
Cx clamp_upper(Cx z) {
    if (!(z.imag() > 0)) return {z.real(), 0.0};
    return z;
}

double polyline_distance(Vec2 q, const std::vector<Vec2>& pts) {
    double best = std::numeric_limits<double>::infinity();
    const int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i) {
        const Vec2 a = pts[i], b = pts[(i + 1) % n];
        const Vec2 ab = b - a;
        const double len2 = dot(ab, ab);
        double t = len2 > 0 ? std::clamp(dot(q - a, ab) / len2, 0.0, 1.0) : 0.0;
        best = std::min(best, dist(q, a + t * ab));
    }
    return best;
}

}  // namespace

DiskMap::DiskMap(const PolyCurve& domain, Vec2 center, double boundary_tol)
    : domain_(domain.vertices()), center_(center) {
    if (!polygon_is_simple(domain))
        throw std::invalid_argument("DiskMap: domain curve is not simple");
    if (!point_in_polygon(center, domain))
        throw std::invalid_argument("DiskMap: center is not interior to the domain");
    double dmax = 0;
    for (const Vec2& a : domain_)
        for (const Vec2& b : domain_) dmax = std::max(dmax, dist(a, b));
    diameter_ = dmax;
    build(boundary_tol);
}

// One slit-closing step of the forward chain.  Points on the real axis
// must stay real with their side preserved; the copysign path also dodges
// the signed-zero trap of squaring a negative real.
Cx DiskMap::zip_forward(Cx w, const Zip& s) {
    if (s.moebius) w = clamp_upper(w / (1.0 - w / s.p));
    if (w.imag() == 0)
        return {std::copysign(std::sqrt(w.real() * w.real() + s.h * s.h), w.real()), 0.0};
    return sqrt_upper(w * w + s.h * s.h);
}

// Inverse of zip_forward; real inputs inside (-h, h) come back onto the
// vertical slit.
Cx DiskMap::zip_backward(Cx u, const Zip& s) {
    u = clamp_upper(u);
    Cx v;
    if (u.imag() == 0) {
        const double x = u.real();
        if (std::abs(x) <= s.h)
            v = {0.0, std::sqrt(s.h * s.h - x * x)};
        else
            v = {std::copysign(std::sqrt(x * x - s.h * s.h), x), 0.0};
    } else {
        v = std::sqrt(u - s.h) * std::sqrt(u + s.h);
    }
    if (s.moebius) v = v / (1.0 + v / s.p);
    return v;
}

// zip_forward restricted to the welded (real) part of the boundary, with
// the base point's trip through infinity handled projectively
double DiskMap::real_zip_forward(double x, const Zip& s) {
    if (s.moebius) {
        if (std::isinf(x)) {
            x = -s.p;
        } else {
            const double den = 1 - x / s.p;
            x = den == 0 ? std::numeric_limits<double>::infinity() : x / den;
        }
    }
    if (std::isinf(x)) return x;
    return std::copysign(std::sqrt(x * x + s.h * s.h), x);
}

Cx DiskMap::chain_forward(Cx z) const {
    Cx w = clamp_upper(Cx(0, 1) * std::sqrt((z - z1_) / (z - z0_)));
    for (const Zip& s : zips_) w = zip_forward(w, s);
    w = clamp_upper(w / (1.0 - w / rho_));
    if (flip_) w *= Cx(0, -1);
    return w * w;
}

Cx DiskMap::chain_backward(Cx w) const {
    Cx u = std::sqrt(clamp_upper(w));  // closed half plane -> quadrant
    if (flip_) u *= Cx(0, 1);
    u = u / (1.0 + u / rho_);
    for (auto it = zips_.rbegin(); it != zips_.rend(); ++it) u = zip_backward(u, *it);
    const Cx ratio = -(u * u);
    return (z1_ - ratio * z0_) / (1.0 - ratio);
}

void DiskMap::build(double boundary_tol) {
    const int nverts = static_cast<int>(domain_.size());
    int target = std::max(128, 2 * nverts);
    const int max_target = 4096;

    for (;;) {
        data_ = resample_closed(domain_, target);
        const int n = static_cast<int>(data_.size());
        z0_ = to_cx(data_[0]);
        z1_ = to_cx(data_[1]);
        zips_.clear();
        zips_.reserve(n - 2);

        auto partial = [&](Cx z) {
            Cx w = clamp_upper(Cx(0, 1) * std::sqrt((z - z1_) / (z - z0_)));
            for (const Zip& s : zips_) w = zip_forward(w, s);
            return w;
        };

        // Running real-axis images of the data points.  Welding doubles
        // every boundary point, so when point k-1 unfolds at the base of
        // slit k we keep both bank candidates and pick the interior one
        // after the closing, where the two banks land on opposite rays.
        const double inf = std::numeric_limits<double>::infinity();
        std::vector<double> xa(n, 0.0), xb(n, 0.0);
        xa[0] = xb[0] = inf;

        for (int k = 2; k < n; ++k) {
            Cx w = partial(to_cx(data_[k]));
            if (!(w.imag() > 0)) w = {w.real(), 1e-14 * (1 + std::abs(w))};
            Zip s;
            if (std::abs(w.real()) <= 1e-12 * std::abs(w)) {
                s.moebius = false;
                s.h = std::abs(w);
            } else {
                s.moebius = true;
                s.p = std::norm(w) / w.real();
                const Cx mu = w / (1.0 - w / s.p);
                s.h = mu.imag() > 0 ? mu.imag() : std::abs(mu);
            }
            for (int j = 0; j < k; ++j) {
                if (j == k - 1) {
                    xa[j] = s.h;
                    xb[j] = -s.h;
                } else {
                    xa[j] = real_zip_forward(xa[j], s);
                    xb[j] = real_zip_forward(xb[j], s);
                }
            }
            zips_.push_back(s);
        }

        rho_ = xa[0];
        if (!std::isfinite(rho_))
            throw NumericalError("DiskMap: closing point stayed at infinity");
        if (rho_ == 0) throw NumericalError("DiskMap: closing crosscut collapsed");

        // orientation of the final square: probe with the center
        const Cx wc = partial(to_cx(center_));
        const Cx mc = wc / (1.0 - wc / rho_);
        flip_ = mc.real() < 0;
        const Cx qc = flip_ ? mc * Cx(0, -1) : mc;
        q_ = qc * qc;
        if (!(q_.imag() > 0))
            throw NumericalError("DiskMap: center image left the half plane");

        // derivative at the disk origin (Richardson-improved central
        // difference), fixing the rotation and the roundoff offset at 0
        auto unrotated = [&](Cx zeta) {
            const Cx xx = (q_ - std::conj(q_) * zeta) / (1.0 - zeta);
            return chain_backward(xx);
        };
        const double h = 1e-5;
        const Cx d1 = (unrotated({h, 0}) - unrotated({-h, 0})) / (2 * h);
        const Cx d2 = (unrotated({h / 2, 0}) - unrotated({-h / 2, 0})) / h;
        const Cx d = (4.0 * d2 - d1) / 3.0;
        if (std::abs(d) == 0) throw NumericalError("DiskMap: vanishing derivative at the center");
        theta_ = -std::arg(d);
        deriv_ = std::abs(d);
        defect_ = {0, 0};
        defect_ = to_cx(center_) - eval({0, 0});

        // boundary accuracy, measured where it can actually fail: every
        // data point must be recovered from its tracked prevertex, and the
        // welds between consecutive prevertices must hug the polygon.
        // (Uniform circle sampling would miss badly crowded regions.)
        const PolyCurve domain_poly(domain_);
        double err_data = 0, err_mid = 0;
#ifdef JCK_DISKMAP_TRACE
        Vec2 worst_data{0, 0}, worst_mid{0, 0};
#endif
        auto closing_real = [&](double x) {
            if (!std::isfinite(x)) return -rho_;
            const double den = 1 - x / rho_;
            return den == 0 ? std::numeric_limits<double>::infinity() : x / den;
        };
        std::vector<double> angles(n);
        for (int k = 0; k < n; ++k) {
            double x;
            if (k == 0) {
                x = inf;  // the base point is the pole of the closing map
            } else {
                const double ma = closing_real(xa[k]);
                const double mb = closing_real(xb[k]);
                const bool want_a = flip_ ? ma < 0 : ma > 0;
                const bool want_b = flip_ ? mb < 0 : mb > 0;
                x = (want_a || !want_b) ? ma : mb;
            }
            double hat;  // position on the boundary of the half plane
            if (std::isinf(x))
                hat = std::numeric_limits<double>::infinity();
            else
                hat = flip_ ? -(x * x) : x * x;
            const Cx tq = std::isinf(hat)
                              ? Cx(1, 0)
                              : (Cx(hat, 0) - q_) / (Cx(hat, 0) - std::conj(q_));
            angles[k] = std::arg(tq) - theta_;
            if (k > 0 && std::isfinite(hat)) {
                const Cx back = chain_backward({hat, 0.0}) + defect_;
                const double d = dist(to_vec(back), data_[k]);
#ifdef JCK_DISKMAP_TRACE
                if (d > err_data) worst_data = data_[k];
#endif
                err_data = std::max(err_data, d);
            }
        }
        std::sort(angles.begin(), angles.end());
        for (int k = 0; k < n; ++k) {
            const double a = angles[k];
            const double b = k + 1 < n ? angles[k + 1] : angles[0] + 2 * std::numbers::pi;
            const Cx mid = eval(std::polar(1.0, 0.5 * (a + b)));
            if (std::isfinite(mid.real()) && std::isfinite(mid.imag())) {
                const double d = dist_to_polygon(to_vec(mid), domain_poly);
#ifdef JCK_DISKMAP_TRACE
                if (d > err_mid) worst_mid = to_vec(mid);
#endif
                err_mid = std::max(err_mid, d);
            }
        }
        boundary_error_ = std::max(err_data, err_mid) / diameter_;
#ifdef JCK_DISKMAP_TRACE
        std::fprintf(stderr,
                     "[diskmap] n=%d data=%.3g at (%.4f,%.4f)  mid=%.3g at (%.4f,%.4f)\n", n,
                     err_data / diameter_, worst_data.x, worst_data.y, err_mid / diameter_,
                     worst_mid.x, worst_mid.y);
#endif
        if (boundary_error_ <= boundary_tol) return;
        if (target >= max_target)
            throw NumericalError("DiskMap: boundary accuracy not reached at max refinement");
        target *= 2;
    }
}

Cx DiskMap::eval(Cx z) const {
    const Cx w = std::polar(1.0, theta_) * z;
    const Cx x = (q_ - std::conj(q_) * w) / (1.0 - w);
    return chain_backward(x) + defect_;
}

Cx DiskMap::map_forward(Cx z) const {
    if (std::abs(z) > 1 - kEdgeGuard)
        throw std::invalid_argument("map_forward: point outside the guarded disk");
    return eval(z);
}

Cx DiskMap::map_inverse(Cx w) const {
    const Cx x = chain_forward(w - defect_);
    if (!(x.imag() > 0))
        throw NumericalError("map_inverse: point maps outside the half plane");
    const Cx zeta = (x - q_) / (x - std::conj(q_));
    return std::polar(1.0, -theta_) * zeta;
}

Cx shrink_phi(double y, double s, Cx z) {
    if (y < 0 || y >= 1) throw std::invalid_argument("shrink_phi: y must lie in [0, 1)");
    if (s < 0 || s > 1) throw std::invalid_argument("shrink_phi: s must lie in [0, 1]");
    return (1 - y * s) * z;
}

Cx rounding_h(const DiskMap& m, double y, double t, Cx z) {
    if (t < 0 || t > 1) throw std::invalid_argument("rounding_h: t must lie in [0, 1]");
    const Cx c = to_cx(m.center());
    if (t <= kRoundingTimeTol) return c + (1 - y) * m.derivative_at_center() * z;
    return c + (m.eval(t * (1 - y) * z) - c) / t;
}

namespace {

// sampled sup over the rounding family of the distance to the center; may
// stop early once the sup provably exceeds the cutoff (pass 0 to disable)
double sup_radius(const DiskMap& m, double y, double cutoff) {
    constexpr int kTimeGrid = 33;
    constexpr int kDirections = 96;
    const Cx c = to_cx(m.center());
    double best = (1 - y) * m.derivative_at_center();  // t -> 0 limit
    for (int i = kTimeGrid - 1; i >= 1; --i) {
        const double t = static_cast<double>(i) / (kTimeGrid - 1);
        for (int jdir = 0; jdir < kDirections; ++jdir) {
            const Cx z = std::polar(1.0, 2 * std::numbers::pi * jdir / kDirections);
            const double rr = std::abs(m.eval(t * (1 - y) * z) - c) / t;
            best = std::max(best, rr);
        }
        if (cutoff > 0 && best > cutoff) return best;
    }
    return best;
}

}  // namespace

ShrinkSolution solve_shrink_parameter(const DiskMap& m, double target_radius, double rel_tol,
                                      int max_iter) {
    if (target_radius <= 0)
        throw std::invalid_argument("solve_shrink_parameter: target radius must be positive");
    const double cutoff = target_radius * (1 + rel_tol);
    ShrinkSolution sol;
    double lo = 0, hi = 1 - 1e-9;
    double val = sup_radius(m, 0, cutoff);
    if (val <= cutoff) {
        sol.achieved = val;
        return sol;  // already at or below the target: no shrinking needed
    }
    while (sol.iterations < max_iter) {
        const double y = 0.5 * (lo + hi);
        val = sup_radius(m, y, cutoff);
        ++sol.iterations;
        sol.y = y;
        sol.achieved = val;
        if (std::abs(val - target_radius) <= rel_tol * target_radius) return sol;
        if (val > target_radius)
            lo = y;
        else
            hi = y;
        if (hi - lo < 1e-15) break;
    }
    throw NumericalError("solve_shrink_parameter: bisection did not converge");
}

RetractResult conformal_retract(const JordanConfiguration& j, int frames_per_stage) {
    if (frames_per_stage < 1)
        throw std::invalid_argument("conformal_retract: need at least one frame per stage");
    if (!validate_curves(j).ok())
        throw std::invalid_argument("conformal_retract: configuration is not valid");

    const RootedTree tree = curve_nesting_tree(j);
    const DepthIndex depth = depth_index(tree);
    const int n = j.size();

    std::vector<std::vector<int>> descendants(n);
    for (int i = 1; i <= n; ++i) {
        int v = tree.parents[i - 1];
        while (v != 0) {
            descendants[v - 1].push_back(i - 1);
            v = tree.parents[v - 1];
        }
    }

    RetractResult out;
    out.frames.push_back(j);
    std::vector<Curve> current = j.curves;

    const int res = kConformalResolution;
    std::vector<Cx> unit(res);
    for (int k = 0; k < res; ++k) unit[k] = std::polar(1.0, 2 * std::numbers::pi * k / res);

    struct Motion {
        int idx;
        DiskMap map;
        double y;
        Vec2 c;
        std::vector<Cx> boundary_pre;                         // unit circle samples
        std::vector<std::pair<int, std::vector<Cx>>> follow;  // curve -> preimages
    };

    for (int stage = 0; stage <= depth.dmax; ++stage) {
        StageDiagnostics diag;
        diag.stage = stage;
        std::vector<Motion> motions;

        for (int i = 0; i < n; ++i) {
            if (depth.depths[i] != stage) continue;
            diag.active.push_back(i + 1);
            if (current[i].is_circle()) {
                // a circle is a fixed point of the whole stage, and its
                // disk map is linear, so the nested curves stay put too
                diag.y[i + 1] = 0;
                diag.map_error[i + 1] = 0;
                continue;
            }
            const Vec2 c = curve_center(current[i]);
            DiskMap map(current[i].poly(), c);
            const double r = curve_metrics(current[i]).inradius;
            ShrinkSolution sol;
            try {
                sol = solve_shrink_parameter(map, r);
            } catch (const NumericalError& e) {
                throw NumericalError("curve " + std::to_string(i + 1) + ": " + e.what());
            }
            diag.y[i + 1] = sol.y;
            diag.map_error[i + 1] = map.boundary_error();

            Motion mo{i, std::move(map), sol.y, c, unit, {}};
            for (int q : descendants[i]) {
                const std::vector<Vec2> verts =
                    resample_closed(current[q].poly().vertices(), res);
                std::vector<Cx> pre;
                pre.reserve(verts.size());
                for (const Vec2& v : verts) {
                    try {
                        pre.push_back(mo.map.map_inverse(to_cx(v)));
                    } catch (const NumericalError& e) {
                        throw NumericalError("curve " + std::to_string(q + 1) + ": " + e.what());
                    }
                }
                mo.follow.emplace_back(q, std::move(pre));
            }
            motions.push_back(std::move(mo));
        }

        for (int f = 1; f <= frames_per_stage; ++f) {
            const double tau = static_cast<double>(f) / frames_per_stage;
            JordanConfiguration frame;
            frame.curves = current;
            for (const Motion& mo : motions) {
                auto place = [&](const std::vector<Cx>& pre) {
                    std::vector<Vec2> verts;
                    verts.reserve(pre.size());
                    if (tau <= 0.5) {
                        const double factor = 1 - mo.y * (2 * tau);
                        for (Cx z : pre) verts.push_back(to_vec(mo.map.eval(factor * z)));
                    } else {
                        const double th = 2 - 2 * tau;
                        for (Cx z : pre)
                            verts.push_back(to_vec(rounding_h(mo.map, mo.y, th, z)));
                    }
                    return verts;
                };
                if (tau >= 1) {
                    const double radius = (1 - mo.y) * mo.map.derivative_at_center();
                    frame.curves[mo.idx] = Curve::circle({mo.c, radius}, res);
                    for (const auto& [q, pre] : mo.follow) {
                        std::vector<Vec2> verts;
                        verts.reserve(pre.size());
                        for (Cx z : pre)
                            verts.push_back(to_vec(to_cx(mo.c) + radius * z));
                        frame.curves[q] = Curve::polygon(PolyCurve(std::move(verts)));
                    }
                } else {
                    frame.curves[mo.idx] = Curve::polygon(PolyCurve(place(mo.boundary_pre)));
                    for (const auto& [q, pre] : mo.follow)
                        frame.curves[q] = Curve::polygon(PolyCurve(place(pre)));
                }
            }
            if (f == frames_per_stage) current = frame.curves;
            out.frames.push_back(std::move(frame));
        }
        out.diagnostics.push_back(std::move(diag));
    }

    // inward contraction tail; on the circles produced above it is
    // stationary and simply absorbs any residue of the representation
    JordanConfiguration end;
    end.curves = current;
    for (int f = 1; f <= frames_per_stage; ++f)
        out.frames.push_back(convex_retract_frame(end, static_cast<double>(f) / frames_per_stage));
    return out;
}

}  // namespace jck
