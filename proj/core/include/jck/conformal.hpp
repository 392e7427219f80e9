#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

#include "jck/curves.hpp"

namespace jck {

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Riemann map of the unit disk onto the interior of a Jordan polygon,
// built as a composition of elementary slit maps that straighten the
// boundary one sample at a time.  Normalized so the prescribed center is
// the image of 0 exactly and the derivative at 0 is a positive real.
class DiskMap {
  public:
    // Guard band for forward evaluation and default boundary accuracy,
    // relative to the domain diameter.
    static constexpr double kEdgeGuard = 1e-9;
    static constexpr double kBoundaryTol = 1e-3;

    DiskMap(const PolyCurve& domain, Vec2 center, double boundary_tol = kBoundaryTol);

    Vec2 center() const { return center_; }
    double derivative_at_center() const { return deriv_; }
    double boundary_error() const { return boundary_error_; }  // relative to diameter
    double diameter() const { return diameter_; }
    int data_points() const { return static_cast<int>(data_.size()); }

    // z in the closed unit disk; throws outside |z| <= 1 - kEdgeGuard
    std::complex<double> map_forward(std::complex<double> z) const;
    // w strictly inside the domain
    std::complex<double> map_inverse(std::complex<double> w) const;

    // evaluation without the guard band, defined on the closed disk;
    // retraction frames sample the boundary through this
    std::complex<double> eval(std::complex<double> z) const;

  private:
    struct Zip {
        bool moebius = false;  // false when the slit is already vertical
        double p = 0;
        double h = 0;
    };

    void build(double boundary_tol);
    static std::complex<double> zip_forward(std::complex<double> w, const Zip& s);
    static std::complex<double> zip_backward(std::complex<double> u, const Zip& s);
    static double real_zip_forward(double x, const Zip& s);
    std::complex<double> chain_forward(std::complex<double> z) const;
    std::complex<double> chain_backward(std::complex<double> w) const;

    std::vector<Vec2> domain_;       // polygon vertices (CCW)
    std::vector<Vec2> data_;         // boundary samples used for the build
    Vec2 center_;
    std::complex<double> z0_, z1_;   // initial slit endpoints
    std::vector<Zip> zips_;
    double rho_ = 0;                 // closing crosscut endpoint on the real axis
    bool flip_ = false;              // interior lands in the left quadrant
    std::complex<double> q_{0, 1};   // image of the center in the half plane
    double theta_ = 0;               // rotation making the derivative positive
    std::complex<double> defect_{0, 0};
    double deriv_ = 0;
    double diameter_ = 0;
    double boundary_error_ = 0;
};

// (1 - y s) z, the radial shrink family
std::complex<double> shrink_phi(double y, double s, std::complex<double> z);

// Switch point below which the rounding family uses its linear limit.
inline constexpr double kRoundingTimeTol = 1e-4;

// c + (gamma(t (1-y) z) - c) / t, with the linear branch
// c + (1-y) gamma'(0) z once t <= kRoundingTimeTol.
std::complex<double> rounding_h(const DiskMap& m, double y, double t, std::complex<double> z);

struct ShrinkSolution {
    double y = 0;
    double achieved = 0;  // sup radius at the solution
    int iterations = 0;
};

// Finds y with sup_{t in [0,1], |z|<=1} |rounding_h(t, z) - c| equal to the
// target radius.  The sup is sampled on a 33-point t grid and a fixed set
// of boundary directions; the sup is decreasing in y, so bisection applies.
ShrinkSolution solve_shrink_parameter(const DiskMap& m, double target_radius,
                                      double rel_tol = 1e-6, int max_iter = 200);

struct StageDiagnostics {
    int stage = 0;
    std::vector<int> active;            // 1-based curve labels
    std::map<int, double> y;            // per active label
    std::map<int, double> map_error;    // relative boundary error per label
};

struct RetractResult {
    std::vector<JordanConfiguration> frames;
    std::vector<StageDiagnostics> diagnostics;
};

// Vertex budget for follower curves and for sampled boundary images.
inline constexpr int kConformalResolution = 128;

// Full rounding pipeline: one stage per nesting depth, shallowest first;
// each stage shrinks its active curves radially in disk coordinates, then
// hands off to the rounding family, carrying every nested curve along.
// Ends with the inward contraction stage on the resulting circles.
RetractResult conformal_retract(const JordanConfiguration& j, int frames_per_stage = 33);

}  // namespace jck
