#include "jck/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace jck {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

struct Layout {
    const RootedTree& t;
    std::mt19937_64& rng;
    std::vector<Circle>& out;

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    }

    // Places the children of v inside the disk (cx, cy, r) on a jittered
    // ring, then recurses.  Ring radius, child radius cap and jitter are
    // chosen so that siblings stay disjoint and inside the parent for any
    // draw (margins are fractions of r, far above the classifier epsilon).
    void place_children(int v, double cx, double cy, double r) {
        const std::vector<int> kids = tree_children(t, v);
        const int k = static_cast<int>(kids.size());
        if (k == 0) return;

        const double rho = (k <= 2 ? 0.5 : 0.62) * r;
        double rc = std::min(r / 3.2, 0.85 * (r - rho));
        if (k >= 2) rc = std::min(rc, 0.85 * rho * std::sin(kPi / k));

        double margin = (r - rho) - rc;
        if (k >= 2) margin = std::min(margin, 2.0 * rho * std::sin(kPi / k) - 2.0 * rc);
        const double jit = 0.3 * margin;

        const double angle0 = uniform(0.0, 2.0 * kPi);
        for (int i = 0; i < k; ++i) {
            const double a = angle0 + 2.0 * kPi * i / k;
            const double jr = jit * std::sqrt(uniform(0.0, 1.0));
            const double ja = uniform(0.0, 2.0 * kPi);
            const double x = cx + rho * std::cos(a) + jr * std::cos(ja);
            const double y = cy + rho * std::sin(a) + jr * std::sin(ja);
            const double cr = rc * uniform(0.72, 0.98);
            out[kids[i] - 1] = Circle{x, y, cr};
            place_children(kids[i], x, y, cr);
        }
    }
};

}  // namespace

RootedTree random_tree(int n, std::mt19937_64& rng) {
    if (n < 1 || n > 10) throw std::invalid_argument("random_tree: n out of range");
    const std::vector<std::string> codes = enumerate_trees(n);
    std::uniform_int_distribution<size_t> pick(0, codes.size() - 1);
    return tree_from_code(codes[pick(rng)]);
}

CircleConfiguration circles_for_tree(const RootedTree& t, std::mt19937_64& rng) {
    validate_tree(t);
    CircleConfiguration cfg;
    cfg.circles.resize(t.size());
    Layout layout{t, rng, cfg.circles};

    // Top-level circles sit on a jittered line; spacing 3.1 vs. max
    // diameter sum 2*0.98 keeps them strictly separate.
    const std::vector<int> roots = tree_children(t, 0);
    for (size_t i = 0; i < roots.size(); ++i) {
        const double x = 3.1 * static_cast<double>(i) + layout.uniform(-0.25, 0.25);
        const double y = layout.uniform(-0.25, 0.25);
        const double r = layout.uniform(0.72, 0.98);
        cfg.circles[roots[i] - 1] = Circle{x, y, r};
        layout.place_children(roots[i], x, y, r);
    }
    return cfg;
}

CircleConfiguration random_circle_configuration(int n, std::mt19937_64& rng) {
    return circles_for_tree(random_tree(n, rng), rng);
}

}  // namespace jck
