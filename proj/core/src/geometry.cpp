#include "jck/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jck {

PairClass classify_pair(const Circle& a, const Circle& b, double eps) {
    if (a.r <= 0 || b.r <= 0)
        throw std::invalid_argument("classify_pair: radii must be positive");
    const double dx = a.x - b.x, dy = a.y - b.y;
    const double d2 = dx * dx + dy * dy;
    const double sum2 = (a.r + b.r) * (a.r + b.r);
    const double diff2 = (a.r - b.r) * (a.r - b.r);
    const double margin = eps * std::max(sum2, d2);
    if (diff2 - d2 > margin)
        return a.r < b.r ? PairClass::NestedFirstInSecond : PairClass::NestedSecondInFirst;
    if (sum2 - d2 < -margin) return PairClass::Separate;
    return PairClass::Intersecting;
}

CircleValidation validate_configuration(const CircleConfiguration& c, double eps) {
    CircleValidation v;
    const int n = c.size();
    for (int i = 0; i < n; ++i)
        if (c.circles[i].r <= 0) v.bad_radius.push_back(i + 1);
    for (int i = 0; i < n; ++i) {
        if (c.circles[i].r <= 0) continue;
        for (int j = i + 1; j < n; ++j) {
            if (c.circles[j].r <= 0) continue;
            if (classify_pair(c.circles[i], c.circles[j], eps) == PairClass::Intersecting)
                v.intersecting.emplace_back(i + 1, j + 1);
        }
    }
    return v;
}

RootedTree circle_nesting_tree(const CircleConfiguration& c, double eps) {
    if (!validate_configuration(c, eps).ok())
        throw std::invalid_argument("circle_nesting_tree: configuration is not valid");
    const int n = c.size();
    RootedTree t;
    t.parents.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        int best = -1;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            if (classify_pair(c.circles[i], c.circles[j], eps) == PairClass::NestedFirstInSecond) {
                if (best < 0 || c.circles[j].r < c.circles[best].r) best = j;
            }
        }
        t.parents[i] = best + 1;  // -1 -> 0 (root)
    }
    return t;
}

RootedTree planar_child_order(const CircleConfiguration& c, const RootedTree& t) {
    validate_tree(t);
    if (t.size() != c.size())
        throw std::invalid_argument("planar_child_order: tree and configuration sizes differ");
    RootedTree out = t;
    out.child_order.assign(t.size() + 1, {});
    for (int v = 0; v <= t.size(); ++v) {
        std::vector<int> kids = tree_children(t, v);
        std::sort(kids.begin(), kids.end(), [&](int a, int b) {
            const Circle& ca = c.circles[a - 1];
            const Circle& cb = c.circles[b - 1];
            if (ca.x != cb.x) return ca.x < cb.x;
            if (ca.y != cb.y) return ca.y < cb.y;
            return a < b;
        });
        out.child_order[v] = kids;
    }
    return out;
}

}  // namespace jck
