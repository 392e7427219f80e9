#pragma once

#include <utility>
#include <vector>

#include "jck/trees.hpp"

namespace jck {

struct Circle {
    double x = 0, y = 0, r = 0;
};

struct CircleConfiguration {
    std::vector<Circle> circles;  // labels are 1-based positions
    int size() const { return static_cast<int>(circles.size()); }
};

enum class PairClass {
    NestedFirstInSecond,
    NestedSecondInFirst,
    Separate,
    Intersecting,
};

// Strictness margin for the pair predicates, relative to the squared length
// scale of the pair.  Anything within the margin of tangency counts as
// intersecting.
inline constexpr double kPairEps = 1e-12;

// Decides the mutual position of two circles from the signs of
// (r1 - r2)^2 - d^2 and (r1 + r2)^2 - d^2.  Requires positive radii.
PairClass classify_pair(const Circle& a, const Circle& b, double eps = kPairEps);

struct CircleValidation {
    std::vector<int> bad_radius;                    // labels with r <= 0
    std::vector<std::pair<int, int>> intersecting;  // label pairs, i < j
    bool ok() const { return bad_radius.empty() && intersecting.empty(); }
};

CircleValidation validate_configuration(const CircleConfiguration& c, double eps = kPairEps);

// Nesting forest of a valid configuration: parent of circle i is the
// smallest circle properly containing it, or the root if none does.
// Throws std::invalid_argument on invalid configurations.
RootedTree circle_nesting_tree(const CircleConfiguration& c, double eps = kPairEps);

// Same tree with every child list ordered by (x, y) of the child centers.
RootedTree planar_child_order(const CircleConfiguration& c, const RootedTree& t);

}  // namespace jck
