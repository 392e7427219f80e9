#pragma once

#include <random>

#include "jck/geometry.hpp"
#include "jck/trees.hpp"

namespace jck {

// Uniformly random shape with n non-root vertices, drawn from the
// enumerated list.  Guarded to 1 <= n <= 10.
RootedTree random_tree(int n, std::mt19937_64& rng);

// Disjoint/nested circles whose nesting tree has exactly the parent map of
// t (vertex i becomes circle i).  Layout is a jittered ring packing, so the
// same tree yields different configurations for different rng states.
CircleConfiguration circles_for_tree(const RootedTree& t, std::mt19937_64& rng);

// Random tree plus a realization of it.
CircleConfiguration random_circle_configuration(int n, std::mt19937_64& rng);

}  // namespace jck
