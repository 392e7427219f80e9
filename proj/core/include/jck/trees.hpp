#pragma once

#include <string>
#include <vector>

namespace jck {

// Rooted tree on vertices 1..n plus an implicit root 0.  parents[i-1] is the
// parent of vertex i; value 0 means the root.  The labeled flag switches
// isomorphism checks between parent-map equality and shape equality.
struct RootedTree {
    std::vector<int> parents;
    bool labeled = true;

    // Optional planar embedding: children[v] lists the children of vertex v
    // (index 0 is the root) in drawing order.  Empty means index order.
    std::vector<std::vector<int>> child_order;

    int size() const { return static_cast<int>(parents.size()); }
};

// Throws std::invalid_argument if the parent array has out-of-range entries
// or a cycle.
void validate_tree(const RootedTree& t);

// Children of vertex v (0 = root) in index order, or in the stored planar
// order when one is present.
std::vector<int> tree_children(const RootedTree& t, int v);

// Nested-parenthesis shape code with children sorted lexicographically at
// every vertex; equal codes iff the unlabeled trees are isomorphic.  The
// code of the whole tree includes the root, so a bare root is "()".
std::string canonical_code(const RootedTree& t);
std::string canonical_code_at(const RootedTree& t, int v);

// Parses a code produced by canonical_code back into a tree (vertices are
// numbered in preorder).  Throws on malformed input.
RootedTree tree_from_code(const std::string& code);

bool trees_isomorphic(const RootedTree& a, const RootedTree& b);

// All shape codes of rooted trees with exactly n non-root vertices, sorted.
// Guarded to 0 <= n <= 10.
std::vector<std::string> enumerate_trees(int n);

// Root children grouped by subtree shape.  Blocks hold child positions
// (1-based, in the order tree_children(t, 0) lists them) and are emitted in
// lexicographic order of the shared shape code.  On a labeled tree no two
// subtrees are equal, so the partition is discrete (singleton blocks in
// position order).
std::vector<std::vector<int>> child_partition(const RootedTree& t);

struct DepthIndex {
    std::vector<int> depths;  // depths[i-1] = proper non-root ancestors of i
    int dmax = 0;
};

DepthIndex depth_index(const RootedTree& t);

// Forgets everything below the root children: the result is a star whose
// leaves correspond to the root children of t.  labels[] maps each leaf
// (in order) back to the original vertex id.
struct RestrictedTree {
    RootedTree tree;
    std::vector<int> labels;
};

RestrictedTree restrict_to_root_children(const RootedTree& t);

}  // namespace jck
