#include "jck/trees.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace jck {

void validate_tree(const RootedTree& t) {
    const int n = t.size();
    for (int i = 1; i <= n; ++i) {
        int p = t.parents[i - 1];
        if (p < 0 || p > n)
            throw std::invalid_argument("tree: parent out of range at vertex " + std::to_string(i));
        if (p == i)
            throw std::invalid_argument("tree: vertex " + std::to_string(i) + " is its own parent");
    }
    // walk each ancestor chain; a chain longer than n vertices means a cycle
    for (int i = 1; i <= n; ++i) {
        int v = i, steps = 0;
        while (v != 0) {
            v = t.parents[v - 1];
            if (++steps > n)
                throw std::invalid_argument("tree: cycle through vertex " + std::to_string(i));
        }
    }
    if (!t.child_order.empty()) {
        if (static_cast<int>(t.child_order.size()) != n + 1)
            throw std::invalid_argument("tree: child_order size mismatch");
        for (int v = 0; v <= n; ++v) {
            std::vector<int> expect;
            for (int i = 1; i <= n; ++i)
                if (t.parents[i - 1] == v) expect.push_back(i);
            std::vector<int> got = t.child_order[v];
            std::sort(got.begin(), got.end());
            if (got != expect)
                throw std::invalid_argument("tree: child_order is not a permutation of the children of " +
                                            std::to_string(v));
        }
    }
}

std::vector<int> tree_children(const RootedTree& t, int v) {
    if (!t.child_order.empty()) return t.child_order[v];
    std::vector<int> out;
    for (int i = 1; i <= t.size(); ++i)
        if (t.parents[i - 1] == v) out.push_back(i);
    return out;
}

std::string canonical_code_at(const RootedTree& t, int v) {
    std::vector<std::string> parts;
    for (int c : tree_children(t, v)) parts.push_back(canonical_code_at(t, c));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    out += ")";
    return out;
}

std::string canonical_code(const RootedTree& t) {
    validate_tree(t);
    return canonical_code_at(t, 0);
}

RootedTree tree_from_code(const std::string& code) {
    RootedTree t;
    t.labeled = false;
    // vertex ids in preorder; stack holds the id of the currently open vertex
    std::vector<int> stack;
    int next = 0;  // 0 is the root, assigned by the first '('
    for (char ch : code) {
        if (ch == '(') {
            int id = next++;
            if (!stack.empty())
                t.parents.push_back(stack.back());
            else if (id != 0)
                throw std::invalid_argument("tree code: more than one root");
            stack.push_back(id);
        } else if (ch == ')') {
            if (stack.empty()) throw std::invalid_argument("tree code: unbalanced ')'");
            stack.pop_back();
        } else {
            throw std::invalid_argument("tree code: unexpected character");
        }
    }
    if (!stack.empty() || next == 0) throw std::invalid_argument("tree code: unbalanced");
    return t;
}

bool trees_isomorphic(const RootedTree& a, const RootedTree& b) {
    validate_tree(a);
    validate_tree(b);
    if (a.labeled && b.labeled) return a.parents == b.parents;
    return canonical_code_at(a, 0) == canonical_code_at(b, 0);
}

namespace {

// Enumerates canonical codes directly: a code is canonical when the child
// codes at every vertex appear in non-decreasing lexicographic order, so
// generating forests part by part with a lexicographic floor yields every
// multiset exactly once and nothing else.
struct TreeEnumerator {
    std::vector<std::vector<std::string>> trees;  // trees[k]: k vertices, sorted

    explicit TreeEnumerator(int nmax) {
        trees.resize(nmax + 2);
        trees[1] = {"()"};
        for (int k = 2; k <= nmax + 1; ++k) {
            std::vector<std::string> out;
            for (const auto& f : forests(k - 1, ""))
                out.push_back("(" + f + ")");
            std::sort(out.begin(), out.end());
            trees[k] = out;
        }
    }

    // concatenated codes of tree multisets with n total vertices, parts in
    // non-decreasing order and bounded below by `floor`
    std::vector<std::string> forests(int n, const std::string& floor) {
        if (n == 0) return {""};
        std::vector<std::string> out;
        for (int s = 1; s <= n; ++s)
            for (const auto& head : trees[s]) {
                if (head < floor) continue;
                for (const auto& rest : forests(n - s, head))
                    out.push_back(head + rest);
            }
        return out;
    }
};

}  // namespace

std::vector<std::string> enumerate_trees(int n) {
    if (n < 0 || n > 10)
        throw std::invalid_argument("enumerate_trees: n must be in [0, 10]");
    TreeEnumerator e(n);
    std::vector<std::string> out = e.trees[n + 1];
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> child_partition(const RootedTree& t) {
    validate_tree(t);
    std::vector<int> kids = tree_children(t, 0);
    std::vector<std::vector<int>> out;
    if (t.labeled) {
        // labeled subtrees live on disjoint vertex sets, so no two are
        // equal and the partition is discrete
        for (int pos = 0; pos < static_cast<int>(kids.size()); ++pos) out.push_back({pos + 1});
        return out;
    }
    std::map<std::string, std::vector<int>> blocks;
    for (int pos = 0; pos < static_cast<int>(kids.size()); ++pos)
        blocks[canonical_code_at(t, kids[pos])].push_back(pos + 1);
    for (auto& [code, members] : blocks) out.push_back(members);
    return out;
}

DepthIndex depth_index(const RootedTree& t) {
    validate_tree(t);
    DepthIndex d;
    d.depths.resize(t.size());
    for (int i = 1; i <= t.size(); ++i) {
        int v = t.parents[i - 1], depth = 0;
        while (v != 0) {
            ++depth;
            v = t.parents[v - 1];
        }
        d.depths[i - 1] = depth;
        d.dmax = std::max(d.dmax, depth);
    }
    return d;
}

RestrictedTree restrict_to_root_children(const RootedTree& t) {
    validate_tree(t);
    RestrictedTree out;
    out.labels = tree_children(t, 0);
    out.tree.parents.assign(out.labels.size(), 0);
    out.tree.labeled = t.labeled;
    return out;
}

}  // namespace jck
