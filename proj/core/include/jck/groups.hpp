#pragma once

#include <memory>
#include <vector>

#include "jck/trees.hpp"

namespace jck {

// Permutation of {1..m}; images[i-1] is the image of i.
struct Permutation {
    std::vector<int> images;

    static Permutation identity(int m);
    int degree() const { return static_cast<int>(images.size()); }
    int apply(int i) const { return images[i - 1]; }
    bool is_identity() const;
};

Permutation compose(const Permutation& a, const Permutation& b);  // a after b
Permutation inverse(const Permutation& p);

// Word in the Artin generators of the braid group on `strands` strands.
// Letter +i is the i-th generator, -i its inverse, 1 <= i <= strands-1.
struct BraidWord {
    int strands = 0;
    std::vector<int> word;
};

void validate_braid(const BraidWord& b);

// Underlying strand permutation: generator i swaps positions i and i+1, and
// the word acts left to right (the first letter acts first).
Permutation braid_permutation(const BraidWord& b);

// Does the strand permutation preserve each block?
bool braid_in_block_subgroup(const BraidWord& b, const std::vector<std::vector<int>>& blocks);

inline constexpr long kHandleBudget = 2'000'000;

// Word problem solver via handle reduction.  Throws ReductionBudget (see
// below) when the rewrite budget runs out rather than guessing.
struct ReductionBudget : std::exception {
    const char* what() const noexcept override { return "handle reduction budget exceeded"; }
};

bool braid_is_trivial(const BraidWord& b, long budget = kHandleBudget);

BraidWord braid_concat(const BraidWord& a, const BraidWord& b);
BraidWord braid_inverse_word(const BraidWord& a);

// Automorphism of a rooted tree: bijection of the non-root vertices
// preserving the parent relation.  images[i-1] is the image of vertex i.
struct TreeAutomorphism {
    std::vector<int> images;
    bool is_identity() const;
};

// |Aut(T)| for the unlabeled shape of t.
unsigned long long aut_order(const RootedTree& t);

// Element of the braided automorphism group of a rooted tree: a braid on
// the root children whose permutation preserves the shape blocks, plus one
// element per child subtree, recursively.  Sibling subtrees sharing a block
// must be structurally identical (same parent layout in traversal order);
// that makes componentwise composition across permuted positions well
// defined, and trees violating it are rejected at construction.
class BAutElement {
  public:
    // identity element rooted at `vertex` (0 = whole tree)
    static BAutElement identity(std::shared_ptr<const RootedTree> t, int vertex = 0);
    // element with the given braid at `vertex` and the given child elements,
    // which must be rooted at the children of `vertex` in order
    static BAutElement node(std::shared_ptr<const RootedTree> t, int vertex, BraidWord braid,
                            std::vector<BAutElement> children);

    const RootedTree& tree() const { return *tree_; }
    std::shared_ptr<const RootedTree> tree_ptr() const { return tree_; }
    // representative vertex whose subtree shape this node acts on; elements
    // produced by compose/inverse may carry a sibling of the original
    int vertex() const { return vertex_; }
    const BraidWord& braid() const { return braid_; }
    const std::vector<BAutElement>& children() const { return kids_; }

  private:
    BAutElement(std::shared_ptr<const RootedTree> t, int vertex, BraidWord braid,
                std::vector<BAutElement> kids);

    std::shared_ptr<const RootedTree> tree_;  // the full tree, shared by all nodes
    int vertex_ = 0;
    BraidWord braid_;
    std::vector<BAutElement> kids_;
};

BAutElement baut_compose(const BAutElement& a, const BAutElement& b);
BAutElement baut_inverse(const BAutElement& a);

// Underlying tree automorphism: the root braid permutes the child subtrees,
// the children act inside them.
TreeAutomorphism baut_project(const BAutElement& e);

bool baut_is_pure(const BAutElement& e);

// All root braids trivial, recursively.
bool baut_is_trivial(const BAutElement& e, long budget = kHandleBudget);

// Multiset of child counts over all vertices (root included), zero entries
// dropped, sorted ascending.  Classifies the pure part of the group up to
// isomorphism.
std::vector<int> pure_signature(const RootedTree& t);

}  // namespace jck
