#include "jck/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace jck {

Permutation Permutation::identity(int m) {
    Permutation p;
    p.images.resize(m);
    std::iota(p.images.begin(), p.images.end(), 1);
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if (apply(i) != i) return false;
    return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("compose: permutation degrees differ");
    Permutation out;
    out.images.resize(a.degree());
    for (int i = 1; i <= a.degree(); ++i) out.images[i - 1] = a.apply(b.apply(i));
    return out;
}

Permutation inverse(const Permutation& p) {
    Permutation out;
    out.images.resize(p.degree());
    for (int i = 1; i <= p.degree(); ++i) out.images[p.apply(i) - 1] = i;
    return out;
}

void validate_braid(const BraidWord& b) {
    if (b.strands < 0) throw std::invalid_argument("braid: negative strand count");
    for (int l : b.word) {
        const int g = std::abs(l);
        if (g < 1 || g > b.strands - 1)
            throw std::invalid_argument("braid: letter out of range for " +
                                        std::to_string(b.strands) + " strands");
    }
}

Permutation braid_permutation(const BraidWord& b) {
    validate_braid(b);
    Permutation p = Permutation::identity(std::max(0, b.strands));
    for (int l : b.word) {
        const int g = std::abs(l);
        std::swap(p.images[g - 1], p.images[g]);
    }
    return p;
}

bool braid_in_block_subgroup(const BraidWord& b, const std::vector<std::vector<int>>& blocks) {
    const Permutation p = braid_permutation(b);
    for (const auto& block : blocks)
        for (int i : block)
            if (std::find(block.begin(), block.end(), p.apply(i)) == block.end()) return false;
    return true;
}

namespace {

void freely_reduce(std::vector<int>& w) {
    std::vector<int> out;
    out.reserve(w.size());
    for (int l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    w = std::move(out);
}

}  // namespace

bool braid_is_trivial(const BraidWord& b, long budget) {
    validate_braid(b);
    std::vector<int> w = b.word;
    freely_reduce(w);
    long spent = 0;
    for (;;) {
        // earliest-closing handle: sigma_g^e ... sigma_g^-e with no sigma_g
        // and no sigma_(g-1) in between. A pair whose interior holds
        // sigma_(g-1) letters is not a handle and is skipped. The first
        // handle to close cannot contain another handle, so reducing it is
        // always permitted and the procedure terminates.
        std::vector<int> last(b.strands + 1, -1);
        int first = -1, second = -1;
        for (int i = 0; i < static_cast<int>(w.size()); ++i) {
            const int g = std::abs(w[i]);
            if (last[g] >= 0 && w[last[g]] == -w[i] && (g == 1 || last[g - 1] < last[g])) {
                first = last[g];
                second = i;
                break;
            }
            last[g] = i;
        }
        if (first < 0) return w.empty();  // reduced word: trivial iff empty

        // rewrite sigma_g^e v sigma_g^-e; every sigma_(g+1)^d inside v
        // becomes sigma_(g+1)^-e sigma_g^d sigma_(g+1)^e, the rest commutes
        const int g = std::abs(w[first]);
        const int e = (w[first] > 0) ? 1 : -1;
        std::vector<int> next;
        next.reserve(w.size() + 16);
        next.insert(next.end(), w.begin(), w.begin() + first);
        for (int i = first + 1; i < second; ++i) {
            const int l = w[i];
            if (std::abs(l) == g + 1) {
                next.push_back(-e * (g + 1));
                next.push_back(l > 0 ? g : -g);
                next.push_back(e * (g + 1));
            } else {
                next.push_back(l);
            }
        }
        next.insert(next.end(), w.begin() + second + 1, w.end());
        freely_reduce(next);
        w = std::move(next);

        spent += static_cast<long>(w.size()) + 1;
        if (spent > budget) throw ReductionBudget();
    }
}

BraidWord braid_concat(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands)
        throw std::invalid_argument("braid_concat: strand counts differ");
    BraidWord out = a;
    out.word.insert(out.word.end(), b.word.begin(), b.word.end());
    return out;
}

BraidWord braid_inverse_word(const BraidWord& a) {
    BraidWord out;
    out.strands = a.strands;
    out.word.reserve(a.word.size());
    for (auto it = a.word.rbegin(); it != a.word.rend(); ++it) out.word.push_back(-*it);
    return out;
}

bool TreeAutomorphism::is_identity() const {
    for (int i = 0; i < static_cast<int>(images.size()); ++i)
        if (images[i] != i + 1) return false;
    return true;
}

namespace {

unsigned long long aut_order_by_code(const std::string& code,
                                     std::map<std::string, unsigned long long>& memo);

unsigned long long factorial(int n) {
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

unsigned long long aut_order_by_code(const std::string& code,
                                     std::map<std::string, unsigned long long>& memo) {
    auto it = memo.find(code);
    if (it != memo.end()) return it->second;
    const RootedTree t = tree_from_code(code);
    std::map<std::string, int> mult;
    unsigned long long prod = 1;
    for (int c : tree_children(t, 0)) {
        const std::string sub = canonical_code_at(t, c);
        ++mult[sub];
        prod *= aut_order_by_code(sub, memo);
    }
    for (const auto& [sub, m] : mult) prod *= factorial(m);
    memo[code] = prod;
    return prod;
}

}  // namespace

unsigned long long aut_order(const RootedTree& t) {
    validate_tree(t);
    std::map<std::string, unsigned long long> memo;
    return aut_order_by_code(canonical_code_at(t, 0), memo);
}

// ---------------------------------------------------------------------------
// braided tree automorphisms

namespace {

// vertices of the subtree rooted at v (v first), children in index order
std::vector<int> subtree_traversal(const RootedTree& t, int v) {
    std::vector<int> out{v};
    for (int c : tree_children(t, v)) {
        const std::vector<int> sub = subtree_traversal(t, c);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

// parent layout with vertices renumbered by traversal position; equal
// layouts mean the subtrees are positionally interchangeable
std::vector<int> subtree_shape(const RootedTree& t, int v) {
    const std::vector<int> trav = subtree_traversal(t, v);
    std::map<int, int> pos;
    for (int i = 0; i < static_cast<int>(trav.size()); ++i) pos[trav[i]] = i;
    std::vector<int> shape;
    for (int i = 1; i < static_cast<int>(trav.size()); ++i)
        shape.push_back(pos.at(t.parents[trav[i] - 1]));
    return shape;
}

}  // namespace

BAutElement::BAutElement(std::shared_ptr<const RootedTree> t, int vertex, BraidWord braid,
                         std::vector<BAutElement> kids)
    : tree_(std::move(t)), vertex_(vertex), braid_(std::move(braid)), kids_(std::move(kids)) {
    const std::vector<int> children = tree_children(*tree_, vertex_);
    const int m = static_cast<int>(children.size());
    if (braid_.strands != m)
        throw std::invalid_argument("baut: braid strand count does not match child count at vertex " +
                                    std::to_string(vertex_));
    validate_braid(braid_);
    if (static_cast<int>(kids_.size()) != m)
        throw std::invalid_argument("baut: child element count mismatch at vertex " +
                                    std::to_string(vertex_));
    for (int i = 0; i < m; ++i) {
        if (kids_[i].tree_->parents != tree_->parents ||
            subtree_shape(*tree_, kids_[i].vertex_) != subtree_shape(*tree_, children[i]))
            throw std::invalid_argument("baut: child element does not act on the right subtree shape");
    }

    // shape blocks of the children; the braid permutation must preserve
    // them, and equal shapes must be laid out identically.  On a labeled
    // tree no two subtrees are equal, so every block is a singleton and
    // only permutation-trivial braids get through.
    std::vector<std::vector<int>> block_list;
    if (tree_->labeled) {
        for (int i = 0; i < m; ++i) block_list.push_back({i + 1});
    } else {
        std::map<std::string, std::vector<int>> blocks;
        for (int i = 0; i < m; ++i)
            blocks[canonical_code_at(*tree_, children[i])].push_back(i + 1);
        for (const auto& [code, members] : blocks) {
            const std::vector<int> ref = subtree_shape(*tree_, children[members.front() - 1]);
            for (int pos : members)
                if (subtree_shape(*tree_, children[pos - 1]) != ref)
                    throw std::invalid_argument(
                        "baut: isomorphic sibling subtrees are ordered differently; "
                        "reorder the tree so equal shapes match positionally");
            block_list.push_back(members);
        }
    }
    if (!braid_in_block_subgroup(braid_, block_list))
        throw std::invalid_argument("baut: braid permutation leaves a shape block at vertex " +
                                    std::to_string(vertex_));
}

BAutElement BAutElement::identity(std::shared_ptr<const RootedTree> t, int vertex) {
    validate_tree(*t);
    const std::vector<int> children = tree_children(*t, vertex);
    std::vector<BAutElement> kids;
    kids.reserve(children.size());
    for (int c : children) kids.push_back(identity(t, c));
    BraidWord none;
    none.strands = static_cast<int>(children.size());
    return BAutElement(t, vertex, std::move(none), std::move(kids));
}

BAutElement BAutElement::node(std::shared_ptr<const RootedTree> t, int vertex, BraidWord braid,
                              std::vector<BAutElement> children) {
    validate_tree(*t);
    return BAutElement(std::move(t), vertex, std::move(braid), std::move(children));
}

BAutElement baut_compose(const BAutElement& a, const BAutElement& b) {
    if (a.tree().parents != b.tree().parents)
        throw std::invalid_argument("baut_compose: elements live on different trees");
    if (a.vertex() != b.vertex() &&
        subtree_shape(a.tree(), a.vertex()) != subtree_shape(b.tree(), b.vertex()))
        throw std::invalid_argument("baut_compose: elements act on different subtrees");
    // (g, alpha)(g', beta) = (g . alpha(g'), alpha beta): b's part for slot i
    // acts inside the disk occupying position i after a's braid, and motions
    // inside a disk commute with carrying the disk around, so it pre-commutes
    // into that disk's source slot sigma(i)
    const Permutation sigma = braid_permutation(a.braid());
    const Permutation sigma_inv = inverse(sigma);
    const int m = static_cast<int>(a.children().size());
    std::vector<BAutElement> kids;
    kids.reserve(m);
    for (int i = 1; i <= m; ++i)
        kids.push_back(baut_compose(a.children()[i - 1], b.children()[sigma_inv.apply(i) - 1]));
    return BAutElement::node(a.tree_ptr(), a.vertex(), braid_concat(a.braid(), b.braid()),
                             std::move(kids));
}

BAutElement baut_inverse(const BAutElement& a) {
    // slot i of the inverse undoes the part of a acting inside the disk that
    // a's braid brings back to position i, i.e. a's part at slot sigma(i)
    const Permutation sigma = braid_permutation(a.braid());
    const int m = static_cast<int>(a.children().size());
    std::vector<BAutElement> kids;
    kids.reserve(m);
    for (int i = 1; i <= m; ++i) kids.push_back(baut_inverse(a.children()[sigma.apply(i) - 1]));
    return BAutElement::node(a.tree_ptr(), a.vertex(), braid_inverse_word(a.braid()),
                             std::move(kids));
}

namespace {

// automorphism of the subtree at e.vertex() as an index map on the
// traversal: out[k] is the traversal position of the image of position k
std::vector<int> project_shape(const BAutElement& e) {
    const RootedTree& t = e.tree();
    const std::vector<int> children = tree_children(t, e.vertex());
    const int m = static_cast<int>(children.size());
    const Permutation pi = braid_permutation(e.braid());

    std::vector<int> offset(m);
    std::vector<int> sizes(m);
    int acc = 1;
    for (int i = 0; i < m; ++i) {
        offset[i] = acc;
        sizes[i] = static_cast<int>(subtree_traversal(t, children[i]).size());
        acc += sizes[i];
    }
    std::vector<int> out(acc);
    out[0] = 0;
    for (int i = 0; i < m; ++i) {
        // block i lands on block pi(i); its interior is rearranged by the
        // child element attached to the landing slot (blocks share a shape,
        // so the two traversals line up index for index)
        const int j = pi.apply(i + 1) - 1;
        const std::vector<int> sub = project_shape(e.children()[j]);
        for (int k = 0; k < sizes[i]; ++k) out[offset[i] + k] = offset[j] + sub[k];
    }
    return out;
}

}  // namespace

TreeAutomorphism baut_project(const BAutElement& e) {
    const std::vector<int> trav = subtree_traversal(e.tree(), e.vertex());
    const std::vector<int> shape_map = project_shape(e);
    TreeAutomorphism out;
    out.images.assign(e.tree().size(), 0);
    for (int i = 1; i <= e.tree().size(); ++i) out.images[i - 1] = i;  // outside the subtree: fixed
    for (int k = 0; k < static_cast<int>(trav.size()); ++k) {
        if (trav[k] == 0) continue;
        out.images[trav[k] - 1] = trav[shape_map[k]];
    }
    return out;
}

bool baut_is_pure(const BAutElement& e) { return baut_project(e).is_identity(); }

bool baut_is_trivial(const BAutElement& e, long budget) {
    if (!braid_is_trivial(e.braid(), budget)) return false;
    // a trivial root braid fixes every position, so children pair up with
    // themselves
    for (const BAutElement& k : e.children())
        if (!baut_is_trivial(k, budget)) return false;
    return true;
}

std::vector<int> pure_signature(const RootedTree& t) {
    validate_tree(t);
    std::vector<int> out;
    for (int v = 0; v <= t.size(); ++v) {
        const int c = static_cast<int>(tree_children(t, v).size());
        if (c > 0) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace jck
