#include <doctest.h>

#include <memory>
#include <random>

#include "jck/groups.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace jck;

namespace {

std::shared_ptr<const RootedTree> tree(std::vector<int> parents, bool labeled) {
    auto t = std::make_shared<RootedTree>();
    t->parents = std::move(parents);
    t->labeled = labeled;
    return t;
}

BraidWord braid(int strands, std::vector<int> word) {
    BraidWord b;
    b.strands = strands;
    b.word = std::move(word);
    return b;
}

bool equal_elements(const BAutElement& a, const BAutElement& b) {
    return baut_is_trivial(baut_compose(a, baut_inverse(b)));
}

}  // namespace

TEST_CASE("braid permutations and block membership") {
    const Permutation p = braid_permutation(braid(3, {1, 2}));
    CHECK(p.images == std::vector<int>{2, 3, 1});
    CHECK(braid_in_block_subgroup(braid(3, {1}), {{1, 2}, {3}}));
    CHECK(!braid_in_block_subgroup(braid(3, {2}), {{1, 2}, {3}}));
    CHECK(braid_in_block_subgroup(braid(3, {2, 2}), {{1, 2}, {3}}));  // pure
    CHECK_THROWS_AS(validate_braid(braid(3, {3})), std::invalid_argument);
}

TEST_CASE("word problem on small standard examples") {
    // the braid relation, written as a commutator-like null word
    CHECK(braid_is_trivial(braid(3, {1, 2, 1, -2, -1, -2})));
    CHECK(!braid_is_trivial(braid(3, {1, 1})));
    CHECK(!braid_is_trivial(braid(3, {1})));
    CHECK(braid_is_trivial(braid(3, {})));
    // far-commutation needs 4 strands
    CHECK(braid_is_trivial(braid(4, {1, 3, -1, -3})));
}

TEST_CASE("word problem agrees with the free-group action") {
    std::mt19937_64 rng(1201);
    for (int it = 0; it < 250; ++it) {
        const int strands = 2 + static_cast<int>(rng() % 4);
        BraidWord b = testgen::random_braid(strands, 16, rng);
        if (it % 3 == 0) b = braid_concat(b, braid_inverse_word(b));  // force some trivials
        CHECK(braid_is_trivial(b) == oracle::braid_trivial(b.strands, b.word));
    }
}

TEST_CASE("automorphism order on known shapes") {
    RootedTree chain;
    chain.parents = {0, 1, 2};
    CHECK(aut_order(chain) == 1);
    RootedTree star;
    star.parents = {0, 0, 0};
    CHECK(aut_order(star) == 6);
    RootedTree nested;  // two top-level curves, one with structure below
    nested.parents = {0, 5, 2, 2, 0, 7, 5};
    CHECK(aut_order(nested) == 2);
}

TEST_CASE("automorphism order matches brute force on every small shape") {
    for (int n = 0; n <= 6; ++n)
        for (const std::string& code : enumerate_trees(n)) {
            const RootedTree t = tree_from_code(code);
            CHECK(aut_order(t) == static_cast<unsigned long long>(oracle::aut_order(t)));
        }
}

TEST_CASE("elements validate their braids against the shape blocks") {
    auto star = tree({0, 0, 0}, false);
    CHECK_NOTHROW(BAutElement::node(star, 0, braid(3, {1, 2}),
                                    {BAutElement::identity(star, 1),
                                     BAutElement::identity(star, 2),
                                     BAutElement::identity(star, 3)}));
    // two distinct subtree shapes: swapping them is not allowed
    auto mixed = tree({0, 0, 2}, false);
    CHECK_THROWS_AS(BAutElement::node(mixed, 0, braid(2, {1}),
                                      {BAutElement::identity(mixed, 1),
                                       BAutElement::identity(mixed, 2)}),
                    std::invalid_argument);
    // the pure square of the swap is fine
    CHECK_NOTHROW(BAutElement::node(mixed, 0, braid(2, {1, 1}),
                                    {BAutElement::identity(mixed, 1),
                                     BAutElement::identity(mixed, 2)}));
}

TEST_CASE("group axioms hold on random elements") {
    std::mt19937_64 rng(1203);
    for (int it = 0; it < 12; ++it) {
        const int n = 1 + static_cast<int>(rng() % 6);
        auto t = std::make_shared<RootedTree>(testgen::random_tree_depth(n, n, rng));
        const BAutElement e = BAutElement::identity(t);
        const BAutElement a = testgen::random_baut(t, rng);
        const BAutElement b = testgen::random_baut(t, rng);
        const BAutElement c = testgen::random_baut(t, rng);
        CHECK(equal_elements(baut_compose(a, e), a));
        CHECK(equal_elements(baut_compose(e, a), a));
        CHECK(baut_is_trivial(baut_compose(a, baut_inverse(a))));
        CHECK(baut_is_trivial(baut_compose(baut_inverse(a), a)));
        CHECK(equal_elements(baut_compose(baut_compose(a, b), c),
                             baut_compose(a, baut_compose(b, c))));
    }
}

TEST_CASE("projection to tree automorphisms is a homomorphism") {
    std::mt19937_64 rng(1204);
    for (int it = 0; it < 20; ++it) {
        const int n = 1 + static_cast<int>(rng() % 6);
        auto t = std::make_shared<RootedTree>(testgen::random_tree_depth(n, n, rng));
        const BAutElement a = testgen::random_baut(t, rng);
        const BAutElement b = testgen::random_baut(t, rng);
        const TreeAutomorphism pa = baut_project(a);
        const TreeAutomorphism pb = baut_project(b);
        const TreeAutomorphism pab = baut_project(baut_compose(a, b));
        REQUIRE(pa.images.size() == pab.images.size());
        for (int v = 1; v <= n; ++v)
            CHECK(pab.images[v - 1] == pa.images[pb.images[v - 1] - 1]);
    }
}

TEST_CASE("purity: trivial projection, and always on labeled trees") {
    auto star = tree({0, 0, 0}, false);
    const BAutElement swap = BAutElement::node(
        star, 0, braid(3, {1}),
        {BAutElement::identity(star, 1), BAutElement::identity(star, 2),
         BAutElement::identity(star, 3)});
    CHECK(!baut_is_pure(swap));
    CHECK(baut_is_pure(BAutElement::identity(star)));

    std::mt19937_64 rng(1205);
    for (int it = 0; it < 40; ++it) {
        const int n = 1 + static_cast<int>(rng() % 6);
        auto t = std::make_shared<RootedTree>(testgen::random_tree_depth(n, n, rng));
        t = std::make_shared<RootedTree>(RootedTree{t->parents, true, {}});
        CHECK(baut_is_pure(testgen::random_baut(t, rng)));
    }
}

TEST_CASE("pure signature lists child counts without zeros") {
    RootedTree t;
    t.parents = {0, 5, 2, 2, 0, 7, 5};
    CHECK(pure_signature(t) == std::vector<int>{1, 2, 2, 2});
    RootedTree single;
    single.parents = {0};
    CHECK(pure_signature(single) == std::vector<int>{1});
    CHECK(pure_signature(RootedTree{}).empty());
}
