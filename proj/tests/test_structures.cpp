#include <catch2/catch_amalgamated.hpp>

#include "embkit/generators.hpp"
#include "embkit/structure.hpp"
#include "embkit/verify.hpp"

using namespace embkit;

namespace {

// Oriented 3-cycle 0->1->2->0.
BinaryStructure oriented_triangle() {
    BinaryStructure s(3);
    s.add_pair(0, 1);
    s.add_pair(1, 2);
    s.add_pair(2, 0);
    return s;
}

}  // namespace

TEST_CASE("induced substructures") {
    BinaryStructure k3 = BinaryStructure::complete(3);
    CHECK(induced(k3, {0, 1}) == BinaryStructure::complete(2));

    BinaryStructure chainish(3);
    chainish.add_pair(0, 1);
    chainish.add_pair(1, 2);
    CHECK(induced(chainish, {0, 2}) == BinaryStructure::empty_relation(2));

    BinaryStructure f3 = BinaryStructure::full(3);
    CHECK(induced(f3, {1}) == BinaryStructure::full(1));

    CHECK_THROWS_AS(induced(k3, {0, 5}), std::domain_error);
}

TEST_CASE("component partition") {
    BinaryStructure x(4);
    x.add_pair(0, 1);
    x.add_pair(2, 3);
    auto part = components(x);
    REQUIRE(part.blocks == std::vector<std::vector<int>>{{0, 1}, {2, 3}});

    BinaryStructure y(4);
    y.add_pair(0, 1);
    y.add_pair(1, 2);
    CHECK(components(y).blocks == std::vector<std::vector<int>>{{0, 1, 2}, {3}});

    CHECK(components(BinaryStructure(3)).blocks ==
          std::vector<std::vector<int>>{{0}, {1}, {2}});
}

TEST_CASE("merging two component blocks breaks the partition law") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        BinaryStructure x = random_structure(rng, n, 0.25);
        auto part = components(x);
        // every block contains no relation to the outside
        for (const auto& block : part.blocks)
            for (int u : block)
                for (int v = 0; v < n; ++v)
                    if (x.related(u, v) || x.related(v, u))
                        CHECK(part.block_of[v] == part.block_of[u]);
        if (part.blocks.size() < 2) continue;
        // two distinct blocks never have a cross pair, so a merged block
        // would violate minimality: check there is no relation between them
        const auto& a = part.blocks[0];
        const auto& b = part.blocks[1];
        for (int u : a)
            for (int v : b) {
                CHECK_FALSE(x.related(u, v));
                CHECK_FALSE(x.related(v, u));
            }
    }
}

TEST_CASE("embedding enumeration") {
    CHECK(embeddings(BinaryStructure::complete(2), BinaryStructure::complete(3)).size() == 6);
    CHECK(embeddings(BinaryStructure::full(1), BinaryStructure::complete(3)).empty());
    CHECK(embeddings(BinaryStructure::strict_chain(2), BinaryStructure::strict_chain(3)).size() ==
          3);
}

TEST_CASE("embeddings compose") {
    Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        BinaryStructure x = random_structure(rng, 2 + static_cast<int>(rng() % 2));
        BinaryStructure y = random_structure(rng, 3 + static_cast<int>(rng() % 2));
        BinaryStructure z = random_structure(rng, 4 + static_cast<int>(rng() % 2));
        auto fs = embeddings(x, y);
        auto gs = embeddings(y, z);
        if (fs.empty() || gs.empty()) continue;
        const auto& f = fs.front();
        const auto& g = gs.front();
        std::vector<int> h(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) h[i] = g[f[i]];
        // h must preserve the relation both ways
        for (int u = 0; u < x.size(); ++u)
            for (int v = 0; v < x.size(); ++v)
                CHECK(x.related(u, v) == z.related(h[u], h[v]));
    }
}

TEST_CASE("copies as point sets") {
    auto c = copies(BinaryStructure::complete(2), BinaryStructure::complete(3));
    CHECK(c == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(copies(BinaryStructure::strict_chain(2), BinaryStructure::strict_chain(3)).size() == 3);
    CHECK(copies(BinaryStructure::complete(3), BinaryStructure::complete(2)).empty());
}

TEST_CASE("copies equal the isomorphic subsets") {
    Rng rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        BinaryStructure x = random_structure(rng, 1 + static_cast<int>(rng() % 3));
        BinaryStructure y = random_structure(rng, 1 + static_cast<int>(rng() % 8));
        auto got = copies(x, y);
        std::set<std::vector<int>> got_set(got.begin(), got.end());
        std::set<std::vector<int>> want;
        const int n = y.size(), k = x.size();
        if (k <= n) {
            std::vector<int> sub(k);
            for (int i = 0; i < k; ++i) sub[i] = i;
            while (true) {
                if (is_isomorphic(induced(y, sub), x)) want.insert(sub);
                int i = k - 1;
                while (i >= 0 && sub[i] == n - k + i) --i;
                if (i < 0) break;
                ++sub[i];
                for (int j = i + 1; j < k; ++j) sub[j] = sub[j - 1] + 1;
            }
        }
        CHECK(got_set == want);
    }
}

TEST_CASE("isomorphism") {
    BinaryStructure relabeled(3);
    relabeled.add_pair(0, 2);
    relabeled.add_pair(2, 0);
    relabeled.add_pair(0, 1);
    relabeled.add_pair(1, 0);
    relabeled.add_pair(1, 2);
    relabeled.add_pair(2, 1);
    CHECK(is_isomorphic(BinaryStructure::complete(3), relabeled));
    CHECK_FALSE(is_isomorphic(BinaryStructure::strict_chain(3), oriented_triangle()));
    CHECK_FALSE(is_isomorphic(BinaryStructure::full(2), BinaryStructure::complete(2)));
}

TEST_CASE("p-monomorphicity") {
    CHECK(is_p_monomorphic(BinaryStructure::strict_chain(4), 2));
    CHECK_FALSE(is_p_monomorphic(BinaryStructure::cycle_graph(4), 2));
    Rng rng(14);
    BinaryStructure x = random_structure(rng, 5, 0.5);
    for (int i = 0; i < 5; ++i) x.remove_pair(i, i);
    CHECK(is_p_monomorphic(x, 1));
    CHECK_THROWS_AS(is_p_monomorphic(x, 6), std::domain_error);
    CHECK_THROWS_AS(is_p_monomorphic(x, 0), std::domain_error);
}

TEST_CASE("shape recognition") {
    CHECK(shape_of(BinaryStructure::full(3)) == Shape::FullRelation);
    CHECK(shape_of(BinaryStructure::path_graph(3)) == Shape::Other);
    CHECK(shape_of(BinaryStructure::reflexive_chain(3)) == Shape::ReflexiveLinearOrder);
    CHECK(shape_of(BinaryStructure::strict_chain(2)) == Shape::StrictLinearOrder);
    CHECK(shape_of(BinaryStructure::complete(4)) == Shape::CompleteGraph);
    CHECK(shape_of(BinaryStructure::full(1)) == Shape::SingletonLoop);
    CHECK(shape_of(BinaryStructure(1)) == Shape::SingletonNoLoop);
    CHECK_THROWS_AS(shape_of(BinaryStructure(2)), std::domain_error);
}

TEST_CASE("complement") {
    BinaryStructure loops = complement(BinaryStructure::complete(2));
    CHECK(loops == BinaryStructure::diagonal(2));
    CHECK(complement(BinaryStructure::full(4)) == BinaryStructure::empty_relation(4));
    Rng rng(15);
    for (int trial = 0; trial < 30; ++trial) {
        BinaryStructure x = random_structure(rng, 1 + static_cast<int>(rng() % 7));
        CHECK(complement(complement(x)) == x);
        // isomorphic substructures are preserved under complementation
        CHECK(copies(x, x) == copies(complement(x), complement(x)));
    }
}

TEST_CASE("finite indivisibility") {
    CHECK(is_indivisible_finite(BinaryStructure::full(1)).indivisible);
    auto k3 = is_indivisible_finite(BinaryStructure::complete(3));
    REQUIRE_FALSE(k3.indivisible);
    CHECK_FALSE(contains_copy(BinaryStructure::complete(3), k3.side_a,
                              BinaryStructure::complete(3)));
    CHECK_FALSE(contains_copy(BinaryStructure::complete(3), k3.side_b,
                              BinaryStructure::complete(3)));
    CHECK_FALSE(is_indivisible_finite(BinaryStructure::diagonal(3)).indivisible);
    CHECK_THROWS_AS(is_indivisible_finite(BinaryStructure(13)), resource_error);
}

TEST_CASE("monomorphicity transfers downward on small relations") {
    auto res = verify::monomorphicity_sweep(2026, 2000);
    INFO(res.detail);
    CHECK(res.pass);
}
