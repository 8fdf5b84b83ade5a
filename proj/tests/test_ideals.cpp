#include <catch2/catch_amalgamated.hpp>

#include "embkit/classify.hpp"
#include "embkit/generators.hpp"
#include "embkit/ideal.hpp"
#include "embkit/verify.hpp"

using namespace embkit;

namespace {

ComponentClass cls(ClassShape s, ExtNat size, ExtNat mult) {
    return ComponentClass::of_shape(s, size, mult);
}

CatalogueSpec one_class(ComponentClass c) {
    CatalogueSpec s;
    s.classes.push_back(std::move(c));
    return s;
}

TraceProfile tail_profile(const CatalogueSpec& spec, ExtNat tail) {
    TraceProfile p;
    p.classes.resize(spec.classes.size());
    p.classes[0].tail = tail;
    return p;
}

// Hand-built ambient truncation from disjoint component structures.
Truncation union_of(const std::vector<BinaryStructure>& parts) {
    Truncation t;
    int offset = 0;
    for (const auto& part : parts) {
        TruncationBlock b{0, 0, {}};
        for (int p = 0; p < part.size(); ++p) b.points.push_back(offset + p);
        t.blocks.push_back(std::move(b));
        t.structure = t.structure.size() == 0 ? part : disjoint_union(t.structure, part);
        offset += part.size();
    }
    return t;
}

}  // namespace

TEST_CASE("ideal membership closed forms") {
    // countably many F_2 components, one point hit in each: no full pair
    // survives infinitely often, so the subset is copy-free
    CatalogueSpec f2 = one_class(cls(ClassShape::Full, ExtNat(2), ExtNat::omega()));
    CHECK(ideal_member(f2, tail_profile(f2, ExtNat(1))));
    CHECK_FALSE(ideal_member(f2, tail_profile(f2, ExtNat(2))));

    // countably many infinite components: membership iff only finitely many
    // traces are infinite
    CatalogueSpec fw = one_class(cls(ClassShape::Full, ExtNat::omega(), ExtNat::omega()));
    TraceProfile three = tail_profile(fw, ExtNat(0));
    three.classes[0].exceptional = {ExtNat::omega(), ExtNat::omega(), ExtNat::omega()};
    CHECK(ideal_member(fw, three));
    CHECK_FALSE(ideal_member(fw, tail_profile(fw, ExtNat::omega())));

    // unbounded family with uniformly bounded traces
    CatalogueSpec fam;
    fam.family = UnboundedFamily{ClassShape::Full, 1, {}};
    TraceProfile bounded;
    bounded.family = FamilyTraces{{}, FamilyTailRule::Bounded, 5};
    CHECK(ideal_member(fam, bounded));
    TraceProfile full;
    full.family = FamilyTraces{{}, FamilyTailRule::Full, 0};
    CHECK_FALSE(ideal_member(fam, full));
}

TEST_CASE("profile shape checking") {
    CatalogueSpec f2 = one_class(cls(ClassShape::Full, ExtNat(2), ExtNat::omega()));
    TraceProfile no_tail;
    no_tail.classes.resize(1);
    CHECK_THROWS_AS(ideal_member(f2, no_tail), std::domain_error);
    TraceProfile too_big = tail_profile(f2, ExtNat(3));
    CHECK_THROWS_AS(ideal_member(f2, too_big), std::domain_error);
}

TEST_CASE("matching oracle on complete-graph unions") {
    BinaryStructure k2 = BinaryStructure::complete(2);
    BinaryStructure k3 = BinaryStructure::complete(3);
    Truncation t = union_of({k2, k3});  // points 0,1 | 2,3,4

    CHECK_FALSE(copy_inside_matching(t, {0, 1, 2, 3}, t));
    CHECK(copy_inside_matching(t, {0, 1, 2, 3, 4}, t));

    // two K_2 blocks and one K_3: dropping a point of one K_2 leaves no
    // assignment, because the K_3 slot cannot route through a 2-trace
    Truncation t3 = union_of({k2, k2, k3});  // points 0,1 | 2,3 | 4,5,6
    CHECK_FALSE(copy_inside_matching(t3, {0, 2, 3, 4, 5, 6}, t3));
    CHECK(copy_inside_matching(t3, {0, 1, 2, 3, 4, 5, 6}, t3));

    CHECK_THROWS_AS(copy_inside_matching(t, {7}, t), std::domain_error);
}

TEST_CASE("brute-force oracle") {
    BinaryStructure k3 = BinaryStructure::complete(3);
    Truncation t = union_of({k3});
    CHECK(copy_inside_bruteforce(t, {0, 1, 2}));
    CHECK_FALSE(copy_inside_bruteforce(t, {0, 1}));

    BinaryStructure l3 = BinaryStructure::strict_chain(3);
    Truncation chains = union_of({l3, l3});  // points 0,1,2 | 3,4,5
    CHECK_FALSE(copy_inside_bruteforce(chains, {0, 1, 2, 3, 4}));
    CHECK(copy_inside_bruteforce(chains, {0, 1, 2, 3, 4, 5}));

    BinaryStructure big(200);
    Truncation huge = union_of({big});
    CHECK_THROWS_AS(copy_inside_bruteforce(huge, {0}), resource_error);
}

TEST_CASE("matching agrees with brute force on random instances") {
    auto res = verify::oracle_agreement(51, 200);
    INFO(res.detail);
    CHECK(res.pass);
}

TEST_CASE("membership is downward closed") {
    auto res = verify::ideal_monotonicity(52, 300);
    INFO(res.detail);
    CHECK(res.pass);
}

TEST_CASE("ideal laws on indivisible specs") {
    auto res = verify::ideal_union_and_dichotomy(53, 300);
    INFO(res.detail);
    CHECK(res.pass);
}

TEST_CASE("descriptors generate exactly the copies") {
    auto res = verify::copy_characterization(54, 100);
    INFO(res.detail);
    CHECK(res.pass);
}

TEST_CASE("incompatible copies witness") {
    // one infinite component: two disjoint infinite halves, empty trace
    CatalogueSpec fw1 = one_class(cls(ClassShape::Full, ExtNat::omega(), ExtNat(1)));
    auto w1 = incompatible_copies_witness(fw1);
    REQUIRE(w1.has_value());
    CHECK(ideal_member(fw1, w1->intersection));

    // countably many F_2 components: even against odd slots
    CatalogueSpec f2 = one_class(cls(ClassShape::Full, ExtNat(2), ExtNat::omega()));
    auto w2 = incompatible_copies_witness(f2);
    REQUIRE(w2.has_value());
    CHECK(ideal_member(f2, w2->intersection));
    CHECK_FALSE(w2->first.rules.empty());

    // unbounded family: disjoint routing by size
    CatalogueSpec fam;
    fam.family = UnboundedFamily{ClassShape::Full, 1, {}};
    auto w3 = incompatible_copies_witness(fam);
    REQUIRE(w3.has_value());
    CHECK(ideal_member(fam, w3->intersection));

    // divisible catalogue with a mandatory shared part
    CatalogueSpec shared;
    shared.classes.push_back(cls(ClassShape::Full, ExtNat(3), ExtNat(1)));
    shared.classes.push_back(cls(ClassShape::Full, ExtNat(2), ExtNat::omega()));
    auto w4 = incompatible_copies_witness(shared);
    REQUIRE(w4.has_value());
    CHECK(ideal_member(shared, w4->intersection));
}
