#include <catch2/catch_amalgamated.hpp>

#include "embkit/classify.hpp"
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

CatalogueSpec family_spec(ClassShape shape) {
    CatalogueSpec s;
    s.family = UnboundedFamily{shape, 1, {}};
    return s;
}

}  // namespace

TEST_CASE("case dispatch") {
    CHECK(classify(one_class(cls(ClassShape::Full, ExtNat(2), ExtNat::omega()))) ==
          ForcingClass::fin_power(1));
    CHECK(classify(one_class(cls(ClassShape::Full, ExtNat::omega(), ExtNat(2)))) ==
          ForcingClass::fin_power(2));
    CHECK(classify(one_class(cls(ClassShape::Full, ExtNat::omega(), ExtNat::omega()))) ==
          ForcingClass::fin_times_fin());
    CHECK(classify(family_spec(ClassShape::Full)) == ForcingClass::edfin_product(0));

    // invalid input is refused rather than classified
    CatalogueSpec mixed;
    mixed.classes.push_back(cls(ClassShape::Complete, ExtNat::omega(), ExtNat(1)));
    mixed.classes.push_back(cls(ClassShape::Full, ExtNat::omega(), ExtNat(1)));
    CHECK_THROWS_AS(classify(mixed), std::domain_error);
}

TEST_CASE("case tags") {
    CHECK(case_tag(derive_stats(one_class(cls(ClassShape::Full, ExtNat::omega(),
                                              ExtNat::omega())))) == "a4");
    CHECK(case_tag(derive_stats(family_spec(ClassShape::Full))) == "a3");
    CHECK(case_tag(derive_stats(one_class(cls(ClassShape::Full, ExtNat(2),
                                              ExtNat::omega())))) == "a2");
    CHECK(case_tag(derive_stats(one_class(cls(ClassShape::Full, ExtNat::omega(),
                                              ExtNat(2))))) == "a1");
}

TEST_CASE("exponent-one criterion") {
    CHECK(n_equals_one_check(one_class(cls(ClassShape::Full, ExtNat(2), ExtNat::omega()))));
    CHECK_FALSE(
        n_equals_one_check(one_class(cls(ClassShape::Full, ExtNat::omega(), ExtNat(2)))));
    CHECK(n_equals_one_check(one_class(cls(ClassShape::Full, ExtNat::omega(), ExtNat(1)))));
    // not a FinPower case
    CHECK_THROWS_AS(n_equals_one_check(family_spec(ClassShape::Full)), std::domain_error);
}

TEST_CASE("indivisibility verdicts") {
    CHECK(is_indivisible(one_class(cls(ClassShape::Full, ExtNat(1), ExtNat::omega()))));
    CHECK_FALSE(is_indivisible(one_class(cls(ClassShape::Full, ExtNat(2), ExtNat::omega()))));
    CHECK(is_indivisible(one_class(cls(ClassShape::Full, ExtNat::omega(), ExtNat::omega()))));
    CHECK(is_indivisible(one_class(cls(ClassShape::Full, ExtNat::omega(), ExtNat(1)))));
    CHECK(is_indivisible(family_spec(ClassShape::Complete)));
}

TEST_CASE("divisibility witnesses") {
    // one point removed from every maximal component vs the removed points
    CatalogueSpec f2 = one_class(cls(ClassShape::Full, ExtNat(2), ExtNat::omega()));
    auto [a2, b2] = divisibility_witness(f2);
    CHECK(*a2.classes[0].tail == ExtNat(1));
    CHECK(*b2.classes[0].tail == ExtNat(1));
    CHECK(ideal_member(f2, a2));
    CHECK(ideal_member(f2, b2));

    CatalogueSpec m;
    m.classes.push_back(cls(ClassShape::Full, ExtNat(3), ExtNat(1)));
    m.classes.push_back(cls(ClassShape::Full, ExtNat(2), ExtNat::omega()));
    auto [am, bm] = divisibility_witness(m);
    CHECK(am.classes[0].exceptional == std::vector<ExtNat>{ExtNat(2)});
    CHECK(ideal_member(m, am));
    CHECK(ideal_member(m, bm));

    // two infinite components split one against the other
    CatalogueSpec fw2 = one_class(cls(ClassShape::Full, ExtNat::omega(), ExtNat(2)));
    auto [aw, bw] = divisibility_witness(fw2);
    CHECK(ideal_member(fw2, aw));
    CHECK(ideal_member(fw2, bw));

    CHECK_THROWS_AS(
        divisibility_witness(one_class(cls(ClassShape::Full, ExtNat(1), ExtNat::omega()))),
        std::logic_error);
}

TEST_CASE("classification reports") {
    ClassificationReport r =
        report(one_class(cls(ClassShape::Full, ExtNat::omega(), ExtNat::omega())));
    CHECK(r.validation_ok);
    CHECK(r.tag == "a4");
    CHECK(*r.forcing_class == ForcingClass::fin_times_fin());
    CHECK(r.indivisible);
    CHECK_FALSE(r.witness.has_value());

    CatalogueSpec kk;
    kk.classes.push_back(cls(ClassShape::Complete, ExtNat(2), ExtNat::omega()));
    kk.classes.push_back(cls(ClassShape::Complete, ExtNat(3), ExtNat::omega()));
    ClassificationReport r2 = report(kk);
    CHECK(r2.validation_ok);
    CHECK(r2.tag == "a2");
    CHECK(*r2.forcing_class == ForcingClass::fin_power(1));
    CHECK_FALSE(r2.indivisible);
    REQUIRE(r2.witness.has_value());
    CHECK(ideal_member(kk, r2.witness->first));
    CHECK(ideal_member(kk, r2.witness->second));

    CatalogueSpec mixed;
    mixed.classes.push_back(cls(ClassShape::Complete, ExtNat::omega(), ExtNat(1)));
    mixed.classes.push_back(cls(ClassShape::Full, ExtNat::omega(), ExtNat(1)));
    ClassificationReport r3 = report(mixed);
    CHECK_FALSE(r3.validation_ok);
    CHECK_FALSE(r3.stats.has_value());
}

TEST_CASE("golden classification table") {
    auto res = verify::golden_table();
    INFO(res.detail);
    CHECK(res.pass);
    CHECK(res.cases == 21);
}

TEST_CASE("exponent criterion battery") {
    auto res = verify::n1_criterion();
    INFO(res.detail);
    CHECK(res.pass);
    CHECK(res.cases >= 20);
}

TEST_CASE("witness soundness sweep") {
    auto res = verify::witness_soundness(61, 25, 40);
    INFO(res.detail);
    CHECK(res.pass);
}

TEST_CASE("validation counterexample pair") {
    auto res = verify::validation_counterexamples();
    INFO(res.detail);
    CHECK(res.pass);
}
