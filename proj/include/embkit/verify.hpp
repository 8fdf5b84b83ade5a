#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "embkit/classify.hpp"
#include "embkit/generators.hpp"
#include "embkit/ideal.hpp"
#include "embkit/io.hpp"
#include "embkit/preorder.hpp"
#include "embkit/structure.hpp"

namespace embkit::verify {

struct PropertyResult {
    std::string name;
    bool pass = true;
    long cases = 0;
    std::string detail;

    void fail(const std::string& msg) {
        if (pass) detail = msg;
        pass = false;
    }
};

// --- profile algebra used by several suites ---------------------------------

/// Trace of component r of class k under the profile's defaulting rules.
inline ExtNat trace_at(const TraceProfile& p, std::size_t k, std::uint32_t r) {
    return embkit::detail::class_trace(p.classes[k], r);
}

/// Pointwise-reduced profile: every trace of the result is <= the input's.
inline TraceProfile reduce_profile(Rng& rng, const CatalogueSpec& spec, const TraceProfile& p) {
    std::bernoulli_distribution coin(0.5);
    auto shrink = [&](ExtNat t) -> ExtNat {
        if (t.is_omega())
            return coin(rng) ? ExtNat::omega()
                             : ExtNat(std::uniform_int_distribution<std::uint32_t>(0, 4)(rng));
        return ExtNat(std::uniform_int_distribution<std::uint32_t>(0, t.value())(rng));
    };
    TraceProfile out = p;
    for (auto& c : out.classes) {
        for (auto& t : c.exceptional) t = shrink(t);
        if (c.tail) c.tail = shrink(*c.tail);
    }
    if (out.family) {
        for (auto& e : out.family->exceptions) e.trace = shrink(e.trace);
        if (out.family->rule == FamilyTailRule::Bounded)
            out.family->bound =
                std::uniform_int_distribution<std::uint32_t>(0, out.family->bound)(rng);
        else if (coin(rng))
            out.family = FamilyTraces{out.family->exceptions, FamilyTailRule::Bounded,
                                      std::uniform_int_distribution<std::uint32_t>(0, 4)(rng)};
    }
    // exceptions must stay below the reduced tail semantics? no: traces are
    // independent per component, nothing more to fix
    (void)spec;
    return out;
}

/// Pointwise trace sum capped at the component size.
inline TraceProfile profile_join(const CatalogueSpec& spec, const TraceProfile& a,
                                 const TraceProfile& b) {
    TraceProfile out;
    out.classes.resize(spec.classes.size());
    auto cap = [](ExtNat t, ExtNat size) { return t <= size ? t : size; };
    for (std::size_t k = 0; k < spec.classes.size(); ++k) {
        const auto& c = spec.classes[k];
        std::size_t n = std::max(a.classes[k].exceptional.size(),
                                 b.classes[k].exceptional.size());
        for (std::size_t j = 0; j < n; ++j)
            out.classes[k].exceptional.push_back(
                cap(trace_at(a, k, static_cast<std::uint32_t>(j)) +
                        trace_at(b, k, static_cast<std::uint32_t>(j)),
                    c.size));
        if (c.multiplicity.is_omega())
            out.classes[k].tail = cap(*a.classes[k].tail + *b.classes[k].tail, c.size);
    }
    if (spec.family) {
        FamilyTraces f;
        const auto& fa = *a.family;
        const auto& fb = *b.family;
        if (fa.rule == FamilyTailRule::Full || fb.rule == FamilyTailRule::Full) {
            f.rule = FamilyTailRule::Full;
        } else {
            f.rule = FamilyTailRule::Bounded;
            f.bound = fa.bound + fb.bound;
        }
        auto side_value = [&](const FamilyTraces& ft, std::uint32_t size,
                              std::uint32_t index) -> ExtNat {
            for (const auto& e : ft.exceptions)
                if (e.size == size && e.index == index) return e.trace;
            return ft.rule == FamilyTailRule::Full ? ExtNat(size) : ExtNat(ft.bound);
        };
        std::set<std::pair<std::uint32_t, std::uint32_t>> keys;
        for (const auto& e : fa.exceptions) keys.insert({e.size, e.index});
        for (const auto& e : fb.exceptions) keys.insert({e.size, e.index});
        for (auto [size, index] : keys)
            f.exceptions.push_back(
                {size, index,
                 cap(side_value(fa, size, index) + side_value(fb, size, index), ExtNat(size))});
        out.family = std::move(f);
    }
    return out;
}

// --- golden battery ----------------------------------------------------------

struct GoldenCase {
    std::string name;
    CatalogueSpec spec;
    ForcingClass expected;
    bool indivisible;
};

/// Classification table for the basic one-shape catalogues, instantiated
/// for full relations, complete graphs and strict chains.
inline std::vector<GoldenCase> golden_battery() {
    std::vector<GoldenCase> out;
    struct Base {
        const char* tag;
        ClassShape shape;
    };
    for (Base base : {Base{"F", ClassShape::Full}, Base{"K", ClassShape::Complete},
                      Base{"L", ClassShape::StrictLinear}}) {
        auto cls = [&](ExtNat size, ExtNat mult) {
            return ComponentClass::of_shape(base.shape, size, mult);
        };
        auto spec1 = [&](ComponentClass c) {
            CatalogueSpec s;
            s.classes.push_back(std::move(c));
            return s;
        };
        std::string t = base.tag;
        out.push_back({"union_omega_" + t + "1", spec1(cls(ExtNat(1), ExtNat::omega())),
                       ForcingClass::fin_power(1), true});
        out.push_back({"union_omega_" + t + "2", spec1(cls(ExtNat(2), ExtNat::omega())),
                       ForcingClass::fin_power(1), false});
        out.push_back({"union_1_" + t + "omega", spec1(cls(ExtNat::omega(), ExtNat(1))),
                       ForcingClass::fin_power(1), true});
        out.push_back({"union_2_" + t + "omega", spec1(cls(ExtNat::omega(), ExtNat(2))),
                       ForcingClass::fin_power(2), false});
        out.push_back({"union_omega_" + t + "omega",
                       spec1(cls(ExtNat::omega(), ExtNat::omega())),
                       ForcingClass::fin_times_fin(), true});
        {
            CatalogueSpec s;
            s.family = UnboundedFamily{base.shape, 1, {}};
            out.push_back({"unbounded_" + t + "n", std::move(s),
                           ForcingClass::edfin_product(0), true});
        }
        {
            CatalogueSpec s;
            s.classes.push_back(cls(ExtNat(3), ExtNat(1)));
            s.classes.push_back(cls(ExtNat(2), ExtNat::omega()));
            out.push_back({t + "3_plus_union_omega_" + t + "2", std::move(s),
                           ForcingClass::fin_power(1), false});
        }
    }
    return out;
}

/// Specs spanning cases a1/a2 for the exponent-one criterion.
inline std::vector<CatalogueSpec> n1_battery() {
    std::vector<CatalogueSpec> out;
    for (ClassShape base :
         {ClassShape::Full, ClassShape::Complete, ClassShape::StrictLinear}) {
        auto cls = [&](ExtNat size, ExtNat mult) {
            return ComponentClass::of_shape(base, size, mult);
        };
        auto add = [&](std::vector<ComponentClass> cs) {
            CatalogueSpec s;
            s.classes = std::move(cs);
            out.push_back(std::move(s));
        };
        // a1: Y finite
        add({cls(ExtNat::omega(), ExtNat(1))});
        add({cls(ExtNat::omega(), ExtNat(2))});
        add({cls(ExtNat::omega(), ExtNat(3))});
        add({cls(ExtNat(3), ExtNat(1)), cls(ExtNat::omega(), ExtNat(1))});
        add({cls(ExtNat(3), ExtNat(1)), cls(ExtNat::omega(), ExtNat(2))});
        // a2: Y infinite
        add({cls(ExtNat(1), ExtNat::omega())});
        add({cls(ExtNat(2), ExtNat::omega())});
        add({cls(ExtNat(2), ExtNat::omega()), cls(ExtNat::omega(), ExtNat(1))});
        add({cls(ExtNat(2), ExtNat::omega()), cls(ExtNat::omega(), ExtNat(2))});
        add({cls(ExtNat(4), ExtNat::omega()), cls(ExtNat(1), ExtNat(2)),
             cls(ExtNat::omega(), ExtNat(3))});
    }
    return out;  // 30 specs
}

// --- suites -------------------------------------------------------------------

/// Monomorphicity downward transfer on all 3-point and sampled 4-point
/// relations.
inline PropertyResult monomorphicity_sweep(std::uint64_t seed, long samples4 = 100000) {
    PropertyResult res{"monomorphicity_sweep"};
    auto check = [&](const BinaryStructure& x) {
        const int n = x.size();
        for (int p = 1; p <= n && res.pass; ++p) {
            if (!is_p_monomorphic(x, p)) continue;
            int lim = std::min(p, n - p);
            for (int r = 1; r <= lim; ++r)
                if (!is_p_monomorphic(x, r)) {
                    std::ostringstream os;
                    os << "violation at n=" << n << " p=" << p << " r=" << r;
                    res.fail(os.str());
                    return;
                }
        }
        ++res.cases;
    };
    for (std::uint32_t bits = 0; bits < (1u << 9) && res.pass; ++bits) {
        BinaryStructure x(3);
        for (int u = 0; u < 3; ++u)
            for (int v = 0; v < 3; ++v)
                if (bits & (1u << (u * 3 + v))) x.add_pair(u, v);
        check(x);
    }
    Rng rng(seed);
    std::uniform_int_distribution<std::uint32_t> mask(0, (1u << 16) - 1);
    for (long i = 0; i < samples4 && res.pass; ++i) {
        std::uint32_t bits = mask(rng);
        BinaryStructure x(4);
        for (int u = 0; u < 4; ++u)
            for (int v = 0; v < 4; ++v)
                if (bits & (1u << (u * 4 + v))) x.add_pair(u, v);
        check(x);
    }
    return res;
}

/// sm idempotence, <= within <=*, separativity/antisymmetry of sq, and the
/// atom equivalences, on random pre-orders.
inline PropertyResult poset_laws(std::uint64_t seed, long count = 1000, int max_elems = 6) {
    PropertyResult res{"poset_laws"};
    Rng rng(seed);
    std::uniform_int_distribution<int> nd(1, max_elems);
    for (long i = 0; i < count && res.pass; ++i) {
        FinitePreOrder p = random_preorder(rng, nd(rng));
        FinitePreOrder star = sm(p);
        for (int a = 0; a < p.size() && res.pass; ++a)
            for (int b = 0; b < p.size(); ++b)
                if (p.le(a, b) && !star.le(a, b)) {
                    res.fail("<= not within <=*");
                    break;
                }
        if (!(sm(star) == star)) res.fail("sm not idempotent");
        QuotientPoset q = sq(p);
        if (!q.order.is_antisymmetric()) res.fail("sq not antisymmetric");
        else if (!is_separative(q.order)) res.fail("sq not separative");
        // finite non-empty pre-orders always have atoms below every element
        bool al_p = is_atomless(p), al_s = is_atomless(star), al_q = is_atomless(q.order);
        if (al_p || al_s || al_q) res.fail("finite pre-order reported atomless");
        if (!is_atomic(p) || !is_atomic(star) || !is_atomic(q.order))
            res.fail("finite pre-order not atomic");
        ++res.cases;
    }
    return res;
}

/// sm(P x Q) = sm(P) x sm(Q) and sq(P x Q) isomorphic to sq(P) x sq(Q).
inline PropertyResult product_laws(std::uint64_t seed, long count = 300, int max_elems = 5) {
    PropertyResult res{"product_laws"};
    Rng rng(seed);
    std::uniform_int_distribution<int> nd(1, max_elems);
    for (long i = 0; i < count && res.pass; ++i) {
        FinitePreOrder p = random_preorder(rng, nd(rng));
        FinitePreOrder q = random_preorder(rng, nd(rng));
        if (!(sm(product(p, q)) == product(sm(p), sm(q)))) {
            res.fail("sm product law fails");
            break;
        }
        if (!iso(sq(product(p, q)).order, product(sq(p).order, sq(q).order))) {
            res.fail("sq product law fails");
            break;
        }
        ++res.cases;
    }
    return res;
}

/// Quotient-transfer triples: maps passing the three conditions must induce
/// a quotient isomorphism (check_transfer throws on violation).
inline PropertyResult transfer_soundness(std::uint64_t seed, long count = 200,
                                         int max_elems = 5) {
    PropertyResult res{"transfer_soundness"};
    Rng rng(seed);
    std::uniform_int_distribution<int> nd(1, max_elems);
    std::uniform_int_distribution<int> mode(0, 2);
    while (res.cases < count && res.pass) {
        FinitePreOrder p = random_partial_order(rng, nd(rng));
        std::vector<int> f;
        FinitePreOrder q;
        switch (mode(rng)) {
            case 0: {  // identity
                q = p;
                f.resize(p.size());
                std::iota(f.begin(), f.end(), 0);
                break;
            }
            case 1: {  // relabeling by a random permutation
                std::vector<int> perm(p.size());
                std::iota(perm.begin(), perm.end(), 0);
                std::shuffle(perm.begin(), perm.end(), rng);
                std::vector<std::pair<int, int>> below;
                for (int a = 0; a < p.size(); ++a)
                    for (int b = 0; b < p.size(); ++b)
                        if (p.le(a, b)) below.emplace_back(perm[a], perm[b]);
                q = FinitePreOrder::closure(p.size(), below);
                f = perm;
                break;
            }
            default: {  // the quotient map onto sq(P)
                QuotientPoset s = sq(p);
                q = s.order;
                f = s.class_of;
                break;
            }
        }
        try {
            TransferVerdict v = check_transfer(f, p, q);
            if (!v.conditions_hold()) continue;  // does not count toward the quota
            if (!v.quotient_iso) res.fail("conditions hold but no isomorphism returned");
        } catch (const std::logic_error& e) {
            res.fail(std::string("transfer violated: ") + e.what());
        }
        ++res.cases;
    }
    return res;
}

namespace detail {

/// Validated random spec plus a truncation with at most `max_blocks`
/// components; retries until the truncation fits.
inline Truncation small_truncation(Rng& rng, CatalogueSpec& spec, int max_blocks,
                                   std::uint32_t count_cap, std::uint32_t size_cap) {
    for (;;) {
        spec = random_valid_spec(rng, 3, size_cap);
        Truncation t = truncate(spec, count_cap, size_cap, 256);
        if (static_cast<int>(t.blocks.size()) <= max_blocks) return t;
    }
}

}  // namespace detail

/// Matching oracle against the brute-force subset oracle on random
/// validated specs and random subsets. Point totals are held small enough
/// to keep the subset enumeration tractable.
inline PropertyResult oracle_agreement(std::uint64_t seed, long count = 500) {
    PropertyResult res{"oracle_agreement"};
    Rng rng(seed);
    // assorted truncation scales within the 12-component / size-6 budget
    const std::pair<std::uint32_t, std::uint32_t> scales[] = {{2, 3}, {3, 2}, {1, 6}, {2, 4}};
    while (res.cases < count && res.pass) {
        CatalogueSpec spec;
        auto [count_cap, size_cap] = scales[res.cases % 4];
        Truncation t = detail::small_truncation(rng, spec, 12, count_cap, size_cap);
        if (t.structure.size() > 18) continue;
        std::vector<int> s = random_subset(rng, t, 0.7);
        bool m = copy_inside_matching(t, s, t);
        bool b = copy_inside_bruteforce(t, s, t.structure, 256);
        if (m != b) {
            std::ostringstream os;
            os << "oracles disagree (matching=" << m << ", bruteforce=" << b << ") on "
               << t.blocks.size() << " blocks";
            res.fail(os.str());
        }
        ++res.cases;
    }
    return res;
}

/// Downward closure of the membership predicate under pointwise reduction.
inline PropertyResult ideal_monotonicity(std::uint64_t seed, long count = 400) {
    PropertyResult res{"ideal_monotonicity"};
    Rng rng(seed);
    for (long i = 0; i < count && res.pass; ++i) {
        CatalogueSpec spec = random_valid_spec(rng, 3, 5);
        TraceProfile big = random_profile(rng, spec);
        TraceProfile small = reduce_profile(rng, spec, big);
        if (ideal_member(spec, big) && !ideal_member(spec, small))
            res.fail("membership lost under pointwise reduction");
        ++res.cases;
    }
    return res;
}

/// On indivisible specs the membership predicate is closed under pointwise
/// join; every profile-representable partition has a member-false side.
inline PropertyResult ideal_union_and_dichotomy(std::uint64_t seed, long count = 400) {
    PropertyResult res{"ideal_union_and_dichotomy"};
    Rng rng(seed);
    while (res.cases < count && res.pass) {
        CatalogueSpec spec = random_valid_spec(rng, 3, 5);
        if (!is_indivisible(spec)) continue;
        TraceProfile s1 = random_profile(rng, spec);
        TraceProfile s2 = random_profile(rng, spec);
        if (ideal_member(spec, s1) && ideal_member(spec, s2) &&
            !ideal_member(spec, profile_join(spec, s1, s2)))
            res.fail("union of two member profiles escaped the ideal");
        auto [a, b] = random_complementary_pair(rng, spec);
        if (ideal_member(spec, a) && ideal_member(spec, b))
            res.fail("complementary partition with both sides copy-free");
        ++res.cases;
    }
    return res;
}

/// Copies of a truncation inside a (possibly larger) truncation coincide
/// with the point sets generated by slot-injection descriptors.
inline PropertyResult copy_characterization(std::uint64_t seed, long count = 200) {
    PropertyResult res{"copy_characterization"};
    Rng rng(seed);
    while (res.cases < count && res.pass) {
        CatalogueSpec spec;
        Truncation t = detail::small_truncation(rng, spec, 5, 2, 3);
        if (t.structure.size() > 10) continue;
        std::set<std::vector<int>> direct;
        for (auto& c : copies(t.structure, t.structure)) direct.insert(c);
        if (direct != descriptor_generated_copies(t)) {
            res.fail("descriptor-generated copies differ from copies(X,X)");
            break;
        }
        // non-degenerate variant: a strictly smaller pattern truncation
        Truncation pat = truncate(spec, 1, 2, 256);
        if (pat.structure.size() < t.structure.size()) {
            std::set<std::vector<int>> dp;
            for (auto& c : copies(pat.structure, t.structure)) dp.insert(c);
            if (dp != descriptor_generated_copies(pat, t)) {
                res.fail("descriptor-generated pattern copies differ from copies(P,X)");
                break;
            }
        }
        ++res.cases;
    }
    return res;
}

/// Both witness sides are copy-free and complementary on divisible specs;
/// indivisible specs defeat every random complementary pair.
inline PropertyResult witness_soundness(std::uint64_t seed, long random_specs = 60,
                                        long pairs_per_indivisible = 100) {
    PropertyResult res{"witness_soundness"};
    Rng rng(seed);

    auto complementary = [&](const CatalogueSpec& spec, const TraceProfile& a,
                             const TraceProfile& b) {
        for (std::size_t k = 0; k < spec.classes.size(); ++k) {
            const auto& c = spec.classes[k];
            std::uint32_t probe = c.multiplicity.is_omega()
                                      ? std::max<std::size_t>(
                                            {a.classes[k].exceptional.size(),
                                             b.classes[k].exceptional.size(), 2}) +
                                            1
                                      : c.multiplicity.value();
            for (std::uint32_t r = 0; r < probe; ++r)
                if (trace_at(a, k, r) + trace_at(b, k, r) != c.size) return false;
        }
        if (spec.family) {
            bool fa = a.family->rule == FamilyTailRule::Full;
            bool fb = b.family->rule == FamilyTailRule::Full;
            if (fa == fb) return false;
            if ((fa ? b : a).family->bound != 0) return false;
        }
        return true;
    };

    auto check_divisible = [&](const CatalogueSpec& spec) {
        auto [a, b] = divisibility_witness(spec);
        if (!ideal_member(spec, a) || !ideal_member(spec, b))
            res.fail("witness side contains a copy");
        else if (!complementary(spec, a, b))
            res.fail("witness sides are not complementary");
        ++res.cases;
    };
    auto check_indivisible = [&](const CatalogueSpec& spec) {
        for (long i = 0; i < pairs_per_indivisible && res.pass; ++i) {
            auto [a, b] = random_complementary_pair(rng, spec);
            if (ideal_member(spec, a) && ideal_member(spec, b))
                res.fail("indivisible spec admits a copy-free partition");
        }
        ++res.cases;
    };

    for (const auto& g : golden_battery()) {
        if (!res.pass) break;
        if (g.indivisible)
            check_indivisible(g.spec);
        else
            check_divisible(g.spec);
    }
    for (long i = 0; i < random_specs && res.pass; ++i) {
        CatalogueSpec spec = random_valid_spec(rng, 3, 5);
        if (is_indivisible(spec))
            check_indivisible(spec);
        else
            check_divisible(spec);
    }
    return res;
}

/// The golden classification table.
inline PropertyResult golden_table() {
    PropertyResult res{"golden_table"};
    for (const auto& g : golden_battery()) {
        ForcingClass fc = classify(g.spec);
        if (!(fc == g.expected))
            res.fail(g.name + ": classified " + fc.label() + ", expected " +
                     g.expected.label());
        else if (is_indivisible(g.spec) != g.indivisible)
            res.fail(g.name + ": wrong indivisibility verdict");
        ++res.cases;
    }
    return res;
}

/// Exponent-one criterion across the a1/a2 battery.
inline PropertyResult n1_criterion() {
    PropertyResult res{"n1_criterion"};
    for (const auto& spec : n1_battery()) {
        try {
            ForcingClass fc = classify(spec);
            bool one = n_equals_one_check(spec);  // throws on internal mismatch
            if (one != (fc.exponent == 1)) res.fail("criterion/exponent mismatch");
        } catch (const std::exception& e) {
            res.fail(std::string("battery spec failed: ") + e.what());
        }
        ++res.cases;
    }
    return res;
}

/// Rejection of the mixed-shape pair with a concrete counterexample, and
/// acceptance plus classification of the path/cycle catalogue.
inline PropertyResult validation_counterexamples() {
    PropertyResult res{"validation_counterexamples"};
    {
        CatalogueSpec s;
        s.classes.push_back(
            ComponentClass::of_shape(ClassShape::Complete, ExtNat::omega(), ExtNat(1)));
        s.classes.push_back(
            ComponentClass::of_shape(ClassShape::Full, ExtNat::omega(), ExtNat(1)));
        ValidationReport r = validate(s);
        if (r.valid)
            res.fail("mixed complete/full pair accepted");
        else {
            bool concrete = false;
            for (const auto& f : r.failures)
                if (f.rule == "(i)" && f.detail.find("counterexample") != std::string::npos)
                    concrete = true;
            if (!concrete) res.fail("rejection carries no concrete counterexample");
        }
        ++res.cases;
    }
    {
        CatalogueSpec s;
        s.classes.push_back(
            ComponentClass::of_structure(BinaryStructure::path_graph(3), ExtNat::omega()));
        s.classes.push_back(
            ComponentClass::of_structure(BinaryStructure::cycle_graph(4), ExtNat::omega()));
        ValidationReport r = validate(s);
        if (!r.valid)
            res.fail("path/cycle catalogue rejected: " + r.summary());
        else {
            ForcingClass fc = classify(s);
            if (!(fc == ForcingClass::fin_power(1)))
                res.fail("path/cycle catalogue classified " + fc.label());
        }
        ++res.cases;
    }
    return res;
}

/// validate's verdict on hypothesis (i) against a brute-force subset sweep,
/// for specs whose class data are all finite.
inline PropertyResult validate_agreement(std::uint64_t seed, long count = 50) {
    PropertyResult res{"validate_agreement"};
    Rng rng(seed);
    for (long i = 0; i < count && res.pass; ++i) {
        CatalogueSpec spec = random_mixed_spec(rng, 3, 5);
        ValidationReport rep = validate(spec);
        std::set<std::pair<int, int>> flagged;
        for (const auto& f : rep.failures)
            if (f.rule == "(i)") flagged.insert({f.class_i, f.class_j});
        for (int a = 0; a < static_cast<int>(spec.classes.size()); ++a)
            for (int b = 0; b < static_cast<int>(spec.classes.size()); ++b) {
                const auto& ca = spec.classes[a];
                const auto& cb = spec.classes[b];
                if (ca.size.is_omega() || cb.size.is_omega()) continue;
                if (ca.size.value() > cb.size.value()) continue;
                BinaryStructure src = ca.representative();
                BinaryStructure tgt = cb.representative();
                bool brute =
                    !embkit::detail::maximal_embedding_counterexample(src, tgt).has_value();
                if (brute == flagged.count({a, b})) {
                    std::ostringstream os;
                    os << "pair (" << a << "," << b << "): brute=" << brute
                       << " validate-flagged=" << flagged.count({a, b});
                    res.fail(os.str());
                }
            }
        ++res.cases;
    }
    return res;
}

/// Enlarging truncation caps keeps the smaller truncation embeddable.
inline PropertyResult truncate_monotonicity(std::uint64_t seed, long count = 25) {
    PropertyResult res{"truncate_monotonicity"};
    Rng rng(seed);
    for (long i = 0; i < count && res.pass; ++i) {
        CatalogueSpec spec = random_valid_spec(rng, 2, 4);
        Truncation small = truncate(spec, 1, 3, 256);
        Truncation big = truncate(spec, 2, 4, 256);
        if (!embeds(small.structure, big.structure))
            res.fail("smaller truncation does not embed into the larger one");
        ++res.cases;
    }
    return res;
}

/// Writer/reader round trips, compared through re-serialization.
inline PropertyResult io_roundtrip(std::uint64_t seed, long count = 50) {
    PropertyResult res{"io_roundtrip"};
    Rng rng(seed);
    for (long i = 0; i < count && res.pass; ++i) {
        {
            BinaryStructure s = random_structure(rng, 1 + static_cast<int>(rng() % 7));
            std::ostringstream o1;
            write_structure(o1, s);
            std::istringstream in(o1.str());
            std::ostringstream o2;
            write_structure(o2, read_structure(in));
            if (o1.str() != o2.str()) res.fail("structure round trip differs");
        }
        {
            CatalogueSpec spec = random_valid_spec(rng, 3, 5, true, 0.0);
            std::ostringstream o1;
            write_spec(o1, spec);
            std::istringstream in(o1.str());
            std::ostringstream o2;
            write_spec(o2, read_spec(in));
            if (o1.str() != o2.str()) res.fail("spec round trip differs");

            TraceProfile p = random_profile(rng, spec);
            std::ostringstream p1;
            write_profile(p1, p);
            std::istringstream pin(p1.str());
            std::ostringstream p2;
            write_profile(p2, read_profile(pin, spec));
            if (p1.str() != p2.str()) res.fail("profile round trip differs");
        }
        {
            FinitePreOrder p = random_preorder(rng, 1 + static_cast<int>(rng() % 6));
            std::ostringstream o1;
            write_preorder(o1, p);
            std::istringstream in(o1.str());
            std::ostringstream o2;
            write_preorder(o2, read_preorder(in));
            if (o1.str() != o2.str()) res.fail("pre-order round trip differs");
        }
        ++res.cases;
    }
    return res;
}

/// Every suite at CLI scale.
inline std::vector<PropertyResult> run_all(std::uint64_t seed) {
    return {
        monomorphicity_sweep(seed, 20000),
        poset_laws(seed + 1, 400),
        product_laws(seed + 2, 150),
        transfer_soundness(seed + 3, 100),
        oracle_agreement(seed + 4, 150),
        ideal_monotonicity(seed + 5, 200),
        ideal_union_and_dichotomy(seed + 6, 200),
        copy_characterization(seed + 7, 80),
        witness_soundness(seed + 8, 30, 40),
        golden_table(),
        n1_criterion(),
        validation_counterexamples(),
        validate_agreement(seed + 9, 30),
        truncate_monotonicity(seed + 10, 10),
        io_roundtrip(seed + 11, 25),
    };
}

}  // namespace embkit::verify
