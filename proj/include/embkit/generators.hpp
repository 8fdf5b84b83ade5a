#pragma once

#include <random>
#include <vector>

#include "embkit/catalogue.hpp"
#include "embkit/ideal.hpp"
#include "embkit/structure.hpp"

namespace embkit {

using Rng = std::mt19937_64;

/// Uniform relation on n points with independent pair density.
inline BinaryStructure random_structure(Rng& rng, int points, double density = 0.5) {
    BinaryStructure s(points);
    std::bernoulli_distribution coin(density);
    for (int u = 0; u < points; ++u)
        for (int v = 0; v < points; ++v)
            if (coin(rng)) s.add_pair(u, v);
    return s;
}

namespace detail {

inline ClassShape random_shape(Rng& rng, bool allow_singletons) {
    static const ClassShape all[] = {
        ClassShape::Full,          ClassShape::Complete,
        ClassShape::StrictLinear,  ClassShape::InverseStrictLinear,
        ClassShape::ReflexiveLinear, ClassShape::InverseReflexiveLinear,
        ClassShape::SingletonLoop, ClassShape::SingletonNoLoop,
    };
    int hi = allow_singletons ? 7 : 5;
    return all[std::uniform_int_distribution<int>(0, hi)(rng)];
}

}  // namespace detail

/// Random spec built around one base shape so that hypothesis (i) holds by
/// construction: classes reuse the base shape at assorted sizes and
/// multiplicities. With probability `explicit_p` a size-n class is stored as
/// an explicit structure instead of a shape tag (same isomorphism type).
inline CatalogueSpec random_valid_spec(Rng& rng, std::uint32_t max_classes = 4,
                                       std::uint32_t max_size = 6,
                                       bool allow_family = true,
                                       double explicit_p = 0.25) {
    std::uniform_int_distribution<std::uint32_t> nclasses(1, max_classes);
    std::uniform_int_distribution<std::uint32_t> sizes(1, max_size);
    std::bernoulli_distribution coin(0.5);
    std::bernoulli_distribution want_explicit(explicit_p);
    ClassShape base = detail::random_shape(rng, false);

    CatalogueSpec spec;
    bool family = allow_family && coin(rng);
    std::uint32_t k = nclasses(rng);
    for (std::uint32_t c = 0; c < k; ++c) {
        ExtNat size = coin(rng) ? ExtNat::omega() : ExtNat(sizes(rng));
        ExtNat mult = coin(rng) ? ExtNat::omega()
                                : ExtNat(std::uniform_int_distribution<std::uint32_t>(1, 3)(rng));
        if (size.is_finite() && want_explicit(rng))
            spec.classes.push_back(ComponentClass::of_structure(
                make_shape(base, static_cast<int>(size.value())), mult));
        else
            spec.classes.push_back(ComponentClass::of_shape(base, size, mult));
    }
    if (family) {
        UnboundedFamily f;
        f.shape = base;
        f.default_mult = std::uniform_int_distribution<std::uint32_t>(1, 2)(rng);
        if (coin(rng)) {
            std::uint32_t es = sizes(rng);
            f.exceptions[es] = std::uniform_int_distribution<std::uint32_t>(1, 4)(rng);
        }
        spec.family = f;
    } else {
        // guarantee infinitely many points
        bool infinite = false;
        for (const auto& c : spec.classes)
            if (c.size.is_omega() || c.multiplicity.is_omega()) infinite = true;
        if (!infinite) spec.classes.front().multiplicity = ExtNat::omega();
    }
    return spec;
}

/// Random spec with no constraint tying the classes together: shapes and
/// explicit structures are drawn independently, so hypotheses (i)/(ii) hold
/// only by accident. Feed to validate() to exercise rejection paths.
inline CatalogueSpec random_mixed_spec(Rng& rng, std::uint32_t max_classes = 3,
                                       std::uint32_t max_size = 5) {
    std::uniform_int_distribution<std::uint32_t> nclasses(1, max_classes);
    std::uniform_int_distribution<std::uint32_t> sizes(1, max_size);
    std::bernoulli_distribution coin(0.5);
    CatalogueSpec spec;
    std::uint32_t k = nclasses(rng);
    for (std::uint32_t c = 0; c < k; ++c) {
        ExtNat mult = coin(rng) ? ExtNat::omega()
                                : ExtNat(std::uniform_int_distribution<std::uint32_t>(1, 3)(rng));
        if (coin(rng)) {
            ClassShape s = detail::random_shape(rng, true);
            ExtNat size = !shape_allows_omega(s) ? ExtNat(1)
                          : coin(rng)            ? ExtNat::omega()
                                                 : ExtNat(sizes(rng));
            spec.classes.push_back(ComponentClass::of_shape(s, size, mult));
        } else {
            // random connected structure of small size
            int n = static_cast<int>(sizes(rng));
            BinaryStructure s = random_structure(rng, n, 0.6);
            for (int p = 1; p < n; ++p)
                if (!is_connected(s)) s.add_pair(p - 1, p);
            spec.classes.push_back(ComponentClass::of_structure(std::move(s), mult));
        }
    }
    spec.classes.front().multiplicity = ExtNat::omega();
    return spec;
}

/// Random trace profile over a spec: every trace uniform in {0..size} with a
/// chance of omega on omega-size components; tails and family data filled in
/// where the spec requires them.
inline TraceProfile random_profile(Rng& rng, const CatalogueSpec& spec,
                                   std::uint32_t truncation_hint = 4) {
    std::bernoulli_distribution coin(0.5);
    TraceProfile p;
    p.classes.resize(spec.classes.size());
    auto draw = [&](ExtNat size) -> ExtNat {
        if (size.is_omega())
            return coin(rng) ? ExtNat::omega()
                             : ExtNat(std::uniform_int_distribution<std::uint32_t>(
                                   0, truncation_hint)(rng));
        return ExtNat(
            std::uniform_int_distribution<std::uint32_t>(0, size.value())(rng));
    };
    for (std::size_t k = 0; k < spec.classes.size(); ++k) {
        const auto& c = spec.classes[k];
        std::uint32_t listed =
            c.multiplicity.is_omega()
                ? std::uniform_int_distribution<std::uint32_t>(0, 3)(rng)
                : std::uniform_int_distribution<std::uint32_t>(0, c.multiplicity.value())(rng);
        for (std::uint32_t j = 0; j < listed; ++j)
            p.classes[k].exceptional.push_back(draw(c.size));
        if (c.multiplicity.is_omega()) p.classes[k].tail = draw(c.size);
    }
    if (spec.family) {
        FamilyTraces f;
        std::uint32_t nex = std::uniform_int_distribution<std::uint32_t>(0, 3)(rng);
        for (std::uint32_t e = 0; e < nex; ++e) {
            FamilyException ex;
            ex.size = std::uniform_int_distribution<std::uint32_t>(1, 6)(rng);
            ex.index = std::uniform_int_distribution<std::uint32_t>(
                0, spec.family->mult_at(ex.size) - 1)(rng);
            ex.trace =
                ExtNat(std::uniform_int_distribution<std::uint32_t>(0, ex.size)(rng));
            f.exceptions.push_back(ex);
        }
        if (coin(rng)) {
            f.rule = FamilyTailRule::Full;
        } else {
            f.rule = FamilyTailRule::Bounded;
            f.bound = std::uniform_int_distribution<std::uint32_t>(0, 4)(rng);
        }
        p.family = f;
    }
    return p;
}

/// Complementary pair of profiles: traces over each component sum to the
/// component size. Family parts use matching Full/Bounded tail rules.
inline std::pair<TraceProfile, TraceProfile> random_complementary_pair(
    Rng& rng, const CatalogueSpec& spec, std::uint32_t listed = 3) {
    std::bernoulli_distribution coin(0.5);
    TraceProfile a, b;
    a.classes.resize(spec.classes.size());
    b.classes.resize(spec.classes.size());
    auto split = [&](ExtNat size) -> std::pair<ExtNat, ExtNat> {
        if (size.is_omega()) {
            // (omega, omega), (omega, finite) or (finite, omega)
            int which = std::uniform_int_distribution<int>(0, 2)(rng);
            ExtNat fin(std::uniform_int_distribution<std::uint32_t>(0, 4)(rng));
            if (which == 0) return {ExtNat::omega(), ExtNat::omega()};
            if (which == 1) return {ExtNat::omega(), fin};
            return {fin, ExtNat::omega()};
        }
        std::uint32_t t = std::uniform_int_distribution<std::uint32_t>(0, size.value())(rng);
        return {ExtNat(t), ExtNat(size.value() - t)};
    };
    for (std::size_t k = 0; k < spec.classes.size(); ++k) {
        const auto& c = spec.classes[k];
        std::uint32_t n = c.multiplicity.is_omega()
                              ? listed
                              : std::min(listed, c.multiplicity.value());
        for (std::uint32_t j = 0; j < n; ++j) {
            auto [ta, tb] = split(c.size);
            a.classes[k].exceptional.push_back(ta);
            b.classes[k].exceptional.push_back(tb);
        }
        if (c.multiplicity.is_omega()) {
            auto [ta, tb] = split(c.size);
            a.classes[k].tail = ta;
            b.classes[k].tail = tb;
        }
    }
    if (spec.family) {
        FamilyTraces fa, fb;
        // one side gets the full tail, the other a zero-bounded tail
        bool a_full = coin(rng);
        fa.rule = a_full ? FamilyTailRule::Full : FamilyTailRule::Bounded;
        fb.rule = a_full ? FamilyTailRule::Bounded : FamilyTailRule::Full;
        fa.bound = fb.bound = 0;
        a.family = fa;
        b.family = fb;
    }
    return {a, b};
}

/// Random subset of a truncation's points with per-point density.
inline std::vector<int> random_subset(Rng& rng, const Truncation& t, double density = 0.5) {
    std::bernoulli_distribution coin(density);
    std::vector<int> s;
    for (int p = 0; p < t.structure.size(); ++p)
        if (coin(rng)) s.push_back(p);
    return s;
}

}  // namespace embkit
