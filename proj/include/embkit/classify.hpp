#pragma once

#include <cassert>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "embkit/catalogue.hpp"
#include "embkit/ideal.hpp"

namespace embkit {

/// Symbolic forcing-equivalence class of the poset of copies.
struct ForcingClass {
    enum class Kind { FinPower, EDfinProduct, FinTimesFin };
    Kind kind = Kind::FinPower;
    std::uint32_t exponent = 1;  // n for FinPower, mu for EDfinProduct

    static ForcingClass fin_power(std::uint32_t n) { return {Kind::FinPower, n}; }
    static ForcingClass edfin_product(std::uint32_t mu) { return {Kind::EDfinProduct, mu}; }
    static ForcingClass fin_times_fin() { return {Kind::FinTimesFin, 0}; }

    bool operator==(const ForcingClass&) const = default;

    std::string label() const {
        std::ostringstream os;
        switch (kind) {
            case Kind::FinPower:
                if (exponent == 1)
                    os << "(P(omega)/Fin)+";
                else
                    os << "((P(omega)/Fin)+)^" << exponent;
                break;
            case Kind::EDfinProduct:
                os << "(P(Delta)/ED_fin)+";
                if (exponent > 0) os << " x ((P(omega)/Fin)+)^" << exponent;
                break;
            case Kind::FinTimesFin:
                os << "(P(omega x omega)/(Fin x Fin))+";
                break;
        }
        return os.str();
    }
};

/// Case dispatch over the derived parameters. Refuses specs failing the
/// hypotheses: classification is only meaningful for validated input.
inline ForcingClass classify(const CatalogueSpec& spec) {
    ValidationReport v = validate(spec);
    if (!v.valid) throw std::domain_error("classify: spec fails validation: " + v.summary());
    DerivedStats st = derive_stats(spec);
    if (st.mu.is_omega()) return ForcingClass::fin_times_fin();            // (a4)
    if (!st.n_fin_finite()) return ForcingClass::edfin_product(st.mu.value());  // (a3)
    if (!st.y_finite) return ForcingClass::fin_power(st.mu.value() + 1);   // (a2)
    if (st.mu.value() >= 1) return ForcingClass::fin_power(st.mu.value()); // (a1)
    throw std::domain_error("classify: structure is not countable");
}

inline std::string case_tag(const DerivedStats& st) {
    if (st.mu.is_omega()) return "a4";
    if (!st.n_fin_finite()) return "a3";
    if (!st.y_finite) return "a2";
    return "a1";
}

/// The n=1 criterion for FinPower specs: N finite set of naturals, or Y
/// finite with exactly one infinite component. Asserted against the
/// computed exponent rather than assumed.
inline bool n_equals_one_check(const CatalogueSpec& spec) {
    ForcingClass fc = classify(spec);
    if (fc.kind != ForcingClass::Kind::FinPower)
        throw std::domain_error("n_equals_one_check: spec is not in a FinPower case");
    DerivedStats st = derive_stats(spec);
    bool n_all_finite = st.n_fin_finite() && !st.omega_size;
    bool criterion = n_all_finite || (st.y_finite && st.mu == ExtNat(1));
    if (criterion != (fc.exponent == 1))
        throw std::logic_error("n_equals_one_check: criterion disagrees with the exponent");
    return criterion;
}

/// Indivisibility: N unbounded, or N = {1}, or a single component, or
/// infinitely many infinite components.
inline bool is_indivisible(const CatalogueSpec& spec) {
    ValidationReport v = validate(spec);
    if (!v.valid)
        throw std::domain_error("is_indivisible: spec fails validation: " + v.summary());
    DerivedStats st = derive_stats(spec);
    // the unbounded-N disjunct requires N to consist of naturals only: an
    // unbounded family next to finitely many infinite components is divisible
    if (st.unbounded_sizes && !st.omega_size) return true;
    if (st.mu.is_omega()) return true;
    if (st.total_components == ExtNat(1)) return true;
    if (!st.omega_size && !st.unbounded_sizes &&
        st.finite_sizes == std::set<std::uint32_t>{1})
        return true;
    return false;
}

/// Complementary trace-profile pair witnessing divisibility, both sides
/// copy-free.
inline std::pair<TraceProfile, TraceProfile> divisibility_witness(const CatalogueSpec& spec) {
    if (is_indivisible(spec))
        throw std::logic_error("divisibility_witness: structure is indivisible");
    DerivedStats st = derive_stats(spec);

    TraceProfile a = full_profile(spec), b = zero_profile(spec);
    if (st.mu > ExtNat(0)) {
        // Y vs Z when there are finite components, otherwise one infinite
        // component against the remaining ones (mu >= 2 here).
        bool have_finite = !st.finite_sizes.empty() || st.unbounded_sizes;
        bool first_omega_seen = false;
        for (std::size_t k = 0; k < spec.classes.size(); ++k) {
            const auto& c = spec.classes[k];
            if (c.size.is_finite()) continue;  // finite classes: a full, b zero
            auto& ta = a.classes[k];
            auto& tb = b.classes[k];
            if (have_finite) {
                // side A = Y: zero on every infinite component
                if (c.multiplicity.is_omega()) {
                    ta.tail = ExtNat(0);
                    tb.tail = ExtNat::omega();
                } else {
                    ta.exceptional.assign(c.multiplicity.value(), ExtNat(0));
                    tb.exceptional.assign(c.multiplicity.value(), ExtNat::omega());
                }
            } else if (!first_omega_seen) {
                // side A = the first infinite component alone
                first_omega_seen = true;
                ta.exceptional.clear();
                tb.exceptional.clear();
                if (c.multiplicity.is_omega()) {
                    ta.exceptional = {ExtNat::omega()};
                    ta.tail = ExtNat(0);
                    tb.exceptional = {ExtNat(0)};
                    tb.tail = ExtNat::omega();
                } else {
                    ta.exceptional.assign(c.multiplicity.value(), ExtNat(0));
                    ta.exceptional[0] = ExtNat::omega();
                    tb.exceptional.assign(c.multiplicity.value(), ExtNat::omega());
                    tb.exceptional[0] = ExtNat(0);
                }
            } else {
                ta.exceptional.clear();
                tb.exceptional.clear();
                if (c.multiplicity.is_omega()) {
                    ta.tail = ExtNat(0);
                    tb.tail = ExtNat::omega();
                } else {
                    ta.exceptional.assign(c.multiplicity.value(), ExtNat(0));
                    tb.exceptional.assign(c.multiplicity.value(), ExtNat::omega());
                }
            }
        }
        return {a, b};
    }

    // mu = 0, N finite, max N > 1: remove one point from every component of
    // maximal size; side B collects exactly the removed points.
    std::uint32_t m = *st.finite_sizes.rbegin();
    for (std::size_t k = 0; k < spec.classes.size(); ++k) {
        const auto& c = spec.classes[k];
        if (c.size != ExtNat(m)) continue;
        auto& ta = a.classes[k];
        auto& tb = b.classes[k];
        if (c.multiplicity.is_omega()) {
            ta.tail = ExtNat(m - 1);
            tb.tail = ExtNat(1);
        } else {
            ta.exceptional.assign(c.multiplicity.value(), ExtNat(m - 1));
            tb.exceptional.assign(c.multiplicity.value(), ExtNat(1));
        }
    }
    return {a, b};
}

/// Full classification record for reporting.
struct ClassificationReport {
    bool validation_ok = false;
    ValidationReport validation;
    std::optional<DerivedStats> stats;
    std::optional<ForcingClass> forcing_class;
    std::string tag;  // a1..a4
    bool indivisible = false;
    std::optional<std::pair<TraceProfile, TraceProfile>> witness;
};

inline ClassificationReport report(const CatalogueSpec& spec) {
    ClassificationReport r;
    r.validation = validate(spec);
    r.validation_ok = r.validation.valid;
    if (!r.validation_ok) return r;
    r.stats = derive_stats(spec);
    r.forcing_class = classify(spec);
    r.tag = case_tag(*r.stats);
    r.indivisible = is_indivisible(spec);
    if (!r.indivisible) r.witness = divisibility_witness(spec);
    return r;
}

}  // namespace embkit
