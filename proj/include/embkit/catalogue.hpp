#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "embkit/extnat.hpp"
#include "embkit/structure.hpp"

namespace embkit {

/// Shape tags admitted for catalogue component classes. The inverse linear
/// orders are distinct tags: over omega they are not isomorphic to the
/// forward orders, although every finite restriction is.
enum class ClassShape {
    Full,
    Complete,
    StrictLinear,
    InverseStrictLinear,
    ReflexiveLinear,
    InverseReflexiveLinear,
    SingletonLoop,
    SingletonNoLoop,
};

inline const char* class_shape_name(ClassShape s) {
    switch (s) {
        case ClassShape::Full: return "full";
        case ClassShape::Complete: return "complete";
        case ClassShape::StrictLinear: return "strict_linear";
        case ClassShape::InverseStrictLinear: return "inverse_strict_linear";
        case ClassShape::ReflexiveLinear: return "reflexive_linear";
        case ClassShape::InverseReflexiveLinear: return "inverse_reflexive_linear";
        case ClassShape::SingletonLoop: return "singleton_loop";
        case ClassShape::SingletonNoLoop: return "singleton_noloop";
    }
    return "?";
}

inline bool shape_allows_omega(ClassShape s) {
    return s != ClassShape::SingletonLoop && s != ClassShape::SingletonNoLoop;
}

/// The finite instance of a shape at size n. Inverse orders are built
/// reversed; at finite size they are isomorphic to the forward ones.
inline BinaryStructure make_shape(ClassShape s, int n) {
    switch (s) {
        case ClassShape::Full: return BinaryStructure::full(n);
        case ClassShape::Complete: return BinaryStructure::complete(n);
        case ClassShape::StrictLinear: return BinaryStructure::strict_chain(n);
        case ClassShape::ReflexiveLinear: return BinaryStructure::reflexive_chain(n);
        case ClassShape::InverseStrictLinear: {
            BinaryStructure c = BinaryStructure::strict_chain(n);
            BinaryStructure out(n);
            for (auto [u, v] : c.pairs()) out.add_pair(v, u);
            return out;
        }
        case ClassShape::InverseReflexiveLinear: {
            BinaryStructure c = BinaryStructure::reflexive_chain(n);
            BinaryStructure out(n);
            for (auto [u, v] : c.pairs()) out.add_pair(v, u);
            return out;
        }
        case ClassShape::SingletonLoop:
            if (n != 1) throw std::domain_error("singleton shape has size 1");
            return BinaryStructure::full(1);
        case ClassShape::SingletonNoLoop:
            if (n != 1) throw std::domain_error("singleton shape has size 1");
            return BinaryStructure(1);
    }
    throw std::domain_error("make_shape: bad tag");
}

/// One class of pairwise isomorphic components: a shape (possibly of
/// size omega) or an explicit finite connected structure, repeated
/// `multiplicity` times.
struct ComponentClass {
    std::optional<ClassShape> shape;     // nullopt => explicit structure
    BinaryStructure explicit_structure;  // used when shape is nullopt
    ExtNat size;
    ExtNat multiplicity;

    bool is_explicit() const { return !shape.has_value(); }

    static ComponentClass of_shape(ClassShape s, ExtNat size, ExtNat mult) {
        return {s, {}, size, mult};
    }
    static ComponentClass of_structure(BinaryStructure s, ExtNat mult) {
        ExtNat size(static_cast<std::uint32_t>(s.size()));
        return {std::nullopt, std::move(s), size, mult};
    }

    /// Finite representative of this class (finite size only).
    BinaryStructure representative() const {
        if (size.is_omega()) throw std::domain_error("representative: class has omega size");
        if (is_explicit()) return explicit_structure;
        return make_shape(*shape, static_cast<int>(size.value()));
    }
};

/// Marker for an unbounded set of finite sizes: one component shape, every
/// size n >= 1 present, with a default per-size multiplicity and finitely
/// many exceptions.
struct UnboundedFamily {
    ClassShape shape = ClassShape::Full;
    std::uint32_t default_mult = 1;
    std::map<std::uint32_t, std::uint32_t> exceptions;  // size -> multiplicity

    std::uint32_t mult_at(std::uint32_t size) const {
        auto it = exceptions.find(size);
        return it == exceptions.end() ? default_mult : it->second;
    }
};

/// Finite presentation of a countable structure as component classes.
struct CatalogueSpec {
    std::vector<ComponentClass> classes;
    std::optional<UnboundedFamily> family;
};

/// Classification parameters derived from a spec.
struct DerivedStats {
    std::set<std::uint32_t> finite_sizes;  // explicitly listed finite sizes
    bool unbounded_sizes = false;          // family contributes every n >= 1
    bool omega_size = false;               // omega in N
    ExtNat mu;                             // number of omega-size components
    std::map<std::uint32_t, ExtNat> size_counts;  // finite kappa -> |I_kappa|
    bool y_finite = false;                 // union of finite components is finite
    ExtNat total_components;

    bool n_fin_finite() const { return !unbounded_sizes; }
    bool n_contains_omega() const { return omega_size; }
};

/// Throws std::domain_error when the spec violates its type invariants.
inline void check_well_formed(const CatalogueSpec& spec, int explicit_cap = 12) {
    if (spec.classes.empty() && !spec.family)
        throw std::domain_error("spec: no classes");
    for (const auto& c : spec.classes) {
        if (c.multiplicity == ExtNat(0) || c.size == ExtNat(0))
            throw std::domain_error("spec: zero size or multiplicity");
        if (c.is_explicit()) {
            if (c.size.is_omega()) throw std::domain_error("spec: explicit class must be finite");
            if (c.explicit_structure.size() != static_cast<int>(c.size.value()))
                throw std::domain_error("spec: explicit size mismatch");
            if (c.explicit_structure.size() > explicit_cap)
                throw std::domain_error("spec: explicit structure exceeds cap");
            if (!is_connected(c.explicit_structure))
                throw std::domain_error("spec: explicit structure is disconnected");
        } else {
            if (c.size.is_omega() && !shape_allows_omega(*c.shape))
                throw std::domain_error("spec: omega size not allowed for this shape");
            if ((*c.shape == ClassShape::SingletonLoop ||
                 *c.shape == ClassShape::SingletonNoLoop) &&
                c.size != ExtNat(1))
                throw std::domain_error("spec: singleton shape must have size 1");
        }
    }
    if (spec.family && spec.family->default_mult == 0)
        throw std::domain_error("spec: family default multiplicity must be positive");
    // total point count must be omega
    bool infinite = spec.family.has_value();
    for (const auto& c : spec.classes)
        if (c.size.is_omega() || c.multiplicity.is_omega()) infinite = true;
    if (!infinite) throw std::domain_error("spec: total point count is finite");
}

inline DerivedStats derive_stats(const CatalogueSpec& spec) {
    check_well_formed(spec);
    DerivedStats st;
    st.mu = ExtNat(0);
    st.total_components = ExtNat(0);
    for (const auto& c : spec.classes) {
        st.total_components += c.multiplicity;
        if (c.size.is_omega()) {
            st.omega_size = true;
            st.mu += c.multiplicity;
        } else {
            st.finite_sizes.insert(c.size.value());
            st.size_counts[c.size.value()] += c.multiplicity;
        }
    }
    if (spec.family) {
        // size_counts only carries the explicitly listed classes; the family
        // contributes mult_at(n) components at every size n >= 1 implicitly.
        st.unbounded_sizes = true;
        st.total_components = ExtNat::omega();
    }
    bool y_inf = st.unbounded_sizes;
    for (const auto& c : spec.classes)
        if (c.size.is_finite() && c.multiplicity.is_omega()) y_inf = true;
    st.y_finite = !y_inf;
    return st;
}

/// Outcome of checking hypotheses (i) and (ii) on a spec.
struct ValidationIssue {
    std::string rule;    // "(i)" or "(ii)" or "form"
    int class_i = -1;    // -2 marks the unbounded family
    int class_j = -1;
    std::string detail;  // counterexample subset or table rule
};

struct ValidationReport {
    bool valid = false;
    std::vector<ValidationIssue> failures;
    std::vector<ValidationIssue> unverified;  // beyond the exhaustive cap

    std::string summary() const {
        if (valid && unverified.empty()) return "valid";
        std::ostringstream os;
        os << (valid ? "valid" : "invalid");
        for (const auto& f : failures)
            os << "\n  " << f.rule << " fails for classes (" << f.class_i << "," << f.class_j
               << "): " << f.detail;
        for (const auto& u : unverified)
            os << "\n  unverified-at-scale " << u.rule << " for classes (" << u.class_i << ","
               << u.class_j << "): " << u.detail;
        return os.str();
    }
};

namespace detail {

inline std::string subset_str(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

// Exhaustive check of (i) for finite source against finite target:
// every |src|-subset of tgt must carry a copy of src.
inline std::optional<std::vector<int>> maximal_embedding_counterexample(
    const BinaryStructure& src, const BinaryStructure& tgt) {
    const int a = src.size(), b = tgt.size();
    std::vector<int> subset(a);
    for (int i = 0; i < a; ++i) subset[i] = i;
    while (true) {
        if (!is_isomorphic(induced(tgt, subset), src)) return subset;
        int i = a - 1;
        while (i >= 0 && subset[i] == b - a + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < a; ++j) subset[j] = subset[j - 1] + 1;
    }
    return std::nullopt;
}

// Exhaustive check of (ii) for subsets of size a inside tgt: every pair of
// a-subsets must have a rho_rs-related pair of points (equality counts).
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> connectivity_counterexample(
    const BinaryStructure& tgt, int a) {
    const int n = tgt.size();
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur(a);
    for (int i = 0; i < a; ++i) cur[i] = i;
    while (true) {
        subsets.push_back(cur);
        int i = a - 1;
        while (i >= 0 && cur[i] == n - a + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < a; ++j) cur[j] = cur[j - 1] + 1;
    }
    for (const auto& s : subsets)
        for (const auto& t : subsets) {
            bool related = false;
            for (int u : s) {
                for (int v : t)
                    if (u == v || tgt.related(u, v) || tgt.related(v, u)) {
                        related = true;
                        break;
                    }
                if (related) break;
            }
            if (!related) return std::make_pair(s, t);
        }
    return std::nullopt;
}

}  // namespace detail

/// Checks hypotheses (i) maximal embeddability and (ii) subset
/// connectivity for every class pair. Finite-finite pairs are checked
/// exhaustively up to `exhaustive_cap` points per component; pairs
/// involving omega-sized components go through the shape decision table.
inline ValidationReport validate(const CatalogueSpec& spec, int exhaustive_cap = 7) {
    ValidationReport rep;
    try {
        check_well_formed(spec);
    } catch (const std::domain_error& e) {
        rep.failures.push_back({"form", -1, -1, e.what()});
        return rep;
    }

    const int k = static_cast<int>(spec.classes.size());

    // Shape tag of a class when it is (or matches) a catalogue shape.
    auto tag_of = [&](int i) -> std::optional<ClassShape> {
        const auto& c = spec.classes[i];
        if (!c.is_explicit()) return c.shape;
        return std::nullopt;
    };

    // (i) for a finite structure against an omega component of shape t:
    // holds iff the structure is isomorphic to the shape at its own size.
    auto finite_vs_omega_shape = [&](const BinaryStructure& s, ClassShape t) {
        return is_isomorphic(s, make_shape(t, s.size()));
    };

    // compatible omega-omega tags: every omega subset of an omega shape is
    // isomorphic to the whole, so (i) needs identical tags (inverse orders
    // stay distinct from the forward ones over omega).
    auto omega_tags_compatible = [&](ClassShape a, ClassShape b) { return a == b; };

    auto check_pair = [&](int i, int j) {
        const auto& ci = spec.classes[i];
        const auto& cj = spec.classes[j];
        // source omega, target finite: [tgt]^omega is empty, trivially fine
        if (ci.size.is_omega() && cj.size.is_finite()) return;
        if (ci.size.is_omega() && cj.size.is_omega()) {
            if (!omega_tags_compatible(*ci.shape, *cj.shape)) {
                std::string detail = std::string("omega components of shapes ") +
                                     class_shape_name(*ci.shape) + " and " +
                                     class_shape_name(*cj.shape) +
                                     " are not mutually maximally embeddable";
                // concrete probe: smallest size where the shapes diverge
                // (inverse orders agree with the forward ones at every
                // finite size, so a probe may not exist)
                for (int n = 1; n <= 4; ++n)
                    if (!is_isomorphic(make_shape(*ci.shape, n), make_shape(*cj.shape, n))) {
                        detail += "; counterexample: their size-" + std::to_string(n) +
                                  " restrictions are not isomorphic";
                        break;
                    }
                rep.failures.push_back({"(i)", i, j, detail});
            }
            return;
        }
        // source finite
        BinaryStructure src = ci.representative();
        if (cj.size.is_omega()) {
            if (!finite_vs_omega_shape(src, *cj.shape))
                rep.failures.push_back({"(i)", i, j,
                                        std::string("size-") + std::to_string(src.size()) +
                                            " component is not a copy of " +
                                            class_shape_name(*cj.shape) + " at that size"});
            return;
        }
        // finite-finite
        if (src.size() > static_cast<int>(cj.size.value())) return;  // empty quantification
        if (static_cast<int>(cj.size.value()) > exhaustive_cap) {
            rep.unverified.push_back(
                {"(i)", i, j, "target component exceeds the exhaustive cap"});
            return;
        }
        BinaryStructure tgt = cj.representative();
        if (auto cex = detail::maximal_embedding_counterexample(src, tgt))
            rep.failures.push_back({"(i)", i, j,
                                    "subset " + detail::subset_str(*cex) +
                                        " of the target is not a copy of the source"});
        // (ii): automatic when the target is a catalogue shape (any two
        // subsets of a full/complete/linear component have related points,
        // equality allowed); explicit targets are checked exhaustively.
        if (cj.is_explicit()) {
            if (auto cex = detail::connectivity_counterexample(tgt, src.size()))
                rep.failures.push_back({"(ii)", i, j,
                                        "subsets " + detail::subset_str(cex->first) + " and " +
                                            detail::subset_str(cex->second) +
                                            " have no related pair"});
        }
    };

    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) check_pair(i, j);

    if (spec.family) {
        const ClassShape t = spec.family->shape;
        if (!shape_allows_omega(t) ||
            (t != ClassShape::Full && t != ClassShape::Complete &&
             t != ClassShape::StrictLinear && t != ClassShape::ReflexiveLinear &&
             t != ClassShape::InverseStrictLinear && t != ClassShape::InverseReflexiveLinear))
            rep.failures.push_back({"form", -2, -2, "family shape not admissible"});
        // family members against regular classes and vice versa
        for (int j = 0; j < k; ++j) {
            const auto& cj = spec.classes[j];
            if (cj.size.is_omega()) {
                // finite family member into the omega component: holds iff the
                // shapes agree at every finite size.
                for (int n = 1; n <= exhaustive_cap; ++n)
                    if (!is_isomorphic(make_shape(t, n),
                                       make_shape(*cj.shape, n))) {
                        rep.failures.push_back({"(i)", -2, j,
                                                "family members are not copies inside the "
                                                "omega component"});
                        break;
                    }
            } else {
                BinaryStructure rj = cj.representative();
                const int b = rj.size();
                // family sources of size <= b into the finite class
                bool bad = false;
                for (int n = 1; n <= b && !bad; ++n) {
                    if (b > exhaustive_cap) {
                        rep.unverified.push_back(
                            {"(i)", -2, j, "target component exceeds the exhaustive cap"});
                        break;
                    }
                    if (auto cex =
                            detail::maximal_embedding_counterexample(make_shape(t, n), rj)) {
                        rep.failures.push_back(
                            {"(i)", -2, j,
                             "size-" + std::to_string(n) + " family member: subset " +
                                 detail::subset_str(*cex) + " of the target is not a copy"});
                        bad = true;
                    }
                }
                // the finite class as a source into arbitrarily large family
                // members: decision table, all family members share one shape
                if (!finite_vs_omega_shape(rj, t))
                    rep.failures.push_back({"(i)", j, -2,
                                            "class is not a copy of the family shape at its "
                                            "own size"});
                if (cj.is_explicit()) {
                    // (ii) with family sources of every size <= b
                    for (int n = 1; n <= b && b <= exhaustive_cap; ++n)
                        if (auto cex = detail::connectivity_counterexample(rj, n)) {
                            rep.failures.push_back(
                                {"(ii)", -2, j,
                                 "subsets " + detail::subset_str(cex->first) + " and " +
                                     detail::subset_str(cex->second) + " have no related pair"});
                            break;
                        }
                }
            }
        }
        // family vs family: members share one catalogue shape, for which
        // every subset of a larger member is a copy of the smaller one.
    }

    rep.valid = rep.failures.empty();
    return rep;
}

/// Finite instantiation of a spec. Blocks record provenance: which class
/// (or family size) produced each component.
struct TruncationBlock {
    int class_index;     // index into spec.classes, or -2 for the family
    std::uint32_t family_size = 0;  // meaningful when class_index == -2
    std::vector<int> points;        // ascending
};

struct Truncation {
    BinaryStructure structure;
    std::vector<TruncationBlock> blocks;
};

inline Truncation truncate(const CatalogueSpec& spec, std::uint32_t class_count_cap,
                           std::uint32_t size_cap, std::uint32_t point_cap = 512) {
    if (class_count_cap < 1 || size_cap < 1)
        throw std::domain_error("truncate: caps must be at least 1");
    check_well_formed(spec);
    Truncation out;
    std::vector<std::pair<BinaryStructure, TruncationBlock>> parts;
    std::uint64_t total = 0;
    auto push = [&](BinaryStructure s, int class_index, std::uint32_t family_size) {
        total += static_cast<std::uint64_t>(s.size());
        if (total > point_cap) throw resource_error("truncate: point cap exceeded");
        parts.emplace_back(std::move(s), TruncationBlock{class_index, family_size, {}});
    };
    for (int ci = 0; ci < static_cast<int>(spec.classes.size()); ++ci) {
        const auto& c = spec.classes[ci];
        std::uint32_t count = c.multiplicity.is_omega()
                                  ? class_count_cap
                                  : std::min(c.multiplicity.value(), class_count_cap);
        std::uint32_t size =
            c.size.is_omega() ? size_cap : std::min(c.size.value(), size_cap);
        for (std::uint32_t r = 0; r < count; ++r) {
            if (c.is_explicit()) {
                // explicit structures are finite; size_cap truncates by
                // taking the least `size` points of the component
                std::vector<int> pts;
                for (std::uint32_t p = 0; p < size; ++p) pts.push_back(static_cast<int>(p));
                push(induced(c.explicit_structure, pts), ci, 0);
            } else {
                push(make_shape(*c.shape, static_cast<int>(size)), ci, 0);
            }
        }
    }
    if (spec.family) {
        for (std::uint32_t n = 1; n <= size_cap; ++n) {
            std::uint32_t count = std::min(spec.family->mult_at(n), class_count_cap);
            for (std::uint32_t r = 0; r < count; ++r)
                push(make_shape(spec.family->shape, static_cast<int>(n)), -2, n);
        }
    }
    BinaryStructure all(static_cast<int>(total));
    int offset = 0;
    for (auto& [s, block] : parts) {
        for (auto [u, v] : s.pairs()) all.add_pair(offset + u, offset + v);
        for (int p = 0; p < s.size(); ++p) block.points.push_back(offset + p);
        out.blocks.push_back(std::move(block));
        offset += s.size();
    }
    out.structure = std::move(all);
    return out;
}

}  // namespace embkit
