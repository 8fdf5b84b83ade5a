#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "embkit/catalogue.hpp"
#include "embkit/extnat.hpp"
#include "embkit/structure.hpp"

namespace embkit {

/// Finitely-described intersection record of a subset S with the
/// components of a catalogue spec: per class, exceptional per-component
/// traces plus (for omega-multiplicity classes) a tail value for all
/// remaining components. Components of finite-multiplicity classes left
/// unlisted default to trace 0.
struct ClassTraces {
    std::vector<ExtNat> exceptional;
    std::optional<ExtNat> tail;  // present exactly for omega multiplicity
};

enum class FamilyTailRule { Bounded, Full };

struct FamilyException {
    std::uint32_t size = 0;
    std::uint32_t index = 0;  // component index within that size
    ExtNat trace;
};

struct FamilyTraces {
    std::vector<FamilyException> exceptions;
    FamilyTailRule rule = FamilyTailRule::Bounded;
    std::uint32_t bound = 0;  // used when rule == Bounded
};

struct TraceProfile {
    std::vector<ClassTraces> classes;
    std::optional<FamilyTraces> family;
};

/// Throws std::domain_error if the profile does not fit the spec.
inline void check_profile(const CatalogueSpec& spec, const TraceProfile& s) {
    if (s.classes.size() != spec.classes.size())
        throw std::domain_error("profile: class count mismatch");
    for (std::size_t k = 0; k < spec.classes.size(); ++k) {
        const auto& cls = spec.classes[k];
        const auto& tr = s.classes[k];
        if (cls.multiplicity.is_omega() != tr.tail.has_value())
            throw std::domain_error("profile: tail present iff multiplicity is omega");
        if (cls.multiplicity.is_finite() &&
            tr.exceptional.size() > cls.multiplicity.value())
            throw std::domain_error("profile: more traces than components");
        for (ExtNat t : tr.exceptional)
            if (t > cls.size) throw std::domain_error("profile: trace exceeds component size");
        if (tr.tail && *tr.tail > cls.size)
            throw std::domain_error("profile: tail trace exceeds component size");
    }
    if (spec.family.has_value() != s.family.has_value())
        throw std::domain_error("profile: family traces present iff spec has a family");
    if (s.family) {
        for (const auto& e : s.family->exceptions) {
            if (e.size == 0 || e.index >= spec.family->mult_at(e.size))
                throw std::domain_error("profile: family exception out of range");
            if (e.trace > ExtNat(e.size))
                throw std::domain_error("profile: family trace exceeds size");
        }
    }
}

namespace detail {

// Trace of the r-th component of class k (0-based), applying defaults.
inline ExtNat class_trace(const ClassTraces& tr, std::uint32_t r) {
    if (r < tr.exceptional.size()) return tr.exceptional[r];
    if (tr.tail) return *tr.tail;
    return ExtNat(0);
}

// Is the number of omega-size components with trace == omega finite?
inline bool finitely_many_omega_traces(const CatalogueSpec& spec, const TraceProfile& s) {
    for (std::size_t k = 0; k < spec.classes.size(); ++k) {
        const auto& cls = spec.classes[k];
        if (cls.size.is_finite()) continue;
        const auto& tr = s.classes[k];
        if (cls.multiplicity.is_omega() && tr.tail->is_omega()) return false;
    }
    return true;
}

// Does some omega-size component have a finite trace?
inline bool some_omega_component_finite_trace(const CatalogueSpec& spec, const TraceProfile& s) {
    for (std::size_t k = 0; k < spec.classes.size(); ++k) {
        const auto& cls = spec.classes[k];
        if (cls.size.is_finite()) continue;
        const auto& tr = s.classes[k];
        for (ExtNat t : tr.exceptional)
            if (t.is_finite()) return true;
        if (cls.multiplicity.is_omega()) {
            if (tr.tail->is_finite()) return true;
        } else if (tr.exceptional.size() < cls.multiplicity.value()) {
            return true;  // unlisted component defaults to trace 0
        }
    }
    return false;
}

// Is the number of size-`m` components with full trace finite?
inline bool finitely_many_full_traces_at(const CatalogueSpec& spec, const TraceProfile& s,
                                         std::uint32_t m) {
    for (std::size_t k = 0; k < spec.classes.size(); ++k) {
        const auto& cls = spec.classes[k];
        if (cls.size != ExtNat(m)) continue;
        const auto& tr = s.classes[k];
        if (cls.multiplicity.is_omega() && *tr.tail == ExtNat(m)) return false;
    }
    return true;
}

// Does some finite component of size strictly above `floor` miss a point?
inline bool some_nonfull_trace_above(const CatalogueSpec& spec, const TraceProfile& s,
                                     std::uint32_t floor) {
    for (std::size_t k = 0; k < spec.classes.size(); ++k) {
        const auto& cls = spec.classes[k];
        if (cls.size.is_omega() || cls.size.value() <= floor) continue;
        const auto& tr = s.classes[k];
        for (ExtNat t : tr.exceptional)
            if (t != cls.size) return true;
        if (cls.multiplicity.is_omega()) {
            if (*tr.tail != cls.size) return true;
        } else if (tr.exceptional.size() < cls.multiplicity.value()) {
            return true;
        }
    }
    return false;
}

// Membership of the finite-components part (Y) in its own copy-free ideal.
inline bool y_part_member(const CatalogueSpec& spec, const DerivedStats& stats,
                          const TraceProfile& s) {
    // N_Y unbounded: member iff the traces are uniformly bounded, which the
    // profile language reduces to the family tail rule (exceptions are
    // finitely many finite values, regular finite classes are size-bounded).
    if (stats.unbounded_sizes) return s.family->rule == FamilyTailRule::Bounded;

    bool have_finite = false;
    for (const auto& c : spec.classes)
        if (c.size.is_finite()) have_finite = true;
    if (!have_finite) return false;  // Y empty: the empty copy is inside S

    if (stats.y_finite) return some_nonfull_trace_above(spec, s, 0);

    std::uint32_t m = *stats.finite_sizes.rbegin();
    bool m_infinite = false;
    for (const auto& c : spec.classes)
        if (c.size == ExtNat(m) && c.multiplicity.is_omega()) m_infinite = true;
    if (m_infinite) return finitely_many_full_traces_at(spec, s, m);

    // finitely many maximal components: they are mandatory in every copy;
    // reduce to the largest size that occurs infinitely often
    std::uint32_t m0 = 0;
    for (const auto& c : spec.classes)
        if (c.size.is_finite() && c.multiplicity.is_omega())
            m0 = std::max(m0, c.size.value());
    return some_nonfull_trace_above(spec, s, m0) ||
           finitely_many_full_traces_at(spec, s, m0);
}

}  // namespace detail

/// Closed-form membership of a profile-described subset in the copy-free
/// ideal of the spec's structure.
inline bool ideal_member(const CatalogueSpec& spec, const TraceProfile& s) {
    check_profile(spec, s);
    DerivedStats stats = derive_stats(spec);
    if (stats.mu.is_omega()) return detail::finitely_many_omega_traces(spec, s);
    return detail::y_part_member(spec, stats, s) ||
           detail::some_omega_component_finite_trace(spec, s);
}

// ---------------------------------------------------------------------------
// Copy detection inside truncations.

namespace detail {

inline std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace detail

/// True iff S contains a copy of the pattern truncation, decided by
/// bipartite matching over components: pattern component i may go to
/// ambient component j iff |S ∩ block_j| >= |P_i| and (defensively) the
/// least such subset really induces a copy of P_i.
inline bool copy_inside_matching(const Truncation& ambient, const std::vector<int>& s,
                                 const Truncation& pattern) {
    std::vector<int> sorted_s = s;
    std::sort(sorted_s.begin(), sorted_s.end());
    for (int p : sorted_s)
        if (p < 0 || p >= ambient.structure.size())
            throw std::domain_error("copy_inside_matching: subset point out of range");

    const int ns = static_cast<int>(pattern.blocks.size());
    const int nt = static_cast<int>(ambient.blocks.size());
    std::vector<std::vector<int>> adj(ns);
    for (int i = 0; i < ns; ++i) {
        BinaryStructure pi = induced(pattern.structure, pattern.blocks[i].points);
        for (int j = 0; j < nt; ++j) {
            std::vector<int> trace = detail::intersect_sorted(ambient.blocks[j].points, sorted_s);
            if (static_cast<int>(trace.size()) < pi.size()) continue;
            // defensive shape compatibility: with hypothesis (i) any
            // |P_i|-subset works, so checking one is enough
            std::vector<int> probe(trace.begin(), trace.begin() + pi.size());
            if (!is_isomorphic(induced(ambient.structure, probe), pi)) continue;
            adj[i].push_back(j);
        }
    }
    // augmenting-path maximum matching; feasible iff every source is matched
    std::vector<int> match_target(nt, -1);
    std::function<bool(int, std::vector<char>&)> augment = [&](int i,
                                                               std::vector<char>& vis) -> bool {
        for (int j : adj[i]) {
            if (vis[j]) continue;
            vis[j] = 1;
            if (match_target[j] < 0 || augment(match_target[j], vis)) {
                match_target[j] = i;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < ns; ++i) {
        std::vector<char> vis(nt, 0);
        if (!augment(i, vis)) return false;
    }
    return true;
}

/// Independent oracle: true iff some A ⊆ S induces a copy of the pattern.
/// Enumerates the |pattern|-subsets of S directly; the isomorphism test's
/// invariant screening keeps rejection cheap.
inline bool copy_inside_bruteforce(const Truncation& ambient, const std::vector<int>& s,
                                   const BinaryStructure& pattern, int point_cap = 128) {
    if (ambient.structure.size() > point_cap)
        throw resource_error("copy_inside_bruteforce: point cap exceeded");
    std::vector<int> sorted_s = s;
    std::sort(sorted_s.begin(), sorted_s.end());
    for (int p : sorted_s)
        if (p < 0 || p >= ambient.structure.size())
            throw std::domain_error("copy_inside_bruteforce: subset point out of range");
    const int n = pattern.size();
    const int m = static_cast<int>(sorted_s.size());
    if (n > m) return false;
    if (n == 0) return true;
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    while (true) {
        std::vector<int> a(n);
        for (int i = 0; i < n; ++i) a[i] = sorted_s[idx[i]];
        if (is_isomorphic(induced(ambient.structure, a), pattern)) return true;
        int i = n - 1;
        while (i >= 0 && idx[i] == m - n + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
    return false;
}

/// Whole-structure variant matching the direct definition.
inline bool copy_inside_bruteforce(const Truncation& ambient, const std::vector<int>& s,
                                   int point_cap = 128) {
    return copy_inside_bruteforce(ambient, s, ambient.structure, point_cap);
}

// ---------------------------------------------------------------------------
// Incompatible copies.

/// Description of a copy as an injection on component slots. For finite
/// truncations `target[i]` is the ambient block receiving source block i
/// (piece size = source block size). For infinite specs the injection is
/// not enumerable and `rules` carries its symbolic routing instead.
struct CopyDescriptor {
    std::vector<int> target;
    std::vector<std::string> rules;
};

/// Every slot injection of the pattern's blocks into the ambient's blocks
/// that respects sizes. Under hypotheses (i)/(ii) these are exactly the
/// copies of the pattern, one per choice of pieces.
inline std::vector<CopyDescriptor> all_copy_descriptors(const Truncation& pattern,
                                                        const Truncation& ambient) {
    const int n = static_cast<int>(pattern.blocks.size());
    const int m = static_cast<int>(ambient.blocks.size());
    std::vector<CopyDescriptor> out;
    std::vector<int> target(n, -1);
    std::vector<char> used(m, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            out.push_back({target, {}});
            return;
        }
        for (int j = 0; j < m; ++j) {
            if (used[j] ||
                ambient.blocks[j].points.size() < pattern.blocks[i].points.size())
                continue;
            used[j] = 1;
            target[i] = j;
            rec(i + 1);
            used[j] = 0;
        }
    };
    rec(0);
    return out;
}

inline std::vector<CopyDescriptor> all_copy_descriptors(const Truncation& t) {
    return all_copy_descriptors(t, t);
}

/// Point sets produced by a descriptor: unions of one |block_i|-subset of
/// each target block. The subsets range over all choices; hypothesis (i)
/// makes every choice a copy of the source block.
inline std::set<std::vector<int>> descriptor_point_sets(const Truncation& pattern,
                                                        const Truncation& ambient,
                                                        const CopyDescriptor& d) {
    const int n = static_cast<int>(pattern.blocks.size());
    if (static_cast<int>(d.target.size()) != n)
        throw std::domain_error("descriptor_point_sets: descriptor/truncation mismatch");
    std::set<std::vector<int>> out;
    std::vector<std::vector<int>> chosen(n);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            std::vector<int> image;
            for (const auto& c : chosen) image.insert(image.end(), c.begin(), c.end());
            std::sort(image.begin(), image.end());
            out.insert(std::move(image));
            return;
        }
        const auto& tgt = ambient.blocks[d.target[i]].points;
        const int a = static_cast<int>(pattern.blocks[i].points.size());
        const int b = static_cast<int>(tgt.size());
        std::vector<int> idx(a);
        for (int p = 0; p < a; ++p) idx[p] = p;
        while (true) {
            chosen[i].clear();
            for (int p : idx) chosen[i].push_back(tgt[p]);
            rec(i + 1);
            int q = a - 1;
            while (q >= 0 && idx[q] == b - a + q) --q;
            if (q < 0) break;
            ++idx[q];
            for (int r = q + 1; r < a; ++r) idx[r] = idx[r - 1] + 1;
        }
    };
    rec(0);
    return out;
}

/// Union of descriptor_point_sets over every descriptor.
inline std::set<std::vector<int>> descriptor_generated_copies(const Truncation& pattern,
                                                              const Truncation& ambient) {
    std::set<std::vector<int>> out;
    for (const auto& d : all_copy_descriptors(pattern, ambient)) {
        auto sets = descriptor_point_sets(pattern, ambient, d);
        out.insert(sets.begin(), sets.end());
    }
    return out;
}

inline std::set<std::vector<int>> descriptor_generated_copies(const Truncation& t) {
    return descriptor_generated_copies(t, t);
}

struct IncompatibleCopiesWitness {
    CopyDescriptor first, second;
    TraceProfile intersection;
};

/// Profile with every trace equal to the component size.
inline TraceProfile full_profile(const CatalogueSpec& spec) {
    TraceProfile s;
    for (const auto& c : spec.classes) {
        ClassTraces tr;
        if (c.multiplicity.is_omega())
            tr.tail = c.size;
        else
            tr.exceptional.assign(c.multiplicity.value(), c.size);
        s.classes.push_back(std::move(tr));
    }
    if (spec.family) s.family = FamilyTraces{{}, FamilyTailRule::Full, 0};
    return s;
}

/// Profile with every trace zero.
inline TraceProfile zero_profile(const CatalogueSpec& spec) {
    TraceProfile s;
    for (const auto& c : spec.classes) {
        ClassTraces tr;
        if (c.multiplicity.is_omega()) tr.tail = ExtNat(0);
        s.classes.push_back(std::move(tr));
    }
    if (spec.family) s.family = FamilyTraces{{}, FamilyTailRule::Bounded, 0};
    return s;
}

/// Two copies of the whole structure whose intersection is copy-free.
/// Exists for every validated spec with omega points.
inline std::optional<IncompatibleCopiesWitness> incompatible_copies_witness(
    const CatalogueSpec& spec) {
    DerivedStats stats = derive_stats(spec);
    IncompatibleCopiesWitness w;

    if (stats.mu > ExtNat(0)) {
        // split every omega component into complementary infinite halves
        TraceProfile inter = full_profile(spec);
        for (std::size_t k = 0; k < spec.classes.size(); ++k) {
            const auto& c = spec.classes[k];
            std::string rule = "class " + std::to_string(k) + ": ";
            if (c.size.is_omega()) {
                rule += "identity map, even-position half / odd-position half";
                auto& tr = inter.classes[k];
                if (c.multiplicity.is_omega())
                    tr.tail = ExtNat(0);
                else
                    tr.exceptional.assign(c.multiplicity.value(), ExtNat(0));
            } else {
                rule += "identity map, whole component in both copies";
            }
            w.first.rules.push_back(rule + " (first half)");
            w.second.rules.push_back(rule + " (second half)");
        }
        if (spec.family) {
            w.first.rules.push_back("family: identity map, whole components in both copies");
            w.second.rules.push_back("family: identity map, whole components in both copies");
        }
        w.intersection = std::move(inter);
        return w;
    }

    if (stats.unbounded_sizes) {
        // enumerate all finite components by ascending size; route copy A
        // through even positions and copy B through odd ones
        w.first.rules.push_back(
            "component k (ascending-size enumeration) -> component 2k, least |X_k| points");
        w.second.rules.push_back(
            "component k (ascending-size enumeration) -> component 2k+1, least |X_k| points");
        w.intersection = zero_profile(spec);
        return w;
    }

    if (stats.finite_sizes.empty()) return std::nullopt;
    std::uint32_t m = *stats.finite_sizes.rbegin();
    bool m_infinite = false;
    for (const auto& c : spec.classes)
        if (c.size == ExtNat(m) && c.multiplicity.is_omega()) m_infinite = true;
    std::uint32_t anchor = m;
    if (!m_infinite) {
        anchor = 0;
        for (const auto& c : spec.classes)
            if (c.size.is_finite() && c.multiplicity.is_omega())
                anchor = std::max(anchor, c.size.value());
        if (anchor == 0) return std::nullopt;  // finite structure, hypotheses fail
    }
    // components of size above the anchor are mandatory in every copy and
    // form the shared part; everything else is routed through the
    // even/odd-indexed components of an anchor-size class
    int anchor_class = -1;
    for (std::size_t k = 0; k < spec.classes.size(); ++k)
        if (spec.classes[k].size == ExtNat(anchor) && spec.classes[k].multiplicity.is_omega())
            anchor_class = static_cast<int>(k);
    TraceProfile inter = zero_profile(spec);
    for (std::size_t k = 0; k < spec.classes.size(); ++k) {
        const auto& c = spec.classes[k];
        bool shared = c.size.is_finite() && c.size.value() > anchor;
        std::string route = shared
                                ? "identity map, whole component in both copies"
                                : "into class " + std::to_string(anchor_class) +
                                      " even-indexed / odd-indexed components, least |X_k| points";
        w.first.rules.push_back("class " + std::to_string(k) + ": " + route + " (even)");
        w.second.rules.push_back("class " + std::to_string(k) + ": " + route + " (odd)");
        if (shared) {
            auto& tr = inter.classes[k];
            if (c.multiplicity.is_omega())
                tr.tail = c.size;
            else
                tr.exceptional.assign(c.multiplicity.value(), c.size);
        }
    }
    w.intersection = std::move(inter);
    return w;
}

}  // namespace embkit
