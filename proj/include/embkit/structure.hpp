#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace embkit {

/// Raised when an exhaustive operation would exceed its configured cap.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A finite binary relational structure: points 0..n-1 and a set of
/// ordered pairs over them (loops allowed).
class BinaryStructure {
public:
    BinaryStructure() = default;

    explicit BinaryStructure(int n) : n_(n), rel_(static_cast<std::size_t>(n) * n, 0) {
        if (n < 0) throw std::domain_error("BinaryStructure: negative size");
    }

    int size() const { return n_; }

    bool related(int u, int v) const {
        check_point(u);
        check_point(v);
        return rel_[static_cast<std::size_t>(u) * n_ + v] != 0;
    }

    void add_pair(int u, int v) {
        check_point(u);
        check_point(v);
        rel_[static_cast<std::size_t>(u) * n_ + v] = 1;
    }

    void remove_pair(int u, int v) {
        check_point(u);
        check_point(v);
        rel_[static_cast<std::size_t>(u) * n_ + v] = 0;
    }

    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v)
                if (rel_[static_cast<std::size_t>(u) * n_ + v]) out.emplace_back(u, v);
        return out;
    }

    int pair_count() const {
        int c = 0;
        for (char b : rel_) c += b;
        return c;
    }

    bool operator==(const BinaryStructure& o) const = default;

    // Canonical small structures.

    /// Full relation: all n^2 pairs, loops included.
    static BinaryStructure full(int n) {
        BinaryStructure s(n);
        std::fill(s.rel_.begin(), s.rel_.end(), 1);
        return s;
    }

    /// Complete graph: all off-diagonal pairs in both directions, no loops.
    static BinaryStructure complete(int n) {
        BinaryStructure s = full(n);
        for (int i = 0; i < n; ++i) s.remove_pair(i, i);
        return s;
    }

    /// Strict linear order 0 < 1 < ... < n-1.
    static BinaryStructure strict_chain(int n) {
        BinaryStructure s(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s.add_pair(i, j);
        return s;
    }

    /// Reflexive linear order 0 <= 1 <= ... <= n-1.
    static BinaryStructure reflexive_chain(int n) {
        BinaryStructure s = strict_chain(n);
        for (int i = 0; i < n; ++i) s.add_pair(i, i);
        return s;
    }

    /// Empty relation on n points.
    static BinaryStructure empty_relation(int n) { return BinaryStructure(n); }

    /// Diagonal: loops only.
    static BinaryStructure diagonal(int n) {
        BinaryStructure s(n);
        for (int i = 0; i < n; ++i) s.add_pair(i, i);
        return s;
    }

    /// Undirected path 0-1-...-n-1 (symmetric edges, no loops).
    static BinaryStructure path_graph(int n) {
        BinaryStructure s(n);
        for (int i = 0; i + 1 < n; ++i) {
            s.add_pair(i, i + 1);
            s.add_pair(i + 1, i);
        }
        return s;
    }

    /// Undirected cycle on n points (n >= 3).
    static BinaryStructure cycle_graph(int n) {
        if (n < 3) throw std::domain_error("cycle_graph: need at least 3 points");
        BinaryStructure s = path_graph(n);
        s.add_pair(0, n - 1);
        s.add_pair(n - 1, 0);
        return s;
    }

private:
    void check_point(int p) const {
        if (p < 0 || p >= n_) throw std::domain_error("point out of range");
    }

    int n_ = 0;
    std::vector<char> rel_;  // row-major adjacency matrix
};

/// Partition of the points into rho_rst-components.
struct ComponentPartition {
    std::vector<std::vector<int>> blocks;  // ordered by least point, each sorted
    std::vector<int> block_of;             // point -> block index
};

enum class Shape {
    FullRelation,
    CompleteGraph,
    StrictLinearOrder,
    ReflexiveLinearOrder,
    SingletonNoLoop,
    SingletonLoop,
    Other,
};

inline const char* shape_name(Shape s) {
    switch (s) {
        case Shape::FullRelation: return "full";
        case Shape::CompleteGraph: return "complete";
        case Shape::StrictLinearOrder: return "strict_linear";
        case Shape::ReflexiveLinearOrder: return "reflexive_linear";
        case Shape::SingletonNoLoop: return "singleton_noloop";
        case Shape::SingletonLoop: return "singleton_loop";
        case Shape::Other: return "other";
    }
    return "other";
}

/// Substructure induced on A, relabeled canonically ascending.
inline BinaryStructure induced(const BinaryStructure& x, const std::vector<int>& a) {
    std::vector<int> pts = a;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (int p : pts)
        if (p < 0 || p >= x.size()) throw std::domain_error("induced: point not in structure");
    BinaryStructure out(static_cast<int>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (x.related(pts[i], pts[j])) out.add_pair(static_cast<int>(i), static_cast<int>(j));
    return out;
}

/// Components under the reflexive-symmetric-transitive closure of the relation.
inline ComponentPartition components(const BinaryStructure& x) {
    const int n = x.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (x.related(u, v)) {
                int ru = find(u), rv = find(v);
                if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
            }
    ComponentPartition part;
    part.block_of.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (part.block_of[r] < 0) {
            part.block_of[r] = static_cast<int>(part.blocks.size());
            part.blocks.emplace_back();
        }
        part.block_of[v] = part.block_of[r];
        part.blocks[part.block_of[v]].push_back(v);
    }
    return part;
}

inline bool is_connected(const BinaryStructure& x) {
    return x.size() <= 1 || components(x).blocks.size() == 1;
}

namespace detail {

// Backtracking enumeration of embeddings of x into y, in lexicographic
// order of the injection tuple. The visitor returns false to stop early.
inline bool for_each_embedding(const BinaryStructure& x, const BinaryStructure& y,
                               const std::function<bool(const std::vector<int>&)>& visit) {
    const int n = x.size(), m = y.size();
    if (n > m) return true;
    std::vector<int> map(n, -1);
    std::vector<char> used(m, 0);
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == n) return visit(map);
        for (int t = 0; t < m; ++t) {
            if (used[t]) continue;
            if (x.related(i, i) != y.related(t, t)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                if (x.related(i, j) != y.related(t, map[j])) ok = false;
                if (ok && x.related(j, i) != y.related(map[j], t)) ok = false;
            }
            if (!ok) continue;
            map[i] = t;
            used[t] = 1;
            if (!rec(i + 1)) return false;
            used[t] = 0;
            map[i] = -1;
        }
        return true;
    };
    return rec(0);
}

}  // namespace detail

/// All embeddings of x into y, as injection tuples in lexicographic order.
inline std::vector<std::vector<int>> embeddings(const BinaryStructure& x, const BinaryStructure& y) {
    std::vector<std::vector<int>> out;
    detail::for_each_embedding(x, y, [&](const std::vector<int>& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

inline bool embeds(const BinaryStructure& x, const BinaryStructure& y) {
    bool found = false;
    detail::for_each_embedding(x, y, [&](const std::vector<int>&) {
        found = true;
        return false;
    });
    return found;
}

/// The copies of x inside y: images of embeddings, deduplicated, as sorted
/// point sets in lexicographic order.
inline std::vector<std::vector<int>> copies(const BinaryStructure& x, const BinaryStructure& y) {
    std::set<std::vector<int>> images;
    detail::for_each_embedding(x, y, [&](const std::vector<int>& f) {
        std::vector<int> img = f;
        std::sort(img.begin(), img.end());
        images.insert(std::move(img));
        return true;
    });
    return {images.begin(), images.end()};
}

inline bool is_isomorphic(const BinaryStructure& x, const BinaryStructure& y) {
    if (x.size() != y.size()) return false;
    if (x.pair_count() != y.pair_count()) return false;
    // Loop count and in/out degree multisets prune before backtracking.
    auto invariants = [](const BinaryStructure& s) {
        std::vector<std::pair<int, int>> deg(s.size(), {0, 0});
        int loops = 0;
        for (int u = 0; u < s.size(); ++u)
            for (int v = 0; v < s.size(); ++v)
                if (s.related(u, v)) {
                    ++deg[u].first;
                    ++deg[v].second;
                    if (u == v) ++loops;
                }
        std::sort(deg.begin(), deg.end());
        return std::make_pair(loops, deg);
    };
    if (invariants(x) != invariants(y)) return false;
    return embeds(x, y);  // size-equal embedding is a bijection
}

/// True iff all induced substructures of size p are pairwise isomorphic.
inline bool is_p_monomorphic(const BinaryStructure& x, int p) {
    if (p < 1 || p > x.size()) throw std::domain_error("is_p_monomorphic: p out of range");
    const int n = x.size();
    std::vector<int> subset(p);
    std::iota(subset.begin(), subset.end(), 0);
    std::optional<BinaryStructure> first;
    bool ok = true;
    // enumerate p-subsets in lexicographic order
    while (ok) {
        BinaryStructure sub = induced(x, subset);
        if (!first)
            first = sub;
        else if (!is_isomorphic(*first, sub))
            ok = false;
        int i = p - 1;
        while (i >= 0 && subset[i] == n - p + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < p; ++j) subset[j] = subset[j - 1] + 1;
    }
    return ok;
}

/// Shape recognition for a connected structure.
inline Shape shape_of(const BinaryStructure& x) {
    if (!is_connected(x)) throw std::domain_error("shape_of: structure is disconnected");
    const int n = x.size();
    if (n == 0) throw std::domain_error("shape_of: empty structure");
    if (n == 1) return x.related(0, 0) ? Shape::SingletonLoop : Shape::SingletonNoLoop;

    bool all_loops = true, no_loops = true;
    for (int i = 0; i < n; ++i) (x.related(i, i) ? no_loops : all_loops) = false;

    bool full = all_loops, complete = no_loops;
    for (int u = 0; u < n && (full || complete); ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (!x.related(u, v)) full = complete = false;
        }
    if (full) return Shape::FullRelation;
    if (complete) return Shape::CompleteGraph;

    // Linear orders: total, antisymmetric off the diagonal, transitive.
    bool total = true, antisym = true, transitive = true;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (!x.related(u, v) && !x.related(v, u)) total = false;
            if (x.related(u, v) && x.related(v, u)) antisym = false;
        }
    for (int u = 0; u < n && transitive; ++u)
        for (int v = 0; v < n && transitive; ++v)
            for (int w = 0; w < n; ++w)
                if (u != v && v != w && u != w && x.related(u, v) && x.related(v, w) &&
                    !x.related(u, w)) {
                    transitive = false;
                    break;
                }
    if (total && antisym && transitive) {
        if (no_loops) return Shape::StrictLinearOrder;
        if (all_loops) return Shape::ReflexiveLinearOrder;
    }
    return Shape::Other;
}

/// Complement: relation replaced by points^2 minus the relation. Involutive.
inline BinaryStructure complement(const BinaryStructure& x) {
    BinaryStructure out(x.size());
    for (int u = 0; u < x.size(); ++u)
        for (int v = 0; v < x.size(); ++v)
            if (!x.related(u, v)) out.add_pair(u, v);
    return out;
}

/// Disjoint union; points of b are shifted past those of a.
inline BinaryStructure disjoint_union(const BinaryStructure& a, const BinaryStructure& b) {
    BinaryStructure out(a.size() + b.size());
    for (auto [u, v] : a.pairs()) out.add_pair(u, v);
    for (auto [u, v] : b.pairs()) out.add_pair(a.size() + u, a.size() + v);
    return out;
}

/// True iff some subset of s carries a copy of pattern.
inline bool contains_copy(const BinaryStructure& x, const std::vector<int>& s,
                          const BinaryStructure& pattern) {
    return embeds(pattern, induced(x, s));
}

struct IndivisibilityResult {
    bool indivisible = false;
    // Witness partition, populated when divisible: neither side holds a copy.
    std::vector<int> side_a, side_b;
};

/// Exhaustive finite indivisibility check over all 2-colorings.
inline IndivisibilityResult is_indivisible_finite(const BinaryStructure& x, int cap = 12) {
    const int n = x.size();
    if (n > cap) throw resource_error("is_indivisible_finite: point cap exceeded");
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> a, b;
        for (int v = 0; v < n; ++v) ((mask >> v) & 1 ? a : b).push_back(v);
        if (!contains_copy(x, a, x) && !contains_copy(x, b, x))
            return {false, std::move(a), std::move(b)};
    }
    return {true, {}, {}};
}

}  // namespace embkit
