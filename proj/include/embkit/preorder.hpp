#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace embkit {

/// A finite reflexive-transitive order on elements 0..n-1.
class FinitePreOrder {
public:
    FinitePreOrder() = default;

    /// Matrix must already be reflexive and transitive.
    FinitePreOrder(int n, std::vector<char> le) : n_(n), le_(std::move(le)) {
        if (static_cast<int>(le_.size()) != n * n)
            throw std::domain_error("FinitePreOrder: matrix size mismatch");
        for (int i = 0; i < n; ++i)
            if (!at(i, i)) throw std::domain_error("FinitePreOrder: not reflexive");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (at(i, j))
                    for (int k = 0; k < n; ++k)
                        if (at(j, k) && !at(i, k))
                            throw std::domain_error("FinitePreOrder: not transitive");
    }

    /// Discrete order (antichain) on n elements.
    static FinitePreOrder antichain(int n) {
        std::vector<char> m(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1;
        return FinitePreOrder(n, std::move(m));
    }

    /// Chain 0 >= 1 >= ... (element 0 on top).
    static FinitePreOrder chain(int n) {
        std::vector<char> m(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) m[static_cast<std::size_t>(i) * n + j] = 1;
        return FinitePreOrder(n, std::move(m));
    }

    /// Reflexive-transitive closure of an arbitrary relation.
    static FinitePreOrder closure(int n, const std::vector<std::pair<int, int>>& below) {
        std::vector<char> m(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1;
        for (auto [i, j] : below) {
            if (i < 0 || i >= n || j < 0 || j >= n)
                throw std::domain_error("closure: element out of range");
            m[static_cast<std::size_t>(i) * n + j] = 1;
        }
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                if (m[static_cast<std::size_t>(i) * n + k])
                    for (int j = 0; j < n; ++j)
                        if (m[static_cast<std::size_t>(k) * n + j])
                            m[static_cast<std::size_t>(i) * n + j] = 1;
        return FinitePreOrder(n, std::move(m));
    }

    int size() const { return n_; }

    bool le(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::domain_error("le: out of range");
        return at(i, j);
    }

    bool is_antisymmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (at(i, j) && at(j, i)) return false;
        return true;
    }

    /// Common lower bound exists.
    bool compatible(int p, int q) const {
        for (int s = 0; s < n_; ++s)
            if (at(s, p) && at(s, q)) return true;
        return false;
    }

    bool operator==(const FinitePreOrder& o) const = default;

private:
    bool at(int i, int j) const { return le_[static_cast<std::size_t>(i) * n_ + j] != 0; }

    int n_ = 0;
    std::vector<char> le_;
};

/// Atoms: p such that all q,r <= p are compatible.
inline std::vector<int> atoms(const FinitePreOrder& p) {
    std::vector<int> out;
    for (int a = 0; a < p.size(); ++a) {
        bool atom = true;
        for (int q = 0; q < p.size() && atom; ++q) {
            if (!p.le(q, a)) continue;
            for (int r = 0; r < p.size() && atom; ++r)
                if (p.le(r, a) && !p.compatible(q, r)) atom = false;
        }
        if (atom) out.push_back(a);
    }
    return out;
}

inline bool is_atomless(const FinitePreOrder& p) { return atoms(p).empty(); }

/// Atomic: below every element lies an atom.
inline bool is_atomic(const FinitePreOrder& p) {
    std::vector<int> at = atoms(p);
    for (int q = 0; q < p.size(); ++q) {
        bool found = false;
        for (int a : at)
            if (p.le(a, q)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

/// Separative: whenever p is not below q, some r <= p is incompatible with q.
/// Defined for partial orders only.
inline bool is_separative(const FinitePreOrder& p) {
    if (!p.is_antisymmetric())
        throw std::domain_error("is_separative: input is not antisymmetric");
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b) {
            if (p.le(a, b)) continue;
            bool witness = false;
            for (int r = 0; r < p.size(); ++r)
                if (p.le(r, a) && !p.compatible(r, b)) {
                    witness = true;
                    break;
                }
            if (!witness) return false;
        }
    return true;
}

/// Separative modification: p <=* q iff every r <= p has some s <= r with s <= q.
inline FinitePreOrder sm(const FinitePreOrder& p) {
    const int n = p.size();
    std::vector<char> m(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            bool star = true;
            for (int r = 0; r < n && star; ++r) {
                if (!p.le(r, a)) continue;
                bool found = false;
                for (int s = 0; s < n; ++s)
                    if (p.le(s, r) && p.le(s, b)) {
                        found = true;
                        break;
                    }
                if (!found) star = false;
            }
            if (star) m[static_cast<std::size_t>(a) * n + b] = 1;
        }
    // <=* of a pre-order is itself a pre-order
    return FinitePreOrder(n, std::move(m));
}

/// Separative quotient: classes of mutual <=*, ordered by <=* on representatives.
struct QuotientPoset {
    std::vector<std::vector<int>> classes;  // represented by least element, sorted
    std::vector<int> class_of;              // element -> class index
    FinitePreOrder order;                   // separative partial order on classes
};

inline QuotientPoset sq(const FinitePreOrder& p) {
    FinitePreOrder star = sm(p);
    const int n = p.size();
    QuotientPoset q;
    q.class_of.assign(n, -1);
    std::vector<int> rep;
    for (int v = 0; v < n; ++v) {
        if (q.class_of[v] >= 0) continue;
        int c = static_cast<int>(q.classes.size());
        q.classes.emplace_back();
        for (int w = v; w < n; ++w)
            if (q.class_of[w] < 0 && star.le(v, w) && star.le(w, v)) {
                q.class_of[w] = c;
                q.classes[c].push_back(w);
            }
        rep.push_back(v);
    }
    const int k = static_cast<int>(q.classes.size());
    std::vector<char> m(static_cast<std::size_t>(k) * k, 0);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (star.le(rep[a], rep[b])) m[static_cast<std::size_t>(a) * k + b] = 1;
    q.order = FinitePreOrder(k, std::move(m));
    return q;
}

/// Coordinatewise order on pairs; element (i,j) of the product is i*|Q|+j.
inline FinitePreOrder product(const FinitePreOrder& p, const FinitePreOrder& q) {
    const int n = p.size(), m = q.size();
    std::vector<char> mat(static_cast<std::size_t>(n) * m * n * m, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < m; ++d)
                    if (p.le(a, c) && q.le(b, d))
                        mat[static_cast<std::size_t>(a * m + b) * n * m + (c * m + d)] = 1;
    return FinitePreOrder(n * m, std::move(mat));
}

/// Order isomorphism by backtracking with comparability-count invariants.
inline std::optional<std::vector<int>> iso(const FinitePreOrder& p, const FinitePreOrder& q) {
    const int n = p.size();
    if (n != q.size()) return std::nullopt;
    auto profile = [](const FinitePreOrder& r, int v) {
        int below = 0, above = 0;
        for (int w = 0; w < r.size(); ++w) {
            if (r.le(w, v)) ++below;
            if (r.le(v, w)) ++above;
        }
        return std::make_pair(below, above);
    };
    std::vector<std::pair<int, int>> pp(n), qp(n);
    for (int v = 0; v < n; ++v) pp[v] = profile(p, v), qp[v] = profile(q, v);
    {
        auto a = pp, b = qp;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == n) return true;
        for (int t = 0; t < n; ++t) {
            if (used[t] || pp[i] != qp[t]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (p.le(i, j) != q.le(t, map[j]) || p.le(j, i) != q.le(map[j], t)) ok = false;
            if (!ok) continue;
            map[i] = t;
            used[t] = 1;
            if (rec(i + 1)) return true;
            used[t] = 0;
        }
        return false;
    };
    if (rec(0)) return map;
    return std::nullopt;
}

/// Verdict of the quotient-transfer check: conditions (i) monotone,
/// (ii) incompatibility-preserving, (iii) surjective; when all hold the
/// induced map [p] -> [f(p)] is verified to be an isomorphism of the
/// separative quotients.
struct TransferVerdict {
    bool monotone = false;
    bool incompatibility_preserving = false;
    bool surjective = false;
    bool conditions_hold() const { return monotone && incompatibility_preserving && surjective; }
    // Populated when all conditions hold: class index in sq(P) -> class index in sq(Q).
    std::optional<std::vector<int>> quotient_iso;
    std::string failure;
};

inline TransferVerdict check_transfer(const std::vector<int>& f, const FinitePreOrder& p,
                                      const FinitePreOrder& q) {
    if (!p.is_antisymmetric() || !q.is_antisymmetric())
        throw std::domain_error("check_transfer: inputs must be partial orders");
    if (static_cast<int>(f.size()) != p.size())
        throw std::domain_error("check_transfer: map size mismatch");
    for (int v : f)
        if (v < 0 || v >= q.size()) throw std::domain_error("check_transfer: map out of range");

    TransferVerdict v;
    v.monotone = true;
    v.incompatibility_preserving = true;
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b) {
            if (p.le(a, b) && !q.le(f[a], f[b])) {
                v.monotone = false;
                v.failure = "(i) fails at " + std::to_string(a) + "," + std::to_string(b);
            }
            if (!p.compatible(a, b) && q.compatible(f[a], f[b])) {
                v.incompatibility_preserving = false;
                v.failure = "(ii) fails at " + std::to_string(a) + "," + std::to_string(b);
            }
        }
    std::vector<char> hit(q.size(), 0);
    for (int a = 0; a < p.size(); ++a) hit[f[a]] = 1;
    v.surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
    if (!v.surjective) v.failure = "(iii) fails: map is not onto";
    if (!v.conditions_hold()) return v;

    QuotientPoset sp = sq(p), sqq = sq(q);
    // F([p]) = [f(p)] must be a well defined order isomorphism.
    std::vector<int> big_f(sp.classes.size(), -1);
    for (int a = 0; a < p.size(); ++a) {
        int src = sp.class_of[a], dst = sqq.class_of[f[a]];
        if (big_f[src] >= 0 && big_f[src] != dst)
            throw std::logic_error("check_transfer: induced map not well defined");
        big_f[src] = dst;
    }
    if (sp.classes.size() != sqq.classes.size())
        throw std::logic_error("check_transfer: quotient sizes differ");
    std::vector<char> seen(sqq.classes.size(), 0);
    for (int c : big_f) {
        if (c < 0 || seen[c]) throw std::logic_error("check_transfer: induced map not bijective");
        seen[c] = 1;
    }
    for (std::size_t a = 0; a < big_f.size(); ++a)
        for (std::size_t b = 0; b < big_f.size(); ++b)
            if (sp.order.le(static_cast<int>(a), static_cast<int>(b)) !=
                sqq.order.le(big_f[a], big_f[b]))
                throw std::logic_error("check_transfer: induced map not an order isomorphism");
    v.quotient_iso = std::move(big_f);
    return v;
}

/// Seeded random pre-order: closure of a random DAG plus random class collapses.
inline FinitePreOrder random_preorder(std::mt19937_64& rng, int n) {
    std::vector<std::pair<int, int>> below;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    double density = coin(rng) * 0.6;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < density) below.emplace_back(perm[j], perm[i]);
    // collapse a few random pairs into equivalence cycles
    int collapses = static_cast<int>(coin(rng) * 2.0);
    for (int c = 0; c < collapses && n >= 2; ++c) {
        int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
        below.emplace_back(a, b);
        below.emplace_back(b, a);
    }
    return FinitePreOrder::closure(n, below);
}

/// Seeded random partial order (no collapses).
inline FinitePreOrder random_partial_order(std::mt19937_64& rng, int n) {
    std::vector<std::pair<int, int>> below;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    double density = coin(rng) * 0.6;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < density) below.emplace_back(perm[j], perm[i]);
    return FinitePreOrder::closure(n, below);
}

}  // namespace embkit
