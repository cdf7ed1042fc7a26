#pragma once

// Collections of pairwise weakly separated subsets: validation, maximality,
// exhaustive enumeration via maximal cliques of the compatibility graph,
// greedy completion, left-right pairs, and flips on largest collections.

#include <cstdint>
#include <type_traits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zonoweave/groundset.hpp"

namespace zw {

/// A deduplicated set of subsets over a common ground, kept in canonical
/// order. "Largest" means cardinality n(n+1)/2 + 1.
struct WsCollection {
    int n = 0;
    std::vector<Subset> members;  // canonical order, unique

    static WsCollection empty(int ground) {
        check_ground(ground);
        return WsCollection{ground, {}};
    }

    static WsCollection from(int ground, std::vector<Subset> sets) {
        check_ground(ground);
        for (const auto& s : sets) {
            if (s.n != ground) throw std::invalid_argument("collection member has a different ground size");
        }
        std::sort(sets.begin(), sets.end(), CanonicalLess{});
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        return WsCollection{ground, std::move(sets)};
    }

    int size() const { return static_cast<int>(members.size()); }

    bool contains(const Subset& s) const {
        return std::binary_search(members.begin(), members.end(), s, CanonicalLess{});
    }

    WsCollection with(const Subset& s) const {
        auto sets = members;
        sets.push_back(s);
        return from(n, std::move(sets));
    }

    WsCollection without(const Subset& s) const {
        auto sets = members;
        sets.erase(std::remove(sets.begin(), sets.end(), s), sets.end());
        return WsCollection{n, std::move(sets)};
    }

    friend bool operator==(const WsCollection& a, const WsCollection& b) {
        return a.n == b.n && a.members == b.members;
    }
    friend bool operator!=(const WsCollection& a, const WsCollection& b) { return !(a == b); }
    friend bool operator<(const WsCollection& a, const WsCollection& b) {
        return std::lexicographical_compare(a.members.begin(), a.members.end(), b.members.begin(),
                                            b.members.end(), CanonicalLess{});
    }
};

inline int largest_size(int n) { return n * (n + 1) / 2 + 1; }

inline bool validate(const WsCollection& c) {
    for (std::size_t i = 0; i < c.members.size(); ++i) {
        for (std::size_t j = i + 1; j < c.members.size(); ++j) {
            if (!weakly_separated(c.members[i], c.members[j])) return false;
        }
    }
    return true;
}

inline bool is_ws_with_all(const Subset& x, const WsCollection& c) {
    for (const auto& m : c.members) {
        if (!weakly_separated(x, m)) return false;
    }
    return true;
}

/// All 2^n subsets in canonical order.
inline std::vector<Subset> all_subsets(int n) {
    check_ground(n);
    if (n > 30) throw std::invalid_argument("refusing to materialize 2^n subsets for n > 30");
    std::vector<Subset> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) out.push_back(Subset{b, n});
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

/// splitmix64; used for deterministic shuffles so identical seeds give
/// identical orders on every platform.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// All 2^n subsets in a seed-determined order.
inline std::vector<Subset> shuffled_subsets(int n, std::uint64_t seed) {
    auto out = all_subsets(n);
    std::uint64_t state = seed;
    for (std::size_t k = out.size(); k > 1; --k) {
        const std::size_t r = static_cast<std::size_t>(splitmix64(state) % k);
        std::swap(out[k - 1], out[r]);
    }
    return out;
}

inline bool is_maximal(const WsCollection& c) {
    if (!validate(c)) throw std::invalid_argument("is_maximal: input is not a ws-collection");
    for (const auto& x : all_subsets(c.n)) {
        if (c.contains(x)) continue;
        if (is_ws_with_all(x, c)) return false;
    }
    return true;
}

/// Scans `order` once, adding every subset that keeps the collection weakly
/// separated. One pass suffices: compatibility with the current collection
/// never comes back once lost.
inline WsCollection greedy_complete(const WsCollection& c, const std::vector<Subset>& order) {
    if (!validate(c)) throw std::invalid_argument("greedy_complete: input is not a ws-collection");
    std::vector<Subset> grown = c.members;
    auto compatible = [&grown](const Subset& x) {
        for (const auto& m : grown) {
            if (!weakly_separated(x, m)) return false;
        }
        return true;
    };
    for (const auto& x : order) {
        if (x.n != c.n) throw std::invalid_argument("greedy_complete: order entry has wrong ground size");
        if (std::find(grown.begin(), grown.end(), x) != grown.end()) continue;
        if (compatible(x)) grown.push_back(x);
    }
    return WsCollection::from(c.n, std::move(grown));
}

inline WsCollection greedy_complete(const WsCollection& c) { return greedy_complete(c, all_subsets(c.n)); }

// ---------------------------------------------------------------------------
// Exhaustive enumeration of maximal ws-collections
// ---------------------------------------------------------------------------

namespace detail {

/// Fixed-width bit rows for the compatibility graph (up to 2^7 vertices at
/// the guarded sizes; grows by word beyond that).
struct BitRow {
    std::vector<std::uint64_t> w;

    explicit BitRow(std::size_t bits = 0) : w((bits + 63) / 64, 0) {}
    void set(std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1u; }
    bool empty() const {
        for (auto x : w) {
            if (x) return false;
        }
        return true;
    }
    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    BitRow and_with(const BitRow& o) const {
        BitRow r = *this;
        for (std::size_t k = 0; k < w.size(); ++k) r.w[k] &= o.w[k];
        return r;
    }
    int count_and(const BitRow& o) const {
        int c = 0;
        for (std::size_t k = 0; k < w.size(); ++k) c += std::popcount(w[k] & o.w[k]);
        return c;
    }
    void clear(std::size_t i) { w[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    int lowest() const {
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (w[k]) return static_cast<int>(k * 64 + static_cast<std::size_t>(std::countr_zero(w[k])));
        }
        return -1;
    }
    std::vector<int> indices() const {
        std::vector<int> out;
        for (std::size_t k = 0; k < w.size(); ++k) {
            for (std::uint64_t x = w[k]; x != 0; x &= x - 1) {
                out.push_back(static_cast<int>(k * 64 + static_cast<std::size_t>(std::countr_zero(x))));
            }
        }
        return out;
    }
};

/// Bron-Kerbosch with pivoting over bit-set adjacency rows.
inline void bron_kerbosch(const std::vector<BitRow>& adj, BitRow r, BitRow p, BitRow x,
                          std::vector<std::vector<int>>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r.indices());
        return;
    }
    // Pivot: vertex of P ∪ X with most neighbours inside P.
    int pivot = -1, best = -1;
    for (int u : p.indices()) {
        const int d = p.count_and(adj[static_cast<std::size_t>(u)]);
        if (d > best) best = d, pivot = u;
    }
    for (int u : x.indices()) {
        const int d = p.count_and(adj[static_cast<std::size_t>(u)]);
        if (d > best) best = d, pivot = u;
    }
    BitRow cand = p;
    if (pivot >= 0) {
        for (int v : adj[static_cast<std::size_t>(pivot)].indices()) cand.clear(static_cast<std::size_t>(v));
    }
    for (int v : cand.indices()) {
        BitRow rv = r;
        rv.set(static_cast<std::size_t>(v));
        bron_kerbosch(adj, rv, p.and_with(adj[static_cast<std::size_t>(v)]),
                      x.and_with(adj[static_cast<std::size_t>(v)]), out);
        p.clear(static_cast<std::size_t>(v));
        x.set(static_cast<std::size_t>(v));
    }
}

}  // namespace detail

/// All inclusion-maximal ws-collections whose members satisfy `ground`,
/// as maximal cliques of the pairwise compatibility graph. Deterministic
/// output order (collections sorted by member lists). An empty ground gives
/// an empty list.
template <typename Ground>
    requires std::is_invocable_r_v<bool, Ground, const Subset&>
inline std::vector<WsCollection> enumerate_maximal(int n, Ground&& ground, bool force = false) {
    check_ground(n);
    if (n > 7 && !force) {
        throw std::invalid_argument("enumerate_maximal: n > 7 needs force=true (cost guard)");
    }
    std::vector<Subset> verts;
    for (const auto& s : all_subsets(n)) {
        if (ground(s)) verts.push_back(s);
    }
    if (verts.empty()) return {};
    const std::size_t m = verts.size();
    std::vector<detail::BitRow> adj(m, detail::BitRow(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (weakly_separated(verts[i], verts[j])) {
                adj[i].set(j);
                adj[j].set(i);
            }
        }
    }
    detail::BitRow r(m), p(m), x(m);
    for (std::size_t i = 0; i < m; ++i) p.set(i);
    std::vector<std::vector<int>> cliques;
    detail::bron_kerbosch(adj, r, p, x, cliques);

    std::vector<WsCollection> out;
    out.reserve(cliques.size());
    for (const auto& cl : cliques) {
        std::vector<Subset> sets;
        sets.reserve(cl.size());
        for (int v : cl) sets.push_back(verts[static_cast<std::size_t>(v)]);
        out.push_back(WsCollection::from(n, std::move(sets)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<WsCollection> enumerate_maximal(int n, bool force = false) {
    return enumerate_maximal(
        n, [](const Subset&) { return true; }, force);
}

/// The canonical checker of w as a collection.
inline WsCollection checker(const Permutation& w) { return WsCollection::from(w.n(), checker_sets(w)); }

// ---------------------------------------------------------------------------
// Left-right pairs
// ---------------------------------------------------------------------------

struct LrPair {
    WsCollection left;
    WsCollection right;
};

/// (LR): the union is weakly separated, and L is below-or-equal R for every
/// left member L and right member R with |L| <= |R|.
inline bool lr_validate(const LrPair& p) {
    if (p.left.n != p.right.n) throw std::invalid_argument("lr_validate: mismatched ground sizes");
    std::vector<Subset> uni = p.left.members;
    uni.insert(uni.end(), p.right.members.begin(), p.right.members.end());
    if (!validate(WsCollection::from(p.left.n, uni))) return false;
    for (const auto& l : p.left.members) {
        for (const auto& r : p.right.members) {
            if (l.count() <= r.count() && l != r && !lessdot(l, r)) return false;
        }
    }
    return true;
}

/// Greedy maximal extension: repeatedly scan all subsets in canonical order,
/// first growing the left side then the right, until a full pass adds
/// nothing. The result always absorbs all prefixes on the left and all
/// suffixes on the right.
inline LrPair lr_extend_maximal(const LrPair& p) {
    if (!lr_validate(p)) throw std::invalid_argument("lr_extend_maximal: input is not an lr-pair");
    LrPair cur = p;
    const auto order = all_subsets(cur.left.n);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& x : order) {
            if (!cur.left.contains(x)) {
                LrPair trial{cur.left.with(x), cur.right};
                if (lr_validate(trial)) {
                    cur = std::move(trial);
                    changed = true;
                }
            }
        }
        for (const auto& x : order) {
            if (!cur.right.contains(x)) {
                LrPair trial{cur.left, cur.right.with(x)};
                if (lr_validate(trial)) {
                    cur = std::move(trial);
                    changed = true;
                }
            }
        }
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Flips on largest collections
// ---------------------------------------------------------------------------

enum class FlipDirection { Lowering, Raising };

/// A flip exchanges base+{i,k} and base+{j} (i<j<k, none in base) inside a
/// largest collection, guarded by the five-set quintuple around them.
struct FlipMove {
    Subset base;
    int i = 0, j = 0, k = 0;
    FlipDirection direction = FlipDirection::Lowering;
    Subset removed;
    Subset added;

    static FlipMove lowering(const Subset& base, int i, int j, int k) { return make(base, i, j, k, FlipDirection::Lowering); }
    static FlipMove raising(const Subset& base, int i, int j, int k) { return make(base, i, j, k, FlipDirection::Raising); }

    /// The five members the source collection must contain.
    std::vector<Subset> quintuple() const {
        const Subset xi = base.with(i), xk = base.with(k);
        const Subset xij = base.with(i).with(j), xjk = base.with(j).with(k);
        return {xi, xk, xij, removed, xjk};
    }

   private:
    static FlipMove make(const Subset& base, int i, int j, int k, FlipDirection dir) {
        if (!(0 < i && i < j && j < k && k <= base.n)) {
            throw std::invalid_argument("flip indices must satisfy 0 < i < j < k <= n");
        }
        if (base.contains(i) || base.contains(j) || base.contains(k)) {
            throw std::invalid_argument("flip indices must avoid the base set");
        }
        FlipMove m;
        m.base = base;
        m.i = i;
        m.j = j;
        m.k = k;
        m.direction = dir;
        const Subset xik = base.with(i).with(k);
        const Subset xj = base.with(j);
        if (dir == FlipDirection::Lowering) {
            m.removed = xik;
            m.added = xj;
        } else {
            m.removed = xj;
            m.added = xik;
        }
        return m;
    }
};

/// Applies a flip to a largest collection. The move's quintuple must be
/// present, the removed member present, the added absent, and the result is
/// re-validated as a largest ws-collection.
inline WsCollection flip(const WsCollection& c, const FlipMove& m) {
    if (c.n != m.base.n) throw std::invalid_argument("flip: mismatched ground sizes");
    if (c.size() != largest_size(c.n) || !validate(c)) {
        throw std::invalid_argument("flip: source is not a largest ws-collection");
    }
    for (const auto& q : m.quintuple()) {
        if (!c.contains(q)) throw std::invalid_argument("flip: quintuple member " + q.str() + " missing");
    }
    if (!c.contains(m.removed)) throw std::invalid_argument("flip: removed member not present");
    if (c.contains(m.added)) throw std::invalid_argument("flip: added member already present");
    WsCollection out = c.without(m.removed).with(m.added);
    if (out.size() != largest_size(c.n) || !validate(out)) {
        throw std::domain_error("flip: result is not a largest ws-collection (inapplicable flip)");
    }
    return out;
}

/// All applicable lowering flips of a largest collection.
inline std::vector<FlipMove> lowering_flips(const WsCollection& c) {
    std::vector<FlipMove> out;
    for (const auto& x : all_subsets(c.n)) {
        for (int i = 1; i <= c.n; ++i) {
            if (x.contains(i)) continue;
            for (int j = i + 1; j <= c.n; ++j) {
                if (x.contains(j)) continue;
                for (int k = j + 1; k <= c.n; ++k) {
                    if (x.contains(k)) continue;
                    FlipMove m = FlipMove::lowering(x, i, j, k);
                    if (c.contains(m.added)) continue;
                    bool have = true;
                    for (const auto& q : m.quintuple()) {
                        if (!c.contains(q)) {
                            have = false;
                            break;
                        }
                    }
                    if (!have) continue;
                    WsCollection trial = c.without(m.removed).with(m.added);
                    if (trial.size() == largest_size(c.n) && validate(trial)) out.push_back(m);
                }
            }
        }
    }
    return out;
}

struct FlipGraph {
    int n = 0;
    std::vector<WsCollection> nodes;                 // all largest collections, sorted
    std::vector<std::pair<int, int>> lowering_edges; // (from, to) indices, from --lowering--> to
    bool connected = false;
    int minimum = -1;  // no lowering flip applies: the interval collection
    int maximum = -1;  // no raising flip applies: the co-interval collection
};

/// Builds the flip graph over all largest collections of 2^[n].
inline FlipGraph flip_reachability(int n, bool force = false) {
    check_ground(n);
    if (n > 5 && !force) throw std::invalid_argument("flip_reachability: n > 5 needs force=true");
    FlipGraph g;
    g.n = n;
    g.nodes = enumerate_maximal(n);
    auto index_of = [&g](const WsCollection& c) {
        const auto it = std::lower_bound(g.nodes.begin(), g.nodes.end(), c);
        return static_cast<int>(it - g.nodes.begin());
    };

    std::vector<int> indeg(g.nodes.size(), 0);
    for (std::size_t a = 0; a < g.nodes.size(); ++a) {
        for (const auto& m : lowering_flips(g.nodes[a])) {
            const int b = index_of(flip(g.nodes[a], m));
            g.lowering_edges.emplace_back(static_cast<int>(a), b);
            ++indeg[static_cast<std::size_t>(b)];
        }
    }

    // Connectivity of the undirected flip graph.
    std::vector<int> comp(g.nodes.size(), -1);
    std::vector<std::size_t> stack{0};
    if (!g.nodes.empty()) comp[0] = 0;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (const auto& [a, b] : g.lowering_edges) {
            const std::size_t x = static_cast<std::size_t>(a), y = static_cast<std::size_t>(b);
            if (x == v && comp[y] < 0) comp[y] = 0, stack.push_back(y);
            if (y == v && comp[x] < 0) comp[x] = 0, stack.push_back(x);
        }
    }
    g.connected = std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });

    int n_sinks = 0, n_sources = 0;
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
        const bool has_out = std::any_of(g.lowering_edges.begin(), g.lowering_edges.end(),
                                         [&](const auto& e) { return e.first == static_cast<int>(v); });
        if (!has_out) {
            g.minimum = static_cast<int>(v);
            ++n_sinks;
        }
        if (indeg[v] == 0) {
            g.maximum = static_cast<int>(v);
            ++n_sources;
        }
    }
    if (g.nodes.size() == 1) {
        g.minimum = g.maximum = 0;
        n_sinks = n_sources = 1;
    }
    if (n_sinks != 1 || n_sources != 1) {
        throw std::domain_error("flip_reachability: raising order extremes are not unique");
    }
    return g;
}

/// The interval collection over [n] (all [p..q] plus the empty set).
inline WsCollection interval_collection(int n) {
    std::vector<Subset> sets{Subset::empty_set(n)};
    for (int p = 1; p <= n; ++p) {
        for (int q = p; q <= n; ++q) sets.push_back(Subset::interval(n, p, q));
    }
    return WsCollection::from(n, std::move(sets));
}

/// Complements of all members.
inline WsCollection co_collection(const WsCollection& c) {
    std::vector<Subset> sets;
    sets.reserve(c.members.size());
    for (const auto& s : c.members) sets.push_back(s.complement());
    return WsCollection::from(c.n, std::move(sets));
}

}  // namespace zw
