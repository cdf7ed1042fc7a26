#pragma once

// The auxiliary graph of a tiling: its spectrum with the fully white edges
// (ascending) and one left-to-right diagonal per white tile (horizontal).
// Its reachability order, the direct below-and-no-larger order on the
// spectrum, and finite-lattice queries.

#include <stdexcept>
#include <string>
#include <vector>

#include "zonoweave/tiling.hpp"

namespace zw {

struct AuxGraph {
    int n = 0;
    std::vector<Subset> vertices;                   // spectrum, canonical order
    std::vector<std::pair<int, int>> ascending;     // fully white edges, index pairs
    std::vector<std::pair<int, int>> horizontal;    // white-tile diagonals, left -> right

    std::vector<std::pair<int, int>> all_edges() const {
        auto out = ascending;
        out.insert(out.end(), horizontal.begin(), horizontal.end());
        return out;
    }
};

/// Builds the auxiliary graph of a verified tiling and asserts acyclicity.
inline AuxGraph build_aux(const GTiling& t) {
    require_verified(t, "build_aux");
    const TilingGraph g = build_graph(t);
    AuxGraph a;
    a.n = t.n;
    a.vertices = spectrum_unchecked(t).members;
    auto id_of = [&a](const Subset& v) {
        const auto it = std::lower_bound(a.vertices.begin(), a.vertices.end(), v, CanonicalLess{});
        if (it == a.vertices.end() || !(*it == v)) throw std::logic_error("aux vertex outside spectrum");
        return static_cast<int>(it - a.vertices.begin());
    };
    for (const auto& [e, tl] : g.edge_tiles) {
        if (tl.empty() && t.n != 1) continue;  // n = 1 keeps its degenerate boundary edge
        if (g.edge_is_black(e)) continue;
        if (g.is_terminal(e.tail) || g.is_terminal(e.head())) continue;
        a.ascending.emplace_back(id_of(e.tail), id_of(e.head()));
    }
    for (const auto& tile : t.tiles) {
        if (tile.black) continue;
        a.horizontal.emplace_back(id_of(tile.left()), id_of(tile.right()));
    }
    std::sort(a.ascending.begin(), a.ascending.end());
    std::sort(a.horizontal.begin(), a.horizontal.end());

    // ascending edges climb a level, horizontal ones strictly increase the
    // offset at a fixed level, so a directed cycle is impossible; check it
    const Zonogon zg = Zonogon::standard(t.n);
    for (const auto& [x, y] : a.ascending) {
        if (a.vertices[static_cast<std::size_t>(y)].count() !=
            a.vertices[static_cast<std::size_t>(x)].count() + 1) {
            throw std::logic_error("ascending aux edge does not climb one level");
        }
    }
    for (const auto& [x, y] : a.horizontal) {
        const auto &vx = a.vertices[static_cast<std::size_t>(x)], &vy = a.vertices[static_cast<std::size_t>(y)];
        if (vx.count() != vy.count() || zg.offset_sum(vx) >= zg.offset_sum(vy)) {
            throw std::logic_error("horizontal aux edge does not move right");
        }
    }
    return a;
}

// ---------------------------------------------------------------------------
// Finite posets
// ---------------------------------------------------------------------------

/// A finite strict partial order held as a full reachability matrix,
/// optionally labeled by subsets. Construction verifies irreflexivity and
/// transitivity.
struct FinitePoset {
    int count = 0;
    std::vector<Subset> labels;  // empty for abstract posets
    std::vector<char> strict;    // strict[a*count+b] == 1 iff a < b

    bool less(int a, int b) const { return strict[static_cast<std::size_t>(a * count + b)] != 0; }
    bool leq(int a, int b) const { return a == b || less(a, b); }

    int index_of(const Subset& s) const {
        for (int k = 0; k < count; ++k) {
            if (labels[static_cast<std::size_t>(k)] == s) return k;
        }
        throw std::out_of_range("element " + s.str() + " not in the poset");
    }

    std::string name(int a) const {
        return labels.empty() ? std::to_string(a) : labels[static_cast<std::size_t>(a)].str();
    }

    /// Reachability order of an acyclic edge list. Throws on a directed cycle.
    static FinitePoset from_edges(int count, const std::vector<std::pair<int, int>>& edges,
                                  std::vector<Subset> labels = {}) {
        FinitePoset p;
        p.count = count;
        p.labels = std::move(labels);
        p.strict.assign(static_cast<std::size_t>(count) * static_cast<std::size_t>(count), 0);
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(count));
        for (const auto& [a, b] : edges) adj[static_cast<std::size_t>(a)].push_back(b);
        for (int s = 0; s < count; ++s) {
            std::vector<int> stack{s};
            while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                for (int w : adj[static_cast<std::size_t>(v)]) {
                    auto& cell = p.strict[static_cast<std::size_t>(s * count + w)];
                    if (!cell) {
                        cell = 1;
                        stack.push_back(w);
                    }
                }
            }
        }
        for (int v = 0; v < count; ++v) {
            if (p.less(v, v)) throw std::invalid_argument("cyclic graph is not a poset");
        }
        return p;
    }

    /// A raw strict relation, audited: must be irreflexive and transitive.
    static FinitePoset from_relation(int count, std::vector<char> strict, std::vector<Subset> labels = {}) {
        FinitePoset p;
        p.count = count;
        p.labels = std::move(labels);
        p.strict = std::move(strict);
        for (int a = 0; a < count; ++a) {
            if (p.less(a, a)) throw std::domain_error("relation is not irreflexive");
            for (int b = 0; b < count; ++b) {
                if (!p.less(a, b)) continue;
                for (int c = 0; c < count; ++c) {
                    if (p.less(b, c) && !p.less(a, c)) {
                        throw std::domain_error("relation breaks transitivity at " + p.name(a) + " < " +
                                                p.name(b) + " < " + p.name(c));
                    }
                }
            }
        }
        return p;
    }

    /// Covers: a < b with nothing strictly between.
    std::vector<std::pair<int, int>> cover_relation() const {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < count; ++a) {
            for (int b = 0; b < count; ++b) {
                if (!less(a, b)) continue;
                bool cover = true;
                for (int c = 0; c < count && cover; ++c) {
                    if (less(a, c) && less(c, b)) cover = false;
                }
                if (cover) out.emplace_back(a, b);
            }
        }
        return out;
    }

    std::vector<int> minimal_elements() const {
        std::vector<int> out;
        for (int v = 0; v < count; ++v) {
            bool minimal = true;
            for (int u = 0; u < count; ++u) {
                if (less(u, v)) minimal = false;
            }
            if (minimal) out.push_back(v);
        }
        return out;
    }

    std::vector<int> maximal_elements() const {
        std::vector<int> out;
        for (int v = 0; v < count; ++v) {
            bool maximal = true;
            for (int u = 0; u < count; ++u) {
                if (less(v, u)) maximal = false;
            }
            if (maximal) out.push_back(v);
        }
        return out;
    }
};

/// Reachability order of the auxiliary graph.
inline FinitePoset order_of_graph(const AuxGraph& g) {
    return FinitePoset::from_edges(static_cast<int>(g.vertices.size()), g.all_edges(), g.vertices);
}

/// The direct order on a collection: a below b with a no larger than b.
/// On a weakly separated collection this raw relation must already be
/// transitive; the construction audits exactly that.
inline FinitePoset order_star(const WsCollection& c) {
    const int m = c.size();
    std::vector<char> strict(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            const auto& sa = c.members[static_cast<std::size_t>(a)];
            const auto& sb = c.members[static_cast<std::size_t>(b)];
            if (a != b && lessdot(sa, sb) && sa.count() <= sb.count()) {
                strict[static_cast<std::size_t>(a * m + b)] = 1;
            }
        }
    }
    return FinitePoset::from_relation(m, std::move(strict), c.members);
}

/// The reachability order of the auxiliary graph coincides with the direct
/// order on the spectrum.
inline bool posets_equal(const GTiling& t) {
    const FinitePoset a = order_of_graph(build_aux(t));
    const FinitePoset b = order_star(spectrum(t));
    return a.count == b.count && a.strict == b.strict;
}

// ---------------------------------------------------------------------------
// Lattice queries
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<int> extremal_lower_bounds(const FinitePoset& p, int a, int b) {
    std::vector<int> bounds;
    for (int v = 0; v < p.count; ++v) {
        if (p.leq(v, a) && p.leq(v, b)) bounds.push_back(v);
    }
    std::vector<int> out;
    for (int v : bounds) {
        bool top = true;
        for (int u : bounds) {
            if (p.less(v, u)) top = false;
        }
        if (top) out.push_back(v);
    }
    return out;
}

inline std::vector<int> extremal_upper_bounds(const FinitePoset& p, int a, int b) {
    std::vector<int> bounds;
    for (int v = 0; v < p.count; ++v) {
        if (p.leq(a, v) && p.leq(b, v)) bounds.push_back(v);
    }
    std::vector<int> out;
    for (int v : bounds) {
        bool bottom = true;
        for (int u : bounds) {
            if (p.less(u, v)) bottom = false;
        }
        if (bottom) out.push_back(v);
    }
    return out;
}

inline std::string join_names(const FinitePoset& p, const std::vector<int>& vs) {
    std::string s;
    for (int v : vs) {
        if (!s.empty()) s += ", ";
        s += p.name(v);
    }
    return s;
}

}  // namespace detail

/// Every pair has a unique greatest lower and least upper bound.
inline bool is_lattice(const FinitePoset& p) {
    for (int a = 0; a < p.count; ++a) {
        for (int b = a + 1; b < p.count; ++b) {
            if (detail::extremal_lower_bounds(p, a, b).size() != 1) return false;
            if (detail::extremal_upper_bounds(p, a, b).size() != 1) return false;
        }
    }
    return p.count > 0;
}

inline int meet(const FinitePoset& p, int a, int b) {
    const auto m = detail::extremal_lower_bounds(p, a, b);
    if (m.size() != 1) {
        throw std::domain_error("no unique meet of " + p.name(a) + " and " + p.name(b) +
                                "; maximal lower bounds: {" + detail::join_names(p, m) + "}");
    }
    return m[0];
}

inline int join(const FinitePoset& p, int a, int b) {
    const auto j = detail::extremal_upper_bounds(p, a, b);
    if (j.size() != 1) {
        throw std::domain_error("no unique join of " + p.name(a) + " and " + p.name(b) +
                                "; minimal upper bounds: {" + detail::join_names(p, j) + "}");
    }
    return j[0];
}

inline Subset meet(const FinitePoset& p, const Subset& a, const Subset& b) {
    return p.labels[static_cast<std::size_t>(meet(p, p.index_of(a), p.index_of(b)))];
}

inline Subset join(const FinitePoset& p, const Subset& a, const Subset& b) {
    return p.labels[static_cast<std::size_t>(join(p, p.index_of(a), p.index_of(b)))];
}

/// Cover-relation edge list in canonical vertex order, DOT-compatible.
inline std::string to_dot(const FinitePoset& p) {
    std::string out = "digraph poset {\n";
    for (int v = 0; v < p.count; ++v) out += "  \"" + p.name(v) + "\";\n";
    for (const auto& [a, b] : p.cover_relation()) {
        out += "  \"" + p.name(a) + "\" -> \"" + p.name(b) + "\";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace zw
