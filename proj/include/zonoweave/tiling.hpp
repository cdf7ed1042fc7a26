#pragma once

// Generalized tilings of the zonogon Z_n.
//
// A tile tau(X;i,j) is the parallelogram spanned by the generators xi_i and
// xi_j at the point of subset X; tiles carry a white/black color. A tiling is
// a tile multiset satisfying four axioms:
//   (T1) every zonogon boundary edge lies in exactly one tile, every other
//        edge in exactly two, and no two tiles coincide;
//   (T2) white tiles sharing an edge do not overlap, a white and a black
//        tile sharing an edge do overlap, black tiles never share an edge;
//   (T3) the bottom of a black tile only emits edges, the top only absorbs
//        them, and no two black tiles share a bottom/top vertex;
//   (T4) the tile squares, glued along shared edges, form a disc.
//
// Vertices are subsets, never floating-point points. Geometry enters only
// through exact integer cross products over the generator offsets (for the
// side-of-edge test of (T2) and for left/right comparisons) and through the
// SVG renderer.

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "zonoweave/groundset.hpp"
#include "zonoweave/wscoll.hpp"

namespace zw {

// ---------------------------------------------------------------------------
// Zonogon geometry
// ---------------------------------------------------------------------------

/// Generators xi_i = (offset[i], 1) with strictly increasing offsets and all
/// subset sums distinct. The default offsets 2^(i-1) make distinct sums a
/// property of superincreasing sequences.
struct Zonogon {
    int n = 0;
    std::vector<long long> offsets;

    static Zonogon standard(int n) {
        check_ground(n);
        if (n > 62) throw std::invalid_argument("standard zonogon offsets overflow beyond n = 62");
        Zonogon z;
        z.n = n;
        z.offsets.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) z.offsets.push_back(1LL << i);
        return z;
    }

    long long offset(int label) const {
        if (label < 1 || label > n) throw std::out_of_range("generator label outside [1,n]");
        return offsets[static_cast<std::size_t>(label - 1)];
    }

    long long offset_sum(const Subset& x) const {
        long long s = 0;
        for (int e : x.elements()) s += offset(e);
        return s;
    }
};

// ---------------------------------------------------------------------------
// Tiles, edges, tilings
// ---------------------------------------------------------------------------

/// Directed edge of the tiling graph in its canonical direction
/// tail -> tail + {label}.
struct Edge {
    Subset tail;
    int label = 0;

    Subset head() const { return tail.with(label); }

    friend bool operator==(const Edge& a, const Edge& b) { return a.tail == b.tail && a.label == b.label; }
    friend bool operator<(const Edge& a, const Edge& b) {
        if (a.tail.bits != b.tail.bits) return a.tail.bits < b.tail.bits;
        return a.label < b.label;
    }

    std::string str() const { return tail.str() + "->" + head().str(); }
};

struct Tile {
    Subset base;
    int i = 0;
    int j = 0;
    bool black = false;

    Subset bottom() const { return base; }
    Subset left() const { return base.with(i); }
    Subset right() const { return base.with(j); }
    Subset top() const { return base.with(i).with(j); }

    Edge edge_bl() const { return Edge{base, i}; }
    Edge edge_br() const { return Edge{base, j}; }
    Edge edge_lt() const { return Edge{left(), j}; }
    Edge edge_rt() const { return Edge{right(), i}; }

    std::array<Edge, 4> edges() const { return {edge_bl(), edge_br(), edge_lt(), edge_rt()}; }

    std::array<Subset, 4> corners() const { return {bottom(), left(), right(), top()}; }

    bool same_position(const Tile& o) const { return base == o.base && i == o.i && j == o.j; }

    friend bool operator==(const Tile& a, const Tile& b) {
        return a.base == b.base && a.i == b.i && a.j == b.j && a.black == b.black;
    }

    std::string str() const {
        return std::string(black ? "black" : "white") + " tile(" + base.str() + ";" + std::to_string(i) +
               "," + std::to_string(j) + ")";
    }
};

/// Canonical tile order: base, then i, then j, then color.
inline bool tile_less(const Tile& a, const Tile& b) {
    if (!(a.base == b.base)) return canonical_less(a.base, b.base);
    if (a.i != b.i) return a.i < b.i;
    if (a.j != b.j) return a.j < b.j;
    return a.black < b.black;
}

struct GTiling {
    int n = 0;
    std::vector<Tile> tiles;  // canonical order

    /// Structural constructor: enforces tile well-formedness (i < j, labels
    /// off the base, matching grounds) and canonical order. Axioms are the
    /// business of verify().
    static GTiling make(int n, std::vector<Tile> tiles) {
        check_ground(n);
        for (const auto& t : tiles) {
            if (t.base.n != n) throw std::invalid_argument("tile base over a different ground");
            if (!(1 <= t.i && t.i < t.j && t.j <= n)) {
                throw std::invalid_argument("tile labels must satisfy 1 <= i < j <= n");
            }
            if (t.base.contains(t.i) || t.base.contains(t.j)) {
                throw std::invalid_argument("tile labels must avoid the base set");
            }
        }
        std::sort(tiles.begin(), tiles.end(), tile_less);
        return GTiling{n, std::move(tiles)};
    }

    friend bool operator==(const GTiling& a, const GTiling& b) { return a.n == b.n && a.tiles == b.tiles; }
    friend bool operator!=(const GTiling& a, const GTiling& b) { return !(a == b); }
    friend bool operator<(const GTiling& a, const GTiling& b) {
        return std::lexicographical_compare(a.tiles.begin(), a.tiles.end(), b.tiles.begin(), b.tiles.end(),
                                            tile_less);
    }
};

// ---------------------------------------------------------------------------
// The tiling graph
// ---------------------------------------------------------------------------

/// Vertices and edges occurring in the tiles, with incidence and terminal
/// flags. Derived purely from the tile list; for the degenerate one-element
/// ground the boundary edge is injected so the empty tiling has a graph.
struct TilingGraph {
    int n = 0;
    std::map<std::uint64_t, int> vertex_ids;      // bits -> id
    std::vector<Subset> vertices;                 // id -> subset
    std::map<Edge, std::vector<int>> edge_tiles;  // edge -> tile indices
    std::vector<bool> terminal;                   // by vertex id
    std::vector<std::vector<int>> leaving;        // labels, ascending
    std::vector<std::vector<int>> entering;       // labels, ascending
    std::set<Edge> black_edges;

    bool has_vertex(const Subset& v) const { return vertex_ids.count(v.bits) != 0; }
    bool is_terminal(const Subset& v) const {
        const auto it = vertex_ids.find(v.bits);
        return it != vertex_ids.end() && terminal[static_cast<std::size_t>(it->second)];
    }
    bool has_edge(const Edge& e) const { return edge_tiles.count(e) != 0; }
    bool edge_is_black(const Edge& e) const { return black_edges.count(e) != 0; }
};

inline TilingGraph build_graph(const GTiling& t) {
    TilingGraph g;
    g.n = t.n;
    auto intern = [&g](const Subset& v) {
        auto [it, fresh] = g.vertex_ids.try_emplace(v.bits, static_cast<int>(g.vertices.size()));
        if (fresh) {
            g.vertices.push_back(v);
            g.terminal.push_back(false);
            g.leaving.emplace_back();
            g.entering.emplace_back();
        }
        return it->second;
    };
    for (std::size_t k = 0; k < t.tiles.size(); ++k) {
        const Tile& tile = t.tiles[k];
        for (const auto& c : tile.corners()) intern(c);
        for (const auto& e : tile.edges()) {
            g.edge_tiles[e].push_back(static_cast<int>(k));
            if (tile.black) g.black_edges.insert(e);
        }
        if (tile.black) {
            g.terminal[static_cast<std::size_t>(intern(tile.bottom()))] = true;
            g.terminal[static_cast<std::size_t>(intern(tile.top()))] = true;
        }
    }
    if (t.n == 1 && t.tiles.empty()) {
        intern(Subset::empty_set(1));
        intern(Subset::full_set(1));
        g.edge_tiles[Edge{Subset::empty_set(1), 1}];
    }
    for (const auto& [e, _] : g.edge_tiles) {
        g.leaving[static_cast<std::size_t>(g.vertex_ids.at(e.tail.bits))].push_back(e.label);
        g.entering[static_cast<std::size_t>(g.vertex_ids.at(e.head().bits))].push_back(e.label);
    }
    for (auto& v : g.leaving) std::sort(v.begin(), v.end());
    for (auto& v : g.entering) std::sort(v.begin(), v.end());
    return g;
}

/// The 2n boundary edges of Z_n (left chain of prefixes, right chain of
/// suffixes). For n = 1 the two coincide.
inline std::vector<Edge> boundary_edges(int n) {
    std::vector<Edge> out;
    for (int h = 1; h <= n; ++h) out.push_back(Edge{Subset::interval(n, 1, h - 1), h});
    for (int h = 1; h <= n; ++h) {
        const Edge e{Subset::interval(n, h + 1, n), h};
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    }
    return out;
}

inline bool on_left_boundary(const Subset& v) {
    return v.is_empty() || v == Subset::interval(v.n, 1, v.max_element());
}

inline bool on_right_boundary(const Subset& v) {
    return v.is_empty() || v == Subset::interval(v.n, v.min_element(), v.n);
}

/// Which side of the directed edge the tile body lies on, in the plane:
/// +1 left, -1 right. Exact sign of the 2x2 determinant of the edge
/// generator against the into-tile generator.
inline int plane_side(const Tile& tile, const Edge& e, const Zonogon& z) {
    long long det = 0;
    if (e == tile.edge_bl() || e == tile.edge_lt()) {
        det = z.offset(tile.i) - z.offset(tile.j);  // cross(xi_i, xi_j)
    } else if (e == tile.edge_br() || e == tile.edge_rt()) {
        det = z.offset(tile.j) - z.offset(tile.i);
    } else {
        throw std::invalid_argument("edge is not a side of the tile");
    }
    return det > 0 ? 1 : -1;
}

/// Side on the glued disc: black squares carry the opposite orientation.
inline int disc_side(const Tile& tile, const Edge& e, const Zonogon& z) {
    const int s = plane_side(tile, e, z);
    return tile.black ? -s : s;
}

// ---------------------------------------------------------------------------
// Axiom verification
// ---------------------------------------------------------------------------

struct AxiomCheck {
    bool pass = true;
    std::string witness;

    void fail(const std::string& w) {
        if (pass) {
            pass = false;
            witness = w;
        }
    }
};

struct AxiomReport {
    AxiomCheck t1, t2, t3, t4;

    bool ok() const { return t1.pass && t2.pass && t3.pass && t4.pass; }

    std::string summary() const {
        auto one = [](const char* name, const AxiomCheck& c) {
            std::string s = std::string(name) + (c.pass ? ": pass" : ": FAIL");
            if (!c.pass) s += " (" + c.witness + ")";
            return s;
        };
        return one("T1", t1) + "; " + one("T2", t2) + "; " + one("T3", t3) + "; " + one("T4", t4);
    }
};

/// The square complex of a tiling: faces are tiles, glued along equal edges.
struct SurfaceComplex {
    std::vector<Subset> vertices;
    std::vector<Edge> edges;
    std::size_t faces = 0;
    bool connected = true;
    long long euler = 0;
    bool links_single = true;       // every vertex link is one arc or one circle
    std::string link_witness;
    bool boundary_is_cycle = false; // edges of face-degree one form one simple cycle
    std::vector<Edge> boundary;
};

namespace detail {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(std::size_t n) : p(n) {
        for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
    }
    int find(int a) {
        while (p[static_cast<std::size_t>(a)] != a) {
            p[static_cast<std::size_t>(a)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(a)])];
            a = p[static_cast<std::size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) { p[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace detail

inline SurfaceComplex build_surface(const GTiling& t, const TilingGraph& g) {
    SurfaceComplex s;
    s.vertices = g.vertices;
    s.faces = t.tiles.size();
    for (const auto& [e, tl] : g.edge_tiles) {
        if (!tl.empty()) s.edges.push_back(e);
    }
    s.euler = static_cast<long long>(s.vertices.size()) - static_cast<long long>(s.edges.size()) +
              static_cast<long long>(s.faces);
    if (t.n == 1 && t.tiles.empty()) {
        // Degenerate zonogon: the single boundary edge is the whole disc.
        s.euler = 1;
        s.connected = true;
        s.boundary_is_cycle = true;
        return s;
    }

    // Face connectivity across shared edges.
    if (!t.tiles.empty()) {
        detail::UnionFind uf(t.tiles.size());
        for (const auto& [e, tl] : g.edge_tiles) {
            for (std::size_t k = 1; k < tl.size(); ++k) uf.unite(tl[0], tl[k]);
        }
        const int root = uf.find(0);
        for (std::size_t k = 1; k < t.tiles.size(); ++k) {
            if (uf.find(static_cast<int>(k)) != root) {
                s.connected = false;
                break;
            }
        }
    }

    // Vertex links: per vertex, incident complex edges joined whenever a tile
    // corner pairs them; a disc needs one arc (boundary) or one circle.
    std::map<std::uint64_t, std::vector<std::pair<Edge, Edge>>> corner_pairs;
    for (const auto& tile : t.tiles) {
        corner_pairs[tile.bottom().bits].emplace_back(tile.edge_bl(), tile.edge_br());
        corner_pairs[tile.left().bits].emplace_back(tile.edge_bl(), tile.edge_lt());
        corner_pairs[tile.right().bits].emplace_back(tile.edge_br(), tile.edge_rt());
        corner_pairs[tile.top().bits].emplace_back(tile.edge_lt(), tile.edge_rt());
    }
    for (const auto& v : s.vertices) {
        std::vector<Edge> inc;
        for (const auto& [e, tl] : g.edge_tiles) {
            if (tl.empty()) continue;
            if (e.tail == v || e.head() == v) inc.push_back(e);
        }
        if (inc.empty()) continue;
        detail::UnionFind uf(inc.size());
        auto index_of = [&inc](const Edge& e) {
            return static_cast<int>(std::find(inc.begin(), inc.end(), e) - inc.begin());
        };
        std::map<std::size_t, int> degree;
        const auto it = corner_pairs.find(v.bits);
        if (it != corner_pairs.end()) {
            for (const auto& [a, b] : it->second) {
                uf.unite(index_of(a), index_of(b));
                ++degree[static_cast<std::size_t>(index_of(a))];
                ++degree[static_cast<std::size_t>(index_of(b))];
            }
        }
        const int root = uf.find(0);
        bool single = true;
        for (std::size_t k = 1; k < inc.size(); ++k) {
            if (uf.find(static_cast<int>(k)) != root) single = false;
        }
        for (const auto& [_, d] : degree) {
            if (d > 2) single = false;
        }
        if (!single && s.links_single) {
            s.links_single = false;
            s.link_witness = "vertex " + v.str() + " has a split or folded link";
        }
    }

    // Boundary: face-degree-one edges must form one simple cycle.
    for (const auto& [e, tl] : g.edge_tiles) {
        if (tl.size() == 1) s.boundary.push_back(e);
    }
    std::map<std::uint64_t, std::vector<std::size_t>> bnd_at;
    for (std::size_t k = 0; k < s.boundary.size(); ++k) {
        bnd_at[s.boundary[k].tail.bits].push_back(k);
        bnd_at[s.boundary[k].head().bits].push_back(k);
    }
    s.boundary_is_cycle = !s.boundary.empty();
    for (const auto& [_, ks] : bnd_at) {
        if (ks.size() != 2) s.boundary_is_cycle = false;
    }
    if (s.boundary_is_cycle) {
        // walk the cycle; must consume every boundary edge exactly once
        std::vector<bool> used(s.boundary.size(), false);
        std::size_t cur = 0;
        std::uint64_t at = s.boundary[0].head().bits;
        used[0] = true;
        std::size_t steps = 1;
        while (true) {
            std::size_t next = s.boundary.size();
            for (std::size_t k : bnd_at[at]) {
                if (!used[k] && k != cur) next = k;
            }
            if (next == s.boundary.size()) break;
            used[next] = true;
            ++steps;
            const auto& e = s.boundary[next];
            at = (e.tail.bits == at) ? e.head().bits : e.tail.bits;
            cur = next;
        }
        if (steps != s.boundary.size() || at != s.boundary[0].tail.bits) s.boundary_is_cycle = false;
    }
    return s;
}

namespace detail {

inline void check_duplicates(const std::vector<Tile>& tiles, AxiomCheck& c) {
    for (std::size_t a = 0; a + 1 < tiles.size(); ++a) {
        if (tiles[a].same_position(tiles[a + 1])) c.fail("duplicate " + tiles[a].str());
    }
}

/// T2 body: overlap rules on every shared edge.
inline void check_overlap_rules(const std::vector<Tile>& tiles, const TilingGraph& g, const Zonogon& zg,
                                AxiomCheck& c) {
    for (const auto& [e, tl] : g.edge_tiles) {
        if (tl.size() != 2) continue;
        const Tile& a = tiles[static_cast<std::size_t>(tl[0])];
        const Tile& b = tiles[static_cast<std::size_t>(tl[1])];
        const bool overlap = plane_side(a, e, zg) == plane_side(b, e, zg);
        if (a.black && b.black) {
            c.fail("black tiles share edge " + e.str());
        } else if (!a.black && !b.black) {
            if (overlap) c.fail("white tiles overlap across edge " + e.str());
        } else {
            if (!overlap) c.fail("black and white tile fail to overlap across edge " + e.str());
        }
    }
}

/// T3 body: black bottoms emit, black tops absorb, black extremes are private.
inline void check_black_extremes(const std::vector<Tile>& tiles, const TilingGraph& g, AxiomCheck& c) {
    for (std::size_t k = 0; k < tiles.size(); ++k) {
        const Tile& tile = tiles[k];
        if (!tile.black) continue;
        for (std::size_t m = 0; m < tiles.size(); ++m) {
            if (m == k) continue;
            const Tile& other = tiles[m];
            if (!other.black) continue;
            for (const auto& corner : other.corners()) {
                if (corner == tile.bottom() || corner == tile.top()) {
                    c.fail(tile.str() + " shares an extreme vertex with " + other.str());
                }
            }
        }
        const int bid = g.vertex_ids.at(tile.bottom().bits);
        if (!g.entering[static_cast<std::size_t>(bid)].empty()) {
            c.fail("edge enters the bottom of " + tile.str());
        }
        const int tid = g.vertex_ids.at(tile.top().bits);
        if (!g.leaving[static_cast<std::size_t>(tid)].empty()) {
            c.fail("edge leaves the top of " + tile.str());
        }
    }
}

}  // namespace detail

inline AxiomReport verify(const GTiling& t) {
    AxiomReport rep;
    const TilingGraph g = build_graph(t);
    const Zonogon zg = Zonogon::standard(t.n);
    const auto bnd = boundary_edges(t.n);

    // T1: duplicates, boundary incidence one, interior incidence two.
    detail::check_duplicates(t.tiles, rep.t1);
    for (const auto& e : bnd) {
        const auto it = g.edge_tiles.find(e);
        const std::size_t cnt = (it == g.edge_tiles.end()) ? 0 : it->second.size();
        const std::size_t want = (t.n == 1) ? 0 : 1;
        if (cnt != want) {
            rep.t1.fail("boundary edge " + e.str() + " lies in " + std::to_string(cnt) + " tiles");
        }
    }
    for (const auto& [e, tl] : g.edge_tiles) {
        if (std::find(bnd.begin(), bnd.end(), e) != bnd.end()) continue;
        if (tl.size() != 2) {
            rep.t1.fail("edge " + e.str() + " lies in " + std::to_string(tl.size()) + " tiles");
        }
    }

    detail::check_overlap_rules(t.tiles, g, zg, rep.t2);
    detail::check_black_extremes(t.tiles, g, rep.t3);

    // T4: disc test on the glued square complex.
    const SurfaceComplex s = build_surface(t, g);
    if (!s.connected) rep.t4.fail("surface is disconnected");
    if (s.euler != 1) rep.t4.fail("Euler characteristic " + std::to_string(s.euler) + " (want 1)");
    if (!s.links_single) rep.t4.fail(s.link_witness);
    if (!s.boundary_is_cycle) {
        rep.t4.fail("boundary of the surface is not a single simple cycle");
    } else if (t.n > 1) {
        auto cyc = s.boundary;
        std::sort(cyc.begin(), cyc.end());
        auto want = bnd;
        std::sort(want.begin(), want.end());
        if (cyc != want) rep.t4.fail("surface boundary differs from the zonogon boundary");
    }
    return rep;
}

inline void require_verified(const GTiling& t, const char* who) {
    const auto rep = verify(t);
    if (!rep.ok()) {
        throw std::invalid_argument(std::string(who) + ": tiling fails verification: " + rep.summary());
    }
}

// ---------------------------------------------------------------------------
// Spectrum
// ---------------------------------------------------------------------------

inline WsCollection spectrum_unchecked(const GTiling& t) {
    const TilingGraph g = build_graph(t);
    std::vector<Subset> sets;
    for (std::size_t k = 0; k < g.vertices.size(); ++k) {
        if (!g.terminal[k]) sets.push_back(g.vertices[k]);
    }
    return WsCollection::from(t.n, std::move(sets));
}

/// The subsets at nonterminal vertices. Input must verify.
inline WsCollection spectrum(const GTiling& t) {
    require_verified(t, "spectrum");
    return spectrum_unchecked(t);
}

// ---------------------------------------------------------------------------
// Local fans
// ---------------------------------------------------------------------------

enum class FullAngleClass { Zero, BoundaryWedge, FullTurn };

struct VertexFan {
    Subset v;
    bool terminal = false;
    std::vector<int> leaving;   // labels ascending
    std::vector<int> entering;  // labels descending
    int black_low = 0;          // r: leading black edges
    int black_high = 0;         // r': trailing black edges
    FullAngleClass rho = FullAngleClass::FullTurn;
    bool ok = true;
    std::string issue;
};

struct LocalFanReport {
    std::vector<VertexFan> fans;
    bool ok = true;
    std::string witness;
};

namespace detail {

inline bool claim_tile(const std::vector<Tile>& tiles, const Tile& want, std::vector<bool>& seen) {
    for (std::size_t k = 0; k < tiles.size(); ++k) {
        if (!seen[k] && tiles[k].same_position(want) && tiles[k].black == want.black) {
            seen[k] = true;
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// Checks the ordered edge/tile structure around every vertex: the black
/// edge flanks, the white wedges spanned by bottom/top tiles, the white and
/// black pairings at left/right corners, and the full-angle class. Input
/// must verify; structural mismatches are reported per vertex.
inline LocalFanReport local_fans(const GTiling& t) {
    require_verified(t, "local_fans");
    const TilingGraph g = build_graph(t);
    LocalFanReport rep;

    for (std::size_t vid = 0; vid < g.vertices.size(); ++vid) {
        const Subset v = g.vertices[vid];
        VertexFan fan;
        fan.v = v;
        fan.terminal = g.terminal[vid];
        fan.leaving = g.leaving[vid];
        fan.entering = g.entering[vid];
        std::sort(fan.entering.rbegin(), fan.entering.rend());
        auto fail = [&fan](const std::string& why) {
            if (fan.ok) {
                fan.ok = false;
                fan.issue = why;
            }
        };

        std::vector<bool> seen(t.tiles.size(), false);
        // tiles not at v are irrelevant; pre-mark them
        for (std::size_t k = 0; k < t.tiles.size(); ++k) {
            const auto cs = t.tiles[k].corners();
            if (std::find(cs.begin(), cs.end(), v) == cs.end()) seen[k] = true;
        }
        auto expect_tile = [&](const Tile& want) {
            if (!detail::claim_tile(t.tiles, want, seen)) fail("missing " + want.str() + " at " + v.str());
        };

        const bool lbd = on_left_boundary(v);
        const bool rbd = on_right_boundary(v);
        auto is_black_leave = [&](int q) { return g.edge_is_black(Edge{v, q}); };
        auto is_black_enter = [&](int q) { return g.edge_is_black(Edge{v.without(q), q}); };

        if (fan.terminal) {
            fan.rho = FullAngleClass::Zero;
            if (lbd || rbd) fail("terminal vertex on the zonogon boundary");
            // locate the unique black tile owning v as bottom or top
            const Tile* owner = nullptr;
            bool at_bottom = false;
            for (const auto& tile : t.tiles) {
                if (!tile.black) continue;
                if (tile.bottom() == v) owner = &tile, at_bottom = true;
                if (tile.top() == v) owner = &tile, at_bottom = false;
            }
            if (owner == nullptr) {
                fail("terminal vertex without a black owner");
            } else {
                const std::vector<int> labels = at_bottom ? fan.leaving : g.entering[vid];
                const std::vector<int>& wrong = at_bottom ? g.entering[vid] : g.leaving[vid];
                if (!wrong.empty()) fail("terminal vertex has edges on both sides");
                int blacks = 0;
                for (int q : labels) {
                    const bool bl = at_bottom ? is_black_leave(q) : is_black_enter(q);
                    if (bl) {
                        ++blacks;
                        if (q != owner->i && q != owner->j) fail("stray black edge at terminal vertex");
                    } else if (!(owner->i < q && q < owner->j)) {
                        fail("white edge outside the black cone at " + v.str());
                    }
                    // terminals never neighbour terminals
                    const Subset other = at_bottom ? v.with(q) : v.without(q);
                    if (g.is_terminal(other)) fail("terminal vertices joined by an edge");
                }
                if (blacks != 2) fail("terminal vertex with " + std::to_string(blacks) + " black edges");
                if (labels.size() < 3) fail("terminal vertex without a white edge");
                // white wedges tile the black cone exactly once
                for (std::size_t q = 0; q + 1 < labels.size(); ++q) {
                    const int a = labels[q], b = labels[q + 1];
                    const Subset base = at_bottom ? v : v.without(a).without(b);
                    expect_tile(Tile{base, a, b, false});
                }
                expect_tile(*owner);
            }
        } else if (v.is_empty() || v == Subset::full_set(t.n)) {
            fan.rho = FullAngleClass::BoundaryWedge;
            const bool at_bottom = v.is_empty();
            const std::vector<int> labels = at_bottom ? fan.leaving : g.entering[vid];
            const std::vector<int>& wrong = at_bottom ? g.entering[vid] : g.leaving[vid];
            if (!wrong.empty()) fail("extreme vertex has edges on both sides");
            for (int q : labels) {
                if (at_bottom ? is_black_leave(q) : is_black_enter(q)) fail("black edge at an extreme vertex");
            }
            for (std::size_t q = 0; q + 1 < labels.size(); ++q) {
                const int a = labels[q], b = labels[q + 1];
                if (at_bottom) {
                    expect_tile(Tile{v, a, b, false});
                } else {
                    expect_tile(Tile{v.without(a).without(b), std::min(a, b), std::max(a, b), false});
                }
            }
        } else {
            fan.rho = (lbd || rbd) ? FullAngleClass::BoundaryWedge : FullAngleClass::FullTurn;
            const auto& lv = fan.leaving;   // ascending
            const auto& en = fan.entering;  // descending
            const std::size_t p = lv.size(), pp = en.size();
            if (p == 0 || pp == 0) {
                fail("interior vertex missing leaving or entering edges");
                rep.fans.push_back(fan);
                continue;
            }
            std::size_t r = 0, r2 = 0;
            while (r < p && is_black_leave(lv[r])) ++r;
            while (r2 < p - r && is_black_leave(lv[p - 1 - r2])) ++r2;
            std::size_t er = 0, er2 = 0;
            while (er < pp && is_black_enter(en[er])) ++er;
            while (er2 < pp - er && is_black_enter(en[pp - 1 - er2])) ++er2;
            fan.black_low = static_cast<int>(r);
            fan.black_high = static_cast<int>(r2);
            if (r != er || r2 != er2) fail("black flank counts differ between leaving and entering fans");
            if (r + r2 >= std::min(p, pp)) fail("black flanks swallow the fan");
            if (lbd && r != 0) fail("black low flank on the left boundary");
            if (rbd && r2 != 0) fail("black high flank on the right boundary");
            for (std::size_t q = r; q + r2 < p; ++q) {
                if (is_black_leave(lv[q])) fail("black leaving edge inside the white run");
            }
            for (std::size_t q = er; q + er2 < pp; ++q) {
                if (is_black_enter(en[q])) fail("black entering edge inside the white run");
            }
            // white wedges at the bottom corner
            for (std::size_t q = r; q + r2 + 1 < p; ++q) {
                expect_tile(Tile{v, lv[q], lv[q + 1], false});
            }
            // white wedges at the top corner
            for (std::size_t q = er; q + er2 + 1 < pp; ++q) {
                const Subset base = v.without(en[q]).without(en[q + 1]);
                expect_tile(Tile{base, en[q + 1], en[q], false});
            }
            // pairings at the right corner: r+1 white tiles around r black ones
            if (!lbd) {
                for (std::size_t q = 0; q <= r; ++q) {
                    // white pair {e_{q+1}, e'_{r+1-q}} in 1-based terms
                    const int a = lv[q];
                    const int b = en[r - q];
                    if (a >= b) {
                        fail("right-corner white pairing out of order at " + v.str());
                        break;
                    }
                    expect_tile(Tile{v.without(b), a, b, false});
                }
                for (std::size_t q = 0; q < r; ++q) {
                    const int a = lv[q];
                    const int b = en[r - 1 - q];
                    if (a >= b) {
                        fail("right-corner black pairing out of order at " + v.str());
                        break;
                    }
                    expect_tile(Tile{v.without(b), a, b, true});
                }
            }
            // pairings at the left corner
            if (!rbd) {
                for (std::size_t q = 0; q <= r2; ++q) {
                    const int big = lv[p - 1 - q];
                    const int small = en[pp - 1 - (r2 - q)];
                    if (small >= big) {
                        fail("left-corner white pairing out of order at " + v.str());
                        break;
                    }
                    expect_tile(Tile{v.without(small), small, big, false});
                }
                for (std::size_t q = 0; q < r2; ++q) {
                    const int big = lv[p - 1 - q];
                    const int small = en[pp - 1 - (r2 - 1 - q)];
                    if (small >= big) {
                        fail("left-corner black pairing out of order at " + v.str());
                        break;
                    }
                    expect_tile(Tile{v.without(small), small, big, true});
                }
            }
        }

        if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
            fail("unaccounted tile in the fan at " + v.str());
        }
        if (!fan.ok) {
            rep.ok = false;
            if (rep.witness.empty()) rep.witness = fan.issue;
        }
        rep.fans.push_back(fan);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Strips
// ---------------------------------------------------------------------------

/// The dual path through all tiles carrying one label: an alternating
/// edge/tile sequence from the left boundary to the right one, with its two
/// vertex chains.
struct Strip {
    int label = 0;
    std::vector<int> tiles;        // indices into the tiling, in order
    std::vector<Edge> label_edges; // the strip-label edges e_0 .. e_r
    std::vector<Subset> right_vertices;  // tails of the label edges
    std::vector<Subset> left_vertices;   // heads of the label edges
    std::vector<Edge> right_edges;       // canonical edges along the right chain
    std::vector<Edge> left_edges;
    std::vector<bool> right_forward;     // traversal sense along the strip
    std::vector<bool> left_forward;
};

inline Strip strip_of(const GTiling& t, int label) {
    require_verified(t, "strip_of");
    if (label < 1 || label > t.n) throw std::out_of_range("strip label outside [1,n]");
    const TilingGraph g = build_graph(t);

    Strip s;
    s.label = label;
    Edge cur{Subset::interval(t.n, 1, label - 1), label};  // left boundary entry
    s.label_edges.push_back(cur);
    int prev_tile = -1;
    while (true) {
        const auto it = g.edge_tiles.find(cur);
        if (it == g.edge_tiles.end()) throw std::logic_error("strip walk left the graph");
        int next = -1;
        for (int k : it->second) {
            if (k != prev_tile) next = k;
        }
        if (next < 0) break;  // boundary edge reached from inside
        const Tile& tile = t.tiles[static_cast<std::size_t>(next)];
        s.tiles.push_back(next);
        const Edge a = tile.edge_bl(), b = tile.edge_rt(), c = tile.edge_br(), d = tile.edge_lt();
        Edge opposite;
        if (tile.i == label) {
            opposite = (cur == a) ? b : a;
        } else if (tile.j == label) {
            opposite = (cur == c) ? d : c;
        } else {
            throw std::logic_error("strip tile does not carry the strip label");
        }
        s.label_edges.push_back(opposite);
        prev_tile = next;
        cur = opposite;
    }
    for (const auto& e : s.label_edges) {
        s.right_vertices.push_back(e.tail);
        s.left_vertices.push_back(e.head());
    }
    for (std::size_t k = 0; k + 1 < s.label_edges.size(); ++k) {
        const Tile& tile = t.tiles[static_cast<std::size_t>(s.tiles[k])];
        const int other = (tile.i == label) ? tile.j : tile.i;
        const Subset from_r = s.right_vertices[k], to_r = s.right_vertices[k + 1];
        if (from_r.subset_of(to_r)) {
            s.right_edges.push_back(Edge{from_r, other});
            s.right_forward.push_back(true);
        } else {
            s.right_edges.push_back(Edge{to_r, other});
            s.right_forward.push_back(false);
        }
        const Subset from_l = s.left_vertices[k], to_l = s.left_vertices[k + 1];
        if (from_l.subset_of(to_l)) {
            s.left_edges.push_back(Edge{from_l, other});
            s.left_forward.push_back(true);
        } else {
            s.left_edges.push_back(Edge{to_l, other});
            s.left_forward.push_back(false);
        }
    }
    // strip must end on the right boundary
    const Edge exit{Subset::interval(t.n, label + 1, t.n), label};
    if (s.label_edges.back() != exit && !(t.n == 1)) {
        throw std::logic_error("strip did not terminate on the right boundary");
    }
    return s;
}

// ---------------------------------------------------------------------------
// Relabelings: mirror and reversal
// ---------------------------------------------------------------------------

inline Subset mirror_set(const Subset& x) {
    Subset out = Subset::empty_set(x.n);
    for (int e : x.elements()) out = out.with(x.n + 1 - e);
    return out;
}

/// Label reversal q -> n+1-q applied to every tile. An involution that
/// swaps the roles of the two expansion sides.
inline GTiling mirror(const GTiling& t) {
    std::vector<Tile> tiles;
    tiles.reserve(t.tiles.size());
    for (const auto& tile : t.tiles) {
        tiles.push_back(Tile{mirror_set(tile.base), t.n + 1 - tile.j, t.n + 1 - tile.i, tile.black});
    }
    return GTiling::make(t.n, std::move(tiles));
}

/// Point reflection: tau(X;i,j) -> tau([n]-X-i-j; i,j). Spectra map to
/// complements member-wise.
inline GTiling reverse(const GTiling& t) {
    std::vector<Tile> tiles;
    tiles.reserve(t.tiles.size());
    for (const auto& tile : t.tiles) {
        tiles.push_back(Tile{tile.top().complement(), tile.i, tile.j, tile.black});
    }
    return GTiling::make(t.n, std::move(tiles));
}

// ---------------------------------------------------------------------------
// Contraction
// ---------------------------------------------------------------------------

namespace detail {

inline GTiling contract_high(const GTiling& t) {
    // removes the n-strip; bases keep their bits, tiles above the strip drop n
    std::vector<Tile> tiles;
    for (const auto& tile : t.tiles) {
        if (tile.i == t.n || tile.j == t.n) continue;
        Subset base = tile.base.contains(t.n) ? tile.base.without(t.n) : tile.base;
        tiles.push_back(Tile{Subset{base.bits, t.n - 1}, tile.i, tile.j, tile.black});
    }
    return GTiling::make(t.n - 1, std::move(tiles));
}

}  // namespace detail

/// Removes the boundary-label strip (side must be 1 or n; interior labels
/// are rejected since their contraction can fail to be a disc). For side = 1
/// the surviving labels 2..n are renamed 1..n-1.
inline GTiling contract(const GTiling& t, int side) {
    require_verified(t, "contract");
    if (t.n < 2) throw std::invalid_argument("contract: ground too small");
    GTiling out = [&] {
        if (side == t.n) return detail::contract_high(t);
        if (side == 1) return mirror(detail::contract_high(mirror(t)));
        throw std::invalid_argument("contract: side must be 1 or n");
    }();
    const auto rep = verify(out);
    if (!rep.ok()) throw std::logic_error("contract: result fails verification: " + rep.summary());
    return out;
}

// ---------------------------------------------------------------------------
// Legal paths and expansion
// ---------------------------------------------------------------------------

enum class Side { One, N };

inline std::string side_str(Side s) { return s == Side::One ? "1" : "n"; }

/// A candidate expansion path in a host tiling over [m]: a vertex chain from
/// the bottom of the zonogon to the top. `side` fixes which new boundary
/// label the expansion will insert and, with it, the zigzag orientation.
struct LegalPath {
    Side side = Side::N;
    std::vector<Subset> vertices;

    friend bool operator==(const LegalPath& a, const LegalPath& b) {
        return a.side == b.side && a.vertices == b.vertices;
    }
};

inline LegalPath mirror_path(const LegalPath& p) {
    LegalPath out;
    out.side = (p.side == Side::N) ? Side::One : Side::N;
    out.vertices.reserve(p.vertices.size());
    for (const auto& v : p.vertices) out.vertices.push_back(mirror_set(v));
    return out;
}

/// Checks the path conditions: endpoints at the zonogon extremes, edges of
/// the host graph, simplicity, nonterminal vertices, no consecutive
/// backward steps, and the side-oriented turning rule. Throws if the
/// sequence is not even a path embedded in the graph.
inline bool is_legal(const GTiling& t, const LegalPath& p) {
    require_verified(t, "is_legal");
    const TilingGraph g = build_graph(t);
    if (p.vertices.size() < 2) throw std::invalid_argument("path needs at least two vertices");
    for (const auto& v : p.vertices) {
        if (v.n != t.n) throw std::invalid_argument("path vertex over a different ground");
        if (!g.has_vertex(v)) throw std::invalid_argument("path vertex " + v.str() + " not in the graph");
    }
    struct Step {
        int label;
        bool forward;
    };
    std::vector<Step> steps;
    for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) {
        const Subset a = p.vertices[k], b = p.vertices[k + 1];
        const Subset d = a ^ b;
        if (d.count() != 1 || !(a.subset_of(b) || b.subset_of(a))) {
            throw std::invalid_argument("consecutive path vertices do not differ by one element");
        }
        const bool fwd = a.subset_of(b);
        const Edge e = fwd ? Edge{a, d.min_element()} : Edge{b, d.min_element()};
        if (!g.has_edge(e)) throw std::invalid_argument("path edge " + e.str() + " not in the graph");
        steps.push_back(Step{d.min_element(), fwd});
    }
    if (!(p.vertices.front() == Subset::empty_set(t.n))) return false;
    if (!(p.vertices.back() == Subset::full_set(t.n))) return false;
    std::set<std::uint64_t> seen;
    for (const auto& v : p.vertices) {
        if (!seen.insert(v.bits).second) return false;  // not simple
        if (g.is_terminal(v)) return false;
    }
    for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
        const auto& a = steps[k];
        const auto& b = steps[k + 1];
        if (!a.forward && !b.forward) return false;
        if (p.side == Side::N) {
            if (a.forward && !b.forward && !(a.label > b.label)) return false;
            if (!a.forward && b.forward && !(a.label < b.label)) return false;
        } else {
            if (a.forward && !b.forward && !(a.label < b.label)) return false;
            if (!a.forward && b.forward && !(a.label > b.label)) return false;
        }
    }
    return true;
}

/// Depth-first enumeration of all legal paths, in a fixed deterministic
/// order. `keep` can prune vertices (used by the spectrum search).
template <typename Keep>
inline std::vector<LegalPath> legal_paths_filtered(const GTiling& t, Side side, Keep&& keep) {
    require_verified(t, "legal_paths");
    const TilingGraph g = build_graph(t);
    std::vector<LegalPath> out;
    const Subset start = Subset::empty_set(t.n), goal = Subset::full_set(t.n);
    if (!g.has_vertex(start) || g.is_terminal(start) || !keep(start)) return out;

    struct Move {
        Subset to;
        int label;
        bool forward;
    };
    std::vector<Subset> path{start};
    std::set<std::uint64_t> on_path{start.bits};

    auto moves_from = [&](const Subset& v) {
        std::vector<Move> ms;
        const int vid = g.vertex_ids.at(v.bits);
        for (int q : g.leaving[static_cast<std::size_t>(vid)]) ms.push_back(Move{v.with(q), q, true});
        for (int q : g.entering[static_cast<std::size_t>(vid)]) ms.push_back(Move{v.without(q), q, false});
        return ms;
    };

    auto turning_ok = [&](int prev_label, bool prev_fwd, int label, bool fwd) {
        if (!prev_fwd && !fwd) return false;
        if (side == Side::N) {
            if (prev_fwd && !fwd) return prev_label > label;
            if (!prev_fwd && fwd) return prev_label < label;
        } else {
            if (prev_fwd && !fwd) return prev_label < label;
            if (!prev_fwd && fwd) return prev_label > label;
        }
        return true;
    };

    auto dfs = [&](auto&& self, const Subset& v, int prev_label, bool prev_fwd) -> void {
        if (v == goal) {
            out.push_back(LegalPath{side, path});
            return;
        }
        for (const auto& m : moves_from(v)) {
            if (prev_label != 0 && !turning_ok(prev_label, prev_fwd, m.label, m.forward)) continue;
            if (on_path.count(m.to.bits)) continue;
            if (g.is_terminal(m.to)) continue;
            if (!keep(m.to)) continue;
            path.push_back(m.to);
            on_path.insert(m.to.bits);
            self(self, m.to, m.label, m.forward);
            on_path.erase(m.to.bits);
            path.pop_back();
        }
    };
    dfs(dfs, start, 0, true);
    return out;
}

inline std::vector<LegalPath> legal_paths(const GTiling& t, Side side) {
    return legal_paths_filtered(t, side, [](const Subset&) { return true; });
}

namespace detail {

/// Splits the host tiles along the path into the side kept as-is and the
/// side lifted by the new label, by cutting the face-adjacency of the disc
/// along the path edges.
inline void split_by_path(const GTiling& t, const LegalPath& p, std::vector<bool>& lift) {
    lift.assign(t.tiles.size(), false);
    if (t.tiles.empty()) return;
    const TilingGraph g = build_graph(t);
    const Zonogon zg = Zonogon::standard(t.n);

    std::set<Edge> cut;
    struct Traversal {
        Edge e;
        bool forward;
    };
    std::vector<Traversal> trav;
    for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) {
        const Subset a = p.vertices[k], b = p.vertices[k + 1];
        const bool fwd = a.subset_of(b);
        const Subset d = a ^ b;
        const Edge e = fwd ? Edge{a, d.min_element()} : Edge{b, d.min_element()};
        cut.insert(e);
        trav.push_back(Traversal{e, fwd});
    }

    detail::UnionFind uf(t.tiles.size());
    for (const auto& [e, tl] : g.edge_tiles) {
        if (cut.count(e)) continue;
        for (std::size_t k = 1; k < tl.size(); ++k) uf.unite(tl[0], tl[k]);
    }

    // -1 keep (left of the walk), +1 lift (right); 0 unknown
    std::vector<int> mark(t.tiles.size(), 0);
    for (const auto& tv : trav) {
        const auto it = g.edge_tiles.find(tv.e);
        if (it == g.edge_tiles.end()) continue;
        for (int k : it->second) {
            int s = disc_side(t.tiles[static_cast<std::size_t>(k)], tv.e, zg);
            if (!tv.forward) s = -s;
            const int root = uf.find(k);
            const int want = (s > 0) ? -1 : +1;
            if (mark[static_cast<std::size_t>(root)] != 0 && mark[static_cast<std::size_t>(root)] != want) {
                throw std::logic_error("path does not separate the disc consistently");
            }
            mark[static_cast<std::size_t>(root)] = want;
        }
    }
    for (std::size_t k = 0; k < t.tiles.size(); ++k) {
        const int m = mark[static_cast<std::size_t>(uf.find(static_cast<int>(k)))];
        if (m == 0) throw std::logic_error("tile component untouched by the path");
        lift[k] = (m > 0);
    }
}

inline GTiling expand_high(const GTiling& t, const LegalPath& p) {
    const int big = t.n + 1;
    std::vector<bool> lift;
    split_by_path(t, p, lift);
    std::vector<Tile> tiles;
    tiles.reserve(t.tiles.size() + p.vertices.size());
    for (std::size_t k = 0; k < t.tiles.size(); ++k) {
        const Tile& tile = t.tiles[k];
        Subset base{tile.base.bits, big};
        if (lift[k]) base = base.with(big);
        tiles.push_back(Tile{base, tile.i, tile.j, tile.black});
    }
    for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) {
        const Subset a = p.vertices[k], b = p.vertices[k + 1];
        const bool fwd = a.subset_of(b);
        const Subset tail = fwd ? a : b;
        const Subset d = a ^ b;
        tiles.push_back(Tile{Subset{tail.bits, big}, d.min_element(), big, !fwd});
    }
    return GTiling::make(big, std::move(tiles));
}

}  // namespace detail

/// Inserts a new boundary label along a legal path: tiles on the far side
/// of the path absorb the label, one new strip tile appears per path edge
/// (black exactly at the backward steps). The result is verified.
inline GTiling expand(const GTiling& t, const LegalPath& p) {
    if (!is_legal(t, p)) throw std::invalid_argument("expand: path is not legal");
    GTiling out = (p.side == Side::N) ? detail::expand_high(t, p)
                                      : mirror(detail::expand_high(mirror(t), mirror_path(p)));
    const auto rep = verify(out);
    if (!rep.ok()) throw std::logic_error("expand: result fails verification: " + rep.summary());
    return out;
}

/// Recovers the expansion path of the high-side strip: the right chain of
/// the strip, reversed, read inside the contraction.
inline LegalPath contraction_path(const GTiling& t) {
    const Strip q = strip_of(t, t.n);
    LegalPath p;
    p.side = Side::N;
    for (auto it = q.right_vertices.rbegin(); it != q.right_vertices.rend(); ++it) {
        p.vertices.push_back(Subset{it->bits, t.n - 1});
    }
    return p;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration
// ---------------------------------------------------------------------------

/// All tilings of Z_n, by expanding every legal path of every tiling of
/// Z_{n-1}. Deterministic order; every output verifies.
inline std::vector<GTiling> enumerate_gtilings(int n, bool force = false) {
    check_ground(n);
    if (n > 5 && !force) throw std::invalid_argument("enumerate_gtilings: n > 5 needs force=true");
    if (n == 1) return {GTiling::make(1, {})};
    std::vector<GTiling> out;
    for (const auto& host : enumerate_gtilings(n - 1, force)) {
        for (const auto& p : legal_paths(host, Side::N)) {
            out.push_back(expand(host, p));
        }
    }
    std::sort(out.begin(), out.end());
    for (std::size_t k = 0; k + 1 < out.size(); ++k) {
        if (out[k] == out[k + 1]) throw std::logic_error("enumerate_gtilings produced a duplicate");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Principal forests
// ---------------------------------------------------------------------------

/// The white edges between two consecutive levels form a forest: one
/// principal tree holding every fully white edge, and a star at each
/// terminal vertex of that height range.
struct PrincipalForest {
    int level = 0;
    std::vector<std::vector<Edge>> components;
    int principal = -1;
    std::vector<Subset> critical;  // shared vertices with the next principal tree
    bool forest_ok = true;
    bool principal_ok = true;
    bool stars_ok = true;
    bool order_ok = true;
    std::string issue;

    bool ok() const { return forest_ok && principal_ok && stars_ok && order_ok; }
};

namespace detail {

inline std::vector<std::vector<Edge>> white_level_components(const TilingGraph& g, int h) {
    std::vector<Edge> edges;
    for (const auto& [e, tl] : g.edge_tiles) {
        if (tl.empty() && g.n != 1) continue;  // n = 1 keeps its degenerate boundary edge
        if (e.tail.count() != h - 1) continue;
        if (g.edge_is_black(e)) continue;
        edges.push_back(e);
    }
    std::map<std::uint64_t, int> slot;
    auto sid = [&slot](const Subset& v) {
        return slot.try_emplace(v.bits, static_cast<int>(slot.size())).first->second;
    };
    std::vector<std::pair<int, int>> ends;
    ends.reserve(edges.size());
    for (const auto& e : edges) ends.emplace_back(sid(e.tail), sid(e.head()));
    UnionFind vf(slot.size());
    for (const auto& [a, b] : ends) vf.unite(a, b);
    std::map<int, std::vector<Edge>> by_root;
    for (std::size_t k = 0; k < edges.size(); ++k) by_root[vf.find(ends[k].first)].push_back(edges[k]);
    std::vector<std::vector<Edge>> out;
    for (auto& [root, es] : by_root) {
        (void)root;
        std::sort(es.begin(), es.end());
        out.push_back(std::move(es));
    }
    return out;
}

inline std::set<std::uint64_t> component_vertices(const std::vector<Edge>& es) {
    std::set<std::uint64_t> vs;
    for (const auto& e : es) {
        vs.insert(e.tail.bits);
        vs.insert(e.head().bits);
    }
    return vs;
}

inline int principal_component(const std::vector<std::vector<Edge>>& comps, int n, int h) {
    const Edge lbd{Subset::interval(n, 1, h - 1), h};
    for (std::size_t c = 0; c < comps.size(); ++c) {
        if (std::find(comps[c].begin(), comps[c].end(), lbd) != comps[c].end()) return static_cast<int>(c);
    }
    return -1;
}

}  // namespace detail

inline PrincipalForest principal_forest(const GTiling& t, int h) {
    require_verified(t, "principal_forest");
    if (h < 1 || h > t.n) throw std::out_of_range("principal_forest: level outside [1,n]");
    const TilingGraph g = build_graph(t);
    PrincipalForest f;
    f.level = h;
    f.components = detail::white_level_components(g, h);
    auto fail = [&f](bool& flag, const std::string& why) {
        flag = false;
        if (f.issue.empty()) f.issue = why;
    };

    for (const auto& comp : f.components) {
        if (detail::component_vertices(comp).size() != comp.size() + 1) {
            fail(f.forest_ok, "white level component contains a cycle");
        }
    }
    f.principal = detail::principal_component(f.components, t.n, h);
    if (f.principal < 0) {
        fail(f.principal_ok, "no component holds the left boundary edge of the level");
    } else {
        const auto& k = f.components[static_cast<std::size_t>(f.principal)];
        auto fully_white = [&g](const Edge& e) {
            return !g.is_terminal(e.tail) && !g.is_terminal(e.head());
        };
        for (const auto& e : k) {
            if (!fully_white(e)) fail(f.principal_ok, "semi-white edge inside the principal tree");
        }
        for (std::size_t c = 0; c < f.components.size(); ++c) {
            if (static_cast<int>(c) == f.principal) continue;
            const auto& comp = f.components[c];
            for (const auto& e : comp) {
                if (fully_white(e)) fail(f.principal_ok, "fully white edge outside the principal tree");
            }
            // star shape around a unique terminal vertex
            std::vector<Subset> terms;
            for (auto bits : detail::component_vertices(comp)) {
                const Subset v{bits, t.n};
                if (g.is_terminal(v)) terms.push_back(v);
            }
            if (terms.size() != 1) {
                fail(f.stars_ok, "non-principal component without a unique terminal centre");
                continue;
            }
            for (const auto& e : comp) {
                if (!(e.tail == terms[0] || e.head() == terms[0])) {
                    fail(f.stars_ok, "non-principal component edge misses its terminal centre");
                }
            }
        }
        // planar order: the principal tree's edges admit a left-to-right order
        const Zonogon zg = Zonogon::standard(t.n);
        for (std::size_t a = 0; a < k.size(); ++a) {
            for (std::size_t b = 0; b < k.size(); ++b) {
                const long long ta = zg.offset_sum(k[a].tail), tb = zg.offset_sum(k[b].tail);
                const long long ha = zg.offset_sum(k[a].head()), hb = zg.offset_sum(k[b].head());
                if (ta < tb && ha > hb) fail(f.order_ok, "principal tree edges cross");
            }
        }
        // shared vertices with the next level's principal tree
        if (h < t.n) {
            const auto next_comps = detail::white_level_components(g, h + 1);
            const int np = detail::principal_component(next_comps, t.n, h + 1);
            if (np >= 0) {
                const auto mine = detail::component_vertices(k);
                const auto theirs = detail::component_vertices(next_comps[static_cast<std::size_t>(np)]);
                for (auto bits : mine) {
                    if (theirs.count(bits)) f.critical.push_back(Subset{bits, t.n});
                }
                std::sort(f.critical.begin(), f.critical.end(), CanonicalLess{});
            }
        }
    }
    return f;
}

// ---------------------------------------------------------------------------
// Edge and cycle laws
// ---------------------------------------------------------------------------

struct EdgeRuleReport {
    bool ok = true;
    std::string witness;

    void fail(const std::string& w) {
        if (ok) {
            ok = false;
            witness = w;
        }
    }
};

/// (i) nonterminal vertices one element apart are joined by an edge;
/// (ii) every 4-cycle on nonterminal vertices bounds a tile of the tiling;
/// also rechecks per-label gradedness over a fundamental cycle basis.
inline EdgeRuleReport edge_existence_checks(const GTiling& t) {
    require_verified(t, "edge_existence_checks");
    const TilingGraph g = build_graph(t);
    EdgeRuleReport rep;

    for (std::size_t a = 0; a < g.vertices.size(); ++a) {
        if (g.terminal[a]) continue;
        const Subset x = g.vertices[a];
        for (int q = 1; q <= t.n; ++q) {
            if (x.contains(q)) continue;
            const Subset y = x.with(q);
            if (!g.has_vertex(y) || g.is_terminal(y)) continue;
            if (!g.has_edge(Edge{x, q})) {
                rep.fail("nonterminal vertices " + x.str() + "," + y.str() + " lack their edge");
            }
        }
    }

    for (std::size_t a = 0; a < g.vertices.size(); ++a) {
        if (g.terminal[a]) continue;
        const Subset x = g.vertices[a];
        for (int i = 1; i <= t.n; ++i) {
            if (x.contains(i)) continue;
            for (int j = i + 1; j <= t.n; ++j) {
                if (x.contains(j)) continue;
                const Subset xi = x.with(i), xj = x.with(j), xij = x.with(i).with(j);
                auto alive = [&](const Subset& v) { return g.has_vertex(v) && !g.is_terminal(v); };
                if (!alive(xi) || !alive(xj) || !alive(xij)) continue;
                if (g.has_edge(Edge{x, i}) && g.has_edge(Edge{x, j}) && g.has_edge(Edge{xi, j}) &&
                    g.has_edge(Edge{xj, i})) {
                    const bool present = std::any_of(t.tiles.begin(), t.tiles.end(), [&](const Tile& tl) {
                        return tl.base == x && tl.i == i && tl.j == j;
                    });
                    if (!present) {
                        rep.fail("4-cycle at " + x.str() + " with labels " + std::to_string(i) + "," +
                                 std::to_string(j) + " bounds no tile");
                    }
                }
            }
        }
    }

    // gradedness: per-label balance around every fundamental cycle of a
    // spanning tree
    if (!g.vertices.empty()) {
        std::map<std::uint64_t, std::uint64_t> parent;
        std::set<std::uint64_t> seen{g.vertices[0].bits};
        std::set<Edge> tree;
        std::vector<std::uint64_t> stack{g.vertices[0].bits};
        while (!stack.empty()) {
            const std::uint64_t at = stack.back();
            stack.pop_back();
            const Subset v{at, t.n};
            const int vid = g.vertex_ids.at(at);
            auto try_go = [&](const Subset& to, const Edge& via) {
                if (seen.insert(to.bits).second) {
                    parent[to.bits] = at;
                    tree.insert(via);
                    stack.push_back(to.bits);
                }
            };
            for (int q : g.leaving[static_cast<std::size_t>(vid)]) try_go(v.with(q), Edge{v, q});
            for (int q : g.entering[static_cast<std::size_t>(vid)]) try_go(v.without(q), Edge{v.without(q), q});
        }
        auto root_chain = [&](std::uint64_t from) {
            std::vector<std::uint64_t> chain{from};
            while (parent.count(chain.back())) chain.push_back(parent.at(chain.back()));
            return chain;
        };
        for (const auto& [e, tl] : g.edge_tiles) {
            if (tl.empty() || tree.count(e)) continue;
            // closed walk: head -> root -> tail -> head
            auto up = root_chain(e.head().bits);
            auto down = root_chain(e.tail.bits);
            std::vector<std::uint64_t> walk = up;
            walk.insert(walk.end(), down.rbegin(), down.rend());
            walk.push_back(e.head().bits);
            std::map<int, int> balance;
            bool broken = false;
            for (std::size_t k = 0; k + 1 < walk.size(); ++k) {
                if (walk[k] == walk[k + 1]) continue;  // root-to-root junction
                const Subset a{walk[k], t.n}, b{walk[k + 1], t.n};
                const Subset d = a ^ b;
                if (d.count() != 1) {
                    broken = true;
                    break;
                }
                balance[d.min_element()] += a.subset_of(b) ? 1 : -1;
            }
            if (broken) continue;
            for (const auto& [lab, bal] : balance) {
                if (bal != 0) {
                    rep.fail("label " + std::to_string(lab) + " unbalanced on the cycle through " + e.str());
                }
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Reconstruction from a spectrum
// ---------------------------------------------------------------------------

/// The unique tiling whose spectrum is the given largest collection,
/// rebuilt by recursing on the high-label contraction spectrum and
/// searching the legal paths of the smaller tiling.
inline GTiling tiling_from_spectrum(const WsCollection& c, bool force = false) {
    if (c.n > 7 && !force) throw std::invalid_argument("tiling_from_spectrum: n > 7 needs force=true");
    if (c.size() != largest_size(c.n) || !validate(c)) {
        throw std::invalid_argument("tiling_from_spectrum: input is not a largest ws-collection");
    }
    if (c.n == 1) return GTiling::make(1, {});

    // contraction spectrum over [n-1]
    std::vector<Subset> low;
    for (const auto& x : c.members) {
        low.push_back(Subset{x.without(c.n).bits & Subset::mask(c.n - 1), c.n - 1});
        if (!x.contains(c.n)) low.push_back(Subset{x.bits, c.n - 1});
    }
    const WsCollection down = WsCollection::from(c.n - 1, std::move(low));
    const GTiling host = tiling_from_spectrum(down, force);

    // a path vertex or its lift must survive in the target spectrum
    std::set<std::uint64_t> bits;
    for (const auto& x : c.members) bits.insert(x.bits);
    const std::uint64_t high = std::uint64_t{1} << (c.n - 1);
    auto keep = [&](const Subset& v) { return bits.count(v.bits) || bits.count(v.bits | high); };

    for (const auto& p : legal_paths_filtered(host, Side::N, keep)) {
        GTiling cand = expand(host, p);
        if (spectrum_unchecked(cand) == c) return cand;
    }
    throw std::invalid_argument("tiling_from_spectrum: no tiling realizes the given collection");
}

}  // namespace zw
