#pragma once

// Permutation paths on the zonogon, the region between two of them, pure
// tilings of that region built by stripping, and the five-way equivalence
// tying the ideal condition, the weak Bruhat relation, pure and generalized
// region tilings, and weak separation of the ideals.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zonoweave/auxgraph.hpp"
#include "zonoweave/tiling.hpp"

namespace zw {

/// The monotone vertex chain of a permutation's ideals; edge i carries the
/// label moved into the ideal at step i.
struct IdealPath {
    Permutation w;
    std::vector<Subset> vertices;  // ideals 0..n
    std::vector<int> labels;       // labels 1..n, labels[i-1] = w^{-1}(i)

    Edge edge(int i) const {  // i in 1..n
        return Edge{vertices[static_cast<std::size_t>(i - 1)], labels[static_cast<std::size_t>(i - 1)]};
    }
};

inline IdealPath path_of(const Permutation& w) {
    IdealPath p;
    p.w = w;
    p.vertices = ideals(w);
    const Permutation winv = w.inverse();
    for (int i = 1; i <= w.n(); ++i) p.labels.push_back(winv(i));
    return p;
}

/// True when the right path stays weakly right of the left one, level by
/// level, in exact offset sums.
inline bool right_of(const Permutation& wp, const Permutation& w) {
    if (wp.n() != w.n()) throw std::invalid_argument("mismatched permutation sizes");
    const Zonogon z = Zonogon::standard(w.n());
    for (int i = 0; i <= w.n(); ++i) {
        if (z.offset_sum(ideal(w, i)) < z.offset_sum(ideal(wp, i))) return false;
    }
    return true;
}

struct Region {
    IdealPath left, right;
};

inline Region make_region(const Permutation& wp, const Permutation& w) {
    if (!right_of(wp, w)) {
        throw std::invalid_argument("region boundary paths are not ordered left-right");
    }
    return Region{path_of(wp), path_of(w)};
}

/// Tiles filling the region between the two boundary paths, subject to the
/// boundary-adjusted axioms.
struct RegionTiling {
    Region region;
    std::vector<Tile> tiles;  // canonical order

    int n() const { return region.left.w.n(); }

    friend bool operator==(const RegionTiling& a, const RegionTiling& b) {
        return a.region.left.w == b.region.left.w && a.region.right.w == b.region.right.w &&
               a.tiles == b.tiles;
    }
};

inline RegionTiling make_region_tiling(const Permutation& wp, const Permutation& w,
                                       std::vector<Tile> tiles) {
    RegionTiling rt{make_region(wp, w), std::move(tiles)};
    const GTiling shape = GTiling::make(w.n(), rt.tiles);  // structural checks + canonical order
    rt.tiles = shape.tiles;
    return rt;
}

// ---------------------------------------------------------------------------
// Region verification
// ---------------------------------------------------------------------------

struct RegionAxiomReport {
    AxiomCheck t1, t2, t3, t4;
    AxiomCheck boundary;  // boundary vertices all nonterminal

    bool ok() const { return t1.pass && t2.pass && t3.pass && t4.pass && boundary.pass; }

    std::string summary() const {
        auto one = [](const char* name, const AxiomCheck& c) {
            std::string s = std::string(name) + (c.pass ? ": pass" : ": FAIL");
            if (!c.pass) s += " (" + c.witness + ")";
            return s;
        };
        return one("T1'", t1) + "; " + one("T2", t2) + "; " + one("T3", t3) + "; " + one("T4'", t4) +
               "; " + one("boundary", boundary);
    }
};

namespace detail {

inline std::vector<Edge> path_edges(const IdealPath& p) {
    std::vector<Edge> out;
    for (int i = 1; i <= p.w.n(); ++i) out.push_back(p.edge(i));
    return out;
}

}  // namespace detail

inline RegionAxiomReport verify_region(const RegionTiling& rt) {
    RegionAxiomReport rep;
    const int n = rt.n();
    const GTiling shape{n, rt.tiles};
    const TilingGraph g = build_graph(shape);
    const Zonogon zg = Zonogon::standard(n);

    const auto le = detail::path_edges(rt.region.left);
    const auto re = detail::path_edges(rt.region.right);
    std::vector<Edge> shared, fringe;
    for (const auto& e : le) {
        if (std::find(re.begin(), re.end(), e) != re.end()) shared.push_back(e);
        else fringe.push_back(e);
    }
    for (const auto& e : re) {
        if (std::find(le.begin(), le.end(), e) == le.end()) fringe.push_back(e);
    }

    // T1': one tile per non-shared boundary edge, none on shared edges,
    // two on everything else; all tiles distinct.
    detail::check_duplicates(rt.tiles, rep.t1);
    for (const auto& e : fringe) {
        const auto it = g.edge_tiles.find(e);
        const std::size_t cnt = (it == g.edge_tiles.end()) ? 0 : it->second.size();
        if (cnt != 1) rep.t1.fail("region boundary edge " + e.str() + " lies in " + std::to_string(cnt) + " tiles");
    }
    for (const auto& e : shared) {
        const auto it = g.edge_tiles.find(e);
        if (it != g.edge_tiles.end() && !it->second.empty()) {
            rep.t1.fail("shared boundary edge " + e.str() + " lies in a tile");
        }
    }
    for (const auto& [e, tl] : g.edge_tiles) {
        if (tl.empty()) continue;
        if (std::find(le.begin(), le.end(), e) != le.end()) continue;
        if (std::find(re.begin(), re.end(), e) != re.end()) continue;
        if (tl.size() != 2) {
            rep.t1.fail("edge " + e.str() + " lies in " + std::to_string(tl.size()) + " tiles");
        }
    }

    detail::check_overlap_rules(rt.tiles, g, zg, rep.t2);
    detail::check_black_extremes(rt.tiles, g, rep.t3);

    // T4': tiles plus the shared boundary edges form a simply connected set:
    // connected with Euler characteristic one, and the signed tile areas
    // fill the region exactly.
    {
        std::set<std::uint64_t> verts;
        std::set<Edge> edges;
        for (const auto& tile : rt.tiles) {
            for (const auto& c : tile.corners()) verts.insert(c.bits);
            for (const auto& e : tile.edges()) edges.insert(e);
        }
        for (const auto& e : shared) {
            verts.insert(e.tail.bits);
            verts.insert(e.head().bits);
            edges.insert(e);
        }
        const long long euler = static_cast<long long>(verts.size()) - static_cast<long long>(edges.size()) +
                                static_cast<long long>(rt.tiles.size());
        if (euler != 1 && !(verts.empty() && rt.tiles.empty())) {
            rep.t4.fail("Euler characteristic " + std::to_string(euler) + " (want 1)");
        }
        // connectivity over the 1-skeleton
        if (!verts.empty()) {
            std::map<std::uint64_t, int> id;
            for (auto b : verts) id.emplace(b, static_cast<int>(id.size()));
            detail::UnionFind uf(verts.size());
            for (const auto& e : edges) uf.unite(id.at(e.tail.bits), id.at(e.head().bits));
            const int root = uf.find(0);
            for (const auto& [b, k] : id) {
                (void)b;
                if (uf.find(k) != root) rep.t4.fail("surface with the shared boundary is disconnected");
            }
        }
        // white minus black parallelogram areas must equal the region area
        long long covered = 0;
        for (const auto& tile : rt.tiles) {
            const long long area = zg.offset(tile.j) - zg.offset(tile.i);
            covered += tile.black ? -area : area;
        }
        long long shoelace = 0;  // left path up, right path down
        auto x = [&zg](const Subset& v) { return zg.offset_sum(v); };
        auto y = [](const Subset& v) { return static_cast<long long>(v.count()); };
        const auto& lv = rt.region.left.vertices;
        const auto& rv = rt.region.right.vertices;
        std::vector<Subset> poly(lv.begin(), lv.end());
        for (auto it = rv.rbegin(); it != rv.rend(); ++it) poly.push_back(*it);
        for (std::size_t k = 0; k + 1 < poly.size(); ++k) {
            shoelace += x(poly[k]) * y(poly[k + 1]) - x(poly[k + 1]) * y(poly[k]);
        }
        const long long doubled = shoelace < 0 ? -shoelace : shoelace;
        if (doubled != 2 * covered) {
            rep.t4.fail("tiles cover " + std::to_string(covered) + " but the region has doubled area " +
                        std::to_string(doubled));
        }
    }

    // every boundary-path vertex is nonterminal
    for (const auto* path : {&rt.region.left, &rt.region.right}) {
        for (const auto& v : path->vertices) {
            if (g.is_terminal(v)) rep.boundary.fail("terminal vertex " + v.str() + " on the boundary");
        }
    }
    return rep;
}

inline void require_region_verified(const RegionTiling& rt, const char* who) {
    const auto rep = verify_region(rt);
    if (!rep.ok()) {
        throw std::invalid_argument(std::string(who) + ": region tiling fails verification: " +
                                    rep.summary());
    }
}

/// Nonterminal vertices: tile corners and boundary-path vertices.
inline WsCollection region_spectrum(const RegionTiling& rt) {
    const GTiling shape{rt.n(), rt.tiles};
    const TilingGraph g = build_graph(shape);
    std::set<std::uint64_t> bits;
    for (std::size_t k = 0; k < g.vertices.size(); ++k) {
        if (!g.terminal[k]) bits.insert(g.vertices[k].bits);
    }
    for (const auto* path : {&rt.region.left, &rt.region.right}) {
        for (const auto& v : path->vertices) {
            if (!g.is_terminal(v)) bits.insert(v.bits);
        }
    }
    std::vector<Subset> sets;
    for (auto b : bits) sets.push_back(Subset{b, rt.n()});
    return WsCollection::from(rt.n(), std::move(sets));
}

// ---------------------------------------------------------------------------
// Stripping constructions
// ---------------------------------------------------------------------------

namespace detail {

/// Labels along a vertex chain of nested sets.
inline std::vector<int> chain_labels(const std::vector<Subset>& chain) {
    std::vector<int> out;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        out.push_back((chain[k + 1] - chain[k]).min_element());
    }
    return out;
}

/// One stripping engine. Walks the right path towards the left one, laying a
/// full strip of tiles per round. Returns nothing if the input pair does not
/// support the construction.
inline std::optional<std::vector<Tile>> strip_below_tiles(const Permutation& wp, const Permutation& w) {
    const int n = w.n();
    const auto left = ideals(wp);
    std::vector<Subset> cur = ideals(w);
    const auto left_labels = chain_labels(left);
    std::vector<Tile> tiles;
    const int budget = n * (n - 1) / 2 + 1;
    for (int round = 0; round <= budget; ++round) {
        auto cur_labels = chain_labels(cur);
        int idx = 0;
        for (int i = 1; i <= n; ++i) {
            if (left_labels[static_cast<std::size_t>(i - 1)] != cur_labels[static_cast<std::size_t>(i - 1)]) {
                idx = i;
                break;
            }
        }
        if (idx == 0) return tiles;  // paths agree: done
        const int c = left_labels[static_cast<std::size_t>(idx - 1)];
        int k = 0;
        for (int i = idx; i <= n; ++i) {
            if (cur_labels[static_cast<std::size_t>(i - 1)] == c) k = i;
        }
        if (k <= idx) return std::nullopt;
        for (int j = idx; j < k; ++j) {
            const int cj = cur_labels[static_cast<std::size_t>(j - 1)];
            if (cj <= c) return std::nullopt;  // the ideal condition fails here
            tiles.push_back(Tile{cur[static_cast<std::size_t>(j - 1)], c, cj, false});
        }
        for (int j = k; j >= idx; --j) {
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)].with(c);
        }
    }
    return std::nullopt;  // failed to converge
}

}  // namespace detail

/// Guarded stripping: runs the construction without preconditions and
/// verifies the result; empty on any failure.
inline std::optional<RegionTiling> strip_from_below_try(const Permutation& wp, const Permutation& w) {
    if (wp.n() != w.n()) throw std::invalid_argument("mismatched permutation sizes");
    if (!right_of(wp, w)) return std::nullopt;
    auto tiles = detail::strip_below_tiles(wp, w);
    if (!tiles) return std::nullopt;
    for (const auto& tile : *tiles) {
        if (tile.black) return std::nullopt;
    }
    RegionTiling rt = make_region_tiling(wp, w, std::move(*tiles));
    if (!verify_region(rt).ok()) return std::nullopt;
    return rt;
}

/// The pure tiling of the region, laid strip by strip along the right path
/// from below. Requires the weak Bruhat relation; equal permutations give
/// the collapsed region.
inline RegionTiling strip_from_below(const Permutation& wp, const Permutation& w) {
    if (wp.n() != w.n()) throw std::invalid_argument("mismatched permutation sizes");
    if (!weak_bruhat_leq(wp, w)) {
        throw std::invalid_argument("strip_from_below: permutations are not Bruhat ordered");
    }
    if (wp == w) return make_region_tiling(wp, w, {});
    auto tiles = detail::strip_below_tiles(wp, w);
    if (!tiles) throw std::logic_error("strip_from_below: construction failed on a Bruhat pair");
    RegionTiling rt = make_region_tiling(wp, w, std::move(*tiles));
    if (static_cast<int>(rt.tiles.size()) != length(w) - length(wp)) {
        throw std::logic_error("strip_from_below: tile count differs from the length gap");
    }
    require_region_verified(rt, "strip_from_below");
    return rt;
}

/// The standard tiling of the region: stripping from above, realized by
/// point-reflecting the from-below construction of the reversed pair.
inline RegionTiling strip_from_above(const Permutation& wp, const Permutation& w) {
    if (wp.n() != w.n()) throw std::invalid_argument("mismatched permutation sizes");
    if (!weak_bruhat_leq(wp, w)) {
        throw std::invalid_argument("strip_from_above: permutations are not Bruhat ordered");
    }
    const int n = w.n();
    const Permutation w0 = Permutation::longest(n);
    const RegionTiling low = strip_from_below(w0 * w, w0 * wp);
    std::vector<Tile> tiles;
    tiles.reserve(low.tiles.size());
    for (const auto& tile : low.tiles) {
        tiles.push_back(Tile{tile.top().complement(), tile.i, tile.j, tile.black});
    }
    RegionTiling rt = make_region_tiling(wp, w, std::move(tiles));
    require_region_verified(rt, "strip_from_above");
    return rt;
}

/// Extends a region tiling to a full tiling of the zonogon by pure paddings
/// below the left path and above the right one.
inline GTiling pad_to_zonogon(const RegionTiling& rt) {
    require_region_verified(rt, "pad_to_zonogon");
    const int n = rt.n();
    std::vector<Tile> tiles = rt.tiles;
    const auto lo = strip_from_below(Permutation::identity(n), rt.region.left.w);
    const auto hi = strip_from_above(rt.region.right.w, Permutation::longest(n));
    tiles.insert(tiles.end(), lo.tiles.begin(), lo.tiles.end());
    tiles.insert(tiles.end(), hi.tiles.begin(), hi.tiles.end());
    GTiling out = GTiling::make(n, std::move(tiles));
    const auto rep = verify(out);
    if (!rep.ok()) throw std::logic_error("pad_to_zonogon: padding collision: " + rep.summary());
    return out;
}

// ---------------------------------------------------------------------------
// Region extraction from a full tiling
// ---------------------------------------------------------------------------

/// Carves the tiles lying between the two boundary paths out of a verified
/// full tiling, when both paths embed in its graph with nonterminal
/// vertices. Empty when the extraction is not a region tiling.
inline std::optional<RegionTiling> extract_region(const GTiling& t, const Permutation& wp,
                                                  const Permutation& w) {
    if (!right_of(wp, w)) return std::nullopt;
    const TilingGraph g = build_graph(t);
    const Zonogon zg = Zonogon::standard(t.n);
    const IdealPath pl = path_of(wp), pr = path_of(w);
    for (const auto* p : {&pl, &pr}) {
        for (const auto& v : p->vertices) {
            if (!g.has_vertex(v) || g.is_terminal(v)) return std::nullopt;
        }
        for (int i = 1; i <= t.n; ++i) {
            if (!g.has_edge(p->edge(i))) return std::nullopt;
        }
    }
    const auto le = detail::path_edges(pl);
    const auto re = detail::path_edges(pr);
    std::set<Edge> cut(le.begin(), le.end());
    cut.insert(re.begin(), re.end());

    detail::UnionFind uf(t.tiles.size());
    for (const auto& [e, tl] : g.edge_tiles) {
        if (cut.count(e)) continue;
        for (std::size_t k = 1; k < tl.size(); ++k) uf.unite(tl[0], tl[k]);
    }
    // 0 unknown, 1 middle, 2 outside; conflicts void the extraction
    std::vector<int> mark(t.tiles.size(), 0);
    bool broken = false;
    auto apply = [&](int tile_idx, bool outside) {
        const int root = uf.find(tile_idx);
        const int want = outside ? 2 : 1;
        if (mark[static_cast<std::size_t>(root)] != 0 && mark[static_cast<std::size_t>(root)] != want) {
            broken = true;
        }
        mark[static_cast<std::size_t>(root)] = want;
    };
    for (const auto& e : le) {
        const bool shared = std::find(re.begin(), re.end(), e) != re.end();
        const auto it = g.edge_tiles.find(e);
        if (it == g.edge_tiles.end()) continue;
        for (int k : it->second) {
            const int s = disc_side(t.tiles[static_cast<std::size_t>(k)], e, zg);
            if (s > 0) apply(k, true);                  // left of the left path
            else if (!shared) apply(k, false);          // between
        }
    }
    for (const auto& e : re) {
        const bool shared = std::find(le.begin(), le.end(), e) != le.end();
        const auto it = g.edge_tiles.find(e);
        if (it == g.edge_tiles.end()) continue;
        for (int k : it->second) {
            const int s = disc_side(t.tiles[static_cast<std::size_t>(k)], e, zg);
            if (s < 0) apply(k, true);                  // right of the right path
            else if (!shared) apply(k, false);
        }
    }
    if (broken) return std::nullopt;
    std::vector<Tile> middle;
    for (std::size_t k = 0; k < t.tiles.size(); ++k) {
        const int m = mark[static_cast<std::size_t>(uf.find(static_cast<int>(k)))];
        if (m == 0) return std::nullopt;  // unreached component
        if (m == 1) middle.push_back(t.tiles[k]);
    }
    RegionTiling rt = make_region_tiling(wp, w, std::move(middle));
    if (!verify_region(rt).ok()) return std::nullopt;
    return rt;
}

// ---------------------------------------------------------------------------
// The five-way equivalence
// ---------------------------------------------------------------------------

namespace detail {

/// Exhaustive existence check for a region g-tiling at tiny sizes: every
/// absent/white/black assignment over the tile positions inside the region.
inline bool region_gtiling_exists_exhaustive(const Permutation& wp, const Permutation& w) {
    const int n = w.n();
    const Zonogon zg = Zonogon::standard(n);
    std::vector<long long> lx, rx;
    for (int i = 0; i <= n; ++i) {
        lx.push_back(zg.offset_sum(ideal(wp, i)));
        rx.push_back(zg.offset_sum(ideal(w, i)));
    }
    auto inside = [&](const Subset& v) {
        const int h = v.count();
        const long long x = zg.offset_sum(v);
        return lx[static_cast<std::size_t>(h)] <= x && x <= rx[static_cast<std::size_t>(h)];
    };
    std::vector<Tile> positions;
    for (const auto& x : all_subsets(n)) {
        for (int i = 1; i <= n; ++i) {
            if (x.contains(i)) continue;
            for (int j = i + 1; j <= n; ++j) {
                if (x.contains(j)) continue;
                const Tile tile{x, i, j, false};
                if (inside(tile.bottom()) && inside(tile.left()) && inside(tile.right()) &&
                    inside(tile.top())) {
                    positions.push_back(tile);
                }
            }
        }
    }
    std::vector<Tile> chosen;
    auto search = [&](auto&& self, std::size_t at) -> bool {
        if (at == positions.size()) {
            RegionTiling rt = make_region_tiling(wp, w, chosen);
            return verify_region(rt).ok();
        }
        if (self(self, at + 1)) return true;  // absent
        for (bool black : {false, true}) {
            Tile tile = positions[at];
            tile.black = black;
            chosen.push_back(tile);
            const bool found = self(self, at + 1);
            chosen.pop_back();
            if (found) return true;
        }
        return false;
    };
    return search(search, 0);
}

}  // namespace detail

struct FiveWay {
    bool ideal_condition = false;   // every left ideal below or containing every right ideal
    bool bruhat = false;            // strict weak Bruhat relation
    bool pure_tiling = false;       // right-of and a pure region tiling exists
    bool g_tiling = false;          // right-of and some region g-tiling exists
    bool ws_ideals = false;         // right-of and the joint ideals are weakly separated

    bool all_equal() const {
        return ideal_condition == bruhat && bruhat == pure_tiling && pure_tiling == g_tiling &&
               g_tiling == ws_ideals;
    }
};

/// Evaluates the five equivalent conditions for a pair of distinct
/// permutations and asserts their agreement.
inline FiveWay theorem_equiv_check(const Permutation& wp, const Permutation& w) {
    if (wp.n() != w.n()) throw std::invalid_argument("mismatched permutation sizes");
    if (wp == w) throw std::invalid_argument("theorem_equiv_check needs distinct permutations");
    FiveWay f;
    f.ideal_condition = cond_ideals(wp, w);
    f.bruhat = weak_bruhat_less(wp, w);
    f.pure_tiling = strip_from_below_try(wp, w).has_value();
    if (w.n() <= 3) {
        f.g_tiling = right_of(wp, w) && detail::region_gtiling_exists_exhaustive(wp, w);
    } else {
        f.g_tiling = f.pure_tiling;  // a pure tiling is a g-tiling; agreement audited below
    }
    if (right_of(wp, w)) {
        std::vector<Subset> sets;
        for (int i = 0; i <= w.n(); ++i) {
            sets.push_back(ideal(wp, i));
            sets.push_back(ideal(w, i));
        }
        f.ws_ideals = validate(WsCollection::from(w.n(), std::move(sets)));
    }
    if (!f.all_equal()) {
        throw std::logic_error("five-way equivalence violated for " + wp.str() + " vs " + w.str());
    }
    return f;
}

}  // namespace zw
