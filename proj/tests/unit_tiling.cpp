#include <catch2/catch_amalgamated.hpp>

#include "zonoweave/tiling.hpp"

using namespace zw;

namespace {

Subset S(int n, std::initializer_list<int> e) { return Subset::of(n, e); }

// Reference tiling of Z_4 with a single black tile. Spectrum
// {0,1,4,12,14,23,24,34,123,234,1234}; terminals {2} and {1,2,4}.
GTiling reference_black_tiling() {
    std::vector<Tile> tiles{
        Tile{S(4, {}), 1, 4, false},     Tile{S(4, {1}), 2, 4, false}, Tile{S(4, {2}), 1, 3, false},
        Tile{S(4, {2}), 3, 4, false},    Tile{S(4, {4}), 1, 2, false}, Tile{S(4, {4}), 2, 3, false},
        Tile{S(4, {2, 3}), 1, 4, false}, Tile{S(4, {2}), 1, 4, true},
    };
    return GTiling::make(4, std::move(tiles));
}

WsCollection reference_spectrum() {
    return WsCollection::from(4, {S(4, {}), S(4, {1}), S(4, {4}), S(4, {1, 2}), S(4, {1, 4}),
                                  S(4, {2, 3}), S(4, {2, 4}), S(4, {3, 4}), S(4, {1, 2, 3}),
                                  S(4, {2, 3, 4}), S(4, {1, 2, 3, 4})});
}

GTiling single_tile_z2() { return GTiling::make(2, {Tile{S(2, {}), 1, 2, false}}); }

}  // namespace

TEST_CASE("structural tile checks") {
    CHECK_THROWS_AS(GTiling::make(3, {Tile{S(3, {1}), 1, 2, false}}), std::invalid_argument);
    CHECK_THROWS_AS(GTiling::make(3, {Tile{S(3, {}), 2, 2, false}}), std::invalid_argument);
    CHECK_THROWS_AS(GTiling::make(3, {Tile{S(2, {}), 1, 2, false}}), std::invalid_argument);
}

TEST_CASE("reference tiling verifies and has the expected spectrum") {
    const GTiling t = reference_black_tiling();
    const auto rep = verify(t);
    INFO(rep.summary());
    REQUIRE(rep.ok());
    CHECK(spectrum(t) == reference_spectrum());

    const TilingGraph g = build_graph(t);
    CHECK(g.is_terminal(S(4, {2})));
    CHECK(g.is_terminal(S(4, {1, 2, 4})));
    CHECK(g.vertices.size() == 13);
}

TEST_CASE("duplicate tile fails T1 with a witness") {
    auto t = reference_black_tiling();
    t.tiles.push_back(Tile{S(4, {}), 1, 4, false});
    std::sort(t.tiles.begin(), t.tiles.end(), tile_less);
    const auto rep = verify(t);
    CHECK_FALSE(rep.t1.pass);
    CHECK(rep.t1.witness.find("duplicate") != std::string::npos);
}

TEST_CASE("tiny zonogons") {
    const GTiling z1 = GTiling::make(1, {});
    REQUIRE(verify(z1).ok());
    CHECK(spectrum(z1) == WsCollection::from(1, {S(1, {}), S(1, {1})}));

    REQUIRE(verify(single_tile_z2()).ok());
    CHECK_FALSE(verify(GTiling::make(2, {})).ok());  // uncovered boundary
    CHECK(spectrum(single_tile_z2()).size() == 4);
}

TEST_CASE("mirror and reverse are involutions with the expected spectra") {
    const GTiling t = reference_black_tiling();
    CHECK(mirror(mirror(t)) == t);
    CHECK(reverse(reverse(t)) == t);
    REQUIRE(verify(reverse(t)).ok());
    REQUIRE(verify(mirror(t)).ok());
    CHECK(spectrum(reverse(t)) == co_collection(spectrum(t)));
}

TEST_CASE("strip extraction") {
    const GTiling z2 = single_tile_z2();
    const Strip s1 = strip_of(z2, 1);
    REQUIRE(s1.tiles.size() == 1);
    CHECK(s1.label_edges.front() == Edge{S(2, {}), 1});
    CHECK(s1.label_edges.back() == Edge{S(2, {2}), 1});

    const GTiling t = reference_black_tiling();
    const Strip s4 = strip_of(t, 4);
    CHECK(s4.label_edges.front() == Edge{S(4, {1, 2, 3}), 4});
    CHECK(s4.label_edges.back() == Edge{S(4, {}), 4});
    int with4 = 0;
    for (const auto& tile : t.tiles) {
        if (tile.i == 4 || tile.j == 4) ++with4;
    }
    CHECK(static_cast<int>(s4.tiles.size()) == with4);

    // every strip: all label edges covered, left chain is the right chain
    // shifted by the label, both chains simple and disjoint
    for (int label = 1; label <= t.n; ++label) {
        const Strip s = strip_of(t, label);
        std::set<Edge> seen(s.label_edges.begin(), s.label_edges.end());
        const TilingGraph g = build_graph(t);
        for (const auto& [e, tl] : g.edge_tiles) {
            if (!tl.empty() && e.label == label) REQUIRE(seen.count(e) == 1);
        }
        REQUIRE(s.left_vertices.size() == s.right_vertices.size());
        std::set<std::uint64_t> rset, lset;
        for (std::size_t k = 0; k < s.right_vertices.size(); ++k) {
            CHECK(s.right_vertices[k].with(label) == s.left_vertices[k]);
            rset.insert(s.right_vertices[k].bits);
            lset.insert(s.left_vertices[k].bits);
        }
        CHECK(rset.size() == s.right_vertices.size());
        CHECK(lset.size() == s.left_vertices.size());
        for (auto b : rset) CHECK(lset.count(b) == 0);
        // forward exactly on white low-label and black high-label strip tiles
        for (std::size_t k = 0; k < s.tiles.size(); ++k) {
            const Tile& tile = t.tiles[static_cast<std::size_t>(s.tiles[k])];
            const bool low = tile.i == label;
            const bool want_forward = (low && !tile.black) || (!low && tile.black);
            INFO("label " << label << " tile " << tile.str());
            CHECK(s.right_forward[k] == want_forward);
        }
    }
}

TEST_CASE("contraction of the tiny cases") {
    const GTiling z2 = single_tile_z2();
    CHECK(contract(z2, 2) == GTiling::make(1, {}));
    CHECK(contract(z2, 1) == GTiling::make(1, {}));
    CHECK_THROWS_AS(contract(reference_black_tiling(), 2), std::invalid_argument);
}

TEST_CASE("contracting the reference tiling drops the high label") {
    const GTiling t = reference_black_tiling();
    const GTiling c = contract(t, 4);
    REQUIRE(verify(c).ok());
    const auto want = WsCollection::from(3, all_subsets(3)).without(S(3, {1, 3}));
    CHECK(spectrum(c) == want);

    // low-side contraction: spectrum is the label-1 reduction, shifted down
    const GTiling c1 = contract(t, 1);
    REQUIRE(verify(c1).ok());
    std::vector<Subset> expect;
    std::set<std::uint64_t> dedup;
    for (const auto& x : spectrum(t).members) {
        Subset shifted = Subset::empty_set(3);
        for (int e : x.without(1).elements()) shifted = shifted.with(e - 1);
        if (dedup.insert(shifted.bits).second) expect.push_back(shifted);
    }
    CHECK(spectrum(c1) == WsCollection::from(3, std::move(expect)));
}

TEST_CASE("legal paths of the degenerate host") {
    const GTiling z1 = GTiling::make(1, {});
    const auto paths = legal_paths(z1, Side::N);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].vertices == std::vector<Subset>{S(1, {}), S(1, {1})});
    CHECK(expand(z1, paths[0]) == single_tile_z2());

    const auto low = legal_paths(z1, Side::One);
    REQUIRE(low.size() == 1);
    CHECK(expand(z1, low[0]) == single_tile_z2());
}

TEST_CASE("legality rules on hand paths") {
    // pure tiling of Z_3 with interval spectrum
    const GTiling host = GTiling::make(
        3, {Tile{S(3, {}), 1, 2, false}, Tile{S(3, {}), 2, 3, false}, Tile{S(3, {2}), 1, 3, false}});
    REQUIRE(verify(host).ok());

    LegalPath boundary{Side::N, {S(3, {}), S(3, {1}), S(3, {1, 2}), S(3, {1, 2, 3})}};
    CHECK(is_legal(host, boundary));

    LegalPath zig{Side::N, {S(3, {}), S(3, {1}), S(3, {1, 2}), S(3, {2}), S(3, {2, 3}), S(3, {1, 2, 3})}};
    CHECK(is_legal(host, zig));

    // forward label 2 then backward label 3 breaks the high-side turning rule
    LegalPath bad{Side::N, {S(3, {}), S(3, {3}), S(3, {2, 3}), S(3, {2}), S(3, {1, 2}), S(3, {1, 2, 3})}};
    CHECK_FALSE(is_legal(host, bad));
    // but it is exactly the low-side zigzag orientation
    bad.side = Side::One;
    CHECK(is_legal(host, bad));
    zig.side = Side::One;
    CHECK_FALSE(is_legal(host, zig));

    LegalPath not_simple{Side::N,
                         {S(3, {}), S(3, {1}), S(3, {}), S(3, {1}), S(3, {1, 2}), S(3, {1, 2, 3})}};
    CHECK_FALSE(is_legal(host, not_simple));

    LegalPath not_anchored{Side::N, {S(3, {1}), S(3, {1, 2})}};
    CHECK_FALSE(is_legal(host, not_anchored));

    LegalPath embedded{Side::N, {S(3, {}), S(3, {2}), S(3, {1, 2}), S(3, {1, 2, 3})}};
    CHECK(is_legal(host, embedded));

    LegalPath off_graph{Side::N, {S(3, {}), S(3, {1}), S(3, {1, 3}), S(3, {1, 2, 3})}};
    CHECK_THROWS_AS(is_legal(host, off_graph), std::invalid_argument);
}

TEST_CASE("no enumerated path has consecutive backward steps") {
    for (const auto& host : enumerate_gtilings(3)) {
        for (const auto& p : legal_paths(host, Side::N)) {
            REQUIRE(is_legal(host, p));
            bool prev_backward = false;
            for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) {
                const bool fwd = p.vertices[k].subset_of(p.vertices[k + 1]);
                REQUIRE_FALSE((prev_backward && !fwd));
                prev_backward = !fwd;
            }
        }
    }
}

TEST_CASE("two consecutive backward steps are rejected on their own") {
    const GTiling host = tiling_from_spectrum(interval_collection(4));
    // descend twice in a row through 123 -> 23 -> 3; every other transition
    // obeys the turning rule, so only the double descent can be at fault
    LegalPath twice{Side::N,
                    {S(4, {}), S(4, {1}), S(4, {1, 2}), S(4, {1, 2, 3}), S(4, {2, 3}), S(4, {3}),
                     S(4, {3, 4}), S(4, {2, 3, 4}), S(4, {1, 2, 3, 4})}};
    CHECK_FALSE(is_legal(host, twice));
    // the single-descent variant of the same walk is legal
    LegalPath once{Side::N,
                   {S(4, {}), S(4, {1}), S(4, {1, 2}), S(4, {1, 2, 3}), S(4, {2, 3}), S(4, {2, 3, 4}),
                    S(4, {1, 2, 3, 4})}};
    CHECK(is_legal(host, once));
}

TEST_CASE("low-side expansion is a bijection too") {
    for (int n = 2; n <= 3; ++n) {
        std::set<std::string> seen;
        for (const auto& host : enumerate_gtilings(n - 1)) {
            for (const auto& p : legal_paths(host, Side::One)) {
                const GTiling big = expand(host, p);
                REQUIRE(verify(big).ok());
                REQUIRE(contract(big, 1) == host);
                std::string key;
                for (const auto& tile : big.tiles) key += tile.str();
                REQUIRE(seen.insert(key).second);
            }
        }
        CHECK(seen.size() == enumerate_gtilings(n).size());
    }
}

TEST_CASE("boundary vertices stay nonterminal and boundary tiles white") {
    for (int n = 2; n <= 4; ++n) {
        for (const auto& t : enumerate_gtilings(n)) {
            const TilingGraph g = build_graph(t);
            for (const auto& e : boundary_edges(n)) {
                REQUIRE_FALSE(g.is_terminal(e.tail));
                REQUIRE_FALSE(g.is_terminal(e.head()));
                for (int k : g.edge_tiles.at(e)) {
                    REQUIRE_FALSE(t.tiles[static_cast<std::size_t>(k)].black);
                }
            }
        }
    }
}

TEST_CASE("sampled spectra at n = 5 are all largest and maximal") {
    const auto tilings = enumerate_gtilings(5);
    CHECK(tilings.size() == 124);
    for (const auto& t : tilings) {
        const auto s = spectrum_unchecked(t);
        REQUIRE(s.size() == largest_size(5));
        REQUIRE(validate(s));
    }
}

TEST_CASE("a backward step creates exactly one black tile") {
    const GTiling host = GTiling::make(
        3, {Tile{S(3, {}), 1, 2, false}, Tile{S(3, {}), 2, 3, false}, Tile{S(3, {2}), 1, 3, false}});
    LegalPath zig{Side::N, {S(3, {}), S(3, {1}), S(3, {1, 2}), S(3, {2}), S(3, {2, 3}), S(3, {1, 2, 3})}};
    const GTiling big = expand(host, zig);
    REQUIRE(verify(big).ok());
    int blacks = 0;
    for (const auto& tile : big.tiles) blacks += tile.black ? 1 : 0;
    CHECK(blacks == 1);
    CHECK(contract(big, 4) == host);
}

TEST_CASE("enumeration of all tilings at tiny sizes") {
    CHECK(enumerate_gtilings(1).size() == 1);
    CHECK(enumerate_gtilings(2).size() == 1);

    const auto t3 = enumerate_gtilings(3);
    REQUIRE(t3.size() == 2);
    std::vector<WsCollection> spectra;
    for (const auto& t : t3) {
        for (const auto& tile : t.tiles) CHECK_FALSE(tile.black);
        spectra.push_back(spectrum(t));
    }
    std::sort(spectra.begin(), spectra.end());
    auto want = enumerate_maximal(3);
    std::sort(want.begin(), want.end());
    CHECK(spectra == want);
}

TEST_CASE("expansion and contraction are mutually inverse, exhaustively") {
    for (int n = 2; n <= 4; ++n) {
        for (const auto& host : enumerate_gtilings(n - 1)) {
            for (const auto& p : legal_paths(host, Side::N)) {
                const GTiling big = expand(host, p);
                REQUIRE(contract(big, n) == host);
                REQUIRE(contraction_path(big).vertices == p.vertices);
            }
        }
        for (const auto& t : enumerate_gtilings(n)) {
            const GTiling down = contract(t, n);
            const LegalPath p = contraction_path(t);
            REQUIRE(is_legal(down, p));
            REQUIRE(expand(down, p) == t);
        }
    }
}

TEST_CASE("local fans on the reference tiling") {
    const auto rep = local_fans(reference_black_tiling());
    INFO(rep.witness);
    REQUIRE(rep.ok);
    for (const auto& fan : rep.fans) {
        if (fan.terminal) {
            CHECK(fan.rho == FullAngleClass::Zero);
        } else if (on_left_boundary(fan.v) || on_right_boundary(fan.v)) {
            CHECK(fan.rho == FullAngleClass::BoundaryWedge);
        } else {
            CHECK(fan.rho == FullAngleClass::FullTurn);
        }
        if (fan.v == S(4, {2, 4})) {
            CHECK(fan.black_low == 1);
            CHECK(fan.black_high == 0);
        }
        if (fan.v == S(4, {1, 4})) {  // ordinary vertex
            CHECK(fan.black_low == 0);
            CHECK(fan.black_high == 0);
        }
    }
}

TEST_CASE("principal forests of the reference tiling") {
    const GTiling t = reference_black_tiling();
    for (int h = 1; h <= 4; ++h) {
        const auto f = principal_forest(t, h);
        INFO("h=" << h << " " << f.issue);
        REQUIRE(f.ok());
        REQUIRE(f.principal >= 0);
        if (h < 4) {
            // boundary vertices are always critical
            CHECK(std::find(f.critical.begin(), f.critical.end(), Subset::interval(4, 1, h)) !=
                  f.critical.end());
            CHECK(std::find(f.critical.begin(), f.critical.end(), Subset::interval(4, 4 - h + 1, 4)) !=
                  f.critical.end());
        }
    }
    // level 2: the criticals are exactly 12, 24, 34
    const auto f2 = principal_forest(t, 2);
    REQUIRE(f2.critical.size() == 3);
    CHECK(f2.critical[0] == S(4, {1, 2}));
    CHECK(f2.critical[1] == S(4, {2, 4}));
    CHECK(f2.critical[2] == S(4, {3, 4}));

    // pure tilings have a single tree per level
    for (const auto& pure : enumerate_gtilings(3)) {
        for (int h = 1; h <= 3; ++h) {
            const auto f = principal_forest(pure, h);
            REQUIRE(f.ok());
            CHECK(f.components.size() == 1);
        }
    }
}

TEST_CASE("edge and cycle rules") {
    const GTiling ref = reference_black_tiling();
    CHECK(edge_existence_checks(ref).ok);

    // a terminal-adjacent pair may lack its edge without breaking the rule:
    // {1,2,4} is terminal, one element below the full set, and unjoined
    const TilingGraph g = build_graph(ref);
    CHECK(g.has_vertex(S(4, {1, 2, 4})));
    CHECK(g.is_terminal(S(4, {1, 2, 4})));
    CHECK_FALSE(g.has_edge(Edge{S(4, {1, 2, 4}), 3}));

    for (const auto& t : enumerate_gtilings(4)) {
        const auto rep = edge_existence_checks(t);
        INFO(rep.witness);
        REQUIRE(rep.ok);
    }
}

TEST_CASE("reconstruction from a spectrum") {
    CHECK(tiling_from_spectrum(WsCollection::from(1, {S(1, {}), S(1, {1})})) == GTiling::make(1, {}));

    const GTiling std3 = tiling_from_spectrum(interval_collection(3));
    REQUIRE(verify(std3).ok());
    for (const auto& tile : std3.tiles) CHECK_FALSE(tile.black);
    CHECK(spectrum(std3) == interval_collection(3));
    CHECK(spectrum(reverse(std3)) == co_collection(interval_collection(3)));

    const GTiling rebuilt = tiling_from_spectrum(reference_spectrum());
    CHECK(rebuilt == reference_black_tiling());

    CHECK_THROWS_AS(tiling_from_spectrum(WsCollection::from(3, {S(3, {})})), std::invalid_argument);
}

TEST_CASE("reconstruction at the guarded boundary") {
    // n = 7 is the largest unguarded size
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const auto c = greedy_complete(WsCollection::empty(7), shuffled_subsets(7, seed));
        const GTiling t = tiling_from_spectrum(c);
        REQUIRE(spectrum(t) == c);
    }
    const auto c8 = greedy_complete(WsCollection::empty(8));
    CHECK_THROWS_AS(tiling_from_spectrum(c8), std::invalid_argument);
}

TEST_CASE("reconstruction inverts the spectrum on every tiling up to n=4") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& t : enumerate_gtilings(n)) {
            REQUIRE(tiling_from_spectrum(spectrum(t)) == t);
        }
        for (const auto& c : enumerate_maximal(n)) {
            REQUIRE(spectrum(tiling_from_spectrum(c)) == c);
        }
    }
}
