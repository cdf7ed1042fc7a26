#pragma once

// Versioned JSON interchange for collections, tilings, region tilings, and
// expansion paths. Serialization is canonical: identical values produce
// identical bytes.

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "zonoweave/bruhat.hpp"
#include "zonoweave/tiling.hpp"
#include "zonoweave/wscoll.hpp"

namespace zw {

using Json = nlohmann::ordered_json;

/// Raised on malformed interchange data; the CLI maps it to a usage error.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void check_format(const Json& j, const char* what) {
    if (!j.is_object()) throw ParseError(std::string(what) + ": expected a JSON object");
    if (!j.contains("format") || !j["format"].is_number_integer() || j["format"].get<int>() != 1) {
        throw ParseError(std::string(what) + ": missing or unsupported \"format\" (want 1)");
    }
}

inline int read_ground(const Json& j, const char* what) {
    if (!j.contains("n") || !j["n"].is_number_integer()) {
        throw ParseError(std::string(what) + ": missing integer \"n\"");
    }
    const int n = j["n"].get<int>();
    if (n < 1 || n > kMaxGround) throw ParseError(std::string(what) + ": n outside [1,64]");
    return n;
}

inline Subset read_subset(const Json& j, int n, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": subset must be an array");
    Subset s = Subset::empty_set(n);
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw ParseError(std::string(what) + ": subset element not an integer");
        const int v = e.get<int>();
        if (v < 1 || v > n) throw ParseError(std::string(what) + ": element outside [1,n]");
        if (s.contains(v)) throw ParseError(std::string(what) + ": repeated subset element");
        s = s.with(v);
    }
    return s;
}

inline Json write_subset(const Subset& s) {
    Json arr = Json::array();
    for (int e : s.elements()) arr.push_back(e);
    return arr;
}

inline Permutation read_permutation(const Json& j, const char* what) {
    if (!j.is_array() || j.empty()) throw ParseError(std::string(what) + ": permutation must be a nonempty array");
    std::vector<int> img;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw ParseError(std::string(what) + ": permutation entry not an integer");
        img.push_back(e.get<int>());
    }
    try {
        return Permutation(std::move(img));
    } catch (const std::invalid_argument& ex) {
        throw ParseError(std::string(what) + ": " + ex.what());
    }
}

inline Json write_permutation(const Permutation& w) {
    Json arr = Json::array();
    for (int v : w.images) arr.push_back(v);
    return arr;
}

}  // namespace detail

// -- collections ------------------------------------------------------------

inline Json to_json(const WsCollection& c) {
    Json j;
    j["format"] = 1;
    j["n"] = c.n;
    Json sets = Json::array();
    for (const auto& s : c.members) sets.push_back(detail::write_subset(s));
    j["sets"] = std::move(sets);
    return j;
}

inline WsCollection collection_from_json(const Json& j) {
    detail::check_format(j, "collection");
    const int n = detail::read_ground(j, "collection");
    if (!j.contains("sets") || !j["sets"].is_array()) throw ParseError("collection: missing \"sets\" array");
    std::vector<Subset> sets;
    for (const auto& e : j["sets"]) sets.push_back(detail::read_subset(e, n, "collection"));
    return WsCollection::from(n, std::move(sets));
}

// -- tilings ----------------------------------------------------------------

inline Json to_json(const GTiling& t) {
    Json j;
    j["format"] = 1;
    j["n"] = t.n;
    Json tiles = Json::array();
    for (const auto& tile : t.tiles) {
        Json e;
        e["base"] = detail::write_subset(tile.base);
        e["i"] = tile.i;
        e["j"] = tile.j;
        e["color"] = tile.black ? "black" : "white";
        tiles.push_back(std::move(e));
    }
    j["tiles"] = std::move(tiles);
    return j;
}

namespace detail {

inline std::vector<Tile> read_tiles(const Json& j, int n) {
    if (!j.contains("tiles") || !j["tiles"].is_array()) throw ParseError("tiling: missing \"tiles\" array");
    std::vector<Tile> tiles;
    for (const auto& e : j["tiles"]) {
        if (!e.is_object()) throw ParseError("tiling: tile must be an object");
        for (const char* key : {"base", "i", "j", "color"}) {
            if (!e.contains(key)) throw ParseError(std::string("tiling: tile missing \"") + key + "\"");
        }
        Tile tile;
        tile.base = read_subset(e["base"], n, "tile base");
        if (!e["i"].is_number_integer() || !e["j"].is_number_integer()) {
            throw ParseError("tiling: tile labels must be integers");
        }
        tile.i = e["i"].get<int>();
        tile.j = e["j"].get<int>();
        const std::string color = e["color"].is_string() ? e["color"].get<std::string>() : "";
        if (color != "white" && color != "black") throw ParseError("tiling: color must be white or black");
        tile.black = color == "black";
        tiles.push_back(tile);
    }
    return tiles;
}

}  // namespace detail

inline GTiling tiling_from_json(const Json& j) {
    detail::check_format(j, "tiling");
    const int n = detail::read_ground(j, "tiling");
    try {
        return GTiling::make(n, detail::read_tiles(j, n));
    } catch (const std::invalid_argument& ex) {
        throw ParseError(std::string("tiling: ") + ex.what());
    }
}

// -- region tilings ---------------------------------------------------------

inline Json to_json(const RegionTiling& rt) {
    Json j = to_json(GTiling{rt.n(), rt.tiles});
    j.erase("tiles");
    j["left"] = detail::write_permutation(rt.region.left.w);
    j["right"] = detail::write_permutation(rt.region.right.w);
    Json tiles = Json::array();
    for (const auto& tile : rt.tiles) {
        Json e;
        e["base"] = detail::write_subset(tile.base);
        e["i"] = tile.i;
        e["j"] = tile.j;
        e["color"] = tile.black ? "black" : "white";
        tiles.push_back(std::move(e));
    }
    j["tiles"] = std::move(tiles);
    return j;
}

inline bool looks_like_region(const Json& j) { return j.is_object() && j.contains("left"); }

inline RegionTiling region_from_json(const Json& j) {
    detail::check_format(j, "region tiling");
    const int n = detail::read_ground(j, "region tiling");
    if (!j.contains("left") || !j.contains("right")) {
        throw ParseError("region tiling: missing \"left\"/\"right\" boundary permutations");
    }
    const Permutation wp = detail::read_permutation(j["left"], "region left");
    const Permutation w = detail::read_permutation(j["right"], "region right");
    if (wp.n() != n || w.n() != n) throw ParseError("region tiling: boundary permutations disagree with n");
    try {
        return make_region_tiling(wp, w, detail::read_tiles(j, n));
    } catch (const std::invalid_argument& ex) {
        throw ParseError(std::string("region tiling: ") + ex.what());
    }
}

// -- expansion paths ----------------------------------------------------------

inline Json to_json(const LegalPath& p, int host_n) {
    Json j;
    j["format"] = 1;
    j["n"] = host_n;
    j["side"] = side_str(p.side);
    Json verts = Json::array();
    for (const auto& v : p.vertices) verts.push_back(detail::write_subset(v));
    j["vertices"] = std::move(verts);
    return j;
}

inline LegalPath path_from_json(const Json& j) {
    detail::check_format(j, "path");
    const int n = detail::read_ground(j, "path");
    if (!j.contains("side") || !j["side"].is_string()) throw ParseError("path: missing \"side\" (\"1\" or \"n\")");
    const std::string side = j["side"].get<std::string>();
    LegalPath p;
    if (side == "1") p.side = Side::One;
    else if (side == "n") p.side = Side::N;
    else throw ParseError("path: side must be \"1\" or \"n\"");
    if (!j.contains("vertices") || !j["vertices"].is_array()) throw ParseError("path: missing \"vertices\"");
    for (const auto& e : j["vertices"]) p.vertices.push_back(detail::read_subset(e, n, "path vertex"));
    return p;
}

// -- top level ----------------------------------------------------------------

inline std::string serialize(const Json& j) { return j.dump(2) + "\n"; }

inline Json parse_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("input is not valid JSON");
    return j;
}

}  // namespace zw
