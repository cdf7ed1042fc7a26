#pragma once

// Deterministic SVG pictures: unit-height levels, edges as segments, black
// tiles stroked bold, terminal vertices marked with diamonds, optional
// overlay of the auxiliary graph's horizontal diagonals.

#include <string>

#include "zonoweave/auxgraph.hpp"
#include "zonoweave/bruhat.hpp"
#include "zonoweave/tiling.hpp"

namespace zw {

struct RenderOptions {
    bool gamma_overlay = false;
    int unit_x = 18;
    int unit_y = 46;
    int margin = 24;
};

namespace detail {

struct Canvas {
    const Zonogon z;
    RenderOptions opt;
    long long max_x = 0;
    int levels = 0;
    std::string body;

    Canvas(int n, RenderOptions o) : z(Zonogon::standard(n)), opt(o) {
        max_x = z.offset_sum(Subset::full_set(n));
        levels = n;
    }

    long long px(const Subset& v) const { return opt.margin + opt.unit_x * z.offset_sum(v); }
    long long py(const Subset& v) const {
        return opt.margin + static_cast<long long>(opt.unit_y) * (levels - v.count());
    }

    void line(const Subset& a, const Subset& b, const std::string& cls) {
        body += "  <line class=\"" + cls + "\" x1=\"" + std::to_string(px(a)) + "\" y1=\"" +
                std::to_string(py(a)) + "\" x2=\"" + std::to_string(px(b)) + "\" y2=\"" +
                std::to_string(py(b)) + "\"/>\n";
    }

    void vertex(const Subset& v, bool terminal) {
        if (terminal) {
            const long long x = px(v), y = py(v);
            body += "  <path class=\"terminal\" d=\"M " + std::to_string(x) + " " + std::to_string(y - 6) +
                    " L " + std::to_string(x + 6) + " " + std::to_string(y) + " L " + std::to_string(x) +
                    " " + std::to_string(y + 6) + " L " + std::to_string(x - 6) + " " +
                    std::to_string(y) + " Z\"/>\n";
        } else {
            body += "  <circle class=\"vertex\" cx=\"" + std::to_string(px(v)) + "\" cy=\"" +
                    std::to_string(py(v)) + "\" r=\"3\"/>\n";
        }
    }

    std::string finish() const {
        const long long w = 2 * opt.margin + opt.unit_x * max_x;
        const long long h = 2 * opt.margin + static_cast<long long>(opt.unit_y) * levels;
        std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + std::to_string(w) +
                          " " + std::to_string(h) + "\">\n";
        out +=
            "  <style>\n"
            "    .edge { stroke: #444; stroke-width: 1.5; }\n"
            "    .black-tile { stroke: #000; stroke-width: 4; fill: none; }\n"
            "    .boundary { stroke: #000; stroke-width: 3; }\n"
            "    .gamma { stroke: #b22; stroke-width: 1.5; stroke-dasharray: 5 3; }\n"
            "    .vertex { fill: #222; }\n"
            "    .terminal { fill: #000; }\n"
            "  </style>\n";
        out += body;
        out += "</svg>\n";
        return out;
    }
};

}  // namespace detail

inline std::string render(const GTiling& t, RenderOptions opt = {}) {
    require_verified(t, "render");
    const TilingGraph g = build_graph(t);
    detail::Canvas c(t.n, opt);
    for (const auto& [e, tl] : g.edge_tiles) {
        if (tl.empty() && t.n != 1) continue;
        c.line(e.tail, e.head(), "edge");
    }
    for (const auto& tile : t.tiles) {
        if (!tile.black) continue;
        std::string pts;
        for (const auto& v : {tile.bottom(), tile.left(), tile.top(), tile.right()}) {
            pts += std::to_string(c.px(v)) + "," + std::to_string(c.py(v)) + " ";
        }
        pts.pop_back();
        c.body += "  <polygon class=\"black-tile\" points=\"" + pts + "\"/>\n";
    }
    if (opt.gamma_overlay) {
        const AuxGraph aux = build_aux(t);
        for (const auto& [a, b] : aux.horizontal) {
            c.line(aux.vertices[static_cast<std::size_t>(a)], aux.vertices[static_cast<std::size_t>(b)],
                   "gamma");
        }
    }
    for (std::size_t k = 0; k < g.vertices.size(); ++k) c.vertex(g.vertices[k], g.terminal[k]);
    return c.finish();
}

inline std::string render(const RegionTiling& rt, RenderOptions opt = {}) {
    require_region_verified(rt, "render");
    const GTiling shape{rt.n(), rt.tiles};
    const TilingGraph g = build_graph(shape);
    detail::Canvas c(rt.n(), opt);
    for (const auto& [e, tl] : g.edge_tiles) {
        if (tl.empty()) continue;
        c.line(e.tail, e.head(), "edge");
    }
    for (const auto* path : {&rt.region.left, &rt.region.right}) {
        for (int i = 1; i <= rt.n(); ++i) {
            c.line(path->vertices[static_cast<std::size_t>(i - 1)],
                   path->vertices[static_cast<std::size_t>(i)], "boundary");
        }
    }
    for (const auto& tile : rt.tiles) {
        if (!tile.black) continue;
        std::string pts;
        for (const auto& v : {tile.bottom(), tile.left(), tile.top(), tile.right()}) {
            pts += std::to_string(c.px(v)) + "," + std::to_string(c.py(v)) + " ";
        }
        pts.pop_back();
        c.body += "  <polygon class=\"black-tile\" points=\"" + pts + "\"/>\n";
    }
    for (std::size_t k = 0; k < g.vertices.size(); ++k) c.vertex(g.vertices[k], g.terminal[k]);
    return c.finish();
}

}  // namespace zw
