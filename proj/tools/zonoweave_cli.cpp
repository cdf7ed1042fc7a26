// zonoweave: command-line front end for weakly separated set systems,
// generalized zonogon tilings, and the theorem-check harness.
//
// Exit codes: 0 success / property true, 1 property false (with witness),
// 2 usage or parse error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "zonoweave/json_io.hpp"
#include "zonoweave/svg.hpp"
#include "zonoweave/theorems.hpp"

namespace {

using namespace zw;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + out_path);
    out << text;
}

Subset parse_subset_arg(const std::string& arg, int n) {
    Subset s = Subset::empty_set(n);
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        s = s.with(std::stoi(item));
    }
    return s;
}

Permutation parse_perm_arg(const std::string& arg) {
    std::vector<int> img;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) img.push_back(std::stoi(item));
    }
    return Permutation(std::move(img));
}

std::uint64_t env_seed() {
    const char* s = std::getenv("ZONOWEAVE_SEED");
    return s ? std::strtoull(s, nullptr, 10) : 0;
}

int cmd_relations(int n, const std::string& a_arg, const std::string& b_arg) {
    const Subset a = parse_subset_arg(a_arg, n), b = parse_subset_arg(b_arg, n);
    Json j;
    j["format"] = 1;
    j["n"] = n;
    j["a"] = detail::write_subset(a);
    j["b"] = detail::write_subset(b);
    j["lessdot_ab"] = lessdot(a, b);
    j["lessdot_ba"] = lessdot(b, a);
    j["splits_ab"] = splits(a, b);
    j["splits_ba"] = splits(b, a);
    j["weakly_separated"] = weakly_separated(a, b);
    j["strongly_separated"] = strongly_separated(a, b);
    std::cout << serialize(j);
    return weakly_separated(a, b) ? kExitTrue : kExitFalse;
}

Json collections_json(int n, const std::vector<WsCollection>& cs) {
    Json j;
    j["format"] = 1;
    j["n"] = n;
    Json arr = Json::array();
    for (const auto& c : cs) arr.push_back(to_json(c)["sets"]);
    j["collections"] = std::move(arr);
    return j;
}

int cmd_enum_maximal(int n, const std::string& chamber, const std::string& left,
                     const std::string& right, bool force, const std::string& out) {
    if (n > 6 && !force) throw UsageError("enum-maximal refuses n > 6 without --force");
    std::vector<WsCollection> cs;
    if (!left.empty() || !right.empty()) {
        if (left.empty() || right.empty()) throw UsageError("--left and --right must come together");
        const Permutation w = parse_perm_arg(left), wp = parse_perm_arg(right);
        if (w.n() != n || wp.n() != n) throw UsageError("permutation size differs from --n");
        cs = enumerate_maximal(
            n, [&](const Subset& x) { return is_chamber_set(x, w) && is_right_set(x, wp); }, force);
    } else if (!chamber.empty()) {
        const Permutation w = parse_perm_arg(chamber);
        if (w.n() != n) throw UsageError("permutation size differs from --n");
        cs = enumerate_maximal(
            n, [&](const Subset& x) { return is_chamber_set(x, w); }, force);
    } else {
        cs = enumerate_maximal(n, force);
    }
    emit(serialize(collections_json(n, cs)), out);
    return kExitTrue;
}

int cmd_extend(const std::string& in, std::optional<std::uint64_t> seed, const std::string& out) {
    const WsCollection c = collection_from_json(load_json(in));
    if (!validate(c)) {
        std::cout << "input is not a ws-collection\n";
        return kExitFalse;
    }
    const WsCollection done =
        seed ? greedy_complete(c, shuffled_subsets(c.n, *seed)) : greedy_complete(c);
    emit(serialize(to_json(done)), out);
    return kExitTrue;
}

int cmd_verify(const std::string& in) {
    const Json j = load_json(in);
    if (looks_like_region(j)) {
        const RegionTiling rt = region_from_json(j);
        const auto rep = verify_region(rt);
        std::cout << rep.summary() << "\n";
        return rep.ok() ? kExitTrue : kExitFalse;
    }
    const GTiling t = tiling_from_json(j);
    const auto rep = verify(t);
    std::cout << rep.summary() << "\n";
    return rep.ok() ? kExitTrue : kExitFalse;
}

int cmd_spectrum(const std::string& in, const std::string& out) {
    const Json j = load_json(in);
    WsCollection s = looks_like_region(j) ? [&] {
        const RegionTiling rt = region_from_json(j);
        require_region_verified(rt, "spectrum");
        return region_spectrum(rt);
    }()
                                          : spectrum(tiling_from_json(j));
    emit(serialize(to_json(s)), out);
    return kExitTrue;
}

int cmd_strips(const std::string& in, int label, const std::string& out) {
    const GTiling t = tiling_from_json(load_json(in));
    Json j;
    j["format"] = 1;
    j["n"] = t.n;
    Json arr = Json::array();
    for (int q = 1; q <= t.n; ++q) {
        if (label != 0 && q != label) continue;
        const Strip s = strip_of(t, q);
        Json e;
        e["label"] = q;
        Json right = Json::array(), left = Json::array();
        for (const auto& v : s.right_vertices) right.push_back(detail::write_subset(v));
        for (const auto& v : s.left_vertices) left.push_back(detail::write_subset(v));
        e["right"] = std::move(right);
        e["left"] = std::move(left);
        e["tiles"] = s.tiles.size();
        arr.push_back(std::move(e));
    }
    j["strips"] = std::move(arr);
    emit(serialize(j), out);
    return kExitTrue;
}

int cmd_contract(const std::string& in, const std::string& side, const std::string& out) {
    const GTiling t = tiling_from_json(load_json(in));
    const int s = (side == "n") ? t.n : (side == "1" ? 1 : -1);
    if (s < 0) throw UsageError("--side must be 1 or n");
    emit(serialize(to_json(contract(t, s))), out);
    return kExitTrue;
}

int cmd_expand(const std::string& in, const std::string& path_file, const std::string& out) {
    const GTiling t = tiling_from_json(load_json(in));
    const LegalPath p = path_from_json(load_json(path_file));
    if (!is_legal(t, p)) {
        std::cout << "path is not legal for this tiling\n";
        return kExitFalse;
    }
    emit(serialize(to_json(expand(t, p))), out);
    return kExitTrue;
}

int cmd_checker(const std::string& perm, const std::string& out) {
    emit(serialize(to_json(checker(parse_perm_arg(perm)))), out);
    return kExitTrue;
}

int cmd_chamber_enum(const std::string& perm, bool force, const std::string& out) {
    const Permutation w = parse_perm_arg(perm);
    if (w.n() > 6 && !force) throw UsageError("chamber-enum refuses n > 6 without --force");
    const auto cs = enumerate_maximal(
        w.n(), [&](const Subset& x) { return is_chamber_set(x, w); }, force);
    emit(serialize(collections_json(w.n(), cs)), out);
    return kExitTrue;
}

int cmd_strip_tile(const std::string& left, const std::string& right, bool above,
                   const std::string& out) {
    const Permutation wp = parse_perm_arg(left);
    const Permutation w = right.empty() ? Permutation::longest(wp.n()) : parse_perm_arg(right);
    const RegionTiling rt = above ? strip_from_above(wp, w) : strip_from_below(wp, w);
    emit(serialize(to_json(rt)), out);
    return kExitTrue;
}

int cmd_posets(const std::string& in, const std::string& out) {
    const GTiling t = tiling_from_json(load_json(in));
    const bool equal = posets_equal(t);
    const FinitePoset p = order_star(spectrum(t));
    const bool lattice = is_lattice(p);
    std::string text = to_dot(p);
    text += std::string("orders-equal: ") + (equal ? "yes" : "no") + "\n";
    text += std::string("lattice: ") + (lattice ? "yes" : "no") + "\n";
    emit(text, out);
    return (equal && lattice) ? kExitTrue : kExitFalse;
}

int cmd_flips(int n, bool force) {
    const FlipGraph g = flip_reachability(n, force);
    Json j;
    j["format"] = 1;
    j["n"] = n;
    j["nodes"] = g.nodes.size();
    j["lowering_edges"] = g.lowering_edges.size();
    j["connected"] = g.connected;
    j["minimum_is_intervals"] = g.nodes[static_cast<std::size_t>(g.minimum)] == interval_collection(n);
    j["maximum_is_cointervals"] =
        g.nodes[static_cast<std::size_t>(g.maximum)] == co_collection(interval_collection(n));
    std::cout << serialize(j);
    return (g.connected && j["minimum_is_intervals"].get<bool>() &&
            j["maximum_is_cointervals"].get<bool>())
               ? kExitTrue
               : kExitFalse;
}

int cmd_enum_tilings(int n, bool force, const std::string& out) {
    if (n > 5 && !force) throw UsageError("enum-tilings refuses n > 5 without --force");
    const auto ts = enumerate_gtilings(n, force);
    Json j;
    j["format"] = 1;
    j["n"] = n;
    Json arr = Json::array();
    for (const auto& t : ts) arr.push_back(to_json(t)["tiles"]);
    j["tilings"] = std::move(arr);
    emit(serialize(j), out);
    return kExitTrue;
}

int cmd_reconstruct(const std::string& in, bool force, const std::string& out) {
    const WsCollection c = collection_from_json(load_json(in));
    emit(serialize(to_json(tiling_from_spectrum(c, force))), out);
    return kExitTrue;
}

int cmd_theorem_check(const std::string& id, int n, int jobs) {
    TheoremReport rep;
    if (id == "B") rep = check_theorem_B(n);
    else if (id == "A") rep = check_theorem_A(n, jobs);
    else if (id == "A'") rep = check_theorem_A_prime(n);
    else if (id == "2.1") rep = check_theorem_2_1(n, jobs);
    else if (id == "4.1") rep = check_theorem_4_1(n);
    else if (id == "6.1") rep = check_theorem_6_1(n);
    else if (id == "7.1") rep = check_theorem_7_1(n, jobs);
    else throw UsageError("unknown theorem id " + id + " (use A, B, A', 2.1, 4.1, 6.1, 7.1)");
    std::cout << rep.detail << rep.summary() << "\n";
    return rep.pass ? kExitTrue : kExitFalse;
}

int cmd_render(const std::string& in, bool gamma, const std::string& out) {
    const Json j = load_json(in);
    RenderOptions opt;
    opt.gamma_overlay = gamma;
    if (looks_like_region(j)) {
        emit(render(region_from_json(j), opt), out);
    } else {
        emit(render(tiling_from_json(j), opt), out);
    }
    return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zonoweave: weakly separated set systems and zonogon tilings"};
    app.require_subcommand(1);

    // relations
    auto* rel = app.add_subcommand("relations", "evaluate the pair relations on two subsets");
    int rel_n = 0;
    std::string rel_a, rel_b;
    rel->add_option("--n", rel_n, "ground size")->required();
    rel->add_option("--a", rel_a, "first subset, e.g. 1,3")->required();
    rel->add_option("--b", rel_b, "second subset")->required();

    // enum-maximal
    auto* enm = app.add_subcommand("enum-maximal", "enumerate maximal ws-collections");
    int enm_n = 0;
    std::string enm_chamber, enm_left, enm_right, enm_out;
    bool enm_force = false;
    enm->add_option("--n", enm_n, "ground size")->required();
    enm->add_option("--chamber", enm_chamber, "restrict to chamber sets of this permutation");
    enm->add_option("--left", enm_left, "restrict to left sets of this permutation");
    enm->add_option("--right", enm_right, "and right sets of this permutation");
    enm->add_flag("--force", enm_force, "override the n cost guard");
    enm->add_option("--out", enm_out, "output file (default stdout)");

    // extend
    auto* ext = app.add_subcommand("extend", "greedily complete a ws-collection to a largest one");
    std::string ext_in, ext_out;
    std::optional<std::uint64_t> ext_seed;
    bool ext_seed_env = false;
    ext->add_option("--in", ext_in, "collection JSON")->required();
    ext->add_option("--seed", ext_seed, "seeded-shuffle scan order");
    ext->add_flag("--seed-env", ext_seed_env, "take the seed from ZONOWEAVE_SEED");
    ext->add_option("--out", ext_out, "output file");

    // verify
    auto* ver = app.add_subcommand("verify", "verify the tiling axioms");
    std::string ver_in;
    ver->add_option("--in", ver_in, "tiling or region JSON")->required();

    // spectrum
    auto* spc = app.add_subcommand("spectrum", "nonterminal vertex collection of a tiling");
    std::string spc_in, spc_out;
    spc->add_option("--in", spc_in, "tiling or region JSON")->required();
    spc->add_option("--out", spc_out, "output file");

    // strips
    auto* str = app.add_subcommand("strips", "dual label strips of a tiling");
    std::string str_in, str_out;
    int str_label = 0;
    str->add_option("--in", str_in, "tiling JSON")->required();
    str->add_option("--label", str_label, "only this label");
    str->add_option("--out", str_out, "output file");

    // contract
    auto* con = app.add_subcommand("contract", "remove a boundary-label strip");
    std::string con_in, con_side = "n", con_out;
    con->add_option("--in", con_in, "tiling JSON")->required();
    con->add_option("--side", con_side, "1 or n (default n)");
    con->add_option("--out", con_out, "output file");

    // expand
    auto* exp = app.add_subcommand("expand", "insert a boundary label along a legal path");
    std::string exp_in, exp_path, exp_out;
    exp->add_option("--in", exp_in, "host tiling JSON")->required();
    exp->add_option("--path", exp_path, "path JSON")->required();
    exp->add_option("--out", exp_out, "output file");

    // checker
    auto* chk = app.add_subcommand("checker", "canonical checker collection of a permutation");
    std::string chk_perm, chk_out;
    chk->add_option("--perm", chk_perm, "one-line permutation, e.g. 3,1,5,2,4")->required();
    chk->add_option("--out", chk_out, "output file");

    // chamber-enum
    auto* che = app.add_subcommand("chamber-enum", "maximal chamber collections of a permutation");
    std::string che_perm, che_out;
    bool che_force = false;
    che->add_option("--perm", che_perm, "one-line permutation")->required();
    che->add_flag("--force", che_force, "override the n cost guard");
    che->add_option("--out", che_out, "output file");

    // strip-tile
    auto* stb = app.add_subcommand("strip-tile", "pure region tiling, stripped from below");
    std::string stb_left, stb_right, stb_out;
    stb->add_option("--left", stb_left, "left boundary permutation")->required();
    stb->add_option("--right", stb_right, "right boundary permutation (default longest)");
    stb->add_option("--out", stb_out, "output file");

    // standard-tile
    auto* sta = app.add_subcommand("standard-tile", "standard region tiling, stripped from above");
    std::string sta_left, sta_right, sta_out;
    sta->add_option("--left", sta_left, "left boundary permutation")->required();
    sta->add_option("--right", sta_right, "right boundary permutation (default longest)");
    sta->add_option("--out", sta_out, "output file");

    // posets
    auto* pos = app.add_subcommand("posets", "compare the two spectrum orders and test the lattice");
    std::string pos_in, pos_out;
    pos->add_option("--in", pos_in, "tiling JSON")->required();
    pos->add_option("--out", pos_out, "output file");

    // flips
    auto* flp = app.add_subcommand("flips", "flip graph over all largest collections");
    int flp_n = 0;
    bool flp_force = false;
    flp->add_option("--n", flp_n, "ground size")->required();
    flp->add_flag("--force", flp_force, "override the n cost guard");

    // enum-tilings
    auto* ent = app.add_subcommand("enum-tilings", "enumerate all tilings of the zonogon");
    int ent_n = 0;
    bool ent_force = false;
    std::string ent_out;
    ent->add_option("--n", ent_n, "ground size")->required();
    ent->add_flag("--force", ent_force, "override the n cost guard");
    ent->add_option("--out", ent_out, "output file");

    // reconstruct
    auto* rec = app.add_subcommand("reconstruct", "unique tiling with the given largest spectrum");
    std::string rec_in, rec_out;
    bool rec_force = false;
    rec->add_option("--in", rec_in, "collection JSON")->required();
    rec->add_flag("--force", rec_force, "override the n cost guard");
    rec->add_option("--out", rec_out, "output file");

    // theorem-check
    auto* thm = app.add_subcommand("theorem-check", "run an exhaustive theorem check");
    std::string thm_id;
    int thm_n = 0, thm_jobs = 1;
    thm->add_option("--theorem", thm_id, "A, B, A', 2.1, 4.1, 6.1 or 7.1")->required();
    thm->add_option("--n", thm_n, "largest ground size")->required();
    thm->add_option("--jobs", thm_jobs, "worker threads for permutation sweeps");

    // render
    auto* ren = app.add_subcommand("render", "deterministic SVG picture");
    std::string ren_in, ren_out;
    bool ren_gamma = false;
    ren->add_option("--in", ren_in, "tiling or region JSON")->required();
    ren->add_flag("--gamma", ren_gamma, "overlay the auxiliary graph diagonals");
    ren->add_option("--out", ren_out, "output file");

    try {
        app.parse(argc, argv);
        if (rel->parsed()) return cmd_relations(rel_n, rel_a, rel_b);
        if (enm->parsed()) return cmd_enum_maximal(enm_n, enm_chamber, enm_left, enm_right, enm_force, enm_out);
        if (ext->parsed()) {
            if (ext_seed_env && !ext_seed) ext_seed = env_seed();
            return cmd_extend(ext_in, ext_seed, ext_out);
        }
        if (ver->parsed()) return cmd_verify(ver_in);
        if (spc->parsed()) return cmd_spectrum(spc_in, spc_out);
        if (str->parsed()) return cmd_strips(str_in, str_label, str_out);
        if (con->parsed()) return cmd_contract(con_in, con_side, con_out);
        if (exp->parsed()) return cmd_expand(exp_in, exp_path, exp_out);
        if (chk->parsed()) return cmd_checker(chk_perm, chk_out);
        if (che->parsed()) return cmd_chamber_enum(che_perm, che_force, che_out);
        if (stb->parsed()) return cmd_strip_tile(stb_left, stb_right, false, stb_out);
        if (sta->parsed()) return cmd_strip_tile(sta_left, sta_right, true, sta_out);
        if (pos->parsed()) return cmd_posets(pos_in, pos_out);
        if (flp->parsed()) return cmd_flips(flp_n, flp_force);
        if (ent->parsed()) return cmd_enum_tilings(ent_n, ent_force, ent_out);
        if (rec->parsed()) return cmd_reconstruct(rec_in, rec_force, rec_out);
        if (thm->parsed()) return cmd_theorem_check(thm_id, thm_n, thm_jobs);
        if (ren->parsed()) return cmd_render(ren_in, ren_gamma, ren_out);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "property failure: " << e.what() << "\n";
        return kExitFalse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
