#pragma once

// Desk-scale theorem checks: each runs an exhaustive sweep at the given
// ground sizes and reports pass/fail with a first counterexample. The checks
// are pure; the optional jobs parameter only fans independent permutation
// sweeps across threads without changing any output.

#include <atomic>
#include <future>
#include <set>
#include <string>
#include <vector>

#include "zonoweave/auxgraph.hpp"
#include "zonoweave/bruhat.hpp"
#include "zonoweave/tiling.hpp"
#include "zonoweave/wscoll.hpp"

namespace zw {

struct TheoremReport {
    std::string theorem;
    int n_min = 1;
    int n_max = 1;
    long long checked = 0;
    bool pass = true;
    std::string counterexample;  // first witness when failing
    std::string detail;          // one human line per ground size

    void fail(const std::string& witness) {
        if (pass) {
            pass = false;
            counterexample = witness;
        }
    }

    std::string summary() const {
        std::string s = "theorem " + theorem + " on n=" + std::to_string(n_min) + ".." +
                        std::to_string(n_max) + ": " + (pass ? "pass" : "FAIL") + " (" +
                        std::to_string(checked) + " checks)";
        if (!pass) s += "; counterexample: " + counterexample;
        return s;
    }
};

namespace detail {

/// Runs f(k) for k in [0, count) across `jobs` threads; results land in
/// index order, so output never depends on the schedule.
template <typename F>
inline std::vector<std::string> indexed_sweep(std::size_t count, int jobs, F&& f) {
    std::vector<std::string> out(count);
    if (jobs <= 1 || count < 2) {
        for (std::size_t k = 0; k < count; ++k) out[k] = f(k);
        return out;
    }
    std::vector<std::future<void>> workers;
    std::atomic<std::size_t> next{0};
    const int lanes = std::min<int>(jobs, static_cast<int>(count));
    for (int lane = 0; lane < lanes; ++lane) {
        workers.push_back(std::async(std::launch::async, [&] {
            while (true) {
                const std::size_t k = next.fetch_add(1);
                if (k >= count) return;
                out[k] = f(k);
            }
        }));
    }
    for (auto& w : workers) w.get();
    return out;
}

}  // namespace detail

/// Every maximal ws-collection over [n] has n(n+1)/2 + 1 members.
inline TheoremReport check_theorem_B(int n_max) {
    TheoremReport rep;
    rep.theorem = "B";
    rep.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        const auto cs = enumerate_maximal(n);
        for (const auto& c : cs) {
            ++rep.checked;
            if (c.size() != largest_size(n)) {
                rep.fail("n=" + std::to_string(n) + ": a maximal collection has " +
                         std::to_string(c.size()) + " members");
            }
        }
        rep.detail += "n=" + std::to_string(n) + ": " + std::to_string(cs.size()) +
                      " maximal collections, every size " + std::to_string(largest_size(n)) + "\n";
    }
    return rep;
}

/// Every maximal chamber collection of w has length(w) + n + 1 members.
inline TheoremReport check_theorem_A(int n_max, int jobs = 1) {
    TheoremReport rep;
    rep.theorem = "A";
    rep.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        const auto perms = all_permutations(n);
        const auto lines = detail::indexed_sweep(perms.size(), jobs, [&](std::size_t k) {
            const Permutation& w = perms[k];
            const auto cs = enumerate_maximal(
                n, [&w](const Subset& x) { return is_chamber_set(x, w); });
            const int want = length(w) + n + 1;
            std::string bad;
            for (const auto& c : cs) {
                if (c.size() != want) {
                    bad = "w=" + w.str() + ": maximal chamber collection of size " +
                          std::to_string(c.size()) + " (want " + std::to_string(want) + ")";
                }
            }
            return bad + "|" + std::to_string(cs.size());
        });
        long long collections = 0;
        for (const auto& line : lines) {
            ++rep.checked;
            const auto bar = line.find('|');
            if (bar != 0) rep.fail("n=" + std::to_string(n) + ": " + line.substr(0, bar));
            collections += std::stoll(line.substr(bar + 1));
        }
        rep.detail += "n=" + std::to_string(n) + ": " + std::to_string(perms.size()) +
                      " permutations, " + std::to_string(collections) + " maximal chamber collections\n";
    }
    return rep;
}

/// For every strict Bruhat pair: maximal collections over the left-for-w,
/// right-for-w' ground all have length gap + n + 1 members, and they are
/// exactly the spectra of region tilings carved from full tilings.
inline TheoremReport check_theorem_A_prime(int n_max) {
    TheoremReport rep;
    rep.theorem = "A'";
    rep.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        const auto perms = all_permutations(n);
        const auto tilings = enumerate_gtilings(n);
        long long pairs = 0;
        for (const auto& wp : perms) {
            for (const auto& w : perms) {
                if (!weak_bruhat_less(wp, w)) continue;
                ++pairs;
                const int want = length(w) - length(wp) + n + 1;
                const auto ground = [&](const Subset& x) {
                    return is_chamber_set(x, w) && is_right_set(x, wp);
                };
                const auto cs = enumerate_maximal(n, ground);
                std::set<WsCollection> left;
                for (const auto& c : cs) {
                    ++rep.checked;
                    if (c.size() != want) {
                        rep.fail("n=" + std::to_string(n) + " pair (" + wp.str() + ")<(" + w.str() +
                                 "): maximal collection of size " + std::to_string(c.size()) + " (want " +
                                 std::to_string(want) + ")");
                    }
                    left.insert(c);
                }
                std::set<WsCollection> right;
                for (const auto& t : tilings) {
                    const auto rt = extract_region(t, wp, w);
                    if (rt) right.insert(region_spectrum(*rt));
                }
                ++rep.checked;
                if (left != right) {
                    rep.fail("n=" + std::to_string(n) + " pair (" + wp.str() + ")<(" + w.str() +
                             "): maximal collections and region spectra differ (" +
                             std::to_string(left.size()) + " vs " + std::to_string(right.size()) + ")");
                }
            }
        }
        rep.detail += "n=" + std::to_string(n) + ": " + std::to_string(pairs) + " strict pairs\n";
    }
    return rep;
}

/// Outside the checker, weak separation from it is exactly chamberness.
inline TheoremReport check_theorem_2_1(int n_max, int jobs = 1) {
    TheoremReport rep;
    rep.theorem = "2.1";
    rep.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        const auto perms = all_permutations(n);
        const auto lines = detail::indexed_sweep(perms.size(), jobs, [&](std::size_t k) {
            const Permutation& w = perms[k];
            const WsCollection c0 = checker(w);
            for (const auto& x : all_subsets(n)) {
                if (c0.contains(x)) continue;
                if (is_ws_with_all(x, c0) != is_chamber_set(x, w)) {
                    return "w=" + w.str() + " x=" + x.str();
                }
            }
            return std::string{};
        });
        for (const auto& line : lines) {
            rep.checked += static_cast<long long>(1) << n;
            if (!line.empty()) rep.fail("n=" + std::to_string(n) + ": " + line);
        }
        rep.detail += "n=" + std::to_string(n) + ": " + std::to_string(perms.size()) +
                      " checkers swept over all subsets\n";
    }
    return rep;
}

/// Spectra of tilings are exactly the maximal collections, and the
/// reconstruction is a two-sided inverse of the spectrum.
inline TheoremReport check_theorem_3_1(int n_max) {
    TheoremReport rep;
    rep.theorem = "3.1";
    rep.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        const auto tilings = enumerate_gtilings(n);
        const auto collections = enumerate_maximal(n);
        std::set<WsCollection> spectra;
        for (const auto& t : tilings) {
            ++rep.checked;
            const auto s = spectrum(t);
            spectra.insert(s);
            if (!(tiling_from_spectrum(s) == t)) {
                rep.fail("n=" + std::to_string(n) + ": reconstruction differs from the source tiling");
            }
        }
        std::set<WsCollection> want(collections.begin(), collections.end());
        ++rep.checked;
        if (spectra != want) rep.fail("n=" + std::to_string(n) + ": spectra differ from maximal collections");
        for (const auto& c : collections) {
            ++rep.checked;
            if (!(spectrum(tiling_from_spectrum(c)) == c)) {
                rep.fail("n=" + std::to_string(n) + ": spectrum of the reconstruction differs");
            }
        }
        rep.detail += "n=" + std::to_string(n) + ": " + std::to_string(tilings.size()) +
                      " tilings vs " + std::to_string(collections.size()) + " collections\n";
    }
    return rep;
}

/// The direct order on every largest collection is a lattice with the empty
/// set and the full set as its extremes.
inline TheoremReport check_theorem_4_1(int n_max) {
    TheoremReport rep;
    rep.theorem = "4.1";
    rep.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        const auto cs = enumerate_maximal(n);
        for (const auto& c : cs) {
            ++rep.checked;
            const FinitePoset p = order_star(c);
            const auto mins = p.minimal_elements();
            const auto maxs = p.maximal_elements();
            if (!is_lattice(p)) {
                rep.fail("n=" + std::to_string(n) + ": a largest collection is not a lattice");
            } else if (mins.size() != 1 || !(p.labels[static_cast<std::size_t>(mins[0])].is_empty())) {
                rep.fail("n=" + std::to_string(n) + ": minimum is not the empty set");
            } else if (maxs.size() != 1 ||
                       !(p.labels[static_cast<std::size_t>(maxs[0])] == Subset::full_set(n))) {
                rep.fail("n=" + std::to_string(n) + ": maximum is not the full set");
            }
        }
        rep.detail += "n=" + std::to_string(n) + ": " + std::to_string(cs.size()) + " lattices\n";
    }
    return rep;
}

/// The auxiliary-graph order equals the direct order on every tiling.
inline TheoremReport check_theorem_6_1(int n_max) {
    TheoremReport rep;
    rep.theorem = "6.1";
    rep.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        const auto tilings = enumerate_gtilings(n);
        for (const auto& t : tilings) {
            ++rep.checked;
            if (!posets_equal(t)) {
                rep.fail("n=" + std::to_string(n) + ": graph order differs from the direct order");
            }
        }
        rep.detail += "n=" + std::to_string(n) + ": " + std::to_string(tilings.size()) + " tilings\n";
    }
    return rep;
}

/// The five equivalent conditions agree on every ordered pair of distinct
/// permutations.
inline TheoremReport check_theorem_7_1(int n_max, int jobs = 1) {
    TheoremReport rep;
    rep.theorem = "7.1";
    rep.n_max = n_max;
    for (int n = 2; n <= n_max; ++n) {
        const auto perms = all_permutations(n);
        const auto lines = detail::indexed_sweep(perms.size(), jobs, [&](std::size_t a) {
            for (std::size_t b = 0; b < perms.size(); ++b) {
                if (a == b) continue;
                try {
                    theorem_equiv_check(perms[a], perms[b]);
                } catch (const std::logic_error&) {
                    return perms[a].str() + " vs " + perms[b].str();
                }
            }
            return std::string{};
        });
        for (const auto& line : lines) {
            rep.checked += static_cast<long long>(perms.size()) - 1;
            if (!line.empty()) rep.fail("n=" + std::to_string(n) + ": disagreement at " + line);
        }
        rep.detail += "n=" + std::to_string(n) + ": " +
                      std::to_string(perms.size() * (perms.size() - 1)) + " ordered pairs\n";
    }
    return rep;
}

}  // namespace zw
