// Acceptance suite: one line per criterion, exact expectations, exit 1 on
// any failure. ZONOWEAVE_SEED offsets the seeds of the randomized criteria.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>

#include "zonoweave/auxgraph.hpp"
#include "zonoweave/bruhat.hpp"
#include "zonoweave/theorems.hpp"

using namespace zw;

namespace {

int failures = 0;

template <typename F>
void criterion(int number, const std::string& title, F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    try {
        ok = body(why);
    } catch (const std::exception& e) {
        why = e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << title << " (" << ms
              << " ms)";
    if (!ok) {
        std::cout << " -- " << why;
        ++failures;
    }
    std::cout << "\n" << std::flush;
}

std::uint64_t base_seed() {
    const char* s = std::getenv("ZONOWEAVE_SEED");
    return s ? std::strtoull(s, nullptr, 10) : 0;
}

/// The per-tiling structural battery of criterion 9.
bool structure_ok(const GTiling& t, std::string& why) {
    if (!verify(t).ok()) {
        why = "verification failed";
        return false;
    }
    const TilingGraph g = build_graph(t);
    for (int label = 1; label <= t.n; ++label) {
        const Strip s = strip_of(t, label);
        std::set<Edge> covered(s.label_edges.begin(), s.label_edges.end());
        for (const auto& [e, tl] : g.edge_tiles) {
            if ((!tl.empty() || t.n == 1) && e.label == label && !covered.count(e)) {
                why = "strip " + std::to_string(label) + " misses edge " + e.str();
                return false;
            }
        }
        std::set<std::uint64_t> rs, ls;
        for (std::size_t k = 0; k < s.right_vertices.size(); ++k) {
            if (!(s.right_vertices[k].with(label) == s.left_vertices[k])) {
                why = "strip boundary shift broken at label " + std::to_string(label);
                return false;
            }
            rs.insert(s.right_vertices[k].bits);
            ls.insert(s.left_vertices[k].bits);
        }
        if (rs.size() != s.right_vertices.size() || ls.size() != s.left_vertices.size()) {
            why = "strip boundary not simple at label " + std::to_string(label);
            return false;
        }
        for (auto b : rs) {
            if (ls.count(b)) {
                why = "strip boundaries intersect at label " + std::to_string(label);
                return false;
            }
        }
    }
    if (t.n >= 2) {
        const GTiling down = contract(t, t.n);
        const LegalPath p = contraction_path(t);
        if (!(expand(down, p) == t)) {
            why = "high-side contract/expand round trip failed";
            return false;
        }
        const GTiling down1 = contract(t, 1);
        const LegalPath p1 = mirror_path(contraction_path(mirror(t)));
        if (!(expand(down1, p1) == t)) {
            why = "low-side contract/expand round trip failed";
            return false;
        }
    }
    for (int h = 1; h <= t.n; ++h) {
        const auto f = principal_forest(t, h);
        if (!f.ok()) {
            why = "principal forest at level " + std::to_string(h) + ": " + f.issue;
            return false;
        }
    }
    const auto edges = edge_existence_checks(t);
    if (!edges.ok) {
        why = edges.witness;
        return false;
    }
    const auto fans = local_fans(t);
    if (!fans.ok) {
        why = fans.witness;
        return false;
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "every maximal ws-collection over [n] has n(n+1)/2+1 members, n = 1..5", [](std::string& why) {
        const int want[] = {2, 4, 7, 11, 16};
        for (int n = 1; n <= 5; ++n) {
            if (largest_size(n) != want[n - 1]) {
                why = "size formula drifted";
                return false;
            }
            for (const auto& c : enumerate_maximal(n)) {
                if (c.size() != want[n - 1]) {
                    why = "n=" + std::to_string(n) + ": found size " + std::to_string(c.size());
                    return false;
                }
            }
        }
        return true;
    });

    criterion(2, "every maximal chamber collection has length(w)+n+1 members, n = 1..5, all permutations",
              [](std::string& why) {
                  const auto rep = check_theorem_A(5, 4);
                  why = rep.counterexample;
                  return rep.pass;
              });

    criterion(3,
              "strict Bruhat pairs, n = 1..4: maximal left-right collections have the gap size and are "
              "exactly the region tiling spectra",
              [](std::string& why) {
                  const auto rep = check_theorem_A_prime(4);
                  why = rep.counterexample;
                  return rep.pass;
              });

    criterion(4, "tiling spectra = maximal collections and reconstruction inverts spectrum, n <= 4",
              [](std::string& why) {
                  const auto rep = check_theorem_3_1(4);
                  why = rep.counterexample;
                  return rep.pass;
              });

    criterion(5, "outside the checker, weak separation from it is chamberness, n <= 5, all permutations",
              [](std::string& why) {
                  const auto rep = check_theorem_2_1(5, 4);
                  why = rep.counterexample;
                  return rep.pass;
              });

    criterion(6, "graph order equals direct order and both are lattices with full range, n <= 4",
              [](std::string& why) {
                  for (int n = 1; n <= 4; ++n) {
                      for (const auto& t : enumerate_gtilings(n)) {
                          if (!posets_equal(t)) {
                              why = "n=" + std::to_string(n) + ": orders differ";
                              return false;
                          }
                          const FinitePoset p = order_star(spectrum(t));
                          const auto mins = p.minimal_elements();
                          const auto maxs = p.maximal_elements();
                          if (!is_lattice(p) || mins.size() != 1 || maxs.size() != 1 ||
                              !p.labels[static_cast<std::size_t>(mins[0])].is_empty() ||
                              !(p.labels[static_cast<std::size_t>(maxs[0])] == Subset::full_set(n))) {
                              why = "n=" + std::to_string(n) + ": lattice structure broken";
                              return false;
                          }
                      }
                  }
                  return true;
              });

    criterion(7, "the five equivalent conditions agree on every ordered pair of distinct permutations, n <= 4",
              [](std::string& why) {
                  const auto rep = check_theorem_7_1(4, 4);
                  why = rep.counterexample;
                  return rep.pass;
              });

    criterion(8, "regression: the reference one-black-tile spectrum and the 31524 checker",
              [](std::string& why) {
                  const WsCollection reference_spec = WsCollection::from(
                      4, {Subset::of(4, {}), Subset::of(4, {1}), Subset::of(4, {4}), Subset::of(4, {1, 2}),
                          Subset::of(4, {1, 4}), Subset::of(4, {2, 3}), Subset::of(4, {2, 4}),
                          Subset::of(4, {3, 4}), Subset::of(4, {1, 2, 3}), Subset::of(4, {2, 3, 4}),
                          Subset::full_set(4)});
                  const GTiling t = tiling_from_spectrum(reference_spec);
                  if (!verify(t).ok()) {
                      why = "reconstruction does not verify";
                      return false;
                  }
                  std::vector<Tile> blacks;
                  for (const auto& tile : t.tiles) {
                      if (tile.black) blacks.push_back(tile);
                  }
                  if (blacks.size() != 1 || !(blacks[0].base == Subset::of(4, {2})) || blacks[0].i != 1 ||
                      blacks[0].j != 4) {
                      why = "black tile differs from tile({2};1,4)";
                      return false;
                  }
                  const TilingGraph g = build_graph(t);
                  if (!g.is_terminal(Subset::of(4, {2})) || !g.is_terminal(Subset::of(4, {1, 2, 4}))) {
                      why = "terminals differ from {2} and {1,2,4}";
                      return false;
                  }
                  if (!(spectrum(t) == reference_spec)) {
                      why = "spectrum does not round-trip";
                      return false;
                  }
                  const Permutation w({3, 1, 5, 2, 4});
                  const auto rt = strip_from_above(w, Permutation::longest(5));
                  if (!(region_spectrum(rt) == checker(w))) {
                      why = "checker(31524) differs from the standard tiling spectrum";
                      return false;
                  }
                  return true;
              });

    criterion(9, "structural battery on every tiling n <= 4 and 50 reconstructed spectra at n = 6",
              [](std::string& why) {
                  for (int n = 1; n <= 4; ++n) {
                      for (const auto& t : enumerate_gtilings(n)) {
                          if (!structure_ok(t, why)) {
                              why = "n=" + std::to_string(n) + ": " + why;
                              return false;
                          }
                      }
                  }
                  const std::uint64_t base = base_seed();
                  for (std::uint64_t k = 0; k < 50; ++k) {
                      const auto c = greedy_complete(WsCollection::empty(6), shuffled_subsets(6, base + k));
                      const GTiling t = tiling_from_spectrum(c);
                      if (!(spectrum(t) == c)) {
                          why = "n=6 seed " + std::to_string(base + k) + ": reconstruction spectrum differs";
                          return false;
                      }
                      if (!structure_ok(t, why)) {
                          why = "n=6 seed " + std::to_string(base + k) + ": " + why;
                          return false;
                      }
                  }
                  return true;
              });

    criterion(10, "100 seeded random greedy completions reach the largest size, n = 3..5",
              [](std::string& why) {
                  const std::uint64_t base = base_seed();
                  for (int n = 3; n <= 5; ++n) {
                      for (std::uint64_t k = 0; k < 100; ++k) {
                          const auto done =
                              greedy_complete(WsCollection::empty(n), shuffled_subsets(n, base + k));
                          if (done.size() != largest_size(n) || !validate(done)) {
                              why = "n=" + std::to_string(n) + " seed " + std::to_string(base + k) +
                                    ": reached " + std::to_string(done.size());
                              return false;
                          }
                      }
                  }
                  return true;
              });

    if (failures != 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
