#pragma once

// Ground set [n], machine-word subsets, permutations, and the two binary
// relations ("below" and "splits") that weak separation is built from.
// Everything here is a pure function over immutable values; elements are
// 1-based in every external form.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zw {

inline constexpr int kMaxGround = 64;

inline void check_ground(int n) {
    if (n < 1 || n > kMaxGround) {
        throw std::invalid_argument("ground size must be in [1,64], got " + std::to_string(n));
    }
}

/// A subset of [n] stored as one machine word; bit k-1 encodes element k.
struct Subset {
    std::uint64_t bits = 0;
    int n = 0;

    static Subset empty_set(int ground) {
        check_ground(ground);
        return Subset{0, ground};
    }

    static Subset full_set(int ground) {
        check_ground(ground);
        return Subset{mask(ground), ground};
    }

    static Subset from_bits(int ground, std::uint64_t raw) {
        check_ground(ground);
        if ((raw & ~mask(ground)) != 0) {
            throw std::out_of_range("subset has elements above the ground size");
        }
        return Subset{raw, ground};
    }

    static Subset of(int ground, std::initializer_list<int> elems) {
        Subset s = empty_set(ground);
        for (int e : elems) s = s.with(e);
        return s;
    }

    static Subset from_elements(int ground, const std::vector<int>& elems) {
        Subset s = empty_set(ground);
        for (int e : elems) s = s.with(e);
        return s;
    }

    /// Interval [lo..hi]; empty when lo > hi.
    static Subset interval(int ground, int lo, int hi) {
        Subset s = empty_set(ground);
        for (int e = lo; e <= hi; ++e) s = s.with(e);
        return s;
    }

    static std::uint64_t mask(int ground) {
        return (ground >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << ground) - 1);
    }

    bool contains(int e) const { return e >= 1 && e <= n && ((bits >> (e - 1)) & 1u) != 0; }

    Subset with(int e) const {
        check_element(e);
        return Subset{bits | (std::uint64_t{1} << (e - 1)), n};
    }

    Subset without(int e) const {
        check_element(e);
        return Subset{bits & ~(std::uint64_t{1} << (e - 1)), n};
    }

    int count() const { return std::popcount(bits); }
    bool is_empty() const { return bits == 0; }

    int min_element() const {
        if (is_empty()) throw std::domain_error("min_element of empty subset");
        return std::countr_zero(bits) + 1;
    }

    int max_element() const {
        if (is_empty()) throw std::domain_error("max_element of empty subset");
        return std::bit_width(bits);
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::uint64_t w = bits; w != 0; w &= w - 1) {
            out.push_back(std::countr_zero(w) + 1);
        }
        return out;
    }

    Subset complement() const { return Subset{~bits & mask(n), n}; }

    bool subset_of(const Subset& other) const {
        check_same_ground(*this, other);
        return (bits & ~other.bits) == 0;
    }

    friend Subset operator&(const Subset& a, const Subset& b) {
        check_same_ground(a, b);
        return Subset{a.bits & b.bits, a.n};
    }
    friend Subset operator|(const Subset& a, const Subset& b) {
        check_same_ground(a, b);
        return Subset{a.bits | b.bits, a.n};
    }
    friend Subset operator-(const Subset& a, const Subset& b) {
        check_same_ground(a, b);
        return Subset{a.bits & ~b.bits, a.n};
    }
    friend Subset operator^(const Subset& a, const Subset& b) {
        check_same_ground(a, b);
        return Subset{a.bits ^ b.bits, a.n};
    }

    friend bool operator==(const Subset& a, const Subset& b) { return a.n == b.n && a.bits == b.bits; }
    friend bool operator!=(const Subset& a, const Subset& b) { return !(a == b); }

    /// "{1,3}" / "{}" form, used in witnesses and error messages.
    std::string str() const {
        std::string out = "{";
        bool first = true;
        for (int e : elements()) {
            if (!first) out += ",";
            out += std::to_string(e);
            first = false;
        }
        out += "}";
        return out;
    }

    static void check_same_ground(const Subset& a, const Subset& b) {
        if (a.n != b.n) {
            throw std::invalid_argument("mismatched ground sizes: " + std::to_string(a.n) + " vs " +
                                        std::to_string(b.n));
        }
    }

   private:
    void check_element(int e) const {
        if (e < 1 || e > n) {
            throw std::out_of_range("element " + std::to_string(e) + " outside [1," + std::to_string(n) + "]");
        }
    }
};

/// Canonical order on subsets: by cardinality, then lexicographically on the
/// sorted element tuples. Serialized collections always use it.
inline bool canonical_less(const Subset& a, const Subset& b) {
    Subset::check_same_ground(a, b);
    const int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    if (a.bits == b.bits) return false;
    // Same size: the set owning the smallest differing element comes first.
    const std::uint64_t diff = a.bits ^ b.bits;
    const std::uint64_t low = diff & (~diff + 1);
    return (a.bits & low) != 0;
}

struct CanonicalLess {
    bool operator()(const Subset& a, const Subset& b) const { return canonical_less(a, b); }
};

// ---------------------------------------------------------------------------
// Relations (1)(i)-(ii) and weak/strong separation
// ---------------------------------------------------------------------------

/// a "below" b: b-a nonempty and every element of a-b precedes every element
/// of b-a. A proper subset is below its superset; a set is not below itself.
inline bool lessdot(const Subset& a, const Subset& b) {
    Subset::check_same_ground(a, b);
    const Subset bma = b - a;
    if (bma.is_empty()) return false;
    const Subset amb = a - b;
    if (amb.is_empty()) return true;
    return amb.max_element() < bma.min_element();
}

/// a "splits" b: a-b and b-a nonempty, and b-a breaks into a lower block
/// strictly below a-b and an upper block strictly above it, both nonempty.
inline bool splits(const Subset& a, const Subset& b) {
    Subset::check_same_ground(a, b);
    const Subset amb = a - b;
    const Subset bma = b - a;
    if (amb.is_empty() || bma.is_empty()) return false;
    const int lo = amb.min_element();
    const int hi = amb.max_element();
    std::uint64_t below = 0, above = 0;
    if (lo > 1) below = bma.bits & (Subset::mask(lo - 1));
    above = bma.bits & ~Subset::mask(hi);
    if (below == 0 || above == 0) return false;
    return (below | above) == bma.bits;
}

inline bool weakly_separated(const Subset& a, const Subset& b) {
    Subset::check_same_ground(a, b);
    if (a == b) return true;
    if (lessdot(a, b) || lessdot(b, a)) return true;
    if (splits(a, b) && a.count() >= b.count()) return true;
    if (splits(b, a) && b.count() >= a.count()) return true;
    return false;
}

inline bool strongly_separated(const Subset& a, const Subset& b) {
    Subset::check_same_ground(a, b);
    return a == b || lessdot(a, b) || lessdot(b, a);
}

// ---------------------------------------------------------------------------
// Permutations
// ---------------------------------------------------------------------------

/// Permutation of [n] in one-line notation: images[i-1] = w(i).
struct Permutation {
    std::vector<int> images;

    Permutation() = default;

    explicit Permutation(std::vector<int> one_line) : images(std::move(one_line)) {
        const int m = static_cast<int>(images.size());
        check_ground(m);
        std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
        for (int v : images) {
            if (v < 1 || v > m || seen[static_cast<std::size_t>(v)]) {
                throw std::invalid_argument("one-line array is not a permutation of [n]");
            }
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    static Permutation identity(int n) {
        check_ground(n);
        std::vector<int> img(static_cast<std::size_t>(n));
        std::iota(img.begin(), img.end(), 1);
        return Permutation(std::move(img));
    }

    /// The longest permutation i -> n-i+1.
    static Permutation longest(int n) {
        check_ground(n);
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>(i - 1)] = n - i + 1;
        return Permutation(std::move(img));
    }

    int n() const { return static_cast<int>(images.size()); }

    int operator()(int i) const {
        if (i < 1 || i > n()) throw std::out_of_range("permutation applied outside [1,n]");
        return images[static_cast<std::size_t>(i - 1)];
    }

    Permutation inverse() const {
        std::vector<int> inv(images.size());
        for (int i = 1; i <= n(); ++i) inv[static_cast<std::size_t>((*this)(i)-1)] = i;
        return Permutation(std::move(inv));
    }

    /// Composition (p*q)(x) = p(q(x)).
    friend Permutation operator*(const Permutation& p, const Permutation& q) {
        if (p.n() != q.n()) throw std::invalid_argument("mismatched permutation sizes");
        std::vector<int> img(p.images.size());
        for (int x = 1; x <= p.n(); ++x) img[static_cast<std::size_t>(x - 1)] = p(q(x));
        return Permutation(std::move(img));
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.images == b.images; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

    std::string str() const {
        std::string out;
        for (std::size_t k = 0; k < images.size(); ++k) {
            if (k) out += ",";
            out += std::to_string(images[k]);
        }
        return out;
    }
};

struct InversionSet {
    std::vector<std::pair<int, int>> pairs;  // (i,j) with i<j, sorted
};

inline InversionSet inversions(const Permutation& w) {
    InversionSet inv;
    for (int i = 1; i <= w.n(); ++i) {
        for (int j = i + 1; j <= w.n(); ++j) {
            if (w(j) < w(i)) inv.pairs.emplace_back(i, j);
        }
    }
    return inv;
}

inline int length(const Permutation& w) { return static_cast<int>(inversions(w).pairs.size()); }

/// k-th ideal: positions mapped into {1..k}; the 0-th ideal is empty.
inline Subset ideal(const Permutation& w, int k) {
    if (k < 0 || k > w.n()) throw std::out_of_range("ideal index outside [0,n]");
    Subset s = Subset::empty_set(w.n());
    for (int i = 1; i <= w.n(); ++i) {
        if (w(i) <= k) s = s.with(i);
    }
    return s;
}

/// All ideals, indexed 0..n.
inline std::vector<Subset> ideals(const Permutation& w) {
    std::vector<Subset> out;
    out.reserve(static_cast<std::size_t>(w.n()) + 1);
    for (int k = 0; k <= w.n(); ++k) out.push_back(ideal(w, k));
    return out;
}

/// The canonical checker collection of w: all sets ideal(w,k) ∩ [j..n] with
/// 1 <= j <= w^{-1}(k), deduplicated, with the empty set always present.
/// Returned in canonical order.
inline std::vector<Subset> checker_sets(const Permutation& w) {
    const int n = w.n();
    const Permutation winv = w.inverse();
    std::vector<Subset> out;
    out.push_back(Subset::empty_set(n));
    for (int k = 1; k <= n; ++k) {
        const Subset ik = ideal(w, k);
        for (int j = 1; j <= winv(k); ++j) {
            out.push_back(ik & Subset::interval(n, j, n));
        }
    }
    std::sort(out.begin(), out.end(), CanonicalLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Left-closure condition: every i in x drags in all j < i with w(j) < w(i).
inline bool is_chamber_set(const Subset& x, const Permutation& w) {
    if (x.n != w.n()) throw std::invalid_argument("subset and permutation grounds differ");
    for (int i : x.elements()) {
        for (int j = 1; j < i; ++j) {
            if (w(j) < w(i) && !x.contains(j)) return false;
        }
    }
    return true;
}

/// Mirror closure: every i in x drags in all j > i with w(j) < w(i).
inline bool is_right_set(const Subset& x, const Permutation& w) {
    if (x.n != w.n()) throw std::invalid_argument("subset and permutation grounds differ");
    for (int i : x.elements()) {
        for (int j = i + 1; j <= w.n(); ++j) {
            if (w(j) < w(i) && !x.contains(j)) return false;
        }
    }
    return true;
}

/// Weak Bruhat comparison by inversion-set containment (reflexive form).
inline bool weak_bruhat_leq(const Permutation& wp, const Permutation& w) {
    if (wp.n() != w.n()) throw std::invalid_argument("mismatched permutation sizes");
    const auto a = inversions(wp).pairs;
    const auto b = inversions(w).pairs;
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Strict form: containment and wp != w.
inline bool weak_bruhat_less(const Permutation& wp, const Permutation& w) {
    return wp != w && weak_bruhat_leq(wp, w);
}

/// Ideal condition: every ideal of wp is below or contains every ideal of w.
inline bool cond_ideals(const Permutation& wp, const Permutation& w) {
    if (wp.n() != w.n()) throw std::invalid_argument("mismatched permutation sizes");
    const auto ip = ideals(wp);
    const auto iw = ideals(w);
    for (int i = 1; i <= wp.n(); ++i) {
        for (int j = 1; j <= w.n(); ++j) {
            if (!lessdot(ip[static_cast<std::size_t>(i)], iw[static_cast<std::size_t>(j)]) &&
                !iw[static_cast<std::size_t>(j)].subset_of(ip[static_cast<std::size_t>(i)])) {
                return false;
            }
        }
    }
    return true;
}

/// Enumerates all n! permutations of [n] in lexicographic one-line order.
inline std::vector<Permutation> all_permutations(int n) {
    check_ground(n);
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace zw
