// index_space.hpp
//
// Index vectors t in {e,c}^k, the index space T(k), Venn regions of a cover,
// and the two group actions used by the symmetry machinery.
//
// An ordered k-cover A = (A_1,...,A_k) of {1..n} carves the ground set into
// 2^k disjoint regions, one per index vector t: coordinate t_i = c means
// "inside A_i", t_i = e means "outside A_i". The two constant vectors are
// special (all-e must be empty for a cover, all-c is the common core), so
// the working index space is
//
//   T(k) = {e,c}^k minus {all-e, all-c},   |T(k)| = 2^k - 2.
//
// Wire conventions, used consistently everywhere:
//  * mask bit i-1 set  <=>  t_i = c  (so all-zero mask = all-e).
//  * canonical order of T(k): ascending number of c's, ties by ascending
//    mask. For k=3 this yields (c,e,e),(e,c,e),(e,e,c),(c,c,e),(c,e,c),(e,c,c).
//  * string form over {e,c}, leftmost character = coordinate 1, e.g. "ceec".
//
// k is capped at 16 so labelings over T(k) (2^k - 2 bits) stay bounded; the
// counting pipeline is practical only to about k = 6 anyway.

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "covercount/errors.hpp"

namespace covercount {

inline constexpr int kMaxK = 16;

// One index vector t in {e,c}^k.
struct IndexVector {
    int k = 0;
    std::uint32_t mask = 0; // bit i-1 = 1 <=> t_i = c

    IndexVector() = default;
    IndexVector(int k_, std::uint32_t mask_) : k(k_), mask(mask_) {
        if (k < 1 || k > kMaxK)
            throw argument_error("IndexVector: k outside 1..16");
        if (mask >= (std::uint32_t(1) << k))
            throw argument_error("IndexVector: mask has bits beyond k");
    }

    bool is_c(int i) const { return (mask >> (i - 1)) & 1u; } // i is 1-based
    int c_count() const { return std::popcount(mask); }

    bool operator==(const IndexVector&) const = default;

    // "ceec"-style rendering, leftmost character = coordinate 1.
    std::string to_string() const {
        std::string s(static_cast<std::size_t>(k), 'e');
        for (int i = 1; i <= k; ++i)
            if (is_c(i)) s[static_cast<std::size_t>(i - 1)] = 'c';
        return s;
    }

    static IndexVector parse(std::string_view s) {
        if (s.empty() || s.size() > static_cast<std::size_t>(kMaxK))
            throw argument_error("IndexVector::parse: length outside 1..16");
        std::uint32_t m = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == 'c')
                m |= std::uint32_t(1) << i;
            else if (s[i] != 'e')
                throw argument_error(
                    "IndexVector::parse: characters must be 'e' or 'c'");
        }
        return IndexVector(static_cast<int>(s.size()), m);
    }
};

// Canonical comparison: ascending c-count, ties by ascending mask.
inline bool canonical_less(const IndexVector& a, const IndexVector& b) {
    const int ca = a.c_count(), cb = b.c_count();
    if (ca != cb) return ca < cb;
    return a.mask < b.mask;
}

// T(k) in canonical order. Empty for k = 1 ({e,c}^1 is just {e, c}).
inline std::vector<IndexVector> full_index_space(int k) {
    if (k < 1 || k > kMaxK)
        throw argument_error("full_index_space: k outside 1..16");
    std::vector<IndexVector> ts;
    ts.reserve((std::size_t(1) << k) - 2);
    const std::uint32_t all = (std::uint32_t(1) << k) - 1;
    for (int weight = 1; weight < k; ++weight)
        for (std::uint32_t m = 1; m < all; ++m)
            if (std::popcount(m) == weight) ts.emplace_back(k, m);
    return ts;
}

// Position of mask within the canonical order of T(k), or -1 for the two
// constant vectors. Cheap enough to compute directly for the sizes in play.
inline int canonical_index(int k, std::uint32_t mask) {
    const std::uint32_t all = (std::uint32_t(1) << k) - 1;
    if (mask == 0 || mask == all) return -1;
    // Predecessors in canonical order: every mask of smaller weight, plus
    // same-weight masks of smaller value.
    int idx = 0;
    const int w = std::popcount(mask);
    for (std::uint32_t m = 1; m < all; ++m) {
        const int wm = std::popcount(m);
        if (wm < w || (wm == w && m < mask)) ++idx;
    }
    return idx;
}

// A permutation of {1..k} in one-line notation: perm[i-1] = pi(i).
using Permutation = std::vector<int>;

inline void validate_permutation(const Permutation& pi, int k) {
    if (static_cast<int>(pi.size()) != k)
        throw argument_error("permutation: wrong length");
    std::uint32_t seen = 0;
    for (int v : pi) {
        if (v < 1 || v > k) throw argument_error("permutation: entry outside 1..k");
        seen |= std::uint32_t(1) << (v - 1);
    }
    if (seen != (std::uint32_t(1) << k) - 1)
        throw argument_error("permutation: not a bijection");
}

// Coordinate relabeling (t o pi)_i = t_{pi(i)}. Membership in T(k) is
// preserved (the c-count is invariant).
inline IndexVector apply_permutation(const IndexVector& t, const Permutation& pi) {
    validate_permutation(pi, t.k);
    std::uint32_t m = 0;
    for (int i = 1; i <= t.k; ++i)
        if (t.is_c(pi[static_cast<std::size_t>(i - 1)]))
            m |= std::uint32_t(1) << (i - 1);
    return IndexVector(t.k, m);
}

// The complement action: identity, or the coordinatewise flip e <-> c.
enum class Complement { identity, swap };

inline IndexVector apply_complement(Complement alpha, const IndexVector& t) {
    if (alpha == Complement::identity) return t;
    const std::uint32_t all = (std::uint32_t(1) << t.k) - 1;
    return IndexVector(t.k, t.mask ^ all);
}

// An ordered k-tuple of subsets of {1..n}, each stored as an n-bit mask
// (bit e-1 = element e). Validation as a constructive cover is separate so
// arbitrary tuples can be built and inspected.
struct Cover {
    int n = 0;
    int k = 0;
    std::vector<std::uint32_t> sets; // size k, masks within n bits

    Cover() = default;
    Cover(int n_, std::vector<std::uint32_t> sets_)
        : n(n_), k(static_cast<int>(sets_.size())), sets(std::move(sets_)) {
        if (n < 1 || n > 31) throw argument_error("Cover: n outside 1..31");
        const std::uint32_t uni = universe();
        for (std::uint32_t s : sets)
            if (s & ~uni) throw argument_error("Cover: set has elements beyond n");
    }

    std::uint32_t universe() const { return (std::uint32_t(1) << n) - 1; }
    bool operator==(const Cover&) const = default;
};

// Core constructiveness test on raw masks: full union and every pairwise
// difference nonempty (which also forces the sets to be pairwise distinct
// and k >= 1). For k = 1 the condition degenerates to A_1 = {1..n}.
inline bool is_constructive_masks(const std::vector<std::uint32_t>& sets, int n) {
    if (n < 1 || n > 31 || sets.empty()) return false;
    const std::uint32_t uni = (std::uint32_t(1) << n) - 1;
    std::uint32_t un = 0;
    for (std::uint32_t s : sets) un |= s;
    if (un != uni) return false;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = 0; j < sets.size(); ++j)
            if (i != j && (sets[i] & ~sets[j]) == 0) return false;
    return true;
}

inline bool is_constructive(const Cover& cover) {
    return is_constructive_masks(cover.sets, cover.n);
}

// The region B_t(A) = (intersection of A_i with t_i = c) minus (union of A_i
// with t_i = e), as an n-bit mask. Over all 2^k index vectors the regions
// partition {1..n}.
inline std::uint32_t region_of(const Cover& cover, const IndexVector& t) {
    if (cover.k != t.k)
        throw argument_error("region_of: cover and index vector disagree on k");
    std::uint32_t region = cover.universe();
    for (int i = 1; i <= t.k; ++i) {
        const std::uint32_t a = cover.sets[static_cast<std::size_t>(i - 1)];
        region &= t.is_c(i) ? a : ~a;
    }
    return region & cover.universe();
}

} // namespace covercount
