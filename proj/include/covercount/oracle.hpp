// oracle.hpp
//
// Independent brute-force baselines for the counting pipeline. Everything
// here recomputes definitions from scratch over raw bit masks — no index
// spaces, labelings, or symmetry machinery — so that agreement with the
// optimized path is a meaningful check rather than a tautology.
//
// Conventions (local to this file on purpose):
//  * an index vector over k coordinates is a k-bit mask, bit i-1 = 1 meaning
//    coordinate i is "contained" (c); masks 1 .. 2^k-2 are the non-constant
//    vectors;
//  * a labeling over those 2^k - 2 vectors is a (2^k - 2)-bit word, bit p
//    belonging to vector mask p + 1;
//  * subsets of {1..n} are n-bit masks, bit e-1 = element e.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "covercount/bigint.hpp"
#include "covercount/errors.hpp"

namespace covercount::oracle {

namespace detail {

// Straight-from-the-definition feasibility test: every ordered pair (i, j)
// needs a marked vector with bit i set and bit j clear.
inline bool labeling_feasible_naive(std::uint64_t x, int k) {
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            bool witnessed = false;
            const std::uint32_t top = (std::uint32_t(1) << k) - 1;
            for (std::uint32_t m = 1; m < top && !witnessed; ++m)
                witnessed = ((x >> (m - 1)) & 1u) && ((m >> i) & 1u) &&
                            !((m >> j) & 1u);
            if (!witnessed) return false;
        }
    }
    return true;
}

// Exhaustive scan of all 2^(2^k - 2) labelings with amortized-constant
// updates: walking the words in natural order flips ~2 bits per step, and
// each flip adjusts per-pair witness counters plus a deficit (= number of
// uncovered pairs). Still a full enumeration — no case is skipped — just a
// cheaper per-step test, which is what makes k = 5 (2^30 words) tractable.
inline std::map<int, std::uint64_t> labelings_by_weight_scan(int k) {
    const int nbits = static_cast<int>((std::uint32_t(1) << k) - 2);
    // pairs_of[p]: the ordered pairs witnessed by vector mask p+1, packed as
    // i * k + j.
    std::vector<std::vector<int>> pairs_of(static_cast<std::size_t>(nbits));
    for (int p = 0; p < nbits; ++p) {
        const std::uint32_t m = static_cast<std::uint32_t>(p) + 1;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (i != j && ((m >> i) & 1u) && !((m >> j) & 1u))
                    pairs_of[static_cast<std::size_t>(p)].push_back(i * k + j);
    }
    std::vector<int> witness(static_cast<std::size_t>(k) * k, 0);
    int deficit = k * (k - 1); // pairs with no witness yet
    int weight = 0;
    // Flat per-weight counters; most vectors at k = 5 are feasible, so the
    // increment sits on the hot path.
    std::vector<std::uint64_t> tally(static_cast<std::size_t>(nbits) + 1, 0);

    auto flip = [&](int p, bool now_set) {
        for (int pair : pairs_of[static_cast<std::size_t>(p)]) {
            int& w = witness[static_cast<std::size_t>(pair)];
            if (now_set) {
                if (w++ == 0) --deficit;
            } else {
                if (--w == 0) ++deficit;
            }
        }
        weight += now_set ? 1 : -1;
    };

    const std::uint64_t total = std::uint64_t(1) << nbits;
    for (std::uint64_t x = 0;; ++x) {
        if (deficit == 0) ++tally[static_cast<std::size_t>(weight)];
        if (x + 1 == total) break;
        // Increment x: trailing ones drop to zero, the next bit rises.
        const int rise = std::countr_one(x);
        for (int p = 0; p < rise; ++p) flip(p, false);
        flip(rise, true);
    }
    std::map<int, std::uint64_t> result;
    for (int w = 0; w <= nbits; ++w)
        if (tally[static_cast<std::size_t>(w)] != 0)
            result[w] = tally[static_cast<std::size_t>(w)];
    return result;
}

} // namespace detail

// Per-weight counts of feasible labelings, by exhausting all 2^(2^k - 2)
// bit vectors. k = 5 means 2^30 vectors (minutes); larger k is refused.
inline std::map<int, std::uint64_t> brute_force_labelings(int k) {
    if (k < 1) throw argument_error("brute_force_labelings: k must be >= 1");
    if (k > 5)
        throw resource_error("brute_force_labelings: k > 5 exceeds the "
                             "2^30-vector brute-force cap");
    if (k == 1) return {{0, 1}}; // the empty labeling, vacuously feasible
    if (k == 5) return detail::labelings_by_weight_scan(k);
    const int nbits = static_cast<int>((std::uint32_t(1) << k) - 2);
    std::map<int, std::uint64_t> tally;
    for (std::uint64_t x = 0; x < (std::uint64_t(1) << nbits); ++x)
        if (detail::labeling_feasible_naive(x, k))
            ++tally[std::popcount(x)];
    return tally;
}

// Count ordered k-tuples of subsets of {1..n} with full union and every
// pairwise difference nonempty, by walking all (2^n)^k tuples.
inline Int brute_force_covers(int n, int k) {
    if (n < 1 || k < 1)
        throw argument_error("brute_force_covers: n and k must be >= 1");
    if (static_cast<long long>(n) * k > 24)
        throw resource_error(
            "brute_force_covers: (2^n)^k exceeds the 2^24-tuple cap");
    const std::uint32_t subsets = std::uint32_t(1) << n;
    const std::uint32_t full = subsets - 1;
    std::vector<std::uint32_t> tuple(static_cast<std::size_t>(k), 0);
    Int count = 0;
    for (;;) {
        std::uint32_t un = 0;
        for (std::uint32_t s : tuple) un |= s;
        if (un == full) {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i)
                for (int j = 0; j < k && ok; ++j)
                    if (i != j &&
                        (tuple[static_cast<std::size_t>(i)] &
                         ~tuple[static_cast<std::size_t>(j)]) == 0)
                        ok = false;
            if (ok) ++count;
        }
        // Odometer step over the k-digit base-2^n counter.
        int pos = 0;
        while (pos < k && ++tuple[static_cast<std::size_t>(pos)] == subsets) {
            tuple[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == k) break;
    }
    return count;
}

// All inclusion-minimal subsets of {1..n} meeting every member of `family`,
// by scanning all 2^n candidates. A hitting set S is minimal iff dropping
// any single element leaves some member unmet. Results sorted by size, then
// by mask value.
inline std::vector<std::uint32_t>
brute_force_hitting_sets(const std::vector<std::uint32_t>& family, int n) {
    if (n < 1) throw argument_error("brute_force_hitting_sets: n must be >= 1");
    if (n > 15)
        throw resource_error(
            "brute_force_hitting_sets: n > 15 exceeds the scan cap");
    const std::uint32_t full = (std::uint32_t(1) << n) - 1;
    for (std::uint32_t member : family)
        if (member & ~full)
            throw argument_error(
                "brute_force_hitting_sets: member has elements beyond n");
    auto hits_all = [&](std::uint32_t s) {
        for (std::uint32_t member : family)
            if ((s & member) == 0) return false;
        return true;
    };
    std::vector<std::uint32_t> minimal;
    for (std::uint32_t s = 0; s <= full; ++s) {
        if (!hits_all(s)) continue;
        bool is_minimal = true;
        for (std::uint32_t rest = s; rest && is_minimal;) {
            const std::uint32_t bit = rest & (~rest + 1);
            if (hits_all(s & ~bit)) is_minimal = false;
            rest &= rest - 1;
        }
        if (is_minimal) minimal.push_back(s);
    }
    std::sort(minimal.begin(), minimal.end(),
              [](std::uint32_t a, std::uint32_t b) {
                  const int pa = std::popcount(a), pb = std::popcount(b);
                  if (pa != pb) return pa < pb;
                  return a < b;
              });
    return minimal;
}

} // namespace covercount::oracle
