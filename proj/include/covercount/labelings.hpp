// labelings.hpp
//
// Labelings over the index space T(k), the pair-coverage feasibility
// predicate, the minimal feasible weight ell0(k), and the two directions of
// the bijection between constructive covers and (block sequence, labeling)
// pairs.
//
// A labeling x assigns one bit per index vector t in T(k) (canonical order),
// recording which Venn regions of a cover are nonempty. x is feasible — it
// can arise from a constructive cover — iff for every ordered pair (i, j),
// i != j, some t with t_i = c and t_j = e has x_t = 1 (that region witnesses
// A_i \ A_j != {}). G(k) is the set of feasible labelings and F(k, l) its
// weight-l slice.
//
// The bijection: a constructive cover A yields (nonempty regions in
// canonical order, labeling_of_cover(A)); conversely reconstruct_cover
// rebuilds A from an ordered sequence of disjoint nonempty blocks plus a
// feasible labeling of matching weight. Composing the two is the identity.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "covercount/errors.hpp"
#include "covercount/index_space.hpp"

namespace covercount {

// Number of coordinates of a labeling for a given k: |T(k)| = 2^k - 2.
inline int labeling_size(int k) {
    if (k < 1 || k > kMaxK)
        throw argument_error("labeling_size: k outside 1..16");
    return static_cast<int>((std::uint32_t(1) << k) - 2);
}

// A 0/1 assignment over T(k), bit index = canonical position of t.
// Immutable in spirit: the mutators exist for construction only.
class Labeling {
public:
    explicit Labeling(int k)
        : k_(k), size_(labeling_size(k)),
          words_(static_cast<std::size_t>((size_ + 63) / 64), 0) {}

    // Characteristic vector of a set of index vectors.
    Labeling(int k, const std::vector<IndexVector>& marked) : Labeling(k) {
        for (const IndexVector& t : marked) {
            if (t.k != k)
                throw argument_error("Labeling: index vector has wrong k");
            const int idx = canonical_index(k, t.mask);
            if (idx < 0)
                throw argument_error("Labeling: constant vector not in T(k)");
            set(idx, true);
        }
    }

    int k() const { return k_; }
    int size() const { return size_; }

    bool test(int idx) const {
        check_index(idx);
        return (words_[static_cast<std::size_t>(idx) / 64] >> (idx % 64)) & 1u;
    }

    void set(int idx, bool value) {
        check_index(idx);
        const std::uint64_t bit = std::uint64_t(1) << (idx % 64);
        if (value)
            words_[static_cast<std::size_t>(idx) / 64] |= bit;
        else
            words_[static_cast<std::size_t>(idx) / 64] &= ~bit;
    }

    int weight() const {
        int w = 0;
        for (std::uint64_t word : words_) w += std::popcount(word);
        return w;
    }

    // Low word of the bit vector; the whole labeling for k <= 6.
    std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

    const std::vector<std::uint64_t>& words() const { return words_; }

    bool operator==(const Labeling&) const = default;

    // 0/1 string in canonical T(k) order, leftmost = first index vector.
    std::string to_string01() const {
        std::string s(static_cast<std::size_t>(size_), '0');
        for (int i = 0; i < size_; ++i)
            if (test(i)) s[static_cast<std::size_t>(i)] = '1';
        return s;
    }

    static Labeling parse01(int k, std::string_view s) {
        Labeling x(k);
        if (static_cast<int>(s.size()) != x.size())
            throw argument_error("Labeling::parse01: wrong length for k");
        for (int i = 0; i < x.size(); ++i) {
            const char ch = s[static_cast<std::size_t>(i)];
            if (ch == '1')
                x.set(i, true);
            else if (ch != '0')
                throw argument_error("Labeling::parse01: characters must be 0/1");
        }
        return x;
    }

private:
    void check_index(int idx) const {
        if (idx < 0 || idx >= size_)
            throw argument_error("Labeling: coordinate index out of range");
    }

    int k_;
    int size_;
    std::vector<std::uint64_t> words_;
};

namespace detail {

// For every ordered pair (i, j), i != j, the set of canonical T(k) positions
// whose vector has t_i = c and t_j = e, packed as one 64-bit mask. Valid for
// k <= 6 (|T(k)| <= 62); these masks drive the fast feasibility tests in the
// enumerator and the oracles. Entry index: (i-1)*k + (j-1); diagonal = 0.
inline std::vector<std::uint64_t> pair_support_masks64(int k) {
    if (k < 2 || k > 6)
        throw argument_error("pair_support_masks64: k outside 2..6");
    const std::vector<IndexVector> ts = full_index_space(k);
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(k) * k, 0);
    for (std::size_t pos = 0; pos < ts.size(); ++pos)
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= k; ++j)
                if (i != j && ts[pos].is_c(i) && !ts[pos].is_c(j))
                    masks[static_cast<std::size_t>(i - 1) * k + (j - 1)] |=
                        std::uint64_t(1) << pos;
    return masks;
}

} // namespace detail

// Membership in G(k): every ordered pair (i, j) has a marked witness region
// with t_i = c, t_j = e.
inline bool satisfies_cover_constraints(const Labeling& x) {
    const int k = x.k();
    if (k == 1) return true; // no pairs to witness
    const std::vector<IndexVector> ts = full_index_space(k);
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            if (i == j) continue;
            bool witnessed = false;
            for (std::size_t pos = 0; pos < ts.size() && !witnessed; ++pos)
                witnessed = x.test(static_cast<int>(pos)) && ts[pos].is_c(i) &&
                            !ts[pos].is_c(j);
            if (!witnessed) return false;
        }
    }
    return true;
}

inline int weight(const Labeling& x) { return x.weight(); }

namespace detail {

// Feasibility of one iterative-deepening level of the ell0 search: is there
// a size-m family S_1..S_k of pairwise-incomparable subsets of {1..m} whose
// union is {1..m} and whose intersection is empty? Such a family is exactly
// the transpose of a feasible T of |T| = m: S_i = rows where coordinate i is
// c, incomparability = pair coverage, and the union/intersection conditions
// rule out all-e / all-c rows. Searching column families instead of subsets
// of T(k) keeps the search space at 2^m - 2 candidates (m <= k) instead of
// binom(2^k - 2, m).
inline bool separating_family_exists(int k, int m) {
    if (m < 1) return false;
    const std::uint32_t full = (std::uint32_t(1) << m) - 1;
    std::vector<std::uint32_t> candidates; // proper nonempty subsets of {1..m}
    for (std::uint32_t s = 1; s < full; ++s) candidates.push_back(s);
    // Middle-sized sets admit the largest antichains, so try them first;
    // ties broken by value for determinism.
    std::sort(candidates.begin(), candidates.end(),
              [m](std::uint32_t a, std::uint32_t b) {
                  const int da = std::abs(2 * std::popcount(a) - m);
                  const int db = std::abs(2 * std::popcount(b) - m);
                  if (da != db) return da < db;
                  return a < b;
              });
    // DFS choosing an antichain along that order, tracking the union and
    // intersection of the chosen sets.
    std::vector<std::uint32_t> chosen;
    auto incomparable = [&](std::uint32_t s) {
        for (std::uint32_t c : chosen)
            if ((c & ~s) == 0 || (s & ~c) == 0) return false;
        return true;
    };
    auto dfs = [&](auto&& self, std::size_t from, std::uint32_t uni,
                   std::uint32_t inter) -> bool {
        if (static_cast<int>(chosen.size()) == k)
            return uni == full && inter == 0;
        if (candidates.size() - from <
            static_cast<std::size_t>(k) - chosen.size())
            return false;
        for (std::size_t c = from; c < candidates.size(); ++c) {
            const std::uint32_t s = candidates[c];
            if (!incomparable(s)) continue;
            chosen.push_back(s);
            if (self(self, c + 1, uni | s,
                     chosen.size() == 1 ? s : (inter & s)))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    return dfs(dfs, 0, 0, full);
}

} // namespace detail

// Minimal weight of a feasible labeling: ell0(k) = min{ l : F(k, l) != {} }.
// Computed by exact iterative-deepening search on the subset size, from the
// counting lower bound ceil(k(k-1) / floor(k^2/4)) (each index vector
// witnesses at most floor(k^2/4) ordered pairs) up to k (the k singleton-c
// vectors are always feasible).
inline int ell0(int k) {
    if (k < 2 || k > kMaxK) throw argument_error("ell0: k outside 2..16");
    const int max_pairs_per_vector = (k * k) / 4;
    const int total_pairs = k * (k - 1);
    int m = (total_pairs + max_pairs_per_vector - 1) / max_pairs_per_vector;
    if (m < 2) m = 2;
    for (; m < k; ++m)
        if (detail::separating_family_exists(k, m)) return m;
    return k;
}

// The labeling of a constructive cover: x_t = 1 iff region B_t(A) != {}.
inline Labeling labeling_of_cover(const Cover& cover) {
    if (!is_constructive(cover))
        throw invalid_cover_error("labeling_of_cover: not a constructive cover");
    Labeling x(cover.k);
    const std::vector<IndexVector> ts = full_index_space(cover.k);
    for (std::size_t pos = 0; pos < ts.size(); ++pos)
        if (region_of(cover, ts[pos]) != 0) x.set(static_cast<int>(pos), true);
    return x;
}

// Rebuild a cover from an ordered sequence of disjoint nonempty blocks (one
// per marked coordinate of x, in canonical order) plus the labeling. The
// all-c region absorbs every element not in a block. Precondition failures
// are reported distinctly via reconstruction_error::which(), checked in this
// order: weight mismatch, empty block, overlapping blocks, infeasible x.
inline Cover reconstruct_cover(int n, const std::vector<std::uint32_t>& blocks,
                               const Labeling& x) {
    if (n < 1 || n > 31)
        throw argument_error("reconstruct_cover: n outside 1..31");
    const std::uint32_t uni = (std::uint32_t(1) << n) - 1;
    for (std::uint32_t b : blocks)
        if (b & ~uni)
            throw argument_error("reconstruct_cover: block has elements beyond n");
    if (static_cast<int>(blocks.size()) != x.weight())
        throw reconstruction_error(
            reconstruction_error::kind::weight_mismatch,
            "reconstruct_cover: number of blocks differs from labeling weight");
    std::uint32_t used = 0;
    for (std::uint32_t b : blocks) {
        if (b == 0)
            throw reconstruction_error(reconstruction_error::kind::empty_block,
                                       "reconstruct_cover: empty block");
        if (b & used)
            throw reconstruction_error(
                reconstruction_error::kind::overlapping_blocks,
                "reconstruct_cover: blocks overlap");
        used |= b;
    }
    if (!satisfies_cover_constraints(x))
        throw reconstruction_error(
            reconstruction_error::kind::infeasible_labeling,
            "reconstruct_cover: labeling violates a pair constraint");

    const std::uint32_t core = uni & ~used; // the all-c region B_c
    const std::vector<IndexVector> ts = full_index_space(x.k());
    std::vector<std::uint32_t> sets(static_cast<std::size_t>(x.k()), core);
    std::size_t next_block = 0;
    for (std::size_t pos = 0; pos < ts.size(); ++pos) {
        if (!x.test(static_cast<int>(pos))) continue;
        const std::uint32_t block = blocks[next_block++];
        for (int i = 1; i <= x.k(); ++i)
            if (ts[pos].is_c(i)) sets[static_cast<std::size_t>(i - 1)] |= block;
    }
    Cover cover(n, std::move(sets));
    if (!is_constructive(cover))
        throw consistency_error(
            "reconstruct_cover: reconstructed cover failed validation");
    return cover;
}

} // namespace covercount
