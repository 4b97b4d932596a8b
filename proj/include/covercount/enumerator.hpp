// enumerator.hpp
//
// Enumeration and counting of F_y(k, l): labelings of weight l that satisfy
// every pair-coverage constraint and agree with a fixed branching assignment
// y on its branching set T. This is the per-representative workhorse behind
// the class-based assembly of |F(k, l)|.
//
// Two modes with identical output:
//
//  * backtracking — direct depth-first search over the free coordinates in
//    canonical order, with unit propagation on pair-coverage constraints and
//    cardinality saturation (remaining ones vs. remaining slots). Used for
//    counting by exhaustion.
//
//  * no_good_cuts — iterated feasibility: solve for one labeling, record it,
//    add an exclusion ("no-good") pattern that forbids exactly that
//    labeling, and re-solve until infeasible. The exclusion check is a
//    constant-time equality test against each stored solution, which is the
//    binary-variable form of the usual mismatch inequality. Deliberately
//    mirrors the restart structure of feasibility-oracle loops.
//
// Everything here runs over single-word bit masks, which caps k at 6
// (|T(6)| = 62 coordinates); that cap is also the practical reach of the
// whole pipeline.

#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <ostream>
#include <unordered_set>
#include <vector>

#include "covercount/bigint.hpp"
#include "covercount/errors.hpp"
#include "covercount/index_space.hpp"
#include "covercount/labelings.hpp"
#include "covercount/symmetry.hpp"

namespace covercount {

enum class EnumMode { no_good_cuts, backtracking };

inline constexpr std::uint64_t kDefaultSolutionCap = 100'000'000;

namespace detail {

// Shared search core. Coordinates are canonical T(k) positions packed in one
// word; `supports` holds one mask per ordered pair (i, j) — the coordinates
// whose index vector witnesses that pair.
struct FixedSearch {
    int ell = 0;
    std::uint64_t all_mask = 0;
    std::vector<std::uint64_t> supports;
    std::uint64_t fixed_mask = 0; // coordinates pinned by the assignment
    std::uint64_t fixed_ones = 0; // their pinned values

    // Enumeration state.
    std::uint64_t cap = kDefaultSolutionCap;
    const std::unordered_set<std::uint64_t>* cuts = nullptr; // no-good mode
    std::vector<std::uint64_t>* out = nullptr;               // nullptr: count
    std::uint64_t count = 0;
    bool stop_at_first = false;
    std::optional<std::uint64_t> first;

    // Fixpoint propagation. Returns false on contradiction; on true, either
    // free coordinates remain (strictly between the cardinality walls) or
    // the assignment is complete and consistent.
    bool propagate(std::uint64_t& assigned, std::uint64_t& ones) const {
        for (;;) {
            const int ones_count = std::popcount(ones);
            const std::uint64_t free = all_mask & ~assigned;
            const int free_count = std::popcount(free);
            if (ones_count > ell || ones_count + free_count < ell) return false;
            std::uint64_t forced = 0;
            for (std::uint64_t sup : supports) {
                if (ones & sup) continue; // already witnessed
                const std::uint64_t avail = sup & free;
                if (avail == 0) return false; // pair can never be covered
                if ((avail & (avail - 1)) == 0) forced |= avail; // unit
            }
            if (ones_count == ell) {
                if (forced) return false; // a forced 1 would overshoot
                if (free == 0) return true;
                assigned |= free; // saturate with zeros, then re-verify pairs
                continue;
            }
            if (ones_count + free_count == ell) {
                ones |= free; // every slot is needed
                assigned |= free;
                continue;
            }
            if (forced) {
                ones |= forced;
                assigned |= forced;
                continue;
            }
            return true;
        }
    }

    // Returns true when the search should abort (first solution found in
    // stop_at_first mode).
    bool dfs(std::uint64_t assigned, std::uint64_t ones) {
        if (!propagate(assigned, ones)) return false;
        const std::uint64_t free = all_mask & ~assigned;
        if (free == 0) return leaf(ones);
        const std::uint64_t bit = free & (~free + 1); // lowest free coordinate
        // Below the cardinality target, try 1 before 0; propagation
        // saturates at the walls, so branch points are always below target.
        const bool one_first = std::popcount(ones) < ell;
        if (dfs(assigned | bit, one_first ? (ones | bit) : ones)) return true;
        return dfs(assigned | bit, one_first ? ones : (ones | bit));
    }

    bool leaf(std::uint64_t ones) {
        if (cuts && cuts->contains(ones)) return false; // excluded, keep going
        if (stop_at_first) {
            first = ones;
            return true;
        }
        if (++count > cap)
            throw resource_error(
                "enumerator: solution count exceeds the configured cap");
        if (out) out->push_back(ones);
        return false;
    }
};

inline FixedSearch make_search(int k, int ell) {
    if (k < 2) throw argument_error("enumerator: k must be >= 2");
    if (k > 6)
        throw resource_error("enumerator: k > 6 exceeds the single-word "
                             "labeling cap");
    const int nbits = labeling_size(k);
    if (ell < 0 || ell > nbits)
        throw argument_error("enumerator: ell outside 0..2^k-2");
    FixedSearch s;
    s.ell = ell;
    s.all_mask =
        nbits == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << nbits) - 1);
    for (std::uint64_t sup : pair_support_masks64(k))
        if (sup != 0) s.supports.push_back(sup);
    return s;
}

// Pin the branching coordinates to the assignment's values.
inline void apply_assignment(FixedSearch& s, const BranchingSet& T,
                             const BranchingAssignment& y) {
    require_same_branching(y, T);
    for (int p = 0; p < T.size(); ++p) {
        const int pos =
            canonical_index(T.k, T.members[static_cast<std::size_t>(p)].mask);
        s.fixed_mask |= std::uint64_t(1) << pos;
        if (y.value(p)) s.fixed_ones |= std::uint64_t(1) << pos;
    }
}

inline Labeling labeling_from_bits(int k, std::uint64_t bits) {
    Labeling x(k);
    while (bits) {
        x.set(std::countr_zero(bits), true);
        bits &= bits - 1;
    }
    return x;
}

// Run the configured search to completion in the requested mode, returning
// raw solution words in deterministic (DFS) order.
inline std::vector<std::uint64_t> run_search(FixedSearch& s, EnumMode mode) {
    std::vector<std::uint64_t> solutions;
    if (mode == EnumMode::backtracking) {
        s.out = &solutions;
        s.dfs(s.fixed_mask, s.fixed_ones);
        return solutions;
    }
    // no_good_cuts: restart a first-solution feasibility search, excluding
    // all previously found labelings, until it comes back empty.
    std::unordered_set<std::uint64_t> cuts;
    s.cuts = &cuts;
    s.stop_at_first = true;
    for (;;) {
        s.first.reset();
        s.dfs(s.fixed_mask, s.fixed_ones);
        if (!s.first) break;
        if (solutions.size() >= s.cap)
            throw resource_error(
                "enumerator: solution count exceeds the configured cap");
        solutions.push_back(*s.first);
        cuts.insert(*s.first);
    }
    return solutions;
}

} // namespace detail

// All of F_y(k, ell): weight-ell feasible labelings agreeing with y on T.
// Returns empty when the assignment weight already exceeds ell.
inline std::vector<Labeling>
enumerate_fixed(int k, int ell, const BranchingSet& T,
                const BranchingAssignment& y, EnumMode mode,
                std::uint64_t cap = kDefaultSolutionCap) {
    if (T.k != k) throw argument_error("enumerate_fixed: T has wrong k");
    detail::FixedSearch s = detail::make_search(k, ell);
    s.cap = cap;
    detail::apply_assignment(s, T, y);
    std::vector<Labeling> result;
    if (y.weight() > ell) return result; // F_y(k, ell) is empty outright
    for (std::uint64_t bits : detail::run_search(s, mode))
        result.push_back(detail::labeling_from_bits(k, bits));
    return result;
}

// All of F(k, ell) — no branching constraint.
inline std::vector<Labeling>
enumerate_labelings(int k, int ell, EnumMode mode = EnumMode::backtracking,
                    std::uint64_t cap = kDefaultSolutionCap) {
    detail::FixedSearch s = detail::make_search(k, ell);
    s.cap = cap;
    std::vector<Labeling> result;
    for (std::uint64_t bits : detail::run_search(s, mode))
        result.push_back(detail::labeling_from_bits(k, bits));
    return result;
}

// |F_y(k, ell)| by exhaustion, without materializing solutions.
inline Int count_fixed(int k, int ell, const BranchingSet& T,
                       const BranchingAssignment& y,
                       std::uint64_t cap = kDefaultSolutionCap) {
    if (T.k != k) throw argument_error("count_fixed: T has wrong k");
    if (y.weight() > ell) return 0;
    detail::FixedSearch s = detail::make_search(k, ell);
    s.cap = cap;
    detail::apply_assignment(s, T, y);
    s.dfs(s.fixed_mask, s.fixed_ones);
    return Int(s.count);
}

// |F(k, ell)| by exhaustion — no branching constraint.
inline Int count_labelings_at(int k, int ell,
                              std::uint64_t cap = kDefaultSolutionCap) {
    detail::FixedSearch s = detail::make_search(k, ell);
    s.cap = cap;
    s.dfs(0, 0);
    return Int(s.count);
}

// The simple binomial bound: at most C(2^k - 2 - w(y), ell - w(y)) labelings
// extend y to weight ell; 0 when ell < w(y).
inline Int solution_upper_bound(int k, int ell, const BranchingAssignment& y) {
    if (k < 2 || k > kMaxK)
        throw argument_error("solution_upper_bound: k outside 2..16");
    const int ybar = y.weight();
    if (ell < ybar) return 0;
    return binomial(static_cast<unsigned>(labeling_size(k) - ybar),
                    static_cast<unsigned>(ell - ybar));
}

// Newline-delimited 0/1 dump of an enumeration, in the given order.
inline void write_solutions(std::ostream& os, const std::vector<Labeling>& xs) {
    for (const Labeling& x : xs) os << x.to_string01() << '\n';
}

} // namespace covercount
