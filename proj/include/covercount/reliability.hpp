// reliability.hpp
//
// Coherent multi-state systems described by their minimal path sets: the
// structure function in both max-min (paths) and min-max (cuts) form,
// construction of the minimal cut sets as minimal hitting sets of the path
// family, and the design-count connection.
//
// A system with n components, states {0..s}, and minimal path sets P_1..P_k
// has structure function
//
//   phi(z) = max_i min_{p in P_i} z_p = min_j max_{p in C_j} z_p
//
// where C_1..C_r are the minimal cut sets. The path family of a coherent
// system is exactly a constructive unordered cover of the component set
// (full union, pairwise differences nonempty — no path contains another),
// which is why the number of coherent designs with k minimal path sets is
// the unordered cover count.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "covercount/bigint.hpp"
#include "covercount/counting.hpp"
#include "covercount/errors.hpp"
#include "covercount/index_space.hpp"

namespace covercount {

// Whether a collection of subsets (as n-bit masks) is a constructive
// unordered cover: union = {1..n} and every pairwise difference nonempty.
inline bool is_constructive_cover(const std::vector<std::uint32_t>& sets,
                                  int n) {
    return is_constructive_masks(sets, n);
}

// A coherent system: components {1..n}, states {0..s}, minimal path sets,
// optionally minimal cut sets. Validated on construction.
struct CoherentSystem {
    int n = 0;
    int s = 1;
    std::vector<std::uint32_t> path_sets;
    std::optional<std::vector<std::uint32_t>> cut_sets;

    CoherentSystem(int n_, int s_, std::vector<std::uint32_t> paths,
                   std::optional<std::vector<std::uint32_t>> cuts = std::nullopt)
        : n(n_), s(s_), path_sets(std::move(paths)), cut_sets(std::move(cuts)) {
        if (n < 1 || n > 31)
            throw argument_error("CoherentSystem: n outside 1..31");
        if (s < 1) throw argument_error("CoherentSystem: s must be >= 1");
        if (!is_constructive_cover(path_sets, n))
            throw invalid_cover_error(
                "CoherentSystem: path sets are not a constructive cover");
        if (cut_sets) {
            if (!is_constructive_cover(*cut_sets, n))
                throw invalid_cover_error(
                    "CoherentSystem: cut sets are not a constructive cover");
            for (std::uint32_t cut : *cut_sets)
                for (std::uint32_t path : path_sets)
                    if ((cut & path) == 0)
                        throw invalid_cover_error(
                            "CoherentSystem: a cut set misses a path set");
        }
    }
};

namespace detail {

inline int min_state_in(const std::vector<int>& z, std::uint32_t set) {
    int best = -1;
    while (set) {
        const int e = std::countr_zero(set);
        const int v = z[static_cast<std::size_t>(e)];
        if (best < 0 || v < best) best = v;
        set &= set - 1;
    }
    return best;
}

inline int max_state_in(const std::vector<int>& z, std::uint32_t set) {
    int best = 0;
    while (set) {
        const int e = std::countr_zero(set);
        best = std::max(best, z[static_cast<std::size_t>(e)]);
        set &= set - 1;
    }
    return best;
}

inline void require_state_vector(const std::vector<int>& z, int n) {
    if (static_cast<int>(z.size()) != n)
        throw dimension_error("state vector length differs from n");
    for (int v : z)
        if (v < 0) throw argument_error("state vector entries must be >= 0");
}

} // namespace detail

// phi(z) = max over path sets of the min state inside each.
inline int phi_from_paths(const std::vector<int>& z,
                          const std::vector<std::uint32_t>& path_sets, int n) {
    detail::require_state_vector(z, n);
    if (path_sets.empty())
        throw argument_error("phi_from_paths: no path sets");
    int phi = 0;
    for (std::uint32_t p : path_sets)
        phi = std::max(phi, detail::min_state_in(z, p));
    return phi;
}

// phi(z) = min over cut sets of the max state inside each.
inline int phi_from_cuts(const std::vector<int>& z,
                         const std::vector<std::uint32_t>& cut_sets, int n) {
    detail::require_state_vector(z, n);
    if (cut_sets.empty())
        throw argument_error("phi_from_cuts: no cut sets");
    int phi = -1;
    for (std::uint32_t c : cut_sets) {
        const int v = detail::max_state_in(z, c);
        if (phi < 0 || v < phi) phi = v;
    }
    return phi;
}

inline int phi_from_paths(const std::vector<int>& z, const CoherentSystem& sys) {
    return phi_from_paths(z, sys.path_sets, sys.n);
}

inline int phi_from_cuts(const std::vector<int>& z, const CoherentSystem& sys) {
    if (!sys.cut_sets)
        throw argument_error("phi_from_cuts: system has no cut sets");
    return phi_from_cuts(z, *sys.cut_sets, sys.n);
}

inline constexpr std::size_t kDefaultTransversalCap = 1'000'000;

// All minimal cut sets of a path family: the inclusion-minimal subsets of
// {1..n} intersecting every path set. Built incrementally — fold in one path
// set at a time, extend every partial transversal by each of its components,
// and discard dominated (superset) candidates after each round. Results
// sorted by size, then mask value.
inline std::vector<std::uint32_t>
minimal_cut_sets(const std::vector<std::uint32_t>& path_sets, int n,
                 std::size_t cap = kDefaultTransversalCap) {
    if (!is_constructive_cover(path_sets, n))
        throw invalid_cover_error(
            "minimal_cut_sets: path sets are not a constructive cover");
    std::vector<std::uint32_t> transversals{0}; // hit the empty prefix
    for (std::uint32_t path : path_sets) {
        std::vector<std::uint32_t> extended;
        for (std::uint32_t t : transversals) {
            if (t & path) {
                extended.push_back(t); // already hits this path
                continue;
            }
            for (std::uint32_t rest = path; rest;) {
                const std::uint32_t bit = rest & (~rest + 1);
                extended.push_back(t | bit);
                rest &= rest - 1;
            }
        }
        // Keep only the minimal candidates: sort by popcount so any superset
        // of a survivor appears after it.
        std::sort(extended.begin(), extended.end(),
                  [](std::uint32_t a, std::uint32_t b) {
                      const int pa = std::popcount(a), pb = std::popcount(b);
                      if (pa != pb) return pa < pb;
                      return a < b;
                  });
        extended.erase(std::unique(extended.begin(), extended.end()),
                       extended.end());
        std::vector<std::uint32_t> minimal;
        for (std::uint32_t candidate : extended) {
            bool dominated = false;
            for (std::uint32_t kept : minimal)
                if ((kept & ~candidate) == 0) {
                    dominated = true;
                    break;
                }
            if (!dominated) minimal.push_back(candidate);
        }
        if (minimal.size() > cap)
            throw resource_error(
                "minimal_cut_sets: transversal count exceeds the cap");
        transversals = std::move(minimal);
    }
    return transversals;
}

// Number of coherent-system designs with n components and k minimal path
// sets (equivalently, k minimal cut sets): the unordered cover count.
inline Int count_coherent_designs(int n, int k, unsigned threads = 1) {
    return count_unordered_covers(n, k, threads);
}

} // namespace covercount
