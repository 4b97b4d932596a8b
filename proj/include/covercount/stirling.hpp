// stirling.hpp
//
// Exact Stirling numbers of the second kind s(n,l) and integrated Stirling
// numbers (ISNs) s~(n,l), with triangular tables and CSV emission.
//
//   s(n,l)  = number of unordered l-partitions of an n-set.
//   s~(n,l) = number of unordered l-partitions of all nonempty subsets of an
//             n-set taken together; equivalently l!*s~(n,l) counts ordered
//             l-tuples of disjoint nonempty blocks that need not exhaust the
//             set.
//
// Both satisfy one-step recurrences that stay in non-negative integers:
//
//   s(n+1,l)  = l*s(n,l) + s(n,l-1)          s(n,0) = 0, s(n,n) = s(n,1) = 1
//   s~(n+1,l) = (l+1)*s~(n,l) + s~(n,l-1)    s~(n,0) = 1, s~(n,n) = 1
//
// The virtual l = 0 column differs: an empty partial partition of a set is
// one valid configuration for s~ (nothing needs covering), while s has no
// 0-block partition of a nonempty set. That boundary is what produces the
// s~(n,1) = 2^n - 1 column.
//
// and both vanish for n < l. The recurrences are the primary computation;
// the alternating-sum closed forms are exercised only by the test suite
// (they need signed intermediates).

#pragma once

#include <mutex>
#include <ostream>
#include <vector>

#include "covercount/bigint.hpp"
#include "covercount/errors.hpp"

namespace covercount {

enum class TableKind { stirling, isn };

// Triangular table of s(n,l) or s~(n,l) for 1 <= l <= n <= max_n.
// Immutable after construction; safe to share between threads.
struct CountTable {
    TableKind kind;
    unsigned max_n = 0;
    // rows[n-1][l-1] holds the value at (n, l); row n has n entries.
    std::vector<std::vector<Int>> rows;

    const Int& at(unsigned n, unsigned l) const {
        if (n < 1 || n > max_n || l < 1 || l > n)
            throw argument_error("CountTable::at: (n,l) outside triangle");
        return rows[n - 1][l - 1];
    }
};

namespace detail {

// Extends a triangle by one row using the applicable recurrence. Row n+1 is
// derived purely from row n, so triangles are built strictly top-down.
inline std::vector<Int> next_row(TableKind kind, const std::vector<Int>& row_n) {
    const std::size_t n = row_n.size();
    std::vector<Int> next(n + 1);
    for (std::size_t l = 1; l <= n + 1; ++l) {
        const Int above = (l <= n) ? row_n[l - 1] : Int(0);
        // The l = 1 entry pulls in the virtual l = 0 column: 0 for s, 1 for s~.
        const Int left = (l >= 2) ? row_n[l - 2]
                                  : (kind == TableKind::isn ? Int(1) : Int(0));
        const unsigned mult =
            kind == TableKind::stirling ? unsigned(l) : unsigned(l + 1);
        next[l - 1] = mult * above + left;
    }
    return next;
}

inline std::vector<Int> first_row(TableKind /*kind*/) {
    // s(1,1) = 1; s~(1,1) = 2^1 - 1 = 1.
    return {Int(1)};
}

// Shared, lazily grown triangles so repeated point queries cost one row scan
// instead of a rebuild. Rows are append-only and guarded by a mutex; handed
// out values are copies.
class triangle_cache {
public:
    Int value(TableKind kind, unsigned n, unsigned ell) {
        std::scoped_lock lock(mutex_);
        auto& tri = kind == TableKind::stirling ? stirling_ : isn_;
        if (tri.empty()) tri.push_back(first_row(kind));
        while (tri.size() < n) tri.push_back(next_row(kind, tri.back()));
        return tri[n - 1][ell - 1];
    }

    static triangle_cache& instance() {
        static triangle_cache cache;
        return cache;
    }

private:
    std::mutex mutex_;
    std::vector<std::vector<Int>> stirling_;
    std::vector<std::vector<Int>> isn_;
};

} // namespace detail

// Stirling number of the second kind s(n, ell); 0 when n < ell.
inline Int stirling(unsigned n, unsigned ell) {
    if (n < 1 || ell < 1) throw argument_error("stirling: n and ell must be >= 1");
    if (n < ell) return 0;
    return detail::triangle_cache::instance().value(TableKind::stirling, n, ell);
}

// Integrated Stirling number s~(n, ell); 0 when n < ell.
inline Int isn(unsigned n, unsigned ell) {
    if (n < 1 || ell < 1) throw argument_error("isn: n and ell must be >= 1");
    if (n < ell) return 0;
    return detail::triangle_cache::instance().value(TableKind::isn, n, ell);
}

// Number of ordered ell-partitions of an n-set: ell! * s(n, ell).
inline Int ordered_partition_count(unsigned n, unsigned ell) {
    if (n < 1 || ell < 1)
        throw argument_error("ordered_partition_count: n and ell must be >= 1");
    if (n < ell) return 0;
    return factorial(ell) * stirling(n, ell);
}

// Materializes the full triangle for 1 <= l <= n <= max_n.
// The cap guards against runaway table requests (the triangle is quadratic).
inline CountTable build_table(TableKind kind, unsigned max_n,
                              unsigned max_n_cap = 10000) {
    if (max_n < 1) throw argument_error("build_table: max_n must be >= 1");
    if (max_n > max_n_cap)
        throw resource_error("build_table: max_n exceeds cap of " +
                             std::to_string(max_n_cap));
    CountTable table{kind, max_n, {}};
    table.rows.reserve(max_n);
    table.rows.push_back(detail::first_row(kind));
    for (unsigned n = 2; n <= max_n; ++n)
        table.rows.push_back(detail::next_row(kind, table.rows.back()));
    return table;
}

// CSV emission: header `n,l,value`, then one row per cell, n ascending and l
// ascending within n, all values as decimal strings. Deterministic bytes.
inline void write_csv(const CountTable& table, std::ostream& out) {
    out << "n,l,value\n";
    for (unsigned n = 1; n <= table.max_n; ++n)
        for (unsigned l = 1; l <= n; ++l)
            out << n << ',' << l << ',' << to_decimal(table.rows[n - 1][l - 1])
                << '\n';
}

} // namespace covercount
