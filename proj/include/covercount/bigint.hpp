// bigint.hpp
//
// Exact arbitrary-precision integer support. Every count in this library is
// an exact integer; nothing is ever rounded through floating point. The
// counts overflow 64 bits already at moderate sizes (e.g. ordered covers of
// a 9-set by 5 subsets), so all public totals use Int.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace covercount {

// Arbitrary-precision signed integer. Public counting results are always
// non-negative; the signed form exists so test-side identities that have
// alternating-sign intermediate terms can be evaluated exactly as well.
using Int = boost::multiprecision::cpp_int;

// Decimal rendering used for all machine-readable output (CSV/JSON). Values
// beyond 2^53 are not representable in JSON numbers, so counts travel as
// decimal strings end to end.
inline std::string to_decimal(const Int& v) { return v.str(); }

// n! in exact arithmetic.
inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

// Binomial coefficient C(n, r) by Pascal's rule in exact arithmetic (no
// division, no intermediate blow-up beyond the answer's own row).
inline Int binomial(unsigned n, unsigned r) {
    if (r > n) return 0;
    if (r > n - r) r = n - r;
    if (r == 0) return 1;
    // One row of Pascal's triangle at a time, truncated at column r.
    std::vector<Int> row(r + 1);
    row[0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = std::min(i, r); j >= 1; --j) row[j] += row[j - 1];
    }
    return row[r];
}

} // namespace covercount
