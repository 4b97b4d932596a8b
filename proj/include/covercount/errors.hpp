// errors.hpp
//
// Exception taxonomy for the covercount library. Every throwing operation
// uses one of these types so callers (and the CLI) can map failures onto
// stable exit codes:
//
//   argument_error    -> invalid input a caller could have checked (exit 2)
//   resource_error    -> refusal to exceed a configured capacity cap (exit 3)
//   consistency_error -> an internal cross-check failed; indicates a bug,
//                        never a bad input (exit 4)
//
// More specific conditions derive from argument_error so tests can assert
// the precise failure kind without string matching.

#pragma once

#include <stdexcept>
#include <string>

namespace covercount {

// Input outside an operation's documented domain.
class argument_error : public std::invalid_argument {
public:
    explicit argument_error(const std::string& what) : std::invalid_argument(what) {}
};

// Work refused because it would exceed a configured cap (solution count,
// table size, enumeration width, ...). Raising the cap is the caller's call.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Two internally-computed values that must agree did not. Always a bug.
class consistency_error : public std::runtime_error {
public:
    explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

// A collection of sets failed validation as a constructive cover.
class invalid_cover_error : public argument_error {
public:
    explicit invalid_cover_error(const std::string& what) : argument_error(what) {}
};

// State/dimension mismatch between a vector and the structure it is applied to.
class dimension_error : public argument_error {
public:
    explicit dimension_error(const std::string& what) : argument_error(what) {}
};

// An assignment was passed to a class it does not belong to.
class membership_error : public argument_error {
public:
    explicit membership_error(const std::string& what) : argument_error(what) {}
};

// Cover reconstruction rejects its input for one of four distinct reasons;
// tests distinguish them via kind().
class reconstruction_error : public argument_error {
public:
    enum class kind {
        weight_mismatch,     // number of blocks != weight of the labeling
        overlapping_blocks,  // blocks are not pairwise disjoint
        empty_block,         // a block is empty
        infeasible_labeling, // labeling violates the cover constraints
    };

    reconstruction_error(kind k, const std::string& what)
        : argument_error(what), kind_(k) {}

    kind which() const noexcept { return kind_; }

private:
    kind kind_;
};

} // namespace covercount
