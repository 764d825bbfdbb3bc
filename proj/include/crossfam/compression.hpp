#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "crossfam/family.hpp"

namespace crossfam {

/// The shift j -> i. Left-compressions are the pairs with i < j.
struct CompressionPair {
    int i = 1;
    int j = 1;

    bool is_left() const noexcept { return i < j; }
    friend bool operator==(const CompressionPair&, const CompressionPair&) = default;
};

struct CompressionStep {
    CompressionPair pair;
    std::uint64_t potential_before = 0;
    std::uint64_t potential_after = 0;
};

struct CompressionTrace {
    std::vector<CompressionStep> steps;
};

/// Replaces j by i when j is present and i is not; otherwise the identity.
Word shift_word(Word a, int i, int j) noexcept;
SetWord delta(const CompressionPair& p, const SetWord& a);

/// Moves each member A to delta(A) unless delta(A) is already a member.
SetFamily apply_compression(const CompressionPair& p, const SetFamily& f);
bool compression_changes(const CompressionPair& p, const SetFamily& f);

/// Invariant under every left-compression.
bool is_compressed(const SetFamily& f);

/// Sum over members of the sum of their elements.
std::uint64_t potential(const SetFamily& f);

struct CompressedFamily {
    SetFamily family;
    CompressionTrace trace;
};

struct CompressedPair {
    SetFamily a;
    SetFamily b;
    CompressionTrace trace;  // potentials are of the pair, |a|-sum plus |b|-sum
};

// Fixed-point drivers scan (i, j) with i < j lexicographically and restart
// after every change, so traces are deterministic.
CompressedFamily compress_to_fixed_point(const SetFamily& f);

/// Applies each chosen left-compression to both families at once. Throws
/// PreconditionError if a and b are not cross-intersecting.
CompressedPair compress_pair_to_fixed_point(const SetFamily& a, const SetFamily& b);

}  // namespace crossfam
