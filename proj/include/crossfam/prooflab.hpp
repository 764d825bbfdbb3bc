#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crossfam/family.hpp"

namespace crossfam {

/// Splits a family over [n] on its largest element n: f0 keeps the members
/// avoiding n, f1 holds H \ {n} for the members containing n. Both slices
/// live on [n-1].
struct SliceDecomposition {
    SetFamily f0;
    SetFamily f1;
    SetFamily origin;
    int element = 0;
};

SliceDecomposition slice(const SetFamily& f);

struct StarSliceCounts {
    std::uint64_t whole = 0;  // |f(1)|
    std::uint64_t lower = 0;  // |f0(1)|
    std::uint64_t upper = 0;  // |f1(1)|
};

/// Star sizes at 1 before and after slicing; throws VerificationFailure if
/// whole != lower + upper. Requires ground_n >= 2.
StarSliceCounts star_slice_identity(const SetFamily& f);

struct ConflictPair {
    SetWord a;  // a member of the upper slice of A meeting nothing in some member of B's
    SetWord b;  // [n-1] \ a
};

/// The members of A's upper slice that miss some member of B's upper slice,
/// each paired with its complement in [n-1]. Pairs are ordered by the
/// numeric value of their A side.
struct ConflictSystem {
    int n = 0;
    SliceDecomposition a_slices;
    SliceDecomposition b_slices;
    SetFamily conflicts;
    std::vector<ConflictPair> pairs;
    int k = 0;
    int r = 0;  // floor(k / 2)
};

/// Requires a and b compressed, cross-intersecting, on the same ground n >= 1
/// (PreconditionError otherwise). Checks that each conflict set has exactly
/// one disjoint partner on the other side and that the lifted sets belong to
/// a and b; a failure raises VerificationFailure(UniquenessViolation).
ConflictSystem find_conflicts(const SetFamily& a, const SetFamily& b);

struct LedgerCheck {
    std::string name;
    bool passed = true;
};

struct AlterationLedger {
    int n = 0;
    int k = 0;
    int r = 0;
    SetFamily g;
    SetFamily h;
    SliceDecomposition g_slices;
    SliceDecomposition h_slices;

    // Primed slices: the first r conflict sets move down on the A side, the
    // partners of the rest move down on the B side.
    SetFamily a0p, a1p, b0p, b1p;
    // Present only when k is odd: the (r+1)-th pair is moved on both sides.
    std::optional<SetFamily> a0pp, a1pp, b0pp, b1pp;

    std::int64_t a0 = 0, a1 = 0, b0 = 0, b1 = 0;
    std::int64_t a0p_size = 0, a1p_size = 0, b0p_size = 0, b1p_size = 0;
    std::optional<std::int64_t> a0pp_size, a1pp_size, b0pp_size, b1pp_size;
    std::int64_t g0 = 0, g1 = 0, h0 = 0, h1 = 0;  // star sizes at 1 of the ground slices
    std::int64_t size_a = 0, size_b = 0;

    std::vector<LedgerCheck> checks;

    bool all_passed() const;
    std::vector<std::string> failed_checks() const;
};

/// Builds the primed (and, for odd k, double-primed) families and evaluates
/// every claim about them without throwing on a failed claim. `g` and `h`
/// default to the downward closures of a and b.
AlterationLedger assemble_alteration(const ConflictSystem& cs, const SetFamily& a,
                                     const SetFamily& b,
                                     const std::optional<SetFamily>& g = std::nullopt,
                                     const std::optional<SetFamily>& h = std::nullopt);

/// assemble_alteration, then VerificationFailure(IdentityViolation) if any
/// check failed. Requires cs.k >= 1.
AlterationLedger build_alteration(const ConflictSystem& cs, const SetFamily& a,
                                  const SetFamily& b,
                                  const std::optional<SetFamily>& g = std::nullopt,
                                  const std::optional<SetFamily>& h = std::nullopt);

/// a_size * (2^n - a_size); throws VerificationFailure if it exceeds 4^(n-1).
std::uint64_t am_gm_endgame(int n, std::uint64_t a_size);

}  // namespace crossfam
