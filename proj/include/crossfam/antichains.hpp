#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "crossfam/family.hpp"

namespace crossfam {

using Mask = std::uint64_t;

/// A partial order on at most 64 points, stored as inclusive up/down masks.
struct MaskPoset {
    std::vector<Mask> up;    // up[x]: every y with x <= y, including x
    std::vector<Mask> down;  // down[x]: every y with y <= x, including x

    std::size_t size() const noexcept { return up.size(); }
    Mask all() const noexcept { return size() == 64 ? ~Mask{0} : (Mask{1} << size()) - 1; }

    Mask up_closure(Mask antichain) const noexcept {
        Mask out = 0;
        for (; antichain; antichain &= antichain - 1) out |= up[std::countr_zero(antichain)];
        return out;
    }
    Mask down_closure(Mask antichain) const noexcept {
        Mask out = 0;
        for (; antichain; antichain &= antichain - 1) out |= down[std::countr_zero(antichain)];
        return out;
    }

    /// Inclusion order on the members of a family with at most 64 members.
    static MaskPoset inclusion(const SetFamily& f);
    /// Order on 2^[n] (n <= 6) generated by inclusion and, when with_shifts is
    /// set, by left-shifts delta_{i,j} (i < j). Downsets of the latter are
    /// exactly the hereditary compressed families. Point index = set bits.
    static MaskPoset subsets(int n, bool with_shifts);
};

/// Partial antichain: `chosen` is committed, `open` may still be added.
struct AntichainState {
    Mask chosen = 0;
    Mask open = 0;
};

/// Branches on the lowest open point until `depth` levels are fixed (or the
/// state is a leaf). Visiting every returned state with for_each_antichain
/// covers every antichain exactly once; the split is deterministic.
std::vector<AntichainState> split_antichains(const MaskPoset& p, AntichainState root, int depth);

/// Calls visit(antichain) for every antichain reachable from `state`, in a
/// fixed depth-first order. Returns early (false) once visit returns false.
template <class Visit>
bool for_each_antichain(const MaskPoset& p, AntichainState state, Visit&& visit) {
    if (state.open == 0) return visit(state.chosen);
    const int x = std::countr_zero(state.open);
    const Mask bit = Mask{1} << x;
    const Mask comparable = p.up[x] | p.down[x];
    if (!for_each_antichain(p, {state.chosen | bit, state.open & ~comparable}, visit)) return false;
    return for_each_antichain(p, {state.chosen, state.open & ~bit}, visit);
}

}  // namespace crossfam
