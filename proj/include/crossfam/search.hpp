#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crossfam/family.hpp"

namespace crossfam {

enum class Strategy { Auto, SubsetExhaustive, GaloisClosed, AntichainClosed };

std::string to_string(Strategy s);
/// Accepts auto|exhaustive|galois|antichain.
Strategy parse_strategy(const std::string& name);

/// Default node budget, or the value of CROSSFAM_BUDGET when set.
std::uint64_t default_node_budget();

struct SearchOptions {
    Strategy strategy = Strategy::Auto;
    std::uint64_t node_budget = default_node_budget();
    unsigned threads = 1;
};

struct SearchResult {
    std::uint64_t max_product = 0;
    SetFamily witness_a;
    SetFamily witness_b;
    std::optional<std::uint64_t> bound;
    bool equality = false;
    std::uint64_t nodes_explored = 0;
    Strategy strategy = Strategy::Auto;  // the strategy that actually ran
};

struct KSearchResult {
    std::uint64_t max_product = 0;
    std::vector<SetFamily> witnesses;
    std::optional<std::uint64_t> bound;
    bool equality = false;
    std::uint64_t nodes_explored = 0;
};

/// {B in ground : B meets every member of a}: the largest family inside
/// `ground` that is cross-intersecting with a.
SetFamily best_partner(const SetFamily& a, const SetFamily& ground);
SetFamily best_partner(const SetFamily& a, const GroundSpec& ground);

/// best_partner applied twice, landing back in ground_a.
SetFamily galois_closure(const SetFamily& a, const SetFamily& ground_a, const SetFamily& ground_b);
SetFamily galois_closure(const SetFamily& a, const GroundSpec& ground_a, const GroundSpec& ground_b);

/// Exact max |A||B| over cross-intersecting A in ground_a, B in ground_b.
/// Grounds may be arbitrary families of at most 64 members. The witness is
/// a closed pair (B = best_partner(A), A = best_partner(B)); among maximal
/// closed pairs the one whose A is smallest in family_less order is reported.
/// No bound is attached.
SearchResult max_product_over(const SetFamily& ground_a, const SetFamily& ground_b,
                              const SearchOptions& opts = {});

/// max_product_over on validated grounds, with bound |G(1)||H(1)| and the
/// equality flag filled in.
SearchResult max_product_pair(const GroundSpec& ground_a, const GroundSpec& ground_b,
                              const SearchOptions& opts = {});

/// Exact max of the product of sizes over pairwise cross-intersecting
/// families A_i in grounds[i]. A_1..A_{k-1} range over up-closed subfamilies
/// of their grounds; the last family is the best partner of the others.
KSearchResult max_product_k(std::span<const SetFamily> grounds, const SearchOptions& opts = {});

// Bound checks. Each throws VerificationFailure(BoundViolation) when the
// exact maximum differs from the bound, and PreconditionError/ParameterError
// for bad inputs.

SearchResult verify_theorem1(int m, int n, int r, int s, const SearchOptions& opts = {});
SearchResult verify_theorem4(const SetFamily& g, const SetFamily& h, const SearchOptions& opts = {});
KSearchResult verify_corollary3(std::span<const int> n_list, const SearchOptions& opts = {});
KSearchResult verify_theorem5(std::span<const SetFamily> grounds, const SearchOptions& opts = {});

/// Reconstructs the squaring argument: multiplies the k pairwise bounds
/// a_x a_y <= s_x s_y over the index pairs (2t-1, 2t) reduced mod* k, which
/// use every index exactly twice, and concludes prod a <= prod s. Throws
/// PreconditionError if some pairwise bound fails or an entry is negative.
bool pairwise_to_k_product(std::span<const std::int64_t> a, std::span<const std::int64_t> s);

/// x mod* k: ordinary remainder, except multiples of k map to k.
int mod_star(int x, int k);

}  // namespace crossfam
