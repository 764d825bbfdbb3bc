#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "crossfam/family.hpp"

namespace crossfam {

struct DownsetCatalog {
    int ground_n = 0;
    bool compressed_only = false;
    std::vector<SetFamily> families;  // sorted by family_less
};

/// Every hereditary subfamily of 2^[n] (optionally only the compressed ones),
/// including the empty family and {∅}. Each downset is produced once, as the
/// downward closure of the antichain of its bases.
/// Limits: n <= 5, or n <= 6 with compressed_only; BudgetExceeded otherwise.
DownsetCatalog enumerate_downsets(int n, bool compressed_only);

/// True when h has bases X, Y with x in X and x not in Y.
bool lemma2_hypothesis_holds(const SetFamily& h, int x);

/// Evaluates 2|h(x)| < |h|. Throws PreconditionError when h is not hereditary
/// or the base hypothesis fails, so a sweep can't mistake "inapplicable" for
/// "false".
bool lemma2_check(const SetFamily& h, int x);

struct InjectionReport {
    std::vector<std::pair<SetWord, SetWord>> mapping;  // A -> A \ {x}, A in h(x)
    bool well_defined = true;  // every image is a member of h avoiding x
    bool injective = true;
    bool surjective = false;
    std::optional<SetWord> missed;  // smallest member avoiding x that is not hit
    bool hypothesis_holds = false;
};

/// The map A -> A \ {x} from the star h(x) into {H in h : x not in H}.
InjectionReport lemma2_injection(const SetFamily& h, int x);

}  // namespace crossfam
