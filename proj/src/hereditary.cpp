#include "crossfam/hereditary.hpp"

#include <algorithm>
#include <set>

#include "crossfam/antichains.hpp"

namespace crossfam {

DownsetCatalog enumerate_downsets(int n, bool compressed_only) {
    if (n < 0 || n > (compressed_only ? 6 : 5))
        throw BudgetExceeded("enumerate_downsets: n=" + std::to_string(n) + " exceeds the " +
                             (compressed_only ? "compressed limit 6" : "limit 5"));
    const MaskPoset poset = MaskPoset::subsets(n, compressed_only);
    DownsetCatalog catalog{n, compressed_only, {}};
    for_each_antichain(poset, {0, poset.all()}, [&](Mask bases) {
        std::vector<Word> members;
        for (Mask d = poset.down_closure(bases); d; d &= d - 1)
            members.push_back(static_cast<Word>(std::countr_zero(d)));
        catalog.families.emplace_back(n, std::move(members));
        return true;
    });
    std::sort(catalog.families.begin(), catalog.families.end(), family_less);
    return catalog;
}

bool lemma2_hypothesis_holds(const SetFamily& h, int x) {
    if (x < 1 || x > h.ground_n()) throw ParameterError("element outside ground");
    bool with = false, without = false;
    const SetFamily b_h = bases(h);
    for (Word b : b_h.words()) {
        if (b & element_bit(x))
            with = true;
        else
            without = true;
    }
    return with && without;
}

bool lemma2_check(const SetFamily& h, int x) {
    if (!is_hereditary(h)) throw PreconditionError("lemma2_check: family is not hereditary");
    if (!lemma2_hypothesis_holds(h, x))
        throw PreconditionError("lemma2_check: no pair of bases separates element " +
                                std::to_string(x));
    return 2 * star(h, x).size() < h.size();
}

InjectionReport lemma2_injection(const SetFamily& h, int x) {
    if (!is_hereditary(h)) throw PreconditionError("lemma2_injection: family is not hereditary");
    if (x < 1 || x > h.ground_n()) throw ParameterError("element outside ground");
    InjectionReport report;
    report.hypothesis_holds = lemma2_hypothesis_holds(h, x);
    const Word bit = element_bit(x);
    std::set<Word> images;
    for (Word a : h.words()) {
        if (!(a & bit)) continue;
        const Word image = a & ~bit;
        if (!h.contains(image)) report.well_defined = false;
        if (!images.insert(image).second) report.injective = false;
        report.mapping.emplace_back(SetWord(a, h.ground_n()), SetWord(image, h.ground_n()));
    }
    report.surjective = true;
    for (Word w : h.words())
        if (!(w & bit) && !images.contains(w)) {
            report.surjective = false;
            report.missed = SetWord(w, h.ground_n());
            break;
        }
    return report;
}

}  // namespace crossfam
