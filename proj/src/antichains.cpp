#include "crossfam/antichains.hpp"

#include <algorithm>

#include "crossfam/compression.hpp"

namespace crossfam {

MaskPoset MaskPoset::inclusion(const SetFamily& f) {
    if (f.size() > 64) throw BudgetExceeded("poset limited to 64 members");
    const auto& w = f.words();
    MaskPoset p;
    p.up.assign(w.size(), 0);
    p.down.assign(w.size(), 0);
    for (std::size_t x = 0; x < w.size(); ++x)
        for (std::size_t y = 0; y < w.size(); ++y)
            if ((w[x] & ~w[y]) == 0) {
                p.up[x] |= Mask{1} << y;
                p.down[y] |= Mask{1} << x;
            }
    return p;
}

MaskPoset MaskPoset::subsets(int n, bool with_shifts) {
    if (n < 0 || n > 6) throw BudgetExceeded("subset poset limited to n <= 6");
    const std::size_t count = std::size_t{1} << n;
    MaskPoset p;
    p.up.assign(count, 0);
    p.down.assign(count, 0);
    // Immediate predecessors: drop one element, or shift one element left.
    // Both strictly decrease (size, weight) lexicographically, so processing
    // points by increasing weight-within-size sees predecessors first.
    std::vector<Word> order(count);
    for (Word w = 0; w < count; ++w) order[w] = w;
    auto weight = [](Word w) {
        int s = 0;
        for (; w; w &= w - 1) s += std::countr_zero(w) + 1;
        return s;
    };
    std::stable_sort(order.begin(), order.end(), [&](Word a, Word b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : weight(a) < weight(b);
    });
    for (Word w : order) {
        Mask down = Mask{1} << w;
        for (Word rest = w; rest; rest &= rest - 1) down |= p.down[w & ~(rest & -rest)];
        if (with_shifts)
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    const Word s = shift_word(w, i, j);
                    if (s != w) down |= p.down[s];
                }
        p.down[w] = down;
    }
    for (Word y = 0; y < count; ++y)
        for (Mask d = p.down[y]; d; d &= d - 1) p.up[std::countr_zero(d)] |= Mask{1} << y;
    return p;
}

std::vector<AntichainState> split_antichains(const MaskPoset& p, AntichainState root, int depth) {
    std::vector<AntichainState> frontier{root};
    for (int level = 0; level < depth; ++level) {
        std::vector<AntichainState> next;
        for (const auto& s : frontier) {
            if (s.open == 0) {
                next.push_back(s);
                continue;
            }
            const int x = std::countr_zero(s.open);
            const Mask bit = Mask{1} << x;
            next.push_back({s.chosen | bit, s.open & ~(p.up[x] | p.down[x])});
            next.push_back({s.chosen, s.open & ~bit});
        }
        frontier = std::move(next);
    }
    return frontier;
}

}  // namespace crossfam
