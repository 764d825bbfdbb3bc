#include "crossfam/random.hpp"

#include <algorithm>

#include "crossfam/compression.hpp"
#include "crossfam/search.hpp"

namespace crossfam {

SetFamily random_family(Rng& rng, int n, double density) {
    if (n < 0 || n > kMaxEnumerationGround) throw ParameterError("random_family: n out of range");
    std::bernoulli_distribution keep(density);
    std::vector<Word> words;
    for (Word w = 0; w <= full_word(n); ++w)
        if (keep(rng)) words.push_back(w);
    return SetFamily(n, std::move(words));
}

std::pair<SetFamily, SetFamily> random_cross_intersecting_pair(Rng& rng, int n) {
    std::uniform_real_distribution<double> density(0.0, 0.35);
    SetFamily a = random_family(rng, n, density(rng));
    const SetFamily partner = best_partner(a, power_set(n));
    std::bernoulli_distribution keep(std::uniform_real_distribution<double>(0.3, 1.0)(rng));
    std::vector<Word> b;
    for (Word w : partner.words())
        if (keep(rng)) b.push_back(w);
    return {std::move(a), SetFamily(n, std::move(b))};
}

namespace {

// An up-set generated by a few sets of size near n/2, with its best partner.
std::pair<SetFamily, SetFamily> random_dense_pair(Rng& rng, int n) {
    std::vector<Word> generators;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < count; ++t) {
        const int size = std::max(1, n / 2 - 1 + static_cast<int>(rng() % 3));
        std::vector<int> elems(n);
        for (int x = 0; x < n; ++x) elems[x] = x + 1;
        std::shuffle(elems.begin(), elems.end(), rng);
        Word g = 0;
        for (int i = 0; i < std::min(size, n); ++i) g |= element_bit(elems[i]);
        generators.push_back(g);
    }
    std::vector<Word> up;
    for (Word w = 0; w <= full_word(n); ++w)
        for (Word g : generators)
            if ((g & ~w) == 0) {
                up.push_back(w);
                break;
            }
    SetFamily a(n, std::move(up));
    SetFamily b = best_partner(a, power_set(n));
    return {std::move(a), std::move(b)};
}

}  // namespace

std::pair<SetFamily, SetFamily> random_compressed_pair(Rng& rng, int n) {
    auto [a, b] = rng() & 1 ? random_dense_pair(rng, n) : random_cross_intersecting_pair(rng, n);
    auto out = compress_pair_to_fixed_point(a, b);
    return {std::move(out.a), std::move(out.b)};
}

}  // namespace crossfam
