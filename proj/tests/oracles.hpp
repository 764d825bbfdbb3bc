#pragma once

// Brute-force reference implementations used only by the tests. They work on
// std::set<std::set<int>> and share no code with the library's bitmask paths.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "crossfam/family.hpp"

namespace oracle {

using Set = std::set<int>;
using Family = std::set<Set>;

inline Family from(const crossfam::SetFamily& f) {
    Family out;
    for (const auto& s : f.members()) {
        auto e = s.elements();
        out.insert(Set(e.begin(), e.end()));
    }
    return out;
}

inline crossfam::SetFamily to(const Family& f, int n) {
    std::vector<crossfam::Word> words;
    for (const auto& s : f) {
        crossfam::Word w = 0;
        for (int x : s) w |= crossfam::Word{1} << (x - 1);
        words.push_back(w);
    }
    return crossfam::SetFamily(n, std::move(words));
}

inline std::vector<Set> all_subsets(int n) {
    std::vector<Set> out{Set{}};
    for (int x = 1; x <= n; ++x) {
        const std::size_t k = out.size();
        for (std::size_t i = 0; i < k; ++i) {
            Set s = out[i];
            s.insert(x);
            out.push_back(s);
        }
    }
    return out;
}

inline Family bounded(int n, int r) {
    Family out;
    for (const auto& s : all_subsets(n))
        if (static_cast<int>(s.size()) <= r) out.insert(s);
    return out;
}

inline bool meets(const Set& a, const Set& b) {
    return std::any_of(a.begin(), a.end(), [&](int x) { return b.count(x) > 0; });
}

inline bool cross(const Family& a, const Family& b) {
    for (const auto& x : a)
        for (const auto& y : b)
            if (!meets(x, y)) return false;
    return true;
}

inline bool subset(const Set& a, const Set& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool hereditary(const Family& f) {
    for (const auto& h : f) {
        std::vector<int> e(h.begin(), h.end());
        for (std::uint32_t m = 0; m < (1u << e.size()); ++m) {
            Set s;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (m & (1u << i)) s.insert(e[i]);
            if (!f.count(s)) return false;
        }
    }
    return true;
}

inline Set shift(const Set& a, int i, int j) {
    if (a.count(j) && !a.count(i)) {
        Set s = a;
        s.erase(j);
        s.insert(i);
        return s;
    }
    return a;
}

// Compression written straight from its two-part set definition.
inline Family compress(const Family& f, int i, int j) {
    Family out;
    for (const auto& a : f)
        if (!f.count(shift(a, i, j))) out.insert(shift(a, i, j));
    for (const auto& a : f)
        if (f.count(shift(a, i, j))) out.insert(a);
    return out;
}

inline bool compressed(const Family& f, int n) {
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (compress(f, i, j) != f) return false;
    return true;
}

inline std::uint64_t choose(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (int a = 0; a <= n; ++a) {
        c[a][0] = 1;
        for (int b = 1; b <= a; ++b) c[a][b] = c[a - 1][b - 1] + (b <= a - 1 ? c[a - 1][b] : 0);
    }
    return c[n][k];
}

// Every subfamily of `ground` (|ground| <= 20).
inline std::vector<Family> subfamilies(const Family& ground) {
    std::vector<Set> g(ground.begin(), ground.end());
    std::vector<Family> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.size()); ++m) {
        Family f;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (m & (std::uint64_t{1} << i)) f.insert(g[i]);
        out.push_back(std::move(f));
    }
    return out;
}

// Max |A||B| over every pair of subfamilies, checking cross-intersection
// directly on the sets. Exponential in |ground_a| + |ground_b|.
inline std::uint64_t max_product(const Family& ground_a, const Family& ground_b) {
    const auto as = subfamilies(ground_a);
    const auto bs = subfamilies(ground_b);
    std::uint64_t best = 0;
    for (const auto& a : as)
        for (const auto& b : bs)
            if (a.size() * b.size() > best && cross(a, b)) best = a.size() * b.size();
    return best;
}

// Max of the product of sizes over pairwise cross-intersecting tuples.
inline std::uint64_t max_product_k(const std::vector<Family>& grounds) {
    std::vector<std::vector<Family>> options;
    for (const auto& g : grounds) options.push_back(subfamilies(g));
    std::vector<const Family*> chosen(grounds.size());
    std::uint64_t best = 0;
    std::function<void(std::size_t)> go = [&](std::size_t level) {
        if (level == grounds.size()) {
            std::uint64_t p = 1;
            for (auto* f : chosen) p *= f->size();
            best = std::max(best, p);
            return;
        }
        for (const auto& f : options[level]) {
            bool ok = true;
            for (std::size_t p = 0; p < level && ok; ++p) ok = cross(*chosen[p], f);
            if (!ok) continue;
            chosen[level] = &f;
            go(level + 1);
        }
    };
    go(0);
    return best;
}

// All hereditary subfamilies of 2^[n] by filtering every subfamily.
inline std::vector<Family> downsets(int n) {
    Family power;
    for (const auto& s : all_subsets(n)) power.insert(s);
    std::vector<Family> out;
    for (auto& f : subfamilies(power))
        if (hereditary(f)) out.push_back(std::move(f));
    return out;
}

}  // namespace oracle
