#include "crossfam/family.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "crossfam/compression.hpp"

namespace crossfam {

namespace {

void check_ground(int ground_n) {
    if (ground_n < 0 || ground_n > kMaxGround)
        throw ParameterError("ground size " + std::to_string(ground_n) + " outside [0, " +
                             std::to_string(kMaxGround) + "]");
}

void check_element(int x, int ground_n) {
    if (x < 1 || x > ground_n)
        throw ParameterError("element " + std::to_string(x) + " outside [1, " +
                             std::to_string(ground_n) + "]");
}

}  // namespace

SetWord::SetWord(Word bits, int ground_n) : bits_(bits), ground_n_(ground_n) {
    check_ground(ground_n);
    if (bits & ~full_word(ground_n))
        throw ParameterError("set has elements outside [" + std::to_string(ground_n) + "]");
}

SetWord SetWord::of(std::initializer_list<int> elements, int ground_n) {
    return of(std::span<const int>(elements.begin(), elements.size()), ground_n);
}

SetWord SetWord::of(std::span<const int> elements, int ground_n) {
    check_ground(ground_n);
    Word bits = 0;
    for (int x : elements) {
        check_element(x, ground_n);
        bits |= element_bit(x);
    }
    return SetWord(bits, ground_n);
}

int SetWord::size() const noexcept { return std::popcount(bits_); }

std::vector<int> SetWord::elements() const {
    std::vector<int> out;
    for (Word w = bits_; w; w &= w - 1) out.push_back(std::countr_zero(w) + 1);
    return out;
}

std::string SetWord::to_string() const {
    if (bits_ == 0) return "-";
    std::string s;
    for (int x : elements()) {
        if (!s.empty()) s += ',';
        s += std::to_string(x);
    }
    return s;
}

SetFamily::SetFamily(int ground_n) : ground_n_(ground_n) { check_ground(ground_n); }

SetFamily::SetFamily(int ground_n, std::vector<Word> members)
    : ground_n_(ground_n), members_(std::move(members)) {
    check_ground(ground_n);
    const Word mask = full_word(ground_n);
    for (Word w : members_)
        if (w & ~mask)
            throw ParameterError("member " + SetWord(w, kMaxGround).to_string() +
                                 " has elements outside [" + std::to_string(ground_n) + "]");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SetFamily::SetFamily(int ground_n, std::initializer_list<std::initializer_list<int>> sets)
    : ground_n_(ground_n) {
    check_ground(ground_n);
    std::vector<Word> words;
    words.reserve(sets.size());
    for (const auto& s : sets) words.push_back(SetWord::of(s, ground_n).bits());
    *this = SetFamily(ground_n, std::move(words));
}

std::vector<SetWord> SetFamily::members() const {
    std::vector<SetWord> out;
    out.reserve(members_.size());
    for (Word w : members_) out.emplace_back(w, ground_n_);
    return out;
}

bool SetFamily::contains(Word w) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), w);
}

bool SetFamily::subfamily_of(const SetFamily& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
}

SetFamily SetFamily::with_ground(int ground_n) const { return SetFamily(ground_n, members_); }

std::string SetFamily::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) s += ' ';
        s += '{' + SetWord(members_[i], ground_n_).to_string() + '}';
    }
    return s + '}';
}

bool family_less(const SetFamily& a, const SetFamily& b) {
    return std::lexicographical_compare(a.words().begin(), a.words().end(), b.words().begin(),
                                        b.words().end());
}

SetFamily bounded_family(int n, int r) {
    if (r < 0 || n < r || n > kMaxEnumerationGround)
        throw ParameterError("bounded_family requires 0 <= r <= n <= " +
                             std::to_string(kMaxEnumerationGround));
    std::vector<Word> words;
    for (Word w = 0; w <= full_word(n); ++w)
        if (std::popcount(w) <= r) words.push_back(w);
    return SetFamily(n, std::move(words));
}

SetFamily power_set(int n) { return bounded_family(n, n); }

SetWord union_support(const SetFamily& f) {
    Word u = 0;
    for (Word w : f.words()) u |= w;
    return SetWord(u, f.ground_n());
}

SetFamily star(const SetFamily& f, int x) {
    check_element(x, f.ground_n());
    std::vector<Word> words;
    for (Word w : f.words())
        if (w & element_bit(x)) words.push_back(w);
    return SetFamily(f.ground_n(), std::move(words));
}

SetFamily complement_of_star(const SetFamily& f, int x) {
    check_element(x, f.ground_n());
    std::vector<Word> words;
    for (Word w : f.words())
        if (!(w & element_bit(x))) words.push_back(w);
    return SetFamily(f.ground_n(), std::move(words));
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / i;
    return c;
}

std::uint64_t star_size_bound(int n, int r) {
    if (r < 0 || n < r) throw ParameterError("star_size_bound requires 0 <= r <= n");
    std::uint64_t total = 0;
    for (int j = 0; j <= r; ++j) total += binomial(n - 1, j - 1);
    return total;
}

bool is_intersecting(const SetFamily& f) {
    const auto& w = f.words();
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i; j < w.size(); ++j)
            if (!(w[i] & w[j])) return false;
    return true;
}

bool are_cross_intersecting(const SetFamily& a, const SetFamily& b) {
    for (Word x : a.words())
        for (Word y : b.words())
            if (!(x & y)) return false;
    return true;
}

bool are_cross_intersecting_k(std::span<const SetFamily> families) {
    if (families.size() < 2) throw ParameterError("need at least two families");
    for (std::size_t i = 0; i < families.size(); ++i)
        for (std::size_t j = i + 1; j < families.size(); ++j)
            if (!are_cross_intersecting(families[i], families[j])) return false;
    return true;
}

bool is_hereditary(const SetFamily& f) {
    // Closure under single-element deletion implies closure under subsets.
    for (Word w : f.words())
        for (Word rest = w; rest; rest &= rest - 1)
            if (!f.contains(w & ~(rest & -rest))) return false;
    return true;
}

SetFamily downward_closure(const SetFamily& f) {
    constexpr std::uint64_t kClosureCap = std::uint64_t{1} << 24;
    std::uint64_t estimate = 0;
    for (Word w : f.words()) {
        const int k = std::popcount(w);
        estimate += k >= 40 ? kClosureCap : (std::uint64_t{1} << k);
        if (estimate > kClosureCap) throw BudgetExceeded("downward closure too large to materialize");
    }
    std::unordered_set<Word> seen;
    std::vector<Word> stack(f.words().begin(), f.words().end());
    while (!stack.empty()) {
        Word w = stack.back();
        stack.pop_back();
        if (!seen.insert(w).second) continue;
        for (Word rest = w; rest; rest &= rest - 1) stack.push_back(w & ~(rest & -rest));
    }
    return SetFamily(f.ground_n(), std::vector<Word>(seen.begin(), seen.end()));
}

SetFamily bases(const SetFamily& f) {
    const auto& w = f.words();
    std::vector<Word> out;
    for (Word x : w) {
        bool maximal = true;
        for (Word y : w)
            if (y != x && (x & ~y) == 0) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(x);
    }
    return SetFamily(f.ground_n(), std::move(out));
}

GroundSpec GroundSpec::bounded(int n, int r) {
    if (n < 0 || r < 0 || r > n) throw ParameterError("bounded ground requires 0 <= r <= n");
    return GroundSpec(Bounded{n, r}, bounded_family(n, r));
}

GroundSpec GroundSpec::hereditary(SetFamily f) {
    if (!is_hereditary(f)) throw PreconditionError("ground family is not hereditary");
    if (!is_compressed(f)) throw PreconditionError("ground family is not compressed");
    SetFamily copy = f;
    return GroundSpec(std::move(f), std::move(copy));
}

}  // namespace crossfam
