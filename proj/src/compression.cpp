#include "crossfam/compression.hpp"

#include <algorithm>
#include <bit>

namespace crossfam {

namespace {

void check_pair(const CompressionPair& p, int ground_n) {
    if (p.i < 1 || p.j < 1 || p.i > ground_n || p.j > ground_n)
        throw ParameterError("compression pair (" + std::to_string(p.i) + "," +
                             std::to_string(p.j) + ") outside [" + std::to_string(ground_n) + "]");
}

std::uint64_t word_weight(Word w) {
    std::uint64_t s = 0;
    for (; w; w &= w - 1) s += static_cast<std::uint64_t>(std::countr_zero(w) + 1);
    return s;
}

std::optional<CompressionPair> first_changing_pair(const SetFamily& a, const SetFamily* b) {
    const int n = std::max(a.ground_n(), b ? b->ground_n() : 0);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const CompressionPair p{i, j};
            if ((j <= a.ground_n() && compression_changes(p, a)) ||
                (b && j <= b->ground_n() && compression_changes(p, *b)))
                return p;
        }
    return std::nullopt;
}

// Pair families may sit on different grounds; a shift touching an element
// beyond a family's ground leaves that family alone.
SetFamily compress_if_fits(const CompressionPair& p, const SetFamily& f) {
    if (p.i > f.ground_n() || p.j > f.ground_n()) return f;
    return apply_compression(p, f);
}

}  // namespace

Word shift_word(Word a, int i, int j) noexcept {
    const Word bi = element_bit(i), bj = element_bit(j);
    if ((a & bj) && !(a & bi)) return (a & ~bj) | bi;
    return a;
}

SetWord delta(const CompressionPair& p, const SetWord& a) {
    check_pair(p, a.ground_n());
    return SetWord(shift_word(a.bits(), p.i, p.j), a.ground_n());
}

SetFamily apply_compression(const CompressionPair& p, const SetFamily& f) {
    check_pair(p, f.ground_n());
    std::vector<Word> out;
    out.reserve(f.size());
    for (Word w : f.words()) {
        const Word moved = shift_word(w, p.i, p.j);
        out.push_back(f.contains(moved) ? w : moved);
    }
    return SetFamily(f.ground_n(), std::move(out));
}

bool compression_changes(const CompressionPair& p, const SetFamily& f) {
    check_pair(p, f.ground_n());
    for (Word w : f.words()) {
        const Word moved = shift_word(w, p.i, p.j);
        if (moved != w && !f.contains(moved)) return true;
    }
    return false;
}

bool is_compressed(const SetFamily& f) { return !first_changing_pair(f, nullptr).has_value(); }

std::uint64_t potential(const SetFamily& f) {
    std::uint64_t s = 0;
    for (Word w : f.words()) s += word_weight(w);
    return s;
}

CompressedFamily compress_to_fixed_point(const SetFamily& f) {
    CompressedFamily out{f, {}};
    while (auto p = first_changing_pair(out.family, nullptr)) {
        const std::uint64_t before = potential(out.family);
        out.family = apply_compression(*p, out.family);
        const std::uint64_t after = potential(out.family);
        if (after >= before)
            throw VerificationFailure(VerificationFailure::Kind::IdentityViolation,
                                      "left-compression did not decrease the potential");
        out.trace.steps.push_back({*p, before, after});
    }
    return out;
}

CompressedPair compress_pair_to_fixed_point(const SetFamily& a, const SetFamily& b) {
    if (!are_cross_intersecting(a, b))
        throw PreconditionError("compress_pair_to_fixed_point: families are not cross-intersecting");
    CompressedPair out{a, b, {}};
    while (auto p = first_changing_pair(out.a, &out.b)) {
        const std::uint64_t before = potential(out.a) + potential(out.b);
        out.a = compress_if_fits(*p, out.a);
        out.b = compress_if_fits(*p, out.b);
        const std::uint64_t after = potential(out.a) + potential(out.b);
        if (after >= before)
            throw VerificationFailure(VerificationFailure::Kind::IdentityViolation,
                                      "pair compression did not decrease the potential");
        out.trace.steps.push_back({*p, before, after});
    }
    return out;
}

}  // namespace crossfam
