#include "crossfam/prooflab.hpp"

#include <algorithm>

#include "crossfam/compression.hpp"

namespace crossfam {

namespace {

std::int64_t star_count(const SetFamily& f) {
    std::int64_t c = 0;
    for (Word w : f.words())
        if (w & element_bit(1)) ++c;
    return c;
}

SetFamily with_added(const SetFamily& f, const std::vector<Word>& extra) {
    std::vector<Word> w = f.words();
    w.insert(w.end(), extra.begin(), extra.end());
    return SetFamily(f.ground_n(), std::move(w));
}

SetFamily with_removed(const SetFamily& f, const std::vector<Word>& drop) {
    std::vector<Word> w;
    for (Word x : f.words())
        if (std::find(drop.begin(), drop.end(), x) == drop.end()) w.push_back(x);
    return SetFamily(f.ground_n(), std::move(w));
}

[[noreturn]] void uniqueness_failure(const std::string& what) {
    throw VerificationFailure(VerificationFailure::Kind::UniquenessViolation, what);
}

}  // namespace

SliceDecomposition slice(const SetFamily& f) {
    const int n = f.ground_n();
    if (n < 1) throw ParameterError("slice requires ground size >= 1");
    const Word top = element_bit(n);
    std::vector<Word> lower, upper;
    for (Word w : f.words()) {
        if (w & top)
            upper.push_back(w & ~top);
        else
            lower.push_back(w);
    }
    SliceDecomposition s{SetFamily(n - 1, std::move(lower)), SetFamily(n - 1, std::move(upper)), f,
                         n};
    if (s.f0.size() + s.f1.size() != f.size())
        throw VerificationFailure(VerificationFailure::Kind::IdentityViolation,
                                  "slice sizes do not add up");
    if (is_compressed(f) && !(is_compressed(s.f0) && is_compressed(s.f1)))
        throw VerificationFailure(VerificationFailure::Kind::IdentityViolation,
                                  "slice of a compressed family is not compressed");
    if (is_hereditary(f) && !(is_hereditary(s.f0) && is_hereditary(s.f1)))
        throw VerificationFailure(VerificationFailure::Kind::IdentityViolation,
                                  "slice of a hereditary family is not hereditary");
    return s;
}

StarSliceCounts star_slice_identity(const SetFamily& f) {
    if (f.ground_n() < 2) throw ParameterError("star_slice_identity requires ground size >= 2");
    const SliceDecomposition s = slice(f);
    StarSliceCounts c{static_cast<std::uint64_t>(star_count(f)),
                      static_cast<std::uint64_t>(star_count(s.f0)),
                      static_cast<std::uint64_t>(star_count(s.f1))};
    if (c.whole != c.lower + c.upper)
        throw VerificationFailure(VerificationFailure::Kind::IdentityViolation,
                                  "star size is not the sum of the slice star sizes");
    return c;
}

ConflictSystem find_conflicts(const SetFamily& a, const SetFamily& b) {
    if (a.ground_n() != b.ground_n())
        throw PreconditionError("find_conflicts: families must share a ground set");
    if (a.ground_n() < 2) throw PreconditionError("find_conflicts: ground size must be >= 2");
    if (!is_compressed(a) || !is_compressed(b))
        throw PreconditionError("find_conflicts: families must be compressed");
    if (!are_cross_intersecting(a, b))
        throw PreconditionError("find_conflicts: families must be cross-intersecting");

    ConflictSystem cs;
    cs.n = a.ground_n();
    cs.a_slices = slice(a);
    cs.b_slices = slice(b);
    const Word rest = full_word(cs.n - 1);
    const Word top = element_bit(cs.n);
    const auto& a1 = cs.a_slices.f1.words();
    const auto& b1 = cs.b_slices.f1.words();

    std::vector<Word> conflicts;
    for (Word x : a1)
        if (std::any_of(b1.begin(), b1.end(), [x](Word y) { return (x & y) == 0; }))
            conflicts.push_back(x);
    cs.conflicts = SetFamily(cs.n - 1, conflicts);
    for (Word x : cs.conflicts.words())
        cs.pairs.push_back({SetWord(x, cs.n - 1), SetWord(rest & ~x, cs.n - 1)});
    cs.k = static_cast<int>(cs.pairs.size());
    cs.r = cs.k / 2;

    for (const auto& [ai, bi] : cs.pairs) {
        for (Word y : b1)
            if ((ai.bits() & y) == 0 && y != bi.bits())
                uniqueness_failure("member " + SetWord(y, cs.n - 1).to_string() +
                                   " of B's upper slice misses " + ai.to_string() +
                                   " but is not its complement");
        if (!cs.b_slices.f1.contains(bi))
            uniqueness_failure("complement " + bi.to_string() + " missing from B's upper slice");
        for (Word x : a1)
            if ((x & bi.bits()) == 0 && x != ai.bits())
                uniqueness_failure("member " + SetWord(x, cs.n - 1).to_string() +
                                   " of A's upper slice misses " + bi.to_string());
        if (!a.contains(ai.bits() | top) || !b.contains(bi.bits() | top))
            uniqueness_failure("lifted conflict pair is not a member of the original families");
    }
    return cs;
}

bool AlterationLedger::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const LedgerCheck& c) { return c.passed; });
}

std::vector<std::string> AlterationLedger::failed_checks() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.passed) out.push_back(c.name);
    return out;
}

AlterationLedger assemble_alteration(const ConflictSystem& cs, const SetFamily& a,
                                     const SetFamily& b, const std::optional<SetFamily>& g,
                                     const std::optional<SetFamily>& h) {
    if (a.ground_n() != cs.n || b.ground_n() != cs.n)
        throw PreconditionError("conflict system was built for a different ground");
    AlterationLedger L;
    L.n = cs.n;
    L.k = cs.k;
    L.r = cs.r;
    L.g = g ? *g : downward_closure(a);
    L.h = h ? *h : downward_closure(b);
    for (const SetFamily* ground : {&L.g, &L.h}) {
        if (ground->ground_n() != cs.n)
            throw PreconditionError("ground family must live on the same [n]");
        if (!is_hereditary(*ground) || !is_compressed(*ground))
            throw PreconditionError("ground family must be hereditary and compressed");
    }
    if (!a.subfamily_of(L.g) || !b.subfamily_of(L.h))
        throw PreconditionError("families must be contained in their grounds");
    L.g_slices = slice(L.g);
    L.h_slices = slice(L.h);

    const int n = cs.n;
    const Word top = element_bit(n);
    const SetFamily& A0 = cs.a_slices.f0;
    const SetFamily& A1 = cs.a_slices.f1;
    const SetFamily& B0 = cs.b_slices.f0;
    const SetFamily& B1 = cs.b_slices.f1;
    const SetFamily& G0 = L.g_slices.f0;
    const SetFamily& G1 = L.g_slices.f1;
    const SetFamily& H0 = L.h_slices.f0;
    const SetFamily& H1 = L.h_slices.f1;

    std::vector<Word> a_head, a_tail, b_head, b_tail;  // split at r
    for (int i = 0; i < cs.k; ++i) {
        (i < cs.r ? a_head : a_tail).push_back(cs.pairs[i].a.bits());
        (i < cs.r ? b_head : b_tail).push_back(cs.pairs[i].b.bits());
    }
    L.a0p = with_added(A0, a_head);
    L.a1p = with_removed(A1, a_tail);
    L.b0p = with_added(B0, b_tail);
    L.b1p = with_removed(B1, b_head);

    L.a0 = A0.size();
    L.a1 = A1.size();
    L.b0 = B0.size();
    L.b1 = B1.size();
    L.a0p_size = L.a0p.size();
    L.a1p_size = L.a1p.size();
    L.b0p_size = L.b0p.size();
    L.b1p_size = L.b1p.size();
    L.g0 = star_count(G0);
    L.g1 = star_count(G1);
    L.h0 = star_count(H0);
    L.h1 = star_count(H1);
    L.size_a = a.size();
    L.size_b = b.size();
    const std::int64_t k = cs.k, r = cs.r;
    const std::int64_t g_star = star_count(L.g), h_star = star_count(L.h);

    auto check = [&L](std::string name, bool ok) { L.checks.push_back({std::move(name), ok}); };
    auto cross_all = [](const std::vector<const SetFamily*>& as,
                        const std::vector<const SetFamily*>& bs) {
        for (auto* x : as)
            for (auto* y : bs)
                if (!are_cross_intersecting(*x, *y)) return false;
        return true;
    };
    auto products_bounded = [&](std::int64_t x0, std::int64_t x1, std::int64_t y0,
                                std::int64_t y1) {
        return x0 * y0 <= L.g0 * L.h0 && x0 * y1 <= L.g0 * L.h1 && x1 * y0 <= L.g1 * L.h0 &&
               x1 * y1 <= L.g1 * L.h1;
    };

    check("slice_sizes_a", L.a0 + L.a1 == L.size_a);
    check("slice_sizes_b", L.b0 + L.b1 == L.size_b);
    check("star_slices_g", g_star == L.g0 + L.g1);
    check("star_slices_h", h_star == L.h0 + L.h1);
    check("slices_compressed", is_compressed(A0) && is_compressed(A1) && is_compressed(B0) &&
                                   is_compressed(B1));
    check("ground_slices_hereditary_compressed",
          is_hereditary(G0) && is_hereditary(G1) && is_hereditary(H0) && is_hereditary(H1) &&
              is_compressed(G0) && is_compressed(G1) && is_compressed(H0) && is_compressed(H1));
    check("unsliced_pairs_cross_intersecting", cross_all({&A0}, {&B0, &B1}) && cross_all({&A1}, {&B0}));

    bool unique_b = true, unique_a = true, lifted = true, shifted = true, outside_lower = true,
         in_ground = true;
    for (const auto& [ai, bi] : cs.pairs) {
        for (Word y : B1.words())
            if (!(y & ai.bits()) && y != bi.bits()) unique_b = false;
        if (!B1.contains(bi)) unique_b = false;
        for (Word x : A1.words())
            if (!(x & bi.bits()) && x != ai.bits()) unique_a = false;
        const Word a_lift = ai.bits() | top, b_lift = bi.bits() | top;
        if (!a.contains(a_lift) || !b.contains(b_lift)) lifted = false;
        for (int s = 1; s < n; ++s)
            if (!a.contains(shift_word(a_lift, s, n)) || !b.contains(shift_word(b_lift, s, n)))
                shifted = false;
        if (A0.contains(ai) || B0.contains(bi)) outside_lower = false;
        if (!G0.contains(ai) || !H0.contains(bi)) in_ground = false;
    }
    check("conflict_partner_unique_in_b", unique_b);
    check("conflict_partner_unique_in_a", unique_a);
    check("lifted_conflicts_are_members", lifted);
    check("shifted_lifts_are_members", shifted);
    check("conflicts_absent_from_lower_slices", outside_lower);
    check("conflicts_in_lower_ground_slices", in_ground);

    check("primed_cross_intersecting", cross_all({&L.a0p, &L.a1p}, {&L.b0p, &L.b1p}));
    check("primed_within_ground_slices", L.a0p.subfamily_of(G0) && L.a1p.subfamily_of(G1) &&
                                             L.b0p.subfamily_of(H0) && L.b1p.subfamily_of(H1));
    check("primed_sizes", L.a0p_size == L.a0 + r && L.a1p_size == L.a1 + r - k &&
                              L.b0p_size == L.b0 + k - r && L.b1p_size == L.b1 - r);
    check("alteration_size_identities", L.size_a == L.a0p_size + L.a1p_size + k - 2 * r &&
                                            L.size_b == L.b0p_size + L.b1p_size + 2 * r - k);
    check("primed_products_within_ground_stars",
          products_bounded(L.a0p_size, L.a1p_size, L.b0p_size, L.b1p_size));
    check("primed_sum_bound",
          (L.a0p_size + L.a1p_size) * (L.b0p_size + L.b1p_size) <= g_star * h_star);

    if (k % 2 == 1) {
        const Word a_mid = cs.pairs[r].a.bits(), b_mid = cs.pairs[r].b.bits();
        L.a0pp = with_added(L.a0p, {a_mid});
        L.a1pp = with_added(L.a1p, {a_mid});
        L.b0pp = with_removed(L.b0p, {b_mid});
        L.b1pp = with_removed(L.b1p, {b_mid});
        L.a0pp_size = L.a0pp->size();
        L.a1pp_size = L.a1pp->size();
        L.b0pp_size = L.b0pp->size();
        L.b1pp_size = L.b1pp->size();
        check("double_primed_sizes",
              *L.a0pp_size == L.a0p_size + 1 && *L.a1pp_size == L.a1p_size + 1 &&
                  *L.b0pp_size == L.b0p_size - 1 && *L.b1pp_size == L.b1p_size - 1);
        check("double_primed_cross_intersecting",
              cross_all({&*L.a0pp, &*L.a1pp}, {&*L.b0pp, &*L.b1pp}));
        check("double_primed_within_ground_slices",
              L.a0pp->subfamily_of(G0) && L.a1pp->subfamily_of(G1) && L.b0pp->subfamily_of(H0) &&
                  L.b1pp->subfamily_of(H1));
        check("double_primed_products_within_ground_stars",
              products_bounded(*L.a0pp_size, *L.a1pp_size, *L.b0pp_size, *L.b1pp_size));
    }
    check("final_product_bound", L.size_a * L.size_b <= g_star * h_star);
    return L;
}

AlterationLedger build_alteration(const ConflictSystem& cs, const SetFamily& a,
                                  const SetFamily& b, const std::optional<SetFamily>& g,
                                  const std::optional<SetFamily>& h) {
    if (cs.k < 1) throw PreconditionError("build_alteration requires at least one conflict");
    AlterationLedger L = assemble_alteration(cs, a, b, g, h);
    if (!L.all_passed()) {
        std::string names;
        for (const auto& s : L.failed_checks()) names += (names.empty() ? "" : ", ") + s;
        throw VerificationFailure(VerificationFailure::Kind::IdentityViolation,
                                  "alteration checks failed: " + names);
    }
    return L;
}

std::uint64_t am_gm_endgame(int n, std::uint64_t a_size) {
    if (n < 1 || n > 31) throw ParameterError("am_gm_endgame requires 1 <= n <= 31");
    const std::uint64_t total = std::uint64_t{1} << n;
    if (a_size > total) throw ParameterError("family larger than 2^n");
    const std::uint64_t value = a_size * (total - a_size);
    const std::uint64_t half = total / 2;
    if (value > half * half)
        throw VerificationFailure(VerificationFailure::Kind::BoundViolation,
                                  "a(2^n - a) exceeds (2^(n-1))^2");
    return value;
}

}  // namespace crossfam
