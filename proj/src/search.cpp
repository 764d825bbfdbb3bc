#include "crossfam/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "crossfam/antichains.hpp"
#include "crossfam/compression.hpp"

namespace crossfam {

namespace {

constexpr std::uint64_t kDefaultBudget = 500'000'000;
constexpr std::size_t kMaxSearchGround = 64;
constexpr int kMaxExhaustiveBits = 40;

Mask bit_of(std::size_t i) { return Mask{1} << i; }

// Lexicographic order of the increasing index lists of two masks. Indices
// follow the ground's canonical order, so this is family_less on the
// corresponding subfamilies.
bool mask_less(Mask x, Mask y) {
    if (x == y) return false;
    const Mask low = (x ^ y) & -(x ^ y);
    const Mask above = ~((low << 1) - 1);
    if (x & low) return (y & above) != 0;  // y continues past the split point with a larger index
    return (x & above) == 0;               // x is a proper prefix of y, or x continues larger
}

std::uint64_t star_count(const SetFamily& f) {
    return static_cast<std::uint64_t>(
        std::count_if(f.words().begin(), f.words().end(), [](Word w) { return w & 1; }));
}

SetFamily select(const SetFamily& ground, Mask m) {
    std::vector<Word> out;
    for (; m; m &= m - 1) out.push_back(ground.words()[std::countr_zero(m)]);
    return SetFamily(ground.ground_n(), std::move(out));
}

void check_search_ground(const SetFamily& g) {
    if (g.size() > kMaxSearchGround)
        throw BudgetExceeded("search grounds are limited to " + std::to_string(kMaxSearchGround) +
                             " members (got " + std::to_string(g.size()) + ")");
}

struct Candidate {
    std::uint64_t product = 0;
    Mask a = 0;
    Mask b = 0;
    bool valid = false;

    bool beats(const Candidate& other) const {
        if (!other.valid) return valid;
        if (!valid) return false;
        if (product != other.product) return product > other.product;
        return mask_less(a, other.a);
    }
};

// Disjointness tables between two grounds.
class PairEngine {
public:
    PairEngine(const SetFamily& ga, const SetFamily& gb) : ga_(ga), gb_(gb) {
        const auto& wa = ga.words();
        const auto& wb = gb.words();
        disjoint_from_b_.assign(wb.size(), 0);
        disjoint_from_a_.assign(wa.size(), 0);
        for (std::size_t x = 0; x < wa.size(); ++x)
            for (std::size_t y = 0; y < wb.size(); ++y)
                if (!(wa[x] & wb[y])) {
                    disjoint_from_b_[y] |= bit_of(x);
                    disjoint_from_a_[x] |= bit_of(y);
                }
    }

    Mask partner_in_b(Mask a) const {
        Mask out = 0;
        for (std::size_t y = 0; y < disjoint_from_b_.size(); ++y)
            if (!(disjoint_from_b_[y] & a)) out |= bit_of(y);
        return out;
    }
    Mask partner_in_a(Mask b) const {
        Mask out = 0;
        for (std::size_t x = 0; x < disjoint_from_a_.size(); ++x)
            if (!(disjoint_from_a_[x] & b)) out |= bit_of(x);
        return out;
    }
    Mask closure(Mask a) const { return partner_in_a(partner_in_b(a)); }

    // Scores the closed pair generated by `a`.
    Candidate evaluate(Mask a) const {
        const Mask b = partner_in_b(a);
        const Mask closed = partner_in_a(b);
        return {static_cast<std::uint64_t>(std::popcount(closed)) *
                    static_cast<std::uint64_t>(std::popcount(b)),
                closed, b, true};
    }

    std::size_t size_a() const { return ga_.size(); }

private:
    const SetFamily& ga_;
    const SetFamily& gb_;
    std::vector<Mask> disjoint_from_b_;  // per B: members of ground_a missing it
    std::vector<Mask> disjoint_from_a_;
};

unsigned worker_count(unsigned requested) { return std::max(1u, std::min(requested, 64u)); }

Candidate search_exhaustive(const PairEngine& e, const SearchOptions& opts, std::uint64_t& nodes) {
    const std::size_t bits = e.size_a();
    if (bits > static_cast<std::size_t>(kMaxExhaustiveBits) ||
        (std::uint64_t{1} << bits) > opts.node_budget)
        throw BudgetExceeded("subset-exhaustive search over " + std::to_string(bits) +
                             " members exceeds the node budget");
    const std::uint64_t total = std::uint64_t{1} << bits;
    const unsigned workers = worker_count(opts.threads);
    std::vector<Candidate> best(workers);
    auto work = [&](unsigned w) {
        const std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
        for (std::uint64_t a = lo; a < hi; ++a) {
            // Score the pair (A, partner(A)) as given; report its closure.
            const Mask b = e.partner_in_b(a);
            const std::uint64_t product = static_cast<std::uint64_t>(std::popcount(a)) *
                                          static_cast<std::uint64_t>(std::popcount(b));
            if (best[w].valid && product < best[w].product) continue;
            const Mask closed = e.partner_in_a(b);
            Candidate c{product, closed, b, true};
            if (closed != a) c.product = static_cast<std::uint64_t>(std::popcount(closed)) *
                                         static_cast<std::uint64_t>(std::popcount(b));
            if (c.beats(best[w])) best[w] = c;
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    nodes = total;
    Candidate out;
    for (const auto& c : best)
        if (c.beats(out)) out = c;
    return out;
}

// Ganter's NextClosure over the indices of ground_a: visits every closed
// set exactly once in lectic order.
Candidate search_galois(const PairEngine& e, const SearchOptions& opts, std::uint64_t& nodes) {
    const std::size_t n = e.size_a();
    nodes = 0;
    auto close = [&](Mask a) {
        if (++nodes > opts.node_budget)
            throw BudgetExceeded("galois-closed search exceeded the node budget");
        return e.closure(a);
    };
    Candidate best;
    Mask current = close(0);
    for (;;) {
        const Candidate c = e.evaluate(current);
        if (c.beats(best)) best = c;
        bool advanced = false;
        for (std::size_t i = n; i-- > 0;) {
            const Mask bit = bit_of(i);
            if (current & bit) continue;
            const Mask lower = bit - 1;
            const Mask next = close((current & lower) | bit);
            if ((next & lower) == (current & lower)) {
                current = next;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return best;
}

Candidate search_antichain(const PairEngine& e, const SetFamily& ga, const SearchOptions& opts,
                           std::uint64_t& nodes) {
    const MaskPoset poset = MaskPoset::inclusion(ga);
    const unsigned workers = worker_count(opts.threads);
    const int depth = workers == 1 ? 0 : std::min<int>(static_cast<int>(ga.size()), 12);
    const std::vector<AntichainState> parts = split_antichains(poset, {0, poset.all()}, depth);
    std::atomic<std::uint64_t> visited{0};
    std::atomic<std::size_t> next_part{0};
    std::atomic<bool> over_budget{false};
    std::vector<Candidate> best(workers);
    auto work = [&](unsigned w) {
        std::uint64_t local = 0;
        for (std::size_t p; (p = next_part.fetch_add(1)) < parts.size();) {
            const bool finished = for_each_antichain(poset, parts[p], [&](Mask antichain) {
                if ((++local & 0x3ff) == 0) {
                    if (visited.fetch_add(0x400) + 0x400 > opts.node_budget) {
                        over_budget = true;
                        return false;
                    }
                    if (over_budget) return false;
                }
                const Candidate c = e.evaluate(poset.up_closure(antichain));
                if (c.beats(best[w])) best[w] = c;
                return true;
            });
            if (!finished) return;
        }
        visited.fetch_add(local & 0x3ff);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    if (over_budget || visited > opts.node_budget)
        throw BudgetExceeded("antichain-closed search exceeded the node budget");
    nodes = visited;
    Candidate out;
    for (const auto& c : best)
        if (c.beats(out)) out = c;
    return out;
}

using Big = boost::multiprecision::cpp_int;

}  // namespace

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::Auto: return "auto";
        case Strategy::SubsetExhaustive: return "subset-exhaustive";
        case Strategy::GaloisClosed: return "galois-closed";
        case Strategy::AntichainClosed: return "antichain-closed";
    }
    return "auto";
}

Strategy parse_strategy(const std::string& name) {
    if (name == "auto") return Strategy::Auto;
    if (name == "exhaustive" || name == "subset-exhaustive") return Strategy::SubsetExhaustive;
    if (name == "galois" || name == "galois-closed") return Strategy::GaloisClosed;
    if (name == "antichain" || name == "antichain-closed") return Strategy::AntichainClosed;
    throw ParameterError("unknown strategy '" + name + "'");
}

std::uint64_t default_node_budget() {
    if (const char* env = std::getenv("CROSSFAM_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultBudget;
}

SetFamily best_partner(const SetFamily& a, const SetFamily& ground) {
    std::vector<Word> out;
    for (Word y : ground.words())
        if (std::all_of(a.words().begin(), a.words().end(), [y](Word x) { return (x & y) != 0; }))
            out.push_back(y);
    return SetFamily(ground.ground_n(), std::move(out));
}

SetFamily best_partner(const SetFamily& a, const GroundSpec& ground) {
    return best_partner(a, ground.family());
}

SetFamily galois_closure(const SetFamily& a, const SetFamily& ground_a, const SetFamily& ground_b) {
    return best_partner(best_partner(a, ground_b), ground_a);
}

SetFamily galois_closure(const SetFamily& a, const GroundSpec& ground_a,
                         const GroundSpec& ground_b) {
    return galois_closure(a, ground_a.family(), ground_b.family());
}

SearchResult max_product_over(const SetFamily& ground_a, const SetFamily& ground_b,
                              const SearchOptions& opts) {
    check_search_ground(ground_a);
    check_search_ground(ground_b);
    Strategy strategy = opts.strategy;
    if (strategy == Strategy::Auto) {
        if (ground_a.size() <= 16)
            strategy = Strategy::SubsetExhaustive;
        else if (ground_a.size() <= 22)
            strategy = Strategy::GaloisClosed;
        else
            strategy = Strategy::AntichainClosed;
    }
    const PairEngine engine(ground_a, ground_b);
    SearchResult result;
    result.strategy = strategy;
    Candidate best;
    switch (strategy) {
        case Strategy::SubsetExhaustive:
            best = search_exhaustive(engine, opts, result.nodes_explored);
            break;
        case Strategy::GaloisClosed:
            best = search_galois(engine, opts, result.nodes_explored);
            break;
        case Strategy::AntichainClosed:
        case Strategy::Auto:
            best = search_antichain(engine, ground_a, opts, result.nodes_explored);
            break;
    }
    result.max_product = best.product;
    result.witness_a = select(ground_a, best.a);
    result.witness_b = select(ground_b, best.b);
    if (!are_cross_intersecting(result.witness_a, result.witness_b) ||
        result.witness_a.size() * result.witness_b.size() != result.max_product)
        throw VerificationFailure(VerificationFailure::Kind::IdentityViolation,
                                  "search produced an inconsistent witness");
    return result;
}

SearchResult max_product_pair(const GroundSpec& ground_a, const GroundSpec& ground_b,
                              const SearchOptions& opts) {
    SearchResult result = max_product_over(ground_a.family(), ground_b.family(), opts);
    result.bound = star_count(ground_a.family()) * star_count(ground_b.family());
    result.equality = result.max_product == *result.bound;
    return result;
}

KSearchResult max_product_k(std::span<const SetFamily> grounds, const SearchOptions& opts) {
    const std::size_t k = grounds.size();
    if (k < 2) throw ParameterError("need at least two grounds");
    if (k > 8) throw BudgetExceeded("k-fold search limited to 8 families");
    for (const auto& g : grounds) check_search_ground(g);

    std::vector<MaskPoset> posets;
    for (const auto& g : grounds) posets.push_back(MaskPoset::inclusion(g));
    // disjoint[i][p][y]: members of grounds[p] missing member y of grounds[i].
    std::vector<std::vector<std::vector<Mask>>> disjoint(k, std::vector<std::vector<Mask>>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t p = 0; p < k; ++p) {
            const auto& wi = grounds[i].words();
            const auto& wp = grounds[p].words();
            disjoint[i][p].assign(wi.size(), 0);
            for (std::size_t y = 0; y < wi.size(); ++y)
                for (std::size_t x = 0; x < wp.size(); ++x)
                    if (!(wi[y] & wp[x])) disjoint[i][p][y] |= bit_of(x);
        }

    std::vector<Mask> chosen(k, 0), best_masks;
    std::uint64_t best_product = 0, nodes = 0;
    bool have_best = false;
    auto allowed = [&](std::size_t i) {
        Mask out = 0;
        for (std::size_t y = 0; y < grounds[i].size(); ++y) {
            bool ok = true;
            for (std::size_t p = 0; p < i && ok; ++p) ok = !(disjoint[i][p][y] & chosen[p]);
            if (ok) out |= bit_of(y);
        }
        return out;
    };
    auto lex_less = [](const std::vector<Mask>& x, const std::vector<Mask>& y) {
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != y[i]) return mask_less(x[i], y[i]);
        return false;
    };
    auto recurse = [&](auto&& self, std::size_t level) -> void {
        if (level + 1 == k) {
            if (++nodes > opts.node_budget)
                throw BudgetExceeded("k-fold search exceeded the node budget");
            chosen[level] = allowed(level);
            std::uint64_t product = 1;
            for (Mask m : chosen) product *= static_cast<std::uint64_t>(std::popcount(m));
            if (!have_best || product > best_product ||
                (product == best_product && lex_less(chosen, best_masks))) {
                have_best = true;
                best_product = product;
                best_masks = chosen;
            }
            return;
        }
        const Mask open = allowed(level);
        for_each_antichain(posets[level], {0, open}, [&](Mask antichain) {
            chosen[level] = posets[level].up_closure(antichain);
            self(self, level + 1);
            return true;
        });
    };
    recurse(recurse, 0);

    KSearchResult result;
    result.max_product = best_product;
    result.nodes_explored = nodes;
    for (std::size_t i = 0; i < k; ++i) result.witnesses.push_back(select(grounds[i], best_masks[i]));
    if (!are_cross_intersecting_k(result.witnesses))
        throw VerificationFailure(VerificationFailure::Kind::IdentityViolation,
                                  "k-fold search produced an inconsistent witness");
    return result;
}

SearchResult verify_theorem1(int m, int n, int r, int s, const SearchOptions& opts) {
    if (m < 1 || n < 1 || r < 1 || r > m || s < 1 || s > n)
        throw ParameterError("verify_theorem1 requires m, n >= 1, r in [m], s in [n]");
    const GroundSpec ga = GroundSpec::bounded(m, r);
    const GroundSpec gb = GroundSpec::bounded(n, s);
    SearchResult result = max_product_pair(ga, gb, opts);
    const std::uint64_t bound = star_size_bound(m, r) * star_size_bound(n, s);
    const SetFamily sa = star(ga.family(), 1), sb = star(gb.family(), 1);
    if (!are_cross_intersecting(sa, sb) || sa.size() * sb.size() != bound || *result.bound != bound)
        throw VerificationFailure(VerificationFailure::Kind::IdentityViolation,
                                  "star witness does not attain the closed-form bound");
    result.bound = bound;
    result.equality = result.max_product == bound;
    if (!result.equality)
        throw VerificationFailure(VerificationFailure::Kind::BoundViolation,
                                  "exact maximum " + std::to_string(result.max_product) +
                                      " differs from bound " + std::to_string(bound));
    return result;
}

SearchResult verify_theorem4(const SetFamily& g, const SetFamily& h, const SearchOptions& opts) {
    SearchResult result = max_product_pair(GroundSpec::hereditary(g), GroundSpec::hereditary(h), opts);
    if (!result.equality)
        throw VerificationFailure(VerificationFailure::Kind::BoundViolation,
                                  "exact maximum " + std::to_string(result.max_product) +
                                      " differs from |G(1)||H(1)| = " +
                                      std::to_string(*result.bound));
    return result;
}

KSearchResult verify_corollary3(std::span<const int> n_list, const SearchOptions& opts) {
    if (n_list.size() < 2) throw ParameterError("verify_corollary3 requires k >= 2");
    std::vector<SetFamily> grounds;
    int exponent = 0;
    for (int n : n_list) {
        if (n < 1 || n > 6) throw ParameterError("verify_corollary3 requires 1 <= n_i <= 6");
        grounds.push_back(power_set(n));
        exponent += n - 1;
    }
    if (exponent > 62) throw BudgetExceeded("bound does not fit in 64 bits");
    KSearchResult result = max_product_k(grounds, opts);
    result.bound = std::uint64_t{1} << exponent;
    result.equality = result.max_product == *result.bound;
    if (!result.equality)
        throw VerificationFailure(VerificationFailure::Kind::BoundViolation,
                                  "exact maximum " + std::to_string(result.max_product) +
                                      " differs from 2^" + std::to_string(exponent));
    return result;
}

KSearchResult verify_theorem5(std::span<const SetFamily> grounds, const SearchOptions& opts) {
    if (grounds.size() < 2) throw ParameterError("verify_theorem5 requires k >= 2");
    std::uint64_t bound = 1;
    for (const auto& g : grounds) {
        (void)GroundSpec::hereditary(g);
        bound *= star_count(g);
    }
    KSearchResult result = max_product_k(grounds, opts);
    result.bound = bound;
    result.equality = result.max_product == bound;
    if (!result.equality)
        throw VerificationFailure(VerificationFailure::Kind::BoundViolation,
                                  "exact maximum " + std::to_string(result.max_product) +
                                      " differs from the product of star sizes " +
                                      std::to_string(bound));
    return result;
}

int mod_star(int x, int k) {
    if (k <= 0) throw ParameterError("mod* requires a positive modulus");
    const int r = ((x % k) + k) % k;
    return r == 0 ? k : r;
}

bool pairwise_to_k_product(std::span<const std::int64_t> a, std::span<const std::int64_t> s) {
    const int k = static_cast<int>(a.size());
    if (k < 2 || a.size() != s.size())
        throw ParameterError("pairwise_to_k_product needs two equal-length lists of length >= 2");
    for (int i = 0; i < k; ++i)
        if (a[i] < 0 || s[i] < 0) throw PreconditionError("sizes must be non-negative");
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && Big(a[i]) * a[j] > Big(s[i]) * s[j])
                throw PreconditionError("pairwise bound fails for indices " + std::to_string(i + 1) +
                                        ", " + std::to_string(j + 1));

    Big lhs = 1, rhs = 1, prod_a = 1, prod_s = 1;
    std::vector<int> uses(k + 1, 0);
    bool chain_holds = true;
    for (int t = 1; t <= k; ++t) {
        const int x = mod_star(2 * t - 1, k), y = mod_star(2 * t, k);
        if (x == y) throw VerificationFailure(VerificationFailure::Kind::IdentityViolation,
                                              "mod* pairing produced a repeated index");
        ++uses[x];
        ++uses[y];
        const Big left = Big(a[x - 1]) * a[y - 1], right = Big(s[x - 1]) * s[y - 1];
        chain_holds = chain_holds && left <= right;
        lhs *= left;
        rhs *= right;
    }
    for (int i = 0; i < k; ++i) {
        prod_a *= a[i];
        prod_s *= s[i];
    }
    if (std::any_of(uses.begin() + 1, uses.end(), [](int u) { return u != 2; }) ||
        lhs != prod_a * prod_a || rhs != prod_s * prod_s || !chain_holds || lhs > rhs)
        throw VerificationFailure(VerificationFailure::Kind::IdentityViolation,
                                  "squaring argument does not reassemble");
    // Non-negative numbers: x^2 <= y^2 implies x <= y.
    return prod_a <= prod_s;
}

}  // namespace crossfam
