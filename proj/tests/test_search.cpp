#include "doctest.h"

#include <cstdlib>
#include <random>

#include "crossfam/hereditary.hpp"
#include "crossfam/search.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace crossfam;

namespace {

SetFamily random_ground(std::mt19937_64& rng, int n, std::size_t max_members) {
    std::vector<Word> words;
    for (Word w = 0; w <= full_word(n); ++w) words.push_back(w);
    std::shuffle(words.begin(), words.end(), rng);
    words.resize(std::min<std::size_t>(words.size(), 1 + rng() % max_members));
    return SetFamily(n, std::move(words));
}

SearchOptions with(Strategy s, unsigned threads = 1) {
    SearchOptions o;
    o.strategy = s;
    o.threads = threads;
    return o;
}

}  // namespace

TEST_SUITE("extremal-search") {

TEST_CASE("best_partner") {
    CHECK(best_partner(fam(2, {{1}}), power_set(2)) == fam(2, {{1}, {1, 2}}));
    CHECK(best_partner(SetFamily(2), power_set(2)) == power_set(2));
    CHECK(best_partner(fam(2, {{}}), power_set(2)).empty());
    CHECK(best_partner(fam(2, {{1}}), GroundSpec::bounded(2, 1)) == fam(2, {{1}}));
}

TEST_CASE("galois_closure") {
    // Only {1,2} meets {1,2}'s partner {{1},{2},{1,2}} in every member.
    CHECK(galois_closure(fam(2, {{1, 2}}), power_set(2), power_set(2)) == fam(2, {{1, 2}}));
    const SetFamily closed = fam(2, {{1}, {1, 2}});
    CHECK(galois_closure(closed, power_set(2), power_set(2)) == closed);
    // The empty family closes to the sets meeting every set of 2^[2], of which there are none.
    CHECK(galois_closure(SetFamily(2), power_set(2), power_set(2)).empty());
    CHECK(galois_closure(SetFamily(2), GroundSpec::bounded(2, 2), GroundSpec::bounded(2, 2)).empty());
}

TEST_CASE("partner and closure laws on random families") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const SetFamily ga = random_ground(rng, n, 20), gb = random_ground(rng, n, 20);
        std::vector<Word> sub, super;
        for (Word w : ga.words()) {
            const bool in = rng() & 1;
            if (in) sub.push_back(w);
            if (in || (rng() & 1)) super.push_back(w);
        }
        const SetFamily a(n, sub), a2(n, super);
        const SetFamily pa = best_partner(a, gb), pa2 = best_partner(a2, gb);
        CHECK(pa2.subfamily_of(pa));
        CHECK(are_cross_intersecting(a, pa));
        for (Word b : pa.words())
            for (Word c : gb.words())
                if ((b & ~c) == 0) CHECK(pa.contains(c));

        const SetFamily ca = galois_closure(a, ga, gb);
        CHECK(a.subfamily_of(ca));
        CHECK(galois_closure(ca, ga, gb) == ca);
        CHECK(ca.subfamily_of(galois_closure(a2, ga, gb)));
    }
}

TEST_CASE("max_product_pair examples") {
    const auto b21 = GroundSpec::bounded(2, 1);
    const SearchResult r = max_product_pair(b21, b21);
    CHECK(r.max_product == 1);
    CHECK(r.witness_a == fam(2, {{1}}));
    CHECK(r.witness_b == fam(2, {{1}}));
    CHECK(r.equality);

    const auto b32 = GroundSpec::bounded(3, 2);
    const SearchResult s = max_product_pair(b32, b32);
    CHECK(s.max_product == 9);
    CHECK(s.witness_a == star(bounded_family(3, 2), 1));
    CHECK(s.witness_b == star(bounded_family(3, 2), 1));

    const auto empty = GroundSpec::hereditary(fam(2, {{}}));
    const SearchResult z = max_product_pair(empty, GroundSpec::hereditary(power_set(2)));
    CHECK(z.max_product == 0);
    CHECK(*z.bound == 0);
    CHECK(z.equality);
}

TEST_CASE("every strategy and thread count agrees with the oracle") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 40; ++t) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const SetFamily ga = random_ground(rng, n, 8), gb = random_ground(rng, n, 8);
        const std::uint64_t expected = oracle::max_product(oracle::from(ga), oracle::from(gb));
        const SearchResult ref = max_product_over(ga, gb, with(Strategy::SubsetExhaustive));
        CHECK(ref.max_product == expected);
        for (Strategy s : {Strategy::SubsetExhaustive, Strategy::GaloisClosed,
                           Strategy::AntichainClosed, Strategy::Auto})
            for (unsigned threads : {1u, 3u}) {
                const SearchResult r = max_product_over(ga, gb, with(s, threads));
                CHECK(r.max_product == expected);
                CHECK(r.witness_a == ref.witness_a);
                CHECK(r.witness_b == ref.witness_b);
                CHECK(r.witness_a.subfamily_of(ga));
                CHECK(r.witness_b.subfamily_of(gb));
                CHECK(are_cross_intersecting(r.witness_a, r.witness_b));
                CHECK(best_partner(r.witness_a, gb) == r.witness_b);
            }
    }
}

TEST_CASE("auto strategy ladder") {
    CHECK(max_product_over(power_set(4), power_set(4)).strategy == Strategy::SubsetExhaustive);
    CHECK(max_product_over(bounded_family(6, 2), power_set(3)).strategy == Strategy::GaloisClosed);
    CHECK(max_product_over(power_set(5), power_set(3)).strategy == Strategy::AntichainClosed);
    CHECK(max_product_over(power_set(5), power_set(3)).max_product == 16 * 4);
}

TEST_CASE("budgets") {
    SearchOptions tight = with(Strategy::SubsetExhaustive);
    tight.node_budget = 100;
    CHECK_THROWS_AS(max_product_over(power_set(4), power_set(4), tight), BudgetExceeded);
    tight.strategy = Strategy::GaloisClosed;
    tight.node_budget = 3;
    CHECK_THROWS_AS(max_product_over(power_set(4), power_set(4), tight), BudgetExceeded);
    tight.strategy = Strategy::AntichainClosed;
    tight.node_budget = 1000;
    CHECK_THROWS_AS(max_product_over(power_set(5), power_set(5), tight), BudgetExceeded);
    CHECK_THROWS_AS(max_product_over(power_set(7), power_set(2)), BudgetExceeded);
    CHECK_THROWS_AS(max_product_k(std::vector<SetFamily>(9, power_set(1))), BudgetExceeded);
}

TEST_CASE("strategy names") {
    CHECK(parse_strategy("galois") == Strategy::GaloisClosed);
    CHECK(parse_strategy("antichain-closed") == Strategy::AntichainClosed);
    CHECK(to_string(Strategy::SubsetExhaustive) == "subset-exhaustive");
    CHECK_THROWS_AS(parse_strategy("greedy"), ParameterError);
}

TEST_CASE("verify_theorem1") {
    CHECK(verify_theorem1(2, 2, 1, 1).max_product == 1);
    CHECK(verify_theorem1(3, 3, 2, 2).max_product == 9);
    const SearchResult r = verify_theorem1(4, 3, 2, 1);
    CHECK(r.max_product == 4);
    CHECK(*r.bound == 4);
    CHECK(r.equality);
    CHECK_THROWS_AS(verify_theorem1(3, 3, 0, 1), ParameterError);
    CHECK_THROWS_AS(verify_theorem1(3, 3, 4, 1), ParameterError);
}

TEST_CASE("verify_theorem4") {
    CHECK(verify_theorem4(fam(2, {{}}), fam(2, {{}})).max_product == 0);
    CHECK(verify_theorem4(power_set(2), power_set(2)).max_product == 4);
    const SetFamily g = downward_closure(fam(3, {{1, 2}, {1, 3}}));
    CHECK(star(g, 1).size() == 3);
    CHECK(verify_theorem4(g, power_set(2)).max_product == 6);
    CHECK_THROWS_AS(verify_theorem4(fam(2, {{}, {2}}), power_set(2)), PreconditionError);
    CHECK_THROWS_AS(verify_theorem4(fam(2, {{1}}), power_set(2)), PreconditionError);
}

TEST_CASE("compressed hereditary pairs over [2] all attain the bound") {
    const auto catalog = enumerate_downsets(2, true).families;
    for (const auto& g : catalog)
        for (const auto& h : catalog) {
            const SearchResult r = verify_theorem4(g, h);
            CHECK(r.max_product == oracle::max_product(oracle::from(g), oracle::from(h)));
        }
}

TEST_CASE("verify_corollary3") {
    const std::vector<int> two{2, 2};
    const KSearchResult r = verify_corollary3(two);
    CHECK(r.max_product == 4);
    REQUIRE(r.witnesses.size() == 2);
    CHECK(r.witnesses[0] == fam(2, {{1}, {1, 2}}));
    CHECK(r.witnesses[1] == fam(2, {{1}, {1, 2}}));
    CHECK(verify_corollary3(std::vector<int>{1, 1}).max_product == 1);
    CHECK(verify_corollary3(std::vector<int>{2, 2, 2}).max_product == 8);
    CHECK(verify_corollary3(std::vector<int>{1, 2, 3}).max_product == 8);
    CHECK_THROWS_AS(verify_corollary3(std::vector<int>{2}), ParameterError);
    CHECK_THROWS_AS(verify_corollary3(std::vector<int>{0, 2}), ParameterError);
}

TEST_CASE("verify_theorem5") {
    CHECK(verify_theorem5(std::vector<SetFamily>{power_set(2), power_set(2)}).max_product == 4);
    CHECK(verify_theorem5(std::vector<SetFamily>{fam(2, {{}}), power_set(2)}).max_product == 0);
    const SetFamily b = bounded_family(2, 1);
    CHECK(verify_theorem5(std::vector<SetFamily>{b, b, b}).max_product == 1);
    CHECK_THROWS_AS(verify_theorem5(std::vector<SetFamily>{fam(2, {{2}}), b}), PreconditionError);
}

TEST_CASE("k-fold search agrees with the oracle") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 25; ++t) {
        const std::size_t k = 2 + rng() % 2;
        std::vector<SetFamily> grounds;
        std::vector<oracle::Family> og;
        for (std::size_t i = 0; i < k; ++i) {
            grounds.push_back(random_ground(rng, 3, k == 2 ? 7 : 5));
            og.push_back(oracle::from(grounds.back()));
        }
        const KSearchResult r = max_product_k(grounds);
        CHECK(r.max_product == oracle::max_product_k(og));
        CHECK(are_cross_intersecting_k(r.witnesses));
        std::uint64_t p = 1;
        for (std::size_t i = 0; i < k; ++i) {
            CHECK(r.witnesses[i].subfamily_of(grounds[i]));
            p *= r.witnesses[i].size();
        }
        CHECK(p == r.max_product);
    }
}

TEST_CASE("mod_star") {
    CHECK(mod_star(3, 3) == 3);
    CHECK(mod_star(4, 3) == 1);
    CHECK(mod_star(6, 3) == 3);
    CHECK(mod_star(1, 2) == 1);
    CHECK_THROWS_AS(mod_star(1, 0), ParameterError);
}

TEST_CASE("pairwise_to_k_product") {
    CHECK(pairwise_to_k_product(std::vector<std::int64_t>{2, 2, 2}, std::vector<std::int64_t>{2, 2, 2}));
    CHECK(pairwise_to_k_product(std::vector<std::int64_t>{1, 4}, std::vector<std::int64_t>{2, 2}));
    CHECK_THROWS_AS(pairwise_to_k_product(std::vector<std::int64_t>{3, 4}, std::vector<std::int64_t>{2, 2}),
                    PreconditionError);
    CHECK_THROWS_AS(pairwise_to_k_product(std::vector<std::int64_t>{-1, 1}, std::vector<std::int64_t>{1, 1}),
                    PreconditionError);
    CHECK_THROWS_AS(pairwise_to_k_product(std::vector<std::int64_t>{1}, std::vector<std::int64_t>{1}),
                    ParameterError);

    // Large entries go through exact arithmetic.
    const std::int64_t big = std::int64_t{1} << 40;
    CHECK(pairwise_to_k_product(std::vector<std::int64_t>(6, big), std::vector<std::int64_t>(6, big)));

    std::mt19937_64 rng(3);
    int checked = 0;
    while (checked < 500) {
        const int k = 2 + static_cast<int>(rng() % 5);
        std::vector<std::int64_t> a(k), s(k);
        for (int i = 0; i < k; ++i) {
            s[i] = static_cast<std::int64_t>(rng() % 20);
            a[i] = static_cast<std::int64_t>(rng() % 25);
        }
        bool pairwise = true;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (i != j && a[i] * a[j] > s[i] * s[j]) pairwise = false;
        if (!pairwise) continue;
        ++checked;
        CHECK(pairwise_to_k_product(a, s));
    }
}

TEST_CASE("CROSSFAM_BUDGET overrides the default budget") {
    ::setenv("CROSSFAM_BUDGET", "1234", 1);
    CHECK(default_node_budget() == 1234);
    ::setenv("CROSSFAM_BUDGET", "junk", 1);
    CHECK(default_node_budget() == 500'000'000);
    ::unsetenv("CROSSFAM_BUDGET");
    CHECK(default_node_budget() == 500'000'000);
}

}  // TEST_SUITE
