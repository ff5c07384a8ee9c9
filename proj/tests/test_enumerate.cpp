#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "blockcodes/enumerate.hpp"
#include "blockcodes/families.hpp"
#include "blockcodes/solver.hpp"
#include "support.hpp"

using namespace blockcodes;
using namespace testing;

namespace {

std::set<CanonicalForm> forms(const std::vector<Graph>& gs) {
    std::set<CanonicalForm> out;
    for (const Graph& g : gs) out.insert(canonical_form(g));
    return out;
}

}  // namespace

TEST_CASE("canonical form examples") {
    const CanonicalForm p = canonical_form(p3());
    CHECK(p.n == 3);
    CHECK(canonical_form(Graph(3, {{0, 2}, {1, 2}})) == p);
    CHECK(canonical_form(Graph(3, {{0, 1}, {0, 2}})) == p);
    CHECK_FALSE(canonical_form(clique(3)) == p);
    const Graph centered_last(4, {{0, 3}, {1, 3}, {2, 3}});
    CHECK(canonical_form(star(3)) == canonical_form(centered_last));
    CHECK(canonical_form(Graph(0)).bits.empty());
    CHECK_THROWS_AS(canonical_form(path(11)), SizeLimitExceeded);
}

TEST_CASE("canonical graph realises the form") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 500; ++t) {
        const Graph g = random_graph(1 + t % 10, 0.4, rng);
        const Graph c = canonical_graph(g);
        REQUIRE(c.edge_count() == g.edge_count());
        REQUIRE(canonical_form(c) == canonical_form(g));
        REQUIRE(canonical_graph(c) == c);
        std::string bits;
        for (Vertex j = 1; j < c.n(); ++j) {
            for (Vertex i = 0; i < j; ++i) bits.push_back(c.has_edge(i, j) ? '1' : '0');
        }
        REQUIRE(bits == canonical_form(g).bits);
    }
}

TEST_CASE("canonical form is invariant under relabelling") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 3000; ++t) {
        const Graph g = random_graph(1 + t % 10, t % 3 == 0 ? 0.7 : 0.35, rng);
        REQUIRE(canonical_form(relabel(g, random_perm(g.n(), rng))) == canonical_form(g));
    }
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Graph g = random_block_graph(1 + static_cast<int>(seed % 5), 4, seed);
        if (g.n() > kCanonicalLimit) continue;
        REQUIRE(canonical_form(relabel(g, random_perm(g.n(), rng))) == canonical_form(g));
    }
}

TEST_CASE("equal forms iff isomorphic, all labelled graphs n <= 6") {
    // Isomorphism is decided by minimising over every permutation.
    for (int n = 1; n <= 6; ++n) {
        std::map<std::string, CanonicalForm> by_brute;
        std::map<CanonicalForm, std::string> by_form;
        const std::uint64_t slots = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t m = 0; m < slots; ++m) {
            const Graph g = from_mask(n, m);
            const std::string brute = brute_canonical(g);
            const CanonicalForm form = canonical_form(g);
            auto [a, new_a] = by_brute.emplace(brute, form);
            REQUIRE(a->second == form);
            auto [b, new_b] = by_form.emplace(form, brute);
            REQUIRE(b->second == brute);
        }
        REQUIRE(by_brute.size() == by_form.size());
    }
}

TEST_CASE("small enumerations") {
    CHECK(enumerate_connected_block_graphs(1) == std::vector<Graph>{Graph(1)});
    CHECK(enumerate_connected_block_graphs(2) == std::vector<Graph>{path(2)});
    const auto three = enumerate_connected_block_graphs(3);
    REQUIRE(three.size() == 2);
    CHECK(forms(three) == std::set<CanonicalForm>{canonical_form(p3()), canonical_form(clique(3))});
    CHECK_THROWS_AS(enumerate_connected_block_graphs(0), SizeLimitExceeded);
    CHECK_THROWS_AS(enumerate_connected_block_graphs(10), SizeLimitExceeded);
    CHECK_THROWS_AS(oracle_enumerate(7), SizeLimitExceeded);
}

TEST_CASE("fast enumerator equals the oracle for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const auto fast = enumerate_connected_block_graphs(n);
        const auto slow = oracle_enumerate(n);
        REQUIRE(forms(fast) == forms(slow));
        REQUIRE(fast.size() == slow.size());
        REQUIRE(fast == slow);
    }
}

TEST_CASE("enumeration output is canonical, sorted and well formed") {
    for (int n = 1; n <= 8; ++n) {
        const auto gs = enumerate_connected_block_graphs(n);
        for (std::size_t i = 0; i < gs.size(); ++i) {
            REQUIRE(gs[i].n() == n);
            REQUIRE(is_connected(gs[i]));
            REQUIRE(is_block_graph(gs[i]));
            REQUIRE(canonical_graph(gs[i]) == gs[i]);
            if (i > 0) REQUIRE(canonical_form(gs[i - 1]) < canonical_form(gs[i]));
        }
    }
}

TEST_CASE("class count goldens") {
    // Frozen after the n <= 6 oracle agreement above.
    const int expected[] = {0, 1, 1, 2, 4, 9, 22, 59, 165, 496};
    for (int n = 1; n <= 9; ++n) CHECK(enumerate_connected_block_graphs(n).size() == expected[n]);
}

TEST_CASE("connected graph oracle") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : enumerate_connected_graphs(n)) REQUIRE(is_connected(g));
    }
    // P4, K_{1,3}, C4, paw, diamond, K4.
    CHECK(enumerate_connected_graphs(4).size() == 6);
}
