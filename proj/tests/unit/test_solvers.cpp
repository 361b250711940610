#include "oracles.hpp"
#include "support.hpp"

#include <oddsub/families.hpp>
#include <oddsub/solvers.hpp>

#include <doctest.h>

using namespace oddsub;

TEST_SUITE("solvers")
{
    TEST_CASE("odd induced membership")
    {
        CHECK(is_odd_induced(complete(2), VertexSet{0, 1}));
        CHECK_FALSE(is_odd_induced(path(3), VertexSet{0, 1, 2}));
        CHECK_FALSE(is_odd_induced(complete(2), VertexSet{}));
        CHECK(is_odd_induced(scott_counterexample().graph(), VertexSet{1, 3, 6, 8, 11, 13}));
        CHECK_FALSE(is_odd_induced(complete(2), VertexSet{0, 1, 5}));
    }

    TEST_CASE("f_o of small named graphs")
    {
        CHECK(fo_exact(complete(2)).value == 2);
        CHECK(fo_exact(complete(7)).value == 6);
        CHECK(fo_exact(star(4)).value == 4);
        CHECK(fo_exact(cycle(4)).value == 2);
        CHECK(fo_exact(Graph(1)).value == 0);
        CHECK(fo_exact(Graph(1)).witness.empty());
        CHECK(fo_exact(Graph(0)).value == 0);
        CHECK(fo_exact(petersen()).value == oracle::fo(petersen()).value);
    }

    TEST_CASE("f_o of the Heawood bipartite complement and its copies")
    {
        auto g = scott_counterexample().graph();
        auto one = fo_exact(g);
        CHECK(one.value == 6);
        CHECK(is_odd_induced(g, one.witness));
        auto two = fo_exact(k_copies(g, 2));
        CHECK(two.value == 12);
        CHECK(is_odd_induced(k_copies(g, 2), two.witness));
    }

    TEST_CASE("f_o of line graphs of complete graphs")
    {
        for (int n : {4, 6, 8}) {
            auto g = line_complete(n);
            auto r = fo_exact(g);
            CHECK(r.value == n * (n - 2) / 4);
            CHECK(is_odd_induced(g, r.witness));
        }
    }

    TEST_CASE("f_o matches exhaustive enumeration on 500 graphs")
    {
        int mismatches = 0;
        for (auto & g : random_corpus(500, 1, 8, 2024)) {
            auto fast = fo_exact(g);
            auto slow = oracle::fo(g);
            if (fast.value != slow.value || fast.witness != slow.witness)
                ++mismatches;
        }
        CHECK(mismatches == 0);
    }

    TEST_CASE("f_o witness is the lexicographically smallest optimum on larger graphs")
    {
        for (auto & g : random_corpus(40, 9, 14, 77)) {
            auto fast = fo_exact(g);
            auto slow = oracle::fo(g);
            CHECK(fast.value == slow.value);
            CHECK(fast.witness == slow.witness);
        }
    }

    TEST_CASE("parallel search returns the same optimum")
    {
        for (auto & g : random_corpus(12, 20, 26, 5)) {
            auto serial = fo_exact(g, {default_node_budget(), 1});
            auto parallel = fo_exact(g, {default_node_budget(), 4});
            CHECK(serial.value == parallel.value);
            CHECK(serial.witness == parallel.witness);
        }
        auto lk8 = fo_exact(line_complete(8), {default_node_budget(), 3});
        CHECK(lk8.value == 12);
        CHECK(lk8.witness == fo_exact(line_complete(8)).witness);
    }

    TEST_CASE("f_o is additive over disjoint copies")
    {
        for (auto & g : random_corpus(30, 2, 7, 31)) {
            int single = fo_exact(g).value;
            for (int k : {2, 3})
                CHECK(fo_exact(k_copies(g, k)).value == k * single);
        }
    }

    TEST_CASE("exhausting the node budget")
    {
        auto g = random_graph(40, 0.5, 3);
        auto r = fo_search(g, {50, 1});
        CHECK_FALSE(r.complete);
        CHECK(r.value % 2 == 0);
        if (r.value > 0)
            CHECK(is_odd_induced(g, r.witness));
        try {
            fo_exact(g, {50, 1});
            FAIL("expected BudgetExceeded");
        }
        catch (const BudgetExceeded & e) {
            CHECK(e.code() == ErrorCode::BudgetExceeded);
            CHECK(e.lower_bound() == r.value);
        }
    }

    TEST_CASE("odd-even edge subgraphs")
    {
        CHECK(eps_exact(path(4)).value == 2);
        CHECK(eps_exact(complete(2)).value == 0);
        CHECK(eps_exact(star(5)).value == 4);
        CHECK(eps_exact(path(3)).value == 2);
        auto r = eps_exact(petersen());
        CHECK(is_odd_even(petersen(), r.witness));
        CHECK(static_cast<int>(r.witness.size()) == r.value);

        CHECK(is_odd_even(path(3), {}));
        CHECK_FALSE(is_odd_even(path(3), {{0, 2}}));
        CHECK_FALSE(is_odd_even(path(3), {{0, 1}, {0, 1}}));
        CHECK_FALSE(is_odd_even(complete(2), {{0, 1}}));
    }

    TEST_CASE("eps through the line graph matches brute force over edge subsets")
    {
        for (auto & g : random_corpus(150, 1, 7, 41)) {
            if (g.size() > 16)
                continue;
            auto r = eps_exact(g);
            CHECK(r.value == oracle::eps(g));
            CHECK(is_odd_even(g, r.witness));
        }
    }

    TEST_CASE("complete-graph construction")
    {
        CHECK(eps_complete_construction(2).value == 0);
        CHECK(eps_complete_construction(4).value == 2);
        for (int n : {4, 6, 8}) {
            auto r = eps_complete_construction(n);
            CHECK(r.value == n * (n - 2) / 4);
            CHECK(is_odd_even(complete(n), r.witness));
            CHECK(r.value == eps_exact(complete(n)).value);
        }
        CHECK(error_code([] { eps_complete_construction(5); }) == ErrorCode::OddInput);
        CHECK(error_code([] { eps_complete_construction(0); }) == ErrorCode::InvalidArgument);
    }

    TEST_CASE("chromatic number examples")
    {
        for (int n = 1; n <= 8; ++n)
            CHECK(chromatic_number(complete(n)) == n);
        CHECK(chromatic_number(Graph(0)) == 0);
        CHECK(chromatic_number(Graph(5)) == 1);
        CHECK(chromatic_number(scott_counterexample().graph()) == 2);
        CHECK(chromatic_number(heawood()) == 2);
        CHECK(chromatic_number(cycle(5)) == 3);
        CHECK(chromatic_number(petersen()) == 3);
        CHECK(chromatic_number(line_graph(complete(4))) == 3);
        CHECK(chromatic_number(line_graph(petersen())) == 4);
        CHECK(chromatic_number(line_complete(8)) == 7);
        CHECK(chromatic_number(line_graph(complete(7))) == 7);

        auto r = chromatic_search(line_graph(complete(4)));
        CHECK(r.complete);
        CHECK(is_proper_colouring(line_graph(complete(4)), r.colouring));
    }

    TEST_CASE("chromatic number matches exhaustive colouring")
    {
        for (auto & g : random_corpus(120, 1, 7, 51)) {
            auto r = chromatic_search(g);
            CHECK(r.complete);
            CHECK(r.value == oracle::chromatic(g));
            CHECK(is_proper_colouring(g, r.colouring));
            CHECK(max_clique(g).size() <= r.value);
        }
    }

    TEST_CASE("edge chromatic number lies between the maximum degree and one more")
    {
        for (auto & g : random_corpus(80, 2, 8, 61)) {
            if (g.size() == 0)
                continue;
            int chi = chromatic_number(line_graph(g));
            CHECK(chi >= g.max_degree());
            CHECK(chi <= g.max_degree() + 1);
        }
    }

    TEST_CASE("maximum clique and DSATUR")
    {
        CHECK(max_clique(complete(6)).size() == 6);
        CHECK(max_clique(petersen()).size() == 2);
        CHECK(max_clique(Graph(3)).size() == 1);
        for (auto & g : random_corpus(50, 1, 20, 71))
            CHECK(is_proper_colouring(g, dsatur_colouring(g)));
        CHECK_FALSE(is_proper_colouring(complete(2), {0, 0}));
        CHECK_FALSE(is_proper_colouring(complete(2), {0}));
    }

    TEST_CASE("P3 packings")
    {
        CHECK(p3_packing_max(complete(4)).value == 1);
        CHECK(p3_packing_max(path(3)).value == 1);
        CHECK(p3_packing_max(path(2)).value == 0);
        auto pet = p3_packing_max(petersen());
        CHECK(pet.value == 3);
        VertexSet used;
        for (auto [a, b, c] : pet.paths) {
            CHECK(petersen().adjacent(a, b));
            CHECK(petersen().adjacent(b, c));
            CHECK((used & VertexSet{a, b, c}).empty());
            used = used | VertexSet{a, b, c};
        }
        CHECK(error_code([] { p3_packing_max(Graph(17)); }) == ErrorCode::TooLarge);
    }

    TEST_CASE("P3 packing matches plain recursion")
    {
        for (auto & g : random_corpus(80, 1, 9, 81))
            CHECK(p3_packing_max(g).value == oracle::p3(g));
        for (int n : {4, 6, 8, 10})
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                auto g = random_cubic(n, seed);
                CHECK(p3_packing_max(g).value == oracle::p3(g));
            }
    }
}
