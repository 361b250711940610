#include "oracles.hpp"
#include "support.hpp"

#include <oddsub/families.hpp>
#include <oddsub/solvers.hpp>
#include <oddsub/tree_eps.hpp>

#include <doctest.h>

#include <set>

using namespace oddsub;

TEST_SUITE("tree-eps")
{
    TEST_CASE("lower-bound formula")
    {
        CHECK(f_lower(4) == 2);
        CHECK(f_lower(7) == 4);
        CHECK(f_lower(10) == 4);
        CHECK(f_lower(2) == 0);
        CHECK(f_lower(1) == 0);
        CHECK(f_lower(3) == 2);
        CHECK(f_lower(5) == 2);
        CHECK(f_lower(8) == 4);
        CHECK(error_code([] { f_lower(0); }) == ErrorCode::InvalidArgument);
    }

    TEST_CASE("exact values on small trees")
    {
        CHECK(eps_tree_exact(path(4)).value == 2);
        CHECK(eps_tree_exact(star(5)).value == 4);
        CHECK(eps_tree_exact(star(6)).value == 4);
        CHECK(eps_tree_exact(complete(2)).value == 0);
        CHECK(eps_tree_exact(Graph(1)).value == 0);
        CHECK(check_tree_bound(path(4)));
        CHECK(check_tree_bound(star(6)));
    }

    TEST_CASE("non-trees are rejected")
    {
        CHECK(error_code([] { eps_tree_exact(cycle(4)); }) == ErrorCode::NotATree);
        CHECK(error_code([] { eps_tree_exact(Graph(2)); }) == ErrorCode::NotATree);
        CHECK(error_code([] { eps_tree_exact(Graph(0)); }) == ErrorCode::NotATree);
        CHECK(error_code([] { check_tree_bound(complete(3)); }) == ErrorCode::NotATree);
        CHECK(error_code([] { eps_tree_exact(path(3), 3); }) == ErrorCode::VertexOutOfRange);
        CHECK_FALSE(is_tree(k_copies(complete(2), 2)));
    }

    TEST_CASE("unlabelled tree counts")
    {
        std::vector<std::size_t> known{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301};
        for (int n = 1; n <= 13; ++n)
            CHECK(unlabelled_trees(n).size() == known[n - 1]);
    }

    TEST_CASE("Pruefer sweep agrees with the unlabelled enumeration")
    {
        for (int n = 3; n <= 8; ++n) {
            std::set<std::string> classes;
            std::vector<int> seq(n - 2, 0);
            while (true) {
                classes.insert(tree_canonical_form(pruefer_decode(seq)));
                int i = 0;
                while (i < n - 2 && ++seq[i] == n)
                    seq[i++] = 0;
                if (i == n - 2)
                    break;
            }
            std::set<std::string> grown;
            for (auto & t : unlabelled_trees(n))
                grown.insert(tree_canonical_form(t));
            CHECK(classes == grown);
        }
    }

    TEST_CASE("canonical form is a relabelling invariant")
    {
        for (std::uint64_t s = 0; s < 30; ++s) {
            auto t = random_tree(15, s);
            std::vector<int> perm(15);
            Rng rng(s);
            for (int i = 0; i < 15; ++i)
                perm[i] = i;
            rng.shuffle(perm);
            CHECK(tree_canonical_form(relabel(t, perm)) == tree_canonical_form(t));
        }
        CHECK(tree_canonical_form(path(5)) != tree_canonical_form(star(5)));
    }

    TEST_CASE("tree DP matches the line-graph route and brute force")
    {
        for (int n = 1; n <= 9; ++n)
            for (auto & t : unlabelled_trees(n)) {
                auto dp = eps_tree_exact(t);
                CHECK(dp.value == eps_exact(t).value);
                CHECK(dp.value == oracle::eps(t));
                CHECK(is_odd_even(t, dp.witness));
                CHECK(static_cast<int>(dp.witness.size()) == dp.value);
            }
    }

    TEST_CASE("tree DP does not depend on the root")
    {
        for (std::uint64_t s = 0; s < 40; ++s) {
            auto t = random_tree(2 + static_cast<int>(s % 25), s);
            int value = eps_tree_exact(t).value;
            for (int r = 0; r < t.order(); ++r) {
                auto rooted = eps_tree_exact(t, r);
                CHECK(rooted.value == value);
                CHECK(is_odd_even(t, rooted.witness));
            }
        }
    }

    TEST_CASE("adding a leaf never lowers eps")
    {
        for (std::uint64_t s = 0; s < 60; ++s) {
            auto t = random_tree(2 + static_cast<int>(s % 30), s);
            int n = t.order();
            auto edges = t.edges();
            edges.push_back({static_cast<int>(s) % n, n});
            auto grown = Graph::from_edges(n + 1, edges);
            CHECK(eps_tree_exact(grown).value >= eps_tree_exact(t).value);
        }
    }

    TEST_CASE("lower bound on 1000 random trees")
    {
        int failures = 0;
        for (std::uint64_t i = 0; i < 1000; ++i) {
            Rng rng(derive_seed(1000, i));
            int n = 2 + static_cast<int>(rng.below(39));
            if (! check_tree_bound(random_tree(n, rng.next())))
                ++failures;
        }
        CHECK(failures == 0);
    }

    TEST_CASE("paths satisfy the lower bound")
    {
        for (int n = 2; n <= 20; ++n)
            CHECK(eps_tree_exact(path(n)).value >= f_lower(n));
    }
}
