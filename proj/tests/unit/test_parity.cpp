#include "support.hpp"

#include <oddsub/families.hpp>
#include <oddsub/parity.hpp>

#include <doctest.h>

using namespace oddsub;

namespace {
auto mask(int width) -> std::uint64_t
{
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}
}

TEST_SUITE("parity-algebra")
{
    TEST_CASE("identity system")
    {
        auto sol = gf2_solve(Gf2Matrix::identity(3), {0b101, 3});
        REQUIRE(sol.particular);
        CHECK(sol.particular->bits == 0b101);
        CHECK(sol.nullspace_basis.empty());
        CHECK(sol.rank == 3);
    }

    TEST_CASE("zero matrix")
    {
        Gf2Matrix zero(4, 5);
        auto sol = gf2_solve(zero, {0, 4});
        REQUIRE(sol.particular);
        CHECK(sol.particular->bits == 0);
        CHECK(sol.nullspace_basis.size() == 5);
        CHECK(sol.rank == 0);

        CHECK_FALSE(gf2_solve(zero, {0b10, 4}).particular);
    }

    TEST_CASE("dimension checks")
    {
        CHECK(error_code([] { gf2_solve(Gf2Matrix::identity(3), {0, 4}); }) == ErrorCode::DimensionMismatch);
        CHECK(error_code([] { Gf2Matrix(65, 3); }) == ErrorCode::TooLarge);
        CHECK(error_code([] { Gf2Matrix(2, std::vector<std::uint64_t>{0b100}); }) == ErrorCode::DimensionMismatch);
    }

    TEST_CASE("random systems verify by substitution")
    {
        for (std::uint64_t trial = 0; trial < 100; ++trial) {
            Rng rng(derive_seed(5, trial));
            int rows = 1 + static_cast<int>(rng.below(64));
            int cols = 1 + static_cast<int>(rng.below(64));
            std::vector<std::uint64_t> data(rows);
            for (auto & r : data)
                r = rng.next() & mask(cols);
            Gf2Matrix a(cols, data);
            // Half the systems are consistent by construction.
            Gf2Vector b{rng.next() & mask(rows), rows};
            if (trial % 2 == 0)
                b = a.multiply({rng.next() & mask(cols), cols});
            auto sol = gf2_solve(a, b);
            CHECK(static_cast<int>(sol.nullspace_basis.size()) == cols - sol.rank);
            for (const auto & z : sol.nullspace_basis)
                CHECK(a.multiply(z).bits == 0);
            if (trial % 2 == 0)
                REQUIRE(sol.particular);
            if (sol.particular)
                CHECK(a.multiply(*sol.particular) == b);
        }
    }

    TEST_CASE("coset minimum is the smallest member")
    {
        for (std::uint64_t trial = 0; trial < 40; ++trial) {
            Rng rng(derive_seed(6, trial));
            int cols = 6;
            std::vector<std::uint64_t> data(3);
            for (auto & r : data)
                r = rng.next() & mask(cols);
            auto sol = gf2_solve(Gf2Matrix(cols, data), {0, 3});
            auto x = rng.next() & mask(cols);
            auto best = lex_min_in_coset(x, sol.nullspace_basis);
            // Walk the whole coset and compare.
            std::size_t k = sol.nullspace_basis.size();
            for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
                auto y = x;
                for (std::size_t i = 0; i < k; ++i)
                    if ((pick >> i) & 1U)
                        y ^= sol.nullspace_basis[i].bits;
                CHECK_FALSE(lex_less(VertexSet(y), VertexSet(best)));
            }
        }
    }

    TEST_CASE("even-even partition small cases")
    {
        auto edgeless = gallai_even_even(Graph(4));
        CHECK(edgeless.s.empty());
        CHECK(is_valid_partition(Graph(4), edgeless));

        // K_2 has odd degrees, so the only valid splits separate the two ends.
        auto k2 = gallai_even_even(complete(2));
        CHECK(k2.s.size() == 1);
        CHECK(is_valid_partition(complete(2), k2));
        int valid = 0;
        for (std::uint64_t s = 0; s < 4; ++s)
            valid += is_valid_partition(complete(2), {GallaiKind::EvenEven, VertexSet(s)}) ? 1 : 0;
        CHECK(valid == 2);
    }

    TEST_CASE("even-odd partition small cases")
    {
        auto k2 = gallai_even_odd(complete(2));
        CHECK(k2.s == VertexSet{0, 1});
        CHECK(gallai_even_odd(Graph(3)).s.empty());
        CHECK(is_valid_partition(Graph(0), gallai_even_odd(Graph(0))));
    }

    TEST_CASE("partitions exist on 500 random graphs")
    {
        for (auto & g : random_corpus(500, 1, 20, 17)) {
            auto ee = gallai_even_even(g);
            auto eo = gallai_even_odd(g);
            CHECK(is_valid_partition(g, ee));
            CHECK(is_valid_partition(g, eo));
            CHECK(all_degrees_even(g, ee.s));
            CHECK(all_degrees_even(g, g.vertices() - ee.s));
            CHECK(all_degrees_even(g, g.vertices() - eo.s));
            if (! eo.s.empty())
                CHECK(all_degrees_odd(g, eo.s));
            auto big = large_even_subgraph(g);
            CHECK(2 * big.size() >= g.order());
            CHECK(all_degrees_even(g, big));
        }
    }

    TEST_CASE("large even subgraph small cases")
    {
        CHECK(large_even_subgraph(complete(2)).size() == 1);
        auto c5 = large_even_subgraph(cycle(5));
        CHECK(c5.size() >= 3);
        CHECK(all_degrees_even(cycle(5), c5));
        // P_4 is the only 4-vertex induced subgraph and it has odd ends.
        for (std::uint64_t s = 0; s < 32; ++s)
            if (std::popcount(s) == 4)
                CHECK_FALSE(all_degrees_even(cycle(5), VertexSet(s)));
    }

    TEST_CASE("adjacency matrix matches the graph")
    {
        auto g = petersen();
        auto a = adjacency_matrix(g);
        CHECK(a.rows() == 10);
        CHECK(a.cols() == 10);
        for (int u = 0; u < 10; ++u)
            for (int v = 0; v < 10; ++v)
                CHECK(a.get(u, v) == g.adjacent(u, v));
    }
}
