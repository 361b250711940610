#include "support.hpp"

#include <oddsub/families.hpp>
#include <oddsub/solvers.hpp>

#include <doctest.h>

#include <algorithm>

using namespace oddsub;

TEST_SUITE("families")
{
    TEST_CASE("projective planes satisfy the axioms")
    {
        for (int q : {2, 3, 5, 7, 11}) {
            auto plane = projective_plane(q);
            CHECK(plane.points.size() == static_cast<std::size_t>(q * q + q + 1));
            CHECK(plane.lines.size() == plane.points.size());
            for (const auto & line : plane.lines)
                CHECK(line.size() == static_cast<std::size_t>(q + 1));
            CHECK(check_plane_axioms(plane).all());
        }
        CHECK(error_code([] { projective_plane(4); }) == ErrorCode::NotPrime);
        CHECK(error_code([] { projective_plane(1); }) == ErrorCode::NotPrime);
        CHECK(error_code([] { projective_plane(13); }) == ErrorCode::TooLarge);
    }

    TEST_CASE("the axiom checker rejects broken planes")
    {
        auto plane = fano_plane();
        std::swap(plane.lines[0][0], plane.lines[1][0]);
        auto axioms = check_plane_axioms(plane);
        CHECK_FALSE(axioms.all());
        CHECK_FALSE(axioms.two_points_one_line);
    }

    TEST_CASE("Fano plane from the four-set complements")
    {
        auto plane = fano_plane();
        std::vector<std::vector<int>> expected{
            {2, 4, 5}, {3, 5, 6}, {0, 4, 6}, {0, 1, 5}, {1, 2, 6}, {0, 2, 3}, {1, 3, 4}};
        CHECK(plane.lines == expected);
        CHECK(check_plane_axioms(plane).all());
        // Point 1 lies on 157, 126 and 134.
        int through_first = 0;
        for (const auto & line : plane.lines)
            if (std::find(line.begin(), line.end(), 0) != line.end())
                ++through_first;
        CHECK(through_first == 3);
        CHECK(is_isomorphic(incidence_graph(plane).graph(), incidence_graph(projective_plane(2)).graph()));
    }

    TEST_CASE("incidence graphs")
    {
        auto h = incidence_graph(fano_plane()).graph();
        CHECK(h.order() == 14);
        CHECK(h.size() == 21);
        CHECK(h.is_regular(3));
        CHECK(girth(h) == 6);
        CHECK(is_isomorphic(h, heawood()));

        auto p3 = incidence_graph(projective_plane(3)).graph();
        CHECK(p3.order() == 26);
        CHECK(p3.is_regular(4));
        CHECK(error_code([] { incidence_graph(projective_plane(7)); }) == ErrorCode::TooLarge);
    }

    TEST_CASE("the Heawood bipartite complement")
    {
        auto s = scott_counterexample();
        CHECK(s.graph().order() == 14);
        CHECK(s.graph().is_regular(4));
        CHECK_FALSE(contains_k23(s.graph()));
        CHECK(s.name(0) == "1");
        CHECK(s.name(7) == "1247");
        CHECK(s.name(13) == "1367");
        CHECK(s.side_set(Side::X) == VertexSet::full(7));
        // Each four-set is the complement of the Fano line with the same index.
        auto fano = fano_plane();
        for (int j = 0; j < 7; ++j)
            for (int p : fano.lines[j])
                CHECK_FALSE(s.graph().adjacent(p, 7 + j));
    }

    TEST_CASE("line graphs of complete graphs")
    {
        auto octahedron = line_complete(4);
        CHECK(octahedron.order() == 6);
        CHECK(octahedron.is_regular(4));
        CHECK(line_complete(8).order() == 28);
        CHECK(is_isomorphic(line_complete(3), complete(3)));
        CHECK(line_complete(11).order() == 55);
        CHECK(error_code([] { line_complete(12); }) == ErrorCode::TooLarge);
    }

    TEST_CASE("named graphs")
    {
        CHECK(complete(5).size() == 10);
        CHECK(complete_bipartite(2, 3).graph().size() == 6);
        CHECK(path(1).size() == 0);
        CHECK(path(5).size() == 4);
        CHECK(cycle(5).is_regular(2));
        CHECK(chromatic_number(cycle(5)) == 3);
        CHECK(star(5).degree(0) == 4);
        CHECK(petersen().is_regular(3));
        CHECK(girth(petersen()) == 5);
        CHECK(prism3().is_regular(3));
        CHECK(heawood().is_regular(3));
        CHECK(heawood().size() == 21);
        CHECK(error_code([] { cycle(2); }) == ErrorCode::InvalidArgument);
    }

    TEST_CASE("random trees")
    {
        for (std::uint64_t s = 0; s < 20; ++s) {
            auto t = random_tree(10, s);
            CHECK(t.size() == 9);
            CHECK(is_connected(t));
        }
        CHECK(random_tree(1, 0).order() == 1);
        CHECK(random_tree(2, 0).size() == 1);
    }

    TEST_CASE("Pruefer decoding")
    {
        // A constant sequence decodes to a star centred at that vertex.
        auto t = pruefer_decode({3, 3, 3, 3});
        CHECK(t.order() == 6);
        CHECK(t.degree(3) == 5);
        CHECK(pruefer_decode({}).order() == 2);
        CHECK(error_code([] { pruefer_decode({7}); }) == ErrorCode::VertexOutOfRange);
    }

    TEST_CASE("random cubic graphs")
    {
        for (int n : {4, 6, 10, 20, 40})
            for (std::uint64_t s = 0; s < 5; ++s) {
                auto g = random_cubic(n, s);
                CHECK(g.order() == n);
                CHECK(g.is_regular(3));
            }
        CHECK(error_code([] { random_cubic(5, 0); }) == ErrorCode::InvalidArgument);
    }

    TEST_CASE("generators are deterministic")
    {
        for (std::uint64_t s : {0ULL, 1ULL, 42ULL, 0xdeadbeefULL}) {
            CHECK(write_graph6(random_tree(30, s)) == write_graph6(random_tree(30, s)));
            CHECK(write_graph6(random_cubic(20, s)) == write_graph6(random_cubic(20, s)));
            CHECK(write_graph6(random_graph(25, 0.3, s)) == write_graph6(random_graph(25, 0.3, s)));
        }
        CHECK(write_graph6(random_graph(25, 0.3, 1)) != write_graph6(random_graph(25, 0.3, 2)));
        auto a = random_corpus(20, 3, 10, 9), b = random_corpus(20, 3, 10, 9);
        CHECK(a == b);
        // Item i depends only on (seed, i).
        auto longer = random_corpus(30, 3, 10, 9);
        CHECK(std::equal(a.begin(), a.end(), longer.begin()));
    }

    TEST_CASE("random graphs respect edge probability extremes")
    {
        CHECK(random_graph(10, 0.0, 1).size() == 0);
        CHECK(random_graph(10, 1.0, 1) == complete(10));
        CHECK(error_code([] { random_graph(10, 1.5, 1); }) == ErrorCode::InvalidArgument);
    }

    TEST_CASE("the rng is uniform enough and reproducible")
    {
        Rng rng(1);
        std::vector<int> counts(6, 0);
        for (int i = 0; i < 60000; ++i)
            ++counts[rng.below(6)];
        for (int c : counts)
            CHECK(std::abs(c - 10000) < 500);
        Rng a(5), b(5);
        for (int i = 0; i < 10; ++i)
            CHECK(a.next() == b.next());
        CHECK(derive_seed(1, 0) != derive_seed(1, 1));
        CHECK(derive_seed(1, 0) != derive_seed(2, 0));
    }
}
