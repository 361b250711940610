#pragma once

#include <oddsub/graph.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace oddsub {

/// Finite projective plane of order q. Points are 0..q^2+q; each line is a
/// sorted list of q+1 point ids.
struct ProjectivePlane {
    int q = 0;
    std::vector<int> points;
    std::vector<std::vector<int>> lines;
};

struct PlaneAxioms {
    bool sizes = false;
    bool two_points_one_line = false;
    bool two_lines_one_point = false;
    bool four_points_in_general_position = false;

    auto all() const -> bool { return sizes && two_points_one_line && two_lines_one_point && four_points_in_general_position; }
};

auto check_plane_axioms(const ProjectivePlane & plane) -> PlaneAxioms;

/// PG(2, q) for prime q <= 11 from homogeneous coordinates over Z/q.
auto projective_plane(int q) -> ProjectivePlane;

/// Points 1..7 (ids 0..6); line j is the complement of the j-th four-set used
/// by scott_counterexample(), so the incidence structures line up vertex for vertex.
auto fano_plane() -> ProjectivePlane;

/// Points are vertices 0..P-1 (side X), lines P..2P-1 (side Y) in plane order.
auto incidence_graph(const ProjectivePlane & plane) -> BipartiteGraph;

/// The 4-regular bipartite graph on X = {1..7} and the seven four-sets
/// 1247, 1235, 2346, 3457, 1456, 2567, 1367, with x ~ y iff x is in y.
/// Vertices 0..6 are the points, 7..13 the four-sets in that order.
auto scott_counterexample() -> BipartiteGraph;

/// L(K_n), vertex i being the i-th edge of K_n in lexicographic order.
auto line_complete(int n) -> Graph;

auto complete(int n) -> Graph;
/// Parts {0..a-1} and {a..a+b-1}.
auto complete_bipartite(int a, int b) -> BipartiteGraph;
auto path(int n) -> Graph;
auto cycle(int n) -> Graph;
/// K_{1,n-1} with centre 0.
auto star(int n) -> Graph;
/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i ~ i+5.
auto petersen() -> Graph;
/// Triangles 0-1-2 and 3-4-5 with spokes i ~ i+3.
auto prism3() -> Graph;
/// LCF notation [5,-5]^7 on the 14-cycle.
auto heawood() -> Graph;

/// Deterministic generator; all random families draw through it so a seed
/// reproduces the same graph on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : _engine(seed) {}

    auto next() -> std::uint64_t { return _engine(); }
    /// Uniform in [0, bound).
    auto below(std::uint64_t bound) -> std::uint64_t;
    /// Uniform in [0, 1).
    auto unit() -> double;
    auto chance(double p) -> bool { return unit() < p; }

    template <typename T>
    auto shuffle(std::vector<T> & items) -> void
    {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 _engine;
};

/// Seed for item `index` of a stream rooted at `seed` (splitmix64).
auto derive_seed(std::uint64_t seed, std::uint64_t index) -> std::uint64_t;

/// Uniform labelled tree from a random Pruefer sequence.
auto random_tree(int n, std::uint64_t seed) -> Graph;

/// Pairing model, rejecting loops and multi-edges; up to 1000 attempts.
auto random_cubic(int n, std::uint64_t seed) -> Graph;

/// Erdos-Renyi G(n, p).
auto random_graph(int n, double p, std::uint64_t seed) -> Graph;

/// `count` graphs with orders uniform in [min_n, max_n] and edge probability
/// uniform in [0.15, 0.85]; item i depends only on (seed, i).
auto random_corpus(int count, int min_n, int max_n, std::uint64_t seed) -> std::vector<Graph>;

auto pruefer_decode(const std::vector<int> & sequence) -> Graph;

}
