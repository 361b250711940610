#pragma once

#include <oddsub/error.hpp>

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oddsub {

inline constexpr int max_vertices = 64;

/// A set of vertices of a graph with at most 64 vertices, one bit per vertex.
class VertexSet {
public:
    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : _rest(rest) {}

        constexpr auto operator*() const -> int { return std::countr_zero(_rest); }
        constexpr auto operator++() -> iterator &
        {
            _rest &= _rest - 1;
            return *this;
        }
        constexpr auto operator++(int) -> iterator
        {
            auto copy = *this;
            ++*this;
            return copy;
        }
        constexpr auto operator==(const iterator &) const -> bool = default;

    private:
        std::uint64_t _rest = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : _bits(bits) {}
    VertexSet(std::initializer_list<int> vertices);

    /// {0, ..., n-1}
    static constexpr auto full(int n) -> VertexSet
    {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    static auto from_vector(const std::vector<int> & vertices) -> VertexSet;

    constexpr auto bits() const -> std::uint64_t { return _bits; }
    constexpr auto size() const -> int { return std::popcount(_bits); }
    constexpr auto empty() const -> bool { return _bits == 0; }
    constexpr auto contains(int v) const -> bool { return (_bits >> v) & 1U; }
    constexpr auto insert(int v) -> void { _bits |= std::uint64_t{1} << v; }
    constexpr auto erase(int v) -> void { _bits &= ~(std::uint64_t{1} << v); }
    constexpr auto min() const -> int { return std::countr_zero(_bits); }

    constexpr auto begin() const -> iterator { return iterator{_bits}; }
    constexpr auto end() const -> iterator { return iterator{}; }

    auto to_vector() const -> std::vector<int>;

    constexpr friend auto operator&(VertexSet a, VertexSet b) -> VertexSet { return VertexSet(a._bits & b._bits); }
    constexpr friend auto operator|(VertexSet a, VertexSet b) -> VertexSet { return VertexSet(a._bits | b._bits); }
    constexpr friend auto operator^(VertexSet a, VertexSet b) -> VertexSet { return VertexSet(a._bits ^ b._bits); }
    constexpr friend auto operator-(VertexSet a, VertexSet b) -> VertexSet { return VertexSet(a._bits & ~b._bits); }
    constexpr auto operator==(const VertexSet &) const -> bool = default;

private:
    std::uint64_t _bits = 0;
};

/// Bit-vector lexicographic order reading vertex 0 first, absent before present:
/// `a` precedes `b` when the lowest vertex in exactly one of them is missing from `a`.
constexpr auto lex_less(VertexSet a, VertexSet b) -> bool
{
    auto diff = a.bits() ^ b.bits();
    return diff != 0 && (a.bits() & (diff & (~diff + 1))) == 0;
}

struct Edge {
    int u;
    int v;

    constexpr auto operator<=>(const Edge &) const = default;
};

/// Edges with u < v, strictly increasing in (u, v).
using EdgeList = std::vector<Edge>;

/// Simple undirected graph on at most 64 vertices. Row v of the adjacency
/// matrix is a 64-bit word; the matrix is symmetric with zero diagonal.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    static auto from_edges(int n, std::span<const Edge> edges) -> Graph;
    static auto from_edges(int n, std::initializer_list<Edge> edges) -> Graph;
    static auto from_rows(int n, std::span<const std::uint64_t> rows) -> Graph;

    auto order() const -> int { return _n; }
    auto size() const -> int;
    auto row(int v) const -> std::uint64_t { return _adj[v]; }
    auto neighbors(int v) const -> VertexSet { return VertexSet(_adj[v]); }
    auto degree(int v) const -> int { return std::popcount(_adj[v]); }
    auto adjacent(int u, int v) const -> bool { return (_adj[u] >> v) & 1U; }
    auto vertices() const -> VertexSet { return VertexSet::full(_n); }

    auto max_degree() const -> int;
    auto min_degree() const -> int;
    auto is_regular(int d) const -> bool;
    auto has_isolated_vertex() const -> bool;
    auto degree_sequence() const -> std::vector<int>;

    /// Canonical (lexicographic) edge order; line-graph vertex i is edges()[i].
    auto edges() const -> EdgeList;

    auto operator==(const Graph & other) const -> bool;

private:
    int _n = 0;
    std::array<std::uint64_t, max_vertices> _adj{};
};

enum class Side : std::uint8_t { X, Y };

/// Graph with a fixed bipartition; every edge joins an X-vertex to a Y-vertex.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(Graph graph, std::vector<Side> part, std::vector<std::string> names = {});

    auto graph() const -> const Graph & { return _graph; }
    auto part() const -> const std::vector<Side> & { return _part; }
    auto names() const -> const std::vector<std::string> & { return _names; }
    auto side(int v) const -> Side { return _part[v]; }
    auto side_set(Side s) const -> VertexSet;
    auto name(int v) const -> std::string;

private:
    Graph _graph;
    std::vector<Side> _part;
    std::vector<std::string> _names;
};

auto line_graph(const Graph & g) -> Graph;
auto disjoint_union(const Graph & g, const Graph & h) -> Graph;
auto k_copies(const Graph & g, int k) -> Graph;
auto bipartite_complement(const BipartiteGraph & b) -> BipartiteGraph;

/// Vertices of the result are the members of s in increasing order.
auto induced_subgraph(const Graph & g, VertexSet s) -> Graph;

/// Vertex `perm[v]` of the result is vertex v of g.
auto relabel(const Graph & g, std::span<const int> perm) -> Graph;

auto common_neighbors(const Graph & g, int u, int v) -> VertexSet;

/// Subgraph (not induced) containment of K_{2,3}.
auto contains_k23(const Graph & g) -> bool;

auto distance(const Graph & g, int u, int v) -> int;

/// nullopt stands for infinite diameter (disconnected graph).
auto diameter(const Graph & g) -> std::optional<int>;

/// nullopt for acyclic graphs.
auto girth(const Graph & g) -> std::optional<int>;

/// Components ordered by their smallest vertex.
auto connected_components(const Graph & g) -> std::vector<VertexSet>;
auto is_connected(const Graph & g) -> bool;

auto two_coloring(const Graph & g) -> std::optional<std::vector<int>>;

// graph6

auto parse_graph6(std::string_view text) -> Graph;
auto write_graph6(const Graph & g) -> std::string;

// isomorphism on small graphs

inline constexpr int max_isomorphism_order = 16;

/// Returns `map` with map[v] the image in h of vertex v of g. Optional vertex
/// colours restrict the mapping to colour-preserving bijections.
auto find_isomorphism(const Graph & g, const Graph & h,
    std::span<const int> g_colours = {}, std::span<const int> h_colours = {}) -> std::optional<std::vector<int>>;

auto is_isomorphic(const Graph & g, const Graph & h) -> bool;

}
