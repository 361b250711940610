#pragma once

#include <oddsub/graph.hpp>

#include <array>
#include <cstdint>
#include <vector>

namespace oddsub {

/// Node cap used when SearchOptions does not override it; ODDSUB_BUDGET in the
/// environment replaces the built-in default.
auto default_node_budget() -> std::uint64_t;

struct SearchOptions {
    std::uint64_t node_budget = default_node_budget();
    int workers = 1;
};

/// Maximum odd induced subgraph. `value` is even; an empty witness with value 0
/// means no odd induced subgraph exists. When `complete` is false the search hit
/// its node cap and `value` is only a lower bound.
struct OddSubgraphResult {
    int value = 0;
    VertexSet witness;
    bool complete = true;
    std::uint64_t nodes = 0;
};

/// Maximum odd-even edge-induced subgraph: every chosen edge joins a vertex of
/// odd chosen-degree to one of even chosen-degree.
struct EdgeSubgraphResult {
    int value = 0;
    EdgeList witness;
    bool complete = true;
};

struct ColouringResult {
    int value = 0;
    std::vector<int> colouring;
    int lower_bound = 0;
    bool complete = true;
};

struct P3Packing {
    int value = 0;
    std::vector<std::array<int, 3>> paths;
};

/// Nonempty s in which every vertex has odd degree in G[s].
auto is_odd_induced(const Graph & g, VertexSet s) -> bool;

/// Edge subset satisfying the odd-even parity condition (the empty set qualifies).
auto is_odd_even(const Graph & g, const EdgeList & edges) -> bool;

/// Exact f_o with the lexicographically smallest maximum witness (see `lex_less`).
/// Never throws on the budget; check `complete`.
auto fo_search(const Graph & g, const SearchOptions & options = {}) -> OddSubgraphResult;

/// As fo_search, but throws BudgetExceeded instead of returning an incomplete result.
auto fo_exact(const Graph & g, const SearchOptions & options = {}) -> OddSubgraphResult;

auto eps_search(const Graph & g, const SearchOptions & options = {}) -> EdgeSubgraphResult;
auto eps_exact(const Graph & g, const SearchOptions & options = {}) -> EdgeSubgraphResult;

/// The K_{n/2, n/2-1} witness inside K_n using vertices {0..n/2-1} and {n/2..n-2}.
auto eps_complete_construction(int n) -> EdgeSubgraphResult;

auto max_clique(const Graph & g) -> VertexSet;
auto dsatur_colouring(const Graph & g) -> std::vector<int>;
auto is_proper_colouring(const Graph & g, const std::vector<int> & colouring) -> bool;

auto chromatic_search(const Graph & g, std::uint64_t node_budget = default_node_budget()) -> ColouringResult;

/// Throws BudgetExceeded (lower_bound = best proven lower bound) on an incomplete search.
auto chromatic_number(const Graph & g, std::uint64_t node_budget = default_node_budget()) -> int;

inline constexpr int max_p3_packing_order = 16;

/// Maximum number of vertex-disjoint 3-vertex paths (not necessarily induced).
auto p3_packing_max(const Graph & g) -> P3Packing;

}
