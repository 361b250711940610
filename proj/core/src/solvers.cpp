#include <oddsub/solvers.hpp>

#include <algorithm>
#include <set>

namespace oddsub {

auto is_odd_even(const Graph & g, const EdgeList & edges) -> bool
{
    std::set<Edge> seen;
    std::vector<int> degree(g.order(), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || ! g.adjacent(u, v))
            return false;
        if (! seen.insert({std::min(u, v), std::max(u, v)}).second)
            return false;
        ++degree[u];
        ++degree[v];
    }
    for (auto [u, v] : edges)
        if (degree[u] % 2 == degree[v] % 2)
            return false;
    return true;
}

auto eps_search(const Graph & g, const SearchOptions & options) -> EdgeSubgraphResult
{
    auto edges = g.edges();
    auto inner = fo_search(line_graph(g), options);
    EdgeSubgraphResult result{inner.value, {}, inner.complete};
    for (int i : inner.witness)
        result.witness.push_back(edges[i]);
    return result;
}

auto eps_exact(const Graph & g, const SearchOptions & options) -> EdgeSubgraphResult
{
    auto edges = g.edges();
    auto inner = fo_exact(line_graph(g), options);
    EdgeSubgraphResult result{inner.value, {}, true};
    for (int i : inner.witness)
        result.witness.push_back(edges[i]);
    return result;
}

auto eps_complete_construction(int n) -> EdgeSubgraphResult
{
    if (n % 2 != 0)
        throw Error(ErrorCode::OddInput, "complete-graph construction needs an even order, got " + std::to_string(n));
    if (n < 2)
        throw Error(ErrorCode::InvalidArgument, "complete-graph construction needs n >= 2");
    if (n > max_vertices)
        throw Error(ErrorCode::TooLarge, "K_" + std::to_string(n) + " exceeds the 64-vertex cap");

    // The n/2 side has degree n/2 - 1 and the other side degree n/2; these
    // differ by one, so exactly one side is odd.
    int half = n / 2;
    EdgeSubgraphResult result;
    for (int a = 0; a < half; ++a)
        for (int b = half; b < n - 1; ++b)
            result.witness.push_back({a, b});
    result.value = static_cast<int>(result.witness.size());
    return result;
}

auto p3_packing_max(const Graph & g) -> P3Packing
{
    int n = g.order();
    if (n > max_p3_packing_order)
        throw Error(ErrorCode::TooLarge, "P3 packing is limited to 16 vertices");

    // best[R] = maximum packing inside the vertex set R. The lowest vertex of R
    // is either unused, the centre of a path, or an end of one.
    std::vector<std::int8_t> best(std::size_t{1} << n, -1);
    auto solve = [&](auto & self, std::uint32_t rest) -> int {
        if (std::popcount(rest) < 3)
            return 0;
        auto & slot = best[rest];
        if (slot >= 0)
            return slot;
        int v = std::countr_zero(rest);
        std::uint32_t without_v = rest & (rest - 1);
        int value = self(self, without_v);
        auto around = static_cast<std::uint32_t>(g.row(v)) & without_v;
        for (int a : VertexSet(around)) {
            for (int b : VertexSet(around & ~((2U << a) - 1)))
                value = std::max(value, 1 + self(self, without_v & ~(1U << a) & ~(1U << b)));
            for (int c : VertexSet(static_cast<std::uint32_t>(g.row(a)) & without_v & ~(1U << a)))
                value = std::max(value, 1 + self(self, without_v & ~(1U << a) & ~(1U << c)));
        }
        slot = static_cast<std::int8_t>(value);
        return value;
    };

    P3Packing result;
    auto rest = static_cast<std::uint32_t>(VertexSet::full(n).bits());
    result.value = solve(solve, rest);

    // Walk the table to recover one optimal packing.
    while (std::popcount(rest) >= 3) {
        int target = solve(solve, rest);
        if (target == 0)
            break;
        int v = std::countr_zero(rest);
        std::uint32_t without_v = rest & (rest - 1);
        if (solve(solve, without_v) == target) {
            rest = without_v;
            continue;
        }
        bool found = false;
        auto around = static_cast<std::uint32_t>(g.row(v)) & without_v;
        for (int a : VertexSet(around)) {
            for (int b : VertexSet(around & ~((2U << a) - 1)))
                if (! found && 1 + solve(solve, without_v & ~(1U << a) & ~(1U << b)) == target) {
                    result.paths.push_back({a, v, b});
                    rest = without_v & ~(1U << a) & ~(1U << b);
                    found = true;
                }
            for (int c : VertexSet(static_cast<std::uint32_t>(g.row(a)) & without_v & ~(1U << a)))
                if (! found && 1 + solve(solve, without_v & ~(1U << a) & ~(1U << c)) == target) {
                    result.paths.push_back({v, a, c});
                    rest = without_v & ~(1U << a) & ~(1U << c);
                    found = true;
                }
            if (found)
                break;
        }
    }
    return result;
}

}
