#include <oddsub/graph.hpp>

#include <algorithm>
#include <queue>

namespace oddsub {

auto to_string(ErrorCode code) -> std::string_view
{
    switch (code) {
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::TruncatedBits: return "TruncatedBits";
    case ErrorCode::MalformedBits: return "MalformedBits";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::OddInput: return "OddInput";
    case ErrorCode::RetryExhausted: return "RetryExhausted";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    }
    return "Unknown";
}

VertexSet::VertexSet(std::initializer_list<int> vertices)
{
    for (int v : vertices)
        insert(v);
}

auto VertexSet::from_vector(const std::vector<int> & vertices) -> VertexSet
{
    VertexSet s;
    for (int v : vertices)
        s.insert(v);
    return s;
}

auto VertexSet::to_vector() const -> std::vector<int>
{
    return {begin(), end()};
}

namespace {
    auto check_order(int n) -> void
    {
        if (n < 0)
            throw Error(ErrorCode::InvalidArgument, "negative vertex count");
        if (n > max_vertices)
            throw Error(ErrorCode::TooLarge, std::to_string(n) + " vertices exceeds the 64-vertex cap");
    }
}

Graph::Graph(int n) : _n(n)
{
    check_order(n);
}

auto Graph::from_edges(int n, std::span<const Edge> edges) -> Graph
{
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorCode::VertexOutOfRange,
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") on " + std::to_string(n) + " vertices");
        if (u == v)
            throw Error(ErrorCode::SelfLoop, "loop at vertex " + std::to_string(u));
        g._adj[u] |= std::uint64_t{1} << v;
        g._adj[v] |= std::uint64_t{1} << u;
    }
    return g;
}

auto Graph::from_edges(int n, std::initializer_list<Edge> edges) -> Graph
{
    return from_edges(n, std::span<const Edge>{edges.begin(), edges.size()});
}

auto Graph::from_rows(int n, std::span<const std::uint64_t> rows) -> Graph
{
    Graph g(n);
    if (rows.size() != static_cast<std::size_t>(n))
        throw Error(ErrorCode::InvalidArgument, "row count does not match vertex count");
    auto mask = VertexSet::full(n).bits();
    for (int v = 0; v < n; ++v) {
        if (rows[v] & ~mask)
            throw Error(ErrorCode::VertexOutOfRange, "adjacency row " + std::to_string(v) + " has bits past n");
        if ((rows[v] >> v) & 1U)
            throw Error(ErrorCode::SelfLoop, "loop at vertex " + std::to_string(v));
        g._adj[v] = rows[v];
    }
    for (int v = 0; v < n; ++v)
        for (int u : VertexSet(rows[v]))
            if (! ((rows[u] >> v) & 1U))
                throw Error(ErrorCode::InvalidArgument, "adjacency rows are not symmetric");
    return g;
}

auto Graph::size() const -> int
{
    int total = 0;
    for (int v = 0; v < _n; ++v)
        total += std::popcount(_adj[v]);
    return total / 2;
}

auto Graph::max_degree() const -> int
{
    int best = 0;
    for (int v = 0; v < _n; ++v)
        best = std::max(best, degree(v));
    return best;
}

auto Graph::min_degree() const -> int
{
    if (_n == 0)
        return 0;
    int best = max_vertices;
    for (int v = 0; v < _n; ++v)
        best = std::min(best, degree(v));
    return best;
}

auto Graph::is_regular(int d) const -> bool
{
    for (int v = 0; v < _n; ++v)
        if (degree(v) != d)
            return false;
    return true;
}

auto Graph::has_isolated_vertex() const -> bool
{
    for (int v = 0; v < _n; ++v)
        if (_adj[v] == 0)
            return true;
    return false;
}

auto Graph::degree_sequence() const -> std::vector<int>
{
    std::vector<int> result;
    result.reserve(_n);
    for (int v = 0; v < _n; ++v)
        result.push_back(degree(v));
    return result;
}

auto Graph::edges() const -> EdgeList
{
    EdgeList result;
    for (int u = 0; u < _n; ++u)
        for (int v : VertexSet(_adj[u] & ~((std::uint64_t{2} << u) - 1)))
            result.push_back({u, v});
    return result;
}

auto Graph::operator==(const Graph & other) const -> bool
{
    return _n == other._n && std::equal(_adj.begin(), _adj.begin() + _n, other._adj.begin());
}

BipartiteGraph::BipartiteGraph(Graph graph, std::vector<Side> part, std::vector<std::string> names) :
    _graph(std::move(graph)),
    _part(std::move(part)),
    _names(std::move(names))
{
    if (_part.size() != static_cast<std::size_t>(_graph.order()))
        throw Error(ErrorCode::InvalidArgument, "bipartition labels do not cover every vertex");
    if (! _names.empty() && _names.size() != _part.size())
        throw Error(ErrorCode::InvalidArgument, "vertex names do not cover every vertex");
    for (auto [u, v] : _graph.edges())
        if (_part[u] == _part[v])
            throw Error(ErrorCode::InvalidArgument,
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") lies inside one part");
}

auto BipartiteGraph::side_set(Side s) const -> VertexSet
{
    VertexSet result;
    for (int v = 0; v < _graph.order(); ++v)
        if (_part[v] == s)
            result.insert(v);
    return result;
}

auto BipartiteGraph::name(int v) const -> std::string
{
    return _names.empty() ? std::to_string(v) : _names[v];
}

auto line_graph(const Graph & g) -> Graph
{
    auto edges = g.edges();
    if (edges.size() > static_cast<std::size_t>(max_vertices))
        throw Error(ErrorCode::TooLarge, "line graph of a graph with " + std::to_string(edges.size()) + " edges");

    // incident[v] = line-graph vertices whose edge touches v
    std::array<std::uint64_t, max_vertices> incident{};
    for (std::size_t i = 0; i < edges.size(); ++i) {
        incident[edges[i].u] |= std::uint64_t{1} << i;
        incident[edges[i].v] |= std::uint64_t{1} << i;
    }

    std::vector<std::uint64_t> rows(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        rows[i] = (incident[edges[i].u] | incident[edges[i].v]) & ~(std::uint64_t{1} << i);
    return Graph::from_rows(static_cast<int>(edges.size()), rows);
}

auto disjoint_union(const Graph & g, const Graph & h) -> Graph
{
    int n = g.order() + h.order();
    if (n > max_vertices)
        throw Error(ErrorCode::TooLarge, "disjoint union has " + std::to_string(n) + " vertices");
    std::vector<std::uint64_t> rows(n);
    for (int v = 0; v < g.order(); ++v)
        rows[v] = g.row(v);
    for (int v = 0; v < h.order(); ++v)
        rows[g.order() + v] = h.row(v) << g.order();
    return Graph::from_rows(n, rows);
}

auto k_copies(const Graph & g, int k) -> Graph
{
    if (k < 0)
        throw Error(ErrorCode::InvalidArgument, "negative copy count");
    if (static_cast<long>(k) * g.order() > max_vertices)
        throw Error(ErrorCode::TooLarge, std::to_string(k) + " copies of a " + std::to_string(g.order()) + "-vertex graph");
    Graph result;
    for (int i = 0; i < k; ++i)
        result = disjoint_union(result, g);
    return result;
}

auto bipartite_complement(const BipartiteGraph & b) -> BipartiteGraph
{
    const auto & g = b.graph();
    auto x = b.side_set(Side::X), y = b.side_set(Side::Y);
    std::vector<std::uint64_t> rows(g.order());
    for (int v = 0; v < g.order(); ++v) {
        auto other = b.side(v) == Side::X ? y : x;
        rows[v] = other.bits() & ~g.row(v);
    }
    return BipartiteGraph{Graph::from_rows(g.order(), rows), b.part(), b.names()};
}

auto induced_subgraph(const Graph & g, VertexSet s) -> Graph
{
    if (s.bits() & ~g.vertices().bits())
        throw Error(ErrorCode::VertexOutOfRange, "vertex set is not contained in the graph");
    auto members = s.to_vector();
    std::vector<std::uint64_t> rows(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j)
            if (g.adjacent(members[i], members[j]))
                rows[i] |= std::uint64_t{1} << j;
    return Graph::from_rows(static_cast<int>(members.size()), rows);
}

auto relabel(const Graph & g, std::span<const int> perm) -> Graph
{
    if (perm.size() != static_cast<std::size_t>(g.order()))
        throw Error(ErrorCode::InvalidArgument, "permutation size does not match vertex count");
    EdgeList edges;
    for (auto [u, v] : g.edges())
        edges.push_back({perm[u], perm[v]});
    return Graph::from_edges(g.order(), edges);
}

auto common_neighbors(const Graph & g, int u, int v) -> VertexSet
{
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw Error(ErrorCode::VertexOutOfRange, "common_neighbors vertex out of range");
    return g.neighbors(u) & g.neighbors(v);
}

auto contains_k23(const Graph & g) -> bool
{
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if ((g.neighbors(u) & g.neighbors(v)).size() >= 3)
                return true;
    return false;
}

namespace {
    auto bfs_distances(const Graph & g, int source) -> std::vector<int>
    {
        std::vector<int> dist(g.order(), -1);
        dist[source] = 0;
        auto frontier = VertexSet{}, seen = VertexSet{};
        frontier.insert(source);
        seen.insert(source);
        for (int d = 1; ! frontier.empty(); ++d) {
            VertexSet next;
            for (int v : frontier)
                next = next | g.neighbors(v);
            next = next - seen;
            for (int v : next)
                dist[v] = d;
            seen = seen | next;
            frontier = next;
        }
        return dist;
    }
}

auto distance(const Graph & g, int u, int v) -> int
{
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw Error(ErrorCode::VertexOutOfRange, "distance vertex out of range");
    int d = bfs_distances(g, u)[v];
    if (d < 0)
        throw Error(ErrorCode::Disconnected, "no path between " + std::to_string(u) + " and " + std::to_string(v));
    return d;
}

auto diameter(const Graph & g) -> std::optional<int>
{
    int best = 0;
    for (int s = 0; s < g.order(); ++s)
        for (int d : bfs_distances(g, s)) {
            if (d < 0)
                return std::nullopt;
            best = std::max(best, d);
        }
    return best;
}

auto girth(const Graph & g) -> std::optional<int>
{
    // Shortest cycle through each root: a non-tree edge (u, w) closes a cycle of length d(u)+d(w)+1.
    std::optional<int> best;
    for (int root = 0; root < g.order(); ++root) {
        std::vector<int> dist(g.order(), -1), parent(g.order(), -1);
        std::queue<int> queue;
        dist[root] = 0;
        queue.push(root);
        while (! queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push(w);
                }
                else if (parent[u] != w) {
                    int len = dist[u] + dist[w] + 1;
                    if (! best || len < *best)
                        best = len;
                }
            }
        }
    }
    return best;
}

auto connected_components(const Graph & g) -> std::vector<VertexSet>
{
    std::vector<VertexSet> result;
    auto unseen = g.vertices();
    while (! unseen.empty()) {
        VertexSet component, frontier;
        frontier.insert(unseen.min());
        while (! frontier.empty()) {
            component = component | frontier;
            VertexSet next;
            for (int v : frontier)
                next = next | g.neighbors(v);
            frontier = next - component;
        }
        result.push_back(component);
        unseen = unseen - component;
    }
    return result;
}

auto is_connected(const Graph & g) -> bool
{
    return connected_components(g).size() <= 1;
}

auto two_coloring(const Graph & g) -> std::optional<std::vector<int>>
{
    std::vector<int> colour(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (colour[s] >= 0)
            continue;
        colour[s] = 0;
        std::queue<int> queue;
        queue.push(s);
        while (! queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int w : g.neighbors(u)) {
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[u];
                    queue.push(w);
                }
                else if (colour[w] == colour[u])
                    return std::nullopt;
            }
        }
    }
    return colour;
}

}
