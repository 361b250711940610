#include <oddsub/families.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <string>

namespace oddsub {

namespace {
    auto require_order(int n, int minimum, const char * what) -> void
    {
        if (n < minimum)
            throw Error(ErrorCode::InvalidArgument, std::string{what} + " needs at least " + std::to_string(minimum) + " vertices");
        if (n > max_vertices)
            throw Error(ErrorCode::TooLarge, std::string{what} + " on " + std::to_string(n) + " vertices");
    }

    auto is_prime(int q) -> bool
    {
        if (q < 2)
            return false;
        for (int d = 2; d * d <= q; ++d)
            if (q % d == 0)
                return false;
        return true;
    }

    // The four-sets naming the Y side of the counterexample, in listed order.
    constexpr std::array<std::array<int, 4>, 7> scott_four_sets{{
        {1, 2, 4, 7}, {1, 2, 3, 5}, {2, 3, 4, 6}, {3, 4, 5, 7}, {1, 4, 5, 6}, {2, 5, 6, 7}, {1, 3, 6, 7},
    }};
}

auto check_plane_axioms(const ProjectivePlane & plane) -> PlaneAxioms
{
    PlaneAxioms result;
    int q = plane.q;
    auto count = static_cast<std::size_t>(q * q + q + 1);
    result.sizes = plane.points.size() == count && plane.lines.size() == count
        && std::all_of(plane.lines.begin(), plane.lines.end(), [&](const auto & l) { return l.size() == static_cast<std::size_t>(q + 1); });
    if (! result.sizes)
        return result;

    int p = static_cast<int>(count);
    // lines_through[a][b] = number of lines containing both a and b
    std::vector<std::vector<int>> pair_lines(p, std::vector<int>(p, 0));
    std::vector<std::vector<int>> line_of(p, std::vector<int>(p, -1));
    for (std::size_t li = 0; li < plane.lines.size(); ++li) {
        const auto & line = plane.lines[li];
        for (int a : line)
            if (a < 0 || a >= p) {
                result.sizes = false;
                return result;
            }
        for (std::size_t i = 0; i < line.size(); ++i)
            for (std::size_t j = i + 1; j < line.size(); ++j) {
                ++pair_lines[line[i]][line[j]];
                ++pair_lines[line[j]][line[i]];
                line_of[line[i]][line[j]] = line_of[line[j]][line[i]] = static_cast<int>(li);
            }
    }

    result.two_points_one_line = true;
    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b)
            if (pair_lines[a][b] != 1)
                result.two_points_one_line = false;

    result.two_lines_one_point = true;
    for (std::size_t i = 0; i < plane.lines.size(); ++i)
        for (std::size_t j = i + 1; j < plane.lines.size(); ++j) {
            std::vector<int> common;
            std::set_intersection(plane.lines[i].begin(), plane.lines[i].end(),
                plane.lines[j].begin(), plane.lines[j].end(), std::back_inserter(common));
            if (common.size() != 1)
                result.two_lines_one_point = false;
        }

    if (! result.two_points_one_line)
        return result;
    auto collinear = [&](int a, int b, int c) {
        return line_of[a][b] == line_of[a][c];
    };
    for (int a = 0; a < p && ! result.four_points_in_general_position; ++a)
        for (int b = a + 1; b < p && ! result.four_points_in_general_position; ++b)
            for (int c = b + 1; c < p && ! result.four_points_in_general_position; ++c) {
                if (collinear(a, b, c))
                    continue;
                for (int d = c + 1; d < p; ++d)
                    if (! collinear(a, b, d) && ! collinear(a, c, d) && ! collinear(b, c, d)) {
                        result.four_points_in_general_position = true;
                        break;
                    }
            }
    return result;
}

auto projective_plane(int q) -> ProjectivePlane
{
    if (q > 11)
        throw Error(ErrorCode::TooLarge, "projective planes are limited to q <= 11");
    if (! is_prime(q))
        throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not prime");

    // Normalised homogeneous coordinates: first nonzero entry is 1.
    std::vector<std::array<int, 3>> reps;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c) {
                int lead = a != 0 ? a : b != 0 ? b : c;
                if (lead == 1)
                    reps.push_back({a, b, c});
            }

    ProjectivePlane plane;
    plane.q = q;
    for (std::size_t i = 0; i < reps.size(); ++i)
        plane.points.push_back(static_cast<int>(i));
    for (const auto & l : reps) {
        std::vector<int> line;
        for (std::size_t i = 0; i < reps.size(); ++i) {
            const auto & x = reps[i];
            if ((l[0] * x[0] + l[1] * x[1] + l[2] * x[2]) % q == 0)
                line.push_back(static_cast<int>(i));
        }
        plane.lines.push_back(std::move(line));
    }
    if (! check_plane_axioms(plane).all())
        throw Error(ErrorCode::Infeasible, "constructed plane failed the axiom check; this is a bug");
    return plane;
}

auto fano_plane() -> ProjectivePlane
{
    ProjectivePlane plane;
    plane.q = 2;
    plane.points = {0, 1, 2, 3, 4, 5, 6};
    for (const auto & four : scott_four_sets) {
        std::vector<int> line;
        for (int point = 1; point <= 7; ++point)
            if (std::find(four.begin(), four.end(), point) == four.end())
                line.push_back(point - 1);
        plane.lines.push_back(std::move(line));
    }
    if (! check_plane_axioms(plane).all())
        throw Error(ErrorCode::Infeasible, "hard-coded Fano plane failed the axiom check; this is a bug");
    return plane;
}

auto incidence_graph(const ProjectivePlane & plane) -> BipartiteGraph
{
    int p = static_cast<int>(plane.points.size());
    int l = static_cast<int>(plane.lines.size());
    if (p + l > max_vertices)
        throw Error(ErrorCode::TooLarge, "incidence graph on " + std::to_string(p + l) + " vertices");
    EdgeList edges;
    for (int j = 0; j < l; ++j)
        for (int point : plane.lines[j])
            edges.push_back({point, p + j});
    std::vector<Side> part(p, Side::X);
    part.resize(p + l, Side::Y);
    return BipartiteGraph{Graph::from_edges(p + l, edges), std::move(part)};
}

auto scott_counterexample() -> BipartiteGraph
{
    EdgeList edges;
    std::vector<std::string> names;
    for (int x = 1; x <= 7; ++x)
        names.push_back(std::to_string(x));
    for (std::size_t j = 0; j < scott_four_sets.size(); ++j) {
        std::string name;
        for (int x : scott_four_sets[j]) {
            edges.push_back({x - 1, 7 + static_cast<int>(j)});
            name += std::to_string(x);
        }
        names.push_back(name);
    }
    std::vector<Side> part(7, Side::X);
    part.resize(14, Side::Y);
    return BipartiteGraph{Graph::from_edges(14, edges), std::move(part), std::move(names)};
}

auto line_complete(int n) -> Graph
{
    if (n < 0)
        throw Error(ErrorCode::InvalidArgument, "negative order");
    if (n * (n - 1) / 2 > max_vertices)
        throw Error(ErrorCode::TooLarge, "L(K_" + std::to_string(n) + ") has more than 64 vertices");
    return line_graph(complete(n));
}

auto complete(int n) -> Graph
{
    require_order(n, 0, "complete graph");
    std::vector<std::uint64_t> rows(n);
    for (int v = 0; v < n; ++v)
        rows[v] = VertexSet::full(n).bits() & ~(std::uint64_t{1} << v);
    return Graph::from_rows(n, rows);
}

auto complete_bipartite(int a, int b) -> BipartiteGraph
{
    if (a < 0 || b < 0)
        throw Error(ErrorCode::InvalidArgument, "negative part size");
    require_order(a + b, 0, "complete bipartite graph");
    EdgeList edges;
    for (int x = 0; x < a; ++x)
        for (int y = a; y < a + b; ++y)
            edges.push_back({x, y});
    std::vector<Side> part(a, Side::X);
    part.resize(a + b, Side::Y);
    return BipartiteGraph{Graph::from_edges(a + b, edges), std::move(part)};
}

auto path(int n) -> Graph
{
    require_order(n, 0, "path");
    EdgeList edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.push_back({v, v + 1});
    return Graph::from_edges(n, edges);
}

auto cycle(int n) -> Graph
{
    require_order(n, 3, "cycle");
    EdgeList edges;
    for (int v = 0; v < n; ++v)
        edges.push_back({v, (v + 1) % n});
    return Graph::from_edges(n, edges);
}

auto star(int n) -> Graph
{
    require_order(n, 1, "star");
    EdgeList edges;
    for (int v = 1; v < n; ++v)
        edges.push_back({0, v});
    return Graph::from_edges(n, edges);
}

auto petersen() -> Graph
{
    EdgeList edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({5 + i, 5 + (i + 2) % 5});
        edges.push_back({i, i + 5});
    }
    return Graph::from_edges(10, edges);
}

auto prism3() -> Graph
{
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

auto heawood() -> Graph
{
    EdgeList edges;
    for (int i = 0; i < 14; ++i) {
        edges.push_back({i, (i + 1) % 14});
        if (i % 2 == 0)
            edges.push_back({i, (i + 5) % 14});
    }
    return Graph::from_edges(14, edges);
}

auto Rng::below(std::uint64_t bound) -> std::uint64_t
{
    if (bound == 0)
        throw Error(ErrorCode::InvalidArgument, "empty range");
    // Rejection sampling keeps the draw unbiased and independent of the
    // standard library's distribution implementations.
    auto limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do
        x = _engine();
    while (x >= limit);
    return x % bound;
}

auto Rng::unit() -> double
{
    return static_cast<double>(_engine() >> 11) * 0x1.0p-53;
}

auto derive_seed(std::uint64_t seed, std::uint64_t index) -> std::uint64_t
{
    auto z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

auto pruefer_decode(const std::vector<int> & sequence) -> Graph
{
    int n = static_cast<int>(sequence.size()) + 2;
    require_order(n, 2, "Pruefer tree");
    std::vector<int> degree(n, 1);
    for (int x : sequence) {
        if (x < 0 || x >= n)
            throw Error(ErrorCode::VertexOutOfRange, "Pruefer entry " + std::to_string(x));
        ++degree[x];
    }
    EdgeList edges;
    for (int x : sequence) {
        int leaf = 0;
        while (degree[leaf] != 1)
            ++leaf;
        edges.push_back({leaf, x});
        --degree[leaf];
        --degree[x];
    }
    int u = -1, v = -1;
    for (int w = 0; w < n; ++w)
        if (degree[w] == 1)
            (u < 0 ? u : v) = w;
    edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

auto random_tree(int n, std::uint64_t seed) -> Graph
{
    require_order(n, 1, "random tree");
    if (n == 1)
        return Graph(1);
    Rng rng(seed);
    std::vector<int> sequence(n - 2);
    for (auto & x : sequence)
        x = static_cast<int>(rng.below(n));
    return pruefer_decode(sequence);
}

auto random_cubic(int n, std::uint64_t seed) -> Graph
{
    require_order(n, 4, "random cubic graph");
    if (n % 2 != 0)
        throw Error(ErrorCode::InvalidArgument, "cubic graphs need an even order");
    Rng rng(seed);
    std::vector<int> points(3 * n);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        for (int i = 0; i < 3 * n; ++i)
            points[i] = i / 3;
        rng.shuffle(points);
        std::vector<std::uint64_t> rows(n, 0);
        bool simple = true;
        for (int i = 0; i < 3 * n && simple; i += 2) {
            int u = points[i], v = points[i + 1];
            if (u == v || ((rows[u] >> v) & 1U))
                simple = false;
            else {
                rows[u] |= std::uint64_t{1} << v;
                rows[v] |= std::uint64_t{1} << u;
            }
        }
        if (simple)
            return Graph::from_rows(n, rows);
    }
    throw Error(ErrorCode::RetryExhausted, "pairing model failed 1000 times for n = " + std::to_string(n));
}

auto random_graph(int n, double p, std::uint64_t seed) -> Graph
{
    require_order(n, 0, "random graph");
    if (! (p >= 0.0 && p <= 1.0))
        throw Error(ErrorCode::InvalidArgument, "edge probability must lie in [0, 1]");
    Rng rng(seed);
    EdgeList edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p))
                edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

auto random_corpus(int count, int min_n, int max_n, std::uint64_t seed) -> std::vector<Graph>
{
    if (min_n < 0 || max_n < min_n)
        throw Error(ErrorCode::InvalidArgument, "bad corpus order range");
    std::vector<Graph> corpus;
    corpus.reserve(count);
    for (int i = 0; i < count; ++i) {
        Rng rng(derive_seed(seed, i));
        int n = min_n + static_cast<int>(rng.below(max_n - min_n + 1));
        double p = 0.15 + 0.7 * rng.unit();
        corpus.push_back(random_graph(n, p, rng.next()));
    }
    return corpus;
}

}
