#include <oddsub/tree_eps.hpp>

#include <algorithm>
#include <array>
#include <limits>
#include <set>

namespace oddsub {

auto f_lower(int n) -> int
{
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "f_lower needs n >= 1");
    switch (n % 4) {
    case 0:
    case 3:
        return (n + 1) / 2;
    default:
        return (n - 1) / 2;
    }
}

auto is_tree(const Graph & g) -> bool
{
    return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

namespace {
    // A vertex of the chosen edge set H is Unused (no chosen edges), on the odd
    // side (odd H-degree) or on the even side (even H-degree >= 2). Every chosen
    // edge joins an Odd vertex to an Even one.
    enum Class { Unused = 0, OddSide = 1, EvenSide = 2 };

    constexpr int minus_infinity = std::numeric_limits<int>::min() / 4;

    auto opposite(int c) -> int { return c == OddSide ? EvenSide : OddSide; }

    // Chosen-edge count summarised as 0, 1, ">= 2 and even", ">= 2 and odd".
    constexpr std::array<int, 4> add_one{1, 2, 3, 2};

    auto accepts(int c, int state) -> bool
    {
        return c == OddSide ? (state == 1 || state == 3) : state == 2;
    }

    using Knapsack = std::array<int, 4>;

    struct TreeDp {
        const Graph & tree;
        std::vector<int> parent;
        std::vector<std::vector<int>> children;
        std::vector<int> post_order;
        // best[v][parent edge chosen][class] = chosen edges inside v's subtree
        std::vector<std::array<std::array<int, 3>, 2>> best;

        TreeDp(const Graph & t, int root) :
            tree(t), parent(t.order(), -1), children(t.order()), best(t.order())
        {
            std::vector<int> stack{root}, pre;
            std::vector<bool> seen(t.order(), false);
            seen[root] = true;
            while (! stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                pre.push_back(v);
                for (int w : t.neighbors(v))
                    if (! seen[w]) {
                        seen[w] = true;
                        parent[w] = v;
                        children[v].push_back(w);
                        stack.push_back(w);
                    }
            }
            post_order.assign(pre.rbegin(), pre.rend());
            for (auto & kids : children)
                std::sort(kids.begin(), kids.end());
            for (int v : post_order)
                fill(v);
        }

        auto skip_value(int u) const -> int
        {
            return std::max({best[u][0][Unused], best[u][0][OddSide], best[u][0][EvenSide]});
        }

        auto skip_class(int u) const -> int
        {
            int c = Unused;
            for (int k : {OddSide, EvenSide})
                if (best[u][0][k] > best[u][0][c])
                    c = k;
            return c;
        }

        auto take_value(int u, int c) const -> int
        {
            int inner = best[u][1][opposite(c)];
            return inner == minus_infinity ? minus_infinity : inner + 1;
        }

        // layers[i] = knapsack after the first i children of v, for class c.
        auto layers(int v, int c) const -> std::vector<Knapsack>
        {
            std::vector<Knapsack> out;
            Knapsack k{0, minus_infinity, minus_infinity, minus_infinity};
            out.push_back(k);
            for (int u : children[v]) {
                Knapsack next;
                next.fill(minus_infinity);
                int skip = skip_value(u), take = take_value(u, c);
                for (int s = 0; s < 4; ++s) {
                    if (k[s] == minus_infinity)
                        continue;
                    next[s] = std::max(next[s], k[s] + skip);
                    if (take != minus_infinity)
                        next[add_one[s]] = std::max(next[add_one[s]], k[s] + take);
                }
                k = next;
                out.push_back(k);
            }
            return out;
        }

        auto fill(int v) -> void
        {
            int unused = 0;
            for (int u : children[v])
                unused += skip_value(u);
            best[v][0][Unused] = unused;
            best[v][1][Unused] = minus_infinity;
            for (int c : {OddSide, EvenSide}) {
                auto k = layers(v, c).back();
                for (int p = 0; p < 2; ++p) {
                    int value = minus_infinity;
                    for (int s = 0; s < 4; ++s) {
                        int final_state = p ? add_one[s] : s;
                        if (k[s] != minus_infinity && accepts(c, final_state))
                            value = std::max(value, k[s]);
                    }
                    best[v][p][c] = value;
                }
            }
        }

        auto emit(int v, int p, int c, EdgeList & out) const -> void
        {
            if (c == Unused) {
                for (int u : children[v])
                    emit(u, 0, skip_class(u), out);
                return;
            }
            auto table = layers(v, c);
            int target = best[v][p][c];
            int state = -1;
            for (int s = 0; s < 4; ++s)
                if (table.back()[s] == target && accepts(c, p ? add_one[s] : s)) {
                    state = s;
                    break;
                }
            for (std::size_t i = children[v].size(); i-- > 0;) {
                int u = children[v][i];
                int value = table[i + 1][state];
                int skip = skip_value(u), take = take_value(u, c);
                if (table[i][state] != minus_infinity && table[i][state] + skip == value) {
                    emit(u, 0, skip_class(u), out);
                    continue;
                }
                int prev = -1;
                for (int s = 0; s < 4; ++s)
                    if (add_one[s] == state && table[i][s] != minus_infinity && take != minus_infinity
                        && table[i][s] + take == value) {
                        prev = s;
                        break;
                    }
                out.push_back({std::min(u, v), std::max(u, v)});
                emit(u, 1, opposite(c), out);
                state = prev;
            }
        }
    };

    auto require_tree(const Graph & g) -> void
    {
        if (! is_tree(g))
            throw Error(ErrorCode::NotATree, "input graph is not a tree");
    }
}

auto eps_tree_exact(const Graph & tree, int root) -> EdgeSubgraphResult
{
    require_tree(tree);
    if (root < 0 || root >= tree.order())
        throw Error(ErrorCode::VertexOutOfRange, "root out of range");
    TreeDp dp(tree, root);
    int c = Unused;
    for (int k : {OddSide, EvenSide})
        if (dp.best[root][0][k] > dp.best[root][0][c])
            c = k;
    EdgeSubgraphResult result;
    result.value = dp.best[root][0][c];
    dp.emit(root, 0, c, result.witness);
    std::sort(result.witness.begin(), result.witness.end());
    return result;
}

auto eps_tree_exact(const Graph & tree) -> EdgeSubgraphResult
{
    return eps_tree_exact(tree, 0);
}

auto check_tree_bound(const Graph & tree) -> bool
{
    return eps_tree_exact(tree).value >= f_lower(tree.order());
}

namespace {
    auto encode(const Graph & t, int v, int parent) -> std::string
    {
        std::vector<std::string> parts;
        for (int w : t.neighbors(v))
            if (w != parent)
                parts.push_back(encode(t, w, v));
        std::sort(parts.begin(), parts.end());
        std::string out = "(";
        for (auto & p : parts)
            out += p;
        out += ")";
        return out;
    }

    auto centres(const Graph & t) -> std::vector<int>
    {
        int n = t.order();
        if (n <= 2) {
            std::vector<int> all;
            for (int v = 0; v < n; ++v)
                all.push_back(v);
            return all;
        }
        std::vector<int> degree = t.degree_sequence();
        std::vector<int> layer;
        for (int v = 0; v < n; ++v)
            if (degree[v] == 1)
                layer.push_back(v);
        int remaining = n;
        while (remaining > 2) {
            remaining -= static_cast<int>(layer.size());
            std::vector<int> next;
            for (int leaf : layer)
                for (int w : t.neighbors(leaf))
                    if (--degree[w] == 1)
                        next.push_back(w);
            layer = std::move(next);
        }
        std::sort(layer.begin(), layer.end());
        return layer;
    }
}

auto tree_canonical_form(const Graph & tree) -> std::string
{
    require_tree(tree);
    std::string best;
    for (int c : centres(tree)) {
        auto code = encode(tree, c, -1);
        if (best.empty() || code < best)
            best = code;
    }
    return best;
}

auto unlabelled_trees(int n) -> std::vector<Graph>
{
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "trees need at least one vertex");
    if (n > max_vertices)
        throw Error(ErrorCode::TooLarge, "tree order exceeds the 64-vertex cap");
    std::vector<Graph> current{Graph(1)};
    for (int k = 2; k <= n; ++k) {
        std::vector<Graph> next;
        std::set<std::string> seen;
        for (const auto & t : current) {
            auto edges = t.edges();
            for (int v = 0; v < k - 1; ++v) {
                auto grown_edges = edges;
                grown_edges.push_back({v, k - 1});
                auto grown = Graph::from_edges(k, grown_edges);
                if (seen.insert(tree_canonical_form(grown)).second)
                    next.push_back(grown);
            }
        }
        current = std::move(next);
    }
    return current;
}

}
