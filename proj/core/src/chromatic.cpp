#include <oddsub/solvers.hpp>

#include <algorithm>

namespace oddsub {

namespace {
    // Greedy sequential colouring of `candidates` gives a bound on the clique
    // size reachable from them (Tomita-style).
    struct CliqueSearch {
        const Graph & g;
        VertexSet best;

        auto colour_bound(VertexSet candidates) const -> int
        {
            int colours = 0;
            auto uncoloured = candidates;
            while (! uncoloured.empty()) {
                ++colours;
                auto available = uncoloured;
                while (! available.empty()) {
                    int v = available.min();
                    uncoloured.erase(v);
                    available = available - g.neighbors(v);
                    available.erase(v);
                }
            }
            return colours;
        }

        auto expand(VertexSet current, VertexSet candidates) -> void
        {
            if (candidates.empty()) {
                if (current.size() > best.size())
                    best = current;
                return;
            }
            if (current.size() + colour_bound(candidates) <= best.size())
                return;
            while (! candidates.empty()) {
                if (current.size() + candidates.size() <= best.size())
                    return;
                int v = candidates.min();
                auto with_v = current;
                with_v.insert(v);
                expand(with_v, candidates & g.neighbors(v));
                candidates.erase(v);
            }
        }
    };

    struct ColourSearch {
        const Graph & g;
        int k;
        std::uint64_t budget;
        std::uint64_t nodes = 0;
        bool aborted = false;
        std::vector<int> colour;
        std::vector<VertexSet> classes;

        auto saturation(int v) const -> int
        {
            int s = 0;
            for (const auto & c : classes)
                if (! (c & g.neighbors(v)).empty())
                    ++s;
            return s;
        }

        // DSATUR branching; a fresh colour is only tried once (the lowest unused one).
        auto extend(int remaining, int used) -> bool
        {
            if (remaining == 0)
                return true;
            if (++nodes > budget) {
                aborted = true;
                return false;
            }
            int pick = -1, pick_sat = -1, pick_deg = -1;
            for (int v = 0; v < g.order(); ++v) {
                if (colour[v] >= 0)
                    continue;
                int sat = saturation(v), deg = g.degree(v);
                if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                    pick = v;
                    pick_sat = sat;
                    pick_deg = deg;
                }
            }
            for (int c = 0; c < std::min(used + 1, k); ++c) {
                if (! (classes[c] & g.neighbors(pick)).empty())
                    continue;
                colour[pick] = c;
                classes[c].insert(pick);
                if (extend(remaining - 1, std::max(used, c + 1)))
                    return true;
                classes[c].erase(pick);
                colour[pick] = -1;
                if (aborted)
                    return false;
            }
            return false;
        }
    };
}

auto max_clique(const Graph & g) -> VertexSet
{
    CliqueSearch search{g, {}};
    search.expand({}, g.vertices());
    return search.best;
}

auto dsatur_colouring(const Graph & g) -> std::vector<int>
{
    int n = g.order();
    std::vector<int> colour(n, -1);
    std::vector<VertexSet> classes;
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (colour[v] >= 0)
                continue;
            int sat = 0;
            for (const auto & c : classes)
                if (! (c & g.neighbors(v)).empty())
                    ++sat;
            if (sat > pick_sat || (sat == pick_sat && g.degree(v) > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = g.degree(v);
            }
        }
        std::size_t c = 0;
        while (c < classes.size() && ! (classes[c] & g.neighbors(pick)).empty())
            ++c;
        if (c == classes.size())
            classes.emplace_back();
        classes[c].insert(pick);
        colour[pick] = static_cast<int>(c);
    }
    return colour;
}

auto is_proper_colouring(const Graph & g, const std::vector<int> & colouring) -> bool
{
    if (colouring.size() != static_cast<std::size_t>(g.order()))
        return false;
    for (int c : colouring)
        if (c < 0)
            return false;
    for (auto [u, v] : g.edges())
        if (colouring[u] == colouring[v])
            return false;
    return true;
}

auto chromatic_search(const Graph & g, std::uint64_t node_budget) -> ColouringResult
{
    int n = g.order();
    if (n == 0)
        return {0, {}, 0, true};
    if (g.size() == 0)
        return {1, std::vector<int>(n, 0), 1, true};
    if (auto two = two_coloring(g))
        return {2, *two, 2, true};

    auto colouring = dsatur_colouring(g);
    int upper = *std::max_element(colouring.begin(), colouring.end()) + 1;
    // Clique number, and n / alpha since every colour class is independent.
    std::vector<std::uint64_t> complement_rows(n);
    for (int v = 0; v < n; ++v)
        complement_rows[v] = g.vertices().bits() & ~g.row(v) & ~(std::uint64_t{1} << v);
    int alpha = max_clique(Graph::from_rows(n, complement_rows)).size();
    int lower = std::max({3, max_clique(g).size(), (n + alpha - 1) / alpha});

    std::uint64_t spent = 0;
    for (int k = lower; k < upper; ++k) {
        ColourSearch search{g, k, node_budget - spent, 0, false, std::vector<int>(n, -1), std::vector<VertexSet>(k)};
        bool found = search.extend(n, 0);
        spent += search.nodes;
        if (found)
            return {k, search.colour, k, true};
        if (search.aborted)
            return {upper, colouring, k, false};
        lower = k + 1;
    }
    return {upper, colouring, upper, true};
}

auto chromatic_number(const Graph & g, std::uint64_t node_budget) -> int
{
    auto result = chromatic_search(g, node_budget);
    if (! result.complete)
        throw BudgetExceeded("chromatic number search stopped", result.lower_bound, node_budget);
    return result.value;
}

}
