#include <oddsub/parity.hpp>
#include <oddsub/solvers.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <string>
#include <thread>

namespace oddsub {

auto default_node_budget() -> std::uint64_t
{
    constexpr std::uint64_t built_in = 8'000'000'000ULL;
    if (const char * env = std::getenv("ODDSUB_BUDGET")) {
        char * end = nullptr;
        auto value = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && value > 0)
            return value;
    }
    return built_in;
}

auto is_odd_induced(const Graph & g, VertexSet s) -> bool
{
    if (s.empty() || (s.bits() & ~g.vertices().bits()))
        return false;
    for (int v : s)
        if ((g.neighbors(v) & s).size() % 2 == 0)
            return false;
    return true;
}

namespace {
    // Depth-first search over vertex 0, 1, ..., n-1 choosing "out" before "in",
    // which visits subsets in bit-vector lexicographic order. `parity` bit v is
    // |N(v) & S| mod 2 for the current partial S; once every neighbour of an
    // in-vertex is decided its parity is final and must be odd.
    class ComponentSearch {
    public:
        explicit ComponentSearch(const Graph & g) : _g(g), _n(g.order())
        {
            for (int v = 0; v < _n; ++v) {
                int last = v;
                if (g.row(v))
                    last = std::max(last, 63 - std::countl_zero(g.row(v)));
                _closes_at[last + 1] |= std::uint64_t{1} << v;
            }
        }

        auto order() const -> int { return _n; }
        auto row(int v) const -> std::uint64_t { return _g.row(v); }
        auto closes_at(int k) const -> std::uint64_t { return _closes_at[k]; }

    private:
        const Graph & _g;
        int _n;
        std::array<std::uint64_t, max_vertices + 1> _closes_at{};
    };

    struct Shared {
        std::atomic<int> best_value{0};
        std::atomic<std::uint64_t> nodes{0};
        std::atomic<bool> aborted{false};
        std::uint64_t budget = 0;
    };

    struct Incumbent {
        int value = 0;
        std::uint64_t witness = 0;
        // Once the search has reached a solution of the incumbent's size in
        // lexicographic order, later ties cannot improve the witness.
        bool settled = true;
    };

    class Worker {
    public:
        Worker(const ComponentSearch & c, Shared & shared, Incumbent start) : _c(c), _shared(shared), _best(start) {}

        ~Worker() { flush(); }
        Worker(const Worker &) = delete;
        auto operator=(const Worker &) -> Worker & = delete;

        auto run(int k, std::uint64_t s, std::uint64_t parity) -> void
        {
            dfs(k, s, parity, std::popcount(s));
            flush();
        }

        auto best() const -> const Incumbent & { return _best; }

    private:
        auto flush() -> void
        {
            if (_pending) {
                auto total = _shared.nodes.fetch_add(_pending, std::memory_order_relaxed) + _pending;
                _pending = 0;
                if (total > _shared.budget)
                    _shared.aborted.store(true, std::memory_order_relaxed);
            }
        }

        auto dfs(int k, std::uint64_t s, std::uint64_t parity, int size) -> void
        {
            if ((++_pending & 0xfff) == 0) {
                flush();
                if (_shared.aborted.load(std::memory_order_relaxed))
                    return;
            }

            int n = _c.order();
            int bound = (size + n - k) & ~1;
            int need = std::max(_best.settled ? _best.value + 1 : _best.value,
                _shared.best_value.load(std::memory_order_relaxed));
            if (bound < need || bound == 0)
                return;

            if (k == n) {
                if (size > _best.value || (size == _best.value && lex_less(VertexSet(s), VertexSet(_best.witness)))) {
                    _best.value = size;
                    _best.witness = s;
                }
                _best.settled = true;
                int seen = _shared.best_value.load(std::memory_order_relaxed);
                while (seen < size && ! _shared.best_value.compare_exchange_weak(seen, size, std::memory_order_relaxed))
                    ;
                return;
            }

            auto closing = _c.closes_at(k + 1);
            if (! (s & closing & ~parity))
                dfs(k + 1, s, parity, size);
            if (_shared.aborted.load(std::memory_order_relaxed))
                return;
            auto s_in = s | (std::uint64_t{1} << k);
            auto parity_in = parity ^ _c.row(k);
            if (! (s_in & closing & ~parity_in))
                dfs(k + 1, s_in, parity_in, size + 1);
        }

        const ComponentSearch & _c;
        Shared & _shared;
        Incumbent _best;
        std::uint64_t _pending = 0;
    };

    struct Prefix {
        std::uint64_t s;
        std::uint64_t parity;
    };

    // Feasible assignments of vertices 0..depth-1, in lexicographic order.
    auto prefixes(const ComponentSearch & c, int depth) -> std::vector<Prefix>
    {
        std::vector<Prefix> out{{0, 0}};
        for (int k = 0; k < depth; ++k) {
            std::vector<Prefix> next;
            auto closing = c.closes_at(k + 1);
            for (auto [s, parity] : out) {
                if (! (s & closing & ~parity))
                    next.push_back({s, parity});
                auto s_in = s | (std::uint64_t{1} << k);
                auto parity_in = parity ^ c.row(k);
                if (! (s_in & closing & ~parity_in))
                    next.push_back({s_in, parity_in});
            }
            out = std::move(next);
        }
        return out;
    }

    auto heuristic_start(const Graph & g) -> Incumbent
    {
        auto odd_part = gallai_even_odd(g).s;
        if (is_odd_induced(g, odd_part))
            return Incumbent{odd_part.size(), odd_part.bits(), false};
        return Incumbent{};
    }

    auto better(const Incumbent & a, const Incumbent & b) -> bool
    {
        return a.value > b.value || (a.value == b.value && lex_less(VertexSet(a.witness), VertexSet(b.witness)));
    }

    auto search_component(const Graph & g, const SearchOptions & options, Shared & shared) -> Incumbent
    {
        ComponentSearch c(g);
        auto start = heuristic_start(g);
        shared.best_value.store(0);

        constexpr int parallel_threshold = 20;
        if (options.workers <= 1 || g.order() < parallel_threshold) {
            Worker w(c, shared, start);
            w.run(0, 0, 0);
            return w.best();
        }

        int depth = std::min(g.order() - 1, static_cast<int>(std::bit_width(static_cast<unsigned>(options.workers))) + 5);
        auto tasks = prefixes(c, depth);
        std::vector<Incumbent> results(tasks.size(), start);
        std::atomic<std::size_t> next{0};
        auto body = [&] {
            for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
                Worker w(c, shared, start);
                w.run(depth, tasks[i].s, tasks[i].parity);
                results[i] = w.best();
            }
        };
        std::vector<std::jthread> pool;
        for (int t = 0; t < options.workers; ++t)
            pool.emplace_back(body);
        pool.clear();

        // Scheduling only changes which subtrees were cut by another worker's
        // bound, never which subset is best: combine by value, then lexicographically.
        Incumbent best = start;
        for (const auto & r : results)
            if (better(r, best))
                best = r;
        return best;
    }
}

auto fo_search(const Graph & g, const SearchOptions & options) -> OddSubgraphResult
{
    // An odd induced subgraph is a union of odd induced subgraphs of the
    // components, and the union of per-component lexicographic minima is the
    // global minimum, so components are solved independently.
    Shared shared;
    shared.budget = options.node_budget;
    OddSubgraphResult result;
    for (auto component : connected_components(g)) {
        if (component.size() < 2)
            continue;
        auto local = search_component(induced_subgraph(g, component), options, shared);
        auto members = component.to_vector();
        result.value += local.value;
        for (int i : VertexSet(local.witness))
            result.witness.insert(members[i]);
        if (shared.aborted.load())
            result.complete = false;
    }
    result.nodes = shared.nodes.load();
    return result;
}

auto fo_exact(const Graph & g, const SearchOptions & options) -> OddSubgraphResult
{
    auto result = fo_search(g, options);
    if (! result.complete)
        throw BudgetExceeded("odd induced subgraph search stopped after " + std::to_string(result.nodes) + " nodes",
            result.value, result.nodes);
    return result;
}

}
