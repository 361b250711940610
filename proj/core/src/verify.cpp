#include <oddsub/families.hpp>
#include <oddsub/harness.hpp>
#include <oddsub/parity.hpp>
#include <oddsub/tree_eps.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace oddsub {

namespace {
    auto join(const std::vector<std::string> & parts, std::string_view sep) -> std::string
    {
        std::string out;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i)
                out += sep;
            out += parts[i];
        }
        return out;
    }

    auto failures_of(std::size_t failures, std::size_t total) -> std::string
    {
        return "failures=" + std::to_string(failures) + " of " + std::to_string(total);
    }

    // Counts the indices in [0, count) for which `fails(i)` is true. Results land
    // in per-index slots, so the count does not depend on the worker count.
    template <typename Fails>
    auto count_failures(std::size_t count, int workers, Fails fails) -> std::size_t
    {
        std::vector<char> failed(count, 0);
        parallel_for(count, workers, [&](std::size_t i) { failed[i] = fails(i) ? 1 : 0; });
        return static_cast<std::size_t>(std::count(failed.begin(), failed.end(), 1));
    }

    struct Suite {
        VerifyOptions options;
        SearchOptions search;
        std::vector<PaperFactResult> facts;

        auto seed(int fact) const -> std::uint64_t { return derive_seed(options.seed, static_cast<std::uint64_t>(fact)); }

        auto add(std::string id, std::string claim, std::string expected, std::string actual, bool pass) -> void
        {
            facts.push_back({std::move(id), std::move(claim), std::move(expected), std::move(actual), pass});
        }

        auto add(std::string id, std::string claim, std::string expected, std::string actual) -> void
        {
            bool pass = expected == actual;
            add(std::move(id), std::move(claim), std::move(expected), std::move(actual), pass);
        }
    };

    auto heawood_sides() -> BipartiteGraph
    {
        auto h = heawood();
        std::vector<Side> part(h.order());
        for (int v = 0; v < h.order(); ++v)
            part[v] = v % 2 == 0 ? Side::X : Side::Y;
        return BipartiteGraph(h, part);
    }

    auto degree_summary(const Graph & g) -> std::string
    {
        std::string out = "n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + " ";
        if (g.is_regular(g.max_degree()))
            out += std::to_string(g.max_degree()) + "-regular";
        else
            out += "degrees " + std::to_string(g.min_degree()) + ".." + std::to_string(g.max_degree());
        return out;
    }

    auto fact_structure(Suite & s) -> void
    {
        auto g = scott_counterexample().graph();
        auto complement = bipartite_complement(heawood_sides()).graph();
        std::string actual = degree_summary(g);
        actual += is_isomorphic(g, complement) ? " heawood-complement" : " not-heawood-complement";
        s.add("F1", "the bipartite complement of the Heawood graph is 4-regular on 14 vertices",
            "n=14 m=28 4-regular heawood-complement", actual);

        std::vector<Graph> neighbourhoods;
        for (auto [x, y] : g.edges())
            neighbourhoods.push_back(induced_subgraph(g, g.neighbors(x) | g.neighbors(y)));
        int classes = 0;
        std::vector<bool> placed(neighbourhoods.size(), false);
        for (std::size_t i = 0; i < neighbourhoods.size(); ++i) {
            if (placed[i])
                continue;
            ++classes;
            for (std::size_t j = i; j < neighbourhoods.size(); ++j)
                if (! placed[j] && is_isomorphic(neighbourhoods[i], neighbourhoods[j]))
                    placed[j] = true;
        }
        s.add("F2", "all edge neighbourhood subgraphs G[N(x) u N(y)] are pairwise isomorphic",
            "neighbourhoods=28 classes=1",
            "neighbourhoods=" + std::to_string(neighbourhoods.size()) + " classes=" + std::to_string(classes));

        std::set<int> counts;
        int pairs = 0;
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if (scott_counterexample().side(u) == scott_counterexample().side(v)) {
                    ++pairs;
                    counts.insert(common_neighbors(g, u, v).size());
                }
        std::vector<std::string> listed;
        for (int c : counts)
            listed.push_back(std::to_string(c));
        s.add("F3", "every two vertices on the same side have exactly two common neighbours", "pairs=42 counts={2}",
            "pairs=" + std::to_string(pairs) + " counts={" + join(listed, ",") + "}");

        s.add("F4", "the graph contains no K_{2,3}", "K23-free", contains_k23(g) ? "contains K23" : "K23-free");
    }

    auto fact_counterexample(Suite & s) -> void
    {
        auto g = scott_counterexample().graph();
        auto fo = fo_search(g, s.search);
        auto report = check_scott(g, s.search);
        std::string actual = "f_o=" + std::to_string(fo.value) + (is_odd_induced(g, fo.witness) ? "" : " (bad witness)")
            + " chi=" + std::to_string(report.chi) + " scott=" + std::string(to_string(report.scott_verdict));
        s.add("F5", "the Heawood bipartite complement has f_o = 6, below n/chi = 7",
            "f_o=6 chi=2 scott=violation", actual);

        std::vector<std::string> parts;
        for (int k : {1, 2}) {
            auto copies = k_copies(g, k);
            auto r = check_scott(copies, s.search);
            parts.push_back("k=" + std::to_string(k) + ":" + std::to_string(r.fo) + "<" + r.scott_bound.to_string() + " "
                + std::string(to_string(r.scott_verdict)));
        }
        s.add("F6", "k disjoint copies have f_o = 6k and stay below n/chi",
            "k=1:6<7 violation k=2:12<14 violation", join(parts, " "));
    }

    auto fact_small_trees(Suite & s) -> void
    {
        std::vector<std::string> expected, actual;
        bool routes_agree = true;
        auto record = [&](const std::string & name, const Graph & t, int formula) {
            int via_line = eps_exact(t, s.search).value;
            if (eps_tree_exact(t).value != via_line)
                routes_agree = false;
            expected.push_back(name + ":" + std::to_string(formula));
            actual.push_back(name + ":" + std::to_string(via_line));
        };
        record("P4", path(4), 2);
        // A star with s leaves keeps the largest even number of them.
        for (int leaves = 1; leaves <= 6; ++leaves)
            record("K1," + std::to_string(leaves), star(leaves + 1), leaves - leaves % 2);
        auto e = join(expected, " "), a = join(actual, " ");
        if (! routes_agree)
            a += " (tree DP disagrees)";
        s.add("F7", "eps(P4) = 2 and eps(K_{1,s}) is the largest even number <= s", e, a, e == a && routes_agree);
    }

    auto fact_tree_bound(Suite & s) -> void
    {
        std::size_t count = s.options.quick ? 100 : 500;
        auto root = s.seed(8);
        auto failures = count_failures(count, s.options.workers, [&](std::size_t i) {
            Rng rng(derive_seed(root, i));
            int n = 2 + static_cast<int>(rng.below(39));
            return ! check_tree_bound(random_tree(n, rng.next()));
        });
        s.add("F8", "eps(T) >= f(n) on random trees with 2..40 vertices", failures_of(0, count),
            failures_of(failures, count));
    }

    auto fact_line_graph_bound(Suite & s) -> void
    {
        auto corpus = random_corpus(s.options.quick ? 150 : 500, 1, 8, s.seed(9));
        std::vector<Graph> eligible;
        for (auto & g : corpus)
            if (g.order() >= 3 && is_connected(g))
                eligible.push_back(g);
        auto failures = count_failures(eligible.size(), s.options.workers, [&](std::size_t i) {
            auto line = line_graph(eligible[i]);
            std::int64_t fo = fo_exact(line, s.search).value;
            std::int64_t chi = chromatic_number(line, s.search.node_budget);
            return fo * chi < eligible[i].size();
        });
        s.add("F9", "f_o(L(G)) >= m / chi(L(G)) on connected corpus graphs with 3..8 vertices",
            failures_of(0, eligible.size()), failures_of(failures, eligible.size()));
    }

    auto fact_cubic_line_graphs(Suite & s) -> void
    {
        std::vector<std::pair<std::string, Graph>> graphs{
            {"K4", complete(4)}, {"K33", complete_bipartite(3, 3).graph()}, {"Petersen", petersen()}, {"prism", prism3()}};
        std::vector<std::string> expected, actual;
        bool pass = true;
        for (auto & [name, g] : graphs) {
            int fo = fo_exact(line_graph(g), s.search).value;
            int half = (g.order() + 1) / 2;
            pass = pass && 2 * fo >= g.order();
            expected.push_back(name + ">=" + std::to_string(half));
            actual.push_back(name + "=" + std::to_string(fo));
        }
        s.add("F10", "f_o(L(G)) >= n/2 for the cubic graphs K4, K33, Petersen and the prism", join(expected, " "),
            join(actual, " "), pass);
    }

    auto fact_p3_packing(Suite & s) -> void
    {
        std::vector<Graph> cubics{complete(4), complete_bipartite(3, 3).graph(), petersen(), prism3()};
        int random_count = s.options.quick ? 8 : 36;
        auto root = s.seed(11);
        for (int i = 0; i < random_count; ++i) {
            int n = 4 + 2 * (i % 7);
            cubics.push_back(random_cubic(n, derive_seed(root, static_cast<std::uint64_t>(i))));
        }
        auto failures = count_failures(cubics.size(), s.options.workers,
            [&](std::size_t i) { return 4 * p3_packing_max(cubics[i]).value < cubics[i].order(); });
        s.add("F11", "p3(G) >= n/4 on cubic graphs with up to 16 vertices", failures_of(0, cubics.size()),
            failures_of(failures, cubics.size()));
    }

    auto fact_complete_line_graphs(Suite & s) -> void
    {
        std::vector<std::string> expected, actual;
        auto search = s.search;
        search.workers = s.options.workers;
        for (int n : {4, 6, 8}) {
            auto fo = fo_search(line_complete(n), search);
            expected.push_back("n=" + std::to_string(n) + ":" + std::to_string(n * (n - 2) / 4));
            actual.push_back("n=" + std::to_string(n) + ":" + std::to_string(fo.value) + (fo.complete ? "" : "?"));
        }
        s.add("F12", "f_o(L(K_n)) = n(n-2)/4 for n in {4, 6, 8}", join(expected, " "), join(actual, " "));

        auto report = check_bww(line_complete(8), search);
        s.add("F13", "L(K_8) is connected with f_o below 2 floor(n/4)", "12 < 14 violation",
            std::to_string(report.fo) + " < " + std::to_string(report.bww_bound) + " "
                + std::string(to_string(report.bww_verdict)));
    }

    auto fact_gallai(Suite & s) -> void
    {
        auto corpus = random_corpus(s.options.quick ? 150 : 500, 1, 20, s.seed(14));
        auto failures = count_failures(corpus.size(), s.options.workers, [&](std::size_t i) {
            const auto & g = corpus[i];
            try {
                auto ee = gallai_even_even(g);
                auto eo = gallai_even_odd(g);
                return ! is_valid_partition(g, ee) || ! is_valid_partition(g, eo)
                    || 2 * large_even_subgraph(g).size() < g.order();
            }
            catch (const Error &) {
                return true;
            }
        });
        s.add("F14", "both parity partitions exist and one even side has >= n/2 vertices",
            failures_of(0, corpus.size()), failures_of(failures, corpus.size()));
    }
}

auto verify_paper(const VerifyOptions & options) -> std::vector<PaperFactResult>
{
    Suite s{options, {}, {}};
    s.search.workers = 1;
    fact_structure(s);
    fact_counterexample(s);
    fact_small_trees(s);
    fact_tree_bound(s);
    fact_line_graph_bound(s);
    fact_cubic_line_graphs(s);
    fact_p3_packing(s);
    fact_complete_line_graphs(s);
    fact_gallai(s);
    return s.facts;
}

auto render_fact_table(const std::vector<PaperFactResult> & facts) -> std::string
{
    std::ostringstream out;
    std::size_t passed = 0;
    for (const auto & f : facts) {
        passed += f.pass ? 1 : 0;
        out << f.fact_id << std::string(f.fact_id.size() < 4 ? 4 - f.fact_id.size() : 1, ' ')
            << (f.pass ? "pass " : "FAIL ") << f.claim << '\n'
            << "    expected: " << f.expected << '\n'
            << "    actual:   " << f.actual << '\n';
    }
    out << passed << "/" << facts.size() << " facts pass\n";
    return out.str();
}

}
