#include <oddsub/graph.hpp>

#include <algorithm>
#include <map>
#include <tuple>

namespace oddsub {

namespace {
    using Colouring = std::vector<int>;

    // Colour refinement run on both graphs at once so that colour ids are
    // comparable: a vertex's new colour is its old colour plus the sorted
    // multiset of its neighbours' colours.
    auto refine(const Graph & g, const Graph & h, Colouring & cg, Colouring & ch) -> void
    {
        int classes = -1;
        while (true) {
            using Signature = std::pair<int, std::vector<int>>;
            auto signature = [](const Graph & graph, const Colouring & c, int v) {
                Signature s{c[v], {}};
                for (int w : graph.neighbors(v))
                    s.second.push_back(c[w]);
                std::sort(s.second.begin(), s.second.end());
                return s;
            };

            std::map<Signature, int> ids;
            std::vector<Signature> sg, sh;
            for (int v = 0; v < g.order(); ++v)
                sg.push_back(signature(g, cg, v));
            for (int v = 0; v < h.order(); ++v)
                sh.push_back(signature(h, ch, v));
            for (auto & s : sg)
                ids.emplace(s, 0);
            for (auto & s : sh)
                ids.emplace(s, 0);
            int next = 0;
            for (auto & [_, id] : ids)
                id = next++;
            for (int v = 0; v < g.order(); ++v)
                cg[v] = ids[sg[v]];
            for (int v = 0; v < h.order(); ++v)
                ch[v] = ids[sh[v]];
            if (next == classes)
                return;
            classes = next;
        }
    }

    struct Matcher {
        const Graph & g;
        const Graph & h;
        const Colouring & cg;
        const Colouring & ch;
        std::vector<int> order;
        std::vector<int> map;
        std::uint64_t used = 0;

        auto extend(std::size_t depth) -> bool
        {
            if (depth == order.size())
                return true;
            int v = order[depth];
            for (int c = 0; c < h.order(); ++c) {
                if (ch[c] != cg[v] || ((used >> c) & 1U))
                    continue;
                bool ok = true;
                for (std::size_t i = 0; i < depth && ok; ++i) {
                    int w = order[i];
                    ok = g.adjacent(v, w) == h.adjacent(c, map[w]);
                }
                if (! ok)
                    continue;
                map[v] = c;
                used |= std::uint64_t{1} << c;
                if (extend(depth + 1))
                    return true;
                used &= ~(std::uint64_t{1} << c);
            }
            map[v] = -1;
            return false;
        }
    };
}

auto find_isomorphism(const Graph & g, const Graph & h,
    std::span<const int> g_colours, std::span<const int> h_colours) -> std::optional<std::vector<int>>
{
    if (g.order() > max_isomorphism_order || h.order() > max_isomorphism_order)
        throw Error(ErrorCode::TooLarge, "isomorphism test is limited to 16 vertices");
    if (g_colours.size() != h_colours.size() || (! g_colours.empty() && g_colours.size() != static_cast<std::size_t>(g.order())))
        throw Error(ErrorCode::InvalidArgument, "vertex colourings must cover both graphs");
    if (g.order() != h.order() || g.size() != h.size())
        return std::nullopt;

    int n = g.order();
    if (n == 0)
        return std::vector<int>{};
    Colouring cg(n, 0), ch(n, 0);
    if (! g_colours.empty()) {
        cg.assign(g_colours.begin(), g_colours.end());
        ch.assign(h_colours.begin(), h_colours.end());
    }
    refine(g, h, cg, ch);

    auto histogram = [](const Colouring & c) {
        auto sorted = c;
        std::sort(sorted.begin(), sorted.end());
        return sorted;
    };
    if (histogram(cg) != histogram(ch))
        return std::nullopt;

    std::vector<int> class_size(*std::max_element(cg.begin(), cg.end()) + 1, 0);
    for (int c : cg)
        ++class_size[c];

    // Prefer vertices with many placed neighbours, then small colour classes.
    Matcher m{g, h, cg, ch, {}, std::vector<int>(n, -1)};
    std::uint64_t placed = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        auto key = [&](int v) {
            return std::tuple{-std::popcount(g.row(v) & placed), class_size[cg[v]], v};
        };
        for (int v = 0; v < n; ++v)
            if (! ((placed >> v) & 1U) && (best < 0 || key(v) < key(best)))
                best = v;
        m.order.push_back(best);
        placed |= std::uint64_t{1} << best;
    }

    if (! m.extend(0))
        return std::nullopt;
    return m.map;
}

auto is_isomorphic(const Graph & g, const Graph & h) -> bool
{
    return find_isomorphism(g, h).has_value();
}

}
