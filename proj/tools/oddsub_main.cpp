#include <oddsub/families.hpp>
#include <oddsub/harness.hpp>
#include <oddsub/parity.hpp>
#include <oddsub/solvers.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace oddsub;

namespace {

constexpr int exit_violation = 1;
constexpr int exit_input = 2;

auto to_int(const std::string & s) -> int
{
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(s, &used);
    }
    catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != s.size())
        throw Error(ErrorCode::InvalidArgument, "expected an integer, got '" + s + "'");
    return value;
}

auto to_double(const std::string & s) -> double
{
    std::size_t used = 0;
    double value = 0;
    try {
        value = std::stod(s, &used);
    }
    catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != s.size())
        throw Error(ErrorCode::InvalidArgument, "expected a number, got '" + s + "'");
    return value;
}

// Consumes a family name and its arguments from args[pos...] and returns the graph.
auto build_family(const std::vector<std::string> & args, std::size_t & pos, std::uint64_t seed) -> Graph
{
    if (pos >= args.size())
        throw Error(ErrorCode::InvalidArgument, "missing family name");
    const auto name = args[pos++];
    auto next_int = [&] {
        if (pos >= args.size())
            throw Error(ErrorCode::InvalidArgument, "family '" + name + "' needs more arguments");
        return to_int(args[pos++]);
    };

    if (name == "complete")
        return complete(next_int());
    if (name == "complete-bipartite") {
        int a = next_int();
        return complete_bipartite(a, next_int()).graph();
    }
    if (name == "path")
        return path(next_int());
    if (name == "cycle")
        return cycle(next_int());
    if (name == "star")
        return star(next_int());
    if (name == "petersen")
        return petersen();
    if (name == "prism3")
        return prism3();
    if (name == "heawood")
        return heawood();
    if (name == "scott")
        return scott_counterexample().graph();
    if (name == "fano-incidence")
        return incidence_graph(fano_plane()).graph();
    if (name == "incidence")
        return incidence_graph(projective_plane(next_int())).graph();
    if (name == "line-complete")
        return line_complete(next_int());
    if (name == "random-tree")
        return random_tree(next_int(), seed);
    if (name == "random-cubic")
        return random_cubic(next_int(), seed);
    if (name == "random-graph") {
        int n = next_int();
        if (pos >= args.size())
            throw Error(ErrorCode::InvalidArgument, "random-graph needs N P");
        double p = to_double(args[pos++]);
        if (! (p >= 0.0 && p <= 1.0))
            throw Error(ErrorCode::InvalidArgument, "edge probability must lie in [0, 1]");
        return random_graph(n, p, seed);
    }
    if (name == "copies") {
        int k = next_int();
        return k_copies(build_family(args, pos, seed), k);
    }
    if (name == "line")
        return line_graph(build_family(args, pos, seed));
    throw Error(ErrorCode::InvalidArgument, "unknown family '" + name + "'");
}

auto family_graph(const std::vector<std::string> & args, std::uint64_t seed) -> Graph
{
    std::size_t pos = 0;
    auto g = build_family(args, pos, seed);
    if (pos != args.size())
        throw Error(ErrorCode::InvalidArgument, "unexpected argument '" + args[pos] + "'");
    return g;
}

struct GraphSource {
    std::string g6;
    std::string file;
    std::vector<std::string> family;
    std::uint64_t seed = 42;

    auto attach(CLI::App * cmd) -> void
    {
        auto * g6_opt = cmd->add_option("--g6", g6, "graph6 string");
        auto * file_opt = cmd->add_option("--file", file, "file whose first line is a graph6 string");
        auto * family_opt = cmd->add_option("--family", family, "named family followed by its arguments")
                                ->expected(1, -1);
        g6_opt->excludes(file_opt)->excludes(family_opt);
        file_opt->excludes(family_opt);
        cmd->add_option("--seed", seed, "seed for random families");
    }

    auto load() const -> Graph
    {
        if (! g6.empty())
            return parse_graph6(g6);
        if (! file.empty()) {
            std::ifstream in(file);
            if (! in)
                throw Error(ErrorCode::InvalidArgument, "cannot open '" + file + "'");
            std::string line;
            while (std::getline(in, line)) {
                if (! line.empty() && line.back() == '\r')
                    line.pop_back();
                if (! line.empty())
                    return parse_graph6(line);
            }
            throw Error(ErrorCode::MalformedHeader, "'" + file + "' holds no graph");
        }
        if (! family.empty())
            return family_graph(family, seed);
        throw Error(ErrorCode::InvalidArgument, "give one of --g6, --file or --family");
    }
};

auto print_set(VertexSet s) -> std::string
{
    std::string out;
    for (int v : s)
        out += (out.empty() ? "" : " ") + std::to_string(v);
    return out;
}

auto budget_note(bool complete) -> void
{
    if (! complete)
        std::cout << "note: node budget exhausted, value is a lower bound\n";
}

}

int main(int argc, char ** argv)
{
    CLI::App app{"Odd induced subgraph solvers and conjecture checks"};
    app.require_subcommand(1);

    GraphSource fo_src, eps_src, gallai_src, chi_src;
    int fo_jobs = 1, eps_jobs = 1;

    auto * fo_cmd = app.add_subcommand("fo", "maximum odd induced subgraph");
    fo_src.attach(fo_cmd);
    fo_cmd->add_option("--jobs", fo_jobs, "search threads")->check(CLI::Range(1, 256));

    auto * eps_cmd = app.add_subcommand("eps", "maximum odd-even edge subgraph");
    eps_src.attach(eps_cmd);
    eps_cmd->add_option("--jobs", eps_jobs, "search threads")->check(CLI::Range(1, 256));

    std::string gallai_kind = "even-even";
    auto * gallai_cmd = app.add_subcommand("gallai", "parity partition of the vertex set");
    gallai_src.attach(gallai_cmd);
    gallai_cmd->add_option("--kind", gallai_kind)->check(CLI::IsMember({"even-even", "even-odd"}));

    auto * chi_cmd = app.add_subcommand("chi", "chromatic number");
    chi_src.attach(chi_cmd);

    std::vector<std::string> gen_args;
    std::uint64_t gen_seed = 42;
    int gen_count = 1;
    auto * gen_cmd = app.add_subcommand("gen", "write graph6 for a named or random family");
    gen_cmd->add_option("family", gen_args, "family name and arguments")->required();
    gen_cmd->add_option("--seed", gen_seed);
    gen_cmd->add_option("--count", gen_count, "number of graphs; graph i uses a seed derived from --seed")
        ->check(CLI::PositiveNumber);

    CheckSelection checks;
    std::string check_file, check_format = "jsonl";
    int check_jobs = 1;
    auto * check_cmd = app.add_subcommand("check", "run conjecture checks over a graph6 file");
    check_cmd->add_flag("--scott", checks.scott);
    check_cmd->add_flag("--bww", checks.bww);
    check_cmd->add_flag("--scott-lower", checks.scott_lower);
    check_cmd->add_option("--file", check_file, "graph6 file, one graph per line ('-' for stdin)")->required();
    check_cmd->add_option("--jobs", check_jobs)->check(CLI::Range(1, 256));
    check_cmd->add_option("--format", check_format)->check(CLI::IsMember({"jsonl", "csv"}));

    VerifyOptions verify;
    auto * verify_cmd = app.add_subcommand("verify-paper", "run the fixed fact suite F1..F14");
    verify_cmd->add_option("--seed", verify.seed);
    verify_cmd->add_flag("--quick", verify.quick, "smaller random corpora");
    verify_cmd->add_option("--jobs", verify.workers)->check(CLI::Range(1, 256));

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_input;
    }

    try {
        if (fo_cmd->parsed()) {
            auto g = fo_src.load();
            auto r = fo_search(g, {default_node_budget(), fo_jobs});
            std::cout << "f_o = " << r.value << "\nwitness: " << print_set(r.witness) << "\n";
            budget_note(r.complete);
        }
        else if (eps_cmd->parsed()) {
            auto g = eps_src.load();
            auto r = eps_search(g, {default_node_budget(), eps_jobs});
            std::cout << "eps = " << r.value << "\nedges:";
            for (auto [u, v] : r.witness)
                std::cout << ' ' << u << '-' << v;
            std::cout << "\n";
            budget_note(r.complete);
        }
        else if (gallai_cmd->parsed()) {
            auto g = gallai_src.load();
            auto p = gallai_kind == "even-even" ? gallai_even_even(g) : gallai_even_odd(g);
            std::cout << "kind: " << gallai_kind << "\nS: " << print_set(p.s)
                      << "\nV-S: " << print_set(g.vertices() - p.s) << "\n";
        }
        else if (chi_cmd->parsed()) {
            auto g = chi_src.load();
            auto r = chromatic_search(g);
            std::cout << "chi = " << r.value << "\ncolouring:";
            for (int c : r.colouring)
                std::cout << ' ' << c;
            std::cout << "\n";
            if (! r.complete)
                std::cout << "note: node budget exhausted, chi lies in [" << r.lower_bound << ", " << r.value << "]\n";
        }
        else if (gen_cmd->parsed()) {
            for (int i = 0; i < gen_count; ++i) {
                auto seed = gen_count == 1 ? gen_seed : derive_seed(gen_seed, static_cast<std::uint64_t>(i));
                std::cout << write_graph6(family_graph(gen_args, seed)) << "\n";
            }
        }
        else if (check_cmd->parsed()) {
            if (! checks.any())
                checks = {true, true, true};
            std::ifstream file;
            std::istream * in = &std::cin;
            if (check_file != "-") {
                file.open(check_file);
                if (! file)
                    throw Error(ErrorCode::InvalidArgument, "cannot open '" + check_file + "'");
                in = &file;
            }
            auto records = batch_check(*in, checks, check_jobs);
            bool csv = check_format == "csv";
            if (csv)
                std::cout << report_csv_header() << "\n";
            bool violation = false, malformed = false;
            for (const auto & record : records) {
                std::cout << (csv ? report_csv(record) : report_jsonl(record)) << "\n";
                if (! record.report) {
                    malformed = true;
                    continue;
                }
                const auto & r = *record.report;
                for (auto v : {r.scott_verdict, r.bww_verdict, r.scott_lower_verdict})
                    violation = violation || v == Verdict::Violation;
            }
            return violation ? exit_violation : malformed ? exit_input : 0;
        }
        else if (verify_cmd->parsed()) {
            auto facts = verify_paper(verify);
            std::cout << render_fact_table(facts);
            for (const auto & f : facts)
                if (! f.pass)
                    return exit_violation;
        }
    }
    catch (const Error & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return 0;
}
