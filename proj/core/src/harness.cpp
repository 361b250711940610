#include <oddsub/harness.hpp>

#include <json.hpp>

#include <numeric>
#include <sstream>

namespace oddsub {

auto to_string(Verdict v) -> std::string_view
{
    switch (v) {
    case Verdict::NotChecked: return "not-checked";
    case Verdict::Pass: return "pass";
    case Verdict::Violation: return "violation";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::SkippedIsolatedVertex: return "skipped-isolated-vertex";
    case Verdict::SkippedDisconnected: return "skipped-disconnected";
    }
    return "unknown";
}

auto Rational::to_string() const -> std::string
{
    if (den == 0)
        return "undefined";
    auto g = std::gcd(num, den);
    if (g == 0)
        g = 1;
    auto p = num / g, q = den / g;
    return q == 1 ? std::to_string(p) : std::to_string(p) + "/" + std::to_string(q);
}

namespace {
    // Pass if the proven values already satisfy `holds`, Violation only if f_o is
    // settled and even the best chi cannot rescue it, otherwise the budget left
    // the question open.
    template <typename Holds>
    auto decide(int fo_lower, bool fo_complete, int chi_lower, int chi_upper, Holds holds) -> Verdict
    {
        if (holds(fo_lower, chi_lower))
            return Verdict::Pass;
        if (fo_complete && ! holds(fo_lower, chi_upper))
            return Verdict::Violation;
        return Verdict::Inconclusive;
    }
}

auto check_graph(const Graph & g, const CheckSelection & checks, const SearchOptions & options,
    std::string graph_id) -> ConjectureReport
{
    auto start = std::chrono::steady_clock::now();
    ConjectureReport report;
    report.graph_id = std::move(graph_id);
    report.n = g.order();
    report.m = g.size();

    auto fo = fo_search(g, options);
    report.fo = fo.value;
    report.fo_witness = fo.witness;
    report.incomplete = ! fo.complete;

    auto chi = chromatic_search(g, options.node_budget);
    report.chi = chi.value;
    report.incomplete = report.incomplete || ! chi.complete;
    report.scott_bound = report.chi > 0 ? Rational{report.n, report.chi} : Rational{0, 1};
    report.bww_bound = 2 * (report.n / 4);

    std::int64_t n = report.n;
    bool isolated = g.has_isolated_vertex();
    if (checks.scott)
        report.scott_verdict = isolated
            ? Verdict::SkippedIsolatedVertex
            : decide(fo.value, fo.complete, chi.lower_bound, chi.value,
                  [n](std::int64_t f, std::int64_t c) { return f * c >= n; });
    if (checks.scott_lower)
        report.scott_lower_verdict = isolated
            ? Verdict::SkippedIsolatedVertex
            : decide(fo.value, fo.complete, chi.lower_bound, chi.value,
                  [n](std::int64_t f, std::int64_t c) { return 2 * f * c >= n; });
    if (checks.bww) {
        if (! is_connected(g))
            report.bww_verdict = Verdict::SkippedDisconnected;
        else if (fo.value >= report.bww_bound)
            report.bww_verdict = Verdict::Pass;
        else
            report.bww_verdict = fo.complete ? Verdict::Violation : Verdict::Inconclusive;
    }

    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

auto check_scott(const Graph & g, const SearchOptions & options) -> ConjectureReport
{
    return check_graph(g, {.scott = true}, options);
}

auto check_bww(const Graph & g, const SearchOptions & options) -> ConjectureReport
{
    return check_graph(g, {.bww = true}, options);
}

auto check_scott_lower(const Graph & g, const SearchOptions & options) -> bool
{
    if (g.has_isolated_vertex())
        throw Error(ErrorCode::IsolatedVertex, "graph has an isolated vertex");
    auto report = check_graph(g, {.scott_lower = true}, options);
    if (report.scott_lower_verdict == Verdict::Inconclusive)
        throw BudgetExceeded("proven-bound check could not be settled", report.fo, options.node_budget);
    return report.scott_lower_verdict == Verdict::Pass;
}

auto batch_check(std::istream & in, const CheckSelection & checks, int jobs, const SearchOptions & options)
    -> std::vector<BatchRecord>
{
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (! line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back(std::move(line));
    }

    std::vector<BatchRecord> records(lines.size());
    auto per_graph = options;
    per_graph.workers = 1;
    parallel_for(lines.size(), jobs, [&](std::size_t i) {
        auto & record = records[i];
        record.line = i + 1;
        try {
            auto g = parse_graph6(lines[i]);
            if (g.order() > max_batch_order)
                throw Error(ErrorCode::TooLarge,
                    "batch input is limited to " + std::to_string(max_batch_order) + " vertices");
            record.report = check_graph(g, checks, per_graph, lines[i]);
        }
        catch (const Error & e) {
            record.error = e.what();
        }
    });
    return records;
}

auto report_jsonl(const BatchRecord & record) -> std::string
{
    nlohmann::ordered_json j;
    j["schema"] = report_schema;
    j["line"] = record.line;
    if (! record.report) {
        j["error"] = record.error;
        return j.dump();
    }
    const auto & r = *record.report;
    j["graph_id"] = r.graph_id;
    j["n"] = r.n;
    j["m"] = r.m;
    j["fo"] = r.fo;
    j["fo_witness"] = r.fo_witness.to_vector();
    j["chi"] = r.chi;
    j["scott_bound"] = r.scott_bound.to_string();
    j["scott_verdict"] = to_string(r.scott_verdict);
    j["bww_bound"] = r.bww_bound;
    j["bww_verdict"] = to_string(r.bww_verdict);
    j["scott_lower_verdict"] = to_string(r.scott_lower_verdict);
    j["incomplete"] = r.incomplete;
    j["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
    return j.dump();
}

auto report_csv_header() -> std::string
{
    return "schema,line,graph_id,n,m,fo,chi,scott_bound,scott_verdict,bww_bound,bww_verdict,"
           "scott_lower_verdict,incomplete,elapsed_ms,error";
}

namespace {
    auto csv_quote(const std::string & s) -> std::string
    {
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"')
                out += '"';
            out += c;
        }
        return out + "\"";
    }
}

auto report_csv(const BatchRecord & record) -> std::string
{
    std::ostringstream out;
    out << report_schema << ',' << record.line << ',';
    if (! record.report) {
        out << ",,,,,,,,,,,," << csv_quote(record.error);
        return out.str();
    }
    const auto & r = *record.report;
    out << csv_quote(r.graph_id) << ',' << r.n << ',' << r.m << ',' << r.fo << ',' << r.chi << ','
        << r.scott_bound.to_string() << ',' << to_string(r.scott_verdict) << ',' << r.bww_bound << ','
        << to_string(r.bww_verdict) << ',' << to_string(r.scott_lower_verdict) << ','
        << (r.incomplete ? "true" : "false") << ','
        << std::chrono::duration<double, std::milli>(r.elapsed).count() << ',';
    return out.str();
}

}
