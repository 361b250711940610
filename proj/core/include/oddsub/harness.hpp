#pragma once

#include <oddsub/graph.hpp>
#include <oddsub/parallel.hpp>
#include <oddsub/solvers.hpp>

#include <chrono>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oddsub {

enum class Verdict {
    NotChecked,
    Pass,
    Violation,
    /// The search budget ran out before the comparison could be decided.
    Inconclusive,
    SkippedIsolatedVertex,
    SkippedDisconnected,
};

auto to_string(Verdict v) -> std::string_view;

/// Exact non-negative rational num/den.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    auto to_string() const -> std::string;
};

struct ConjectureReport {
    std::string graph_id;
    int n = 0;
    int m = 0;
    int fo = 0;
    int chi = 0;
    Rational scott_bound;
    Verdict scott_verdict = Verdict::NotChecked;
    int bww_bound = 0;
    Verdict bww_verdict = Verdict::NotChecked;
    Verdict scott_lower_verdict = Verdict::NotChecked;
    VertexSet fo_witness;
    std::chrono::nanoseconds elapsed{0};
    bool incomplete = false;
};

struct CheckSelection {
    bool scott = false;
    bool bww = false;
    bool scott_lower = false;

    auto any() const -> bool { return scott || bww || scott_lower; }
};

/// Runs the selected comparisons, computing f_o once and chi only when needed.
auto check_graph(const Graph & g, const CheckSelection & checks, const SearchOptions & options = {},
    std::string graph_id = {}) -> ConjectureReport;

/// f_o(G) >= n / chi(G), compared as fo * chi >= n in integers.
auto check_scott(const Graph & g, const SearchOptions & options = {}) -> ConjectureReport;

/// f_o(G) >= 2 floor(n/4) for connected G.
auto check_bww(const Graph & g, const SearchOptions & options = {}) -> ConjectureReport;

/// The proven bound f_o(G) >= n / (2 chi(G)). Throws IsolatedVertex, and
/// BudgetExceeded when f_o or chi cannot be settled.
auto check_scott_lower(const Graph & g, const SearchOptions & options = {}) -> bool;

struct BatchRecord {
    std::size_t line = 0;
    std::optional<ConjectureReport> report;
    std::string error;
};

inline constexpr int max_batch_order = 32;

/// One record per input line, in input order. Malformed lines become error
/// records. `jobs` graphs are processed concurrently.
auto batch_check(std::istream & in, const CheckSelection & checks, int jobs, const SearchOptions & options = {})
    -> std::vector<BatchRecord>;

inline constexpr std::string_view report_schema = "oddsub.report/1";

auto report_jsonl(const BatchRecord & record) -> std::string;
auto report_csv_header() -> std::string;
auto report_csv(const BatchRecord & record) -> std::string;

struct PaperFactResult {
    std::string fact_id;
    std::string claim;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    bool quick = false;
    int workers = 1;
};

/// The fixed fact suite F1..F14. Deterministic for a given seed, independent of `workers`.
auto verify_paper(const VerifyOptions & options = {}) -> std::vector<PaperFactResult>;

auto render_fact_table(const std::vector<PaperFactResult> & facts) -> std::string;

}
