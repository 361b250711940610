#include <oddsub/parity.hpp>

#include <algorithm>
#include <map>

namespace oddsub {

Gf2Matrix::Gf2Matrix(int rows, int cols) : _cols(cols), _rows(rows, 0)
{
    if (rows < 0 || cols < 0 || rows > 64 || cols > 64)
        throw Error(ErrorCode::TooLarge, "GF(2) matrices are limited to 64 x 64");
}

Gf2Matrix::Gf2Matrix(int cols, std::vector<std::uint64_t> rows) : _cols(cols), _rows(std::move(rows))
{
    if (cols < 0 || cols > 64 || _rows.size() > 64)
        throw Error(ErrorCode::TooLarge, "GF(2) matrices are limited to 64 x 64");
    auto mask = VertexSet::full(cols).bits();
    for (auto r : _rows)
        if (r & ~mask)
            throw Error(ErrorCode::DimensionMismatch, "row has bits past the column count");
}

auto Gf2Matrix::identity(int n) -> Gf2Matrix
{
    Gf2Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

auto Gf2Matrix::set(int r, int c, bool value) -> void
{
    if (value)
        _rows[r] |= std::uint64_t{1} << c;
    else
        _rows[r] &= ~(std::uint64_t{1} << c);
}

auto Gf2Matrix::multiply(const Gf2Vector & x) const -> Gf2Vector
{
    if (x.width != _cols)
        throw Error(ErrorCode::DimensionMismatch, "vector width does not match column count");
    Gf2Vector out{0, rows()};
    for (int r = 0; r < rows(); ++r)
        if (std::popcount(_rows[r] & x.bits) & 1)
            out.bits |= std::uint64_t{1} << r;
    return out;
}

auto gf2_solve(const Gf2Matrix & a, const Gf2Vector & b) -> Gf2Solution
{
    if (b.width != a.rows())
        throw Error(ErrorCode::DimensionMismatch,
            "right-hand side has width " + std::to_string(b.width) + " for " + std::to_string(a.rows()) + " rows");

    int rows = a.rows(), cols = a.cols();
    std::vector<std::uint64_t> m(rows);
    std::vector<bool> rhs(rows);
    for (int r = 0; r < rows; ++r) {
        m[r] = a.row(r);
        rhs[r] = (b.bits >> r) & 1U;
    }

    // Reduced row echelon form; pivot_row[c] is the row holding column c's pivot.
    std::vector<int> pivot_row(cols, -1);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int found = -1;
        for (int r = rank; r < rows; ++r)
            if ((m[r] >> c) & 1U) {
                found = r;
                break;
            }
        if (found < 0)
            continue;
        std::swap(m[found], m[rank]);
        bool t = rhs[found];
        rhs[found] = rhs[rank];
        rhs[rank] = t;
        for (int r = 0; r < rows; ++r)
            if (r != rank && ((m[r] >> c) & 1U)) {
                m[r] ^= m[rank];
                rhs[r] = rhs[r] != rhs[rank];
            }
        pivot_row[c] = rank++;
    }

    Gf2Solution solution;
    solution.rank = rank;

    bool consistent = true;
    for (int r = rank; r < rows; ++r)
        if (rhs[r])
            consistent = false;
    if (consistent) {
        Gf2Vector x{0, cols};
        for (int c = 0; c < cols; ++c)
            if (pivot_row[c] >= 0 && rhs[pivot_row[c]])
                x.bits |= std::uint64_t{1} << c;
        solution.particular = x;
    }

    for (int f = 0; f < cols; ++f) {
        if (pivot_row[f] >= 0)
            continue;
        Gf2Vector z{std::uint64_t{1} << f, cols};
        for (int c = 0; c < cols; ++c)
            if (pivot_row[c] >= 0 && ((m[pivot_row[c]] >> f) & 1U))
                z.bits |= std::uint64_t{1} << c;
        solution.nullspace_basis.push_back(z);
    }
    return solution;
}

auto lex_min_in_coset(std::uint64_t x, const std::vector<Gf2Vector> & basis) -> std::uint64_t
{
    // Echelon form keyed by lowest set bit: each vector has no bits below its key.
    std::map<int, std::uint64_t> echelon;
    for (const auto & b : basis) {
        auto v = b.bits;
        for (auto & [pivot, w] : echelon)
            if ((v >> pivot) & 1U)
                v ^= w;
        if (v != 0)
            echelon.emplace(std::countr_zero(v), v);
    }
    for (auto & [pivot, w] : echelon)
        if ((x >> pivot) & 1U)
            x ^= w;
    return x;
}

auto adjacency_matrix(const Graph & g) -> Gf2Matrix
{
    std::vector<std::uint64_t> rows(g.order());
    for (int v = 0; v < g.order(); ++v)
        rows[v] = g.row(v);
    return Gf2Matrix(g.order(), std::move(rows));
}

auto all_degrees_even(const Graph & g, VertexSet s) -> bool
{
    for (int v : s)
        if ((g.neighbors(v) & s).size() % 2 != 0)
            return false;
    return true;
}

auto all_degrees_odd(const Graph & g, VertexSet s) -> bool
{
    for (int v : s)
        if ((g.neighbors(v) & s).size() % 2 == 0)
            return false;
    return true;
}

auto is_valid_partition(const Graph & g, const GallaiPartition & p) -> bool
{
    if (p.s.bits() & ~g.vertices().bits())
        return false;
    auto rest = g.vertices() - p.s;
    if (! all_degrees_even(g, rest))
        return false;
    return p.kind == GallaiKind::EvenEven ? all_degrees_even(g, p.s) : all_degrees_odd(g, p.s);
}

namespace {
    auto solve_gallai(const Graph & g, GallaiKind kind) -> GallaiPartition
    {
        // For v in S the condition reads (Ax)_v = 0 (even-even) or 1 (even-odd);
        // for v outside S it reads (Ax)_v = d_v. Folding x_v into the diagonal
        // gives one linear system for both cases.
        int n = g.order();
        auto a = adjacency_matrix(g);
        Gf2Vector d{0, n};
        for (int v = 0; v < n; ++v) {
            bool odd = g.degree(v) % 2 != 0;
            if (odd)
                d.bits |= std::uint64_t{1} << v;
            bool diagonal = kind == GallaiKind::EvenEven ? odd : ! odd;
            a.set(v, v, diagonal);
        }

        auto solution = gf2_solve(a, d);
        if (! solution.particular)
            throw Error(ErrorCode::Infeasible, "parity system has no solution; this is a bug");
        auto x = lex_min_in_coset(solution.particular->bits, solution.nullspace_basis);
        GallaiPartition p{kind, VertexSet(x)};
        if (! is_valid_partition(g, p))
            throw Error(ErrorCode::Infeasible, "parity solution failed verification; this is a bug");
        return p;
    }
}

auto gallai_even_even(const Graph & g) -> GallaiPartition
{
    return solve_gallai(g, GallaiKind::EvenEven);
}

auto gallai_even_odd(const Graph & g) -> GallaiPartition
{
    return solve_gallai(g, GallaiKind::EvenOdd);
}

auto large_even_subgraph(const Graph & g) -> VertexSet
{
    auto p = gallai_even_even(g);
    auto rest = g.vertices() - p.s;
    return p.s.size() >= rest.size() ? p.s : rest;
}

}
