#pragma once

#include <oddsub/graph.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace oddsub {

/// Bit vector over GF(2) of width at most 64; bit i is coordinate i.
struct Gf2Vector {
    std::uint64_t bits = 0;
    int width = 0;

    auto operator==(const Gf2Vector &) const -> bool = default;
};

/// Row-major GF(2) matrix with at most 64 rows and 64 columns.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(int rows, int cols);
    Gf2Matrix(int cols, std::vector<std::uint64_t> rows);

    static auto identity(int n) -> Gf2Matrix;

    auto rows() const -> int { return static_cast<int>(_rows.size()); }
    auto cols() const -> int { return _cols; }
    auto row(int r) const -> std::uint64_t { return _rows[r]; }
    auto get(int r, int c) const -> bool { return (_rows[r] >> c) & 1U; }
    auto set(int r, int c, bool value) -> void;

    auto multiply(const Gf2Vector & x) const -> Gf2Vector;

private:
    int _cols = 0;
    std::vector<std::uint64_t> _rows;
};

struct Gf2Solution {
    std::optional<Gf2Vector> particular;
    std::vector<Gf2Vector> nullspace_basis;
    int rank = 0;
};

/// Gaussian elimination with word-parallel row XOR. The nullspace basis has
/// cols - rank vectors and is always returned, consistent or not.
auto gf2_solve(const Gf2Matrix & a, const Gf2Vector & b) -> Gf2Solution;

/// Lexicographically smallest member (vertex 0 read first, 0 before 1) of
/// x + span(basis).
auto lex_min_in_coset(std::uint64_t x, const std::vector<Gf2Vector> & basis) -> std::uint64_t;

enum class GallaiKind { EvenEven, EvenOdd };

/// For EvenOdd, `s` is the part inducing all-odd degrees.
struct GallaiPartition {
    GallaiKind kind;
    VertexSet s;
};

auto adjacency_matrix(const Graph & g) -> Gf2Matrix;

/// Both G[S] and G[V - S] have all degrees even. Solves (A + D)x = d.
auto gallai_even_even(const Graph & g) -> GallaiPartition;

/// G[S] has all degrees odd and G[V - S] all degrees even. Solves (A + I + D)x = d.
auto gallai_even_odd(const Graph & g) -> GallaiPartition;

auto is_valid_partition(const Graph & g, const GallaiPartition & p) -> bool;

/// Larger side of the even-even partition; at least ceil(n/2) vertices.
auto large_even_subgraph(const Graph & g) -> VertexSet;

auto all_degrees_even(const Graph & g, VertexSet s) -> bool;
auto all_degrees_odd(const Graph & g, VertexSet s) -> bool;

}
