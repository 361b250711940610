#pragma once

#include <oddsub/graph.hpp>
#include <oddsub/solvers.hpp>

#include <string>
#include <vector>

namespace oddsub {

/// ceil(n/2) when n = 0, 3 (mod 4); floor((n-1)/2) when n = 1, 2 (mod 4).
auto f_lower(int n) -> int;

auto is_tree(const Graph & g) -> bool;

/// Exact epsilon(T) for a tree by dynamic programming rooted at vertex 0.
/// Throws NotATree.
auto eps_tree_exact(const Graph & tree) -> EdgeSubgraphResult;

/// Same optimum, rooted at `root`; used to check root invariance.
auto eps_tree_exact(const Graph & tree, int root) -> EdgeSubgraphResult;

/// eps_tree_exact(T).value >= f_lower(v(T)). Throws NotATree.
auto check_tree_bound(const Graph & tree) -> bool;

/// Isomorphism-invariant encoding of a tree (AHU string rooted at a centre).
auto tree_canonical_form(const Graph & tree) -> std::string;

/// One representative per isomorphism class of trees on n vertices, grown by
/// attaching a leaf to every tree on n-1 vertices and deduplicating.
auto unlabelled_trees(int n) -> std::vector<Graph>;

}
