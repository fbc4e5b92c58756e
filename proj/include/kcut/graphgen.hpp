#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kcut/rng.hpp"

namespace kcut::graphgen {

/// Rooted tree in parent-array form.  Node 0 is the root and parent[0] == -1;
/// every other node has parent[v] < v, so a plain index sweep visits parents
/// before children.
struct RootedTree {
    std::vector<std::int32_t> parent;

    std::size_t size() const { return parent.size(); }
};

/// Rooted graph in adjacency-list form, used by the families that are not
/// trees.  Adjacency lists are symmetric and sorted.
struct RootedGraph {
    std::int64_t n = 0;
    std::int32_t root = 0;
    std::vector<std::vector<std::int32_t>> adjacency;
};

/// Number of nodes at each depth; profile[d] counts nodes at distance d from
/// the root.
using DepthProfile = std::vector<std::int64_t>;

/// Throws std::invalid_argument unless parent[0] == -1 and 0 <= parent[v] < v
/// for every v >= 1.
void validate(const RootedTree& tree);

/// Path rooted at one end: 0 - 1 - 2 - ... - (n-1).  Requires n >= 1.
RootedTree path(std::int64_t n);

/// Complete binary tree with m full levels below the root, n = 2^(m+1) - 1
/// nodes in breadth-first order.  Requires 0 <= m <= 40.
RootedTree complete_binary(int m);

/// Star with the centre as root and n - 1 leaves.  Requires n >= 1.
RootedTree star(std::int64_t n);

/// Complete graph on n nodes rooted at node 0.  Requires 1 <= n <= 10^4
/// (the explicit adjacency is quadratic).
RootedGraph complete_graph(std::int64_t n);

/// Root joined to ell paths: the first ell - 1 have ceil((n-1)/ell) nodes and
/// the last takes the remainder.  Requires ell >= 1, n >= ell + 1, and a
/// nonnegative remainder (n - 1 >= (ell - 1) * ceil((n-1)/ell)).
RootedTree curtain(int ell, std::int64_t n);

/// Random recursive tree: node j attaches to a uniform node in {0, ..., j-1}.
/// Requires n >= 1.
RootedTree random_recursive(std::int64_t n, Stream& stream);

enum class Offspring { Poisson1, GeometricHalf, Binary02 };

/// Galton-Watson tree conditioned on exactly n nodes, grown breadth-first by
/// rejection.  Requires 1 <= n <= 5000; throws std::runtime_error if no tree
/// of size n appears within max_attempts rejections.
RootedTree gw_conditioned(std::int64_t n, Offspring offspring, Stream& stream,
                          std::int64_t max_attempts = 10000000);

/// Parses "poisson1", "geom-half" or "binary02".
Offspring parse_offspring(const std::string& name);

/// Offspring standard deviation of the unconditioned law.
double offspring_sigma(Offspring offspring);

DepthProfile depth_profile(const RootedTree& tree);

/// Tree viewed as a rooted graph (symmetric adjacency).
RootedGraph tree_to_graph(const RootedTree& tree);

/// All nonisomorphic rooted trees on n nodes (canonical AHU deduplication),
/// intended for exhaustive small-case checks.  Requires 1 <= n <= 8.
std::vector<RootedTree> all_rooted_trees(int n);

} // namespace kcut::graphgen
