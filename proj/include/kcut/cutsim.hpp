#pragma once

#include <cstdint>
#include <vector>

#include "kcut/graphgen.hpp"
#include "kcut/quadrature.hpp"
#include "kcut/rng.hpp"

namespace kcut::cutsim {

/// Outcome of one run: per_order[r-1] counts the nodes whose r-th cut is a
/// record, and total is their sum (the number of cuts spent before the root
/// falls).
struct RecordCounts {
    std::vector<std::int64_t> per_order;
    std::int64_t total = 0;
};

/// One run on a tree via the record characterization: node v scores an
/// r-record when its r-th arrival time beats the k-th arrival times of all
/// proper ancestors.  O(n k) time, no tree mutation.
RecordCounts simulate_records(const graphgen::RootedTree& tree, int k, Stream& stream);

/// One run by literal play: repeatedly pick a uniform node from the root's
/// component, cut it, and delete it after its k-th cut.  Returns the total
/// number of cuts.  Quadratic-ish; meant for cross-checks on small inputs.
std::int64_t simulate_direct(const graphgen::RootedGraph& graph, int k, Stream& stream);

/// One run on the complete graph on n nodes, using the fact that only cuts
/// received before the root's removal time matter.  O(n k) time without
/// materializing the graph.
std::int64_t simulate_complete_graph(std::int64_t n, int k, Stream& stream);

/// Exact expectation of the r-record count for a fixed tree, summed over the
/// depth profile.
double expected_records_given_tree(const graphgen::RootedTree& tree, int k, int r,
                                   const specfun::QuadratureSpec& quad = {});

} // namespace kcut::cutsim
