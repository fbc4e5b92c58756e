#include "kcut/cutsim.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "kcut/specfun.hpp"

namespace kcut::cutsim {

RecordCounts simulate_records(const graphgen::RootedTree& tree, int k, Stream& stream) {
    if (k < 1) throw std::invalid_argument("simulate_records: k must be >= 1");
    const std::size_t n = tree.size();
    // amin[v] is the smallest k-th arrival time among proper ancestors of v;
    // parents precede children, so one forward sweep suffices.
    thread_local std::vector<double> gk;
    thread_local std::vector<double> amin;
    gk.assign(n, 0.0);
    amin.assign(n, 0.0);

    RecordCounts counts;
    counts.per_order.assign(k, 0);
    for (std::size_t v = 0; v < n; ++v) {
        if (v == 0) {
            amin[v] = std::numeric_limits<double>::infinity();
        } else {
            const std::int32_t p = tree.parent[v];
            amin[v] = std::min(amin[p], gk[p]);
        }
        double g = 0.0;
        for (int r = 1; r <= k; ++r) {
            g += stream.exponential();
            if (g < amin[v]) ++counts.per_order[r - 1];
        }
        gk[v] = g;
    }
    for (std::int64_t c : counts.per_order) counts.total += c;
    return counts;
}

std::int64_t simulate_direct(const graphgen::RootedGraph& graph, int k, Stream& stream) {
    if (k < 1) throw std::invalid_argument("simulate_direct: k must be >= 1");
    if (graph.n < 1 || graph.adjacency.size() != static_cast<std::size_t>(graph.n)) {
        throw std::invalid_argument("simulate_direct: malformed graph");
    }
    const std::int32_t root = graph.root;
    std::vector<char> alive(graph.n, 1);
    std::vector<int> cuts(graph.n, 0);
    std::vector<std::int32_t> component;
    std::vector<std::int32_t> queue;
    std::vector<char> seen(graph.n, 0);

    auto rebuild_component = [&] {
        component.clear();
        queue.clear();
        std::fill(seen.begin(), seen.end(), 0);
        queue.push_back(root);
        seen[root] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::int32_t v = queue[head];
            component.push_back(v);
            for (std::int32_t u : graph.adjacency[v]) {
                if (alive[u] && !seen[u]) {
                    seen[u] = 1;
                    queue.push_back(u);
                }
            }
        }
    };

    rebuild_component();
    std::int64_t total = 0;
    for (;;) {
        std::int32_t v = component[stream.below(component.size())];
        ++total;
        if (++cuts[v] < k) continue;
        if (v == root) return total;
        alive[v] = 0;
        rebuild_component();
    }
}

std::int64_t simulate_complete_graph(std::int64_t n, int k, Stream& stream) {
    if (n < 1) throw std::invalid_argument("simulate_complete_graph: n must be >= 1");
    if (k < 1) throw std::invalid_argument("simulate_complete_graph: k must be >= 1");
    // Couple every node with its own unit Poisson arrival process; the root
    // dies at its k-th arrival, and each other node contributes the arrivals
    // it sees before then, capped at k.
    double t_root = 0.0;
    for (int r = 0; r < k; ++r) t_root += stream.exponential();
    std::int64_t total = k;
    for (std::int64_t v = 1; v < n; ++v) {
        double t = 0.0;
        for (int c = 0; c < k; ++c) {
            t += stream.exponential();
            if (t > t_root) break;
            ++total;
        }
    }
    return total;
}

double expected_records_given_tree(const graphgen::RootedTree& tree, int k, int r,
                                   const specfun::QuadratureSpec& quad) {
    const graphgen::DepthProfile profile = graphgen::depth_profile(tree);
    double sum = 0.0;
    for (std::size_t d = 0; d < profile.size(); ++d) {
        if (profile[d] == 0) continue;
        sum += static_cast<double>(profile[d]) *
               specfun::record_prob(r, k, static_cast<long long>(d), quad);
    }
    return sum;
}

} // namespace kcut::cutsim
