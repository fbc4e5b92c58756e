#include "kcut/graphgen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace kcut::graphgen {

namespace {

void check(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

} // namespace

void validate(const RootedTree& tree) {
    check(!tree.parent.empty(), "tree must have at least one node");
    check(tree.parent[0] == -1, "root parent must be -1");
    for (std::size_t v = 1; v < tree.parent.size(); ++v) {
        check(tree.parent[v] >= 0 && tree.parent[v] < static_cast<std::int32_t>(v),
              "parent indices must precede their children");
    }
}

RootedTree path(std::int64_t n) {
    check(n >= 1, "path: n must be >= 1");
    RootedTree t;
    t.parent.resize(n);
    t.parent[0] = -1;
    for (std::int64_t v = 1; v < n; ++v) t.parent[v] = static_cast<std::int32_t>(v - 1);
    return t;
}

RootedTree complete_binary(int m) {
    check(m >= 0 && m <= 40, "complete_binary: m must be in [0, 40]");
    std::int64_t n = (std::int64_t{1} << (m + 1)) - 1;
    RootedTree t;
    t.parent.resize(n);
    t.parent[0] = -1;
    for (std::int64_t v = 1; v < n; ++v) t.parent[v] = static_cast<std::int32_t>((v - 1) / 2);
    return t;
}

RootedTree star(std::int64_t n) {
    check(n >= 1, "star: n must be >= 1");
    RootedTree t;
    t.parent.resize(n);
    t.parent[0] = -1;
    for (std::int64_t v = 1; v < n; ++v) t.parent[v] = 0;
    return t;
}

RootedGraph complete_graph(std::int64_t n) {
    check(n >= 1 && n <= 10000, "complete_graph: n must be in [1, 10^4]");
    RootedGraph g;
    g.n = n;
    g.root = 0;
    g.adjacency.resize(n);
    for (std::int64_t v = 0; v < n; ++v) {
        g.adjacency[v].reserve(n - 1);
        for (std::int64_t u = 0; u < n; ++u) {
            if (u != v) g.adjacency[v].push_back(static_cast<std::int32_t>(u));
        }
    }
    return g;
}

RootedTree curtain(int ell, std::int64_t n) {
    check(ell >= 1, "curtain: ell must be >= 1");
    check(n >= ell + 1, "curtain: n must be >= ell + 1");
    std::int64_t seg = (n - 2) / ell + 1; // ceil((n-1)/ell)
    std::int64_t rem = (n - 1) - (ell - 1) * seg;
    check(rem >= 0, "curtain: segment sizes do not fit n");
    RootedTree t;
    t.parent.resize(n);
    t.parent[0] = -1;
    std::int64_t next = 1;
    for (int s = 0; s < ell; ++s) {
        std::int64_t len = (s < ell - 1) ? seg : rem;
        std::int32_t prev = 0;
        for (std::int64_t i = 0; i < len; ++i) {
            t.parent[next] = prev;
            prev = static_cast<std::int32_t>(next);
            ++next;
        }
    }
    return t;
}

RootedTree random_recursive(std::int64_t n, Stream& stream) {
    check(n >= 1, "random_recursive: n must be >= 1");
    RootedTree t;
    t.parent.resize(n);
    t.parent[0] = -1;
    for (std::int64_t j = 1; j < n; ++j) {
        t.parent[j] = static_cast<std::int32_t>(stream.below(static_cast<std::uint64_t>(j)));
    }
    return t;
}

namespace {

int draw_offspring(Offspring offspring, Stream& stream) {
    switch (offspring) {
        case Offspring::Poisson1: {
            // Inversion along the Poisson(1) cdf; the tail beyond ~30 is
            // below the uniform's resolution.
            double u = stream.uniform();
            double p = std::exp(-1.0);
            double cdf = p;
            int j = 0;
            while (u >= cdf && j < 256) {
                ++j;
                p /= j;
                cdf += p;
            }
            return j;
        }
        case Offspring::GeometricHalf: {
            int j = 0;
            while (stream.next_u64() >> 63) ++j;
            return j;
        }
        case Offspring::Binary02:
            return (stream.next_u64() >> 63) ? 2 : 0;
    }
    throw std::invalid_argument("draw_offspring: unknown offspring law");
}

} // namespace

RootedTree gw_conditioned(std::int64_t n, Offspring offspring, Stream& stream,
                          std::int64_t max_attempts) {
    check(n >= 1 && n <= 5000, "gw_conditioned: n must be in [1, 5000]");
    check(max_attempts >= 1, "gw_conditioned: max_attempts must be >= 1");
    std::vector<std::int32_t> parent;
    for (std::int64_t attempt = 0; attempt < max_attempts; ++attempt) {
        parent.assign(1, -1);
        std::int64_t produced = 1;
        bool alive = true;
        // Breadth-first growth; indices coincide with generation order, so
        // the parent array is automatically topologically sorted.
        for (std::int64_t v = 0; v < produced && alive; ++v) {
            int children = draw_offspring(offspring, stream);
            if (produced + children > n) {
                alive = false;
                break;
            }
            for (int c = 0; c < children; ++c) {
                parent.push_back(static_cast<std::int32_t>(v));
            }
            produced += children;
        }
        if (alive && produced == n) {
            RootedTree t;
            t.parent = std::move(parent);
            return t;
        }
    }
    throw std::runtime_error("gw_conditioned: attempt budget exhausted");
}

Offspring parse_offspring(const std::string& name) {
    if (name == "poisson1") return Offspring::Poisson1;
    if (name == "geom-half") return Offspring::GeometricHalf;
    if (name == "binary02") return Offspring::Binary02;
    throw std::invalid_argument("parse_offspring: unknown offspring law '" + name + "'");
}

double offspring_sigma(Offspring offspring) {
    switch (offspring) {
        case Offspring::Poisson1: return 1.0;
        case Offspring::GeometricHalf: return std::sqrt(2.0);
        case Offspring::Binary02: return 1.0;
    }
    throw std::invalid_argument("offspring_sigma: unknown offspring law");
}

DepthProfile depth_profile(const RootedTree& tree) {
    validate(tree);
    std::vector<std::int32_t> depth(tree.size(), 0);
    std::int32_t max_depth = 0;
    for (std::size_t v = 1; v < tree.size(); ++v) {
        depth[v] = depth[tree.parent[v]] + 1;
        max_depth = std::max(max_depth, depth[v]);
    }
    DepthProfile profile(max_depth + 1, 0);
    for (std::size_t v = 0; v < tree.size(); ++v) ++profile[depth[v]];
    return profile;
}

RootedGraph tree_to_graph(const RootedTree& tree) {
    validate(tree);
    RootedGraph g;
    g.n = static_cast<std::int64_t>(tree.size());
    g.root = 0;
    g.adjacency.resize(tree.size());
    for (std::size_t v = 1; v < tree.size(); ++v) {
        g.adjacency[v].push_back(tree.parent[v]);
        g.adjacency[tree.parent[v]].push_back(static_cast<std::int32_t>(v));
    }
    for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
    return g;
}

namespace {

// Canonical AHU string of the subtree below v.
std::string ahu_code(const std::vector<std::vector<int>>& children, int v) {
    std::vector<std::string> codes;
    codes.reserve(children[v].size());
    for (int c : children[v]) codes.push_back(ahu_code(children, c));
    std::sort(codes.begin(), codes.end());
    std::string out = "(";
    for (const auto& c : codes) out += c;
    out += ")";
    return out;
}

} // namespace

std::vector<RootedTree> all_rooted_trees(int n) {
    check(n >= 1 && n <= 8, "all_rooted_trees: n must be in [1, 8]");
    std::vector<RootedTree> out;
    std::set<std::string> seen;
    std::vector<std::int32_t> parent(n);
    parent[0] = -1;
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            std::vector<std::vector<int>> children(n);
            for (int u = 1; u < n; ++u) children[parent[u]].push_back(u);
            if (seen.insert(ahu_code(children, 0)).second) {
                RootedTree t;
                t.parent = parent;
                out.push_back(t);
            }
            return;
        }
        for (int p = 0; p < v; ++p) {
            parent[v] = p;
            rec(v + 1);
        }
    };
    rec(1);
    return out;
}

} // namespace kcut::graphgen
