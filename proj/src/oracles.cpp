#include "kcut/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "kcut/specfun.hpp"

namespace kcut::oracles {

namespace {

void check(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
        unsigned __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Reduced fraction over signed 128-bit integers, just enough arithmetic for
// the dynamic program.
struct Rat {
    __int128 num = 0;
    __int128 den = 1;

    Rat() = default;
    explicit Rat(long long v) : num(v), den(1) {}
    Rat(__int128 n, __int128 d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (num == 0) {
            den = 1;
            return;
        }
        unsigned __int128 a = num < 0 ? static_cast<unsigned __int128>(-num)
                                      : static_cast<unsigned __int128>(num);
        unsigned __int128 g = gcd_u128(a, static_cast<unsigned __int128>(den));
        num /= static_cast<__int128>(g);
        den /= static_cast<__int128>(g);
    }

    static __int128 mul_checked(__int128 a, __int128 b) {
        __int128 out;
        if (__builtin_mul_overflow(a, b, &out)) {
            throw std::overflow_error("dp_exact_rational: 128-bit overflow");
        }
        return out;
    }

    Rat operator+(const Rat& o) const {
        __int128 n = mul_checked(num, o.den);
        __int128 m = mul_checked(o.num, den);
        __int128 s;
        if (__builtin_add_overflow(n, m, &s)) {
            throw std::overflow_error("dp_exact_rational: 128-bit overflow");
        }
        return Rat(s, mul_checked(den, o.den));
    }

    Rat operator/(long long d) const { return Rat(num, mul_checked(den, d)); }
};

struct DpContext {
    const graphgen::RootedGraph* graph = nullptr;
    int k = 0;
    std::vector<std::uint64_t> place; // (k+1)^v
    std::vector<char> seen;
    std::vector<std::int32_t> queue;
};

std::uint64_t encode(const DpContext& ctx, const std::vector<int>& digits) {
    std::uint64_t code = 0;
    for (std::size_t v = 0; v < digits.size(); ++v) {
        code += ctx.place[v] * static_cast<std::uint64_t>(digits[v]);
    }
    return code;
}

// Alive nodes reachable from the root; alive nodes that are not get the
// removed sentinel since no later cut can touch them.
void normalize(DpContext& ctx, std::vector<int>& digits,
               std::vector<std::int32_t>& component) {
    const auto& g = *ctx.graph;
    std::fill(ctx.seen.begin(), ctx.seen.end(), 0);
    ctx.queue.clear();
    ctx.queue.push_back(g.root);
    ctx.seen[g.root] = 1;
    component.clear();
    for (std::size_t head = 0; head < ctx.queue.size(); ++head) {
        std::int32_t v = ctx.queue[head];
        component.push_back(v);
        for (std::int32_t u : g.adjacency[v]) {
            if (!ctx.seen[u] && digits[u] < ctx.k) {
                ctx.seen[u] = 1;
                ctx.queue.push_back(u);
            }
        }
    }
    for (std::size_t v = 0; v < digits.size(); ++v) {
        if (digits[v] < ctx.k && !ctx.seen[v]) digits[v] = ctx.k;
    }
}

template <class T>
T dp_value(DpContext& ctx, std::unordered_map<std::uint64_t, T>& memo,
           std::vector<int>& digits) {
    std::vector<std::int32_t> component;
    normalize(ctx, digits, component);
    const std::uint64_t key = encode(ctx, digits);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int k = ctx.k;
    const std::int32_t root = ctx.graph->root;
    T acc(0);
    for (std::int32_t v : component) {
        if (v == root && digits[v] + 1 == k) continue; // final cut, nothing remains
        std::vector<int> next = digits;
        ++next[v];
        acc = acc + dp_value(ctx, memo, next);
    }
    T value = T(1) + acc / static_cast<long long>(component.size());
    memo.emplace(key, value);
    return value;
}

template <class T>
T dp_exact_impl(const graphgen::RootedGraph& graph, int k) {
    check(k >= 1, "dp_exact: k must be >= 1");
    check(graph.n >= 1, "dp_exact: graph must be nonempty");
    check(graph.root >= 0 && graph.root < graph.n, "dp_exact: root out of range");
    check(graph.adjacency.size() == static_cast<std::size_t>(graph.n),
          "dp_exact: malformed adjacency");

    DpContext ctx;
    ctx.graph = &graph;
    ctx.k = k;
    ctx.place.resize(graph.n);
    std::uint64_t p = 1;
    const std::uint64_t cap = 10000000;
    for (std::int64_t v = 0; v < graph.n; ++v) {
        ctx.place[v] = p;
        check(p <= cap / static_cast<std::uint64_t>(k + 1),
              "dp_exact: state space exceeds 10^7");
        p *= static_cast<std::uint64_t>(k + 1);
    }
    ctx.seen.assign(graph.n, 0);

    std::unordered_map<std::uint64_t, T> memo;
    std::vector<int> digits(graph.n, 0);
    return dp_value(ctx, memo, digits);
}

} // namespace

double dp_exact(const graphgen::RootedGraph& graph, int k) {
    return dp_exact_impl<double>(graph, k);
}

Fraction dp_exact_rational(const graphgen::RootedGraph& graph, int k) {
    Rat r = dp_exact_impl<Rat>(graph, k);
    const __int128 lo = std::numeric_limits<long long>::min();
    const __int128 hi = std::numeric_limits<long long>::max();
    if (r.num < lo || r.num > hi || r.den > hi) {
        throw std::overflow_error("dp_exact_rational: result does not fit long long");
    }
    return Fraction{static_cast<long long>(r.num), static_cast<long long>(r.den)};
}

double perm_records(int n) {
    check(n >= 1 && n <= 8, "perm_records: n must be in [1, 8]");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long long total = 0, count = 0;
    do {
        int low = std::numeric_limits<int>::max();
        int records = 0;
        for (int x : perm) {
            if (x < low) {
                low = x;
                ++records;
            }
        }
        total += records;
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return static_cast<double>(total) / static_cast<double>(count);
}

double exact_path_mean(std::int64_t n, int k, int r,
                       const specfun::QuadratureSpec& quad) {
    check(n >= 1, "exact_path_mean: n must be >= 1");
    check(k >= 1, "exact_path_mean: k must be >= 1");
    check(r >= 1 && r <= k, "exact_path_mean: r must be in [1, k]");
    double sum = 0.0;
    for (std::int64_t d = 0; d < n; ++d) {
        sum += specfun::record_prob(r, k, d, quad);
    }
    return sum;
}

double quad_xi_2d(int k, double a, double b) {
    check(k >= 2, "quad_xi_2d: k must be >= 2");
    check(std::isfinite(a) && a > 0.0, "quad_xi_2d: a must be positive");
    check(std::isfinite(b) && b > 0.0, "quad_xi_2d: b must be positive");
    double kf = 1.0;
    for (int i = 2; i <= k; ++i) kf *= i;
    const double xmax = std::pow(60.0 * kf / a, 1.0 / k);
    const double ymax = std::pow(55.0 * kf / (a + b), 1.0 / k);
    const specfun::QuadratureSpec inner{1e-15, 1e-10, 200};
    const specfun::QuadratureSpec outer{1e-14, 1e-9, 200};
    auto along_y = [&](double y) {
        if (y >= xmax) return 0.0;
        double weight = std::exp(-b * std::pow(y, k) / kf);
        double tail = specfun::integrate(
            [&](double x) { return std::exp(-a * std::pow(x, k) / kf); }, y, xmax, inner);
        return weight * tail;
    };
    return specfun::integrate(along_y, 0.0, ymax, outer);
}

double quad_lambda(int k) {
    check(k >= 2, "quad_lambda: k must be >= 2");
    const double p = k / (k - 1.0);
    const specfun::QuadratureSpec inner{1e-14, 1e-9, 200};
    const specfun::QuadratureSpec outer{1e-13, 5e-8, 200};
    auto along_s = [&](double s) {
        return specfun::integrate([&](double t) { return specfun::xi(k, s, t); }, 0.0,
                                  1.0 - s, inner);
    };
    // s = u^(k/(k-1)) flattens the s^(-1/k) edge of the inner integral.
    auto along_u = [&](double u) {
        double s = std::pow(u, p);
        if (s <= 0.0 || s >= 1.0) return 0.0;
        return p * std::pow(u, p - 1.0) * along_s(s);
    };
    return specfun::integrate(along_u, 0.0, 1.0, outer);
}

double quad_hyper_cot(int k) {
    check(k >= 3, "quad_hyper_cot: k must be >= 3");
    const double p = k / (k - 1.0);
    const specfun::QuadratureSpec spec{1e-13, 1e-8, 200};
    // u = 1/(1+w) compactifies; u = y^(k/(k-1)) then flattens the u^(-1/k)
    // edge at u = 0.
    auto g = [&](double y) {
        double u = std::pow(y, p);
        if (u <= 0.0) return 0.0;
        double w = 1.0 / u - 1.0;
        if (w <= 0.0) w = 0.0;
        return p * std::pow(y, p - 1.0) * std::pow(u, -2.0 / k) *
               specfun::hyper2f1(2.0 / k, 1.0 / k, 1.0 + 1.0 / k, -w);
    };
    return specfun::integrate(g, 0.0, 1.0, spec);
}

} // namespace kcut::oracles
