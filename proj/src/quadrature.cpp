#include "kcut/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace kcut::specfun {

namespace {

// Gauss-Legendre nodes and weights on [-1, 1], computed once by Newton
// iteration on the Legendre polynomial.  Computing them at startup avoids
// hand-copied coefficient tables.
template <int N>
struct GaussRule {
    std::array<double, N> x{};
    std::array<double, N> w{};

    GaussRule() {
        for (int i = 0; i < N; ++i) {
            double t = std::cos(M_PI * (i + 0.75) / (N + 0.5));
            double p1 = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                // Evaluate P_N(t) and P_{N-1}(t) by the three-term recurrence.
                double p0 = 1.0;
                p1 = t;
                for (int n = 2; n <= N; ++n) {
                    double p2 = ((2 * n - 1) * t * p1 - (n - 1) * p0) / n;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = N * (t * p1 - p0) / (t * t - 1.0);
                double step = p1 / dp;
                t -= step;
                p1 = dp;
                if (std::abs(step) < 1e-16) break;
            }
            x[i] = t;
            w[i] = 2.0 / ((1.0 - t * t) * p1 * p1);
        }
    }
};

const GaussRule<7>& rule7() {
    static const GaussRule<7> r;
    return r;
}

const GaussRule<15>& rule15() {
    static const GaussRule<15> r;
    return r;
}

struct Segment {
    double lo, hi;
    double value; // 15-point estimate
    double error; // |15-point - 7-point|

    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment evaluate(const std::function<double(double)>& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double s7 = 0.0;
    for (int i = 0; i < 7; ++i) s7 += rule7().w[i] * f(mid + half * rule7().x[i]);
    double s15 = 0.0;
    for (int i = 0; i < 15; ++i) s15 += rule15().w[i] * f(mid + half * rule15().x[i]);
    s7 *= half;
    s15 *= half;
    if (!std::isfinite(s15) || !std::isfinite(s7)) {
        throw QuadratureError("non-finite integrand value in [" + std::to_string(lo) +
                              ", " + std::to_string(hi) + "]");
    }
    return {lo, hi, s15, std::abs(s15 - s7)};
}

} // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureSpec& spec) {
    if (!(spec.abs_tol > 0) || !(spec.rel_tol > 0) || spec.max_subdivisions < 1) {
        throw std::domain_error("invalid QuadratureSpec");
    }
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw std::domain_error("integrate: bounds must be finite");
    }
    if (lo == hi) return 0.0;
    double sign = 1.0;
    if (lo > hi) {
        std::swap(lo, hi);
        sign = -1.0;
    }

    std::priority_queue<Segment> queue;
    Segment first = evaluate(f, lo, hi);
    double total = first.value;
    double err = first.error;
    queue.push(first);

    int splits = 0;
    while (err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
        if (splits >= spec.max_subdivisions) {
            throw QuadratureError("quadrature failed to converge: error " +
                                  std::to_string(err) + " after " +
                                  std::to_string(splits) + " subdivisions");
        }
        Segment worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) {
            // Interval can no longer be split in double precision; accept it.
            if (queue.empty()) break;
            err -= worst.error;
            total -= worst.value;
            Segment fixed = worst;
            fixed.error = 0.0;
            total += fixed.value;
            queue.push(fixed);
            ++splits;
            continue;
        }
        Segment a = evaluate(f, worst.lo, mid);
        Segment b = evaluate(f, mid, worst.hi);
        total += a.value + b.value - worst.value;
        err += a.error + b.error - worst.error;
        queue.push(a);
        queue.push(b);
        ++splits;
    }
    return sign * total;
}

} // namespace kcut::specfun
