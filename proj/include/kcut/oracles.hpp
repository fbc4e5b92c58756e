#pragma once

#include <cstdint>

#include "kcut/graphgen.hpp"
#include "kcut/quadrature.hpp"

namespace kcut::oracles {

/// Exact expected total number of cuts by exhaustive dynamic programming over
/// all cut-count states.  Independent of the simulators.  Requires
/// (k+1)^n <= 10^7.
double dp_exact(const graphgen::RootedGraph& graph, int k);

/// Reduced fraction with positive denominator.
struct Fraction {
    long long num = 0;
    long long den = 1;
};

/// Same dynamic program in exact rational arithmetic; throws
/// std::overflow_error if intermediate values leave 128-bit range or the
/// result does not fit in long long.
Fraction dp_exact_rational(const graphgen::RootedGraph& graph, int k);

/// Mean number of left-to-right minima over all n! permutations, by full
/// enumeration.  Requires 1 <= n <= 8.
double perm_records(int n);

/// Exact mean r-record count on the path with n nodes: the record
/// probability summed over ancestor counts 0..n-1.
double exact_path_mean(std::int64_t n, int k, int r,
                       const specfun::QuadratureSpec& quad = {});

/// Double integral of exp(-(a x^k + b y^k)/k!) over 0 <= y <= x, by direct
/// nested quadrature with explicit tail cutoffs.
double quad_xi_2d(int k, double a, double b);

/// Double integral of the pairwise overlap kernel over the triangle
/// s, t >= 0, s + t <= 1, by nested quadrature after a substitution that
/// removes the s -> 0 singularity.
double quad_lambda(int k);

/// Integral over w in (0, inf) of (w+1)^(2/k-2) F(2/k, 1/k; 1+1/k; -w), by
/// quadrature after compactifying and removing the endpoint singularity.
/// Requires k >= 3.
double quad_hyper_cot(int k);

} // namespace kcut::oracles
