#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace kcut::specfun {

// Tolerance and effort budget for adaptive quadrature.
struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 200;
};

struct QuadratureError : std::runtime_error {
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive quadrature of f on the finite interval [lo, hi].
//
// Each segment is estimated with a Gauss-Legendre 7/15 pair; the worst
// segment (largest 15-vs-7 discrepancy) is bisected until the accumulated
// error estimate is below max(abs_tol, rel_tol * |integral|) or the
// subdivision budget is exhausted, in which case QuadratureError is thrown.
// Nodes are interior, so integrable endpoint behavior is tolerated.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureSpec& spec = {});

} // namespace kcut::specfun
