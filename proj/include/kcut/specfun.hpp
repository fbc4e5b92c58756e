#pragma once

#include "kcut/quadrature.hpp"

namespace kcut::specfun {

// log Gamma(x) for x > 0, accurate to at least 13 significant digits on the
// argument range used here (small positive reals and integers).
double log_gamma(double x);

// Q(k, x) = Gamma(k, x) / Gamma(k): survival function of a Gamma(k) variable
// at x, evaluated through the exact Poisson sum for integer shape k >= 1.
double reg_upper_gamma(int k, double x);

// Probability that a node with d proper ancestors is an r-record in the
// k-cut process: integral over x of x^{r-1} e^{-x} / Gamma(r) * Q(k,x)^d.
double record_prob(int r, int k, long long d, const QuadratureSpec& quad = {});

// Leading coefficient of E[K_r] on the path, defined for 1 <= r < k.
double eta(int k, int r);

// Triangle integral of xi_k in closed form.
double lambda_const(int k);

// Second-moment coefficient of K_1 on the path.
double gamma_const(int k);

// Variance coefficient gamma_k - eta_{k,1}^2.
double var_const(int k);

// Upper bound for the ell-th moment of K_1 / n^{1-1/k}.
double rho(int k, int ell);

// Simplex beta integral of prod x_j^{-1/k}.
double zeta(int k, int ell);

// Gauss hypergeometric F(a, b; c; z) for z < 1 on the parameter ranges used
// by this project (see implementation notes); relative accuracy ~1e-10.
double hyper2f1(double a, double b, double c, double z,
                const QuadratureSpec& quad = {});

// xi_k(a, b): the double-exponential integral, via its hypergeometric form.
double xi(int k, double a, double b, const QuadratureSpec& quad = {});

// E[min(Z, k)] for Z Poisson(y), as a sum of Poisson tail probabilities.
double star_conditional_mean(int k, double y);

// Limit of E[K(complete graph)] / n: k (1 - 2^{-2k} C(2k, k)).
double star_limit_mean(int k);

// Leading-order predictions for E[K_r] in the named families.
double asym_mean_path(int k, int r, double n);
double asym_mean_binary(int k, int r, int m);
double asym_mean_rrt(int k, int r, double n);
double asym_mean_gw(int k, int r, double sigma, double n);

} // namespace kcut::specfun
