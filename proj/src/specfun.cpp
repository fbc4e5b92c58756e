#include "kcut/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace kcut::specfun {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::domain_error(msg);
}

double log_factorial(int n) {
    static const std::vector<double> table = [] {
        std::vector<double> t(257);
        for (int i = 0; i <= 256; ++i) t[i] = log_gamma(i + 1.0);
        return t;
    }();
    if (n < 0) throw std::domain_error("log_factorial: negative argument");
    if (n < static_cast<int>(table.size())) return table[n];
    return log_gamma(n + 1.0);
}

// ln Q(k, x), stable for the whole nonnegative range: direct Poisson sum
// while it stays in double range, log-sum-exp otherwise.
double log_reg_upper_gamma(int k, double x) {
    if (x <= 0.0) return 0.0;
    if (x < 600.0) {
        double term = 1.0, sum = 1.0;
        for (int j = 1; j < k; ++j) {
            term *= x / j;
            sum += term;
        }
        if (std::isfinite(sum)) {
            double q = std::exp(-x) * sum;
            if (q > 1e-280) return std::log(std::min(q, 1.0));
        }
    }
    double lx = std::log(x);
    double m = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < k; ++j) m = std::max(m, j * lx - log_factorial(j));
    double s = 0.0;
    for (int j = 0; j < k; ++j) s += std::exp(j * lx - log_factorial(j) - m);
    return std::min(m + std::log(s) - x, 0.0);
}

// Power series sum of F(a, b; c; w); valid well inside the unit disk and for
// transformed arguments with algebraic term decay.
double hyper_series(double a, double b, double c, double w) {
    double term = 1.0, sum = 1.0;
    int quiet = 0;
    for (int n = 0; n < 200000; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * w;
        sum += term;
        if (std::abs(term) <= 1e-16 * std::abs(sum)) {
            if (++quiet >= 2) return sum;
        } else {
            quiet = 0;
        }
    }
    throw QuadratureError("hyper2f1: series did not converge");
}

// Euler integral representation, with endpoint substitutions that remove the
// algebraic singularities at both ends.  Requires c > b > 0.
double hyper_euler(double a, double b, double c, double z,
                   const QuadratureSpec& quad) {
    QuadratureSpec spec{1e-15, 1e-12, std::max(quad.max_subdivisions, 300)};
    const double g = c - b;
    auto left = [&](double u) {
        double t = std::pow(u, 1.0 / b);
        return (1.0 / b) * std::pow(1.0 - t, g - 1.0) * std::pow(1.0 - z * t, -a);
    };
    auto right = [&](double v) {
        double t = 1.0 - std::pow(v, 1.0 / g);
        return (1.0 / g) * std::pow(t, b - 1.0) * std::pow(1.0 - z * t, -a);
    };
    double integral = integrate(left, 0.0, std::pow(0.5, b), spec) +
                      integrate(right, 0.0, std::pow(0.5, g), spec);
    return std::exp(log_gamma(c) - log_gamma(b) - log_gamma(g)) * integral;
}

} // namespace

double log_gamma(double x) {
    require(std::isfinite(x) && x > 0.0, "log_gamma: argument must be positive");
    double shift = 0.0;
    double y = x;
    while (y < 10.0) {
        shift -= std::log(y);
        y += 1.0;
    }
    const double y2 = 1.0 / (y * y);
    const double c0 = 1.0 / 12.0, c1 = -1.0 / 360.0, c2 = 1.0 / 1260.0,
                 c3 = -1.0 / 1680.0, c4 = 1.0 / 1188.0, c5 = -691.0 / 360360.0,
                 c6 = 1.0 / 156.0;
    double poly = c0 + y2 * (c1 + y2 * (c2 + y2 * (c3 + y2 * (c4 + y2 * (c5 + y2 * c6)))));
    return shift + 0.5 * std::log(2.0 * M_PI) + (y - 0.5) * std::log(y) - y + poly / y;
}

double reg_upper_gamma(int k, double x) {
    require(k >= 1, "reg_upper_gamma: k must be >= 1");
    require(std::isfinite(x) && x >= 0.0, "reg_upper_gamma: x must be >= 0");
    if (x == 0.0) return 1.0;
    if (x < 600.0) {
        double term = 1.0, sum = 1.0;
        for (int j = 1; j < k; ++j) {
            term *= x / j;
            sum += term;
        }
        if (std::isfinite(sum)) {
            double q = std::exp(-x) * sum;
            return std::clamp(q, 0.0, 1.0);
        }
    }
    double lq = log_reg_upper_gamma(k, x);
    return lq < -745.0 ? 0.0 : std::clamp(std::exp(lq), 0.0, 1.0);
}

double record_prob(int r, int k, long long d, const QuadratureSpec& quad) {
    require(k >= 1, "record_prob: k must be >= 1");
    require(r >= 1 && r <= k, "record_prob: r must be in [1, k]");
    require(d >= 0, "record_prob: d must be >= 0");
    if (d == 0) return 1.0;

    const double lgr = log_gamma(static_cast<double>(r));
    const double dd = static_cast<double>(d);
    auto f_log = [&](double x) {
        double v = -x + dd * log_reg_upper_gamma(k, x);
        if (r > 1) v += (r - 1) * std::log(x);
        return v;
    };

    // The integrand decays at least geometrically; cut it where it has
    // fallen 45 e-folds below its peak (and never past the point where the
    // bare Gamma(r) density is itself negligible).
    const double x_abs = 60.0 + 8.0 * r;
    const double mass_scale = std::exp(log_factorial(k) / k - std::log1p(dd) / k);
    const double x_scan_min = std::min(1e-4, 0.01 * mass_scale);
    const int n_scan = 256;
    const double ratio = std::pow(x_abs / x_scan_min, 1.0 / (n_scan - 1));
    double fmax = -std::numeric_limits<double>::infinity();
    int imax = 0;
    std::vector<double> fs(n_scan);
    double xg = x_scan_min;
    std::vector<double> xs(n_scan);
    for (int i = 0; i < n_scan; ++i) {
        xs[i] = xg;
        fs[i] = f_log(xg);
        if (fs[i] > fmax) {
            fmax = fs[i];
            imax = i;
        }
        xg *= ratio;
    }
    double x_hi = x_abs;
    for (int i = imax; i < n_scan; ++i) {
        if (fs[i] < fmax - 45.0) {
            x_hi = xs[i];
            break;
        }
    }

    auto g = [&](double x) {
        if (x <= 0.0) return r == 1 ? std::exp(-lgr) : 0.0;
        return std::exp(f_log(x) - lgr);
    };
    double value = integrate(g, 0.0, x_hi, quad);
    return std::clamp(value, 0.0, 1.0);
}

double eta(int k, int r) {
    require(k >= 2, "eta: k must be >= 2");
    require(r >= 1 && r < k, "eta: r must be in [1, k-1]");
    double lg = (static_cast<double>(r) / k) * log_factorial(k) +
                log_gamma(static_cast<double>(r) / k) - log_gamma(static_cast<double>(r));
    return std::exp(lg) / (k - r);
}

double lambda_const(int k) {
    require(k >= 2, "lambda_const: k must be >= 2");
    if (k == 2) return M_PI * M_PI / 4.0;
    double cot = std::cos(M_PI / k) / std::sin(M_PI / k);
    double lg = log_gamma(2.0 / k) + (2.0 / k) * log_factorial(k);
    return M_PI * cot * std::exp(lg) / (2.0 * (k - 2.0) * (k - 1.0));
}

double gamma_const(int k) {
    require(k >= 2, "gamma_const: k must be >= 2");
    double lg = log_gamma(2.0 / k) + (2.0 / k) * log_factorial(k);
    return std::exp(lg) / (k - 1.0) + 2.0 * lambda_const(k);
}

double var_const(int k) {
    require(k >= 2, "var_const: k must be >= 2");
    double e = eta(k, 1);
    return gamma_const(k) - e * e;
}

double rho(int k, int ell) {
    require(k >= 2, "rho: k must be >= 2");
    require(ell >= 1, "rho: ell must be >= 1");
    double log_base = std::log(M_PI) + log_factorial(k) / k - std::log(static_cast<double>(k)) -
                      std::log(std::sin(M_PI / k));
    return std::exp(log_factorial(ell) - log_gamma(ell + 1.0 - static_cast<double>(ell) / k) +
                    ell * log_base);
}

double zeta(int k, int ell) {
    require(k >= 2, "zeta: k must be >= 2");
    require(ell >= 1, "zeta: ell must be >= 1");
    return std::exp(ell * log_gamma((k - 1.0) / k) -
                    log_gamma(1.0 + ell - static_cast<double>(ell) / k));
}

double hyper2f1(double a, double b, double c, double z, const QuadratureSpec& quad) {
    require(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(z),
            "hyper2f1: arguments must be finite");
    require(z < 1.0, "hyper2f1: z must be < 1");
    require(!(c <= 0.0 && c == std::floor(c)), "hyper2f1: c must not be a nonpositive integer");

    if (z == 0.0) return 1.0;
    if (std::abs(z) <= 0.5) return hyper_series(a, b, c, z);

    if (z < 0.0) {
        // Linear transformation to w = z / (z - 1) in (1/3, 1); of the two
        // variants prefer the one whose series keeps a convergent tail as
        // w -> 1 (positive parametric excess).
        double w = z / (z - 1.0);
        if (w <= 0.97) {
            if (a > b) {
                return std::pow(1.0 - z, -b) * hyper_series(b, c - a, c, w);
            }
            return std::pow(1.0 - z, -a) * hyper_series(a, c - b, c, w);
        }
    }

    // Remaining cases (z in (0.5, 1) or very negative z): Euler integral,
    // possibly after swapping the symmetric parameters.
    if (c > b && b > 0.0) return hyper_euler(a, b, c, z, quad);
    if (c > a && a > 0.0) return hyper_euler(b, a, c, z, quad);
    throw std::domain_error("hyper2f1: parameters outside the supported range");
}

double xi(int k, double a, double b, const QuadratureSpec& quad) {
    require(k >= 2, "xi: k must be >= 2");
    require(std::isfinite(a) && a > 0.0, "xi: a must be positive");
    require(std::isfinite(b) && b > 0.0, "xi: b must be positive");
    double front = std::exp(log_gamma(2.0 / k) - std::log(static_cast<double>(k)) +
                            (2.0 / k) * (log_factorial(k) - std::log(a)));
    return front * hyper2f1(2.0 / k, 1.0 / k, 1.0 + 1.0 / k, -b / a, quad);
}

double star_conditional_mean(int k, double y) {
    require(k >= 1, "star_conditional_mean: k must be >= 1");
    require(std::isfinite(y) && y >= 0.0, "star_conditional_mean: y must be >= 0");
    double sum = 0.0;
    for (int i = 1; i <= k; ++i) sum += 1.0 - reg_upper_gamma(i, y);
    return sum;
}

double star_limit_mean(int k) {
    require(k >= 1, "star_limit_mean: k must be >= 1");
    double central = 1.0; // 2^{-2k} C(2k, k) as a stable product
    for (int i = 1; i <= k; ++i) central *= (2.0 * i - 1.0) / (2.0 * i);
    return k * (1.0 - central);
}

double asym_mean_path(int k, int r, double n) {
    require(k >= 1, "asym_mean_path: k must be >= 1");
    require(r >= 1 && r <= k, "asym_mean_path: r must be in [1, k]");
    require(std::isfinite(n) && n >= 1.0, "asym_mean_path: n must be >= 1");
    if (r == k) return std::log(n);
    return eta(k, r) * std::pow(n, 1.0 - static_cast<double>(r) / k);
}

double asym_mean_binary(int k, int r, int m) {
    require(k >= 1, "asym_mean_binary: k must be >= 1");
    require(r >= 1 && r <= k, "asym_mean_binary: r must be in [1, k]");
    require(m >= 1, "asym_mean_binary: m must be >= 1");
    double coef = std::exp((static_cast<double>(r) / k) * log_factorial(k) +
                           log_gamma(static_cast<double>(r) / k) -
                           log_gamma(static_cast<double>(r))) / k;
    return coef * std::pow(2.0, m + 1.0) / std::pow(static_cast<double>(m), static_cast<double>(r) / k);
}

double asym_mean_rrt(int k, int r, double n) {
    require(k >= 1, "asym_mean_rrt: k must be >= 1");
    require(r >= 1 && r <= k, "asym_mean_rrt: r must be in [1, k]");
    require(std::isfinite(n) && n > 1.0, "asym_mean_rrt: n must be > 1");
    double coef = std::exp((static_cast<double>(r) / k) * log_factorial(k) +
                           log_gamma(static_cast<double>(r) / k) -
                           log_gamma(static_cast<double>(r))) / k;
    return coef * n / std::pow(std::log(n), static_cast<double>(r) / k);
}

double asym_mean_gw(int k, int r, double sigma, double n) {
    require(k >= 1, "asym_mean_gw: k must be >= 1");
    require(r >= 1 && r <= k, "asym_mean_gw: r must be in [1, k]");
    require(std::isfinite(sigma) && sigma > 0.0, "asym_mean_gw: sigma must be positive");
    require(std::isfinite(n) && n >= 1.0, "asym_mean_gw: n must be >= 1");
    double rk = static_cast<double>(r) / k;
    double coef = std::exp(rk * log_factorial(k) + log_gamma(rk) +
                           log_gamma(1.0 - 0.5 * rk) - log_gamma(static_cast<double>(r))) / k;
    return coef * std::pow(sigma / std::sqrt(2.0), rk) * std::pow(n, 1.0 - 0.5 * rk);
}

} // namespace kcut::specfun
