#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "kcut/rng.hpp"

namespace kcut::limitdist {

/// Truncation controls for the series sampler: stop after `patience`
/// consecutive terms below term_tol times the running sum, or at p_cap terms
/// no matter what.
struct LimitSamplerConfig {
    int k = 2;
    double term_tol = 1e-9;
    int patience = 8;
    int p_cap = 400;
};

struct BkResult {
    double value = 0.0;
    int terms = 0;
    bool hit_cap = false;
};

inline void validate(const LimitSamplerConfig& cfg) {
    if (cfg.k < 2) throw std::invalid_argument("limit sampler: k must be >= 2");
    if (!(cfg.term_tol > 0.0)) throw std::invalid_argument("limit sampler: term_tol must be positive");
    if (cfg.patience < 1) throw std::invalid_argument("limit sampler: patience must be >= 1");
    if (cfg.p_cap < 1) throw std::invalid_argument("limit sampler: p_cap must be >= 1");
}

/// One draw from the limit law of the first-order record count, as the
/// truncated series sum over p of (1-U_p) (prod_{j<p} U_j)^(1-1/k) S_p with
/// S_p^k = U_{p-1} S_{p-1}^k + k! E_p.  Each term consumes one uniform and
/// one exponential, in that order.  Templated so tests can force the driving
/// variables.
template <class Rng>
BkResult sample_bk_detail(const LimitSamplerConfig& cfg, Rng& rng) {
    validate(cfg);
    double kfact = 1.0;
    for (int i = 2; i <= cfg.k; ++i) kfact *= i;
    const double shape = 1.0 - 1.0 / cfg.k;

    BkResult out;
    double spk = 0.0;        // S_p^k
    double u_prev = 0.0;
    double log_prefix = 0.0; // log prod_{j<p} U_j
    int quiet = 0;
    for (int p = 1; p <= cfg.p_cap; ++p) {
        const double u = rng.uniform();
        const double e = rng.exponential();
        spk = (p == 1) ? kfact * e : u_prev * spk + kfact * e;
        const double sp = std::pow(spk, 1.0 / cfg.k);
        const double bp = (1.0 - u) * std::exp(shape * log_prefix) * sp;
        out.value += bp;
        out.terms = p;
        if (bp < cfg.term_tol * out.value) {
            if (++quiet >= cfg.patience) return out;
        } else {
            quiet = 0;
        }
        log_prefix += std::log(u);
        u_prev = u;
    }
    out.hit_cap = true;
    return out;
}

double sample_bk(const LimitSamplerConfig& cfg, Stream& stream);

/// One draw from the limit law of the per-node cut count on the complete
/// graph: the conditional mean given a Gamma(k) mixing time.
double sample_star_limit(int k, Stream& stream);

/// Replays n seeds at p_cap and at twice p_cap and compares.
struct TruncationReport {
    double mean_abs_diff = 0.0;
    double rel_mean_shift = 0.0;   // mean_abs_diff over the long-run mean
    double cap_hit_fraction = 0.0; // short-run cap hits
};

TruncationReport truncation_sensitivity(const LimitSamplerConfig& cfg, std::int64_t n,
                                        std::uint64_t seed);

} // namespace kcut::limitdist
