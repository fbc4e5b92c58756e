#include "kcut/limitdist.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "kcut/specfun.hpp"

namespace kcut::limitdist {

double sample_bk(const LimitSamplerConfig& cfg, Stream& stream) {
    return sample_bk_detail(cfg, stream).value;
}

double sample_star_limit(int k, Stream& stream) {
    if (k < 1) throw std::invalid_argument("sample_star_limit: k must be >= 1");
    double y = 0.0;
    for (int i = 0; i < k; ++i) y += stream.exponential();
    return specfun::star_conditional_mean(k, y);
}

TruncationReport truncation_sensitivity(const LimitSamplerConfig& cfg, std::int64_t n,
                                        std::uint64_t seed) {
    validate(cfg);
    if (n < 1) throw std::invalid_argument("truncation_sensitivity: n must be >= 1");
    LimitSamplerConfig longer = cfg;
    longer.p_cap = cfg.p_cap * 2;

    double abs_diff_sum = 0.0;
    double long_sum = 0.0;
    std::int64_t cap_hits = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        Stream a(seed, static_cast<std::uint64_t>(i));
        Stream b(seed, static_cast<std::uint64_t>(i));
        BkResult shorter = sample_bk_detail(cfg, a);
        BkResult extended = sample_bk_detail(longer, b);
        abs_diff_sum += std::abs(extended.value - shorter.value);
        long_sum += extended.value;
        if (shorter.hit_cap) ++cap_hits;
    }
    TruncationReport rep;
    rep.mean_abs_diff = abs_diff_sum / static_cast<double>(n);
    rep.rel_mean_shift = rep.mean_abs_diff / std::abs(long_sum / static_cast<double>(n));
    rep.cap_hit_fraction = static_cast<double>(cap_hits) / static_cast<double>(n);
    return rep;
}

} // namespace kcut::limitdist
