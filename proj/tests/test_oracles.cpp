#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "kcut/graphgen.hpp"
#include "kcut/oracles.hpp"
#include "kcut/specfun.hpp"

namespace gg = kcut::graphgen;
namespace oc = kcut::oracles;
namespace sf = kcut::specfun;

TEST_CASE("state-space expectation on tiny inputs") {
    // Single node: k cuts, always.
    CHECK(oc::dp_exact(gg::tree_to_graph(gg::path(1)), 3) == doctest::Approx(3.0));
    // Two-node path, k = 1: 1.5 cuts on average.
    CHECK(oc::dp_exact(gg::tree_to_graph(gg::path(2)), 1) == doctest::Approx(1.5));
    // Three-node star, k = 1: root mean 1 + (n-1)/2.
    CHECK(oc::dp_exact(gg::tree_to_graph(gg::star(3)), 1) == doctest::Approx(2.0));
    CHECK(oc::dp_exact(gg::tree_to_graph(gg::star(5)), 1) == doctest::Approx(3.0));
    CHECK_THROWS_AS(oc::dp_exact(gg::tree_to_graph(gg::path(15)), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(oc::dp_exact(gg::tree_to_graph(gg::path(2)), 0),
                    std::invalid_argument);
}

TEST_CASE("rational oracle reproduces harmonic numbers on paths") {
    // With k = 1 the cut count on a path equals the record count of a uniform
    // permutation, whose mean is H(n).
    long long hn_num = 0, hd = 1;
    for (int n = 1; n <= 6; ++n) {
        // hn = H(n) as a fraction.
        long long a = hn_num * n + hd, b = hd * n;
        long long g = std::gcd(a, b);
        hn_num = a / g;
        hd = b / g;
        auto f = oc::dp_exact_rational(gg::tree_to_graph(gg::path(n)), 1);
        CHECK(f.num == hn_num);
        CHECK(f.den == hd);
    }
    // H(5) = 137/60, H(6) = 49/20 guard against drift in the loop above.
    auto f6 = oc::dp_exact_rational(gg::tree_to_graph(gg::path(6)), 1);
    CHECK(f6.num == 49);
    CHECK(f6.den == 20);
}

TEST_CASE("rational and floating oracles agree") {
    for (int n = 2; n <= 4; ++n) {
        for (const auto& t : gg::all_rooted_trees(n)) {
            for (int k = 1; k <= 3; ++k) {
                auto g = gg::tree_to_graph(t);
                auto f = oc::dp_exact_rational(g, k);
                double d = oc::dp_exact(g, k);
                CHECK(d == doctest::Approx(static_cast<double>(f.num) / f.den)
                               .epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("permutation record enumeration gives harmonic numbers") {
    double h = 0.0;
    for (int n = 1; n <= 8; ++n) {
        h += 1.0 / n;
        CHECK(oc::perm_records(n) == doctest::Approx(h).epsilon(1e-13));
    }
    CHECK_THROWS_AS(oc::perm_records(0), std::invalid_argument);
    CHECK_THROWS_AS(oc::perm_records(9), std::invalid_argument);
}

TEST_CASE("path means from record probabilities match enumeration") {
    for (int n = 1; n <= 7; ++n) {
        CHECK(oc::exact_path_mean(n, 1, 1) ==
              doctest::Approx(oc::perm_records(n)).epsilon(1e-10));
    }
    // k = 2 path on 2 nodes: the non-root node records at order 1 with
    // probability 3/4 and at order 2 with probability 1/2, and the two means
    // sum to the exact state-space value 3.25.
    CHECK(oc::exact_path_mean(2, 2, 1) == doctest::Approx(1.75).epsilon(1e-10));
    CHECK(oc::exact_path_mean(2, 2, 2) == doctest::Approx(1.5).epsilon(1e-10));
    CHECK(oc::exact_path_mean(2, 2, 1) + oc::exact_path_mean(2, 2, 2) ==
          doctest::Approx(oc::dp_exact(gg::tree_to_graph(gg::path(2)), 2))
              .epsilon(1e-10));
    CHECK_THROWS_AS(oc::exact_path_mean(0, 1, 1), std::invalid_argument);
}

TEST_CASE("direct double integral matches the hypergeometric form") {
    for (int k : {2, 3, 4}) {
        for (double a : {0.5, 1.0, 2.0}) {
            for (double b : {0.5, 1.0, 3.0}) {
                double direct = oc::quad_xi_2d(k, a, b);
                double closed = sf::xi(k, a, b);
                CHECK(direct == doctest::Approx(closed).epsilon(1e-7));
            }
        }
    }
    CHECK(oc::quad_xi_2d(2, 1.0, 3.0) ==
          doctest::Approx(0.604599788078072617).epsilon(1e-8));
    CHECK(oc::quad_xi_2d(3, 1.0, 1.0) ==
          doctest::Approx(1.31649887942706982).epsilon(1e-8));
}

TEST_CASE("triangle integral reproduces the overlap constant") {
    CHECK(oc::quad_lambda(2) ==
          doctest::Approx(2.46740110027233965).epsilon(1e-6));
    CHECK(oc::quad_lambda(3) ==
          doctest::Approx(2.02746444070757508).epsilon(1e-6));
}

TEST_CASE("cotangent integral identity") {
    const double pi = 3.14159265358979323846;
    CHECK(oc::quad_hyper_cot(3) ==
          doctest::Approx(pi / std::sqrt(3.0)).epsilon(1e-6));
    CHECK(oc::quad_hyper_cot(4) == doctest::Approx(pi / 2.0).epsilon(1e-6));
    CHECK_THROWS_AS(oc::quad_hyper_cot(2), std::invalid_argument);
}
