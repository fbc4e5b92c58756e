#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "kcut/graphgen.hpp"

namespace gg = kcut::graphgen;

TEST_CASE("path, star, binary shapes") {
    auto p = gg::path(5);
    CHECK(p.parent == std::vector<std::int32_t>{-1, 0, 1, 2, 3});
    auto s = gg::star(4);
    CHECK(s.parent == std::vector<std::int32_t>{-1, 0, 0, 0});
    auto b = gg::complete_binary(2);
    CHECK(b.parent == std::vector<std::int32_t>{-1, 0, 0, 1, 1, 2, 2});
    CHECK(gg::path(1).size() == 1);
    CHECK(gg::complete_binary(0).size() == 1);
    CHECK_THROWS_AS(gg::path(0), std::invalid_argument);
    CHECK_THROWS_AS(gg::complete_binary(-1), std::invalid_argument);
}

TEST_CASE("validation rejects malformed parent arrays") {
    gg::RootedTree t;
    t.parent = {-1, 0, 1};
    CHECK_NOTHROW(gg::validate(t));
    t.parent = {0, 0, 1};
    CHECK_THROWS_AS(gg::validate(t), std::invalid_argument);
    t.parent = {-1, 2, 1};
    CHECK_THROWS_AS(gg::validate(t), std::invalid_argument);
    t.parent = {};
    CHECK_THROWS_AS(gg::validate(t), std::invalid_argument);
}

TEST_CASE("depth profile counts nodes per level") {
    auto prof = gg::depth_profile(gg::complete_binary(3));
    CHECK(prof == gg::DepthProfile{1, 2, 4, 8});
    auto star_prof = gg::depth_profile(gg::star(6));
    CHECK(star_prof == gg::DepthProfile{1, 5});
    auto path_prof = gg::depth_profile(gg::path(4));
    CHECK(path_prof == gg::DepthProfile{1, 1, 1, 1});
}

TEST_CASE("curtain splits nodes into hanging paths") {
    auto t = gg::curtain(3, 49153);
    CHECK(t.size() == 49153);
    gg::validate(t);
    auto prof = gg::depth_profile(t);
    CHECK(prof.size() == 16385);
    CHECK(prof[0] == 1);
    for (std::size_t d = 1; d < prof.size(); ++d) CHECK(prof[d] == 3);

    // Remainder segment may be shorter or empty.
    auto small = gg::curtain(3, 5);
    auto sp = gg::depth_profile(small);
    CHECK(sp == gg::DepthProfile{1, 2, 2});
    auto two = gg::curtain(2, 6);
    CHECK(gg::depth_profile(two) == gg::DepthProfile{1, 2, 2, 1});
    CHECK_THROWS_AS(gg::curtain(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(gg::curtain(3, 3), std::invalid_argument);
}

TEST_CASE("complete graph adjacency") {
    auto g = gg::complete_graph(4);
    CHECK(g.n == 4);
    for (int v = 0; v < 4; ++v) {
        CHECK(g.adjacency[v].size() == 3);
        for (auto u : g.adjacency[v]) CHECK(u != v);
    }
    CHECK_THROWS_AS(gg::complete_graph(10001), std::invalid_argument);
}

TEST_CASE("random recursive trees are reproducible and well formed") {
    kcut::Stream s1(7, 0), s2(7, 0);
    auto a = gg::random_recursive(500, s1);
    auto b = gg::random_recursive(500, s2);
    CHECK(a.parent == b.parent);
    gg::validate(a);

    // Mean node depth concentrates near H(n) - 1.
    const int n = 100, trees = 3000;
    double total = 0.0;
    kcut::Stream s(7, 1);
    for (int t = 0; t < trees; ++t) {
        auto tr = gg::random_recursive(n, s);
        auto prof = gg::depth_profile(tr);
        double sum = 0.0;
        for (std::size_t d = 0; d < prof.size(); ++d) sum += d * static_cast<double>(prof[d]);
        total += sum / n;
    }
    double measured = total / trees;
    double target = 5.18737751763962026 - 1.0; // H(100) - 1
    CHECK(measured == doctest::Approx(target).epsilon(0.02));
}

TEST_CASE("conditioned branching trees have the requested size") {
    kcut::Stream s(11, 0);
    for (auto law : {gg::Offspring::Poisson1, gg::Offspring::GeometricHalf,
                     gg::Offspring::Binary02}) {
        for (int rep = 0; rep < 20; ++rep) {
            std::int64_t n = (law == gg::Offspring::Binary02) ? 21 : 30;
            auto t = gg::gw_conditioned(n, law, s);
            CHECK(t.size() == static_cast<std::size_t>(n));
            gg::validate(t);
        }
    }
    // A binary offspring law can only realize odd sizes.
    kcut::Stream s2(11, 1);
    CHECK_THROWS_AS(gg::gw_conditioned(10, gg::Offspring::Binary02, s2, 2000),
                    std::runtime_error);
    CHECK_THROWS_AS(gg::gw_conditioned(0, gg::Offspring::Poisson1, s2),
                    std::invalid_argument);
    CHECK_THROWS_AS(gg::gw_conditioned(5001, gg::Offspring::Poisson1, s2),
                    std::invalid_argument);
}

TEST_CASE("binary offspring trees have only zero or two children") {
    kcut::Stream s(13, 0);
    auto t = gg::gw_conditioned(41, gg::Offspring::Binary02, s);
    std::vector<int> kids(t.size(), 0);
    for (std::size_t v = 1; v < t.size(); ++v) ++kids[t.parent[v]];
    for (int c : kids) CHECK((c == 0 || c == 2));
}

TEST_CASE("offspring parsing and dispersion") {
    CHECK(gg::parse_offspring("poisson1") == gg::Offspring::Poisson1);
    CHECK(gg::parse_offspring("geom-half") == gg::Offspring::GeometricHalf);
    CHECK(gg::parse_offspring("binary02") == gg::Offspring::Binary02);
    CHECK_THROWS_AS(gg::parse_offspring("cauchy"), std::invalid_argument);
    CHECK(gg::offspring_sigma(gg::Offspring::Poisson1) == 1.0);
    CHECK(gg::offspring_sigma(gg::Offspring::GeometricHalf) ==
          doctest::Approx(std::sqrt(2.0)));
    CHECK(gg::offspring_sigma(gg::Offspring::Binary02) == 1.0);
}

TEST_CASE("tree to graph produces symmetric sorted adjacency") {
    auto g = gg::tree_to_graph(gg::complete_binary(2));
    CHECK(g.n == 7);
    CHECK(g.adjacency[0] == std::vector<std::int32_t>{1, 2});
    CHECK(g.adjacency[1] == std::vector<std::int32_t>{0, 3, 4});
    CHECK(g.adjacency[6] == std::vector<std::int32_t>{2});
}

TEST_CASE("rooted tree enumeration matches the known counts") {
    CHECK(gg::all_rooted_trees(1).size() == 1);
    CHECK(gg::all_rooted_trees(2).size() == 1);
    CHECK(gg::all_rooted_trees(3).size() == 2);
    CHECK(gg::all_rooted_trees(4).size() == 4);
    CHECK(gg::all_rooted_trees(5).size() == 9);
    CHECK(gg::all_rooted_trees(6).size() == 20);
    for (const auto& t : gg::all_rooted_trees(5)) gg::validate(t);
    CHECK_THROWS_AS(gg::all_rooted_trees(9), std::invalid_argument);
}
