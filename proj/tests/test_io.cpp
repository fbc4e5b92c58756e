#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "kcut/io.hpp"
#include "kcut/mcstats.hpp"

namespace io = kcut::io;

TEST_CASE("samples csv round-trips at full precision") {
    std::vector<double> v{1.0, 0.1, 3.141592653589793, -2.5e-300};
    std::string csv = io::samples_csv(v);
    std::istringstream in(csv);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "value");
    for (double expected : v) {
        REQUIRE(std::getline(in, line));
        CHECK(std::stod(line) == expected);
    }
    CHECK_FALSE(std::getline(in, line));
    CHECK(io::samples_csv({}) == "value\n");
}

TEST_CASE("summary json parses back to the same numbers") {
    auto s = kcut::mcstats::summarize({1.0, 2.0, 3.0, 4.0});
    auto j = nlohmann::json::parse(io::summary_json(s));
    CHECK(j.at("n").get<std::int64_t>() == 4);
    CHECK(j.at("mean").get<double>() == s.mean);
    CHECK(j.at("variance").get<double>() == s.variance);
    CHECK(j.at("se_mean").get<double>() == s.se_mean);
    auto m = j.at("raw_moments");
    REQUIRE(m.size() == 4);
    for (int o = 0; o < 4; ++o) CHECK(m[o].get<double>() == s.raw_moments[o]);
    CHECK(io::summary_json(s).back() == '\n');
}

TEST_CASE("histogram bins cover the sample") {
    std::vector<double> v{0.0, 0.1, 0.2, 0.35, 0.5, 0.75, 1.0, 1.0};
    std::string csv = io::histogram_csv(v, 4);
    std::istringstream in(csv);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "bin_left,bin_right,count,normal_overlay");
    long long total = 0;
    int rows = 0;
    double prev_right = 0.0;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string left, right, count, overlay;
        REQUIRE(std::getline(row, left, ','));
        REQUIRE(std::getline(row, right, ','));
        REQUIRE(std::getline(row, count, ','));
        REQUIRE(std::getline(row, overlay, ','));
        if (rows > 0) CHECK(std::stod(left) == doctest::Approx(prev_right));
        prev_right = std::stod(right);
        CHECK(std::stod(overlay) >= 0.0);
        total += std::stoll(count);
        ++rows;
    }
    CHECK(rows == 4);
    CHECK(total == static_cast<long long>(v.size()));

    // Degenerate sample still produces a well-formed table.
    std::string flat = io::histogram_csv({2.0, 2.0, 2.0}, 3);
    CHECK(flat.find("bin_left") == 0);
    CHECK_THROWS_AS(io::histogram_csv({}, 4), std::invalid_argument);
    CHECK_THROWS_AS(io::histogram_csv({1.0}, 0), std::invalid_argument);
}

TEST_CASE("file writing round-trips and reports failures") {
    const std::string path = "/tmp/kcut_io_test.txt";
    const std::string payload = "alpha\nbeta\n";
    io::write_file(path, payload);
    std::ifstream in(path, std::ios::binary);
    std::stringstream got;
    got << in.rdbuf();
    CHECK(got.str() == payload);
    std::remove(path.c_str());
    CHECK_THROWS_AS(io::write_file("/nonexistent-dir/x/y.txt", "data"),
                    std::runtime_error);
}
