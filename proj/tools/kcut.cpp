#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kcut/cutsim.hpp"
#include "kcut/graphgen.hpp"
#include "kcut/io.hpp"
#include "kcut/limitdist.hpp"
#include "kcut/mcstats.hpp"
#include "kcut/oracles.hpp"
#include "kcut/rng.hpp"
#include "kcut/specfun.hpp"
#include "kcut/verify.hpp"

namespace {

namespace gg = kcut::graphgen;
namespace cs = kcut::cutsim;
namespace sf = kcut::specfun;
namespace mc = kcut::mcstats;
namespace ld = kcut::limitdist;
namespace io = kcut::io;
namespace vf = kcut::verify;
namespace fs = std::filesystem;

struct SimulateOptions {
    std::string family;
    std::int64_t n = 0;
    int m = 0;
    int k = 2;
    std::int64_t replicas = 1000;
    std::uint64_t seed = 0;
    int ell = 2;
    std::string offspring = "poisson1";
    int workers = 0;
    std::string out;
};

struct Prediction {
    double value = 0.0;
    const char* kind = "exact";
};

double exact_tree_mean(const gg::RootedTree& tree, int k) {
    double total = 0.0;
    for (int r = 1; r <= k; ++r) total += cs::expected_records_given_tree(tree, k, r);
    return total;
}

void write_outputs(const std::string& dir, const std::vector<double>& samples,
                   const mc::Summary& summary) {
    const std::string csv = io::samples_csv(samples);
    const std::string json = io::summary_json(summary);
    const std::string hist = io::histogram_csv(samples, 40);
    fs::create_directories(dir);
    const std::string base = (fs::path(dir) / "").string();
    io::write_file(base + "samples.csv", csv);
    io::write_file(base + "summary.json", json);
    io::write_file(base + "histogram.csv", hist);
    std::printf("wrote %ssamples.csv %ssummary.json %shistogram.csv\n", base.c_str(),
                base.c_str(), base.c_str());
}

void print_summary(const mc::Summary& s) {
    std::printf("mean=%.10g\nvariance=%.10g\nse_mean=%.10g\n", s.mean, s.variance, s.se_mean);
    std::printf("moment1=%.10g\nmoment2=%.10g\nmoment3=%.10g\nmoment4=%.10g\n",
                s.raw_moments[0], s.raw_moments[1], s.raw_moments[2], s.raw_moments[3]);
}

int cmd_simulate(const SimulateOptions& opt) {
    if (opt.k < 1) throw CLI::ValidationError("--k must be >= 1");
    if (opt.replicas < 2) throw CLI::ValidationError("--replicas must be >= 2");

    gg::RootedTree tree;
    mc::ReplicaTask task;
    Prediction pred;
    std::int64_t n = opt.n;

    if (opt.family == "path") {
        tree = gg::path(n);
        task = [&tree, &opt](kcut::Stream& s) {
            return static_cast<double>(cs::simulate_records(tree, opt.k, s).total);
        };
        if (n <= 65536) {
            pred.value = 0.0;
            for (int r = 1; r <= opt.k; ++r) pred.value += kcut::oracles::exact_path_mean(n, opt.k, r);
        } else {
            pred.kind = "asymptotic";
            for (int r = 1; r <= opt.k; ++r) {
                pred.value += sf::asym_mean_path(opt.k, r, static_cast<double>(n));
            }
        }
    } else if (opt.family == "binary") {
        if (opt.m < 1 || opt.m > 22) throw CLI::ValidationError("--m must be in [1, 22]");
        tree = gg::complete_binary(opt.m);
        n = static_cast<std::int64_t>(tree.size());
        task = [&tree, &opt](kcut::Stream& s) {
            return static_cast<double>(cs::simulate_records(tree, opt.k, s).total);
        };
        pred.value = exact_tree_mean(tree, opt.k);
    } else if (opt.family == "star") {
        tree = gg::star(n);
        task = [&tree, &opt](kcut::Stream& s) {
            return static_cast<double>(cs::simulate_records(tree, opt.k, s).total);
        };
        pred.value = exact_tree_mean(tree, opt.k);
    } else if (opt.family == "curtain") {
        tree = gg::curtain(opt.ell, n);
        task = [&tree, &opt](kcut::Stream& s) {
            return static_cast<double>(cs::simulate_records(tree, opt.k, s).total);
        };
        if (n <= 100000) {
            pred.value = exact_tree_mean(tree, opt.k);
        } else {
            pred.kind = "asymptotic";
            pred.value = opt.ell * sf::eta(opt.k, 1) *
                         std::pow(static_cast<double>(n) / opt.ell, 1.0 - 1.0 / opt.k);
        }
    } else if (opt.family == "complete") {
        if (n < 1) throw CLI::ValidationError("--n must be >= 1");
        task = [n, &opt](kcut::Stream& s) {
            return static_cast<double>(cs::simulate_complete_graph(n, opt.k, s));
        };
        pred.value = opt.k + (n - 1) * sf::star_limit_mean(opt.k);
    } else if (opt.family == "rrt") {
        if (n < 2) throw CLI::ValidationError("--n must be >= 2");
        task = [n, &opt](kcut::Stream& s) {
            auto t = gg::random_recursive(n, s);
            return static_cast<double>(cs::simulate_records(t, opt.k, s).total);
        };
        pred.kind = "asymptotic";
        for (int r = 1; r <= opt.k; ++r) {
            pred.value += sf::asym_mean_rrt(opt.k, r, static_cast<double>(n));
        }
    } else if (opt.family == "gw") {
        auto law = gg::parse_offspring(opt.offspring);
        task = [n, law, &opt](kcut::Stream& s) {
            auto t = gg::gw_conditioned(n, law, s);
            return static_cast<double>(cs::simulate_records(t, opt.k, s).total);
        };
        pred.kind = "asymptotic";
        for (int r = 1; r <= opt.k; ++r) {
            pred.value += sf::asym_mean_gw(opt.k, r, gg::offspring_sigma(law),
                                           static_cast<double>(n));
        }
    } else {
        throw CLI::ValidationError("unknown --family " + opt.family);
    }

    auto samples = mc::run_replicas(task, opt.replicas, opt.seed, opt.workers);
    auto summary = mc::summarize(samples);

    std::printf("family=%s n=%" PRId64 " k=%d replicas=%" PRId64 " seed=%" PRIu64 "\n",
                opt.family.c_str(), n, opt.k, opt.replicas, opt.seed);
    print_summary(summary);
    std::printf("prediction=%.10g\nprediction_kind=%s\n", pred.value, pred.kind);
    if (!opt.out.empty()) write_outputs(opt.out, samples, summary);
    return 0;
}

int cmd_constants(int k) {
    for (int r = 1; r < k; ++r) {
        std::printf("eta_%d=%.10g\n", r, sf::eta(k, r));
    }
    std::printf("lambda=%.10g\n", sf::lambda_const(k));
    std::printf("second_moment=%.10g\n", sf::gamma_const(k));
    std::printf("variance_coeff=%.10g\n", sf::var_const(k));
    for (int l = 1; l <= 3; ++l) std::printf("rho_%d=%.10g\n", l, sf::rho(k, l));
    for (int l = 1; l <= 3; ++l) std::printf("zeta_%d=%.10g\n", l, sf::zeta(k, l));
    std::printf("star_limit_mean=%.10g\n", sf::star_limit_mean(k));
    return 0;
}

int cmd_limit_sample(int k, std::int64_t n, std::uint64_t seed, double term_tol,
                     int patience, int p_cap, const std::string& out) {
    ld::LimitSamplerConfig cfg;
    cfg.k = k;
    cfg.term_tol = term_tol;
    cfg.patience = patience;
    cfg.p_cap = p_cap;
    ld::validate(cfg);
    if (n < 2) throw CLI::ValidationError("--n must be >= 2");

    std::vector<double> samples(n);
    std::int64_t cap_hits = 0;
    long double term_sum = 0.0L;
    for (std::int64_t i = 0; i < n; ++i) {
        kcut::Stream s(seed, static_cast<std::uint64_t>(i));
        auto draw = ld::sample_bk_detail(cfg, s);
        samples[i] = draw.value;
        term_sum += draw.terms;
        if (draw.hit_cap) ++cap_hits;
    }
    auto summary = mc::summarize(samples);
    std::printf("k=%d draws=%" PRId64 " seed=%" PRIu64 "\n", k, n, seed);
    print_summary(summary);
    std::printf("mean_terms=%.10g\ncap_hit_fraction=%.10g\n",
                static_cast<double>(term_sum / n),
                static_cast<double>(cap_hits) / static_cast<double>(n));
    std::printf("target_mean=%.10g\ntarget_second_moment=%.10g\n", sf::eta(k, 1),
                sf::gamma_const(k));
    if (!out.empty()) write_outputs(out, samples, summary);
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int workers,
               const std::string& out) {
    auto result = vf::run_suite(suite, seed, workers);
    std::fputs(result.report.c_str(), stdout);
    if (!out.empty()) {
        fs::create_directories(out);
        io::write_file((fs::path(out) / "report.txt").string(), result.report);
        io::write_file((fs::path(out) / "report.json").string(), vf::suite_json(result));
        std::printf("wrote %s/report.txt %s/report.json\n", out.c_str(), out.c_str());
    }
    return result.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"simulation and verification laboratory for the k-cut process"};
    app.require_subcommand(1);

    SimulateOptions sim_opt;
    auto* sim = app.add_subcommand("simulate", "run the cut process on a graph family");
    sim->add_option("--family", sim_opt.family, "path|binary|star|complete|curtain|rrt|gw")
        ->required()
        ->check(CLI::IsMember({"path", "binary", "star", "complete", "curtain", "rrt", "gw"}));
    sim->add_option("--n", sim_opt.n, "number of nodes (families other than binary)");
    sim->add_option("--m", sim_opt.m, "binary: full levels below the root, n=2^(m+1)-1");
    sim->add_option("--k", sim_opt.k, "cuts needed to remove a node")->capture_default_str();
    sim->add_option("--replicas", sim_opt.replicas, "independent runs")->capture_default_str();
    sim->add_option("--seed", sim_opt.seed, "base seed; replica i uses stream (seed, i)")
        ->required();
    sim->add_option("--ell", sim_opt.ell, "curtain: number of hanging paths")
        ->capture_default_str();
    sim->add_option("--offspring", sim_opt.offspring, "gw: poisson1|geom-half|binary02")
        ->capture_default_str()
        ->check(CLI::IsMember({"poisson1", "geom-half", "binary02"}));
    sim->add_option("--workers", sim_opt.workers, "0 = hardware concurrency")
        ->capture_default_str();
    sim->add_option("--out", sim_opt.out, "directory for samples.csv/summary.json/histogram.csv");

    int const_k = 2;
    auto* con = app.add_subcommand("constants", "print the limit constants for one k");
    con->add_option("--k", const_k, "k >= 2")->required()->check(CLI::Range(2, 64));

    int ls_k = 2;
    std::int64_t ls_n = 0;
    std::uint64_t ls_seed = 0;
    double ls_tol = 1e-9;
    int ls_patience = 8;
    int ls_cap = 400;
    std::string ls_out;
    auto* lim = app.add_subcommand("limit-sample", "draw from the limit law of the scaled total");
    lim->add_option("--k", ls_k, "k >= 2")->capture_default_str()->check(CLI::Range(2, 64));
    lim->add_option("--n", ls_n, "number of draws")->required();
    lim->add_option("--seed", ls_seed, "base seed")->required();
    lim->add_option("--term-tol", ls_tol, "relative term cutoff")->capture_default_str();
    lim->add_option("--patience", ls_patience, "consecutive small terms before stopping")
        ->capture_default_str();
    lim->add_option("--p-cap", ls_cap, "hard cap on series terms")->capture_default_str();
    lim->add_option("--out", ls_out, "directory for samples.csv/summary.json/histogram.csv");

    std::string vf_suite = "all";
    std::uint64_t vf_seed = vf::kDefaultSeed;
    int vf_workers = 0;
    std::string vf_out;
    auto* ver = app.add_subcommand("verify", "run an acceptance suite");
    ver->add_option("--suite", vf_suite, "all|specfun|oracle-small|limit|families")
        ->capture_default_str()
        ->check(CLI::IsMember({"all", "specfun", "oracle-small", "limit", "families"}));
    ver->add_option("--seed", vf_seed, "suite seed")->capture_default_str();
    ver->add_option("--workers", vf_workers, "0 = hardware concurrency")->capture_default_str();
    ver->add_option("--out", vf_out, "directory for report.txt/report.json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) return cmd_simulate(sim_opt);
        if (con->parsed()) return cmd_constants(const_k);
        if (lim->parsed()) {
            return cmd_limit_sample(ls_k, ls_n, ls_seed, ls_tol, ls_patience, ls_cap, ls_out);
        }
        if (ver->parsed()) return cmd_verify(vf_suite, vf_seed, vf_workers, vf_out);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
