// Copyright 2026 The symhsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symhsp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "symhsp/characters.hpp"
#include "symhsp/measurement.hpp"
#include "symhsp/oracle.hpp"
#include "symhsp/spectral.hpp"
#include "symhsp/tensor.hpp"

namespace symhsp {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string quoted(const std::string &s) { return "\"" + s + "\""; }

std::string file_key(const Partition &p) {
    std::string s = p.to_string();
    std::replace(s.begin(), s.end(), ',', '-');
    return s;
}

/// Identity of a run: everything that determines the report bytes.
struct RunMeta {
    std::string command;
    std::uint64_t seed = 0;
    int n = 0;
    int k = 0;

    std::string csv_header() const {
        std::ostringstream os;
        os << "# symhsp " << kVersion << "\n"
           << "# command: " << command << "\n"
           << "# seed: " << seed << "\n"
           << "# n: " << n << "\n"
           << "# k: " << k << "\n";
        return os.str();
    }

    Json json() const {
        return Json{{"version", kVersion}, {"command", command}, {"seed", seed}, {"n", n}, {"k", k}};
    }
};

struct Context {
    std::filesystem::path out_dir = ".";
    int threads = 1;
    std::ostream *out = nullptr;
};

void write_file(const std::filesystem::path &path, const std::string &body) {
    std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw ValidationError("cannot write " + path.string());
    }
    f << body;
}

std::string timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

// Sidecar log next to a report; the only place wall-clock data is written.
void write_log(const std::filesystem::path &report, const RunMeta &meta, const std::string &extra = {}) {
    std::ostringstream os;
    os << "timestamp: " << timestamp() << "\n"
       << "command: " << meta.command << "\n"
       << extra;
    write_file(std::filesystem::path(report).concat(".log"), os.str());
}

std::string json_text(const Json &j) { return j.dump(2) + "\n"; }

// ------------------------------------------------------------ commands

void cmd_chartable(Context &ctx, int n) {
    if (n < 1) {
        throw ValidationError("n must be positive");
    }
    const RunMeta meta{"chartable " + std::to_string(n), 0, n, 1};
    const CharacterTable &table = character_table(n);
    table.build_full();
    const auto path = ctx.out_dir / ("chartable_" + std::to_string(n) + ".csv");
    write_file(path, meta.csv_header() + table.to_csv());
    write_log(path, meta);
    *ctx.out << "character table of S_" << n << ": " << table.size() << " x " << table.size() << " -> "
             << path.string() << "\n";
}

void cmd_plancherel(Context &ctx, int n, int samples, std::uint64_t seed) {
    if (n < 1) {
        throw ValidationError("n must be positive");
    }
    if (samples < 0) {
        throw ValidationError("--sample must be non-negative");
    }
    std::string command = "plancherel " + std::to_string(n);
    if (samples > 0) {
        command += " --sample " + std::to_string(samples) + " --seed " + std::to_string(seed);
    }
    const RunMeta meta{command, seed, n, 1};
    std::ostringstream os;
    os << meta.csv_header();
    const auto path = ctx.out_dir / ("plancherel_" + std::to_string(n) + ".csv");
    if (samples == 0) {
        if (n > 60) {
            throw CapExceeded("exact Plancherel tables are limited to n <= 60");
        }
        const IrrepDistribution dist = plancherel(n);
        os << "lambda,dimension,probability,probability_float\n";
        for (const auto &[lambda, p] : dist.weights) {
            os << quoted(lambda.to_string()) << "," << dimension(lambda) << "," << to_string(p) << ","
               << fmt(to_double(p)) << "\n";
        }
        *ctx.out << "Plancherel measure of S_" << n << ": " << dist.weights.size() << " irreps, total "
                 << to_string(dist.total()) << " -> " << path.string() << "\n";
    } else {
        Rng rng(seed);
        std::map<Partition, long> counts;
        for (int s = 0; s < samples; ++s) {
            ++counts[sample_plancherel(n, rng)];
        }
        os << "lambda,count,empirical\n";
        for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
            os << quoted(it->first.to_string()) << "," << it->second << ","
               << fmt(static_cast<double>(it->second) / samples) << "\n";
        }
        *ctx.out << samples << " Plancherel samples of S_" << n << " (seed " << seed << "): " << counts.size()
                 << " distinct shapes -> " << path.string() << "\n";
    }
    write_file(path, os.str());
    write_log(path, meta);
}

void cmd_kron(Context &ctx, const std::string &a, const std::string &b) {
    const Partition lambda = Partition::parse(a);
    const Partition mu = Partition::parse(b);
    if (lambda.n() != mu.n()) {
        throw ValidationError("(" + lambda.to_string() + ") and (" + mu.to_string() + ") have different sizes");
    }
    const int n = lambda.n();
    const RunMeta meta{"kron " + lambda.to_string() + " " + mu.to_string(), 0, n, 2};
    const KroneckerDecomposition dec = decompose(std::vector<Partition>{lambda, mu});
    std::ostringstream os;
    os << meta.csv_header() << "nu,multiplicity,dimension\n";
    BigInt total = 0;
    for (const auto &[nu, m] : dec.multiplicities) {
        os << quoted(nu.to_string()) << "," << m << "," << dimension(nu) << "\n";
        total += m * dimension(nu);
    }
    const auto path = ctx.out_dir / ("kron_" + file_key(lambda) + "_" + file_key(mu) + ".csv");
    write_file(path, os.str());
    write_log(path, meta);
    *ctx.out << "(" << lambda.to_string() << ") x (" << mu.to_string() << "): " << dec.multiplicities.size()
             << " constituents, dimension " << total << " -> " << path.string() << "\n";
}

void cmd_recip_sum(Context &ctx, int nmax) {
    if (nmax < 1) {
        throw ValidationError("nmax must be positive");
    }
    if (nmax > 200) {
        throw CapExceeded("recip-sum is limited to nmax <= 200");
    }
    const RunMeta meta{"recip-sum " + std::to_string(nmax), 0, nmax, 0};
    std::ostringstream os;
    os << meta.csv_header() << "n,value,value_float\n";
    double last = 0.0;
    for (int n = 1; n <= nmax; ++n) {
        const Rational v = conjugacy_reciprocal_sum(n);
        last = to_double(v);
        os << n << "," << to_string(v) << "," << fmt(last) << "\n";
    }
    const auto path = ctx.out_dir / ("recip-sum_" + std::to_string(nmax) + ".csv");
    write_file(path, os.str());
    write_log(path, meta);
    *ctx.out << "reciprocal class-size sums for n = 1.." << nmax << "; value at " << nmax << " = " << fmt(last)
             << " -> " << path.string() << "\n";
}

void cmd_weak_dist(Context &ctx, int n, int matching) {
    if (n < 2 || n % 2 != 0) {
        throw ValidationError("weak-dist needs an even n >= 2 (the matching class is empty otherwise)");
    }
    if (n > 60) {
        throw CapExceeded("weak-dist is limited to n <= 60");
    }
    const auto matchings = n <= 12 ? enumerate_matchings(n) : std::vector<Involution>{};
    Permutation m;
    if (n <= 12) {
        if (matching < 0 || matching >= static_cast<int>(matchings.size())) {
            throw ValidationError("--matching must be in [0, " + std::to_string(matchings.size()) + ")");
        }
        m = matchings[static_cast<std::size_t>(matching)].to_permutation();
    } else {
        if (matching != 0) {
            throw CapExceeded("matchings are enumerated only for n <= 12");
        }
        m = ConjugacyClass{matching_cycle_type(n)}.representative();
    }
    const RunMeta meta{"weak-dist " + std::to_string(n) + " --matching " + std::to_string(matching), 0, n, 1};
    const IrrepDistribution dist = weak_sampling_distribution(n, m);
    const Partition cls = m.cycle_type();
    std::ostringstream os;
    os << meta.csv_header() << "# involution: " << m.to_cycle_string() << "\n"
       << "lambda,dimension,rank,weight,weight_float,plancherel\n";
    for (const auto &[lambda, w] : dist.weights) {
        const BigInt d = dimension(lambda);
        const BigInt rank = (d + character(lambda, cls)) / 2;
        os << quoted(lambda.to_string()) << "," << d << "," << rank << "," << to_string(w) << ","
           << fmt(to_double(w)) << "," << to_string(Rational(d * d, factorial(n))) << "\n";
    }
    const auto path = ctx.out_dir / ("weak-dist_" + std::to_string(n) + ".csv");
    write_file(path, os.str());
    write_log(path, meta);
    *ctx.out << "weak Fourier sampling of S_" << n << " with H = {1, " << m.to_cycle_string()
             << "}: total " << to_string(dist.total()) << ", TV to Plancherel "
             << to_string(total_variation(dist, plancherel(n))) << " -> " << path.string() << "\n";
}

std::vector<std::vector<Partition>> parse_tuples(const std::string &text) {
    std::vector<std::vector<Partition>> tuples;
    std::stringstream all(text);
    std::string tuple;
    while (std::getline(all, tuple, ';')) {
        std::vector<Partition> t;
        std::stringstream parts(tuple);
        std::string p;
        while (std::getline(parts, p, '|')) {
            t.push_back(Partition::parse(p));
        }
        tuples.push_back(std::move(t));
    }
    return tuples;
}

struct TvScanOptions {
    int n = 0;
    int k = 0;
    std::uint64_t seed = 7;
    int samples = 20;
    int m_samples = 64;
    bool exhaustive_m = false;
    bool emit_distributions = false;
    std::string frame_file;
    std::string tuples;
    double low_dim_threshold = -1.0;
    double cutoff_c = 1.0;
};

Json distribution_json(const DistributionReport &r) {
    return Json{{"involution", r.involution}, {"rank", r.rank}, {"tv", r.tv_to_natural},
                {"probabilities", r.probabilities}};
}

void cmd_tv_scan(Context &ctx, const TvScanOptions &opt) {
    TvExperimentConfig config;
    config.n = opt.n;
    config.registers = opt.k;
    config.seed = opt.seed;
    config.samples = opt.samples;
    config.m_samples = opt.m_samples;
    config.exhaustive_m = opt.exhaustive_m;
    config.emit_distributions = opt.emit_distributions;
    config.threads = ctx.threads;
    config.cutoff_c = opt.cutoff_c;
    std::string command = "tv-scan " + std::to_string(opt.n) + " " + std::to_string(opt.k) + " --seed " +
                          std::to_string(opt.seed);
    if (!opt.tuples.empty()) {
        config.selection = LambdaSelection::explicit_list;
        config.explicit_tuples = parse_tuples(opt.tuples);
        command += " --tuples " + opt.tuples;
    } else {
        command += " --samples " + std::to_string(opt.samples);
    }
    if (opt.exhaustive_m) {
        command += " --exhaustive-m";
    } else if (opt.n > 10) {
        command += " --m-samples " + std::to_string(opt.m_samples);
    }
    if (!opt.frame_file.empty()) {
        if (opt.tuples.empty()) {
            throw ValidationError("--frame needs --tuples (a frame lives on one product space)");
        }
        std::ifstream f(opt.frame_file);
        if (!f) {
            throw ValidationError("cannot read frame file " + opt.frame_file);
        }
        std::stringstream buf;
        buf << f.rdbuf();
        config.frame = frame_from_json(buf.str());
        command += " --frame " + std::filesystem::path(opt.frame_file).filename().string();
    }
    if (opt.low_dim_threshold >= 0) {
        config.low_dim_threshold = opt.low_dim_threshold;
        command += " --low-dim-threshold " + fmt(opt.low_dim_threshold) + " --cutoff-c " + fmt(opt.cutoff_c);
    }
    if (opt.emit_distributions) {
        command += " --emit-distributions";
    }
    const RunMeta meta{command, opt.seed, opt.n, opt.k};

    const TvExperimentResult result = tv_experiment(config);

    std::ostringstream csv;
    csv << meta.csv_header() << "n,k,lambda_tuple,m_index,tv,rank\n";
    std::ostringstream timing;
    timing << "threads: " << ctx.threads << "\n";
    for (const auto &row : result.rows) {
        csv << row.n << "," << row.registers << "," << quoted(row.lambdas) << "," << row.m_index << ","
            << fmt(row.tv) << "," << row.rank << "\n";
        timing << "runtime_ms " << row.lambdas << " " << row.m_index << " " << fmt(row.runtime_ms) << "\n";
    }

    Json tuples = Json::array();
    for (const auto &t : result.tuples) {
        Json j{{"lambda_tuple", t.lambdas},
               {"dimension", t.dim},
               {"plancherel_weight", to_string(t.plancherel_weight)},
               {"observable", t.observable},
               {"median_tv", t.median_tv},
               {"max_tv", t.max_tv},
               {"averaged_tv", t.averaged_tv},
               {"max_character_ratio", t.max_character_ratio}};
        if (t.flagged_vectors >= 0) {
            j["flagged_vectors"] = t.flagged_vectors;
        }
        if (opt.emit_distributions) {
            Json d = Json::array();
            for (const auto &r : t.distributions) {
                d.push_back(distribution_json(r));
            }
            j["distributions"] = std::move(d);
        }
        tuples.push_back(std::move(j));
    }
    Json summary{{"meta", meta.json()},
                 {"involution_class", result.involution_class.to_string()},
                 {"class_size", result.class_size},
                 {"involutions_scanned", result.rows.empty() ? 0 : result.rows.back().m_index + 1},
                 {"median_tv", result.median_tv},
                 {"max_tv", result.max_tv},
                 {"plancherel_weighted_tv", result.plancherel_weighted_tv},
                 {"tuples", std::move(tuples)}};

    const std::string stem = "tv-scan_" + std::to_string(opt.n) + "_" + std::to_string(opt.k);
    const auto csv_path = ctx.out_dir / (stem + ".csv");
    const auto json_path = ctx.out_dir / (stem + ".json");
    write_file(csv_path, csv.str());
    write_file(json_path, json_text(summary));
    write_log(csv_path, meta, timing.str());
    *ctx.out << "tv-scan n=" << opt.n << " k=" << opt.k << " seed=" << opt.seed << ": " << result.tuples.size()
             << " tuples, " << result.rows.size() << " rows, median |P_m - U| = " << fmt(result.median_tv)
             << ", max = " << fmt(result.max_tv) << " -> " << csv_path.string() << "\n";
}

int cmd_oracle_check(Context &ctx, int n, int k) {
    const RunMeta meta{"oracle-check " + std::to_string(n) + " " + std::to_string(k), 0, n, k};
    const OracleCheck check = oracle_check(n, k);
    std::ostringstream os;
    os << meta.csv_header() << "n,k,involutions,outcomes,max_difference,pass\n"
       << n << "," << k << "," << check.involutions << "," << check.outcomes << "," << fmt(check.max_difference)
       << "," << (check.pass() ? "true" : "false") << "\n";
    const auto path = ctx.out_dir / ("oracle-check_" + std::to_string(n) + "_" + std::to_string(k) + ".csv");
    write_file(path, os.str());
    write_log(path, meta);
    *ctx.out << (check.pass() ? "PASS" : "FAIL") << " max|Δ| ≤ 1e-9 (observed " << fmt(check.max_difference)
             << " over " << check.involutions << " involutions, " << check.outcomes << " name tuples)\n";
    return check.pass() ? kExitOk : kExitFailed;
}

void cmd_roichman(Context &ctx, int n, double b, double q) {
    if (n > 40) {
        throw CapExceeded("roichman tables are limited to n <= 40");
    }
    const RunMeta meta{"roichman " + std::to_string(n) + " --b " + fmt(b) + " --q " + fmt(q), 0, n, 1};
    const RoichmanReport report = roichman_ratio_report(n, q, b);
    std::ostringstream os;
    os << meta.csv_header();
    if (report.below_hypothesis) {
        os << "# note: n <= 4 is outside the hypothesis of the bound\n";
    }
    os << "lambda,cycle_type,support,ratio,abs_ratio,bound,holds\n";
    for (const auto &r : report.rows) {
        os << quoted(r.lambda.to_string()) << "," << quoted(r.cycle_type.to_string()) << "," << r.support << ","
           << to_string(r.ratio) << "," << fmt(r.abs_ratio) << "," << fmt(r.bound) << ","
           << (r.holds ? "true" : "false") << "\n";
    }
    const auto path = ctx.out_dir / ("roichman_" + std::to_string(n) + ".csv");
    write_file(path, os.str());
    write_log(path, meta);
    *ctx.out << "character-ratio bound for S_" << n << " (b=" << fmt(b) << ", q=" << fmt(q) << "): "
             << report.violations << " of " << report.rows.size() << " entries exceed it"
             << (report.below_hypothesis ? " (n below hypothesis)" : "") << " -> " << path.string() << "\n";
}

void cmd_graph_reduce(Context &ctx, const std::string &file) {
    std::ifstream in(file);
    if (!in) {
        throw ValidationError("cannot read graph file " + file);
    }
    const auto [g1, g2] = parse_graph_pair(in);
    const RunMeta meta{"graph-reduce " + std::filesystem::path(file).filename().string(), 0, 2 * g1.vertices, 1};
    const auto inv = involution_from_graph_pair(g1, g2);
    Json j{{"meta", meta.json()}, {"vertices", g1.vertices}, {"isomorphic", inv.has_value()}};
    if (inv) {
        j["involution"] = inv->to_string();
        j["cycle_type"] = inv->to_permutation().cycle_type().to_string();
    }
    const auto path = ctx.out_dir / ("graph-reduce_" + std::filesystem::path(file).stem().string() + ".json");
    write_file(path, json_text(j));
    write_log(path, meta);
    if (inv) {
        *ctx.out << "isomorphic; hidden involution " << inv->to_string() << " in S_" << 2 * g1.vertices << " -> "
                 << path.string() << "\n";
    } else {
        *ctx.out << "not isomorphic -> " << path.string() << "\n";
    }
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Fourier sampling experiments for the hidden subgroup problem over S_n", "symhsp"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kVersion);
    Context ctx;
    ctx.out = &out;
    std::string out_dir = ".";
    app.add_option("--out", out_dir, "directory for reports")->capture_default_str();
    app.add_option("--threads", ctx.threads, "worker threads")->capture_default_str()->check(CLI::Range(1, 256));

    int n = 0;
    int k = 0;
    std::uint64_t seed = 7;
    std::string a;
    std::string b;

    auto *chartable = app.add_subcommand("chartable", "character table of S_n as CSV");
    chartable->add_option("n", n)->required();

    int samples = 0;
    auto *planch = app.add_subcommand("plancherel", "Plancherel measure, exact or sampled");
    planch->add_option("n", n)->required();
    planch->add_option("--sample", samples, "number of samples (0: exact table)");
    planch->add_option("--seed", seed);

    auto *kron = app.add_subcommand("kron", "Kronecker product decomposition");
    kron->add_option("lambda", a)->required();
    kron->add_option("mu", b)->required();

    auto *recip = app.add_subcommand("recip-sum", "sum of reciprocal class sizes for n = 1..nmax");
    recip->add_option("nmax", n)->required();

    int matching = 0;
    auto *weak = app.add_subcommand("weak-dist", "irrep-name distribution for H = {1, m}");
    weak->add_option("n", n)->required();
    weak->add_option("--matching", matching, "index of m among the matchings");

    TvScanOptions tv;
    auto *tvscan = app.add_subcommand("tv-scan", "distance from uniform of P_m over sampled irreps");
    tvscan->add_option("n", tv.n)->required();
    tvscan->add_option("k", tv.k)->required();
    tvscan->add_option("--seed", tv.seed);
    tvscan->add_option("--samples", tv.samples, "Plancherel-sampled tuples");
    tvscan->add_option("--m-samples", tv.m_samples, "sampled involutions when the class is not scanned whole");
    tvscan->add_flag("--exhaustive-m", tv.exhaustive_m, "scan the whole matching class");
    tvscan->add_option("--frame", tv.frame_file, "JSON frame file");
    tvscan->add_option("--tuples", tv.tuples, "explicit tuples, e.g. \"3,1|2,2;4|4\"");
    tvscan->add_flag("--emit-distributions", tv.emit_distributions);
    tvscan->add_option("--low-dim-threshold", tv.low_dim_threshold, "flag frame vectors above this weight");
    tvscan->add_option("--cutoff-c", tv.cutoff_c, "constant of the low-dimensional cutoff");

    auto *oracle = app.add_subcommand("oracle-check", "brute-force simulator versus analytic pipeline");
    oracle->add_option("n", n)->required();
    oracle->add_option("k", k)->required();

    double rb = 0.1;
    double rq = 0.9;
    auto *roich = app.add_subcommand("roichman", "character ratios against the exponential bound");
    roich->add_option("n", n)->required();
    roich->add_option("--b", rb)->capture_default_str();
    roich->add_option("--q", rq)->capture_default_str();

    std::string graph_file;
    auto *graph = app.add_subcommand("graph-reduce", "graph pair to hidden involution");
    graph->add_option("file", graph_file)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        if (code != 0) {
            err << app.help();
        }
        return code == 0 ? kExitOk : kExitValidation;
    }
    ctx.out_dir = out_dir;

    try {
        if (*chartable) {
            cmd_chartable(ctx, n);
        } else if (*planch) {
            cmd_plancherel(ctx, n, samples, seed);
        } else if (*kron) {
            cmd_kron(ctx, a, b);
        } else if (*recip) {
            cmd_recip_sum(ctx, n);
        } else if (*weak) {
            cmd_weak_dist(ctx, n, matching);
        } else if (*tvscan) {
            cmd_tv_scan(ctx, tv);
        } else if (*oracle) {
            return cmd_oracle_check(ctx, n, k);
        } else if (*roich) {
            cmd_roichman(ctx, n, rb, rq);
        } else if (*graph) {
            cmd_graph_reduce(ctx, graph_file);
        }
    } catch (const CapExceeded &e) {
        err << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const ValidationError &e) {
        err << "invalid input: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

}  // namespace symhsp
