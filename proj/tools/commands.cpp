#include "commands.hpp"

#include <omp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "cremona/amalgam.hpp"
#include "cremona/census.hpp"
#include "cremona/lattice.hpp"
#include "cremona/sarkisov.hpp"
#include "cremona/serialize.hpp"
#include "cremona/verify.hpp"

namespace cremona::cli {

namespace fs = std::filesystem;

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot write " + path);
    f << text;
    if (!f) throw IoError("write failed for " + path);
}

std::optional<std::string> read_file(const fs::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) return std::nullopt;
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

// "-" or empty means standard output.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-")
        out << text;
    else
        write_file(path, text);
}

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err, bool verbose) {
    auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
    auto log = std::make_shared<spdlog::logger>("cremona", sink);
    log->set_pattern("[%l] %v");
    log->set_level(verbose ? spdlog::level::info : spdlog::level::warn);
    return log;
}

// ---- census -------------------------------------------------------------------------------

struct CensusArgs {
    unsigned q = 2;
    bool sampled = false;
    std::uint64_t samples = 20000;
    std::uint64_t seed = 1;
    int threads = 0;
    std::string out, csv, checkpoint, cache_dir;
    std::uint64_t batch = 1u << 22;
    double budget = 0;
    bool nodal_prefix = false;
    bool no_cache = false;
};

json cache_key(const CensusArgs& a, const Poly& modulus) {
    json k{{"version", kCacheVersion},
           {"q", a.q},
           {"mode", a.sampled ? "sampled" : "exact"},
           {"modulus", to_json(modulus)},
           {"nodal_prefix", a.nodal_prefix}};
    if (a.sampled) {
        k["samples"] = a.samples;
        k["seed"] = a.seed;
    }
    return k;
}

fs::path cache_file(const std::string& dir, const CensusArgs& a) {
    std::string name = "census_q" + std::to_string(a.q) + (a.sampled ? "_sampled" : "_exact");
    if (a.sampled) name += "_n" + std::to_string(a.samples) + "_s" + std::to_string(a.seed);
    if (a.nodal_prefix) name += "_np";
    return fs::path(dir) / (name + ".json");
}

int cmd_census(const CensusArgs& a, std::ostream& out, spdlog::logger& log) {
    const Poly modulus = find_modulus(a.q, 8);
    std::string dir = a.cache_dir;
    if (dir.empty())
        if (const char* env = std::getenv("CREMONA_CACHE_DIR")) dir = env;
    const bool use_cache = !dir.empty() && !a.no_cache && a.checkpoint.empty() && a.budget <= 0;
    const json key = cache_key(a, modulus);

    json result;
    std::string csv;
    bool hit = false;
    if (use_cache) {
        if (auto text = read_file(cache_file(dir, a))) {
            try {
                const json entry = json::parse(*text);
                if (entry.at("key") == key) {
                    result = entry.at("result");
                    csv = entry.at("csv").get<std::string>();
                    hit = true;
                    log.info("cache hit {}", cache_file(dir, a).string());
                } else {
                    log.info("stale cache entry {}, recomputing", cache_file(dir, a).string());
                }
            } catch (const json::exception&) {
                log.warn("unreadable cache entry {}, recomputing", cache_file(dir, a).string());
            }
        }
    }
    if (!hit) {
        CensusOptions opt;
        opt.q = a.q;
        opt.mode = a.sampled ? CensusMode::Sampled : CensusMode::Exact;
        opt.threads = a.threads > 0 ? a.threads : omp_get_max_threads();
        opt.checkpoint_path = a.checkpoint;
        opt.batch_size = a.batch;
        opt.sample_size = a.samples;
        opt.seed = a.seed;
        opt.time_budget_s = a.budget;
        opt.nodal_prefix = a.nodal_prefix;
        log.info("census q={} mode={} threads={}", a.q, a.sampled ? "sampled" : "exact", opt.threads);
        const CensusResult r = run_census(opt);
        result = to_json(r);
        csv = census_csv(r);
        log.info("{} orbits, {} general, {} classes in {:.0f} ms", r.orbits_examined, r.general_position_count,
                 r.pgl3_class_count, r.elapsed_ms);
        if (use_cache) {
            fs::create_directories(dir);
            write_file(cache_file(dir, a).string(), json{{"key", key}, {"result", result}, {"csv", csv}}.dump() + "\n");
        }
    }
    emit(a.out, result.dump(2) + "\n", out);
    if (!a.csv.empty()) write_file(a.csv, csv);
    if (!result.at("bound_satisfied").get<bool>()) {
        log.error("class count {} is below M_q = {}", result.at("pgl3_class_count").get<std::uint64_t>(),
                  result.at("mq_ceil").get<std::uint64_t>());
        return Violation;
    }
    return Ok;
}

// ---- verify -------------------------------------------------------------------------------

struct VerifyArgs {
    std::string lemma;
    unsigned q = 0;
    std::uint64_t samples = 10000;
    std::uint64_t seeds = 100;
    std::uint64_t seed = 1;
    std::uint64_t q_max = 101;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, spdlog::logger& log) {
    const auto need_q = [&](unsigned dflt) {
        const unsigned q = a.q ? a.q : dflt;
        if (!is_prime(q) || q > 13) throw CLI::ValidationError("--q", "q must be a prime <= 13");
        return q;
    };
    SuiteReport r;
    if (a.lemma == "produit")
        r = verify_produit(need_q(2), a.samples, a.seed);
    else if (a.lemma == "beta-twist")
        r = verify_beta_twist(need_q(2));
    else if (a.lemma == "same-orbit")
        r = verify_same_orbit(need_q(2));
    else if (a.lemma == "lambda-scan")
        r = verify_lambda_scan(need_q(7), a.seeds, a.seed);
    else
        r = verify_mq_identity(a.q_max);
    out << json{{"suite", r.name}, {"checks", r.checks}, {"violations", r.violations}, {"dump", r.dump}}.dump(2)
        << "\n";
    if (!r.ok()) {
        for (const auto& d : r.dump) log.error("{}", d);
        return Violation;
    }
    return Ok;
}

// ---- lattices -----------------------------------------------------------------------------

struct LatticeArgs {
    std::string example;
    int points = 0;
    std::vector<int> degrees;
};

Lattice pick_lattice(const LatticeArgs& a) {
    const int given = !a.example.empty() + (a.points > 0) + !a.degrees.empty();
    if (given != 1) throw CLI::ValidationError("lattice", "give exactly one of --example, --points, --degrees");
    if (!a.example.empty()) {
        if (a.example != "3.8") throw CLI::ValidationError("--example", "known examples: 3.8");
        return example_3_8();
    }
    if (a.points > 0) return blowup_lattice(std::vector<int>(a.points, 1));
    return blowup_lattice(a.degrees);
}

int cmd_chambers(const LatticeArgs& la, const std::string& path, std::ostream& out) {
    const Lattice L = pick_lattice(la);
    const auto neg = negative_classes(L);
    const auto cs = chambers(L);
    json negs = json::array(), walls = json::array(), jc = json::array(), jw = json::array();
    std::vector<char> wall(neg.size(), 0);
    for (const auto& n : neg) negs.push_back(format_class(L, n));
    for (const auto& c : cs) {
        jc.push_back(to_json(L, c, neg));
        for (int i : c.contracted) wall[i] = 1;
    }
    for (std::size_t i = 0; i < neg.size(); ++i)
        if (wall[i]) walls.push_back(format_class(L, neg[i]));
    for (const auto& w : windows(L)) {
        json contracted = json::array();
        for (int i : w.contracted) contracted.push_back(format_class(L, neg[i]));
        jw.push_back({{"contracted", contracted},
                      {"fibre", w.fibre ? json(format_class(L, *w.fibre)) : json(nullptr)},
                      {"chamber", w.chamber}});
    }
    const json doc{{"lattice", to_json(L)}, {"negatives", negs},  {"walls", walls},
                   {"chambers", jc},        {"windows", jw}};
    emit(path, doc.dump(2) + "\n", out);
    return Ok;
}

int cmd_complex(const LatticeArgs& la, const std::string& dot, const std::string& json_path, std::ostream& out) {
    const SquareComplex X = build_local(pick_lattice(la));
    json rel = json::array();
    for (std::size_t v = 0; v < X.vertices.size(); ++v) {
        if (X.vertices[v].rank != 3) continue;
        rel.push_back({{"vertex", X.vertices[v].name},
                       {"squares", squares_at(X, static_cast<int>(v))},
                       {"cycle_length", elementary_relation(X, static_cast<int>(v)).size()}});
    }
    json ranks = json::object();
    for (const auto& v : X.vertices) ranks[std::to_string(v.rank)] = ranks.value(std::to_string(v.rank), 0) + 1;
    out << json{{"vertices", X.vertices.size()},
                {"edges", X.edges.size()},
                {"squares", X.squares.size()},
                {"rank_counts", ranks},
                {"relations", rel}}
               .dump(2)
        << "\n";
    if (!dot.empty()) emit(dot, export_dot(X), out);
    if (!json_path.empty()) emit(json_path, export_json(X), out);
    return Ok;
}

// ---- amalgam ------------------------------------------------------------------------------

struct AmalgamArgs {
    std::string action;
    std::string word;
    int bertini = 0;
    int radius = 2;
    std::vector<std::string> tokens{"g"};
    std::string dot;
};

int cmd_amalgam(const AmalgamArgs& a, std::ostream& out) {
    if (a.action == "ball") {
        if (a.bertini < 1) throw CLI::ValidationError("--bertini", "need at least one Bertini factor");
        std::vector<int> ids;
        for (int i = 1; i <= a.bertini; ++i) ids.push_back(i);
        const TreeBall ball = bass_serre_ball(FactorTable(ids, a.tokens), a.radius);
        out << json{{"radius", a.radius},
                    {"vertices", ball.vertices.size()},
                    {"edges", ball.edges.size()},
                    {"is_tree", ball.is_tree()},
                    {"root_degree", ball.degree(0)}}
                   .dump(2)
            << "\n";
        if (!a.dot.empty()) emit(a.dot, export_dot(ball), out);
        return Ok;
    }
    const Word w = parse_word(a.word);
    if (a.action == "nf") {
        out << format_word(normal_form(w)) << "\n";
    } else if (a.action == "signature") {
        out << format_word(signature(w)) << "\n";
    } else {
        std::vector<int> ids;
        if (a.bertini > 0) {
            for (int i = 1; i <= a.bertini; ++i) ids.push_back(i);
        } else {
            for (const auto& l : w)
                if (l.bertini && std::find(ids.begin(), ids.end(), l.id) == ids.end()) ids.push_back(l.id);
            std::sort(ids.begin(), ids.end());
        }
        const auto v = abelianize(FactorTable(ids), w);
        json j = json::object();
        for (std::size_t i = 0; i < ids.size(); ++i) j["b" + std::to_string(ids[i])] = v[i];
        out << j.dump() << "\n";
    }
    return Ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Birational maps of the plane over finite fields: census, verification, chambers, complexes"};
    app.require_subcommand(1);
    bool verbose = false;
    app.add_flag("-v,--verbose", verbose, "Log progress to stderr");

    CensusArgs ca;
    auto* census = app.add_subcommand("census", "Count PGL3 classes of degree 8 points in general position");
    census->add_option("--q", ca.q, "Base field size")->required()->check(CLI::IsMember({2u, 3u}));
    auto* exact = census->add_flag("--exact", "Scan every orbit (default)");
    census->add_flag("--sampled", ca.sampled, "Random orbit sample; gives a lower bound")->excludes(exact);
    census->add_option("--samples", ca.samples, "Sample size for --sampled")->check(CLI::PositiveNumber);
    census->add_option("--seed", ca.seed, "Sampling seed");
    census->add_option("--threads", ca.threads, "Worker threads (default: OpenMP maximum)")->check(CLI::PositiveNumber);
    census->add_option("--out", ca.out, "JSON result file (default stdout)");
    census->add_option("--csv", ca.csv, "Class representatives as CSV");
    census->add_option("--checkpoint", ca.checkpoint, "Append-only checkpoint file; resumes when present");
    census->add_option("--batch-size", ca.batch, "Point indices per checkpoint batch")->check(CLI::PositiveNumber);
    census->add_option("--budget", ca.budget, "Time budget in seconds (0: none)");
    census->add_flag("--nodal-prefix", ca.nodal_prefix, "Prefix canonical keys with the nodal member count");
    census->add_option("--cache-dir", ca.cache_dir, "Result cache (default $CREMONA_CACHE_DIR)");
    census->add_flag("--no-cache", ca.no_cache, "Ignore the result cache");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("lemma", va.lemma, "Suite name")
        ->required()
        ->check(CLI::IsMember({"produit", "beta-twist", "same-orbit", "lambda-scan", "mq-identity"}));
    verify->add_option("--q", va.q, "Base field size");
    verify->add_option("--samples", va.samples, "Random tuples for produit")->check(CLI::PositiveNumber);
    verify->add_option("--seeds", va.seeds, "Nodal seeds for lambda-scan")->check(CLI::PositiveNumber);
    verify->add_option("--seed", va.seed, "Random seed");
    verify->add_option("--q-max", va.q_max, "Largest prime for mq-identity")->check(CLI::Range(2, 100000));

    LatticeArgs la;
    std::string chambers_out;
    auto* ch = app.add_subcommand("chambers", "Chamber decomposition of the big cone");
    ch->add_option("--example", la.example, "Named example (3.8)");
    ch->add_option("--points", la.points, "Blow up this many rational points")->check(CLI::Range(1, 8));
    ch->add_option("--degrees", la.degrees, "Degrees of the blown-up points")->delimiter(',');
    ch->add_option("--out", chambers_out, "JSON file (default stdout)");

    std::string complex_dot, complex_json;
    auto* cx = app.add_subcommand("complex", "Local square complex of rank <= 3 fibrations");
    cx->add_option("--example", la.example, "Named example (3.8)");
    cx->add_option("--points", la.points, "Blow up this many rational points")->check(CLI::Range(1, 8));
    cx->add_option("--degrees", la.degrees, "Degrees of the blown-up points")->delimiter(',');
    cx->add_option("--dot", complex_dot, "Graphviz output file ('-' for stdout)");
    cx->add_option("--json", complex_json, "JSON output file ('-' for stdout)");

    AmalgamArgs aa;
    auto* am = app.add_subcommand("amalgam", "Free product words and Bass-Serre balls");
    am->add_option("action", aa.action, "nf, signature, abelianize or ball")
        ->required()
        ->check(CLI::IsMember({"nf", "signature", "abelianize", "ball"}));
    am->add_option("--word", aa.word, "Word such as \"b1 e:g b2 e:g^-1\"");
    am->add_option("--bertini", aa.bertini, "Number of Bertini factors");
    am->add_option("--radius", aa.radius, "Ball radius in tree edges");
    am->add_option("--tokens", aa.tokens, "Free generators of the G_e model")->delimiter(',');
    am->add_option("--dot", aa.dot, "Graphviz output file ('-' for stdout)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : Usage;
    }

    auto log = make_logger(err, verbose);
    try {
        if (*census) return cmd_census(ca, out, *log);
        if (*verify) return cmd_verify(va, out, *log);
        if (*ch) return cmd_chambers(la, chambers_out, out);
        if (*cx) return cmd_complex(la, complex_dot, complex_json, out);
        if (*am) return cmd_amalgam(aa, out);
    } catch (const CLI::Error& e) {
        err << e.what() << "\n";
        return Usage;
    } catch (const Error& e) {
        err << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::CheckpointCorrupt:
            case ErrorKind::ResourceBudgetExceeded:
                return Infrastructure;
            default:
                return Usage;
        }
    } catch (const IoError& e) {
        err << e.what() << "\n";
        return Infrastructure;
    } catch (const fs::filesystem_error& e) {
        err << e.what() << "\n";
        return Infrastructure;
    }
    return Usage;
}

}  // namespace cremona::cli
