#include "euler_orient_cli/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "euler_orient/errors.hpp"
#include "euler_orient/estimator.hpp"
#include "euler_orient/exact_count.hpp"
#include "euler_orient/graph_io.hpp"
#include "euler_orient/lemma_lab.hpp"
#include "euler_orient/montecarlo.hpp"
#include "euler_orient/serialize.hpp"
#include "euler_orient/spectral.hpp"
#include "euler_orient_cli/graph_spec.hpp"

namespace eo::cli {
namespace {

using nlohmann::json;

constexpr const char* kVersion = EULER_ORIENT_VERSION;
constexpr int kCosGridPoints = 10000;
constexpr double kConditionA = 4.0;
constexpr int kConditionTrials = 200;
constexpr std::array kConditionSizes{20, 50, 100};

struct Settings {
    std::vector<std::string> inputs;
    std::string out_path;
    std::uint64_t seed = 1;
    int threads = 1;
    std::string format = "json";
    std::string spec;
    int edge_cap = kDefaultEdgeCap;
    int frontier_cap = kDefaultFrontierCap;
    int rejection_cap = kDefaultRejectionCap;
    std::string methods = "theta";
    std::string mc_method = "gaussian_Int";
    std::uint64_t samples = 100000;
    double epsilon = kDefaultEpsilon;
    double norm_a = 0.5;
    std::optional<double> box;
    std::string suite = "all";
    int corpus_size = 100;
    std::string counterexample_dir = "counterexamples";
};

int default_threads() {
    if (const char* env = std::getenv("EULER_ORIENT_THREADS")) {
        try {
            const int t = std::stoi(env);
            if (t >= 1) return t;
        } catch (const std::exception&) {
        }
    }
    return 1;
}

json manifest(const std::string& subcommand, const Settings& s) {
    json m{{"subcommand", subcommand}, {"tool_version", kVersion}, {"seed", s.seed}};
    if (!s.out_path.empty()) m["output"] = s.out_path;
    return m;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

void emit(const std::string& text, const Settings& s, std::ostream& out) {
    if (s.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(s.out_path, std::ios::binary);
    if (!file) throw InputError("cannot write " + s.out_path);
    file << text;
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

std::string csv_field(const json& value) {
    if (value.is_null()) return "";
    if (value.is_string()) return value.get<std::string>();
    return value.dump();
}

std::string csv(const std::vector<std::string>& columns, const std::vector<json>& rows) {
    std::string text;
    for (std::size_t i = 0; i < columns.size(); ++i) text += (i ? "," : "") + columns[i];
    text += "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            text += (i ? "," : "") + csv_field(row.value(columns[i], json()));
        }
        text += "\n";
    }
    return text;
}

const std::string& single_input(const Settings& s) {
    if (s.inputs.size() != 1) throw InputError("expected exactly one --in");
    return s.inputs.front();
}

int cmd_gen(const Settings& s, std::ostream& out) {
    const Graph g = generate_from_spec(s.spec, s.seed, s.rejection_cap);
    json m = manifest("gen", s);
    m["input"] = s.spec;
    const std::string comment = "euler-orient " + m.dump();
    emit(format_edge_list(g, comment), s, out);
    return kExitOk;
}

int cmd_count(const Settings& s, std::ostream& out) {
    const std::string& source = single_input(s);
    const Graph g = load_graph(source, s.seed);
    const BigCount backtrack = eo_count_backtrack(g, {s.edge_cap, s.threads});
    const BigCount dp = eo_count_dp(g, s.frontier_cap);
    const bool agree = backtrack == dp;

    json m = manifest("count", s);
    m["input"] = source;
    json doc{{"schema", "euler-orient/count/v1"},
             {"manifest", m},
             {"n", g.vertex_count()},
             {"m", g.edge_count()},
             {"eo_backtrack", to_string(backtrack)},
             {"eo_dp", to_string(dp)},
             {"agree", agree}};
    if (s.format == "csv") {
        emit(csv({"n", "m", "eo_backtrack", "eo_dp", "agree"}, {doc}), s, out);
    } else {
        emit(render(doc), s, out);
    }
    return agree ? kExitOk : kExitViolation;
}

int cmd_estimate(const Settings& s, std::ostream& out, std::ostream& err) {
    const std::string& source = single_input(s);
    const Graph g = load_graph(source, s.seed);

    std::optional<BigCount> exact;
    if (g.edge_count() <= s.edge_cap) {
        try {
            exact = eo_count_dp(g, s.frontier_cap);
        } catch (const ResourceCapError& e) {
            err << "warning: exact count skipped: " << e.what() << "\n";
        }
    }

    std::vector<EstimateReport> reports;
    for (const auto& method : split_list(s.methods)) {
        if (method == "theta") {
            reports.push_back(make_report(g, source, method, theta_estimate(g), exact));
        } else if (method == "mckay_kn") {
            const auto n = complete_order(g);
            if (!n) throw InputError("mckay_kn applies only to complete graphs");
            EstimateReport r = make_report(g, source, method, mckay_kn(*n), exact);
            r.note = kMckayParityNote;
            reports.push_back(std::move(r));
        } else if (method == "isaev_knn") {
            const auto n = balanced_biclique_order(g);
            if (!n) throw InputError("isaev_knn applies only to K_{n,n}");
            reports.push_back(make_report(g, source, method, isaev_knn(*n), exact));
        } else if (method == "bounds") {
            const auto d = half_regular_degree(g);
            if (!d) throw InputError("bounds apply only to 2d-regular graphs");
            const RegularBounds b = regular_bounds(g.vertex_count(), *d);
            reports.push_back(make_report(g, source, "bounds_lower", b.lower, exact));
            reports.push_back(make_report(g, source, "bounds_upper", b.upper, exact));
        } else {
            throw InputError("unknown method '" + method + "' (theta, mckay_kn, isaev_knn, bounds)");
        }
    }

    json m = manifest("estimate", s);
    m["input"] = source;
    m["methods"] = s.methods;
    json list = json::array();
    std::vector<json> rows;
    for (const auto& r : reports) {
        list.push_back(to_json(r));
        rows.push_back(list.back());
    }
    if (s.format == "csv") {
        emit(csv({"graph", "method", "n", "m", "ln_estimate", "approx", "exact", "ratio"}, rows), s, out);
    } else {
        emit(render({{"schema", "euler-orient/estimate/v1"}, {"manifest", m}, {"reports", list}}), s, out);
    }
    return kExitOk;
}

int cmd_mc(const Settings& s, std::ostream& out) {
    const std::string& source = single_input(s);
    const Graph g = load_graph(source, s.seed);
    const McOptions options{s.samples, s.seed, s.threads};

    json m = manifest("mc", s);
    m["input"] = source;
    m["method"] = s.mc_method;
    m["samples"] = s.samples;
    json doc{{"schema", "euler-orient/mc/v1"}};
    if (s.mc_method == "uniform_S") {
        doc["result"] = to_json(mc_S_uniform(g, options));
    } else if (s.mc_method == "gaussian_Int") {
        m["epsilon"] = s.epsilon;
        doc["result"] = to_json(mc_Int_gaussian(g, options, s.epsilon));
    } else if (s.mc_method == "gaussian_norm") {
        m["a"] = s.norm_a;
        if (s.box) m["box"] = *s.box;
        const NormCheck check = gaussian_norm_check(g, s.norm_a, options, s.box);
        doc["result"] = to_json(check.result);
        doc["result"]["closed_form_ln"] = check.closed_form_ln;
        doc["result"]["ratio"] = check.ratio;
    } else {
        throw InputError("unknown Monte Carlo method '" + s.mc_method +
                         "' (uniform_S, gaussian_Int, gaussian_norm)");
    }
    doc["manifest"] = m;
    if (s.format == "csv") {
        emit(csv({"method", "ln_estimate", "approx", "stderr_rel", "samples", "accepted", "seed", "epsilon"},
                 {doc["result"]}),
             s, out);
    } else {
        emit(render(doc), s, out);
    }
    return kExitOk;
}

void write_counterexamples(const std::vector<LemmaReport>& reports, const Settings& s, std::ostream& err) {
    std::filesystem::create_directories(s.counterexample_dir);
    for (const auto& report : reports) {
        for (std::size_t i = 0; i < report.counterexamples.size(); ++i) {
            const Counterexample& c = report.counterexamples[i];
            std::string comment = "lemma: " + report.lemma + "\ndetail: " + c.detail;
            for (const auto& [key, value] : c.parameters) {
                std::ostringstream line;
                line.precision(17);
                line << "\n" << key << " = " << value;
                comment += line.str();
            }
            const auto path = std::filesystem::path(s.counterexample_dir) /
                              (report.lemma + "-" + std::to_string(i) + ".txt");
            write_edge_list(path, c.graph, comment);
            err << "counterexample written to " << path.string() << "\n";
        }
    }
}

int cmd_verify(const Settings& s, std::ostream& out, std::ostream& err) {
    static const std::vector<std::string> kSuites{"fiedler",  "condition",  "invnorm",   "detdrop",
                                                  "layering", "cosbound",   "gaussbound"};
    std::vector<std::string> suites;
    if (s.suite == "all") {
        suites = kSuites;
    } else {
        for (const auto& name : split_list(s.suite)) {
            if (std::find(kSuites.begin(), kSuites.end(), name) == kSuites.end()) {
                throw InputError("unknown suite '" + name + "'");
            }
            suites.push_back(name);
        }
    }

    Corpus corpus;
    if (s.inputs.empty()) {
        corpus = builtin_corpus(s.seed, s.corpus_size);
    } else {
        for (const auto& source : s.inputs) corpus.push_back({source, load_graph(source, s.seed)});
    }

    std::vector<LemmaReport> reports;
    for (const auto& suite : suites) {
        if (suite == "fiedler") reports.push_back(verify_fiedler(corpus, s.seed, s.threads));
        if (suite == "condition") {
            reports.push_back(check_condition_trend(kConditionA, kConditionSizes, kConditionTrials, s.seed, s.threads));
        }
        if (suite == "invnorm") reports.push_back(verify_inverse_norm(corpus, s.threads));
        if (suite == "detdrop") reports.push_back(verify_det_drop(corpus, s.seed, s.threads));
        if (suite == "layering") reports.push_back(verify_layering(corpus, s.seed, s.threads));
        if (suite == "cosbound") reports.push_back(check_cos_bound(kCosGridPoints));
        if (suite == "gaussbound") reports.push_back(verify_gaussian_upper_bound(corpus, s.seed, s.threads));
    }

    bool passed = true;
    json list = json::array();
    std::vector<json> rows;
    for (const auto& r : reports) {
        passed = passed && r.passed();
        list.push_back(to_json(r));
        rows.push_back(list.back());
    }

    json m = manifest("verify", s);
    m["suite"] = s.suite;
    if (s.inputs.empty()) {
        m["corpus"] = "builtin";
        m["corpus_size"] = s.corpus_size;
    } else {
        m["corpus"] = s.inputs;
    }
    if (s.format == "csv") {
        emit(csv({"lemma", "instances", "violations", "skipped", "passed"}, rows), s, out);
    } else {
        emit(render({{"schema", "euler-orient/verify/v1"}, {"manifest", m}, {"passed", passed}, {"reports", list}}),
             s, out);
    }
    if (!passed) {
        write_counterexamples(reports, s, err);
        return kExitViolation;
    }
    return kExitOk;
}

void add_common(CLI::App* cmd, Settings& s, bool multiple_inputs = false) {
    if (multiple_inputs) {
        cmd->add_option("--in", s.inputs, "Edge-list files or generator specs (repeatable)");
    } else {
        cmd->add_option("--in", s.inputs, "Edge-list file or generator spec")->expected(1);
    }
    cmd->add_option("--out", s.out_path, "Write the report here instead of stdout");
    cmd->add_option("--seed", s.seed, "RNG seed");
    cmd->add_option("--threads", s.threads, "Worker threads (default: EULER_ORIENT_THREADS or 1)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

void warn_caps(const Settings& s, std::ostream& err) {
    if (s.edge_cap != kDefaultEdgeCap) {
        err << "warning: edge cap overridden to " << s.edge_cap << " (default " << kDefaultEdgeCap
            << "); exact counting may take exponentially long\n";
    }
    if (s.frontier_cap != kDefaultFrontierCap) {
        err << "warning: frontier cap overridden to " << s.frontier_cap << " (default " << kDefaultFrontierCap
            << "); the dynamic program may exhaust memory\n";
    }
    if (s.rejection_cap != kDefaultRejectionCap) {
        err << "warning: rejection cap overridden to " << s.rejection_cap << " (default "
            << kDefaultRejectionCap << ")\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Settings s;
    s.threads = default_threads();

    CLI::App app{"Count, estimate and check Eulerian orientations of even graphs", "euler-orient"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
    gen->add_option("spec,--spec", s.spec, "complete:n | bipartite:a,b | cycle:n | circulant:n:offsets | "
                                           "random:n:toggles[:gamma_min]")
        ->required();
    gen->add_option("--out", s.out_path, "Output file (default stdout)");
    gen->add_option("--seed", s.seed, "RNG seed");
    gen->add_option("--rejection-cap", s.rejection_cap, "Attempts for random:...:gamma_min")
        ->check(CLI::PositiveNumber);

    auto* count = app.add_subcommand("count", "Exact EO(G) by backtracking and by dynamic programming");
    add_common(count, s);
    count->add_option("--edge-cap", s.edge_cap, "Backtracking edge cap")->check(CLI::PositiveNumber);
    count->add_option("--frontier-cap", s.frontier_cap, "Dynamic-program frontier cap")->check(CLI::PositiveNumber);

    auto* estimate = app.add_subcommand("estimate", "Closed-form estimates and bounds");
    add_common(estimate, s);
    estimate->add_option("--methods", s.methods, "Comma list of theta, mckay_kn, isaev_knn, bounds");
    estimate->add_option("--edge-cap", s.edge_cap, "Attach the exact count when m is at most this")
        ->check(CLI::PositiveNumber);
    estimate->add_option("--frontier-cap", s.frontier_cap, "Dynamic-program frontier cap")
        ->check(CLI::PositiveNumber);

    auto* mc = app.add_subcommand("mc", "Monte Carlo estimates");
    add_common(mc, s);
    mc->add_option("--method,--methods", s.mc_method, "uniform_S, gaussian_Int or gaussian_norm");
    mc->add_option("--samples", s.samples, "Sample count")->check(CLI::PositiveNumber);
    mc->add_option("--epsilon", s.epsilon, "Box exponent for gaussian_Int");
    mc->add_option("--a", s.norm_a, "Gaussian scale for gaussian_norm");
    mc->add_option("--box", s.box, "Optional cube half-width for gaussian_norm");

    auto* verify = app.add_subcommand("verify", "Run the lemma checks over a corpus");
    add_common(verify, s, true);
    verify->add_option("--suite", s.suite,
                       "fiedler, condition, invnorm, detdrop, layering, cosbound, gaussbound or all");
    verify->add_option("--corpus-size", s.corpus_size, "Random graphs in the built-in corpus")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--counterexample-dir", s.counterexample_dir, "Where violating instances are written");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        warn_caps(s, err);
        if (gen->parsed()) return cmd_gen(s, out);
        if (count->parsed()) return cmd_count(s, out);
        if (estimate->parsed()) return cmd_estimate(s, out, err);
        if (mc->parsed()) return cmd_mc(s, out);
        if (verify->parsed()) return cmd_verify(s, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ResourceCapError& e) {
        err << "error: resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const NumericalError& e) {
        err << "error: numerical failure: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace eo::cli
