// chromatica command-line front end. Uses only the C API.
#include "chromatica/chromatica.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "chromatica/1";

enum Exit : int { kOk = 0, kUsage = 1, kParse = 2, kSizeLimit = 3, kMismatch = 4 };

struct CliError {
    int code;
    std::string message;
};

int exit_for(chrom_status s) {
    switch (s) {
        case CHROM_E_PARSE:
        case CHROM_E_IO: return kParse;
        case CHROM_E_TOO_LARGE: return kSizeLimit;
        default: return kUsage;
    }
}

void check(chrom_status s, const std::string& context) {
    if (s == CHROM_OK) return;
    throw CliError{exit_for(s), context + ": " + chrom_last_error()};
}

struct GraphDeleter {
    void operator()(chrom_graph* g) const { chrom_graph_free(g); }
};
struct PolyDeleter {
    void operator()(chrom_poly* p) const { chrom_poly_free(p); }
};
struct LinesDeleter {
    void operator()(chrom_lines* a) const { chrom_lines_free(a); }
};
using GraphPtr = std::unique_ptr<chrom_graph, GraphDeleter>;
using PolyPtr = std::unique_ptr<chrom_poly, PolyDeleter>;
using LinesPtr = std::unique_ptr<chrom_lines, LinesDeleter>;

std::string take(char* s) {
    std::string out = s ? s : "";
    chrom_string_free(s);
    return out;
}

GraphPtr load_graph(const std::string& path) {
    chrom_graph* g = nullptr;
    check(chrom_graph_load(path.c_str(), &g), path);
    return GraphPtr(g);
}

LinesPtr load_lines(const std::string& path) {
    chrom_lines* a = nullptr;
    check(chrom_lines_load(path.c_str(), &a), path);
    return LinesPtr(a);
}

struct Computed {
    PolyPtr poly;
    chrom_trace trace{};
};

Computed compute(const chrom_graph* g, chrom_method method, const std::string& what) {
    chrom_poly* p = nullptr;
    Computed c;
    check(chrom_chromatic(g, method, nullptr, &p, &c.trace), what);
    c.poly.reset(p);
    return c;
}

std::string poly_text(const chrom_poly* p) {
    char* s = nullptr;
    check(chrom_poly_to_string(p, &s), "polynomial");
    return take(s);
}

json poly_coeffs(const chrom_poly* p) {
    char* s = nullptr;
    check(chrom_poly_to_json(p, &s), "polynomial");
    return json::parse(take(s));
}

std::string eval_at(const chrom_poly* p, int64_t x) {
    char* s = nullptr;
    check(chrom_poly_eval(p, x, &s), "evaluation");
    return take(s);
}

// Coefficients from the highest power down, as decimal strings.
std::vector<std::string> top_coeffs(const chrom_poly* p, std::size_t count) {
    std::vector<std::string> out;
    long deg = chrom_poly_degree(p);
    for (long i = deg; i >= 0 && out.size() < count; --i) {
        char* s = nullptr;
        check(chrom_poly_coeff(p, static_cast<std::size_t>(i), &s), "coefficient");
        out.push_back(take(s));
    }
    return out;
}

json trace_json(const chrom_trace& t) {
    return json{{"recursion_nodes", t.recursion_nodes},
                {"memo_hits", t.memo_hits},
                {"bridge_rules", t.bridge_rules},
                {"minimal_cycle_rules", t.minimal_cycle_rules},
                {"fallback_rules", t.fallback_rules}};
}

void print_trace(const chrom_trace& t) {
    std::cout << "recursion_nodes: " << t.recursion_nodes << '\n'
              << "memo_hits: " << t.memo_hits << '\n'
              << "bridge_rules: " << t.bridge_rules << '\n'
              << "minimal_cycle_rules: " << t.minimal_cycle_rules << '\n'
              << "fallback_rules: " << t.fallback_rules << '\n';
}

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) {
        if (!out.empty()) out += ' ';
        out += s;
    }
    return out;
}

json header(const char* command, const std::string& path) {
    return json{{"schema", kSchema}, {"command", command}, {"file", path}};
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

// --- chromatic -----------------------------------------------------------

struct ChromaticArgs {
    std::string path;
    std::string method = "auto";
    bool trace = false;
    bool json = false;
};

chrom_method method_of(const std::string& name) {
    if (name == "auto") return CHROM_METHOD_AUTO;
    if (name == "inductive") return CHROM_METHOD_INDUCTIVE;
    if (name == "delcontr") return CHROM_METHOD_DELCONTR;
    if (name == "whitney") return CHROM_METHOD_WHITNEY;
    return CHROM_METHOD_LATTICE;
}

int cmd_chromatic(const ChromaticArgs& a) {
    auto g = load_graph(a.path);
    auto c = compute(g.get(), method_of(a.method), a.method);
    if (a.json) {
        json j = header("chromatic", a.path);
        j["method"] = a.method;
        j["vertices"] = chrom_graph_vertex_count(g.get());
        j["edges"] = chrom_graph_edge_count(g.get());
        j["chi"] = poly_text(c.poly.get());
        j["coefficients"] = poly_coeffs(c.poly.get());
        if (a.trace) j["trace"] = trace_json(c.trace);
        emit(j);
    } else {
        std::cout << poly_text(c.poly.get()) << '\n';
        if (a.trace) print_trace(c.trace);
    }
    return kOk;
}

// --- chambers ------------------------------------------------------------

struct ChambersArgs {
    std::string graph_path;
    std::string lines_path;
    bool json = false;
};

int cmd_chambers(const ChambersArgs& a) {
    PolyPtr chi;
    std::string path;
    std::size_t hyperplanes = 0;
    if (!a.graph_path.empty()) {
        path = a.graph_path;
        auto g = load_graph(path);
        hyperplanes = chrom_graph_edge_count(g.get());
        chi = std::move(compute(g.get(), CHROM_METHOD_AUTO, "chromatic").poly);
    } else {
        path = a.lines_path;
        auto lines = load_lines(path);
        hyperplanes = chrom_lines_count(lines.get());
        chrom_poly* p = nullptr;
        check(chrom_lines_characteristic(lines.get(), &p), path);
        chi.reset(p);
    }
    char* c = nullptr;
    char* bc = nullptr;
    check(chrom_chambers(chi.get(), &c, &bc), "chambers");
    std::string chambers = take(c), bounded = take(bc);
    if (a.json) {
        json j = header("chambers", path);
        j["kind"] = a.graph_path.empty() ? "lines" : "graph";
        j["hyperplanes"] = hyperplanes;
        j["chi"] = poly_text(chi.get());
        j["coefficients"] = poly_coeffs(chi.get());
        j["chambers"] = chambers;
        j["bounded_chambers"] = bounded;
        emit(j);
    } else {
        std::cout << "chi: " << poly_text(chi.get()) << '\n'
                  << "chambers: " << chambers << '\n'
                  << "bounded chambers: " << bounded << '\n';
    }
    return kOk;
}

// --- coeffs --------------------------------------------------------------

struct FileArgs {
    std::string path;
    bool json = false;
};

struct CheckArgs {
    std::string path;
    std::string expect;
    bool json = false;
};

std::string without_spaces(std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    return s;
}

int cmd_coeffs(const FileArgs& a) {
    auto g = load_graph(a.path);
    chrom_patterns pc{};
    check(chrom_count_patterns(g.get(), &pc), "patterns");
    char* raw[4] = {nullptr, nullptr, nullptr, nullptr};
    std::size_t count = 0;
    check(chrom_leading_coefficients(g.get(), raw, &count), "coefficients");
    std::vector<std::string> formula;
    for (std::size_t i = 0; i < count; ++i) formula.push_back(take(raw[i]));
    auto c = compute(g.get(), CHROM_METHOD_AUTO, "chromatic");
    auto expansion = top_coeffs(c.poly.get(), count);
    bool match = formula == expansion;
    if (a.json) {
        json j = header("coeffs", a.path);
        j["patterns"] = json{{"m", pc.m}, {"k3", pc.k3}, {"c4", pc.c4}, {"k4", pc.k4}, {"g0", pc.g0}};
        j["formula"] = formula;
        j["expansion"] = expansion;
        j["chi"] = poly_text(c.poly.get());
        j["verdict"] = match ? "MATCH" : "MISMATCH";
        emit(j);
    } else {
        std::cout << "vertices: " << chrom_graph_vertex_count(g.get()) << '\n'
                  << "patterns: m=" << pc.m << " k3=" << pc.k3 << " c4=" << pc.c4 << " k4=" << pc.k4
                  << " g0=" << pc.g0 << '\n'
                  << "formula: " << join(formula) << '\n'
                  << "expansion: " << join(expansion) << '\n'
                  << "chi: " << poly_text(c.poly.get()) << '\n'
                  << (match ? "MATCH" : "MISMATCH") << '\n';
    }
    return match ? kOk : kMismatch;
}

// --- check ---------------------------------------------------------------

enum class Verdict { Agree, Disagree, Skipped };

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Agree: return "agree";
        case Verdict::Disagree: return "MISMATCH";
        case Verdict::Skipped: return "skipped (size limit)";
    }
    return "";
}

struct OracleResult {
    std::string name;
    Verdict verdict;
};

// Runs body; TooLarge becomes Skipped, anything else propagates.
template <typename F>
Verdict guarded_oracle(F&& body) {
    try {
        return body() ? Verdict::Agree : Verdict::Disagree;
    } catch (const CliError& e) {
        if (e.code == kSizeLimit) return Verdict::Skipped;
        throw;
    }
}

int cmd_check(const CheckArgs& a) {
    auto g = load_graph(a.path);
    auto ref = compute(g.get(), CHROM_METHOD_AUTO, "chromatic");
    const chrom_poly* chi = ref.poly.get();

    std::vector<OracleResult> oracles;
    oracles.push_back({"whitney", guarded_oracle([&] {
                           return chrom_poly_equal(compute(g.get(), CHROM_METHOD_WHITNEY, "whitney").poly.get(), chi);
                       })});
    oracles.push_back({"bond lattice", guarded_oracle([&] {
                           return chrom_poly_equal(compute(g.get(), CHROM_METHOD_LATTICE, "lattice").poly.get(), chi);
                       })});
    oracles.push_back({"colorings k=0..5", guarded_oracle([&] {
                           for (int64_t k = 0; k <= 5; ++k) {
                               char* s = nullptr;
                               check(chrom_coloring_count(g.get(), k, &s), "coloring count");
                               if (take(s) != eval_at(chi, k)) return false;
                           }
                           return true;
                       })});
    oracles.push_back({"F_p points p=2,3,5", guarded_oracle([&] {
                           for (int64_t p : {2, 3, 5}) {
                               char* s = nullptr;
                               check(chrom_fp_point_count(g.get(), p, &s), "point count");
                               if (take(s) != eval_at(chi, p)) return false;
                           }
                           return true;
                       })});
    Verdict inductive = guarded_oracle([&] {
        return chrom_poly_equal(compute(g.get(), CHROM_METHOD_INDUCTIVE, "inductive").poly.get(), chi);
    });

    std::optional<Verdict> expected;
    if (!a.expect.empty())
        expected = without_spaces(a.expect) == without_spaces(poly_text(chi)) ? Verdict::Agree : Verdict::Disagree;

    std::size_t agree = 0, ran = 0;
    bool mismatch = inductive == Verdict::Disagree || expected == Verdict::Disagree;
    bool skipped = inductive == Verdict::Skipped;
    for (const auto& o : oracles) {
        if (o.verdict != Verdict::Skipped) ++ran;
        if (o.verdict == Verdict::Agree) ++agree;
        mismatch = mismatch || o.verdict == Verdict::Disagree;
        skipped = skipped || o.verdict == Verdict::Skipped;
    }

    if (a.json) {
        json j = header("check", a.path);
        j["chi"] = poly_text(chi);
        json list = json::array();
        for (const auto& o : oracles) list.push_back(json{{"oracle", o.name}, {"verdict", verdict_name(o.verdict)}});
        j["oracles"] = list;
        j["inductive"] = verdict_name(inductive);
        if (expected) j["expected"] = verdict_name(*expected);
        j["agree"] = agree;
        j["total"] = oracles.size();
        emit(j);
    } else {
        std::cout << "chi: " << poly_text(chi) << '\n';
        for (const auto& o : oracles) std::cout << o.name << ": " << verdict_name(o.verdict) << '\n';
        std::cout << "inductive: " << verdict_name(inductive) << '\n';
        if (expected) std::cout << "expected: " << verdict_name(*expected) << '\n';
        std::cout << agree << '/' << oracles.size() << " oracles agree";
        if (ran < oracles.size()) std::cout << " (" << oracles.size() - ran << " skipped)";
        std::cout << '\n';
    }
    if (mismatch) return kMismatch;
    return skipped ? kSizeLimit : kOk;
}

// --- bench ---------------------------------------------------------------

struct BenchArgs {
    std::string path;
    int repeat = 1;
    bool json = false;
};

struct Timed {
    Computed result;
    double mean_ms = 0;
};

Timed timed(const chrom_graph* g, chrom_method method, int repeat, const char* what) {
    using clock = std::chrono::steady_clock;
    Timed t;
    double total = 0;
    for (int i = 0; i < repeat; ++i) {
        auto start = clock::now();
        t.result = compute(g, method, what);
        total += std::chrono::duration<double, std::milli>(clock::now() - start).count();
    }
    t.mean_ms = total / repeat;
    return t;
}

int cmd_bench(const BenchArgs& a) {
    auto g = load_graph(a.path);
    auto ind = timed(g.get(), CHROM_METHOD_INDUCTIVE, a.repeat, "inductive");
    auto naive = timed(g.get(), CHROM_METHOD_DELCONTR, a.repeat, "deletion-contraction");
    bool agree = chrom_poly_equal(ind.result.poly.get(), naive.result.poly.get());
    const auto& ti = ind.result.trace;
    const auto& tn = naive.result.trace;
    if (a.json) {
        json j = header("bench", a.path);
        j["repeat"] = a.repeat;
        j["inductive"] = json{{"recursion_nodes", ti.recursion_nodes},
                              {"bridge_rules", ti.bridge_rules},
                              {"minimal_cycle_rules", ti.minimal_cycle_rules},
                              {"fallback_rules", ti.fallback_rules},
                              {"mean_ms", ind.mean_ms}};
        j["naive"] = json{{"recursion_nodes", tn.recursion_nodes}, {"mean_ms", naive.mean_ms}};
        j["agree"] = agree;
        emit(j);
    } else {
        std::printf("inductive: nodes=%llu bridge=%llu minimal_cycle=%llu fallback=%llu mean_ms=%.3f\n",
                    static_cast<unsigned long long>(ti.recursion_nodes),
                    static_cast<unsigned long long>(ti.bridge_rules),
                    static_cast<unsigned long long>(ti.minimal_cycle_rules),
                    static_cast<unsigned long long>(ti.fallback_rules), ind.mean_ms);
        std::printf("naive: nodes=%llu mean_ms=%.3f\n", static_cast<unsigned long long>(tn.recursion_nodes),
                    naive.mean_ms);
        std::printf("%s\n", agree ? "results agree" : "MISMATCH");
    }
    return agree ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chromatica: chromatic polynomials and arrangement chamber counts"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(chrom_version()));

    ChromaticArgs chromatic_args;
    auto* chromatic = app.add_subcommand("chromatic", "Chromatic polynomial of a graph file");
    chromatic->add_option("file", chromatic_args.path, "Graph file")->required();
    chromatic->add_option("--method", chromatic_args.method, "auto|inductive|delcontr|whitney|lattice")
        ->check(CLI::IsMember({"auto", "inductive", "delcontr", "whitney", "lattice"}));
    chromatic->add_flag("--trace", chromatic_args.trace, "Print rule-application counts");
    chromatic->add_flag("--json", chromatic_args.json, "JSON output");

    ChambersArgs chambers_args;
    auto* chambers = app.add_subcommand("chambers", "Chamber counts of a graphic or line arrangement");
    auto* graph_opt = chambers->add_option("--graph", chambers_args.graph_path, "Graph file");
    auto* lines_opt = chambers->add_option("--lines", chambers_args.lines_path, "Line-arrangement file");
    graph_opt->excludes(lines_opt);
    lines_opt->excludes(graph_opt);
    chambers->add_flag("--json", chambers_args.json, "JSON output");

    FileArgs coeffs_args;
    auto* coeffs = app.add_subcommand("coeffs", "Compare coefficient formulas with the expansion");
    coeffs->add_option("file", coeffs_args.path, "Graph file")->required();
    coeffs->add_flag("--json", coeffs_args.json, "JSON output");

    CheckArgs check_args;
    auto* check_cmd = app.add_subcommand("check", "Cross-check against every applicable oracle");
    check_cmd->add_option("file", check_args.path, "Graph file")->required();
    check_cmd->add_option("--expect", check_args.expect, "Known polynomial, e.g. \"t^3 - 3t^2 + 2t\"");
    check_cmd->add_flag("--json", check_args.json, "JSON output");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Inductive procedure vs naive deletion-contraction");
    bench->add_option("file", bench_args.path, "Graph file")->required();
    bench->add_option("--repeat", bench_args.repeat, "Repetitions")->check(CLI::PositiveNumber);
    bench->add_flag("--json", bench_args.json, "JSON output");

    try {
        app.parse(argc, argv);
        if (chambers->parsed() && chambers_args.graph_path.empty() && chambers_args.lines_path.empty())
            throw CLI::ValidationError("chambers", "one of --graph or --lines is required");
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (chromatic->parsed()) return cmd_chromatic(chromatic_args);
        if (chambers->parsed()) return cmd_chambers(chambers_args);
        if (coeffs->parsed()) return cmd_coeffs(coeffs_args);
        if (check_cmd->parsed()) return cmd_check(check_args);
        if (bench->parsed()) return cmd_bench(bench_args);
    } catch (const CliError& e) {
        std::cerr << "chromatica: " << e.message << '\n';
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "chromatica: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
