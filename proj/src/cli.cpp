#include "cluskein/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "cluskein/cluster.hpp"
#include "cluskein/generators.hpp"
#include "cluskein/skein.hpp"
#include "cluskein/parse.hpp"
#include "cluskein/surface_json.hpp"

namespace cluskein {

namespace {

struct SourceOptions {
    std::string input;
    std::string builtin;
};

void add_source(CLI::App* cmd, SourceOptions& source) {
    auto* in = cmd->add_option("--input,-i", source.input,
                               "surface JSON document path");
    auto* builtin = cmd->add_option("--builtin,-b", source.builtin,
                                    "disk:<n> or punctured-torus");
    in->excludes(builtin);
    builtin->excludes(in);
}

SurfaceDocument load(const SourceOptions& source) {
    if (!source.builtin.empty()) return builtin_document(source.builtin);
    if (!source.input.empty()) return load_surface_file(source.input);
    throw Error("no surface given: pass --input <file> or --builtin <name>");
}

// matrix/mutate/explore/laurent-check/rho-check presuppose a valid
// triangulation; a structurally broken one is an input error.
void require_valid(const SurfaceDocument& doc, std::ostream& err) {
    auto report = validate(doc.surface, doc.triangulation);
    if (report.ok) return;
    std::ostringstream msg;
    msg << "invalid triangulation:";
    for (const auto& v : report.violations) msg << "\n  " << v;
    err << msg.str() << "\n";
    throw CLI::RuntimeError(2);
}

std::vector<int> parse_sequence(const std::string& text, int edge_count) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        int k = 0;
        try {
            size_t used = 0;
            k = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (...) {
            throw Error("malformed mutation index '" + item + "'");
        }
        if (k < 1 || k > edge_count)
            throw Error("mutation index " + std::to_string(k) +
                        " out of range 1.." + std::to_string(edge_count));
        out.push_back(k - 1);
    }
    if (out.empty()) throw Error("empty mutation sequence");
    return out;
}

int cmd_validate(const SurfaceDocument& doc, std::ostream& out) {
    auto report = validate(doc.surface, doc.triangulation);
    // Loop expressions must be Laurent in the edge variables alone.
    auto edge_table = VarTable::ambient(doc.triangulation.edge_names);
    for (const auto& loop : doc.loops) {
        try {
            parse_laurent(loop.laurent, edge_table);
        } catch (const Error& e) {
            report.ok = false;
            report.violations.push_back("loop '" + loop.name +
                                        "': " + e.what());
        }
    }
    if (report.ok) {
        out << "valid\n";
        return 0;
    }
    out << "invalid\n";
    for (const auto& v : report.violations) out << "  " << v << "\n";
    return 1;
}

int cmd_matrix(const SurfaceDocument& doc, std::ostream& out) {
    out << exchange_matrix(doc.triangulation).to_json() << "\n";
    return 0;
}

int cmd_mutate(const SurfaceDocument& doc, const std::string& seq_text,
               std::ostream& out, std::ostream& err) {
    Seed seed = initial_seed(doc.triangulation);
    auto seq = parse_sequence(seq_text, seed.size());
    for (int k : seq)
        if (seed.frozen(k))
            throw Error("index " + std::to_string(k + 1) +
                        " is a frozen boundary edge");
    Seed result(seed);
    try {
        result = mutate_sequence(seed, seq);
    } catch (const InexactDivision& e) {
        err << "inexact division along the sequence: " << e.what() << "\n";
        return 1;
    }
    for (int i = 0; i < result.size(); ++i)
        out << doc.triangulation.edge_names[i] << " = "
            << result.vars[i].to_string() << "\n";
    out << "B = " << result.matrix.to_json() << "\n";
    return 0;
}

int cmd_explore(const SurfaceDocument& doc, int depth,
                const std::string& dot_path, std::ostream& out) {
    Seed seed = initial_seed(doc.triangulation);
    FlipGraph g = explore(seed, depth);
    out << "nodes " << g.nodes.size() << "\n";
    out << "edges " << g.edges.size() << "\n";
    out << "status "
        << (g.truncated ? "truncated"
                        : (g.saturated ? "saturated" : "depth-limited"))
        << "\n";
    if (!dot_path.empty()) {
        std::ofstream dot(dot_path);
        if (!dot) throw Error("cannot write '" + dot_path + "'");
        dot << to_dot(g);
        out << "dot " << dot_path << "\n";
    }
    return 0;
}

int cmd_laurent_check(const SurfaceDocument& doc, int maxlen, std::ostream& out,
                      std::ostream& err) {
    Seed seed = initial_seed(doc.triangulation);
    std::vector<int> mutable_idx;
    for (int i = 0; i < seed.size(); ++i)
        if (!seed.frozen(i)) mutable_idx.push_back(i);

    long checked = 0;
    std::vector<int> failed;
    std::string detail;
    // Depth-first over sequences without immediate repeats, mutating one
    // step per tree node.
    std::function<bool(const Seed&, std::vector<int>&)> walk =
        [&](const Seed& at, std::vector<int>& prefix) {
            if (static_cast<int>(prefix.size()) == maxlen) return true;
            for (int k : mutable_idx) {
                if (!prefix.empty() && prefix.back() == k) continue;
                prefix.push_back(k);
                ++checked;
                try {
                    Seed next = mutate(at, k);
                    if (!walk(next, prefix)) return false;
                } catch (const InexactDivision& e) {
                    failed = prefix;
                    detail = e.what();
                    return false;
                }
                prefix.pop_back();
            }
            return true;
        };
    std::vector<int> prefix;
    bool ok = maxlen <= 0 ? true : walk(seed, prefix);
    if (!ok) {
        err << "Laurent phenomenon violated after sequence";
        for (int k : failed) err << " " << k + 1;
        err << ": " << detail << "\n";
        return 1;
    }
    out << "checked " << checked << " mutation steps over sequences of length <= "
        << maxlen << ": all Laurent\n";
    return 0;
}

int cmd_rho_check(const SurfaceDocument& doc, int flip_index, std::ostream& out,
                  std::ostream& err) {
    AmbientRing ring =
        make_ambient(doc.triangulation, doc.endpoints, doc.punctures);
    Seed seed = ambient_seed(ring);
    int k = flip_index - 1;
    if (k < 0 || k >= seed.size())
        throw Error("flip index out of range 1.." +
                    std::to_string(seed.size()));
    if (seed.frozen(k))
        throw Error("index " + std::to_string(flip_index) +
                    " is a frozen boundary edge");
    TaggedTriangulation tags = doc.tagged();
    std::optional<CompatReport> report;
    try {
        report = check_flip_compatibility(ring, seed, k, tags);
    } catch (const UnsupportedConfiguration& e) {
        err << e.what() << "\n";
        return 2;
    }
    out << "configuration " << report->configuration << "\n";
    out << "rho(x)*rho(x') = " << report->lhs.to_string() << "\n";
    out << "rho(binomial)  = " << report->rhs.to_string() << "\n";
    out << (report->ok ? "PASS" : "FAIL") << "\n";
    return report->ok ? 0 : 1;
}

int cmd_generators(const SurfaceDocument& doc, bool counts, std::ostream& out) {
    if (counts) {
        out << generator_count(doc.surface).to_json() << "\n";
        return 0;
    }
    auto hd = handle_decomposition(doc.surface);
    for (const auto& d : enumerate_generators(hd)) out << d.display() << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact cluster/skein engine over triangulated marked surfaces"};
    app.require_subcommand(1);

    SourceOptions source;
    std::string seq_text;
    std::string dot_path;
    int depth = 4;
    int maxlen = 4;
    int flip_index = 0;

    auto* validate_cmd =
        app.add_subcommand("validate", "check triangulation invariants");
    add_source(validate_cmd, source);

    auto* matrix_cmd =
        app.add_subcommand("matrix", "print the exchange matrix as JSON rows");
    add_source(matrix_cmd, source);

    auto* mutate_cmd = app.add_subcommand(
        "mutate", "apply a mutation sequence and print the seed");
    add_source(mutate_cmd, source);
    mutate_cmd->add_option("--seq", seq_text, "1-based indices, e.g. 3,1,2")
        ->required();

    auto* explore_cmd = app.add_subcommand(
        "explore", "breadth-first flip-graph exploration with deduplication");
    add_source(explore_cmd, source);
    explore_cmd->add_option("--depth", depth, "BFS depth")->required();
    explore_cmd->add_option("--dot", dot_path, "write the graph in DOT format");

    auto* laurent_cmd = app.add_subcommand(
        "laurent-check",
        "run every mutation sequence up to a length bound, expecting "
        "Laurent results");
    add_source(laurent_cmd, source);
    laurent_cmd->add_option("--maxlen", maxlen, "maximum sequence length")
        ->required();

    auto* rho_cmd = app.add_subcommand(
        "rho-check", "verify rho(x)rho(x') = rho(exchange binomial) at a flip");
    add_source(rho_cmd, source);
    rho_cmd->add_option("--flip", flip_index, "1-based edge index")->required();

    bool counts = false;
    auto* generators_cmd = app.add_subcommand(
        "generators", "enumerate the finite skein generating set");
    add_source(generators_cmd, source);
    generators_cmd->add_flag("--counts", counts, "print a JSON count summary");

    std::vector<const char*> argv;
    argv.push_back("cluskein");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        SurfaceDocument doc = load(source);
        if (validate_cmd->parsed()) return cmd_validate(doc, out);
        require_valid(doc, err);
        if (matrix_cmd->parsed()) return cmd_matrix(doc, out);
        if (mutate_cmd->parsed()) return cmd_mutate(doc, seq_text, out, err);
        if (explore_cmd->parsed()) return cmd_explore(doc, depth, dot_path, out);
        if (laurent_cmd->parsed())
            return cmd_laurent_check(doc, maxlen, out, err);
        if (rho_cmd->parsed()) return cmd_rho_check(doc, flip_index, out, err);
        if (generators_cmd->parsed()) return cmd_generators(doc, counts, out);
        err << "no subcommand\n";
        return 2;
    } catch (const CLI::RuntimeError& e) {
        return e.get_exit_code();
    } catch (const ParseError& e) {
        err << "parse error at byte " << e.pos << ": " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    }
}

}  // namespace cluskein
