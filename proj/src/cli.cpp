#include "blockcodes/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "blockcodes/construct.hpp"
#include "blockcodes/enumerate.hpp"
#include "blockcodes/families.hpp"
#include "blockcodes/graph_io.hpp"
#include "blockcodes/harness.hpp"
#include "blockcodes/json_io.hpp"
#include "blockcodes/solver.hpp"

namespace blockcodes {

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

Graph read_graph(const std::string& path, const std::string& format, std::istream& in) {
    std::string text;
    if (path.empty() || path == "-") {
        text = read_all(in);
    } else {
        std::ifstream f(path);
        if (!f) throw std::runtime_error("cannot open " + path);
        text = read_all(f);
    }
    const GraphFormat fmt = format == "auto" ? detect_format(text) : parse_format_name(format);
    return parse_graph(text, fmt);
}

bool write_file(const std::string& path, const std::string& content, std::ostream& err) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "error: cannot write " << path << '\n';
        return false;
    }
    f << content;
    return static_cast<bool>(f);
}

VertexSet parse_vertex_list(const std::string& text) {
    std::string normalized = text;
    for (char& ch : normalized) {
        if (ch == ',') ch = ' ';
    }
    std::istringstream is(normalized);
    VertexSet s;
    int v = 0;
    while (is >> v) s.insert(v);
    if (!is.eof()) throw std::invalid_argument("bad vertex list: " + text);
    return s;
}

}  // namespace

int cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Identifying, locating-dominating and open locating-dominating codes on graphs"};
    app.require_subcommand(1);

    std::string in_path;
    std::string in_format = "auto";

    auto* solve = app.add_subcommand("solve", "Minimum code of one graph read from --in or stdin");
    std::string code_kind;
    bool brute = false;
    bool with_decomposition = false;
    std::string check_code;
    solve->add_option("--in", in_path, "Input file (default stdin)");
    solve->add_option("--format", in_format, "auto, graph6 or edgelist")->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
    solve->add_option("--code", code_kind, "id, ld or old")->required()->check(CLI::IsMember({"id", "ld", "old", "ID", "LD", "OLD"}));
    solve->add_flag("--brute", brute, "Use subset enumeration instead of branch and bound");
    solve->add_flag("--decompose", with_decomposition, "Also print the vertex decomposition of the certificate");
    solve->add_option("--check-code", check_code, "Validate this vertex list instead of solving");

    auto* gen = app.add_subcommand("gen", "Generate a graph family member");
    FamilySpec spec;
    int p = 0;
    std::uint64_t seed = 0;
    std::string out_format = "graph6";
    gen->add_option("--family", spec.name, "Family name")->required()->check(CLI::IsMember(family_names()));
    gen->add_option("--k", spec.k, "Main parameter")->required();
    auto* p_opt = gen->add_option("--p", p, "Second parameter (path_power power, random_block max block size)");
    auto* seed_opt = gen->add_option("--seed", seed, "Seed for random_block");
    gen->add_option("--format", out_format, "graph6 or edgelist")->check(CLI::IsMember({"graph6", "edgelist"}));

    auto* enumerate = app.add_subcommand("enumerate", "Connected block graphs on n vertices, one graph6 line each");
    int enum_n = 0;
    std::string enum_out;
    bool oracle = false;
    enumerate->add_option("--n", enum_n, "Number of vertices")->required();
    enumerate->add_option("--out", enum_out, "Output file (default stdout)");
    enumerate->add_flag("--oracle", oracle, "Use the brute-force enumerator (n <= 6)");

    auto* construct = app.add_subcommand("construct", "Identifying code of size at most n_Q with its trace");
    construct->add_option("--in", in_path, "Input file (default stdin)");
    construct->add_option("--format", in_format, "auto, graph6 or edgelist")
        ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));

    auto* verify = app.add_subcommand("verify", "Run the bound checks over enumerated graphs and families");
    VerifyOptions vopts;
    std::string json_out;
    std::string csv_out;
    verify->add_option("--max-n", vopts.max_n, "Largest order of enumerated block graphs")->required()
        ->check(CLI::Range(2, kEnumerateLimit));
    verify->add_flag("--families", vopts.families, "Also check the parameterized families");
    verify->add_option("--out", json_out, "JSON report path");
    verify->add_option("--csv", csv_out, "CSV report path");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    }

    try {
        if (*solve) {
            const Graph g = read_graph(in_path, in_format, in);
            const CodeKind kind = parse_kind(code_kind);
            if (!check_code.empty()) {
                const Code c{kind, parse_vertex_list(check_code)};
                if (!c.members.subset_of(g.vertices())) throw std::invalid_argument("code vertex out of range");
                if (auto v = validate(g, c)) {
                    out << to_json(*v).dump() << '\n';
                    return kExitFailure;
                }
                out << Json{{"kind", kind_name(kind)}, {"valid", true}}.dump() << '\n';
                return 0;
            }
            SolveResult r = brute ? brute_force_gamma(g, kind) : gamma(g, kind);
            Json j = to_json(r);
            if (with_decomposition) {
                CodeDecomposition d = decompose(g, r.certificate);
                j["decomposition"] = to_json(d);
                j["claims"] = to_json(check_claims(d, kind));
            }
            out << j.dump() << '\n';
            return 0;
        }
        if (*gen) {
            if (*p_opt) spec.p = p;
            if (*seed_opt) spec.seed = seed;
            out << emit_graph(generate(spec), parse_format_name(out_format));
            if (out_format == "graph6") out << '\n';
            return 0;
        }
        if (*enumerate) {
            const auto graphs = oracle ? oracle_enumerate(enum_n) : enumerate_connected_block_graphs(enum_n);
            std::string text;
            for (const Graph& g : graphs) text += emit_graph(g, GraphFormat::Graph6) + "\n";
            if (enum_out.empty()) {
                out << text;
            } else if (!write_file(enum_out, text, err)) {
                return kExitFailure;
            }
            return 0;
        }
        if (*construct) {
            const Graph g = read_graph(in_path, in_format, in);
            ConstructResult r = id_code_at_most_nq(g);
            Json j = to_json(r);
            j["nq"] = count_maximal_cliques(g);
            out << j.dump() << '\n';
            return 0;
        }
        if (*verify) {
            VerifySummary s = run_verify(vopts);
            if (!json_out.empty() && !write_file(json_out, reports_to_json(s.reports).dump(2) + "\n", err)) {
                return kExitFailure;
            }
            if (!csv_out.empty() && !write_file(csv_out, reports_to_csv(s.reports), err)) return kExitFailure;
            out << "graphs " << s.reports.size() << ", failing " << s.hard_failures << ", findings " << s.findings
                << '\n';
            for (const auto& r : s.reports) {
                if (!r.hard_failure()) continue;
                out << "FAIL " << r.source << ' ' << r.graph6;
                for (std::size_t i = 0; i < kCheckNames.size(); ++i) {
                    if (r.checks[i].status == CheckStatus::Fail) out << ' ' << kCheckNames[i] << " [" << r.checks[i].reason << ']';
                }
                out << '\n';
            }
            return s.exit_code();
        }
    } catch (const Inadmissible& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const ConstructPreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace blockcodes
