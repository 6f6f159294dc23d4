// Command-line front end: every pipeline stage as a subcommand over the
// documented file formats. Graphs travel as .mg text, certificates as
// JSON; all diagnostics go to stderr. Exit codes: 0 success/pass,
// 1 fail/negative, 2 usage error, 3 budget exhausted.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "oddimm/blowup_lift.hpp"
#include "oddimm/construction.hpp"
#include "oddimm/generators.hpp"
#include "oddimm/io.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw oddimm::parse_error(oddimm::parse_error::Kind::malformed_header, 0,
                                       "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + out_path);
}

oddimm::Multigraph load_graph(const std::string& path) {
    return oddimm::parse_graph(slurp(path));
}

// Corpus files hold either one .mg document or one graph6 line per graph.
std::vector<oddimm::Multigraph> load_corpus(const std::string& path) {
    std::string text = slurp(path);
    size_t at = text.find_first_not_of(" \t\r\n");
    if (at != std::string::npos && (text[at] == 'p' || text[at] == 'c'))
        return {oddimm::parse_graph(text)};
    std::vector<oddimm::Multigraph> out;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.push_back(oddimm::from_graph6(line));
    }
    return out;
}

long long env_nodes(long long fallback) {
    const char* v = std::getenv("ODDIMM_MAX_NODES");
    if (!v || !*v) return fallback;
    return std::atoll(v);
}

std::string coloring_text(const std::vector<int>& colors) {
    std::ostringstream out;
    for (size_t i = 0; i < colors.size(); ++i)
        out << "color " << i + 1 << " " << colors[i] << "\n";
    return out.str();
}

nlohmann::ordered_json coloring_json(int chi, const std::vector<int>& colors) {
    nlohmann::ordered_json j;
    j["chi"] = chi;
    j["colors"] = colors;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"totally odd clique immersions in line graphs: build, verify, search"};
    app.require_subcommand(1);

    long long default_color_nodes = env_nodes(oddimm::SolverBudget{}.max_nodes);
    long long default_search_nodes = env_nodes(oddimm::SearchBudget{}.max_nodes);

    std::string in_path, in_path2, out_path, format = "text";
    long long color_nodes = default_color_nodes;
    long long search_nodes = default_search_nodes;
    int flag_m = 1, flag_t = 0, workers = 1, gen_n = 0, sample = 0;
    int max_paths = oddimm::SearchBudget{}.max_paths_per_pair;
    int flower_t = 3, flower_extra = 0;
    unsigned long long seed = 1;
    bool want_strong = false, want_odd = false, line_graphs = false, allow_disconnected = false;
    std::vector<std::string> corpus_paths;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("-o,--output", out_path, "write output here instead of stdout");
    };
    auto add_color_budget = [&](CLI::App* cmd) {
        cmd->add_option("--budget", color_nodes, "coloring search node budget");
    };

    CLI::App* c_line = app.add_subcommand("linegraph", "line graph of a host, with edge map");
    c_line->add_option("graph", in_path, "host graph file")->required();
    add_out(c_line);

    CLI::App* c_chii = app.add_subcommand("chi-index", "chromatic index with witness coloring");
    c_chii->add_option("graph", in_path)->required();
    add_color_budget(c_chii);
    add_format(c_chii);
    add_out(c_chii);

    CLI::App* c_chi = app.add_subcommand("chi", "chromatic number with witness coloring");
    c_chi->add_option("graph", in_path)->required();
    add_color_budget(c_chi);
    add_format(c_chi);
    add_out(c_chi);

    CLI::App* c_crit = app.add_subcommand("critical", "edge-critical class-2 subgraph");
    c_crit->add_option("graph", in_path)->required();
    add_color_budget(c_crit);
    add_out(c_crit);

    CLI::App* c_thom = app.add_subcommand("thomassen", "d edge-disjoint paths between one pair");
    c_thom->add_option("graph", in_path)->required();
    add_color_budget(c_thom);
    add_format(c_thom);
    add_out(c_thom);

    CLI::App* c_make = app.add_subcommand("construct", "certificate for L(H) from a host H");
    c_make->add_option("graph", in_path)->required();
    add_color_budget(c_make);
    c_make->add_option("--search-budget", search_nodes, "repair search node budget");
    add_out(c_make);

    CLI::App* c_blow = app.add_subcommand("blowup", "lift a certificate from L(H) to L(mH)");
    c_blow->add_option("certificate", in_path, "certificate JSON")->required();
    c_blow->add_option("graph", in_path2, "host H")->required();
    c_blow->add_option("-m", flag_m, "multiplicity")->required()->check(CLI::PositiveNumber);
    add_out(c_blow);

    CLI::App* c_ver = app.add_subcommand("verify", "replay a certificate against a graph");
    c_ver->add_option("graph", in_path)->required();
    c_ver->add_option("certificate", in_path2)->required();
    c_ver->add_flag("--strong", want_strong, "check strongness even if unclaimed");
    c_ver->add_flag("--odd", want_odd, "check total oddness even if unclaimed");
    add_format(c_ver);
    add_out(c_ver);

    CLI::App* c_find = app.add_subcommand("search", "exhaustive immersion oracle");
    c_find->add_option("graph", in_path)->required();
    c_find->add_option("-t", flag_t, "clique order")->required()->check(CLI::PositiveNumber);
    c_find->add_flag("--strong", want_strong);
    c_find->add_flag("--odd", want_odd);
    c_find->add_option("--budget", search_nodes, "search node budget");
    c_find->add_option("--max-paths", max_paths, "per-pair path cap");
    add_out(c_find);

    CLI::App* c_scan = app.add_subcommand("scan", "conjecture scan over a corpus");
    c_scan->add_option("corpus", corpus_paths, "corpus files (.mg or graph6 lines)");
    c_scan->add_option("--gen", gen_n, "also enumerate all simple graphs up to this order")
        ->check(CLI::Range(1, 7));
    c_scan->add_flag("--all", allow_disconnected, "generated graphs may be disconnected");
    c_scan->add_flag("--line-graphs", line_graphs, "scan L(G) for each corpus graph G");
    c_scan->add_flag("--strong", want_strong);
    c_scan->add_flag("--odd", want_odd);
    c_scan->add_option("--workers", workers, "parallel searches")->check(CLI::PositiveNumber);
    c_scan->add_option("--budget", search_nodes, "per-graph search node budget");
    c_scan->add_option("--coloring-budget", color_nodes, "per-graph coloring node budget");
    c_scan->add_option("--sample", sample, "random subsample size (0 = all)");
    c_scan->add_option("--seed", seed, "sampling seed");
    add_format(c_scan);
    add_out(c_scan);

    CLI::App* c_flow = app.add_subcommand("flower", "star-of-strands generator");
    c_flow->add_option("-t", flower_t, "leaf count")->required()->check(CLI::Range(3, 100));
    c_flow->add_option("--extra", flower_extra, "uniform extra even subdivisions per strand")
        ->check(CLI::NonNegativeNumber);
    add_out(c_flow);

    CLI11_PARSE(app, argc, argv);

    try {
        oddimm::SolverBudget cb{color_nodes};
        oddimm::SearchBudget sb{search_nodes, max_paths};

        if (*c_line) {
            auto h = load_graph(in_path);
            auto l = oddimm::line_graph(h);
            std::ostringstream out;
            for (int e = 0; e < h.m(); ++e)
                out << "c vertex " << e + 1 << " = host edge " << h.edges[e].u + 1 << " "
                    << h.edges[e].v + 1 << "\n";
            out << oddimm::serialize_graph(l.graph);
            emit(out_path, out.str());
            return kExitPass;
        }

        if (*c_chii) {
            auto h = load_graph(in_path);
            auto [chi, witness] = oddimm::chromatic_index(h, cb);
            if (format == "json") {
                emit(out_path, coloring_json(chi, witness.color).dump(2) + "\n");
            } else {
                emit(out_path,
                     "chi-index " + std::to_string(chi) + "\n" + coloring_text(witness.color));
            }
            return kExitPass;
        }

        if (*c_chi) {
            auto g = load_graph(in_path);
            auto [chi, witness] = oddimm::chromatic_number(g, cb);
            if (format == "json") {
                emit(out_path, coloring_json(chi, witness.color).dump(2) + "\n");
            } else {
                emit(out_path,
                     "chi " + std::to_string(chi) + "\n" + coloring_text(witness.color));
            }
            return kExitPass;
        }

        if (*c_crit) {
            auto h = load_graph(in_path);
            auto red = oddimm::critical_subgraph(h, cb);
            std::ostringstream out;
            for (int v = 0; v < red.graph.n; ++v)
                out << "c vertex " << v + 1 << " from " << red.vertex_to_host[v] + 1 << "\n";
            for (int e = 0; e < red.graph.m(); ++e)
                out << "c edge " << e + 1 << " from " << red.edge_to_host[e] + 1 << "\n";
            auto audit = oddimm::vizing_adjacency_audit(red.graph);
            if (audit.empty()) {
                out << "c audit clean\n";
            } else {
                for (const auto& a : audit)
                    out << "c audit vertex " << a.vertex + 1 << " has only " << a.heavy_neighbors
                        << " max-degree neighbors\n";
            }
            out << oddimm::serialize_graph(red.graph);
            emit(out_path, out.str());
            return kExitPass;
        }

        if (*c_thom) {
            auto h = load_graph(in_path);
            auto sys = oddimm::thomassen_system(h, h.max_degree(), cb);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["x"] = sys.x;
                j["y"] = sys.y;
                j["d"] = sys.d;
                j["paths"] = nlohmann::json::array();
                for (const auto& p : sys.paths) j["paths"].push_back(p.vertices);
                emit(out_path, j.dump(2) + "\n");
            } else {
                std::ostringstream out;
                out << "x " << sys.x + 1 << "\ny " << sys.y + 1 << "\nd " << sys.d << "\n";
                for (const auto& p : sys.paths) {
                    out << "path";
                    for (int v : p.vertices) out << " " << v + 1;
                    out << "\n";
                }
                emit(out_path, out.str());
            }
            return kExitPass;
        }

        if (*c_make) {
            auto h = load_graph(in_path);
            auto res = oddimm::construct_immersion(h, cb, sb);
            for (const auto& e : res.log)
                std::cerr << "event " << e.kind << " [" << e.case_tag << "] " << e.detail << "\n";
            emit(out_path, oddimm::to_json(res.cert));
            return kExitPass;
        }

        if (*c_blow) {
            auto cert = oddimm::certificate_from_json(slurp(in_path));
            auto h = load_graph(in_path2);
            auto lifted = oddimm::lift_certificate(cert, h, flag_m);
            emit(out_path, oddimm::to_json(lifted));
            return kExitPass;
        }

        if (*c_ver) {
            auto g = load_graph(in_path);
            auto cert = oddimm::certificate_from_json(slurp(in_path2));
            oddimm::CheckFlags flags;
            flags.strong = cert.strong || want_strong;
            flags.totally_odd = cert.totally_odd || want_odd;
            auto rep = oddimm::verify(g, cert, flags);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["checks"] = nlohmann::json::array();
                for (const auto& c : rep.checks) {
                    nlohmann::ordered_json jc;
                    jc["name"] = c.name;
                    jc["passed"] = c.passed;
                    jc["witnesses"] = nlohmann::json::array();
                    for (const auto& w : c.witnesses) jc["witnesses"].push_back(w.text);
                    j["checks"].push_back(jc);
                }
                j["verdict"] = rep.overall ? "pass" : "fail";
                emit(out_path, j.dump(2) + "\n");
            } else {
                emit(out_path, rep.to_text());
            }
            return rep.overall ? kExitPass : kExitFail;
        }

        if (*c_find) {
            auto g = load_graph(in_path);
            oddimm::OracleFlags flags{want_strong, want_odd};
            auto res = oddimm::find_immersion(g, flag_t, flags, sb);
            std::cerr << "status " << oddimm::to_string(res.status) << " nodes " << res.nodes
                      << "\n";
            switch (res.status) {
                case oddimm::SearchStatus::found:
                    emit(out_path, oddimm::to_json(res.cert));
                    return kExitPass;
                case oddimm::SearchStatus::exhausted_no:
                    return kExitFail;
                case oddimm::SearchStatus::budget_out:
                    return kExitBudget;
            }
        }

        if (*c_scan) {
            std::vector<oddimm::Multigraph> corpus;
            if (gen_n > 0)
                corpus = oddimm::generate_graphs(gen_n, !allow_disconnected);
            for (const auto& path : corpus_paths)
                for (auto& g : load_corpus(path)) corpus.push_back(std::move(g));
            if (corpus.empty()) {
                std::cerr << "scan: empty corpus (pass files or --gen)\n";
                return kExitUsage;
            }
            if (line_graphs) {
                std::vector<oddimm::Multigraph> mapped;
                mapped.reserve(corpus.size());
                for (const auto& g : corpus) mapped.push_back(oddimm::line_graph(g).graph);
                corpus = std::move(mapped);
            }
            if (sample > 0 && sample < static_cast<int>(corpus.size())) {
                std::mt19937_64 rng(seed);
                std::shuffle(corpus.begin(), corpus.end(), rng);
                corpus.resize(sample);
            }
            oddimm::OracleFlags flags{want_strong, want_odd};
            auto ledger = oddimm::scan_conjecture(corpus, flags, sb, cb, workers);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["entries"] = nlohmann::json::array();
                for (const auto& e : ledger.entries)
                    j["entries"].push_back({{"graph", e.key},
                                            {"n", e.n},
                                            {"m", e.m},
                                            {"chi", e.chi},
                                            {"status", oddimm::to_string(e.status)},
                                            {"nodes", e.nodes}});
                j["counterexample"] = ledger.counterexample;
                j["budget_hit"] = ledger.budget_hit;
                emit(out_path, j.dump(2) + "\n");
            } else {
                emit(out_path, ledger.to_text());
            }
            if (ledger.counterexample >= 0) return kExitFail;
            return ledger.budget_hit ? kExitBudget : kExitPass;
        }

        if (*c_flow) {
            auto f = flower_extra > 0 ? oddimm::flower_graph_uniform(flower_t, flower_extra)
                                      : oddimm::flower_graph(flower_t);
            std::ostringstream out;
            out << "c center " << f.center + 1 << "\n";
            out << "c leaves";
            for (int v : f.leaves) out << " " << v + 1;
            out << "\n";
            for (const auto& s : f.strands) {
                out << "c strand";
                for (int v : s) out << " " << v + 1;
                out << "\n";
            }
            out << oddimm::serialize_graph(f.graph);
            emit(out_path, out.str());
            return kExitPass;
        }
    } catch (const oddimm::budget_error& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitBudget;
    } catch (const oddimm::parse_error& e) {
        std::cerr << "parse: " << e.what() << "\n";
        return kExitUsage;
    } catch (const oddimm::precondition_error& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
