#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "helly/algorithms.hpp"
#include "helly/generators.hpp"
#include "helly/graph.hpp"
#include "helly/oracles.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "helly-ecc/1";

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw helly::GraphError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string half_integer_string(int twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice / 2) + ".5";
}

int parse_two_delta(double delta) {
    double twice = 2.0 * delta;
    long rounded = std::lround(twice);
    if (std::abs(twice - rounded) > 1e-9 || rounded < 0)
        throw helly::GraphError("--delta must be a non-negative half-integer");
    return static_cast<int>(rounded);
}

json table_json(const helly::EccentricityTable& t) {
    return json{{"rad", t.rad}, {"diam", t.diam}, {"ecc", t.ecc}, {"center", t.center}};
}

void emit(const json& doc, const std::string& format) {
    if (format == "json") {
        std::cout << doc.dump(2) << "\n";
    } else {  // tsv: one "vertex <tab> eccentricity" line per vertex
        const auto& ecc = doc.at("ecc");
        for (size_t v = 0; v < ecc.size(); v++)
            std::cout << v << "\t" << ecc[v].get<int>() << "\n";
    }
}

helly::EccentricityTable run_algo(const helly::Graph& g, const std::string& algo,
                                  std::optional<int> two_delta, int threads, bool debug) {
    if (algo == "oracle") return helly::all_ecc_bruteforce(g, threads);
    if (algo == "sqrt") return helly::all_ecc_sqrt(g, debug);
    return helly::all_ecc_hyperbolic(g, two_delta, debug);
}

std::vector<int> parse_vertex_list(const std::string& csv) {
    std::vector<int> out;
    std::istringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eccentricities, radius, diameter and center of Helly graphs"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string algo = "oracle";
    std::string format = "json";
    double delta_flag = -1.0;
    int cap_subsets = 0;    // 0: per-operation defaults
    int cap_quadruples = 0;
    bool debug_invariants = false;
    int threads = 1;
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* sub, bool with_input = true) {
        if (with_input)
            sub->add_option("input", input, "edge-list file, or - for stdin");
        sub->add_option("--format", format, "json or tsv")
            ->check(CLI::IsMember({"json", "tsv"}));
        sub->add_flag("--debug-invariants", debug_invariants,
                      "verify internal structural invariants (slow)");
        sub->add_option("--threads", threads, "worker threads for BFS batches")
            ->check(CLI::PositiveNumber);
    };

    auto* ecc_cmd = app.add_subcommand("ecc", "all vertex eccentricities");
    add_common(ecc_cmd);
    ecc_cmd->add_option("--algo", algo, "oracle | sqrt | hyp")
        ->check(CLI::IsMember({"oracle", "sqrt", "hyp"}));
    ecc_cmd->add_option("--delta", delta_flag,
                        "known hyperbolicity upper bound (half-integer, hyp only)");

    auto* center_cmd = app.add_subcommand("center", "a central vertex and the radius");
    add_common(center_cmd);

    auto* check_cmd = app.add_subcommand("check", "Helly verdict by subset enumeration");
    add_common(check_cmd);
    check_cmd->add_option("--cap-subsets", cap_subsets, "subset enumeration cap (default 16)");

    auto* params_cmd = app.add_subcommand("params", "delta/beta/kappa and inequality verdicts");
    add_common(params_cmd);
    params_cmd->add_option("--cap-subsets", cap_subsets,
                           "cap for subset enumerations (helly check, kappa)");
    params_cmd->add_option("--cap-quadruples", cap_quadruples,
                           "cap for the delta and beta scans");

    std::string subset_csv;
    auto* subset_cmd = app.add_subcommand("subset-ecc", "eccentricities relative to a subset M");
    add_common(subset_cmd);
    subset_cmd->add_option("--subset", subset_csv, "comma-separated vertex ids (compacted ids)")
        ->required();

    std::string family;
    std::string sizes_csv;
    std::string out_path, meta_path;
    auto* gen_cmd = app.add_subcommand("gen", "generate a seeded instance");
    gen_cmd->add_option("family", family, "instance family")->required();
    gen_cmd->add_option("--sizes", sizes_csv, "comma-separated size parameters")->required();
    gen_cmd->add_option("--seed", seed, "RNG seed");
    gen_cmd->add_option("--out", out_path, "edge-list output file (default stdout)");
    gen_cmd->add_option("--meta-out", meta_path, "metadata JSON file (default stderr)");

    auto* verify_cmd = app.add_subcommand("verify", "run sqrt + hyp + oracle and diff");
    add_common(verify_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_cmd->parsed()) {
            helly::GenSpec spec;
            spec.family = family;
            std::istringstream ss(sizes_csv);
            std::string tok;
            while (std::getline(ss, tok, ',')) spec.sizes.push_back(std::stoi(tok));
            spec.seed = seed;
            helly::GenResult res = helly::gen(spec);
            std::string edge_list = helly::to_edge_list(res.graph);
            if (out_path.empty()) {
                std::cout << edge_list;
            } else {
                std::ofstream out(out_path);
                out << edge_list;
            }
            json meta{{"schema", kSchema},
                      {"family", spec.family},
                      {"sizes", spec.sizes},
                      {"seed", spec.seed},
                      {"n", res.graph.num_vertices()},
                      {"m", res.graph.num_edges()},
                      {"expected_helly", res.expected_helly},
                      {"gamma_lower_bound",
                       res.gamma_lower_bound ? json(*res.gamma_lower_bound) : json(nullptr)},
                      {"note", res.note}};
            if (meta_path.empty()) {
                std::cerr << meta.dump(2) << "\n";
            } else {
                std::ofstream out(meta_path);
                out << meta.dump(2) << "\n";
            }
            return 0;
        }

        helly::Graph g = helly::load_graph(read_input(input));
        json doc{{"schema", kSchema}};
        doc["n"] = g.num_vertices();
        doc["m"] = g.num_edges();

        if (ecc_cmd->parsed()) {
            std::optional<int> two_delta;
            if (delta_flag >= 0) two_delta = parse_two_delta(delta_flag);
            auto t = run_algo(g, algo, two_delta, threads, debug_invariants);
            doc["algo"] = algo;
            doc.update(table_json(t));
            emit(doc, format);
        } else if (center_cmd->parsed()) {
            auto res = helly::find_center(g);
            doc["vertex"] = res.vertex;
            doc["radius"] = res.radius;
            std::cout << doc.dump(2) << "\n";
        } else if (check_cmd->parsed()) {
            auto verdict = helly::helly_check_subsets(g, cap_subsets > 0 ? cap_subsets : 16);
            auto t = helly::all_ecc_bruteforce(g, threads);
            doc["helly"] = verdict.helly;
            doc["witness"] = verdict.witness;
            doc["rad"] = t.rad;
            doc["diam"] = t.diam;
            doc["radius_law_holds"] = t.rad == (t.diam + 1) / 2;
            std::cout << doc.dump(2) << "\n";
        } else if (params_cmd->parsed()) {
            int n = g.num_vertices();
            int subs_cap = cap_subsets > 0 ? cap_subsets : 16;
            int kappa_cap = cap_subsets > 0 ? cap_subsets : 14;
            int delta_cap = cap_quadruples > 0 ? cap_quadruples : 150;
            int beta_cap = cap_quadruples > 0 ? cap_quadruples : 40;
            auto t = helly::all_ecc_bruteforce(g, threads);
            if (n <= subs_cap) {
                auto verdict = helly::helly_check_subsets(g, subs_cap);
                doc["helly"] = verdict.helly;
            } else {
                doc["helly"] = nullptr;
            }
            auto delta = helly::hyperbolicity_exact(g, delta_cap);
            doc["two_delta"] = delta.two_delta;
            doc["delta"] = half_integer_string(delta.two_delta);
            doc["delta_witness"] = delta.witness;
            auto beta = helly::pseudoconvexity_beta(g, beta_cap);
            doc["beta"] = beta.beta;
            if (beta.witness) {
                auto& w = *beta.witness;
                doc["beta_witness"] = json{{"v", w.v}, {"r", w.r}, {"x", w.x},
                                           {"y", w.y}, {"z", w.z}};
            } else {
                doc["beta_witness"] = nullptr;
            }
            std::optional<int> kappa;
            if (n <= kappa_cap) {
                auto kr = helly::kappa_exact(g, kappa_cap);
                kappa = kr.kappa;
                doc["kappa"] = kr.kappa;
                doc["kappa_witness"] = kr.witness_m;
                doc["kappa_isometry_mismatch"] = kr.isometry_mismatch;
            } else {
                doc["kappa"] = nullptr;
            }
            auto rep = helly::parameter_inequality_report(g, delta.two_delta, beta.beta, kappa, t);
            json verdicts = json::object();
            for (auto& [name, ok] : rep.verdicts) verdicts[name] = ok;
            doc["verdicts"] = verdicts;
            doc["all_pass"] = rep.all_pass;
            std::cout << doc.dump(2) << "\n";
        } else if (subset_cmd->parsed()) {
            auto m = parse_vertex_list(subset_csv);
            for (int v : m)
                if (v < 0 || v >= g.num_vertices())
                    throw helly::GraphError("subset vertex out of range: " + std::to_string(v));
            auto dm = helly::distance_matrix(g, threads);
            auto rep = helly::subset_ecc(g, m, dm);
            doc["M"] = rep.m;
            doc["ecc_M"] = rep.ecc_m;
            doc["rad_M"] = rep.rad_m;
            doc["diam_M"] = rep.diam_m;
            doc["center_M"] = rep.center_m;
            std::cout << doc.dump(2) << "\n";
        } else if (verify_cmd->parsed()) {
            auto oracle = helly::all_ecc_bruteforce(g, threads);
            doc.update(table_json(oracle));
            std::vector<std::string> mismatches;
            try {
                if (helly::all_ecc_sqrt(g, debug_invariants) != oracle)
                    mismatches.push_back("sqrt");
            } catch (const helly::NotHellyError& e) {
                mismatches.push_back(std::string("sqrt: ") + e.what());
            }
            try {
                if (helly::all_ecc_hyperbolic(g, std::nullopt, debug_invariants) != oracle)
                    mismatches.push_back("hyp");
            } catch (const helly::NotHellyError& e) {
                mismatches.push_back(std::string("hyp: ") + e.what());
            }
            try {
                auto th = helly::ecc_at_most_k(g, oracle.diam, debug_invariants);
                if (th.ecc != oracle.ecc) mismatches.push_back("threshold");
            } catch (const helly::NotHellyError& e) {
                mismatches.push_back(std::string("threshold: ") + e.what());
            }
            doc["agree"] = mismatches.empty();
            doc["mismatches"] = mismatches;
            doc["agreement"] = std::to_string(3 - mismatches.size()) + "/3 algorithms agree";
            std::cout << doc.dump(2) << "\n";
            return mismatches.empty() ? 0 : 2;
        }
        return 0;
    } catch (const helly::NotHellyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const helly::CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
