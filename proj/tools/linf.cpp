// linf: exact toolkit for linear-forest Turán problems. Subcommands expose
// the library pieces: lf oracle, Kelmans shifts, pattern counting, extremal
// constructions, closed-form evaluators, and formula-vs-oracle sweeps.
//
// Exit codes: 0 ok/pass, 1 mismatch finding, 2 usage or config error,
// 3 exact-computation cap exceeded.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linf/constructions.hpp"
#include "linf/counting.hpp"
#include "linf/extremal.hpp"
#include "linf/formulas.hpp"
#include "linf/graph.hpp"
#include "linf/linear_forest.hpp"
#include "linf/matching.hpp"
#include "linf/report.hpp"
#include "linf/shifting.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct InputLine {
    std::string text;
    std::size_t number;
    std::string source;
};

// Lines from the given files, or stdin when none; blank lines and
// metadata lines (# comments, parts=) are skipped.
std::vector<InputLine> read_lines(const std::vector<std::string>& files, bool keep_meta = false) {
    std::vector<InputLine> out;
    auto drain = [&](std::istream& is, const std::string& name) {
        std::string line;
        std::size_t number = 0;
        while (std::getline(is, line)) {
            ++number;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            if (!keep_meta && (line[0] == '#' || line.rfind("parts=", 0) == 0)) continue;
            out.push_back({line, number, name});
        }
    };
    if (files.empty()) {
        drain(std::cin, "<stdin>");
        return out;
    }
    for (const auto& f : files) {
        std::ifstream is(f);
        if (!is) throw std::invalid_argument("cannot open input file: " + f);
        drain(is, f);
    }
    return out;
}

std::string format_witness(const std::vector<std::pair<int, int>>& edges) {
    std::string out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
    }
    return out;
}

// Splits the 2n-vertex encoding back into a bipartite host; intra-part
// edges are a hard error.
linf::BipartiteGraph to_bipartite(const linf::Graph& g, int nx, int ny) {
    if (g.vertex_count() != nx + ny) {
        throw std::invalid_argument("parts do not add up to the vertex count");
    }
    linf::BipartiteGraph bg(nx, ny);
    for (auto [u, v] : g.edges()) {
        if (u <= nx && v > nx) {
            bg.add_edge(u, v - nx);
        } else {
            throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                        " stays inside one part");
        }
    }
    return bg;
}

int cmd_lf(const std::vector<std::string>& files) {
    bool had_error = false;
    for (const auto& line : read_lines(files)) {
        try {
            linf::Graph g = linf::parse_graph6(line.text);
            auto stats = linf::max_linear_forest(g);
            std::cout << "lf=" << stats.lf << " witness=" << format_witness(stats.witness)
                      << "\n";
        } catch (const linf::Graph6ParseError& e) {
            std::cerr << line.source << ":" << line.number << ": " << e.what() << "\n";
            had_error = true;
        }
    }
    return had_error ? kExitUsage : kExitPass;
}

int cmd_shift(const std::vector<std::string>& files, int i, int j, bool fixpoint) {
    bool had_error = false;
    for (const auto& line : read_lines(files)) {
        try {
            linf::Graph g = linf::parse_graph6(line.text);
            linf::Graph out = fixpoint ? linf::shift_closure(g) : linf::shift(g, i, j).first;
            std::cout << linf::encode_graph6(out) << "\n";
        } catch (const linf::Graph6ParseError& e) {
            std::cerr << line.source << ":" << line.number << ": " << e.what() << "\n";
            had_error = true;
        }
    }
    return had_error ? kExitUsage : kExitPass;
}

int cmd_count(const std::string& kind, int s, int t, const std::vector<std::string>& files) {
    bool had_error = false;
    if (kind == "biclique") {
        // expects "parts=nx,ny" metadata followed by the 2n-vertex graph6 line
        std::optional<std::pair<int, int>> parts;
        for (const auto& line : read_lines(files, /*keep_meta=*/true)) {
            if (line.text[0] == '#') continue;
            if (line.text.rfind("parts=", 0) == 0) {
                int nx = 0, ny = 0;
                if (std::sscanf(line.text.c_str(), "parts=%d,%d", &nx, &ny) != 2) {
                    throw std::invalid_argument("bad parts line: " + line.text);
                }
                parts = {nx, ny};
                continue;
            }
            if (!parts) throw std::invalid_argument("biclique counting needs a parts=nx,ny line");
            try {
                linf::Graph g = linf::parse_graph6(line.text);
                auto bg = to_bipartite(g, parts->first, parts->second);
                std::cout << linf::count_bicliques(bg, s, t).to_string() << "\n";
            } catch (const linf::Graph6ParseError& e) {
                std::cerr << line.source << ":" << line.number << ": " << e.what() << "\n";
                had_error = true;
            }
        }
        return had_error ? kExitUsage : kExitPass;
    }
    for (const auto& line : read_lines(files)) {
        try {
            linf::Graph g = linf::parse_graph6(line.text);
            linf::Count c = kind == "clique" ? linf::count_cliques(g, s)
                                             : linf::count_clique_stars(g, s, t);
            std::cout << c.to_string() << "\n";
        } catch (const linf::Graph6ParseError& e) {
            std::cerr << line.source << ":" << line.number << ": " << e.what() << "\n";
            had_error = true;
        }
    }
    return had_error ? kExitUsage : kExitPass;
}

void print_construct_checks(const linf::Graph& g, int k) {
    std::cout << "lf=" << linf::linear_forest_max_edges(g) << "\n";
    std::cout << "lnk-free(k=" << k << ")=" << (linf::is_lnk_free(g, k) ? "true" : "false")
              << "\n";
}

int cmd_construct(const std::string& family, int n, int k, int m, int kceil, int x, bool check) {
    if (family == "H") {
        linf::Graph g = linf::build_H(n, k, m);
        std::cout << linf::encode_graph6(g) << "\n";
        if (check) {
            print_construct_checks(g, k);
            for (int s = 2; s <= 3; ++s) {
                linf::Count direct = linf::count_cliques(g, s);
                linf::Count closed = linf::count_H_cliques_closed(n, k, m, s);
                std::cout << "count[K_" << s << "]=" << direct.to_string()
                          << " formula=" << closed.to_string()
                          << " agree=" << (direct == closed ? "true" : "false") << "\n";
            }
            linf::Count direct = linf::count_clique_stars(g, 1, 2);
            linf::Count closed = linf::count_H_cliquestars_closed(n, k, m, 1, 2);
            std::cout << "count[K*_{1,2}]=" << direct.to_string()
                      << " formula=" << closed.to_string()
                      << " agree=" << (direct == closed ? "true" : "false") << "\n";
        }
        return kExitPass;
    }
    if (family == "clique" || family == "dominating") {
        auto variant = family == "clique" ? linf::UnrestrictedVariant::clique
                                          : linf::UnrestrictedVariant::dominating;
        linf::Graph g = linf::build_extremal_unrestricted(n, k, variant);
        std::cout << linf::encode_graph6(g) << "\n";
        if (check) {
            print_construct_checks(g, k);
            linf::Count direct(static_cast<unsigned long long>(g.edge_count()));
            linf::Count branch =
                family == "clique"
                    ? linf::binom(k, 2)
                    : linf::binom(n, 2) - linf::binom(n - (k - 1) / 2, 2) +
                          linf::Count(k % 2 == 0 ? 1 : 0);
            std::cout << "edges=" << direct.to_string() << " branch=" << branch.to_string()
                      << " agree=" << (direct == branch ? "true" : "false") << "\n";
        }
        return kExitPass;
    }
    if (family == "bip-odd" || family == "bip-even") {
        if ((family == "bip-odd") != (k % 2 == 1)) {
            throw std::invalid_argument("family " + family + " needs k of matching parity");
        }
        linf::BipartiteGraph bg = linf::build_extremal_bipartite(n, k);
        std::cout << "parts=" << n << "," << n << "\n";
        std::cout << linf::encode_graph6(bg.to_graph()) << "\n";
        if (check) {
            print_construct_checks(bg.to_graph(), k);
            std::cout << "matching-number=" << linf::matching_number(bg) << "\n";
            linf::Count direct = linf::count_bicliques(bg, 1, 1);
            linf::Count formula = linf::ex_bip_biclique_linforest(n, k, 1, 1);
            std::cout << "count[K_{1,1}]=" << direct.to_string()
                      << " formula=" << formula.to_string()
                      << " agree=" << (direct == formula ? "true" : "false") << "\n";
        }
        return kExitPass;
    }
    if (family == "gstar") {
        linf::BipartiteGraph bg = linf::build_gstar(n, kceil, x);
        std::cout << "parts=" << n << "," << n << "\n";
        std::cout << linf::encode_graph6(bg.to_graph()) << "\n";
        if (check) {
            std::cout << "edges=" << bg.edge_count() << "\n";
            linf::Count direct = linf::count_bicliques_one_sided(bg, 1, 1);
            linf::Count closed = linf::f_bip_closed(n, kceil, x, 1, 1);
            std::cout << "count[K_{1,1}]=" << direct.to_string()
                      << " formula=" << closed.to_string()
                      << " agree=" << (direct == closed ? "true" : "false") << "\n";
        }
        return kExitPass;
    }
    throw std::invalid_argument("unknown construction family: " + family);
}

int cmd_formula(const std::string& name, const std::vector<long long>& args) {
    using Args = const std::vector<long long>&;
    struct Entry {
        std::size_t arity;
        std::function<linf::FormulaResult(Args)> eval;
    };
    auto plain = [](linf::Count v) { return linf::FormulaResult{std::move(v), "-"}; };
    const std::map<std::string, Entry> table = {
        {"binom", {2, [&](Args a) { return plain(linf::binom(a[0], a[1])); }}},
        {"ex-edges-matching",
         {2, [](Args a) { return linf::ex_edges_matching_detail(a[0], a[1]); }}},
        {"ex-cliques-matching",
         {3, [](Args a) { return linf::ex_cliques_matching_detail(a[0], a[1], a[2]); }}},
        {"ex-cliquestar-matching",
         {4, [](Args a) { return linf::ex_cliquestar_matching_detail(a[0], a[1], a[2], a[3]); }}},
        {"ex-bip-biclique-matching",
         {4,
          [](Args a) { return linf::ex_bip_biclique_matching_detail(a[0], a[1], a[2], a[3]); }}},
        {"ex-edges-linforest",
         {2, [](Args a) { return linf::ex_edges_linforest_detail(a[0], a[1]); }}},
        {"ex-cliques-linforest",
         {3, [](Args a) { return linf::ex_cliques_linforest_detail(a[0], a[1], a[2]); }}},
        {"ex-cliquestar-linforest",
         {4,
          [](Args a) { return linf::ex_cliquestar_linforest_detail(a[0], a[1], a[2], a[3]); }}},
        {"ex-bip-biclique-linforest",
         {4,
          [](Args a) { return linf::ex_bip_biclique_linforest_detail(a[0], a[1], a[2], a[3]); }}},
        {"count-H-cliques",
         {4, [&](Args a) { return plain(linf::count_H_cliques_closed(a[0], a[1], a[2], a[3])); }}},
        {"count-H-cliquestars",
         {5, [&](Args a) {
              return plain(linf::count_H_cliquestars_closed(a[0], a[1], a[2], a[3], a[4]));
          }}},
        {"f-bip", {5, [&](Args a) {
                       return plain(linf::f_bip_closed(a[0], a[1], a[2], a[3], a[4]));
                   }}},
    };
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown formula: " + name);
    if (args.size() != it->second.arity) {
        throw std::invalid_argument("formula " + name + " takes " +
                                    std::to_string(it->second.arity) + " integer arguments");
    }
    linf::FormulaResult result = it->second.eval(args);
    std::cout << result.value.to_string() << " branch=" << result.branch << "\n";
    return kExitPass;
}

int cmd_verify(const std::string& theorem, const linf::VerifySweep& sweep,
               const linf::SearchOptions& opts, const std::string& out_path) {
    auto id = linf::theorem_from_name(theorem);
    if (!id) throw std::invalid_argument("unknown theorem: " + theorem);
    if (sweep.n_max < sweep.n_min) throw std::invalid_argument("empty n range");
    if (sweep.k_max >= 0 && sweep.k_max > linf::max_k_for(*id, sweep.n_max)) {
        throw std::invalid_argument("k range exceeds the theorem's limit for n-max (" +
                                    std::to_string(linf::max_k_for(*id, sweep.n_max)) + ")");
    }
    bool bip = *id == linf::TheoremId::bip_biclique_linforest ||
               *id == linf::TheoremId::bip_biclique_matching;
    int cap = bip ? opts.bipartite_cap
                  : (sweep.mode == linf::SearchMode::full ? opts.full_cap : opts.shifted_cap);
    if (sweep.n_max > cap) {
        throw linf::CapExceededError("n-max " + std::to_string(sweep.n_max) +
                                     " exceeds the search cap " + std::to_string(cap));
    }

    linf::VerificationReport report;
    report.mode = linf::mode_name(sweep.mode);
    std::ostringstream ranges;
    ranges << "theorem=" << theorem << " n=" << sweep.n_min << ".." << sweep.n_max
           << " k=" << sweep.k_min << "..";
    if (sweep.k_max >= 0) ranges << sweep.k_max;
    else ranges << "max";
    report.ranges = ranges.str();
    report.rows = linf::verify_theorem(*id, sweep, opts);

    if (out_path.empty() || out_path == "-") {
        linf::write_report_csv(std::cout, report);
    } else {
        std::ofstream os(out_path);
        if (!os) throw std::invalid_argument("cannot open output file: " + out_path);
        linf::write_report_csv(os, report);
    }
    std::cerr << "verify " << theorem << ": " << report.rows.size() << " rows, "
              << (report.pass() ? "all match" : "MISMATCH FOUND") << "\n";
    return report.pass() ? kExitPass : kExitMismatch;
}

int cmd_extremal(int n, int k, const std::string& pattern, int s, int t,
                 const std::string& mode_str, const linf::SearchOptions& opts) {
    auto mode = linf::mode_from_name(mode_str);
    if (!mode) throw std::invalid_argument("unknown mode: " + mode_str);
    linf::ExtremalRecord rec;
    if (pattern == "clique") {
        rec = linf::extremal_count(n, k, linf::PatternSpec::clique(s), *mode, opts);
    } else if (pattern == "clique-star") {
        rec = linf::extremal_count(n, k, linf::PatternSpec::clique_star(s, t), *mode, opts);
    } else if (pattern == "biclique") {
        if (*mode != linf::SearchMode::full) {
            throw std::invalid_argument("bipartite search supports only full mode");
        }
        rec = linf::extremal_count_bipartite(n, k, s, t, opts);
    } else {
        throw std::invalid_argument("unknown pattern: " + pattern);
    }
    std::cout << "theorem=" << rec.theorem << " n=" << rec.n << " k=" << rec.k << " s=" << rec.s
              << " t=" << rec.t << "\n";
    std::cout << "formula=" << rec.formula.to_string() << "\n";
    std::cout << "oracle=" << rec.oracle.to_string() << "\n";
    std::cout << "match=" << (rec.match ? "true" : "false") << "\n";
    std::cout << "witness=" << rec.witness_g6 << "\n";
    std::cout << "millis=" << rec.millis << "\n";
    return rec.match ? kExitPass : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact linear-forest Turán toolkit"};
    app.require_subcommand(1);

    // lf
    auto* lf = app.add_subcommand("lf", "max linear-forest edge count per graph6 line");
    std::vector<std::string> lf_files;
    lf->add_option("files", lf_files, "graph6 files (stdin when absent)");

    // shift
    auto* shift = app.add_subcommand("shift", "apply the Kelmans shift S_ij (or its closure)");
    std::vector<std::string> shift_files;
    int shift_i = 0, shift_j = 0;
    bool shift_fix = false;
    shift->add_option("--i", shift_i, "smaller label i");
    shift->add_option("--j", shift_j, "larger label j");
    shift->add_flag("--fixpoint", shift_fix, "iterate to the shifted fixpoint");
    shift->add_option("files", shift_files, "graph6 files (stdin when absent)");

    // count
    auto* count = app.add_subcommand("count", "count pattern copies per graph6 line");
    std::string count_kind;
    int count_s = 1, count_t = 0;
    std::vector<std::string> count_files;
    count->add_option("kind", count_kind, "clique | clique-star | biclique")->required();
    count->add_option("s", count_s, "clique side size")->required();
    count->add_option("t", count_t, "independent side size");
    count->add_option("files", count_files, "graph6 files (stdin when absent)");

    // construct
    auto* construct = app.add_subcommand("construct", "emit a named extremal construction");
    std::string family;
    int c_n = 0, c_k = 0, c_m = 0, c_kceil = 0, c_x = 0;
    bool c_check = false;
    construct->add_option("--family", family, "H | clique | dominating | bip-odd | bip-even | gstar")
        ->required();
    construct->add_option("--n", c_n, "vertex count / part size")->required();
    construct->add_option("--k", c_k, "linear-forest edge budget");
    construct->add_option("--m", c_m, "H clique size");
    construct->add_option("--kceil", c_kceil, "ceil((k-1)/2) for gstar");
    construct->add_option("--x", c_x, "|X1| for gstar");
    construct->add_flag("--check", c_check, "also print lf, counts and formula agreement");

    // formula
    auto* formula = app.add_subcommand("formula", "evaluate a closed-form expression");
    std::string formula_name;
    std::vector<long long> formula_args;
    formula->add_option("name", formula_name, "formula name (see README)")->required();
    formula->add_option("args", formula_args, "integer arguments");

    // verify
    auto* verify = app.add_subcommand("verify", "sweep a theorem: formula vs brute-force oracle");
    std::string v_theorem, v_mode = "full", v_out;
    linf::VerifySweep v_sweep;
    linf::SearchOptions v_opts;
    verify->add_option("theorem", v_theorem, "theorem id (see README)")->required();
    verify->add_option("--n-min", v_sweep.n_min, "smallest host size");
    verify->add_option("--n-max", v_sweep.n_max, "largest host size")->required();
    verify->add_option("--k-min", v_sweep.k_min, "smallest k");
    verify->add_option("--k-max", v_sweep.k_max, "largest k (default: theorem limit)");
    verify->add_option("--s", v_sweep.ss, "pattern sizes s");
    verify->add_option("--t", v_sweep.ts, "pattern sizes t");
    verify->add_option("--mode", v_mode, "full | shifted-only");
    verify->add_option("--out", v_out, "CSV output path (stdout when absent)");
    verify->add_option("--threads", v_opts.threads, "worker threads (LINF_THREADS, then hardware)");

    // extremal
    auto* extremal = app.add_subcommand("extremal", "one oracle query with witness");
    int e_n = 0, e_k = 0, e_s = 2, e_t = 0;
    std::string e_pattern = "clique", e_mode = "full";
    linf::SearchOptions e_opts;
    extremal->add_option("--n", e_n, "host size (part size for biclique)")->required();
    extremal->add_option("--k", e_k, "linear-forest edge budget")->required();
    extremal->add_option("--pattern", e_pattern, "clique | clique-star | biclique");
    extremal->add_option("--s", e_s, "pattern size s");
    extremal->add_option("--t", e_t, "pattern size t");
    extremal->add_option("--mode", e_mode, "full | shifted-only");
    extremal->add_option("--threads", e_opts.threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (lf->parsed()) return cmd_lf(lf_files);
        if (shift->parsed()) {
            if (!shift_fix && (shift_i <= 0 || shift_j <= 0)) {
                throw std::invalid_argument("shift needs --i and --j (or --fixpoint)");
            }
            return cmd_shift(shift_files, shift_i, shift_j, shift_fix);
        }
        if (count->parsed()) return cmd_count(count_kind, count_s, count_t, count_files);
        if (construct->parsed()) return cmd_construct(family, c_n, c_k, c_m, c_kceil, c_x, c_check);
        if (formula->parsed()) return cmd_formula(formula_name, formula_args);
        if (verify->parsed()) {
            auto mode = linf::mode_from_name(v_mode);
            if (!mode) throw std::invalid_argument("unknown mode: " + v_mode);
            v_sweep.mode = *mode;
            return cmd_verify(v_theorem, v_sweep, v_opts, v_out);
        }
        if (extremal->parsed()) return cmd_extremal(e_n, e_k, e_pattern, e_s, e_t, e_mode, e_opts);
    } catch (const linf::CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
