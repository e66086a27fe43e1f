#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xorclique/bounds.hpp"
#include "xorclique/constructions.hpp"
#include "xorclique/errors.hpp"
#include "xorclique/family.hpp"
#include "xorclique/field.hpp"
#include "xorclique/graph.hpp"
#include "xorclique/json_io.hpp"
#include "xorclique/latin.hpp"
#include "xorclique/solve.hpp"

namespace {

using namespace xorclique;

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) raise("IoError", "cannot open " + path + " for writing");
    out << text;
}

std::string read_text(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) raise("IoError", "cannot open " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

// "500ms", "60s", "2m", or a bare number of seconds.
double parse_time_limit_ms(const std::string& text) {
    double scale = 1000;
    std::string num = text;
    if (text.size() > 2 && text.substr(text.size() - 2) == "ms") {
        scale = 1;
        num = text.substr(0, text.size() - 2);
    } else if (!text.empty() && text.back() == 's') {
        num = text.substr(0, text.size() - 1);
    } else if (!text.empty() && text.back() == 'm') {
        scale = 60000;
        num = text.substr(0, text.size() - 1);
    }
    size_t used = 0;
    double val = 0;
    try {
        val = std::stod(num, &used);
    } catch (const std::exception&) {
        raise("BadParams", "cannot parse time limit: " + text);
    }
    if (used != num.size() || val < 0) {
        raise("BadParams", "cannot parse time limit: " + text);
    }
    return val * scale;
}

long long env_vertex_cap() {
    const char* s = std::getenv("XORCLIQUE_VERTEX_CAP");
    if (!s || !*s) return kDefaultVertexCap;
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end == s || *end != '\0' || v < 1) {
        raise("BadParams", "XORCLIQUE_VERTEX_CAP must be a positive integer");
    }
    return v;
}

struct ConstructArgs {
    std::string method;
    long long k = -1, p = -1, l = -1, N = -1;
    std::string mols_file;
    std::string out = "-";
};

void need(bool present, const std::string& flag, const std::string& method) {
    if (!present) raise("MissingParam", flag + " is required for method " + method);
}

int cmd_construct(const ConstructArgs& a) {
    SetFamily fam;
    if (a.method == "trivial") {
        need(a.k > 0, "--k", a.method);
        need(a.N >= 0, "--N", a.method);
        fam = trivial_construction({static_cast<int>(a.k), a.N});
    } else if (a.method == "affine") {
        need(a.p > 0, "--p", a.method);
        fam = affine_construction(static_cast<int>(a.p));
    } else if (a.method == "stacked") {
        need(a.p > 0, "--p", a.method);
        need(a.l > 0, "--l", a.method);
        fam = stacked_affine(static_cast<int>(a.p), static_cast<int>(a.l));
    } else if (a.method == "bign") {
        need(a.p > 0, "--p", a.method);
        need(a.N >= 0, "--N", a.method);
        fam = big_n_construction(static_cast<int>(a.p), a.N);
    } else if (a.method == "weighted") {
        need(a.k > 0, "--k", a.method);
        need(a.p > 0, "--p", a.method);
        fam = weighted_pk_construction(static_cast<int>(a.k), static_cast<int>(a.p));
    } else if (a.method == "latin") {
        need(a.k > 0, "--k", a.method);
        std::vector<MolsSquare> squares;
        if (!a.mols_file.empty()) {
            std::istringstream in(read_text(a.mols_file));
            squares = squares_from_text(in);
        } else {
            squares = mols_from_field(field_new(static_cast<int>(a.k)));
        }
        fam = latin_family_from_mols(squares, static_cast<int>(a.k),
                                     /*allow_truncate=*/true);
    } else if (a.method == "best") {
        need(a.k > 0, "--k", a.method);
        need(a.N >= 0, "--N", a.method);
        if (a.N < a.k) raise("BadParams", "N must be at least k");
        fam = *best_known_lower(static_cast<int>(a.k), a.N).witness;
    } else {
        raise("BadParams", "unknown method " + a.method);
    }
    if (a.N > fam.params.N) fam = embed(fam, a.N);
    write_text(a.out, family_to_json(fam).dump(2) + "\n");
    return 0;
}

int cmd_verify(const std::string& in_path) {
    SetFamily fam = family_from_json(parse_json(read_text(in_path)));
    VerificationReport rep = verify_semiintersecting(fam);
    std::cout << verification_to_json(rep).dump(2) << "\n";
    return rep.valid ? 0 : 1;
}

int cmd_bounds(int k, long long N, long long threshold) {
    if (k < 1 || N < k) raise("BadParams", "need 1 <= k <= N");
    ReportOptions opts;
    opts.ramsey_threshold = threshold;
    opts.include_witness = false;
    BoundReport rep = report(k, N, opts);
    std::cout << bound_report_to_json(rep).dump(2) << "\n";
    if (!rep.consistent) {
        std::cerr << "inconsistent report: lower exceeds an upper bound\n";
        return 1;
    }
    return 0;
}

struct SolveArgs {
    long long k = 0, N = 0;
    std::string time_limit;
    int threads = 1;
    std::string export_dimacs;
    long long vertex_cap = -1;  // -1 = env or default
    long long threshold = 924;
    bool force = false;
};

int cmd_solve(const SolveArgs& a) {
    if (a.k < 1 || a.N < a.k) raise("BadParams", "need 1 <= k <= N");
    if (a.k > 1000000) raise("TooLarge", "k beyond any solvable or boundable range");
    SolveOptions opts;
    if (!a.time_limit.empty()) opts.time_limit_ms = parse_time_limit_ms(a.time_limit);
    opts.thread_count = a.threads;
    opts.vertex_cap = a.vertex_cap > 0 ? a.vertex_cap : env_vertex_cap();
    opts.ramsey_threshold = a.threshold;
    opts.force_solver = a.force;

    if (!a.export_dimacs.empty()) {
        if (a.N > opts.vertex_cap) raise("TooLarge", "graph exceeds the vertex cap");
        XorGraph g = build_xor_product(static_cast<int>(a.N), static_cast<int>(a.k),
                                       opts.vertex_cap);
        std::ofstream out(a.export_dimacs);
        if (!out) raise("IoError", "cannot open " + a.export_dimacs + " for writing");
        export_dimacs(g.adj, out);
    }

    SolveOutcome outcome = solve_f(static_cast<int>(a.k), a.N, opts);
    std::cout << solve_outcome_to_json(outcome).dump(2) << "\n";
    if (!outcome.bounds.consistent) {
        std::cerr << "inconsistent report: lower exceeds an upper bound\n";
        return 1;
    }
    return 0;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

int cmd_table(int k_max, long long n_max, const std::string& out_path,
              long long threshold) {
    if (k_max < 1 || n_max < 1) raise("BadParams", "need positive --k-max and --N-max");
    ReportOptions opts;
    opts.ramsey_threshold = threshold;
    opts.include_witness = false;
    std::ostringstream csv;
    csv << "k,N,lower,lower_provenance,upper_min,upper_rule,exact\n";
    for (int k = 1; k <= k_max; ++k) {
        for (long long N = k; N <= n_max; ++N) {
            BoundReport rep = report(k, N, opts);
            if (!rep.consistent) {
                std::cerr << "inconsistent report at k=" << k << " N=" << N << "\n";
                return 1;
            }
            const UpperEntry& mu = rep.min_upper();
            csv << k << ',' << N << ',' << rep.lower << ','
                << csv_quote(rep.lower_provenance) << ',' << mu.value.str() << ','
                << mu.rule << ',';
            if (rep.exact) csv << *rep.exact;
            csv << '\n';
        }
    }
    write_text(out_path, csv.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"semiintersecting set families: construction, verification, bounds, "
                 "and exact clique search on the Xor product of two Kneser graphs"};
    app.require_subcommand(1);

    ConstructArgs ca;
    CLI::App* construct = app.add_subcommand(
        "construct", "build a family and write it as JSON");
    construct->add_option("--method", ca.method, "one of trivial|affine|stacked|bign|weighted|latin|best")
        ->required();
    construct->add_option("--k", ca.k, "set size per side");
    construct->add_option("--p", ca.p, "prime power plane order");
    construct->add_option("--l", ca.l, "plane copies (stacked)");
    construct->add_option("--N", ca.N, "universe size per side");
    construct->add_option("--mols-file", ca.mols_file, "text file of Latin squares");
    construct->add_option("--out", ca.out, "output path, - for stdout");

    std::string verify_in = "-";
    CLI::App* verify = app.add_subcommand(
        "verify", "check the semiintersecting property of a family JSON");
    verify->add_option("--in", verify_in, "input path, - for stdin");

    long long bk = 0, bN = 0, bthreshold = xorclique::default_f2n_threshold();
    CLI::App* bounds = app.add_subcommand("bounds", "report lower/upper bounds on f(k,N)");
    bounds->add_option("--k", bk)->required();
    bounds->add_option("--N", bN)->required();
    bounds->add_option("--ramsey-threshold", bthreshold,
                       "stand-in for R(7,7) in the k=2 large-N bound");

    SolveArgs sa;
    sa.threshold = bthreshold;
    CLI::App* solve = app.add_subcommand("solve", "bracket or certify f(k,N) exactly");
    solve->add_option("--k", sa.k)->required();
    solve->add_option("--N", sa.N)->required();
    solve->add_option("--time-limit", sa.time_limit, "e.g. 500ms, 60s, 2m; bare = seconds");
    solve->add_option("--threads", sa.threads, "solver threads");
    solve->add_option("--export-dimacs", sa.export_dimacs, "write the graph before solving");
    solve->add_option("--vertex-cap", sa.vertex_cap, "max Xor-graph vertices");
    solve->add_option("--ramsey-threshold", sa.threshold);
    solve->add_flag("--force", sa.force, "run the search even when bounds already meet");

    int tk_max = 0;
    long long tn_max = 0, tthreshold = xorclique::default_f2n_threshold();
    std::string tout = "-";
    CLI::App* table = app.add_subcommand("table", "CSV sweep of bound reports");
    table->add_option("--k-max", tk_max)->required();
    table->add_option("--N-max", tn_max)->required();
    table->add_option("--out-csv", tout, "output path, - for stdout");
    table->add_option("--ramsey-threshold", tthreshold);

    int rc = 0;
    construct->callback([&]() { rc = cmd_construct(ca); });
    verify->callback([&]() { rc = cmd_verify(verify_in); });
    bounds->callback([&]() { rc = cmd_bounds(static_cast<int>(bk), bN, bthreshold); });
    solve->callback([&]() { rc = cmd_solve(sa); });
    table->callback([&]() { rc = cmd_table(tk_max, tn_max, tout, tthreshold); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const xorclique::Error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == "BadInput" ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return rc;
}
