// mdet: exact invariants of reciprocal linear spaces and their
// hypergeometric systems.
//
// Exit codes: 0 success, 2 input or contract error, 3 verification failure.

#include "mdet/discriminant.hpp"
#include "mdet/errors.hpp"
#include "mdet/json_io.hpp"
#include "mdet/newton.hpp"
#include "mdet/reciprocal.hpp"
#include "mdet/rng.hpp"
#include "mdet/tropical.hpp"
#include "mdet/weyl.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <numeric>
#include <optional>
#include <string>

using namespace mdet;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitVerify = 3;

struct Options {
    std::uint64_t seed = 0;
    std::string format = "text";
    bool quiet = false;
};

void say(const Options& opt, const std::string& line) {
    if (!opt.quiet) std::cout << line << "\n";
}

std::string flat_label(Subset f) {
    std::string s = "{";
    auto e = subset_to_list(f);
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s + "}";
}

int cmd_analyze(const Options& opt, const std::string& matrix_file,
                const std::optional<std::string>& mult_file, int samples) {
    Matroid m(matrix_from_file(matrix_file));
    std::optional<MultiplicityMap> mult;
    if (mult_file) mult = multiplicities_from_file(*mult_file);
    FactorizationDescriptor desc = factorization_descriptor(m, mult, samples, opt.seed);
    if (opt.format == "json") {
        std::cout << analysis_to_json(m, desc) << "\n";
        return kExitOk;
    }
    say(opt, "ground set: " + std::to_string(m.n_elements()) + " elements, rank " +
                 std::to_string(m.full_rank()) + " (d = " + std::to_string(m.d()) + ")");
    say(opt, "components: " + std::to_string(m.n_components()));
    say(opt, "chi(q) = " + m.characteristic_polynomial().to_string("q"));
    say(opt, "mu = " + to_string(m.mobius_invariant()) +
                 ", beta = " + to_string(m.beta_invariant()));
    say(opt, "deg L^-1 = " + to_string(degree_lk(m, -1)) +
                 ", deg L^-2 = " + to_string(degree_lk(m, -2)));
    say(opt, "deg E_L = " + to_string(degree_el(m)));
    say(opt, "flats (" + std::to_string(desc.rows.size()) + " nonempty):");
    for (const FlatRow& row : desc.rows) {
        std::string line = "  " + flat_label(row.flat) + " rank " + std::to_string(row.rank);
        line += row.connected ? " connected" : " disconnected";
        if (row.defective.has_value())
            line += *row.defective ? (row.defective_certain ? " defective" : " defective?")
                                   : " hypersurface";
        if (row.degree.has_value()) line += " deg " + to_string(*row.degree);
        if (row.multiplicity.has_value()) line += " mult " + to_string(*row.multiplicity);
        if (row.conjectural) line += " (conjectural)";
        say(opt, line);
    }
    if (desc.degree_sum.has_value())
        say(opt, "degree sum " + to_string(*desc.degree_sum) + " vs deg E_L " +
                     to_string(desc.expected_degree) +
                     (desc.sum_matches.value_or(false) ? " (consistent)" : " (MISMATCH)"));
    if (desc.sum_matches.has_value() && !*desc.sum_matches) return kExitVerify;
    return kExitOk;
}

int cmd_hk_check(const Options& opt, const std::string& matrix_file,
                 const std::optional<std::string>& target_file, int samples) {
    QMat a = matrix_from_file(matrix_file);
    if (!target_file) {
        ColoopReduction red = reduce_coloops(a);
        if (red.removed != 0) {
            say(opt, "coloops " + flat_label(red.removed) +
                         " present: the dual is not a hypersurface in this ambient space");
            return kExitOk;
        }
        DefectivityResult res = is_dual_defective(a, samples, opt.seed);
        if (res.verdict == Defectivity::Hypersurface) {
            std::string wt = "witness t = (";
            for (std::size_t i = 0; i < res.witness_t.size(); ++i)
                wt += (i ? ", " : "") + to_string(res.witness_t[i]);
            wt += "), u = (";
            for (std::size_t i = 0; i < res.witness_u.size(); ++i)
                wt += (i ? ", " : "") + to_string(res.witness_u[i]);
            say(opt, "Hypersurface; " + wt + ")");
        } else {
            say(opt, "ProbablyDefective after " + std::to_string(res.samples_used) +
                         " samples (probabilistic verdict)");
        }
        return kExitOk;
    }
    SparsePoly target = poly_from_file(*target_file);
    QMat b = kernel_basis(a);
    Rng rng(opt.seed);
    int drawn = 0, attempts = samples * 1000;
    while (drawn < samples) {
        if (--attempts < 0) {
            std::cerr << "too many degenerate draws\n";
            return kExitInput;
        }
        std::vector<Rat> t = rng.next_vector(a.rows(), -100, 100);
        std::vector<Rat> u = rng.next_vector(b.cols(), -100, 100);
        HKSample s;
        try {
            s = horn_kapranov(a, b, t, u);
        } catch (const Error&) {
            continue;
        }
        ++drawn;
        Rat value = target.evaluate(s.z);
        if (value != 0) {
            std::string zs = "z = (";
            for (std::size_t i = 0; i < s.z.size(); ++i) zs += (i ? ", " : "") + to_string(s.z[i]);
            say(opt, "nonzero evaluation " + to_string(value) + " at " + zs + ")");
            return kExitVerify;
        }
    }
    say(opt, "all " + std::to_string(samples) + " samples vanish exactly on the target");
    return kExitOk;
}

int cmd_operators(const Options& opt, const std::string& matrix_file, const std::string& u_csv) {
    Matroid m(matrix_from_file(matrix_file));
    std::vector<Rat> u = parse_rational_list(u_csv);
    if (u.size() != static_cast<std::size_t>(m.n_elements())) {
        std::cerr << "need " << m.n_elements() << " exponents, got " << u.size() << "\n";
        return kExitInput;
    }
    Parameters prm = parameters_from_u(u, m.d());
    MatroidSystem sys = build_system(m, prm);
    if (opt.format == "json") {
        std::cout << "{\n  \"s\": \"" << to_string(prm.s) << "\",\n  \"H\": "
                  << weyl_op_to_json(sys.euler) << ",\n  \"P\": [";
        for (std::size_t i = 0; i < sys.toral.size(); ++i)
            std::cout << (i ? ",\n" : "\n") << weyl_op_to_json(sys.toral[i]);
        std::cout << "],\n  \"Q\": [";
        for (std::size_t i = 0; i < sys.circuit.size(); ++i)
            std::cout << (i ? ",\n" : "\n") << weyl_op_to_json(sys.circuit[i]);
        std::cout << "]\n}\n";
        return kExitOk;
    }
    say(opt, "s = " + to_string(prm.s));
    say(opt, "H  = " + sys.euler.to_string());
    for (std::size_t i = 0; i < sys.toral.size(); ++i)
        say(opt, "P" + std::to_string(i) + " = " + sys.toral[i].to_string());
    for (std::size_t i = 0; i < sys.circuit.size(); ++i)
        say(opt, "Q" + std::to_string(i) + " = " + sys.circuit[i].to_string());
    return kExitOk;
}

int cmd_annihilate(const Options& opt, int n, const std::string& u_csv, int order) {
    std::vector<Rat> u = parse_rational_list(u_csv);
    if (u.size() != static_cast<std::size_t>(n + 1)) {
        std::cerr << "need " << (n + 1) << " exponents, got " << u.size() << "\n";
        return kExitInput;
    }
    Parameters prm = parameters_from_u(u, n - 1);
    Matroid m(banana_matrix(n));
    MatroidSystem sys = build_system(m, prm);
    std::vector<WeylOp> ops;
    ops.push_back(sys.euler);
    for (const WeylOp& p : sys.toral) ops.push_back(p);
    for (const WeylOp& q : sys.circuit) ops.push_back(q);
    GenSeries g = lauricella_series(n, prm, order);
    AnnihilationReport rep = annihilation_check(ops, g, order);
    say(opt, "verified to order " + std::to_string(rep.min_verified_order) + " (series truncated at " +
                 std::to_string(order) + "); zero trustworthy residual");
    for (std::size_t i = 0; i < rep.ops.size(); ++i)
        say(opt, "  operator " + std::to_string(i) + ": reach " +
                     std::to_string(rep.ops[i].max_shift) + ", verified order " +
                     std::to_string(rep.ops[i].verified_order) + ", boundary terms " +
                     std::to_string(rep.ops[i].residual_terms));
    return kExitOk;
}

int cmd_newton(const Options& opt, const std::string& matrix_file, const std::string& mult_file,
               int samples) {
    Matroid m(matrix_from_file(matrix_file));
    MultiplicityMap mult = multiplicities_from_file(mult_file);
    FactorizationDescriptor desc = factorization_descriptor(m, mult, samples, opt.seed);
    SimplexSum sum = build_newton_el(m, desc);
    LatticePolytope p = vertices(sum);
    bool gp = is_generalized_permutohedron(p);
    if (opt.format == "json") {
        std::cout << polytope_to_json(p, sum.total_degree()) << "\n";
    } else {
        say(opt, std::to_string(p.vertices.size()) + " vertices, total degree " +
                     to_string(sum.total_degree()));
        for (const auto& v : p.vertices) {
            std::string line = "  (";
            for (std::size_t i = 0; i < v.size(); ++i) line += (i ? ", " : "") + to_string(v[i]);
            say(opt, line + ")");
        }
    }
    say(opt, std::string("generalized permutohedron: ") + (gp ? "true" : "false"));
    return kExitOk;
}

int cmd_conjectures(const Options& opt, int n, int d, int trials, int samples) {
    HarnessReport rep = conjecture_harness(n, d, trials, opt.seed, samples);
    if (opt.format == "json") {
        std::cout << harness_report_to_json(rep) << "\n";
        return kExitOk;
    }
    say(opt, "trial  kind            components  coloops  verdict             agrees");
    for (const HarnessRow& row : rep.rows) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%-6s %-15s %-11d %-8s %-19s %s",
                      row.candidate ? "CAND" : "", row.kind.c_str(), row.components,
                      row.has_coloops ? "yes" : "no", row.verdict.c_str(),
                      row.agrees ? "yes" : "NO");
        say(opt, buf);
    }
    say(opt, "agreements: " + std::to_string(rep.agreements) + "/" +
                 std::to_string(rep.rows.size()) + ", candidates: " +
                 std::to_string(rep.candidates) + " (conjectural; never asserted)");
    return kExitOk;
}

int cmd_uniform_degree(const Options& opt, int n, int d) {
    if (d < 1 || d >= n) {
        std::cerr << "need 1 <= d < n\n";
        return kExitInput;
    }
    UniformDegree ud = uniform_discriminant_degree(n, d);
    say(opt, "computed " + to_string(ud.computed) + ", closed form " +
                 to_string(ud.closed_form));
    return ud.computed == ud.closed_form ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of reciprocal linear spaces: matroid data, dual "
                 "varieties, tropical degrees, Newton polytopes, hypergeometric operators"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    Options opt;
    app.add_option("--seed", opt.seed, "random seed (default 0)");
    app.add_option("--format", opt.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--quiet", opt.quiet, "suppress text output");

    std::string matrix_file, poly_file, mult_file, u_csv;
    int samples = 32, order = 8, n = 3, d = 2, trials = 100;

    CLI::App* analyze = app.add_subcommand("analyze", "full invariant report for a matrix");
    analyze->add_option("matrix", matrix_file, "matrix file (JSON or CSV)")->required();
    std::string analyze_mult;
    analyze->add_option("--multiplicities", analyze_mult, "multiplicity JSON file");
    analyze->add_option("--samples", samples, "defectivity samples per flat");

    CLI::App* hk = app.add_subcommand("hk-check",
                                      "dual-variety samples: defectivity verdict or exact "
                                      "evaluation against a target polynomial");
    hk->add_option("matrix", matrix_file, "matrix file")->required();
    std::string hk_target;
    hk->add_option("--target", hk_target, "polynomial JSON file");
    hk->add_option("--samples", samples, "number of samples");

    CLI::App* ops = app.add_subcommand("operators", "emit the annihilating operators");
    ops->add_option("matrix", matrix_file, "matrix file")->required();
    ops->add_option("--u", u_csv, "comma-separated exponents u_0..u_n")->required();

    CLI::App* ann = app.add_subcommand("annihilate",
                                       "verify annihilation of the hypergeometric series "
                                       "for the n-edge banana family");
    ann->add_option("n", n, "number of edges")->required();
    ann->add_option("--u", u_csv, "comma-separated exponents u_0..u_n")->required();
    ann->add_option("--order", order, "series truncation order");

    CLI::App* newt = app.add_subcommand("newton", "Newton polytope from multiplicities");
    newt->add_option("matrix", matrix_file, "matrix file")->required();
    newt->add_option("--multiplicities", mult_file, "multiplicity JSON file")->required();
    newt->add_option("--samples", samples, "defectivity samples per flat");

    CLI::App* conj = app.add_subcommand("conjectures",
                                        "connectivity vs dual defectivity experiment");
    conj->add_option("--n", n, "ambient coordinate count minus one")->required();
    conj->add_option("--d", d, "dimension")->required();
    conj->add_option("--trials", trials, "number of random instances");
    conj->add_option("--samples", samples, "defectivity samples per instance");

    CLI::App* ud = app.add_subcommand("uniform-degree",
                                      "uniform-matroid discriminant degree, computed vs "
                                      "closed form");
    ud->add_option("--n", n, "ambient coordinate count minus one")->required();
    ud->add_option("--d", d, "dimension")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed())
            return cmd_analyze(opt, matrix_file,
                               analyze_mult.empty() ? std::nullopt
                                                    : std::optional<std::string>(analyze_mult),
                               samples);
        if (hk->parsed())
            return cmd_hk_check(opt, matrix_file,
                                hk_target.empty() ? std::nullopt
                                                  : std::optional<std::string>(hk_target),
                                samples);
        if (ops->parsed()) return cmd_operators(opt, matrix_file, u_csv);
        if (ann->parsed()) return cmd_annihilate(opt, n, u_csv, order);
        if (newt->parsed()) return cmd_newton(opt, matrix_file, mult_file, samples);
        if (conj->parsed()) return cmd_conjectures(opt, n, d, trials, samples);
        if (ud->parsed()) return cmd_uniform_degree(opt, n, d);
    } catch (const AnnihilationFailure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerify;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
