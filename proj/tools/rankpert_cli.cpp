// Command-line front door: read matrices/polynomials as JSON, dispatch to the
// library, and emit a machine-readable report on stdout (human logs on
// stderr).  Exit codes: 0 success/feasible, 1 infeasible or failed claim,
// 2 input error, 3 internal verification failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "rankpert/rankpert.hpp"

using namespace rankpert;

namespace {

constexpr int kSchemaVersion = 1;

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open \"" + path + "\"");
    return Json::parse(in);
}

Json envelope(const std::string& subcommand, const FieldSpec& field, std::size_t n) {
    return Json{{"schema_version", kSchemaVersion},
                {"subcommand", subcommand},
                {"field", field.str()},
                {"n", n}};
}

void emit(const Json& report, const std::string& out_path) {
    std::string text = report.dump(2) + "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write \"" + out_path + "\"");
        out << text;
    }
    std::cout << text;
}

struct Options {
    std::string matrix_path;
    std::string poly_path;
    std::string perturbation_path;
    std::string field_spec;
    std::string out_path;
    std::uint64_t rank_m = 0;
    bool rank_given = false;
    std::uint64_t seed = 0;
    std::uint64_t dim_n = 0;
    std::uint64_t sample = 0;
    std::uint64_t max_candidates = EnumerationBudget{}.max_candidates;
};

std::optional<FieldSpec> field_override(const Options& opt) {
    if (opt.field_spec.empty()) return std::nullopt;
    return FieldSpec::parse(opt.field_spec);
}

Mat load_matrix(const Options& opt, const std::string& path) {
    return mat_from_json(read_json_file(path), field_override(opt));
}

Poly load_poly(const Options& opt, const Mat& a) {
    if (opt.poly_path.empty()) throw std::invalid_argument("--poly is required");
    Poly q = poly_from_json(read_json_file(opt.poly_path), a.field());
    if (!q.is_monic())
        throw std::invalid_argument("polynomial must be monic (leading coefficient 1 included)");
    return q;
}

int run_invariants(const Options& opt) {
    Mat a = load_matrix(opt, opt.matrix_path);
    InvariantFactors inv = smith_invariant_factors(a);
    Json rep = envelope("invariants", a.field(), a.rows());
    rep["invariant_factors"] = invariant_factors_to_json(inv);
    emit(rep, opt.out_path);
    return 0;
}

int run_rcf(const Options& opt) {
    Mat a = load_matrix(opt, opt.matrix_path);
    RcfDecomposition rcf = rcf_transform(a);
    Json rep = envelope("rcf", a.field(), a.rows());
    rep["R"] = mat_to_json(rcf.R);
    rep["S"] = mat_to_json(rcf.S);
    rep["invariant_factors"] = invariant_factors_to_json(rcf.inv);
    emit(rep, opt.out_path);
    return 0;
}

int run_jordan(const Options& opt) {
    Mat a = load_matrix(opt, opt.matrix_path);
    InvariantFactors inv = smith_invariant_factors(a);
    JordanData jd = inv.count() == 0
                        ? JordanData{{}, true}
                        : jordan_from_invariants(inv, factor_irreducible(inv.factors.back()));
    if (!jd.complete)
        std::cerr << "note: factorization over Q is incomplete; entries cover rational roots only\n";
    Json rep = envelope("jordan", a.field(), a.rows());
    rep["jordan"] = jordan_to_json(jd);
    emit(rep, opt.out_path);
    return 0;
}

int run_feasible(const Options& opt) {
    Mat a = load_matrix(opt, opt.matrix_path);
    Poly q = load_poly(opt, a);
    FeasibilityCertificate cert = check_feasible(a, q, opt.rank_m);
    Json rep = envelope("feasible", a.field(), a.rows());
    rep["certificate"] = certificate_to_json(cert);
    emit(rep, opt.out_path);
    return cert.feasible ? 0 : 1;
}

int run_construct(const Options& opt) {
    Mat a = load_matrix(opt, opt.matrix_path);
    Poly q = load_poly(opt, a);
    Json rep = envelope("construct", a.field(), a.rows());
    try {
        Perturbation p = construct(a, q, opt.rank_m);
        rep["perturbation"] = Json{{"B", mat_to_json(p.B)},
                                   {"rank", p.rank_B},
                                   {"altered_columns_rcf", p.altered_columns_rcf},
                                   {"achieved_charpoly", poly_to_json(p.achieved_charpoly)}};
        rep["verification"] = verify_report_to_json(verify_perturbation(a, p.B, q, opt.rank_m));
        emit(rep, opt.out_path);
        return 0;
    } catch (const infeasible_error& e) {
        rep["certificate"] = certificate_to_json(e.certificate);
        emit(rep, opt.out_path);
        return 1;
    }
}

int run_verify(const Options& opt) {
    Mat a = load_matrix(opt, opt.matrix_path);
    if (opt.perturbation_path.empty())
        throw std::invalid_argument("--perturbation is required for verify");
    Mat b = load_matrix(opt, opt.perturbation_path);
    Poly q = load_poly(opt, a);
    VerifyReport vr = verify_perturbation(a, b, q, opt.rank_m);
    Json rep = envelope("verify", a.field(), a.rows());
    rep["verification"] = verify_report_to_json(vr);
    emit(rep, opt.out_path);
    return vr.pass() ? 0 : 1;
}

int run_enumerate(const Options& opt) {
    EnumerationBudget budget{opt.max_candidates, opt.seed};
    Json checks = Json::array();
    bool all_equal = true;
    std::uint64_t checked = 0;

    auto check_one = [&](const Mat& a) {
        std::vector<std::size_t> ms;
        if (opt.rank_given)
            ms.push_back(opt.rank_m);
        else
            for (std::size_t m = 0; m <= a.rows(); ++m) ms.push_back(m);
        for (std::size_t m : ms) {
            TheoremReport tr = theorem_check(a, m, budget);
            ++checked;
            if (!tr.equal) {
                all_equal = false;
                Json cx = theorem_report_to_json(tr);
                cx["A"] = mat_to_json(a);
                checks.push_back(std::move(cx));
            }
        }
    };

    FieldSpec field = FieldSpec::rationals();  // replaced below
    std::size_t n = 0;
    if (!opt.matrix_path.empty()) {
        Mat a = load_matrix(opt, opt.matrix_path);
        field = a.field();
        n = a.rows();
        check_one(a);
    } else {
        if (opt.field_spec.empty() || opt.dim_n == 0)
            throw std::invalid_argument("enumerate needs --matrix, or --field with --n");
        field = FieldSpec::parse(opt.field_spec);
        n = opt.dim_n;
        if (opt.sample > 0) {
            Rng rng(opt.seed);
            for (std::uint64_t i = 0; i < opt.sample; ++i) check_one(random_mat(field, n, n, rng));
        } else {
            enumerate_all_matrices(field, n, budget, check_one);
        }
    }

    Json rep = envelope("enumerate", field, n);
    rep["checked"] = checked;
    rep["all_equal"] = all_equal;
    rep["seed"] = opt.seed;
    rep["failures"] = std::move(checks);
    emit(rep, opt.out_path);
    return all_equal ? 0 : 3;
}

int run_selftest(const Options& opt) {
    Rng rng(opt.seed);
    const FieldSpec fields[] = {FieldSpec::rationals(), FieldSpec::prime_field(5)};

    std::uint64_t telescoping_pass = 0, rank_bound_pass = 0, minor_pass = 0;
    const std::uint64_t runs = 200;
    for (std::uint64_t i = 0; i < runs; ++i) {
        const FieldSpec& f = fields[i % 2];
        std::size_t n = 1 + rng() % 4;
        std::size_t k = 1 + rng() % 4;
        Mat a = random_mat(f, n, n, rng);
        Mat b = random_mat(f, n, n, rng);
        if (telescoping_check(a, b, k)) ++telescoping_pass;
        auto [lhs, rhs] = rank_bound_check(a, random_mat_rank_le(f, n, rng() % (n + 1), rng), k);
        if (lhs <= rhs) ++rank_bound_pass;
    }
    for (std::uint64_t i = 0; i < runs; ++i) {
        const FieldSpec& f = i % 2 ? FieldSpec::prime_field(7) : FieldSpec::rationals();
        std::size_t n = 1 + rng() % 4;
        if (charpoly_minor_crosscheck(random_mat(f, n, n, rng, -3, 3))) ++minor_pass;
    }

    bool ok = telescoping_pass == runs && rank_bound_pass == runs && minor_pass == runs;
    Json rep = envelope("selftest", FieldSpec::rationals(), 0);
    rep["seed"] = opt.seed;
    rep["telescoping"] = Json{{"runs", runs}, {"passed", telescoping_pass}};
    rep["rank_bound"] = Json{{"runs", runs}, {"passed", rank_bound_pass}};
    rep["minor_crosscheck"] = Json{{"runs", runs}, {"passed", minor_pass}};
    rep["pass"] = ok;
    emit(rep, opt.out_path);
    return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rank-bounded perturbations of the characteristic polynomial"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool needs_matrix, bool needs_poly, bool needs_rank) {
        auto* m = sub->add_option("--matrix", opt.matrix_path, "matrix JSON file");
        if (needs_matrix) m->required();
        if (needs_poly) sub->add_option("--poly", opt.poly_path, "polynomial JSON file")->required();
        auto* r = sub->add_option("--rank", opt.rank_m, "rank bound m");
        if (needs_rank) r->required();
        sub->add_option("--field", opt.field_spec, "field override, e.g. Q or GF(7)");
        sub->add_option("--out", opt.out_path, "also write the report to this path");
        sub->final_callback([&opt, r]() { opt.rank_given = r->count() > 0; });
    };

    CLI::App* invariants = app.add_subcommand("invariants", "invariant factor chain of xI - A");
    add_common(invariants, true, false, false);
    CLI::App* rcf = app.add_subcommand("rcf", "rational canonical form R and basis S");
    add_common(rcf, true, false, false);
    CLI::App* jordan = app.add_subcommand("jordan", "Jordan block data per irreducible factor");
    add_common(jordan, true, false, false);
    CLI::App* feasible = app.add_subcommand("feasible", "decide achievability of q at rank m");
    add_common(feasible, true, true, true);
    CLI::App* construct_cmd = app.add_subcommand("construct", "build B with charpoly(A+B) = q");
    add_common(construct_cmd, true, true, true);
    CLI::App* verify = app.add_subcommand("verify", "re-check a claimed perturbation");
    add_common(verify, true, true, true);
    verify->add_option("--perturbation", opt.perturbation_path, "matrix JSON file with B")
        ->required();

    CLI::App* enumerate = app.add_subcommand("enumerate", "brute-force theorem check");
    add_common(enumerate, false, false, false);
    enumerate->add_option("--n", opt.dim_n, "dimension for the matrix-free sweep");
    enumerate->add_option("--sample", opt.sample, "check this many random A instead of sweeping");
    enumerate->add_option("--seed", opt.seed, "seed for sampled modes");
    enumerate->add_option("--max-candidates", opt.max_candidates, "enumeration budget");

    CLI::App* selftest = app.add_subcommand("selftest", "identity and crosscheck batteries");
    selftest->add_option("--seed", opt.seed, "seed for the batteries");
    selftest->add_option("--out", opt.out_path, "also write the report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (invariants->parsed()) return run_invariants(opt);
        if (rcf->parsed()) return run_rcf(opt);
        if (jordan->parsed()) return run_jordan(opt);
        if (feasible->parsed()) return run_feasible(opt);
        if (construct_cmd->parsed()) return run_construct(opt);
        if (verify->parsed()) return run_verify(opt);
        if (enumerate->parsed()) return run_enumerate(opt);
        if (selftest->parsed()) return run_selftest(opt);
    } catch (const internal_check_error& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return 3;
    } catch (const budget_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
