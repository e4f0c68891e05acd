// bimat: command-line front end for the bimatroid library.
//
// Exit codes: 0 = success (verdicts, valid or not, are data); 1 = I/O or
// parse error; 2 = precondition violation; 3 = theorem-violation alarm
// (a proved statement failed on a valid instance, or two provably
// equivalent routes disagreed).

#include <algorithm>
#include <atomic>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "bimat/bimat.hpp"

namespace {

using namespace bimat;

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

json verdict_json(const Verdict& v) {
    return json{{"valid", v.valid}, {"witness", v.witness}};
}

// Instance sniffing shared by validate/convert/product/theorem: a matrix
// document, a relation document, or any of the four bimatroid views.
Bimatroid bimatroid_from_instance(const json& j) {
    if (j.contains("entries"))
        return matrix_json_is_fp(j) ? from_matrix(fpmatrix_from_json(j))
                                    : from_matrix(qmatrix_from_json(j));
    if (j.contains("pairs")) return from_relation(relation_from_json(j));
    return bimatroid_from_json(j);
}

std::string exp_str(const Exponent& e) {
    std::string s = "(";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(int(e[i]));
    }
    return s + ")";
}

int run_validate(const std::string& path) {
    Bimatroid b = bimatroid_from_instance(load_json_file(path));
    emit(verdict_json(validate_bimatroid(b)));
    return 0;
}

int run_from_matrix(const std::string& path) {
    json j = load_json_file(path);
    Bimatroid b = matrix_json_is_fp(j) ? from_matrix(fpmatrix_from_json(j))
                                       : from_matrix(qmatrix_from_json(j));
    emit(bimatroid_to_json(b));
    return 0;
}

int run_from_relation(const std::string& path) {
    emit(bimatroid_to_json(from_relation(relation_from_json(load_json_file(path)))));
    return 0;
}

int run_bond(const std::string& path, const std::vector<std::string>& basis_labels) {
    Matroid m = matroid_from_json(load_json_file(path));
    Mask b = 0;
    for (const auto& lbl : basis_labels) {
        int i = m.label_index(lbl);
        if (i < 0) throw precondition_error("bond: label not in ground set: " + lbl);
        b |= Mask{1} << i;
    }
    emit(bimatroid_to_json(bond(m, b)));
    return 0;
}

int run_convert(const std::string& path, const std::string& view,
                const std::string& orientation) {
    Bimatroid b = bimatroid_from_instance(load_json_file(path));
    if (view == "minors") {
        emit(bimatroid_to_json(b));
    } else if (view == "extended") {
        emit(bimatroid_extended_json(b));
    } else if (view == "rank-table") {
        emit(bimatroid_rank_table_json(b));
    } else {
        Orientation o =
            orientation == "horizontal" ? Orientation::horizontal : Orientation::vertical;
        emit(bimatroid_rectangles_json(b, o));
    }
    return 0;
}

int run_product(const std::string& pa, const std::string& pb) {
    Bimatroid a = bimatroid_from_instance(load_json_file(pa));
    Bimatroid b = bimatroid_from_instance(load_json_file(pb));
    emit(bimatroid_to_json(product(a, b)));
    return 0;
}

int run_frenk_check(const std::string& pa, const std::string& pb) {
    Bimatroid a = bimatroid_from_instance(load_json_file(pa));
    Bimatroid b = bimatroid_from_instance(load_json_file(pb));
    Matroid via_product = extended_matroid(product(a, b));
    Matroid via_formula = frenk_extended(a, b);
    bool agree = via_product == via_formula;
    emit(json{{"agree", agree},
              {"via_product", matroid_to_json(via_product)},
              {"via_formula", matroid_to_json(via_formula)}});
    return agree ? 0 : 3;
}

int run_cauchy_binet(const std::string& pa, const std::string& pb) {
    json ja = load_json_file(pa), jb = load_json_file(pb);
    bool fa = matrix_json_is_fp(ja), fb = matrix_json_is_fp(jb);
    if (fa != fb) throw precondition_error("cauchy-binet: matrices over different fields");
    CauchyBinetReport rep;
    if (fa) {
        FpMatrix a = fpmatrix_from_json(ja), b = fpmatrix_from_json(jb);
        rep = cauchy_binet_check(a, b);
    } else {
        rep = cauchy_binet_check(qmatrix_from_json(ja), qmatrix_from_json(jb));
    }
    emit(json{{"inclusion", rep.inclusion}, {"equality", rep.equality}});
    return rep.inclusion ? 0 : 3;
}

int run_morphism(const std::string& action, const std::string& path) {
    json j = load_json_file(path);
    if (action == "check") {
        // Report all three equivalent conditions instead of rejecting, so an
        // invalid map is data (exit 0) while a disagreement between provably
        // equivalent predicates is an alarm (exit 3).
        MorphismParts p = morphism_parts_from_json(j);
        bool r = is_morphism_rank(p.source, p.target, p.map);
        bool c = is_morphism_cocircuits(p.source, p.target, p.map);
        bool f = is_morphism_flats(p.source, p.target, p.map);
        bool agree = (r == c) && (c == f);
        emit(json{{"rank", r},
                  {"cocircuits", c},
                  {"flats", f},
                  {"agree", agree},
                  {"is_morphism", r}});
        return agree ? 0 : 3;
    }
    MatroidMorphism phi = morphism_from_json(j);
    if (action == "bases") {
        json arr = json::array();
        for (Mask t : bases_of_morphism(phi)) {
            json set = json::array();
            for (int i : mask_to_indices(t)) set.push_back(phi.source().ground()[i]);
            arr.push_back(set);
        }
        emit(json{{"rank", phi.source().rank()},
                  {"nullity", nullity(phi)},
                  {"counts", basis_counts(phi)},
                  {"bases", arr}});
        return 0;
    }
    // tilde
    Matroid t = tilde_matroid(phi);
    BasisCheck bc = validate_bases(t.bases(), t.n());
    emit(json{{"valid", bc.valid}, {"matroid", matroid_to_json(t)}});
    return bc.valid ? 0 : 3;
}

int run_poly(const std::string& kind, const std::string& path, int alpha,
             const std::string& z) {
    json j = load_json_file(path);
    MultiPoly p;
    if (kind == "regular-minor") {
        p = regular_minor_poly(bimatroid_from_instance(j));
    } else if (kind == "basis") {
        p = basis_generating_poly(matroid_from_json(j));
    } else if (kind == "independent") {
        p = independent_set_poly_homogenized(matroid_from_json(j), z);
    } else {  // weak-basis
        MatroidMorphism phi = morphism_from_json(j);
        p = weak_basis_poly(phi, alpha < 0 ? nullity(phi) : alpha);
    }
    emit(poly_to_json(p));
    return 0;
}

int run_check_lorentzian(const std::string& path) {
    MultiPoly p = poly_from_json(load_json_file(path));
    bool strict = is_strictly_lorentzian(p);
    bool lor = is_lorentzian(p);
    json witnesses = json::array();
    if (!lor) {
        for (const auto& [e, c] : p.terms())
            if (c.sign() < 0)
                witnesses.push_back("negative coefficient at " + exp_str(e));
        if (witnesses.empty()) {
            Verdict mc = is_m_convex(p.support());
            if (!mc.valid) witnesses.push_back("support not M-convex: " + mc.witness);
        }
        int d = p.total_degree();
        if (witnesses.empty() && d >= 2) {
            for (const Exponent& alpha : degree_simplex(p.n_vars(), d - 2)) {
                Inertia in = inertia(hessian_of_quadratic(partial_derivative(p, alpha)));
                if (in.n_plus > 1) {
                    witnesses.push_back("Hessian of derivative at " + exp_str(alpha) +
                                        " has " + std::to_string(in.n_plus) +
                                        " positive eigenvalues");
                    break;
                }
            }
        }
    }
    emit(json{{"strict", strict}, {"lorentzian", lor}, {"witnesses", witnesses}});
    return 0;
}

// ---- theorem suites ---------------------------------------------------

struct TheoremOptions {
    std::string which;
    std::string instance_path;
    int n_random = 0;
    uint64_t seed = 0;
    int max_rows = 4, max_cols = 4;
    bool dims_given = false;
    std::string field = "Fp";
    int alpha = -1;  // e-lorentzian only; <0 means both nul(phi) and r
    int jobs = 1;
};

bool morphism_theorem(const std::string& w) {
    return w == "C" || w == "c-pipeline" || w == "e-lorentzian";
}

std::vector<TheoremReport> reports_for_morphism(const TheoremOptions& opt,
                                                const MatroidMorphism& phi) {
    if (opt.which == "C") return {check_theorem_C(phi)};
    if (opt.which == "c-pipeline") return {check_thmC_pipeline(phi)};
    std::vector<int> alphas;
    if (opt.alpha >= 0) {
        alphas.push_back(opt.alpha);
    } else {
        int nul = nullity(phi), r = phi.source().rank();
        alphas.push_back(nul);
        if (r != nul) alphas.push_back(r);
    }
    std::vector<TheoremReport> out;
    for (int a : alphas) out.push_back(check_weak_basis_poly_lorentzian(phi, a));
    return out;
}

std::vector<TheoremReport> run_one_trial(const TheoremOptions& opt, int trial) {
    SplitMix64 rng = trial_rng(opt.seed, static_cast<uint64_t>(trial));
    // The morphism generator's size arguments default to |F| <= 6, |F'| <= 3
    // unless the user set --max-rows/--max-cols explicitly.
    int mr = opt.max_rows, mc = opt.max_cols;
    if (morphism_theorem(opt.which) && !opt.dims_given) {
        mr = 6;
        mc = 3;
    }
    std::vector<TheoremReport> reps;
    json inst;
    if (opt.which == "A" || opt.which == "B") {
        Bimatroid b;
        if (opt.field == "Q") {
            QMatrix m = random_q_matrix(rng, mr, mc);
            inst = json{{"trial", trial}, {"matrix", matrix_to_json(m)}};
            b = from_matrix(m);
        } else {
            FpMatrix m = random_fp_matrix(rng, mr, mc);
            inst = json{{"trial", trial}, {"matrix", matrix_to_json(m)}};
            b = from_matrix(m);
        }
        reps.push_back(opt.which == "A" ? check_theorem_A(b) : check_theorem_B(b));
    } else if (opt.which == "mason") {
        Matroid m;
        if (opt.field == "Q") {
            QMatrix a = random_q_matrix(rng, mr, mc);
            inst = json{{"trial", trial}, {"matrix", matrix_to_json(a)}};
            m = from_matrix_columns(a);
        } else {
            FpMatrix a = random_fp_matrix(rng, mr, mc);
            inst = json{{"trial", trial}, {"matrix", matrix_to_json(a)}};
            m = from_matrix_columns(a);
        }
        reps.push_back(check_mason(m));
    } else {
        MatroidMorphism phi = random_realizable_morphism(rng, mr, mc);
        inst = json{{"trial", trial}, {"morphism", morphism_to_json(phi)}};
        reps = reports_for_morphism(opt, phi);
    }
    for (auto& r : reps) {
        r.seed = opt.seed;
        r.instance = inst.dump();
    }
    return reps;
}

std::vector<TheoremReport> run_trials(const TheoremOptions& opt) {
    int n = opt.n_random;
    std::vector<std::vector<TheoremReport>> slots(static_cast<size_t>(n));
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex err_mx;
    auto worker = [&] {
        for (;;) {
            int t = next.fetch_add(1);
            if (t >= n) return;
            try {
                slots[static_cast<size_t>(t)] = run_one_trial(opt, t);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mx);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    int j = std::clamp(opt.jobs, 1, 64);
    if (j <= 1 || n <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < std::min(j, n); ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    std::vector<TheoremReport> out;
    for (auto& s : slots)
        for (auto& r : s) out.push_back(std::move(r));
    return out;
}

int run_theorem(const TheoremOptions& opt) {
    std::vector<TheoremReport> reps;
    if (!opt.instance_path.empty()) {
        json j = load_json_file(opt.instance_path);
        if (opt.which == "A" || opt.which == "B") {
            Bimatroid b = bimatroid_from_instance(j);
            reps.push_back(opt.which == "A" ? check_theorem_A(b) : check_theorem_B(b));
        } else if (opt.which == "mason") {
            Matroid m = j.contains("entries")
                            ? (matrix_json_is_fp(j) ? from_matrix_columns(fpmatrix_from_json(j))
                                                    : from_matrix_columns(qmatrix_from_json(j)))
                            : matroid_from_json(j);
            reps.push_back(check_mason(m));
        } else {
            reps = reports_for_morphism(opt, morphism_from_json(j));
        }
        for (auto& r : reps) r.instance = j.dump();
    } else {
        if (opt.n_random <= 0)
            throw parse_error("theorem: give an instance file or --random N");
        reps = run_trials(opt);
    }
    json arr = json::array();
    for (const auto& r : reps) arr.push_back(report_to_json(r));
    emit(arr);
    for (const auto& r : reps)
        if (!r.verdict) return 3;
    return 0;
}

int run_report(const std::string& path, const std::string& format) {
    json j = load_json_file(path);
    std::vector<TheoremReport> reps;
    if (j.is_array())
        for (const auto& item : j) reps.push_back(report_from_json(item));
    else
        reps.push_back(report_from_json(j));
    if (format == "csv") {
        std::string out;
        for (size_t i = 0; i < reps.size(); ++i) {
            std::string s = report_to_csv(reps[i]);
            if (i > 0) s.erase(0, s.find('\n') + 1);  // one header for the file
            out += s;
        }
        std::cout << out;
    } else {
        if (j.is_array()) {
            json arr = json::array();
            for (const auto& r : reps) arr.push_back(report_to_json(r));
            emit(arr);
        } else {
            emit(report_to_json(reps.front()));
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bimatroids: exact bimatroid, matroid-morphism and "
                 "Lorentzian-polynomial toolkit"};
    app.require_subcommand(1);
    int rc = 0;

    std::string file_a, file_b, view = "minors", orientation = "vertical";
    std::vector<std::string> basis_labels;
    std::string morphism_action, poly_kind, report_format = "json";
    int poly_alpha = -1;
    std::string poly_z = "z";

    auto* c_validate = app.add_subcommand(
        "validate", "Check the exchange axioms of a bimatroid document");
    c_validate->add_option("file", file_a, "bimatroid/matrix/relation JSON")->required();
    c_validate->callback([&] { rc = run_validate(file_a); });

    auto* c_fm = app.add_subcommand("from-matrix", "Bimatroid of nonvanishing minors");
    c_fm->add_option("file", file_a, "matrix JSON")->required();
    c_fm->callback([&] { rc = run_from_matrix(file_a); });

    auto* c_fr = app.add_subcommand("from-relation", "Bimatroid of matchable pairs");
    c_fr->add_option("file", file_a, "relation JSON")->required();
    c_fr->callback([&] { rc = run_from_relation(file_a); });

    auto* c_bond = app.add_subcommand("bond", "Bond bimatroid of a matroid and a basis");
    c_bond->add_option("file", file_a, "matroid JSON")->required();
    c_bond->add_option("--basis", basis_labels, "comma-separated basis labels")
        ->required()
        ->delimiter(',');
    c_bond->callback([&] { rc = run_bond(file_a, basis_labels); });

    auto* c_conv = app.add_subcommand("convert", "Re-express a bimatroid in another view");
    c_conv->add_option("file", file_a, "bimatroid/matrix/relation JSON")->required();
    c_conv->add_option("--view", view, "minors|extended|rank-table|rectangles")
        ->required()
        ->check(CLI::IsMember({"minors", "extended", "rank-table", "rectangles"}));
    c_conv->add_option("--orientation", orientation, "vertical|horizontal (rectangles)")
        ->check(CLI::IsMember({"vertical", "horizontal"}));
    c_conv->callback([&] { rc = run_convert(file_a, view, orientation); });

    auto* c_prod = app.add_subcommand("product", "Product of two composable bimatroids");
    c_prod->add_option("a", file_a, "left factor JSON")->required();
    c_prod->add_option("b", file_b, "right factor JSON")->required();
    c_prod->callback([&] { rc = run_product(file_a, file_b); });

    auto* c_frenk = app.add_subcommand(
        "frenk-check", "Compare extended(product) with the union/contraction formula");
    c_frenk->add_option("a", file_a, "left factor JSON")->required();
    c_frenk->add_option("b", file_b, "right factor JSON")->required();
    c_frenk->callback([&] { rc = run_frenk_check(file_a, file_b); });

    auto* c_cb = app.add_subcommand(
        "cauchy-binet", "Minors of a matrix product vs product of bimatroids");
    c_cb->add_option("a", file_a, "left matrix JSON")->required();
    c_cb->add_option("b", file_b, "right matrix JSON")->required();
    c_cb->callback([&] { rc = run_cauchy_binet(file_a, file_b); });

    auto* c_mor = app.add_subcommand("morphism", "Matroid-morphism operations");
    c_mor->add_option("action", morphism_action, "check|bases|tilde")
        ->required()
        ->check(CLI::IsMember({"check", "bases", "tilde"}));
    c_mor->add_option("file", file_a, "morphism JSON")->required();
    c_mor->callback([&] { rc = run_morphism(morphism_action, file_a); });

    auto* c_poly = app.add_subcommand("poly", "Emit a generating polynomial");
    c_poly->add_option("kind", poly_kind, "regular-minor|basis|independent|weak-basis")
        ->required()
        ->check(CLI::IsMember({"regular-minor", "basis", "independent", "weak-basis"}));
    c_poly->add_option("file", file_a, "instance JSON")->required();
    c_poly->add_option("--alpha", poly_alpha,
                       "weak-basis weight (default: the morphism's nullity)");
    c_poly->add_option("--z", poly_z, "homogenizing variable name (independent)");
    c_poly->callback([&] { rc = run_poly(poly_kind, file_a, poly_alpha, poly_z); });

    auto* c_lor = app.add_subcommand("check-lorentzian", "Classify a homogeneous polynomial");
    c_lor->add_option("file", file_a, "polynomial JSON")->required();
    c_lor->callback([&] { rc = run_check_lorentzian(file_a); });

    TheoremOptions topt;
    auto* c_thm = app.add_subcommand("theorem", "Run a theorem verification suite");
    c_thm->add_option("which", topt.which, "A|B|C|mason|c-pipeline|e-lorentzian")
        ->required()
        ->check(CLI::IsMember({"A", "B", "C", "mason", "c-pipeline", "e-lorentzian"}));
    auto* inst_opt = c_thm->add_option("instance", topt.instance_path, "instance JSON file");
    auto* rand_opt =
        c_thm->add_option("--random", topt.n_random, "number of seeded random trials");
    inst_opt->excludes(rand_opt);
    c_thm->add_option("--seed", topt.seed, "corpus seed (default 0)");
    auto* mr_opt = c_thm->add_option(
        "--max-rows", topt.max_rows,
        "max rows (A/B/mason; max source ground size for morphism theorems, default 6)");
    auto* mc_opt = c_thm->add_option(
        "--max-cols", topt.max_cols,
        "max cols (A/B/mason; max target ground size for morphism theorems, default 3)");
    c_thm->add_option("--field", topt.field, "Fp|Q (default Fp, p = 65521)")
        ->check(CLI::IsMember({"Fp", "Q"}));
    c_thm->add_option("--alpha", topt.alpha,
                      "e-lorentzian weight (default: both nullity and rank)");
    c_thm->add_option("--jobs", topt.jobs, "parallel trial workers (default 1)");
    c_thm->callback([&] {
        topt.dims_given = mr_opt->count() > 0 || mc_opt->count() > 0;
        rc = run_theorem(topt);
    });

    auto* c_rep = app.add_subcommand("report", "Re-emit a report file as JSON or CSV");
    c_rep->add_option("file", file_a, "report JSON (object or array)")->required();
    c_rep->add_option("--format", report_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    c_rep->callback([&] { rc = run_report(file_a, report_format); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "alarm: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
