// Python bindings for the main operations.  Rich structured data crosses the
// boundary as JSON text in the library's canonical schemas; the classes
// themselves stay thin handles so Python-side exactness is never at risk
// (counts are Python ints, rationals are "a/b" strings).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bimat/bimat.hpp"

namespace py = pybind11;
using namespace bimat;

namespace {

Mask labels_to_mask(const Matroid& m, const std::vector<std::string>& labels) {
    Mask s = 0;
    for (const auto& l : labels) {
        int i = m.label_index(l);
        if (i < 0) throw precondition_error("label not in ground set: " + l);
        s |= Mask{1} << i;
    }
    return s;
}

std::vector<std::string> mask_to_labels(const std::vector<std::string>& ground, Mask s) {
    std::vector<std::string> out;
    for (int i : mask_to_indices(s)) out.push_back(ground[static_cast<size_t>(i)]);
    return out;
}

Bimatroid bimatroid_from_any_json(const std::string& text) {
    json j = parse_json_text(text);
    if (j.contains("entries"))
        return matrix_json_is_fp(j) ? from_matrix(fpmatrix_from_json(j))
                                    : from_matrix(qmatrix_from_json(j));
    if (j.contains("pairs")) return from_relation(relation_from_json(j));
    return bimatroid_from_json(j);
}

std::vector<Rational> rationals_from_strings(const std::vector<std::string>& a) {
    std::vector<Rational> out;
    out.reserve(a.size());
    for (const auto& s : a) out.push_back(Rational::from_string(s));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Exact bimatroid / matroid-morphism / Lorentzian-polynomial core";

    py::register_exception<parse_error>(mod, "ParseError");
    // precondition_error derives from std::invalid_argument and already maps
    // to ValueError.

    py::class_<Matroid>(mod, "Matroid")
        .def_static("from_bases",
                    [](std::vector<std::string> ground,
                       const std::vector<std::vector<std::string>>& bases) {
                        std::vector<Mask> bs;
                        Matroid probe = uniform_matroid(0, ground);
                        for (const auto& b : bases) bs.push_back(labels_to_mask(probe, b));
                        return Matroid::from_bases(std::move(ground), std::move(bs));
                    })
        .def_static("from_json",
                    [](const std::string& s) { return matroid_from_json(parse_json_text(s)); })
        .def("to_json", [](const Matroid& m) { return matroid_to_json(m).dump(); })
        .def("n", &Matroid::n)
        .def("rank", &Matroid::rank)
        .def("ground", &Matroid::ground)
        .def("bases",
             [](const Matroid& m) {
                 std::vector<std::vector<std::string>> out;
                 for (Mask b : m.bases()) out.push_back(mask_to_labels(m.ground(), b));
                 return out;
             })
        .def("rank_of",
             [](const Matroid& m, const std::vector<std::string>& s) {
                 return m.rank_of(labels_to_mask(m, s));
             })
        .def("dual", &Matroid::dual)
        .def("__eq__", [](const Matroid& a, const Matroid& b) { return a == b; });

    mod.def("uniform_matroid", [](int r, int n) { return uniform_matroid(r, n); });

    py::class_<Bimatroid>(mod, "Bimatroid")
        .def_static("from_json", &bimatroid_from_any_json,
                    "Accepts matrix, relation, or any of the four bimatroid views")
        .def("to_json", [](const Bimatroid& b) { return bimatroid_to_json(b).dump(); })
        .def("m", &Bimatroid::m)
        .def("n", &Bimatroid::n)
        .def("rows", &Bimatroid::rows)
        .def("cols", &Bimatroid::cols)
        .def("rank", &Bimatroid::rank)
        .def("minor_counts", &Bimatroid::minor_counts)
        .def("transpose", &Bimatroid::transpose)
        .def("__eq__", [](const Bimatroid& a, const Bimatroid& b) { return a == b; });

    mod.def("bond", [](const Matroid& m, const std::vector<std::string>& basis) {
        return bond(m, labels_to_mask(m, basis));
    });
    mod.def("identity_bimatroid",
            [](const std::vector<std::string>& labels) { return identity_bimatroid(labels); });
    mod.def("validate_bimatroid", [](const Bimatroid& b) {
        Verdict v = validate_bimatroid(b);
        return py::make_tuple(v.valid, v.witness);
    });
    mod.def("extended_matroid", &extended_matroid);
    mod.def("product", &product);
    mod.def("frenk_agrees", [](const Bimatroid& a, const Bimatroid& b) {
        return extended_matroid(product(a, b)) == frenk_extended(a, b);
    });
    mod.def("cauchy_binet_json", [](const std::string& a_text, const std::string& b_text) {
        json ja = parse_json_text(a_text), jb = parse_json_text(b_text);
        bool fa = matrix_json_is_fp(ja), fb = matrix_json_is_fp(jb);
        if (fa != fb) throw precondition_error("cauchy-binet: matrices over different fields");
        CauchyBinetReport r = fa ? cauchy_binet_check(fpmatrix_from_json(ja), fpmatrix_from_json(jb))
                                 : cauchy_binet_check(qmatrix_from_json(ja), qmatrix_from_json(jb));
        return py::make_tuple(r.inclusion, r.equality);
    });

    py::class_<MatroidMorphism>(mod, "MatroidMorphism")
        .def_static("make",
                    [](Matroid source, Matroid target, const std::vector<int>& map) {
                        return MatroidMorphism::make(std::move(source), std::move(target), map);
                    })
        .def_static("from_json",
                    [](const std::string& s) { return morphism_from_json(parse_json_text(s)); })
        .def("to_json", [](const MatroidMorphism& p) { return morphism_to_json(p).dump(); })
        .def("source", &MatroidMorphism::source)
        .def("target", &MatroidMorphism::target)
        .def("map", &MatroidMorphism::map);

    mod.def("is_morphism", [](const Matroid& m, const Matroid& mp, const std::vector<int>& phi) {
        return is_morphism_rank(m, mp, phi);
    });
    mod.def("is_quotient", &is_quotient);
    mod.def("nullity", &nullity);
    mod.def("basis_counts", &basis_counts);
    mod.def("tilde_matroid", &tilde_matroid);

    // Polynomials and Lorentzian checks over the canonical JSON schema.
    mod.def("basis_generating_poly_json", [](const Matroid& m) {
        return poly_to_json(basis_generating_poly(m)).dump();
    });
    mod.def("weak_basis_poly_json", [](const MatroidMorphism& phi, int alpha) {
        return poly_to_json(weak_basis_poly(phi, alpha)).dump();
    });
    mod.def("is_lorentzian_json", [](const std::string& s) {
        return is_lorentzian(poly_from_json(parse_json_text(s)));
    });
    mod.def("is_strictly_lorentzian_json", [](const std::string& s) {
        return is_strictly_lorentzian(poly_from_json(parse_json_text(s)));
    });
    mod.def("is_log_concave", [](const std::vector<std::string>& a) {
        return is_log_concave(rationals_from_strings(a));
    });
    mod.def("is_ultra_log_concave", [](const std::vector<std::string>& a, long s) {
        return is_ultra_log_concave(rationals_from_strings(a), s);
    });

    // Theorem suites; each returns the canonical report JSON text.
    mod.def("check_theorem_A_json", [](const Bimatroid& b) {
        return report_to_json(check_theorem_A(b)).dump();
    });
    mod.def("check_theorem_B_json", [](const Bimatroid& b) {
        return report_to_json(check_theorem_B(b)).dump();
    });
    mod.def("check_theorem_C_json", [](const MatroidMorphism& phi) {
        return report_to_json(check_theorem_C(phi)).dump();
    });
    mod.def("check_mason_json", [](const Matroid& m) {
        return report_to_json(check_mason(m)).dump();
    });
    mod.def("check_thmC_pipeline_json", [](const MatroidMorphism& phi) {
        return report_to_json(check_thmC_pipeline(phi)).dump();
    });
    mod.def("check_weak_basis_poly_lorentzian_json", [](const MatroidMorphism& phi, int alpha) {
        return report_to_json(check_weak_basis_poly_lorentzian(phi, alpha)).dump();
    });
}
