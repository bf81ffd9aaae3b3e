#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "adw/io.hpp"
#include "cli.hpp"

namespace py = pybind11;
using namespace adw;
using io::json;

namespace {

// Objects cross the boundary as canonical JSON text; the Python layer converts to and from dicts.
json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

std::string out(const json& j) { return j.dump(); }

std::string report(const Report& r) { return out(io::to_json(r)); }

CheckOptions opts(bool exhaustive) { return CheckOptions{exhaustive}; }

Matrix matrix(const std::string& text, std::size_t rows, std::size_t cols) {
    return io::matrix_from_json(parse(text), rows, cols);
}

std::string search(const LinearSearch& s) {
    json j = {{"found", s.found()}};
    if (s.witness) j["witness"] = io::to_json(*s.witness);
    if (s.certificate) j["certificate"] = io::to_json(*s.certificate);
    return out(j);
}

}  // namespace

PYBIND11_MODULE(_adw, m) {
    m.doc() = "Exact computations with anti-dendriform algebras (JSON-text interface)";
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);

    // algebra-core
    m.def("check_anti_dendriform", [](const std::string& a, bool ex) {
        return report(check_anti_dendriform(io::algebra_from_json(parse(a)), opts(ex)));
    }, py::arg("algebra"), py::arg("exhaustive") = false);
    m.def("associated_associative", [](const std::string& a) {
        const Bilinear op = associated_associative(io::algebra_from_json(parse(a)));
        return out({{"dimension", op.left()}, {"product", io::bilinear_entries(op)}});
    });
    m.def("dual_coproducts", [](const std::string& a) {
        return out(io::to_json(dual_coproducts(io::algebra_from_json(parse(a)))));
    });

    // representations
    m.def("check_representation", [](const std::string& r, bool ex) {
        return report(check_representation(io::rep_from_json(parse(r)), opts(ex)));
    }, py::arg("rep"), py::arg("exhaustive") = false);
    m.def("regular_representation", [](const std::string& a) {
        return out(io::to_json(regular_representation(io::algebra_from_json(parse(a)))));
    });
    m.def("dual_representation", [](const std::string& r) {
        return out(io::to_json(dual_representation(io::rep_from_json(parse(r)))));
    });
    m.def("semidirect_product", [](const std::string& r) {
        return out(io::to_json(semidirect_product(io::rep_from_json(parse(r)))));
    });

    // unified products
    m.def("check_extending_structure", [](const std::string& d, bool ex) {
        return report(check_extending_structure(io::extending_from_json(parse(d)), opts(ex)));
    }, py::arg("datum"), py::arg("exhaustive") = false);
    m.def("unified_product", [](const std::string& d) {
        return out(io::to_json(unified_product(io::extending_from_json(parse(d)))));
    });
    m.def("extract_extending_datum", [](const std::string& e, const std::string& inc, const std::string& proj,
                                        std::size_t n) {
        const ADAlgebra E = io::algebra_from_json(parse(e));
        const Extraction x = extract_extending_datum(E, matrix(inc, E.dim(), n), matrix(proj, n, E.dim()));
        return out({{"datum", io::to_json(x.datum)}, {"kernelBasis", io::to_json(x.kernel_basis)},
                    {"phi", io::to_json(x.phi)}});
    }, py::arg("algebra"), py::arg("inclusion"), py::arg("projector"), py::arg("subalgebra_dim"));

    // non-abelian extensions
    m.def("check_crossed_system", [](const std::string& d, bool ex) {
        return report(check_crossed_system(io::crossed_from_json(parse(d)), opts(ex)));
    }, py::arg("datum"), py::arg("exhaustive") = false);
    m.def("crossed_product", [](const std::string& d) {
        return out(io::to_json(crossed_product(io::crossed_from_json(parse(d)))));
    });
    m.def("cocycle_from_section", [](const std::string& e, const std::string& p, const std::string& s,
                                     std::size_t n) {
        const ADAlgebra E = io::algebra_from_json(parse(e));
        const SectionCocycle c = cocycle_from_section(E, matrix(p, n, E.dim()), matrix(s, E.dim(), n));
        return out({{"datum", io::to_json(c.datum)}, {"kernelBasis", io::to_json(c.kernel_basis)},
                    {"phi", io::to_json(c.phi)}});
    }, py::arg("algebra"), py::arg("projection"), py::arg("section"), py::arg("quotient_dim"));
    m.def("check_cocycles_cohomologous", [](const std::string& c1, const std::string& c2, const std::string& z) {
        const CrossedDatum a = io::crossed_from_json(parse(c1)), b = io::crossed_from_json(parse(c2));
        return report(check_cocycles_cohomologous(a, b, matrix(z, a.vdim(), a.algebra.dim())));
    });
    m.def("find_cohomologous_zeta", [](const std::string& c1, const std::string& c2) {
        return search(find_cohomologous_zeta(io::crossed_from_json(parse(c1)), io::crossed_from_json(parse(c2))));
    });
    m.def("check_gh2_tuple", [](const std::string& t, bool derived) {
        return report(check_gh2_tuple(io::gh2_from_json(parse(t)),
                                      derived ? GH2Relations::derived : GH2Relations::printed));
    }, py::arg("tuple"), py::arg("derived") = false);
    m.def("gh2_tuples_cohomologous", [](const std::string& t1, const std::string& t2) {
        const GH2Verdict v = gh2_tuples_cohomologous(io::gh2_from_json(parse(t1)), io::gh2_from_json(parse(t2)));
        json j = {{"cohomologous", v.cohomologous}, {"reason", v.reason}};
        if (v.w) j["w"] = io::to_json(*v.w);
        if (v.certificate) j["certificate"] = io::to_json(*v.certificate);
        return out(j);
    });
    m.def("find_inducing_phi", [](const std::string& c, const std::string& alpha, const std::string& beta) {
        const CrossedDatum d = io::crossed_from_json(parse(c));
        const AutPair pair{matrix(alpha, d.algebra.dim(), d.algebra.dim()), matrix(beta, d.vdim(), d.vdim())};
        return search(find_inducing_phi(d, pair));
    });
    m.def("wells_vanishes", [](const std::string& c, const std::string& alpha, const std::string& beta) {
        const CrossedDatum d = io::crossed_from_json(parse(c));
        const AutPair pair{matrix(alpha, d.algebra.dim(), d.algebra.dim()), matrix(beta, d.vdim(), d.vdim())};
        return search(wells_vanishes(wells_map(d, pair)));
    });

    // matched pairs
    m.def("check_matched_pair", [](const std::string& d, bool ex) {
        return report(check_matched_pair(io::matched_from_json(parse(d)), opts(ex)));
    }, py::arg("datum"), py::arg("exhaustive") = false);
    m.def("bicrossed_product", [](const std::string& d) {
        return out(io::to_json(bicrossed_product(io::matched_from_json(parse(d)))));
    });
    m.def("factorize", [](const std::string& c, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
        const Factorization f = factorize(io::algebra_from_json(parse(c)), a, b);
        return f.datum ? out(io::to_json(*f.datum)) : out({{"diagnostic", f.diagnostic}});
    });

    // bialgebras and AD-YBE
    m.def("check_d_bialgebra", [](const std::string& a, const std::string& cp, bool ex) {
        return report(check_d_bialgebra(io::algebra_from_json(parse(a)), io::coproducts_from_json(parse(cp)),
                                        opts(ex)));
    }, py::arg("algebra"), py::arg("coproducts"), py::arg("exhaustive") = false);
    m.def("adybe_residual", [](const std::string& a, const std::string& r) {
        const io::RMatrixFile rf = io::rmatrix_from_json(parse(r));
        if (!rf.single) throw InputError("adybe_residual expects a single 'r'");
        return out(io::to_json(adybe_residual(io::algebra_from_json(parse(a)), rf.rsucc)));
    });
    m.def("o_operator_to_ybe", [](const std::string& T, const std::string& rep) {
        const ADRep r = io::rep_from_json(parse(rep));
        const OLift lift = o_operator_to_ybe(matrix(T, r.algebra.dim(), r.mod_dim()), r);
        return out({{"ambient", io::to_json(lift.ambient)}, {"r", io::rmatrix_to_json(lift.r)},
                    {"residual", io::to_json(lift.residual)}, {"zeroResidual", lift.zero_residual()},
                    {"oOperator", lift.o_report.ok()}});
    });

    // The command-line interface, in process.
    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream o, e;
        const int code = cli::run(args, o, e);
        return py::make_tuple(code, o.str(), e.str());
    });
}
