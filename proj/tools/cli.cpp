#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "adw/io.hpp"

namespace adw::cli {

namespace {

using io::json;

struct Common {
    bool json = false;
    bool exhaustive = false;
    std::string out;
};

/// Result of one subcommand before rendering.
struct Outcome {
    Report report;
    std::optional<bool> pass;
    json details = json::object();
    std::optional<json> artifact;
    /// Label of the synthetic violation reported when a failure has no identity witness.
    std::string failure = "unsatisfied";

    bool passed() const { return pass.value_or(true) && report.ok(); }
};

struct Loaded {
    json value;
    io::Context ctx;
};

Loaded load(const std::string& path) {
    std::filesystem::path p(path);
    return {io::load_file(p), io::Context{p.parent_path()}};
}

ADAlgebra load_algebra(const std::string& path) {
    auto f = load(path);
    return io::algebra_from_json(f.value, f.ctx);
}

/// Associative product file: {"dimension", "product"}.
Bilinear load_assoc(const std::string& path) {
    auto f = load(path);
    io::expect_keys(f.value, {"dimension", "product"}, "associative algebra");
    if (!f.value.contains("dimension") || !f.value.at("dimension").is_number_unsigned())
        throw InputError("associative algebra: 'dimension' must be a non-negative integer");
    const auto n = f.value.at("dimension").get<std::size_t>();
    return f.value.contains("product") ? io::bilinear_from_entries(f.value.at("product"), n, n, n)
                                       : Bilinear::square(n);
}

json assoc_to_json(const Bilinear& op) {
    return {{"dimension", op.left()}, {"product", io::bilinear_entries(op)}};
}

/// Object with exactly the given matrix fields of known shapes.
std::vector<Matrix> load_matrices(const std::string& path, const std::string& what,
                                  const std::vector<std::tuple<const char*, std::size_t, std::size_t>>& fields) {
    auto f = load(path);
    if (!f.value.is_object()) throw InputError(what + ": expected an object");
    for (const auto& [key, _] : f.value.items()) {
        bool known = false;
        for (const auto& fld : fields) known = known || key == std::get<0>(fld);
        if (!known) throw InputError(what + ": unknown key '" + key + "'");
    }
    std::vector<Matrix> out;
    for (const auto& [key, r, c] : fields) {
        if (!f.value.contains(key)) throw InputError(what + ": missing '" + std::string(key) + "'");
        out.push_back(io::matrix_from_json(f.value.at(key), r, c));
    }
    return out;
}

std::vector<std::size_t> parse_indices(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("index list must be comma-separated non-negative integers: '" + text + "'");
        out.push_back(std::stoul(item));
    }
    return out;
}

std::vector<Scalar> parse_grid(const std::string& text) {
    std::vector<Scalar> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Scalar::parse(item));
    if (out.empty()) throw InputError("grid must list at least one value");
    return out;
}

Outcome from_report(Report r) {
    Outcome o;
    o.report = std::move(r);
    return o;
}

Outcome failed_precondition(const CheckFailure& e) {
    Outcome o;
    o.report = e.report();
    o.pass = false;
    o.failure = "precondition";
    o.details["message"] = e.what();
    return o;
}

std::string witness_text(const Violation& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.witness.size(); ++i) s += (i ? "," : "") + std::to_string(v.witness[i]);
    return s + ")";
}

void render(const std::string& command, const Common& c, Outcome o, std::ostream& out) {
    if (!o.passed() && o.report.ok()) o.report.add(Violation{o.failure, "", {}, 1, Vec(0), Vec(0)});
    std::vector<std::string> artifacts;
    if (!c.out.empty() && o.artifact) {
        io::write_file(c.out, *o.artifact);
        artifacts.push_back(c.out);
    }
    if (c.json) {
        json j = io::to_json(o.report);
        j["verdict"] = o.passed() ? "pass" : "fail";
        j["command"] = command;
        j["artifacts"] = artifacts;
        j["details"] = o.details;
        out << io::dump(j);
        return;
    }
    out << (o.passed() ? "PASS" : "FAIL") << " " << command << "\n";
    for (const auto& v : o.report.violations())
        out << "  " << v.equation << " at " << v.roles << witness_text(v) << ": " << v.lhs.str()
            << " != " << v.rhs.str() << "\n";
    if (o.report.total() > o.report.violations().size())
        out << "  (" << o.report.total() << " violations in total)\n";
    for (const auto& n : o.report.notes) out << "  note: " << n << "\n";
    for (const auto& [key, value] : o.details.items()) out << "  " << key << ": " << value.dump() << "\n";
    for (const auto& a : artifacts) out << "  wrote " << a << "\n";
}

std::string field_from_env() {
    const char* v = std::getenv("ADW_FIELD");
    return v ? v : "";
}

json search_to_json(const LinearSearch& s) {
    json j = json::object();
    j["found"] = s.found();
    if (s.witness) j["witness"] = io::to_json(*s.witness);
    if (s.certificate) j["certificate"] = io::to_json(*s.certificate);
    return j;
}

/// Registers a leaf subcommand carrying the shared flags.
CLI::App* leaf(CLI::App* group, const std::string& name, const std::string& desc, Common& c) {
    CLI::App* sub = group->add_subcommand(name, desc);
    sub->add_flag("--json", c.json, "Emit the run report as JSON");
    sub->add_option("--out", c.out, "Write the constructed object to this file");
    sub->add_flag("--exhaustive", c.exhaustive, "Keep every violation");
    return sub;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app("Exact computations with anti-dendriform algebras", "adw");
    app.require_subcommand(1);
    Common c;
    std::string command;
    std::function<Outcome()> action;
    std::vector<std::string> files(4);
    auto opt = [&]() { return CheckOptions{c.exhaustive}; };

    auto bind = [&](CLI::App* sub, std::string name, std::vector<std::string> positionals,
                    std::function<Outcome()> fn) {
        for (std::size_t i = 0; i < positionals.size(); ++i)
            sub->add_option(positionals[i], files[i], positionals[i] + " file")->required();
        sub->callback([&, name, fn] {
            command = name;
            action = fn;
        });
    };

    // algebra
    auto* algebra = app.add_subcommand("algebra", "Anti-dendriform algebras")->require_subcommand(1);
    bind(leaf(algebra, "check", "Check A1 and A2", c), "algebra check", {"algebra"},
         [&] { return from_report(check_anti_dendriform(load_algebra(files[0]), opt())); });
    bind(leaf(algebra, "dual", "Coproducts dual to the tables, with the coalgebra check", c), "algebra dual",
         {"algebra"}, [&] {
             CoproductPair cp = dual_coproducts(load_algebra(files[0]));
             Outcome o = from_report(check_coalgebra(cp, opt()));
             o.artifact = io::to_json(cp);
             o.details["coproducts"] = *o.artifact;
             return o;
         });
    bind(leaf(algebra, "assoc", "Associated associative product", c), "algebra assoc", {"algebra"}, [&] {
        Bilinear op = associated_associative(load_algebra(files[0]));
        Outcome o = from_report(check_associative(op, opt()));
        o.artifact = assoc_to_json(op);
        o.details["associative"] = *o.artifact;
        return o;
    });

    // rep
    auto* rep = app.add_subcommand("rep", "Representations")->require_subcommand(1);
    auto load_rep = [&](const std::string& path) {
        auto f = load(path);
        return io::rep_from_json(f.value, f.ctx);
    };
    bind(leaf(rep, "check", "Check R1-R7", c), "rep check", {"rep"},
         [&] { return from_report(check_representation(load_rep(files[0]), opt())); });
    bind(leaf(rep, "dual", "Dual representation, checked", c), "rep dual", {"rep"}, [&] {
        ADRep d = dual_representation(load_rep(files[0]));
        Outcome o = from_report(check_representation(d, opt()));
        o.artifact = io::to_json(d);
        return o;
    });
    bind(leaf(rep, "semidirect", "Semidirect product A + V", c), "rep semidirect", {"rep"}, [&] {
        ADRep r = load_rep(files[0]);
        try {
            Outcome o;
            o.artifact = io::to_json(semidirect_product(r));
            return o;
        } catch (const CheckFailure& e) {
            return failed_precondition(e);
        }
    });

    // unified
    auto* unified = app.add_subcommand("unified", "Extending structures and unified products")->require_subcommand(1);
    auto load_ext = [&](const std::string& path) {
        auto f = load(path);
        return io::extending_from_json(f.value, f.ctx);
    };
    bind(leaf(unified, "check", "Check S1-S17 and the A2 shapes", c), "unified check", {"datum"},
         [&] { return from_report(check_extending_structure(load_ext(files[0]), opt())); });
    bind(leaf(unified, "build", "Unified product", c), "unified build", {"datum"}, [&] {
        try {
            Outcome o;
            o.artifact = io::to_json(unified_product(load_ext(files[0])));
            return o;
        } catch (const CheckFailure& e) {
            return failed_precondition(e);
        }
    });
    bind(leaf(unified, "extract", "Extending datum of E along (inclusion, projector)", c), "unified extract",
         {"algebra", "maps"}, [&] {
             ADAlgebra E = load_algebra(files[0]);
             auto probe = load(files[1]).value;
             if (!probe.is_object() || !probe.contains("inclusion") || !probe.at("inclusion").is_array() ||
                 probe.at("inclusion").size() != E.dim())
                 throw InputError("maps: 'inclusion' must have one row per basis element of E");
             const std::size_t n = probe.at("inclusion").empty() ? 0 : probe.at("inclusion")[0].size();
             auto m = load_matrices(files[1], "maps", {{"inclusion", E.dim(), n}, {"projector", n, E.dim()}});
             Extraction ex = extract_extending_datum(E, m[0], m[1]);
             Outcome o = from_report(check_extending_structure(ex.datum, opt()));
             o.artifact = io::to_json(ex.datum);
             o.details["kernelBasis"] = io::to_json(ex.kernel_basis);
             return o;
         });
    std::string equiv_mode = "equivalence";
    bool equiv_find = false;
    auto* equiv = leaf(unified, "equiv", "Check h1-h10 for a witness (zeta, eta)", c);
    equiv->add_option("--mode", equiv_mode, "equivalence or cohomologous")
        ->check(CLI::IsMember({"equivalence", "cohomologous"}));
    equiv->add_flag("--find", equiv_find, "Solve for zeta with the given eta (A must have zero products)");
    bind(equiv, "unified equiv", {"datum1", "datum2", "witness"}, [&] {
        ExtendingDatum d1 = load_ext(files[0]), d2 = load_ext(files[1]);
        const std::size_t n = d1.algebra.dim(), m = d1.vdim;
        const auto mode = equiv_mode == "equivalence" ? EquivMode::equivalence : EquivMode::cohomologous;
        if (equiv_find) {
            auto w = load_matrices(files[2], "witness", {{"eta", m, m}});
            auto zeta = find_zeta_linear(d1, d2, w[0]);
            Outcome o;
            if (!zeta) {
                o.pass = false;
                o.failure = "no-witness";
                o.details["found"] = false;
                return o;
            }
            o = from_report(check_equivalence(d1, d2, {*zeta, w[0]}, mode, opt()));
            o.details["found"] = true;
            o.details["zeta"] = io::to_json(*zeta);
            return o;
        }
        auto w = load_matrices(files[2], "witness", {{"zeta", n, m}, {"eta", m, m}});
        return from_report(check_equivalence(d1, d2, {w[0], w[1]}, mode, opt()));
    });

    // crossed
    auto* crossed = app.add_subcommand("crossed", "Crossed systems and non-abelian cocycles")->require_subcommand(1);
    auto load_crossed = [&](const std::string& path) {
        auto f = load(path);
        return io::crossed_from_json(f.value, f.ctx);
    };
    bind(leaf(crossed, "check", "Check C1-C12", c), "crossed check", {"datum"},
         [&] { return from_report(check_crossed_system(load_crossed(files[0]), opt())); });
    bind(leaf(crossed, "build", "Crossed product", c), "crossed build", {"datum"}, [&] {
        try {
            Outcome o;
            o.artifact = io::to_json(crossed_product(load_crossed(files[0])));
            return o;
        } catch (const CheckFailure& e) {
            return failed_precondition(e);
        }
    });
    std::function<Outcome()> from_section = [&] {
             ADAlgebra E = load_algebra(files[0]);
             auto probe = load(files[1]).value;
             if (!probe.is_object() || !probe.contains("p") || !probe.at("p").is_array())
                 throw InputError("section: 'p' must be a matrix");
             const std::size_t n = probe.at("p").size();
             auto m = load_matrices(files[1], "section", {{"p", n, E.dim()}, {"s", E.dim(), n}});
             SectionCocycle sc = cocycle_from_section(E, m[0], m[1]);
             Outcome o = from_report(check_crossed_system(sc.datum, opt()));
             o.artifact = io::to_json(sc.datum);
             o.details["kernelBasis"] = io::to_json(sc.kernel_basis);
             return o;
    };
    std::string zeta_file;
    std::function<Outcome()> cohomologous = [&] {
        CrossedDatum c1 = load_crossed(files[0]), c2 = load_crossed(files[1]);
        if (!zeta_file.empty()) {
            auto z = load_matrices(zeta_file, "zeta", {{"zeta", c1.vdim(), c1.algebra.dim()}});
            return from_report(check_cocycles_cohomologous(c1, c2, z[0], opt()));
        }
        LinearSearch s = find_cohomologous_zeta(c1, c2);
        Outcome o = s.found() ? from_report(check_cocycles_cohomologous(c1, c2, *s.witness, opt())) : Outcome();
        o.pass = s.found();
        o.failure = "no-witness";
        o.details = search_to_json(s);
        return o;
    };
    // The same two operations are also reachable under the name "cocycle".
    auto* cocycle = app.add_subcommand("cocycle", "Non-abelian 2-cocycles")->require_subcommand(1);
    for (auto* group : {crossed, cocycle}) {
        const std::string g = group->get_name();
        bind(leaf(group, "from-section", "Cocycle of an extension with a section", c), g + " from-section",
             {"algebra", "section"}, from_section);
        auto* coh = leaf(group, "cohomologous", "Check or search zeta with N1-N5", c);
        coh->add_option("--zeta", zeta_file,
                        "Witness file {\"zeta\": matrix}; without it the linear fast path searches");
        bind(coh, g + " cohomologous", {"cocycle1", "cocycle2"}, cohomologous);
    }

    // gh2
    auto* gh2 = app.add_subcommand("gh2", "Matrix description of crossed systems of k through k^n")
                    ->require_subcommand(1);
    std::string relations = "printed";
    auto* gh2check = leaf(gh2, "check", "Check G1-G8", c);
    gh2check->add_option("--relations", relations, "printed or derived")->check(CLI::IsMember({"printed", "derived"}));
    bind(gh2check, "gh2 check", {"tuple"}, [&] {
        GH2Tuple t = io::gh2_from_json(load(files[0]).value);
        Outcome o = from_report(check_gh2_tuple(
            t, relations == "printed" ? GH2Relations::printed : GH2Relations::derived, opt()));
        o.details["crossedCheck"] = check_crossed_system(gh2_to_crossed(t)).ok();
        return o;
    });
    bind(leaf(gh2, "cohomologous", "Decide cohomology of two tuples", c), "gh2 cohomologous", {"tuple1", "tuple2"},
         [&] {
             GH2Verdict v = gh2_tuples_cohomologous(io::gh2_from_json(load(files[0]).value),
                                                    io::gh2_from_json(load(files[1]).value));
             Outcome o;
             o.pass = v.cohomologous;
             o.failure = "not-cohomologous";
             if (v.w) o.details["w"] = io::to_json(*v.w);
             if (v.certificate) o.details["certificate"] = io::to_json(*v.certificate);
             if (!v.reason.empty()) o.details["reason"] = v.reason;
             return o;
         });

    // inducible / wells / z1
    auto load_pair = [&](const std::string& path, const CrossedDatum& cd) {
        auto m = load_matrices(path, "automorphism pair",
                               {{"alpha", cd.algebra.dim(), cd.algebra.dim()}, {"beta", cd.vdim(), cd.vdim()}});
        return AutPair{m[0], m[1]};
    };
    auto* inducible = app.add_subcommand("inducible", "Inducibility of automorphism pairs")->require_subcommand(1);
    std::string phi_file;
    auto* ind = leaf(inducible, "check", "Check Iam1-Iam4 or search phi", c);
    ind->add_option("--phi", phi_file, "Witness file {\"phi\": matrix}; without it the linear fast path searches");
    bind(ind, "inducible check", {"cocycle", "pair"}, [&] {
        CrossedDatum cd = load_crossed(files[0]);
        AutPair pair = load_pair(files[1], cd);
        Report pre = check_aut_pair(cd, pair);
        if (!pre.ok()) return from_report(pre);
        std::optional<Matrix> phi;
        Outcome o;
        if (!phi_file.empty()) {
            phi = load_matrices(phi_file, "phi", {{"phi", cd.vdim(), cd.algebra.dim()}})[0];
        } else {
            LinearSearch s = find_inducing_phi(cd, pair);
            o.details = search_to_json(s);
            phi = s.witness;
            if (!phi) {
                o.pass = false;
                o.failure = "no-witness";
                return o;
            }
        }
        InducibleResult r = check_inducible(cd, pair, *phi, opt());
        o.report = r.report;
        if (r.gamma) o.details["gamma"] = io::to_json(*r.gamma);
        return o;
    });
    auto* wells = app.add_subcommand("wells", "Wells map")->require_subcommand(1);
    std::string wells_zeta;
    auto* weval = leaf(wells, "eval", "Transformed cocycle and vanishing of the class", c);
    weval->add_option("--zeta", wells_zeta, "Witness file {\"zeta\": matrix}");
    bind(weval, "wells eval", {"cocycle", "pair"}, [&] {
        CrossedDatum cd = load_crossed(files[0]);
        AutPair pair = load_pair(files[1], cd);
        Report pre = check_aut_pair(cd, pair);
        if (!pre.ok()) return from_report(pre);
        WellsClass w = wells_map(cd, pair);
        Outcome o;
        o.artifact = io::to_json(w.transformed);
        if (!wells_zeta.empty()) {
            auto z = load_matrices(wells_zeta, "zeta", {{"zeta", cd.vdim(), cd.algebra.dim()}});
            o.report = wells_vanishes_with(w, z[0], opt());
        } else {
            LinearSearch s = wells_vanishes(w);
            o.details = search_to_json(s);
            o.pass = s.found();
            o.failure = "no-witness";
        }
        o.details["transformed"] = *o.artifact;
        return o;
    });
    auto* z1 = app.add_subcommand("z1", "Non-abelian 1-cocycles")->require_subcommand(1);
    bind(leaf(z1, "basis", "Basis of Z1", c), "z1 basis", {"cocycle"}, [&] {
        std::vector<Matrix> basis = z1_cocycles(load_crossed(files[0]));
        Outcome o;
        json list = json::array();
        for (const auto& m : basis) list.push_back(io::to_json(m));
        o.details["dimension"] = basis.size();
        o.details["basis"] = list;
        o.artifact = o.details;
        return o;
    });

    // matched
    auto* matched = app.add_subcommand("matched", "Matched pairs and bicrossed products")->require_subcommand(1);
    auto load_matched = [&](const std::string& path) {
        auto f = load(path);
        return io::matched_from_json(f.value, f.ctx);
    };
    bind(leaf(matched, "check", "Check M1-M12", c), "matched check", {"datum"}, [&] {
        MatchedPairDatum d = load_matched(files[0]);
        Outcome o = from_report(check_matched_pair(d, opt()));
        if (o.report.ok()) o.details["associativeMatchedPair"] = induced_associative_matched_pair(d).report.ok();
        return o;
    });
    bind(leaf(matched, "build", "Bicrossed product", c), "matched build", {"datum"}, [&] {
        try {
            Outcome o;
            o.artifact = io::to_json(bicrossed_product(load_matched(files[0])));
            return o;
        } catch (const CheckFailure& e) {
            return failed_precondition(e);
        }
    });
    std::string basis_a, basis_b;
    auto* fact = leaf(matched, "factorize", "Read a matched pair off C", c);
    fact->add_option("--a", basis_a, "Comma-separated basis indices of the first factor")->required();
    fact->add_option("--b", basis_b, "Comma-separated basis indices of the second factor")->required();
    bind(fact, "matched factorize", {"algebra"}, [&] {
        Factorization f = factorize(load_algebra(files[0]), parse_indices(basis_a), parse_indices(basis_b));
        Outcome o;
        o.pass = f.datum.has_value();
        o.failure = "factorize";
        if (f.datum) o.artifact = io::to_json(*f.datum);
        else o.details["diagnostic"] = f.diagnostic;
        return o;
    });

    // connes
    auto* connes = app.add_subcommand("connes", "Commutative Connes cocycles")->require_subcommand(1);
    bind(leaf(connes, "check", "Symmetry and cyclic identity", c), "connes check", {"assoc", "form"}, [&] {
        return from_report(check_connes_cocycle(load_assoc(files[0]), io::form_from_json(load(files[1]).value), opt()));
    });
    bind(leaf(connes, "derive", "Compatible anti-dendriform structure", c), "connes derive", {"assoc", "form"}, [&] {
        try {
            ADAlgebra a = derive_compatible_ad(load_assoc(files[0]), io::form_from_json(load(files[1]).value));
            Outcome o = from_report(check_anti_dendriform(a, opt()));
            o.artifact = io::to_json(a);
            return o;
        } catch (const CheckFailure& e) {
            return failed_precondition(e);
        }
    });
    bind(leaf(connes, "double", "Double construction of A and A*", c), "connes double", {"algebra", "dual"}, [&] {
        DoubleConstruction d = build_double_construction(load_algebra(files[0]), load_algebra(files[1]), opt());
        Outcome o = from_report(d.report);
        if (d.compatible) o.artifact = io::to_json(*d.compatible);
        if (d.product) o.details["product"] = assoc_to_json(*d.product);
        o.details["omega"] = io::to_json(d.omega);
        return o;
    });

    // bialgebra
    auto* bialg = app.add_subcommand("bialgebra", "Coalgebras and D-bialgebras")->require_subcommand(1);
    bind(leaf(bialg, "check", "Check Ca1-Ca2 and D1-D9", c), "bialgebra check", {"algebra", "coproducts"}, [&] {
        return from_report(check_d_bialgebra(load_algebra(files[0]), io::coproducts_from_json(load(files[1]).value), opt()));
    });
    bind(leaf(bialg, "coboundary", "Coboundary coproducts and CD3-CD10", c), "bialgebra coboundary",
         {"algebra", "rmatrix"}, [&] {
             ADAlgebra A = load_algebra(files[0]);
             io::RMatrixFile r = io::rmatrix_from_json(load(files[1]).value);
             CoproductPair cp = coboundary_coproducts(A, r.rsucc, r.rprec);
             Outcome o = from_report(check_coboundary_conditions(A, r.rsucc, r.rprec, opt()));
             o.details["dBialgebra"] = check_d_bialgebra(A, cp).ok();
             o.artifact = io::to_json(cp);
             o.details["coproducts"] = *o.artifact;
             return o;
         });

    // ybe
    auto* ybe = app.add_subcommand("ybe", "Anti-dendriform Yang-Baxter equation")->require_subcommand(1);
    bind(leaf(ybe, "residual", "YE6 tensor of r", c), "ybe residual", {"algebra", "rmatrix"}, [&] {
        ADAlgebra A = load_algebra(files[0]);
        io::RMatrixFile r = io::rmatrix_from_json(load(files[1]).value);
        if (!r.single) throw InputError("ybe residual expects a single 'r'");
        Tensor3 res = adybe_residual(A, r.rsucc);
        Outcome o;
        o.report = Report(CheckOptions{true});
        for (std::size_t i = 0; i < res.d1(); ++i)
            for (std::size_t j = 0; j < res.d2(); ++j)
                for (std::size_t k = 0; k < res.d3(); ++k)
                    o.report.equal("YE6", "ijk", {i, j, k}, Vec(std::vector<Scalar>{res(i, j, k)}), Vec(1));
        o.details["residual"] = io::to_json(res);
        o.details["skew"] = is_skew(r.rsucc);
        o.details["tr"] = io::to_json(t_r(r.rsucc));
        o.details["trIdentity"] = check_t_r_identity(A, r.rsucc).ok();
        o.artifact = o.details["residual"];
        return o;
    });
    std::string grid_text = "-1,0,1", field_text;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    auto* search = leaf(ybe, "search", "Exhaustive search of skew solutions", c);
    search->add_option("--grid", grid_text, "Comma-separated rational values (rational field)");
    search->add_option("--field", field_text, "rational or fp<p>; defaults to ADW_FIELD");
    search->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1u, 256u));
    bind(search, "ybe search", {"algebra"}, [&] {
        YbeSearchOptions so;
        so.field = parse_field_spec(field_text.empty() ? field_from_env() : field_text);
        if (so.field.rational()) so.grid = parse_grid(grid_text);
        so.workers = workers;
        YbeSearchResult res = ybe_search(load_algebra(files[0]), so);
        Outcome o;
        o.pass = !res.solutions.empty();
        o.failure = "no-solution";
        json sols = json::array();
        for (const auto& s : res.solutions) {
            json row = json::array();
            for (const auto& v : s) row.push_back(io::to_json(v));
            sols.push_back(row);
        }
        o.details = {{"field", res.field.name()}, {"points", res.points}, {"solutions", sols}, {"dimension", res.dim}};
        o.artifact = o.details;
        return o;
    });

    // oop
    auto* oop = app.add_subcommand("oop", "O-operators")->require_subcommand(1);
    std::string oop_mode = "anti-dendriform";
    struct OopFile {
        Matrix T;
        std::optional<ADRep> rep;
        Bilinear op;
        ActionFamily l, r;
    };
    auto load_oop = [&](const std::string& path) {
        auto f = load(path);
        io::expect_keys(f.value, {"T", "rep", "assoc"}, "O-operator");
        OopFile o;
        if (f.value.contains("rep") == f.value.contains("assoc"))
            throw InputError("O-operator: give exactly one of 'rep' or 'assoc'");
        std::size_t n = 0, m = 0;
        if (f.value.contains("rep")) {
            o.rep = io::rep_from_json(f.value.at("rep"), f.ctx);
            n = o.rep->algebra.dim();
            m = o.rep->mod_dim();
        } else {
            const json& a = f.value.at("assoc");
            io::expect_keys(a, {"dimension", "product", "modDim", "l", "r"}, "associative action data");
            if (!a.contains("dimension") || !a.contains("modDim"))
                throw InputError("associative action data needs 'dimension' and 'modDim'");
            n = a.at("dimension").get<std::size_t>();
            m = a.at("modDim").get<std::size_t>();
            o.op = a.contains("product") ? io::bilinear_from_entries(a.at("product"), n, n, n) : Bilinear::square(n);
            o.l = a.contains("l") ? io::family_from_entries(a.at("l"), n, m) : ActionFamily(n, m);
            o.r = a.contains("r") ? io::family_from_entries(a.at("r"), n, m) : ActionFamily(n, m);
        }
        if (!f.value.contains("T")) throw InputError("O-operator: missing 'T'");
        o.T = io::matrix_from_json(f.value.at("T"), n, m);
        return o;
    };
    auto* ocheck = leaf(oop, "check", "Check the O-operator identities", c);
    ocheck->add_option("--mode", oop_mode, "anti-dendriform or associative")
        ->check(CLI::IsMember({"anti-dendriform", "associative"}));
    bind(ocheck, "oop check", {"operator"}, [&] {
        OopFile o = load_oop(files[0]);
        if ((oop_mode == "anti-dendriform") != o.rep.has_value())
            throw InputError("mode " + oop_mode + " does not match the action data in the file");
        if (o.rep) return from_report(check_o_operator(o.T, *o.rep, opt()));
        return from_report(check_o_operator_assoc(o.T, o.op, o.l, o.r, opt()));
    });
    bind(leaf(oop, "lift", "Skew AD-YBE solution in A + V*", c), "oop lift", {"operator"}, [&] {
        OopFile o = load_oop(files[0]);
        if (!o.rep) throw InputError("oop lift needs anti-dendriform action data ('rep')");
        OLift lift = o_operator_to_ybe(o.T, *o.rep);
        Outcome out = from_report(lift.o_report);
        out.details = {{"ambient", io::to_json(lift.ambient)},
                       {"r", io::rmatrix_to_json(lift.r)},
                       {"residual", io::to_json(lift.residual)},
                       {"zeroResidual", lift.zero_residual()}};
        out.artifact = out.details;
        return out;
    });

    std::vector<std::string> argv_store{"adw"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "adw: " << e.what() << "\n";
        return 2;
    }
    if (!action) {
        err << "adw: no command given\n";
        return 2;
    }

    auto error = [&](const std::string& kind, const std::string& msg) {
        if (c.json) {
            out << io::dump(json{{"command", command}, {"verdict", "error"}, {"message", msg}, {"kind", kind},
                                 {"violations", json::array()}, {"artifacts", json::array()}});
        }
        err << "adw " << command << ": " << msg << "\n";
    };
    try {
        Outcome o = action();
        render(command, c, o, out);
        return o.passed() ? 0 : 1;
    } catch (const InputError& e) {
        error("input", e.what());
        return 2;
    } catch (const PreconditionError& e) {
        Outcome o;
        o.pass = false;
        o.failure = "precondition";
        o.details["message"] = e.what();
        render(command, c, o, out);
        return 1;
    } catch (const io::json::exception& e) {
        error("input", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        error("input", e.what());
        return 2;
    }
}

}  // namespace adw::cli
