#include "adw/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "adw/errors.hpp"

namespace adw::io {

namespace {

std::size_t index_field(const json& e, const char* key, std::size_t bound, const std::string& what) {
    if (!e.contains(key) || !e.at(key).is_number_unsigned())
        throw InputError(what + ": entry field '" + key + "' must be a non-negative integer");
    const auto v = e.at(key).get<std::uint64_t>();
    if (v >= bound) throw InputError(what + ": index " + std::to_string(v) + " out of range for '" + key + "'");
    return static_cast<std::size_t>(v);
}

std::size_t size_field(const json& j, const char* key, const std::string& what) {
    if (!j.contains(key) || !j.at(key).is_number_unsigned())
        throw InputError(what + ": '" + key + "' must be a non-negative integer");
    return static_cast<std::size_t>(j.at(key).get<std::uint64_t>());
}

const json& require(const json& j, const char* key, const std::string& what) {
    if (!j.contains(key)) throw InputError(what + ": missing '" + key + "'");
    return j.at(key);
}

const json& array_field(const json& j, const std::string& what) {
    if (!j.is_array()) throw InputError(what + ": expected an array");
    return j;
}

/// Nested object given inline or as a path relative to the current file.
std::pair<json, Context> resolve(const json& j, const Context& ctx) {
    if (!j.is_string()) return {j, ctx};
    std::filesystem::path p = j.get<std::string>();
    if (p.is_relative()) p = ctx.base / p;
    return {load_file(p), Context{p.parent_path()}};
}

ActionFamily optional_family(const json& j, const char* key, std::size_t a, std::size_t m) {
    if (!j.contains(key)) return ActionFamily(a, m);
    return family_from_entries(j.at(key), a, m);
}

Bilinear optional_bilinear(const json& j, const char* key, std::size_t l, std::size_t r, std::size_t o) {
    if (!j.contains(key)) return Bilinear(l, r, o);
    return bilinear_from_entries(j.at(key), l, r, o);
}

}  // namespace

json load_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in '" + path.string() + "': " + e.what());
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    out << dump(j);
}

void expect_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& what) {
    if (!j.is_object()) throw InputError(what + ": expected an object");
    for (const auto& [key, _] : j.items())
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
            throw InputError(what + ": unknown key '" + key + "'");
}

json to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const json& j) {
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    if (j.is_number_integer()) return Scalar::parse(j.dump());
    throw InputError("coefficient must be a fraction string or an integer, got " + j.dump());
}

json to_json(const Vec& v) {
    json out = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(to_json(v[i]));
    return out;
}

Vec vec_from_json(const json& j, std::size_t n) {
    array_field(j, "vector");
    if (j.size() != n) throw InputError("vector must have " + std::to_string(n) + " entries");
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = scalar_from_json(j[i]);
    return v;
}

json to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
    return out;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
    array_field(j, "matrix");
    if (j.size() != rows)
        throw InputError("matrix must have " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        Vec r = vec_from_json(j[i], cols);
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = r[c];
    }
    return m;
}

json bilinear_entries(const Bilinear& b) {
    json out = json::array();
    for (std::size_t i = 0; i < b.left(); ++i)
        for (std::size_t j = 0; j < b.right(); ++j)
            for (std::size_t k = 0; k < b.out(); ++k)
                if (!b.at(i, j, k).is_zero()) out.push_back({{"i", i}, {"j", j}, {"k", k}, {"c", to_json(b.at(i, j, k))}});
    return out;
}

Bilinear bilinear_from_entries(const json& j, std::size_t left, std::size_t right, std::size_t out) {
    const std::string what = "product table";
    array_field(j, what);
    Bilinear b(left, right, out);
    for (const auto& e : j) {
        expect_keys(e, {"i", "j", "k", "c"}, what);
        Scalar& slot = b.at(index_field(e, "i", left, what), index_field(e, "j", right, what),
                            index_field(e, "k", out, what));
        slot += scalar_from_json(require(e, "c", what));
    }
    return b;
}

json family_entries(const ActionFamily& f) {
    json out = json::array();
    for (std::size_t x = 0; x < f.alg_dim(); ++x)
        for (std::size_t r = 0; r < f.at(x).rows(); ++r)
            for (std::size_t c = 0; c < f.at(x).cols(); ++c)
                if (!f.at(x)(r, c).is_zero()) out.push_back({{"x", x}, {"r", r}, {"c", c}, {"v", to_json(f.at(x)(r, c))}});
    return out;
}

ActionFamily family_from_entries(const json& j, std::size_t alg_dim, std::size_t mod_dim) {
    const std::string what = "action family";
    array_field(j, what);
    ActionFamily f(alg_dim, mod_dim);
    for (const auto& e : j) {
        expect_keys(e, {"x", "r", "c", "v"}, what);
        f.at(index_field(e, "x", alg_dim, what))(index_field(e, "r", mod_dim, what), index_field(e, "c", mod_dim, what)) +=
            scalar_from_json(require(e, "v", what));
    }
    return f;
}

json to_json(const ADAlgebra& a) {
    return {{"dimension", a.dim()}, {"basis", a.basis}, {"succ", bilinear_entries(a.succ)},
            {"prec", bilinear_entries(a.prec)}};
}

ADAlgebra algebra_from_json(const json& src, const Context& ctx) {
    auto [j, _] = resolve(src, ctx);
    const std::string what = "algebra";
    expect_keys(j, {"dimension", "basis", "succ", "prec"}, what);
    const std::size_t n = size_field(j, "dimension", what);
    ADAlgebra a(n);
    if (j.contains("basis")) {
        if (!j.at("basis").is_array() || j.at("basis").size() != n)
            throw InputError("algebra: 'basis' must list " + std::to_string(n) + " labels");
        for (std::size_t i = 0; i < n; ++i) {
            if (!j.at("basis")[i].is_string()) throw InputError("algebra: basis labels must be strings");
            a.basis[i] = j.at("basis")[i].get<std::string>();
        }
    }
    a.succ = optional_bilinear(j, "succ", n, n, n);
    a.prec = optional_bilinear(j, "prec", n, n, n);
    return a;
}

json to_json(const ADRep& r) {
    return {{"algebra", to_json(r.algebra)},       {"modDim", r.mod_dim()},
            {"lsucc", family_entries(r.lsucc)},    {"rsucc", family_entries(r.rsucc)},
            {"lprec", family_entries(r.lprec)},    {"rprec", family_entries(r.rprec)}};
}

ADRep rep_from_json(const json& src, const Context& ctx) {
    auto [j, c] = resolve(src, ctx);
    const std::string what = "representation";
    expect_keys(j, {"algebra", "modDim", "lsucc", "rsucc", "lprec", "rprec"}, what);
    ADAlgebra A = algebra_from_json(require(j, "algebra", what), c);
    const std::size_t n = A.dim(), m = size_field(j, "modDim", what);
    return {A, optional_family(j, "lsucc", n, m), optional_family(j, "rsucc", n, m),
            optional_family(j, "lprec", n, m), optional_family(j, "rprec", n, m)};
}

json to_json(const ExtendingDatum& d) {
    return {{"algebra", to_json(d.algebra)},
            {"vdim", d.vdim},
            {"lsucc", family_entries(d.lsucc)},
            {"rsucc", family_entries(d.rsucc)},
            {"lprec", family_entries(d.lprec)},
            {"rprec", family_entries(d.rprec)},
            {"rhoSucc", family_entries(d.rho_succ)},
            {"muSucc", family_entries(d.mu_succ)},
            {"rhoPrec", family_entries(d.rho_prec)},
            {"muPrec", family_entries(d.mu_prec)},
            {"varpi1", bilinear_entries(d.varpi1)},
            {"varpi2", bilinear_entries(d.varpi2)},
            {"succV", bilinear_entries(d.succ_v)},
            {"precV", bilinear_entries(d.prec_v)}};
}

ExtendingDatum extending_from_json(const json& src, const Context& ctx) {
    auto [j, c] = resolve(src, ctx);
    const std::string what = "extending datum";
    expect_keys(j,
                {"algebra", "vdim", "lsucc", "rsucc", "lprec", "rprec", "rhoSucc", "muSucc", "rhoPrec", "muPrec",
                 "varpi1", "varpi2", "succV", "precV"},
                what);
    ADAlgebra A = algebra_from_json(require(j, "algebra", what), c);
    const std::size_t n = A.dim(), m = size_field(j, "vdim", what);
    ExtendingDatum d = ExtendingDatum::zero(A, m);
    d.lsucc = optional_family(j, "lsucc", n, m);
    d.rsucc = optional_family(j, "rsucc", n, m);
    d.lprec = optional_family(j, "lprec", n, m);
    d.rprec = optional_family(j, "rprec", n, m);
    // V acts on A: families indexed by V with n x n matrices.
    d.rho_succ = optional_family(j, "rhoSucc", m, n);
    d.mu_succ = optional_family(j, "muSucc", m, n);
    d.rho_prec = optional_family(j, "rhoPrec", m, n);
    d.mu_prec = optional_family(j, "muPrec", m, n);
    d.varpi1 = optional_bilinear(j, "varpi1", m, m, n);
    d.varpi2 = optional_bilinear(j, "varpi2", m, m, n);
    d.succ_v = optional_bilinear(j, "succV", m, m, m);
    d.prec_v = optional_bilinear(j, "precV", m, m, m);
    validate(d);
    return d;
}

json to_json(const CrossedDatum& d) {
    return {{"algebra", to_json(d.algebra)},     {"vAlgebra", to_json(d.v_algebra)},
            {"lsucc", family_entries(d.lsucc)},  {"rsucc", family_entries(d.rsucc)},
            {"lprec", family_entries(d.lprec)},  {"rprec", family_entries(d.rprec)},
            {"omega1", bilinear_entries(d.omega1)}, {"omega2", bilinear_entries(d.omega2)}};
}

CrossedDatum crossed_from_json(const json& src, const Context& ctx) {
    auto [j, c] = resolve(src, ctx);
    const std::string what = "crossed datum";
    expect_keys(j, {"algebra", "vAlgebra", "lsucc", "rsucc", "lprec", "rprec", "omega1", "omega2"}, what);
    ADAlgebra A = algebra_from_json(require(j, "algebra", what), c);
    ADAlgebra V = algebra_from_json(require(j, "vAlgebra", what), c);
    const std::size_t n = A.dim(), m = V.dim();
    CrossedDatum d = CrossedDatum::zero(A, V);
    d.lsucc = optional_family(j, "lsucc", n, m);
    d.rsucc = optional_family(j, "rsucc", n, m);
    d.lprec = optional_family(j, "lprec", n, m);
    d.rprec = optional_family(j, "rprec", n, m);
    d.omega1 = optional_bilinear(j, "omega1", n, n, m);
    d.omega2 = optional_bilinear(j, "omega2", n, n, m);
    return d;
}

json to_json(const GH2Tuple& t) {
    return {{"n", t.n()},         {"A", to_json(t.a)},         {"B", to_json(t.b)},
            {"C", to_json(t.c)},  {"D", to_json(t.d)},         {"theta", to_json(t.theta)},
            {"epsilon", to_json(t.epsilon)}};
}

GH2Tuple gh2_from_json(const json& j) {
    const std::string what = "GH2 tuple";
    expect_keys(j, {"n", "A", "B", "C", "D", "theta", "epsilon"}, what);
    const std::size_t n = size_field(j, "n", what);
    GH2Tuple t;
    t.a = matrix_from_json(require(j, "A", what), n, n);
    t.b = matrix_from_json(require(j, "B", what), n, n);
    t.c = matrix_from_json(require(j, "C", what), n, n);
    t.d = matrix_from_json(require(j, "D", what), n, n);
    t.theta = vec_from_json(require(j, "theta", what), n);
    t.epsilon = vec_from_json(require(j, "epsilon", what), n);
    return t;
}

json to_json(const MatchedPairDatum& d) {
    return {{"alg1", to_json(d.alg1)},       {"alg2", to_json(d.alg2)},       {"l1s", family_entries(d.l1s)},
            {"r1s", family_entries(d.r1s)},  {"l1p", family_entries(d.l1p)},  {"r1p", family_entries(d.r1p)},
            {"l2s", family_entries(d.l2s)},  {"r2s", family_entries(d.r2s)},  {"l2p", family_entries(d.l2p)},
            {"r2p", family_entries(d.r2p)}};
}

MatchedPairDatum matched_from_json(const json& src, const Context& ctx) {
    auto [j, c] = resolve(src, ctx);
    const std::string what = "matched pair";
    expect_keys(j, {"alg1", "alg2", "l1s", "r1s", "l1p", "r1p", "l2s", "r2s", "l2p", "r2p"}, what);
    ADAlgebra A1 = algebra_from_json(require(j, "alg1", what), c);
    ADAlgebra A2 = algebra_from_json(require(j, "alg2", what), c);
    const std::size_t n = A1.dim(), m = A2.dim();
    MatchedPairDatum d = MatchedPairDatum::zero(A1, A2);
    d.l1s = optional_family(j, "l1s", n, m);
    d.r1s = optional_family(j, "r1s", n, m);
    d.l1p = optional_family(j, "l1p", n, m);
    d.r1p = optional_family(j, "r1p", n, m);
    d.l2s = optional_family(j, "l2s", m, n);
    d.r2s = optional_family(j, "r2s", m, n);
    d.l2p = optional_family(j, "l2p", m, n);
    d.r2p = optional_family(j, "r2p", m, n);
    return d;
}

json to_json(const CoproductPair& cp) {
    auto entries = [](const std::vector<Tensor2>& fam) {
        json out = json::array();
        for (std::size_t x = 0; x < fam.size(); ++x)
            for (std::size_t i = 0; i < fam[x].d1(); ++i)
                for (std::size_t j = 0; j < fam[x].d2(); ++j)
                    if (!fam[x](i, j).is_zero()) out.push_back({{"x", x}, {"i", i}, {"j", j}, {"c", to_json(fam[x](i, j))}});
        return out;
    };
    return {{"dimension", cp.dim()}, {"dsucc", entries(cp.dsucc)}, {"dprec", entries(cp.dprec)}};
}

CoproductPair coproducts_from_json(const json& j) {
    const std::string what = "coproduct pair";
    expect_keys(j, {"dimension", "dsucc", "dprec"}, what);
    const std::size_t n = size_field(j, "dimension", what);
    CoproductPair cp = CoproductPair::zero(n);
    for (auto [key, fam] : {std::pair{"dsucc", &cp.dsucc}, std::pair{"dprec", &cp.dprec}}) {
        if (!j.contains(key)) continue;
        for (const auto& e : array_field(j.at(key), what)) {
            expect_keys(e, {"x", "i", "j", "c"}, what);
            (*fam)[index_field(e, "x", n, what)](index_field(e, "i", n, what), index_field(e, "j", n, what)) +=
                scalar_from_json(require(e, "c", what));
        }
    }
    return cp;
}

json to_json(const BilinearForm& w) { return {{"dimension", w.dim()}, {"gram", to_json(w.gram)}}; }

BilinearForm form_from_json(const json& j) {
    const std::string what = "bilinear form";
    expect_keys(j, {"dimension", "gram"}, what);
    const std::size_t n = size_field(j, "dimension", what);
    return {matrix_from_json(require(j, "gram", what), n, n)};
}

json to_json(const Tensor2& t) {
    json entries = json::array();
    for (std::size_t i = 0; i < t.d1(); ++i)
        for (std::size_t j = 0; j < t.d2(); ++j)
            if (!t(i, j).is_zero()) entries.push_back({{"i", i}, {"j", j}, {"c", to_json(t(i, j))}});
    return {{"dims", {t.d1(), t.d2()}}, {"entries", entries}};
}

Tensor2 tensor2_from_json(const json& j) {
    const std::string what = "tensor";
    expect_keys(j, {"dims", "entries"}, what);
    const json& dims = require(j, "dims", what);
    if (!dims.is_array() || dims.size() != 2 || !dims[0].is_number_unsigned() || !dims[1].is_number_unsigned())
        throw InputError("tensor: 'dims' must hold two sizes");
    Tensor2 t(dims[0].get<std::size_t>(), dims[1].get<std::size_t>());
    for (const auto& e : array_field(require(j, "entries", what), what)) {
        expect_keys(e, {"i", "j", "c"}, what);
        t(index_field(e, "i", t.d1(), what), index_field(e, "j", t.d2(), what)) += scalar_from_json(require(e, "c", what));
    }
    return t;
}

json to_json(const Tensor3& t) {
    json entries = json::array();
    for (std::size_t i = 0; i < t.d1(); ++i)
        for (std::size_t j = 0; j < t.d2(); ++j)
            for (std::size_t k = 0; k < t.d3(); ++k)
                if (!t(i, j, k).is_zero())
                    entries.push_back({{"i", i}, {"j", j}, {"k", k}, {"c", to_json(t(i, j, k))}});
    return {{"dims", {t.d1(), t.d2(), t.d3()}}, {"entries", entries}};
}

Tensor3 tensor3_from_json(const json& j) {
    const std::string what = "tensor";
    expect_keys(j, {"dims", "entries"}, what);
    const json& dims = require(j, "dims", what);
    if (!dims.is_array() || dims.size() != 3) throw InputError("tensor: 'dims' must hold three sizes");
    for (const auto& d : dims)
        if (!d.is_number_unsigned()) throw InputError("tensor: 'dims' must hold three sizes");
    Tensor3 t(dims[0].get<std::size_t>(), dims[1].get<std::size_t>(), dims[2].get<std::size_t>());
    for (const auto& e : array_field(require(j, "entries", what), what)) {
        expect_keys(e, {"i", "j", "k", "c"}, what);
        t(index_field(e, "i", t.d1(), what), index_field(e, "j", t.d2(), what), index_field(e, "k", t.d3(), what)) +=
            scalar_from_json(require(e, "c", what));
    }
    return t;
}

RMatrixFile rmatrix_from_json(const json& j) {
    const std::string what = "r-matrix";
    expect_keys(j, {"dimension", "r", "rsucc", "rprec"}, what);
    const std::size_t n = size_field(j, "dimension", what);
    auto read = [&](const json& entries) {
        Tensor2 t(n, n);
        for (const auto& e : array_field(entries, what)) {
            expect_keys(e, {"i", "j", "c"}, what);
            t(index_field(e, "i", n, what), index_field(e, "j", n, what)) += scalar_from_json(require(e, "c", what));
        }
        return t;
    };
    RMatrixFile out;
    if (j.contains("r")) {
        if (j.contains("rsucc") || j.contains("rprec")) throw InputError("r-matrix: give 'r' or 'rsucc'/'rprec', not both");
        out.rsucc = out.rprec = read(j.at("r"));
        return out;
    }
    out.single = false;
    out.rsucc = read(require(j, "rsucc", what));
    out.rprec = read(require(j, "rprec", what));
    return out;
}

json rmatrix_to_json(const Tensor2& r) {
    json entries = to_json(r).at("entries");
    return {{"dimension", r.d1()}, {"r", entries}};
}

json to_json(const Report& r) {
    json violations = json::array();
    for (const auto& v : r.violations())
        violations.push_back({{"equation", v.equation},
                              {"roles", v.roles},
                              {"witness", v.witness},
                              {"term", v.term},
                              {"lhs", to_json(v.lhs)},
                              {"rhs", to_json(v.rhs)}});
    json counts = json::object();
    for (const auto& [eq, n] : r.counts()) counts[eq] = n;
    return {{"verdict", r.ok() ? "pass" : "fail"}, {"total", r.total()}, {"violations", violations},
            {"counts", counts}, {"notes", r.notes}};
}

}  // namespace adw::io
