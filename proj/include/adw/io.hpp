#pragma once

#include <filesystem>
#include <initializer_list>
#include <string>

#include <json.hpp>

#include "adw/bialgebra.hpp"
#include "adw/crossed.hpp"
#include "adw/matched.hpp"
#include "adw/unified.hpp"
#include "adw/ybe.hpp"

namespace adw::io {

using json = nlohmann::json;

/// Resolves nested file references relative to the file being read.
struct Context {
    std::filesystem::path base;
};

json load_file(const std::filesystem::path& path);
/// Writes canonical JSON (sorted keys, two-space indent, trailing newline).
void write_file(const std::filesystem::path& path, const json& j);
std::string dump(const json& j);

/// Throws InputError when `j` is not an object or has a key outside `allowed`.
void expect_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& what);

json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);
json to_json(const Vec& v);
Vec vec_from_json(const json& j, std::size_t n);
/// Dense list of rows.
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);

/// Sparse {"i","j","k","c"} entries.
json bilinear_entries(const Bilinear& b);
Bilinear bilinear_from_entries(const json& j, std::size_t left, std::size_t right, std::size_t out);
/// Sparse {"x","r","c","v"} entries.
json family_entries(const ActionFamily& f);
ActionFamily family_from_entries(const json& j, std::size_t alg_dim, std::size_t mod_dim);

json to_json(const ADAlgebra& a);
ADAlgebra algebra_from_json(const json& j, const Context& ctx = {});
json to_json(const ADRep& r);
ADRep rep_from_json(const json& j, const Context& ctx = {});
json to_json(const ExtendingDatum& d);
ExtendingDatum extending_from_json(const json& j, const Context& ctx = {});
json to_json(const CrossedDatum& d);
CrossedDatum crossed_from_json(const json& j, const Context& ctx = {});
json to_json(const GH2Tuple& t);
GH2Tuple gh2_from_json(const json& j);
json to_json(const MatchedPairDatum& d);
MatchedPairDatum matched_from_json(const json& j, const Context& ctx = {});
json to_json(const CoproductPair& cp);
CoproductPair coproducts_from_json(const json& j);
json to_json(const BilinearForm& w);
BilinearForm form_from_json(const json& j);
/// {"dims": [d1, d2], "entries": [{"i","j","c"}]}.
json to_json(const Tensor2& t);
Tensor2 tensor2_from_json(const json& j);
json to_json(const Tensor3& t);
Tensor3 tensor3_from_json(const json& j);

/// r-matrix file: {"dimension", "r"} or {"dimension", "rsucc", "rprec"}.
struct RMatrixFile {
    Tensor2 rsucc, rprec;
    bool single = true;
};
RMatrixFile rmatrix_from_json(const json& j);
json rmatrix_to_json(const Tensor2& r);

json to_json(const Report& r);

}  // namespace adw::io
