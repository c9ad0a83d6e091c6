#pragma once

#include <json.hpp>

#include <string>

#include "gelfand/algebra.hpp"
#include "gelfand/hc.hpp"
#include "gelfand/lattice.hpp"
#include "gelfand/repq.hpp"

namespace gelfand {

using json = nlohmann::json;

/// Radicand of a field spec: "Q" -> 0, {"sqrt": D} or "sqrtD" -> D.
long field_from_json(const json& j);
json field_to_json(long radicand);
long field_from_string(const std::string& s);  // "Q", "sqrt2", ...

json to_json(const Scalar& s);
/// Rejects values outside Q(sqrt(radicand)); `where` prefixes error messages.
Scalar scalar_from_json(const json& j, long radicand, const std::string& where);

json to_json(const Mat& m);
Mat matrix_from_json(const json& j, std::size_t rows, std::size_t cols, long radicand, const std::string& where);

json to_json(const Complex& z);
Complex complex_from_json(const json& j, const std::string& where);
json to_json(const CMat& m);
CMat cmatrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& where);

json to_json(const RepQObj& m);
/// Uses the file's "field" entry when present, otherwise `radicand`.
RepQObj repq_from_json(const json& j, long radicand = 0);
json to_json(const RepQMor& f);
RepQMor morphism_from_json(const json& j, long radicand = 0);

json to_json(const Series& s);
Series series_from_json(const json& j, int n_trunc, long radicand, const std::string& where);
json to_json(const SeriesMat& m);
json to_json(const LatticeMap& f);
/// "N" from the file when present, otherwise `default_n`.
LatticeMap lattice_map_from_json(const json& j, int default_n, long radicand = 0);

json to_json(const NormalForm& nf);
NormalForm normal_form_from_json(const json& j);

json to_json(const FinDimAlgebra& a);
FinDimAlgebra algebra_from_json(const json& j);

json to_json(const HCDiagram& d);
HCDiagram hc_from_json(const json& j);
json to_json(const GelfandRep& r);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace gelfand
