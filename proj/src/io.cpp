#include "gelfand/io.hpp"

#include <fstream>

namespace gelfand {

namespace {

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::size_t size_member(const json& j, const char* key, const std::string& where) {
  const json& v = member(j, key, where);
  if (!v.is_number_integer() || v.get<long long>() < 0) throw ParseError(where + "." + key + ": expected a non-negative integer");
  return v.get<std::size_t>();
}

long file_field(const json& j, long fallback) { return j.is_object() && j.contains("field") ? field_from_json(j.at("field")) : fallback; }

std::vector<Lattice> lattices_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of lattice names");
  std::vector<Lattice> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw ParseError(at(where, i) + ": expected \"P\", \"Q\" or \"L\"");
    try {
      out.push_back(lattice_from_string(j[i].get<std::string>()));
    } catch (const Error& e) {
      throw ParseError(at(where, i) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace

long field_from_string(const std::string& s) {
  if (s == "Q") return 0;
  if (s.rfind("sqrt", 0) == 0) {
    std::string d = s.substr(4);
    if (!d.empty() && d.front() == '(' && d.back() == ')') d = d.substr(1, d.size() - 2);
    try {
      std::size_t pos = 0;
      long v = std::stol(d, &pos);
      if (pos == d.size() && v > 1 && squarefree_part(mpz_class(v)) == v) return v;
    } catch (const std::exception&) {
    }
  }
  throw ParseError("unknown field '" + s + "' (expected Q or sqrtD with D squarefree > 1)");
}

long field_from_json(const json& j) {
  if (j.is_string()) return field_from_string(j.get<std::string>());
  if (j.is_object() && j.contains("sqrt") && j.at("sqrt").is_number_integer())
    return field_from_string("sqrt" + std::to_string(j.at("sqrt").get<long>()));
  throw ParseError("field: expected \"Q\" or {\"sqrt\": D}");
}

json field_to_json(long radicand) {
  if (radicand == 0) return "Q";
  return json{{"sqrt", radicand}};
}

json to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const json& j, long radicand, const std::string& where) {
  Scalar s;
  try {
    if (j.is_number_integer())
      s = Scalar(j.get<long>());
    else if (j.is_string())
      s = Scalar::parse(j.get<std::string>());
    else
      throw ParseError("expected a scalar string");
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
  if (s.radicand() != 0 && s.radicand() != radicand)
    throw ParseError(where + ": " + s.str() + " is outside the declared field");
  return s;
}

json to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

namespace {

// Zero-row matrices may be written as [] regardless of the column count.
template <class T, class F>
Matrix<T> read_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& where, F entry) {
  if (!j.is_array()) throw ParseError(where + ": expected a matrix");
  if (j.size() != rows)
    throw ParseError(where + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  Matrix<T> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != cols)
      throw ParseError(at(where, i) + ": expected " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = entry(row[k], at(at(where, i), k));
  }
  return m;
}

}  // namespace

Mat matrix_from_json(const json& j, std::size_t rows, std::size_t cols, long radicand, const std::string& where) {
  return read_matrix<Scalar>(j, rows, cols, where,
                             [&](const json& e, const std::string& w) { return scalar_from_json(e, radicand, w); });
}

json to_json(const Complex& z) { return json::array({z.re().str(), z.im().str()}); }

Complex complex_from_json(const json& j, const std::string& where) {
  if (j.is_array()) {
    if (j.size() != 2) throw ParseError(where + ": expected [re, im]");
    Scalar re = scalar_from_json(j[0], 0, where + ".re");
    Scalar im = scalar_from_json(j[1], 0, where + ".im");
    return Complex(re, im);
  }
  return Complex(scalar_from_json(j, 0, where));
}

json to_json(const CMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

CMat cmatrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  return read_matrix<Complex>(j, rows, cols, where, complex_from_json);
}

json to_json(const RepQObj& m) {
  return json{{"field", field_to_json(m.radicand())},
              {"u", m.u},
              {"v", m.v},
              {"X1", to_json(m.X1)},
              {"X2", to_json(m.X2)},
              {"Y1", to_json(m.Y1)},
              {"Y2", to_json(m.Y2)}};
}

RepQObj repq_from_json(const json& j, long radicand) {
  const std::string w = "module";
  if (!j.is_object()) throw ParseError(w + ": expected an object");
  long d = file_field(j, radicand);
  std::size_t u = size_member(j, "u", w), v = size_member(j, "v", w);
  RepQObj m(u, v);
  auto read = [&](const char* key, std::size_t r, std::size_t c) {
    if (!j.contains(key)) return Mat(r, c);
    return matrix_from_json(j.at(key), r, c, d, key);
  };
  m.X1 = read("X1", v, u);
  m.X2 = read("X2", v, u);
  m.Y1 = read("Y1", u, v);
  m.Y2 = read("Y2", u, v);
  return m;
}

json to_json(const RepQMor& f) {
  return json{{"source", to_json(f.source)},
              {"target", to_json(f.target)},
              {"S", to_json(f.S)},
              {"T1", to_json(f.T1)},
              {"T2", to_json(f.T2)}};
}

RepQMor morphism_from_json(const json& j, long radicand) {
  const std::string w = "morphism";
  long d = file_field(j, radicand);
  RepQMor f;
  f.source = repq_from_json(member(j, "source", w), d);
  f.target = repq_from_json(member(j, "target", w), d);
  f.S = matrix_from_json(member(j, "S", w), f.target.v, f.source.v, d, "S");
  f.T1 = matrix_from_json(member(j, "T1", w), f.target.u, f.source.u, d, "T1");
  f.T2 = matrix_from_json(member(j, "T2", w), f.target.u, f.source.u, d, "T2");
  return f;
}

json to_json(const Series& s) {
  json a = json::array();
  for (const auto& c : s.coeffs()) a.push_back(to_json(c));
  return a;
}

Series series_from_json(const json& j, int n_trunc, long radicand, const std::string& where) {
  std::vector<Scalar> c(static_cast<std::size_t>(n_trunc));
  if (!j.is_array()) {
    if (n_trunc > 0) c[0] = scalar_from_json(j, radicand, where);
    return Series(std::move(c));
  }
  for (std::size_t i = 0; i < j.size(); ++i) {
    Scalar s = scalar_from_json(j[i], radicand, at(where, i));
    if (i < c.size()) c[i] = s;
  }
  return Series(std::move(c));
}

json to_json(const SeriesMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const LatticeMap& f) {
  json src = json::array(), tgt = json::array();
  for (auto l : f.source) src.push_back(to_string(l));
  for (auto l : f.target) tgt.push_back(to_string(l));
  return json{{"source", src}, {"target", tgt}, {"N", f.n_trunc}, {"entries", to_json(f.entries)}};
}

LatticeMap lattice_map_from_json(const json& j, int default_n, long radicand) {
  const std::string w = "lattice map";
  if (!j.is_object()) throw ParseError(w + ": expected an object");
  LatticeMap f;
  f.source = lattices_from_json(member(j, "source", w), "source");
  f.target = lattices_from_json(member(j, "target", w), "target");
  f.n_trunc = default_n;
  if (j.contains("N")) {
    if (!j.at("N").is_number_integer() || j.at("N").get<int>() < 1) throw ParseError("N: expected a positive integer");
    f.n_trunc = j.at("N").get<int>();
  }
  long d = file_field(j, radicand);
  std::size_t rows = rank_of(f.source), cols = rank_of(f.target);
  f.entries = read_matrix<Series>(member(j, "entries", w), rows, cols, "entries",
                                  [&](const json& e, const std::string& where) {
                                    return series_from_json(e, f.n_trunc, d, where);
                                  });
  return f;
}

json to_json(const NormalForm& nf) {
  json j{{"case", to_string(nf.kase)}, {"k", nf.k}, {"l", nf.l}};
  if (nf.kase == NfCase::IId) j["lambda"] = nf.lambda.str();
  return j;
}

NormalForm normal_form_from_json(const json& j) {
  const std::string w = "normal form";
  NormalForm nf;
  const json& c = member(j, "case", w);
  if (!c.is_string()) throw ParseError("case: expected a string");
  try {
    nf.kase = nf_case_from_string(c.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(std::string("case: ") + e.what());
  }
  const json& k = member(j, "k", w);
  if (!k.is_number_integer()) throw ParseError("k: expected an integer");
  nf.k = k.get<int>();
  if (j.contains("l")) {
    if (!j.at("l").is_number_integer()) throw ParseError("l: expected an integer");
    nf.l = j.at("l").get<int>();
  }
  if (j.contains("lambda")) {
    // lambda may live in any real quadratic field
    const json& l = j.at("lambda");
    if (l.is_number_integer())
      nf.lambda = Scalar(l.get<long>());
    else if (l.is_string())
      nf.lambda = scalar_from_json(l, Scalar::parse(l.get<std::string>()).radicand(), "lambda");
    else
      throw ParseError("lambda: expected a scalar string");
  }
  return nf;
}

json to_json(const FinDimAlgebra& a) {
  json sc = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k)
      for (const auto& t : a.product(i, k)) sc.push_back(json::array({i, k, t.index, t.coeff.str()}));
  json unit = json::array();
  for (const auto& c : a.unit()) unit.push_back(c.str());
  return json{{"dim", a.dim()}, {"labels", a.labels()}, {"unit", unit}, {"sc", sc}};
}

FinDimAlgebra algebra_from_json(const json& j) {
  const std::string w = "algebra";
  std::size_t n = size_member(j, "dim", w);
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = j.at("labels").get<std::vector<std::string>>();
    if (labels.size() != n) throw ParseError("labels: expected " + std::to_string(n) + " entries");
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
  }
  const json& uj = member(j, "unit", w);
  if (!uj.is_array() || uj.size() != n) throw ParseError("unit: expected " + std::to_string(n) + " entries");
  Vec unit(n);
  long d = file_field(j, 0);
  for (std::size_t i = 0; i < n; ++i) unit[i] = scalar_from_json(uj[i], d, at("unit", i));
  ProductTable table(n * n);
  const json& sc = member(j, "sc", w);
  if (!sc.is_array()) throw ParseError("sc: expected a list");
  for (std::size_t r = 0; r < sc.size(); ++r) {
    const json& e = sc[r];
    std::string where = at("sc", r);
    if (!e.is_array() || e.size() != 4 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
        !e[2].is_number_integer())
      throw ParseError(where + ": expected [i, j, k, scalar]");
    std::size_t a = e[0].get<std::size_t>(), b = e[1].get<std::size_t>(), c = e[2].get<std::size_t>();
    if (a >= n || b >= n || c >= n) throw ParseError(where + ": index out of range");
    Scalar s = scalar_from_json(e[3], d, where);
    if (!s.is_zero()) table[a * n + b].push_back(Term{c, s});
  }
  return FinDimAlgebra(std::move(labels), std::move(unit), std::move(table));
}

json to_json(const HCDiagram& d) {
  json j;
  if (d.n_min > d.n_max) {
    j["window"] = json::array();
    j["dims"] = json::object();
    j["x"] = json::object();
    j["y"] = json::object();
    return j;
  }
  j["window"] = json::array({d.n_min, d.n_max});
  json dims = json::object();
  for (int n = d.n_min; n <= d.n_max; n += 2) dims[std::to_string(n)] = d.dim(n);
  j["dims"] = dims;
  json x = json::object(), y = json::object();
  for (const auto& [n, m] : d.x) x[std::to_string(n)] = to_json(m);
  for (const auto& [n, m] : d.y) y[std::to_string(n)] = to_json(m);
  j["x"] = x;
  j["y"] = y;
  return j;
}

HCDiagram hc_from_json(const json& j) {
  const std::string w = "diagram";
  HCDiagram d;
  const json& win = member(j, "window", w);
  if (!win.is_array() || (win.size() != 2 && !win.empty())) throw ParseError("window: expected [n_min, n_max]");
  if (win.empty()) return d;
  if (!win[0].is_number_integer() || !win[1].is_number_integer()) throw ParseError("window: expected integers");
  d.n_min = win[0].get<int>();
  d.n_max = win[1].get<int>();
  if (d.n_min % 2 != 0 || d.n_max % 2 != 0 || d.n_min > d.n_max) throw ParseError("window: bounds must be even and ordered");
  const json& dims = member(j, "dims", w);
  if (!dims.is_object()) throw ParseError("dims: expected an object keyed by degree");
  for (int n = d.n_min; n <= d.n_max; n += 2) {
    std::string key = std::to_string(n);
    std::size_t v = 0;
    if (dims.contains(key)) {
      if (!dims.at(key).is_number_integer() || dims.at(key).get<long long>() < 0)
        throw ParseError("dims." + key + ": expected a non-negative integer");
      v = dims.at(key).get<std::size_t>();
    }
    d.dims.push_back(v);
  }
  for (const auto& [key, _] : dims.items()) {
    int n = 0;
    try {
      n = std::stoi(key);
    } catch (const std::exception&) {
      throw ParseError("dims: bad degree '" + key + "'");
    }
    if (!d.in_window(n)) throw ParseError("dims." + key + ": outside the window");
  }
  auto read_maps = [&](const char* name, int shift, std::map<int, CMat>& out) {
    if (!j.contains(name)) return;
    const json& maps = j.at(name);
    if (!maps.is_object()) throw ParseError(std::string(name) + ": expected an object keyed by degree");
    for (const auto& [key, val] : maps.items()) {
      int n = 0;
      try {
        n = std::stoi(key);
      } catch (const std::exception&) {
        throw ParseError(std::string(name) + ": bad degree '" + key + "'");
      }
      std::string where = std::string(name) + "_" + key;
      if (!d.in_window(n)) throw ParseError(where + ": outside the window");
      out[n] = cmatrix_from_json(val, d.dim(n + shift), d.dim(n), where);
    }
  };
  read_maps("x", 2, d.x);
  read_maps("y", -2, d.y);
  return d;
}

json to_json(const GelfandRep& r) {
  return json{{"dims", json::array({r.dm, r.ds, r.dp})},
              {"a-", to_json(r.am)},
              {"b-", to_json(r.bm)},
              {"a+", to_json(r.ap)},
              {"b+", to_json(r.bp)}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace gelfand
