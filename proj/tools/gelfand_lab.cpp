// gelfand_lab: command-line front end for the gelfand library.
#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "gelfand/io.hpp"
#include "gelfand/orders.hpp"
#include "gelfand/verify.hpp"

using namespace gelfand;

namespace {

enum Exit { kOk = 0, kInput = 1, kViolation = 2, kTruncation = 3 };

struct Globals {
  int n_trunc = 8;
  std::uint64_t seed = 0;
  std::string field = "Q";
  std::string out;
};

int default_n() {
  if (const char* env = std::getenv("GELFAND_LAB_N")) {
    try {
      int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring GELFAND_LAB_N='" << env << "'\n";
  }
  return 8;
}

std::string nf_text(const NormalForm& nf) {
  std::string s = nf.str();
  auto p = s.find("lambda=");
  if (p != std::string::npos) s.replace(p, 7, "λ=");
  return s;
}

std::string top_text(std::pair<std::size_t, std::size_t> t) {
  auto part = [](const char* name, std::size_t k) {
    if (k == 0) return std::string();
    return k == 1 ? std::string(name) : std::string(name) + "⊕" + std::to_string(k);
  };
  std::string s = part("S", t.first), tt = part("T", t.second);
  if (s.empty() && tt.empty()) return "0";
  if (s.empty()) return tt;
  if (tt.empty()) return s;
  return s + " ⊕ " + tt;
}

void emit(const Globals& g, const json& j, const std::string& name) {
  if (g.out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::filesystem::create_directories(g.out);
  std::string path = (std::filesystem::path(g.out) / name).string();
  write_json_file(path, j);
  std::cout << "wrote " << path << "\n";
}

RepQObj load_module(const Globals& g, const std::string& path) {
  return repq_from_json(read_json_file(path), field_from_string(g.field));
}

// Reads the map at truncation n (the file's own N wins on the first pass).
LatticeMap load_map(const Globals& g, const std::string& path, std::optional<int> n) {
  json j = read_json_file(path);
  if (n) j["N"] = *n;
  LatticeMap f = lattice_map_from_json(j, g.n_trunc, field_from_string(g.field));
  Verdict v = check_hom(f);
  if (!v) throw ParseError(path + ": not a lattice homomorphism: " + v.message);
  return f;
}

// det of a polynomial map has degree <= rank * maxdeg; read the map at
// kMaxTruncation so no coefficient is cut off.
int det_degree_bound(const LatticeMap& f) {
  int maxdeg = 0;
  for (std::size_t i = 0; i < f.entries.rows(); ++i)
    for (std::size_t k = 0; k < f.entries.cols(); ++k) {
      const auto& c = f.entries(i, k).coeffs();
      for (std::size_t d = 0; d < c.size(); ++d)
        if (!c[d].is_zero()) maxdeg = std::max(maxdeg, static_cast<int>(d));
    }
  return static_cast<int>(f.entries.rows()) * maxdeg;
}

int cmd_verify(const Globals& g, const std::string& suite) {
  VerificationReport r = run_suite(suite, g.n_trunc, g.seed);
  if (!g.out.empty()) write_report(r, g.out);
  std::cout << r.text();
  return r.exit_code();
}

int cmd_reduce(const Globals& g, const std::string& path) {
  LatticeMap f = load_map(g, path, std::nullopt);
  const int bound = det_degree_bound(load_map(g, path, kMaxTruncation));
  for (;;) {
    try {
      Reduction r = reduce_to_normal_form(f);
      Verdict v = verify_reduction(f, r);
      if (!v) {
        std::cerr << "certificate failed to re-verify: " << v.message << "\n";
        return kViolation;
      }
      std::cout << "N: " << f.n_trunc << "\n" << nf_text(r.nf) << "\n";
      if (!g.out.empty()) {
        std::filesystem::create_directories(g.out);
        auto p = [&](const char* n) { return (std::filesystem::path(g.out) / n).string(); };
        write_json_file(p("normal_form.json"), to_json(r.nf));
        write_json_file(p("eta.json"), to_json(r.eta));
        write_json_file(p("xi.json"), to_json(r.xi));
        std::cout << "certificates written to " << g.out << "\n";
      }
      return kOk;
    } catch (const NotRationalIso& e) {
      // a vanishing determinant is final once N exceeds its degree bound
      if (f.n_trunc > bound || 2 * f.n_trunc > kMaxTruncation) {
        std::cerr << "not a rational isomorphism: " << e.what() << "\n";
        return kViolation;
      }
    } catch (const RaiseTruncation& e) {
      if (2 * f.n_trunc > kMaxTruncation) {
        std::cerr << "truncation exhausted at N = " << f.n_trunc << ": " << e.what() << "\n";
        return kTruncation;
      }
    }
    f = load_map(g, path, 2 * f.n_trunc);
  }
}

int cmd_coker(const Globals& g, const std::string& path) {
  LatticeMap f = load_map(g, path, std::nullopt);
  const int bound = det_degree_bound(load_map(g, path, kMaxTruncation));
  for (;;) {
    try {
      RepQObj m = cokernel(f);
      std::cerr << "N: " << f.n_trunc << ", dimension vector (" << m.u << "," << m.v << ")\n";
      emit(g, to_json(m), "coker.json");
      return kOk;
    } catch (const NotRationalIso& e) {
      if (f.n_trunc > bound || 2 * f.n_trunc > kMaxTruncation) {
        std::cerr << "not a rational isomorphism: " << e.what() << "\n";
        return kViolation;
      }
    } catch (const RaiseTruncation& e) {
      if (2 * f.n_trunc > kMaxTruncation) {
        std::cerr << "truncation exhausted at N = " << f.n_trunc << ": " << e.what() << "\n";
        return kTruncation;
      }
    }
    f = load_map(g, path, 2 * f.n_trunc);
  }
}

int cmd_inspect(const Globals& g, const std::string& path) {
  RepQObj m = load_module(g, path);
  Verdict v = validate(m);
  std::cout << "dimension vector: (" << m.u << "," << m.v << ")\n";
  if (!v) {
    std::cout << "valid: no (" << v.message << ")\n";
    return kInput;
  }
  std::cout << "valid: yes\n";
  auto t = top(m);
  FinDimAlgebra e = end_algebra(m);
  DivisionVerdict s = is_schurian(m);
  DivisionVerdict ind = is_indecomposable(m);
  std::cout << "top: " << top_text(t) << "\n";
  std::cout << "absolutely cyclic: " << (t.first + t.second == 1 ? "yes" : "no") << "\n";
  std::cout << "End dimension: " << e.dim() << "\n";
  std::cout << "Schurian: " << to_string(s.division);
  if (s.division == Tri::yes) std::cout << ", End ≅ " << (s.real_type == "C" ? "ℂ" : s.real_type == "H" ? "ℍ" : "ℝ");
  std::cout << "\n";
  std::cout << "indecomposable: " << to_string(ind.division) << "\n";
  return kOk;
}

int cmd_dual(const Globals& g, const std::string& path) {
  RepQObj m = load_module(g, path);
  Verdict v = validate(m);
  if (!v) throw ParseError(path + ": " + v.message);
  emit(g, to_json(dual(m)), "dual.json");
  return kOk;
}

int cmd_iso(const Globals& g, const std::string& a, const std::string& b) {
  RepQObj m = load_module(g, a), n = load_module(g, b);
  for (const auto* x : {&m, &n})
    if (Verdict v = validate(*x); !v) throw ParseError(v.message);
  IsoResult r = is_isomorphic(m, n);
  if (!r.isomorphic) {
    std::cout << "not isomorphic: " << r.reason << "\n";
    return kOk;
  }
  std::cout << "isomorphic\n";
  emit(g, to_json(*r.iso), "iso.json");
  return kOk;
}

int cmd_hom(const Globals& g, const std::string& a, const std::string& b) {
  RepQObj m = load_module(g, a), n = load_module(g, b);
  for (const auto* x : {&m, &n})
    if (Verdict v = validate(*x); !v) throw ParseError(v.message);
  auto basis = hom_basis(m, n);
  std::cout << "dim Hom: " << basis.size() << "\n";
  json arr = json::array();
  for (const auto& f : basis) arr.push_back({{"S", to_json(f.S)}, {"T1", to_json(f.T1)}, {"T2", to_json(f.T2)}});
  emit(g, json{{"dim", basis.size()}, {"basis", arr}}, "hom.json");
  return kOk;
}

void print_structure(const std::string& name, const FinDimAlgebra& a) {
  SemisimpleSummary s = semisimple_summary(a);
  std::cout << name << ": dim " << a.dim() << ", radical " << s.radical_dim << ", center "
            << center(a).dim() << ", semisimple quotient " << s.dim << " with center " << s.center_dim << "\n";
}

int cmd_crossed(const Globals& g) {
  FinDimAlgebra o = truncated_order("O", g.n_trunc);
  GroupAction2 act{&o, involution_matrix(g.n_trunc)};
  if (Verdict v = verify_action(act); !v) {
    std::cerr << "involution check failed: " << v.message << "\n";
    return kViolation;
  }
  FinDimAlgebra b = crossed_product(o, act);
  InvariantSubalgebra inv = invariant_subalgebra(act);
  std::cout << "N: " << g.n_trunc << "\n";
  print_structure("O/t^N", o);
  print_structure("invariants", inv.algebra);
  print_structure("crossed product", b);
  if (!g.out.empty()) emit(g, to_json(b), "crossed.json");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gelfand_lab: exact computations for the Gelfand orders"};
  app.require_subcommand(1);
  Globals g;
  g.n_trunc = default_n();
  app.add_option("--n-trunc,-N", g.n_trunc, "truncation order N (default 8, or GELFAND_LAB_N)")
      ->check(CLI::Range(1, kMaxTruncation));
  app.add_option("--seed", g.seed, "random seed (default 0)");
  app.add_option("--field", g.field, "scalar field: Q or sqrtD (default Q)");
  app.add_option("--out", g.out, "output directory");

  std::string suite, file_a, file_b;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "schurian | abscyclic | algebra | hc | all")
      ->required()
      ->check(CLI::IsMember({"schurian", "abscyclic", "algebra", "hc", "all"}));
  auto* reduce = app.add_subcommand("reduce", "normal form of a lattice map");
  reduce->add_option("map", file_a, "lattice map file")->required();
  auto* inspect = app.add_subcommand("inspect", "report on a module");
  inspect->add_option("module", file_a, "module file")->required();
  auto* dualc = app.add_subcommand("dual", "dual of a module");
  dualc->add_option("module", file_a, "module file")->required();
  auto* iso = app.add_subcommand("iso", "isomorphism test between indecomposables");
  iso->add_option("first", file_a)->required();
  iso->add_option("second", file_b)->required();
  auto* hom = app.add_subcommand("hom", "basis of Hom(M, N)");
  hom->add_option("first", file_a)->required();
  hom->add_option("second", file_b)->required();
  auto* coker = app.add_subcommand("coker", "cokernel of a lattice map");
  coker->add_option("map", file_a, "lattice map file")->required();
  auto* crossed = app.add_subcommand("crossed", "O/t^N, its invariants and O/t^N[G]");

  // options are accepted after the subcommand too
  for (auto* sub : {verify, reduce, inspect, dualc, iso, hom, coker, crossed}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInput;
  }

  try {
    field_from_string(g.field);
    if (*verify) return cmd_verify(g, suite);
    if (*reduce) return cmd_reduce(g, file_a);
    if (*inspect) return cmd_inspect(g, file_a);
    if (*dualc) return cmd_dual(g, file_a);
    if (*iso) return cmd_iso(g, file_a, file_b);
    if (*hom) return cmd_hom(g, file_a, file_b);
    if (*coker) return cmd_coker(g, file_a);
    if (*crossed) return cmd_crossed(g);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const ShapeError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  }
  return kInput;
}
